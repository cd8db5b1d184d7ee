#pragma once

#include <stdexcept>
#include <string>

namespace tessella {

class GeometryError : public std::runtime_error {
 public:
  enum class Kind { NonConvex, SelfIntersecting, DegenerateCollinear };
  GeometryError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class ClassifyError : public std::runtime_error {
 public:
  enum class Kind { ClassMismatch, TypeConditionNotMet, UnsupportedType };
  ClassifyError(Kind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

class SearchBudgetExceeded : public std::runtime_error {
 public:
  explicit SearchBudgetExceeded(const std::string& msg)
      : std::runtime_error(msg) {}
};

class MatchingViolation : public std::runtime_error {
 public:
  explicit MatchingViolation(const std::string& msg)
      : std::runtime_error(msg) {}
};

class NotARhombusPatch : public std::runtime_error {
 public:
  explicit NotARhombusPatch(const std::string& msg)
      : std::runtime_error(msg) {}
};

class DegenerateJ : public std::runtime_error {
 public:
  explicit DegenerateJ(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace tessella
