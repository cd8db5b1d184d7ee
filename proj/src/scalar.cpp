#include "tessella/scalar.hpp"

#include <array>
#include <cctype>

namespace tessella {

namespace {

std::string rat_str(const BigRat& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += "/";
    s += denominator(r).str();
  }
  return s;
}

// appends "+coeff*unit" (sign folded into the coefficient) to out
void append_term(std::string& out, const BigRat& coeff, const char* unit) {
  if (coeff == 0) return;
  BigRat c = coeff;
  if (out.empty()) {
    if (c < 0) {
      out += "-";
      c = -c;
    }
  } else {
    if (c < 0) {
      out += "-";
      c = -c;
    } else {
      out += "+";
    }
  }
  bool unit_only = (*unit != '\0') && c == 1;
  if (!unit_only) out += rat_str(c);
  out += unit;
}

bool parse_rational(std::string_view text, BigRat& out) {
  if (text.empty()) return false;
  size_t slash = text.find('/');
  auto parse_int = [](std::string_view t, BigInt& v) {
    if (t.empty()) return false;
    size_t i = 0;
    if (t[0] == '+' || t[0] == '-') i = 1;
    if (i == t.size()) return false;
    for (size_t j = i; j < t.size(); ++j)
      if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
    v = BigInt(std::string(t));
    return true;
  };
  BigInt num, den = 1;
  if (slash == std::string_view::npos) {
    if (!parse_int(text, num)) return false;
  } else {
    if (!parse_int(text.substr(0, slash), num)) return false;
    if (!parse_int(text.substr(slash + 1), den)) return false;
    if (den == 0) return false;
  }
  out = BigRat(num, den);
  return true;
}

}  // namespace

std::string Exact::str() const {
  std::string out;
  append_term(out, a_, "");
  append_term(out, b_, "√5");
  append_term(out, c_, "s36");
  append_term(out, d_, "s36√5");
  if (out.empty()) out = "0";
  return out;
}

std::optional<Exact> Exact::parse(std::string_view text) {
  // whitespace is allowed around +/- and at the ends, not inside a term
  std::string clean;
  clean.reserve(text.size());
  for (size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (ch != ' ' && ch != '\t') {
      clean += ch;
      continue;
    }
    size_t j = i;
    while (j < text.size() && (text[j] == ' ' || text[j] == '\t')) ++j;
    bool edge = clean.empty() || j == text.size();
    bool by_op = (!clean.empty() && (clean.back() == '+' || clean.back() == '-')) ||
                 (j < text.size() && (text[j] == '+' || text[j] == '-'));
    if (!edge && !by_op) return std::nullopt;
    i = j - 1;
  }
  if (clean.empty()) return std::nullopt;

  BigRat coeffs[4] = {BigRat(0), BigRat(0), BigRat(0), BigRat(0)};
  size_t pos = 0;
  bool first = true;
  while (pos < clean.size()) {
    int sign = 1;
    if (clean[pos] == '+' || clean[pos] == '-') {
      if (!first && pos == 0) return std::nullopt;
      sign = clean[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      return std::nullopt;  // terms must be joined by + or -
    }
    size_t end = pos;
    while (end < clean.size() && clean[end] != '+' && clean[end] != '-') ++end;
    std::string_view term(clean.data() + pos, end - pos);
    if (term.empty()) return std::nullopt;

    int slot = 0;
    auto ends_with = [&](std::string_view suffix) {
      return term.size() >= suffix.size() &&
             term.substr(term.size() - suffix.size()) == suffix;
    };
    auto strip = [&](std::string_view suffix) {
      term = term.substr(0, term.size() - suffix.size());
    };
    if (ends_with("s36√5")) {
      slot = 3;
      strip("s36√5");
    } else if (ends_with("s36sqrt5")) {
      slot = 3;
      strip("s36sqrt5");
    } else if (ends_with("√5")) {
      slot = 1;
      strip("√5");
    } else if (ends_with("sqrt5")) {
      slot = 1;
      strip("sqrt5");
    } else if (ends_with("s36")) {
      slot = 2;
      strip("s36");
    }
    BigRat value;
    if (term.empty()) {
      if (slot == 0) return std::nullopt;
      value = 1;
    } else if (!parse_rational(term, value)) {
      return std::nullopt;
    }
    coeffs[slot] += sign * value;
    pos = end;
    first = false;
  }
  return Exact(coeffs[0], coeffs[1], coeffs[2], coeffs[3]);
}

// cos/sin of 18k degrees.  Base table covers the first quadrant; the rest
// follows from cos(90+x) = -sin(x), sin(90+x) = cos(x) and the half-turn.
Exact exact_cos_deg18(int k) {
  k %= 20;
  if (k < 0) k += 20;
  if (k >= 10) return -exact_cos_deg18(k - 10);
  if (k >= 5) return -exact_sin_deg18(k - 5);
  static const std::array<Exact, 5> table = {
      Exact(1),
      Exact(0, 0, BigRat(1, 2), BigRat(1, 2)),    // cos 18 = sin36*(1+sqrt5)/2
      Exact(BigRat(1, 4), BigRat(1, 4), 0, 0),    // cos 36 = (1+sqrt5)/4
      Exact::s36(),                               // cos 54 = sin 36
      Exact(BigRat(-1, 4), BigRat(1, 4), 0, 0),   // cos 72 = (sqrt5-1)/4
  };
  return table[k];
}

Exact exact_sin_deg18(int k) {
  k %= 20;
  if (k < 0) k += 20;
  if (k >= 10) return -exact_sin_deg18(k - 10);
  if (k >= 5) return exact_cos_deg18(k - 5);
  static const std::array<Exact, 5> table = {
      Exact(0),
      Exact(BigRat(-1, 4), BigRat(1, 4), 0, 0),   // sin 18 = (sqrt5-1)/4
      Exact::s36(),
      Exact(BigRat(1, 4), BigRat(1, 4), 0, 0),    // sin 54 = cos 36
      Exact(0, 0, BigRat(1, 2), BigRat(1, 2)),    // sin 72 = sin36*(1+sqrt5)/2
  };
  return table[k];
}

}  // namespace tessella
