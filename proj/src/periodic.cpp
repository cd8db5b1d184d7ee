#include "tessella/periodic.hpp"

namespace tessella {

namespace {

// Gluing programs found by corona search over sampled family members and
// re-verified against independent samples.  Every quantity is combinatorial
// (slots of the family labeling), so a program transfers to any member that
// satisfies the listed conditions.  Pentagon types 1 and 2 carry an extra
// edge equality: the full families tile, but only these subfamilies tile
// edge to edge.
struct Entry {
  TileTypeId id;
  LayoutProgram prog;
};

const std::vector<Entry>& table() {
  static const std::vector<Entry> t = {
      {TileTypeId::pentagon(1),
       {{{0, 4, 4, false}},
        {{0, 1}, {1, 2}},
        {{0, 0}, {0, 2}},
        {{EdgeRel{{1, 0, 0, -1, 0, 0}}, "needs a = d"}}}},
      {TileTypeId::pentagon(2),
       {{{0, 2, 4, true}, {0, 0, 0, false}, {0, 1, 3, true}},
        {{0, 1}, {2, 1}},
        {{2, 3}, {0, 3}},
        {{EdgeRel{{0, 1, 0, -1, 0, 0}}, "needs b = d"}}}},
      {TileTypeId::pentagon(4),
       {{{0, 4, 3, false}, {0, 1, 2, false}, {0, 0, 0, false}},
        {{0, 1}, {1, 1}},
        {{0, 2}, {2, 4}},
        {}}},
      {TileTypeId::pentagon(5),
       {{{0, 1, 0, false},
         {1, 1, 0, false},
         {2, 1, 0, false},
         {3, 1, 0, false},
         {4, 1, 0, false}},
        {{0, 3}, {2, 3}},
        {{0, 1}, {3, 2}},
        {}}},
      {TileTypeId::pentagon(6),
       {{{0, 4, 3, false},
         {0, 0, 0, false},
         {0, 2, 1, true},
         {0, 3, 0, false},
         {1, 1, 2, true},
         {2, 2, 1, true},
         {3, 2, 1, true}},
        {{0, 0}, {4, 2}},
        {{3, 2}, {5, 4}},
        {}}},
      {TileTypeId::pentagon(7),
       {{{0, 2, 3, false},
         {0, 0, 0, true},
         {0, 3, 3, false},
         {0, 4, 2, false},
         {1, 4, 1, true},
         {1, 0, 0, true},
         {2, 2, 4, true}},
        {{0, 0}, {3, 1}},
        {{2, 2}, {6, 2}},
        {}}},
      {TileTypeId::pentagon(8),
       {{{0, 4, 3, true},
         {0, 1, 2, false},
         {0, 2, 2, false},
         {0, 3, 1, false},
         {0, 0, 0, true},
         {1, 2, 1, true},
         {1, 1, 3, true}},
        {{0, 0}, {6, 3}},
        {{1, 0}, {3, 0}},
        {}}},
      {TileTypeId::pentagon(9),
       {{{0, 4, 3, true},
         {0, 1, 3, true},
         {0, 0, 0, true},
         {0, 2, 1, false},
         {1, 0, 0, false},
         {1, 1, 2, true},
         {2, 4, 3, false}},
        {{0, 2}, {2, 0}},
        {{4, 2}, {5, 1}},
        {}}},
      {TileTypeId::hexagon(1),
       {{{0, 1, 1, false}},
        {{0, 0}, {0, 2}},
        {{0, 4}, {1, 5}},
        {}}},
      {TileTypeId::hexagon(2),
       {{{0, 4, 2, true}, {0, 1, 1, false}, {0, 0, 3, true}},
        {{0, 4}, {2, 5}},
        {{0, 2}, {3, 5}},
        {}}},
      {TileTypeId::hexagon(3),
       {{{0, 0, 1, false}, {1, 0, 1, false}},
        {{1, 2}, {0, 2}},
        {{2, 2}, {1, 2}},
        {}}},
  };
  return t;
}

}  // namespace

const LayoutProgram* find_layout(const TileTypeId& t) {
  for (const auto& e : table())
    if (e.id == t) return &e.prog;
  return nullptr;
}

}  // namespace tessella
