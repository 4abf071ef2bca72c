#pragma once

// Independent ground truth: exhaustive generation of convex hexagonal
// polyominoes on an explicit lattice, with growth-phase annotation, symmetry
// stabilizers and census tables.
//
// Cells are addressed by cube coordinates (a, b, c), a + b + c = 0, stored as
// (a, b).  Columns are the lines a = const (cells of a column differ in b);
// the neighbours of (a, b) are (a, b+-1), (a+1, b), (a+1, b-1), (a-1, b) and
// (a-1, b+1).  The three convexity directions are the loci of constant a,
// constant b and constant c through cell centers, so all three convexity
// checks are identical contiguity checks.
//
// A convex polyomino is generated as a sequence of column segments [lo, hi]:
// vertical convexity holds by construction and the b-/c-line convexity is
// equivalent to the growth-phase transition rules on the two profiles, which
// the generator enforces exactly (state 0 growth, 1 oscillation, 2 decrease;
// transitions 1->0, 2->1, 2->0 are impossible).

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hexpoly/group.hpp"

namespace hexpoly {

struct Cell {
  int a = 0;
  int b = 0;
  auto operator<=>(const Cell&) const = default;
};
using CellList = std::vector<Cell>;  // canonical: sorted, min a = min b = 0

inline constexpr std::array<Cell, 6> cell_neighbours = {
    Cell{0, 1}, Cell{0, -1}, Cell{1, 0}, Cell{1, -1}, Cell{-1, 0}, Cell{-1, 1}};

inline void canonicalize(CellList& cells) {
  int min_a = cells[0].a, min_b = cells[0].b;
  for (const Cell& c : cells) {
    min_a = std::min(min_a, c.a);
    min_b = std::min(min_b, c.b);
  }
  for (Cell& c : cells) {
    c.a -= min_a;
    c.b -= min_b;
  }
  std::sort(cells.begin(), cells.end());
}

inline CellList transformed(const CellList& cells, const GroupElement& g) {
  CellList out;
  out.reserve(cells.size());
  for (const Cell& c : cells) {
    auto [a, b] = g.apply(c.a, c.b);
    out.push_back({a, b});
  }
  canonicalize(out);
  return out;
}

inline int adjacency_pairs(const CellList& cells) {
  std::set<Cell> set(cells.begin(), cells.end());
  int adj = 0;
  for (const Cell& c : cells)
    for (const Cell& d : cell_neighbours)
      if (set.count({c.a + d.a, c.b + d.b})) ++adj;
  return adj / 2;
}

// half-perimeter = 3*area - (number of adjacent cell pairs)
inline int half_perimeter(const CellList& cells) {
  return 3 * static_cast<int>(cells.size()) - adjacency_pairs(cells);
}

inline bool is_edge_connected(const CellList& cells) {
  if (cells.empty()) return false;
  std::set<Cell> set(cells.begin(), cells.end());
  std::vector<Cell> stack = {cells[0]};
  std::set<Cell> seen = {cells[0]};
  while (!stack.empty()) {
    Cell c = stack.back();
    stack.pop_back();
    for (const Cell& d : cell_neighbours) {
      Cell n{c.a + d.a, c.b + d.b};
      if (set.count(n) && seen.insert(n).second) stack.push_back(n);
    }
  }
  return seen.size() == cells.size();
}

// Connected intersection with every line a = const, b = const, c = const.
inline bool is_convex(const CellList& cells) {
  if (!is_edge_connected(cells)) return false;
  auto contiguous = [](std::map<int, std::vector<int>>& lines) {
    for (auto& [key, xs] : lines) {
      std::sort(xs.begin(), xs.end());
      for (size_t i = 1; i < xs.size(); ++i)
        if (xs[i] != xs[i - 1] + 1) return false;
    }
    return true;
  };
  std::map<int, std::vector<int>> by_a, by_b, by_c;
  for (const Cell& c : cells) {
    by_a[c.a].push_back(c.b);
    by_b[c.b].push_back(c.a);
    by_c[-c.a - c.b].push_back(c.a);
  }
  return contiguous(by_a) && contiguous(by_b) && contiguous(by_c);
}

// ---------------------------------------------------------------------------
// Column-profile generator

enum Transition : int { tr_sg = 0, tr_wg = 1, tr_wd = 2, tr_sd = 3 };

// Upper profile: new top hi2 versus previous top hi.
inline Transition upper_transition(int hi, int hi2) {
  if (hi2 > hi) return tr_sg;
  if (hi2 == hi) return tr_wg;
  if (hi2 == hi - 1) return tr_wd;
  return tr_sd;
}
// Lower profile: a growth extends downward (lo decreases).
inline Transition lower_transition(int lo, int lo2) {
  if (lo2 < lo - 1) return tr_sg;
  if (lo2 == lo - 1) return tr_wg;
  if (lo2 == lo) return tr_wd;
  return tr_sd;
}

// state 0 -> {sg,wg: 0; wd: 1; sd: 2}, 1 -> {wg,wd: 1; sd: 2}, 2 -> {wd,sd: 2}
inline int next_state(int state, Transition tr) {
  switch (state) {
    case 0:
      return tr == tr_sg || tr == tr_wg ? 0 : (tr == tr_wd ? 1 : 2);
    case 1:
      return tr == tr_wg || tr == tr_wd ? 1 : (tr == tr_sd ? 2 : -1);
    default:
      return tr == tr_wd || tr == tr_sd ? 2 : -1;
  }
}

struct ColumnShape {
  std::vector<std::pair<int, int>> cols;  // (lo, hi) per column
  int area = 0;
  int half_perim = 0;
  int upper_state = 0;  // state of the last column
  int lower_state = 0;

  CellList cells() const {
    CellList out;
    for (int a = 0; a < static_cast<int>(cols.size()); ++a)
      for (int b = cols[a].first; b <= cols[a].second; ++b)
        out.push_back({a, b});
    canonicalize(out);
    return out;
  }
};

inline int interval_overlap(int lo1, int hi1, int lo2, int hi2) {
  return std::max(0, std::min(hi1, hi2) - std::max(lo1, lo2) + 1);
}

// Adjacent cell pairs between consecutive columns [lo,hi] and [lo2,hi2].
inline int column_contact(int lo, int hi, int lo2, int hi2) {
  return interval_overlap(lo, hi, lo2, hi2) +
         interval_overlap(lo, hi, lo2 + 1, hi2 + 1);
}

namespace detail {

template <typename Visit>
void extend_convex(ColumnShape& shape, int max_area, int max_hp,
                   Visit&& visit) {
  visit(const_cast<const ColumnShape&>(shape));
  auto [lo, hi] = shape.cols.back();
  int area_left = max_area - shape.area;
  if (area_left <= 0) return;
  // Touching forces hi2 >= lo-1 and lo2 <= hi; the area budget bounds the rest.
  for (int hi2 = lo - 1; hi2 <= hi + area_left - 1; ++hi2) {
    Transition up = upper_transition(hi, hi2);
    int us = next_state(shape.upper_state, up);
    if (us < 0) continue;
    for (int lo2 = hi2 - area_left + 1; lo2 <= std::min(hi2, hi); ++lo2) {
      Transition dn = lower_transition(lo, lo2);
      int ls = next_state(shape.lower_state, dn);
      if (ls < 0) continue;
      int h2 = hi2 - lo2 + 1;
      int contact = column_contact(lo, hi, lo2, hi2);
      if (contact <= 0) continue;
      int hp2 = shape.half_perim + 2 * h2 + 1 - contact;
      if (shape.area + h2 > max_area || hp2 > max_hp) continue;
      int prev_us = shape.upper_state, prev_ls = shape.lower_state;
      shape.cols.emplace_back(lo2, hi2);
      shape.area += h2;
      shape.half_perim = hp2;
      shape.upper_state = us;
      shape.lower_state = ls;
      extend_convex(shape, max_area, max_hp, visit);
      shape.cols.pop_back();
      shape.area -= h2;
      shape.half_perim = hp2 - (2 * h2 + 1 - contact);
      shape.upper_state = prev_us;
      shape.lower_state = prev_ls;
    }
  }
}

}  // namespace detail

// Visit every translation class of convex polyomino with area <= max_area and
// half-perimeter <= max_hp exactly once, restricted to first-column height
// h0 when h0 > 0 (the parallel partitioning hook).
template <typename Visit>
void enumerate_convex(int max_area, int max_hp, Visit&& visit, int h0 = 0) {
  if (max_area < 1) throw std::invalid_argument("enumerate_convex: max_area");
  int lo_h = h0 > 0 ? h0 : 1;
  int hi_h = h0 > 0 ? h0 : max_area;
  for (int h = lo_h; h <= hi_h; ++h) {
    if (2 * h + 1 > max_hp || h > max_area) continue;
    ColumnShape shape;
    shape.cols = {{0, h - 1}};
    shape.area = h;
    shape.half_perim = 2 * h + 1;
    detail::extend_convex(shape, max_area, max_hp, visit);
  }
}

// Column sequences whose transitions all stay inside one phase family:
// allowed[tr] per profile.  Used for the standalone block families (stacks,
// staircases, oscillation blocks).
template <typename Visit>
void enumerate_blocks(const std::array<bool, 4>& upper_allowed,
                      const std::array<bool, 4>& lower_allowed, int max_area,
                      int max_hp, Visit&& visit) {
  std::function<void(ColumnShape&)> rec = [&](ColumnShape& shape) {
    visit(const_cast<const ColumnShape&>(shape));
    auto [lo, hi] = shape.cols.back();
    int area_left = max_area - shape.area;
    if (area_left <= 0) return;
    for (int hi2 = lo - 1; hi2 <= hi + area_left - 1; ++hi2) {
      if (!upper_allowed[upper_transition(hi, hi2)]) continue;
      for (int lo2 = hi2 - area_left + 1; lo2 <= std::min(hi2, hi); ++lo2) {
        if (!lower_allowed[lower_transition(lo, lo2)]) continue;
        int h2 = hi2 - lo2 + 1;
        if (h2 < 1 || shape.area + h2 > max_area) continue;
        int contact = column_contact(lo, hi, lo2, hi2);
        if (contact <= 0) continue;
        int hp2 = shape.half_perim + 2 * h2 + 1 - contact;
        if (hp2 > max_hp) continue;
        shape.cols.emplace_back(lo2, hi2);
        shape.area += h2;
        shape.half_perim = hp2;
        rec(shape);
        shape.cols.pop_back();
        shape.area -= h2;
        shape.half_perim = hp2 - (2 * h2 + 1 - contact);
      }
    }
  };
  for (int h = 1; h <= max_area && 2 * h + 1 <= max_hp; ++h) {
    ColumnShape shape;
    shape.cols = {{0, h - 1}};
    shape.area = h;
    shape.half_perim = 2 * h + 1;
    rec(shape);
  }
}

// Phase families per profile state: 0 = growth, 1 = oscillation, 2 = decrease.
inline std::array<bool, 4> profile_family(int state) {
  switch (state) {
    case 0:
      return {true, true, false, false};  // sg, wg
    case 1:
      return {false, true, true, false};  // wg, wd
    default:
      return {false, false, true, true};  // wd, sd
  }
}

// ---------------------------------------------------------------------------
// Stabilizers

// Elements g whose action fixes the polyomino up to translation, as a mask.
inline SubgroupMask stabilizer_mask(const CellList& canonical_cells) {
  const auto& elems = dihedral6();
  SubgroupMask mask = 0;
  for (int g = 0; g < 12; ++g)
    if (transformed(canonical_cells, elems[g]) == canonical_cells)
      mask |= SubgroupMask(1) << g;
  return mask;
}

// True when this polyomino is the lexicographically smallest among its twelve
// images; each free polyomino has exactly one such representative.
inline bool is_free_representative(const CellList& canonical_cells) {
  const auto& elems = dihedral6();
  for (int g = 1; g < 12; ++g)
    if (transformed(canonical_cells, elems[g]) < canonical_cells) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Census

using CountMap = std::map<int, long long>;  // statistic value -> count

struct Census {
  int max_area = 0;
  int max_hp = 0;

  CountMap total;                          // fixed polyominoes ("id")
  std::array<CountMap, 12> fix;            // per group element
  std::vector<CountMap> fix_subgroup;      // F_{>=H}, indexed as the lattice
  std::vector<CountMap> stab_exact;        // F_{=H}, indexed as the lattice
  CountMap orbits;                         // free polyominoes, explicit reps
  std::array<std::array<CountMap, 3>, 3> by_state;  // last-column state (i,j)

  Census& merge(const Census& o) {
    auto acc = [](CountMap& a, const CountMap& b) {
      for (auto& [k, n] : b) a[k] += n;
    };
    acc(total, o.total);
    for (int g = 0; g < 12; ++g) acc(fix[g], o.fix[g]);
    for (size_t i = 0; i < fix_subgroup.size(); ++i)
      acc(fix_subgroup[i], o.fix_subgroup[i]);
    for (size_t i = 0; i < stab_exact.size(); ++i)
      acc(stab_exact[i], o.stab_exact[i]);
    acc(orbits, o.orbits);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) acc(by_state[i][j], o.by_state[i][j]);
    return *this;
  }
};

enum class Statistic { area, half_perimeter };

inline Census census_partition(Statistic stat, int max_area, int max_hp,
                               int h0) {
  const auto& lat = subgroup_lattice();
  Census c;
  c.max_area = max_area;
  c.max_hp = max_hp;
  c.fix_subgroup.resize(lat.size());
  c.stab_exact.resize(lat.size());
  enumerate_convex(
      max_area, max_hp,
      [&](const ColumnShape& shape) {
        int key = stat == Statistic::area ? shape.area : shape.half_perim;
        CellList cells = shape.cells();
        SubgroupMask stab = stabilizer_mask(cells);
        c.total[key] += 1;
        for (int g = 0; g < 12; ++g)
          if (stab >> g & 1) c.fix[g][key] += 1;
        int sub = lat.index_of_mask(stab);  // throws if not a subgroup
        c.stab_exact[sub][key] += 1;
        for (int i = 0; i < lat.size(); ++i)
          if (lat.leq(i, sub)) c.fix_subgroup[i][key] += 1;
        if (is_free_representative(cells)) c.orbits[key] += 1;
        c.by_state[shape.upper_state][shape.lower_state][key] += 1;
      },
      h0);
  return c;
}

// Full census; partitioned by first-column height and merged in fixed order,
// so the result is identical for every thread count.
inline Census oracle_census(Statistic stat, int max_area, int max_hp,
                            int threads = 1) {
  if (threads <= 1) return census_partition(stat, max_area, max_hp, 0);
  std::vector<std::future<Census>> parts;
  for (int h0 = 1; h0 <= max_area; ++h0)
    parts.push_back(std::async(std::launch::async, census_partition, stat,
                               max_area, max_hp, h0));
  Census all;
  all.max_area = max_area;
  all.max_hp = max_hp;
  all.fix_subgroup.resize(subgroup_lattice().size());
  all.stab_exact.resize(subgroup_lattice().size());
  for (auto& f : parts) all.merge(f.get());
  return all;
}

// One polyomino per line, cells as `a,b` pairs, sorted; regression format.
inline std::string dump_polyomino(const CellList& cells) {
  std::ostringstream os;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ' ';
    os << cells[i].a << ',' << cells[i].b;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Directed convex polyominoes (north direction, diagonal basis): convex
// column sequences whose columns are all bottom-aligned on one diagonal, so
// the lower profile makes weak decreases only and the upper profile runs the
// usual phase machine.  Counted by area, number of columns, last column
// height and the upper-profile phase of the last column.

struct DirectedCensus {
  // key: {area, columns, last column height}
  std::array<std::map<std::array<int, 3>, long long>, 3> by_phase;
  CountMap total;  // by area
};

inline DirectedCensus directed_census(int max_area) {
  DirectedCensus out;
  std::vector<int> heights;
  std::function<void(int, int)> rec = [&](int area, int phase) {
    out.by_phase[phase][{area, static_cast<int>(heights.size()),
                         heights.back()}] += 1;
    out.total[area] += 1;
    for (int h2 = 1; area + h2 <= max_area; ++h2) {
      int p2 = next_state(phase, upper_transition(heights.back() - 1, h2 - 1));
      if (p2 < 0) continue;
      heights.push_back(h2);
      rec(area + h2, p2);
      heights.pop_back();
    }
  };
  for (int h = 1; h <= max_area; ++h) {
    heights = {h};
    rec(h, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Naive reference generator (small areas): all polyominoes by cell-addition
// with canonical dedup, then filtered by the convexity predicate.

inline std::vector<CellList> naive_convex(int max_area) {
  std::vector<std::set<CellList>> by_area(max_area + 1);
  if (max_area >= 1) by_area[1].insert(CellList{{0, 0}});
  for (int n = 2; n <= max_area; ++n)
    for (const CellList& p : by_area[n - 1])
      for (const Cell& c : p)
        for (const Cell& d : cell_neighbours) {
          Cell cand{c.a + d.a, c.b + d.b};
          if (std::binary_search(p.begin(), p.end(), cand)) continue;
          CellList grown = p;
          grown.push_back(cand);
          canonicalize(grown);
          by_area[n].insert(grown);
        }
  std::vector<CellList> out;
  for (int n = 1; n <= max_area; ++n)
    for (const CellList& p : by_area[n])
      if (is_convex(p)) out.push_back(p);
  return out;
}

}  // namespace hexpoly
