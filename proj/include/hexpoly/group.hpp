#pragma once

// The dihedral group D6 realized as exact integer-linear maps on cube
// coordinates (a, b, c) with a + b + c = 0 (stored as 2x2 matrices acting on
// (a, b)), its sixteen subgroups, and the Moebius function of the subgroup
// lattice.
//
// Realization: the b-axis is vertical (cells of a column differ in b), cells
// (a, b) and (a+1, b) are upper-right neighbours, so the geometric height of
// a cell center is b + a/2.  The rotation r maps (a, b, c) -> (-b, -c, -a);
// h is the horizontal-axis reflection (a, b, c) -> (a, c, b) and v the
// vertical-axis one (a, b, c) -> (-a, -c, -b).

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace hexpoly {

struct GroupElement {
  // new_a = m[0]*a + m[1]*b,  new_b = m[2]*a + m[3]*b
  std::array<int, 4> m;
  std::string name;

  std::pair<int, int> apply(int a, int b) const {
    return {m[0] * a + m[1] * b, m[2] * a + m[3] * b};
  }
  friend GroupElement compose(const GroupElement& g, const GroupElement& f) {
    // (g*f)(p) = g(f(p))
    return GroupElement{{g.m[0] * f.m[0] + g.m[1] * f.m[2],
                         g.m[0] * f.m[1] + g.m[1] * f.m[3],
                         g.m[2] * f.m[0] + g.m[3] * f.m[2],
                         g.m[2] * f.m[1] + g.m[3] * f.m[3]},
                        g.name + "*" + f.name};
  }
  bool same_matrix(const GroupElement& o) const { return m == o.m; }
};

enum ElemIndex : int {
  g_id = 0,
  g_r = 1,
  g_r2 = 2,
  g_r3 = 3,
  g_r4 = 4,
  g_r5 = 5,
  g_da1 = 6,
  g_da2 = 7,  // the vertical-axis reflection v
  g_da3 = 8,
  g_ds1 = 9,
  g_ds2 = 10,
  g_ds3 = 11,  // the horizontal-axis reflection h
};
inline constexpr int g_v = g_da2;
inline constexpr int g_h = g_ds3;

inline const std::array<GroupElement, 12>& dihedral6() {
  static const std::array<GroupElement, 12> elems = {{
      {{1, 0, 0, 1}, "id"},
      {{0, -1, 1, 1}, "r"},      // (a,b,c) -> (-b,-c,-a)
      {{-1, -1, 1, 0}, "r2"},    // (c,a,b)
      {{-1, 0, 0, -1}, "r3"},    // (-a,-b,-c)
      {{0, 1, -1, -1}, "r4"},    // (b,c,a)
      {{1, 1, -1, 0}, "r5"},     // (-c,-a,-b)
      {{1, 1, 0, -1}, "da1"},    // (-c,-b,-a)
      {{-1, 0, 1, 1}, "da2"},    // (-a,-c,-b) = v
      {{0, -1, -1, 0}, "da3"},   // (-b,-a,-c)
      {{0, 1, 1, 0}, "ds1"},     // (b,a,c)
      {{-1, -1, 0, 1}, "ds2"},   // (c,b,a)
      {{1, 0, -1, -1}, "ds3"},   // (a,c,b) = h
  }};
  return elems;
}

// Index of the product elems[i] * elems[j] in the fixed element order.
inline const std::array<std::array<int, 12>, 12>& cayley_table() {
  static const auto table = [] {
    std::array<std::array<int, 12>, 12> t{};
    const auto& e = dihedral6();
    for (int i = 0; i < 12; ++i)
      for (int j = 0; j < 12; ++j) {
        GroupElement p = compose(e[i], e[j]);
        int found = -1;
        for (int k = 0; k < 12; ++k)
          if (e[k].same_matrix(p)) found = k;
        if (found < 0) throw std::logic_error("D6 not closed");
        t[i][j] = found;
      }
    return t;
  }();
  return table;
}

// A subgroup as a 12-bit element mask.
using SubgroupMask = uint16_t;

inline SubgroupMask close_subgroup(SubgroupMask seed) {
  const auto& mul = cayley_table();
  SubgroupMask s = seed | 1;  // identity
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < 12; ++i)
      if (s >> i & 1)
        for (int j = 0; j < 12; ++j)
          if (s >> j & 1) {
            int k = mul[i][j];
            if (!(s >> k & 1)) {
              s |= SubgroupMask(1) << k;
              grew = true;
            }
          }
  }
  return s;
}

struct SubgroupLattice {
  struct Subgroup {
    SubgroupMask mask;
    std::string label;
    int order;
    int conjugacy_class;  // index shared by conjugate subgroups
  };

  std::vector<Subgroup> subs;                 // sorted by (order, mask)
  std::vector<std::vector<int>> moebius_tbl;  // mu(H, K); 0 when H !<= K

  int size() const { return static_cast<int>(subs.size()); }
  bool leq(int h, int k) const {
    return (subs[h].mask & ~subs[k].mask) == 0;
  }
  int moebius(int h, int k) const { return moebius_tbl[h][k]; }
  int moebius_from_bottom(int k) const { return moebius_tbl[bottom][k]; }

  int index_of_mask(SubgroupMask m) const {
    for (int i = 0; i < size(); ++i)
      if (subs[i].mask == m) return i;
    throw std::logic_error("element set is not a subgroup of D6");
  }
  int index_of_label(const std::string& label) const {
    for (int i = 0; i < size(); ++i)
      if (subs[i].label == label) return i;
    throw std::invalid_argument("unknown subgroup label: " + label);
  }

  int bottom = -1;  // {id}
  int top = -1;     // D6
};

inline const SubgroupLattice& subgroup_lattice() {
  static const SubgroupLattice lat = [] {
    SubgroupLattice l;
    // All subgroups of a dihedral group are generated by at most two
    // elements; close every pair and dedupe.
    std::vector<SubgroupMask> masks;
    auto push = [&](SubgroupMask m) {
      for (auto x : masks)
        if (x == m) return;
      masks.push_back(m);
    };
    for (int i = 0; i < 12; ++i)
      for (int j = i; j < 12; ++j)
        push(close_subgroup((SubgroupMask(1) << i) | (SubgroupMask(1) << j)));

    auto order = [](SubgroupMask m) {
      int n = 0;
      for (int i = 0; i < 12; ++i) n += m >> i & 1;
      return n;
    };
    std::sort(masks.begin(), masks.end(), [&](SubgroupMask a, SubgroupMask b) {
      return std::make_pair(order(a), a) < std::make_pair(order(b), b);
    });

    // Stockmeyer's nomenclature for the subgroups of D6.
    auto gen = [&](std::initializer_list<int> gens) {
      SubgroupMask m = 0;
      for (int g : gens) m |= SubgroupMask(1) << g;
      return close_subgroup(m);
    };
    std::map<SubgroupMask, std::string> names;
    names[gen({g_id})] = "0";
    names[gen({g_r3})] = "C2";
    names[gen({g_r2})] = "C3";
    names[gen({g_r})] = "C6";
    names[gen({g_ds2})] = "F1,1";
    names[gen({g_ds1})] = "F1,2";
    names[gen({g_ds3})] = "F1,3";
    names[gen({g_da3})] = "H1,1";
    names[gen({g_da2})] = "H1,2";
    names[gen({g_da1})] = "H1,3";
    names[gen({g_r2, g_ds2})] = "F3,1";
    names[gen({g_r2, g_da3})] = "H3,1";
    names[gen({g_r3, g_ds2})] = "D2,1";
    names[gen({g_r3, g_ds1})] = "D2,2";
    names[gen({g_r3, g_ds3})] = "D2,3";
    names[gen({g_r, g_ds3})] = "D6";
    if (masks.size() != names.size())
      throw std::logic_error("unexpected number of D6 subgroups");

    for (auto m : masks)
      l.subs.push_back({m, names.at(m), order(m), -1});
    l.bottom = l.index_of_mask(gen({g_id}));
    l.top = l.index_of_mask(gen({g_r, g_ds3}));

    // Conjugacy classes of subgroups.
    const auto& mul = cayley_table();
    auto inverse = [&](int g) {
      for (int k = 0; k < 12; ++k)
        if (mul[g][k] == g_id) return k;
      throw std::logic_error("no inverse");
    };
    auto conjugate = [&](SubgroupMask m, int g) {
      SubgroupMask out = 0;
      int gi = inverse(g);
      for (int i = 0; i < 12; ++i)
        if (m >> i & 1) out |= SubgroupMask(1) << mul[mul[g][i]][gi];
      return out;
    };
    int next_class = 0;
    for (int i = 0; i < l.size(); ++i) {
      if (l.subs[i].conjugacy_class >= 0) continue;
      l.subs[i].conjugacy_class = next_class;
      for (int g = 0; g < 12; ++g) {
        int j = l.index_of_mask(conjugate(l.subs[i].mask, g));
        l.subs[j].conjugacy_class = next_class;
      }
      ++next_class;
    }

    // Moebius function of the lattice by the defining recurrence:
    // mu(H,H) = 1 and sum_{H <= L <= K} mu(H,L) = 0 for H < K.
    int n = l.size();
    l.moebius_tbl.assign(n, std::vector<int>(n, 0));
    for (int h = 0; h < n; ++h) {
      l.moebius_tbl[h][h] = 1;
      // Subgroups are sorted by order, so ascending index refines the order.
      for (int k = 0; k < n; ++k) {
        if (k == h || !l.leq(h, k)) continue;
        int acc = 0;
        for (int m = 0; m < n; ++m)
          if (m != k && l.leq(h, m) && l.leq(m, k)) acc += l.moebius_tbl[h][m];
        l.moebius_tbl[h][k] = -acc;
      }
    }
    return l;
  }();
  return lat;
}

}  // namespace hexpoly
