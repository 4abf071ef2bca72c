#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hexpoly/group.hpp"

using namespace hexpoly;

TEST_CASE("the twelve elements form D6") {
  const auto& mul = cayley_table();

  // all distinct matrices
  std::set<std::array<int, 4>> mats;
  for (const auto& e : dihedral6()) mats.insert(e.m);
  CHECK(mats.size() == 12);

  // rho^6 = 1, tau^2 = 1, tau rho tau = rho^-1
  int p = g_id;
  for (int i = 0; i < 6; ++i) p = mul[g_r][p];
  CHECK(p == g_id);
  CHECK(mul[g_h][g_h] == g_id);
  CHECK(mul[mul[g_h][g_r]][g_h] == g_r5);

  // rotation powers land where the element order says
  CHECK(mul[g_r][g_r] == g_r2);
  CHECK(mul[g_r2][g_r] == g_r3);
  CHECK(mul[g_r2][g_r2] == g_r4);

  // the named reflections match their definitions ds2 = tau r^2 etc.
  CHECK(mul[g_h][g_r2] == g_ds2);
  CHECK(mul[g_h][g_r4] == g_ds1);
  CHECK(mul[g_h][g_r] == g_da3);
  CHECK(mul[g_h][g_r3] == g_da2);
  CHECK(mul[g_h][g_r5] == g_da1);
}

TEST_CASE("subgroup lattice") {
  const auto& lat = subgroup_lattice();
  CHECK(lat.size() == 16);
  CHECK(lat.subs[lat.bottom].order == 1);
  CHECK(lat.subs[lat.top].order == 12);

  // every mask closed under the product
  const auto& mul = cayley_table();
  for (const auto& sub : lat.subs)
    for (int i = 0; i < 12; ++i)
      if (sub.mask >> i & 1)
        for (int j = 0; j < 12; ++j)
          if (sub.mask >> j & 1) CHECK((sub.mask >> mul[i][j] & 1) == 1);

  // partial order sanity
  for (int i = 0; i < lat.size(); ++i) {
    CHECK(lat.leq(lat.bottom, i));
    CHECK(lat.leq(i, lat.top));
  }

  // D2,3 = {id, r3, h, v}
  int d23 = lat.index_of_label("D2,3");
  SubgroupMask expect = (1u << g_id) | (1u << g_r3) | (1u << g_h) | (1u << g_v);
  CHECK(lat.subs[d23].mask == expect);
}

TEST_CASE("moebius values match the lattice figure") {
  const auto& lat = subgroup_lattice();
  auto mu0 = [&](const std::string& label) {
    return lat.moebius_from_bottom(lat.index_of_label(label));
  };
  CHECK(mu0("0") == 1);
  CHECK(mu0("C2") == -1);
  CHECK(mu0("C3") == -1);
  CHECK(mu0("C6") == 1);
  for (const char* l : {"F1,1", "F1,2", "F1,3", "H1,1", "H1,2", "H1,3"})
    CHECK(mu0(l) == -1);
  for (const char* l : {"D2,1", "D2,2", "D2,3"}) CHECK(mu0(l) == 2);
  CHECK(mu0("F3,1") == 3);
  CHECK(mu0("H3,1") == 3);
  CHECK(mu0("D6") == -6);

  // defining recurrence: sum over [H, K] of mu(H, .) vanishes for H < K
  for (int h = 0; h < lat.size(); ++h)
    for (int k = 0; k < lat.size(); ++k) {
      if (!lat.leq(h, k)) continue;
      int acc = 0;
      for (int m = 0; m < lat.size(); ++m)
        if (lat.leq(h, m) && lat.leq(m, k)) acc += lat.moebius(h, m);
      CHECK(acc == (h == k ? 1 : 0));
    }
}

TEST_CASE("conjugacy classes") {
  const auto& lat = subgroup_lattice();
  std::map<int, int> class_size;
  for (const auto& s : lat.subs) class_size[s.conjugacy_class] += 1;
  std::multiset<int> sizes;
  for (auto& [c, n] : class_size) sizes.insert(n);
  // 0, C2, C3, C6, F31, H31, D6 alone; F1, H1, D2 in triples
  CHECK(sizes == std::multiset<int>{1, 1, 1, 1, 1, 1, 1, 3, 3, 3});
  CHECK(lat.subs[lat.index_of_label("F1,1")].conjugacy_class ==
        lat.subs[lat.index_of_label("F1,3")].conjugacy_class);
  CHECK(lat.subs[lat.index_of_label("D2,1")].conjugacy_class ==
        lat.subs[lat.index_of_label("D2,3")].conjugacy_class);
  CHECK(lat.subs[lat.index_of_label("F1,1")].conjugacy_class !=
        lat.subs[lat.index_of_label("H1,1")].conjugacy_class);
}
