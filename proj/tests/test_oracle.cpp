#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "hexpoly/oracle.hpp"

using namespace hexpoly;

namespace {
// Table rows the census must reproduce (area 1..8).
constexpr long long t1_id[] = {1, 3, 11, 38, 120, 348, 939, 2412};
constexpr long long t1_h[] = {1, 1, 3, 2, 6, 6, 9, 12};
constexpr long long t1_v[] = {1, 1, 3, 4, 10, 12, 27, 30};
constexpr long long t1_r[] = {1, 0, 0, 0, 0, 0, 1, 0};
constexpr long long t1_r2[] = {1, 0, 2, 2, 0, 6, 3, 0};
constexpr long long t1_r3[] = {1, 3, 3, 12, 12, 42, 37, 126};
constexpr long long t1_orbits[] = {1, 1, 3, 6, 15, 38, 91, 222};
}  // namespace

TEST_CASE("basic geometry") {
  CellList single = {{0, 0}};
  CHECK(half_perimeter(single) == 3);
  CellList domino = {{0, 0}, {0, 1}};
  CHECK(half_perimeter(domino) == 5);
  CHECK(is_convex(domino));
  CellList split = {{0, 0}, {0, 2}};
  CHECK_FALSE(is_convex(split));
}

TEST_CASE("column generator counts match the small tables") {
  Census c = oracle_census(Statistic::area, 8, 1000, 2);
  for (int a = 1; a <= 8; ++a) {
    CAPTURE(a);
    CHECK(c.total[a] == t1_id[a - 1]);
    CHECK(c.fix[g_h][a] == t1_h[a - 1]);
    CHECK(c.fix[g_v][a] == t1_v[a - 1]);
    CHECK(c.fix[g_r][a] == t1_r[a - 1]);
    CHECK(c.fix[g_r2][a] == t1_r2[a - 1]);
    CHECK(c.fix[g_r3][a] == t1_r3[a - 1]);
    CHECK(c.orbits[a] == t1_orbits[a - 1]);
  }
}

TEST_CASE("column generator equals the naive generator") {
  auto naive = naive_convex(7);
  std::map<int, long long> naive_by_area;
  std::set<CellList> naive_set;
  for (const auto& p : naive) {
    naive_by_area[static_cast<int>(p.size())] += 1;
    naive_set.insert(p);
  }
  std::map<int, long long> col_by_area;
  std::set<CellList> col_set;
  enumerate_convex(7, 1000, [&](const ColumnShape& s) {
    col_by_area[s.area] += 1;
    col_set.insert(s.cells());
  });
  CHECK(naive_by_area == col_by_area);
  CHECK(naive_set == col_set);
}

TEST_CASE("stabilizers") {
  const auto& lat = subgroup_lattice();
  CellList single = {{0, 0}};
  CHECK(stabilizer_mask(single) == lat.subs[lat.top].mask);

  // the stacked domino has the full rectangle-like symmetry {id, r3, h, v}
  CellList domino = {{0, 0}, {0, 1}};
  CHECK(stabilizer_mask(domino) == lat.subs[lat.index_of_label("D2,3")].mask);

  // every stabilizer is one of the sixteen subgroups
  enumerate_convex(6, 1000, [&](const ColumnShape& s) {
    CHECK_NOTHROW(lat.index_of_mask(stabilizer_mask(s.cells())));
  });
}

TEST_CASE("conjugate fixes and rotation inverses agree") {
  Census c = oracle_census(Statistic::area, 8, 1000, 1);
  for (int a = 1; a <= 8; ++a) {
    CHECK(c.fix[g_da1][a] == c.fix[g_da2][a]);
    CHECK(c.fix[g_da2][a] == c.fix[g_da3][a]);
    CHECK(c.fix[g_ds1][a] == c.fix[g_ds2][a]);
    CHECK(c.fix[g_ds2][a] == c.fix[g_ds3][a]);
    CHECK(c.fix[g_r][a] == c.fix[g_r5][a]);
    CHECK(c.fix[g_r2][a] == c.fix[g_r4][a]);
  }
}

TEST_CASE("convexity is rotation invariant") {
  enumerate_convex(6, 1000, [&](const ColumnShape& s) {
    CellList cells = s.cells();
    for (const auto& g : dihedral6()) CHECK(is_convex(transformed(cells, g)));
  });
}

TEST_CASE("explicit orbit representatives match Burnside") {
  Census c = oracle_census(Statistic::area, 9, 1000, 4);
  for (int a = 1; a <= 9; ++a) {
    long long burn = c.total[a] + 2 * c.fix[g_r][a] + 2 * c.fix[g_r2][a] +
                     c.fix[g_r3][a] + 3 * c.fix[g_v][a] + 3 * c.fix[g_h][a];
    CHECK(burn % 12 == 0);
    CHECK(burn / 12 == c.orbits[a]);
  }
}

TEST_CASE("exact stabilizer counts partition the class") {
  const auto& lat = subgroup_lattice();
  Census c = oracle_census(Statistic::area, 8, 1000, 1);
  for (int a = 1; a <= 8; ++a) {
    long long sum = 0;
    for (int i = 0; i < lat.size(); ++i) sum += c.stab_exact[i][a];
    CHECK(sum == c.total[a]);
  }
}

TEST_CASE("parallel census is deterministic") {
  Census a = oracle_census(Statistic::area, 7, 1000, 1);
  Census b = oracle_census(Statistic::area, 7, 1000, 4);
  CHECK(a.total == b.total);
  for (int g = 0; g < 12; ++g) CHECK(a.fix[g] == b.fix[g]);
  CHECK(a.orbits == b.orbits);
}

TEST_CASE("half-perimeter census") {
  Census c = oracle_census(Statistic::half_perimeter, 100, 9, 2);
  CHECK(c.total[3] == 1);
  CHECK(c.total[4] == 0);
  CHECK(c.total[5] == 3);
  CHECK(c.total[6] == 2);
  CHECK(c.total[7] == 12);
  CHECK(c.total[8] == 18);
  CHECK(c.total[9] == 59);
}

TEST_CASE("polyomino dump format") {
  CellList domino = {{0, 0}, {1, 0}};
  canonicalize(domino);
  CHECK(dump_polyomino(domino) == "0,0 1,0");
}
