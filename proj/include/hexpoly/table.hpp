#pragma once

// Orbit counting and table assembly: the nine fixed-point series, Burnside's
// lemma for free polyominoes, Moebius inversion on the subgroup lattice for
// exact-stabilizer counts, and the symmetry tables by area or half-perimeter.

#include <future>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "hexpoly/symmetry.hpp"

namespace hexpoly {

struct FixBundle {
  Request req;
  // F_{>=H} for the ten conjugacy classes of subgroups; total = F_{>=0}.
  Series total;
  Series fix_v, fix_h, fix_r, fix_r2, fix_r3;
  Series d6, f31, h31, d23;
};

inline FixBundle compute_fix_bundle(const Request& req_in, int threads = 1) {
  Request req = req_in;
  req.with_x = false;  // the symmetry series live in (q, t)
  auto run = [&](auto&& fn) {
    return threads > 1 ? std::async(std::launch::async, fn)
                       : std::async(std::launch::deferred, fn);
  };
  auto f_cs = run([req] { return build_convex(req); });
  auto f_h = run([req] { return fix_horizontal(req); });
  auto f_d23 = run([req] { return fix_d23(req); });
  auto f_rot = run([req] {
    int bq_dc = 2 * req.bq / 3 + 3;
    DirectedSeries native = build_directed(bq_dc);
    DirectedSeries standalone = build_directed(bq_dc, true);
    return std::make_pair(fix_rot120(req, native, standalone),
                          fix_h31(req, native));
  });

  FixBundle b{req,
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds()),
              Series(req.bounds())};
  b.fix_r = fix_rot60(req);
  b.d6 = fix_d6(req);
  b.f31 = fix_f31(req);

  ConvexSeries cs = f_cs.get();
  b.total = cs.total().at_one(Var::x).at_one(Var::v).finalize();
  b.fix_v = fix_vertical(cs, req);
  b.fix_r3 = fix_rot180(cs, req);
  b.fix_h = f_h.get();
  b.d23 = f_d23.get();
  auto [r2, h31] = f_rot.get();
  b.fix_r2 = std::move(r2);
  b.h31 = std::move(h31);
  return b;
}

// Exact coefficientwise division; any nonzero remainder is an upstream bug.
inline Series divide_exact(const Series& f, int divisor, const char* who) {
  Series r(f.bounds());
  for (const auto& [m, c] : f.terms()) {
    if (c % divisor != 0)
      throw series_error(std::string(who) + ": coefficient not divisible by " +
                         std::to_string(divisor));
    r.accumulate(c / divisor, m);
  }
  return r;
}

// |F / D6| = (1/12)(|F| + 2 fix(r) + 2 fix(r^2) + fix(r^3) + 3 fix(v) + 3 fix(h))
inline Series burnside_orbits(const FixBundle& b) {
  Series sum = b.total + b.fix_r.mul_scalar(2) + b.fix_r2.mul_scalar(2) +
               b.fix_r3 + b.fix_v.mul_scalar(3) + b.fix_h.mul_scalar(3);
  return divide_exact(sum, 12, "burnside_orbits").finalize();
}

// F_{>=H} for any subgroup, through the conjugacy equalities.
inline const Series& subgroup_series(const FixBundle& b, int sub_index) {
  const auto& lat = subgroup_lattice();
  const std::string& label = lat.subs[sub_index].label;
  if (label == "0") return b.total;
  if (label == "C2") return b.fix_r3;
  if (label == "C3") return b.fix_r2;
  if (label == "C6") return b.fix_r;
  if (label[0] == 'F' && label[1] == '1') return b.fix_h;
  if (label[0] == 'H' && label[1] == '1') return b.fix_v;
  if (label == "F3,1") return b.f31;
  if (label == "H3,1") return b.h31;
  if (label[0] == 'D' && label[1] == '2') return b.d23;
  return b.d6;  // "D6"
}

// F_{=H} = sum_{H <= K} mu(H, K) F_{>=K}
inline Series stabilizer_exactly(const FixBundle& b, int sub_index) {
  const auto& lat = subgroup_lattice();
  Series total = Series::zero(b.req.bounds());
  for (int k = 0; k < lat.size(); ++k) {
    if (!lat.leq(sub_index, k)) continue;
    int mu = lat.moebius(sub_index, k);
    if (mu != 0) total += subgroup_series(b, k).mul_scalar(mu);
  }
  return total.finalize();
}

// The asymmetric count by the expanded bottom-level inversion:
// F_{=0} = |F| - 3 fix(h) - 3 fix(v) - fix(r^2) - fix(r^3) + fix(r)
//          + 6 F_{>=D2,3} + 3 F_{>=F3,1} + 3 F_{>=H3,1} - 6 F_{>=D6}
inline Series asymmetric_direct(const FixBundle& b) {
  return (b.total - b.fix_h.mul_scalar(3) - b.fix_v.mul_scalar(3) - b.fix_r2 -
          b.fix_r3 + b.fix_r + b.d23.mul_scalar(6) + b.f31.mul_scalar(3) +
          b.h31.mul_scalar(3) - b.d6.mul_scalar(6))
      .finalize();
}

// ---------------------------------------------------------------------------
// Symmetry tables

inline constexpr std::array<const char*, 12> table_columns = {
    "id", "h", "v", "r", "r2", "r3", "orbits", "D6", "F31", "H31", "D2",
    "asym"};

struct TableRow {
  int value = 0;
  std::array<Int, 12> cols{};
};

struct SymmetryTable {
  Statistic stat = Statistic::area;
  int max_value = 0;
  std::vector<TableRow> rows;
};

// Internal q-window needed to cover every polyomino with half-perimeter <= p:
// the spiral-filled hexagon maximizes area at p^2/12 + 1.
inline int area_cap_for_half_perimeter(int p) { return p * p / 12 + 2; }

inline Request table_request(Statistic stat, int max_value) {
  if (stat == Statistic::area)
    return Request{max_value, 2 * max_value + 1, false};
  return Request{area_cap_for_half_perimeter(max_value), max_value, false};
}

// Per-row identity checks: Burnside divisibility and the Moebius combination
// are recomputed from the emitted integers themselves.
inline void check_row(const TableRow& r) {
  const auto& [id, h, v, rr, r2, r3, orbits, d6, f31, h31, d2, asym] = r.cols;
  Int burn = id + 2 * rr + 2 * r2 + r3 + 3 * v + 3 * h;
  if (burn % 12 != 0 || burn / 12 != orbits)
    throw series_error("table row " + std::to_string(r.value) +
                       ": Burnside identity failed");
  Int inv = id - 3 * h - 3 * v - r2 - r3 + rr + 6 * d2 + 3 * f31 + 3 * h31 -
            6 * d6;
  if (inv != asym || asym < 0)
    throw series_error("table row " + std::to_string(r.value) +
                       ": Moebius identity failed");
}

inline SymmetryTable build_table(const FixBundle& b, Statistic stat,
                                 int max_value) {
  Var w = stat == Statistic::area ? Var::q : Var::t;
  Series orbits = burnside_orbits(b);
  Series asym = asymmetric_direct(b);
  std::array<std::map<int, Int>, 12> marg = {
      b.total.marginal(w),  b.fix_h.marginal(w), b.fix_v.marginal(w),
      b.fix_r.marginal(w),  b.fix_r2.marginal(w), b.fix_r3.marginal(w),
      orbits.marginal(w),   b.d6.marginal(w),    b.f31.marginal(w),
      b.h31.marginal(w),    b.d23.marginal(w),   asym.marginal(w)};
  SymmetryTable table{stat, max_value, {}};
  int first = stat == Statistic::area ? 1 : 3;
  for (int value = first; value <= max_value; ++value) {
    TableRow row{value, {}};
    for (int c = 0; c < 12; ++c) {
      auto it = marg[c].find(value);
      row.cols[c] = it == marg[c].end() ? Int(0) : it->second;
    }
    check_row(row);
    table.rows.push_back(std::move(row));
  }
  return table;
}

inline SymmetryTable build_table(Statistic stat, int max_value,
                                 int threads = 1) {
  FixBundle b = compute_fix_bundle(table_request(stat, max_value), threads);
  return build_table(b, stat, max_value);
}

// ---------------------------------------------------------------------------
// Emission

inline std::string table_csv(const SymmetryTable& t) {
  std::ostringstream os;
  os << "stat,id,h,v,r,r2,r3,orbits,D6,F31,H31,D2,asym\n";
  for (const TableRow& r : t.rows) {
    os << r.value;
    for (const Int& c : r.cols) os << ',' << c.str();
    os << '\n';
  }
  return os.str();
}

inline std::string table_text(const SymmetryTable& t) {
  std::ostringstream os;
  os << (t.stat == Statistic::area ? "area" : "half-perim");
  for (const char* c : table_columns) os << std::setw(12) << c;
  os << '\n';
  for (const TableRow& r : t.rows) {
    os << std::setw(10) << r.value;
    for (const Int& c : r.cols) os << std::setw(12) << c.str();
    os << '\n';
  }
  return os.str();
}

}  // namespace hexpoly
