#pragma once

// Fixed-point generating series in (q, t) for every symmetry class of convex
// polyominoes: the reflections v and h, the rotations r, r^2, r^3, and the
// two-generator subgroups D6, F_{3,1}, H_{3,1}, D_{2,3}.

#include <map>

#include "hexpoly/directed.hpp"

namespace hexpoly {

inline void require_window(const Series& f, Bounds target, const char* who) {
  if (!f.bounds().covers(target))
    throw series_error(std::string(who) + ": window fell short");
}

// ---------------------------------------------------------------------------
// fix(v): the symmetry axis runs through a central column; K = C00+2C10+C11
// collects the admissible left fundamental regions and
//   fix(v) = sum_{m>=1} K_m(1, q^2, t^2) / (q^m t^(2m+1)).
inline Series fix_vertical(const ConvexSeries& cs, const Request& req) {
  Bounds w = req.bounds();
  Series k = cs.k_mirror().at_one(Var::x);
  SubstRules doubling{};
  doubling[static_cast<int>(Var::q)] = e_q(2);
  doubling[static_cast<int>(Var::t)] = e_t(2);
  Series total = Series::zero(w);
  for (int m = 1; m <= w.q && 2 * m + 1 <= w.t; ++m) {
    Series km = k.extract(Var::v, m).substitute(doubling);
    Series summand = km.mul_term(1, e_q(-m) + e_t(-(2 * m + 1)));
    require_window(summand, w, "fix_vertical");
    total += summand.truncated(w);
  }
  require_window(total, w, "fix_vertical");
  return total.finalize();
}

// ---------------------------------------------------------------------------
// fix(h): decomposition of h-symmetric convex polyominoes by their
// oscillating part: arrowhead cases S_a, no-arrowhead S_b, no oscillation S_c.

// B(s,x,q,t) = sxqt^3 + sum_{n>=2} s^n x^n q^{n(n+1)/2} t^{3n} TS0_{n-3}(xt,q)
inline Series arrowhead_seed(Bounds b) {
  Series total = Series::term(1, e_s() + e_q() + e_t(3), b);
  for (int n = 2; n * (n + 1) / 2 <= b.q && 3 * n <= b.t; ++n)
    total += symmetric_stack_open(n - 3, e_t(1), e_q(), b)
                 .mul_term(1, e_s(n) + e_q(n * (n + 1) / 2) + e_t(3 * n));
  return total;
}

// A(s) = B(s) + [s^2 x^2 q^3 t^4 / (1 - s q^2)] (A(1) - A(s q^2)),
// the V-band attachment; solved by fixed-point iteration (each band carries
// q^3, so the affine map is a q-adic contraction).  x = 1 throughout.
inline Series arrowhead(Bounds b) {
  Series seed = arrowhead_seed(b);
  Series factor = Series::term(1, e_s(2) + e_q(3) + e_t(4), b) *
                  geometric(e_s() + e_q(2), b);
  SubstRules s_to_sq2{};
  s_to_sq2[static_cast<int>(Var::s)] = e_s() + e_q(2);
  Series total = Series::zero(b);
  Series delta = seed;
  for (int it = 0; it <= b.q + 2; ++it) {
    if (delta.is_zero()) return total;
    total += delta;
    delta = factor * (delta.at_one(Var::s) - delta.substitute(s_to_sq2));
    delta = delta.truncated(b);
  }
  throw series_error("arrowhead: no fixed point within bounds");
}

inline Series fix_horizontal(const Request& req) {
  Bounds w = req.bounds();
  const Exponents xt = e_t(1);  // x = 1, so TS/TS0 arguments (xt, q) = (t, q)

  Series a = arrowhead(w);
  std::vector<Series> am = slices(a, Var::s);

  // S_a: an arrowhead, preceded by the first oscillating column; the two
  // sums are the odd and even parity of that column.
  Series sa = Series::zero(w);
  for (int h = 0;; ++h) {
    Exponents pre1 = e_q(h * (h + 1)) + e_t(2 * h + 2);
    if (pre1.q() > w.q || pre1.t() > w.t) break;
    Series inner = Series::zero(w);
    for (int m = h + 1; m < static_cast<int>(am.size()); ++m)
      inner += q_binomial(m - 1, h, e_q(2), w) * am[m];
    sa += (symmetric_stack_column(2 * h + 2, xt, e_q(), w) * inner)
              .mul_term(1, pre1);
    if (h >= 1) {
      Exponents pre2 = e_q(h * (h + 1)) + e_t(2 * h + 3);
      if (pre2.q() <= w.q && pre2.t() <= w.t) {
        Series inner2 = Series::zero(w);
        for (int m = h; m < static_cast<int>(am.size()); ++m)
          inner2 += q_binomial(m, h, e_q(2), w) * am[m];
        sa += (symmetric_stack_column(2 * h + 1, xt, e_q(), w) * inner2)
                  .mul_term(1, pre2);
      }
    }
  }

  // S_b: oscillating part without an arrowhead.
  Series sb = Series::zero(w);
  for (int n = 1; n * (n + 1) / 2 <= w.q && 3 * n <= w.t; ++n)
    for (int k = 1; n * (n + 1) / 2 + 2 * k * n <= w.q && 3 * n + 4 * k <= w.t;
         ++k) {
      Series ts0 = symmetric_stack_open(n + 2 * k - 3, xt, e_q(), w);
      Series inner = Series::zero(w);
      for (int h = 0; h <= n - 1; ++h)
        inner += (q_binomial(n - 1, h, e_q(2), w) *
                  symmetric_stack_column(2 * k + 2 * h + 2, xt, e_q(), w))
                     .mul_term(1, e_t(2 * h + 2) + e_q(h * (h + 1)));
      sb += (ts0 * inner).mul_term(
          1, e_q(n * (n + 1) / 2 + 2 * k * n) + e_t(3 * n + 4 * k));
    }
  for (int n = 0; n * (n + 1) / 2 <= w.q && 3 * n <= w.t; ++n)
    for (int k = 1;
         n * (n + 1) / 2 + 2 * k * (n + 1) <= w.q && 3 * n + 4 * k + 1 <= w.t;
         ++k) {
      Series ts0 = symmetric_stack_open(n + 2 * k - 3, xt, e_q(), w);
      Series inner = Series::zero(w);
      for (int h = 0; h <= n; ++h)
        inner += (q_binomial(n, h, e_q(2), w) *
                  symmetric_stack_column(2 * k + 2 * h + 1, xt, e_q(), w))
                     .mul_term(1, e_t(2 * h + 2) + e_q(h * (h + 1)));
      sb += (ts0 * inner).mul_term(
          1, e_q(n * (n + 1) / 2 + 2 * k * (n + 1)) + e_t(3 * n + 4 * k + 1));
    }

  // S_c: no oscillating part: t^(2h) TS_h(xt,q) TS0_{h-3}(xt,q).  The h = 1, 2
  // cases take the empty left part (TS0 of negative index) as 1.
  Series sc = Series::zero(w);
  for (int h = 1; h <= w.q && 2 * h <= w.t; ++h) {
    Series left = h >= 3 ? symmetric_stack_open(h - 3, xt, e_q(), w)
                         : Series::one(w);
    sc += (symmetric_stack_column(h, xt, e_q(), w) * left)
              .mul_term(1, e_t(2 * h));
  }

  return (sa + sb + sc).finalize();
}

// ---------------------------------------------------------------------------
// fix(r): large hexagons decorated by stacks,
//   sum_{h>=1} t^(3(2h-1)) q^(3h(h-1)+1) TO_{h-1}(t^6, q^6)
inline Series fix_rot60(const Request& req) {
  Bounds w = req.bounds();
  Series total = Series::zero(w);
  for (int h = 1; 3 * h * (h - 1) + 1 <= w.q && 3 * (2 * h - 1) <= w.t; ++h)
    total += stack_open(h - 1, e_t(6), e_q(6), w)
                 .mul_term(1, e_q(3 * h * (h - 1) + 1) + e_t(6 * h - 3));
  return total.finalize();
}

// ---------------------------------------------------------------------------
// fix(r^2): decorated super-hexagons (center in a cell) and pseudo-hexagons
// (center on a vertex), built from the directed-convex coefficients.

namespace detail {

// Cached DC_{i,r,l}(q^step, t^step).
class ScaledDirected {
 public:
  ScaledDirected(const DirectedSeries& dc, int step) : dc_(dc), step_(step) {
    rules_[static_cast<int>(Var::q)] = e_q(step);
    rules_[static_cast<int>(Var::t)] = e_t(step);
  }

  const Series& at(int i, int r, int l) const {
    auto key = std::array<int, 3>{i, r, l};
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_
               .emplace(key,
                        directed_normalized(dc_, i, r, l).substitute(rules_))
               .first;
    return it->second;
  }

  // sum_{r=1}^{rmax} DC_{i,r,l}(q^step, t^step)
  const Series& prefix(int i, int rmax, int l) const {
    auto key = std::array<int, 3>{i, rmax, l};
    auto it = pcache_.find(key);
    if (it == pcache_.end()) {
      Series acc = rmax >= 2 ? prefix(i, rmax - 1, l)
                             : Series::zero(at(i, 1, l).bounds());
      acc += at(i, rmax, l);
      it = pcache_.emplace(key, std::move(acc)).first;
    }
    return it->second;
  }

 private:
  const DirectedSeries& dc_;
  int step_;
  SubstRules rules_{};
  mutable std::map<std::array<int, 3>, Series> cache_;
  mutable std::map<std::array<int, 3>, Series> pcache_;
};

// B_h(q,t) at (q^3, t^3): admissible decorations of one sector of a
// super-hexagon of side h,
//   B_h = sum_{r=1}^{h-1} ( (h-r)(q^r t + DC_{1,r,1}) + DC_{2,r,1}
//                           + sum_{j>=2} t^(j-1) DC_{r,j} )
inline Series sector_decorations(const ScaledDirected& dc3, int h, Bounds w) {
  Series total = Series::zero(w);
  for (int r = 1; r <= h - 1; ++r) {
    if (3 * r <= w.q)
      total += (Series::term(1, e_q(3 * r) + e_t(3), w) + dc3.at(1, r, 1))
                   .mul_scalar(h - r)
                   .truncated(w);
    total += dc3.at(2, r, 1).truncated(w);
    for (int j = 2; 3 * j <= w.q && 3 * (j - 1) <= w.t; ++j) {
      Series all = dc3.at(0, r, j) + dc3.at(1, r, j) + dc3.at(2, r, j);
      total += all.mul_term(1, e_t(3 * (j - 1))).truncated(w);
    }
  }
  return total;
}

}  // namespace detail

inline Series fix_rot120(const Request& req, const DirectedSeries& dcs,
                         const DirectedSeries& dcs_standalone) {
  Bounds w = req.bounds();
  detail::ScaledDirected dc3(dcs, 3);
  detail::ScaledDirected dc3s(dcs_standalone, 3);
  const Series zero = Series::zero(w);

  // P1: center in a cell, unequal arms; decorations D and D* share a column
  // of size l, counted once (the 1/q^(3l)).
  Series p1 = Series::zero(w);
  // Q1: center on a vertex (factor 2 for the two vertex types).
  Series q1 = Series::zero(w);
  for (int h = 1;; ++h) {
    Exponents pre_p = e_q(3 * h * (h - 1) + 1) + e_t(3 * (2 * h - 1));
    Exponents pre_q = e_q(3 * h * h) + e_t(6 * h);
    bool p_live = pre_p.q() <= w.q && pre_p.t() <= w.t;
    bool q_live = pre_q.q() <= w.q && pre_q.t() <= w.t;
    if (!p_live && !q_live) break;
    for (int l = 1; 3 * l + 1 <= w.q; ++l) {
      if (p_live) {
        Bounds wh{w.q - pre_p.q(), w.t - pre_p.t()};
        if (3 * l <= wh.q) {
          const Series& a0 = dc3.prefix(0, h, l);
          const Series& a1 = dc3.prefix(1, h, l);
          const Series& a2 = dc3.prefix(2, h, l);
          Exponents down = e_q(-3 * l);
          Series combo = mul_shifted(a0, a0, down, wh) +
                         mul_shifted(a0, a1, down, wh).mul_scalar(2) +
                         mul_shifted(a0, a2, down, wh).mul_scalar(2) +
                         mul_shifted(a1, a1, down, wh);
          p1 += combo.mul_term(1, pre_p);
        }
      }
      if (q_live) {
        // Decorations of a vertex-centered core carry their standalone
        // half-perimeter.
        Bounds wh{w.q - pre_q.q(), w.t - pre_q.t()};
        if (3 * l <= wh.q) {
          const Series& b0 = dc3s.prefix(0, h + 1, l);
          const Series& b1 = dc3s.prefix(1, h + 1, l);
          const Series& b2 = dc3s.prefix(2, h + 1, l);
          const Series& a0 = dc3s.prefix(0, h, l);
          const Series& a1 = dc3s.prefix(1, h, l);
          Exponents down = e_q(-3 * l);
          Series combo = mul_shifted(b0, a0, down, wh) +
                         mul_shifted(b0, a1, down, wh) +
                         mul_shifted(b0, dc3s.prefix(2, h, l), down, wh) +
                         mul_shifted(b1, a1, down, wh) +
                         mul_shifted(b1, a0, down, wh) +
                         mul_shifted(b2, a0, down, wh);
          q1 += combo.mul_term(2, pre_q);
        }
      }
    }
  }

  // P3 / Q3: equal arms; the sectors carry stack decorations, with the
  // inclusion-exclusion corrections for the doubly counted TO-shaped ones.
  Series p3 = Series::zero(w), q3 = Series::zero(w);
  for (int h = 1;; ++h) {
    Exponents pre_p = e_q(3 * h * (h - 1) + 1) + e_t(3 * (2 * h - 1));
    Exponents pre_q = e_q(3 * h * h) + e_t(6 * h);
    bool p_live = pre_p.q() <= w.q && pre_p.t() <= w.t;
    bool q_live = pre_q.q() <= w.q && pre_q.t() <= w.t;
    if (!p_live && !q_live) break;
    if (p_live) {
      Bounds wh{w.q - pre_p.q(), w.t - pre_p.t()};
      Series bh = detail::sector_decorations(dc3, h, wh);
      Series to = stack_open(h - 1, e_t(3), e_q(3), wh);
      Series inner = bh.mul_scalar(4) - to.mul_scalar(4) + to * to +
                     Series::one(wh).mul_scalar(4);
      p3 += inner.mul_term(1, pre_p);
    }
    if (q_live) {
      Bounds wh{w.q - pre_q.q(), w.t - pre_q.t()};
      Series bh = detail::sector_decorations(dc3, h, wh);
      Series bh1 = detail::sector_decorations(dc3, h + 1, wh);
      Series to0 = stack_open(h - 1, e_t(3), e_q(3), wh);
      Series to1 = stack_open(h, e_t(3), e_q(3), wh);
      Series inner = Series::one(wh).mul_scalar(4) + bh.mul_scalar(2) +
                     bh1.mul_scalar(2) - to0.mul_scalar(2) -
                     to1.mul_scalar(2) + to0 * to1;
      q3 += inner.mul_term(2, pre_q);
    }
  }

  Series total = p1.mul_scalar(2) + p3 + q1.mul_scalar(2) + q3;
  require_window(total, w, "fix_rot120");
  return total.finalize();
}

inline Series fix_rot120(const Request& req) {
  int bq_dc = 2 * req.bq / 3 + 3;
  return fix_rot120(req, build_directed(bq_dc), build_directed(bq_dc, true));
}

// ---------------------------------------------------------------------------
// fix(r^3): rotation center in the middle of an edge (class A, three edge
// types) or of a cell (class H); fundamental regions K = C00+C01+C10+C11+
// C02+C20 split by the parity of the central column.
inline Series fix_rot180(const ConvexSeries& cs, const Request& req) {
  Bounds w = req.bounds();
  Series k = cs.k_half_turn().at_one(Var::x);
  SubstRules doubling{};
  doubling[static_cast<int>(Var::q)] = e_q(2);
  doubling[static_cast<int>(Var::t)] = e_t(2);
  Series edge = Series::zero(w), cell = Series::zero(w);
  for (int k2 = 1; 2 * k2 <= w.q && 4 * k2 + 1 <= w.t; ++k2) {
    Series piece = k.extract(Var::v, 2 * k2).substitute(doubling);
    Series summand = piece.mul_term(1, e_q(-2 * k2) + e_t(-(4 * k2 + 1)));
    require_window(summand, w, "fix_rot180/edge");
    edge += summand.truncated(w);
  }
  for (int k2 = 0; 2 * k2 + 1 <= w.q && 4 * k2 + 3 <= w.t; ++k2) {
    Series piece = k.extract(Var::v, 2 * k2 + 1).substitute(doubling);
    Series summand =
        piece.mul_term(1, e_q(-(2 * k2 + 1)) + e_t(-(4 * k2 + 3)));
    require_window(summand, w, "fix_rot180/cell");
    cell += summand.truncated(w);
  }
  return (edge.mul_scalar(3) + cell).finalize();
}

// ---------------------------------------------------------------------------
// Fix(D6) = sum_h t^(3(2h-1)) q^(3h(h-1)+1) TS0_{h-1}(t^6, q^6):
// super-hexagons with symmetric stack decorations.
inline Series fix_d6(const Request& req) {
  Bounds w = req.bounds();
  Series total = Series::zero(w);
  for (int h = 1; 3 * h * (h - 1) + 1 <= w.q && 6 * h - 3 <= w.t; ++h)
    total += symmetric_stack_open(h - 1, e_t(6), e_q(6), w)
                 .mul_term(1, e_q(3 * h * (h - 1) + 1) + e_t(6 * h - 3));
  return total.finalize();
}

// Fix(F_{3,1}): r^2-symmetry with a vertex-vertex mirror; the six sector
// stacks come in two identical triples.
inline Series fix_f31(const Request& req) {
  Bounds w = req.bounds();
  Series total = Series::zero(w);
  for (int h = 1; 3 * h * (h - 1) + 1 <= w.q && 6 * h - 3 <= w.t; ++h) {
    Series ts0 = symmetric_stack_open(h - 1, e_t(3), e_q(3), w);
    total +=
        (ts0 * ts0).mul_term(1, e_q(3 * h * (h - 1) + 1) + e_t(6 * h - 3));
  }
  for (int h = 1; 3 * h * h <= w.q && 6 * h <= w.t; ++h) {
    Series a = symmetric_stack_open(h - 1, e_t(3), e_q(3), w);
    Series b = symmetric_stack_open(h, e_t(3), e_q(3), w);
    total += (a * b).mul_term(2, e_q(3 * h * h) + e_t(6 * h));
  }
  return total.finalize();
}

// Fix(H_{3,1}): r^2-symmetry with a cell-centered mirror; the decoration and
// its mirror image are determined by one directed convex polyomino.
//   R1 = sum_h pref(h) sum_l sum_{r=1}^h q^(-3l) (DC_{0,r,l}+DC_{1,r,l})(q^6,t^6)
//   R3 = sum_h pref(h) TO_{h-1}(t^6, q^6)
inline Series fix_h31(const Request& req, const DirectedSeries& dcs) {
  Bounds w = req.bounds();
  detail::ScaledDirected dc6(dcs, 6);
  Series r1 = Series::zero(w);
  for (int h = 1; 3 * h * (h - 1) + 1 <= w.q && 6 * h - 3 <= w.t; ++h) {
    Exponents pre = e_q(3 * h * (h - 1) + 1) + e_t(6 * h - 3);
    for (int l = 1; pre.q() + 3 * l <= w.q; ++l) {
      Series sum = dc6.prefix(0, h, l) + dc6.prefix(1, h, l);
      Series summand = sum.mul_term(1, pre + e_q(-3 * l));
      require_window(summand, w, "fix_h31");
      r1 += summand.truncated(w);
    }
  }
  Series r3 = fix_rot60(req);  // same decorated-hexagon sum
  return (r1.mul_scalar(2) + r3).finalize();
}

inline Series fix_h31(const Request& req) {
  return fix_h31(req, build_directed(req.bq / 3 + 3));
}

// ---------------------------------------------------------------------------
// Fix(D_{2,3}) = <r^3, h> = <h, v>: v-symmetric polyominoes whose fundamental
// region K is itself h-symmetric; CS00/HS11/CS11 are the h-symmetric
// analogues of C00/H11/C11.

// HS_11(x,q,u,v,t) at x = 1, by fixed-point iteration of
//   HS11(v) = quvt^3/(1-quvt^2) + qvt^3 HS11(vq)
//             + (t/(qv)) (HS11(vq) - v [v^1]HS11(vq)),
// applied slice-wise in v so the q-shift credit of each slice is kept.
inline Series h_symmetric_oscillation(Bounds w) {
  Series seed = Series::term(1, e_q() + e_u() + e_v() + e_t(3), w) *
                geometric(e_q() + e_u() + e_v() + e_t(2), w);
  auto step = [&](const Series& f) {
    auto fv = slices(f, Var::v);
    Series out = Series::zero(w);
    for (int k = 1; k < static_cast<int>(fv.size()); ++k) {
      // q v t^3 * (v^k slice of F(vq)) = q^(k+1) v^(k+1) t^3 [v^k]F
      out += fv[k].mul_term(1, e_q(k + 1) + Exponents::of(Var::v, k + 1) +
                                   e_t(3)).truncated(w);
      // (t/(qv)) * q^k v^k [v^k]F for k >= 2
      if (k >= 2)
        out += fv[k]
                   .mul_term(1, e_q(k - 1) + Exponents::of(Var::v, k - 1) +
                                    e_t(1))
                   .truncated(w);
    }
    return out;
  };
  Series total = Series::zero(w);
  Series delta = seed;
  for (int it = 0; it <= w.q + 2; ++it) {
    if (delta.is_zero()) return total;
    total += delta;
    delta = step(delta);
  }
  throw series_error("h_symmetric_oscillation: no fixed point within bounds");
}

inline Series fix_d23(const Request& req) {
  Bounds w = req.bounds();
  const Exponents xt = e_t(1);  // x = 1

  // CS00_k = t^(2k) TS_k(xt, q)
  auto cs00 = [&](int k) {
    return symmetric_stack_column(k, xt, e_q(), w).mul_term(1, e_t(2 * k));
  };

  Series hs11 = h_symmetric_oscillation(w);
  auto hs11u = slices(hs11, Var::u);
  const Series zero = Series::zero(w);

  // CS11 = sum_{i>=2} t^(2-2i) CS00_i HS11_{i-1}
  Series cs11 = Series::zero(w);
  for (int i = 2; i <= w.q && 2 * i <= w.t; ++i)
    cs11 += mul_shifted(cs00(i), slice_at(hs11u, i - 1, zero),
                        e_t(2 - 2 * i), w);

  SubstRules doubling{};
  doubling[static_cast<int>(Var::q)] = e_q(2);
  doubling[static_cast<int>(Var::t)] = e_t(2);
  auto cs11v = slices(cs11, Var::v);
  Series total = Series::zero(w);
  for (int i = 1; i <= w.q && 2 * i + 1 <= w.t; ++i) {
    Series piece = cs00(i) + slice_at(cs11v, i, zero);
    Series summand = piece.substitute(doubling).mul_term(
        1, e_q(-i) + e_t(-(2 * i + 1)));
    require_window(summand, w, "fix_d23");
    total += summand.truncated(w);
  }
  return total.finalize();
}

}  // namespace hexpoly
