#pragma once

// Generating series of the nine growth-phase blocks H_ij, the building units
// of convex polyominoes.  A column's state pair (i,j) describes its upper and
// lower profile phase (0 growth, 1 oscillation, 2 decrease); a block is a
// maximal run of columns in one state.  u marks the first column of a block,
// v its last column (H_00 uses only v, H_22 only u).

#include "hexpoly/stacks.hpp"

namespace hexpoly {

// H_00(x,q,v,t) = T(xt, vt^2, q): both profiles still growing, i.e. a stack
// read right-to-left.
inline Series block_h00(const Request& req) {
  return stack_series(req.xpow(1) + e_t(1), e_v() + e_t(2), e_q(),
                      req.bounds());
}

// H_22(x,q,u,t) = T(xt, ut^2, q)
inline Series block_h22(const Request& req) {
  return stack_series(req.xpow(1) + e_t(1), e_u() + e_t(2), e_q(),
                      req.bounds());
}

// H_10: oscillating upper profile over a growing lower profile.
//   H_10 = sum_{m>=1} x^m q^m u v t^{2m+1} (-qvt;q)_{m-1}
//          / ((qvt^2;q)_{m-1} (1 - q^m u v t^2))
inline Series block_h10(const Request& req) {
  Bounds b = req.bounds();
  Series total = Series::zero(b);
  for (int m = 1;; ++m) {
    Exponents pre = req.xpow(m) + e_q(m) + e_u() + e_v() + e_t(2 * m + 1);
    if (pre.q() > b.q || pre.t() > b.t) break;
    Series summand = pochhammer(-1, e_q() + e_v() + e_t(1), e_q(), m - 1, b) *
                     inv_pochhammer(e_q() + e_v() + e_t(2), e_q(), m - 1, b) *
                     geometric(e_q(m) + e_u() + e_v() + e_t(2), b);
    total += summand.mul_term(1, pre);
  }
  return total;
}

// One unrolling of the column-adding recursion
//   H_10 = xquvt^3/(1-quvt^2) + [xt^2 (1+qvt)/(1-qvt^2)] H_10(x,q,u,vq,t);
// used as a cross-check of the explicit sum.
inline Series block_h10_functional_rhs(const Request& req, const Series& h10) {
  Bounds b = req.bounds();
  SubstRules v_to_vq{};
  v_to_vq[static_cast<int>(Var::v)] = e_v() + e_q();
  Series head = Series::term(1, req.xpow(1) + e_q() + e_u() + e_v() + e_t(3),
                             b) *
                geometric(e_q() + e_u() + e_v() + e_t(2), b);
  Series factor = (Series::one(b) + Series::term(1, e_q() + e_v() + e_t(1), b))
                      .mul_term(1, req.xpow(1) + e_t(2)) *
                  geometric(e_q() + e_v() + e_t(2), b);
  return head + (factor * h10.substitute(v_to_vq)).truncated(b);
}

// The quadruple sum for H_10 (slow; test-window cross-check only):
//   sum_{h>=1} u^h v^h sum_{m>=1} x^m q^{mh}
//   sum_{i=0}^{m-1} v^i q^{binom(i+1,2)} [m-1 choose i]_q
//   sum_{j>=0} v^j q^j t^{2m+2h+i+2j-1} [m-2+j choose j]_q
inline Series block_h10_quadruple(const Request& req) {
  Bounds b = req.bounds();
  Series total = Series::zero(b);
  for (int h = 1; h <= b.q; ++h)
    for (int m = 1; m * h <= b.q; ++m)
      for (int i = 0; i < m; ++i) {
        int qbase = m * h + i * (i + 1) / 2;
        if (qbase > b.q) break;
        Series bin_i = q_binomial(m - 1, i, e_q(), b);
        for (int j = 0; qbase + j <= b.q; ++j) {
          int texp = 2 * m + 2 * h + i + 2 * j - 1;
          if (texp > b.t) break;
          Exponents pre = req.xpow(m) + e_u(h) + e_q(qbase + j) +
                          Exponents::of(Var::v, h + i + j) + e_t(texp);
          total += (bin_i * q_binomial(m - 2 + j, j, e_q(), b))
                       .mul_term(1, pre);
        }
      }
  return total;
}

// H_01 = H_10; H_12 = H_21 = H_10 with u and v exchanged.
inline Series block_h12_from_h10(const Series& h10) { return h10.swap_uv(); }

// H_02 = H_20 = Pa (staircases).
inline Series block_h02(const Request& req) {
  return staircase_functional(req);
}

// H_11: both profiles oscillating.  Decomposed along the diagonal row through
// the first column's lower cell: either that row and everything right of it
// forms a staircase (H_11a) or it is the base of a rectangle of height >= 2
// (H_11b); above and below sit left/right-justified distinct-part partitions.
//
//   H_11a = sum_{i,j>=1} u v Pa_{i,j}(1, q, t x^(1/2)) D_{i-1}(ut,q) D_{j-1}(vt,q)
//   H_11b = sum_{n>=1} x^n q^{2n} u^2 v^2 t^{2n+3} D_{n-1}(ut,q) D_{n-1}(vt,q)
//           / (1 - q^n u v t^2)
//
// Every staircase half-perimeter p is odd, so x^(-1/2) u v Pa(1,q,t x^(1/2))
// is realized termwise as t^p -> x^((p-1)/2) t^p, keeping exponents integral.
inline Series block_h11(const Request& req, const Series& pa_at_x1) {
  Bounds b = req.bounds();
  Series total = Series::zero(b);
  int max_i = pa_at_x1.max_exp(Var::u);
  int max_j = pa_at_x1.max_exp(Var::v);
  for (int i = 1; i <= max_i; ++i) {
    Series row = pa_at_x1.extract(Var::u, i);
    if (row.is_zero()) continue;
    Series d_left = distinct_partitions(i - 1, e_u() + e_t(1), e_q(), b);
    for (int j = 1; j <= max_j; ++j) {
      Series pij = row.extract(Var::v, j);
      if (pij.is_zero()) continue;
      if (req.with_x)
        pij = pij.map_exponents([](const Exponents& m) {
          if (m.t() % 2 == 0)
            throw series_error("block_h11: even staircase half-perimeter");
          return m.with(Var::x, (m.t() - 1) / 2);
        });
      Series d_right = distinct_partitions(j - 1, e_v() + e_t(1), e_q(), b);
      total += (pij * d_left * d_right).mul_term(1, e_u() + e_v());
    }
  }
  for (int n = 1;; ++n) {
    Exponents pre =
        req.xpow(n) + e_q(2 * n) + e_u(2) + e_v(2) + e_t(2 * n + 3);
    if (pre.q() > b.q || pre.t() > b.t) break;
    Series summand = distinct_partitions(n - 1, e_u() + e_t(1), e_q(), b) *
                     distinct_partitions(n - 1, e_v() + e_t(1), e_q(), b) *
                     geometric(e_q(n) + e_u() + e_v() + e_t(2), b);
    total += summand.mul_term(1, pre);
  }
  return total;
}

inline Series block_h11(const Request& req) {
  Request inner = req;
  inner.with_x = false;  // Pa is evaluated at x = 1 inside H_11a
  return block_h11(req, staircase_functional(inner));
}

}  // namespace hexpoly
