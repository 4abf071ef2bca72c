#pragma once

// North-directed convex polyominoes with a diagonal basis, decomposed into
// blocks H_0, H_1, H_2 by the growth phase of the upper profile.  These are
// the decoration units of the rotational symmetry classes; v marks the size
// of the shared/last column, x the number of columns of the decoration, and
// the normalized coefficients DC_{i,r,n}(q,t) strip the baseline half-
// perimeter t^(2r+n-1).

#include <vector>

#include "hexpoly/convex.hpp"

namespace hexpoly {

// H_0(x,q,v) = sum_{l,k>=1} v^l x^k q^{l+k-1} [l+k-2 choose l-1]_q:
// a growth block is identified with a partition with exactly k parts and
// largest part l (weakly increasing column heights ending at l).  The
// exponent is l+k-1, the minimal such area; the rotation symmetry classes
// (and the tables they reproduce) pin this against the off-by-one variant.
inline Series directed_h0(const Exponents& X, const Exponents& V, Bounds b) {
  Series total = Series::zero(b);
  for (int l = 1; l <= b.q + 1; ++l)
    for (int k = 1; l + k - 1 <= b.q; ++k) {
      Exponents pre = V.times(l) + X.times(k) + e_q(l + k - 1);
      if (pre.q() > b.q || pre.t() > b.t) continue;
      total += q_binomial(l + k - 2, l - 1, e_q(), b).mul_term(1, pre);
    }
  return total;
}

// H_1(x,q,u,v) = sum_{l>=1} v^l sum_{m>=0} u^{l+m}
//                sum_{k>=m+1} x^k q^{kl + m(m+1)/2} [k-1 choose m]_q
inline Series directed_h1(const Exponents& X, const Exponents& V, Bounds b) {
  Series total = Series::zero(b);
  for (int l = 1; l <= b.q; ++l)
    for (int m = 0; l * (m + 1) + m * (m + 1) / 2 <= b.q; ++m)
      for (int k = m + 1; k * l + m * (m + 1) / 2 <= b.q; ++k) {
        Exponents pre = V.times(l) + e_u(l + m) + X.times(k) +
                        e_q(k * l + m * (m + 1) / 2);
        if (pre.q() > b.q || pre.t() > b.t) continue;
        total += q_binomial(k - 1, m, e_q(), b).mul_term(1, pre);
      }
  return total;
}

// H_2(x,q,u,v) = sum_{l>=1} v^l ( x q^l u^l
//   + sum_{k>=2} x^k sum_{m>=0} u^{l+k+m-1} q^{k(k+2l-1)/2 + m}
//     [m+k-2 choose k-2]_q )
inline Series directed_h2(const Exponents& X, const Exponents& V, Bounds b) {
  Series total = Series::zero(b);
  for (int l = 1; l <= b.q; ++l) {
    Exponents single = V.times(l) + X + e_q(l) + e_u(l);
    if (single.q() <= b.q && single.t() <= b.t)
      total += Series::term(1, single, b);
    for (int k = 2; k * (k + 2 * l - 1) / 2 <= b.q; ++k)
      for (int m = 0; k * (k + 2 * l - 1) / 2 + m <= b.q; ++m) {
        Exponents pre = V.times(l) + X.times(k) + e_u(l + k + m - 1) +
                        e_q(k * (k + 2 * l - 1) / 2 + m);
        if (pre.q() > b.q || pre.t() > b.t) continue;
        total += q_binomial(m + k - 2, k - 2, e_q(), b).mul_term(1, pre);
      }
  }
  return total;
}

struct DirectedSeries {
  Bounds window;
  Series dc0, dc1, dc2;  // by last-column state of the upper profile

  Series total() const { return dc0 + dc1 + dc2; }
  const Series& at(int i) const { return i == 0 ? dc0 : (i == 1 ? dc1 : dc2); }
};

// DC_0 = (1/t) H_0(xt^2, q, vt^2)
// DC_1 = sum_{m>=1} t^(-m) DC_{0,m+1}(x,q,t) H_{1,m}(xt^2, q, vt)
// DC_2 = sum_{m>=1} sum_{h>=2} t^(-m) (DC_{0,m+h} + DC_{1,m+h}) H_2,m(xt^2,q,vt)
//
// In this native convention a term's t-degree exceeds the polyomino's
// standalone half-perimeter by the number of phase junctions (one when an
// oscillation or decrease part exists, two when both do); that is the right
// bookkeeping for decorations of cell-centered cores.  Vertex-centered cores
// need the standalone half-perimeter itself, obtained by an extra 1/t at
// every junction (standalone_t = true).
//
// All t-degrees here are bounded by twice the q-degree, and the assembly
// divides by t-powers, so the chain is built on an inflated internal t-window
// and consumers re-check coverage.
inline DirectedSeries build_directed(int bq, bool standalone_t = false) {
  Bounds inner{bq, 3 * bq + 3};
  // Every DC term satisfies t <= 2q - 1, so this window loses nothing.
  Bounds w{bq, 2 * bq + 1};
  Exponents xt2 = e_x() + e_t(2), vt2 = e_v() + e_t(2), vt1 = e_v() + e_t(1);

  DirectedSeries dc{w, Series(w), Series(w), Series(w)};
  Series dc0_in = directed_h0(xt2, vt2, inner).mul_term(1, e_t(-1));
  Bounds w1 = dc0_in.bounds();
  const int junction = standalone_t ? 1 : 0;

  Series h1 = directed_h1(xt2, vt1, inner);
  auto h1u = slices(h1, Var::u);
  auto dc0v = slices(dc0_in, Var::v);
  const Series zero = Series::zero(inner);
  Series dc1_in = Series::zero(w1);
  for (int m = 1; m < static_cast<int>(h1u.size()); ++m)
    dc1_in += mul_shifted(slice_at(dc0v, m + 1, zero), h1u[m],
                          e_t(-m - junction), w1);

  Series h2 = directed_h2(xt2, vt1, inner);
  auto h2u = slices(h2, Var::u);
  auto dc1v = slices(dc1_in, Var::v);
  for (int m = 1; m < static_cast<int>(h2u.size()); ++m) {
    Series tail = Series::zero(w1);  // sum_{h>=2} (DC0 + DC1)_{m+h}
    int nmax = static_cast<int>(std::max(dc0v.size(), dc1v.size()));
    for (int n = m + 2; n < nmax; ++n)
      tail += slice_at(dc0v, n, zero) + slice_at(dc1v, n, zero);
    dc.dc2 += mul_shifted(tail, h2u[m], e_t(-m - junction), w);
  }
  dc.dc0 = dc0_in.truncated(w);
  dc.dc1 = dc1_in.truncated(w);
  return dc;
}

// DC_{i,n}(x,q,t) = [v^n] DC_i
inline Series directed_coefficient(const DirectedSeries& dc, int i, int n) {
  return dc.at(i).extract(Var::v, n);
}

// DC_{i,r,n}(q,t) = t^(1-2r-n) [x^r][v^n] DC_i
inline Series directed_normalized(const DirectedSeries& dc, int i, int r,
                                  int n) {
  return dc.at(i)
      .extract(Var::v, n)
      .extract(Var::x, r)
      .mul_term(1, e_t(1 - 2 * r - n));
}

}  // namespace hexpoly
