#pragma once

// Assembly of the convex-polyomino series C(x,q,v,t) from the phase blocks.
// C_ij is the class of convex polyominoes whose last column is in state
// (i,j); a polyomino is a chain of blocks glued at consecutive columns.
//
// Gluing bookkeeping: when a block's first column [lo',hi'] follows the
// previous last column [lo,hi], the joined half-perimeter is the sum of the
// two standalone half-perimeters minus the contact count
//   |[lo,hi] cap [lo',hi']| + |[lo,hi] cap [lo'+1,hi'+1]|,
// so every matching sum below divides by the t-power of its junction's
// contact.  The junction transitions allowed by the phase rules determine
// which (prefix column k, block column m) pairs occur:
//
//   into (1,0): upper wd, lower any growth   -> m >= k, contact 2k-1
//   into (1,1): upper wq/wd, lower weak      -> m in {k, k-1}, contact 2m-1 / 2m
//   into (0,2): upper any growth, lower sd   -> overlap j in [1, k-1], any
//               m >= j, contact 2j-1
//   into (1,2): upper wg (only from upper-1 prefixes) or wd; lower sd, or
//               wd/sd from (0,2) prefixes    -> contact 2m-1 / 2m
//   into (2,2): upper sd (wd from upper-2 prefixes); lower sd (wd/sd from
//               lower-2 prefixes); the block sits strictly inside, giving
//               k-m-1-(margins) placements of equal contact 2m
//
// The (2,2) case admits every prefix class, including (1,2) and (2,1); the
// per-state oracle counts pin these matching rules.

#include <vector>

#include "hexpoly/blocks.hpp"

namespace hexpoly {

// slices(f, w)[n] = [w^n] f, computed in one pass.
inline std::vector<Series> slices(const Series& f, Var w) {
  int mx = std::max(0, f.max_exp(w));
  std::vector<Series> out(mx + 1, Series::zero(f.bounds()));
  for (const auto& [m, c] : f.terms()) out[m[w]].accumulate(c, m.with(w, 0));
  return out;
}

inline const Series& slice_at(const std::vector<Series>& s, int n,
                              const Series& zero) {
  return (n >= 0 && n < static_cast<int>(s.size())) ? s[n] : zero;
}

struct ConvexSeries {
  Request req;
  // C_01 = C_10, C_20 = C_02 and C_21 = C_12 as series (reflections).
  Series c00, c10, c11, c02, c12, c22;

  // C = C_00 + 2C_10 + C_11 + 2C_02 + 2C_12 + C_22
  Series total() const {
    return c00 + c10.mul_scalar(2) + c11 + c02.mul_scalar(2) +
           c12.mul_scalar(2) + c22;
  }
  // K = C_00 + 2C_10 + C_11: admissible left fundamental regions of a
  // vertically symmetric polyomino.
  Series k_mirror() const { return c00 + c10.mul_scalar(2) + c11; }
  // K = C_00 + C_01 + C_10 + C_11 + C_02 + C_20: fundamental regions of a
  // half-turn symmetric polyomino.
  Series k_half_turn() const {
    return c00 + c10.mul_scalar(2) + c11 + c02.mul_scalar(2);
  }
};

inline ConvexSeries build_convex(const Request& req) {
  const Bounds w = req.bounds();
  const Series zero = Series::zero(w);

  Series h10 = block_h10(req);
  Series h11 = block_h11(req);
  Series h02 = block_h02(req);
  Series h12 = h10.swap_uv();
  Series h22 = block_h22(req);

  ConvexSeries cs{req, Series(w), Series(w), Series(w),
                  Series(w), Series(w), Series(w)};
  cs.c00 = block_h00(req);

  auto h10u = slices(h10, Var::u);
  auto h11u = slices(h11, Var::u);
  auto h02u = slices(h02, Var::u);
  auto h12u = slices(h12, Var::u);
  auto h22u = slices(h22, Var::u);
  auto c00v = slices(cs.c00, Var::v);

  // C_10 = sum_n (sum_{k=1}^n t^(1-2k) C_{00,k}) H_{10,n}
  {
    Series prefix = zero;
    for (int n = 1; n < static_cast<int>(h10u.size()); ++n) {
      if (n < static_cast<int>(c00v.size()))
        prefix += c00v[n].mul_term(1, e_t(1 - 2 * n));
      cs.c10 += mul_shifted(prefix, h10u[n], Exponents{}, w);
    }
  }
  auto c10v = slices(cs.c10, Var::v);

  // C_11 = C_00 (x) H_11 + 2 C_10 (x) H_11:
  //   C_00 (x) H_11 = sum_{n>=2} t^(2-2n) C_{00,n} H_{11,n-1}
  //   C_10 (x) H_11 = sum_{n>=1} t^(1-2n) C_{10,n} H_{11,n}
  //                 + sum_{n>=2} t^(2-2n) C_{10,n} H_{11,n-1}
  {
    for (int n = 2; n < static_cast<int>(c00v.size()); ++n)
      cs.c11 +=
          mul_shifted(c00v[n], slice_at(h11u, n - 1, zero), e_t(2 - 2 * n), w);
    for (int n = 1; n < static_cast<int>(c10v.size()); ++n) {
      Series part =
          mul_shifted(c10v[n], slice_at(h11u, n, zero), e_t(1 - 2 * n), w);
      if (n >= 2)
        part += mul_shifted(c10v[n], slice_at(h11u, n - 1, zero),
                            e_t(2 - 2 * n), w);
      cs.c11 += part.mul_scalar(2);
    }
  }

  // C_02 = (C_00 + C_01) (x) H_02
  //      = sum_{j>=1} t^(1-2j) (sum_{k>j} (C00+C01)_k) (sum_{m>=j} H_{02,m})
  {
    std::vector<Series> pref(std::max(c00v.size(), c10v.size()), zero);
    for (size_t k = 0; k < pref.size(); ++k)
      pref[k] = slice_at(c00v, static_cast<int>(k), zero) +
                slice_at(c10v, static_cast<int>(k), zero);
    // suffix sums over k > j and m >= j, descending j
    Series pref_tail = zero, block_tail = zero;
    int jmax = static_cast<int>(std::max(pref.size(), h02u.size()));
    for (int j = jmax - 1; j >= 1; --j) {
      if (j + 1 < static_cast<int>(pref.size())) pref_tail += pref[j + 1];
      block_tail += slice_at(h02u, j, zero);
      cs.c02 += mul_shifted(pref_tail, block_tail, e_t(1 - 2 * j), w);
    }
  }
  auto c11v = slices(cs.c11, Var::v);
  auto c02v = slices(cs.c02, Var::v);

  // C_12 = (C_00 + C_01 + C_10 + C_11 + C_02) (x) H_12:
  //   upper wd from any prefix, lower sd (wd/sd from (0,2)):
  //     sum_m t^(-2m) [ sum_{k>=m+2} (C00+C01+C10+C11)_k
  //                     + sum_{k>=m+1} C02_k ] H_{12,m}
  //   upper wg from oscillating-upper prefixes, lower sd:
  //     sum_m t^(1-2m) [ sum_{k>=m+1} (C10+C11)_k ] H_{12,m}
  {
    size_t kmax = std::max({c00v.size(), c10v.size(), c11v.size(),
                            c02v.size(), h12u.size() + 2});
    std::vector<Series> all_k(kmax, zero), osc_k(kmax, zero), c02_k(kmax, zero);
    for (size_t k = 0; k < kmax; ++k) {
      int ik = static_cast<int>(k);
      osc_k[k] = slice_at(c10v, ik, zero) + slice_at(c11v, ik, zero);
      // C00 + C01 + C10 + C11 with C01 = C10 as series
      all_k[k] = slice_at(c00v, ik, zero) +
                 slice_at(c10v, ik, zero).mul_scalar(2) +
                 slice_at(c11v, ik, zero);
      c02_k[k] = slice_at(c02v, ik, zero);
    }
    auto tail = [&](const std::vector<Series>& xs, int from) {
      Series acc = zero;
      for (size_t k = std::max(from, 0); k < xs.size(); ++k) acc += xs[k];
      return acc;
    };
    for (int m = 1; m < static_cast<int>(h12u.size()); ++m) {
      Series wd_pref = tail(all_k, m + 2) + tail(c02_k, m + 1);
      cs.c12 += mul_shifted(wd_pref, h12u[m], e_t(-2 * m), w);
      cs.c12 += mul_shifted(tail(osc_k, m + 1), h12u[m], e_t(1 - 2 * m), w);
    }
  }
  auto c12v = slices(cs.c12, Var::v);

  // C_22 = (all eight prefix classes) (x) H_22, the block strictly inside:
  //   sum_m t^(-2m) [ sum_k (k-m-2) (C00+C01+C10+C11)_k
  //                   + sum_k (k-m-1) (C02+C20+C12+C21)_k ] H_{22,m}
  // with nonpositive multiplicities dropped.
  {
    size_t kmax = std::max(
        {c00v.size(), c10v.size(), c11v.size(), c02v.size(), c12v.size()});
    for (int m = 1; m < static_cast<int>(h22u.size()); ++m) {
      Series weighted = zero;
      for (size_t k = 0; k < kmax; ++k) {
        int ik = static_cast<int>(k);
        long long w_soft = ik - m - 2;  // upper and lower margins both strong
        long long w_edge = ik - m - 1;  // one side may be weak
        if (w_soft > 0)
          weighted += (slice_at(c00v, ik, zero) +
                       slice_at(c10v, ik, zero).mul_scalar(2) +
                       slice_at(c11v, ik, zero))
                          .mul_scalar(w_soft);
        if (w_edge > 0)
          weighted += (slice_at(c02v, ik, zero) + slice_at(c12v, ik, zero))
                          .mul_scalar(2 * w_edge);
      }
      cs.c22 += mul_shifted(weighted, h22u[m], e_t(-2 * m), w);
    }
  }

  cs.c00.finalize();
  cs.c10.finalize();
  cs.c11.finalize();
  cs.c02.finalize();
  cs.c12.finalize();
  cs.c22.finalize();
  return cs;
}

}  // namespace hexpoly
