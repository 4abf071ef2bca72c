#pragma once

// Basic building-block families: distinct-part partitions, staircase
// (parallelogram) polyominoes, stacks and horizontally symmetric stacks.
//
// Family constructors take the formal variables as monomial arguments so that
// substituted instances (T(xt, ut^2, q), TO_{h-1}(t^6, q^6), ...) are built
// directly in the target variables with exact window bookkeeping.

#include "hexpoly/qseries.hpp"

namespace hexpoly {

inline Exponents e_x(int k = 1) { return Exponents::of(Var::x, k); }
inline Exponents e_q(int k = 1) { return Exponents::of(Var::q, k); }
inline Exponents e_u(int k = 1) { return Exponents::of(Var::u, k); }
inline Exponents e_v(int k = 1) { return Exponents::of(Var::v, k); }
inline Exponents e_s(int k = 1) { return Exponents::of(Var::s, k); }
inline Exponents e_t(int k = 1) { return Exponents::of(Var::t, k); }

// D_m(U, Q) = (1 + U Q)(1 + U Q^2) ... (1 + U Q^m); D_0 = 1.
// Distinct-part partitions with parts bounded by m, U marking the part count.
inline Series distinct_partitions(int m, const Exponents& U,
                                  const Exponents& Q, Bounds b) {
  if (m < 0) throw series_error("distinct_partitions: negative bound");
  Series r = Series::one(b);
  for (int i = 1; i <= m; ++i)
    r *= Series::one(b) + Series::term(1, U + Q.times(i), b);
  return r;
}
inline Series distinct_partitions(int m, const Request& req) {
  return distinct_partitions(m, e_u(), e_q(), req.bounds());
}

// ---------------------------------------------------------------------------
// Stacks (pyramidal stackings viewed sideways; columns strictly shrink)

// TO_n: stacks with first column n, allowing empty cells at both extremities.
// TO_0 = 1, TO_1 = 1 + XQ, TO_n = (2 + X Q^n) TO_{n-1} - TO_{n-2}.
inline Series stack_open(int n, const Exponents& X, const Exponents& Q,
                         Bounds b) {
  if (n < 0) throw series_error("stack_open: negative index");
  Series prev = Series::one(b);  // TO_0
  if (n == 0) return prev;
  Series cur = Series::one(b) + Series::term(1, X + Q, b);  // TO_1
  for (int i = 2; i <= n; ++i) {
    Series next = (Series::one(b).mul_scalar(2) +
                   Series::term(1, X + Q.times(i), b)) *
                      cur -
                  prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}
inline Series stack_open(int n, const Request& req) {
  return stack_open(n, req.xpow(1), e_q(), req.bounds());
}

// T_n = X Q^n TO_{n-1}: stacks whose first column has size n.
inline Series stack_column(int n, const Exponents& X, const Exponents& Q,
                           Bounds b) {
  if (n < 1) throw series_error("stack_column: index must be >= 1");
  return stack_open(n - 1, X, Q, b).mul_term(1, X + Q.times(n));
}

// T_n by the closed double sum
//   T_n = sum_{m=1}^n X^m Q^{n + binom(m,2)}
//         sum_{j=0}^{n-m} [m+j-1 choose m-1]_Q [n-j-2 choose m-2]_Q,
// where the m = 1 layer degenerates to the single term X Q^n (the inner
// bracket [n-j-2 choose -1] vanishes except at the boundary j = n-1).
inline Series stack_column_closed(int n, const Exponents& X,
                                  const Exponents& Q, Bounds b) {
  if (n < 1) throw series_error("stack_column_closed: index must be >= 1");
  Series total = Series::term(1, X + Q.times(n), b);  // m = 1
  for (int m = 2; m <= n; ++m) {
    Exponents pre = X.times(m) + Q.times(n + m * (m - 1) / 2);
    if (pre.q() > b.q || pre.t() > b.t) continue;
    Series inner = Series::zero(b);
    for (int j = 0; j <= n - m; ++j)
      inner += q_binomial(m + j - 1, m - 1, Q, b) *
               q_binomial(n - j - 2, m - 2, Q, b);
    total += inner.mul_term(1, pre);
  }
  return total;
}

// T_n computed by both routes; they must agree termwise.
inline Series stack_column_checked(int n, const Exponents& X,
                                   const Exponents& Q, Bounds b) {
  Series rec = stack_column(n, X, Q, b);
  Series closed = stack_column_closed(n, X, Q, b);
  if (!agree_within_bounds(rec, closed))
    throw series_error("stack_column: closed form and recurrence disagree");
  return rec;
}

// T(X, U, Q) = sum_{m>=1} X^m Q^{binom(m+1,2)} U^m
//              / ((UQ;Q)_{m-1}^2 (1 - U Q^m))
inline Series stack_series(const Exponents& X, const Exponents& U,
                           const Exponents& Q, Bounds b) {
  Series total = Series::zero(b);
  for (int m = 1;; ++m) {
    Exponents pre = X.times(m) + U.times(m) + Q.times(m * (m + 1) / 2);
    if (pre.q() > b.q || pre.t() > b.t) break;
    Series inv = inv_pochhammer(U + Q, Q, m - 1, b);
    Series summand = (inv * inv * geometric(U + Q.times(m), b)).mul_term(1, pre);
    total += summand;
  }
  return total;
}
inline Series stack_series(const Request& req) {
  return stack_series(req.xpow(1), e_u(), e_q(), req.bounds());
}

// ---------------------------------------------------------------------------
// Horizontally symmetric stacks

// TS0_n: TS0_{-1} = TS0_0 = 1, TS0_n = X Q^n TS0_{n-1} + TS0_{n-2}.
inline Series symmetric_stack_open(int n, const Exponents& X,
                                   const Exponents& Q, Bounds b) {
  if (n < -1) throw series_error("symmetric_stack_open: index must be >= -1");
  Series prev = Series::one(b);  // TS0_{-1}
  if (n == -1) return prev;
  Series cur = Series::one(b);  // TS0_0
  for (int i = 1; i <= n; ++i) {
    Series next = cur.mul_term(1, X + Q.times(i)) + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}
inline Series symmetric_stack_open(int n, const Request& req) {
  return symmetric_stack_open(n, req.xpow(1), e_q(), req.bounds());
}

// TS_n = X Q^n TS0_{n-1}
inline Series symmetric_stack_column(int n, const Exponents& X,
                                     const Exponents& Q, Bounds b) {
  if (n < 1) throw series_error("symmetric_stack_column: index must be >= 1");
  return symmetric_stack_open(n - 1, X, Q, b).mul_term(1, X + Q.times(n));
}

// TS(X, U, Q) = sum_{m>=1} X^m U^m Q^{m(m+1)/2} (1 + U Q^m)
//               / ((1-U^2 Q^2)(1-U^2 Q^4)...(1-U^2 Q^{2m}))
inline Series symmetric_stack_series(const Exponents& X, const Exponents& U,
                                     const Exponents& Q, Bounds b) {
  Series total = Series::zero(b);
  for (int m = 1;; ++m) {
    Exponents pre = X.times(m) + U.times(m) + Q.times(m * (m + 1) / 2);
    if (pre.q() > b.q || pre.t() > b.t) break;
    Series denom = Series::one(b);
    for (int i = 1; i <= m; ++i)
      denom *= geometric(U.times(2) + Q.times(2 * i), b);
    Series summand =
        ((Series::one(b) + Series::term(1, U + Q.times(m), b)) * denom)
            .mul_term(1, pre);
    total += summand;
  }
  return total;
}
inline Series symmetric_stack_series(const Request& req) {
  return symmetric_stack_series(req.xpow(1), e_u(), e_q(), req.bounds());
}

// ---------------------------------------------------------------------------
// Staircase (parallelogram) polyominoes

// Pa(v) = xquvt^3/(1-quvt^2) + xqvt^2/((1-qvt^2)(1-qv)) (Pa(1) - Pa(vq));
// solved by fixed-point iteration (adding a column on the right raises the
// q-valuation, so the affine map is a q-adic contraction).
inline Series staircase_functional(const Request& req) {
  Bounds b = req.bounds();
  Exponents x1 = req.xpow(1);
  Series seed = Series::term(1, x1 + e_q() + e_u() + e_v() + e_t(3), b) *
                geometric(e_q() + e_u() + e_v() + e_t(2), b);
  Series factor = Series::term(1, x1 + e_q() + e_v() + e_t(2), b) *
                  geometric(e_q() + e_v() + e_t(2), b) *
                  geometric(e_q() + e_v(), b);
  SubstRules v_to_vq{};
  v_to_vq[static_cast<int>(Var::v)] = e_v() + e_q();

  Series total = Series::zero(b);
  Series delta = seed;
  for (int it = 0; it <= b.q + b.t + 2; ++it) {
    if (delta.is_zero()) return total;
    total += delta;
    delta = factor * (delta.at_one(Var::v) - delta.substitute(v_to_vq));
    delta = delta.truncated(b);
  }
  throw series_error("staircase_functional: no fixed point within bounds");
}

// Pa as a quotient of q-Bessel-type sums:
//   Pa(v) = (J1(1) + J1(v) J0(1) - J1(1) J0(v)) / J0(1)
//   J1(v) = sum_n (-1)^n x^{n+1} v^{n+1} u t^{2n+3} q^{binom(n+2,2)}
//           / ((qvt^2;q)_n (qv;q)_n (1 - q^{n+1} u v t^2))
//   J0(v) = sum_n (-1)^n x^n v^n t^{2n} q^{binom(n+1,2)} / ((qvt^2;q)_n (qv;q)_n)
inline Series staircase_bessel(const Request& req) {
  Bounds b = req.bounds();
  auto j1 = [&](bool v_at_one) {
    Exponents vv = v_at_one ? Exponents{} : e_v();
    Series total = Series::zero(b);
    for (int n = 0;; ++n) {
      Exponents pre = req.xpow(n + 1) + vv.times(n + 1) + e_u() +
                      e_t(2 * n + 3) + e_q((n + 2) * (n + 1) / 2);
      if (pre.q() > b.q || pre.t() > b.t) break;
      Series summand = inv_pochhammer(e_q() + vv + e_t(2), e_q(), n, b) *
                       inv_pochhammer(e_q() + vv, e_q(), n, b) *
                       geometric(e_q(n + 1) + e_u() + vv + e_t(2), b);
      total += summand.mul_term(n % 2 ? -1 : 1, pre);
    }
    return total;
  };
  auto j0 = [&](bool v_at_one) {
    Exponents vv = v_at_one ? Exponents{} : e_v();
    Series total = Series::zero(b);
    for (int n = 0;; ++n) {
      Exponents pre =
          req.xpow(n) + vv.times(n) + e_t(2 * n) + e_q(n * (n + 1) / 2);
      if (pre.q() > b.q || pre.t() > b.t) break;
      Series summand = inv_pochhammer(e_q() + vv + e_t(2), e_q(), n, b) *
                       inv_pochhammer(e_q() + vv, e_q(), n, b);
      total += summand.mul_term(n % 2 ? -1 : 1, pre);
    }
    return total;
  };
  Series j11 = j1(true), j1v = j1(false), j01 = j0(true), j0v = j0(false);
  Series inv = invert_unit(j01);
  return j1v + (j11 * inv) * (Series::one(b) - j0v);
}

// Pa_{i,j}(x,q,t) = [u^i v^j] Pa
inline Series staircase_coefficient(const Series& pa, int i, int j) {
  return pa.extract(Var::u, i).extract(Var::v, j);
}

}  // namespace hexpoly
