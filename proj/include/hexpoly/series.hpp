#pragma once

// Exact truncated multivariate formal power series over arbitrary-precision
// integers, in the fixed variable set {x,q,u,v,s,t}:
//   x marks columns, q area, u first-column size, v last-column size,
//   s is the auxiliary catalytic variable, t the half perimeter.
//
// Every series carries a reliability window (bound_q, bound_t): coefficients
// of terms with q-degree <= bound_q and t-degree <= bound_t are exact, terms
// beyond the window are dropped.  All operations propagate the window
// pessimistically; silent precision loss is the dominant bug class in
// q-series code, so the window is data, not convention.
//
// Laurent (negative) exponents are permitted in intermediate values only; the
// finalize() gate asserts nonnegativity for user-facing results.

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hexpoly {

using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                           boost::multiprecision::et_off>;

enum class Var : int { x = 0, q = 1, u = 2, v = 3, s = 4, t = 5 };

inline constexpr int var_count = 6;
inline constexpr std::array<char, var_count> var_letter = {'x', 'q', 'u',
                                                           'v', 's', 't'};

struct series_error : std::runtime_error {
  explicit series_error(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {
inline int16_t checked16(long long value, const char* ctx) {
  if (value < std::numeric_limits<int16_t>::min() ||
      value > std::numeric_limits<int16_t>::max())
    throw series_error(std::string("exponent overflow in ") + ctx);
  return static_cast<int16_t>(value);
}
}  // namespace detail

// Integer exponents for the six variables; negative entries legal only in
// intermediate Laurent factors.
struct Exponents {
  std::array<int16_t, var_count> e{};

  static Exponents of(Var w, int k) {
    Exponents r;
    r.e[static_cast<int>(w)] = detail::checked16(k, "Exponents::of");
    return r;
  }

  int operator[](Var w) const { return e[static_cast<int>(w)]; }

  int x() const { return e[0]; }
  int q() const { return e[1]; }
  int u() const { return e[2]; }
  int v() const { return e[3]; }
  int s() const { return e[4]; }
  int t() const { return e[5]; }

  Exponents& set(Var w, int k) {
    e[static_cast<int>(w)] = detail::checked16(k, "Exponents::set");
    return *this;
  }
  Exponents& add(Var w, int k) {
    return set(w, (*this)[w] + k);
  }
  Exponents with(Var w, int k) const {
    Exponents r = *this;
    return r.set(w, k);
  }

  friend Exponents operator+(const Exponents& a, const Exponents& b) {
    Exponents r;
    for (int i = 0; i < var_count; ++i)
      r.e[i] = detail::checked16(static_cast<long long>(a.e[i]) + b.e[i],
                                 "exponent addition");
    return r;
  }
  Exponents operator-() const {
    Exponents r;
    for (int i = 0; i < var_count; ++i)
      r.e[i] = detail::checked16(-static_cast<long long>(e[i]), "negation");
    return r;
  }
  Exponents times(int k) const {
    Exponents r;
    for (int i = 0; i < var_count; ++i)
      r.e[i] = detail::checked16(static_cast<long long>(e[i]) * k,
                                 "exponent scaling");
    return r;
  }

  bool nonnegative() const {
    for (int i = 0; i < var_count; ++i)
      if (e[i] < 0) return false;
    return true;
  }
  bool operator==(const Exponents&) const = default;

  // Dump order: lexicographic by (q, t, x, u, v, s).
  static bool dump_less(const Exponents& a, const Exponents& b) {
    auto key = [](const Exponents& m) {
      return std::array<int, 6>{m.q(), m.t(), m.x(), m.u(), m.v(), m.s()};
    };
    return key(a) < key(b);
  }
};

struct ExponentsHash {
  size_t operator()(const Exponents& m) const {
    uint64_t lo = 0, hi = 0;
    std::memcpy(&lo, m.e.data(), 8);
    std::memcpy(&hi, m.e.data() + 4, 4);
    uint64_t h = lo * 0x9e3779b97f4a7c15ULL ^ (hi + 0xbf58476d1ce4e5b9ULL);
    h ^= h >> 31;
    h *= 0x94d049bb133111ebULL;
    h ^= h >> 29;
    return static_cast<size_t>(h);
  }
};

// Reliability window.  Coefficients with eq <= q and et <= t are exact.
struct Bounds {
  int q = 0;
  int t = 0;

  static constexpr int big = 1 << 20;  // "exact within any realistic window"
  static Bounds exact() { return {big, big}; }

  friend Bounds min(const Bounds& a, const Bounds& b) {
    return {std::min(a.q, b.q), std::min(a.t, b.t)};
  }
  bool covers(const Bounds& target) const {
    return q >= target.q && t >= target.t;
  }
  bool operator==(const Bounds&) const = default;
};

// Variable substitution: each variable optionally replaced by a monomial with
// coefficient 1, applied simultaneously.  Targets must have nonnegative
// exponents (every substitution used here is of that shape).
using SubstRules = std::array<std::optional<Exponents>, var_count>;

class Series {
 public:
  using Map = std::unordered_map<Exponents, Int, ExponentsHash>;

  Series() = default;
  explicit Series(Bounds b) : bounds_(b) {}

  static Series zero(Bounds b) { return Series(b); }
  static Series one(Bounds b) { return term(1, Exponents{}, b); }
  static Series term(Int coef, const Exponents& m, Bounds b) {
    Series r(b);
    if (coef != 0 && m.q() <= b.q && m.t() <= b.t) r.terms_.emplace(m, coef);
    return r;
  }

  const Bounds& bounds() const { return bounds_; }
  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Int coeff(const Exponents& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Int(0) : it->second;
  }

  // Add coef * monomial in place (dropped when outside the window).
  void accumulate(const Int& coef, const Exponents& m) {
    if (coef == 0 || m.q() > bounds_.q || m.t() > bounds_.t) return;
    auto [it, fresh] = terms_.try_emplace(m, coef);
    if (!fresh) {
      it->second += coef;
      if (it->second == 0) terms_.erase(it);
    }
  }

  // Restrict the window (dropping newly out-of-window terms).  Never widens.
  Series truncated(Bounds b) const {
    Series r(min(bounds_, b));
    for (const auto& [m, c] : terms_)
      if (m.q() <= r.bounds_.q && m.t() <= r.bounds_.t) r.terms_.emplace(m, c);
    return r;
  }

  Series& operator+=(const Series& o) {
    bounds_ = min(bounds_, o.bounds_);
    for (const auto& [m, c] : o.terms_) {
      if (m.q() > bounds_.q || m.t() > bounds_.t) continue;
      auto [it, fresh] = terms_.try_emplace(m, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    drop_out_of_window();
    return *this;
  }
  Series& operator-=(const Series& o) {
    bounds_ = min(bounds_, o.bounds_);
    for (const auto& [m, c] : o.terms_) {
      if (m.q() > bounds_.q || m.t() > bounds_.t) continue;
      auto [it, fresh] = terms_.try_emplace(m, -c);
      if (!fresh) {
        it->second -= c;
        if (it->second == 0) terms_.erase(it);
      }
    }
    drop_out_of_window();
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  Series operator-() const {
    Series r(bounds_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
  }

  // Cauchy product, truncated to the componentwise-min window.
  friend Series operator*(const Series& a, const Series& b) {
    Series r(min(a.bounds_, b.bounds_));
    const Series& outer = a.size() <= b.size() ? a : b;
    const Series& inner = a.size() <= b.size() ? b : a;
    r.terms_.reserve(inner.size());
    for (const auto& [ma, ca] : outer.terms_) {
      for (const auto& [mb, cb] : inner.terms_) {
        if (ma.q() + mb.q() > r.bounds_.q || ma.t() + mb.t() > r.bounds_.t)
          continue;
        Exponents m = ma + mb;
        auto [it, fresh] = r.terms_.try_emplace(m, ca * cb);
        if (!fresh) {
          it->second += ca * cb;
          if (it->second == 0) r.terms_.erase(it);
        }
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  // Multiply by coef * monomial; the monomial may be Laurent.  The window
  // shifts with the monomial: knowing f up to q^B means knowing f*q^e up to
  // q^(B+e).
  Series mul_term(const Int& coef, const Exponents& m) const {
    Series r({bounds_.q + m.q(), bounds_.t + m.t()});
    if (coef == 0) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + m, c * coef);
    return r;
  }

  Series mul_scalar(const Int& coef) const {
    return mul_term(coef, Exponents{});
  }

  // Coefficient of w^n, as a series no longer involving w.
  Series extract(Var w, int n) const {
    Series r(bounds_);
    for (const auto& [m, c] : terms_)
      if (m[w] == n) r.terms_.emplace(m.with(w, 0), c);
    return r;
  }

  int max_exp(Var w) const {
    int best = std::numeric_limits<int>::min();
    for (const auto& [m, c] : terms_) best = std::max(best, m[w]);
    return terms_.empty() ? -1 : best;
  }
  int min_exp(Var w) const {
    int best = std::numeric_limits<int>::max();
    for (const auto& [m, c] : terms_) best = std::min(best, m[w]);
    return terms_.empty() ? 0 : best;
  }

  // Simultaneous substitution of variables by monomials (coefficient 1).
  // Window propagation: an unknown input term has eq > bound_q or et > bound_t;
  // with nonnegative rule targets its image q-degree is at least
  // (bound+1) * (q-degree of the respective rule image), and likewise for t.
  Series substitute(const SubstRules& rules) const {
    for (const auto& r : rules)
      if (r && !r->nonnegative())
        throw series_error("substitute: rule targets must be nonnegative");
    auto image = [&](Var w) {
      const auto& r = rules[static_cast<int>(w)];
      return r ? *r : Exponents::of(w, 1);
    };
    const Exponents mq = image(Var::q), mt = image(Var::t);
    if (mq.q() < 1 && !terms_.empty())
      throw series_error("substitute: q must map into q");
    auto propagate = [](int bq, int bt, int from_q, int from_t) {
      long long cand = static_cast<long long>(bq + 1) * from_q;
      if (from_t > 0)
        cand = std::min(cand, static_cast<long long>(bt + 1) * from_t);
      return static_cast<int>(std::min<long long>(cand, Bounds::big)) - 1;
    };
    Bounds nb{propagate(bounds_.q, bounds_.t, mq.q(), mt.q()),
              propagate(bounds_.t, bounds_.q, mt.t(), mq.t())};
    Series r(nb);
    for (const auto& [m, c] : terms_) {
      Exponents out;
      for (int i = 0; i < var_count; ++i) {
        if (m.e[i] == 0) continue;
        if (m.e[i] < 0 && rules[i])
          throw series_error("substitute: negative exponent on ruled variable");
        out = out + image(static_cast<Var>(i)).times(m.e[i]);
      }
      if (out.q() > nb.q || out.t() > nb.t) continue;
      auto [it, fresh] = r.terms_.try_emplace(out, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  Series at_one(Var w) const {
    SubstRules rules{};
    rules[static_cast<int>(w)] = Exponents{};
    return substitute(rules);
  }

  Series swap_uv() const {
    Series r(bounds_);
    for (const auto& [m, c] : terms_) {
      Exponents e = m;
      std::swap(e.e[static_cast<int>(Var::u)], e.e[static_cast<int>(Var::v)]);
      r.terms_.emplace(e, c);
    }
    return r;
  }

  // Termwise exponent rewrite that must leave q- and t-degrees unchanged
  // (used for transforms like t^p -> x^((p-1)/2) t^p).
  template <typename F>
  Series map_exponents(F&& f) const {
    Series r(bounds_);
    for (const auto& [m, c] : terms_) {
      Exponents e = f(m);
      if (e.q() != m.q() || e.t() != m.t())
        throw series_error("map_exponents must preserve q,t degrees");
      auto [it, fresh] = r.terms_.try_emplace(e, c);
      if (!fresh) {
        it->second += c;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
    return r;
  }

  bool has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
      if (!m.nonnegative()) return true;
    return false;
  }
  bool has_negative_coeff() const {
    for (const auto& [m, c] : terms_)
      if (c < 0) return true;
    return false;
  }

  // Finalize gate for user-facing series: window nonempty, no Laurent
  // exponents, and (when demanded) no negative coefficients.
  const Series& finalize(bool require_nonneg_coeffs = true) const {
    if (bounds_.q < 0 || bounds_.t < 0)
      throw series_error("finalize: reliability window became negative");
    if (has_negative_exponent())
      throw series_error("finalize: negative exponent in final series");
    if (require_nonneg_coeffs && has_negative_coeff())
      throw series_error("finalize: negative coefficient in final series");
    return *this;
  }

  // Marginal with respect to one variable: degree -> summed coefficient.
  std::map<int, Int> marginal(Var w) const {
    std::map<int, Int> out;
    for (const auto& [m, c] : terms_) out[m[w]] += c;
    for (auto it = out.begin(); it != out.end();)
      it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }

  // Plain-text dump, one term per line, sorted lexicographically by
  // (q, t, x, u, v, s); used by golden tests.
  std::string dump() const {
    std::vector<const Map::value_type*> rows;
    rows.reserve(terms_.size());
    for (const auto& kv : terms_) rows.push_back(&kv);
    std::sort(rows.begin(), rows.end(), [](auto* a, auto* b) {
      return Exponents::dump_less(a->first, b->first);
    });
    std::ostringstream os;
    for (auto* kv : rows) {
      const Exponents& m = kv->first;
      os << kv->second.str() << " x^" << m.x() << " q^" << m.q() << " u^"
         << m.u() << " v^" << m.v() << " s^" << m.s() << " t^" << m.t()
         << '\n';
    }
    return os.str();
  }

 private:
  void drop_out_of_window() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.q() > bounds_.q || it->first.t() > bounds_.t)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  Map terms_;
  Bounds bounds_{};
};

// (a * b) * monomial(shift), computed reliably on the requested window.
// The plain product propagates windows pessimistically, which loses the
// reliability that the gluing sums' Laurent normalizations depend on; here
// the (q,t)-valuations of the stored terms certify that every contribution
// of an out-of-window term would land outside the requested window.  If that
// cannot be certified the caller's window bookkeeping is wrong: hard error.
inline Series mul_shifted(const Series& a, const Series& b,
                          const Exponents& shift, Bounds w) {
  if (a.is_zero() || b.is_zero()) return Series::zero(w);
  auto qval = [](const Series& f) { return f.min_exp(Var::q); };
  auto tval = [](const Series& f) { return f.min_exp(Var::t); };
  bool ok =
      a.bounds().q + qval(b) + shift.q() >= w.q &&
      b.bounds().q + qval(a) + shift.q() >= w.q &&
      a.bounds().t + tval(b) + shift.t() >= w.t &&
      b.bounds().t + tval(a) + shift.t() >= w.t &&
      (a.bounds().q + shift.q() >= w.q || b.bounds().t + shift.t() >= w.t) &&
      (b.bounds().q + shift.q() >= w.q || a.bounds().t + shift.t() >= w.t);
  if (!ok) throw series_error("mul_shifted: window not certifiable");
  Series r = Series::zero(w);
  const Series& outer = a.size() <= b.size() ? a : b;
  const Series& inner = a.size() <= b.size() ? b : a;
  for (const auto& [ma, ca] : outer.terms()) {
    Exponents base = ma + shift;
    for (const auto& [mb, cb] : inner.terms()) {
      if (base.q() + mb.q() > w.q || base.t() + mb.t() > w.t) continue;
      r.accumulate(ca * cb, base + mb);
    }
  }
  return r;
}

inline bool same_terms(const Series& a, const Series& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [m, c] : a.terms())
    if (b.coeff(m) != c) return false;
  return true;
}

// Termwise equality on the intersection of the two windows.
inline bool agree_within_bounds(const Series& a, const Series& b) {
  Bounds w = min(a.bounds(), b.bounds());
  return same_terms(a.truncated(w), b.truncated(w));
}

}  // namespace hexpoly
