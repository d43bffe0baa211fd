#pragma once

// Symmetric powers of the standard SL2 module: the unitriangular shear
// matrices U+^s and U-^s, their right action on 4-tuples of Laurent series in
// 1/t over Z/q, the valuation regions A_i, A_i°, E, B, S of the 4-tuples,
// randomized checks of how the shears move those regions, and the
// bookkeeping that adds the resulting mass bounds up to 22C.

#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "kmt/error.hpp"
#include "kmt/matrix_group.hpp"
#include "kmt/mod_ring.hpp"
#include "kmt/report.hpp"
#include "kmt/rng.hpp"

namespace kmt {

class BadN : public InputError {
 public:
  explicit BadN(int n) : InputError("symmetric power size must be >= 2, got " + std::to_string(n)) {}
};

class UnsupportedS : public InputError {
 public:
  UnsupportedS() : InputError("shear parameter must be one of +1, -1, +t, -t") {}
};

class ZeroVector : public InputError {
 public:
  ZeroVector() : InputError("the zero vector lies in no region") {}
};

class BadModulus : public InputError {
 public:
  explicit BadModulus(int q)
      : InputError("modulus must be coprime to 6, got " + std::to_string(q)) {}
};

enum class Orientation { Upper, Lower };

inline const char* to_string(Orientation o) { return o == Orientation::Upper ? "upper" : "lower"; }

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

/// coeff * s^power
struct ShearEntry {
  long long coeff = 0;
  int power = 0;
  friend bool operator==(const ShearEntry&, const ShearEntry&) = default;
};

/// U+^s has row k equal to the coefficients of (1 + s)^(n-1-k) shifted right
/// by k; U-^s has row k equal to the reversed coefficients of (s + 1)^k.
class ShearMatrix {
 public:
  ShearMatrix(int n, Orientation o) : n_(n), o_(o) {
    if (n < 2) throw BadN(n);
  }

  int size() const noexcept { return n_; }
  Orientation orientation() const noexcept { return o_; }

  ShearEntry entry(int k, int i) const {
    if (o_ == Orientation::Upper)
      return i < k ? ShearEntry{} : ShearEntry{binomial(n_ - 1 - k, i - k), i - k};
    return i > k ? ShearEntry{} : ShearEntry{binomial(k, k - i), k - i};
  }

  ModMatrix evaluate(int q, long long s) const {
    const ModRing ring(q);
    const int sv = ring.norm(s);
    ModMatrix m(n_, q);
    for (int k = 0; k < n_; ++k)
      for (int i = 0; i < n_; ++i) {
        const ShearEntry e = entry(k, i);
        m.set(k, i, ring.mul(ring.norm(e.coeff), ring.pow(sv, e.power)));
      }
    return m;
  }

 private:
  int n_;
  Orientation o_;
};

inline ShearMatrix shear(int n, Orientation o) { return ShearMatrix(n, o); }

/// Matrix of g in GL2(Z/q) on homogeneous polynomials of degree n-1, basis
/// x^(n-1-j) y^j indexed by j, acting by x -> g00 x + g01 y, y -> g10 x + g11 y.
/// Row k holds the image of basis vector k.
inline ModMatrix sym_power_oracle(int n, const ModMatrix& g) {
  if (n < 2) throw BadN(n);
  if (g.size() != 2) throw InputError("sym_power_oracle expects a 2x2 matrix");
  const ModRing& ring = g.ring();
  const int q = ring.modulus();
  // Polynomials are coefficient vectors indexed by the power of y.
  const auto times = [&](const std::vector<int>& p, int cx, int cy) {
    std::vector<int> r(p.size() + 1, 0);
    for (std::size_t j = 0; j < p.size(); ++j) {
      r[j] = ring.add(r[j], ring.mul(p[j], cx));
      r[j + 1] = ring.add(r[j + 1], ring.mul(p[j], cy));
    }
    return r;
  };
  ModMatrix m(n, q);
  for (int k = 0; k < n; ++k) {
    std::vector<int> p{1};
    for (int a = 0; a < n - 1 - k; ++a) p = times(p, g(0, 0), g(0, 1));
    for (int b = 0; b < k; ++b) p = times(p, g(1, 0), g(1, 1));
    for (int i = 0; i < n; ++i) m.set(k, i, p[i]);
  }
  return m;
}

/// Finitely supported Laurent series sum c_e t^e over Z/q. The valuation is
/// the largest e with c_e != 0.
class LaurentSeries {
 public:
  static constexpr int neg_inf = INT_MIN;

  explicit LaurentSeries(int q) : ring_(q) {}

  static LaurentSeries monomial(int q, long long coeff, int degree) {
    LaurentSeries s(q);
    s.set(degree, coeff);
    return s;
  }

  int modulus() const noexcept { return ring_.modulus(); }
  bool is_zero() const noexcept { return c_.empty(); }
  int valuation() const noexcept { return c_.empty() ? neg_inf : lo_ + static_cast<int>(c_.size()) - 1; }
  int leading_coeff() const noexcept { return c_.empty() ? 0 : c_.back(); }
  int coeff(int e) const noexcept {
    return (c_.empty() || e < lo_ || e > valuation()) ? 0 : c_[e - lo_];
  }

  void set(int e, long long v) {
    const int x = ring_.norm(v);
    if (c_.empty()) {
      if (x == 0) return;
      lo_ = e;
      c_.assign(1, x);
      return;
    }
    if (e < lo_) {
      c_.insert(c_.begin(), lo_ - e, 0);
      lo_ = e;
    } else if (e > valuation()) {
      c_.resize(e - lo_ + 1, 0);
    }
    c_[e - lo_] = x;
    trim();
  }

  /// t^k * this
  LaurentSeries shifted(int k) const {
    LaurentSeries r = *this;
    r.lo_ += k;
    return r;
  }

  LaurentSeries scaled(long long a) const {
    LaurentSeries r = *this;
    const int x = ring_.norm(a);
    for (int& v : r.c_) v = ring_.mul(v, x);
    r.trim();
    return r;
  }

  LaurentSeries operator+(const LaurentSeries& o) const {
    if (o.c_.empty()) return *this;
    if (c_.empty()) return o;
    LaurentSeries r(ring_.modulus());
    r.lo_ = std::min(lo_, o.lo_);
    r.c_.assign(std::max(valuation(), o.valuation()) - r.lo_ + 1, 0);
    for (std::size_t k = 0; k < c_.size(); ++k) r.c_[lo_ - r.lo_ + k] = c_[k];
    for (std::size_t k = 0; k < o.c_.size(); ++k) {
      int& v = r.c_[o.lo_ - r.lo_ + k];
      v = ring_.add(v, o.c_[k]);
    }
    r.trim();
    return r;
  }

  LaurentSeries operator-() const { return scaled(-1); }

  /// Leading monomial, zero for the zero series.
  LaurentSeries leading_term() const {
    return c_.empty() ? LaurentSeries(ring_.modulus()) : monomial(ring_.modulus(), leading_coeff(), valuation());
  }

  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
    return a.ring_ == b.ring_ && a.c_ == b.c_ && (a.c_.empty() || a.lo_ == b.lo_);
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (int e = valuation(); e >= lo_; --e) {
      const int v = coeff(e);
      if (v == 0) continue;
      if (!s.empty()) s += "+";
      s += std::to_string(v) + "t^" + std::to_string(e);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    if (k) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(k));
      lo_ += static_cast<int>(k);
    }
  }

  ModRing ring_;
  int lo_ = 0;
  std::vector<int> c_;  ///< c_[k] is the coefficient of t^(lo_ + k)
};

using SeriesVec = std::array<LaurentSeries, 4>;

inline SeriesVec zero_vec(int q) { return {LaurentSeries(q), LaurentSeries(q), LaurentSeries(q), LaurentSeries(q)}; }

inline std::string to_string(const SeriesVec& v) {
  std::string s = "(";
  for (int i = 0; i < 4; ++i) s += (i ? "; " : "") + v[i].str();
  return s + ")";
}

/// s = sign * t^t_power with sign in {1, -1} and t_power in {0, 1}.
struct ShearParam {
  int sign = 1;
  int t_power = 0;
};

inline std::string to_string(const ShearParam& p) {
  return std::string(p.sign < 0 ? "-" : "") + (p.t_power ? "t" : "1");
}

/// Row vector times U^s: component i is sum_k v_k U[k][i].
inline SeriesVec act_row(const SeriesVec& v, Orientation o, ShearParam s) {
  if ((s.sign != 1 && s.sign != -1) || (s.t_power != 0 && s.t_power != 1)) throw UnsupportedS();
  const ShearMatrix m(4, o);
  const int q = v[0].modulus();
  SeriesVec out = zero_vec(q);
  for (int i = 0; i < 4; ++i)
    for (int k = 0; k < 4; ++k) {
      const ShearEntry e = m.entry(k, i);
      if (e.coeff == 0 || v[k].is_zero()) continue;
      const long long c = (e.power % 2 && s.sign < 0) ? -e.coeff : e.coeff;
      out[i] = out[i] + v[k].scaled(c).shifted(s.t_power * e.power);
    }
  return out;
}

struct RegionTag {
  std::array<bool, 4> a{};       ///< maximal valuation attained at component i
  std::array<bool, 4> a_open{};  ///< and only there
  bool e = false;                ///< in A_1 with v(x_1) = v(x_4)
  bool b = false;                ///< in A_2 and A_3 but neither A_1 nor A_4
  bool s = false;                ///< in B with L(t^3 x_1) + L(t^2 x_2) = 0
};

namespace detail {

/// L(t^k1 x) + L(t^k2 y) == 0, monomials of equal degree adding coefficients.
inline bool leading_terms_cancel(const LaurentSeries& x, int kx, long long cx, const LaurentSeries& y,
                                 int ky, long long cy) {
  const LaurentSeries lx = x.leading_term().shifted(kx).scaled(cx);
  const LaurentSeries ly = y.leading_term().shifted(ky).scaled(cy);
  return (lx + ly).is_zero();
}

}  // namespace detail

inline RegionTag classify_region(const SeriesVec& v) {
  int top = LaurentSeries::neg_inf;
  for (const LaurentSeries& x : v) top = std::max(top, x.valuation());
  if (top == LaurentSeries::neg_inf) throw ZeroVector();
  RegionTag t;
  int count = 0;
  for (int i = 0; i < 4; ++i) count += (t.a[i] = v[i].valuation() == top);
  for (int i = 0; i < 4; ++i) t.a_open[i] = t.a[i] && count == 1;
  t.e = t.a[0] && t.a[3];
  t.b = t.a[1] && t.a[2] && !t.a[0] && !t.a[3];
  t.s = t.b && detail::leading_terms_cancel(v[0], 3, 1, v[1], 2, 1);
  return t;
}

enum class Region { A1, A4, A1Open, A4Open, A1NotOpen, A4NotOpen, A2OpenOrA3Open, E, BNotS, S, A3OpenOrA4 };

inline const char* to_string(Region r) {
  switch (r) {
    case Region::A1: return "A1";
    case Region::A4: return "A4";
    case Region::A1Open: return "A1°";
    case Region::A4Open: return "A4°";
    case Region::A1NotOpen: return "A1\\A1°";
    case Region::A4NotOpen: return "A4\\A4°";
    case Region::A2OpenOrA3Open: return "A2°⊔A3°";
    case Region::E: return "E";
    case Region::BNotS: return "B\\S";
    case Region::S: return "S";
    default: return "A3°⊔A4";
  }
}

inline bool in_region(const RegionTag& t, Region r) {
  switch (r) {
    case Region::A1: return t.a[0];
    case Region::A4: return t.a[3];
    case Region::A1Open: return t.a_open[0];
    case Region::A4Open: return t.a_open[3];
    case Region::A1NotOpen: return t.a[0] && !t.a_open[0];
    case Region::A4NotOpen: return t.a[3] && !t.a_open[3];
    case Region::A2OpenOrA3Open: return t.a_open[1] || t.a_open[2];
    case Region::E: return t.e;
    case Region::BNotS: return t.b && !t.s;
    case Region::S: return t.s;
    default: return t.a_open[2] || t.a[3];
  }
}

struct TransportStep {
  Orientation orientation;
  ShearParam s;
  Region target;
};

struct TransportFact {
  std::string name;
  Region source;
  std::vector<TransportStep> steps;
};

inline std::vector<TransportFact> transport_facts() {
  using O = Orientation;
  using R = Region;
  const ShearParam one{1, 0}, t{1, 1};
  return {
      {"U+^1: A2°⊔A3° -> A4\\A4°", R::A2OpenOrA3Open, {{O::Upper, one, R::A4NotOpen}}},
      {"U-^1: A2°⊔A3° -> A1\\A1°", R::A2OpenOrA3Open, {{O::Lower, one, R::A1NotOpen}}},
      {"U+^t U-^1: A1 -> A4° -> E", R::A1, {{O::Upper, t, R::A4Open}, {O::Lower, one, R::E}}},
      {"U-^t U+^1: A4 -> A1° -> E", R::A4, {{O::Lower, t, R::A1Open}, {O::Upper, one, R::E}}},
      {"U+^t U-^t: A1 -> A4° -> A1°", R::A1, {{O::Upper, t, R::A4Open}, {O::Lower, t, R::A1Open}}},
      {"U-^t U+^t: A4 -> A1° -> A4°", R::A4, {{O::Lower, t, R::A1Open}, {O::Upper, t, R::A4Open}}},
      {"U+^t: B\\S -> A4°", R::BNotS, {{O::Upper, t, R::A4Open}}},
      {"U+^t: S -> A3°⊔A4", R::S, {{O::Upper, t, R::A3OpenOrA4}}},
  };
}

/// Sampling window: coefficients live on exponents [window_low, 0].
inline constexpr int window_low = -7;

namespace detail {

/// Series with the given valuation (neg_inf for zero): uniform nonzero
/// leading coefficient, uniform coefficients below it down to window_low.
inline LaurentSeries draw_series(std::mt19937_64& rng, int q, int valuation) {
  LaurentSeries x(q);
  if (valuation == LaurentSeries::neg_inf) return x;
  std::uniform_int_distribution<int> any(0, q - 1), nonzero(1, q - 1);
  for (int e = window_low; e < valuation; ++e) x.set(e, any(rng));
  x.set(valuation, nonzero(rng));
  return x;
}

/// Valuation uniform on {zero} and [window_low, hi].
inline int draw_valuation(std::mt19937_64& rng, int hi) {
  std::uniform_int_distribution<int> pick(window_low - 1, hi);
  const int v = pick(rng);
  return v < window_low ? LaurentSeries::neg_inf : v;
}

/// A proposal aimed at `source`; the caller filters with classify_region.
inline SeriesVec propose(std::mt19937_64& rng, int q, Region source) {
  std::uniform_int_distribution<int> top_pick(window_low + 1, 0);
  const int top = top_pick(rng);
  SeriesVec v = zero_vec(q);
  switch (source) {
    case Region::A1:
    case Region::A4: {
      const int lead = source == Region::A1 ? 0 : 3;
      for (int i = 0; i < 4; ++i) v[i] = draw_series(rng, q, i == lead ? top : draw_valuation(rng, top));
      break;
    }
    case Region::A2OpenOrA3Open: {
      const int lead = 1 + static_cast<int>(rng() % 2);
      for (int i = 0; i < 4; ++i) v[i] = draw_series(rng, q, i == lead ? top : draw_valuation(rng, top - 1));
      break;
    }
    case Region::BNotS:
    case Region::S: {
      v[1] = draw_series(rng, q, top);
      v[2] = draw_series(rng, q, top);
      v[3] = draw_series(rng, q, draw_valuation(rng, top - 1));
      if (source == Region::S) {
        v[0] = draw_series(rng, q, top - 1);
        v[0].set(top - 1, -static_cast<long long>(v[1].leading_coeff()));
      } else {
        v[0] = draw_series(rng, q, draw_valuation(rng, top - 1));
      }
      break;
    }
    default:
      throw InputError(std::string("no sampler for region ") + to_string(source));
  }
  return v;
}

}  // namespace detail

/// Draws a vector from `source`: proposals outside it are redrawn.
inline SeriesVec sample_region(std::mt19937_64& rng, int q, Region source) {
  for (int attempt = 0; attempt < 10'000; ++attempt) {
    SeriesVec v = detail::propose(rng, q, source);
    bool nonzero = false;
    for (const LaurentSeries& x : v) nonzero = nonzero || !x.is_zero();
    if (nonzero && in_region(classify_region(v), source)) return v;
  }
  throw InvariantViolation(std::string("sampler never hit region ") + to_string(source));
}

/// Each transport fact on `samples` random source vectors, plus the claim
/// that on B the equations L(t^3 x1) + L(t^2 x2) = 0 and
/// 3 L(t^2 x1) + 2 L(t x2) = 0 never hold together.
inline Report check_transport(int q, long long samples, std::uint64_t seed) {
  if (q < 2) throw InputError("modulus must be >= 2");
  if (std::gcd(q, 6) != 1) throw BadModulus(q);
  if (samples < 1) throw InputError("samples must be >= 1");
  const SeedTree root = SeedTree(seed).child("transport").child(std::to_string(q));
  Report rep;
  Check both = make_check("transport/S-equations-exclusive");
  for (const TransportFact& f : transport_facts()) {
    std::mt19937_64 rng = root.stream(f.name);
    Check c = make_check("transport/" + f.name);
    for (long long k = 0; k < samples; ++k) {
      const SeriesVec start = sample_region(rng, q, f.source);
      if (f.source == Region::BNotS || f.source == Region::S) {
        const bool first = detail::leading_terms_cancel(start[0], 3, 1, start[1], 2, 1);
        const bool second = detail::leading_terms_cancel(start[0], 2, 3, start[1], 1, 2);
        both.record(!(first && second), to_string(start));
      }
      SeriesVec v = start;
      bool ok = true;
      for (const TransportStep& st : f.steps) {
        v = act_row(v, st.orientation, st.s);
        if (!in_region(classify_region(v), st.target)) {
          ok = false;
          break;
        }
      }
      c.record(ok, to_string(start));
    }
    rep.checks.push_back(std::move(c));
  }
  rep.checks.push_back(std::move(both));
  return rep;
}

/// One mass bound mu(set) < coefficient * C. `moves` counts the shears used
/// (each costs C by invariance); `uses` lists bounds it builds on.
struct LedgerBound {
  std::string id;
  std::string set;
  int moves;
  std::vector<std::string> uses;
};

inline std::vector<LedgerBound> ledger_bounds() {
  return {
      {"A1-minus-E", "A1\\E", 2, {}},
      {"A4-minus-E", "A4\\E", 2, {}},
      {"A1-not-open", "A1\\A1°", 2, {}},
      {"A4-not-open", "A4\\A4°", 2, {}},
      {"A2-A3-open", "A2°⊔A3°", 1, {"A1-not-open"}},
      {"A1", "A1", 0, {"A1-minus-E", "A1-not-open"}},
      {"A4", "A4", 0, {"A4-minus-E", "A4-not-open"}},
      {"B-minus-S", "B\\S", 1, {"A4-minus-E"}},
      {"S", "S", 1, {"A2-A3-open", "A4"}},
  };
}

/// The sets whose bounds are summed against total mass 1.
inline std::vector<std::string> ledger_cover() { return {"A1", "A4", "A2-A3-open", "B-minus-S", "S"}; }

/// Coefficient of C in each bound, or InvariantViolation on a cycle or a
/// dangling reference.
inline std::map<std::string, int> ledger_coefficients(const std::vector<LedgerBound>& bounds) {
  std::map<std::string, const LedgerBound*> by_id;
  for (const LedgerBound& b : bounds) by_id[b.id] = &b;
  std::map<std::string, int> coeff;
  std::map<std::string, int> state;  // 1 visiting, 2 done
  const auto visit = [&](const auto& self, const std::string& id) -> int {
    const auto it = by_id.find(id);
    if (it == by_id.end()) throw InvariantViolation("ledger bound '" + id + "' is undefined");
    if (state[id] == 2) return coeff[id];
    if (state[id] == 1) throw InvariantViolation("ledger has a cycle through '" + id + "'");
    state[id] = 1;
    int c = it->second->moves;
    for (const std::string& u : it->second->uses) c += self(self, u);
    state[id] = 2;
    return coeff[id] = c;
  };
  for (const LedgerBound& b : bounds) visit(visit, b.id);
  return coeff;
}

struct LedgerSummary {
  std::vector<int> terms;  ///< coefficients of the covering bounds, in ledger_cover order
  int total = 0;
  boost::rational<long long> c{1, 22};
  boost::rational<long long> mass{0};  ///< total * c
};

inline LedgerSummary ledger_summary() {
  const auto coeff = ledger_coefficients(ledger_bounds());
  LedgerSummary s;
  for (const std::string& id : ledger_cover()) s.terms.push_back(coeff.at(id));
  s.total = std::accumulate(s.terms.begin(), s.terms.end(), 0);
  s.mass = s.c * static_cast<long long>(s.total);
  return s;
}

inline Report ledger_check() {
  Report rep;
  Check dag = make_check("ledger/acyclic");
  std::map<std::string, int> coeff;
  try {
    coeff = ledger_coefficients(ledger_bounds());
    dag.record(true);
  } catch (const InvariantViolation& e) {
    dag.record(false, e.what());
  }
  rep.checks.push_back(dag);
  if (!dag.passed()) return rep;

  const LedgerSummary s = ledger_summary();
  Check terms = make_check("ledger/terms");
  const std::vector<int> printed{4, 4, 3, 3, 8};
  for (std::size_t k = 0; k < printed.size(); ++k)
    terms.record(k < s.terms.size() && s.terms[k] == printed[k],
                 ledger_cover()[k] + " has coefficient " + std::to_string(k < s.terms.size() ? s.terms[k] : -1));
  rep.checks.push_back(terms);

  Check total = make_check("ledger/total-22");
  total.record(s.total == 22, "total " + std::to_string(s.total));
  rep.checks.push_back(total);

  Check mass = make_check("ledger/mass-at-C");
  mass.record(s.mass == boost::rational<long long>(1), "22C = " + std::to_string(s.mass.numerator()) + "/" +
                               std::to_string(s.mass.denominator()));
  rep.checks.push_back(mass);

  // Every nonzero valuation pattern (each component zero, low or high) lands
  // in one of the covering sets.
  Check cover = make_check("ledger/cover");
  const int q = 5;
  for (int code = 1; code < 81; ++code) {
    SeriesVec v = zero_vec(q);
    int c = code;
    for (int i = 0; i < 4; ++i, c /= 3)
      if (c % 3) v[i] = LaurentSeries::monomial(q, 1, c % 3 - 2);
    for (int lead2 : {1, 4}) {
      v[1] = v[1].is_zero() ? v[1] : LaurentSeries::monomial(q, lead2, v[1].valuation());
      const RegionTag t = classify_region(v);
      const bool hit = in_region(t, Region::A1) || in_region(t, Region::A4) ||
                       in_region(t, Region::A2OpenOrA3Open) || in_region(t, Region::BNotS) ||
                       in_region(t, Region::S);
      cover.record(hit, to_string(v));
    }
  }
  rep.checks.push_back(cover);
  return rep;
}

/// Desk checks of the shear matrices for one n over Z/q.
inline Report symrep_report(int n, int q, std::uint64_t seed) {
  if (n < 2) throw BadN(n);
  const ModRing ring(q);
  Report rep;

  Check hom = make_check("symrep/shear-homomorphism");
  Check det = make_check("symrep/unitriangular");
  Check lock = make_check("symrep/oracle-lock");
  for (Orientation o : {Orientation::Upper, Orientation::Lower}) {
    const ShearMatrix m(n, o);
    for (int s = 0; s < q; ++s) {
      const ModMatrix ms = m.evaluate(q, s);
      bool tri = true;
      for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
          const bool off = o == Orientation::Upper ? i < k : i > k;
          if ((k == i && ms(k, i) != 1) || (off && ms(k, i) != 0)) tri = false;
        }
      det.record(tri, std::string(to_string(o)) + " s=" + std::to_string(s));
      ModMatrix g = ModMatrix::identity(2, q);
      g.set(o == Orientation::Upper ? 0 : 1, o == Orientation::Upper ? 1 : 0, s);
      lock.record(sym_power_oracle(n, g) == ms, std::string(to_string(o)) + " s=" + std::to_string(s));
      for (int s2 = 0; s2 < q; ++s2)
        hom.record(ms * m.evaluate(q, s2) == m.evaluate(q, s + s2),
                   std::string(to_string(o)) + " s=" + std::to_string(s) + " s'=" + std::to_string(s2));
    }
  }
  rep.checks.push_back(hom);
  rep.checks.push_back(det);
  rep.checks.push_back(lock);

  Check mult = make_check("symrep/oracle-multiplicative");
  std::mt19937_64 rng = SeedTree(seed).stream("symrep/oracle");
  std::uniform_int_distribution<int> coef(0, q - 1);
  for (int k = 0; k < 100; ++k) {
    ModMatrix g(2, q), h(2, q);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        g.set(i, j, coef(rng));
        h.set(i, j, coef(rng));
      }
    mult.record(sym_power_oracle(n, g) * sym_power_oracle(n, h) == sym_power_oracle(n, g * h),
                "sample " + std::to_string(k));
  }
  rep.checks.push_back(mult);
  return rep;
}

}  // namespace kmt
