#pragma once

// Quantitative side of the property (T) criterion: smallest ideal index of a
// ring, the nested-radical sequence s_i(m), rank-2 orthogonality bounds and
// the assembled hypothesis certificate.

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <cmath>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/gcm.hpp"
#include "kmt/generating_set.hpp"
#include "kmt/root_system.hpp"

namespace kmt {

using Rational = boost::multiprecision::cpp_rational;

class BadM : public InputError {
 public:
  BadM() : InputError("m must be >= 1 (>= 2 for orthogonality bounds)") {}
};

class InvertibilityUnmet : public InputError {
 public:
  explicit InvertibilityUnmet(int unit)
      : InputError(std::to_string(unit) + " is not invertible in the ring"), unit_(unit) {}
  int unit() const noexcept { return unit_; }

 private:
  int unit_;
};

struct RingSpec;

struct ZmodN {
  long long q;
};
/// Z[1/n!]
struct LocalizedFactorial {
  int n;
};
/// Z[i, 1/n!]
struct GaussianLocalized {
  int n;
};
/// base[t]
struct PolyExtension {
  std::shared_ptr<const RingSpec> base;
};

struct RingSpec {
  std::variant<ZmodN, LocalizedFactorial, GaussianLocalized, PolyExtension> variant;
};

inline std::string to_string(const RingSpec& r) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZmodN>) return "Z/" + std::to_string(v.q);
        else if constexpr (std::is_same_v<T, LocalizedFactorial>) return "Zloc!" + std::to_string(v.n);
        else if constexpr (std::is_same_v<T, GaussianLocalized>) return "Zi!" + std::to_string(v.n);
        else return "poly(" + to_string(*v.base) + ")";
      },
      r.variant);
}

namespace detail {

class RingParser {
 public:
  explicit RingParser(const std::string& s) : s_(s) {}

  RingSpec parse() {
    RingSpec r = spec();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(1, static_cast<int>(pos_) + 1, "ring spec: " + what);
  }

  bool eat(const std::string& tok) {
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }

  long long number(long long min) {
    const std::size_t start = pos_;
    long long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      if (v > 1'000'000'000'000'000LL) fail("number too large");
      v = v * 10 + (s_[pos_++] - '0');
    }
    if (pos_ == start) fail("expected a number");
    if (v < min) {
      pos_ = start;
      fail("number must be >= " + std::to_string(min));
    }
    return v;
  }

  RingSpec spec() {
    if (eat("poly(")) {
      RingSpec inner = spec();
      if (!eat(")")) fail("expected ')'");
      return {PolyExtension{std::make_shared<const RingSpec>(std::move(inner))}};
    }
    if (eat("Zloc!")) return {LocalizedFactorial{static_cast<int>(number(1))}};
    if (eat("Zi!")) return {GaussianLocalized{static_cast<int>(number(1))}};
    if (eat("Z/")) return {ZmodN{number(2)}};
    fail("expected Z/q, Zloc!n, Zi!n or poly(...)");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

inline bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

inline long long least_prime_above(long long n, int residue_mod4 = -1) {
  for (long long p = n + 1;; ++p)
    if (is_prime(p) && (residue_mod4 < 0 || p % 4 == residue_mod4)) return p;
}

}  // namespace detail

/// Grammar: "Z/q" (q >= 2), "Zloc!n", "Zi!n" (n >= 1), "poly(SPEC)".
inline RingSpec parse_ring_spec(const std::string& text) { return detail::RingParser(text).parse(); }

/// Smallest index of a proper ideal. For Z[i, 1/n!] the residue fields have
/// size p (p = 1 mod 4, or p = 2) or p^2 (p = 3 mod 4) for primes p > n.
inline BigInt min_ideal_index(const RingSpec& r) {
  return std::visit(
      [](const auto& v) -> BigInt {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZmodN>) {
          for (long long p = 2; p * p <= v.q; ++p)
            if (v.q % p == 0) return p;
          return v.q;
        } else if constexpr (std::is_same_v<T, LocalizedFactorial>) {
          return detail::least_prime_above(v.n);
        } else if constexpr (std::is_same_v<T, GaussianLocalized>) {
          if (v.n < 2) return 2;
          const BigInt split = detail::least_prime_above(v.n, 1);
          const BigInt inert = detail::least_prime_above(v.n, 3);
          return split < inert * inert ? split : BigInt(inert * inert);
        } else {
          return min_ideal_index(*v.base);
        }
      },
      r.variant);
}

/// Whether the integer k >= 1 is a unit of the ring.
inline bool is_unit(const RingSpec& r, int k) {
  return std::visit(
      [k](const auto& v) -> bool {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, ZmodN>) {
          return std::gcd(static_cast<long long>(k), v.q) == 1;
        } else if constexpr (std::is_same_v<T, PolyExtension>) {
          return is_unit(*v.base, k);
        } else {
          int rest = k;
          for (int p = 2; p <= rest; ++p)
            while (rest % p == 0) {
              if (p > v.n) return false;
              rest /= p;
            }
          return true;
        }
      },
      r.variant);
}

/// s_0 = 0, s_i = sqrt(s_{i-1} + 1/m).
inline double s_sequence(double m, int i) {
  if (!(m >= 1)) throw BadM();
  if (i < 0 || i > 8) throw InputError("recursion index must lie in [0, 8]");
  double s = 0;
  for (int k = 0; k < i; ++k) s = std::sqrt(s + 1.0 / m);
  return s;
}

/// Exact sign of s_i(m) - x.
inline int compare_s(const BigInt& m, int i, const Rational& x) {
  if (m < 1) throw BadM();
  if (i == 0) return x > 0 ? -1 : (x == 0 ? 0 : 1);
  if (x <= 0) return 1;
  return compare_s(m, i - 1, x * x - Rational(1, m));
}

enum class RankTwoType { A1xA1, A2, B2, G2 };

inline const char* to_string(RankTwoType t) {
  switch (t) {
    case RankTwoType::A1xA1: return "A1xA1";
    case RankTwoType::A2: return "A2";
    case RankTwoType::B2: return "B2";
    default: return "G2";
  }
}

/// Type of the rank-2 diagram {i, j}: a_ij * a_ji = 0, 1, 2, 3.
inline RankTwoType rank_two_type(const Gcm& g, int i, int j) {
  switch (g(i, j) * g(j, i)) {
    case 0: return RankTwoType::A1xA1;
    case 1: return RankTwoType::A2;
    case 2: return RankTwoType::B2;
    case 3: return RankTwoType::G2;
    default: throw NotTwoSpherical();
  }
}

/// Position in the s-sequence giving the bound: 0, 1, 2, 4.
inline int recursion_depth(RankTwoType t) {
  switch (t) {
    case RankTwoType::A1xA1: return 0;
    case RankTwoType::A2: return 1;
    case RankTwoType::B2: return 2;
    default: return 4;
  }
}

struct UnitFlags {
  bool two = true;
  bool three = true;
};

inline UnitFlags unit_flags(const RingSpec& r) { return {is_unit(r, 2), is_unit(r, 3)}; }

inline double orth_bound(RankTwoType t, double m, UnitFlags units = {}) {
  if (!(m >= 2)) throw BadM();
  if ((t == RankTwoType::B2 || t == RankTwoType::G2) && !units.two) throw InvertibilityUnmet(2);
  if (t == RankTwoType::G2 && !units.three) throw InvertibilityUnmet(3);
  return s_sequence(m, recursion_depth(t));
}

inline double heisenberg_orth_bound(double m) {
  if (!(m >= 2)) throw BadM();
  return 1.0 / std::sqrt(m);
}

enum class BoundVerdict { AllBelow, Boundary, Fails };

inline const char* to_string(BoundVerdict v) {
  switch (v) {
    case BoundVerdict::AllBelow: return "AllBelow";
    case BoundVerdict::Boundary: return "Boundary";
    default: return "Fails";
  }
}

struct PairBound {
  Vec first;
  Vec second;
  RankTwoType type = RankTwoType::A1xA1;
  int depth = 0;      ///< s_depth(m)
  double value = 0;
  int vs_threshold = -1;  ///< exact sign of value - threshold
};

struct BoundReport {
  std::size_t sigma_size = 0;
  Rational threshold;
  std::vector<PairBound> pairs;
  BoundVerdict verdict = BoundVerdict::AllBelow;
};

/// Per-pair bounds for certified pairs, compared exactly with 1/(|Sigma|-1).
inline BoundReport bound_report(const Gcm& g, std::size_t sigma_size,
                                const std::vector<PairCertificate>& certs, const BigInt& m,
                                UnitFlags units) {
  if (m < 2) throw BadM();
  if (sigma_size < 2) throw InputError("Sigma must have at least two members");
  BoundReport rep{sigma_size, Rational(1, static_cast<long long>(sigma_size) - 1), {}, {}};
  const double md = m.convert_to<double>();
  bool boundary = false, fails = false;
  for (const PairCertificate& c : certs) {
    PairBound pb{c.first.root, c.second.root, RankTwoType::A1xA1, 0, 0, -1};
    if (c.kind == CertificateKind::RankTwoEmbed) pb.type = rank_two_type(g, c.i, c.j);
    pb.depth = recursion_depth(pb.type);
    pb.value = orth_bound(pb.type, md, units);
    pb.vs_threshold = compare_s(m, pb.depth, rep.threshold);
    boundary = boundary || pb.vs_threshold == 0;
    fails = fails || pb.vs_threshold > 0;
    rep.pairs.push_back(std::move(pb));
  }
  rep.verdict = fails ? BoundVerdict::Fails : boundary ? BoundVerdict::Boundary : BoundVerdict::AllBelow;
  return rep;
}

struct Hypothesis {
  std::string name;
  bool pass = false;
  std::string detail;
};

enum class CertificateVerdict { Certified, Boundary, NotCertified };

inline const char* to_string(CertificateVerdict v) {
  switch (v) {
    case CertificateVerdict::Certified: return "Certified";
    case CertificateVerdict::Boundary: return "Boundary";
    default: return "NotCertified";
  }
}

struct Certificate {
  std::string ring;
  BigInt m;
  std::optional<BigInt> nA;
  std::vector<Hypothesis> hypotheses;
  std::optional<SigmaSet> sigma;
  std::vector<PairCertificate> pairs;
  std::optional<BoundReport> bounds;
  CertificateVerdict verdict = CertificateVerdict::NotCertified;
};

/// Checks every hypothesis in order and never throws on a failed one; the
/// Sigma and bound stages run whenever their own preconditions hold.
inline Certificate certify_property_T(const Gcm& g, const RingSpec& r) {
  Certificate cert;
  cert.ring = to_string(r);
  cert.m = min_ideal_index(r);
  const int d = g.size();
  const DynkinDiagram dyn(g);
  const int M = g.max_off_diagonal();
  auto add = [&cert](std::string name, bool pass, std::string detail) {
    cert.hypotheses.push_back({std::move(name), pass, std::move(detail)});
    return pass;
  };

  bool ok = add("rank", d >= 2, "d = " + std::to_string(d));
  const bool indecomposable = dyn.components().size() == 1;
  ok = add("indecomposable", indecomposable,
           std::to_string(dyn.components().size()) + " component(s)") && ok;
  const bool two_sph = is_two_spherical(g);
  ok = add("two_spherical", two_sph, two_sph ? "all a_ij a_ji <= 3" : "some a_ij a_ji > 3") && ok;
  ok = add("max_off_diagonal", M <= 3, "M = " + std::to_string(M)) && ok;

  std::string missing;
  for (int k = 2; k <= std::min(M, 3); ++k)
    if (!is_unit(r, k)) missing += (missing.empty() ? "" : ", ") + std::to_string(k);
  const bool units_ok = missing.empty();
  ok = add("units", units_ok,
           units_ok ? "1..M invertible" : "not invertible: " + missing) && ok;

  cert.nA = ideal_index_threshold(d, M);
  const bool index_ok = cert.nA && cert.m >= *cert.nA;
  ok = add("ideal_index", index_ok,
           "m = " + cert.m.str() + (cert.nA ? ", n(A) = " + cert.nA->str() : ", n(A) undefined")) &&
       ok;

  if (d >= 2 && two_sph && !dyn.has_isolated_vertex()) {
    cert.sigma = build_sigma(g);
    const RootSlice slice = enumerate_real_roots(g, certification_cap(*cert.sigma));
    cert.pairs = certify_pairs(*cert.sigma, slice);
    add("sigma", true, "|Sigma| = " + std::to_string(cert.sigma->sigma.size()));
    if (units_ok && cert.m >= 2)
      cert.bounds = bound_report(g, cert.sigma->sigma.size(), cert.pairs, cert.m, unit_flags(r));
  } else {
    ok = add("sigma", false, "requires a 2-spherical diagram without isolated vertices") && ok;
  }

  if (!ok || !cert.bounds || cert.bounds->verdict == BoundVerdict::Fails)
    cert.verdict = CertificateVerdict::NotCertified;
  else if (cert.bounds->verdict == BoundVerdict::Boundary)
    cert.verdict = CertificateVerdict::Boundary;
  else
    cert.verdict = CertificateVerdict::Certified;
  return cert;
}

}  // namespace kmt
