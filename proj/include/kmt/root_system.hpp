#pragma once

// Real roots of a Kac-Moody root system, carried together with their coroots
// and a Weyl witness word from birth. Roots live in the lattice Q with basis
// the simple roots; coroots live in Q^vee with basis the simple coroots.

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/gcm.hpp"

namespace kmt {

/// Coefficient vector over the simple basis (roots) or simple coroot basis (coroots).
using Vec = std::vector<int>;

class DimensionMismatch : public InputError {
 public:
  DimensionMismatch() : InputError("vector length does not match the GCM size") {}
};

class IndexOutOfRange : public InputError {
 public:
  explicit IndexOutOfRange(int i)
      : InputError("simple reflection index " + std::to_string(i + 1) + " out of range") {}
};

class CapTooSmall : public InputError {
 public:
  CapTooSmall() : InputError("height cap must be >= 1") {}
};

class OppositePair : public InputError {
 public:
  OppositePair() : InputError("pair of opposite roots (b = -a)") {}
};

/// Raised when the two pairings of a root pair disagree in sign; that
/// contradicts a theorem, so it always means a bug upstream.
class SignMismatch : public InvariantViolation {
 public:
  SignMismatch(int p, int q)
      : InvariantViolation("pairing signs disagree: <a^,b> = " + std::to_string(p) +
                           ", <b^,a> = " + std::to_string(q)) {}
};

inline Vec simple_vec(int d, int i, int sign = 1) {
  Vec v(d, 0);
  v[i] = sign;
  return v;
}

inline Vec negated(Vec v) {
  for (int& x : v) x = -x;
  return v;
}

inline Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
  return r;
}

/// Height with the cap convention: sum of |coefficients|.
inline int height(const Vec& v) {
  int h = 0;
  for (int x : v) h += std::abs(x);
  return h;
}

/// +1 if all coefficients >= 0, -1 if all <= 0, 0 for mixed or zero.
inline int sign_of(const Vec& v) {
  bool pos = false, neg = false;
  for (int x : v) {
    pos = pos || x > 0;
    neg = neg || x < 0;
  }
  if (pos && !neg) return 1;
  if (neg && !pos) return -1;
  return 0;
}

inline std::vector<int> support(const Vec& v) {
  std::vector<int> s;
  for (int k = 0; k < static_cast<int>(v.size()); ++k)
    if (v[k] != 0) s.push_back(k);
  return s;
}

/// <y, x> = sum_ij y_i x_j a_ij for y in Q^vee, x in Q.
inline int pairing(const Gcm& a, const Vec& y, const Vec& x) {
  const int d = a.size();
  if (static_cast<int>(y.size()) != d || static_cast<int>(x.size()) != d) throw DimensionMismatch();
  int s = 0;
  for (int i = 0; i < d; ++i) {
    if (y[i] == 0) continue;
    for (int j = 0; j < d; ++j) s += y[i] * x[j] * a(i, j);
  }
  return s;
}

/// A real root with its coroot.
struct RootPair {
  Vec root;
  Vec coroot;
  friend bool operator==(const RootPair&, const RootPair&) = default;
};

inline RootPair simple_pair(int d, int i, int sign = 1) {
  return {simple_vec(d, i, sign), simple_vec(d, i, sign)};
}

inline RootPair negated(const RootPair& p) { return {negated(p.root), negated(p.coroot)}; }

/// s_i on Q and Q^vee: x - <a_i^, x> a_i and y - <y, a_i> a_i^.
inline RootPair reflect(const Gcm& a, int i, const RootPair& p) {
  const int d = a.size();
  if (i < 0 || i >= d) throw IndexOutOfRange(i);
  if (static_cast<int>(p.root.size()) != d || static_cast<int>(p.coroot.size()) != d)
    throw DimensionMismatch();
  RootPair out = p;
  int root_shift = 0;
  for (int j = 0; j < d; ++j) root_shift += a(i, j) * p.root[j];
  int coroot_shift = 0;
  for (int k = 0; k < d; ++k) coroot_shift += p.coroot[k] * a(k, i);
  out.root[i] -= root_shift;
  out.coroot[i] -= coroot_shift;
  return out;
}

/// Applies w[0] first, then w[1], and so on.
inline RootPair apply_word(const Gcm& a, std::span<const int> w, RootPair p) {
  for (int i : w) p = reflect(a, i, p);
  return p;
}

/// One member of a root slice.
struct RootEntry {
  Vec root;
  Vec coroot;
  int simple = 0;          ///< the simple root the witness starts from
  std::vector<int> word;   ///< root = apply_word(word, alpha_simple)

  RootPair pair() const { return {root, coroot}; }
};

enum class Membership { Yes, No, Unknown };

/// The real roots of height at most `cap`, found by breadth-first closure of
/// the simple roots under simple reflections with every intermediate kept
/// under the cap. Since a positive real root of height > 1 can always be
/// lowered by some simple reflection, the slice contains exactly the real
/// roots of height <= cap; membership above the cap is Unknown.
class RootSlice {
 public:
  const Gcm& gcm() const noexcept { return gcm_; }
  int cap() const noexcept { return cap_; }
  std::size_t size() const noexcept { return roots_.size(); }

  /// Members in lexicographic order of coefficient vectors.
  const std::map<Vec, RootEntry>& entries() const noexcept { return roots_; }

  const RootEntry* find(const Vec& v) const {
    auto it = roots_.find(v);
    return it == roots_.end() ? nullptr : &it->second;
  }

  Membership contains(const Vec& v) const {
    if (height(v) > cap_) return Membership::Unknown;
    return roots_.count(v) ? Membership::Yes : Membership::No;
  }

  std::vector<Vec> positive() const {
    std::vector<Vec> out;
    for (const auto& [v, e] : roots_)
      if (sign_of(v) > 0) out.push_back(v);
    return out;
  }

 private:
  friend RootSlice enumerate_real_roots(const Gcm&, int);
  RootSlice(Gcm g, int cap) : gcm_(std::move(g)), cap_(cap) {}

  Gcm gcm_;
  int cap_;
  std::map<Vec, RootEntry> roots_;
};

inline RootSlice enumerate_real_roots(const Gcm& a, int height_cap) {
  if (height_cap < 1) throw CapTooSmall();
  const int d = a.size();
  RootSlice slice(a, height_cap);
  std::vector<RootEntry> frontier;
  for (int i = 0; i < d; ++i) {
    RootEntry e{simple_vec(d, i), simple_vec(d, i), i, {}};
    slice.roots_.emplace(e.root, e);
    frontier.push_back(std::move(e));
  }
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(),
              [](const RootEntry& x, const RootEntry& y) { return x.root < y.root; });
    std::vector<RootEntry> next;
    for (const RootEntry& e : frontier) {
      for (int i = 0; i < d; ++i) {
        RootPair p = reflect(a, i, e.pair());
        if (height(p.root) > height_cap) continue;
        if (sign_of(p.root) == 0)
          throw InvariantViolation("reflection produced a mixed-sign root vector");
        auto it = slice.roots_.find(p.root);
        if (it != slice.roots_.end()) {
          if (it->second.coroot != p.coroot)
            throw InvariantViolation("coroot depends on the Weyl witness");
          continue;
        }
        RootEntry n{p.root, p.coroot, e.simple, e.word};
        n.word.push_back(i);
        slice.roots_.emplace(n.root, n);
        next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return slice;
}

enum class Prenilpotency { Prenilpotent, NotPrenilpotent };

/// Pairing criterion: with p = <a^, b>, q = <b^, a> (same sign), the pair is
/// prenilpotent iff p >= 0 or p * q <= 3.
inline Prenilpotency is_prenilpotent(const Gcm& g, const RootPair& a, const RootPair& b) {
  if (b.root == negated(a.root)) throw OppositePair();
  const int p = pairing(g, a.coroot, b.root);
  const int q = pairing(g, b.coroot, a.root);
  const auto sgn = [](int x) { return (x > 0) - (x < 0); };
  if (sgn(p) != sgn(q)) throw SignMismatch(p, q);
  if (p >= 0) return Prenilpotency::Prenilpotent;
  return p * q <= 3 ? Prenilpotency::Prenilpotent : Prenilpotency::NotPrenilpotent;
}

struct ClosedInterval {
  std::vector<Vec> roots;  ///< slice roots i*a + j*b with i, j >= 1, lexicographic
  bool exact = false;      ///< false: roots above the cap may be missing
};

namespace detail {

/// Writes v = i*a + j*b with i, j >= 1 if possible.
inline std::optional<std::pair<int, int>> positive_combination(const Vec& v, const Vec& a,
                                                               const Vec& b) {
  const std::size_t d = a.size();
  for (std::size_t p = 0; p < d; ++p) {
    for (std::size_t q = p + 1; q < d; ++q) {
      const long det = static_cast<long>(a[p]) * b[q] - static_cast<long>(a[q]) * b[p];
      if (det == 0) continue;
      const long ni = static_cast<long>(v[p]) * b[q] - static_cast<long>(v[q]) * b[p];
      const long nj = static_cast<long>(a[p]) * v[q] - static_cast<long>(a[q]) * v[p];
      if (ni % det != 0 || nj % det != 0) return std::nullopt;
      const int i = static_cast<int>(ni / det), j = static_cast<int>(nj / det);
      if (i < 1 || j < 1) return std::nullopt;
      for (std::size_t k = 0; k < d; ++k)
        if (v[k] != i * a[k] + j * b[k]) return std::nullopt;
      return std::make_pair(i, j);
    }
  }
  return std::nullopt;  // a, b proportional: never the case for b != +-a
}

}  // namespace detail

/// (N a + N b) cut with the slice. Exact when the pair is prenilpotent and
/// either <a^, b> >= 0 (the only candidate is a + b, checked under the cap) or
/// the GCM is 2-spherical and cap >= 2 (ht a + ht b) + 5.
inline ClosedInterval closed_interval(const RootSlice& slice, const Vec& a, const Vec& b) {
  const RootEntry* ea = slice.find(a);
  const RootEntry* eb = slice.find(b);
  if (!ea || !eb) throw InputError("closed_interval: roots must belong to the slice");
  ClosedInterval out;
  for (const auto& [v, e] : slice.entries())
    if (detail::positive_combination(v, a, b)) out.roots.push_back(v);
  if (b == negated(a)) return out;
  const Gcm& g = slice.gcm();
  if (is_prenilpotent(g, ea->pair(), eb->pair()) == Prenilpotency::Prenilpotent) {
    if (pairing(g, ea->coroot, b) >= 0)
      out.exact = height(add(a, b)) <= slice.cap();
    else
      out.exact = is_two_spherical(g) && slice.cap() >= 2 * (height(a) + height(b)) + 5;
  }
  return out;
}

/// True if the root subgroups of a and b provably commute: opposite signs with
/// disjoint supports, or a prenilpotent pair with an exactly empty interval.
inline bool commute_guaranteed(const Vec& a, const Vec& b, const RootSlice& slice) {
  if (b == negated(a)) throw OppositePair();
  if (sign_of(a) * sign_of(b) < 0) {
    bool disjoint = true;
    for (std::size_t k = 0; k < a.size(); ++k) disjoint = disjoint && (a[k] == 0 || b[k] == 0);
    if (disjoint) return true;
  }
  const RootEntry* ea = slice.find(a);
  const RootEntry* eb = slice.find(b);
  if (!ea || !eb) return false;
  if (is_prenilpotent(slice.gcm(), ea->pair(), eb->pair()) != Prenilpotency::Prenilpotent)
    return false;
  const ClosedInterval iv = closed_interval(slice, a, b);
  return iv.exact && iv.roots.empty();
}

}  // namespace kmt
