#pragma once

// Matrix groups over Z/q, breadth-first closure of a generating set, and the
// root-subgroup realizations in SL_d, the Heisenberg group and Sp4.

#include <array>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/mod_ring.hpp"
#include "kmt/unipotent.hpp"

namespace kmt {

class ModMatrix {
 public:
  ModMatrix(int n, int q) : n_(n), ring_(q), a_(static_cast<std::size_t>(n) * n, 0) {
    if (n < 1) throw InputError("matrix size must be >= 1");
  }

  static ModMatrix identity(int n, int q) {
    ModMatrix m(n, q);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
  }

  /// I + r E_ij (0-based, i != j).
  static ModMatrix elementary(int n, int q, int i, int j, long long r) {
    if (i == j || i < 0 || j < 0 || i >= n || j >= n) throw InputError("bad elementary matrix indices");
    ModMatrix m = identity(n, q);
    m.set(i, j, r);
    return m;
  }

  int size() const noexcept { return n_; }
  const ModRing& ring() const noexcept { return ring_; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  void set(int i, int j, long long v) { a_[static_cast<std::size_t>(i) * n_ + j] = ring_.norm(v); }

  ModMatrix operator*(const ModMatrix& o) const {
    if (o.n_ != n_ || !(o.ring_ == ring_)) throw InputError("matrix shapes or rings differ");
    ModMatrix r(n_, ring_.modulus());
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) {
        const long long x = (*this)(i, k);
        if (x == 0) continue;
        for (int j = 0; j < n_; ++j) r.a_[static_cast<std::size_t>(i) * n_ + j] += x * o(k, j) % ring_.modulus();
      }
    for (int& v : r.a_) v = ring_.norm(v);
    return r;
  }

  ModMatrix transpose() const {
    ModMatrix t(n_, ring_.modulus());
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.set(j, i, (*this)(i, j));
    return t;
  }

  /// Canonical byte string, used as a hash key.
  std::string encode() const {
    std::string s;
    s.reserve(a_.size() * 2);
    for (int v : a_) {
      s.push_back(static_cast<char>(v & 0xff));
      if (ring_.modulus() > 256) s.push_back(static_cast<char>((v >> 8) & 0xff));
    }
    return s;
  }

  friend bool operator==(const ModMatrix& a, const ModMatrix& b) {
    return a.n_ == b.n_ && a.ring_ == b.ring_ && a.a_ == b.a_;
  }

 private:
  int n_;
  ModRing ring_;
  std::vector<int> a_;
};

/// x^-1 y^-1 x y for invertible matrices given with their inverses.
inline ModMatrix commutator(const ModMatrix& x, const ModMatrix& x_inv, const ModMatrix& y,
                            const ModMatrix& y_inv) {
  return x_inv * y_inv * x * y;
}

class CapExceeded : public Error {
 public:
  explicit CapExceeded(std::size_t partial)
      : Error("closure exceeded its cap after " + std::to_string(partial) + " elements"),
        partial_(partial) {}
  std::size_t partial() const noexcept { return partial_; }

 private:
  std::size_t partial_;
};

enum class OnCap { Throw, Stop };

struct ClosureResult {
  std::size_t order = 0;
  bool saturated = false;  ///< closed under the generators before the cap
};

/// Breadth-first closure of `gens` under right multiplication, starting at
/// `one`. In a finite group this is the generated subgroup.
template <class T, class Mul, class Key>
ClosureResult bfs_closure(const std::vector<T>& gens, const T& one, Mul mul, Key key,
                          std::size_t cap = 1'000'000, OnCap on_cap = OnCap::Throw) {
  if (cap < 1) throw InputError("closure cap must be >= 1");
  std::unordered_set<std::string> seen{key(one)};
  std::vector<T> frontier{one};
  while (!frontier.empty()) {
    std::vector<T> next;
    for (const T& x : frontier) {
      for (const T& g : gens) {
        T y = mul(x, g);
        if (!seen.insert(key(y)).second) continue;
        if (seen.size() > cap) {
          if (on_cap == OnCap::Throw) throw CapExceeded(seen.size() - 1);
          return {cap, false};
        }
        next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  return {seen.size(), true};
}

inline ClosureResult matrix_closure(const std::vector<ModMatrix>& gens, std::size_t cap = 1'000'000,
                                    OnCap on_cap = OnCap::Throw) {
  if (gens.empty()) throw InputError("closure needs at least one generator");
  const ModMatrix one = ModMatrix::identity(gens.front().size(), gens.front().ring().modulus());
  return bfs_closure(
      gens, one, [](const ModMatrix& a, const ModMatrix& b) { return a * b; },
      [](const ModMatrix& m) { return m.encode(); }, cap, on_cap);
}

inline ClosureResult unipotent_closure(const UnipotentEngine& e, const std::vector<UElem>& gens,
                                       std::size_t cap = 1'000'000, OnCap on_cap = OnCap::Throw) {
  return bfs_closure(
      gens, e.identity(), [&e](const UElem& a, const UElem& b) { return e.mul(a, b); },
      [](const UElem& u) { return std::string(u.coeffs.begin(), u.coeffs.end()); }, cap, on_cap);
}

class Unsupported : public InputError {
 public:
  explicit Unsupported(const std::string& what) : InputError("unsupported realization: " + what) {}
};

/// Nilpotent pattern of an Sp4 root subgroup: x(r) = I + sign * r * (E_ab + partner_sign * E_cd),
/// the second term present only for short roots.
struct Sp4RootShape {
  int a, b;
  int c = -1, d = -1;
  int partner_sign = 0;
  int sign = 1;
};

/// Sp4 with respect to the antidiagonal form J = antidiag(1, 1, -1, -1), diagonal
/// torus (t1, t2, 1/t2, 1/t1). Positive roots in the B2 engine order
/// alpha = 2e2, beta = e1 - e2, alpha+beta = e1 + e2, alpha+2beta = 2e1.
struct Sp4Table {
  std::array<Sp4RootShape, 4> roots;
  friend bool operator==(const Sp4Table& x, const Sp4Table& y) {
    for (int k = 0; k < 4; ++k) {
      const auto &p = x.roots[k], &q = y.roots[k];
      if (p.a != q.a || p.b != q.b || p.c != q.c || p.d != q.d || p.partner_sign != q.partner_sign ||
          p.sign != q.sign)
        return false;
    }
    return true;
  }
};

inline ModMatrix sp4_form(int q) {
  ModMatrix j(4, q);
  j.set(0, 3, 1);
  j.set(1, 2, 1);
  j.set(2, 1, -1);
  j.set(3, 0, -1);
  return j;
}

inline ModMatrix sp4_root_matrix(const Sp4RootShape& s, int q, long long r) {
  ModMatrix m = ModMatrix::identity(4, q);
  m.set(s.a, s.b, s.sign * r);
  if (s.c >= 0) m.set(s.c, s.d, static_cast<long long>(s.sign) * s.partner_sign * r);
  return m;
}

inline bool is_symplectic(const ModMatrix& m) {
  const ModMatrix j = sp4_form(m.ring().modulus());
  return m.transpose() * j * m == j;
}

/// Frozen result of sp4_sign_search(): the realization under which the B2
/// engine relations hold verbatim.
inline Sp4Table sp4_frozen_table() {
  return {{Sp4RootShape{1, 2, -1, -1, 0, 1}, Sp4RootShape{0, 1, 2, 3, -1, -1},
           Sp4RootShape{0, 2, 1, 3, 1, 1}, Sp4RootShape{0, 3, -1, -1, 0, 1}}};
}

/// Matrix for x_root(r), root an index into the B2 engine order; negative roots
/// (negative = true) are transposes.
inline ModMatrix sp4_root(const Sp4Table& t, int root, bool negative, int q, long long r) {
  const ModMatrix m = sp4_root_matrix(t.roots.at(root), q, r);
  return negative ? m.transpose() : m;
}

/// True if every B2 engine relation (printed and commuting) holds for the
/// matrices of `t` over Z/q, for all r, s.
inline bool sp4_relations_hold(const Sp4Table& t, int q) {
  const UnipotentEngine e(UnipotentType::B2, q);
  for (int k = 0; k < 4; ++k)
    if (!is_symplectic(sp4_root(t, k, false, q, 1))) return false;
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      if (x == y) continue;
      const Relation* rel = nullptr;
      for (const Relation& r : e.relations())
        if (r.left == x && r.right == y) rel = &r;
      for (int r = 0; r < q; ++r)
        for (int s = 0; s < q; ++s) {
          const ModMatrix lhs = commutator(sp4_root(t, x, false, q, r), sp4_root(t, x, false, q, -r),
                                           sp4_root(t, y, false, q, s), sp4_root(t, y, false, q, -s));
          ModMatrix rhs = ModMatrix::identity(4, q);
          const UElem u = rel ? e.relation_rhs(*rel, r, s) : e.identity();
          for (int k = 0; k < 4; ++k) rhs = rhs * sp4_root(t, k, false, q, u.coeffs[k]);
          // x_x and x_y commute unless some relation involves the pair.
          bool involved = rel != nullptr;
          for (const Relation& o : e.relations()) involved = involved || (o.left == y && o.right == x);
          if (!involved && !(lhs == ModMatrix::identity(4, q))) return false;
          if (rel && !(lhs == rhs)) return false;
        }
    }
  return true;
}

/// Searches the root signs (and the partner signs of short roots) for which
/// the B2 relations hold over Z/q; returns the first match in a fixed order.
inline std::optional<Sp4Table> sp4_sign_search(int q = 5) {
  const Sp4RootShape base[4] = {{1, 2}, {0, 1, 2, 3, 1}, {0, 2, 1, 3, 1}, {0, 3}};
  for (int mask = 0; mask < 64; ++mask) {
    Sp4Table t{{base[0], base[1], base[2], base[3]}};
    for (int k = 0; k < 4; ++k) t.roots[k].sign = (mask >> k) & 1 ? -1 : 1;
    t.roots[1].partner_sign = (mask >> 4) & 1 ? 1 : -1;
    t.roots[2].partner_sign = (mask >> 5) & 1 ? 1 : -1;
    if (sp4_relations_hold(t, q)) return t;
  }
  return std::nullopt;
}

enum class MatrixType { A2, Heis, B2, G2, SLd };

/// Realization of x_root(r). For A2/Heis/B2 the root is an engine index
/// (negative roots as transposes); for SL_d it is a simple index i with the
/// positive root E_{i,i+1} and the negative E_{i+1,i}.
inline ModMatrix matrix_realize(MatrixType type, int root, bool negative, int q, long long r,
                                int d = 3) {
  switch (type) {
    case MatrixType::A2:
    case MatrixType::Heis: {
      if (type == MatrixType::Heis && negative) throw Unsupported("negative roots in Heis");
      static constexpr int pos[3][2] = {{0, 1}, {1, 2}, {0, 2}};
      if (root < 0 || root > 2) throw InputError("A2 root index out of range");
      const ModMatrix m = ModMatrix::elementary(3, q, pos[root][0], pos[root][1], r);
      return negative ? m.transpose() : m;
    }
    case MatrixType::B2:
      if (root < 0 || root > 3) throw InputError("B2 root index out of range");
      return sp4_root(sp4_frozen_table(), root, negative, q, r);
    case MatrixType::SLd:
      if (root < 0 || root >= d - 1) throw InputError("SL_d simple index out of range");
      return negative ? ModMatrix::elementary(d, q, root + 1, root, r)
                      : ModMatrix::elementary(d, q, root, root + 1, r);
    default:
      throw Unsupported("G2 has no matrix realization here");
  }
}

/// Generators x_gamma(1), gamma in Sigma, for the Sigma-generation checks.
inline std::vector<ModMatrix> sigma_generators(const std::string& group, int q) {
  if (group == "sl3")
    return {ModMatrix::elementary(3, q, 0, 1, 1), ModMatrix::elementary(3, q, 1, 2, 1),
            ModMatrix::elementary(3, q, 2, 0, 1)};
  if (group == "sp4") {
    const Sp4Table t = sp4_frozen_table();
    // Short simple beta, long simple alpha, and -(alpha + 2 beta).
    return {sp4_root(t, 1, false, q, 1), sp4_root(t, 0, false, q, 1), sp4_root(t, 3, true, q, 1)};
  }
  throw InputError("unknown group '" + group + "' (expected sl3 or sp4)");
}

/// |SL3(F_q)| or |Sp4(F_q)| for prime q.
inline unsigned long long expected_group_order(const std::string& group, unsigned long long q) {
  if (group == "sl3") return q * q * q * (q * q - 1) * (q * q * q - 1);
  if (group == "sp4") return q * q * q * q * (q * q - 1) * (q * q * q * q - 1);
  throw InputError("unknown group '" + group + "'");
}

}  // namespace kmt
