#pragma once

// Positive unipotent groups U+ of the rank-2 types A2, B2, G2 over Z/q, with
// elements stored in normal form: one coefficient per positive root in a
// fixed order, multiplied by collection. Roots are written a*alpha + b*beta
// with alpha the long simple root.

#include <array>
#include <initializer_list>
#include <string>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/mod_ring.hpp"

namespace kmt {

enum class UnipotentType { A2, B2, G2 };

inline const char* to_string(UnipotentType t) {
  switch (t) {
    case UnipotentType::A2: return "a2";
    case UnipotentType::B2: return "b2";
    default: return "g2";
  }
}

inline UnipotentType parse_unipotent_type(const std::string& s) {
  if (s == "a2" || s == "A2") return UnipotentType::A2;
  if (s == "b2" || s == "B2") return UnipotentType::B2;
  if (s == "g2" || s == "G2") return UnipotentType::G2;
  throw InputError("unknown rank-2 type '" + s + "' (expected a2, b2 or g2)");
}

class TypeMismatch : public InputError {
 public:
  TypeMismatch() : InputError("elements belong to different groups") {}
};

/// (alpha, beta) coefficients of a positive root.
using Rank2Root = std::array<int, 2>;

/// Factor x_target(coeff * r^r_pow * s^s_pow) of a commutator.
struct RelationTerm {
  int target;
  int coeff;
  int r_pow;
  int s_pow;
};

/// [x_left(r), x_right(s)] = product of `terms` in order.
struct Relation {
  int left;
  int right;
  std::vector<RelationTerm> terms;
};

struct UElem {
  UnipotentType type = UnipotentType::A2;
  int q = 2;
  std::vector<int> coeffs;
  friend bool operator==(const UElem&, const UElem&) = default;
};

inline std::vector<Rank2Root> positive_roots(UnipotentType t) {
  switch (t) {
    case UnipotentType::A2: return {{1, 0}, {0, 1}, {1, 1}};
    case UnipotentType::B2: return {{1, 0}, {0, 1}, {1, 1}, {1, 2}};
    default: return {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}};
  }
}

/// The non-trivial commutator relations with the signs fixed as printed.
/// Indices refer to positive_roots(t).
inline std::vector<Relation> printed_relations(UnipotentType t) {
  switch (t) {
    case UnipotentType::A2: return {{0, 1, {{2, 1, 1, 1}}}};
    case UnipotentType::B2:
      return {{0, 1, {{2, 1, 1, 1}, {3, 1, 1, 2}}}, {2, 1, {{3, 2, 1, 1}}}};
    default:
      return {{0, 1, {{2, 1, 1, 1}, {3, 1, 1, 2}, {4, 1, 1, 3}, {5, 1, 2, 3}}},
              {2, 1, {{3, 2, 1, 1}, {4, 3, 1, 2}, {5, 3, 2, 1}}},
              {3, 1, {{4, 3, 1, 1}}},
              {3, 2, {{5, 3, 1, 1}}},
              {4, 0, {{5, -1, 1, 1}}}};
  }
}

class UnipotentEngine {
 public:
  UnipotentEngine(UnipotentType type, int q)
      : type_(type), ring_(q), roots_(positive_roots(type)), relations_(printed_relations(type)) {
    build_table();
  }

  UnipotentType type() const noexcept { return type_; }
  const ModRing& ring() const noexcept { return ring_; }
  const std::vector<Rank2Root>& roots() const noexcept { return roots_; }
  int root_count() const noexcept { return static_cast<int>(roots_.size()); }
  const std::vector<Relation>& relations() const noexcept { return relations_; }

  int index_of(const Rank2Root& r) const {
    for (int k = 0; k < root_count(); ++k)
      if (roots_[k] == r) return k;
    return -1;
  }

  UElem identity() const { return {type_, ring_.modulus(), std::vector<int>(roots_.size(), 0)}; }

  /// x_root(r)
  UElem gen(int root, long long r) const {
    if (root < 0 || root >= root_count()) throw InputError("root index out of range");
    UElem e = identity();
    e.coeffs[root] = ring_.norm(r);
    return e;
  }

  UElem from_coeffs(std::vector<int> c) const {
    if (static_cast<int>(c.size()) != root_count()) throw TypeMismatch();
    for (int& x : c) x = ring_.norm(x);
    return {type_, ring_.modulus(), std::move(c)};
  }

  UElem mul(const UElem& a, const UElem& b) const {
    check(a);
    check(b);
    UElem out = a;
    for (int k = 0; k < root_count(); ++k)
      if (b.coeffs[k] != 0) mul_letter(out.coeffs, k, b.coeffs[k]);
    return out;
  }

  UElem mul(std::initializer_list<UElem> factors) const {
    UElem out = identity();
    for (const UElem& f : factors) out = mul(out, f);
    return out;
  }

  UElem inverse(const UElem& a) const {
    check(a);
    UElem out = identity();
    for (int k = root_count() - 1; k >= 0; --k)
      if (a.coeffs[k] != 0) mul_letter(out.coeffs, k, ring_.neg(a.coeffs[k]));
    return out;
  }

  /// a^-1 b^-1 a b
  UElem commutator(const UElem& a, const UElem& b) const {
    return mul(mul(inverse(a), inverse(b)), mul(a, b));
  }

  /// Right-hand side of a printed relation evaluated at (r, s).
  UElem relation_rhs(const Relation& rel, long long r, long long s) const {
    UElem out = identity();
    for (const RelationTerm& t : rel.terms) out = mul(out, gen(t.target, term_value(t, r, s)));
    return out;
  }

  /// Image in the quotient by the normal subgroup of the roots with index >= keep.
  UElem project(const UElem& a, int keep) const {
    check(a);
    UElem out = a;
    for (int k = keep; k < root_count(); ++k) out.coeffs[k] = 0;
    return out;
  }

 private:
  struct Letter {
    int root;
    int value;
  };

  /// For k > d: how [x_k(c), x_d(s)] expands. Empty relation index = commute.
  struct TableEntry {
    int relation = -1;
    bool reversed = false;  ///< printed as [x_d, x_k]
  };

  void check(const UElem& a) const {
    if (a.type != type_ || a.q != ring_.modulus() || static_cast<int>(a.coeffs.size()) != root_count())
      throw TypeMismatch();
  }

  int term_value(const RelationTerm& t, long long r, long long s) const {
    return ring_.mul(ring_.norm(t.coeff),
                     ring_.mul(ring_.pow(ring_.norm(r), t.r_pow), ring_.pow(ring_.norm(s), t.s_pow)));
  }

  bool some_combination_is_root(int x, int y) const {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 3; ++j)
        if (index_of({i * roots_[x][0] + j * roots_[y][0], i * roots_[x][1] + j * roots_[y][1]}) >= 0)
          return true;
    return false;
  }

  void build_table() {
    const int n = root_count();
    table_.assign(static_cast<std::size_t>(n) * n, {});
    for (int idx = 0; idx < static_cast<int>(relations_.size()); ++idx) {
      const Relation& rel = relations_[idx];
      for (const RelationTerm& t : rel.terms) {
        const Rank2Root expect{t.r_pow * roots_[rel.left][0] + t.s_pow * roots_[rel.right][0],
                               t.r_pow * roots_[rel.left][1] + t.s_pow * roots_[rel.right][1]};
        if (roots_[t.target] != expect || t.target <= std::max(rel.left, rel.right))
          throw InvariantViolation("relation term does not match its root");
      }
      const int hi = std::max(rel.left, rel.right), lo = std::min(rel.left, rel.right);
      table_[hi * n + lo] = {idx, rel.left == lo};
    }
    for (int k = 0; k < n; ++k)
      for (int d = 0; d < k; ++d)
        if ((table_[k * n + d].relation >= 0) != some_combination_is_root(k, d))
          throw InvariantViolation("commutator table disagrees with the root system");
  }

  /// Letters of [x_k(c), x_d(s)] for k > d.
  std::vector<Letter> commutator_letters(int k, int c, int d, int s) const {
    const TableEntry& e = table_[k * root_count() + d];
    std::vector<Letter> out;
    if (e.relation < 0) return out;
    const Relation& rel = relations_[e.relation];
    if (!e.reversed) {
      for (const RelationTerm& t : rel.terms) out.push_back({t.target, term_value(t, c, s)});
    } else {
      for (auto it = rel.terms.rbegin(); it != rel.terms.rend(); ++it)
        out.push_back({it->target, ring_.neg(term_value(*it, s, c))});
    }
    return out;
  }

  /// nf <- nf * x_d(s). Factors above d are moved past x_d via y x = x y [y, x].
  void mul_letter(std::vector<int>& nf, int d, int s) const {
    std::vector<Letter> tail;
    for (int k = d + 1; k < root_count(); ++k) {
      if (nf[k] != 0) tail.push_back({k, nf[k]});
      nf[k] = 0;
    }
    nf[d] = ring_.add(nf[d], s);
    for (const Letter& y : tail) {
      mul_letter(nf, y.root, y.value);
      for (const Letter& z : commutator_letters(y.root, y.value, d, s))
        if (z.value != 0) mul_letter(nf, z.root, z.value);
    }
  }

  UnipotentType type_;
  ModRing ring_;
  std::vector<Rank2Root> roots_;
  std::vector<Relation> relations_;
  std::vector<TableEntry> table_;
};

}  // namespace kmt
