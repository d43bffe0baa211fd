#pragma once

// Group-theoretic checks run inside the rank-2 unipotent engines and the
// matrix groups: relations, normal-form counts, generation, centrality, the
// B2 shape of a quotient of U+(G2), and the V4 shape of another.

#include <algorithm>
#include <array>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_set>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/matrix_group.hpp"
#include "kmt/report.hpp"
#include "kmt/rng.hpp"
#include "kmt/symrep.hpp"
#include "kmt/unipotent.hpp"

namespace kmt {

namespace detail {

inline std::string rs(long long r, long long s) {
  return "r=" + std::to_string(r) + " s=" + std::to_string(s);
}

inline UElem random_elem(const UnipotentEngine& e, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(0, e.ring().modulus() - 1);
  std::vector<int> c(e.root_count());
  for (int& x : c) x = coef(rng);
  return e.from_coeffs(std::move(c));
}

/// Every element of the engine, in lexicographic coefficient order.
inline std::vector<UElem> all_elems(const UnipotentEngine& e) {
  const int q = e.ring().modulus();
  std::vector<UElem> out;
  std::vector<int> c(e.root_count(), 0);
  while (true) {
    out.push_back(e.from_coeffs(c));
    int k = 0;
    while (k < e.root_count() && ++c[k] == q) c[k++] = 0;
    if (k == e.root_count()) return out;
  }
}

inline std::string key(const UElem& u) {
  std::string s;
  for (int c : u.coeffs) s += std::to_string(c) + ",";
  return s;
}

inline unsigned long long ipow(unsigned long long b, int e) {
  unsigned long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

/// gcd(q, M!) == 1 for the largest |a_ij| of the type.
inline bool generation_hypothesis(UnipotentType t, int q) {
  const int m = t == UnipotentType::A2 ? 1 : t == UnipotentType::B2 ? 2 : 3;
  int fact = 1;
  for (int k = 2; k <= m; ++k) fact *= k;
  return std::gcd(q, fact) == 1;
}

}  // namespace detail

/// Order of the subgroup generated by the simple root subgroups.
inline ClosureResult simple_root_closure(const UnipotentEngine& e, std::size_t cap = 1'000'000) {
  return unipotent_closure(e, {e.gen(0, 1), e.gen(1, 1)}, cap, OnCap::Stop);
}

/// Engine checks for one type over Z/q: printed relations, associativity and
/// inverses (exhaustive when the group is small, otherwise `samples` random
/// cases), normal-form count, and the matrix realizations where they exist.
inline Report chevalley_report(UnipotentType type, int q, long long samples, std::uint64_t seed) {
  const UnipotentEngine e(type, q);
  const std::string tag = to_string(type);
  const unsigned long long order = detail::ipow(static_cast<unsigned long long>(q), e.root_count());
  const bool small = order <= 125;
  std::mt19937_64 rng = SeedTree(seed).child("chevalley").stream(tag + "/" + std::to_string(q));
  Report rep;

  Check rel = make_check(tag + "/printed-relations");
  for (const Relation& r : e.relations())
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b)
        rel.record(e.commutator(e.gen(r.left, a), e.gen(r.right, b)) == e.relation_rhs(r, a, b),
                   "relation " + std::to_string(r.left) + "," + std::to_string(r.right) + " " + detail::rs(a, b));
  rep.checks.push_back(rel);

  Check assoc = make_check(tag + "/associativity");
  Check inv = make_check(tag + "/inverse");
  Check unit = make_check(tag + "/identity");
  if (small) {
    const std::vector<UElem> all = detail::all_elems(e);
    for (const UElem& a : all) {
      inv.record(e.mul(a, e.inverse(a)) == e.identity() && e.mul(e.inverse(a), a) == e.identity(), detail::key(a));
      unit.record(e.mul(e.identity(), a) == a && e.mul(a, e.identity()) == a, detail::key(a));
    }
  }
  for (long long k = 0; k < samples; ++k) {
    const UElem a = detail::random_elem(e, rng), b = detail::random_elem(e, rng),
                c = detail::random_elem(e, rng);
    assoc.record(e.mul(e.mul(a, b), c) == e.mul(a, e.mul(b, c)),
                 detail::key(a) + " " + detail::key(b) + " " + detail::key(c));
    if (!small) {
      inv.record(e.mul(a, e.inverse(a)) == e.identity() && e.mul(e.inverse(a), a) == e.identity(), detail::key(a));
      unit.record(e.mul(e.identity(), a) == a && e.mul(a, e.identity()) == a, detail::key(a));
    }
  }
  rep.checks.push_back(assoc);
  rep.checks.push_back(inv);
  rep.checks.push_back(unit);

  Check count = make_check(tag + "/normal-form-count");
  const ClosureResult all_gens = [&] {
    std::vector<UElem> gens;
    for (int k = 0; k < e.root_count(); ++k) gens.push_back(e.gen(k, 1));
    return unipotent_closure(e, gens);
  }();
  count.record(all_gens.saturated && all_gens.order == order,
               "closure " + std::to_string(all_gens.order) + " expected " + std::to_string(order));
  rep.checks.push_back(count);

  // Simple root subgroups generate U+ when gcd(q, M!) = 1; otherwise the
  // order is reported only.
  const ClosureResult simple = simple_root_closure(e);
  rep.notes[tag + "/simple-root-closure"] = std::to_string(simple.order);
  if (detail::generation_hypothesis(type, q)) {
    Check gen = make_check(tag + "/simple-roots-generate");
    gen.record(simple.saturated && simple.order == order,
               "closure " + std::to_string(simple.order) + " expected " + std::to_string(order));
    rep.checks.push_back(gen);
  } else {
    rep.notes[tag + "/generation-hypothesis"] = "fails: q shares a factor with M!";
  }

  if (type == UnipotentType::A2 && small) {
    // x_a(c0) x_b(c1) x_{a+b}(c2) -> E12(c0) E23(c1) E13(c2)
    const auto heis = [&](const UElem& u) {
      return matrix_realize(MatrixType::Heis, 0, false, q, u.coeffs[0]) *
             matrix_realize(MatrixType::Heis, 1, false, q, u.coeffs[1]) *
             matrix_realize(MatrixType::Heis, 2, false, q, u.coeffs[2]);
    };
    Check iso = make_check("a2/heisenberg-isomorphism");
    const std::vector<UElem> all = detail::all_elems(e);
    std::unordered_set<std::string> images;
    for (const UElem& a : all) {
      images.insert(heis(a).encode());
      for (const UElem& b : all)
        iso.record(heis(e.mul(a, b)) == heis(a) * heis(b), detail::key(a) + " " + detail::key(b));
    }
    iso.record(images.size() == all.size(), "image has " + std::to_string(images.size()) + " elements");
    rep.checks.push_back(iso);
  }

  if (type == UnipotentType::B2) {
    Check sp4 = make_check("b2/sp4-relations");
    sp4.record(sp4_relations_hold(sp4_frozen_table(), q), "frozen sign table over Z/" + std::to_string(q));
    rep.checks.push_back(sp4);
  }
  return rep;
}

/// Closure of the Sigma root subgroups in SL3(F_q) or Sp4(F_q) against the
/// group order.
inline Report generation_report(const std::string& group, int q) {
  const std::vector<ModMatrix> gens = sigma_generators(group, q);
  const ClosureResult r = matrix_closure(gens, 10'000'000, OnCap::Stop);
  const unsigned long long expect = expected_group_order(group, static_cast<unsigned long long>(q));
  Report rep;
  Check c = make_check(group + "/sigma-generation");
  c.record(r.saturated && r.order == expect,
           "closure " + std::to_string(r.order) + " expected " + std::to_string(expect));
  rep.checks.push_back(c);
  rep.notes[group + "/order"] = std::to_string(r.order);
  return rep;
}

/// [x_root(r), x_k(s)] trivial for all generators x_k, modulo the normal
/// subgroup of roots with index >= keep.
inline Check central_check(const UnipotentEngine& e, int root, int keep, const std::string& name) {
  Check c = make_check(name);
  const int q = e.ring().modulus();
  for (int k = 0; k < e.root_count(); ++k)
    for (int r = 0; r < q; ++r)
      for (int s = 0; s < q; ++s)
        c.record(e.project(e.commutator(e.gen(root, r), e.gen(k, s)), keep) == e.identity(),
                 "against root " + std::to_string(k) + " " + detail::rs(r, s));
  return c;
}

/// Centrality of the highest root subgroup, over Z/5. For G2 also the image of
/// X_{a+3b} in U+/X_{2a+3b}.
inline Report centrality_report(UnipotentType type) {
  if (type == UnipotentType::A2) throw InputError("centrality report covers b2 and g2");
  const UnipotentEngine e(type, 5);
  Report rep;
  const int top = e.root_count() - 1;
  const std::string tag = to_string(type);
  rep.checks.push_back(central_check(e, top, e.root_count(), tag + "/highest-root-central"));
  if (type == UnipotentType::G2) {
    const int a3b = e.index_of({1, 3});
    rep.checks.push_back(central_check(e, a3b, top, "g2/a+3b-central-mod-2a+3b"));
    // The obstruction [x_{a+3b}(r), x_a(s)] = x_{2a+3b}(-rs) is nontrivial before the quotient.
    Check live = make_check("g2/a+3b-not-central");
    bool seen = false;
    for (int r = 1; r < 5 && !seen; ++r)
      seen = !(e.commutator(e.gen(a3b, r), e.gen(0, 1)) == e.identity());
    live.record(seen, "X_{a+3b} commutes with X_a");
    rep.checks.push_back(live);
  }
  return rep;
}

/// In U+(G2)/<X_{a+3b}, X_{2a+3b}> the B2 relations hold, and the
/// multiplication agrees with a B2 engine on the first four coordinates.
inline Report quotient_b2_check(int q) {
  if (std::gcd(q, 6) != 1) throw BadModulus(q);
  const UnipotentEngine g(UnipotentType::G2, q), b(UnipotentType::B2, q);
  const int keep = 4;
  const auto bar = [&](const UElem& u) { return g.project(u, keep); };
  Report rep;

  Check first = make_check("quotient/[a,b]");
  Check second = make_check("quotient/[a+b,b]");
  for (int r = 0; r < q; ++r)
    for (int s = 0; s < q; ++s) {
      const ModRing& R = g.ring();
      first.record(bar(g.commutator(g.gen(0, r), g.gen(1, s))) ==
                       g.mul(g.gen(2, R.mul(r, s)), g.gen(3, R.mul(r, R.mul(s, s)))),
                   detail::rs(r, s));
      second.record(bar(g.commutator(g.gen(2, r), g.gen(1, s))) == g.gen(3, R.mul(2, R.mul(r, s))),
                    detail::rs(r, s));
    }
  rep.checks.push_back(first);
  rep.checks.push_back(second);

  Check table = make_check("quotient/matches-b2-engine");
  const std::vector<UElem> bs = detail::all_elems(b);
  const auto lift = [&](const UElem& u) {
    std::vector<int> c = u.coeffs;
    c.resize(g.root_count(), 0);
    return g.from_coeffs(std::move(c));
  };
  for (const UElem& x : bs)
    for (const UElem& y : bs) {
      const UElem prod = bar(g.mul(lift(x), lift(y)));
      table.record(prod == lift(b.mul(x, y)), detail::key(x) + " " + detail::key(y));
    }
  rep.checks.push_back(table);
  return rep;
}

class DictionaryNotFound : public Error {
 public:
  DictionaryNotFound() : Error("no sign/order dictionary matches the shear action") {}
};

/// Coordinate j of the shear side is sign[j] times engine coordinate roots[order[j]],
/// where roots = (a+3b, a+2b, a+b, a). `column` selects U v instead of v U.
struct V4Dictionary {
  std::array<int, 4> order{};
  std::array<int, 4> sign{};
  bool column = true;
};

inline std::string to_string(const V4Dictionary& d) {
  static const char* names[4] = {"a+3b", "a+2b", "a+b", "a"};
  std::string s = d.column ? "column action U+^s v, v = (" : "row action v U+^s, v = (";
  for (int j = 0; j < 4; ++j) s += std::string(j ? ", " : "") + (d.sign[j] < 0 ? "-" : "") + names[d.order[j]];
  return s + ")";
}

struct V4Result {
  V4Dictionary dictionary;
  Report report;
};

/// Conjugation n -> x_b(s)^-1 n x_b(s) on N/X_{2a+3b}, N the subgroup of
/// roots with positive a-coefficient, compared with the 4-dimensional shear.
inline V4Result g2_v4_conjugation_check(int q) {
  if (std::gcd(q, 6) != 1) throw BadModulus(q);
  const UnipotentEngine g(UnipotentType::G2, q);
  const ModRing& R = g.ring();
  const std::array<int, 4> idx{g.index_of({1, 3}), g.index_of({1, 2}), g.index_of({1, 1}), g.index_of({1, 0})};
  const ShearMatrix up(4, Orientation::Upper);
  const int top = g.root_count() - 1;

  const auto conj = [&](const std::array<int, 4>& coords, int s) {
    UElem n = g.identity();
    for (int k = 0; k < 4; ++k) n.coeffs[idx[k]] = coords[k];
    const UElem c = g.project(g.mul({g.gen(1, -s), n, g.gen(1, s)}), top);
    std::array<int, 4> out{};
    for (int k = 0; k < 4; ++k) out[k] = c.coeffs[idx[k]];
    return std::make_pair(out, c.coeffs[1] == 0);
  };
  const auto to_shear = [&](const V4Dictionary& d, const std::array<int, 4>& eng) {
    std::array<int, 4> v{};
    for (int j = 0; j < 4; ++j) v[j] = R.mul(R.norm(d.sign[j]), eng[d.order[j]]);
    return v;
  };
  const auto shear_act = [&](const V4Dictionary& d, const std::array<int, 4>& v, int s) {
    const ModMatrix m = up.evaluate(q, s);
    std::array<int, 4> w{};
    for (int i = 0; i < 4; ++i)
      for (int k = 0; k < 4; ++k)
        w[i] = R.add(w[i], d.column ? R.mul(m(i, k), v[k]) : R.mul(v[k], m(k, i)));
    return w;
  };
  const auto matches = [&](const V4Dictionary& d, const std::array<int, 4>& coords, int s) {
    const auto [after, in_n] = conj(coords, s);
    return in_n && to_shear(d, after) == shear_act(d, to_shear(d, coords), s);
  };

  std::optional<V4Dictionary> found;
  for (bool column : {true, false}) {
    std::array<int, 4> order{0, 1, 2, 3};
    do {
      for (int mask = 0; mask < 16 && !found; ++mask) {
        V4Dictionary d{order, {}, column};
        for (int j = 0; j < 4; ++j) d.sign[j] = (mask >> j) & 1 ? -1 : 1;
        bool ok = true;
        for (int j = 0; j < 4 && ok; ++j) {
          std::array<int, 4> basis{};
          basis[j] = 1;
          for (int s : {1, 2}) ok = ok && matches(d, basis, s);
        }
        if (ok) found = d;
      }
    } while (!found && std::next_permutation(order.begin(), order.end()));
    if (found) break;
  }
  if (!found) throw DictionaryNotFound();

  V4Result res{*found, {}};
  Check c = make_check("v4/conjugation-equals-shear");
  std::array<int, 4> coords{};
  for (long long code = 0; code < static_cast<long long>(q) * q * q * q; ++code) {
    long long x = code;
    for (int k = 0; k < 4; ++k, x /= q) coords[k] = static_cast<int>(x % q);
    for (int s = 0; s < q; ++s)
      c.record(matches(*found, coords, s), "coords (" + std::to_string(coords[0]) + "," +
                                               std::to_string(coords[1]) + "," + std::to_string(coords[2]) +
                                               "," + std::to_string(coords[3]) + ") s=" + std::to_string(s));
  }
  res.report.checks.push_back(c);
  res.report.notes["v4/dictionary"] = to_string(*found);
  return res;
}

}  // namespace kmt
