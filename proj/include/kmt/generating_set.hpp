#pragma once

// The generating root set Sigma (simple roots plus the roots w0(-beta) for the
// non-independent simple roots beta), its pseudo-parabolic variant, and
// mechanically re-verified pairwise certificates: every pair either commutes
// or is conjugate by a Weyl word into a rank-2 sublattice Z a_i + Z a_j.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "kmt/error.hpp"
#include "kmt/gcm.hpp"
#include "kmt/root_system.hpp"

namespace kmt {

class IsolatedVertex : public InputError {
 public:
  IsolatedVertex() : InputError("Dynkin diagram has an isolated vertex") {}
};

class NotTwoSpherical : public InputError {
 public:
  NotTwoSpherical() : InputError("GCM is not 2-spherical (some a_ij * a_ji > 3)") {}
};

class BadIndexSet : public InputError {
 public:
  explicit BadIndexSet(int i)
      : InputError("index set fails at vertex " + std::to_string(i + 1) +
                   ": no j in I with j != i and a_ij != 0"),
        vertex_(i) {}
  int vertex() const noexcept { return vertex_; }

 private:
  int vertex_;
};

class CertificationFailed : public Error {
 public:
  CertificationFailed(const Vec& a, const Vec& b)
      : Error("no certificate found for pair " + str(a) + ", " + str(b)) {}

 private:
  static std::string str(const Vec& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
  }
};

/// Greedy maximal independent set of the Dynkin diagram restricted to
/// `within` (ascending), scanning vertices in ascending order.
inline std::vector<int> maximal_independent(const DynkinDiagram& dyn, std::vector<int> within) {
  std::sort(within.begin(), within.end());
  std::vector<int> chosen;
  for (int v : within) {
    bool free = true;
    for (int c : chosen) free = free && !dyn.adjacent(v, c);
    if (free) chosen.push_back(v);
  }
  return chosen;
}

inline std::vector<int> maximal_independent(const DynkinDiagram& dyn) {
  std::vector<int> all(dyn.vertex_count());
  for (int i = 0; i < dyn.vertex_count(); ++i) all[i] = i;
  return maximal_independent(dyn, all);
}

struct SigmaSet {
  Gcm gcm;
  bool pseudo = false;
  std::vector<int> index_set;    ///< I (pseudo variant); all vertices otherwise
  std::vector<int> independent;  ///< Pi_1, or I_1 for the pseudo variant
  std::vector<int> partners;     ///< Pi_2, or I_2
  std::vector<int> outside;      ///< I_3 (pseudo variant only)
  std::vector<int> w0;           ///< product of the reflections over `independent`, ascending
  std::vector<RootPair> gammas;  ///< w0(-alpha_j) for j in `partners`, same order
  std::vector<RootPair> sigma;   ///< simple roots first, then gammas
};

namespace detail {

inline SigmaSet assemble_sigma(const Gcm& a, std::vector<int> index_set, bool pseudo) {
  const int d = a.size();
  const DynkinDiagram dyn(a);
  SigmaSet s{a, pseudo, index_set, {}, {}, {}, {}, {}, {}};
  s.independent = maximal_independent(dyn, index_set);
  for (int v : index_set)
    if (!std::binary_search(s.independent.begin(), s.independent.end(), v))
      s.partners.push_back(v);
  for (int v = 0; v < d; ++v)
    if (!std::binary_search(index_set.begin(), index_set.end(), v)) s.outside.push_back(v);
  s.w0 = s.independent;
  std::vector<int> reversed(s.w0.rbegin(), s.w0.rend());
  for (int j : s.partners) {
    RootPair g = apply_word(a, s.w0, simple_pair(d, j, -1));
    if (apply_word(a, reversed, simple_pair(d, j, -1)) != g)
      throw InvariantViolation("reflections over an independent set failed to commute");
    s.gammas.push_back(std::move(g));
  }
  for (int i = 0; i < d; ++i) s.sigma.push_back(simple_pair(d, i));
  s.sigma.insert(s.sigma.end(), s.gammas.begin(), s.gammas.end());

  if (static_cast<int>(s.sigma.size()) >= 2 * d)
    throw InvariantViolation("|Sigma| >= 2d");
  for (std::size_t x = 0; x < s.sigma.size(); ++x)
    for (std::size_t y = x; y < s.sigma.size(); ++y)
      if (s.sigma[x].root == negated(s.sigma[y].root))
        throw InvariantViolation("two members of Sigma sum to zero");
  return s;
}

}  // namespace detail

/// Sigma for a 2-spherical GCM whose Dynkin diagram has no isolated vertices.
inline SigmaSet build_sigma(const Gcm& a) {
  const DynkinDiagram dyn(a);
  if (dyn.has_isolated_vertex()) throw IsolatedVertex();
  if (!is_two_spherical(a)) throw NotTwoSpherical();
  std::vector<int> all(a.size());
  for (int i = 0; i < a.size(); ++i) all[i] = i;
  return detail::assemble_sigma(a, all, false);
}

/// Pseudo-parabolic Sigma = Pi u Lambda for an index set I in which every
/// vertex i has a neighbour j in I with j != i.
inline SigmaSet build_sigma_pseudo(const Gcm& a, std::vector<int> index_set) {
  const int d = a.size();
  std::sort(index_set.begin(), index_set.end());
  index_set.erase(std::unique(index_set.begin(), index_set.end()), index_set.end());
  for (int i : index_set)
    if (i < 0 || i >= d) throw InputError("index " + std::to_string(i + 1) + " out of range");
  if (DynkinDiagram(a).components().size() != 1)
    throw InputError("pseudo-parabolic Sigma requires an indecomposable GCM");
  if (!is_two_spherical(a)) throw NotTwoSpherical();
  for (int i = 0; i < d; ++i) {
    bool ok = false;
    for (int j : index_set) ok = ok || (j != i && a(i, j) != 0);
    if (!ok) throw BadIndexSet(i);
  }
  return detail::assemble_sigma(a, index_set, true);
}

enum class CertificateKind { Commute, RankTwoEmbed };
enum class CommuteReason { DisjointSupport, EmptyInterval };

struct PairCertificate {
  RootPair first;
  RootPair second;
  CertificateKind kind = CertificateKind::Commute;
  CommuteReason reason = CommuteReason::DisjointSupport;
  int i = -1, j = -1;        ///< rank-2 simple indices (i < j), RankTwoEmbed only
  std::vector<int> word;     ///< conjugating word, RankTwoEmbed only
};

inline const char* to_string(CommuteReason r) {
  return r == CommuteReason::DisjointSupport ? "disjoint-support" : "empty-interval";
}

namespace detail {

inline bool opposite_disjoint(const Vec& a, const Vec& b) {
  if (sign_of(a) * sign_of(b) >= 0) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != 0 && b[k] != 0) return false;
  return true;
}

/// Indices (i < j) with both vectors in Z a_i + Z a_j, if any.
inline std::optional<std::pair<int, int>> rank_two_span(const Vec& a, const Vec& b) {
  std::set<int> s;
  for (int k : support(a)) s.insert(k);
  for (int k : support(b)) s.insert(k);
  if (s.size() != 2) return std::nullopt;
  return std::make_pair(*s.begin(), *s.rbegin());
}

inline std::optional<PairCertificate> try_embed(const Gcm& g, const RootPair& a, const RootPair& b,
                                                const std::vector<int>& w) {
  const RootPair wa = apply_word(g, w, a);
  const RootPair wb = apply_word(g, w, b);
  auto span = rank_two_span(wa.root, wb.root);
  if (!span) return std::nullopt;
  PairCertificate c{a, b, CertificateKind::RankTwoEmbed, CommuteReason::DisjointSupport,
                    span->first, span->second, w};
  return c;
}

/// Breadth-first search over Weyl words of length <= max_len acting on the pair.
inline std::optional<PairCertificate> search_embed(const Gcm& g, const RootPair& a,
                                                   const RootPair& b, int max_len) {
  struct State {
    RootPair x, y;
    std::vector<int> word;
  };
  std::set<std::pair<Vec, Vec>> seen{{a.root, b.root}};
  std::vector<State> frontier{{a, b, {}}};
  for (int len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<State> next;
    for (const State& st : frontier) {
      for (int i = 0; i < g.size(); ++i) {
        State n{reflect(g, i, st.x), reflect(g, i, st.y), st.word};
        n.word.push_back(i);
        if (!seen.insert({n.x.root, n.y.root}).second) continue;
        if (rank_two_span(n.x.root, n.y.root)) return try_embed(g, a, b, n.word);
        next.push_back(std::move(n));
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace detail

/// Re-checks a certificate from scratch against the slice.
inline bool verify_certificate(const PairCertificate& c, const RootSlice& slice) {
  const Gcm& g = slice.gcm();
  if (c.kind == CertificateKind::RankTwoEmbed) {
    const RootPair wa = apply_word(g, c.word, c.first);
    const RootPair wb = apply_word(g, c.word, c.second);
    for (const Vec* v : {&wa.root, &wb.root}) {
      for (int k = 0; k < g.size(); ++k)
        if ((*v)[k] != 0 && k != c.i && k != c.j) return false;
    }
    return c.i != c.j;
  }
  if (c.reason == CommuteReason::DisjointSupport)
    return detail::opposite_disjoint(c.first.root, c.second.root);
  if (is_prenilpotent(g, c.first, c.second) != Prenilpotency::Prenilpotent) return false;
  const ClosedInterval iv = closed_interval(slice, c.first.root, c.second.root);
  return iv.exact && iv.roots.empty();
}

/// One verified certificate per unordered pair of Sigma, in Sigma order.
/// Simple-simple pairs embed with the identity; other pairs try, in order,
/// the commuting criteria, the identity, w0, and a bounded word search.
inline std::vector<PairCertificate> certify_pairs(const SigmaSet& s, const RootSlice& slice) {
  const Gcm& g = s.gcm;
  const int d = g.size();
  std::vector<PairCertificate> out;
  for (std::size_t x = 0; x < s.sigma.size(); ++x) {
    for (std::size_t y = x + 1; y < s.sigma.size(); ++y) {
      const RootPair& a = s.sigma[x];
      const RootPair& b = s.sigma[y];
      std::optional<PairCertificate> cert;
      const bool both_simple = static_cast<int>(x) < d && static_cast<int>(y) < d;
      if (both_simple) {
        cert = detail::try_embed(g, a, b, {});
      } else if (detail::opposite_disjoint(a.root, b.root)) {
        cert = PairCertificate{a, b, CertificateKind::Commute, CommuteReason::DisjointSupport,
                               -1, -1, {}};
      } else if (slice.find(a.root) && slice.find(b.root) &&
                 commute_guaranteed(a.root, b.root, slice)) {
        cert = PairCertificate{a, b, CertificateKind::Commute, CommuteReason::EmptyInterval,
                               -1, -1, {}};
      }
      if (!cert) cert = detail::try_embed(g, a, b, {});
      if (!cert) cert = detail::try_embed(g, a, b, s.w0);
      if (!cert) cert = detail::search_embed(g, a, b, 2 * d);
      if (!cert || !verify_certificate(*cert, slice)) throw CertificationFailed(a.root, b.root);
      out.push_back(std::move(*cert));
    }
  }
  return out;
}

/// Height cap large enough for the exactness thresholds of every Sigma pair.
inline int certification_cap(const SigmaSet& s) {
  int h = 1;
  for (const RootPair& p : s.sigma) h = std::max(h, height(p.root));
  return std::max(12, 4 * h + 5);
}

}  // namespace kmt
