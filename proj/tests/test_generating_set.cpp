#include <catch_amalgamated.hpp>

#include <set>

#include "fixtures.hpp"
#include "kmt/generating_set.hpp"

using namespace kmt;
using namespace fixtures;

namespace {

std::set<Vec> roots_of(const SigmaSet& s) {
  std::set<Vec> out;
  for (const RootPair& p : s.sigma) out.insert(p.root);
  return out;
}

const PairCertificate& find_pair(const std::vector<PairCertificate>& certs, const Vec& a,
                                 const Vec& b) {
  for (const PairCertificate& c : certs)
    if ((c.first.root == a && c.second.root == b) || (c.first.root == b && c.second.root == a))
      return c;
  throw std::runtime_error("pair not certified");
}

}  // namespace

TEST_CASE("greedy maximal independent sets", "[sigma]") {
  CHECK(maximal_independent(DynkinDiagram(a3())) == std::vector<int>{0, 2});
  CHECK(maximal_independent(DynkinDiagram(a2())) == std::vector<int>{0});
  CHECK(maximal_independent(DynkinDiagram(a1xa1())) == std::vector<int>{0, 1});
  CHECK(maximal_independent(DynkinDiagram(d4_star())) == std::vector<int>{0, 2, 3});
}

TEST_CASE("Sigma for small types", "[sigma]") {
  CHECK(roots_of(build_sigma(a2())) == std::set<Vec>{{1, 0}, {0, 1}, {-1, -1}});
  // Short simple root first: gamma = s_beta(-alpha) = -(alpha + 2 beta).
  const SigmaSet b = build_sigma(b2());
  CHECK(b.independent == std::vector<int>{0});
  CHECK(roots_of(b).count({-2, -1}) == 1);
  const SigmaSet a = build_sigma(a3());
  CHECK(roots_of(a) == std::set<Vec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}});
  CHECK(a.sigma.size() < 6);
  CHECK(a.gammas.front().coroot == Vec{-1, -1, -1});

  CHECK_THROWS_AS(build_sigma(a1xa1()), IsolatedVertex);
  CHECK_THROWS_AS(build_sigma(a1()), IsolatedVertex);
  CHECK_THROWS_AS(build_sigma(affine_a1()), NotTwoSpherical);
}

TEST_CASE("pseudo-parabolic Sigma", "[sigma]") {
  CHECK(roots_of(build_sigma_pseudo(a2(), {0, 1})) == roots_of(build_sigma(a2())));
  try {
    build_sigma_pseudo(a3(), {1});
    FAIL("expected BadIndexSet");
  } catch (const BadIndexSet& e) {
    CHECK(e.vertex() == 1);
  }
  const SigmaSet p = build_sigma_pseudo(a3(), {0, 1});
  CHECK(p.independent == std::vector<int>{0});
  CHECK(p.partners == std::vector<int>{1});
  CHECK(p.outside == std::vector<int>{2});
  CHECK(p.gammas.size() == 1);
  CHECK(p.gammas.front().root == Vec{-1, -1, 0});
  CHECK_THROWS_AS(build_sigma_pseudo(affine_a1(), {0, 1}), NotTwoSpherical);
}

TEST_CASE("named certificates", "[sigma]") {
  const SigmaSet s = build_sigma(a2());
  const auto certs = certify_pairs(s, enumerate_real_roots(a2(), certification_cap(s)));
  const PairCertificate& c = find_pair(certs, {0, 1}, {-1, -1});
  CHECK(c.kind == CertificateKind::RankTwoEmbed);
  CHECK(c.i == 0);
  CHECK(c.j == 1);
  CHECK(c.word.empty());

  // a_1 + (-(a_1+a_2+a_3)) is a root, so this pair needs the w0 conjugation.
  const SigmaSet t = build_sigma(a3());
  const RootSlice st = enumerate_real_roots(a3(), certification_cap(t));
  const auto tc = certify_pairs(t, st);
  const PairCertificate& e = find_pair(tc, {1, 0, 0}, {-1, -1, -1});
  CHECK(e.kind == CertificateKind::RankTwoEmbed);
  CHECK(e.word == t.w0);
  CHECK(apply_word(a3(), e.word, e.first).root == Vec{-1, 0, 0});

  const SigmaSet d = build_sigma_pseudo(d4_star(), {0, 1});
  const auto dc = certify_pairs(d, enumerate_real_roots(d4_star(), certification_cap(d)));
  const PairCertificate& f = find_pair(dc, {0, 0, 1, 0}, {-1, -1, 0, 0});
  CHECK(f.kind == CertificateKind::Commute);
  CHECK(f.reason == CommuteReason::DisjointSupport);
}

TEST_CASE("catalogue: Sigma properties and verified certificates", "[sigma][property]") {
  for (const auto& [name, g] : sigma_catalogue()) {
    INFO(name);
    const SigmaSet s = build_sigma(g);
    const int d = g.size();
    CHECK(static_cast<int>(s.sigma.size()) < 2 * d);
    for (std::size_t x = 0; x < s.sigma.size(); ++x)
      for (std::size_t y = 0; y < s.sigma.size(); ++y)
        CHECK(add(s.sigma[x].root, s.sigma[y].root) != Vec(d, 0));
    const DynkinDiagram dyn(g);
    for (int u : s.independent)
      for (int v : s.independent) CHECK_FALSE(dyn.adjacent(u, v));
    for (int v = 0; v < d; ++v) {
      bool covered = false;
      for (int u : s.independent) covered = covered || u == v || dyn.adjacent(u, v);
      CHECK(covered);
    }

    const RootSlice slice = enumerate_real_roots(g, certification_cap(s));
    const RootSlice probe = enumerate_real_roots(g, 40);
    const auto certs = certify_pairs(s, slice);
    CHECK(certs.size() == s.sigma.size() * (s.sigma.size() - 1) / 2);
    for (const PairCertificate& c : certs) {
      CHECK(verify_certificate(c, slice));
      if (c.kind == CertificateKind::RankTwoEmbed) {
        for (const RootPair* r : {&c.first, &c.second}) {
          const Vec img = apply_word(g, c.word, *r).root;
          for (int k = 0; k < d; ++k)
            if (k != c.i && k != c.j) CHECK(img[k] == 0);
        }
      } else {
        // No i a + j b with i, j >= 1 is a root of height <= 40.
        for (int i = 1; i <= 10; ++i)
          for (int j = 1; j <= 10; ++j) {
            Vec v(d);
            for (int k = 0; k < d; ++k) v[k] = i * c.first.root[k] + j * c.second.root[k];
            CHECK(probe.find(v) == nullptr);
          }
      }
    }
  }
}

TEST_CASE("tampered certificates are rejected", "[sigma]") {
  const SigmaSet s = build_sigma(a3());
  const RootSlice slice = enumerate_real_roots(a3(), certification_cap(s));
  auto certs = certify_pairs(s, slice);
  for (PairCertificate c : certs) {
    if (c.kind != CertificateKind::RankTwoEmbed) continue;
    c.i = c.j;
    CHECK_FALSE(verify_certificate(c, slice));
  }
  PairCertificate bogus{simple_pair(3, 0), simple_pair(3, 1), CertificateKind::Commute,
                        CommuteReason::EmptyInterval, -1, -1, {}};
  CHECK_FALSE(verify_certificate(bogus, slice));
}

TEST_CASE("certification failure surfaces", "[sigma]") {
  const Gcm g = Gcm::validate({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}});
  SigmaSet s{g, false, {0, 1, 2}, {0, 1, 2}, {}, {}, {}, {}, {}};
  s.sigma = {simple_pair(3, 0), {{2, 0, 0}, {2, 0, 0}}};
  CHECK_THROWS_AS(certify_pairs(s, enumerate_real_roots(g, 5)), CertificationFailed);
}
