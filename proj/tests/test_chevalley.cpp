#include <catch_amalgamated.hpp>

#include <random>

#include "kmt/affine.hpp"
#include "kmt/chevalley_checks.hpp"

using namespace kmt;

namespace {

constexpr int A = 0, B = 1, AB = 2, A2B = 3, A3B = 4, A23B = 5;

bool all_pass(const Report& r) {
  for (const Check& c : r.checks) {
    INFO(c.name << " tried " << c.tried << " failed " << c.failed << " first " << c.witness);
    CHECK(c.passed());
  }
  return r.passed();
}

/// Product of Sp4 root matrices in normal-form order: an independent model of U+(B2).
ModMatrix sp4_image(const UElem& u) {
  ModMatrix m = ModMatrix::identity(4, u.q);
  for (int k = 0; k < 4; ++k) m = m * sp4_root(sp4_frozen_table(), k, false, u.q, u.coeffs[k]);
  return m;
}

/// Elementary 3x3 matrix I + r E_ij from scratch, 1-based indices.
ModMatrix e3(int q, int i, int j, long long r) {
  ModMatrix m = ModMatrix::identity(3, q);
  m.set(i - 1, j - 1, r);
  return m;
}

}  // namespace

TEST_CASE("collection reproduces the listed commutators", "[chevalley]") {
  SECTION("A2 over Z/7: swapping x_a(2) and x_b(3) costs x_{a+b}(6)") {
    const UnipotentEngine e(UnipotentType::A2, 7);
    CHECK(e.mul(e.gen(A, 2), e.gen(B, 3)) == e.mul({e.gen(B, 3), e.gen(A, 2), e.gen(AB, 6)}));
    CHECK(e.commutator(e.gen(A, 2), e.gen(B, 3)) == e.gen(AB, 6));
  }
  SECTION("B2 over Z/5") {
    const UnipotentEngine e(UnipotentType::B2, 5);
    CHECK(e.commutator(e.gen(AB, 1), e.gen(B, 1)) == e.gen(A2B, 2));
    CHECK(e.commutator(e.gen(A, 1), e.gen(B, 1)) == e.mul(e.gen(AB, 1), e.gen(A2B, 1)));
  }
  SECTION("G2 over Z/5") {
    const UnipotentEngine e(UnipotentType::G2, 5);
    CHECK(e.commutator(e.gen(A, 1), e.gen(B, 1)) ==
          e.mul({e.gen(AB, 1), e.gen(A2B, 1), e.gen(A3B, 1), e.gen(A23B, 1)}));
    for (int r = 0; r < 5; ++r)
      for (int s = 0; s < 5; ++s)
        CHECK(e.commutator(e.gen(A3B, r), e.gen(A, s)) == e.gen(A23B, -r * s));
  }
  SECTION("identity and self-commutators") {
    const UnipotentEngine e(UnipotentType::G2, 7);
    std::mt19937_64 rng(5);
    for (int k = 0; k < 200; ++k) {
      const UElem g = detail::random_elem(e, rng);
      CHECK(e.mul(e.identity(), g) == g);
      CHECK(e.commutator(g, g) == e.identity());
    }
  }
}

TEST_CASE("engines reject foreign elements", "[chevalley]") {
  const UnipotentEngine a2(UnipotentType::A2, 5), b2(UnipotentType::B2, 5), b2_7(UnipotentType::B2, 7);
  CHECK_THROWS_AS(a2.mul(a2.gen(A, 1), b2.gen(A, 1)), TypeMismatch);
  CHECK_THROWS_AS(b2.mul(b2.gen(A, 1), b2_7.gen(A, 1)), TypeMismatch);
  CHECK_THROWS_AS(parse_unipotent_type("f4"), InputError);
}

TEST_CASE("B2 collection agrees with Sp4 matrix products", "[chevalley][oracle]") {
  for (int q : {5, 7, 9}) {
    const UnipotentEngine e(UnipotentType::B2, q);
    std::mt19937_64 rng(q);
    for (int k = 0; k < 2000; ++k) {
      const UElem a = detail::random_elem(e, rng), b = detail::random_elem(e, rng);
      REQUIRE(sp4_image(e.mul(a, b)) == sp4_image(a) * sp4_image(b));
      REQUIRE(sp4_image(e.inverse(a)) * sp4_image(a) == ModMatrix::identity(4, q));
    }
  }
}

TEST_CASE("matrix realizations", "[chevalley]") {
  for (int r = 0; r < 5; ++r) {
    CHECK(matrix_realize(MatrixType::A2, A, false, 5, r) == e3(5, 1, 2, r));
    CHECK(matrix_realize(MatrixType::A2, A, true, 5, r) == e3(5, 2, 1, r));
    for (int s = 0; s < 5; ++s) {
      const ModMatrix x = matrix_realize(MatrixType::Heis, A, false, 5, r);
      const ModMatrix y = matrix_realize(MatrixType::Heis, B, false, 5, s);
      CHECK(commutator(x, e3(5, 1, 2, -r), y, e3(5, 2, 3, -s)) == e3(5, 1, 3, r * s));
    }
  }
  CHECK(matrix_realize(MatrixType::SLd, 2, true, 3, 1, 4) == ModMatrix::elementary(4, 3, 3, 2, 1));
  CHECK_THROWS_AS(matrix_realize(MatrixType::G2, 0, false, 5, 1), Unsupported);
  CHECK_THROWS_AS(matrix_realize(MatrixType::Heis, 0, true, 5, 1), Unsupported);
}

TEST_CASE("the Sp4 sign table is the search result and holds the B2 relations", "[chevalley]") {
  const auto found = sp4_sign_search(5);
  REQUIRE(found);
  CHECK(*found == sp4_frozen_table());
  CHECK(sp4_relations_hold(sp4_frozen_table(), 5));
  CHECK(sp4_relations_hold(sp4_frozen_table(), 7));
  for (int k = 0; k < 4; ++k) CHECK(is_symplectic(sp4_root(sp4_frozen_table(), k, false, 5, 3)));
  // Flipping one sign breaks a relation.
  Sp4Table flipped = sp4_frozen_table();
  flipped.roots[A2B].sign *= -1;
  CHECK_FALSE(sp4_relations_hold(flipped, 5));
}

TEST_CASE("closure", "[chevalley]") {
  SECTION("U+(B2) over Z/3 from the simple root subgroups") {
    const UnipotentEngine e(UnipotentType::B2, 3);
    const ClosureResult r = simple_root_closure(e);
    CHECK(r.order == 81);
    CHECK(r.saturated);
  }
  SECTION("trivial group") {
    const ModMatrix one = ModMatrix::identity(3, 5);
    const ClosureResult r = matrix_closure({one});
    CHECK(r.order == 1);
    CHECK(r.saturated);
  }
  SECTION("cap") {
    const std::vector<ModMatrix> gens = sigma_generators("sl3", 2);
    try {
      matrix_closure(gens, 100);
      FAIL("expected CapExceeded");
    } catch (const CapExceeded& e) {
      CHECK(e.partial() == 100);
    }
    const ClosureResult stopped = matrix_closure(gens, 100, OnCap::Stop);
    CHECK_FALSE(stopped.saturated);
  }
  SECTION("normal forms are counted exactly") {
    for (auto [t, q] : {std::pair{UnipotentType::A2, 3}, std::pair{UnipotentType::A2, 5},
                        std::pair{UnipotentType::B2, 3}, std::pair{UnipotentType::B2, 5},
                        std::pair{UnipotentType::G2, 5}}) {
      const UnipotentEngine e(t, q);
      const unsigned long long expect = detail::ipow(q, e.root_count());
      CHECK(simple_root_closure(e).order == expect);
    }
    CHECK(detail::ipow(5, 6) == 15625);
  }
  SECTION("G2 over Z/2 violates the generation hypothesis and falls short") {
    const UnipotentEngine e(UnipotentType::G2, 2);
    CHECK_FALSE(detail::generation_hypothesis(UnipotentType::G2, 2));
    const ClosureResult r = simple_root_closure(e);
    CHECK(r.saturated);
    CHECK(r.order < 64);
    const Report rep = chevalley_report(UnipotentType::G2, 2, 100, 0);
    CHECK(rep.notes.at("g2/simple-root-closure") == std::to_string(r.order));
    for (const Check& c : rep.checks) CHECK(c.name != "g2/simple-roots-generate");
  }
}

TEST_CASE("Sigma root subgroups generate the finite groups", "[chevalley][generation]") {
  CHECK(expected_group_order("sl3", 2) == 168);
  CHECK(expected_group_order("sl3", 5) == 372000);
  CHECK(expected_group_order("sp4", 3) == 51840);
  CHECK(all_pass(generation_report("sl3", 2)));
  CHECK(all_pass(generation_report("sp4", 3)));
  CHECK(all_pass(generation_report("sl3", 5)));
  CHECK_THROWS_AS(generation_report("g2", 3), InputError);
}

TEST_CASE("per-type engine reports", "[chevalley]") {
  CHECK(all_pass(chevalley_report(UnipotentType::A2, 3, 2000, 1)));
  CHECK(all_pass(chevalley_report(UnipotentType::B2, 3, 2000, 1)));
  CHECK(all_pass(chevalley_report(UnipotentType::G2, 5, 2000, 1)));
  CHECK(all_pass(chevalley_report(UnipotentType::G2, 7, 2000, 1)));
}

TEST_CASE("centrality", "[chevalley]") {
  const UnipotentEngine b2(UnipotentType::B2, 5), g2(UnipotentType::G2, 5);
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s) {
      for (int k = 0; k < 4; ++k) CHECK(b2.commutator(b2.gen(A2B, r), b2.gen(k, s)) == b2.identity());
      CHECK(g2.commutator(g2.gen(A23B, r), g2.gen(B, s)) == g2.identity());
      CHECK(g2.project(g2.commutator(g2.gen(A3B, r), g2.gen(A, s)), A23B) == g2.identity());
    }
  CHECK(all_pass(centrality_report(UnipotentType::B2)));
  CHECK(all_pass(centrality_report(UnipotentType::G2)));
  CHECK_THROWS_AS(centrality_report(UnipotentType::A2), InputError);
}

TEST_CASE("U+(G2) modulo X_{a+3b}, X_{2a+3b} behaves like U+(B2)", "[chevalley]") {
  const UnipotentEngine g(UnipotentType::G2, 5);
  for (int s = 0; s < 5; ++s) CHECK(g.project(g.commutator(g.gen(A, 0), g.gen(B, s)), A3B) == g.identity());
  CHECK(all_pass(quotient_b2_check(5)));
  CHECK_THROWS_AS(quotient_b2_check(9), BadModulus);
}

TEST_CASE("V4 conjugation dictionary", "[chevalley]") {
  const UnipotentEngine g(UnipotentType::G2, 5);
  // x_b(s)-conjugating x_{a+b}(r) puts 2rs on a+2b.
  for (int r = 0; r < 5; ++r)
    for (int s = 0; s < 5; ++s) {
      const UElem c = g.mul({g.gen(B, -s), g.gen(AB, r), g.gen(B, s)});
      CHECK(c.coeffs[A2B] == (2 * r * s) % 5);
      CHECK(c.coeffs[AB] == r);
    }
  // s = 0 acts trivially.
  const UElem n = g.from_coeffs({1, 0, 2, 3, 4, 0});
  CHECK(g.mul({g.gen(B, 0), n, g.gen(B, 0)}) == n);

  const V4Result res = g2_v4_conjugation_check(5);
  CHECK(all_pass(res.report));
  CHECK(res.dictionary.column);
  CHECK(res.dictionary.order == std::array<int, 4>{0, 1, 2, 3});
  CHECK(res.dictionary.sign == std::array<int, 4>{1, 1, 1, 1});
  CHECK(all_pass(g2_v4_conjugation_check(7).report));
}

TEST_CASE("Laurent polynomials stay in their window", "[affine]") {
  const LaurentPoly t3 = LaurentPoly::monomial(4, 5, 1, 3);
  CHECK_THROWS_AS(t3 * t3, WindowBreach);
  CHECK_THROWS_AS(LaurentPoly::monomial(4, 5, 1, 5), WindowBreach);
  CHECK_NOTHROW(LaurentPoly::monomial(4, 5, 0, 5));
  CHECK((LaurentPoly::monomial(4, 5, 2, 1) * LaurentPoly::monomial(4, 5, 3, -1)) ==
        LaurentPoly::monomial(4, 5, 1, 0));
}

TEST_CASE("affine map on root subgroups", "[affine]") {
  const int q = 5, w = 6;
  // [pi(x_{a3}(r)), pi(x_{a1}(s))] = E_32(r s t), computed from explicit matrices.
  for (int r = 0; r < q; ++r)
    for (int s = 0; s < q; ++s) {
      const auto e = [&](int i, int j, long long c, int deg) {
        return LaurentMatrix::elementary(3, i - 1, j - 1, LaurentPoly::monomial(w, q, c, deg));
      };
      const LaurentMatrix lhs = e(3, 1, -r, 1) * e(1, 2, -s, 0) * e(3, 1, r, 1) * e(1, 2, s, 0);
      CHECK(lhs == e(3, 2, r * s, 1));
      CHECK(affine_pi(3, 2, false, q, w, r) == e(3, 1, r, 1));
      CHECK(affine_pi(3, 2, true, q, w, r) == e(1, 3, r, -1));
      CHECK(affine_pi(3, 2, false, q, w, r) * affine_pi(3, 2, false, q, w, s) ==
            affine_pi(3, 2, false, q, w, r + s));
    }
  CHECK(all_pass(affine_pi_check(3, 5, 6)));
  CHECK(all_pass(affine_pi_check(4, 3, 4)));
  CHECK_THROWS_AS(affine_pi_check(2, 5, 6), InputError);
  CHECK_THROWS_AS(affine_pi_check(3, 5, 3), InputError);
}
