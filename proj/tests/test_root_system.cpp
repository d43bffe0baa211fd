#include <catch_amalgamated.hpp>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "kmt/root_system.hpp"

using namespace kmt;
using namespace fixtures;

namespace {

std::set<Vec> positive_set(const RootSlice& s) {
  const auto p = s.positive();
  return {p.begin(), p.end()};
}

std::size_t interval_count(const RootSlice& s, const Vec& a, const Vec& b) {
  std::size_t n = 0;
  for (int i = 1; i <= s.cap(); ++i)
    for (int j = 1; j <= s.cap(); ++j) {
      Vec v(a.size());
      for (std::size_t k = 0; k < v.size(); ++k) v[k] = i * a[k] + j * b[k];
      n += s.find(v) != nullptr;
    }
  return n;
}

}  // namespace

TEST_CASE("pairing", "[roots]") {
  CHECK(pairing(a2(), simple_vec(2, 0), simple_vec(2, 1)) == -1);
  CHECK(pairing(g2(), simple_vec(2, 0), simple_vec(2, 1)) == -3);
  for (int i = 0; i < 3; ++i) CHECK(pairing(indefinite3(), simple_vec(3, i), simple_vec(3, i)) == 2);
  CHECK_THROWS_AS(pairing(a2(), Vec{1}, Vec{1, 0}), DimensionMismatch);
}

TEST_CASE("reflections and words", "[roots]") {
  CHECK(reflect(a2(), 0, simple_pair(2, 1)).root == Vec{1, 1});
  CHECK(reflect(g2(), 1, simple_pair(2, 1)).root == Vec{0, -1});
  // Vertex 1 of the B2 matrix is short: s_1 raises alpha_2 by 2 alpha_1.
  CHECK(reflect(b2(), 0, simple_pair(2, 1)).root == Vec{2, 1});
  CHECK(reflect(b2(), 1, simple_pair(2, 0)).root == Vec{1, 1});
  const std::vector<int> w{0, 2};
  CHECK(apply_word(a3(), w, simple_pair(3, 1, -1)).root == Vec{-1, -1, -1});
  const RootPair p = simple_pair(3, 1);
  CHECK(apply_word(a3(), std::vector<int>{}, p) == p);
  for (int i = 0; i < 3; ++i) CHECK(apply_word(a3(), std::vector<int>{i, i}, p) == p);
  CHECK_THROWS_AS(reflect(a2(), 2, simple_pair(2, 0)), IndexOutOfRange);
}

TEST_CASE("finite slices match the positive root lists", "[roots]") {
  CHECK(enumerate_real_roots(a2(), 10).size() == 6);
  CHECK(enumerate_real_roots(b2(), 10).size() == 8);
  CHECK(enumerate_real_roots(g2(), 10).size() == 12);
  CHECK(enumerate_real_roots(a2(), 5).size() == 6);
  CHECK(positive_set(enumerate_real_roots(a2(), 10)) == std::set<Vec>{{0, 1}, {1, 0}, {1, 1}});
  CHECK(positive_set(enumerate_real_roots(b2(), 10)) ==
        std::set<Vec>{{0, 1}, {1, 0}, {1, 1}, {2, 1}});
  CHECK(positive_set(enumerate_real_roots(g2(), 10)) ==
        std::set<Vec>{{0, 1}, {1, 0}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
  CHECK_THROWS_AS(enumerate_real_roots(a2(), 0), CapTooSmall);
}

TEST_CASE("affine A1 slice is the closed-form orbit", "[roots]") {
  for (int cap : {7, 10, 15}) {
    std::set<Vec> expect;
    for (int m = -cap; m <= cap; ++m)
      for (int n = -cap; n <= cap; ++n)
        if (std::abs(m - n) == 1 && (long)m * n >= 0 && std::abs(m) + std::abs(n) <= cap)
          expect.insert({m, n});
    const RootSlice slice = enumerate_real_roots(affine_a1(), cap);
    std::set<Vec> got;
    for (const auto& [v, e] : slice.entries()) got.insert(v);
    CHECK(got == expect);
  }
}

TEST_CASE("slice invariants", "[roots][property]") {
  std::mt19937_64 rng(7);
  for (const auto& [name, g] : sigma_catalogue()) {
    INFO(name);
    const RootSlice s = enumerate_real_roots(g, 9);
    const int d = g.size();
    for (int i = 0; i < d; ++i) CHECK(s.contains(simple_vec(d, i)) == Membership::Yes);
    for (const auto& [v, e] : s.entries()) {
      CHECK(sign_of(v) != 0);
      CHECK(s.find(negated(v)) != nullptr);
      const RootPair w = apply_word(g, e.word, simple_pair(d, e.simple));
      CHECK(w.root == v);
      CHECK(w.coroot == e.coroot);
      CHECK(height(v) <= 9);
    }
    std::vector<RootPair> all;
    for (const auto& [v, e] : s.entries()) all.push_back(e.pair());
    for (int t = 0; t < 200; ++t) {
      const RootPair& a = all[rng() % all.size()];
      const RootPair& b = all[rng() % all.size()];
      std::vector<int> w(rng() % 6);
      for (int& x : w) x = static_cast<int>(rng() % d);
      CHECK(pairing(g, apply_word(g, w, a).coroot, apply_word(g, w, b).root) ==
            pairing(g, a.coroot, b.root));
    }
    Vec far(d, 0);
    far[0] = 10;
    CHECK(s.contains(far) == Membership::Unknown);
  }
}

TEST_CASE("prenilpotency agrees with the finiteness probe", "[roots][property]") {
  for (const Gcm& g : {a2(), b2(), g2(), affine_a1()}) {
    const RootSlice small = enumerate_real_roots(g, 10);
    const RootSlice mid = enumerate_real_roots(g, 30);
    const RootSlice big = enumerate_real_roots(g, 60);
    for (const auto& [va, ea] : small.entries())
      for (const auto& [vb, eb] : small.entries()) {
        if (va == vb || va == negated(vb)) continue;
        const Prenilpotency p = is_prenilpotent(g, ea.pair(), eb.pair());
        const bool stable = interval_count(mid, va, vb) == interval_count(big, va, vb);
        CHECK((p == Prenilpotency::Prenilpotent) == stable);
        const ClosedInterval iv = closed_interval(small, va, vb);
        if (iv.exact) CHECK(iv.roots.size() == interval_count(big, va, vb));
      }
  }
  CHECK(is_prenilpotent(affine_a1(), simple_pair(2, 0), simple_pair(2, 1)) ==
        Prenilpotency::NotPrenilpotent);
  CHECK(is_prenilpotent(a2(), simple_pair(2, 0), simple_pair(2, 1, -1)) ==
        Prenilpotency::Prenilpotent);
  CHECK_THROWS_AS(is_prenilpotent(a2(), simple_pair(2, 0), simple_pair(2, 0, -1)), OppositePair);
}

TEST_CASE("closed intervals and commuting pairs", "[roots]") {
  const RootSlice sb = enumerate_real_roots(b2(), 12);
  // Long root alpha = vertex 2, short beta = vertex 1.
  const ClosedInterval iv = closed_interval(sb, {0, 1}, {1, 0});
  CHECK(iv.exact);
  CHECK(iv.roots == std::vector<Vec>{{1, 1}, {2, 1}});

  const RootSlice sa = enumerate_real_roots(a2(), 12);
  const ClosedInterval e = closed_interval(sa, {1, 0}, {0, -1});
  CHECK(e.exact);
  CHECK(e.roots.empty());
  CHECK(closed_interval(enumerate_real_roots(a1xa1(), 12), {1, 0}, {0, 1}).roots.empty());

  CHECK(commute_guaranteed({1, 0, 0}, {0, 0, -1}, enumerate_real_roots(a3(), 12)));
  CHECK(commute_guaranteed({1, 0}, {0, 1}, enumerate_real_roots(a1xa1(), 12)));
  CHECK_FALSE(commute_guaranteed({1, 0}, {0, 1}, sa));
  CHECK_THROWS_AS(commute_guaranteed({1, 0}, {-1, 0}, sa), OppositePair);

  // Non-2-spherical and below the threshold: never claimed exact.
  const RootSlice aff = enumerate_real_roots(affine_a1(), 12);
  CHECK_FALSE(closed_interval(aff, {1, 0}, {0, 1}).exact);
  CHECK_FALSE(closed_interval(enumerate_real_roots(g2(), 8), {1, 0}, {0, 1}).exact);
}
