#include <doctest.h>

#include "oracles.hpp"

using namespace qulab;

namespace {

Entourage ent(int n, std::vector<std::pair<int, int>> pairs) {
  return Entourage::from_pairs(n, pairs);
}

}  // namespace

TEST_CASE("entourage construction enforces reflexivity") {
  CHECK_THROWS_AS(Entourage::from_rows(2, {PointSet{0}, PointSet{2}}), Error);
  CHECK_NOTHROW(Entourage::from_rows(2, {PointSet{1}, PointSet{2}}));
  CHECK_THROWS_AS(ent(2, {{0, 5}}), Error);
  CHECK_THROWS_AS(Entourage::diagonal(0), Error);
}

TEST_CASE("inverse transposes and is an involution") {
  CHECK(Entourage::diagonal(2).inverse() == Entourage::diagonal(2));
  CHECK(ent(2, {{0, 1}}).inverse() == ent(2, {{1, 0}}));
  Entourage u = ent(3, {{0, 1}, {1, 2}});
  CHECK(u.inverse().inverse() == u);
}

TEST_CASE("composition matches the triple-loop oracle") {
  Entourage u = ent(3, {{0, 1}});
  Entourage v = ent(3, {{1, 2}});
  CHECK(Entourage::diagonal(2).compose(ent(2, {{0, 1}})) == ent(2, {{0, 1}}));
  CHECK(u.compose(v) == ent(3, {{0, 1}, {1, 2}, {0, 2}}));
  CHECK(u.compose(v) == oracles::compose_oracle(u, v));
  CHECK(u.compose(v).inverse() == v.inverse().compose(u.inverse()));

  auto all3 = oracles::all_entourages(3);
  for (const Entourage& a : all3) {
    for (const Entourage& b : all3) {
      if (a.compose(b) != oracles::compose_oracle(a, b)) {
        CHECK(a.compose(b) == oracles::compose_oracle(a, b));
        return;
      }
    }
  }
}

TEST_CASE("inverse of a composition reverses the factors on small carriers") {
  for (const Entourage& u : oracles::all_entourages(3)) {
    for (const Entourage& v : oracles::all_entourages(3)) {
      if (u.compose(v).inverse() != v.inverse().compose(u.inverse())) {
        CHECK(u.compose(v).inverse() == v.inverse().compose(u.inverse()));
        return;
      }
    }
  }
  CHECK(true);
}

TEST_CASE("composition is associative on random triples") {
  std::mt19937_64 rng(20240811u);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Entourage a = oracles::random_entourage(n, rng);
    Entourage b = oracles::random_entourage(n, rng);
    Entourage c = oracles::random_entourage(n, rng);
    CHECK(a.compose(b).compose(c) == a.compose(b.compose(c)));
  }
}

TEST_CASE("alternating powers follow the recursion") {
  Entourage u2 = ent(2, {{0, 1}});
  Entourage u3 = ent(3, {{0, 1}});

  CHECK(u3.alt_lead(0) == Entourage::diagonal(3));
  CHECK(u3.alt_trail(0) == Entourage::diagonal(3));
  CHECK(u3.alt_trail(2) == ent(3, {{0, 1}, {1, 0}}));
  CHECK(u2.alt_lead(2) == Entourage::full(2));
  CHECK_THROWS_AS(u2.alt_lead(-1), Error);

  for (const Entourage& u : oracles::all_entourages(3)) {
    for (int n = 0; n <= 4; ++n) {
      CHECK(u.alt_lead(n) == oracles::alt_lead_oracle(u, n));
      CHECK(u.alt_trail(n) == oracles::alt_trail_oracle(u, n));
      if (n % 2 == 1) {
        // The two alternating directions are mutually inverse at odd stages;
        // at even stages each is symmetric on its own but they can differ.
        CHECK(u.alt_lead(n) == u.alt_trail(n).inverse());
      } else {
        CHECK(u.alt_lead(n).is_symmetric());
        CHECK(u.alt_trail(n).is_symmetric());
      }
    }
  }
}

TEST_CASE("plain powers extend to negative exponents through the inverse") {
  Entourage u = ent(3, {{0, 1}, {1, 2}});
  CHECK(u.power(0) == Entourage::diagonal(3));
  CHECK(u.power(1) == u);
  CHECK(u.power(2) == u.compose(u));
  CHECK(u.power(-1) == u.inverse());
  CHECK(u.power(-2) == u.inverse().compose(u.inverse()));
}

TEST_CASE("balls expand point sets along rows") {
  Entourage u = ent(3, {{0, 1}});
  CHECK(Entourage::diagonal(1).ball(singleton(0)) == singleton(0));
  CHECK(u.ball(singleton(0)) == make_set({0, 1}, 3));
  CHECK(u.ball(0) == 0);
  for (const Entourage& e : oracles::all_entourages(3)) {
    for (PointSet a = 0; a < 8; ++a) {
      for (PointSet b = 0; b < 8; ++b) {
        CHECK(e.ball(a | b) == (e.ball(a) | e.ball(b)));
      }
      CHECK(subset(a, e.ball(a)));
    }
  }
}

TEST_CASE("stars expand through cover members") {
  Cover c = Cover::make(3, {make_set({0, 1}, 3), make_set({1, 2}, 3)});
  CHECK(star(c, singleton(0), 0) == singleton(0));
  CHECK(star(c, singleton(0), 1) == make_set({0, 1}, 3));
  CHECK(star(c, singleton(0), 2) == make_set({0, 1, 2}, 3));
  CHECK(star(c, 0, 5) == 0);
  CHECK_THROWS_AS(Cover::make(2, {singleton(0)}), Error);

  std::mt19937_64 rng(7u);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    Cover cover = ball_cover(oracles::random_entourage(n, rng));
    PointSet a = rng() & full_set(n);
    for (int steps = 0; steps <= 3; ++steps) {
      PointSet s = star(cover, a, steps);
      CHECK(s == oracles::star_oracle(cover, a, steps));
      CHECK(subset(s, star(cover, a, steps + 1)));  // monotone in the step count
    }
  }
}

TEST_CASE("stars of balls equal trailing alternating powers") {
  // For the ball cover of U, the n-step star of a point is the ball of the
  // 2n-th trailing power.
  std::mt19937_64 rng(99u);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 5);
    Entourage u = oracles::random_entourage(n, rng);
    Cover cover = ball_cover(u);
    for (int k = 0; k <= 3; ++k) {
      for (int x = 0; x < n; ++x) {
        CHECK(u.alt_trail(2 * k).ball(singleton(x)) == star(cover, singleton(x), k));
      }
    }
  }
}

TEST_CASE("carrier mismatches are rejected") {
  CHECK_THROWS_AS(ent(2, {}).compose(ent(3, {})), Error);
  CHECK_THROWS_AS(ent(2, {}).intersect(ent(3, {})), Error);
}

TEST_CASE("transitive closure is the least transitive extension") {
  Entourage u = ent(4, {{0, 1}, {1, 2}, {2, 3}});
  Entourage closure = u.transitive_closure();
  CHECK(closure.is_transitive());
  CHECK(u.subset_of(closure));
  CHECK(closure == ent(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}));
}
