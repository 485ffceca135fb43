#include <doctest.h>

#include "oracles.hpp"

using namespace qulab;

TEST_CASE("topology enumeration matches the generate-and-filter oracle") {
  CHECK(InstanceStream::topologies(1).size() == 1);
  CHECK(InstanceStream::topologies(2).size() == 4);
  CHECK(InstanceStream::topologies(3).size() == 29);
  CHECK(InstanceStream::topologies(4).size() == 355);
  for (int n = 1; n <= 3; ++n) {
    CHECK(InstanceStream::topologies(n).size() == oracles::all_open_families(n).size());
  }
  CHECK_THROWS_AS(InstanceStream::topologies(6), Error);
}

TEST_CASE("deduplicated streams keep one representative per class") {
  CHECK(InstanceStream::topologies(2, true).size() == 3);
  CHECK(InstanceStream::topologies(3, true).size() == 9);
  CHECK(InstanceStream::topologies(4, true).size() == 33);
}

TEST_CASE("pair and monoid streams") {
  CHECK(InstanceStream::quasi_uniformity_pairs(2).size() == 16);
  CHECK(InstanceStream::quasi_uniformity_pairs(3).size() == 29 * 29);
  InstanceStream monoids2 = InstanceStream::monoids(2);
  // Four labeled tables on two points, each compatible with some of the four
  // topologies (continuity filters the combinations).
  CHECK(monoids2.size() > 0);
  for (const Instance& inst : monoids2.items()) {
    CHECK(inst.monoid.has_value());
  }
  CHECK(InstanceStream::monoids(1).size() == 1);
}

TEST_CASE("instance encodings are canonical and stable") {
  InstanceStream stream = InstanceStream::topologies(2);
  CHECK(stream.items()[0].encoding() == "top:2:1001");
  // Indices follow the encoding order, for every stream kind.
  for (std::size_t i = 1; i < stream.size(); ++i) {
    CHECK(stream.items()[i - 1].encoding() < stream.items()[i].encoding());
  }
  InstanceStream pairs = InstanceStream::quasi_uniformity_pairs(2);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    CHECK(pairs.items()[i - 1].encoding() < pairs.items()[i].encoding());
  }
  InstanceStream monoids = InstanceStream::monoids(2);
  for (std::size_t i = 1; i < monoids.size(); ++i) {
    CHECK(monoids.items()[i - 1].encoding() < monoids.items()[i].encoding());
    CHECK(monoids.items()[i].index == i);
  }
}

TEST_CASE("invariant registry resolves names") {
  FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(topological_invariant("d", s) == 1);
  CHECK(topological_invariant("lstar(1)", s) == 1);
  CHECK(topological_invariant("ell_mp(2)", s) == 1);
  CHECK(topological_invariant("uell", s) == 1);
  CHECK_THROWS_AS(topological_invariant("zzz", s), Error);
  CHECK_THROWS_AS(topological_invariant("lstar", s), Error);      // missing index
  CHECK_THROWS_AS(topological_invariant("d(1)", s), Error);       // spurious index
  CHECK_THROWS_AS(topological_invariant("lstar(x)", s), Error);   // malformed index
  CHECK(topological_invariant_names().size() > 20);
}

TEST_CASE("law selectors") {
  CHECK(!select_laws("all").empty());
  CHECK(select_laws("diagram.").size() > 5);
  CHECK(select_laws("pairs.composite_equivalence").size() == 1);
  CHECK(select_laws("star_alt").size() == 2);
  CHECK_THROWS_AS(select_laws("nope"), Error);
}

TEST_CASE("regression suite passes every topology law on up to 3 points") {
  for (int n = 1; n <= 3; ++n) {
    InstanceStream stream = InstanceStream::topologies(n);
    RegressionVerdict verdict = regression_suite(stream, select_laws("all"));
    CHECK(verdict.violations.empty());
    CHECK(verdict.checked + verdict.skipped > 0);
  }
}

TEST_CASE("regression verdicts are independent of the worker count") {
  InstanceStream stream = InstanceStream::topologies(3);
  RegressionVerdict one = regression_suite(stream, select_laws("all"), 1);
  RegressionVerdict four = regression_suite(stream, select_laws("all"), 4);
  CHECK(one.checked == four.checked);
  CHECK(one.skipped == four.skipped);
  REQUIRE(one.violations.size() == four.violations.size());
  for (std::size_t i = 0; i < one.violations.size(); ++i) {
    CHECK(one.violations[i].law_id == four.violations[i].law_id);
    CHECK(one.violations[i].instance == four.violations[i].instance);
  }
}

TEST_CASE("no applicable laws means zero checks and zero violations") {
  InstanceStream stream = InstanceStream::topologies(1);
  RegressionVerdict verdict = regression_suite(stream, select_laws("pairs."));
  CHECK(verdict.checked == 0);
  CHECK(verdict.skipped == 0);
  CHECK(verdict.violations.empty());
  CHECK(verdict.per_law.empty());
}

TEST_CASE("skip accounting is total") {
  InstanceStream stream = InstanceStream::topologies(3);
  std::vector<const Law*> laws = select_laws("all");
  std::size_t topology_laws = 0;
  for (const Law* law : laws) {
    if (law->kind == StreamKind::topologies) ++topology_laws;
  }
  RegressionVerdict verdict = regression_suite(stream, laws);
  CHECK(verdict.checked + verdict.skipped == stream.size() * topology_laws);
}

TEST_CASE("pair laws hold exhaustively on 2 points") {
  InstanceStream stream = InstanceStream::quasi_uniformity_pairs(2);
  RegressionVerdict verdict = regression_suite(stream, select_laws("pairs."));
  CHECK(verdict.violations.empty());
}

TEST_CASE("composite equivalence and subcommuting normality, exhaustive on 4 points") {
  InstanceStream stream = InstanceStream::quasi_uniformity_pairs(4);
  RegressionVerdict verdict = regression_suite(
      stream, select_laws("pairs.composite_equivalence,pairs.subcommuting_normal"));
  CHECK(verdict.violations.empty());
  CHECK(verdict.checked > 0);
}

TEST_CASE("monoid laws hold exhaustively on 2 points") {
  InstanceStream stream = InstanceStream::monoids(2);
  RegressionVerdict verdict = regression_suite(stream, select_laws("monoid."));
  CHECK(verdict.violations.empty());
}

TEST_CASE("separation hunts") {
  InstanceStream one = InstanceStream::topologies(1);
  SeparationHunt none = hunt_separations(one, "e", "de");
  CHECK(!none.found);

  // Extent and discrete extent split on the indiscrete pair.
  InstanceStream two = InstanceStream::topologies(2);
  SeparationHunt hit = hunt_separations(two, "e", "de");
  CHECK(hit.found);
  CHECK(hit.lhs == 0);
  CHECK(hit.rhs == 1);
  const Instance& witness = two.items()[hit.index];
  CHECK(topological_invariant("e", *witness.space) == hit.lhs);
  CHECK(topological_invariant("de", *witness.space) == hit.rhs);

  InstanceStream three = InstanceStream::topologies(3);
  // Cellularity equals density on every finite space (one representative per
  // maximal specialization class realizes both), so this hunt comes up
  // empty.
  SeparationHunt cd = hunt_separations(three, "c", "d");
  CHECK(!cd.found);
  // Star-covering numbers agree with trailing powers, so no witness exists.
  SeparationHunt equal = hunt_separations(three, "lstar(1)", "ell_mp(2)");
  CHECK(!equal.found);
  // Spread does separate from the network weight at three points.
  SeparationHunt s_nw = hunt_separations(three, "s", "nw");
  CHECK(s_nw.found);

  CHECK_THROWS_AS(hunt_separations(three, "nope", "d"), Error);
}
