#include <doctest.h>

#include "oracles.hpp"

using namespace qulab;

namespace {

Entourage ent(int n, std::vector<std::pair<int, int>> pairs) {
  return Entourage::from_pairs(n, pairs);
}

PreUniformity principal(const Entourage& e) { return PreUniformity::principal(e); }

}  // namespace

TEST_CASE("commuting profile flags and witnesses") {
  PreUniformity diag = PreUniformity::discrete(3);
  CommutingProfile same = commuting_profile(diag, diag);
  CHECK(same.commuting);
  CHECK(same.pm_subcommuting);
  CHECK(same.normally_pm_subcommuting);
  CHECK(same.normally_commuting);
  CHECK(same.prop_consistent);

  // Divergent one-step filters do not subcommute.
  PreUniformity l = principal(ent(3, {{0, 1}}));
  PreUniformity r = principal(ent(3, {{0, 2}}));
  CommutingProfile profile = commuting_profile(l, r);
  CHECK(!profile.pm_subcommuting);
  CHECK(profile.pm_witness.has_value());
  // The witness pair lies in the composite minimum that must shrink but does
  // not: (2,1) survives in R^{-1}.L outside L.R^{-1}.
  CHECK(profile.pm_witness == std::pair<int, int>{2, 1});
  CHECK(profile.prop_consistent);  // all four conditions fail together

  CHECK_THROWS_AS(commuting_profile(principal(ent(3, {{0, 1}, {1, 2}})), diag), Error);
  CHECK_THROWS_AS(commuting_profile(diag, PreUniformity::discrete(2)), Error);
}

TEST_CASE("the four composite conditions agree on every small pair") {
  for (const Entourage& a : enumerate_preorders(3)) {
    for (const Entourage& b : enumerate_preorders(3)) {
      CommutingProfile profile = commuting_profile(principal(a), principal(b));
      CHECK(profile.prop_consistent);
      // The quantifier-swapped variants collapse on principal filters.
      CHECK(profile.normally_pm_subcommuting == profile.pm_subcommuting);
      CHECK(profile.normally_commuting == profile.commuting);
      if (profile.normally_pm_subcommuting) CHECK(profile.pm_subcommuting);
    }
  }
}

TEST_CASE("symmetrized composite filter") {
  PreUniformity diag = PreUniformity::discrete(2);
  CHECK(quasi_roelcke(diag, diag).min() == Entourage::diagonal(2));

  Entourage m = ent(2, {{0, 1}});
  PreUniformity p = principal(m);
  CHECK(quasi_roelcke(p, p).min() == Entourage::full(2));

  std::mt19937_64 rng(5u);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 4);
    PreUniformity a = principal(oracles::random_entourage(n, rng));
    PreUniformity b = principal(oracles::random_entourage(n, rng));
    CHECK(quasi_roelcke(a, b).min().is_symmetric());
  }
}

TEST_CASE("subcommuting filters over a common topology are normal") {
  // The left/right pair of the two-point space with one proper open.
  Entourage m = ent(2, {{0, 1}});
  PreUniformity p = principal(m);
  CommutingProfile profile = commuting_profile(p, p);
  CHECK(profile.normally_pm_subcommuting);
  CHECK(is_normal(p.with_ambient(generated_topology(p))));

  // Exhaustive: normal subcommuting pairs over a common topology.
  for (const Entourage& a : enumerate_preorders(3)) {
    for (const Entourage& b : enumerate_preorders(3)) {
      PreUniformity l = principal(a);
      PreUniformity r = principal(b);
      FiniteSpace tau = generated_topology(l);
      if (!(tau == generated_topology(r))) continue;
      if (!commuting_profile(l, r).normally_pm_subcommuting) continue;
      CHECK(is_normal(l.with_ambient(tau)));
      CHECK(is_normal(r.with_ambient(tau)));
      // The symmetrized composite is then a uniformity with a coarser
      // topology.
      PreUniformity fu = quasi_roelcke(l, r);
      CHECK(classify(fu).is_uniformity);
      FiniteSpace tau_fu = generated_topology(fu);
      for (int x = 0; x < 3; ++x) CHECK(subset(tau.min_nbhd(x), tau_fu.min_nbhd(x)));
    }
  }
}

TEST_CASE("separator construction on reference inputs") {
  FiniteSpace s = FiniteSpace::sierpinski();
  Entourage m = ent(2, {{0, 1}});
  StepFunction f = urysohn_separator(s, PreUniformity::principal(m, s), singleton(0), m);
  CHECK(f.values == std::vector<Dyadic>{Dyadic::zero(), Dyadic::zero()});  // region is everything

  FiniteSpace d3 = FiniteSpace::discrete(3);
  PreUniformity diag = PreUniformity::principal(Entourage::diagonal(3), d3);
  StepFunction g = urysohn_separator(d3, diag, singleton(0), Entourage::diagonal(3));
  CHECK(g.values == std::vector<Dyadic>{Dyadic::zero(), Dyadic::one(), Dyadic::one()});
  CHECK(g.is_continuous(d3));
  CHECK(g.zero_set() == singleton(0));

  StepFunction empty = urysohn_separator(d3, diag, 0, Entourage::diagonal(3));
  CHECK(empty.values == std::vector<Dyadic>(3, Dyadic::one()));

  // Non-normal filter is rejected.
  FiniteSpace sier = FiniteSpace::sierpinski();
  CHECK_THROWS_AS(
      urysohn_separator(sier, PreUniformity::principal(Entourage::diagonal(2), sier), singleton(0),
                        Entourage::diagonal(2)),
      Error);
  // Entourage outside the filter is rejected.
  CHECK_THROWS_AS(urysohn_separator(s, PreUniformity::principal(m, s), singleton(0),
                                    Entourage::diagonal(2)),
                  Error);
}

TEST_CASE("separator postconditions hold on every valid sweep input") {
  for (const Entourage& e : enumerate_preorders(3)) {
    FiniteSpace x = FiniteSpace::from_preorder(e);
    PreUniformity u = PreUniformity::principal(e, x);
    if (!is_normal(u)) continue;
    for (PointSet a = 0; a < 8; ++a) {
      StepFunction f = urysohn_separator(x, u, a, e);
      CHECK(f.is_continuous(x));
      CHECK(subset(a, f.zero_set()));
      CHECK(subset(f.preimage_lt_one(), x.int_closure(e.ball(a))));
    }
  }
}

TEST_CASE("separating function families") {
  FiniteSpace d2 = FiniteSpace::discrete(2);
  PreUniformity diag = PreUniformity::principal(Entourage::diagonal(2), d2);
  auto family = separating_functions(
      d2, diag, {{singleton(0), Entourage::diagonal(2)}, {singleton(1), Entourage::diagonal(2)}});
  CHECK(family.functions.size() == 2);
  CHECK(family.separates_points);
  CHECK(family.functions[0].zero_set() == singleton(0));
  CHECK(family.functions[1].zero_set() == singleton(1));

  FiniteSpace one = FiniteSpace::discrete(1);
  PreUniformity one_diag = PreUniformity::principal(Entourage::diagonal(1), one);
  auto trivial = separating_functions(one, one_diag, {{singleton(0), Entourage::diagonal(1)}});
  CHECK(trivial.separates_points);  // vacuous

  FiniteSpace s = FiniteSpace::sierpinski();
  Entourage m = ent(2, {{0, 1}});
  CHECK_THROWS_WITH_AS(
      separating_functions(s, PreUniformity::principal(m, s), {{singleton(1), m}}),
      doctest::Contains("pair (0,1)"), Error);
}

TEST_CASE("separating pairs on discrete carriers") {
  PreUniformity l = PreUniformity::discrete(2);
  SeparatingPairsResult res = separating_pairs(l, l, PairsMode::inverse_boundedness);
  CHECK(res.one_separated);
  CHECK(res.within_bound);
  CHECK(res.family_size == 2);
  CHECK(res.bound == 2);  // psi(L.L^-1) * ell(L^-1) = 1 * 2

  PreUniformity point = PreUniformity::discrete(1);
  SeparatingPairsResult trivial = separating_pairs(point, point, PairsMode::forward_boundedness);
  CHECK(trivial.family_size == 0);  // a single point needs no pairs
  CHECK(trivial.one_separated);

  for (PairsMode mode : {PairsMode::inverse_boundedness, PairsMode::forward_boundedness,
                         PairsMode::commuting_boundedness}) {
    for (int n = 1; n <= 3; ++n) {
      PreUniformity d = PreUniformity::discrete(n);
      SeparatingPairsResult r = separating_pairs(d, d, mode);
      CHECK(r.one_separated);
      CHECK(r.within_bound);
    }
  }

  // Auxiliary mode with the one-step vee filter.
  FiniteSpace d3 = FiniteSpace::discrete(3);
  PreUniformity anchored = PreUniformity::principal(Entourage::diagonal(3), d3);
  PreUniformity aux = derived_vee(anchored, 1);
  SeparatingPairsResult aux_res = separating_pairs(anchored, anchored, PairsMode::auxiliary, &aux);
  CHECK(aux_res.one_separated);
  CHECK(aux_res.within_bound);

  // Non-Hausdorff common topology is a premise failure.
  PreUniformity sier = principal(ent(2, {{0, 1}}));
  CHECK_THROWS_WITH_AS(separating_pairs(sier, sier, PairsMode::inverse_boundedness),
                       doctest::Contains("not Hausdorff"), Error);
  CHECK_THROWS_AS(separating_pairs(l, l, PairsMode::auxiliary), Error);  // aux missing
}

TEST_CASE("pseudocharacter bound report") {
  FiniteSpace d2 = FiniteSpace::discrete(2);
  PreUniformity l = PreUniformity::principal(Entourage::diagonal(2), d2);
  PsiBoundReport rep = psi_bound_report(l, l);
  CHECK(rep.all_applicable_hold);
  bool found_base_row = false;
  for (const InequalityRow& row : rep.rows) {
    if (row.id == "fu_le_psiLLinv_ellLinv") {
      found_base_row = true;
      CHECK(row.applicable);
      CHECK(row.lhs == 1);
      CHECK(row.rhs == 2);  // psi = 1, ell(L^-1) = 2
    }
  }
  CHECK(found_base_row);

  // Every separatedness premise holds for the diagonal filter, so no row is
  // skipped on a discrete pair.
  for (const InequalityRow& row : rep.rows) {
    CHECK(row.applicable);
    CHECK(row.holds);
    CHECK(row.lhs == 1);
    CHECK(row.rhs >= 1);
  }
  CHECK(rep.rows.size() >= 15);

  // Non-generating ambient: rows are skipped but the report stays clean.
  FiniteSpace s = FiniteSpace::sierpinski();
  PreUniformity coarse = PreUniformity::principal(Entourage::full(2), s);
  PsiBoundReport skipped = psi_bound_report(coarse, coarse);
  CHECK(skipped.all_applicable_hold);
  for (const InequalityRow& row : skipped.rows) CHECK(!row.applicable);
}

TEST_CASE("boundedness invariants of the universal filters") {
  FiniteSpace s = FiniteSpace::sierpinski();
  CHECK(topo_ell_lead(s, 1) == 1);       // equals the covering number
  CHECK(topo_ell_trail(s, 1) == 1);      // point closures cover: equals density
  CHECK(topo_ell_vee(s, 1) == 2);        // the vee collapses to the diagonal
  CHECK(topo_ell_wedge(s, 1) == 1);
  CHECK(topo_uell(s) == 1);              // one clopen component
  CHECK(topo_uell(FiniteSpace::discrete(4)) == 4);
  CHECK(topo_ell_omega(FiniteSpace::discrete(4)) == 4);
  CHECK(topo_ell_omega(s) == 1);

  for (const Entourage& e : enumerate_preorders(3)) {
    FiniteSpace x = FiniteSpace::from_preorder(e);
    CHECK(topo_ell_lead(x, 1) == invariant(x, {InvariantKind::l, 0}));
    CHECK(topo_ell_trail(x, 1) == invariant(x, {InvariantKind::d, 0}));
    CHECK(universal_quasi_min_by_search(x) == x.preorder());
  }
}
