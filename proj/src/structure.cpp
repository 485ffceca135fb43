#include "qulab/structure.hpp"

#include <algorithm>

namespace qulab {

namespace {

long long ell_of(const Entourage& m) {
  std::vector<PointSet> balls;
  for (int a = 0; a < m.size(); ++a) balls.push_back(m.row(a));
  return static_cast<long long>(exact_min_cover(balls, full_set(m.size())).size());
}

long long ellbar_of(const Entourage& m, const FiniteSpace& x) {
  std::vector<PointSet> balls;
  for (int a = 0; a < m.size(); ++a) balls.push_back(x.closure(m.row(a)));
  return static_cast<long long>(exact_min_cover(balls, full_set(m.size())).size());
}

void require_same_carrier(const PreUniformity& l, const PreUniformity& r) {
  if (l.size() != r.size()) fail_validation("filters live on different carriers");
}

void require_quasi(const PreUniformity& p, const char* side) {
  if (!classify(p).is_quasi) {
    fail_precondition(std::string(side) + " input is not a quasi-uniformity");
  }
}

}  // namespace

CommutingProfile commuting_profile(const PreUniformity& l, const PreUniformity& r) {
  require_same_carrier(l, r);
  require_quasi(l, "left");
  require_quasi(r, "right");

  const Entourage& lm = l.min();
  const Entourage& rm = r.min();
  CommutingProfile out;

  Entourage lr = lm.compose(rm);
  Entourage rl = rm.compose(lm);
  out.commuting = (lr == rl);
  if (!out.commuting) {
    auto w = lr.first_pair_not_in(rl);
    if (w.first < 0) w = rl.first_pair_not_in(lr);
    out.commuting_witness = w;
  }

  // Family inclusion L.R^{-1} subset R^{-1}.L reads backwards on minima:
  // the minimum of the larger family sits inside the minimum of the smaller.
  Entourage lm_rinv = lm.compose(rm.inverse());
  Entourage rinv_lm = rm.inverse().compose(lm);
  Entourage rm_linv = rm.compose(lm.inverse());
  Entourage linv_rm = lm.inverse().compose(rm);
  bool incl1 = rinv_lm.subset_of(lm_rinv);
  bool incl2 = linv_rm.subset_of(rm_linv);
  out.pm_subcommuting = incl1 && incl2;
  if (!incl1) {
    out.pm_witness = rinv_lm.first_pair_not_in(lm_rinv);
  } else if (!incl2) {
    out.pm_witness = linv_rm.first_pair_not_in(rm_linv);
  }

  // Quantifier-swapped variants: every choice lands on the minimum of a
  // principal filter, so the defining conditions reduce to the same
  // containments (kept as separate computations on purpose).
  out.normally_pm_subcommuting =
      rm.inverse().compose(lm).subset_of(lm.compose(rm.inverse())) &&
      lm.inverse().compose(rm).subset_of(rm.compose(lm.inverse()));
  out.normally_commuting = rl.subset_of(lr) && lr.subset_of(rl);

  bool comp1_quasi = lm_rinv.is_transitive();
  bool comp2_quasi = rm_linv.is_transitive();
  out.prop_consistent = (incl1 == incl2) && (incl2 == comp1_quasi) && (comp1_quasi == comp2_quasi);
  return out;
}

PreUniformity quasi_roelcke(const PreUniformity& l, const PreUniformity& r) {
  require_same_carrier(l, r);
  Entourage m = l.min().compose(r.min().inverse()).intersect(r.min().compose(l.min().inverse()));
  std::optional<FiniteSpace> ambient = l.ambient() ? l.ambient() : r.ambient();
  return PreUniformity::principal(std::move(m), std::move(ambient));
}

bool StepFunction::is_continuous(const FiniteSpace& x) const {
  for (int p = 0; p < x.size(); ++p) {
    for (int q : set_points(x.min_nbhd(p))) {
      if (!(values[static_cast<std::size_t>(q)] == values[static_cast<std::size_t>(p)])) return false;
    }
  }
  return true;
}

PointSet StepFunction::preimage_lt_one() const {
  PointSet out = 0;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (!(values[p] == Dyadic::one())) out |= singleton(static_cast<int>(p));
  }
  return out;
}

PointSet StepFunction::zero_set() const {
  PointSet out = 0;
  for (std::size_t p = 0; p < values.size(); ++p) {
    if (values[p] == Dyadic::zero()) out |= singleton(static_cast<int>(p));
  }
  return out;
}

StepFunction urysohn_separator(const FiniteSpace& x, const PreUniformity& u, PointSet a,
                               const Entourage& e) {
  if (u.size() != x.size() || e.size() != x.size()) {
    fail_validation("separator inputs live on different carriers");
  }
  if (!u.min().subset_of(e)) fail_precondition("entourage is not a member of the filter");
  if (u.ambient() && !(*u.ambient() == x)) {
    fail_validation("filter carries a different ambient space");
  }
  PreUniformity anchored = u.ambient() ? u : u.with_ambient(x);
  if (!is_normal(anchored)) fail_precondition("filter is not normal for this space");

  PointSet region = x.int_closure(e.ball(a));
  PointSet t = a;
  for (;;) {
    PointSet next = x.closure(u.min().ball(t));
    if (next == t) break;
    t = next;
  }
  if (!subset(t, region)) {
    fail_precondition("separator saturation escapes the target region; "
                      "the filter does not generate a compatible topology");
  }

  StepFunction f;
  f.values.assign(static_cast<std::size_t>(x.size()), Dyadic::one());
  for (int p : set_points(t)) f.values[static_cast<std::size_t>(p)] = Dyadic::zero();
  if (!f.is_continuous(x)) {
    throw Error(ErrorKind::internal, "separator is not continuous despite normality");
  }
  return f;
}

SeparatingFunctionFamily separating_functions(const FiniteSpace& x, const PreUniformity& u,
                                              const std::vector<std::pair<PointSet, Entourage>>& families) {
  for (int p = 0; p < x.size(); ++p) {
    for (int q = 0; q < x.size(); ++q) {
      if (p == q) continue;
      bool witnessed = false;
      for (const auto& [set_a, ent] : families) {
        if (contains_point(set_a, p) && !contains_point(x.closure(ent.ball(set_a)), q)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) {
        fail_precondition("separating hypothesis fails for pair (" + std::to_string(p) + "," +
                          std::to_string(q) + "): no family has " + std::to_string(p) +
                          " inside the set and " + std::to_string(q) +
                          " outside the closed ball");
      }
    }
  }

  SeparatingFunctionFamily out;
  for (const auto& [set_a, ent] : families) {
    out.functions.push_back(urysohn_separator(x, u, set_a, ent));
  }
  out.separates_points = true;
  for (int p = 0; p < x.size() && out.separates_points; ++p) {
    for (int q = p + 1; q < x.size(); ++q) {
      bool split = false;
      for (const StepFunction& f : out.functions) {
        if (!(f.values[static_cast<std::size_t>(p)] == f.values[static_cast<std::size_t>(q)])) {
          split = true;
          break;
        }
      }
      if (!split) {
        out.separates_points = false;
        break;
      }
    }
  }
  return out;
}

PairsMode parse_pairs_mode(const std::string& name) {
  if (name == "inverse_boundedness") return PairsMode::inverse_boundedness;
  if (name == "forward_boundedness") return PairsMode::forward_boundedness;
  if (name == "commuting_boundedness") return PairsMode::commuting_boundedness;
  if (name == "auxiliary") return PairsMode::auxiliary;
  fail_usage("unknown separating-pairs mode: " + name);
}

std::string pairs_mode_name(PairsMode mode) {
  switch (mode) {
    case PairsMode::inverse_boundedness: return "inverse_boundedness";
    case PairsMode::forward_boundedness: return "forward_boundedness";
    case PairsMode::commuting_boundedness: return "commuting_boundedness";
    case PairsMode::auxiliary: return "auxiliary";
  }
  fail_usage("unknown separating-pairs mode");
}

namespace {

void check_pairs_premises(const PreUniformity& l, const PreUniformity& r) {
  require_same_carrier(l, r);
  require_quasi(l, "left");
  require_quasi(r, "right");
  CommutingProfile profile = commuting_profile(l, r);
  if (!profile.normally_pm_subcommuting) {
    fail_precondition("premise failed: filters do not normally subcommute");
  }
  FiniteSpace tl = generated_topology(l);
  if (!(tl == generated_topology(r))) {
    fail_precondition("premise failed: filters generate different topologies");
  }
  if (!separation_check(tl, SeparationAxiom::Hausdorff).holds) {
    fail_precondition("premise failed: common topology not Hausdorff");
  }
}

bool intersection_is_diagonal(const std::vector<std::pair<Entourage, Entourage>>& pairs, int n) {
  Entourage acc = Entourage::full(n);
  for (const auto& [first, second] : pairs) {
    acc = acc.intersect(first.compose(second.inverse()));
  }
  return acc.is_diagonal();
}

SeparatingPairsResult finish(std::vector<std::pair<Entourage, Entourage>> pairs, long long bound,
                             std::string formula, int n) {
  SeparatingPairsResult out;
  out.one_separated = intersection_is_diagonal(pairs, n);
  out.pairs = std::move(pairs);
  out.family_size = static_cast<long long>(out.pairs.size());
  out.bound = bound;
  out.bound_formula = std::move(formula);
  out.within_bound = out.family_size <= bound;
  return out;
}

/// Core of the inverse-boundedness construction: a canonical cover of the
/// carrier by inverse balls of the left minimum, one pair per covering point.
SeparatingPairsResult pairs_by_inverse_cover(const PreUniformity& l, const PreUniformity& r,
                                             bool inverted, const std::string& formula) {
  const int n = l.size();
  const Entourage lm = inverted ? l.min().inverse() : l.min();
  const Entourage rm = inverted ? r.min().inverse() : r.min();

  long long bound = uniform_invariant(
                        PreUniformity::principal(lm.compose(lm.inverse())), UniformInvariant::psi) *
                    ell_of(lm.inverse());

  if (Entourage::diagonal(n) == Entourage::full(n)) {
    return finish({}, bound, formula, n);  // a single point needs no pairs
  }

  Entourage square = lm.compose(lm);
  if (!square.compose(square.inverse()).is_diagonal()) {
    fail_precondition("premise failed: no shrunk family separates the square composite");
  }
  // Cover the carrier by inverse balls of the (already minimal) witness.
  std::vector<PointSet> inv_balls;
  for (int p = 0; p < n; ++p) inv_balls.push_back(lm.inverse().row(p));
  std::vector<int> cover = exact_min_cover(inv_balls, full_set(n));

  std::vector<std::pair<Entourage, Entourage>> pairs;
  for (int z : cover) {
    if (!subset(rm.row(z), lm.row(z))) {
      fail_precondition("premise failed: right balls are not inside left balls at point " +
                        std::to_string(z));
    }
    if (!lm.inverse().compose(rm).subset_of(rm.compose(lm.inverse()))) {
      fail_precondition("premise failed: witness entourage does not subcommute");
    }
    pairs.emplace_back(lm, rm);
  }
  return finish(std::move(pairs), bound, formula, n);
}

SeparatingPairsResult pairs_by_commuting_cover(const PreUniformity& l, const PreUniformity& r) {
  const int n = l.size();
  const Entourage lm = l.min();
  const Entourage rm = r.min();

  CommutingProfile profile = commuting_profile(l, r);
  if (!profile.normally_commuting) {
    fail_precondition("premise failed: filters do not normally commute");
  }
  if (!lm.compose(lm.inverse()).compose(lm).is_diagonal()) {
    fail_precondition("premise failed: three-step composite meets off-diagonal pairs");
  }

  const std::string formula = "psi(L.L^-1.L) * ell(L.L^-1 v L^-1.L)";
  Entourage sym = lm.compose(lm.inverse()).intersect(lm.inverse().compose(lm));
  long long bound =
      uniform_invariant(PreUniformity::principal(lm.compose(lm.inverse()).compose(lm)),
                        UniformInvariant::psi) *
      ell_of(sym);

  if (Entourage::diagonal(n) == Entourage::full(n)) return finish({}, bound, formula, n);

  if (!lm.power(2).compose(lm.inverse().power(3)).compose(lm).is_diagonal()) {
    fail_precondition("premise failed: no shrunk family separates the five-step composite");
  }

  std::vector<PointSet> sym_balls;
  for (int p = 0; p < n; ++p) sym_balls.push_back(sym.row(p));
  std::vector<int> cover = exact_min_cover(sym_balls, full_set(n));

  std::vector<std::pair<Entourage, Entourage>> pairs;
  for (int a : cover) {
    if (!subset(rm.row(a), lm.row(a))) {
      fail_precondition("premise failed: right balls are not inside left balls at point " +
                        std::to_string(a));
    }
    if (!lm.compose(rm).subset_of(rm.compose(lm)) ||
        !lm.inverse().compose(rm).subset_of(rm.compose(lm.inverse()))) {
      fail_precondition("premise failed: witness entourage does not commute as required");
    }
    pairs.emplace_back(lm, rm);
  }
  return finish(std::move(pairs), bound, formula, n);
}

SeparatingPairsResult pairs_by_auxiliary(const PreUniformity& l, const PreUniformity& r,
                                         const PreUniformity& aux) {
  const int n = l.size();
  if (aux.size() != n) fail_validation("auxiliary filter lives on a different carrier");
  const FiniteSpace x =
      l.ambient() ? *l.ambient() : (aux.ambient() ? *aux.ambient() : generated_topology(l));
  const Entourage lm = l.min();
  const Entourage rm = r.min();
  const Entourage am = aux.min();

  // Closure (row-wise) of A^{-1}.A.L^3 must meet only the diagonal.
  Entourage core = am.inverse().compose(am).compose(lm.power(3));
  std::vector<PointSet> closed_rows;
  for (int p = 0; p < n; ++p) closed_rows.push_back(x.closure(core.row(p)));
  bool separated = true;
  for (int p = 0; p < n && separated; ++p) separated = (closed_rows[static_cast<std::size_t>(p)] == singleton(p));
  if (!separated) {
    fail_precondition("premise failed: closed auxiliary composite meets off-diagonal pairs");
  }

  const std::string formula = "psibar(A^-1.A.L) * ell(A) * ell_lead2(X)";
  long long ell_lead2 = topo_ell_lead(x, 2);
  long long bound = 1 * ell_of(am) * ell_lead2;

  if (Entourage::diagonal(n) == Entourage::full(n)) return finish({}, bound, formula, n);

  std::vector<PointSet> aux_balls;
  for (int p = 0; p < n; ++p) aux_balls.push_back(am.row(p));
  std::vector<int> anchors = exact_min_cover(aux_balls, full_set(n));

  std::vector<std::pair<Entourage, Entourage>> pairs;
  for (int z : anchors) {
    PointSet w = x.int_closure(core.row(z));
    PointSet reach2 = x.closure(am.compose(lm.power(2)).row(z));
    for (int y = 0; y < n; ++y) {
      if (!contains_point(w, y)) {
        if (rm.compose(rm).row(y) & reach2) {
          fail_precondition("premise failed: right filter cannot avoid the two-step closure near point " +
                            std::to_string(y));
        }
      } else if (!subset(rm.row(y), w)) {
        fail_precondition("premise failed: right balls escape the saturated region at point " +
                          std::to_string(y));
      }
    }
    // Per-point witness entourages are all the right minimum, so the
    // neighborhood assignment of the proof is the meet of the two minima.
    Entourage v = rm.intersect(lm);
    Entourage vv = v.compose(v.inverse());
    std::vector<PointSet> vv_balls;
    for (int p = 0; p < n; ++p) vv_balls.push_back(vv.row(p));
    std::vector<int> spread = exact_min_cover(vv_balls, full_set(n));
    if (static_cast<long long>(spread.size()) > ell_lead2) {
      fail_precondition("assignment cover exceeds the two-step boundedness of the space");
    }
    for (std::size_t i = 0; i < spread.size(); ++i) pairs.emplace_back(lm, rm);
  }
  return finish(std::move(pairs), bound, formula, n);
}

}  // namespace

SeparatingPairsResult separating_pairs(const PreUniformity& l, const PreUniformity& r,
                                       PairsMode mode, const PreUniformity* aux) {
  check_pairs_premises(l, r);
  switch (mode) {
    case PairsMode::inverse_boundedness:
      return pairs_by_inverse_cover(l, r, /*inverted=*/false, "psi(L.L^-1) * ell(L^-1)");
    case PairsMode::forward_boundedness: {
      PreUniformity li = derived_inverse(l);
      PreUniformity ri = derived_inverse(r);
      CommutingProfile inv_profile = commuting_profile(li, ri);
      if (!inv_profile.normally_pm_subcommuting) {
        fail_precondition("premise failed: inverse filters do not normally subcommute");
      }
      if (!(generated_topology(li) == generated_topology(ri))) {
        fail_precondition("premise failed: inverse filters generate different topologies");
      }
      return pairs_by_inverse_cover(l, r, /*inverted=*/true, "psi(L^-1.L) * ell(L)");
    }
    case PairsMode::commuting_boundedness:
      return pairs_by_commuting_cover(l, r);
    case PairsMode::auxiliary:
      if (aux == nullptr) fail_usage("auxiliary mode requires an auxiliary filter");
      return pairs_by_auxiliary(l, r, *aux);
  }
  fail_usage("unknown separating-pairs mode");
}

// ---------------------------------------------------------------------------
// Topological boundedness invariants via the universal filters

namespace {

Entourage universal_min(const FiniteSpace& x) { return x.preorder(); }

}  // namespace

long long topo_ell_lead(const FiniteSpace& x, int n) { return ell_of(universal_min(x).alt_lead(n)); }
long long topo_ell_trail(const FiniteSpace& x, int n) { return ell_of(universal_min(x).alt_trail(n)); }
long long topo_ell_wedge(const FiniteSpace& x, int n) {
  Entourage m = universal_min(x);
  return ell_of(m.alt_lead(n).unite(m.alt_trail(n)));
}
long long topo_ell_vee(const FiniteSpace& x, int n) {
  Entourage m = universal_min(x);
  return ell_of(m.alt_lead(n).intersect(m.alt_trail(n)));
}
long long topo_ellbar_lead(const FiniteSpace& x, int n) {
  return ellbar_of(universal_min(x).alt_lead(n), x);
}
long long topo_ellbar_trail(const FiniteSpace& x, int n) {
  return ellbar_of(universal_min(x).alt_trail(n), x);
}

long long topo_ell_omega(const FiniteSpace& x) {
  Entourage m = universal_min(x);
  long long best = ell_of(m.alt_lead(1).intersect(m.alt_trail(1)));
  Entourage prev_lead = m.alt_lead(1);
  Entourage prev_trail = m.alt_trail(1);
  for (int n = 2;; ++n) {
    Entourage lead = m.alt_lead(n);
    Entourage trail = m.alt_trail(n);
    best = std::min(best, ell_of(lead.intersect(trail)));
    if (lead == prev_lead && trail == prev_trail) return best;
    prev_lead = lead;
    prev_trail = trail;
  }
}

long long topo_uell(const FiniteSpace& x) {
  return ell_of(canonical(x, CanonicalKind::universal_uniform).min());
}

Entourage universal_quasi_min_by_search(const FiniteSpace& x) {
  // Sweeps revisit the same space for several invariants; the search result
  // depends only on the space.
  thread_local std::vector<std::pair<std::string, Entourage>> cache;
  const std::string key = x.encode();
  for (const auto& [k, v] : cache) {
    if (k == key) return v;
  }
  const int n = x.size();
  if (n > 4) {
    // Exhaustive enumeration is reserved for the dual-route checks at sweep
    // scale; transitivity of the minimal assignment settles larger carriers.
    Entourage m = x.preorder();
    if (!m.is_transitive()) throw Error(ErrorKind::internal, "minimal assignment not transitive");
    return m;
  }
  // Every transitive neighborhood assignment contains the minimal one, so
  // enumerate supersets of it over the free off-diagonal positions.
  std::vector<std::pair<int, int>> free_pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && !x.preorder().contains(a, b)) free_pairs.emplace_back(a, b);
    }
  }
  Entourage best = Entourage::full(n);
  const std::uint64_t limit = std::uint64_t{1} << free_pairs.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<int, int>> extra;
    for (std::size_t i = 0; i < free_pairs.size(); ++i) {
      if ((mask >> i) & 1) extra.push_back(free_pairs[i]);
    }
    Entourage candidate = x.preorder().unite(Entourage::from_pairs(n, extra));
    if (candidate.is_transitive()) best = best.intersect(candidate);
  }
  if (cache.size() > 64) cache.clear();
  cache.emplace_back(key, best);
  return best;
}

long long topo_qell_lead(const FiniteSpace& x, int n) {
  return ell_of(universal_quasi_min_by_search(x).alt_lead(n));
}
long long topo_qell_trail(const FiniteSpace& x, int n) {
  return ell_of(universal_quasi_min_by_search(x).alt_trail(n));
}
long long topo_qell_wedge(const FiniteSpace& x, int n) {
  Entourage m = universal_quasi_min_by_search(x);
  return ell_of(m.alt_lead(n).unite(m.alt_trail(n)));
}
long long topo_qell_vee(const FiniteSpace& x, int n) {
  Entourage m = universal_quasi_min_by_search(x);
  return ell_of(m.alt_lead(n).intersect(m.alt_trail(n)));
}
long long topo_qell_omega(const FiniteSpace& x) {
  Entourage m = universal_quasi_min_by_search(x);
  long long best = ell_of(m.alt_lead(1).intersect(m.alt_trail(1)));
  Entourage prev_lead = m.alt_lead(1);
  Entourage prev_trail = m.alt_trail(1);
  for (int n = 2;; ++n) {
    Entourage lead = m.alt_lead(n);
    Entourage trail = m.alt_trail(n);
    best = std::min(best, ell_of(lead.intersect(trail)));
    if (lead == prev_lead && trail == prev_trail) return best;
    prev_lead = lead;
    prev_trail = trail;
  }
}

// ---------------------------------------------------------------------------
// Pseudocharacter bound report

namespace {

struct RowBuilder {
  PsiBoundReport report;

  void add(const std::string& id, bool applicable, const std::string& premise, long long lhs,
           long long rhs) {
    InequalityRow row;
    row.id = id;
    row.applicable = applicable;
    if (!applicable) {
      row.skipped_premise = premise;
    } else {
      row.lhs = lhs;
      row.rhs = rhs;
      row.holds = lhs <= rhs;
      if (!row.holds) report.all_applicable_hold = false;
    }
    report.rows.push_back(std::move(row));
  }
};

}  // namespace

PsiBoundReport psi_bound_report(const PreUniformity& l, const PreUniformity& r) {
  require_same_carrier(l, r);
  require_quasi(l, "left");
  require_quasi(r, "right");
  if (!l.ambient() && !r.ambient()) {
    fail_precondition("bound report requires an ambient space");
  }
  const FiniteSpace& x = l.ambient() ? *l.ambient() : *r.ambient();

  const Entourage lm = l.min();
  const Entourage rm = r.min();
  PreUniformity fu = quasi_roelcke(l, r).with_ambient(x);

  CommutingProfile profile = commuting_profile(l, r);
  bool generating = (generated_topology(l) == x) && (generated_topology(r) == x);
  bool hausdorff = separation_check(x, SeparationAxiom::Hausdorff).holds;
  bool base = profile.normally_pm_subcommuting && generating && hausdorff;
  std::string base_premise =
      !profile.normally_pm_subcommuting ? "filters do not normally subcommute"
      : !generating                     ? "filters do not generate the ambient topology"
                                        : "ambient topology not Hausdorff";

  auto psi_of = [](const Entourage& m) {
    return uniform_invariant(PreUniformity::principal(m), UniformInvariant::psi);
  };
  const long long psi_fu = uniform_invariant(fu, UniformInvariant::psi);
  const long long ell_lead2 = topo_ell_lead(x, 2);

  RowBuilder rows;

  rows.add("fu_le_psibarL_ellLveeLinv_elllead2", base, base_premise, psi_fu,
           1 * ell_of(lm.intersect(lm.inverse())) * ell_lead2);
  rows.add("fu_le_psiLLinv_ellLinv", base, base_premise, psi_fu,
           psi_of(lm.compose(lm.inverse())) * ell_of(lm.inverse()));
  rows.add("fu_le_psiLlead2_qelltrail1", base, base_premise, psi_fu,
           psi_of(lm.alt_lead(2)) * topo_qell_trail(x, 1));

  bool trail3 = base && separation_degree(l, SeparationMode::trail, 3);
  rows.add("fu_trail3_le_psibarLinvL_ellL_elllead2", trail3,
           base ? "left filter not trail-3-separated" : base_premise, psi_fu,
           1 * ell_of(lm) * ell_lead2);
  rows.add("fu_trail3_le_psibarLtrail2_elllead1", trail3,
           base ? "left filter not trail-3-separated" : base_premise, psi_fu,
           1 * topo_ell_lead(x, 1));

  bool lead4 = base && separation_degree(l, SeparationMode::lead, 4);
  rows.add("fu_lead4_le_psibarLLinvL_ellsym_elllead2", lead4,
           base ? "left filter not lead-4-separated" : base_premise, psi_fu,
           1 * ell_of(lm.compose(lm.inverse()).intersect(lm.inverse().compose(lm))) * ell_lead2);
  rows.add("fu_lead4_le_psibarLlead3_ellvee2", lead4,
           base ? "left filter not lead-4-separated" : base_premise, psi_fu,
           1 * topo_ell_vee(x, 2));

  bool trail5 = base && separation_degree(l, SeparationMode::trail, 5);
  rows.add("fu_trail5_le_psibarLinvLLinvL_ellLinvL_elllead2", trail5,
           base ? "left filter not trail-5-separated" : base_premise, psi_fu,
           1 * ell_of(lm.inverse().compose(lm)) * ell_lead2);
  rows.add("fu_trail5_le_psibarLtrail4_qelltrail2_elllead2", trail5,
           base ? "left filter not trail-5-separated" : base_premise, psi_fu,
           1 * topo_qell_trail(x, 2) * ell_lead2);

  bool lead6 = base && separation_degree(l, SeparationMode::lead, 6);
  rows.add("fu_lead6_le_psibarLlead5_elllead2", lead6,
           base ? "left filter not lead-6-separated" : base_premise, psi_fu, 1 * ell_lead2);

  bool commuting3 = base && profile.normally_commuting &&
                    separation_degree(l, SeparationMode::both, 3) &&
                    separation_degree(r, SeparationMode::both, 3);
  rows.add("fu_commuting_le_psiLLinvL_ellsym", commuting3,
           base ? "filters not normally commuting and 3-separated" : base_premise, psi_fu,
           psi_of(lm.compose(lm.inverse()).compose(lm)) *
               ell_of(lm.compose(lm.inverse()).intersect(lm.inverse().compose(lm))));
  rows.add("fu_commuting_le_psiLlead3_qellvee2", commuting3,
           base ? "filters not normally commuting and 3-separated" : base_premise, psi_fu,
           psi_of(lm.alt_lead(3)) * topo_qell_vee(x, 2));

  bool inv_ok = false;
  std::string inv_premise = base_premise;
  if (base) {
    PreUniformity li = derived_inverse(l);
    PreUniformity ri = derived_inverse(r);
    CommutingProfile inv_profile = commuting_profile(li, ri);
    bool inv_cotopological = generated_topology(li) == generated_topology(ri);
    inv_ok = inv_profile.normally_pm_subcommuting && inv_cotopological;
    inv_premise = !inv_profile.normally_pm_subcommuting
                      ? "inverse filters do not normally subcommute"
                      : "inverse filters generate different topologies";
  }
  rows.add("fu_inv_le_psiLinvL_ellL", inv_ok, inv_premise, psi_fu,
           psi_of(lm.inverse().compose(lm)) * ell_of(lm));
  rows.add("fu_inv_le_psiLtrail2_qelllead1", inv_ok, inv_premise, psi_fu,
           psi_of(lm.alt_trail(2)) * topo_qell_lead(x, 1));
  rows.add("fu_inv_le_psiLvee2_ellL_ellLinv", inv_ok, inv_premise, psi_fu,
           psi_of(lm.alt_lead(2).intersect(lm.alt_trail(2))) * ell_of(lm) * ell_of(lm.inverse()));
  rows.add("fu_inv_le_psiLvee2_qelllead1_qelltrail1", inv_ok, inv_premise, psi_fu,
           psi_of(lm.alt_lead(2).intersect(lm.alt_trail(2))) * topo_qell_lead(x, 1) *
               topo_qell_trail(x, 1));

  // Local pseudocharacter of the symmetrized composites against the closed
  // pseudocharacter of the space.
  long long psibar_x = invariant(x, {InvariantKind::psibar, 0});
  rows.add("psidotLLinv_le_psibarX_elllead2", base, base_premise,
           uniform_invariant(PreUniformity::principal(lm.compose(lm.inverse())),
                             UniformInvariant::psidot),
           psibar_x * ell_lead2);
  rows.add("psidotRRinv_le_psibarX_elllead2", base, base_premise,
           uniform_invariant(PreUniformity::principal(rm.compose(rm.inverse())),
                             UniformInvariant::psidot),
           psibar_x * ell_lead2);

  rows.add("fu_le_psibarX_elllead2_minell", base, base_premise, psi_fu,
           psibar_x * ell_lead2 * std::min(ell_of(lm), ell_of(lm.inverse())));

  return rows.report;
}

}  // namespace qulab
