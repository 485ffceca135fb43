#ifndef QULAB_STRUCTURE_HPP
#define QULAB_STRUCTURE_HPP

#include <optional>
#include <string>
#include <vector>

#include "qulab/preuniformity.hpp"

namespace qulab {

/// How two quasi-uniformities interact.  On principal filters the
/// quantifier-swapped ("normally ...") variants collapse onto the plain ones,
/// because every universal quantifier is decided at the filter minimum; both
/// are still evaluated from their own defining formulas.
struct CommutingProfile {
  bool commuting = false;
  bool pm_subcommuting = false;
  bool normally_pm_subcommuting = false;
  bool normally_commuting = false;
  /// The four equivalent formulations (two filter inclusions, two quasi-ness
  /// checks on the composites) agree.
  bool prop_consistent = true;

  std::optional<std::pair<int, int>> commuting_witness;
  std::optional<std::pair<int, int>> pm_witness;
};

CommutingProfile commuting_profile(const PreUniformity& l, const PreUniformity& r);

/// The symmetrized composite filter generated by (L.R^{-1}) join (R.L^{-1}).
/// A uniformity whenever L and R subcommute; its minimum is symmetric by
/// construction.
PreUniformity quasi_roelcke(const PreUniformity& l, const PreUniformity& r);

/// A [0,1]-valued function with dyadic values on a finite carrier.
struct StepFunction {
  std::vector<Dyadic> values;

  bool is_continuous(const FiniteSpace& x) const;
  PointSet preimage_lt_one() const;  // {x : f(x) < 1}
  PointSet zero_set() const;
};

/// Continuous f with f = 0 on A and f < 1 only inside the interior of the
/// closure of B(A;E).  The construction saturates A under
/// closure-of-ball steps; normality makes the limit clopen and its indicator
/// complement is the separator.  Throws when U is not normal w.r.t. the
/// space, when E is not in the filter, or when the saturation escapes the
/// target region (U then fails to generate the topology).
StepFunction urysohn_separator(const FiniteSpace& x, const PreUniformity& u, PointSet a,
                               const Entourage& e);

struct SeparatingFunctionFamily {
  std::vector<StepFunction> functions;
  bool separates_points = false;
};

/// One separator per (A, E) pair; the hypothesis that every ordered pair of
/// distinct points is split by some (A, E) is checked first and a violating
/// pair reported on failure.
SeparatingFunctionFamily separating_functions(const FiniteSpace& x, const PreUniformity& u,
                                              const std::vector<std::pair<PointSet, Entourage>>& families);

/// Which covering argument produces the separating family of pairs.
enum class PairsMode {
  inverse_boundedness,    // covers the carrier by inverse balls
  forward_boundedness,    // the same argument applied to the inverse filters
  commuting_boundedness,  // covers by symmetrized two-step balls
  auxiliary,              // covers via an auxiliary filter and its closures
};

PairsMode parse_pairs_mode(const std::string& name);
std::string pairs_mode_name(PairsMode mode);

struct SeparatingPairsResult {
  /// Indexed family of entourage pairs; the intersection of first.second^{-1}
  /// over the family equals the diagonal when one_separated holds.
  std::vector<std::pair<Entourage, Entourage>> pairs;
  long long family_size = 0;
  long long bound = 0;
  std::string bound_formula;
  bool one_separated = false;
  bool within_bound = false;
};

/// Runs the proof-shaped construction of a separating family of entourage
/// pairs, with all filter choices pinned to minima and all covering sets
/// chosen canonically.  Premises (subcommutation, a common Hausdorff
/// generated topology, and the mode-specific conditions) are checked and
/// reported by name on failure.  The auxiliary mode needs `aux` and an
/// ambient space.
SeparatingPairsResult separating_pairs(const PreUniformity& l, const PreUniformity& r,
                                       PairsMode mode, const PreUniformity* aux = nullptr);

struct InequalityRow {
  std::string id;
  bool applicable = false;
  std::string skipped_premise;  // when not applicable
  long long lhs = 0;
  long long rhs = 0;
  bool holds = false;
};

struct PsiBoundReport {
  std::vector<InequalityRow> rows;
  bool all_applicable_hold = true;
};

/// Evaluates both sides of every pseudocharacter upper bound whose premises
/// hold for the pair (L,R) relative to L's ambient space; inapplicable rows
/// are kept with the failed premise named.
PsiBoundReport psi_bound_report(const PreUniformity& l, const PreUniformity& r);

// Topological boundedness invariants of a space, evaluated on the universal
// filters (used by the bound report and the search harness).
long long topo_ell_lead(const FiniteSpace& x, int n);
long long topo_ell_trail(const FiniteSpace& x, int n);
long long topo_ell_wedge(const FiniteSpace& x, int n);
long long topo_ell_vee(const FiniteSpace& x, int n);
long long topo_ellbar_lead(const FiniteSpace& x, int n);
long long topo_ellbar_trail(const FiniteSpace& x, int n);
long long topo_ell_omega(const FiniteSpace& x);
long long topo_uell(const FiniteSpace& x);
/// q-variants, computed through an independent enumeration of transitive
/// neighborhood assignments (they provably coincide with the plain variants
/// on finite carriers; the harness flags any mismatch).
long long topo_qell_lead(const FiniteSpace& x, int n);
long long topo_qell_trail(const FiniteSpace& x, int n);
long long topo_qell_wedge(const FiniteSpace& x, int n);
long long topo_qell_vee(const FiniteSpace& x, int n);
long long topo_qell_omega(const FiniteSpace& x);
/// The minimum of the universal quasi-uniformity found by exhaustive search
/// over transitive neighborhood assignments (small carriers only).
Entourage universal_quasi_min_by_search(const FiniteSpace& x);

}  // namespace qulab

#endif
