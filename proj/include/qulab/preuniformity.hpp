#ifndef QULAB_PREUNIFORMITY_HPP
#define QULAB_PREUNIFORMITY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qulab/relation.hpp"
#include "qulab/topology.hpp"

namespace qulab {

/// A filter of entourages with a finite base.  On a finite carrier every such
/// filter is principal, so all semantics are defined on the intersection of
/// the base (the filter minimum); the base itself is kept for provenance.
/// An optional ambient space supplies the topology needed by closure and
/// normality operations.
class PreUniformity {
 public:
  static PreUniformity from_base(std::vector<Entourage> base,
                                 std::optional<FiniteSpace> ambient = std::nullopt);
  static PreUniformity principal(Entourage min,
                                 std::optional<FiniteSpace> ambient = std::nullopt);
  static PreUniformity discrete(int n);  // principal at the diagonal

  int size() const { return min_.size(); }
  const Entourage& min() const { return min_; }
  const std::vector<Entourage>& base() const { return base_; }
  const std::optional<FiniteSpace>& ambient() const { return ambient_; }
  const FiniteSpace& require_ambient(const char* op) const;
  PreUniformity with_ambient(FiniteSpace space) const;

  /// Filter equality: same carrier and same minimum.
  bool same_filter(const PreUniformity& o) const {
    return min_ == o.min_;
  }
  /// Filter inclusion (this is a subfamily of o).
  bool subfilter_of(const PreUniformity& o) const {
    return o.min_.subset_of(min_);
  }

 private:
  PreUniformity(std::vector<Entourage> base, Entourage min, std::optional<FiniteSpace> ambient)
      : base_(std::move(base)), min_(std::move(min)), ambient_(std::move(ambient)) {}

  std::vector<Entourage> base_;
  Entourage min_ = Entourage::diagonal(1);
  std::optional<FiniteSpace> ambient_;
};

struct Classification {
  bool is_preuniformity = true;
  bool is_quasi = false;       // some member squares inside each member
  bool is_uniformity = false;  // quasi and symmetric up to the filter
  std::optional<bool> is_normal;  // only when an ambient space is present

  std::optional<std::pair<int, int>> quasi_witness;     // in min.min but not min
  std::optional<std::pair<int, int>> symmetry_witness;  // in min^{-1} but not min
  std::optional<PointSet> normality_witness;            // subset violating normality
};

/// Axioms on the principal filter: composability reduces to transitivity of
/// the minimum and symmetry of the filter to symmetry of the minimum.
Classification classify(const PreUniformity& p);

bool is_normal(const PreUniformity& p);  // throws without ambient

/// The topology whose opens are the sets W with B(x;min) inside W for all x
/// in W (the up-sets of the reflexive-transitive closure of the minimum).
FiniteSpace generated_topology(const PreUniformity& p);

// Derived filters (element-wise on the base; principal collapse applies).
PreUniformity derived_inverse(const PreUniformity& p);
PreUniformity derived_lead(const PreUniformity& p, int n);    // base U^{+-n}
PreUniformity derived_trail(const PreUniformity& p, int n);   // base U^{-+n}
PreUniformity derived_wedge(const PreUniformity& p, int n);   // lead(n) union trail(n)
PreUniformity derived_vee(const PreUniformity& p, int n);     // lead(n) intersect trail(n)
PreUniformity derived_closure(const PreUniformity& p);        // row-wise closure (needs ambient)
PreUniformity derived_compose(const PreUniformity& p, const PreUniformity& q);
PreUniformity derived_join(const PreUniformity& p, const PreUniformity& q);  // {U cap V}
PreUniformity derived_meet(const PreUniformity& p, const PreUniformity& q);  // {U cup V}

enum class SeparationMode { lead, trail, both };

/// Is the n-th alternating derived filter's intersection exactly the
/// diagonal?
bool separation_degree(const PreUniformity& p, SeparationMode mode, int n);

enum class UniformInvariant { ell, ellbar, chi, psi, psibar, psidot };

UniformInvariant parse_uniform_invariant(const std::string& name);

/// ell / ellbar are exact minimum covering numbers of the worst (minimum)
/// entourage; the character-type invariants equal 1 on principal filters,
/// where the minimum alone realizes every defining intersection.
long long uniform_invariant(const PreUniformity& p, UniformInvariant inv);

enum class CanonicalKind { pervin, universal_pre, universal_quasi, universal_uniform };

CanonicalKind parse_canonical_kind(const std::string& name);
std::string canonical_kind_name(CanonicalKind kind);

/// The canonical filters of a finite space:
///  - pervin: generated by the entourages (U x U) u ((X \ U) x X), U open;
///  - universal_pre: principal at the minimal-neighborhood assignment;
///  - universal_quasi: the largest quasi-uniformity below universal_pre
///    (equals universal_pre on finite spaces: the assignment is transitive);
///  - universal_uniform: the union of all uniformities below universal_pre,
///    found by exhaustive search over symmetric transitive neighborhood
///    assignments (carrier size capped at 8).
PreUniformity canonical(const FiniteSpace& x, CanonicalKind kind);

struct CardinalityBoundReport {
  long long carrier_size = 0;
  long long ell = 0;
  long long psi_trail2 = 0;
  bool injection_verified = false;
  bool bound_holds = false;
  /// f_x per point: the chosen anchor in the covering set.
  std::vector<int> anchor;
};

/// Builds the anchor-function injection witnessing |X| <= ell^psi for a
/// filter whose second trailing alternating power meets only the diagonal;
/// throws when that precondition fails.
CardinalityBoundReport cardinality_bound_check(const PreUniformity& p);

}  // namespace qulab

#endif
