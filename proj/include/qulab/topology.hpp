#ifndef QULAB_TOPOLOGY_HPP
#define QULAB_TOPOLOGY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qulab/relation.hpp"

namespace qulab {

/// A finite topological space.  The canonical state is the minimal-
/// neighborhood map, i.e. the specialization relation {(x,y) : y in
/// min_nbhd(x)}; opens are exactly its up-closed sets.
class FiniteSpace {
 public:
  /// Builds from an explicit open-set family; the family must contain the
  /// empty set and the carrier and be closed under union and intersection
  /// (violations are reported with the offending pair).
  static FiniteSpace from_opens(int n, const std::vector<PointSet>& opens);
  /// Builds from a reflexive transitive relation; opens are its up-sets.
  static FiniteSpace from_preorder(const Entourage& preorder);
  static FiniteSpace discrete(int n);
  static FiniteSpace indiscrete(int n);
  static FiniteSpace sierpinski();  // opens {}, {1}, {0,1}

  int size() const { return preorder_.size(); }
  PointSet min_nbhd(int x) const { return preorder_.row(x); }
  const Entourage& preorder() const { return preorder_; }

  bool is_open(PointSet a) const;
  bool is_closed(PointSet a) const;
  PointSet closure(PointSet a) const;
  PointSet interior(PointSet a) const;
  PointSet int_closure(PointSet a) const;
  PointSet closure_point(int x) const { return down_.row(x); }

  /// All open sets in increasing bit-mask order (guarded for small carriers).
  std::vector<PointSet> opens() const;
  /// Distinct minimal neighborhoods (the canonical minimal base).
  std::vector<PointSet> min_nbhd_family() const;
  Cover min_nbhd_cover() const;

  /// Clopen component of x: the smallest clopen set containing x.
  PointSet component(int x) const;
  std::vector<PointSet> components() const;

  FiniteSpace subspace(PointSet carrier) const;

  std::string encode() const { return preorder_.encode(); }
  bool operator==(const FiniteSpace& other) const = default;

 private:
  explicit FiniteSpace(Entourage preorder);

  Entourage preorder_;   // row x = min_nbhd(x)
  Entourage down_;       // row x = closure of {x}
  std::vector<PointSet> components_;  // indexed by point
};

enum class SeparationAxiom {
  T0,
  T1,
  Hausdorff,
  functionally_Hausdorff,
  regular,
  completely_regular,
  quasi_regular,
  collectively_Hausdorff,
};

SeparationAxiom parse_separation_axiom(const std::string& name);
std::string separation_axiom_name(SeparationAxiom axiom);

struct SeparationVerdict {
  bool holds = false;
  /// Violating pair of points (when the axiom quantifies over pairs).
  std::optional<std::pair<int, int>> pair_witness;
  /// Violating set (e.g. the open set with no closed shrinking).
  std::optional<PointSet> set_witness;
};

SeparationVerdict separation_check(const FiniteSpace& x, SeparationAxiom axiom);

struct StronglyDiscreteVerdict {
  bool holds = false;
  /// Point -> chosen neighborhood, for each point of D (when holds).
  std::vector<std::pair<int, PointSet>> assignment;
  /// A point whose every neighborhood meets two assigned sets (when not).
  std::optional<int> blocking_point;
};

/// Does D admit a neighborhood assignment (U_d), d in D, such that every
/// point of the space has a neighborhood meeting at most one U_d?
/// Minimal neighborhoods are optimal choices, so the check is exact.
StronglyDiscreteVerdict strongly_discrete_check(const FiniteSpace& x, PointSet d);

// ---------------------------------------------------------------------------
// Cardinal invariants

enum class InvariantKind {
  nw, d, hd, s, e, c, de, dc, l, hl, lbar,
  lstar, lbarstar, lstar_half, lbarstar_half, lstar_omega, lbarstar_omega,
  psi, chi, psibar, delta, deltabar, log_of_size,
};

struct InvariantId {
  InvariantKind kind;
  int index = 0;  // star-family index n (the half-variants carry it too)

  bool operator==(const InvariantId&) const = default;
};

/// Exact value of a classical or star-covering invariant.  Star-covering
/// values are computed on the minimal-neighborhood cover, which refines every
/// open cover and is therefore the worst case (validated against full cover
/// enumeration in the tests).
long long invariant(const FiniteSpace& x, InvariantId id);

struct InvariantReport {
  std::map<std::string, long long> values;
  std::map<std::string, std::vector<int>> point_witnesses;
  std::map<std::string, std::vector<PointSet>> family_witnesses;
};

/// All invariants supported on x (Hausdorff-only ones included when defined).
InvariantReport invariant_report(const FiniteSpace& x);

/// min{k : 2^k >= n}.
int log2_ceiling(long long n);

// ---------------------------------------------------------------------------
// Exact covering subroutines (shared by the uniform invariants as well)

/// Smallest subfamily of `sets` whose union covers `target`; returns the
/// lexicographically first optimal index selection.  Throws if no subfamily
/// covers the target.
std::vector<int> exact_min_cover(const std::vector<PointSet>& sets, PointSet target);

// ---------------------------------------------------------------------------
// Dyadic pseudometrics

/// Non-negative dyadic rational num / 2^exp, kept in lowest terms.
struct Dyadic {
  std::int64_t num = 0;
  int exp = 0;

  static Dyadic zero() { return {0, 0}; }
  static Dyadic one() { return {1, 0}; }
  static Dyadic half_power(int k) { return Dyadic{1, k}.normalized(); }

  Dyadic normalized() const;
  Dyadic plus(const Dyadic& o) const;
  static Dyadic max(const Dyadic& a, const Dyadic& b);
  bool operator==(const Dyadic&) const = default;
  bool less_or_equal(const Dyadic& o) const;
  std::string to_string() const;
};

struct PseudometricTable {
  int n = 0;
  std::vector<std::vector<Dyadic>> values;

  bool is_pseudometric() const;  // symmetric, zero diagonal, triangle
  /// Separates points: d(x,y) > 0 for x != y.
  bool separates_points() const;
  /// Continuous as a function on the product space.
  bool is_continuous(const FiniteSpace& x) const;
};

struct SigmaDiscreteMetricResult {
  PseudometricTable metric;                 // max over stages of 2^-n d_n
  std::vector<PseudometricTable> stages;    // the individual d_n
  std::vector<std::vector<std::pair<int, PointSet>>> assignments;  // per piece
};

/// The pseudometric built from a partition into strongly discrete pieces with
/// clopen neighborhood assignments avoiding earlier pieces.  Stage n assigns
/// distance 1 to pairs split by the stage-n assignment; the result is the
/// maximum of the scaled stages.  Throws when the partition is invalid or no
/// clopen assignment exists.
SigmaDiscreteMetricResult sigma_discrete_metric(const FiniteSpace& x,
                                                const std::vector<PointSet>& partition);

}  // namespace qulab

#endif
