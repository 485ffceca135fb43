#ifndef QULAB_MONOID_HPP
#define QULAB_MONOID_HPP

#include <optional>
#include <string>
#include <vector>

#include "qulab/structure.hpp"

namespace qulab {

/// A finite monoid (Cayley table with a two-sided unit) carrying a topology
/// on the same carrier.  Construction validates associativity, the unit, and
/// joint continuity of multiplication; monoids whose two-sided shifts are not
/// open maps can be kept (flagged) so the role of that hypothesis can be
/// probed.
class TopoMonoid {
 public:
  static TopoMonoid make(const std::vector<std::vector<int>>& table, FiniteSpace space,
                         bool require_open_shifts = true);

  int size() const { return space_.size(); }
  int op(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int unit() const { return unit_; }
  const FiniteSpace& space() const { return space_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_group() const { return is_group_; }
  bool is_abelian() const { return is_abelian_; }
  bool has_open_shifts() const { return open_shifts_; }
  /// Group inverse; only valid when is_group().
  int inverse_of(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  /// Inversion map is continuous (groups only).
  bool inversion_continuous() const;

  PointSet mul(PointSet a, PointSet b) const;
  PointSet mul_left(int a, PointSet b) const { return mul(singleton(a), b); }
  PointSet mul_right(PointSet a, int b) const { return mul(a, singleton(b)); }

  std::string encode() const;

 private:
  TopoMonoid(std::vector<std::vector<int>> table, FiniteSpace space, int unit);

  std::vector<std::vector<int>> table_;
  FiniteSpace space_;
  int unit_ = 0;
  bool is_group_ = false;
  bool is_abelian_ = false;
  bool open_shifts_ = false;
  std::vector<int> inverse_;
};

struct CanonicalQuasiUniformities {
  PreUniformity left;
  PreUniformity right;
  PreUniformity two_sided;
  PreUniformity roelcke;
  PreUniformity quasi_roelcke;
};

/// The five canonical filters of the monoid, with minima at the unit's
/// minimal neighborhood: y in xU (left), y in Ux (right), their meet, y in
/// UxU, and the symmetrized composite.
CanonicalQuasiUniformities canonical_quasi_uniformities(const TopoMonoid& m);

struct MonoidProfileReport {
  bool open_shifts = false;
  bool is_group = false;

  // Structure of the left/right pair.
  bool normally_commuting = false;
  bool normally_pm_subcommuting = false;
  bool left_normal = false;
  bool right_normal = false;

  bool hausdorff = false;
  bool fu_separated = false;
  bool hausdorff_iff_separated = false;

  bool topologies_generated = false;  // left/right/meet/roelcke all give the space topology
  bool fu_topology_coarser = false;
  bool fu_topology_equal = false;     // the symmetrized composite recovers the topology
  bool inclusion_diagram = false;     // two-sided <= L,R <= roelcke; L,R <= FU on minima

  // Groups only.
  std::optional<bool> inverse_pair_normally_commuting;
  std::optional<bool> inverse_pair_normally_pm_subcommuting;
  std::optional<bool> inverse_pair_cotopological;
  std::optional<bool> uniform_quasi_topological_group;
  std::optional<bool> topological_group;
  std::optional<bool> fu_equals_roelcke_topology;  // for topological groups

  /// Every theorem-backed flag above that applies does hold.
  bool all_theorems_hold = false;
};

MonoidProfileReport verify_monoid_properties(const TopoMonoid& m);

/// Named construction failure for reporting.
struct MonoidViolation {
  std::string kind;  // associativity | unit | continuity | open_shift | table
  std::string detail;
};

/// Non-throwing validation; returns the first violation or the monoid.
std::optional<MonoidViolation> validate_monoid(const std::vector<std::vector<int>>& table,
                                               const FiniteSpace& space,
                                               bool require_open_shifts = true);

}  // namespace qulab

#endif
