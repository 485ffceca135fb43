#include "qulab/monoid.hpp"

namespace qulab {

namespace {

std::optional<MonoidViolation> find_violation(const std::vector<std::vector<int>>& table,
                                              const FiniteSpace& space, int* unit_out,
                                              bool* open_shifts_out) {
  const int n = space.size();
  if (static_cast<int>(table.size()) != n) {
    return MonoidViolation{"table", "table must have one row per point"};
  }
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[static_cast<std::size_t>(a)].size()) != n) {
      return MonoidViolation{"table", "row " + std::to_string(a) + " has the wrong length"};
    }
    for (int b = 0; b < n; ++b) {
      int v = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
      if (v < 0 || v >= n) {
        return MonoidViolation{"table", "entry (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") outside the carrier"};
      }
    }
  }

  int unit = -1;
  for (int e = 0; e < n && unit < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) {
      ok = table[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] == a &&
           table[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] == a;
    }
    if (ok) unit = e;
  }
  if (unit < 0) return MonoidViolation{"unit", "no two-sided unit"};
  *unit_out = unit;

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        int lhs = table[static_cast<std::size_t>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])][static_cast<std::size_t>(c)];
        int rhs = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])];
        if (lhs != rhs) {
          return MonoidViolation{"associativity", "(" + std::to_string(a) + "*" + std::to_string(b) +
                                                      ")*" + std::to_string(c) + " != " +
                                                      std::to_string(a) + "*(" + std::to_string(b) +
                                                      "*" + std::to_string(c) + ")"};
        }
      }
    }
  }

  // Joint continuity at (a,b): the product of minimal neighborhoods must sit
  // inside the minimal neighborhood of the product.
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      PointSet image = 0;
      for (int u : set_points(space.min_nbhd(a))) {
        for (int v : set_points(space.min_nbhd(b))) {
          image |= singleton(table[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]);
        }
      }
      if (!subset(image, space.min_nbhd(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]))) {
        return MonoidViolation{"continuity", "multiplication discontinuous at (" +
                                                 std::to_string(a) + "," + std::to_string(b) + ")"};
      }
    }
  }

  // Open shifts: images of minimal opens under x -> axb must be open.
  bool shifts_open = true;
  std::string shift_detail;
  for (int a = 0; a < n && shifts_open; ++a) {
    for (int b = 0; b < n && shifts_open; ++b) {
      for (int p = 0; p < n && shifts_open; ++p) {
        PointSet image = 0;
        for (int u : set_points(space.min_nbhd(p))) {
          int au = table[static_cast<std::size_t>(a)][static_cast<std::size_t>(u)];
          image |= singleton(table[static_cast<std::size_t>(au)][static_cast<std::size_t>(b)]);
        }
        if (!space.is_open(image)) {
          shifts_open = false;
          shift_detail = "image of the minimal neighborhood of " + std::to_string(p) +
                         " under x->" + std::to_string(a) + ".x." + std::to_string(b) +
                         " is not open";
        }
      }
    }
  }
  *open_shifts_out = shifts_open;
  if (!shifts_open) {
    // Caller decides whether this is fatal.
    return MonoidViolation{"open_shift", shift_detail};
  }
  return std::nullopt;
}

}  // namespace

std::optional<MonoidViolation> validate_monoid(const std::vector<std::vector<int>>& table,
                                               const FiniteSpace& space, bool require_open_shifts) {
  int unit = 0;
  bool open_shifts = false;
  auto violation = find_violation(table, space, &unit, &open_shifts);
  if (violation && (violation->kind != "open_shift" || require_open_shifts)) return violation;
  return std::nullopt;
}

TopoMonoid::TopoMonoid(std::vector<std::vector<int>> table, FiniteSpace space, int unit)
    : table_(std::move(table)), space_(std::move(space)), unit_(unit) {
  const int n = space_.size();
  inverse_.assign(static_cast<std::size_t>(n), -1);
  is_group_ = true;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (op(a, b) == unit_ && op(b, a) == unit_) inverse_[static_cast<std::size_t>(a)] = b;
    }
    if (inverse_[static_cast<std::size_t>(a)] < 0) is_group_ = false;
  }
  is_abelian_ = true;
  for (int a = 0; a < n && is_abelian_; ++a) {
    for (int b = 0; b < n; ++b) {
      if (op(a, b) != op(b, a)) {
        is_abelian_ = false;
        break;
      }
    }
  }
}

TopoMonoid TopoMonoid::make(const std::vector<std::vector<int>>& table, FiniteSpace space,
                            bool require_open_shifts) {
  int unit = 0;
  bool open_shifts = false;
  auto violation = find_violation(table, space, &unit, &open_shifts);
  if (violation && (violation->kind != "open_shift" || require_open_shifts)) {
    fail_validation("invalid topological monoid (" + violation->kind + "): " + violation->detail);
  }
  TopoMonoid m(table, std::move(space), unit);
  m.open_shifts_ = open_shifts;
  return m;
}

bool TopoMonoid::inversion_continuous() const {
  if (!is_group_) return false;
  for (int a = 0; a < size(); ++a) {
    PointSet image = 0;
    for (int u : set_points(space_.min_nbhd(a))) image |= singleton(inverse_of(u));
    if (!subset(image, space_.min_nbhd(inverse_of(a)))) return false;
  }
  return true;
}

PointSet TopoMonoid::mul(PointSet a, PointSet b) const {
  PointSet out = 0;
  for (int p : set_points(a)) {
    for (int q : set_points(b)) out |= singleton(op(p, q));
  }
  return out;
}

std::string TopoMonoid::encode() const {
  std::string out = std::to_string(size()) + ":";
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) out += std::to_string(op(a, b));
  }
  out += ":" + space_.encode();
  return out;
}

CanonicalQuasiUniformities canonical_quasi_uniformities(const TopoMonoid& m) {
  const int n = m.size();
  const PointSet ue = m.space().min_nbhd(m.unit());
  std::vector<PointSet> left_rows(static_cast<std::size_t>(n));
  std::vector<PointSet> right_rows(static_cast<std::size_t>(n));
  std::vector<PointSet> two_rows(static_cast<std::size_t>(n));
  std::vector<PointSet> roelcke_rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    PointSet xu = m.mul_left(x, ue);
    PointSet ux = m.mul_right(ue, x);
    left_rows[static_cast<std::size_t>(x)] = xu;
    right_rows[static_cast<std::size_t>(x)] = ux;
    two_rows[static_cast<std::size_t>(x)] = xu & ux;
    roelcke_rows[static_cast<std::size_t>(x)] = m.mul(ue, xu);
  }
  PreUniformity left = PreUniformity::principal(Entourage::from_rows(n, left_rows), m.space());
  PreUniformity right = PreUniformity::principal(Entourage::from_rows(n, right_rows), m.space());
  PreUniformity two = PreUniformity::principal(Entourage::from_rows(n, two_rows), m.space());
  PreUniformity roe = PreUniformity::principal(Entourage::from_rows(n, roelcke_rows), m.space());
  PreUniformity fu = quasi_roelcke(left, right);
  return CanonicalQuasiUniformities{std::move(left), std::move(right), std::move(two),
                                    std::move(roe), std::move(fu)};
}

namespace {

bool coarser(const FiniteSpace& weaker, const FiniteSpace& stronger) {
  // Every open of `weaker` is open in `stronger`: minimal neighborhoods of
  // the stronger topology refine those of the weaker one.
  for (int x = 0; x < weaker.size(); ++x) {
    if (!subset(stronger.min_nbhd(x), weaker.min_nbhd(x))) return false;
  }
  return true;
}

}  // namespace

MonoidProfileReport verify_monoid_properties(const TopoMonoid& m) {
  MonoidProfileReport rep;
  rep.open_shifts = m.has_open_shifts();
  rep.is_group = m.is_group();

  CanonicalQuasiUniformities c = canonical_quasi_uniformities(m);
  CommutingProfile profile = commuting_profile(c.left, c.right);
  rep.normally_commuting = profile.normally_commuting;
  rep.normally_pm_subcommuting = profile.normally_pm_subcommuting;
  rep.left_normal = is_normal(c.left);
  rep.right_normal = is_normal(c.right);

  rep.hausdorff = separation_check(m.space(), SeparationAxiom::Hausdorff).holds;
  rep.fu_separated = c.quasi_roelcke.min().is_diagonal();
  rep.hausdorff_iff_separated = (rep.hausdorff == rep.fu_separated);

  FiniteSpace tau_left = generated_topology(c.left);
  FiniteSpace tau_right = generated_topology(c.right);
  FiniteSpace tau_two = generated_topology(c.two_sided);
  FiniteSpace tau_roelcke = generated_topology(c.roelcke);
  rep.topologies_generated = tau_left == m.space() && tau_right == m.space() &&
                             tau_two == m.space() && tau_roelcke == m.space();

  FiniteSpace tau_fu = generated_topology(c.quasi_roelcke);
  rep.fu_topology_coarser = coarser(tau_fu, m.space());
  rep.fu_topology_equal = (tau_fu == m.space());

  rep.inclusion_diagram = c.two_sided.min().subset_of(c.left.min()) &&
                          c.two_sided.min().subset_of(c.right.min()) &&
                          c.left.min().subset_of(c.roelcke.min()) &&
                          c.right.min().subset_of(c.roelcke.min()) &&
                          c.left.min().subset_of(c.quasi_roelcke.min()) &&
                          c.right.min().subset_of(c.quasi_roelcke.min());

  if (m.is_group()) {
    PreUniformity li = derived_inverse(c.left);
    PreUniformity ri = derived_inverse(c.right);
    CommutingProfile inv_profile = commuting_profile(li, ri);
    rep.inverse_pair_normally_commuting = inv_profile.normally_commuting;
    rep.inverse_pair_normally_pm_subcommuting = inv_profile.normally_pm_subcommuting;
    rep.inverse_pair_cotopological = generated_topology(li) == generated_topology(ri);

    // Uniform continuity of inversion and of all two-sided shifts with
    // respect to the symmetrized composite.
    const Entourage& fu = c.quasi_roelcke.min();
    bool uqtg = true;
    for (int x = 0; x < m.size() && uqtg; ++x) {
      for (int y : set_points(fu.row(x))) {
        if (!fu.contains(m.inverse_of(x), m.inverse_of(y))) {
          uqtg = false;
          break;
        }
      }
    }
    for (int a = 0; a < m.size() && uqtg; ++a) {
      for (int b = 0; b < m.size() && uqtg; ++b) {
        for (int x = 0; x < m.size() && uqtg; ++x) {
          for (int y : set_points(fu.row(x))) {
            if (!fu.contains(m.op(m.op(a, x), b), m.op(m.op(a, y), b))) {
              uqtg = false;
              break;
            }
          }
        }
      }
    }
    rep.uniform_quasi_topological_group = uqtg;

    bool topo_group = m.inversion_continuous();
    rep.topological_group = topo_group;
    if (topo_group) {
      rep.fu_equals_roelcke_topology = (tau_fu == tau_roelcke);
    }
  }

  bool theorems = true;
  if (m.has_open_shifts()) {
    theorems = rep.normally_commuting && rep.normally_pm_subcommuting && rep.left_normal &&
               rep.right_normal && rep.hausdorff_iff_separated && rep.topologies_generated &&
               rep.fu_topology_coarser && rep.inclusion_diagram;
    if (m.is_group()) {
      theorems = theorems && *rep.inverse_pair_normally_commuting &&
                 *rep.inverse_pair_normally_pm_subcommuting && *rep.inverse_pair_cotopological &&
                 *rep.uniform_quasi_topological_group;
      if (*rep.topological_group) theorems = theorems && *rep.fu_equals_roelcke_topology;
    }
  }
  rep.all_theorems_hold = theorems;
  return rep;
}

}  // namespace qulab
