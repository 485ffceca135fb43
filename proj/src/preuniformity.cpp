#include "qulab/preuniformity.hpp"

#include <algorithm>

namespace qulab {

PreUniformity PreUniformity::from_base(std::vector<Entourage> base,
                                       std::optional<FiniteSpace> ambient) {
  if (base.empty()) fail_validation("a pre-uniformity base must be non-empty");
  Entourage min = base.front();
  for (const Entourage& u : base) {
    if (u.size() != min.size()) fail_validation("base entourages live on different carriers");
    min = min.intersect(u);
  }
  if (ambient && ambient->size() != min.size()) {
    fail_validation("ambient space carrier does not match the base");
  }
  return PreUniformity(std::move(base), std::move(min), std::move(ambient));
}

PreUniformity PreUniformity::principal(Entourage min, std::optional<FiniteSpace> ambient) {
  std::vector<Entourage> base{min};
  return from_base(std::move(base), std::move(ambient));
}

PreUniformity PreUniformity::discrete(int n) { return principal(Entourage::diagonal(n)); }

const FiniteSpace& PreUniformity::require_ambient(const char* op) const {
  if (!ambient_) fail_precondition(std::string(op) + " requires an ambient space");
  return *ambient_;
}

PreUniformity PreUniformity::with_ambient(FiniteSpace space) const {
  return from_base(base_, std::move(space));
}

Classification classify(const PreUniformity& p) {
  Classification c;
  const Entourage& m = p.min();

  Entourage mm = m.compose(m);
  c.is_quasi = mm.subset_of(m);
  if (!c.is_quasi) c.quasi_witness = mm.first_pair_not_in(m);

  bool symmetric = m.is_symmetric();
  if (!symmetric) c.symmetry_witness = m.inverse().first_pair_not_in(m);
  c.is_uniformity = c.is_quasi && symmetric;

  if (p.ambient()) {
    const FiniteSpace& x = *p.ambient();
    if (x.size() > 20) fail_usage("normality check supported only for carriers of size <= 20");
    c.is_normal = true;
    const PointSet mask = full_set(x.size());
    for (PointSet a = 0;; ++a) {
      if (!subset(x.closure(a), x.int_closure(m.ball(a)))) {
        c.is_normal = false;
        c.normality_witness = a;
        break;
      }
      if (a == mask) break;
    }
  }
  return c;
}

bool is_normal(const PreUniformity& p) {
  p.require_ambient("normality");
  return *classify(p).is_normal;
}

FiniteSpace generated_topology(const PreUniformity& p) {
  return FiniteSpace::from_preorder(p.min().transitive_closure());
}

namespace {

std::optional<FiniteSpace> merged_ambient(const PreUniformity& p, const PreUniformity& q) {
  if (p.ambient()) return p.ambient();
  return q.ambient();
}

}  // namespace

PreUniformity derived_inverse(const PreUniformity& p) {
  return PreUniformity::principal(p.min().inverse(), p.ambient());
}

PreUniformity derived_lead(const PreUniformity& p, int n) {
  return PreUniformity::principal(p.min().alt_lead(n), p.ambient());
}

PreUniformity derived_trail(const PreUniformity& p, int n) {
  return PreUniformity::principal(p.min().alt_trail(n), p.ambient());
}

PreUniformity derived_wedge(const PreUniformity& p, int n) {
  return PreUniformity::principal(p.min().alt_lead(n).unite(p.min().alt_trail(n)), p.ambient());
}

PreUniformity derived_vee(const PreUniformity& p, int n) {
  return PreUniformity::principal(p.min().alt_lead(n).intersect(p.min().alt_trail(n)), p.ambient());
}

PreUniformity derived_closure(const PreUniformity& p) {
  const FiniteSpace& x = p.require_ambient("entourage closure");
  std::vector<PointSet> rows;
  for (int a = 0; a < p.size(); ++a) rows.push_back(x.closure(p.min().row(a)));
  return PreUniformity::principal(Entourage::from_rows(p.size(), std::move(rows)), p.ambient());
}

PreUniformity derived_compose(const PreUniformity& p, const PreUniformity& q) {
  return PreUniformity::principal(p.min().compose(q.min()), merged_ambient(p, q));
}

PreUniformity derived_join(const PreUniformity& p, const PreUniformity& q) {
  return PreUniformity::principal(p.min().intersect(q.min()), merged_ambient(p, q));
}

PreUniformity derived_meet(const PreUniformity& p, const PreUniformity& q) {
  return PreUniformity::principal(p.min().unite(q.min()), merged_ambient(p, q));
}

bool separation_degree(const PreUniformity& p, SeparationMode mode, int n) {
  if (n < 1) fail_usage("separation degree requires n >= 1");
  bool lead_ok = p.min().alt_lead(n).is_diagonal();
  bool trail_ok = p.min().alt_trail(n).is_diagonal();
  switch (mode) {
    case SeparationMode::lead: return lead_ok;
    case SeparationMode::trail: return trail_ok;
    case SeparationMode::both: return lead_ok && trail_ok;
  }
  fail_usage("unknown separation mode");
}

UniformInvariant parse_uniform_invariant(const std::string& name) {
  if (name == "ell") return UniformInvariant::ell;
  if (name == "ellbar") return UniformInvariant::ellbar;
  if (name == "chi") return UniformInvariant::chi;
  if (name == "psi") return UniformInvariant::psi;
  if (name == "psibar") return UniformInvariant::psibar;
  if (name == "psidot") return UniformInvariant::psidot;
  fail_usage("unknown uniform invariant: " + name);
}

long long uniform_invariant(const PreUniformity& p, UniformInvariant inv) {
  switch (inv) {
    case UniformInvariant::ell: {
      std::vector<PointSet> balls;
      for (int a = 0; a < p.size(); ++a) balls.push_back(p.min().row(a));
      return static_cast<long long>(exact_min_cover(balls, full_set(p.size())).size());
    }
    case UniformInvariant::ellbar: {
      const FiniteSpace& x = p.require_ambient("weak boundedness");
      std::vector<PointSet> balls;
      for (int a = 0; a < p.size(); ++a) balls.push_back(x.closure(p.min().row(a)));
      return static_cast<long long>(exact_min_cover(balls, full_set(p.size())).size());
    }
    case UniformInvariant::chi:
    case UniformInvariant::psi:
    case UniformInvariant::psidot:
      // {min} is a base and realizes the filter intersection, pointwise too.
      return 1;
    case UniformInvariant::psibar:
      // psibar(U) = psi of the closure family, which is principal as well.
      p.require_ambient("closed pseudocharacter");
      return 1;
  }
  fail_usage("unknown uniform invariant");
}

CanonicalKind parse_canonical_kind(const std::string& name) {
  if (name == "pervin") return CanonicalKind::pervin;
  if (name == "universal_pre") return CanonicalKind::universal_pre;
  if (name == "universal_quasi") return CanonicalKind::universal_quasi;
  if (name == "universal_uniform") return CanonicalKind::universal_uniform;
  fail_usage("unknown canonical kind: " + name);
}

std::string canonical_kind_name(CanonicalKind kind) {
  switch (kind) {
    case CanonicalKind::pervin: return "pervin";
    case CanonicalKind::universal_pre: return "universal_pre";
    case CanonicalKind::universal_quasi: return "universal_quasi";
    case CanonicalKind::universal_uniform: return "universal_uniform";
  }
  fail_usage("unknown canonical kind");
}

namespace {

Entourage pervin_subbase_entourage(const FiniteSpace& x, PointSet open) {
  // (U x U) united with ((X \ U) x X).
  const int n = x.size();
  std::vector<PointSet> rows(static_cast<std::size_t>(n));
  for (int a = 0; a < n; ++a) {
    rows[static_cast<std::size_t>(a)] = contains_point(open, a) ? open : full_set(n);
  }
  return Entourage::from_rows(n, std::move(rows));
}

/// All partitions of {0..n-1} into open (hence clopen) classes give exactly
/// the symmetric transitive neighborhood assignments.
void enumerate_open_partitions(const FiniteSpace& x, int point, std::vector<PointSet>& classes,
                               std::vector<Entourage>& found) {
  const int n = x.size();
  if (point == n) {
    for (PointSet cls : classes) {
      if (!x.is_open(cls)) return;
    }
    std::vector<PointSet> rows(static_cast<std::size_t>(n));
    for (PointSet cls : classes) {
      for (int a : set_points(cls)) rows[static_cast<std::size_t>(a)] = cls;
    }
    found.push_back(Entourage::from_rows(n, std::move(rows)));
    return;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) {
    classes[i] |= singleton(point);
    enumerate_open_partitions(x, point + 1, classes, found);
    classes[i] &= ~singleton(point);
  }
  classes.push_back(singleton(point));
  enumerate_open_partitions(x, point + 1, classes, found);
  classes.pop_back();
}

}  // namespace

PreUniformity canonical(const FiniteSpace& x, CanonicalKind kind) {
  const int n = x.size();
  switch (kind) {
    case CanonicalKind::pervin: {
      std::vector<Entourage> base;
      for (PointSet u : x.opens()) base.push_back(pervin_subbase_entourage(x, u));
      return PreUniformity::from_base(std::move(base), x);
    }
    case CanonicalKind::universal_pre:
      // The minimal-neighborhood assignment refines every neighborhood
      // assignment, so it is the filter minimum.
      return PreUniformity::principal(x.preorder(), x);
    case CanonicalKind::universal_quasi: {
      // Any quasi-uniformity of neighborhood assignments has a transitive
      // minimum containing the minimal assignment, which is itself
      // transitive; the two universal filters coincide on finite carriers.
      if (!x.preorder().is_transitive()) {
        throw Error(ErrorKind::internal, "minimal neighborhood assignment is not transitive");
      }
      return PreUniformity::principal(x.preorder(), x);
    }
    case CanonicalKind::universal_uniform: {
      if (n > 8) fail_usage("universal uniformity search supported only for carriers of size <= 8");
      std::vector<Entourage> found;
      std::vector<PointSet> classes;
      enumerate_open_partitions(x, 0, classes, found);
      if (found.empty()) {
        throw Error(ErrorKind::internal, "no symmetric transitive neighborhood assignment found");
      }
      Entourage min = found.front();
      for (const Entourage& e : found) min = min.intersect(e);
      // The intersection of equivalence assignments is one, so the union of
      // all uniformities below the universal pre-uniformity is principal.
      bool witnessed = std::find(found.begin(), found.end(), min) != found.end();
      if (!witnessed) {
        throw Error(ErrorKind::internal, "universal uniformity minimum is not itself admissible");
      }
      return PreUniformity::principal(min, x);
    }
  }
  fail_usage("unknown canonical kind");
}

CardinalityBoundReport cardinality_bound_check(const PreUniformity& p) {
  const Entourage& m = p.min();
  Entourage trail2 = m.alt_trail(2);
  if (!trail2.is_diagonal()) {
    auto [a, b] = trail2.first_pair_not_in(Entourage::diagonal(p.size()));
    fail_precondition("filter is not trail-2-separated: pair (" + std::to_string(a) + "," +
                      std::to_string(b) + ") survives in the derived minimum");
  }

  CardinalityBoundReport rep;
  rep.carrier_size = p.size();
  rep.ell = uniform_invariant(p, UniformInvariant::ell);
  rep.psi_trail2 = uniform_invariant(derived_trail(p, 2), UniformInvariant::psi);

  // Canonical covering set for the single family member {min}.
  std::vector<PointSet> balls;
  for (int a = 0; a < p.size(); ++a) balls.push_back(m.row(a));
  std::vector<int> anchors = exact_min_cover(balls, full_set(p.size()));

  rep.anchor.assign(static_cast<std::size_t>(p.size()), -1);
  for (int x = 0; x < p.size(); ++x) {
    for (int a : anchors) {
      if (contains_point(m.row(a), x)) {
        rep.anchor[static_cast<std::size_t>(x)] = a;
        break;
      }
    }
  }
  rep.injection_verified = true;
  for (int x = 0; x < p.size() && rep.injection_verified; ++x) {
    for (int y = x + 1; y < p.size(); ++y) {
      if (rep.anchor[static_cast<std::size_t>(x)] == rep.anchor[static_cast<std::size_t>(y)]) {
        rep.injection_verified = false;
        break;
      }
    }
  }

  long long bound = 1;
  for (long long i = 0; i < rep.psi_trail2; ++i) bound *= rep.ell;
  rep.bound_holds = rep.carrier_size <= bound;
  return rep;
}

}  // namespace qulab
