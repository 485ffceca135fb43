#include "qulab/topology.hpp"

#include <algorithm>
#include <array>

namespace qulab {

namespace {

Entourage preorder_from_opens(int n, const std::vector<PointSet>& opens) {
  check_carrier_size(n);
  const PointSet mask = full_set(n);
  std::vector<PointSet> family = opens;
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());

  for (PointSet u : family) {
    if (u & ~mask) fail_validation("open set " + set_to_string(u, n) + " mentions points outside the carrier");
  }
  auto in_family = [&](PointSet s) {
    return std::binary_search(family.begin(), family.end(), s);
  };
  if (!in_family(0)) fail_validation("the empty set must be open");
  if (!in_family(mask)) fail_validation("the carrier must be open");
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!in_family(family[i] | family[j])) {
        fail_validation("open family not closed under union: " + set_to_string(family[i], n) +
                        " and " + set_to_string(family[j], n));
      }
      if (!in_family(family[i] & family[j])) {
        fail_validation("open family not closed under intersection: " + set_to_string(family[i], n) +
                        " and " + set_to_string(family[j], n));
      }
    }
  }

  std::vector<PointSet> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    PointSet min_nbhd = mask;
    for (PointSet u : family) {
      if (contains_point(u, x)) min_nbhd &= u;
    }
    rows[static_cast<std::size_t>(x)] = min_nbhd;
  }
  return Entourage::from_rows(n, std::move(rows));
}

}  // namespace

FiniteSpace::FiniteSpace(Entourage preorder)
    : preorder_(std::move(preorder)), down_(preorder_.inverse()) {
  const int n = preorder_.size();
  components_.assign(static_cast<std::size_t>(n), 0);
  Entourage sym = preorder_.unite(down_).transitive_closure();
  for (int x = 0; x < n; ++x) components_[static_cast<std::size_t>(x)] = sym.row(x);
}

FiniteSpace FiniteSpace::from_opens(int n, const std::vector<PointSet>& opens) {
  return FiniteSpace(preorder_from_opens(n, opens));
}

FiniteSpace FiniteSpace::from_preorder(const Entourage& preorder) {
  if (!preorder.is_transitive()) {
    auto [x, y] = preorder.compose(preorder).first_pair_not_in(preorder);
    fail_validation("relation is not transitive: pair (" + std::to_string(x) + "," +
                    std::to_string(y) + ") is reachable in two steps but absent");
  }
  return FiniteSpace(preorder);
}

FiniteSpace FiniteSpace::discrete(int n) { return FiniteSpace(Entourage::diagonal(n)); }
FiniteSpace FiniteSpace::indiscrete(int n) { return FiniteSpace(Entourage::full(n)); }
FiniteSpace FiniteSpace::sierpinski() {
  return FiniteSpace(Entourage::from_pairs(2, {{0, 1}}));
}

bool FiniteSpace::is_open(PointSet a) const {
  PointSet rest = a;
  while (rest) {
    int x = std::countr_zero(rest);
    rest &= rest - 1;
    if (!subset(min_nbhd(x), a)) return false;
  }
  return true;
}

bool FiniteSpace::is_closed(PointSet a) const { return closure(a) == a; }

PointSet FiniteSpace::closure(PointSet a) const {
  PointSet out = 0;
  for (int x = 0; x < size(); ++x) {
    if (min_nbhd(x) & a) out |= singleton(x);
  }
  return out;
}

PointSet FiniteSpace::interior(PointSet a) const {
  PointSet out = 0;
  PointSet rest = a;
  while (rest) {
    int x = std::countr_zero(rest);
    rest &= rest - 1;
    if (subset(min_nbhd(x), a)) out |= singleton(x);
  }
  return out;
}

PointSet FiniteSpace::int_closure(PointSet a) const { return interior(closure(a)); }

std::vector<PointSet> FiniteSpace::opens() const {
  if (size() > 20) fail_usage("open-set enumeration supported only for carriers of size <= 20");
  std::vector<PointSet> out;
  const PointSet mask = full_set(size());
  for (PointSet w = 0;; ++w) {
    if (is_open(w)) out.push_back(w);
    if (w == mask) break;
  }
  return out;
}

std::vector<PointSet> FiniteSpace::min_nbhd_family() const {
  std::vector<PointSet> fam;
  for (int x = 0; x < size(); ++x) fam.push_back(min_nbhd(x));
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

Cover FiniteSpace::min_nbhd_cover() const { return Cover::make(size(), min_nbhd_family()); }

PointSet FiniteSpace::component(int x) const { return components_[static_cast<std::size_t>(x)]; }

std::vector<PointSet> FiniteSpace::components() const {
  std::vector<PointSet> out;
  PointSet seen = 0;
  for (int x = 0; x < size(); ++x) {
    if (contains_point(seen, x)) continue;
    out.push_back(component(x));
    seen |= component(x);
  }
  return out;
}

FiniteSpace FiniteSpace::subspace(PointSet carrier) const {
  std::vector<int> pts = set_points(carrier);
  if (pts.empty()) fail_usage("subspace carrier must be non-empty");
  std::array<int, kMaxPoints> reindex{};
  for (std::size_t i = 0; i < pts.size(); ++i) reindex[static_cast<std::size_t>(pts[i])] = static_cast<int>(i);
  std::vector<PointSet> rows(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    PointSet r = min_nbhd(pts[i]) & carrier;
    PointSet img = 0;
    while (r) {
      int y = std::countr_zero(r);
      r &= r - 1;
      img |= singleton(reindex[static_cast<std::size_t>(y)]);
    }
    rows[i] = img;
  }
  return FiniteSpace(Entourage::from_rows(static_cast<int>(pts.size()), std::move(rows)));
}

// ---------------------------------------------------------------------------

SeparationAxiom parse_separation_axiom(const std::string& name) {
  if (name == "T0") return SeparationAxiom::T0;
  if (name == "T1") return SeparationAxiom::T1;
  if (name == "Hausdorff") return SeparationAxiom::Hausdorff;
  if (name == "functionally_Hausdorff") return SeparationAxiom::functionally_Hausdorff;
  if (name == "regular") return SeparationAxiom::regular;
  if (name == "completely_regular") return SeparationAxiom::completely_regular;
  if (name == "quasi_regular") return SeparationAxiom::quasi_regular;
  if (name == "collectively_Hausdorff") return SeparationAxiom::collectively_Hausdorff;
  fail_usage("unknown separation axiom: " + name);
}

std::string separation_axiom_name(SeparationAxiom axiom) {
  switch (axiom) {
    case SeparationAxiom::T0: return "T0";
    case SeparationAxiom::T1: return "T1";
    case SeparationAxiom::Hausdorff: return "Hausdorff";
    case SeparationAxiom::functionally_Hausdorff: return "functionally_Hausdorff";
    case SeparationAxiom::regular: return "regular";
    case SeparationAxiom::completely_regular: return "completely_regular";
    case SeparationAxiom::quasi_regular: return "quasi_regular";
    case SeparationAxiom::collectively_Hausdorff: return "collectively_Hausdorff";
  }
  fail_usage("unknown separation axiom");
}

namespace {

SeparationVerdict verdict_true() { return SeparationVerdict{true, {}, {}}; }

SeparationVerdict pair_fail(int x, int y) {
  SeparationVerdict v;
  v.holds = false;
  v.pair_witness = {x, y};
  return v;
}

}  // namespace

SeparationVerdict separation_check(const FiniteSpace& x, SeparationAxiom axiom) {
  const int n = x.size();
  switch (axiom) {
    case SeparationAxiom::T0:
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (x.min_nbhd(a) == x.min_nbhd(b)) return pair_fail(a, b);
      return verdict_true();

    case SeparationAxiom::T1:
      for (int a = 0; a < n; ++a) {
        PointSet extra = x.min_nbhd(a) & ~singleton(a);
        if (extra) return pair_fail(a, std::countr_zero(extra));
      }
      return verdict_true();

    case SeparationAxiom::Hausdorff:
      // Minimal neighborhoods are the best candidates for disjoint ones.
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (x.min_nbhd(a) & x.min_nbhd(b)) return pair_fail(a, b);
      return verdict_true();

    case SeparationAxiom::functionally_Hausdorff:
      // Continuous real functions on a finite space are constant on clopen
      // components, so points are separated exactly when components are
      // singletons.
      for (int a = 0; a < n; ++a) {
        PointSet rest = x.component(a) & ~singleton(a);
        if (rest) return pair_fail(a, std::countr_zero(rest));
      }
      return verdict_true();

    case SeparationAxiom::regular:
      // The smallest candidate neighborhood has the smallest closure.
      for (int a = 0; a < n; ++a) {
        if (!subset(x.closure(x.min_nbhd(a)), x.min_nbhd(a))) {
          SeparationVerdict v;
          v.holds = false;
          v.pair_witness = {a, a};
          v.set_witness = x.min_nbhd(a);
          return v;
        }
      }
      return verdict_true();

    case SeparationAxiom::completely_regular:
      // A continuous [0,1]-valued function is constant on components, so the
      // separating function for (x, min_nbhd(x)) exists iff the component of
      // x sits inside min_nbhd(x).
      for (int a = 0; a < n; ++a) {
        if (!subset(x.component(a), x.min_nbhd(a))) {
          SeparationVerdict v;
          v.holds = false;
          v.pair_witness = {a, a};
          v.set_witness = x.min_nbhd(a);
          return v;
        }
      }
      return verdict_true();

    case SeparationAxiom::quasi_regular:
      // Enough to shrink minimal opens into minimal opens.
      for (int a = 0; a < n; ++a) {
        bool ok = false;
        for (int b = 0; b < n && !ok; ++b) {
          ok = subset(x.closure(x.min_nbhd(b)), x.min_nbhd(a));
        }
        if (!ok) {
          SeparationVerdict v;
          v.holds = false;
          v.set_witness = x.min_nbhd(a);
          return v;
        }
      }
      return verdict_true();

    case SeparationAxiom::collectively_Hausdorff: {
      if (n > 20) fail_usage("collectively_Hausdorff check supported only for carriers of size <= 20");
      const PointSet mask = full_set(n);
      for (PointSet d = 0;; ++d) {
        bool closed_discrete = x.is_closed(d);
        if (closed_discrete) {
          PointSet rest = d;
          while (rest && closed_discrete) {
            int p = std::countr_zero(rest);
            rest &= rest - 1;
            if ((x.min_nbhd(p) & d) != singleton(p)) closed_discrete = false;
          }
        }
        if (closed_discrete && !strongly_discrete_check(x, d).holds) {
          SeparationVerdict v;
          v.holds = false;
          v.set_witness = d;
          return v;
        }
        if (d == mask) break;
      }
      return verdict_true();
    }
  }
  fail_usage("unknown separation axiom");
}

StronglyDiscreteVerdict strongly_discrete_check(const FiniteSpace& x, PointSet d) {
  // Shrinking an assigned neighborhood preserves discreteness, so the
  // minimal-neighborhood assignment decides existence.
  StronglyDiscreteVerdict out;
  std::vector<int> pts = set_points(d);
  for (int z = 0; z < x.size(); ++z) {
    int met = 0;
    for (int p : pts) {
      if (x.min_nbhd(z) & x.min_nbhd(p)) ++met;
    }
    if (met > 1) {
      out.holds = false;
      out.blocking_point = z;
      return out;
    }
  }
  out.holds = true;
  for (int p : pts) out.assignment.emplace_back(p, x.min_nbhd(p));
  return out;
}

// ---------------------------------------------------------------------------
// Exact covering search

namespace {

struct CoverSearch {
  const std::vector<PointSet>& sets;
  PointSet target;
  std::vector<int> best;
  std::vector<int> current;

  void dfs(PointSet covered) {
    if (subset(target, covered)) {
      if (best.empty() || current.size() < best.size()) best = current;
      return;
    }
    if (!best.empty() && current.size() + 1 >= best.size()) return;
    PointSet uncovered = target & ~covered;
    int point = std::countr_zero(uncovered);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!contains_point(sets[i], point)) continue;
      current.push_back(static_cast<int>(i));
      dfs(covered | sets[i]);
      current.pop_back();
    }
  }
};

}  // namespace

std::vector<int> exact_min_cover(const std::vector<PointSet>& sets, PointSet target) {
  if (target == 0) return {};
  PointSet reachable = 0;
  for (PointSet s : sets) reachable |= s;
  if (!subset(target, reachable)) fail_precondition("no subfamily covers the target set");

  // Greedy upper bound seeds the search; ties break to the lowest index.
  std::vector<int> greedy;
  PointSet covered = 0;
  while (!subset(target, covered)) {
    int best_i = -1;
    int best_gain = -1;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      int gain = set_size(sets[i] & target & ~covered);
      if (gain > best_gain) {
        best_gain = gain;
        best_i = static_cast<int>(i);
      }
    }
    greedy.push_back(best_i);
    covered |= sets[static_cast<std::size_t>(best_i)];
  }

  CoverSearch search{sets, target, std::move(greedy), {}};
  search.dfs(0);
  return search.best;
}

// ---------------------------------------------------------------------------
// Invariants

int log2_ceiling(long long n) {
  int k = 0;
  long long pow = 1;
  while (pow < n) {
    pow *= 2;
    ++k;
  }
  return k;
}

namespace {

// Star expansion is additive in the seed, so covering problems over stars
// reduce to exact set cover with one candidate set per seed.
std::vector<PointSet> star_sets_per_point(const FiniteSpace& x, int steps) {
  Cover cover = x.min_nbhd_cover();
  std::vector<PointSet> out;
  for (int p = 0; p < x.size(); ++p) out.push_back(star(cover, singleton(p), steps));
  return out;
}

std::vector<PointSet> star_sets_per_member(const FiniteSpace& x, int steps) {
  Cover cover = x.min_nbhd_cover();
  std::vector<PointSet> out;
  for (PointSet m : cover.members) out.push_back(star(cover, m, steps));
  return out;
}

std::vector<PointSet> closed(const FiniteSpace& x, std::vector<PointSet> sets) {
  for (PointSet& s : sets) s = x.closure(s);
  return sets;
}

long long min_cover_value(const std::vector<PointSet>& sets, PointSet target) {
  return static_cast<long long>(exact_min_cover(sets, target).size());
}

int star_stabilization_steps(const FiniteSpace& x) {
  Cover cover = x.min_nbhd_cover();
  int steps = 0;
  std::vector<PointSet> prev;
  for (int p = 0; p < x.size(); ++p) prev.push_back(singleton(p));
  for (;;) {
    std::vector<PointSet> next;
    for (int p = 0; p < x.size(); ++p) next.push_back(star(cover, singleton(p), steps + 1));
    if (next == prev) return steps;
    prev = std::move(next);
    ++steps;
  }
}

long long sup_over_subsets(const FiniteSpace& x, bool (*admissible)(const FiniteSpace&, PointSet),
                           PointSet* witness = nullptr) {
  if (x.size() > 20) fail_usage("subset-sweep invariants supported only for carriers of size <= 20");
  const PointSet mask = full_set(x.size());
  long long best = 0;
  for (PointSet d = 0;; ++d) {
    if (admissible(x, d) && set_size(d) > best) {
      best = set_size(d);
      if (witness != nullptr) *witness = d;
    }
    if (d == mask) break;
  }
  return best;
}

bool discrete_subspace(const FiniteSpace& x, PointSet d) {
  PointSet rest = d;
  while (rest) {
    int p = std::countr_zero(rest);
    rest &= rest - 1;
    if ((x.min_nbhd(p) & d) != singleton(p)) return false;
  }
  return true;
}

bool closed_discrete_subspace(const FiniteSpace& x, PointSet d) {
  return x.is_closed(d) && discrete_subspace(x, d);
}

bool singleton_family_discrete(const FiniteSpace& x, PointSet d) {
  // Every minimal neighborhood may meet at most one point of d.
  for (int z = 0; z < x.size(); ++z) {
    if (set_size(x.min_nbhd(z) & d) > 1) return false;
  }
  return true;
}

long long max_open_family(const FiniteSpace& x, bool disjoint_only,
                          std::vector<PointSet>* witness = nullptr) {
  // Non-empty open families shrink to minimal neighborhoods, so only
  // subfamilies of the (deduplicated) minimal base need be searched.
  std::vector<PointSet> fam = x.min_nbhd_family();
  const std::size_t m = fam.size();
  long long best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    std::vector<PointSet> chosen;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1) chosen.push_back(fam[i]);
    }
    bool ok = true;
    if (disjoint_only) {
      for (std::size_t i = 0; i < chosen.size() && ok; ++i)
        for (std::size_t j = i + 1; j < chosen.size() && ok; ++j)
          if (chosen[i] & chosen[j]) ok = false;
    } else {
      // Discrete family: every point has a neighborhood meeting at most one.
      for (int z = 0; z < x.size() && ok; ++z) {
        int met = 0;
        for (PointSet u : chosen) {
          if (x.min_nbhd(z) & u) ++met;
        }
        if (met > 1) ok = false;
      }
    }
    if (ok && static_cast<long long>(chosen.size()) > best) {
      best = static_cast<long long>(chosen.size());
      if (witness != nullptr) *witness = chosen;
    }
  }
  return best;
}

long long hereditary(const FiniteSpace& x, InvariantKind kind) {
  if (x.size() > 8) fail_usage("hereditary invariants supported only for carriers of size <= 8");
  long long best = 0;
  const PointSet mask = full_set(x.size());
  for (PointSet y = 1;; ++y) {
    FiniteSpace sub = x.subspace(y);
    best = std::max(best, invariant(sub, {kind == InvariantKind::hd ? InvariantKind::d : InvariantKind::l, 0}));
    if (y == mask) break;
  }
  return best;
}

}  // namespace

long long invariant(const FiniteSpace& x, InvariantId id) {
  const PointSet all = full_set(x.size());
  switch (id.kind) {
    case InvariantKind::nw:
      // Distinct minimal neighborhoods form the smallest network: each one
      // needs its own member, and together they generate every open set.
      return static_cast<long long>(x.min_nbhd_family().size());

    case InvariantKind::d:
      return min_cover_value(closed(x, star_sets_per_point(x, 0)), all);

    case InvariantKind::hd:
      return hereditary(x, InvariantKind::hd);

    case InvariantKind::s:
      return sup_over_subsets(x, discrete_subspace);

    case InvariantKind::e:
      return sup_over_subsets(x, closed_discrete_subspace);

    case InvariantKind::c:
      return max_open_family(x, /*disjoint_only=*/true);

    case InvariantKind::de:
      // Discrete families of non-empty sets shrink to singletons.
      return sup_over_subsets(x, singleton_family_discrete);

    case InvariantKind::dc:
      return max_open_family(x, /*disjoint_only=*/false);

    case InvariantKind::l:
      return min_cover_value(star_sets_per_member(x, 0), all);

    case InvariantKind::hl:
      return hereditary(x, InvariantKind::hl);

    case InvariantKind::lbar:
      return min_cover_value(closed(x, star_sets_per_member(x, 0)), all);

    case InvariantKind::lstar:
      return min_cover_value(star_sets_per_point(x, id.index), all);

    case InvariantKind::lbarstar:
      return min_cover_value(closed(x, star_sets_per_point(x, id.index)), all);

    case InvariantKind::lstar_half:
      return min_cover_value(star_sets_per_member(x, id.index), all);

    case InvariantKind::lbarstar_half:
      return min_cover_value(closed(x, star_sets_per_member(x, id.index)), all);

    case InvariantKind::lstar_omega:
      return min_cover_value(star_sets_per_point(x, star_stabilization_steps(x)), all);

    case InvariantKind::lbarstar_omega:
      return min_cover_value(closed(x, star_sets_per_point(x, star_stabilization_steps(x))), all);

    case InvariantKind::psi:
    case InvariantKind::chi:
    case InvariantKind::psibar:
      // At every point the minimal neighborhood alone realizes the defining
      // intersection / base / closed intersection, and minimum-type
      // invariants over satisfiable predicates are at least 1.
      return 1;

    case InvariantKind::delta:
    case InvariantKind::deltabar: {
      SeparationVerdict h = separation_check(x, SeparationAxiom::Hausdorff);
      if (!h.holds) {
        fail_precondition("diagonal numbers are defined for Hausdorff spaces only");
      }
      // Finite Hausdorff spaces are discrete, so the diagonal is itself an
      // open (and closed) subset of the square.
      return 1;
    }

    case InvariantKind::log_of_size:
      return log2_ceiling(x.size());
  }
  fail_usage("unknown invariant kind");
}

InvariantReport invariant_report(const FiniteSpace& x) {
  InvariantReport rep;
  auto put = [&](const std::string& name, InvariantId id) {
    rep.values[name] = invariant(x, id);
  };
  put("nw", {InvariantKind::nw, 0});
  put("d", {InvariantKind::d, 0});
  put("s", {InvariantKind::s, 0});
  put("e", {InvariantKind::e, 0});
  put("c", {InvariantKind::c, 0});
  put("de", {InvariantKind::de, 0});
  put("dc", {InvariantKind::dc, 0});
  put("l", {InvariantKind::l, 0});
  put("lbar", {InvariantKind::lbar, 0});
  if (x.size() <= 8) {
    put("hd", {InvariantKind::hd, 0});
    put("hl", {InvariantKind::hl, 0});
  }
  for (int n = 0; n <= 2; ++n) {
    put("lstar(" + std::to_string(n) + ")", {InvariantKind::lstar, n});
    put("lbarstar(" + std::to_string(n) + ")", {InvariantKind::lbarstar, n});
    put("lstar_half(" + std::to_string(n) + ")", {InvariantKind::lstar_half, n});
    put("lbarstar_half(" + std::to_string(n) + ")", {InvariantKind::lbarstar_half, n});
  }
  put("lstar_omega", {InvariantKind::lstar_omega, 0});
  put("lbarstar_omega", {InvariantKind::lbarstar_omega, 0});
  put("psi", {InvariantKind::psi, 0});
  put("chi", {InvariantKind::chi, 0});
  put("psibar", {InvariantKind::psibar, 0});
  if (separation_check(x, SeparationAxiom::Hausdorff).holds) {
    put("delta", {InvariantKind::delta, 0});
    put("deltabar", {InvariantKind::deltabar, 0});
  }
  put("log_of_size", {InvariantKind::log_of_size, 0});

  // Witnesses: the canonical smallest dense set and the maximal discrete /
  // disjoint families.
  std::vector<PointSet> cl_points;
  for (int p = 0; p < x.size(); ++p) cl_points.push_back(x.closure(singleton(p)));
  rep.point_witnesses["d"] = exact_min_cover(cl_points, full_set(x.size()));
  PointSet spread_witness = 0;
  sup_over_subsets(x, discrete_subspace, &spread_witness);
  rep.point_witnesses["s"] = set_points(spread_witness);
  PointSet extent_witness = 0;
  sup_over_subsets(x, closed_discrete_subspace, &extent_witness);
  rep.point_witnesses["e"] = set_points(extent_witness);
  PointSet de_witness = 0;
  sup_over_subsets(x, singleton_family_discrete, &de_witness);
  rep.point_witnesses["de"] = set_points(de_witness);
  std::vector<PointSet> cell_witness;
  max_open_family(x, /*disjoint_only=*/true, &cell_witness);
  rep.family_witnesses["c"] = cell_witness;
  std::vector<PointSet> dc_witness;
  max_open_family(x, /*disjoint_only=*/false, &dc_witness);
  rep.family_witnesses["dc"] = dc_witness;
  return rep;
}

// ---------------------------------------------------------------------------
// Dyadic pseudometrics

Dyadic Dyadic::normalized() const {
  Dyadic d = *this;
  if (d.num == 0) return {0, 0};
  while (d.exp > 0 && d.num % 2 == 0) {
    d.num /= 2;
    --d.exp;
  }
  return d;
}

Dyadic Dyadic::plus(const Dyadic& o) const {
  int e = std::max(exp, o.exp);
  Dyadic out{(num << (e - exp)) + (o.num << (e - o.exp)), e};
  return out.normalized();
}

Dyadic Dyadic::max(const Dyadic& a, const Dyadic& b) { return a.less_or_equal(b) ? b : a; }

bool Dyadic::less_or_equal(const Dyadic& o) const {
  int e = std::max(exp, o.exp);
  return (num << (e - exp)) <= (o.num << (e - o.exp));
}

std::string Dyadic::to_string() const {
  if (num == 0) return "0";
  if (exp == 0) return std::to_string(num);
  return std::to_string(num) + "/2^" + std::to_string(exp);
}

bool PseudometricTable::is_pseudometric() const {
  for (int x = 0; x < n; ++x) {
    if (!(values[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] == Dyadic::zero())) return false;
    for (int y = 0; y < n; ++y) {
      if (!(values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == values[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)])) return false;
      for (int z = 0; z < n; ++z) {
        Dyadic lhs = values[static_cast<std::size_t>(x)][static_cast<std::size_t>(z)];
        Dyadic rhs = values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)].plus(values[static_cast<std::size_t>(y)][static_cast<std::size_t>(z)]);
        if (!lhs.less_or_equal(rhs)) return false;
      }
    }
  }
  return true;
}

bool PseudometricTable::separates_points() const {
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] == Dyadic::zero()) return false;
  return true;
}

bool PseudometricTable::is_continuous(const FiniteSpace& space) const {
  // Real-valued continuity on a finite product space means the value is
  // constant on products of minimal neighborhoods.
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      for (int xs : set_points(space.min_nbhd(x))) {
        for (int ys : set_points(space.min_nbhd(y))) {
          if (!(values[static_cast<std::size_t>(xs)][static_cast<std::size_t>(ys)] == values[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)])) return false;
        }
      }
    }
  }
  return true;
}

SigmaDiscreteMetricResult sigma_discrete_metric(const FiniteSpace& x,
                                                const std::vector<PointSet>& partition) {
  const int n = x.size();
  PointSet seen = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i] & seen) fail_validation("partition pieces are not pairwise disjoint");
    seen |= partition[i];
  }
  if (seen != full_set(n)) fail_validation("partition does not cover the carrier");

  SigmaDiscreteMetricResult out;
  PointSet earlier = 0;
  for (std::size_t stage = 0; stage < partition.size(); ++stage) {
    // Clopen sets are unions of components, so the component of each point is
    // the smallest admissible assignment; shrinking only helps both the
    // avoidance and the discreteness condition.
    std::vector<std::pair<int, PointSet>> assignment;
    for (int p : set_points(partition[stage])) {
      PointSet u = x.component(p);
      if (u & earlier) {
        fail_precondition("no valid clopen assignment: stage " + std::to_string(stage) +
                          ", point " + std::to_string(p) +
                          ": every clopen neighborhood meets an earlier piece");
      }
      assignment.emplace_back(p, u);
    }
    for (int z = 0; z < n; ++z) {
      int met = 0;
      for (const auto& [p, u] : assignment) {
        if (x.min_nbhd(z) & u) ++met;
      }
      if (met > 1) {
        fail_precondition("piece " + std::to_string(stage) +
                          " is not strongly discrete under clopen assignments (blocked at point " +
                          std::to_string(z) + ")");
      }
    }

    PseudometricTable dn;
    dn.n = n;
    dn.values.assign(static_cast<std::size_t>(n), std::vector<Dyadic>(static_cast<std::size_t>(n), Dyadic::zero()));
    PointSet assigned_union = 0;
    for (const auto& [p, u] : assignment) assigned_union |= u;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        bool both_inside_one = false;
        for (const auto& [p, u] : assignment) {
          if (contains_point(u, a) && contains_point(u, b)) {
            both_inside_one = true;
            break;
          }
        }
        bool both_outside = !contains_point(assigned_union, a) && !contains_point(assigned_union, b);
        dn.values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            (both_inside_one || both_outside) ? Dyadic::zero() : Dyadic::one();
      }
    }
    out.stages.push_back(std::move(dn));
    out.assignments.push_back(std::move(assignment));
    earlier |= partition[stage];
  }

  out.metric.n = n;
  out.metric.values.assign(static_cast<std::size_t>(n), std::vector<Dyadic>(static_cast<std::size_t>(n), Dyadic::zero()));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      Dyadic m = Dyadic::zero();
      for (std::size_t stage = 0; stage < out.stages.size(); ++stage) {
        if (out.stages[stage].values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] == Dyadic::one()) {
          m = Dyadic::max(m, Dyadic::half_power(static_cast<int>(stage)));
        }
      }
      out.metric.values[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = m;
    }
  }
  return out;
}

}  // namespace qulab
