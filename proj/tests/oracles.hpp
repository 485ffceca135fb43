#ifndef QULAB_TESTS_ORACLES_HPP
#define QULAB_TESTS_ORACLES_HPP

// Independent reference implementations used to pin expected values.  These
// stay deliberately naive (triple loops, full family enumeration) and must
// not share code with the library paths they check.

#include <random>
#include <set>
#include <vector>

#include "qulab/harness.hpp"

namespace qulab::oracles {

inline Entourage compose_oracle(const Entourage& u, const Entourage& v) {
  const int n = u.size();
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < n; ++x) {
    for (int z = 0; z < n; ++z) {
      bool related = false;
      for (int y = 0; y < n && !related; ++y) {
        related = u.contains(x, y) && v.contains(y, z);
      }
      if (related && x != z) pairs.emplace_back(x, z);
    }
  }
  return Entourage::from_pairs(n, pairs);
}

inline Entourage inverse_oracle(const Entourage& u) {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < u.size(); ++x) {
    for (int y = 0; y < u.size(); ++y) {
      if (x != y && u.contains(y, x)) pairs.emplace_back(x, y);
    }
  }
  return Entourage::from_pairs(u.size(), pairs);
}

inline Entourage alt_lead_oracle(const Entourage& u, int n);

inline Entourage alt_trail_oracle(const Entourage& u, int n) {
  if (n == 0) return Entourage::diagonal(u.size());
  return compose_oracle(inverse_oracle(u), alt_lead_oracle(u, n - 1));
}

inline Entourage alt_lead_oracle(const Entourage& u, int n) {
  if (n == 0) return Entourage::diagonal(u.size());
  return compose_oracle(u, alt_trail_oracle(u, n - 1));
}

inline PointSet star_oracle(const Cover& cover, PointSet a, int steps) {
  PointSet cur = a;
  for (int i = 0; i < steps; ++i) {
    PointSet next = 0;
    for (PointSet member : cover.members) {
      bool meets = (member & cur) != 0;
      if (meets) next |= member;
    }
    cur = next;
  }
  return cur;
}

/// Every reflexive relation on n points (2^(n(n-1)) of them; keep n small).
inline std::vector<Entourage> all_entourages(int n) {
  std::vector<std::pair<int, int>> off;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y) off.emplace_back(x, y);
    }
  }
  std::vector<Entourage> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < off.size(); ++i) {
      if ((mask >> i) & 1) pairs.push_back(off[i]);
    }
    out.push_back(Entourage::from_pairs(n, pairs));
  }
  return out;
}

inline Entourage random_entourage(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> density(1, 4);
  int denom = density(rng);
  std::vector<std::pair<int, int>> pairs;
  std::uniform_int_distribution<int> coin(0, denom);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x != y && coin(rng) == 0) pairs.emplace_back(x, y);
    }
  }
  return Entourage::from_pairs(n, pairs);
}

/// All topologies on n points as open-set families (generate and filter).
inline std::vector<std::vector<PointSet>> all_open_families(int n) {
  const int subsets = 1 << n;
  std::vector<std::vector<PointSet>> out;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << subsets); ++pick) {
    std::vector<PointSet> family;
    for (int s = 0; s < subsets; ++s) {
      if ((pick >> s) & 1) family.push_back(static_cast<PointSet>(s));
    }
    auto has = [&](PointSet s) {
      for (PointSet f : family) {
        if (f == s) return true;
      }
      return false;
    };
    if (!has(0) || !has(full_set(n))) continue;
    bool closed = true;
    for (std::size_t i = 0; i < family.size() && closed; ++i) {
      for (std::size_t j = i + 1; j < family.size() && closed; ++j) {
        closed = has(family[i] | family[j]) && has(family[i] & family[j]);
      }
    }
    if (closed) out.push_back(family);
  }
  return out;
}

/// Smallest subfamily size covering the target, by subset enumeration.
inline int min_cover_oracle(const std::vector<PointSet>& sets, PointSet target) {
  const std::size_t m = sets.size();
  int best = -1;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    PointSet covered = 0;
    int size = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if ((pick >> i) & 1) {
        covered |= sets[i];
        ++size;
      }
    }
    if (subset(target, covered) && (best < 0 || size < best)) best = size;
  }
  return best;
}

/// All open covers of the space (subfamilies of non-empty opens with full
/// union); n <= 3 keeps this tiny.
inline std::vector<std::vector<PointSet>> all_open_covers(const FiniteSpace& x) {
  std::vector<PointSet> opens;
  for (PointSet u : x.opens()) {
    if (u != 0) opens.push_back(u);
  }
  std::vector<std::vector<PointSet>> covers;
  for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << opens.size()); ++pick) {
    std::vector<PointSet> family;
    PointSet covered = 0;
    for (std::size_t i = 0; i < opens.size(); ++i) {
      if ((pick >> i) & 1) {
        family.push_back(opens[i]);
        covered |= opens[i];
      }
    }
    if (covered == full_set(x.size())) covers.push_back(family);
  }
  return covers;
}

/// Star-covering invariants quantified over every open cover (the dominance
/// reduction in the library must agree with this on small spaces).
inline long long lstar_oracle(const FiniteSpace& x, int steps, bool dense) {
  long long worst = 0;
  for (const auto& family : all_open_covers(x)) {
    Cover cover{x.size(), family};
    int best = -1;
    for (PointSet a = 0; a < (PointSet{1} << x.size()); ++a) {
      PointSet reach = star_oracle(cover, a, steps);
      if (dense) reach = x.closure(reach);
      if (reach == full_set(x.size()) && (best < 0 || set_size(a) < best)) best = set_size(a);
    }
    worst = std::max<long long>(worst, best);
  }
  return worst;
}

inline long long lstar_half_oracle(const FiniteSpace& x, int steps, bool dense) {
  long long worst = 0;
  for (const auto& family : all_open_covers(x)) {
    Cover cover{x.size(), family};
    int best = -1;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << family.size()); ++pick) {
      PointSet seed = 0;
      int size = 0;
      for (std::size_t i = 0; i < family.size(); ++i) {
        if ((pick >> i) & 1) {
          seed |= family[i];
          ++size;
        }
      }
      PointSet reach = star_oracle(cover, seed, steps);
      if (dense) reach = x.closure(reach);
      if (reach == full_set(x.size()) && (best < 0 || size < best)) best = size;
    }
    worst = std::max<long long>(worst, best);
  }
  return worst;
}

}  // namespace qulab::oracles

#endif
