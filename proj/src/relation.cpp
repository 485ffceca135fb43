#include "qulab/relation.hpp"

#include <algorithm>

namespace qulab {

std::vector<int> set_points(PointSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

PointSet make_set(const std::vector<int>& pts, int n) {
  PointSet s = 0;
  for (int p : pts) {
    if (p < 0 || p >= n) fail_validation("point " + std::to_string(p) + " outside carrier of size " + std::to_string(n));
    s |= singleton(p);
  }
  return s;
}

std::string set_to_string(PointSet s, int n) {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < n; ++x) {
    if (!contains_point(s, x)) continue;
    if (!first) out += ",";
    out += std::to_string(x);
    first = false;
  }
  out += "}";
  return out;
}

void check_carrier_size(int n) {
  if (n < 1 || n > kMaxPoints) {
    fail_validation("carrier size must be between 1 and " + std::to_string(kMaxPoints) +
                    ", got " + std::to_string(n));
  }
}

Entourage Entourage::diagonal(int n) {
  check_carrier_size(n);
  std::vector<PointSet> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = singleton(x);
  return Entourage(n, std::move(rows));
}

Entourage Entourage::full(int n) {
  check_carrier_size(n);
  std::vector<PointSet> rows(static_cast<std::size_t>(n), full_set(n));
  return Entourage(n, std::move(rows));
}

Entourage Entourage::from_rows(int n, std::vector<PointSet> rows) {
  check_carrier_size(n);
  if (static_cast<int>(rows.size()) != n) fail_validation("relation must have one row per point");
  const PointSet mask = full_set(n);
  for (int x = 0; x < n; ++x) {
    PointSet r = rows[static_cast<std::size_t>(x)];
    if (r & ~mask) fail_validation("relation row " + std::to_string(x) + " mentions points outside the carrier");
    if (!contains_point(r, x)) {
      fail_validation("relation is not reflexive: missing pair (" + std::to_string(x) + "," +
                      std::to_string(x) + ")");
    }
  }
  return Entourage(n, std::move(rows));
}

Entourage Entourage::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  check_carrier_size(n);
  std::vector<PointSet> rows(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) rows[static_cast<std::size_t>(x)] = singleton(x);
  for (auto [x, y] : pairs) {
    if (x < 0 || x >= n || y < 0 || y >= n) {
      fail_validation("pair (" + std::to_string(x) + "," + std::to_string(y) +
                      ") outside carrier of size " + std::to_string(n));
    }
    rows[static_cast<std::size_t>(x)] |= singleton(y);
  }
  return Entourage(n, std::move(rows));
}

Entourage Entourage::inverse() const {
  std::vector<PointSet> rows(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    PointSet r = rows_[static_cast<std::size_t>(x)];
    while (r) {
      int y = std::countr_zero(r);
      r &= r - 1;
      rows[static_cast<std::size_t>(y)] |= singleton(x);
    }
  }
  return Entourage(n_, std::move(rows));
}

Entourage Entourage::compose(const Entourage& v) const {
  if (v.n_ != n_) fail_validation("cannot compose relations on different carriers");
  std::vector<PointSet> rows(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    PointSet acc = 0;
    PointSet mids = rows_[static_cast<std::size_t>(x)];
    while (mids) {
      int y = std::countr_zero(mids);
      mids &= mids - 1;
      acc |= v.rows_[static_cast<std::size_t>(y)];
    }
    rows[static_cast<std::size_t>(x)] = acc;
  }
  return Entourage(n_, std::move(rows));
}

Entourage Entourage::power(int k) const {
  if (k < 0) return inverse().power(-k);
  Entourage acc = diagonal(n_);
  for (int i = 0; i < k; ++i) acc = acc.compose(*this);
  return acc;
}

Entourage Entourage::alt_lead(int n) const {
  if (n < 0) fail_usage("alternating power index must be non-negative");
  if (n == 0) return diagonal(n_);
  return compose(alt_trail(n - 1));
}

Entourage Entourage::alt_trail(int n) const {
  if (n < 0) fail_usage("alternating power index must be non-negative");
  if (n == 0) return diagonal(n_);
  return inverse().compose(alt_lead(n - 1));
}

Entourage Entourage::intersect(const Entourage& v) const {
  if (v.n_ != n_) fail_validation("cannot intersect relations on different carriers");
  std::vector<PointSet> rows(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) rows[static_cast<std::size_t>(x)] = rows_[static_cast<std::size_t>(x)] & v.rows_[static_cast<std::size_t>(x)];
  return Entourage(n_, std::move(rows));
}

Entourage Entourage::unite(const Entourage& v) const {
  if (v.n_ != n_) fail_validation("cannot unite relations on different carriers");
  std::vector<PointSet> rows(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) rows[static_cast<std::size_t>(x)] = rows_[static_cast<std::size_t>(x)] | v.rows_[static_cast<std::size_t>(x)];
  return Entourage(n_, std::move(rows));
}

Entourage Entourage::transitive_closure() const {
  std::vector<PointSet> rows = rows_;
  // Floyd-Warshall on bit rows.
  for (int y = 0; y < n_; ++y) {
    for (int x = 0; x < n_; ++x) {
      if (contains_point(rows[static_cast<std::size_t>(x)], y)) rows[static_cast<std::size_t>(x)] |= rows[static_cast<std::size_t>(y)];
    }
  }
  return Entourage(n_, std::move(rows));
}

PointSet Entourage::ball(PointSet a) const {
  PointSet out = 0;
  while (a) {
    int x = std::countr_zero(a);
    a &= a - 1;
    out |= rows_[static_cast<std::size_t>(x)];
  }
  return out;
}

bool Entourage::subset_of(const Entourage& v) const {
  if (v.n_ != n_) fail_validation("cannot compare relations on different carriers");
  for (int x = 0; x < n_; ++x) {
    if (rows_[static_cast<std::size_t>(x)] & ~v.rows_[static_cast<std::size_t>(x)]) return false;
  }
  return true;
}

bool Entourage::is_diagonal() const { return *this == diagonal(n_); }

bool Entourage::is_symmetric() const { return *this == inverse(); }

bool Entourage::is_transitive() const { return compose(*this).subset_of(*this); }

std::pair<int, int> Entourage::first_pair_not_in(const Entourage& v) const {
  for (int x = 0; x < n_; ++x) {
    PointSet extra = rows_[static_cast<std::size_t>(x)] & ~v.rows_[static_cast<std::size_t>(x)];
    if (extra) return {x, std::countr_zero(extra)};
  }
  return {-1, -1};
}

std::vector<std::pair<int, int>> Entourage::off_diagonal_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x) {
    PointSet r = rows_[static_cast<std::size_t>(x)] & ~singleton(x);
    while (r) {
      int y = std::countr_zero(r);
      r &= r - 1;
      out.emplace_back(x, y);
    }
  }
  return out;
}

Entourage Entourage::permuted(const std::vector<int>& perm) const {
  std::vector<PointSet> rows(static_cast<std::size_t>(n_));
  for (int x = 0; x < n_; ++x) {
    PointSet r = rows_[static_cast<std::size_t>(x)];
    PointSet img = 0;
    while (r) {
      int y = std::countr_zero(r);
      r &= r - 1;
      img |= singleton(perm[static_cast<std::size_t>(y)]);
    }
    rows[static_cast<std::size_t>(perm[static_cast<std::size_t>(x)])] = img;
  }
  return Entourage(n_, std::move(rows));
}

std::string Entourage::encode() const {
  std::string out = std::to_string(n_) + ":";
  for (int x = 0; x < n_; ++x) {
    for (int y = 0; y < n_; ++y) out += contains(x, y) ? '1' : '0';
  }
  return out;
}

Cover Cover::make(int n, std::vector<PointSet> members) {
  check_carrier_size(n);
  PointSet seen = 0;
  const PointSet mask = full_set(n);
  for (PointSet m : members) {
    if (m & ~mask) fail_validation("cover member mentions points outside the carrier");
    seen |= m;
  }
  if (seen != mask) fail_validation("cover members do not cover the carrier");
  return Cover{n, std::move(members)};
}

PointSet star(const Cover& cover, PointSet a, int steps) {
  if (steps < 0) fail_usage("star index must be non-negative");
  PointSet cur = a;
  for (int i = 0; i < steps; ++i) {
    PointSet next = 0;
    for (PointSet m : cover.members) {
      if (m & cur) next |= m;
    }
    cur = next;
  }
  return cur;
}

Cover ball_cover(const Entourage& u) {
  std::vector<PointSet> members;
  for (int z = 0; z < u.size(); ++z) members.push_back(u.row(z));
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return Cover::make(u.size(), std::move(members));
}

}  // namespace qulab
