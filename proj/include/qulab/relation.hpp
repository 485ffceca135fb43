#ifndef QULAB_RELATION_HPP
#define QULAB_RELATION_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qulab/error.hpp"

namespace qulab {

/// Carriers are {0,...,n-1} with n <= kMaxPoints, so a point set fits in one
/// machine word and a relation is one word per row.
inline constexpr int kMaxPoints = 64;

using PointSet = std::uint64_t;

inline PointSet full_set(int n) {
  return n >= kMaxPoints ? ~PointSet{0} : ((PointSet{1} << n) - 1);
}
inline PointSet singleton(int x) { return PointSet{1} << x; }
inline bool contains_point(PointSet s, int x) { return (s >> x) & 1; }
inline int set_size(PointSet s) { return std::popcount(s); }
inline bool subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

std::vector<int> set_points(PointSet s);
PointSet make_set(const std::vector<int>& pts, int n);
std::string set_to_string(PointSet s, int n);

void check_carrier_size(int n);

/// A reflexive binary relation on {0,...,n-1}, stored as a dense bit matrix
/// with one word per row.  Values are immutable: every operation returns a
/// new relation.  Construction rejects non-reflexive input instead of
/// silently inserting the diagonal.
class Entourage {
 public:
  static Entourage diagonal(int n);
  static Entourage full(int n);
  /// Validates reflexivity and row range; throws on violation.
  static Entourage from_rows(int n, std::vector<PointSet> rows);
  /// Off-diagonal pairs; the diagonal is implied (the instance-file format).
  static Entourage from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return n_; }
  PointSet row(int x) const { return rows_[static_cast<std::size_t>(x)]; }
  bool contains(int x, int y) const { return contains_point(rows_[static_cast<std::size_t>(x)], y); }

  Entourage inverse() const;
  Entourage compose(const Entourage& v) const;
  /// Plain power U^k for any integer k (U^0 = diagonal, negative powers via
  /// the inverse).
  Entourage power(int k) const;
  /// Alternating powers: lead(n) starts with U, trail(n) with U^{-1}:
  ///   lead(0) = trail(0) = diagonal,
  ///   lead(n+1) = U . trail(n),  trail(n+1) = U^{-1} . lead(n).
  Entourage alt_lead(int n) const;
  Entourage alt_trail(int n) const;

  Entourage intersect(const Entourage& v) const;
  Entourage unite(const Entourage& v) const;
  Entourage transitive_closure() const;

  /// {y : exists a in A with (a,y) in U}.  Contains A by reflexivity.
  PointSet ball(PointSet a) const;

  bool subset_of(const Entourage& v) const;
  bool is_diagonal() const;
  bool is_symmetric() const;
  bool is_transitive() const;

  /// First pair (row-major) present in *this but not in v, if any.
  std::pair<int, int> first_pair_not_in(const Entourage& v) const;

  std::vector<std::pair<int, int>> off_diagonal_pairs() const;
  Entourage permuted(const std::vector<int>& perm) const;

  /// Row-major bit string of the full matrix, prefixed with the carrier size.
  std::string encode() const;

  bool operator==(const Entourage& other) const = default;
  auto operator<=>(const Entourage& other) const = default;

 private:
  Entourage(int n, std::vector<PointSet> rows) : n_(n), rows_(std::move(rows)) {}

  int n_ = 0;
  std::vector<PointSet> rows_;
};

/// A finite family of subsets whose union is the carrier.
struct Cover {
  int n = 0;
  std::vector<PointSet> members;

  static Cover make(int n, std::vector<PointSet> members);
};

/// n-fold star expansion: step 0 is A itself, each further step unions all
/// cover members meeting the previous stage.
PointSet star(const Cover& cover, PointSet a, int steps);

/// The cover {B(z;U) : z in X} of U-balls (deduplicated).
Cover ball_cover(const Entourage& u);

}  // namespace qulab

#endif
