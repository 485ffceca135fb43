#ifndef QULAB_HARNESS_HPP
#define QULAB_HARNESS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qulab/monoid.hpp"

namespace qulab {

enum class StreamKind { topologies, quasi_uniformity_pairs, monoids };

std::string stream_kind_name(StreamKind kind);

/// One enumerated instance.  Topology instances carry a space; pair
/// instances two transitive reflexive relations (principal quasi-
/// uniformities); monoid instances a validated TopoMonoid (open shifts may be
/// absent and are flagged).
struct Instance {
  StreamKind kind = StreamKind::topologies;
  std::size_t index = 0;
  std::optional<FiniteSpace> space;
  std::optional<std::pair<Entourage, Entourage>> pair;
  std::optional<TopoMonoid> monoid;

  std::string encoding() const;
};

/// Complete enumeration of a kind at a fixed carrier size, in canonical
/// (lexicographic-encoding) order.  Counts are validated against known
/// values; a mismatch aborts, since an incomplete stream would invalidate
/// every downstream verdict.
class InstanceStream {
 public:
  static InstanceStream topologies(int n, bool dedup = false);
  static InstanceStream quasi_uniformity_pairs(int n, bool dedup = false);
  static InstanceStream monoids(int n, bool dedup = false);
  static InstanceStream make(StreamKind kind, int n, bool dedup = false);

  /// Supported carrier range per kind.
  static int max_points(StreamKind kind);

  StreamKind kind() const { return kind_; }
  int points() const { return n_; }
  const std::vector<Instance>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }

 private:
  InstanceStream(StreamKind kind, int n, std::vector<Instance> items)
      : kind_(kind), n_(n), items_(std::move(items)) {}

  StreamKind kind_;
  int n_;
  std::vector<Instance> items_;
};

/// All reflexive transitive relations on n points in canonical order (these
/// are exactly the finite topologies and the principal quasi-uniformities).
std::vector<Entourage> enumerate_preorders(int n);

struct LawOutcome {
  bool applicable = true;
  bool holds = true;
  std::string detail;  // lhs/rhs or failed flag on violation; premise on skip
};

struct Law {
  std::string id;
  StreamKind kind;
  std::function<LawOutcome(const Instance&)> run;
};

const std::vector<Law>& law_registry();
std::vector<std::string> law_ids_for(StreamKind kind);
/// Resolves a selector: "all", an exact id, or a dot-prefix ("diagram.").
std::vector<const Law*> select_laws(const std::string& selector);

struct ViolationRecord {
  std::string law_id;
  std::string instance;
  std::string detail;
};

struct LawStats {
  std::string law_id;
  std::size_t checked = 0;
  std::size_t skipped = 0;
};

struct RegressionVerdict {
  std::size_t checked = 0;
  std::size_t skipped = 0;
  std::vector<LawStats> per_law;  // in selection order
  std::vector<ViolationRecord> violations;
  double elapsed_seconds = 0.0;  // informational; not part of machine reports
};

/// Runs every selected law on every instance, skipping (and counting)
/// instances that fail a law's premise.  Work is split into contiguous
/// chunks by canonical index and merged in order, so the verdict does not
/// depend on the worker count.
RegressionVerdict regression_suite(const InstanceStream& stream,
                                   const std::vector<const Law*>& laws, int jobs = 1);

struct SeparationHunt {
  bool found = false;
  std::size_t index = 0;
  std::string instance_encoding;
  long long lhs = 0;
  long long rhs = 0;
};

/// First instance (canonical order) where the two named invariants differ.
SeparationHunt hunt_separations(const InstanceStream& stream, const std::string& inv_a,
                                const std::string& inv_b);

/// Unified registry of integer invariants of a finite space: the classical
/// and star-covering ones plus the boundedness family of the universal
/// filters.  Names follow the command-line syntax, e.g. "d", "lstar(1)",
/// "ell_mp(2)", "qell_vee(1)", "uell".
long long topological_invariant(const std::string& name, const FiniteSpace& x);
std::vector<std::string> topological_invariant_names();

}  // namespace qulab

#endif
