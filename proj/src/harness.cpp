#include "qulab/harness.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <thread>

namespace qulab {

std::string stream_kind_name(StreamKind kind) {
  switch (kind) {
    case StreamKind::topologies: return "topologies";
    case StreamKind::quasi_uniformity_pairs: return "quasi_uniformity_pairs";
    case StreamKind::monoids: return "monoids";
  }
  fail_usage("unknown stream kind");
}

std::string Instance::encoding() const {
  switch (kind) {
    case StreamKind::topologies: return "top:" + space->encode();
    case StreamKind::quasi_uniformity_pairs:
      return "pair:" + pair->first.encode() + "|" + pair->second.encode();
    case StreamKind::monoids: return "monoid:" + monoid->encode();
  }
  fail_usage("unknown stream kind");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

// Labeled counts of reflexive transitive relations (= finite topologies) and
// their homeomorphism classes; an enumeration that disagrees is broken and
// must not feed any verdict.
constexpr long long kPreorderCounts[6] = {1, 1, 4, 29, 355, 6942};
constexpr long long kPreorderClassCounts[6] = {1, 1, 3, 9, 33, 139};
// Monoid tables up to isomorphism.
constexpr long long kMonoidClassCounts[5] = {0, 1, 2, 7, 35};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::string canonical_relation_encoding(const Entourage& e) {
  std::string best = e.encode();
  for (const auto& perm : all_permutations(e.size())) {
    best = std::min(best, e.permuted(perm).encode());
  }
  return best;
}

std::vector<std::vector<int>> permuted_table(const std::vector<std::vector<int>>& table,
                                             const std::vector<int>& perm) {
  const std::size_t n = table.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      out[static_cast<std::size_t>(perm[a])][static_cast<std::size_t>(perm[b])] =
          perm[static_cast<std::size_t>(table[a][b])];
    }
  }
  return out;
}

std::string table_encoding(const std::vector<std::vector<int>>& table) {
  std::string out;
  for (const auto& row : table) {
    for (int v : row) out += std::to_string(v);
  }
  return out;
}

std::vector<std::vector<std::vector<int>>> all_monoid_tables(int n) {
  if (n < 1 || n > 4) fail_usage("monoid enumeration supported for 1 <= n <= 4");
  std::vector<std::vector<std::vector<int>>> out;
  for (int e = 0; e < n; ++e) {
    std::vector<std::pair<int, int>> cells;
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != e && b != e) cells.emplace_back(a, b);
      }
    }
    std::vector<int> digits(cells.size(), 0);
    for (;;) {
      std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
      for (int a = 0; a < n; ++a) {
        table[static_cast<std::size_t>(e)][static_cast<std::size_t>(a)] = a;
        table[static_cast<std::size_t>(a)][static_cast<std::size_t>(e)] = a;
      }
      for (std::size_t i = 0; i < cells.size(); ++i) {
        table[static_cast<std::size_t>(cells[i].first)][static_cast<std::size_t>(cells[i].second)] = digits[i];
      }
      bool associative = true;
      for (int a = 0; a < n && associative; ++a) {
        for (int b = 0; b < n && associative; ++b) {
          for (int c = 0; c < n; ++c) {
            if (table[static_cast<std::size_t>(table[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])][static_cast<std::size_t>(c)] !=
                table[static_cast<std::size_t>(a)][static_cast<std::size_t>(table[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)])]) {
              associative = false;
              break;
            }
          }
        }
      }
      if (associative) out.push_back(table);

      std::size_t pos = 0;
      while (pos < digits.size()) {
        if (++digits[pos] < n) break;
        digits[pos] = 0;
        ++pos;
      }
      if (pos == digits.size()) break;
    }
  }
  return out;
}

}  // namespace

std::vector<Entourage> enumerate_preorders(int n) {
  check_carrier_size(n);
  if (n > 5) fail_usage("preorder enumeration supported for 1 <= n <= 5");
  std::vector<std::pair<int, int>> off_diag;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b) off_diag.emplace_back(a, b);
    }
  }
  std::vector<Entourage> out;
  const std::uint64_t limit = std::uint64_t{1} << off_diag.size();
  for (std::uint64_t mask = 0; mask < limit; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < off_diag.size(); ++i) {
      if ((mask >> i) & 1) pairs.push_back(off_diag[i]);
    }
    Entourage e = Entourage::from_pairs(n, pairs);
    if (e.is_transitive()) out.push_back(e);
  }
  // Canonical stream order: lexicographic on encodings.
  std::sort(out.begin(), out.end(),
            [](const Entourage& a, const Entourage& b) { return a.encode() < b.encode(); });
  if (static_cast<long long>(out.size()) != kPreorderCounts[n]) {
    throw Error(ErrorKind::internal,
                "preorder enumeration produced " + std::to_string(out.size()) + " relations on " +
                    std::to_string(n) + " points, expected " + std::to_string(kPreorderCounts[n]));
  }
  return out;
}

InstanceStream InstanceStream::topologies(int n, bool dedup) {
  std::vector<Entourage> preorders = enumerate_preorders(n);
  std::vector<Instance> items;
  std::size_t classes = 0;
  for (std::size_t i = 0; i < preorders.size(); ++i) {
    if (dedup) {
      if (canonical_relation_encoding(preorders[i]) != preorders[i].encode()) continue;
      ++classes;
    }
    Instance inst;
    inst.kind = StreamKind::topologies;
    inst.index = items.size();
    inst.space = FiniteSpace::from_preorder(preorders[i]);
    items.push_back(std::move(inst));
  }
  if (dedup && static_cast<long long>(classes) != kPreorderClassCounts[n]) {
    throw Error(ErrorKind::internal, "topology class count mismatch at n=" + std::to_string(n));
  }
  return InstanceStream(StreamKind::topologies, n, std::move(items));
}

InstanceStream InstanceStream::quasi_uniformity_pairs(int n, bool dedup) {
  if (n > 4) fail_usage("pair enumeration supported for 1 <= n <= 4");
  std::vector<Entourage> preorders = enumerate_preorders(n);
  std::vector<std::vector<int>> perms = all_permutations(n);
  std::vector<Instance> items;
  for (const Entourage& a : preorders) {
    for (const Entourage& b : preorders) {
      if (dedup) {
        std::string enc = a.encode() + "|" + b.encode();
        std::string best = enc;
        for (const auto& perm : perms) {
          best = std::min(best, a.permuted(perm).encode() + "|" + b.permuted(perm).encode());
        }
        if (best != enc) continue;
      }
      Instance inst;
      inst.kind = StreamKind::quasi_uniformity_pairs;
      inst.index = items.size();
      inst.pair = {a, b};
      items.push_back(std::move(inst));
    }
  }
  if (!dedup && items.size() != static_cast<std::size_t>(kPreorderCounts[n] * kPreorderCounts[n])) {
    throw Error(ErrorKind::internal, "pair enumeration count mismatch at n=" + std::to_string(n));
  }
  return InstanceStream(StreamKind::quasi_uniformity_pairs, n, std::move(items));
}

InstanceStream InstanceStream::monoids(int n, bool dedup) {
  std::vector<std::vector<std::vector<int>>> tables = all_monoid_tables(n);
  std::vector<std::vector<int>> perms = all_permutations(n);

  // Validate the table enumeration against the known isomorphism-class
  // counts before pairing tables with topologies.
  {
    std::vector<std::string> canon;
    for (const auto& table : tables) {
      std::string best = table_encoding(table);
      for (const auto& perm : perms) best = std::min(best, table_encoding(permuted_table(table, perm)));
      canon.push_back(best);
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    if (static_cast<long long>(canon.size()) != kMonoidClassCounts[n]) {
      throw Error(ErrorKind::internal, "monoid class count mismatch at n=" + std::to_string(n) +
                                           ": got " + std::to_string(canon.size()));
    }
  }

  std::vector<Entourage> preorders = enumerate_preorders(n);
  std::vector<Instance> items;
  for (const auto& table : tables) {
    for (const Entourage& pre : preorders) {
      FiniteSpace space = FiniteSpace::from_preorder(pre);
      if (validate_monoid(table, space, /*require_open_shifts=*/false)) continue;
      if (dedup) {
        std::string enc = table_encoding(table) + ":" + pre.encode();
        std::string best = enc;
        for (const auto& perm : perms) {
          best = std::min(best,
                          table_encoding(permuted_table(table, perm)) + ":" + pre.permuted(perm).encode());
        }
        if (best != enc) continue;
      }
      Instance inst;
      inst.kind = StreamKind::monoids;
      inst.monoid = TopoMonoid::make(table, std::move(space), /*require_open_shifts=*/false);
      items.push_back(std::move(inst));
    }
  }
  std::sort(items.begin(), items.end(),
            [](const Instance& a, const Instance& b) { return a.encoding() < b.encoding(); });
  for (std::size_t i = 0; i < items.size(); ++i) items[i].index = i;
  return InstanceStream(StreamKind::monoids, n, std::move(items));
}

InstanceStream InstanceStream::make(StreamKind kind, int n, bool dedup) {
  switch (kind) {
    case StreamKind::topologies: return topologies(n, dedup);
    case StreamKind::quasi_uniformity_pairs: return quasi_uniformity_pairs(n, dedup);
    case StreamKind::monoids: return monoids(n, dedup);
  }
  fail_usage("unknown stream kind");
}

int InstanceStream::max_points(StreamKind kind) {
  switch (kind) {
    case StreamKind::topologies: return 5;
    case StreamKind::quasi_uniformity_pairs: return 4;
    case StreamKind::monoids: return 4;
  }
  fail_usage("unknown stream kind");
}

// ---------------------------------------------------------------------------
// Invariant registry

namespace {

struct InvariantEntry {
  std::string name;  // base name; indexed entries take "(k)"
  bool indexed;
  std::function<long long(const FiniteSpace&, int)> fn;
};

long long classical(const FiniteSpace& x, InvariantKind kind, int index = 0) {
  return invariant(x, {kind, index});
}

const std::vector<InvariantEntry>& invariant_entries() {
  static const std::vector<InvariantEntry> entries = {
      {"nw", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::nw); }},
      {"d", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::d); }},
      {"hd", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::hd); }},
      {"s", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::s); }},
      {"e", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::e); }},
      {"c", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::c); }},
      {"de", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::de); }},
      {"dc", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::dc); }},
      {"l", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::l); }},
      {"hl", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::hl); }},
      {"lbar", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::lbar); }},
      {"lstar", true, [](const FiniteSpace& x, int k) { return classical(x, InvariantKind::lstar, k); }},
      {"lbarstar", true, [](const FiniteSpace& x, int k) { return classical(x, InvariantKind::lbarstar, k); }},
      {"lstar_half", true, [](const FiniteSpace& x, int k) { return classical(x, InvariantKind::lstar_half, k); }},
      {"lbarstar_half", true,
       [](const FiniteSpace& x, int k) { return classical(x, InvariantKind::lbarstar_half, k); }},
      {"lstar_omega", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::lstar_omega); }},
      {"lbarstar_omega", false,
       [](const FiniteSpace& x, int) { return classical(x, InvariantKind::lbarstar_omega); }},
      {"psi", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::psi); }},
      {"chi", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::chi); }},
      {"psibar", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::psibar); }},
      {"delta", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::delta); }},
      {"deltabar", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::deltabar); }},
      {"log_of_size", false, [](const FiniteSpace& x, int) { return classical(x, InvariantKind::log_of_size); }},
      {"ell_pm", true, [](const FiniteSpace& x, int k) { return topo_ell_lead(x, k); }},
      {"ell_mp", true, [](const FiniteSpace& x, int k) { return topo_ell_trail(x, k); }},
      {"ell_wedge", true, [](const FiniteSpace& x, int k) { return topo_ell_wedge(x, k); }},
      {"ell_vee", true, [](const FiniteSpace& x, int k) { return topo_ell_vee(x, k); }},
      {"ellbar_pm", true, [](const FiniteSpace& x, int k) { return topo_ellbar_lead(x, k); }},
      {"ellbar_mp", true, [](const FiniteSpace& x, int k) { return topo_ellbar_trail(x, k); }},
      {"ell_omega", false, [](const FiniteSpace& x, int) { return topo_ell_omega(x); }},
      {"uell", false, [](const FiniteSpace& x, int) { return topo_uell(x); }},
      {"qell_pm", true, [](const FiniteSpace& x, int k) { return topo_qell_lead(x, k); }},
      {"qell_mp", true, [](const FiniteSpace& x, int k) { return topo_qell_trail(x, k); }},
      {"qell_wedge", true, [](const FiniteSpace& x, int k) { return topo_qell_wedge(x, k); }},
      {"qell_vee", true, [](const FiniteSpace& x, int k) { return topo_qell_vee(x, k); }},
      {"qell_omega", false, [](const FiniteSpace& x, int) { return topo_qell_omega(x); }},
  };
  return entries;
}

}  // namespace

long long topological_invariant(const std::string& name, const FiniteSpace& x) {
  std::string base = name;
  int index = 0;
  bool has_index = false;
  auto open = name.find('(');
  if (open != std::string::npos) {
    if (name.back() != ')') fail_usage("malformed invariant name: " + name);
    base = name.substr(0, open);
    std::string idx = name.substr(open + 1, name.size() - open - 2);
    if (idx.empty() || idx.find_first_not_of("0123456789") != std::string::npos) {
      fail_usage("malformed invariant index in: " + name);
    }
    index = std::stoi(idx);
    has_index = true;
  }
  for (const auto& entry : invariant_entries()) {
    if (entry.name != base) continue;
    if (entry.indexed != has_index) {
      fail_usage(entry.indexed ? "invariant " + base + " needs an index, e.g. " + base + "(1)"
                               : "invariant " + base + " takes no index");
    }
    if (index < 0 || index > 8) fail_usage("invariant index out of range (0..8): " + name);
    return entry.fn(x, index);
  }
  std::string known;
  for (const auto& entry : invariant_entries()) {
    if (!known.empty()) known += ", ";
    known += entry.name + (entry.indexed ? "(n)" : "");
  }
  fail_usage("unknown invariant '" + name + "'; known invariants: " + known);
}

std::vector<std::string> topological_invariant_names() {
  std::vector<std::string> out;
  for (const auto& entry : invariant_entries()) {
    out.push_back(entry.name + (entry.indexed ? "(n)" : ""));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Law registry

namespace {

LawOutcome law_ok() { return LawOutcome{true, true, ""}; }
LawOutcome law_fail(std::string detail) { return LawOutcome{true, false, std::move(detail)}; }
LawOutcome law_skip(std::string premise) { return LawOutcome{false, true, std::move(premise)}; }

LawOutcome chain_leq(const FiniteSpace& x, const std::vector<std::string>& names) {
  long long prev = 0;
  std::string prev_name;
  for (std::size_t i = 0; i < names.size(); ++i) {
    long long v = topological_invariant(names[i], x);
    if (i > 0 && prev > v) {
      return law_fail(prev_name + "=" + std::to_string(prev) + " > " + names[i] + "=" +
                      std::to_string(v));
    }
    prev = v;
    prev_name = names[i];
  }
  return law_ok();
}

LawOutcome all_equal(const FiniteSpace& x, const std::vector<std::string>& names) {
  long long first = topological_invariant(names[0], x);
  for (std::size_t i = 1; i < names.size(); ++i) {
    long long v = topological_invariant(names[i], x);
    if (v != first) {
      return law_fail(names[0] + "=" + std::to_string(first) + " != " + names[i] + "=" +
                      std::to_string(v));
    }
  }
  return law_ok();
}

const FiniteSpace& space_of(const Instance& inst) { return *inst.space; }

Law topology_law(std::string id, std::function<LawOutcome(const FiniteSpace&)> fn) {
  return Law{std::move(id), StreamKind::topologies,
             [fn = std::move(fn)](const Instance& inst) { return fn(space_of(inst)); }};
}

Law pair_law(std::string id, std::function<LawOutcome(const Entourage&, const Entourage&)> fn) {
  return Law{std::move(id), StreamKind::quasi_uniformity_pairs,
             [fn = std::move(fn)](const Instance& inst) {
               return fn(inst.pair->first, inst.pair->second);
             }};
}

Law monoid_law(std::string id, std::function<LawOutcome(const TopoMonoid&)> fn) {
  return Law{std::move(id), StreamKind::monoids,
             [fn = std::move(fn)](const Instance& inst) { return fn(*inst.monoid); }};
}

std::vector<Law> build_topology_laws() {
  std::vector<Law> laws;
  auto add_chain = [&](std::string id, std::vector<std::string> names, int max_points = 64) {
    laws.push_back(topology_law(std::move(id), [names = std::move(names), max_points](const FiniteSpace& x) {
      if (x.size() > max_points) return law_skip("carrier too large for this law");
      return chain_leq(x, names);
    }));
  };

  add_chain("diagram.lstar1_de_l", {"lstar(1)", "de", "l"});
  add_chain("diagram.dc_de", {"dc", "de"});
  add_chain("diagram.dc_c", {"dc", "c"});
  add_chain("diagram.c_s", {"c", "s"});
  add_chain("diagram.c_d_hd_nw", {"c", "d", "hd", "nw"}, 8);
  add_chain("diagram.s_nw", {"s", "nw"});
  add_chain("diagram.e_de", {"e", "de"});
  add_chain("diagram.lbar_c", {"lbar", "c"});
  add_chain("diagram.l_hl_nw", {"l", "hl", "nw"}, 8);
  add_chain("diagram.s_hl", {"s", "hl"}, 8);
  add_chain("diagram.s_hd", {"s", "hd"}, 8);
  add_chain("diagram.barstar1h_dc", {"lbarstar_half(1)", "dc"});

  laws.push_back(topology_law("star.descending", [](const FiniteSpace& x) {
    LawOutcome chain = chain_leq(x, {"lstar(2)", "lstar_half(1)", "lstar(1)", "lstar_half(0)", "lstar(0)"});
    if (!chain.holds) return chain;
    if (topological_invariant("lstar(0)", x) != x.size()) return law_fail("lstar(0) != carrier size");
    return all_equal(x, {"lstar_half(0)", "l"});
  }));
  laws.push_back(topology_law("star.descending_bar", [](const FiniteSpace& x) {
    LawOutcome chain =
        chain_leq(x, {"lbarstar(2)", "lbarstar_half(1)", "lbarstar(1)", "lbarstar_half(0)", "lbarstar(0)"});
    if (!chain.holds) return chain;
    LawOutcome eq = all_equal(x, {"lbarstar(0)", "d"});
    if (!eq.holds) return eq;
    return all_equal(x, {"lbarstar_half(0)", "lbar"});
  }));
  laws.push_back(topology_law("star.bar_below_plain", [](const FiniteSpace& x) {
    for (int n = 0; n <= 2; ++n) {
      std::string idx = "(" + std::to_string(n) + ")";
      LawOutcome a = chain_leq(x, {"lbarstar" + idx, "lstar" + idx});
      if (!a.holds) return a;
      LawOutcome b = chain_leq(x, {"lbarstar_half" + idx, "lstar_half" + idx});
      if (!b.holds) return b;
    }
    return law_ok();
  }));
  laws.push_back(topology_law("star.dense_step", [](const FiniteSpace& x) {
    for (int n = 0; n <= 1; ++n) {
      LawOutcome a = chain_leq(x, {"lstar(" + std::to_string(n + 1) + ")", "lbarstar(" + std::to_string(n) + ")"});
      if (!a.holds) return a;
      LawOutcome b = chain_leq(
          x, {"lstar_half(" + std::to_string(n + 1) + ")", "lbarstar_half(" + std::to_string(n) + ")"});
      if (!b.holds) return b;
    }
    return law_ok();
  }));
  laws.push_back(topology_law("star.omega_agree", [](const FiniteSpace& x) {
    return all_equal(x, {"lstar_omega", "lbarstar_omega"});
  }));

  laws.push_back(topology_law("quasi_regular.star_collapse", [](const FiniteSpace& x) {
    if (!separation_check(x, SeparationAxiom::quasi_regular).holds) {
      return law_skip("space is not quasi-regular");
    }
    return all_equal(x, {"dc", "lbarstar_half(1)", "lstar_omega"});
  }));
  laws.push_back(topology_law("t1.extent_agrees", [](const FiniteSpace& x) {
    if (!separation_check(x, SeparationAxiom::T1).holds) return law_skip("space is not T1");
    return all_equal(x, {"e", "de"});
  }));

  laws.push_back(topology_law("star_alt.full_system", [](const FiniteSpace& x) {
    for (int n = 0; n <= 2; ++n) {
      std::string sn = std::to_string(n);
      LawOutcome a = all_equal(x, {"lstar(" + sn + ")", "ell_mp(" + std::to_string(2 * n) + ")"});
      if (!a.holds) return a;
      LawOutcome b = all_equal(x, {"lbarstar(" + sn + ")", "ellbar_mp(" + std::to_string(2 * n) + ")"});
      if (!b.holds) return b;
      LawOutcome c = all_equal(x, {"lstar_half(" + sn + ")", "ell_pm(" + std::to_string(2 * n + 1) + ")"});
      if (!c.holds) return c;
      LawOutcome d =
          all_equal(x, {"lbarstar_half(" + sn + ")", "ellbar_pm(" + std::to_string(2 * n + 1) + ")"});
      if (!d.holds) return d;
    }
    return law_ok();
  }));
  laws.push_back(topology_law("star_alt.ball_star", [](const FiniteSpace& x) {
    Cover cover = x.min_nbhd_cover();
    for (int n = 0; n <= 2; ++n) {
      Entourage power = x.preorder().alt_trail(2 * n);
      for (int p = 0; p < x.size(); ++p) {
        if (power.row(p) != star(cover, singleton(p), n)) {
          return law_fail("trailing power ball differs from the star at point " + std::to_string(p) +
                          ", n=" + std::to_string(n));
        }
      }
    }
    return law_ok();
  }));

  add_chain("bounded.wedge1_s_vee1_nw", {"ell_wedge(1)", "s", "qell_vee(1)", "ell_vee(1)", "nw"});
  laws.push_back(topology_law("bounded.e_de_lead1", [](const FiniteSpace& x) {
    LawOutcome chain = chain_leq(x, {"e", "de", "qell_pm(1)", "ell_pm(1)"});
    if (!chain.holds) return chain;
    return all_equal(x, {"ell_pm(1)", "l"});
  }));
  add_chain("bounded.c_trail1_d", {"c", "qell_mp(1)", "ell_mp(1)", "d"});
  laws.push_back(topology_law("bounded.bar_below_plain", [](const FiniteSpace& x) {
    for (int n = 1; n <= 3; ++n) {
      std::string idx = "(" + std::to_string(n) + ")";
      LawOutcome a = chain_leq(x, {"ellbar_pm" + idx, "ell_pm" + idx});
      if (!a.holds) return a;
      LawOutcome b = chain_leq(x, {"ellbar_mp" + idx, "ell_mp" + idx});
      if (!b.holds) return b;
    }
    return law_ok();
  }));
  laws.push_back(topology_law("bounded.q_below_plain", [](const FiniteSpace& x) {
    for (int n = 1; n <= 3; ++n) {
      std::string idx = "(" + std::to_string(n) + ")";
      for (const std::string& fam : {std::string("pm"), std::string("mp"), std::string("vee"), std::string("wedge")}) {
        LawOutcome a = chain_leq(x, {"qell_" + fam + idx, "ell_" + fam + idx});
        if (!a.holds) return a;
      }
    }
    return law_ok();
  }));
  laws.push_back(topology_law("bounded.wedge_alt_vee", [](const FiniteSpace& x) {
    for (int n = 1; n <= 3; ++n) {
      std::string idx = "(" + std::to_string(n) + ")";
      LawOutcome a = chain_leq(x, {"ell_wedge" + idx, "ell_pm" + idx, "ell_vee" + idx});
      if (!a.holds) return a;
      LawOutcome b = chain_leq(x, {"ell_wedge" + idx, "ell_mp" + idx, "ell_vee" + idx});
      if (!b.holds) return b;
    }
    return law_ok();
  }));
  laws.push_back(topology_law("bounded.vee_step", [](const FiniteSpace& x) {
    for (int n = 1; n <= 2; ++n) {
      LawOutcome a = chain_leq(
          x, {"ell_vee(" + std::to_string(n + 1) + ")", "ell_wedge(" + std::to_string(n) + ")"});
      if (!a.holds) return a;
    }
    return law_ok();
  }));
  add_chain("bounded.uell_lead1", {"uell", "qell_pm(1)"});
  add_chain("bounded.uell_trail1", {"uell", "qell_mp(1)"});
  add_chain("bounded.uell_vee1", {"uell", "qell_vee(1)"});
  // The component equivalence contains every symmetrized assignment, so the
  // universal uniformity sits below the wedge filters as well.
  add_chain("bounded.uell_wedge1", {"uell", "qell_wedge(1)"});

  laws.push_back(topology_law("universal.generate_topology", [](const FiniteSpace& x) {
    if (!(generated_topology(canonical(x, CanonicalKind::pervin)) == x)) {
      return law_fail("pervin filter generates a different topology");
    }
    if (!(generated_topology(canonical(x, CanonicalKind::universal_pre)) == x)) {
      return law_fail("universal pre-filter generates a different topology");
    }
    return law_ok();
  }));
  laws.push_back(topology_law("universal.minimum_below_pervin", [](const FiniteSpace& x) {
    if (!canonical(x, CanonicalKind::universal_pre).min().subset_of(canonical(x, CanonicalKind::pervin).min())) {
      return law_fail("universal minimum is not below the pervin minimum");
    }
    return law_ok();
  }));
  laws.push_back(topology_law("universal.ell_is_l", [](const FiniteSpace& x) {
    long long lhs = uniform_invariant(canonical(x, CanonicalKind::universal_pre), UniformInvariant::ell);
    long long rhs = topological_invariant("l", x);
    if (lhs != rhs) return law_fail("ell(universal_pre)=" + std::to_string(lhs) + " != l=" + std::to_string(rhs));
    return law_ok();
  }));
  laws.push_back(topology_law("universal.quasi_by_search", [](const FiniteSpace& x) {
    if (x.size() > 4) return law_skip("search route capped at 4 points");
    if (!(universal_quasi_min_by_search(x) == x.preorder())) {
      return law_fail("search minimum differs from the minimal neighborhood assignment");
    }
    return law_ok();
  }));
  laws.push_back(topology_law("universal.q_equals_plain", [](const FiniteSpace& x) {
    for (int n = 1; n <= 2; ++n) {
      std::string idx = "(" + std::to_string(n) + ")";
      for (const std::string& fam : {std::string("pm"), std::string("mp")}) {
        long long q = topological_invariant("qell_" + fam + idx, x);
        long long p = topological_invariant("ell_" + fam + idx, x);
        if (q != p) {
          return law_fail("qell_" + fam + idx + "=" + std::to_string(q) + " != ell_" + fam + idx +
                          "=" + std::to_string(p));
        }
      }
    }
    return law_ok();
  }));
  laws.push_back(topology_law("character.trivial_on_finite", [](const FiniteSpace& x) {
    if (topological_invariant("psi", x) != 1 || topological_invariant("chi", x) != 1 ||
        topological_invariant("psibar", x) != 1) {
      return law_fail("character-type invariant differs from 1");
    }
    if (separation_check(x, SeparationAxiom::Hausdorff).holds) {
      if (topological_invariant("delta", x) != 1 || topological_invariant("deltabar", x) != 1) {
        return law_fail("diagonal number differs from 1 on a discrete space");
      }
    }
    return law_ok();
  }));
  return laws;
}

std::vector<Law> build_pair_laws() {
  std::vector<Law> laws;

  laws.push_back(pair_law("pairs.composite_equivalence", [](const Entourage& lm, const Entourage& rm) {
    bool incl1 = rm.inverse().compose(lm).subset_of(lm.compose(rm.inverse()));
    bool incl2 = lm.inverse().compose(rm).subset_of(rm.compose(lm.inverse()));
    bool quasi1 = lm.compose(rm.inverse()).is_transitive();
    bool quasi2 = rm.compose(lm.inverse()).is_transitive();
    if (incl1 != incl2 || incl2 != quasi1 || quasi1 != quasi2) {
      return law_fail("conditions disagree: " + std::to_string(incl1) + std::to_string(incl2) +
                      std::to_string(quasi1) + std::to_string(quasi2));
    }
    return law_ok();
  }));

  laws.push_back(pair_law("pairs.subcommuting_normal", [](const Entourage& lm, const Entourage& rm) {
    PreUniformity l = PreUniformity::principal(lm);
    PreUniformity r = PreUniformity::principal(rm);
    CommutingProfile profile = commuting_profile(l, r);
    FiniteSpace tau = generated_topology(l);
    if (!profile.normally_pm_subcommuting || !(tau == generated_topology(r))) {
      return law_skip("not normally subcommuting with a common topology");
    }
    if (!is_normal(l.with_ambient(tau))) return law_fail("left filter not normal");
    if (!is_normal(r.with_ambient(tau))) return law_fail("right filter not normal");
    return law_ok();
  }));

  laws.push_back(pair_law("pairs.roelcke_uniformity", [](const Entourage& lm, const Entourage& rm) {
    PreUniformity l = PreUniformity::principal(lm);
    PreUniformity r = PreUniformity::principal(rm);
    CommutingProfile profile = commuting_profile(l, r);
    FiniteSpace tau = generated_topology(l);
    if (!profile.pm_subcommuting || !(tau == generated_topology(r))) {
      return law_skip("not subcommuting with a common topology");
    }
    PreUniformity fu = quasi_roelcke(l, r);
    Classification c = classify(fu);
    if (!c.is_uniformity) return law_fail("symmetrized composite is not a uniformity");
    FiniteSpace tau_fu = generated_topology(fu);
    for (int p = 0; p < tau.size(); ++p) {
      if (!subset(tau.min_nbhd(p), tau_fu.min_nbhd(p))) {
        return law_fail("composite topology is not coarser at point " + std::to_string(p));
      }
    }
    return law_ok();
  }));

  laws.push_back(pair_law("pairs.cotopological_three_separated", [](const Entourage& lm, const Entourage& rm) {
    PreUniformity l = PreUniformity::principal(lm);
    PreUniformity r = PreUniformity::principal(rm);
    CommutingProfile profile = commuting_profile(l, r);
    FiniteSpace tau = generated_topology(l);
    if (!profile.pm_subcommuting || !(tau == generated_topology(r))) {
      return law_skip("not subcommuting with a common topology");
    }
    if (!separation_check(tau, SeparationAxiom::Hausdorff).holds) {
      return law_skip("common topology not Hausdorff");
    }
    if (!(generated_topology(derived_inverse(l)) == generated_topology(derived_inverse(r)))) {
      return law_skip("inverse filters generate different topologies");
    }
    if (!separation_degree(l, SeparationMode::both, 3)) return law_fail("left filter not 3-separated");
    if (!separation_degree(r, SeparationMode::both, 3)) return law_fail("right filter not 3-separated");
    return law_ok();
  }));

  auto add_separating = [&laws](std::string id, PairsMode mode, bool aux_vee) {
    laws.push_back(pair_law(std::move(id), [mode, aux_vee](const Entourage& lm, const Entourage& rm) {
      PreUniformity l = PreUniformity::principal(lm);
      PreUniformity r = PreUniformity::principal(rm);
      try {
        SeparatingPairsResult res;
        if (mode == PairsMode::auxiliary) {
          FiniteSpace tau = generated_topology(l);
          PreUniformity anchored_l = l.with_ambient(tau);
          PreUniformity aux = aux_vee ? derived_vee(anchored_l, 1) : derived_lead(anchored_l, 1);
          res = separating_pairs(anchored_l, r.with_ambient(tau), mode, &aux);
        } else {
          res = separating_pairs(l, r, mode);
        }
        if (!res.one_separated) return law_fail("family intersection exceeds the diagonal");
        if (!res.within_bound) {
          return law_fail("family size " + std::to_string(res.family_size) + " exceeds bound " +
                          std::to_string(res.bound) + " (" + res.bound_formula + ")");
        }
        return law_ok();
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::precondition) return law_skip(e.what());
        throw;
      }
    }));
  };
  add_separating("pairs.separating.inverse_boundedness", PairsMode::inverse_boundedness, false);
  add_separating("pairs.separating.forward_boundedness", PairsMode::forward_boundedness, false);
  add_separating("pairs.separating.commuting_boundedness", PairsMode::commuting_boundedness, false);
  add_separating("pairs.separating.auxiliary_vee1", PairsMode::auxiliary, true);
  add_separating("pairs.separating.auxiliary_lead1", PairsMode::auxiliary, false);

  laws.push_back(pair_law("pairs.cardinality_bound", [](const Entourage& lm, const Entourage&) {
    PreUniformity l = PreUniformity::principal(lm);
    if (!lm.alt_trail(2).is_diagonal()) return law_skip("left filter not trail-2-separated");
    CardinalityBoundReport rep = cardinality_bound_check(l);
    if (!rep.injection_verified) return law_fail("anchor map is not injective");
    if (!rep.bound_holds) {
      return law_fail("carrier " + std::to_string(rep.carrier_size) + " exceeds ell^psi bound");
    }
    return law_ok();
  }));

  laws.push_back(pair_law("pairs.psi_bounds", [](const Entourage& lm, const Entourage& rm) {
    FiniteSpace tau = generated_topology(PreUniformity::principal(lm));
    PsiBoundReport rep = psi_bound_report(PreUniformity::principal(lm, tau),
                                          PreUniformity::principal(rm, tau));
    std::size_t applicable = 0;
    for (const InequalityRow& row : rep.rows) {
      if (!row.applicable) continue;
      ++applicable;
      if (!row.holds) {
        return law_fail("inequality " + row.id + " fails: " + std::to_string(row.lhs) + " > " +
                        std::to_string(row.rhs));
      }
    }
    if (applicable == 0) return law_skip("no inequality premises hold");
    return law_ok();
  }));

  return laws;
}

std::vector<Law> build_monoid_laws() {
  std::vector<Law> laws;

  laws.push_back(monoid_law("monoid.theorem_profile", [](const TopoMonoid& m) {
    if (!m.has_open_shifts()) return law_skip("shifts are not open");
    MonoidProfileReport rep = verify_monoid_properties(m);
    if (!rep.all_theorems_hold) {
      std::string detail = "failed flags:";
      if (!rep.normally_commuting) detail += " normally_commuting";
      if (!rep.normally_pm_subcommuting) detail += " normally_pm_subcommuting";
      if (!rep.left_normal) detail += " left_normal";
      if (!rep.right_normal) detail += " right_normal";
      if (!rep.hausdorff_iff_separated) detail += " hausdorff_iff_separated";
      if (!rep.topologies_generated) detail += " topologies_generated";
      if (!rep.fu_topology_coarser) detail += " fu_topology_coarser";
      if (!rep.inclusion_diagram) detail += " inclusion_diagram";
      if (rep.inverse_pair_normally_commuting && !*rep.inverse_pair_normally_commuting) detail += " inverse_commuting";
      if (rep.inverse_pair_normally_pm_subcommuting && !*rep.inverse_pair_normally_pm_subcommuting) detail += " inverse_subcommuting";
      if (rep.inverse_pair_cotopological && !*rep.inverse_pair_cotopological) detail += " inverse_cotopological";
      if (rep.uniform_quasi_topological_group && !*rep.uniform_quasi_topological_group) detail += " uniform_quasi_group";
      if (rep.fu_equals_roelcke_topology && !*rep.fu_equals_roelcke_topology) detail += " fu_vs_roelcke";
      return law_fail(detail);
    }
    return law_ok();
  }));

  laws.push_back(monoid_law("monoid.fu_uniformity", [](const TopoMonoid& m) {
    if (!m.has_open_shifts()) return law_skip("shifts are not open");
    CanonicalQuasiUniformities c = canonical_quasi_uniformities(m);
    if (!classify(c.quasi_roelcke).is_uniformity) {
      return law_fail("symmetrized composite is not a uniformity");
    }
    FiniteSpace tau_fu = generated_topology(c.quasi_roelcke);
    for (int p = 0; p < m.size(); ++p) {
      if (!subset(m.space().min_nbhd(p), tau_fu.min_nbhd(p))) {
        return law_fail("composite topology is not coarser at point " + std::to_string(p));
      }
    }
    return law_ok();
  }));

  laws.push_back(monoid_law("monoid.hausdorff_iff_separated", [](const TopoMonoid& m) {
    if (!m.has_open_shifts()) return law_skip("shifts are not open");
    CanonicalQuasiUniformities c = canonical_quasi_uniformities(m);
    bool hausdorff = separation_check(m.space(), SeparationAxiom::Hausdorff).holds;
    bool separated = c.quasi_roelcke.min().is_diagonal();
    if (hausdorff != separated) {
      return law_fail(std::string("hausdorff=") + (hausdorff ? "1" : "0") + " but separated=" +
                      (separated ? "1" : "0"));
    }
    return law_ok();
  }));

  laws.push_back(monoid_law("monoid.psi_bounds", [](const TopoMonoid& m) {
    if (!m.has_open_shifts()) return law_skip("shifts are not open");
    CanonicalQuasiUniformities c = canonical_quasi_uniformities(m);
    PsiBoundReport rep = psi_bound_report(c.left, c.right);
    std::size_t applicable = 0;
    for (const InequalityRow& row : rep.rows) {
      if (!row.applicable) continue;
      ++applicable;
      if (!row.holds) {
        return law_fail("inequality " + row.id + " fails: " + std::to_string(row.lhs) + " > " +
                        std::to_string(row.rhs));
      }
    }
    if (applicable == 0) return law_skip("no inequality premises hold");
    return law_ok();
  }));

  return laws;
}

}  // namespace

const std::vector<Law>& law_registry() {
  static const std::vector<Law> laws = [] {
    std::vector<Law> all = build_topology_laws();
    std::vector<Law> pairs = build_pair_laws();
    std::vector<Law> monoids = build_monoid_laws();
    all.insert(all.end(), pairs.begin(), pairs.end());
    all.insert(all.end(), monoids.begin(), monoids.end());
    return all;
  }();
  return laws;
}

std::vector<std::string> law_ids_for(StreamKind kind) {
  std::vector<std::string> out;
  for (const Law& law : law_registry()) {
    if (law.kind == kind) out.push_back(law.id);
  }
  return out;
}

std::vector<const Law*> select_laws(const std::string& selector) {
  std::vector<const Law*> out;
  if (selector == "all") {
    for (const Law& law : law_registry()) out.push_back(&law);
    return out;
  }
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : selector) {
    if (ch == ',') {
      if (!cur.empty()) parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  for (const std::string& part : parts) {
    bool matched = false;
    for (const Law& law : law_registry()) {
      bool prefix = !part.empty() && part.back() == '.' && law.id.rfind(part, 0) == 0;
      if (law.id == part || prefix || law.id.rfind(part + ".", 0) == 0) {
        out.push_back(&law);
        matched = true;
      }
    }
    if (!matched) fail_usage("unknown law selector: " + part);
  }
  return out;
}

RegressionVerdict regression_suite(const InstanceStream& stream,
                                   const std::vector<const Law*>& laws, int jobs) {
  auto start = std::chrono::steady_clock::now();
  if (jobs < 1) jobs = 1;
  if (jobs > 64) jobs = 64;

  std::vector<const Law*> applicable;
  for (const Law* law : laws) {
    if (law->kind == stream.kind()) applicable.push_back(law);
  }

  struct Part {
    std::vector<std::size_t> checked;
    std::vector<std::size_t> skipped;
    std::vector<ViolationRecord> violations;
  };
  std::vector<Part> parts(static_cast<std::size_t>(jobs));
  for (Part& part : parts) {
    part.checked.assign(applicable.size(), 0);
    part.skipped.assign(applicable.size(), 0);
  }
  const std::size_t total = stream.size();

  auto worker = [&](int w) {
    std::size_t lo = total * static_cast<std::size_t>(w) / static_cast<std::size_t>(jobs);
    std::size_t hi = total * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(jobs);
    Part& part = parts[static_cast<std::size_t>(w)];
    for (std::size_t i = lo; i < hi; ++i) {
      const Instance& inst = stream.items()[i];
      for (std::size_t li = 0; li < applicable.size(); ++li) {
        const Law* law = applicable[li];
        LawOutcome outcome;
        try {
          outcome = law->run(inst);
        } catch (const std::exception& e) {
          outcome = law_fail(std::string("exception: ") + e.what());
        }
        if (!outcome.applicable) {
          ++part.skipped[li];
        } else {
          ++part.checked[li];
          if (!outcome.holds) {
            part.violations.push_back(ViolationRecord{law->id, inst.encoding(), outcome.detail});
          }
        }
      }
    }
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    for (std::thread& t : threads) t.join();
  }

  RegressionVerdict verdict;
  for (std::size_t li = 0; li < applicable.size(); ++li) {
    verdict.per_law.push_back(LawStats{applicable[li]->id, 0, 0});
  }
  for (const Part& part : parts) {
    for (std::size_t li = 0; li < applicable.size(); ++li) {
      verdict.per_law[li].checked += part.checked[li];
      verdict.per_law[li].skipped += part.skipped[li];
      verdict.checked += part.checked[li];
      verdict.skipped += part.skipped[li];
    }
    verdict.violations.insert(verdict.violations.end(), part.violations.begin(), part.violations.end());
  }
  verdict.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return verdict;
}

SeparationHunt hunt_separations(const InstanceStream& stream, const std::string& inv_a,
                                const std::string& inv_b) {
  if (stream.kind() != StreamKind::topologies) {
    fail_usage("separation hunts run on topology streams");
  }
  SeparationHunt hunt;
  for (const Instance& inst : stream.items()) {
    long long a;
    long long b;
    try {
      a = topological_invariant(inv_a, *inst.space);
      b = topological_invariant(inv_b, *inst.space);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::precondition) {
        fail_usage("invariant not computable on instance " + inst.encoding() + ": " + e.what());
      }
      throw;
    }
    if (a != b) {
      hunt.found = true;
      hunt.index = inst.index;
      hunt.instance_encoding = inst.encoding();
      hunt.lhs = a;
      hunt.rhs = b;
      return hunt;
    }
  }
  return hunt;
}

}  // namespace qulab
