// Batch front-end: instance analysis, law verification sweeps, and
// separation hunts over exhaustive finite enumerations.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qulab/instance_io.hpp"
#include "qulab/version.hpp"

namespace {

using nlohmann::json;
using namespace qulab;

enum class Format { human, machine };

Format parse_format(const std::string& name) {
  if (name == "human") return Format::human;
  if (name == "machine") return Format::machine;
  fail_usage("unknown format: " + name);
}

void emit(const json& report, Format format, const std::string& human) {
  if (format == Format::machine) {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << human;
  }
}

json pairs_json(const Entourage& e) {
  json out = json::array();
  for (auto [x, y] : e.off_diagonal_pairs()) out.push_back(json::array({x, y}));
  return out;
}

std::string render_pairs(const Entourage& e) {
  std::string out = "{diagonal";
  for (auto [x, y] : e.off_diagonal_pairs()) {
    out += ", (" + std::to_string(x) + "," + std::to_string(y) + ")";
  }
  out += "}";
  return out;
}

// "profile(L,R)" -> {"profile", {"L","R"}}
std::pair<std::string, std::vector<std::string>> parse_selector(const std::string& what) {
  auto open = what.find('(');
  if (open == std::string::npos) return {what, {}};
  if (what.back() != ')') fail_usage("malformed selector: " + what);
  std::string head = what.substr(0, open);
  std::string args = what.substr(open + 1, what.size() - open - 2);
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : args) {
    if (ch == ',') {
      parts.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(cur);
  return {head, parts};
}

json classification_json(const Classification& c) {
  json out;
  out["is_preuniformity"] = c.is_preuniformity;
  out["is_quasi"] = c.is_quasi;
  out["is_uniformity"] = c.is_uniformity;
  if (c.is_normal) out["is_normal"] = *c.is_normal;
  if (c.quasi_witness) out["quasi_witness"] = json::array({c.quasi_witness->first, c.quasi_witness->second});
  if (c.symmetry_witness) {
    out["symmetry_witness"] = json::array({c.symmetry_witness->first, c.symmetry_witness->second});
  }
  if (c.normality_witness) {
    json pts = json::array();
    for (int p : set_points(*c.normality_witness)) pts.push_back(p);
    out["normality_witness"] = pts;
  }
  return out;
}

int run_analyze(const std::string& path, const std::string& what, Format format) {
  std::ifstream in(path);
  if (!in) fail_validation("cannot open instance file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  InstanceFile file = parse_instance_file(buffer.str());

  json report = report_shell(file.canonical_encoding());
  std::string human;
  auto [selector, args] = parse_selector(what);

  if (selector == "invariants") {
    if (!file.topology) fail_usage("selector 'invariants' needs a topology in the instance file");
    InvariantReport rep = invariant_report(*file.topology);
    json values;
    for (const auto& [name, value] : rep.values) values[name] = value;
    json separation;
    for (SeparationAxiom axiom :
         {SeparationAxiom::T0, SeparationAxiom::T1, SeparationAxiom::Hausdorff,
          SeparationAxiom::functionally_Hausdorff, SeparationAxiom::regular,
          SeparationAxiom::completely_regular, SeparationAxiom::quasi_regular,
          SeparationAxiom::collectively_Hausdorff}) {
      separation[separation_axiom_name(axiom)] = separation_check(*file.topology, axiom).holds;
    }
    json witnesses;
    for (const auto& [name, pts] : rep.point_witnesses) witnesses[name] = pts;
    for (const auto& [name, family] : rep.family_witnesses) {
      json sets = json::array();
      for (PointSet member : family) {
        json pts = json::array();
        for (int p : set_points(member)) pts.push_back(p);
        sets.push_back(pts);
      }
      witnesses[name] = sets;
    }
    report["results"] =
        json{{"invariants", values}, {"separation", separation}, {"witnesses", witnesses}};
    human += "invariants (carrier " + std::to_string(file.carrier) + "):\n";
    for (const auto& [name, value] : rep.values) {
      human += "  " + name + " = " + std::to_string(value) + "\n";
    }
    human += "separation:\n";
    for (const auto& [name, value] : separation.items()) {
      human += "  " + name + " = " + std::string(value.get<bool>() ? "true" : "false") + "\n";
    }
  } else if (selector == "classify") {
    json filters;
    auto classify_named = [&](const std::string& name, const PreUniformity& p) {
      Classification c = classify(p);
      filters[name] = classification_json(c);
      human += "  " + name + ": quasi=" + (c.is_quasi ? "yes" : "no") +
               " uniform=" + (c.is_uniformity ? "yes" : "no");
      if (c.is_normal) human += std::string(" normal=") + (*c.is_normal ? "yes" : "no");
      human += "\n";
    };
    human += "classification:\n";
    if (!file.bases.empty()) {
      for (const auto& [name, members] : file.bases) {
        (void)members;
        classify_named(name, file.resolve_filter(name));
      }
    } else if (!file.entourages.empty()) {
      for (const auto& [name, e] : file.entourages) {
        (void)e;
        classify_named(name, file.resolve_filter(name));
      }
    } else {
      fail_usage("selector 'classify' needs bases or entourages in the instance file");
    }
    report["results"] = json{{"filters", filters}};
  } else if (selector == "canonical") {
    if (!file.topology) fail_usage("selector 'canonical' needs a topology in the instance file");
    json out;
    human += "canonical filters:\n";
    for (CanonicalKind kind : {CanonicalKind::pervin, CanonicalKind::universal_pre,
                               CanonicalKind::universal_quasi, CanonicalKind::universal_uniform}) {
      PreUniformity p = canonical(*file.topology, kind);
      json entry;
      entry["min_pairs"] = pairs_json(p.min());
      entry["ell"] = uniform_invariant(p, UniformInvariant::ell);
      entry["generates_input_topology"] = generated_topology(p) == *file.topology;
      out[canonical_kind_name(kind)] = entry;
      human += "  " + canonical_kind_name(kind) + ": min=" + render_pairs(p.min()) +
               " ell=" + std::to_string(entry["ell"].get<long long>()) + "\n";
    }
    report["results"] = json{{"canonical", out}};
  } else if (selector == "monoid") {
    if (!file.monoid_table) fail_usage("selector 'monoid' needs a monoid table in the instance file");
    if (!file.topology) fail_usage("selector 'monoid' needs a topology in the instance file");
    if (auto violation = validate_monoid(*file.monoid_table, *file.topology, false)) {
      fail_validation("invalid monoid (" + violation->kind + "): " + violation->detail);
    }
    TopoMonoid m = TopoMonoid::make(*file.monoid_table, *file.topology, false);
    CanonicalQuasiUniformities c = canonical_quasi_uniformities(m);
    MonoidProfileReport rep = verify_monoid_properties(m);
    json out;
    out["unit"] = m.unit();
    out["is_group"] = m.is_group();
    out["is_abelian"] = m.is_abelian();
    out["open_shifts"] = m.has_open_shifts();
    out["minima"] = json{{"left", pairs_json(c.left.min())},
                         {"right", pairs_json(c.right.min())},
                         {"two_sided", pairs_json(c.two_sided.min())},
                         {"roelcke", pairs_json(c.roelcke.min())},
                         {"quasi_roelcke", pairs_json(c.quasi_roelcke.min())}};
    out["profile"] = json{{"normally_commuting", rep.normally_commuting},
                          {"normally_pm_subcommuting", rep.normally_pm_subcommuting},
                          {"left_normal", rep.left_normal},
                          {"right_normal", rep.right_normal},
                          {"hausdorff", rep.hausdorff},
                          {"fu_separated", rep.fu_separated},
                          {"hausdorff_iff_separated", rep.hausdorff_iff_separated},
                          {"topologies_generated", rep.topologies_generated},
                          {"fu_topology_coarser", rep.fu_topology_coarser},
                          {"fu_topology_equal", rep.fu_topology_equal},
                          {"inclusion_diagram", rep.inclusion_diagram},
                          {"all_theorems_hold", rep.all_theorems_hold}};
    report["results"] = json{{"monoid", out}};
    human += "monoid: unit=" + std::to_string(m.unit()) +
             " group=" + (m.is_group() ? "yes" : "no") +
             " open_shifts=" + (m.has_open_shifts() ? "yes" : "no") + "\n";
    human += "  left min = " + render_pairs(c.left.min()) + "\n";
    human += "  quasi_roelcke min = " + render_pairs(c.quasi_roelcke.min()) + "\n";
    human += std::string("  all theorem flags hold: ") + (rep.all_theorems_hold ? "yes" : "no") + "\n";
  } else if (selector == "profile") {
    if (args.size() != 2) fail_usage("selector 'profile' expects two filter names: profile(L,R)");
    CommutingProfile profile = commuting_profile(file.resolve_filter(args[0]), file.resolve_filter(args[1]));
    json out;
    out["commuting"] = profile.commuting;
    out["pm_subcommuting"] = profile.pm_subcommuting;
    out["normally_pm_subcommuting"] = profile.normally_pm_subcommuting;
    out["normally_commuting"] = profile.normally_commuting;
    out["conditions_consistent"] = profile.prop_consistent;
    if (profile.pm_witness) {
      out["pm_witness"] = json::array({profile.pm_witness->first, profile.pm_witness->second});
    }
    if (profile.commuting_witness) {
      out["commuting_witness"] =
          json::array({profile.commuting_witness->first, profile.commuting_witness->second});
    }
    report["results"] = json{{"profile", out}};
    human += "profile(" + args[0] + "," + args[1] + "):\n";
    for (const auto& [key, value] : out.items()) {
      if (value.is_boolean()) {
        human += "  " + key + " = " + (value.get<bool>() ? "true" : "false") + "\n";
      }
    }
  } else if (selector == "roelcke") {
    if (args.size() != 2) fail_usage("selector 'roelcke' expects two filter names: roelcke(L,R)");
    PreUniformity fu = quasi_roelcke(file.resolve_filter(args[0]), file.resolve_filter(args[1]));
    Classification c = classify(fu);
    json out;
    out["min_pairs"] = pairs_json(fu.min());
    out["classification"] = classification_json(c);
    if (file.topology) {
      FiniteSpace tau_fu = generated_topology(fu);
      bool coarser = true;
      for (int p = 0; p < file.topology->size() && coarser; ++p) {
        coarser = subset(file.topology->min_nbhd(p), tau_fu.min_nbhd(p));
      }
      out["topology_coarser"] = coarser;
    }
    report["results"] = json{{"roelcke", out}};
    human += "roelcke(" + args[0] + "," + args[1] + "): min=" + render_pairs(fu.min()) +
             " uniformity=" + (c.is_uniformity ? "yes" : "no") + "\n";
  } else {
    fail_usage("unknown selector: " + what);
  }

  emit(report, format, human);
  return 0;
}

int run_verify(int points, const std::string& laws_selector, int jobs, Format format) {
  std::vector<const Law*> laws = select_laws(laws_selector);

  std::vector<StreamKind> kinds = {StreamKind::topologies, StreamKind::quasi_uniformity_pairs,
                                   StreamKind::monoids};
  json law_reports = json::array();
  json skipped_kinds = json::array();
  std::size_t total_checked = 0;
  std::size_t total_skipped = 0;
  std::size_t total_violations = 0;
  double elapsed = 0.0;
  bool any_ran = false;

  for (StreamKind kind : kinds) {
    std::vector<const Law*> kind_laws;
    for (const Law* law : laws) {
      if (law->kind == kind) kind_laws.push_back(law);
    }
    if (kind_laws.empty()) continue;
    if (points < 1 || points > InstanceStream::max_points(kind)) {
      skipped_kinds.push_back(json{{"kind", stream_kind_name(kind)},
                                   {"reason", "points out of supported range"}});
      continue;
    }
    any_ran = true;
    InstanceStream stream = InstanceStream::make(kind, points);
    RegressionVerdict verdict = regression_suite(stream, kind_laws, jobs);
    elapsed += verdict.elapsed_seconds;

    for (const LawStats& stats : verdict.per_law) {
      json violations = json::array();
      for (const ViolationRecord& v : verdict.violations) {
        if (v.law_id == stats.law_id) {
          violations.push_back(json{{"instance", v.instance}, {"detail", v.detail}});
        }
      }
      law_reports.push_back(json{{"id", stats.law_id},
                                 {"kind", stream_kind_name(kind)},
                                 {"checked", stats.checked},
                                 {"skipped", stats.skipped},
                                 {"violations", violations}});
    }
    total_checked += verdict.checked;
    total_skipped += verdict.skipped;
    total_violations += verdict.violations.size();
  }

  if (!any_ran) fail_usage("no selected law family supports " + std::to_string(points) + " points");

  std::string encoding = "verify:points=" + std::to_string(points) + ";laws=" + laws_selector;
  json report = report_shell(encoding);
  report["results"] = json{{"verify", json{{"points", points},
                                           {"laws", law_reports},
                                           {"skipped_kinds", skipped_kinds},
                                           {"totals", json{{"checked", total_checked},
                                                           {"skipped", total_skipped},
                                                           {"violations", total_violations}}}}}};

  std::string human = "verify at " + std::to_string(points) + " points: checked=" +
                      std::to_string(total_checked) + " skipped=" + std::to_string(total_skipped) +
                      " violations=" + std::to_string(total_violations) + " (" +
                      std::to_string(elapsed) + "s)\n";
  for (const auto& entry : law_reports) {
    for (const auto& v : entry["violations"]) {
      human += "  VIOLATION " + entry["id"].get<std::string>() + " on " +
               v["instance"].get<std::string>() + ": " + v["detail"].get<std::string>() + "\n";
    }
  }
  emit(report, format, human);
  return total_violations == 0 ? 0 : 1;
}

int run_search(int points, const std::string& pair, Format format) {
  auto comma = pair.find(',');
  if (comma == std::string::npos) fail_usage("--pair expects two invariant names separated by a comma");
  std::string inv_a = pair.substr(0, comma);
  std::string inv_b = pair.substr(comma + 1);
  if (points < 1 || points > InstanceStream::max_points(StreamKind::topologies)) {
    fail_usage("search supports 1..5 points");
  }

  InstanceStream stream = InstanceStream::topologies(points);
  SeparationHunt hunt = hunt_separations(stream, inv_a, inv_b);

  std::string encoding = "search:points=" + std::to_string(points) + ";pair=" + inv_a + "," + inv_b;
  json report = report_shell(encoding);
  std::string human;
  if (!hunt.found) {
    report["results"] = json{{"search", json{{"pair", json::array({inv_a, inv_b})},
                                             {"points", points},
                                             {"result", "none"}}}};
    human = "no separation between " + inv_a + " and " + inv_b + " on " + std::to_string(points) +
            " points\n";
  } else {
    const Instance& inst = stream.items()[hunt.index];
    report["results"] =
        json{{"search", json{{"pair", json::array({inv_a, inv_b})},
                             {"points", points},
                             {"result", "separation"},
                             {"lhs", hunt.lhs},
                             {"rhs", hunt.rhs},
                             {"witness", preorder_instance_json(inst.space->preorder())}}}};
    human = "separation: " + inv_a + "=" + std::to_string(hunt.lhs) + " vs " + inv_b + "=" +
            std::to_string(hunt.rhs) + " on instance " + hunt.instance_encoding + "\n";
  }
  emit(report, format, human);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-model laboratory for entourage calculus on finite carriers"};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::string format_name = "human";

  auto* analyze = app.add_subcommand("analyze", "analyze one instance file");
  std::string analyze_file;
  std::string analyze_what = "invariants";
  analyze->add_option("file", analyze_file, "instance file (JSON)")->required();
  analyze->add_option("--what", analyze_what,
                      "invariants | classify | canonical | monoid | profile(L,R) | roelcke(L,R)");
  analyze->add_option("--format", format_name, "human | machine");

  auto* verify = app.add_subcommand("verify", "run law sweeps over exhaustive enumerations");
  int verify_points = 3;
  std::string verify_laws = "all";
  int verify_jobs = 1;
  verify->add_option("--points", verify_points, "carrier size")->required();
  verify->add_option("--laws", verify_laws, "law selector: all, ids, or dotted prefixes");
  verify->add_option("--jobs", verify_jobs, "worker count");
  verify->add_option("--format", format_name, "human | machine");

  auto* search = app.add_subcommand("search", "hunt for a separation between two invariants");
  int search_points = 3;
  std::string search_pair;
  search->add_option("--points", search_points, "carrier size")->required();
  search->add_option("--pair", search_pair, "two invariant names, e.g. c,d")->required();
  search->add_option("--format", format_name, "human | machine");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  try {
    Format format = parse_format(format_name);
    if (*analyze) return run_analyze(analyze_file, analyze_what, format);
    if (*verify) return run_verify(verify_points, verify_laws, verify_jobs, format);
    if (*search) return run_search(search_points, search_pair, format);
    fail_usage("no subcommand given");
  } catch (const qulab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case qulab::ErrorKind::validation:
      case qulab::ErrorKind::precondition:
        return 2;
      case qulab::ErrorKind::usage:
        return 3;
      case qulab::ErrorKind::internal:
        return 4;
    }
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
