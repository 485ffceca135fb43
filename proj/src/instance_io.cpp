#include "qulab/instance_io.hpp"

#include "qulab/version.hpp"

namespace qulab {

using nlohmann::json;

std::vector<std::pair<int, int>> json_to_pairs(const json& arr, const std::string& key) {
  if (!arr.is_array()) fail_validation(key + ": expected a list of [x,y] pairs");
  std::vector<std::pair<int, int>> out;
  for (const auto& item : arr) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_number_integer() ||
        !item[1].is_number_integer()) {
      fail_validation(key + ": each entry must be a pair of integers");
    }
    out.emplace_back(item[0].get<int>(), item[1].get<int>());
  }
  return out;
}

namespace {

PointSet json_to_set(const json& arr, int carrier, const std::string& key) {
  if (!arr.is_array()) fail_validation(key + ": expected a list of points");
  std::vector<int> pts;
  for (const auto& item : arr) {
    if (!item.is_number_integer()) fail_validation(key + ": points must be integers");
    pts.push_back(item.get<int>());
  }
  return make_set(pts, carrier);
}

}  // namespace

InstanceFile parse_instance_file(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_validation(std::string("instance file is not valid JSON: ") + e.what());
  }
  return parse_instance_json(doc);
}

InstanceFile parse_instance_json(const json& doc) {
  if (!doc.is_object()) fail_validation("instance document must be an object");
  if (!doc.contains("carrier") || !doc["carrier"].is_number_integer()) {
    fail_validation("carrier: required integer field");
  }
  InstanceFile file;
  file.carrier = doc["carrier"].get<int>();
  check_carrier_size(file.carrier);

  if (doc.contains("topology")) {
    const json& topo = doc["topology"];
    if (!topo.is_object()) fail_validation("topology: expected an object");
    if (topo.contains("opens") == topo.contains("preorder")) {
      fail_validation("topology: exactly one of 'opens' or 'preorder' is required");
    }
    if (topo.contains("opens")) {
      if (!topo["opens"].is_array()) fail_validation("topology.opens: expected a list of sets");
      std::vector<PointSet> opens;
      for (const auto& item : topo["opens"]) {
        opens.push_back(json_to_set(item, file.carrier, "topology.opens"));
      }
      file.topology = FiniteSpace::from_opens(file.carrier, opens);
    } else {
      Entourage pre = Entourage::from_pairs(file.carrier, json_to_pairs(topo["preorder"], "topology.preorder"));
      file.topology = FiniteSpace::from_preorder(pre);
    }
  }

  if (doc.contains("entourages")) {
    if (!doc["entourages"].is_object()) fail_validation("entourages: expected name -> pair list");
    for (const auto& [name, pairs] : doc["entourages"].items()) {
      file.entourages.emplace_back(
          name, Entourage::from_pairs(file.carrier, json_to_pairs(pairs, "entourages." + name)));
    }
  }

  if (doc.contains("bases")) {
    if (!doc["bases"].is_object()) fail_validation("bases: expected name -> entourage name list");
    for (const auto& [name, members] : doc["bases"].items()) {
      if (!members.is_array()) fail_validation("bases." + name + ": expected a list of entourage names");
      std::vector<std::string> resolved;
      for (const auto& member : members) {
        if (!member.is_string()) fail_validation("bases." + name + ": names must be strings");
        std::string ent = member.get<std::string>();
        if (file.find_entourage(ent) == nullptr) {
          fail_validation("bases." + name + ": unknown entourage '" + ent + "'");
        }
        resolved.push_back(ent);
      }
      if (resolved.empty()) fail_validation("bases." + name + ": base must be non-empty");
      file.bases.emplace_back(name, std::move(resolved));
    }
  }

  if (doc.contains("monoid")) {
    const json& mon = doc["monoid"];
    if (!mon.is_object() || !mon.contains("table") || !mon["table"].is_array()) {
      fail_validation("monoid: expected an object with a 'table' list");
    }
    std::vector<std::vector<int>> table;
    for (const auto& row : mon["table"]) {
      if (!row.is_array()) fail_validation("monoid.table: rows must be lists");
      std::vector<int> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) fail_validation("monoid.table: entries must be integers");
        r.push_back(v.get<int>());
      }
      table.push_back(std::move(r));
    }
    file.monoid_table = std::move(table);
  }
  return file;
}

const Entourage* InstanceFile::find_entourage(const std::string& name) const {
  for (const auto& [n, e] : entourages) {
    if (n == name) return &e;
  }
  return nullptr;
}

PreUniformity InstanceFile::resolve_filter(const std::string& name) const {
  for (const auto& [n, members] : bases) {
    if (n != name) continue;
    std::vector<Entourage> base;
    for (const std::string& member : members) base.push_back(*find_entourage(member));
    return PreUniformity::from_base(std::move(base), topology);
  }
  if (const Entourage* e = find_entourage(name)) {
    return PreUniformity::principal(*e, topology);
  }
  fail_usage("no base or entourage named '" + name + "' in the instance file");
}

nlohmann::json instance_to_json(const InstanceFile& file) {
  json doc;
  doc["carrier"] = file.carrier;
  if (file.topology) {
    json pre = json::array();
    for (auto [x, y] : file.topology->preorder().off_diagonal_pairs()) {
      pre.push_back(json::array({x, y}));
    }
    doc["topology"] = json{{"preorder", pre}};
  }
  if (!file.entourages.empty()) {
    json ents = json::object();
    for (const auto& [name, e] : file.entourages) {
      json pairs = json::array();
      for (auto [x, y] : e.off_diagonal_pairs()) pairs.push_back(json::array({x, y}));
      ents[name] = pairs;
    }
    doc["entourages"] = ents;
  }
  if (!file.bases.empty()) {
    json bases = json::object();
    for (const auto& [name, members] : file.bases) bases[name] = members;
    doc["bases"] = bases;
  }
  if (file.monoid_table) {
    doc["monoid"] = json{{"table", *file.monoid_table}};
  }
  return doc;
}

std::string InstanceFile::canonical_encoding() const { return instance_to_json(*this).dump(); }

nlohmann::json preorder_instance_json(const Entourage& preorder) {
  json pre = json::array();
  for (auto [x, y] : preorder.off_diagonal_pairs()) pre.push_back(json::array({x, y}));
  return json{{"carrier", preorder.size()}, {"topology", json{{"preorder", pre}}}};
}

std::string fnv1a_hex(const std::string& data) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char ch : data) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  char buf[17];
  static const char* digits = "0123456789abcdef";
  for (int i = 15; i >= 0; --i) {
    buf[i] = digits[hash & 0xF];
    hash >>= 4;
  }
  buf[16] = '\0';
  return std::string(buf);
}

nlohmann::json report_shell(const std::string& encoding) {
  return json{{"tool", json{{"name", kToolName}, {"version", kToolVersion}}},
              {"instance", json{{"encoding", encoding}, {"hash", fnv1a_hex(encoding)}}}};
}

}  // namespace qulab
