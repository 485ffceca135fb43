#ifndef QULAB_INSTANCE_IO_HPP
#define QULAB_INSTANCE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qulab/harness.hpp"

namespace qulab {

/// Parsed instance document.  Keys: carrier (int); topology (opens or
/// preorder); entourages (name -> off-diagonal pair list, diagonal implied);
/// bases (name -> list of entourage names); monoid (table rows).
struct InstanceFile {
  int carrier = 0;
  std::optional<FiniteSpace> topology;
  std::vector<std::pair<std::string, Entourage>> entourages;
  std::vector<std::pair<std::string, std::vector<std::string>>> bases;
  std::optional<std::vector<std::vector<int>>> monoid_table;

  const Entourage* find_entourage(const std::string& name) const;
  /// Resolves a base name or an entourage name (as a principal filter); the
  /// file topology becomes the ambient space when present.
  PreUniformity resolve_filter(const std::string& name) const;
  /// Normalized document (sorted keys, canonical layout); hashes stably.
  std::string canonical_encoding() const;
};

InstanceFile parse_instance_file(const std::string& text);
InstanceFile parse_instance_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const InstanceFile& file);

nlohmann::json preorder_instance_json(const Entourage& preorder);

std::string fnv1a_hex(const std::string& data);

/// Common report envelope: tool name/version and the instance hash.
nlohmann::json report_shell(const std::string& encoding);

std::vector<std::pair<int, int>> json_to_pairs(const nlohmann::json& arr, const std::string& key);

}  // namespace qulab

#endif
