// Search bounds and brute-force caps, with optional overrides from a JSON
// file named by the OCCULT_CONFIG environment variable.

#ifndef OCCULT_CONFIG_HPP_
#define OCCULT_CONFIG_HPP_

#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

#include "isometry.hpp"

namespace occult {

struct Settings {
  long search_box = 6;
  long stabilization_window = 2;
  long disc_form_bound = kDefaultDiscFormBound;
  std::size_t isometry_rank_cap = 8;
  unsigned modp_max_prime = 5;
  std::size_t modp_max_dim = 4;
  long search_node_limit = 50'000'000;
  unsigned order_cutoff = kDefaultOrderCutoff;

  SearchBox box() const { return SearchBox(search_box); }
  FiniteGroupCaps group_caps() const { return {modp_max_prime, modp_max_dim}; }
  ProfileSearchLimits profile_limits() const { return {isometry_rank_cap, order_cutoff}; }
  DefiniteIsometryLimits isometry_limits() const { return {isometry_rank_cap}; }
  EmbeddingSearchLimits embedding_limits() const { return {search_node_limit}; }
};

inline constexpr const char* kConfigEnv = "OCCULT_CONFIG";

inline Settings settings_from_json(const nlohmann::json& j) {
  if (!j.is_object()) fail("config: top level must be an object");
  Settings s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string& key = it.key();
    if (!it->is_number_integer() || it->get<long long>() < 0) fail("config: '" + key + "' must be a non-negative integer");
    long long v = it->get<long long>();
    if (key == "search_box") s.search_box = long(v);
    else if (key == "stabilization_window") s.stabilization_window = long(v);
    else if (key == "disc_form_bound") s.disc_form_bound = long(v);
    else if (key == "isometry_rank_cap") s.isometry_rank_cap = std::size_t(v);
    else if (key == "modp_max_prime") s.modp_max_prime = unsigned(v);
    else if (key == "modp_max_dim") s.modp_max_dim = std::size_t(v);
    else if (key == "search_node_limit") s.search_node_limit = long(v);
    else if (key == "order_cutoff") s.order_cutoff = unsigned(v);
    else fail("config: unknown key '" + key + "'");
  }
  if (s.search_box < 1) fail("config: search_box must be at least 1");
  return s;
}

inline Settings load_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("config: cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail("config: " + path + ": " + e.what());
  }
  return settings_from_json(j);
}

// Compiled-in defaults unless OCCULT_CONFIG points at a file.
inline Settings load_settings() {
  const char* path = std::getenv(kConfigEnv);
  if (!path || !*path) return Settings{};
  return load_settings_file(path);
}

}  // namespace occult

#endif  // OCCULT_CONFIG_HPP_
