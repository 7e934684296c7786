#include "affdet/config.hpp"

#include <cstdlib>
#include <fstream>
#include <string>

#include "affdet/error.hpp"
#include "json.hpp"

namespace affdet {

Config& config() {
  static Config cfg;
  return cfg;
}

void load_config_from_env(Config& cfg) {
  if (const char* path = std::getenv("AFFDET_CONFIG")) {
    std::ifstream in(path);
    if (!in) fail(Err::InvalidInput, std::string("cannot open config file ") + path);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(Err::InvalidInput, std::string("config parse: ") + e.what());
    }
    if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
    if (j.contains("oracle_cap")) cfg.oracle_cap = j["oracle_cap"].get<long>();
    if (j.contains("symbolic_cap")) cfg.symbolic_cap = j["symbolic_cap"].get<long>();
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  }
  if (const char* t = std::getenv("AFFDET_THREADS")) {
    try {
      cfg.threads = std::stoi(t);
    } catch (...) {
      fail(Err::InvalidInput, "AFFDET_THREADS must be an integer");
    }
  }
  if (cfg.oracle_cap < 1 || cfg.symbolic_cap < 1)
    fail(Err::InvalidInput, "caps must be positive");
  if (cfg.oracle_cap > cfg.oracle_cap_max) cfg.oracle_cap = cfg.oracle_cap_max;
}

}  // namespace affdet
