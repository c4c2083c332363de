#include "pcg/cycle_cache.hpp"

#include "pcg/error.hpp"
#include "pcg/oracle.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef PCG_DEFAULT_CYCLE_CACHE
#define PCG_DEFAULT_CYCLE_CACHE "data/cycle_cache.json"
#endif

namespace pcg {

std::string default_cycle_cache_path() { return PCG_DEFAULT_CYCLE_CACHE; }

CycleCache CycleCache::from_json(const Json& j) {
  if (!j.is_object() || !j.contains("version") || !j.contains("cycles")) {
    throw ParseError("cycle cache needs 'version' and 'cycles'");
  }
  if (j.at("version") != kVersion) throw ParseError("unsupported cycle cache version");
  CycleCache cache;
  for (const auto& [key, value] : j.at("cycles").items()) {
    std::size_t n = 0;
    try {
      n = std::stoul(key);
    } catch (const std::exception&) {
      throw ParseError("bad cycle length '" + key + "' in cache");
    }
    if (n < 3) throw ParseError("cycle length below 3 in cache");
    Pcr p = pcr_from_json(value);
    auto cycle = families::cycle(families::default_labels(n));
    bool ok = false;
    try {
      ok = verify(p, cycle);
    } catch (const LabelMismatch&) {
      ok = false;
    }
    if (!ok) throw ParseError("cached witness for C_" + key + " does not verify");
    cache.entries_.emplace(n, std::move(p));
  }
  return cache;
}

CycleCache CycleCache::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read cycle cache '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json(parse_json(buf.str()));
}

CycleCache CycleCache::compute(std::size_t min_n, std::size_t max_n, unsigned jobs) {
  CycleCache cache;
  SearchBudget budget;
  budget.max_n = max_n;
  budget.jobs = jobs;
  for (std::size_t n = std::max<std::size_t>(3, min_n); n <= max_n; ++n) {
    auto res = exact_search(families::cycle(families::default_labels(n)), budget);
    if (res.status != SearchStatus::Pcg) throw Error("oracle found no witness for C_" + std::to_string(n));
    cache.entries_.emplace(n, *res.witness);
  }
  return cache;
}

const CycleCache& CycleCache::shared() {
  static const CycleCache instance = [] {
    if (const char* env = std::getenv("PCG_CYCLE_CACHE"); env && *env) return load(env);
    try {
      return load(default_cycle_cache_path());
    } catch (const ParseError&) {
      return compute();
    }
  }();
  return instance;
}

Json CycleCache::to_json() const {
  Json cycles = Json::object();
  for (const auto& [n, p] : entries_) cycles[std::to_string(n)] = pcr_to_json(p);
  Json j;
  j["version"] = kVersion;
  j["cycles"] = cycles;
  return j;
}

const Pcr& CycleCache::witness(std::size_t n) const {
  auto it = entries_.find(n);
  if (it == entries_.end()) throw PreconditionError("no cached witness for C_" + std::to_string(n));
  return it->second;
}

}  // namespace pcg
