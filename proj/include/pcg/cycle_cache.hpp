#pragma once

#include "pcg/json_io.hpp"
#include "pcg/pcr.hpp"

#include <map>
#include <string>

namespace pcg {

/// Oracle-computed witnesses for the cycles C_n on "v0".."v{n-1}" (edges
/// v_i v_{i+1 mod n}). Every entry is re-verified when loaded.
class CycleCache {
 public:
  static constexpr int kVersion = 1;
  static constexpr std::size_t kDefaultMin = 3;
  static constexpr std::size_t kDefaultMax = 7;

  /// Reads and verifies a cache file. Throws ParseError.
  static CycleCache load(const std::string& path);
  static CycleCache from_json(const Json& j);
  /// Runs the oracle for every n in [min_n, max_n].
  static CycleCache compute(std::size_t min_n = kDefaultMin, std::size_t max_n = kDefaultMax, unsigned jobs = 1);

  /// Process-wide cache: $PCG_CYCLE_CACHE, then the in-repo file, and as a
  /// last resort a fresh oracle run. Built once, read-only afterwards.
  static const CycleCache& shared();

  [[nodiscard]] Json to_json() const;
  [[nodiscard]] bool contains(std::size_t n) const { return entries_.contains(n); }
  /// Throws PreconditionError when n is not cached.
  [[nodiscard]] const Pcr& witness(std::size_t n) const;
  [[nodiscard]] const std::map<std::size_t, Pcr>& entries() const { return entries_; }

 private:
  std::map<std::size_t, Pcr> entries_;
};

/// Path of the cache file shipped with the sources.
std::string default_cycle_cache_path();

}  // namespace pcg
