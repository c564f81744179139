#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "apexis/generate.hpp"

namespace apexis {

/// Runs a generation spec over its shards on a thread pool and records,
/// per edge count, how many classes were seen and how many satisfied `hit`.
struct SweepSpec {
  GenSpec gen;
  std::function<bool(const Graph&)> hit;  // unset: count only
  /// Names the sweep in checkpoint files; must change whenever gen or hit does.
  std::string tag;
};

struct SweepOptions {
  int jobs = 1;
  std::optional<std::filesystem::path> checkpoint_dir;
};

struct SweepResult {
  int order = 0;
  std::vector<std::int64_t> classes_by_edges;  // index = edge count
  std::vector<std::int64_t> hits_by_edges;
  std::vector<Graph> hits;  // canonical representatives, sorted by canonical key
  std::size_t shards = 0;
  std::size_t resumed_shards = 0;

  std::int64_t total_classes() const;
  std::int64_t total_hits() const;
};

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options);

/// Worker count from APEXIS_JOBS, else 1.
int default_jobs();

}  // namespace apexis
