#include "apexis/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "apexis/canon.hpp"
#include "apexis/graph6.hpp"

namespace apexis {

namespace {

using nlohmann::json;

struct ShardData {
  std::vector<std::int64_t> classes;
  std::vector<std::int64_t> hits;
  std::vector<std::string> hit_graphs;
};

std::string file_stem(const std::string& tag) {
  std::string out;
  for (char c : tag) out += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
  return out;
}

std::filesystem::path shard_path(const std::filesystem::path& dir, const std::string& tag, std::size_t shard) {
  return dir / (file_stem(tag) + ".shard" + std::to_string(shard) + ".json");
}

std::optional<ShardData> load_shard(const std::filesystem::path& path, const std::string& tag, std::size_t shards,
                                    std::size_t width) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  try {
    const json j = json::parse(in);
    if (j.at("tag") != tag || j.at("shards") != shards) return std::nullopt;
    ShardData d{j.at("classes_by_edges").get<std::vector<std::int64_t>>(),
                j.at("hits_by_edges").get<std::vector<std::int64_t>>(),
                j.at("hits").get<std::vector<std::string>>()};
    if (d.classes.size() != width || d.hits.size() != width) return std::nullopt;
    return d;
  } catch (const std::exception&) {
    // A torn or foreign file is recomputed.
    return std::nullopt;
  }
}

void store_shard(const std::filesystem::path& path, const std::string& tag, std::size_t shards,
                 std::size_t shard, const ShardData& d) {
  const json j{{"tag", tag},
               {"shards", shards},
               {"shard", shard},
               {"classes_by_edges", d.classes},
               {"hits_by_edges", d.hits},
               {"hits", d.hit_graphs}};
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << j.dump() << '\n';
    if (!out) throw Error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::int64_t SweepResult::total_classes() const {
  std::int64_t t = 0;
  for (auto c : classes_by_edges) t += c;
  return t;
}

std::int64_t SweepResult::total_hits() const {
  std::int64_t t = 0;
  for (auto c : hits_by_edges) t += c;
  return t;
}

int default_jobs() {
  if (const char* env = std::getenv("APEXIS_JOBS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 1;
}

SweepResult run_sweep(const SweepSpec& spec, const SweepOptions& options) {
  const Generator gen(spec.gen);
  const std::size_t width = static_cast<std::size_t>(std::max(0, spec.gen.effective_max_edges())) + 1;
  const std::size_t shards = gen.shard_count();
  std::vector<ShardData> data(shards);
  std::vector<char> done(shards, 0);

  SweepResult result;
  result.order = spec.gen.order;
  result.shards = shards;
  if (options.checkpoint_dir) {
    std::filesystem::create_directories(*options.checkpoint_dir);
    for (std::size_t i = 0; i < shards; ++i) {
      if (auto d = load_shard(shard_path(*options.checkpoint_dir, spec.tag, i), spec.tag, shards, width)) {
        data[i] = std::move(*d);
        done[i] = 1;
        ++result.resumed_shards;
      }
    }
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards) return;
      if (done[i]) continue;
      try {
        ShardData d{std::vector<std::int64_t>(width), std::vector<std::int64_t>(width), {}};
        gen.run_shard(i, [&](const Graph& g) {
          const int m = g.edge_count();
          ++d.classes[m];
          if (spec.hit && spec.hit(g)) {
            ++d.hits[m];
            d.hit_graphs.push_back(to_graph6(g));
          }
        });
        if (options.checkpoint_dir) store_shard(shard_path(*options.checkpoint_dir, spec.tag, i), spec.tag, shards, i, d);
        data[i] = std::move(d);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = shards;
        return;
      }
    }
  };
  const int jobs = std::max(1, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  result.classes_by_edges.assign(width, 0);
  result.hits_by_edges.assign(width, 0);
  std::vector<std::pair<CanonicalKey, Graph>> hits;
  for (const ShardData& d : data) {
    for (std::size_t m = 0; m < width; ++m) {
      result.classes_by_edges[m] += d.classes[m];
      result.hits_by_edges[m] += d.hits[m];
    }
    for (const std::string& text : d.hit_graphs) {
      Graph g = from_graph6(text);
      hits.emplace_back(canonical_key(g), std::move(g));
    }
  }
  std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [key, g] : hits) result.hits.push_back(std::move(g));
  return result;
}

}  // namespace apexis
