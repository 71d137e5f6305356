#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "semt/bounds.hpp"
#include "semt/graph.hpp"
#include "semt/io.hpp"
#include "semt/search.hpp"

namespace semt {

/// Lexicographically least rotation or reflection of the count vector.
inline std::vector<int> canonical_counts(const std::vector<int>& counts) {
  auto images = dihedral_images(counts);
  return *std::min_element(images.begin(), images.end());
}

/// One representative per rotation/reflection class, for every odd
/// n in [3, n_max] and pendant total in [0, pendant_sum_max]. Ordered by n,
/// then pendant total, then count vector.
inline std::vector<UnicyclicFamily> enumerate_canonical_families(int n_max, int pendant_sum_max) {
  std::vector<UnicyclicFamily> out;
  for (int n = 3; n <= n_max; n += 2) {
    for (int total = 0; total <= pendant_sum_max; ++total) {
      std::vector<std::vector<int>> found;
      std::vector<int> counts(static_cast<std::size_t>(n), 0);
      std::function<void(int, int)> fill = [&](int pos, int left) {
        if (pos == n - 1) {
          counts[static_cast<std::size_t>(pos)] = left;
          if (canonical_counts(counts) == counts) found.push_back(counts);
          return;
        }
        for (int k = 0; k <= left; ++k) {
          counts[static_cast<std::size_t>(pos)] = k;
          fill(pos + 1, left - k);
        }
      };
      fill(0, total);
      std::sort(found.begin(), found.end());
      for (auto& c : found) out.push_back({n, std::move(c)});
    }
  }
  return out;
}

enum class Verdict { MatchesConjecture, Counterexample, Indeterminate };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::MatchesConjecture: return "Matches-conjecture";
    case Verdict::Counterexample: return "Counterexample";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "unknown";
}

struct SweepInstance {
  UnicyclicFamily family;
  int p = 0;
  int q = 0;
  StrengthBounds bounds;
  SearchResult search;
  Verdict verdict = Verdict::Indeterminate;
  bool has_zero_count = false;  // some k_i = 0
  double wall_ms = 0.0;
};

struct SweepReport {
  int n_max = 0;
  int pendant_sum_max = 0;
  std::vector<SweepInstance> instances;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(instances.begin(), instances.end(), [v](const auto& i) { return i.verdict == v; }));
  }
};

inline SweepInstance run_sweep_instance(const UnicyclicFamily& family, SearchConfig config) {
  const auto start = std::chrono::steady_clock::now();
  SweepInstance inst;
  inst.family = family;
  auto graph = build_unicyclic(family);
  inst.p = graph->p();
  inst.q = graph->q();
  inst.bounds = compute_bounds(*graph);
  inst.has_zero_count = std::find(family.pendant_counts.begin(), family.pendant_counts.end(), 0) != family.pendant_counts.end();
  inst.search = search_exact_strength(graph, config);
  if (inst.search.status == SearchStatus::Exact)
    inst.verdict = *inst.search.sm == inst.bounds.conjecture_value ? Verdict::MatchesConjecture : Verdict::Counterexample;
  else if (inst.search.status == SearchStatus::Infeasible)
    inst.verdict = Verdict::Counterexample;  // not super edge-magic at all
  inst.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return inst;
}

/// Searches every canonical family up to the given size. Instances are
/// spread over config.parallel_width workers, each running a serial search,
/// and land in enumeration order, so everything but wall_ms is reproducible.
/// Reported verdicts are evidence for the listed instances only.
inline SweepReport conjecture_sweep(int n_max, int pendant_sum_max, const SearchConfig& config = {}) {
  if (n_max < 3 || n_max % 2 == 0) throw Error(ErrorKind::BadShape, "n_max must be odd and at least 3");
  if (pendant_sum_max < 0) throw Error(ErrorKind::BadShape, "pendant_sum_max must be non-negative");
  SweepReport report;
  report.n_max = n_max;
  report.pendant_sum_max = pendant_sum_max;
  const auto families = enumerate_canonical_families(n_max, pendant_sum_max);
  report.instances.resize(families.size());

  SearchConfig per_instance = config;
  per_instance.parallel_width = 1;
  const unsigned workers = std::max(1u, config.parallel_width);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < families.size(); i = next++) report.instances[i] = run_sweep_instance(families[i], per_instance);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return report;
}

inline Json sweep_instance_to_json(const SweepInstance& inst, bool include_timing = true) {
  Json doc;
  doc["family"] = inst.family.to_string();
  doc["n"] = inst.family.n;
  doc["p"] = inst.p;
  doc["q"] = inst.q;
  doc["has_zero_count"] = inst.has_zero_count;
  Json bounds = bounds_to_json(inst.family, inst.bounds);
  bounds.erase("family");
  bounds.erase("p");
  bounds.erase("q");
  doc["bounds"] = std::move(bounds);
  doc["status"] = std::string(to_string(inst.search.status));
  doc["sm"] = inst.search.sm ? Json(*inst.search.sm) : Json(nullptr);
  doc["conjecture_value"] = inst.bounds.conjecture_value;
  doc["verdict"] = std::string(to_string(inst.verdict));
  doc["nodes"] = inst.search.nodes_explored;
  if (include_timing) doc["wall_ms"] = inst.wall_ms;
  doc["per_s"] = probes_to_json(inst.search.per_s_feasibility);
  doc["witness"] = inst.search.witness ? labeling_to_json(*inst.search.witness) : Json(nullptr);
  return doc;
}

/// One JSON object per line.
inline std::string sweep_to_jsonl(const SweepReport& report, bool include_timing = true) {
  std::string out;
  for (const auto& inst : report.instances) out += sweep_instance_to_json(inst, include_timing).dump() + "\n";
  return out;
}

inline std::string sweep_to_csv(const SweepReport& report, bool include_timing = true) {
  std::ostringstream out;
  out << "family,n,p,q,degsum_lower,theorem4_lower,theorem4_upper,conjecture_value,status,sm,verdict,nodes";
  if (include_timing) out << ",wall_ms";
  out << "\n";
  for (const auto& inst : report.instances) {
    out << '"' << inst.family.to_string() << "\"," << inst.family.n << ',' << inst.p << ',' << inst.q << ','
        << inst.bounds.degsum_lower << ',' << inst.bounds.theorem4_lower.value_or(0) << ','
        << inst.bounds.theorem4_upper.value_or(0) << ',' << inst.bounds.conjecture_value << ','
        << to_string(inst.search.status) << ',';
    if (inst.search.sm) out << *inst.search.sm;
    out << ',' << to_string(inst.verdict) << ',' << inst.search.nodes_explored;
    if (include_timing) out << ',' << inst.wall_ms;
    out << "\n";
  }
  return out.str();
}

}  // namespace semt
