#pragma once

#include <algorithm>
#include <cstdint>
#include <future>
#include <limits>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "semt/bounds.hpp"
#include "semt/error.hpp"
#include "semt/graph.hpp"
#include "semt/labeling.hpp"

namespace semt {

inline constexpr std::uint64_t kDefaultNodeBudget = 50'000'000;

struct SearchConfig {
  /// Maximum search nodes per instance, shared across all probed s; nullopt is unlimited.
  std::optional<std::uint64_t> node_budget = kDefaultNodeBudget;
  /// Probe exactly [s_lo, s_hi] instead of the bound-derived range.
  std::optional<std::pair<int, int>> s_range_override;
  /// Number of candidate s values probed concurrently.
  unsigned parallel_width = 1;
};

enum class ProbeStatus { Feasible, Infeasible, BudgetExhausted, Skipped };

inline std::string_view to_string(ProbeStatus status) {
  switch (status) {
    case ProbeStatus::Feasible: return "feasible";
    case ProbeStatus::Infeasible: return "infeasible";
    case ProbeStatus::BudgetExhausted: return "exhausted";
    case ProbeStatus::Skipped: return "skipped";
  }
  return "unknown";
}

struct FeasibilityResult {
  ProbeStatus status = ProbeStatus::Infeasible;
  std::optional<VertexLabeling> witness;
  std::uint64_t nodes = 0;
};

namespace detail {

// Looks for a vertex bijection onto {1..p} whose edge sums are exactly
// {s, ..., s+q-1}.
//
// Cycle vertices are labelled first, in degree-descending frontier order
// (highest degree first, then always the highest-degree vertex adjacent to
// what is already placed). Each new cycle edge sum must land inside the
// target window on an unclaimed value, and every placed cycle vertex must
// still see enough free labels to give its pendants in-window sums.
//
// Pendants at one cycle vertex are interchangeable, so they are not
// branched on individually. Instead the smallest unclaimed target sum is
// filled next by some cycle vertex with a free pendant slot; labels at a
// given vertex therefore come out ascending in j. The smallest free label
// must also still reach an unclaimed sum through some vertex with a free slot.
class MinSumSearch {
 public:
  MinSumSearch(const LabeledGraph& graph, int s, std::optional<std::uint64_t> budget)
      : g_(graph),
        p_(graph.p()),
        s_(s),
        hi_(s + graph.q() - 1),
        budget_(budget.value_or(std::numeric_limits<std::uint64_t>::max())),
        label_(graph.vertices().size(), 0),
        label_used_(static_cast<std::size_t>(p_) + 2, 0),
        sum_used_(static_cast<std::size_t>(graph.q()), 0),
        slots_(graph.family().pendant_counts) {
    build_cycle_order();
  }

  FeasibilityResult run() {
    FeasibilityResult result;
    found_ = cycle_step(0);
    result.nodes = nodes_;
    if (found_) {
      result.status = ProbeStatus::Feasible;
      result.witness = VertexLabeling{nullptr, witness_labels()};
    } else {
      result.status = exhausted_ ? ProbeStatus::BudgetExhausted : ProbeStatus::Infeasible;
    }
    return result;
  }

 private:
  bool tick() {
    if (nodes_ == budget_) {
      exhausted_ = true;
      return false;
    }
    ++nodes_;
    return true;
  }

  bool sum_free(int sigma) const { return sigma >= s_ && sigma <= hi_ && !sum_used_[static_cast<std::size_t>(sigma - s_)]; }
  void claim(int sigma, char v) { sum_used_[static_cast<std::size_t>(sigma - s_)] = v; }

  void build_cycle_order() {
    const int n = g_.n();
    std::vector<char> placed(static_cast<std::size_t>(n), 0);
    auto better = [&](int a, int b) {  // higher degree, then lower index
      const int da = g_.degree(static_cast<std::size_t>(a)), db = g_.degree(static_cast<std::size_t>(b));
      return da != db ? da > db : a < b;
    };
    int first = 0;
    for (int v = 1; v < n; ++v)
      if (better(v, first)) first = v;
    order_.push_back(first);
    placed[static_cast<std::size_t>(first)] = 1;
    while (static_cast<int>(order_.size()) < n) {
      int next = -1;
      for (int v = 0; v < n; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        const int left = (v + n - 1) % n, right = (v + 1) % n;
        if (!placed[static_cast<std::size_t>(left)] && !placed[static_cast<std::size_t>(right)]) continue;
        if (next < 0 || better(v, next)) next = v;
      }
      order_.push_back(next);
      placed[static_cast<std::size_t>(next)] = 1;
    }
    back_.resize(static_cast<std::size_t>(n));
    for (int d = 0; d < n; ++d) {
      const int v = order_[static_cast<std::size_t>(d)];
      for (int e = 0; e < d; ++e) {
        const int u = order_[static_cast<std::size_t>(e)];
        if (u == (v + 1) % n || v == (u + 1) % n) back_[static_cast<std::size_t>(d)].push_back(u);
      }
    }
  }

  // Free labels x with f(v) + x inside the window must cover v's pendant slots.
  bool pendants_reachable(int depth) const {
    for (int d = 0; d <= depth; ++d) {
      const int v = order_[static_cast<std::size_t>(d)];
      const int need = slots_[static_cast<std::size_t>(v)];
      if (need == 0) continue;
      const int fv = label_[static_cast<std::size_t>(v)];
      const int lo = std::max(1, s_ - fv), hi = std::min(p_, hi_ - fv);
      int have = 0;
      for (int x = lo; x <= hi && have < need; ++x)
        if (!label_used_[static_cast<std::size_t>(x)]) ++have;
      if (have < need) return false;
    }
    return true;
  }

  bool cycle_step(int depth) {
    const int n = g_.n();
    if (depth == n) return enter_pendant_phase();
    const int v = order_[static_cast<std::size_t>(depth)];
    const auto& back = back_[static_cast<std::size_t>(depth)];
    for (int x = 1; x <= p_; ++x) {
      if (label_used_[static_cast<std::size_t>(x)]) continue;
      if (!tick()) return false;
      bool ok = true;
      for (int u : back) ok = ok && sum_free(x + label_[static_cast<std::size_t>(u)]);
      if (!ok) continue;
      label_[static_cast<std::size_t>(v)] = x;
      label_used_[static_cast<std::size_t>(x)] = 1;
      for (int u : back) claim(x + label_[static_cast<std::size_t>(u)], 1);
      if (pendants_reachable(depth) && cycle_step(depth + 1)) return true;
      for (int u : back) claim(x + label_[static_cast<std::size_t>(u)], 0);
      label_used_[static_cast<std::size_t>(x)] = 0;
      label_[static_cast<std::size_t>(v)] = 0;
      if (exhausted_) return false;
    }
    return false;
  }

  bool enter_pendant_phase() {
    anchors_.clear();
    for (int v = 0; v < g_.n(); ++v)
      if (slots_[static_cast<std::size_t>(v)] > 0) anchors_.push_back(v);
    // Larger anchor label first gives ascending pendant labels per sum.
    std::sort(anchors_.begin(), anchors_.end(), [&](int a, int b) {
      return label_[static_cast<std::size_t>(a)] > label_[static_cast<std::size_t>(b)];
    });
    pendant_labels_.assign(static_cast<std::size_t>(g_.n()), {});
    return pendant_step(s_, g_.n());
  }

  bool pendant_step(int sigma, int assigned) {
    if (assigned == p_) return true;
    while (!sum_free(sigma)) ++sigma;

    int smallest_free = 1;
    while (label_used_[static_cast<std::size_t>(smallest_free)]) ++smallest_free;
    bool reachable = false;
    for (int a : anchors_)
      if (slots_[static_cast<std::size_t>(a)] > 0 && sum_free(smallest_free + label_[static_cast<std::size_t>(a)])) {
        reachable = true;
        break;
      }
    if (!reachable) return false;

    for (int a : anchors_) {
      auto& slot = slots_[static_cast<std::size_t>(a)];
      if (slot == 0) continue;
      const int x = sigma - label_[static_cast<std::size_t>(a)];
      if (x < 1 || x > p_ || label_used_[static_cast<std::size_t>(x)]) continue;
      if (!tick()) return false;
      --slot;
      label_used_[static_cast<std::size_t>(x)] = 1;
      claim(sigma, 1);
      pendant_labels_[static_cast<std::size_t>(a)].push_back(x);
      if (pendant_step(sigma + 1, assigned + 1)) return true;
      pendant_labels_[static_cast<std::size_t>(a)].pop_back();
      claim(sigma, 0);
      label_used_[static_cast<std::size_t>(x)] = 0;
      ++slot;
      if (exhausted_) return false;
    }
    return false;
  }

  std::vector<int> witness_labels() const {
    std::vector<int> labels = label_;
    for (int v = 0; v < g_.n(); ++v) {
      const auto& pend = pendant_labels_.empty() ? std::vector<int>{} : pendant_labels_[static_cast<std::size_t>(v)];
      for (std::size_t j = 0; j < pend.size(); ++j)
        labels[g_.index_of(VertexId::Pendant(v + 1, static_cast<int>(j) + 1))] = pend[j];
    }
    return labels;
  }

  const LabeledGraph& g_;
  const int p_;
  const int s_;
  const int hi_;
  const std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool found_ = false;

  std::vector<int> label_;
  std::vector<char> label_used_;
  std::vector<char> sum_used_;
  std::vector<int> slots_;
  std::vector<int> order_;
  std::vector<std::vector<int>> back_;
  std::vector<int> anchors_;
  std::vector<std::vector<int>> pendant_labels_;
};

}  // namespace detail

/// Decides whether some vertex bijection has edge sums exactly {s..s+q-1}.
/// A BudgetExhausted result means undecided at this s.
inline FeasibilityResult feasible_for_min_sum(const GraphPtr& graph, int s,
                                              std::optional<std::uint64_t> budget = kDefaultNodeBudget) {
  if (!graph) throw Error(ErrorKind::BadShape, "null graph");
  if (s < 3) throw Error(ErrorKind::BadShape, "minimum edge sum is at least 3");
  FeasibilityResult result;
  if (s > graph->p()) {
    // The largest sum s+q-1 would exceed 2p-1.
    result.status = ProbeStatus::Infeasible;
    return result;
  }
  result = detail::MinSumSearch(*graph, s, budget).run();
  if (result.witness) result.witness->graph = graph;
  return result;
}

enum class SearchStatus { Exact, BudgetExhausted, Infeasible };

inline std::string_view to_string(SearchStatus status) {
  switch (status) {
    case SearchStatus::Exact: return "Exact";
    case SearchStatus::BudgetExhausted: return "Budget-exhausted";
    case SearchStatus::Infeasible: return "Infeasible";
  }
  return "unknown";
}

struct SProbe {
  int s = 0;
  ProbeStatus status = ProbeStatus::Skipped;
  std::uint64_t nodes = 0;

  friend bool operator==(const SProbe&, const SProbe&) = default;
};

struct SearchResult {
  SearchStatus status = SearchStatus::Infeasible;
  std::optional<int> sm;
  std::optional<TotalLabeling> witness;
  std::uint64_t nodes_explored = 0;
  int s_lo = 0;
  int s_hi = 0;
  std::vector<SProbe> per_s_feasibility;
};

/// Admissible minimum-sum window: from the degree-sum bound up to p (so that
/// p + q + s <= 3p), never below 3.
inline std::pair<int, int> min_sum_range(const LabeledGraph& graph) {
  const auto lower = degsum_lower_bound(graph).ceiling - graph.p() - graph.q();
  return {static_cast<int>(std::max<std::int64_t>(3, lower)), graph.p()};
}

/// sm(G) = p + q + (least feasible s). Probes are independent, so up to
/// parallel_width of them run at once; the merge replays them in ascending s
/// against the shared budget, making the result identical to a serial run.
inline SearchResult search_exact_strength(const GraphPtr& graph, const SearchConfig& config = {}) {
  if (!graph) throw Error(ErrorKind::BadShape, "null graph");
  auto [s_lo, s_hi] = config.s_range_override.value_or(min_sum_range(*graph));
  if (s_lo > s_hi) throw Error(ErrorKind::BadShape, "s range is empty");
  if (s_lo < 3) throw Error(ErrorKind::BadShape, "s range must start at 3 or above");

  SearchResult result;
  result.s_lo = s_lo;
  result.s_hi = s_hi;
  const std::uint64_t budget = config.node_budget.value_or(std::numeric_limits<std::uint64_t>::max());
  const int width = static_cast<int>(std::max(1u, config.parallel_width));
  std::uint64_t used = 0;
  bool done = false;

  for (int batch = s_lo; batch <= s_hi; batch += width) {
    const int last = std::min(s_hi, batch + width - 1);
    if (done) {
      for (int s = batch; s <= last; ++s) result.per_s_feasibility.push_back({s, ProbeStatus::Skipped, 0});
      continue;
    }
    const std::uint64_t remaining = budget - used;
    std::vector<FeasibilityResult> probes;
    if (width == 1) {
      probes.push_back(feasible_for_min_sum(graph, batch, remaining));
    } else {
      std::vector<std::future<FeasibilityResult>> futures;
      for (int s = batch; s <= last; ++s)
        futures.push_back(std::async(std::launch::async, [&graph, s, remaining] { return feasible_for_min_sum(graph, s, remaining); }));
      for (auto& f : futures) probes.push_back(f.get());
    }

    for (int s = batch; s <= last; ++s) {
      auto& probe = probes[static_cast<std::size_t>(s - batch)];
      if (done) {
        result.per_s_feasibility.push_back({s, ProbeStatus::Skipped, 0});
        continue;
      }
      const std::uint64_t left = budget - used;
      if (probe.status == ProbeStatus::BudgetExhausted || probe.nodes > left) {
        used = budget;
        result.per_s_feasibility.push_back({s, ProbeStatus::BudgetExhausted, left});
        result.status = SearchStatus::BudgetExhausted;
        done = true;
        continue;
      }
      used += probe.nodes;
      result.per_s_feasibility.push_back({s, probe.status, probe.nodes});
      if (probe.status == ProbeStatus::Feasible) {
        result.status = SearchStatus::Exact;
        result.witness = extend_to_total(*probe.witness);
        result.sm = result.witness->magic_constant;
        done = true;
      }
    }
  }
  result.nodes_explored = used;
  if (!done) result.status = SearchStatus::Infeasible;
  return result;
}

inline SearchResult search_exact_strength(const UnicyclicFamily& family, const SearchConfig& config = {}) {
  return search_exact_strength(build_unicyclic(family), config);
}

}  // namespace semt
