#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semt/error.hpp"
#include "semt/graph.hpp"

namespace semt {

/// Assignment of integers to the vertices of a graph, indexed like
/// graph->vertices(). Not checked on construction: the operations that need a
/// bijection onto {1..p} check it themselves.
struct VertexLabeling {
  GraphPtr graph;
  std::vector<int> labels;

  VertexLabeling() = default;
  VertexLabeling(GraphPtr g, std::vector<int> l) : graph(std::move(g)), labels(std::move(l)) {}

  int operator[](VertexId id) const { return labels.at(graph->index_of(id)); }

  friend bool operator==(const VertexLabeling& a, const VertexLabeling& b) {
    return a.graph->family() == b.graph->family() && a.labels == b.labels;
  }
};

/// Vertex and edge labels plus the claimed magic constant. Edge labels are
/// indexed like graph->edges().
struct TotalLabeling {
  GraphPtr graph;
  std::vector<int> vertex_labels;
  std::vector<int> edge_labels;
  int magic_constant = 0;

  VertexLabeling vertex_part() const { return {graph, vertex_labels}; }

  friend bool operator==(const TotalLabeling& a, const TotalLabeling& b) {
    return a.graph->family() == b.graph->family() && a.vertex_labels == b.vertex_labels &&
           a.edge_labels == b.edge_labels && a.magic_constant == b.magic_constant;
  }
};

struct EdgeSumProfile {
  std::vector<int> sums;  // f(u) + f(v) per edge, in edge order
  int min_sum = 0;
  int max_sum = 0;
  bool is_consecutive_distinct = false;
};

namespace detail {

inline bool is_bijection_onto(const std::vector<int>& values, int lo, int hi) {
  if (static_cast<long long>(values.size()) != static_cast<long long>(hi) - lo + 1) return false;
  std::vector<char> seen(values.size(), 0);
  for (int v : values) {
    if (v < lo || v > hi) return false;
    auto& slot = seen[static_cast<std::size_t>(v - lo)];
    if (slot) return false;
    slot = 1;
  }
  return true;
}

}  // namespace detail

inline EdgeSumProfile edge_sum_profile(const VertexLabeling& labeling) {
  const auto& g = *labeling.graph;
  if (!detail::is_bijection_onto(labeling.labels, 1, g.p()))
    throw Error(ErrorKind::NotBijective, "vertex labels are not a bijection onto {1.." + std::to_string(g.p()) + "}");

  EdgeSumProfile profile;
  profile.sums.reserve(g.edges().size());
  for (const auto& e : g.edges()) profile.sums.push_back(labeling.labels[e.u] + labeling.labels[e.v]);
  auto [lo, hi] = std::minmax_element(profile.sums.begin(), profile.sums.end());
  profile.min_sum = *lo;
  profile.max_sum = *hi;
  // q distinct values spanning exactly q consecutive integers.
  profile.is_consecutive_distinct = detail::is_bijection_onto(profile.sums, profile.min_sum, profile.min_sum + g.q() - 1);
  return profile;
}

inline int strength_from_min_sum(int p, int q, int s) {
  if (p <= 0 || q <= 0 || s <= 0) throw Error(ErrorKind::BadShape, "p, q and s must be positive");
  if (static_cast<long long>(p) + q + s > kMaxVertices * 4) throw Error(ErrorKind::Overflow, "strength out of range");
  return p + q + s;
}

/// Extends a vertex labeling with consecutive distinct edge sums to the
/// total labeling with edge label p + q + s - f(u) - f(v).
inline TotalLabeling extend_to_total(const VertexLabeling& labeling) {
  const auto profile = edge_sum_profile(labeling);
  if (!profile.is_consecutive_distinct) throw Error(ErrorKind::NotConsecutive, "edge sums are not q distinct consecutive integers");
  const auto& g = *labeling.graph;
  TotalLabeling total{labeling.graph, labeling.labels, {}, strength_from_min_sum(g.p(), g.q(), profile.min_sum)};
  total.edge_labels.reserve(profile.sums.size());
  for (int sum : profile.sums) total.edge_labels.push_back(total.magic_constant - sum);
  return total;
}

enum class ViolationKind {
  Shape,            // label arrays do not match the graph
  VertexBijection,  // vertex labels not a bijection onto {1..p}
  EdgeBijection,    // edge labels not a bijection onto {p+1..p+q}
  ConstantSum,      // f(u) + f(v) + f(uv) differs from the common constant
  ClaimedConstant,  // stored magic constant differs from the actual one
};

inline std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Shape: return "shape";
    case ViolationKind::VertexBijection: return "vertex_bijection";
    case ViolationKind::EdgeBijection: return "edge_bijection";
    case ViolationKind::ConstantSum: return "constant_sum";
    case ViolationKind::ClaimedConstant: return "claimed_constant";
  }
  return "unknown";
}

struct Violation {
  ViolationKind kind;
  std::string detail;
};

struct VerificationReport {
  bool valid = false;
  std::optional<int> magic_constant;
  std::vector<Violation> violations;

  bool has(ViolationKind kind) const {
    return std::any_of(violations.begin(), violations.end(), [kind](const Violation& v) { return v.kind == kind; });
  }
};

namespace detail {

inline void check_bijection(const std::vector<int>& values, int lo, int hi, ViolationKind kind, const char* what,
                            std::vector<Violation>& out) {
  std::vector<int> count(static_cast<std::size_t>(hi - lo + 1), 0);
  for (std::size_t i = 0; i < values.size(); ++i) {
    int v = values[i];
    if (v < lo || v > hi) {
      out.push_back({kind, std::string(what) + " #" + std::to_string(i) + " has label " + std::to_string(v) +
                               " outside [" + std::to_string(lo) + "," + std::to_string(hi) + "]"});
      continue;
    }
    if (++count[static_cast<std::size_t>(v - lo)] == 2)
      out.push_back({kind, std::string(what) + " label " + std::to_string(v) + " is used more than once"});
  }
  for (int v = lo; v <= hi; ++v)
    if (count[static_cast<std::size_t>(v - lo)] == 0)
      out.push_back({kind, std::string(what) + " label " + std::to_string(v) + " is unused"});
}

}  // namespace detail

/// Definition check. Accepts arbitrary data and lists every violated
/// condition instead of stopping at the first one.
inline VerificationReport verify_semt(const TotalLabeling& total) {
  VerificationReport report;
  if (!total.graph) {
    report.violations.push_back({ViolationKind::Shape, "labeling has no graph"});
    return report;
  }
  const auto& g = *total.graph;
  if (total.vertex_labels.size() != g.vertices().size())
    report.violations.push_back({ViolationKind::Shape, "expected " + std::to_string(g.p()) + " vertex labels"});
  if (total.edge_labels.size() != g.edges().size())
    report.violations.push_back({ViolationKind::Shape, "expected " + std::to_string(g.q()) + " edge labels"});
  if (!report.violations.empty()) return report;

  detail::check_bijection(total.vertex_labels, 1, g.p(), ViolationKind::VertexBijection, "vertex", report.violations);
  detail::check_bijection(total.edge_labels, g.p() + 1, g.p() + g.q(), ViolationKind::EdgeBijection, "edge",
                          report.violations);

  // The common constant is the most frequent edge total (smallest on ties),
  // so a single corrupted edge is reported as such rather than blaming the rest.
  std::vector<long long> totals;
  std::map<long long, int> frequency;
  for (std::size_t e = 0; e < g.edges().size(); ++e) {
    const auto& edge = g.edges()[e];
    long long t = static_cast<long long>(total.vertex_labels[edge.u]) + total.vertex_labels[edge.v] + total.edge_labels[e];
    totals.push_back(t);
    ++frequency[t];
  }
  long long constant = 0;
  int best = 0;
  for (auto [value, count] : frequency)
    if (count > best) best = count, constant = value;
  for (std::size_t e = 0; e < totals.size(); ++e) {
    if (totals[e] == constant) continue;
    const auto& edge = g.edges()[e];
    report.violations.push_back({ViolationKind::ConstantSum, "edge " + g.vertices()[edge.u].name() + "-" +
                                                                 g.vertices()[edge.v].name() + " sums to " +
                                                                 std::to_string(totals[e]) + ", expected " +
                                                                 std::to_string(constant)});
  }
  if (constant != total.magic_constant)
    report.violations.push_back({ViolationKind::ClaimedConstant, "claimed constant " + std::to_string(total.magic_constant) +
                                                                     ", actual " + std::to_string(constant)});

  report.valid = report.violations.empty();
  if (report.valid) report.magic_constant = total.magic_constant;
  return report;
}

/// Second, independent formulation: the vertex restriction has consecutive
/// distinct edge sums with minimum s, and every edge label equals
/// (p + q + s) - f(u) - f(v). Agrees with verify_semt(...).valid.
inline bool verify_semt_by_edge_sums(const TotalLabeling& total) {
  if (!total.graph) return false;
  const auto& g = *total.graph;
  if (total.vertex_labels.size() != g.vertices().size() || total.edge_labels.size() != g.edges().size()) return false;
  EdgeSumProfile profile;
  try {
    profile = edge_sum_profile(total.vertex_part());
  } catch (const Error&) {
    return false;
  }
  if (!profile.is_consecutive_distinct) return false;
  const long long constant = static_cast<long long>(g.p()) + g.q() + profile.min_sum;
  if (constant != total.magic_constant) return false;
  for (std::size_t e = 0; e < profile.sums.size(); ++e)
    if (total.edge_labels[e] != constant - profile.sums[e]) return false;
  return true;
}

}  // namespace semt
