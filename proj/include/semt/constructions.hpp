#pragma once

#include <algorithm>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "semt/error.hpp"
#include "semt/graph.hpp"
#include "semt/labeling.hpp"

namespace semt {

// Closed-form labelings of the three unicyclic families with known strength,
// plus the equal-k family and the bare odd cycle.
//
//   GPlus(n,k,c)  : G(n; k,...,k, k+c)   1 <= c, and (n-3)c < 2n(k+1)
//   GMinus(n,k,c) : G(n; k,...,k, k-c)   1 <= c <= k
//   GSym(n,k,r)   : k_r = k_{n-r} = k+1, other k_i = k   r odd, 1 <= r < n, k >= 1
//   EqualK(n,k)   : G(n; k,...,k)
//   CycleKind(n)  : C_n
struct GPlus { int n, k, c; };
struct GMinus { int n, k, c; };
struct GSym { int n, k, r; };
struct EqualK { int n, k; };
struct CycleKind { int n; };

using FamilyKind = std::variant<GPlus, GMinus, GSym, EqualK, CycleKind>;

namespace detail {

inline void require_odd_cycle(int n) {
  if (n % 2 == 0) throw Error(ErrorKind::EvenCycle, "cycle length " + std::to_string(n) + " is even");
  if (n < 3) throw Error(ErrorKind::BadShape, "cycle length must be at least 3");
}

inline void require_k(int k) {
  if (k < 0) throw Error(ErrorKind::BadShape, "k must be non-negative");
  if (k > kMaxVertices) throw Error(ErrorKind::Overflow, "k too large");
}

inline void check(const GPlus& g) {
  require_odd_cycle(g.n);
  require_k(g.k);
  if (g.c < 1) throw Error(ErrorKind::ConstraintViolated, "c must be at least 1");
  // No upper limit at n = 3.
  if (g.n > 3 && static_cast<long long>(g.n - 3) * g.c >= 2LL * g.n * (g.k + 1))
    throw Error(ErrorKind::ConstraintViolated, "c must satisfy c < 2n(k+1)/(n-3)");
}

inline void check(const GMinus& g) {
  require_odd_cycle(g.n);
  require_k(g.k);
  if (g.c < 1 || g.c > g.k) throw Error(ErrorKind::ConstraintViolated, "c must satisfy 1 <= c <= k");
}

inline void check(const GSym& g) {
  require_odd_cycle(g.n);
  require_k(g.k);
  if (g.r < 1 || g.r >= g.n || g.r % 2 == 0)
    throw Error(ErrorKind::ConstraintViolated, "r must be odd with 1 <= r < n");
  if (g.k < 1) throw Error(ErrorKind::KTooSmall, "G(n;k,r) labeling needs k >= 1");
}

inline void check(const EqualK& g) {
  require_odd_cycle(g.n);
  require_k(g.k);
}

inline void check(const CycleKind& g) { require_odd_cycle(g.n); }

// f(a_i): (i+1)/2 for odd i, (n+i+1)/2 for even i.
inline int cycle_label(int n, int i) { return i % 2 == 1 ? (i + 1) / 2 : (n + i + 1) / 2; }

template <typename LabelFn>
VertexLabeling label_vertices(const UnicyclicFamily& family, LabelFn&& fn) {
  auto graph = build_unicyclic(family);
  std::vector<int> labels;
  labels.reserve(graph->vertices().size());
  for (const auto& v : graph->vertices()) labels.push_back(v.is_cycle() ? cycle_label(family.n, v.cycle) : fn(v.cycle, v.pendant));
  return {graph, std::move(labels)};
}

// Pendant labels n(k+2) - c - (n-1)j - i on a_1..a_{n-1}, n + j on a_n.
// With c = 0 this is also the equal-k labeling.
inline VertexLabeling minus_vertex_labels(int n, int k, int c) {
  std::vector<int> counts(n, k);
  counts[n - 1] = k - c;
  return label_vertices({n, counts}, [=](int i, int j) {
    if (i < n) return n * (k + 2) - c - (n - 1) * j - i;
    return n + j;
  });
}

}  // namespace detail

inline UnicyclicFamily family_of(const FamilyKind& kind) {
  return std::visit(
      [](const auto& g) -> UnicyclicFamily {
        detail::check(g);
        using T = std::decay_t<decltype(g)>;
        std::vector<int> counts;
        if constexpr (std::is_same_v<T, CycleKind>) {
          counts.assign(g.n, 0);
        } else {
          counts.assign(g.n, g.k);
          if constexpr (std::is_same_v<T, GPlus>) counts[g.n - 1] += g.c;
          if constexpr (std::is_same_v<T, GMinus>) counts[g.n - 1] -= g.c;
          if constexpr (std::is_same_v<T, GSym>) {
            counts[g.r - 1] += 1;
            counts[g.n - g.r - 1] += 1;
          }
        }
        return {g.n, counts};
      },
      kind);
}

/// The strength each construction attains: 2q + (n+3)/2 in every case.
inline int closed_form_strength(const FamilyKind& kind) {
  return std::visit(
      [](const auto& g) -> int {
        detail::check(g);
        using T = std::decay_t<decltype(g)>;
        const int half = (g.n + 3) / 2;
        if constexpr (std::is_same_v<T, CycleKind>) {
          return (5 * g.n + 3) / 2;
        } else {
          const int base = 2 * g.n * (g.k + 1) + half;
          if constexpr (std::is_same_v<T, GPlus>) return base + 2 * g.c;
          if constexpr (std::is_same_v<T, GMinus>) return base - 2 * g.c;
          if constexpr (std::is_same_v<T, GSym>) return base + 4;
          return base;
        }
      },
      kind);
}

inline std::string describe(const FamilyKind& kind) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        auto s = [](int v) { return std::to_string(v); };
        if constexpr (std::is_same_v<T, GPlus>) return "G+(" + s(g.n) + "," + s(g.k) + "," + s(g.c) + ")";
        if constexpr (std::is_same_v<T, GMinus>) return "G-(" + s(g.n) + "," + s(g.k) + "," + s(g.c) + ")";
        if constexpr (std::is_same_v<T, GSym>) return "Gsym(" + s(g.n) + "," + s(g.k) + "," + s(g.r) + ")";
        if constexpr (std::is_same_v<T, EqualK>) return "Gk(" + s(g.n) + "," + s(g.k) + ")";
        return "C" + s(g.n);
      },
      kind);
}

inline VertexLabeling cycle_vertex_labels(int n) {
  detail::require_odd_cycle(n);
  return detail::label_vertices({n, std::vector<int>(n, 0)}, [](int, int) { return 0; });
}

inline TotalLabeling label_g_plus(int n, int k, int c) {
  detail::check(GPlus{n, k, c});
  std::vector<int> counts(n, k);
  counts[n - 1] = k + c;
  auto labeling = detail::label_vertices({n, counts}, [=](int i, int j) {
    if (i < n) return n * (k + 1) - (n - 1) * (j - 1) - (i - 1);
    if (j <= k) return n + j;
    return n * (k + 1) + j - k;
  });
  return extend_to_total(labeling);
}

inline TotalLabeling label_g_minus(int n, int k, int c) {
  detail::check(GMinus{n, k, c});
  return extend_to_total(detail::minus_vertex_labels(n, k, c));
}

inline TotalLabeling label_equal_k(int n, int k) {
  detail::check(EqualK{n, k});
  return extend_to_total(detail::minus_vertex_labels(n, k, 0));
}

inline TotalLabeling label_g_sym(int n, int k, int r) {
  detail::check(GSym{n, k, r});
  const int fr = detail::cycle_label(n, r);  // (r+1)/2 since r is odd
  std::vector<int> counts(n, k);
  counts[r - 1] += 1;
  counts[n - r - 1] += 1;
  auto labeling = detail::label_vertices({n, counts}, [=](int i, int j) {
    const int fi = detail::cycle_label(n, i);
    if (j <= k - 1) return n * (k - j + 2) - 2 * fi + 2;
    if (j == k) {
      if (fi <= (n + 1) / 2) return 2 * n + 2 - 2 * fi;
      if (fi <= n - fr) return n * (k + 2) + 4 - 2 * fi;
      return n * (k + 2) + 2 - 2 * fi;
    }
    // j == k + 1, only at a_r and a_{n-r}
    if (i == r) return n * (k + 1) + 2;
    return n * k + r + 3;
  });
  return extend_to_total(labeling);
}

inline TotalLabeling label(const FamilyKind& kind) {
  return std::visit(
      [](const auto& g) -> TotalLabeling {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, GPlus>) return label_g_plus(g.n, g.k, g.c);
        if constexpr (std::is_same_v<T, GMinus>) return label_g_minus(g.n, g.k, g.c);
        if constexpr (std::is_same_v<T, GSym>) return label_g_sym(g.n, g.k, g.r);
        if constexpr (std::is_same_v<T, EqualK>) return label_equal_k(g.n, g.k);
        return extend_to_total(cycle_vertex_labels(g.n));
      },
      kind);
}

/// Hangs m new pendants on the vertex a with f(a) = t, where p + t is the
/// largest edge sum, labelling them p+1..p+m. The edge sums grow upward by m
/// consecutive values, so the result stays super edge-magic with constant
/// raised by 2m. The attachment vertex must lie on the cycle for the result to
/// stay in the unicyclic family.
inline TotalLabeling attach_pendants(const TotalLabeling& total, int m) {
  if (m < 0) throw Error(ErrorKind::BadShape, "m must be non-negative");
  const auto report = verify_semt(total);
  if (!report.valid) throw Error(ErrorKind::NotValid, "input is not a super edge-magic total labeling");
  if (m == 0) return total;

  const auto& g = *total.graph;
  const auto profile = edge_sum_profile(total.vertex_part());
  const int t = profile.max_sum - g.p();
  auto it = std::find(total.vertex_labels.begin(), total.vertex_labels.end(), t);
  if (it == total.vertex_labels.end()) throw Error(ErrorKind::ConstraintViolated, "no vertex labelled " + std::to_string(t));
  const VertexId anchor = g.vertices()[static_cast<std::size_t>(it - total.vertex_labels.begin())];
  if (!anchor.is_cycle())
    throw Error(ErrorKind::ConstraintViolated, "attachment vertex " + anchor.name() + " is a pendant; result would leave the family");
  if (static_cast<long long>(g.p()) + m > kMaxVertices) throw Error(ErrorKind::Overflow, "graph too large");

  UnicyclicFamily family = g.family();
  const int old_count = family.pendant_counts[anchor.cycle - 1];
  family.pendant_counts[anchor.cycle - 1] += m;
  auto grown = build_unicyclic(family);

  std::vector<int> labels(grown->vertices().size(), 0);
  for (std::size_t v = 0; v < g.vertices().size(); ++v) labels[grown->index_of(g.vertices()[v])] = total.vertex_labels[v];
  for (int j = 1; j <= m; ++j) labels[grown->index_of(VertexId::Pendant(anchor.cycle, old_count + j))] = g.p() + j;
  return extend_to_total({grown, std::move(labels)});
}

}  // namespace semt
