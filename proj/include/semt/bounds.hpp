#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "semt/graph.hpp"
#include "semt/rational.hpp"

namespace semt {

struct DegreeSumBound {
  Rational exact;
  std::int64_t ceiling = 0;
};

/// Lower bound on any magic constant from summing f(u)+f(v)+f(uv) = c over
/// all edges: q c = sum deg(v) f(v) + sum of edge labels. The vertex part is
/// minimised by giving the smallest labels to the largest degrees.
inline DegreeSumBound degsum_lower_bound(const LabeledGraph& graph) {
  std::vector<int> degrees;
  degrees.reserve(graph.vertices().size());
  for (std::size_t v = 0; v < graph.vertices().size(); ++v) degrees.push_back(graph.degree(v));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());

  std::int64_t vertex_part = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) vertex_part += static_cast<std::int64_t>(degrees[i]) * (i + 1);
  const std::int64_t p = graph.p();
  const std::int64_t q = graph.q();
  const std::int64_t edge_part = q * (2 * p + q + 1) / 2;  // (p+1) + ... + (p+q)

  Rational exact(vertex_part + edge_part, q);
  return {exact, exact.ceil()};
}

struct Theorem4Bounds {
  Rational lower_exact;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
};

/// Family-level bounds for G(n; k_1..k_n), n = 2s+1:
///   lower = ceil(2q + 2 + (m_2 + 2 m_3 + ... + (n-1) m_n + n(n-1)/2) / q)
///     with m_1 >= ... >= m_n the pendant counts sorted descending;
///   upper = 2(k_1 + k_3 + ... + k_n) + 3(k_2 + k_4 + ... + k_{n-1}) + 2n + s + 2
///     using the counts in the order given (no sorting, no rotation).
inline Theorem4Bounds theorem4_bounds(const UnicyclicFamily& family) {
  family.validate();
  const std::int64_t n = family.n;
  const std::int64_t q = family.order();
  std::vector<int> m = family.pendant_counts;
  std::sort(m.begin(), m.end(), std::greater<>());
  std::int64_t weighted = n * (n - 1) / 2;
  for (std::size_t i = 1; i < m.size(); ++i) weighted += static_cast<std::int64_t>(i) * m[i];

  Theorem4Bounds out;
  out.lower_exact = Rational(2 * q + 2) + Rational(weighted, q);
  out.lower = out.lower_exact.ceil();

  std::int64_t odd = 0;
  std::int64_t even = 0;
  for (std::int64_t i = 1; i <= n; ++i) (i % 2 == 1 ? odd : even) += family.pendant_counts[static_cast<std::size_t>(i - 1)];
  out.upper = 2 * odd + 3 * even + 2 * n + (n - 1) / 2 + 2;
  return out;
}

/// Every rotation and reflection of the count vector, in a fixed order
/// (rotations of the original first, then rotations of the reversal).
inline std::vector<std::vector<int>> dihedral_images(const std::vector<int>& counts) {
  std::vector<std::vector<int>> out;
  const std::vector<int> reversed(counts.rbegin(), counts.rend());
  for (const auto* base : {&counts, &reversed}) {
    for (std::size_t shift = 0; shift < base->size(); ++shift) {
      std::vector<int> image(base->size());
      for (std::size_t i = 0; i < base->size(); ++i) image[i] = (*base)[(i + shift) % base->size()];
      out.push_back(std::move(image));
    }
  }
  return out;
}

/// Extension, not part of the published statement: the smallest verbatim
/// upper bound over all rotations and reflections of the cycle, each of which
/// describes the same graph.
inline std::int64_t theorem4_upper_rotation_min(const UnicyclicFamily& family) {
  family.validate();
  std::int64_t best = theorem4_bounds(family).upper;
  for (auto& image : dihedral_images(family.pendant_counts))
    best = std::min(best, theorem4_bounds({family.n, std::move(image)}).upper);
  return best;
}

/// 2q + (n+3)/2.
inline std::int64_t conjecture_value(const UnicyclicFamily& family) {
  family.validate();
  return 2 * static_cast<std::int64_t>(family.order()) + (family.n + 3) / 2;
}

struct StrengthBounds {
  std::int64_t trivial_lower = 0;  // p + q + 3
  std::int64_t trivial_upper = 0;  // 3p
  Rational degsum_lower_exact;
  std::int64_t degsum_lower = 0;
  std::optional<std::int64_t> theorem4_lower;
  std::optional<std::int64_t> theorem4_upper;
  std::int64_t conjecture_value = 0;
};

inline StrengthBounds compute_bounds(const LabeledGraph& graph) {
  StrengthBounds out;
  out.trivial_lower = static_cast<std::int64_t>(graph.p()) + graph.q() + 3;
  out.trivial_upper = 3 * static_cast<std::int64_t>(graph.p());
  const auto degsum = degsum_lower_bound(graph);
  out.degsum_lower_exact = degsum.exact;
  out.degsum_lower = degsum.ceiling;
  const auto t4 = theorem4_bounds(graph.family());
  out.theorem4_lower = t4.lower;
  out.theorem4_upper = t4.upper;
  out.conjecture_value = semt::conjecture_value(graph.family());
  return out;
}

}  // namespace semt
