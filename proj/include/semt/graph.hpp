#pragma once

#include <charconv>
#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semt/error.hpp"

namespace semt {

// Largest vertex count accepted anywhere; keeps every label, sum and magic
// constant (at most 3p) far inside 32-bit range.
inline constexpr long long kMaxVertices = 1LL << 22;

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace detail

/// Odd cycle a_1..a_n with k_i pendant vertices hanging off a_i.
struct UnicyclicFamily {
  int n = 3;
  std::vector<int> pendant_counts = {0, 0, 0};

  /// Throws EvenCycle / BadShape when the descriptor is not a member of the family.
  void validate() const {
    if (n < 3) throw Error(ErrorKind::BadShape, "cycle length must be at least 3");
    if (n % 2 == 0) throw Error(ErrorKind::EvenCycle, "cycle length " + std::to_string(n) + " is even");
    if (static_cast<int>(pendant_counts.size()) != n)
      throw Error(ErrorKind::BadShape, "expected " + std::to_string(n) + " pendant counts, got " +
                                           std::to_string(pendant_counts.size()));
    long long total = n;
    for (int k : pendant_counts) {
      if (k < 0) throw Error(ErrorKind::BadShape, "pendant counts must be non-negative");
      total += k;
      if (total > kMaxVertices) throw Error(ErrorKind::Overflow, "family too large");
    }
  }

  int pendant_total() const { return std::accumulate(pendant_counts.begin(), pendant_counts.end(), 0); }
  int order() const { return n + pendant_total(); }

  /// Text form "n;k1,...,kn".
  std::string to_string() const {
    std::string out = std::to_string(n) + ";";
    for (std::size_t i = 0; i < pendant_counts.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(pendant_counts[i]);
    }
    return out;
  }

  static UnicyclicFamily parse(std::string_view text) {
    auto semi = text.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorKind::Parse, "family must look like \"n;k1,...,kn\"");
    UnicyclicFamily family;
    if (!detail::parse_int(text.substr(0, semi), family.n))
      throw Error(ErrorKind::Parse, "bad cycle length in \"" + std::string(text) + "\"");
    family.pendant_counts.clear();
    std::string_view rest = text.substr(semi + 1);
    while (true) {
      auto comma = rest.find(',');
      int k = 0;
      if (!detail::parse_int(rest.substr(0, comma), k))
        throw Error(ErrorKind::Parse, "bad pendant count in \"" + std::string(text) + "\"");
      family.pendant_counts.push_back(k);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    family.validate();
    return family;
  }

  friend bool operator==(const UnicyclicFamily&, const UnicyclicFamily&) = default;
};

/// Structural vertex identity: a_i when pendant == 0, otherwise a_{i,j}.
struct VertexId {
  int cycle = 1;
  int pendant = 0;

  static constexpr VertexId Cycle(int i) { return {i, 0}; }
  static constexpr VertexId Pendant(int i, int j) { return {i, j}; }

  constexpr bool is_cycle() const { return pendant == 0; }

  // Cycle vertices first, then pendants lexicographically by (i, j).
  constexpr auto operator<=>(const VertexId& other) const {
    if (auto c = (pendant != 0) <=> (other.pendant != 0); c != 0) return c;
    if (auto c = cycle <=> other.cycle; c != 0) return c;
    return pendant <=> other.pendant;
  }
  constexpr bool operator==(const VertexId&) const = default;

  /// "a3" or "a3_2".
  std::string name() const {
    std::string out = "a" + std::to_string(cycle);
    if (pendant != 0) out += "_" + std::to_string(pendant);
    return out;
  }

  static VertexId parse(std::string_view text) {
    if (text.size() < 2 || text.front() != 'a') throw Error(ErrorKind::Parse, "bad vertex name \"" + std::string(text) + "\"");
    text.remove_prefix(1);
    VertexId id;
    auto underscore = text.find('_');
    bool ok = detail::parse_int(text.substr(0, underscore), id.cycle) && id.cycle >= 1;
    if (ok && underscore != std::string_view::npos) ok = detail::parse_int(text.substr(underscore + 1), id.pendant) && id.pendant >= 1;
    if (!ok || text.find(' ') != std::string_view::npos)
      throw Error(ErrorKind::Parse, "bad vertex name \"a" + std::string(text) + "\"");
    return id;
  }
};

struct Edge {
  std::size_t u;
  std::size_t v;
};

/// Concrete G(n;k_1,...,k_n). Immutable once built; vertex indices are
/// positions in vertices(), edge indices positions in edges().
class LabeledGraph {
 public:
  explicit LabeledGraph(UnicyclicFamily family) : family_(std::move(family)) {
    family_.validate();
    const int n = family_.n;
    offsets_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + family_.pendant_counts[i];

    for (int i = 1; i <= n; ++i) vertices_.push_back(VertexId::Cycle(i));
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= family_.pendant_counts[i - 1]; ++j) vertices_.push_back(VertexId::Pendant(i, j));

    for (int i = 1; i < n; ++i) edges_.push_back({index_unchecked(VertexId::Cycle(i)), index_unchecked(VertexId::Cycle(i + 1))});
    edges_.push_back({index_unchecked(VertexId::Cycle(n)), index_unchecked(VertexId::Cycle(1))});
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= family_.pendant_counts[i - 1]; ++j)
        edges_.push_back({index_unchecked(VertexId::Cycle(i)), index_unchecked(VertexId::Pendant(i, j))});

    adjacency_.resize(vertices_.size());
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      adjacency_[edges_[e].u].push_back(edges_[e].v);
      adjacency_[edges_[e].v].push_back(edges_[e].u);
    }
  }

  const UnicyclicFamily& family() const { return family_; }
  std::span<const VertexId> vertices() const { return vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  int p() const { return static_cast<int>(vertices_.size()); }
  int q() const { return static_cast<int>(edges_.size()); }
  int n() const { return family_.n; }

  std::span<const std::size_t> neighbors(std::size_t v) const { return adjacency_[v]; }
  int degree(std::size_t v) const { return static_cast<int>(adjacency_[v].size()); }

  bool contains(VertexId id) const {
    if (id.cycle < 1 || id.cycle > family_.n) return false;
    return id.pendant == 0 || (id.pendant >= 1 && id.pendant <= family_.pendant_counts[id.cycle - 1]);
  }

  std::size_t index_of(VertexId id) const {
    if (!contains(id)) throw Error(ErrorKind::BadShape, "vertex " + id.name() + " is not in " + family_.to_string());
    return index_unchecked(id);
  }

  /// Edge index joining u and v, or npos.
  std::size_t edge_between(std::size_t u, std::size_t v) const {
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto& edge = edges_[e];
      if ((edge.u == u && edge.v == v) || (edge.u == v && edge.v == u)) return e;
    }
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t index_unchecked(VertexId id) const {
    if (id.is_cycle()) return static_cast<std::size_t>(id.cycle - 1);
    return static_cast<std::size_t>(family_.n + offsets_[id.cycle - 1] + id.pendant - 1);
  }

  UnicyclicFamily family_;
  std::vector<int> offsets_;
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

using GraphPtr = std::shared_ptr<const LabeledGraph>;

inline GraphPtr build_unicyclic(const UnicyclicFamily& family) {
  return std::make_shared<const LabeledGraph>(family);
}

inline GraphPtr build_unicyclic(int n, std::vector<int> pendant_counts) {
  return build_unicyclic(UnicyclicFamily{n, std::move(pendant_counts)});
}

inline std::vector<std::pair<VertexId, int>> degree_sequence(const LabeledGraph& graph) {
  std::vector<std::pair<VertexId, int>> out;
  out.reserve(graph.vertices().size());
  for (std::size_t v = 0; v < graph.vertices().size(); ++v) out.emplace_back(graph.vertices()[v], graph.degree(v));
  return out;
}

}  // namespace semt
