// Layered-DAG network model: validated specs, node-level paths, layer-level
// (substructure) paths with their adjacency/incidence encodings, induced
// no-skip subgraphs, and the canonical edge ordering used for incidence
// vectors and file output.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace bpk {

inline constexpr std::size_t kDefaultPathCap = 10000;

enum class Errc {
  BadWidth,
  BadPair,
  MissingConsecutivePair,
  PathCountGuardExceeded,
  RankShortfall,
  SkipsNotAllowed,
  BadPath,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string message) : std::runtime_error(std::move(message)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::BadWidth: return "BadWidth";
    case Errc::BadPair: return "BadPair";
    case Errc::MissingConsecutivePair: return "MissingConsecutivePair";
    case Errc::PathCountGuardExceeded: return "PathCountGuardExceeded";
    case Errc::RankShortfall: return "RankShortfall";
    case Errc::SkipsNotAllowed: return "SkipsNotAllowed";
    case Errc::BadPath: return "BadPath";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

struct NodeId {
  int layer = 0;
  int index = 0;
  friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

// Ordered by (tail.layer, head.layer, tail.index, head.index); this is the
// canonical edge order, so sorting edges sorts incidence positions.
struct Edge {
  NodeId tail;
  NodeId head;
  friend std::strong_ordering operator<=>(const Edge& a, const Edge& b) {
    return std::tie(a.tail.layer, a.head.layer, a.tail.index, a.head.index) <=>
           std::tie(b.tail.layer, b.head.layer, b.tail.index, b.head.index);
  }
  friend bool operator==(const Edge& a, const Edge& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
};

using Path = std::vector<NodeId>;        // node path from layer 0 to layer L
using LayerPath = std::vector<int>;      // substructure path as visited layers
using BetaVector = std::vector<int>;     // 0/1 per layer
using AlphaVector = std::vector<int>;    // 0/1, (L+1)^2 row-major layer adjacency
using EdgeIncidence = std::vector<int>;  // 0/1 over the canonical edge order

// Layered DAG: widths per layer plus fully bipartite connected layer pairs.
// Weights are carried through file I/O untouched; no algorithm reads them.
struct NetworkSpec {
  std::vector<int> widths;
  std::vector<std::pair<int, int>> connections;  // sorted, unique, j < l
  std::map<std::string, std::string> weights;

  int depth() const { return static_cast<int>(widths.size()) - 1; }
  int layer_count() const { return static_cast<int>(widths.size()); }

  bool has_pair(int j, int l) const {
    return std::binary_search(connections.begin(), connections.end(), std::make_pair(j, l));
  }

  bool is_no_skip() const {
    return static_cast<int>(connections.size()) == depth();
  }
};

inline NetworkSpec validate_network(std::vector<int> widths,
                                    std::vector<std::pair<int, int>> connections,
                                    std::map<std::string, std::string> weights = {}) {
  if (widths.size() < 2)
    throw Error(Errc::BadWidth, "network needs at least 2 layers, got " +
                                    std::to_string(widths.size()));
  const int L = static_cast<int>(widths.size()) - 1;
  for (int l = 0; l <= L; ++l)
    if (widths[l] < 1)
      throw Error(Errc::BadWidth, "BadWidth: widths[" + std::to_string(l) + "] = " +
                                      std::to_string(widths[l]));
  std::sort(connections.begin(), connections.end());
  for (std::size_t i = 0; i < connections.size(); ++i) {
    const auto [j, l] = connections[i];
    if (j < 0 || l > L || j >= l)
      throw Error(Errc::BadPair, "BadPair: (" + std::to_string(j) + "," + std::to_string(l) + ")");
    if (i > 0 && connections[i - 1] == connections[i])
      throw Error(Errc::BadPair, "BadPair: duplicate (" + std::to_string(j) + "," +
                                     std::to_string(l) + ")");
  }
  NetworkSpec spec{std::move(widths), std::move(connections), std::move(weights)};
  for (int l = 0; l < L; ++l)
    if (!spec.has_pair(l, l + 1))
      throw Error(Errc::MissingConsecutivePair,
                  "MissingConsecutivePair(" + std::to_string(l) + "): every (l, l+1) pair must be connected");
  return spec;
}

// All edges of the spec in canonical order.
inline std::vector<Edge> canonical_edges(const NetworkSpec& spec) {
  std::vector<Edge> edges;
  for (const auto& [j, l] : spec.connections)
    for (int a = 0; a < spec.widths[j]; ++a)
      for (int b = 0; b < spec.widths[l]; ++b)
        edges.push_back(Edge{NodeId{j, a}, NodeId{l, b}});
  return edges;
}

// Canonical edge ordering resolved to positions; m() is the edge count.
class EdgeIndex {
 public:
  explicit EdgeIndex(const NetworkSpec& spec) : edges_(canonical_edges(spec)) {}

  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::size_t position(const Edge& e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e))
      throw Error(Errc::BadPath, "edge not present in network");
    return static_cast<std::size_t>(it - edges_.begin());
  }

 private:
  std::vector<Edge> edges_;
};

inline std::vector<Edge> path_edges(const Path& path) {
  std::vector<Edge> out;
  out.reserve(path.size() - 1);
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back(Edge{path[i], path[i + 1]});
  return out;
}

// Checks a node path against the spec: layer 0 start, layer L end, strictly
// increasing layers over connected pairs, indices within widths.
inline void check_path(const Path& path, const NetworkSpec& spec) {
  if (path.empty() || path.front().layer != 0 || path.back().layer != spec.depth())
    throw Error(Errc::BadPath, "path must run from layer 0 to the output layer");
  for (const NodeId& n : path) {
    if (n.layer < 0 || n.layer > spec.depth() || n.index < 0 || n.index >= spec.widths[n.layer])
      throw Error(Errc::BadPath, "node (" + std::to_string(n.layer) + "," +
                                     std::to_string(n.index) + ") out of range");
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i].layer >= path[i + 1].layer)
      throw Error(Errc::BadPath, "path layers must strictly increase");
    if (!spec.has_pair(path[i].layer, path[i + 1].layer))
      throw Error(Errc::BadPath, "layers (" + std::to_string(path[i].layer) + "," +
                                     std::to_string(path[i + 1].layer) + ") are not connected");
  }
}

inline EdgeIncidence edge_incidence(const Path& path, const EdgeIndex& index) {
  EdgeIncidence v(index.m(), 0);
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    v[index.position(Edge{path[i], path[i + 1]})] = 1;
  return v;
}

// All strictly increasing layer sequences 0 = l_0 < ... < l_k = L whose
// consecutive pairs are connected, in lexicographic order. The one-node-per-
// layer skeleton always uses index 0, so only the layer sets matter.
inline std::vector<LayerPath> enumerate_substructure_paths(const NetworkSpec& spec,
                                                           std::size_t cap = kDefaultPathCap) {
  std::vector<LayerPath> out;
  const int L = spec.depth();
  LayerPath cur{0};
  // Iterative DFS; successors visited in increasing layer order keeps the
  // output lexicographic.
  struct Frame { int layer; int next; };
  std::vector<Frame> stack{{0, 1}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.layer == L) {
      if (out.size() >= cap)
        throw Error(Errc::PathCountGuardExceeded,
                    "PathCountGuardExceeded: more than " + std::to_string(cap) +
                        " substructure paths");
      out.push_back(cur);
      stack.pop_back();
      cur.pop_back();
      continue;
    }
    int next = -1;
    for (int l = f.next; l <= L; ++l)
      if (spec.has_pair(f.layer, l)) { next = l; break; }
    if (next == -1) {
      stack.pop_back();
      cur.pop_back();
      continue;
    }
    f.next = next + 1;
    cur.push_back(next);
    stack.push_back(Frame{next, next + 1});
  }
  return out;
}

inline BetaVector beta_vector(const LayerPath& p, int L) {
  BetaVector bits(L + 1, 0);
  for (int l : p) bits[l] = 1;
  return bits;
}

inline AlphaVector alpha_vector(const LayerPath& p, int L) {
  AlphaVector bits((L + 1) * (L + 1), 0);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) bits[p[i] * (L + 1) + p[i + 1]] = 1;
  return bits;
}

// Layer-pair edges of a substructure path.
inline std::vector<std::pair<int, int>> layer_pairs(const LayerPath& p) {
  std::vector<std::pair<int, int>> out;
  out.reserve(p.size() - 1);
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.emplace_back(p[i], p[i + 1]);
  return out;
}

struct InducedSubgraph {
  NetworkSpec spec;            // no-skip network over the visited layers
  std::vector<int> layer_map;  // new layer -> original layer
};

// Restriction of the spec to a substructure path: original widths on the
// visited layers, relabeled to consecutive layers 0..k.
inline InducedSubgraph induce_subgraph(const NetworkSpec& spec, const LayerPath& p) {
  InducedSubgraph out;
  out.layer_map = p;
  out.spec.widths.reserve(p.size());
  for (int l : p) out.spec.widths.push_back(spec.widths[l]);
  for (int l = 0; l + 1 < static_cast<int>(p.size()); ++l)
    out.spec.connections.emplace_back(l, l + 1);
  return out;
}

// Maps a path of an induced subgraph back onto the original layers.
inline Path lift_path(const Path& path, const std::vector<int>& layer_map) {
  Path out;
  out.reserve(path.size());
  for (const NodeId& n : path) out.push_back(NodeId{layer_map[n.layer], n.index});
  return out;
}

}  // namespace bpk
