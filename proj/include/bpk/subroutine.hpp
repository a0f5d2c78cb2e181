// Basis path construction for a no-skip layered network: per-stage direct
// matchings fan every incoming path forward, cross edges extend exactly one
// deterministic representative, and the final stage's union is the basis.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "bpk/network.hpp"

namespace bpk {

struct StageEdges {
  std::vector<Edge> direct;
  std::vector<Edge> cross;
};

// Deterministic matching for the complete bipartite stage k -> k+1: node i
// pairs with node i below the smaller width; when the tail layer is at least
// as wide, leftover tails attach to head 0. Every tail gets exactly one
// direct edge; cross edges are the complement.
inline StageEdges match_direct_edges(int stage, int width_tail, int width_head) {
  StageEdges out;
  std::vector<std::vector<bool>> is_direct(width_tail, std::vector<bool>(width_head, false));
  for (int i = 0; i < width_tail; ++i) {
    const int head = i < width_head ? i : 0;
    is_direct[i][head] = true;
    out.direct.push_back(Edge{NodeId{stage, i}, NodeId{stage + 1, head}});
  }
  for (int i = 0; i < width_tail; ++i)
    for (int j = 0; j < width_head; ++j)
      if (!is_direct[i][j]) out.cross.push_back(Edge{NodeId{stage, i}, NodeId{stage + 1, j}});
  return out;
}

struct BasisPathSet {
  std::vector<Path> paths;  // lexicographic by node sequence
  int substructure = -1;    // provenance; set by the caller when induced
  std::size_t direct_count = 0;
  std::size_t cross_count = 0;
};

// Stage recurrence over the whole no-skip network. Paths are kept as
// parent-pointer records; the frontier stays sorted in full-path
// lexicographic order, so the representative for a cross edge is the first
// frontier entry at its tail and the final output needs no sort.
inline BasisPathSet subroutine_basis(const NetworkSpec& spec) {
  if (!spec.is_no_skip())
    throw Error(Errc::SkipsNotAllowed, "basis stage recurrence requires a no-skip network");
  const int L = spec.depth();

  struct Rec {
    int prev;  // arena index of the prefix record, -1 at layer 0
    NodeId node;
  };
  std::vector<Rec> arena;
  // Frontier entries reference arena records whose node lies on the current
  // layer; the vector order is the lexicographic order of the full paths.
  std::vector<int> frontier;
  std::size_t direct_count = 0, cross_count = 0;

  for (int i = 0; i < spec.widths[0]; ++i) {
    arena.push_back(Rec{-1, NodeId{0, i}});
    frontier.push_back(static_cast<int>(arena.size()) - 1);
  }

  for (int k = 0; k < L; ++k) {
    const StageEdges stage = match_direct_edges(k, spec.widths[k], spec.widths[k + 1]);
    // Incoming paths per tail node, positions in frontier order.
    std::vector<std::vector<int>> incoming(spec.widths[k]);
    for (std::size_t pos = 0; pos < frontier.size(); ++pos)
      incoming[arena[frontier[pos]].node.index].push_back(static_cast<int>(pos));

    struct Candidate {
      int prev_pos;
      int head_index;
      int rec;
      bool direct;
    };
    std::vector<Candidate> next;
    for (const Edge& e : stage.direct) {
      for (int pos : incoming[e.tail.index]) {
        arena.push_back(Rec{frontier[pos], e.head});
        next.push_back(Candidate{pos, e.head.index, static_cast<int>(arena.size()) - 1, true});
      }
    }
    for (const Edge& e : stage.cross) {
      const int pos = incoming[e.tail.index].front();  // lexicographically least prefix
      arena.push_back(Rec{frontier[pos], e.head});
      next.push_back(Candidate{pos, e.head.index, static_cast<int>(arena.size()) - 1, false});
    }
    std::sort(next.begin(), next.end(), [](const Candidate& a, const Candidate& b) {
      if (a.prev_pos != b.prev_pos) return a.prev_pos < b.prev_pos;
      return a.head_index < b.head_index;
    });
    frontier.clear();
    for (const Candidate& c : next) frontier.push_back(c.rec);
    if (k == L - 1)
      for (const Candidate& c : next) (c.direct ? direct_count : cross_count) += 1;
  }

  BasisPathSet out;
  out.direct_count = direct_count;
  out.cross_count = cross_count;
  out.paths.reserve(frontier.size());
  for (int rec : frontier) {
    Path p;
    for (int r = rec; r != -1; r = arena[r].prev) p.push_back(arena[r].node);
    std::reverse(p.begin(), p.end());
    out.paths.push_back(std::move(p));
  }
  return out;
}

}  // namespace bpk
