// Dependency elimination across per-substructure bases: subdivision chains,
// cross-chain references, a frequency-based discard step that prunes a child
// path set against its parent's original basis segment by segment, and an
// exact confirmation sweep that settles whatever the pattern analysis missed.
#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bpk/exact.hpp"
#include "bpk/network.hpp"
#include "bpk/substructure.hpp"

namespace bpk {

struct SubdivisionChain {
  // Selected substructure indices ordered head first; each member is a
  // subdivision of its predecessor and the U-sets shrink strictly along the
  // chain. The underlying path terminates every chain implicitly.
  std::vector<int> members;
};

// Scans the selected substructures in (|U| descending, beta ascending) order;
// an unclaimed index opens a chain which is then stretched greedily by every
// later candidate that subdivides the current tail. Non-head members may be
// claimed by several chains.
inline std::vector<SubdivisionChain> build_chains(const SelectionResult& selection,
                                                  const std::vector<SubdivisionSet>& u_sets,
                                                  const std::vector<BetaVector>& betas) {
  std::vector<int> order;
  for (std::size_t i = 1; i < selection.selected.size(); ++i) order.push_back(selection.selected[i]);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (u_sets[a].members.size() != u_sets[b].members.size())
      return u_sets[a].members.size() > u_sets[b].members.size();
    return betas[a] < betas[b];
  });

  std::vector<SubdivisionChain> chains;
  std::set<int> claimed;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (claimed.count(order[i])) continue;
    SubdivisionChain chain;
    chain.members.push_back(order[i]);
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (subdivision_relation(betas[chain.members.back()], betas[order[j]]) ==
          SubdivisionRelation::TSubdividesR)
        chain.members.push_back(order[j]);
    }
    for (int r : chain.members) claimed.insert(r);
    chains.push_back(std::move(chain));
  }
  return chains;
}

inline bool share_layer_pair(const LayerPath& a, const LayerPath& b) {
  const auto pa = layer_pairs(a);
  const auto pb = layer_pairs(b);
  for (const auto& p : pa)
    if (std::find(pb.begin(), pb.end(), p) != pb.end()) return true;
  return false;
}

struct CrossChainSets {
  // q[t]: substructure indices whose original bases prune chain t's head.
  // From every other chain, the deepest member sharing a layer pair with the
  // head qualifies; members of chain t itself are passed over (their pairing
  // with the head is handled by chain t's own walk), and another chain's head
  // qualifies only from later chains, so a head-to-head pair is pruned in one
  // direction only.
  std::vector<std::vector<int>> q;
  // sh[t]: earlier chains whose heads share a layer pair with this head;
  // reported in traces, never consumed.
  std::vector<std::vector<int>> sh;
};

inline CrossChainSets compute_cross_chain_sets(const std::vector<SubdivisionChain>& chains,
                                               const std::vector<LayerPath>& subs) {
  CrossChainSets out;
  const std::size_t T = chains.size();
  out.q.resize(T);
  out.sh.resize(T);
  for (std::size_t t = 0; t < T; ++t) {
    const int head = chains[t].members.front();
    std::set<int> q;
    for (std::size_t u = 0; u < T; ++u) {
      if (u == t) continue;
      for (std::size_t j = chains[u].members.size(); j-- > 0;) {
        const int cand = chains[u].members[j];
        if (!share_layer_pair(subs[head], subs[cand])) continue;
        const bool own_member =
            std::find(chains[t].members.begin(), chains[t].members.end(), cand) !=
            chains[t].members.end();
        if (own_member) continue;  // fall back to the next deepest member
        const bool is_head = j == 0;
        if (!is_head || u > t) q.insert(cand);
        break;
      }
      if (u < t && share_layer_pair(subs[head], subs[chains[u].members.front()]))
        out.sh[t].push_back(static_cast<int>(u));
    }
    out.q[t].assign(q.begin(), q.end());
  }
  return out;
}

// One basis path split against a set of shared layer pairs.
struct PathDecomposition {
  std::vector<Edge> shared;    // edges over layer pairs both substructures use
  std::vector<Edge> unshared;  // remaining edges, in path order
};

inline PathDecomposition decompose_path(const Path& path,
                                        const std::set<std::pair<int, int>>& shared_pairs) {
  PathDecomposition out;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const Edge e{path[i], path[i + 1]};
    if (shared_pairs.count({e.tail.layer, e.head.layer}))
      out.shared.push_back(e);
    else
      out.unshared.push_back(e);
  }
  return out;
}

struct SdvGroupTrace {
  std::vector<std::pair<int, int>> segment;  // contiguous shared layer pairs
  std::vector<Edge> rest_pattern;            // the parent group's non-segment edges
  std::vector<Edge> most_frequent_shared;    // winning segment pattern of the group
  std::vector<std::vector<Edge>> repeated_unshared;  // child rests seen at least twice
};

struct SdvStepResult {
  std::vector<std::pair<int, int>> shared_pairs;
  std::vector<Path> discarded;
  std::vector<SdvGroupTrace> groups;
};

namespace detail {

// Plain union-find over pattern ids.
struct PatternLinks {
  std::vector<int> parent;
  explicit PatternLinks(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace detail

// Prunes the child's current path set against the parent's original basis.
// Shared layer pairs are handled one contiguous segment at a time: parent
// paths with the same remaining edges form a group whose segment patterns are
// interchangeable, groups sharing a pattern chain together, and the most
// frequent pattern of a group wins ties toward the kept representative. A
// child path is discarded when another child path carries the same remaining
// edges and a segment pattern interchangeable with it on the parent side;
// the representative kept is the winning pattern when present. No shared
// layer pairs means nothing to discard.
inline SdvStepResult sdv_step(const std::vector<Path>& parent_basis,
                              const std::vector<Path>& child_current,
                              const LayerPath& parent_sub,
                              const LayerPath& child_sub) {
  SdvStepResult result;
  std::set<std::pair<int, int>> shared_pairs;
  for (const auto& p : layer_pairs(parent_sub)) {
    const auto cb = layer_pairs(child_sub);
    if (std::find(cb.begin(), cb.end(), p) != cb.end()) shared_pairs.insert(p);
  }
  result.shared_pairs.assign(shared_pairs.begin(), shared_pairs.end());
  if (shared_pairs.empty()) return result;

  // Maximal contiguous runs of shared pairs.
  std::vector<std::vector<std::pair<int, int>>> segments;
  for (const auto& p : result.shared_pairs) {
    if (!segments.empty() && segments.back().back().second == p.first)
      segments.back().push_back(p);
    else
      segments.push_back({p});
  }
  std::map<std::pair<int, int>, std::size_t> segment_of;
  for (std::size_t k = 0; k < segments.size(); ++k)
    for (const auto& p : segments[k]) segment_of[p] = k;

  struct Split {
    std::vector<std::vector<Edge>> seg;  // edges per segment, path order
    std::vector<Edge> rest;              // all other edges, path order
  };
  const auto split_path = [&](const Path& path) {
    Split s;
    s.seg.resize(segments.size());
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const Edge e{path[i], path[i + 1]};
      const auto it = segment_of.find({e.tail.layer, e.head.layer});
      if (it != segment_of.end())
        s.seg[it->second].push_back(e);
      else
        s.rest.push_back(e);
    }
    return s;
  };
  std::vector<Split> parent_splits, child_splits;
  parent_splits.reserve(parent_basis.size());
  for (const Path& p : parent_basis) parent_splits.push_back(split_path(p));
  child_splits.reserve(child_current.size());
  for (const Path& p : child_current) child_splits.push_back(split_path(p));

  // Everything of a split except segment k, in path order.
  const auto key_without = [&](const Split& s, std::size_t k) {
    std::vector<Edge> key;
    for (std::size_t j = 0; j < s.seg.size(); ++j)
      if (j != k) key.insert(key.end(), s.seg[j].begin(), s.seg[j].end());
    key.insert(key.end(), s.rest.begin(), s.rest.end());
    std::sort(key.begin(), key.end());
    return key;
  };

  std::set<std::size_t> discard;
  for (std::size_t k = 0; k < segments.size(); ++k) {
    using Pattern = std::vector<Edge>;
    std::map<Pattern, std::map<Pattern, int>> parent_groups;  // rest -> pattern -> count
    for (const Split& s : parent_splits) parent_groups[key_without(s, k)][s.seg[k]] += 1;

    std::map<Pattern, int> pattern_id;
    for (const auto& [rest, patterns] : parent_groups)
      for (const auto& [pattern, count] : patterns)
        pattern_id.emplace(pattern, static_cast<int>(pattern_id.size()));

    detail::PatternLinks links(pattern_id.size());
    for (const auto& [rest, patterns] : parent_groups) {
      int first = -1;
      for (const auto& [pattern, count] : patterns) {
        const int id = pattern_id.at(pattern);
        if (first == -1)
          first = id;
        else
          links.unite(first, id);
      }
    }

    // Winning pattern per component: the lexicographically smallest of the
    // most frequent group patterns inside it.
    std::map<int, Pattern> winner;
    std::vector<SdvGroupTrace> traces;
    for (const auto& [rest, patterns] : parent_groups) {
      SdvGroupTrace trace;
      trace.segment = segments[k];
      trace.rest_pattern = rest;
      int best = 0;
      for (const auto& [pattern, count] : patterns)
        if (count > best) {
          best = count;
          trace.most_frequent_shared = pattern;
        }
      const int root = links.find(pattern_id.at(trace.most_frequent_shared));
      auto it = winner.find(root);
      if (it == winner.end() || trace.most_frequent_shared < it->second)
        winner[root] = trace.most_frequent_shared;
      traces.push_back(std::move(trace));
    }

    // Child paths with the same remaining edges and parent-linked segment
    // patterns are interchangeable; keep one per bucket.
    std::map<std::pair<Pattern, int>, std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < child_splits.size(); ++i) {
      const auto id = pattern_id.find(child_splits[i].seg[k]);
      if (id == pattern_id.end()) continue;  // pattern unknown to the parent
      buckets[{key_without(child_splits[i], k), links.find(id->second)}].push_back(i);
    }
    for (const auto& [key, members] : buckets) {
      if (members.size() < 2) continue;
      std::size_t keep = members.front();
      const Pattern& preferred = winner.at(key.second);
      for (std::size_t i : members) {
        if (child_splits[i].seg[k] == preferred) {
          keep = i;
          break;
        }
        if (child_splits[i].seg[k] < child_splits[keep].seg[k]) keep = i;
      }
      for (std::size_t i : members)
        if (i != keep) discard.insert(i);
      for (SdvGroupTrace& trace : traces)
        if (links.find(pattern_id.at(trace.most_frequent_shared)) == key.second)
          trace.repeated_unshared.push_back(key.first);
    }
    for (SdvGroupTrace& trace : traces) result.groups.push_back(std::move(trace));
  }
  for (std::size_t i : discard) result.discarded.push_back(child_current[i]);
  return result;
}

struct EliminationStep {
  int parent = -1;  // substructure index
  int child = -1;
  std::string kind;  // "chain", "underlying" or "cross"
  SdvStepResult detail;
};

struct EliminationTrace {
  std::vector<EliminationStep> steps;
  std::vector<Path> underlying_discards;  // cumulative D'_0
  // Confirmation-sweep adjustments: residual dependent paths dropped from the
  // union, and pattern-step discards reinstated to restore maximality.
  std::vector<Path> swept_out;
  std::vector<Path> reinstated;
};

struct EliminationOutcome {
  std::vector<Path> basis;                  // final union in canonical order
  std::map<int, std::vector<Path>> shrunk;  // per substructure, underlying included
  EliminationTrace trace;
};

namespace detail {

inline void remove_paths(std::vector<Path>& from, const std::vector<Path>& discard) {
  const std::set<Path> kill(discard.begin(), discard.end());
  from.erase(std::remove_if(from.begin(), from.end(),
                            [&](const Path& p) { return kill.count(p) > 0; }),
             from.end());
}

}  // namespace detail

// Walks every chain in index order pruning each member against its
// predecessor's original basis (the underlying set last, cumulatively), then
// prunes each chain head against the originals named by its cross-chain set.
// Shared members shrink cumulatively across chains. A final exact sweep over
// the retained union drops any residual dependent path and reinstates
// discarded paths whenever they still enlarge the span, so the returned
// union is always an independent set spanning every original basis.
inline EliminationOutcome eliminate_dependencies(const std::vector<SubdivisionChain>& chains,
                                                 const CrossChainSets& cross,
                                                 const std::map<int, std::vector<Path>>& bases,
                                                 int underlying,
                                                 const std::vector<LayerPath>& subs,
                                                 const NetworkSpec& spec) {
  EliminationOutcome out;
  out.shrunk = bases;
  std::map<Path, int> owner_of;
  for (const auto& [index, paths] : bases)
    for (const Path& p : paths) owner_of[p] = index;

  for (std::size_t t = 0; t < chains.size(); ++t) {
    const std::vector<int>& members = chains[t].members;
    std::vector<int> walk = members;
    walk.push_back(underlying);
    for (std::size_t j = 0; j + 1 < walk.size(); ++j) {
      const int parent = walk[j];
      const int child = walk[j + 1];
      EliminationStep step;
      step.parent = parent;
      step.child = child;
      step.kind = child == underlying ? "underlying" : "chain";
      step.detail = sdv_step(bases.at(parent), out.shrunk.at(child), subs[parent], subs[child]);
      detail::remove_paths(out.shrunk.at(child), step.detail.discarded);
      if (child == underlying)
        for (const Path& p : step.detail.discarded) out.trace.underlying_discards.push_back(p);
      out.trace.steps.push_back(std::move(step));
    }
    const int head = members.front();
    for (int parent : cross.q[t]) {
      EliminationStep step;
      step.parent = parent;
      step.child = head;
      step.kind = "cross";
      step.detail = sdv_step(bases.at(parent), out.shrunk.at(head), subs[parent], subs[head]);
      detail::remove_paths(out.shrunk.at(head), step.detail.discarded);
      out.trace.steps.push_back(std::move(step));
    }
  }

  // Confirmation sweep: seed with the retained union in canonical order, drop
  // dependent rows, then offer every discarded path back. Both adjustments
  // keep the spanned space equal to the span of all original bases.
  const EdgeIndex index(spec);
  ExactEliminator elim(index.m());
  std::vector<Path> retained;
  for (const auto& [idx, paths] : out.shrunk)
    retained.insert(retained.end(), paths.begin(), paths.end());
  std::sort(retained.begin(), retained.end());
  std::vector<Path> kept;
  for (const Path& p : retained) {
    const EdgeIncidence row = edge_incidence(p, index);
    if (elim.absorb(std::vector<BigInt>(row.begin(), row.end()))) {
      kept.push_back(p);
    } else {
      out.trace.swept_out.push_back(p);
      detail::remove_paths(out.shrunk.at(owner_of.at(p)), {p});
    }
  }
  std::set<Path> pool;
  for (const EliminationStep& s : out.trace.steps)
    for (const Path& p : s.detail.discarded) pool.insert(p);
  for (const Path& p : pool) {
    const EdgeIncidence row = edge_incidence(p, index);
    if (elim.absorb(std::vector<BigInt>(row.begin(), row.end()))) {
      kept.push_back(p);
      out.trace.reinstated.push_back(p);
      out.shrunk.at(owner_of.at(p)).push_back(p);
    }
  }
  for (auto& [idx, paths] : out.shrunk) std::sort(paths.begin(), paths.end());
  std::sort(kept.begin(), kept.end());
  out.basis = std::move(kept);
  return out;
}

}  // namespace bpk
