// Substructure selection: componentwise beta comparison for the subdivision
// partial order, per-path subdivision sets, and greedy selection of a maximal
// independent substructure set over exact ranks of alpha vectors.
#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "bpk/exact.hpp"
#include "bpk/network.hpp"

namespace bpk {

enum class SubdivisionRelation { Equal, TSubdividesR, RSubdividesT, Incomparable };

// Classifies X = beta_r - beta_t: only zeros -> Equal; zeros and -1 -> p_t
// subdivides p_r (t visits a superset of r's layers); zeros and +1 -> the
// converse; both signs -> incomparable.
inline SubdivisionRelation subdivision_relation(const BetaVector& beta_r, const BetaVector& beta_t) {
  bool plus = false, minus = false;
  for (std::size_t l = 0; l < beta_r.size(); ++l) {
    const int x = beta_r[l] - beta_t[l];
    plus |= x > 0;
    minus |= x < 0;
  }
  if (plus && minus) return SubdivisionRelation::Incomparable;
  if (minus) return SubdivisionRelation::TSubdividesR;
  if (plus) return SubdivisionRelation::RSubdividesT;
  return SubdivisionRelation::Equal;
}

struct SubdivisionSet {
  int owner = 0;
  std::vector<int> members;  // indices t with p_t a subdivision of p_owner

  bool contains(int t) const {
    return std::binary_search(members.begin(), members.end(), t);
  }
};

inline std::vector<SubdivisionSet> compute_subdivision_sets(const std::vector<BetaVector>& betas) {
  const int n = static_cast<int>(betas.size());
  std::vector<SubdivisionSet> sets(n);
  for (int r = 0; r < n; ++r) {
    sets[r].owner = r;
    for (int t = 0; t < n; ++t)
      if (t != r && subdivision_relation(betas[r], betas[t]) == SubdivisionRelation::TSubdividesR)
        sets[r].members.push_back(t);
  }
  return sets;
}

struct SelectionResult {
  std::vector<int> selected;  // substructure indices, underlying path first
  std::size_t rank = 0;       // rank of all alpha vectors; equals selected.size()

  struct Skip {
    int index;
    std::string reason;  // "dependent" or "case2"
  };
  std::vector<Skip> skipped;
  bool case2_rule_fired = false;
  bool second_pass_used = false;
};

namespace detail {

// Candidate order: |U| descending, ties broken by lexicographically smaller
// beta, so equal-|U| runs are scanned deterministically.
inline std::vector<int> sorted_candidates(const std::vector<BetaVector>& betas,
                                          const std::vector<SubdivisionSet>& u_sets,
                                          int underlying) {
  std::vector<int> order;
  for (int r = 0; r < static_cast<int>(betas.size()); ++r)
    if (r != underlying) order.push_back(r);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (u_sets[a].members.size() != u_sets[b].members.size())
      return u_sets[a].members.size() > u_sets[b].members.size();
    return betas[a] < betas[b];
  });
  return order;
}

// A swap between the two paths' differing regions needs a layer both visit
// strictly between a +1 and a -1 of X = beta_prev - beta_cur.
inline bool shared_layer_between_signs(const BetaVector& beta_prev, const BetaVector& beta_cur) {
  const int n = static_cast<int>(beta_prev.size());
  for (int a = 0; a < n; ++a) {
    if (beta_prev[a] - beta_cur[a] != 1) continue;
    for (int c = 0; c < n; ++c) {
      if (beta_prev[c] - beta_cur[c] != -1) continue;
      const int lo = std::min(a, c), hi = std::max(a, c);
      for (int b = lo + 1; b < hi; ++b)
        if (beta_prev[b] == 1 && beta_cur[b] == 1) return true;
    }
  }
  return false;
}

}  // namespace detail

inline int find_underlying(const std::vector<BetaVector>& betas) {
  for (int r = 0; r < static_cast<int>(betas.size()); ++r)
    if (std::all_of(betas[r].begin(), betas[r].end(), [](int b) { return b == 1; })) return r;
  throw Error(Errc::BadPath, "no substructure path visits every layer");
}

// Greedy selection of R independent alpha vectors, seeded with the underlying
// path. A rank-raising candidate is still skipped when its predecessor in the
// scan has the same |U|, some earlier set contains both, and the two paths
// could swap at a commonly visited layer between their differing regions;
// skipped candidates are re-offered in a second pass if the first one ends
// short of R.
inline SelectionResult select_independent_substructures(const std::vector<AlphaVector>& alphas,
                                                        const std::vector<BetaVector>& betas,
                                                        const std::vector<SubdivisionSet>& u_sets) {
  SelectionResult result;
  result.rank = exact_rank(alphas);
  const int underlying = find_underlying(betas);
  const std::vector<int> order = detail::sorted_candidates(betas, u_sets, underlying);

  ExactEliminator elim(alphas.empty() ? 0 : alphas.front().size());
  elim.absorb(std::vector<BigInt>(alphas[underlying].begin(), alphas[underlying].end()));
  result.selected.push_back(underlying);

  std::vector<int> case2_skipped;
  for (std::size_t i = 0; i < order.size() && elim.rank() < result.rank; ++i) {
    const int cur = order[i];
    auto residual = elim.reduce(std::vector<BigInt>(alphas[cur].begin(), alphas[cur].end()));
    if (detail::all_zero(residual)) {
      result.skipped.push_back({cur, "dependent"});
      continue;
    }
    const int prev = i == 0 ? underlying : order[i - 1];
    bool skip = false;
    if (u_sets[prev].members.size() == u_sets[cur].members.size() &&
        detail::shared_layer_between_signs(betas[prev], betas[cur])) {
      for (std::size_t j = 0; j + 1 < i && !skip; ++j)
        skip = u_sets[order[j]].contains(prev) && u_sets[order[j]].contains(cur);
    }
    if (skip) {
      result.skipped.push_back({cur, "case2"});
      result.case2_rule_fired = true;
      case2_skipped.push_back(cur);
      continue;
    }
    elim.absorb_residual(std::move(residual));
    result.selected.push_back(cur);
  }

  if (elim.rank() < result.rank) {
    result.second_pass_used = true;
    for (int cur : case2_skipped) {
      if (elim.rank() == result.rank) break;
      if (elim.absorb(std::vector<BigInt>(alphas[cur].begin(), alphas[cur].end())))
        result.selected.push_back(cur);
    }
    if (elim.rank() < result.rank)
      throw Error(Errc::RankShortfall, "RankShortfall: selection cannot reach full rank");
  }
  return result;
}

}  // namespace bpk
