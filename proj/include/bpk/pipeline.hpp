// End-to-end basis construction: substructure enumeration and selection,
// per-substructure bases (optionally built concurrently), chain construction
// and dependency elimination, with run statistics for reporting.
#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <map>
#include <thread>
#include <vector>

#include "bpk/chain.hpp"
#include "bpk/network.hpp"
#include "bpk/substructure.hpp"
#include "bpk/subroutine.hpp"

namespace bpk {

struct RunStats {
  std::size_t substructure_count = 0;
  std::size_t R = 0;      // selected independent substructures
  std::size_t T = 0;      // chains
  std::size_t m = 0;      // edges in the network
  int W_max = 0;          // widest layer
  std::size_t B_max = 0;  // largest per-substructure basis
  std::size_t basis_size = 0;
  std::vector<std::size_t> chain_lengths;     // s_t per chain
  std::vector<std::size_t> step_discards;     // per elimination step, in order
  std::size_t underlying_discards = 0;
  std::size_t swept_out = 0;    // residual dependent paths dropped by the sweep
  std::size_t reinstated = 0;   // discarded paths added back by the sweep
  // Wall times are diagnostics only; they never enter output files.
  double ms_analyze = 0, ms_bases = 0, ms_eliminate = 0;
};

struct SubstructureAnalysis {
  std::vector<LayerPath> substructures;
  std::vector<BetaVector> betas;
  std::vector<AlphaVector> alphas;
  std::vector<SubdivisionSet> u_sets;
  SelectionResult selection;
};

// Enumeration, encodings, subdivision sets and the independent selection;
// everything the pipeline needs before any basis is built.
inline SubstructureAnalysis analyze_substructures(const NetworkSpec& spec,
                                                  std::size_t cap = kDefaultPathCap) {
  SubstructureAnalysis out;
  const int L = spec.depth();
  out.substructures = enumerate_substructure_paths(spec, cap);
  for (const LayerPath& p : out.substructures) {
    out.betas.push_back(beta_vector(p, L));
    out.alphas.push_back(alpha_vector(p, L));
  }
  out.u_sets = compute_subdivision_sets(out.betas);
  out.selection = select_independent_substructures(out.alphas, out.betas, out.u_sets);
  return out;
}

struct PipelineResult {
  std::vector<LayerPath> substructures;
  std::vector<BetaVector> betas;
  std::vector<AlphaVector> alphas;
  std::vector<SubdivisionSet> u_sets;
  SelectionResult selection;
  std::vector<SubdivisionChain> chains;
  CrossChainSets cross;
  std::map<int, std::vector<Path>> bases;  // originals per selected substructure
  EliminationOutcome elimination;
  RunStats stats;
};

namespace detail {

inline double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace detail

// Builds the basis of one substructure inside the full network.
inline std::vector<Path> substructure_basis(const NetworkSpec& spec, const LayerPath& sub) {
  const InducedSubgraph induced = induce_subgraph(spec, sub);
  BasisPathSet basis = subroutine_basis(induced.spec);
  std::vector<Path> out;
  out.reserve(basis.paths.size());
  for (const Path& p : basis.paths) out.push_back(lift_path(p, induced.layer_map));
  return out;
}

inline PipelineResult run_pipeline(const NetworkSpec& spec, int threads = 1,
                                   std::size_t cap = kDefaultPathCap) {
  PipelineResult result;
  auto t0 = std::chrono::steady_clock::now();

  SubstructureAnalysis analysis = analyze_substructures(spec, cap);
  result.substructures = std::move(analysis.substructures);
  result.betas = std::move(analysis.betas);
  result.alphas = std::move(analysis.alphas);
  result.u_sets = std::move(analysis.u_sets);
  result.selection = std::move(analysis.selection);
  result.stats.ms_analyze = detail::ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  const std::vector<int>& selected = result.selection.selected;
  std::vector<std::vector<Path>> built(selected.size());
  if (threads <= 1 || selected.size() <= 1) {
    for (std::size_t i = 0; i < selected.size(); ++i)
      built[i] = substructure_basis(spec, result.substructures[selected[i]]);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (std::size_t i = cursor.fetch_add(1); i < selected.size(); i = cursor.fetch_add(1))
        built[i] = substructure_basis(spec, result.substructures[selected[i]]);
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(threads, selected.size());
    pool.reserve(n);
    for (std::size_t i = 0; i < n; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  for (std::size_t i = 0; i < selected.size(); ++i)
    result.bases[selected[i]] = std::move(built[i]);
  result.stats.ms_bases = detail::ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  result.chains = build_chains(result.selection, result.u_sets, result.betas);
  result.cross = compute_cross_chain_sets(result.chains, result.substructures);
  const int underlying = result.selection.selected.front();
  result.elimination = eliminate_dependencies(result.chains, result.cross, result.bases,
                                              underlying, result.substructures, spec);
  result.stats.ms_eliminate = detail::ms_since(t0);

  RunStats& st = result.stats;
  st.substructure_count = result.substructures.size();
  st.R = result.selection.selected.size();
  st.T = result.chains.size();
  st.m = EdgeIndex(spec).m();
  for (int w : spec.widths) st.W_max = std::max(st.W_max, w);
  for (const auto& [index, paths] : result.bases) st.B_max = std::max(st.B_max, paths.size());
  st.basis_size = result.elimination.basis.size();
  for (const SubdivisionChain& c : result.chains) st.chain_lengths.push_back(c.members.size());
  for (const EliminationStep& s : result.elimination.trace.steps)
    st.step_discards.push_back(s.detail.discarded.size());
  st.underlying_discards = result.elimination.trace.underlying_discards.size();
  st.swept_out = result.elimination.trace.swept_out.size();
  st.reinstated = result.elimination.trace.reinstated.size();
  return result;
}

}  // namespace bpk
