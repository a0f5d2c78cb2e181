// Acceptance suite: exercises every gate criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exits nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bpk/cli.hpp"
#include "bpk/json_io.hpp"
#include "bpk/oracle.hpp"
#include "bpk/pipeline.hpp"
#include "bpk/subroutine.hpp"
#include "support.hpp"

using namespace bpk;

namespace {

constexpr unsigned kCorpusSeedBase = 9000;
constexpr int kCorpusSize = 200;
constexpr unsigned kNoSkipSeedBase = 20000;
constexpr int kNoSkipCount = 100;

double seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

NetworkSpec corpus_spec(int i) {
  std::mt19937 rng(kCorpusSeedBase + static_cast<unsigned>(i));
  return bpk_test::random_spec(rng, 6, 3, 4);
}

int run(std::vector<std::string> args) {
  std::ostringstream out, err;
  return run_cli(std::move(args), out, err);
}

std::size_t rank_of(const std::vector<Path>& paths, const EdgeIndex& index) {
  std::vector<EdgeIncidence> rows;
  rows.reserve(paths.size());
  for (const Path& p : paths) rows.push_back(edge_incidence(p, index));
  return exact_rank(rows);
}

struct Line {
  bool pass;
  std::string text;
};

std::vector<Line> results;

void report(int number, bool pass, const std::string& text) {
  std::printf("%s  %d. %s\n", pass ? "PASS" : "FAIL", number, text.c_str());
  std::fflush(stdout);
  results.push_back({pass, text});
}

double median5(const std::vector<double>& xs) {
  std::vector<double> s = xs;
  std::sort(s.begin(), s.end());
  return s[s.size() / 2];
}

}  // namespace

int main() {
  bpk_test::ScratchDir scratch;

  std::vector<NetworkSpec> corpus;
  corpus.reserve(kCorpusSize);
  for (int i = 0; i < kCorpusSize; ++i) corpus.push_back(corpus_spec(i));

  // 1. Certification corpus: cmd_basis then cmd_verify exits 0 on every
  //    instance; rank(B) = |B| = rank(P) under exact arithmetic.
  {
    const auto start = std::chrono::steady_clock::now();
    int verified = 0;
    for (int i = 0; i < kCorpusSize; ++i) {
      const std::string spec_file = scratch.file("spec.json");
      const std::string basis_file = scratch.file("basis.json");
      bpk_test::write_file(spec_file, network_to_json(corpus[i]).dump());
      const int basis_rc = run({"basis", spec_file, "--out", basis_file});
      const int verify_rc = run({"verify", spec_file, basis_file});
      if (basis_rc == 0 && verify_rc == 0) ++verified;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "basis certification corpus: %d/%d instances verify exactly (%.1f s)",
                  verified, kCorpusSize, seconds(start));
    report(1, verified == kCorpusSize, buf);
  }

  std::vector<PipelineResult> corpus_runs;
  corpus_runs.reserve(kCorpusSize);
  for (int i = 0; i < kCorpusSize; ++i) corpus_runs.push_back(run_pipeline(corpus[i]));

  // 2. Representability: 50 sampled (or all) non-basis paths per instance
  //    reconstruct exactly from the basis.
  {
    const auto start = std::chrono::steady_clock::now();
    int ok_instances = 0;
    long represented = 0;
    long unbounded = 0;
    for (int i = 0; i < kCorpusSize; ++i) {
      const NetworkSpec& spec = corpus[i];
      const std::vector<Path>& basis = corpus_runs[i].elimination.basis;
      const EdgeIndex index(spec);
      const SpanSolver solver(basis, spec);
      const std::set<Path> in_basis(basis.begin(), basis.end());
      std::vector<Path> others;
      for (const Path& p : enumerate_all_paths(spec))
        if (!in_basis.count(p)) others.push_back(p);
      std::vector<Path> sample;
      std::mt19937 rng(kCorpusSeedBase + static_cast<unsigned>(i));
      std::sample(others.begin(), others.end(), std::back_inserter(sample), 50, rng);
      bool all_ok = true;
      for (const Path& target : sample) {
        const auto rep = solver.represent(target);
        if (!rep) {
          all_ok = false;
          break;
        }
        if (!rep->integer_bounded) ++unbounded;
        std::vector<Rational> acc(index.m(), Rational(0));
        for (std::size_t b = 0; b < basis.size(); ++b) {
          if (rep->coefficients[b] == Rational(0)) continue;
          const EdgeIncidence inc = edge_incidence(basis[b], index);
          for (std::size_t c = 0; c < inc.size(); ++c)
            if (inc[c] != 0) acc[c] += rep->coefficients[b];
        }
        const EdgeIncidence want = edge_incidence(target, index);
        for (std::size_t c = 0; c < want.size(); ++c)
          if (acc[c] != Rational(want[c])) {
            all_ok = false;
            break;
          }
        if (!all_ok) break;
        ++represented;
      }
      if (all_ok) ++ok_instances;
    }
    char buf[200];
    std::snprintf(buf, sizeof(buf),
                  "representability: %d/%d instances, %ld paths reconstructed exactly, "
                  "%ld without a small integer combination (%.1f s)",
                  ok_instances, kCorpusSize, represented, unbounded, seconds(start));
    report(2, ok_instances == kCorpusSize, buf);
  }

  // 3. Cardinality law on no-skip networks: |B| = m - H = rank of all paths.
  {
    int ok = 0;
    for (int i = 0; i < kNoSkipCount; ++i) {
      std::mt19937 rng(kNoSkipSeedBase + static_cast<unsigned>(i));
      const NetworkSpec spec = bpk_test::random_no_skip_spec(rng, 6, 3);
      const BasisPathSet basis = subroutine_basis(spec);
      std::size_t hidden = 0;
      for (int l = 1; l < spec.depth(); ++l) hidden += spec.widths[l];
      const std::size_t expect = EdgeIndex(spec).m() - hidden;
      if (basis.paths.size() == expect && path_space(spec).rank == expect) ++ok;
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf), "no-skip cardinality law: %d/%d instances match m - H", ok,
                  kNoSkipCount);
    report(3, ok == kNoSkipCount, buf);
  }

  // 4. Pairwise independence of the retained per-substructure sets.
  {
    int ok = 0;
    for (int i = 0; i < kCorpusSize; ++i) {
      const EdgeIndex index(corpus[i]);
      bool all_pairs = true;
      const auto& shrunk = corpus_runs[i].elimination.shrunk;
      for (auto a = shrunk.begin(); a != shrunk.end() && all_pairs; ++a)
        for (auto b = std::next(a); b != shrunk.end() && all_pairs; ++b) {
          std::vector<Path> both = a->second;
          both.insert(both.end(), b->second.begin(), b->second.end());
          all_pairs = rank_of(both, index) == both.size();
        }
      if (all_pairs) ++ok;
    }
    char buf[120];
    std::snprintf(buf, sizeof(buf),
                  "pairwise independence of retained sets: %d/%d instances", ok, kCorpusSize);
    report(4, ok == kCorpusSize, buf);
  }

  // 5. Elimination necessity: the corpus contains instances whose naive
  //    union of per-substructure bases is rank-deficient, and those
  //    instances still certify after elimination.
  {
    int deficient = 0;
    int repaired = 0;
    int first = -1;
    for (int i = 0; i < kCorpusSize; ++i) {
      const EdgeIndex index(corpus[i]);
      std::vector<Path> naive;
      for (const auto& [idx, paths] : corpus_runs[i].bases)
        naive.insert(naive.end(), paths.begin(), paths.end());
      if (rank_of(naive, index) == naive.size()) continue;
      ++deficient;
      if (first < 0) first = i;
      if (certify_basis(corpus_runs[i].elimination.basis, corpus[i]).verdict == Verdict::IsBasis)
        ++repaired;
    }
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "elimination necessity: %d rank-deficient naive unions (first at instance %d), "
                  "%d repaired",
                  deficient, first, repaired);
    report(5, deficient >= 1 && repaired == deficient, buf);
  }

  // 6. Determinism: byte-identical basis files across 5 runs and across
  //    thread counts 1 and 4.
  {
    const auto start = std::chrono::steady_clock::now();
    int ok = 0;
    for (int i = 0; i < kCorpusSize; ++i) {
      const std::string spec_file = scratch.file("spec.json");
      bpk_test::write_file(spec_file, network_to_json(corpus[i]).dump());
      std::string reference;
      bool identical = true;
      for (int r = 0; r < 5 && identical; ++r) {
        const std::string out_file = scratch.file("det.json");
        if (run({"basis", spec_file, "--out", out_file}) != 0) identical = false;
        const std::string content = bpk_test::read_file(out_file);
        if (r == 0)
          reference = content;
        else
          identical = identical && content == reference;
      }
      const std::string threaded = scratch.file("det4.json");
      if (run({"basis", spec_file, "--out", threaded, "--threads", "4"}) != 0) identical = false;
      identical = identical && bpk_test::read_file(threaded) == reference;
      if (identical) ++ok;
    }
    char buf[140];
    std::snprintf(buf, sizeof(buf),
                  "determinism: %d/%d instances byte-identical over 5 runs and threads {1,4} "
                  "(%.1f s)",
                  ok, kCorpusSize, seconds(start));
    report(6, ok == kCorpusSize, buf);
  }

  // 7. Complexity smoke: doubling widths at fixed depth, and depth at fixed
  //    widths, each increase the stage-recurrence wall time at most 8x.
  {
    const auto time_subroutine = [](int L, int width) {
      std::vector<double> times;
      const NetworkSpec spec = bpk_test::skeleton_spec(L, {}, width);
      for (int r = 0; r < 5; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        const BasisPathSet basis = subroutine_basis(spec);
        times.push_back(seconds(t0));
        if (basis.paths.empty()) std::abort();
      }
      return median5(times);
    };
    const double base = time_subroutine(12, 80);
    const double wide = time_subroutine(12, 160);
    const double deep = time_subroutine(24, 80);
    const double width_ratio = wide / base;
    const double depth_ratio = deep / base;
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "complexity smoke: width doubling %.2fx, depth doubling %.2fx "
                  "(base %.1f ms, threshold 8x)",
                  width_ratio, depth_ratio, base * 1000);
    report(7, width_ratio <= 8.0 && depth_ratio <= 8.0, buf);
  }

  // 8. Worked fixture: the 5-layer unit-width skeleton with skips (0,2) and
  //    (2,4): 4 substructure paths, U sizes {3,1,1,0}, R = 3, one chain,
  //    3 basis paths, and the exact signed-combination identity for the
  //    excluded path.
  {
    const NetworkSpec spec = bpk_test::skeleton_spec(4, {{0, 2}, {2, 4}});
    const PipelineResult r = run_pipeline(spec);
    bool ok = r.substructures.size() == 4;
    std::multiset<std::size_t> u_sizes;
    for (const SubdivisionSet& u : r.u_sets) u_sizes.insert(u.members.size());
    ok = ok && u_sizes == std::multiset<std::size_t>{0, 1, 1, 3};
    ok = ok && r.selection.rank == 3;
    ok = ok && r.chains.size() == 1;
    ok = ok && r.elimination.basis.size() == 3;

    const EdgeIndex index(spec);
    const Path excluded{{0, 0}, {1, 0}, {2, 0}, {4, 0}};
    const Path full{{0, 0}, {1, 0}, {2, 0}, {3, 0}, {4, 0}};
    const Path two_hop{{0, 0}, {2, 0}, {3, 0}, {4, 0}};
    const Path shortest{{0, 0}, {2, 0}, {4, 0}};
    SignedPathExpression expr;
    expr.terms = {{1, full}, {1, shortest}, {-1, two_hop}};
    ok = ok && evaluate_expression(expr, index) == edge_incidence(excluded, index);
    const SpanSolver solver(r.elimination.basis, spec);
    const auto rep = solver.represent(excluded);
    ok = ok && rep.has_value() && rep->integer_bounded;
    report(8, ok,
           "worked fixture: 4 substructure paths, U sizes {3,1,1,0}, R=3, one chain, "
           "3 basis paths, exact signed identity");
  }

  const std::size_t passed = static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const Line& l) { return l.pass; }));
  const bool all = passed == results.size();
  std::printf("%s: %zu/%zu criteria passed\n", all ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED",
              passed, results.size());
  return all ? 0 : 1;
}
