// Brute-force verifier: exhaustive path enumeration, exact rank certificates
// for candidate bases, rational representation of arbitrary paths over a
// basis, and signed path-expression evaluation over the canonical edge order.
#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "bpk/exact.hpp"
#include "bpk/network.hpp"

namespace bpk {

// Every input-to-output node path, depth first in lexicographic order.
inline std::vector<Path> enumerate_all_paths(const NetworkSpec& spec,
                                             std::size_t cap = kDefaultPathCap) {
  const int L = spec.depth();
  std::vector<std::vector<int>> successors(L);  // connected later layers, ascending
  for (int l = 0; l < L; ++l)
    for (int h = l + 1; h <= L; ++h)
      if (spec.has_pair(l, h)) successors[l].push_back(h);

  std::vector<Path> out;
  Path cur;
  auto dfs = [&](auto&& self, NodeId node) -> void {
    cur.push_back(node);
    if (node.layer == L) {
      if (out.size() >= cap)
        throw Error(Errc::PathCountGuardExceeded,
                    "PathCountGuardExceeded: more than " + std::to_string(cap) + " paths");
      out.push_back(cur);
    } else {
      for (int layer : successors[node.layer])
        for (int i = 0; i < spec.widths[layer]; ++i) self(self, NodeId{layer, i});
    }
    cur.pop_back();
  };
  for (int i = 0; i < spec.widths[0]; ++i) dfs(dfs, NodeId{0, i});
  return out;
}

struct PathSpace {
  std::vector<Path> all_paths;
  std::vector<EdgeIncidence> incidence;
  std::size_t rank = 0;
};

inline PathSpace path_space(const NetworkSpec& spec, std::size_t cap = kDefaultPathCap) {
  PathSpace out;
  out.all_paths = enumerate_all_paths(spec, cap);
  const EdgeIndex index(spec);
  out.incidence.reserve(out.all_paths.size());
  for (const Path& p : out.all_paths) out.incidence.push_back(edge_incidence(p, index));
  out.rank = exact_rank(out.incidence);
  return out;
}

enum class Verdict { IsBasis, NotIndependent, NotMaximal };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::IsBasis: return "IsBasis";
    case Verdict::NotIndependent: return "NotIndependent";
    case Verdict::NotMaximal: return "NotMaximal";
  }
  return "Unknown";
}

struct CertifyResult {
  Verdict verdict = Verdict::IsBasis;
  std::size_t candidate_size = 0;
  std::size_t candidate_rank = 0;
  std::size_t path_rank = 0;
  std::size_t gap = 0;  // path_rank - candidate_rank when NotMaximal
  // NotIndependent witness: the offending path with its exact coefficients
  // over the independent prefix of the candidate set.
  std::optional<std::size_t> dependent_index;
  std::vector<Rational> dependent_coefficients;
  std::optional<Path> independent_path;  // NotMaximal witness
};

// A candidate is a basis iff its incidence vectors are independent and no
// enumerated path enlarges their span.
inline CertifyResult certify_basis(const std::vector<Path>& candidate, const NetworkSpec& spec,
                                   std::size_t cap = kDefaultPathCap) {
  for (const Path& p : candidate) check_path(p, spec);
  const EdgeIndex index(spec);
  CertifyResult result;
  result.candidate_size = candidate.size();

  ExactEliminator elim(index.m());
  for (std::size_t i = 0; i < candidate.size(); ++i) {
    const EdgeIncidence row = edge_incidence(candidate[i], index);
    if (!elim.absorb(std::vector<BigInt>(row.begin(), row.end()))) {
      result.verdict = Verdict::NotIndependent;
      result.candidate_rank = elim.rank();
      result.dependent_index = i;
      TrackedSpan span(index.m());
      for (std::size_t j = 0; j < i; ++j) {
        const EdgeIncidence r = edge_incidence(candidate[j], index);
        span.add(std::vector<BigInt>(r.begin(), r.end()));
      }
      if (auto coeffs = span.represent(std::vector<BigInt>(row.begin(), row.end())))
        result.dependent_coefficients = std::move(*coeffs);
      return result;
    }
  }
  result.candidate_rank = elim.rank();

  const std::vector<Path> all = enumerate_all_paths(spec, cap);
  std::size_t extra = 0;
  for (const Path& p : all) {
    const EdgeIncidence row = edge_incidence(p, index);
    if (elim.absorb(std::vector<BigInt>(row.begin(), row.end()))) {
      if (extra == 0) result.independent_path = p;
      ++extra;
    }
  }
  result.path_rank = result.candidate_rank + extra;
  if (extra > 0) {
    result.verdict = Verdict::NotMaximal;
    result.gap = extra;
    return result;
  }
  result.verdict = Verdict::IsBasis;
  return result;
}

struct Representation {
  std::vector<Rational> coefficients;
  // Whether the unique coefficients are integers of magnitude at most 3,
  // i.e. the representation is reachable by a short signed path combination.
  bool integer_bounded = false;
};

// Exact solves of incidence(path) over a fixed basis; the span is factored
// once so each query is a single tracked reduction.
class SpanSolver {
 public:
  SpanSolver(const std::vector<Path>& basis, const NetworkSpec& spec)
      : index_(spec), span_(index_.m()) {
    for (const Path& p : basis) {
      const EdgeIncidence row = edge_incidence(p, index_);
      span_.add(std::vector<BigInt>(row.begin(), row.end()));
    }
  }

  std::optional<Representation> represent(const Path& target) const {
    const EdgeIncidence row = edge_incidence(target, index_);
    auto coeffs = span_.represent(std::vector<BigInt>(row.begin(), row.end()));
    if (!coeffs) return std::nullopt;
    Representation rep;
    rep.coefficients = std::move(*coeffs);
    rep.integer_bounded = true;
    for (const Rational& c : rep.coefficients) {
      if (c.denominator() != 1 || detail::abs_of(c.numerator()) > 3) {
        rep.integer_bounded = false;
        break;
      }
    }
    return rep;
  }

  const EdgeIndex& edge_index() const { return index_; }

 private:
  EdgeIndex index_;
  TrackedSpan span_;
};

// Signed multiset of paths; evaluates to an integer vector over the canonical
// edges, so parallel edges accumulate counts above one.
struct SignedPathExpression {
  std::vector<std::pair<int, Path>> terms;  // sign in {+1, -1}
};

inline std::vector<int> evaluate_expression(const SignedPathExpression& expr,
                                            const EdgeIndex& index) {
  std::vector<int> value(index.m(), 0);
  for (const auto& [sign, path] : expr.terms)
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      value[index.position(Edge{path[i], path[i + 1]})] += sign;
  return value;
}

}  // namespace bpk
