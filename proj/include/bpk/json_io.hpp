// JSON schemas: network input files, basis output files, and the report
// objects emitted by the command line tools. nlohmann::json keeps object keys
// sorted, so every emitted document is byte-stable.
#pragma once

#include <fstream>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "bpk/chain.hpp"
#include "bpk/network.hpp"
#include "bpk/oracle.hpp"
#include "bpk/pipeline.hpp"

namespace bpk {

using Json = nlohmann::json;

inline NetworkSpec network_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("widths") || !doc.contains("connections"))
    throw Error(Errc::ParseError, "network file needs \"widths\" and \"connections\"");
  std::vector<int> widths;
  if (!doc["widths"].is_array())
    throw Error(Errc::ParseError, "\"widths\" must be an array of integers");
  for (const Json& w : doc["widths"]) {
    if (!w.is_number_integer()) throw Error(Errc::ParseError, "widths must be integers");
    widths.push_back(w.get<int>());
  }
  std::vector<std::pair<int, int>> connections;
  if (!doc["connections"].is_array())
    throw Error(Errc::ParseError, "\"connections\" must be an array of [j,l] pairs");
  for (const Json& c : doc["connections"]) {
    if (!c.is_array() || c.size() != 2 || !c[0].is_number_integer() || !c[1].is_number_integer())
      throw Error(Errc::ParseError, "each connection must be a [j,l] integer pair");
    connections.emplace_back(c[0].get<int>(), c[1].get<int>());
  }
  std::map<std::string, std::string> weights;
  if (doc.contains("weights")) {
    if (!doc["weights"].is_object())
      throw Error(Errc::ParseError, "\"weights\" must be an object");
    for (const auto& [key, value] : doc["weights"].items()) {
      if (!value.is_string())
        throw Error(Errc::ParseError, "weights must map edges to rational strings");
      weights[key] = value.get<std::string>();
    }
  }
  return validate_network(std::move(widths), std::move(connections), std::move(weights));
}

inline NetworkSpec load_network(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::ParseError, "cannot open " + file);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, file + ": " + e.what());
  }
  return network_from_json(doc);
}

inline Json network_to_json(const NetworkSpec& spec) {
  Json doc;
  doc["widths"] = spec.widths;
  Json conns = Json::array();
  for (const auto& [j, l] : spec.connections) conns.push_back({j, l});
  doc["connections"] = std::move(conns);
  if (!spec.weights.empty()) doc["weights"] = spec.weights;
  return doc;
}

inline Json path_to_json(const Path& path) {
  Json out = Json::array();
  for (const NodeId& n : path) out.push_back({n.layer, n.index});
  return out;
}

inline Path path_from_json(const Json& doc) {
  if (!doc.is_array()) throw Error(Errc::ParseError, "a path must be an array of [layer,index]");
  Path out;
  for (const Json& n : doc) {
    if (!n.is_array() || n.size() != 2 || !n[0].is_number_integer() || !n[1].is_number_integer())
      throw Error(Errc::ParseError, "each path node must be a [layer,index] integer pair");
    out.push_back(NodeId{n[0].get<int>(), n[1].get<int>()});
  }
  return out;
}

inline Json paths_to_json(const std::vector<Path>& paths) {
  Json out = Json::array();
  for (const Path& p : paths) out.push_back(path_to_json(p));
  return out;
}

inline Json edge_to_json(const Edge& e) {
  return Json::array({{e.tail.layer, e.tail.index}, {e.head.layer, e.head.index}});
}

inline Json edge_list_to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back(edge_to_json(e));
  return out;
}

inline std::vector<Path> basis_paths_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array())
    throw Error(Errc::ParseError, "basis file needs a \"paths\" array");
  std::vector<Path> out;
  for (const Json& p : doc["paths"]) out.push_back(path_from_json(p));
  return out;
}

inline std::vector<Path> load_basis(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw Error(Errc::ParseError, "cannot open " + file);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, file + ": " + e.what());
  }
  return basis_paths_from_json(doc);
}

inline Json stats_to_json(const RunStats& st) {
  Json out;
  out["substructure_count"] = st.substructure_count;
  out["R"] = st.R;
  out["T"] = st.T;
  out["m"] = st.m;
  out["W_max"] = st.W_max;
  out["B_max"] = st.B_max;
  out["basis_size"] = st.basis_size;
  out["chain_lengths"] = st.chain_lengths;
  out["step_discards"] = st.step_discards;
  out["underlying_discards"] = st.underlying_discards;
  out["swept_out"] = st.swept_out;
  out["reinstated"] = st.reinstated;
  return out;
}

inline Json trace_to_json(const PipelineResult& result) {
  Json out;
  Json chains = Json::array();
  for (const SubdivisionChain& c : result.chains) chains.push_back(c.members);
  out["chains"] = std::move(chains);
  out["q_sets"] = result.cross.q;
  out["sh_sets"] = result.cross.sh;
  Json steps = Json::array();
  for (const EliminationStep& s : result.elimination.trace.steps) {
    Json step;
    step["parent"] = s.parent;
    step["child"] = s.child;
    step["kind"] = s.kind;
    Json pairs = Json::array();
    for (const auto& [a, b] : s.detail.shared_pairs) pairs.push_back({a, b});
    step["shared_pairs"] = std::move(pairs);
    Json groups = Json::array();
    for (const SdvGroupTrace& g : s.detail.groups) {
      Json group;
      Json seg = Json::array();
      for (const auto& [a, b] : g.segment) seg.push_back({a, b});
      group["segment"] = std::move(seg);
      group["rest_pattern"] = edge_list_to_json(g.rest_pattern);
      group["most_frequent_shared"] = edge_list_to_json(g.most_frequent_shared);
      Json repeated = Json::array();
      for (const auto& pattern : g.repeated_unshared) repeated.push_back(edge_list_to_json(pattern));
      group["repeated_unshared"] = std::move(repeated);
      groups.push_back(std::move(group));
    }
    step["groups"] = std::move(groups);
    step["discarded"] = paths_to_json(s.detail.discarded);
    steps.push_back(std::move(step));
  }
  out["steps"] = std::move(steps);
  out["underlying_discards"] = paths_to_json(result.elimination.trace.underlying_discards);
  out["swept_out"] = paths_to_json(result.elimination.trace.swept_out);
  out["reinstated"] = paths_to_json(result.elimination.trace.reinstated);
  return out;
}

inline Json basis_file_to_json(const PipelineResult& result, bool emit_trace) {
  Json out;
  out["paths"] = paths_to_json(result.elimination.basis);
  out["stats"] = stats_to_json(result.stats);
  if (emit_trace) out["trace"] = trace_to_json(result);
  return out;
}

inline std::string rational_to_string(const Rational& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

inline Json substructure_report_to_json(const SubstructureAnalysis& result) {
  Json out;
  Json paths = Json::array();
  for (std::size_t i = 0; i < result.substructures.size(); ++i) {
    Json entry;
    entry["index"] = i;
    entry["layers"] = result.substructures[i];
    entry["beta"] = result.betas[i];
    entry["alpha"] = result.alphas[i];
    entry["u_set"] = result.u_sets[i].members;
    paths.push_back(std::move(entry));
  }
  out["substructure_paths"] = std::move(paths);
  Json selection;
  selection["selected"] = result.selection.selected;
  selection["R"] = result.selection.rank;
  Json skipped = Json::array();
  for (const SelectionResult::Skip& s : result.selection.skipped)
    skipped.push_back({{"index", s.index}, {"reason", s.reason}});
  selection["skipped"] = std::move(skipped);
  selection["case2_rule_fired"] = result.selection.case2_rule_fired;
  selection["second_pass_used"] = result.selection.second_pass_used;
  out["selection"] = std::move(selection);
  return out;
}

inline Json certify_to_json(const CertifyResult& result) {
  Json out;
  out["verdict"] = verdict_name(result.verdict);
  out["basis_size"] = result.candidate_size;
  out["basis_rank"] = result.candidate_rank;
  out["path_rank"] = result.path_rank;
  if (result.verdict == Verdict::NotMaximal) {
    out["gap"] = result.gap;
    if (result.independent_path) out["witness_path"] = path_to_json(*result.independent_path);
  }
  if (result.verdict == Verdict::NotIndependent && result.dependent_index) {
    Json witness;
    witness["dependent_index"] = *result.dependent_index;
    Json coeffs = Json::array();
    for (const Rational& c : result.dependent_coefficients)
      coeffs.push_back(rational_to_string(c));
    witness["coefficients"] = std::move(coeffs);
    out["witness"] = std::move(witness);
  }
  return out;
}

}  // namespace bpk
