// Command line front end. Subcommands: validate, substructures, subroutine,
// basis, verify, oracle-rank. Reports are UTF-8 JSON on stdout or --out;
// exit codes: 0 ok, 2 invalid input, 3 verification failure, 4 resource
// guard. BPK_PATH_CAP overrides the enumeration guard.
#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bpk/json_io.hpp"
#include "bpk/oracle.hpp"
#include "bpk/pipeline.hpp"
#include "bpk/subroutine.hpp"

namespace bpk {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitVerifyFailed = 3;
inline constexpr int kExitGuard = 4;

namespace detail {

inline int exit_code_for(const Error& e) {
  return e.code() == Errc::PathCountGuardExceeded ? kExitGuard : kExitInvalid;
}

inline std::size_t path_cap_from_env() {
  const char* raw = std::getenv("BPK_PATH_CAP");
  if (!raw) return kDefaultPathCap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0)
    throw Error(Errc::ParseError, std::string("BPK_PATH_CAP is not a positive integer: ") + raw);
  return static_cast<std::size_t>(v);
}

inline void emit(const Json& doc, const std::string& out_file, std::ostream& out) {
  if (out_file.empty()) {
    out << doc.dump(2) << "\n";
    return;
  }
  std::ofstream f(out_file, std::ios::binary);
  if (!f) throw Error(Errc::ParseError, "cannot write " + out_file);
  f << doc.dump(2) << "\n";
}

}  // namespace detail

inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"basis path set construction for layered networks with skip connections"};
  app.require_subcommand(1);

  std::string spec_file, basis_file, out_file;
  bool emit_trace = false;
  int threads = 1;

  CLI::App* validate = app.add_subcommand("validate", "parse and validate a network file");
  validate->add_option("spec", spec_file, "network JSON file")->required();

  CLI::App* substructures =
      app.add_subcommand("substructures", "substructure paths, encodings and selection");
  substructures->add_option("spec", spec_file, "network JSON file")->required();
  substructures->add_option("--out", out_file, "write the report to a file");

  CLI::App* subroutine =
      app.add_subcommand("subroutine", "basis of a no-skip network via the stage recurrence");
  subroutine->add_option("spec", spec_file, "network JSON file")->required();
  subroutine->add_option("--out", out_file, "write the basis file to a file");

  CLI::App* basis = app.add_subcommand("basis", "full basis construction pipeline");
  basis->add_option("spec", spec_file, "network JSON file")->required();
  basis->add_option("--out", out_file, "write the basis file to a file");
  basis->add_option("--threads", threads, "worker threads for per-substructure bases")
      ->check(CLI::PositiveNumber);
  basis->add_flag("--emit-trace", emit_trace, "include the elimination trace");

  CLI::App* verify = app.add_subcommand("verify", "certify a basis file against a network");
  verify->add_option("spec", spec_file, "network JSON file")->required();
  verify->add_option("basis", basis_file, "basis JSON file")->required();

  CLI::App* oracle_rank =
      app.add_subcommand("oracle-rank", "rank of all path incidence vectors");
  oracle_rank->add_option("spec", spec_file, "network JSON file")->required();
  oracle_rank->add_option("--out", out_file, "write the report to a file");

  try {
    std::vector<const char*> argv;
    argv.push_back("bpk");
    for (const std::string& a : args) argv.push_back(a.c_str());
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    const std::size_t cap = detail::path_cap_from_env();

    if (validate->parsed()) {
      const NetworkSpec spec = load_network(spec_file);
      detail::emit(network_to_json(spec), out_file, out);
      return kExitOk;
    }
    if (substructures->parsed()) {
      const NetworkSpec spec = load_network(spec_file);
      const SubstructureAnalysis analysis = analyze_substructures(spec, cap);
      detail::emit(substructure_report_to_json(analysis), out_file, out);
      return kExitOk;
    }
    if (subroutine->parsed()) {
      const NetworkSpec spec = load_network(spec_file);
      const BasisPathSet basis_set = subroutine_basis(spec);
      Json doc;
      doc["paths"] = paths_to_json(basis_set.paths);
      Json stats;
      stats["m"] = EdgeIndex(spec).m();
      stats["basis_size"] = basis_set.paths.size();
      stats["direct_count"] = basis_set.direct_count;
      stats["cross_count"] = basis_set.cross_count;
      doc["stats"] = std::move(stats);
      detail::emit(doc, out_file, out);
      return kExitOk;
    }
    if (basis->parsed()) {
      const NetworkSpec spec = load_network(spec_file);
      const PipelineResult result = run_pipeline(spec, threads, cap);
      detail::emit(basis_file_to_json(result, emit_trace), out_file, out);
      const RunStats& st = result.stats;
      err << "phases (ms): analyze=" << st.ms_analyze << " bases=" << st.ms_bases
          << " eliminate=" << st.ms_eliminate << "\n";
      return kExitOk;
    }
    if (verify->parsed()) {
      const NetworkSpec spec = load_network(spec_file);
      const std::vector<Path> candidate = load_basis(basis_file);
      const CertifyResult result = certify_basis(candidate, spec, cap);
      detail::emit(certify_to_json(result), out_file, out);
      return result.verdict == Verdict::IsBasis ? kExitOk : kExitVerifyFailed;
    }
    if (oracle_rank->parsed()) {
      const NetworkSpec spec = load_network(spec_file);
      const PathSpace space = path_space(spec, cap);
      Json doc;
      doc["path_count"] = space.all_paths.size();
      doc["edge_count"] = EdgeIndex(spec).m();
      doc["rank"] = space.rank;
      detail::emit(doc, out_file, out);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << errc_name(e.code()) << ": " << e.what() << "\n";
    return detail::exit_code_for(e);
  }
  return kExitInvalid;
}

}  // namespace bpk
