#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>
#include <set>

#include "e6kkr/bijection.hpp"
#include "e6kkr/crystal.hpp"
#include "e6kkr/energy.hpp"
#include "e6kkr/rigged.hpp"
#include "e6kkr/tensor.hpp"
#include "e6kkr/text_io.hpp"
#include "e6kkr/verify.hpp"

namespace e6kkr::cli {

namespace {

struct EnumerateArgs {
  int length = 0;
  std::string weight;
  unsigned jobs = 1;
};

void add_enumerate_options(CLI::App& sub, EnumerateArgs& args) {
  sub.add_option("--length,-L", args.length, "Path length L")->required()->check(CLI::NonNegativeNumber);
  sub.add_option("--weight,-w", args.weight, "Dominant weight 'l1,...,l6'; all weights if omitted");
  sub.add_option("--jobs,-j", args.jobs, "Worker threads")->check(CLI::PositiveNumber);
}

// The requested weight, or every weight that can occur at this length.
std::vector<Weight> selected_weights(const EnumerateArgs& args) {
  if (!args.weight.empty()) return {parse_weight(args.weight)};
  std::set<Weight> weights;
  for (const Weight& w : candidate_weights(args.length)) weights.insert(w);
  for (const auto& [w, paths] : enumerate_all_hw(args.length, args.jobs)) weights.insert(w);
  return {weights.begin(), weights.end()};
}

int cmd_graph_dump(std::ostream& out) {
  for (const Edge& edge : CrystalGraph::instance().edges()) {
    out << edge.source.id() << ' ' << edge.color << ' ' << edge.sink.id() << '\n';
  }
  return kExitOk;
}

int cmd_graph_verify(std::ostream& out) {
  const CrystalGraph& graph = CrystalGraph::instance();
  out << "vertices=" << kCrystalSize << " edges=" << graph.edges().size()
      << " source=1 sink=" << kCrystalSize << " invariants=ok\n";
  const GraphLemmaReport report = verify_graph_lemma();
  out << "routes=" << report.routes << '\n';
  for (std::size_t item = 0; item < report.counterexamples.size(); ++item) {
    out << "item" << item + 1 << " applicable=" << report.applicable[item]
        << " counterexamples=" << report.counterexamples[item].size() << '\n';
    for (const Route& route : report.counterexamples[item]) out << "  " << route.to_string() << '\n';
  }
  out << "RESULT " << (report.ok() ? "pass" : "fail") << '\n';
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

int cmd_paths(const EnumerateArgs& args, std::ostream& out) {
  const auto all = enumerate_all_hw(args.length, args.jobs);
  const bool single = !args.weight.empty();
  for (const Weight& w : selected_weights(args)) {
    auto it = all.find(w);
    const std::size_t count = (it == all.end() || !w.is_dominant()) ? 0 : it->second.size();
    if (!single) out << "# weight " << w.to_string() << " count=" << count << '\n';
    if (count == 0) continue;
    for (const Path& path : it->second) out << format_path(path) << '\n';
  }
  return kExitOk;
}

int cmd_rcs(const EnumerateArgs& args, std::ostream& out) {
  const bool single = !args.weight.empty();
  for (const Weight& w : selected_weights(args)) {
    const auto rcs = enumerate_rcs(w, args.length, args.jobs);
    if (!single) out << "# weight " << w.to_string() << " count=" << rcs.size() << '\n';
    for (const RiggedConfiguration& rc : rcs) out << format_rc(rc) << '\n';
  }
  return kExitOk;
}

int cmd_polynomial(const EnumerateArgs& args, bool fermionic, std::ostream& out) {
  const bool single = !args.weight.empty();
  std::optional<std::map<Weight, std::vector<Path>>> all;
  if (!fermionic) all = enumerate_all_hw(args.length, args.jobs);
  for (const Weight& w : selected_weights(args)) {
    LaurentPolynomial poly;
    if (fermionic) {
      poly = fermionic_M(w, args.length, args.jobs);
    } else if (w.is_dominant()) {
      auto it = all->find(w);
      if (it != all->end()) poly = one_dim_sum(it->second);
    }
    if (!single) out << w.to_string() << ": ";
    out << poly.to_string() << '\n';
  }
  return kExitOk;
}

int report_statistics(const RiggedConfiguration& rc, const Path& path, std::ostream& out,
                      std::ostream& err) {
  const int charge = cc(rc);
  const int energy = energy_D(path);
  out << "c=" << charge << " D=" << energy << '\n';
  if (charge != energy) {
    err << "statistics disagree\n";
    return kExitVerificationFailed;
  }
  return kExitOk;
}

int cmd_phi(const std::string& file, std::ostream& out, std::ostream& err) {
  const RiggedConfiguration rc = parse_rc(read_file(file));
  if (!is_valid_rc(rc)) {
    err << "error: " << file << " is not a valid rigged configuration\n";
    return kExitBadInput;
  }
  const Path path = phi(rc);
  out << format_path(path) << '\n';
  return report_statistics(rc, path, out, err);
}

int cmd_phi_inv(const std::string& file, std::ostream& out, std::ostream& err) {
  const Path path = parse_path(read_file(file));
  if (!is_highest_weight(path) || !wt_path(path).is_dominant()) {
    err << "error: " << file << " is not a classically restricted path\n";
    return kExitBadInput;
  }
  const RiggedConfiguration rc = phi_inv(path);
  out << format_rc(rc);
  return report_statistics(rc, path, out, err);
}

int cmd_verify(const VerifyOptions& options, bool timing, std::ostream& out) {
  const VerifyReport report = run_verification(options);
  write_report(out, report, timing);
  return report.ok() ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigged configurations and highest-weight paths for the E6^(1) crystal B^{1,1}",
               "e6kkr"};
  app.require_subcommand(1);

  auto* graph = app.add_subcommand("graph", "Crystal graph B0 of B^{1,1}");
  graph->require_subcommand(1);
  auto* graph_dump = graph->add_subcommand("dump", "Print the edge list as 'src color dst'");
  auto* graph_verify = graph->add_subcommand("verify", "Check graph invariants and the route lemma");

  EnumerateArgs paths_args, rcs_args, x_args, m_args;
  auto* paths = app.add_subcommand("paths", "Enumerate classically restricted paths");
  add_enumerate_options(*paths, paths_args);
  auto* rcs = app.add_subcommand("rcs", "Enumerate rigged configurations");
  add_enumerate_options(*rcs, rcs_args);
  auto* x = app.add_subcommand("x", "One-dimensional sum X(lambda, L; q)");
  add_enumerate_options(*x, x_args);
  auto* m = app.add_subcommand("m", "Fermionic formula M(lambda, L; q)");
  add_enumerate_options(*m, m_args);

  std::string rc_file;
  auto* phi_cmd = app.add_subcommand("phi", "Map a rigged configuration to its path");
  phi_cmd->add_option("--rc", rc_file, "Rigged configuration file")->required();

  std::string path_file;
  auto* phi_inv_cmd = app.add_subcommand("phi-inv", "Map a path to its rigged configuration");
  phi_inv_cmd->add_option("--path", path_file, "Path file")->required();

  VerifyOptions verify_options;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Check X = M and the bijection for L = 0..N");
  verify->add_option("--max-length,-N", verify_options.max_length, "Largest path length")
      ->required()
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs,-j", verify_options.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--exhaustive-length", verify_options.exhaustive_bijection_length,
                     "Check the bijection on every rigged configuration up to this length");
  verify->add_option("--sample-stride", verify_options.sample_stride,
                     "Beyond the exhaustive length, check every k-th rigged configuration")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--timing", timing, "Append per-case wall-clock seconds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }

  try {
    if (*graph_dump) return cmd_graph_dump(out);
    if (*graph_verify) return cmd_graph_verify(out);
    if (*paths) return cmd_paths(paths_args, out);
    if (*rcs) return cmd_rcs(rcs_args, out);
    if (*x) return cmd_polynomial(x_args, false, out);
    if (*m) return cmd_polynomial(m_args, true, out);
    if (*phi_cmd) return cmd_phi(rc_file, out, err);
    if (*phi_inv_cmd) return cmd_phi_inv(path_file, out, err);
    if (*verify) return cmd_verify(verify_options, timing, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitVerificationFailed;
  }
  return kExitBadInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"e6kkr"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace e6kkr::cli
