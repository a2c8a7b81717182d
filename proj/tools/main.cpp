// Command-line interface: every decomposition, predicate, and adapter
// operation over JSON files, with deterministic machine-readable output and a
// short text mode for inspection.
//
// Exit codes: 0 success, 1 mathematical error (reported by name on stderr),
// 2 I/O or parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lebdecomp/lebdecomp.hpp"

namespace {

using namespace lebdecomp;

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;
  Tolerance tol;
  std::string output;         // empty: stdout
  std::string format = "json";
};

struct LoadedFile {
  std::string path;
  std::string bytes;
  Json parsed;
};

LoadedFile load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedFile out{path, buf.str(), {}};
  try {
    out.parsed = Json::parse(out.bytes);
  } catch (const Json::exception& e) {
    throw Error(Errc::parse_error, path + ": " + e.what());
  }
  return out;
}

std::string hash_hex(const std::string& bytes) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "0x%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

OrderedJson tolerance_to_json(const Tolerance& t) {
  OrderedJson out;
  out["rel_rank"] = t.rel_rank;
  out["abs_zero"] = t.abs_zero;
  out["psd_slack"] = t.psd_slack;
  out["conv_tol"] = t.conv_tol;
  return out;
}

OrderedJson report_to_json(const CheckReport& report) {
  OrderedJson out;
  out["verdict"] = report.verdict;
  OrderedJson items = OrderedJson::array();
  for (const Characterization& c : report.items) {
    OrderedJson item;
    item["name"] = c.name;
    item["verdict"] = c.verdict;
    item["residual"] = c.residual;
    items.push_back(std::move(item));
  }
  out["characterizations"] = std::move(items);
  return out;
}

std::string format_g(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string eigenvalue_line(const PsdMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.eigenvalues().size(); ++i) {
    if (i) out += ' ';
    out += format_g(m.eigenvalues()[i]);
  }
  return out;
}

std::string report_text(const CheckReport& report) {
  std::string out = std::string("verdict: ") + (report.verdict ? "true" : "false") + "\n";
  for (const Characterization& c : report.items)
    out += "  " + c.name + ": " + (c.verdict ? "true" : "false") + " (residual " +
           format_g(c.residual) + ")\n";
  return out;
}

struct CommandOutput {
  OrderedJson result;
  std::string text;
};

CommandOutput run_command(const RunConfig& cfg, const std::vector<LoadedFile>& files) {
  CommandOutput out;
  const auto psd_input = [&](std::size_t i) {
    return make_psd(matrix_from_json(files[i].parsed), cfg.tol);
  };

  if (cfg.command == "decompose") {
    const DecompositionResult d = decompose(psd_input(0), psd_input(1));
    out.result["b_abs"] = matrix_to_json(d.b_abs.entries());
    out.result["b_sing"] = matrix_to_json(d.b_sing.entries());
    out.result["m_dim"] = d.m_basis.dim();
    out.result["m_basis"] = matrix_to_json(d.m_basis.vectors);
    out.result["projection_p"] = matrix_to_json(d.projection_p);
    out.result["sqrt_b"] = matrix_to_json(d.sqrt_b.entries());
    out.text = "B_a eigenvalues: " + eigenvalue_line(d.b_abs) +
               "\nB_s eigenvalues: " + eigenvalue_line(d.b_sing) +
               "\ndim M: " + std::to_string(d.m_basis.dim()) + "\n";
  } else if (cfg.command == "parallel-sum") {
    const PsdMatrix p = parallel_sum(psd_input(0), psd_input(1));
    out.result["matrix"] = matrix_to_json(p.entries());
    out.text = "eigenvalues: " + eigenvalue_line(p) + "\n";
  } else if (cfg.command == "limit") {
    const PsdMatrix p = limit_ab(psd_input(0), psd_input(1));
    out.result["matrix"] = matrix_to_json(p.entries());
    out.text = "eigenvalues: " + eigenvalue_line(p) + "\n";
  } else if (cfg.command == "check-ac") {
    const CheckReport r = check_ac(psd_input(0), psd_input(1));
    out.result = report_to_json(r);
    out.text = report_text(r);
  } else if (cfg.command == "check-singular") {
    const CheckReport r = check_singular(psd_input(0), psd_input(1));
    out.result = report_to_json(r);
    out.text = report_text(r);
  } else if (cfg.command == "check-mutual") {
    const bool v = check_mutual_ac(psd_input(0), psd_input(1));
    out.result["verdict"] = v;
    out.text = std::string("verdict: ") + (v ? "true" : "false") + "\n";
  } else if (cfg.command == "douglas") {
    const DouglasSolution sol = douglas_solve(matrix_from_json(files[0].parsed),
                                              matrix_from_json(files[1].parsed), cfg.tol);
    out.result["factor_d"] = matrix_to_json(sol.factor_d);
    out.result["alpha_min"] = sol.alpha_min;
    out.text = "alpha_min: " + format_g(sol.alpha_min) + "\n";
  } else if (cfg.command == "alpha") {
    const double a = domination_alpha(psd_input(0), psd_input(1));
    out.result["alpha"] = a;
    out.text = "alpha: " + format_g(a) + "\n";
  } else if (cfg.command == "rn-witness") {
    const RnWitness w =
        rn_witness(psd_input(0), psd_input(1), vector_from_json(files[2].parsed));
    out.result["z"] = vector_to_json(w.z);
    out.result["residual"] = w.residual;
    out.text = "residual: " + format_g(w.residual) + "\n";
  } else if (cfg.command == "form") {
    const auto [ta, ts] = form_decompose(form_from_json(files[0].parsed, cfg.tol),
                                         form_from_json(files[1].parsed, cfg.tol));
    out.result["t_abs"] = form_to_json(ta);
    out.result["t_sing"] = form_to_json(ts);
    out.text = "t_a eigenvalues: " + eigenvalue_line(ta.gram) +
               "\nt_s eigenvalues: " + eigenvalue_line(ts.gram) + "\n";
  } else if (cfg.command == "measure") {
    const auto [ba, bs] = measure_decompose(measure_from_json(files[0].parsed),
                                            measure_from_json(files[1].parsed), cfg.tol);
    out.result["beta_abs"] = measure_to_json(ba);
    out.result["beta_sing"] = measure_to_json(bs);
    out.text = "beta_a total: " + format_g(ba.total()) +
               "\nbeta_s total: " + format_g(bs.total()) + "\n";
  } else if (cfg.command == "functional") {
    const auto [ga, gs] =
        functional_decompose(functional_from_json(files[0].parsed, cfg.tol),
                             functional_from_json(files[1].parsed, cfg.tol));
    out.result["g_abs"] = functional_to_json(ga);
    out.result["g_sing"] = functional_to_json(gs);
    out.text = "g_a cyclic norm: " + format_g(ga.cyclic_norm) +
               "\ng_s cyclic norm: " + format_g(gs.cyclic_norm) + "\n";
  } else if (cfg.command == "induces-measure") {
    const bool v = induces_measure(psd_input(0));
    out.result["verdict"] = v;
    out.text = std::string("verdict: ") + (v ? "true" : "false") + "\n";
  } else {
    throw Error(Errc::parse_error, "unknown command: " + cfg.command);
  }
  return out;
}

int run(const RunConfig& cfg) {
  std::vector<LoadedFile> files;
  for (const std::string& path : cfg.inputs) files.push_back(load_json_file(path));

  const CommandOutput cmd = run_command(cfg, files);

  std::string rendered;
  if (cfg.format == "json") {
    OrderedJson doc;
    doc["command"] = cfg.command;
    OrderedJson inputs = OrderedJson::array();
    for (const LoadedFile& f : files) {
      OrderedJson rec;
      rec["path"] = f.path;
      rec["fnv1a64"] = hash_hex(f.bytes);
      inputs.push_back(std::move(rec));
    }
    doc["inputs"] = std::move(inputs);
    doc["tolerance"] = tolerance_to_json(cfg.tol);
    doc["result"] = cmd.result;
    rendered = write_json(doc);
  } else {
    rendered = "command: " + cfg.command + "\n" + cmd.text;
  }

  if (cfg.output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream outf(cfg.output, std::ios::binary);
    if (!outf) throw Error(Errc::parse_error, "cannot open output file: " + cfg.output);
    outf << rendered;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lebesgue-type decomposition of positive semidefinite matrices"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--tol-rank", cfg.tol.rel_rank, "relative eigenvalue rank cutoff")
        ->envname("LEBDECOMP_TOL_RANK");
    sub->add_option("--tol-abs", cfg.tol.abs_zero, "absolute eigenvalue cutoff");
    sub->add_option("--tol-psd", cfg.tol.psd_slack, "permitted relative negativity");
    sub->add_option("--tol-conv", cfg.tol.conv_tol, "iteration stopping threshold");
    sub->add_option("--output,-o", cfg.output, "write the result to a file");
    sub->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
  };

  const auto add_sub = [&](const std::string& name, const std::string& desc,
                           std::vector<std::string> args) {
    CLI::App* sub = app.add_subcommand(name, desc);
    for (const std::string& arg : args)
      sub->add_option(arg, "input file (JSON)")->required();
    add_common(sub);
    sub->callback([&cfg, sub, name]() {
      cfg.command = name;
      cfg.inputs.clear();
      for (const CLI::Option* opt : sub->get_options())
        if (opt->get_positional() && opt->count())
          cfg.inputs.push_back(opt->results().front());
    });
    return sub;
  };

  add_sub("decompose", "split B into parts absolutely continuous and singular w.r.t. A",
          {"A", "B"});
  add_sub("parallel-sum", "parallel sum A : B", {"A", "B"});
  add_sub("limit", "limit of (2^k A) : B, the absolutely continuous part", {"A", "B"});
  add_sub("check-ac", "absolute continuity of B w.r.t. A, three characterizations",
          {"A", "B"});
  add_sub("check-singular", "mutual singularity of A and B, four characterizations",
          {"A", "B"});
  add_sub("check-mutual", "mutual absolute continuity of the canonical parts", {"A", "B"});
  add_sub("douglas", "solve T1 = T2 D under range inclusion", {"T1", "T2"});
  add_sub("alpha", "least alpha with B_a <= alpha A", {"A", "B"});
  add_sub("rn-witness", "least-squares approximation witness for B y by A z",
          {"A", "B", "y"});
  add_sub("form", "decompose form T with respect to form W", {"T", "W"});
  add_sub("measure", "decompose measure beta with respect to measure alpha",
          {"alpha", "beta"});
  add_sub("functional", "decompose functional g with respect to functional f", {"f", "g"});
  add_sub("induces-measure", "whether a positive matrix is induced by a measure", {"A"});

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    cfg.tol.validate();
    return run(cfg);
  } catch (const Error& e) {
    std::cerr << e.name() << ": " << e.what() << "\n";
    return e.code() == Errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "InternalError: " << e.what() << "\n";
    return 1;
  }
}
