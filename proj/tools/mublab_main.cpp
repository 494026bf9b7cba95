// mublab: constructions and diagnostics for maximal MUB sets and maximal
// commuting operator classes.
//
// Exit codes: 0 success, 1 validation/check failure, 2 closure cap exceeded,
// 3 input error.

#include <CLI11.hpp>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>

#include "mublab/json_io.hpp"
#include "mublab/mub.hpp"
#include "mublab/pipeline.hpp"

namespace {

using nlohmann::json;
using namespace mublab;

constexpr int kOk = 0;
constexpr int kValidationFailure = 1;
constexpr int kCapExceeded = 2;
constexpr int kInputError = 3;

struct RunConfig {
  int d = 0;
  int N = 1;
  std::string in;
  std::string out;
  std::size_t cap = kDefaultClosureCap;
  double tol = 0.0;  // override for eq_tol when > 0
  std::string format = "json";
  std::size_t enumerate = 0;

  ToleranceConfig tolerances() const {
    ToleranceConfig cfg;
    if (tol > 0.0) cfg.eq_tol = tol;
    cfg.validate();
    return cfg;
  }
};

void emit(const RunConfig& cfg, const json& artifact) {
  if (cfg.out.empty()) {
    std::cout << artifact.dump(2) << "\n";
  } else {
    write_json_file(cfg.out, artifact);
  }
}

void emit_report(const RunConfig& cfg, const json& report, const std::string& text_summary) {
  if (!cfg.out.empty()) write_json_file(cfg.out, report);
  if (cfg.format == "text") {
    std::cout << text_summary << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
}

int cmd_construct_spread(const RunConfig& cfg) {
  if (!is_prime(cfg.d) || cfg.N < 1) {
    std::cerr << "error: --d must be prime and --N >= 1\n";
    return kInputError;
  }
  if (cfg.enumerate > 0) {
    std::vector<Spread> spreads =
        enumerate_spreads(canonical_form(cfg.d, cfg.N), cfg.enumerate);
    json all = json::array();
    for (const Spread& s : spreads) all.push_back(spread_to_json(s));
    emit(cfg, all);
    return kOk;
  }
  emit(cfg, spread_to_json(desarguesian_spread(cfg.d, cfg.N)));
  return kOk;
}

int cmd_construct_pauli_mcc(const RunConfig& cfg) {
  if (!is_prime(cfg.d) || cfg.N < 1) {
    std::cerr << "error: --d must be prime and --N >= 1\n";
    return kInputError;
  }
  emit(cfg, symbolic_mcc_to_json(gamma_inverse(desarguesian_spread(cfg.d, cfg.N))));
  return kOk;
}

int cmd_map_beta(const RunConfig& cfg) {
  json j = load_json_file(cfg.in);
  ToleranceConfig tols = cfg.tolerances();
  NumericMcc mcc;
  if (is_symbolic_mcc_json(j)) {
    SymbolicMcc sym = symbolic_mcc_from_json(j);
    MccValidation sym_check = validate_mcc(sym);
    if (!sym_check.ok()) {
      std::cerr << "error: input MCC fails validation: " << sym_check.first_failure << "\n";
      return kValidationFailure;
    }
    mcc = to_numeric(sym);
  } else {
    mcc = numeric_mcc_from_json(j);
  }
  MccValidation check = validate_mcc(mcc, tols);
  if (!check.ok()) {
    std::cerr << "error: input MCC fails validation: " << check.first_failure << "\n";
    return kValidationFailure;
  }
  emit(cfg, mub_to_json(beta(mcc, tols)));
  return kOk;
}

int cmd_map_alpha(const RunConfig& cfg) {
  json j = load_json_file(cfg.in);
  ToleranceConfig tols = cfg.tolerances();
  MubSet mub = mub_from_json(j);
  MubValidation check = validate_mub(mub, tols);
  if (!check.ok() || !mub.is_maximal()) {
    std::cerr << "error: input MUB set fails validation or is not maximal\n";
    return kValidationFailure;
  }
  emit(cfg, numeric_mcc_to_json(alpha(mub, tols)));
  return kOk;
}

int cmd_verify(const RunConfig& cfg, const std::string& kind) {
  json j = load_json_file(cfg.in);
  ToleranceConfig tols = cfg.tolerances();
  json report;
  bool ok = false;
  if (kind == "spread") {
    Spread s = spread_from_json(j);
    SpreadValidation v = validate_spread(canonical_form(s.d, s.N), s);
    report = validation_to_json(v);
    ok = v.ok();
  } else if (kind == "mcc") {
    MccValidation v;
    if (is_symbolic_mcc_json(j)) {
      v = validate_mcc(symbolic_mcc_from_json(j));
    } else {
      v = validate_mcc(numeric_mcc_from_json(j), tols);
    }
    report = validation_to_json(v);
    ok = v.ok();
  } else {
    MubValidation v = validate_mub(mub_from_json(j), tols);
    report = validation_to_json(v);
    ok = v.ok();
  }
  emit_report(cfg, report,
              ok ? "ok" : "FAIL: " + report.value("first_failure", std::string{}));
  return ok ? kOk : kValidationFailure;
}

int cmd_analyze(const RunConfig& cfg) {
  json j = load_json_file(cfg.in);
  ToleranceConfig tols = cfg.tolerances();
  AnalysisReport report;
  if (is_symbolic_mcc_json(j)) {
    SymbolicMcc sym = symbolic_mcc_from_json(j);
    if (!validate_mcc(sym).ok()) {
      std::cerr << "error: input MCC fails validation\n";
      return kValidationFailure;
    }
    report = analyze_mcc(sym, cfg.cap, tols);
  } else {
    NumericMcc mcc = numeric_mcc_from_json(j);
    if (!validate_mcc(mcc, tols).ok()) {
      std::cerr << "error: input MCC fails validation\n";
      return kValidationFailure;
    }
    report = analyze_mcc(mcc, cfg.cap, tols);
  }
  json out = analysis_to_json(report);
  std::string summary = "order " + (report.closure_cap_exceeded
                                        ? std::string("CAP_EXCEEDED")
                                        : std::to_string(report.order));
  emit_report(cfg, out, summary);
  return report.cap_exceeded_anywhere() ? kCapExceeded : kOk;
}

int cmd_demo(const RunConfig& cfg) {
  std::int64_t dim = 1;
  for (int i = 0; i < cfg.N; ++i) dim *= cfg.d;
  if (!is_prime(cfg.d) || cfg.d == 2 || cfg.N < 2 || dim > 9) {
    std::cerr << "error: demo requires an odd prime d with N >= 2 and d^N <= 9\n";
    return kInputError;
  }
  BetaNonInjectivityReport report = demo_beta_noninjective(cfg.d, cfg.N, cfg.cap,
                                                           cfg.tolerances());
  std::string summary =
      std::string(report.ok() ? "ok" : "FAIL") + ": mub_images_equal=" +
      (report.mub_images_equal ? "true" : "false") + ", certificate=" +
      (report.certificate.conclusive ? report.certificate.invariant : "INCONCLUSIVE");
  emit_report(cfg, demo_to_json(report), summary);
  return report.ok() ? kOk : kValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maximal MUB / MCC construction and analysis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* cmd, bool needs_in) {
    cmd->add_option("--out", cfg.out, "output path (stdout if omitted)");
    cmd->add_option("--cap", cfg.cap, "closure element cap")->capture_default_str();
    cmd->add_option("--tol", cfg.tol, "equality tolerance override");
    cmd->add_option("--format", cfg.format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    if (needs_in) cmd->add_option("--in", cfg.in, "input path")->required();
  };

  CLI::App* construct = app.add_subcommand("construct", "build spreads and Pauli MCCs");
  construct->require_subcommand(1);
  CLI::App* c_spread = construct->add_subcommand("spread", "Desarguesian spread of W_{2N-1}(d)");
  c_spread->add_option("--d", cfg.d, "prime modulus")->required();
  c_spread->add_option("--N", cfg.N, "qudit count")->required();
  c_spread->add_option("--enumerate", cfg.enumerate,
                       "exhaustively enumerate spreads up to this count (d^N <= 9)");
  add_common(c_spread, false);
  CLI::App* c_pauli = construct->add_subcommand("pauli-mcc", "gamma^{-1} of the spread");
  c_pauli->add_option("--d", cfg.d, "prime modulus")->required();
  c_pauli->add_option("--N", cfg.N, "qudit count")->required();
  add_common(c_pauli, false);

  CLI::App* map_cmd = app.add_subcommand("map", "apply alpha or beta");
  map_cmd->require_subcommand(1);
  CLI::App* m_alpha = map_cmd->add_subcommand("alpha", "MUB set -> spectral MCC");
  add_common(m_alpha, true);
  CLI::App* m_beta = map_cmd->add_subcommand("beta", "MCC -> common-eigenbasis MUB set");
  add_common(m_beta, true);

  CLI::App* verify = app.add_subcommand("verify", "validate an artifact file");
  verify->require_subcommand(1);
  CLI::App* v_spread = verify->add_subcommand("spread", "spread conditions");
  add_common(v_spread, true);
  CLI::App* v_mcc = verify->add_subcommand("mcc", "MCC conditions");
  add_common(v_mcc, true);
  CLI::App* v_mub = verify->add_subcommand("mub", "orthonormality and unbiasedness");
  add_common(v_mub, true);

  CLI::App* analyze = app.add_subcommand("analyze", "closure invariants and fingerprint");
  add_common(analyze, true);

  CLI::App* demo = app.add_subcommand("demo", "reproducible demonstrations");
  demo->require_subcommand(1);
  CLI::App* d_noninj =
      demo->add_subcommand("beta-noninjective", "two non-isomorphic MCCs, one MUB set");
  d_noninj->add_option("--d", cfg.d, "odd prime")->required();
  d_noninj->add_option("--N", cfg.N, "qudit count >= 2")->required();
  add_common(d_noninj, false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_spread->parsed()) return cmd_construct_spread(cfg);
    if (c_pauli->parsed()) return cmd_construct_pauli_mcc(cfg);
    if (m_alpha->parsed()) return cmd_map_alpha(cfg);
    if (m_beta->parsed()) return cmd_map_beta(cfg);
    if (v_spread->parsed()) return cmd_verify(cfg, "spread");
    if (v_mcc->parsed()) return cmd_verify(cfg, "mcc");
    if (v_mub->parsed()) return cmd_verify(cfg, "mub");
    if (analyze->parsed()) return cmd_analyze(cfg);
    if (d_noninj->parsed()) return cmd_demo(cfg);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed input: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
