#include "phit/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "phit/combinat.hpp"
#include "phit/drinfeld.hpp"
#include "phit/io.hpp"
#include "phit/version.hpp"

namespace phit {
namespace {

struct CheckLine {
  std::string name;
  std::string status;  // pass | fail | skipped
  double seconds = 0;
};

std::vector<std::string> split_checks(const std::string& raw) {
  if (raw == "all") return all_check_names();
  std::vector<std::string> picked;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    bool known = false;
    for (const auto& name : all_check_names()) known = known || name == item;
    if (!known) throw UsageError("unknown check: " + item);
    picked.push_back(item);
  }
  if (picked.empty()) throw UsageError("no checks selected");
  // canonical order, duplicates dropped
  std::vector<std::string> ordered;
  for (const auto& name : all_check_names())
    for (const auto& sel : picked)
      if (sel == name) {
        ordered.push_back(name);
        break;
      }
  return ordered;
}

uint64_t require_prime_power(uint64_t q) {
  try {
    factor_prime_power(q);
  } catch (const std::invalid_argument&) {
    throw UsageError("q must be a prime power");
  }
  return q;
}

unsigned min_extension_degree(uint64_t q) {
  unsigned k = 1;
  long double size = (long double)q;
  while (size < 65536.0L) {
    size *= (long double)q;
    ++k;
  }
  return k;
}

// All prime powers <= bound, ascending.
std::vector<uint64_t> prime_powers_upto(uint64_t bound) {
  std::vector<uint64_t> out;
  for (uint64_t p = 2; p <= bound; ++p) {
    bool prime = true;
    for (uint64_t d = 2; d * d <= p; ++d)
      if (p % d == 0) {
        prime = false;
        break;
      }
    if (!prime) continue;
    for (uint64_t q = p; q <= bound; q *= p) {
      out.push_back(q);
      if (q > bound / p) break;
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

class ReportWriter {
 public:
  ReportWriter(const RunConfig& cfg, std::ostream& os) : cfg_(cfg), os_(os) {}

  void header(const std::string& command) {
    os_ << "phit " << kVersion << "\n";
    os_ << "command: " << command << "\n";
    json_["version"] = kVersion;
    json_["command"] = command;
  }
  void meta(const std::string& key, const std::string& value) {
    os_ << key << ": " << value << "\n";
    json_[key] = value;
  }
  void meta(const std::string& key, uint64_t value) {
    os_ << key << ": " << value << "\n";
    json_[key] = value;
  }
  void check(const CheckLine& line) {
    os_ << "check " << line.name << ": " << line.status;
    if (cfg_.timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " (%.3fs)", line.seconds);
      os_ << buf;
    }
    os_ << "\n";
    nlohmann::ordered_json j;
    j["name"] = line.name;
    j["status"] = line.status;
    if (cfg_.timings) j["seconds"] = line.seconds;
    json_["checks"].push_back(std::move(j));
    if (line.status == "fail") failed_ = true;
  }
  int finish() {
    os_ << "result: " << (failed_ ? "fail" : "pass") << "\n";
    json_["result"] = failed_ ? "fail" : "pass";
    if (!cfg_.report_json.empty()) {
      std::ofstream jf(cfg_.report_json);
      if (!jf) {
        std::cerr << "error: cannot write " << cfg_.report_json << "\n";
        return 3;
      }
      jf << json_.dump(2) << "\n";
    }
    return failed_ ? 1 : 0;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& os_;
  nlohmann::ordered_json json_;
  bool failed_ = false;
};

// Run one named check; returns pass/fail/skipped.
std::string run_check(const std::string& name, const RunConfig& cfg,
                      const ModularPoly& phi) {
  uint64_t q = phi.q;
  if (name == "boundary") return verify_boundary(phi).ok() ? "pass" : "fail";
  if (name == "substitution") return verify_substitution(phi) ? "pass" : "fail";
  if (name == "ratio") {
    if (q < 3) return "skipped";
    return verify_ratio(phi) ? "pass" : "fail";
  }
  if (name == "intermediates")
    return verify_proof_intermediates(q).ok() ? "pass" : "fail";
  if (name == "oracle-interp") {
    unsigned k = min_extension_degree(q);
    Rng root(cfg.seed);
    for (unsigned t = 0; t < cfg.trials; ++t) {
      auto res = oracle_interpolate(phi, k, root.fork(t).next());
      if (!res.ok) return "fail";
    }
    return "pass";
  }
  if (name == "oracle-resultant") {
    unsigned k = min_extension_degree(q);
    auto res = oracle_resultant_points(phi, k, cfg.trials, cfg.seed);
    return res.ok ? "pass" : "fail";
  }
  if (name == "catalan") return verify_catalan_identity(q).ok ? "pass" : "fail";
  if (name == "char0") {
    for (unsigned e = 2; e <= cfg.e_max; ++e)
      if (!verify_char0_identity(e).ok) return "fail";
    return "pass";
  }
  if (name == "tower") return verify_tower_relation(q) ? "pass" : "fail";
  if (name == "zero-window") {
    if (q < 4) return "skipped";
    return verify_zero_window(q) ? "pass" : "fail";
  }
  throw std::logic_error("unknown check name");
}

int run_verify(const RunConfig& cfg, std::ostream& os) {
  ReportWriter rep(cfg, os);
  rep.header("verify");
  auto [p, e] = factor_prime_power(cfg.q);
  rep.meta("q", cfg.q);
  rep.meta("p", uint64_t(p));
  rep.meta("e", uint64_t(e));
  rep.meta("seed", cfg.seed);
  rep.meta("trials", uint64_t(cfg.trials));
  ModularPoly phi;
  if (cfg.in.empty()) {
    phi = expand_phi(cfg.q);
  } else {
    std::ifstream f(cfg.in);
    if (!f) {
      std::cerr << "error: cannot read " << cfg.in << "\n";
      return 3;
    }
    std::stringstream buf;
    buf << f.rdbuf();
    try {
      phi = import_phi_json(buf.str());
    } catch (const std::exception& ex) {
      std::cerr << "error: " << cfg.in << ": " << ex.what() << "\n";
      return 3;
    }
    if (phi.q != cfg.q) throw UsageError("--q does not match the stored polynomial");
  }
  rep.meta("terms", uint64_t(phi.terms.size()));
  rep.meta("max_deg_T", uint64_t(phi.max_deg_t()));
  for (const auto& name : cfg.checks) {
    auto t0 = std::chrono::steady_clock::now();
    CheckLine line;
    line.name = name;
    line.status = run_check(name, cfg, phi);
    line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.check(line);
  }
  return rep.finish();
}

int run_identity(const RunConfig& cfg, std::ostream& os) {
  ReportWriter rep(cfg, os);
  rep.header("identity");
  rep.meta("q-max", uint64_t(cfg.q_max));
  rep.meta("e-max", uint64_t(cfg.e_max));
  auto timed = [&](const std::string& name, auto&& body) {
    auto t0 = std::chrono::steady_clock::now();
    CheckLine line;
    line.name = name;
    line.status = body() ? "pass" : "fail";
    line.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.check(line);
  };
  timed("char0[e=2.." + std::to_string(cfg.e_max) + "]", [&] {
    for (unsigned e = 2; e <= cfg.e_max; ++e)
      if (!verify_char0_identity(e).ok) return false;
    return true;
  });
  std::vector<uint64_t> qs = prime_powers_upto(cfg.q_max);
  timed("catalan[q<=" + std::to_string(cfg.q_max) + "]", [&] {
    for (uint64_t q : qs)
      if (!verify_catalan_identity(q).ok) return false;
    return true;
  });
  timed("zero-window[q<=" + std::to_string(cfg.q_max) + "]", [&] {
    for (uint64_t q : qs)
      if (q >= 4 && !verify_zero_window(q)) return false;
    return true;
  });
  timed("tower[q<=" + std::to_string(cfg.q_max) + "]", [&] {
    for (uint64_t q : qs)
      if (!verify_tower_relation(q)) return false;
    return true;
  });
  return rep.finish();
}

int with_output(const RunConfig& cfg, int (*body)(const RunConfig&, std::ostream&)) {
  if (cfg.out.empty()) return body(cfg, std::cout);
  std::ofstream f(cfg.out);
  if (!f) {
    std::cerr << "error: cannot write " << cfg.out << "\n";
    return 3;
  }
  return body(cfg, f);
}

int run_compute(const RunConfig& cfg, std::ostream& os) {
  ModularPoly phi = expand_phi(cfg.q);
  os << export_phi(phi, parse_format(cfg.format));
  return os.good() ? 0 : 3;
}

int run_export(const RunConfig& cfg, std::ostream& os) {
  std::ifstream f(cfg.in);
  if (!f) {
    std::cerr << "error: cannot read " << cfg.in << "\n";
    return 3;
  }
  std::stringstream buf;
  buf << f.rdbuf();
  ModularPoly phi;
  try {
    phi = import_phi_json(buf.str());
  } catch (const std::exception& ex) {
    std::cerr << "error: " << cfg.in << ": " << ex.what() << "\n";
    return 3;
  }
  if (phi.q != cfg.q) throw UsageError("--q does not match the stored polynomial");
  os << export_phi(phi, parse_format(cfg.format));
  return os.good() ? 0 : 3;
}

}  // namespace

const std::vector<std::string>& all_check_names() {
  static const std::vector<std::string> names = {
      "boundary",      "substitution",     "ratio",   "intermediates",
      "oracle-interp", "oracle-resultant", "catalan", "char0",
      "tower",         "zero-window"};
  return names;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  CLI::App app{"exact construction and verification of the Drinfeld modular polynomial Phi_T"};
  app.name("phit");
  app.require_subcommand(1);

  RunConfig cfg;
  uint64_t qval = 0;
  std::string checks_raw = "all";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--seed", cfg.seed, "seed for all randomized oracles");
    sub->add_option("--out", cfg.out, "output path (default: standard output)");
  };

  auto* compute = app.add_subcommand("compute", "expand Phi_T and export it");
  compute->add_option("--q", qval, "prime power level parameter")->required();
  compute->add_option("--format", cfg.format, "text | json | cas");
  add_common(compute);

  auto* verify = app.add_subcommand("verify", "run verification checks against Phi_T");
  verify->add_option("--q", qval, "prime power level parameter")->required();
  verify->add_option("--in", cfg.in, "verify a stored JSON export instead of expanding");
  verify->add_option("--checks", checks_raw, "comma list or 'all'");
  verify->add_option("--trials", cfg.trials, "oracle trial count");
  verify->add_option("--e-max", cfg.e_max, "upper e for the char0 sweep");
  verify->add_option("--report-json", cfg.report_json, "machine-readable report path");
  verify->add_flag("--timings", cfg.timings, "include wall times (breaks byte reproducibility)");
  add_common(verify);

  auto* identity = app.add_subcommand("identity", "run the combinatorial identity sweeps");
  identity->add_option("--q-max", cfg.q_max, "sweep prime powers up to this bound");
  identity->add_option("--e-max", cfg.e_max, "sweep char0 exponents up to this bound");
  identity->add_option("--report-json", cfg.report_json, "machine-readable report path");
  identity->add_flag("--timings", cfg.timings, "include wall times");
  add_common(identity);

  auto* exp = app.add_subcommand("export", "re-emit a stored JSON export in another format");
  exp->add_option("--q", qval, "prime power level parameter")->required();
  exp->add_option("--in", cfg.in, "stored JSON export")->required();
  exp->add_option("--format", cfg.format, "text | json | cas");
  add_common(exp);

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);  // CLI11 consumes the vector in reverse
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& ex) {
    throw UsageError(ex.what());
  }

  if (compute->parsed()) cfg.cmd = RunConfig::Cmd::compute;
  if (verify->parsed()) cfg.cmd = RunConfig::Cmd::verify;
  if (identity->parsed()) cfg.cmd = RunConfig::Cmd::identity;
  if (exp->parsed()) cfg.cmd = RunConfig::Cmd::export_cmd;

  if (cfg.cmd != RunConfig::Cmd::identity) cfg.q = require_prime_power(qval);
  if (cfg.cmd == RunConfig::Cmd::verify) cfg.checks = split_checks(checks_raw);
  parse_format(cfg.format);  // validate early
  return cfg;
}

int run_cli(const RunConfig& cfg) {
  switch (cfg.cmd) {
    case RunConfig::Cmd::compute:
      return with_output(cfg, run_compute);
    case RunConfig::Cmd::verify:
      return with_output(cfg, run_verify);
    case RunConfig::Cmd::identity:
      return with_output(cfg, run_identity);
    case RunConfig::Cmd::export_cmd:
      return with_output(cfg, run_export);
  }
  return 1;
}

}  // namespace phit
