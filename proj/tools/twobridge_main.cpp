// Command-line surface over the twobridge C API. JSON is the canonical
// output; text and csv renderings are derived from the parsed JSON.

#include <complex>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "twobridge/twobridge.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitComputation = 1;
constexpr int kExitInvalidInput = 2;

struct RileyHandle {
  tb_riley* ptr = nullptr;
  ~RileyHandle() { tb_riley_free(ptr); }
};

struct ConfigHandle {
  tb_config* ptr = nullptr;
  ConfigHandle() : ptr(tb_config_new()) {}
  ~ConfigHandle() { tb_config_free(ptr); }
};

struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { tb_string_free(ptr); }
};

int status_exit(tb_status status) {
  if (status == TB_OK) return kExitPass;
  std::cerr << "error (" << tb_status_name(status) << "): " << tb_last_error() << "\n";
  return status == TB_INVALID_INPUT ? kExitInvalidInput : kExitComputation;
}

bool parse_complex(const std::string& text, double& re, double& im) {
  re = 0.0;
  im = 0.0;
  const char* p = text.c_str();
  char* end = nullptr;
  const double first = std::strtod(p, &end);
  if (end == p) return false;
  if (*end == '\0') {
    re = first;
    return true;
  }
  if (*end == 'i' && *(end + 1) == '\0') {
    im = first;
    return true;
  }
  const char* q = end;
  const double second = std::strtod(q, &end);
  if (end == q || *end != 'i' || *(end + 1) != '\0') return false;
  re = first;
  im = second;
  return true;
}

struct CommonOptions {
  std::string precision = "standard";
  std::string format = "json";
  std::uint64_t seed = 1;
  std::vector<std::string> tolerance_overrides;
  std::vector<std::pair<std::string, double>> config_file_tolerances;
};

// TWOBRIDGE_CONFIG points at a JSON file with default settings; explicit
// flags override it.
bool load_env_config(CommonOptions& opts, int& trials, std::string& error) {
  const char* path = std::getenv("TWOBRIDGE_CONFIG");
  if (path == nullptr || *path == '\0') return true;
  std::ifstream in(path);
  if (!in) {
    error = std::string("cannot open config file ") + path;
    return false;
  }
  Json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    error = std::string("cannot parse config file ") + path + ": " + e.what();
    return false;
  }
  if (j.contains("precision")) opts.precision = j["precision"].get<std::string>();
  if (j.contains("seed")) opts.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("trials")) trials = j["trials"].get<int>();
  if (j.contains("tolerances"))
    for (const auto& [name, value] : j["tolerances"].items())
      opts.config_file_tolerances.emplace_back(name, value.get<double>());
  return true;
}

int apply_common(const CommonOptions& opts, ConfigHandle& config) {
  for (const auto& [name, value] : opts.config_file_tolerances)
    if (tb_config_set_tolerance(config.ptr, name.c_str(), value) != TB_OK)
      return kExitInvalidInput;
  for (const auto& override_text : opts.tolerance_overrides) {
    const auto eq = override_text.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --tolerance expects name=value, got '" << override_text << "'\n";
      return kExitInvalidInput;
    }
    const std::string name = override_text.substr(0, eq);
    char* end = nullptr;
    const double value = std::strtod(override_text.c_str() + eq + 1, &end);
    if (end == override_text.c_str() + eq + 1 || *end != '\0') {
      std::cerr << "error: bad tolerance value in '" << override_text << "'\n";
      return kExitInvalidInput;
    }
    if (tb_config_set_tolerance(config.ptr, name.c_str(), value) != TB_OK) {
      std::cerr << "error: " << tb_last_error() << "\n";
      return kExitInvalidInput;
    }
  }
  if (tb_config_set_precision(config.ptr, opts.precision.c_str()) != TB_OK) {
    std::cerr << "error: " << tb_last_error() << "\n";
    return kExitInvalidInput;
  }
  tb_config_set_seed(config.ptr, opts.seed);
  return kExitPass;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(output_path);
  out << text << "\n";
}

std::string fmt_complex(const Json& pair) {
  std::ostringstream os;
  os.precision(12);
  const double re = pair[0].get<double>();
  const double im = pair[1].get<double>();
  os << re;
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

std::string render_riley_text(const Json& j) {
  std::ostringstream os;
  os << "two-bridge knot (p, q) = (" << j["p"] << ", " << j["q"] << ")"
     << (j["hyperbolic"].get<bool>() ? "  [hyperbolic]" : "  [torus]") << "\n";
  os << "k = " << j["k"] << ", eps_k = " << j["eps_k"] << "\n";
  os << "w        = " << j["words"]["w"].get<std::string>() << "\n";
  os << "v        = " << j["words"]["v"].get<std::string>() << "\n";
  os << "v'       = " << j["words"]["v_prime"].get<std::string>() << "\n";
  os << "y        = " << j["words"]["y"].get<std::string>() << "\n";
  os << "w_dagger = " << j["words"]["w_dagger"].get<std::string>() << "\n";
  os << "r        = " << j["words"]["r"].get<std::string>() << "\n";
  os << "phi_w    = " << j["phi_w_text"].get<std::string>() << "\n";
  os << "deg_u phi_w = " << j["deg_u"] << ", leading coefficient = " << j["leading_coeff"]
     << "\n";
  os << "exact identities:\n";
  for (const auto& [name, ok] : j["identities"].items())
    os << "  " << name << ": " << (ok.get<bool>() ? "ok" : "FAILED") << "\n";
  std::string text = os.str();
  text.pop_back();
  return text;
}

std::string render_riley_csv(const Json& j) {
  std::ostringstream os;
  os << "e1,e2,e3,coefficient\n";
  for (const auto& term : j["phi_w"])
    os << term[0] << "," << term[1] << "," << term[2] << "," << term[3].get<std::string>()
       << "\n";
  std::string text = os.str();
  text.pop_back();
  return text;
}

std::string render_verify_text(const Json& j) {
  std::ostringstream os;
  os.precision(6);
  os << "verify (p, q) = (" << j["p"] << ", " << j["q"] << "), trials = " << j["trials"]
     << ", seed = " << j["seed"] << ", precision = " << j["precision"].get<std::string>()
     << "\n";
  int index = 0;
  for (const auto& report : j["reports"]) {
    os << "  trial " << index++ << ": c = " << fmt_complex(report["c"])
       << ", |fiber| = " << report["points"].size()
       << ", sum 1/T = " << fmt_complex(report["inverse_sum"])
       << ", relative residual = " << report["relative_residual"].get<double>() << "\n";
  }
  const auto& summary = j["summary"];
  os << "max relative residual = " << summary["max_relative_residual"].get<double>()
     << ", median = " << summary["median_relative_residual"].get<double>()
     << ", retries = " << summary["retries"] << "\n";
  if (summary.contains("target"))
    os << "target = " << summary["target"].get<double>()
       << ", max deviation = " << summary["max_target_deviation"].get<double>() << "\n";
  os << (j["pass"].get<bool>() ? "PASS" : "FAIL");
  return os.str();
}

std::string render_verify_csv(const Json& j) {
  std::ostringstream os;
  os.precision(17);
  os << "p,q,trial,c_re,c_im,d_re,d_im,inverse_sum_re,inverse_sum_im,relative_residual\n";
  int index = 0;
  for (const auto& report : j["reports"]) {
    os << j["p"] << "," << j["q"] << "," << index++ << "," << report["c"][0].get<double>()
       << "," << report["c"][1].get<double>() << "," << report["d"][0].get<double>() << ","
       << report["d"][1].get<double>() << "," << report["inverse_sum"][0].get<double>() << ","
       << report["inverse_sum"][1].get<double>() << ","
       << report["relative_residual"].get<double>() << "\n";
  }
  std::string text = os.str();
  text.pop_back();
  return text;
}

std::string render_oracle_text(const Json& j) {
  std::ostringstream os;
  os.precision(6);
  os << "oracle comparison (p, q) = (" << j["p"] << ", " << j["q"] << ")\n";
  for (const auto& row : j["characters"]) {
    os << "  c = " << fmt_complex(row["c"]) << ", u = " << fmt_complex(row["u"])
       << ": |formula| = " << std::abs(std::complex<double>(row["formula"][0].get<double>(),
                                                            row["formula"][1].get<double>()))
       << ", |oracle| = " << std::abs(std::complex<double>(row["oracle"][0].get<double>(),
                                                           row["oracle"][1].get<double>()))
       << ", rel diff = " << row["magnitude_rel_diff"].get<double>() << "\n";
  }
  os << "max rel diff = " << j["max_rel_diff"].get<double>() << ", sign ratio "
     << (j["sign_constant"].get<bool>() ? std::string("constant (") +
                                              std::to_string(j["sign_value"].get<int>()) + ")"
                                        : std::string("NOT constant"))
     << "\n";
  os << (j["pass"].get<bool>() ? "PASS" : "FAIL");
  return os.str();
}

std::string render_oracle_csv(const Json& j) {
  std::ostringstream os;
  os.precision(17);
  os << "p,q,c_re,c_im,u_re,u_im,formula_re,formula_im,oracle_re,oracle_im,magnitude_rel_diff\n";
  for (const auto& row : j["characters"]) {
    os << j["p"] << "," << j["q"] << "," << row["c"][0].get<double>() << ","
       << row["c"][1].get<double>() << "," << row["u"][0].get<double>() << ","
       << row["u"][1].get<double>() << "," << row["formula"][0].get<double>() << ","
       << row["formula"][1].get<double>() << "," << row["oracle"][0].get<double>() << ","
       << row["oracle"][1].get<double>() << "," << row["magnitude_rel_diff"].get<double>()
       << "\n";
  }
  std::string text = os.str();
  text.pop_back();
  return text;
}

int run_riley(int p, int q, const CommonOptions& opts, const std::string& output_path) {
  ConfigHandle config;
  const int setup = apply_common(opts, config);
  if (setup != kExitPass) return setup;
  RileyHandle riley;
  tb_status status = tb_riley_new(p, q, &riley.ptr);
  if (status != TB_OK) return status_exit(status);
  OwnedString json_text;
  status = tb_riley_json(riley.ptr, &json_text.ptr);
  if (status != TB_OK) return status_exit(status);
  const Json j = Json::parse(json_text.ptr);
  if (opts.format == "json")
    emit(j.dump(2), output_path);
  else if (opts.format == "csv")
    emit(render_riley_csv(j), output_path);
  else
    emit(render_riley_text(j), output_path);
  bool identities_ok = true;
  for (const auto& [name, ok] : j["identities"].items()) identities_ok &= ok.get<bool>();
  return identities_ok ? kExitPass : kExitComputation;
}

int run_verify(int p, int q, int trials, const std::string& c_text, bool resample,
               const CommonOptions& opts, const std::string& output_path) {
  ConfigHandle config;
  const int setup = apply_common(opts, config);
  if (setup != kExitPass) return setup;
  if (tb_config_set_trials(config.ptr, trials) != TB_OK) {
    std::cerr << "error: " << tb_last_error() << "\n";
    return kExitInvalidInput;
  }
  if (!c_text.empty()) {
    double re = 0.0, im = 0.0;
    if (!parse_complex(c_text, re, im)) {
      std::cerr << "error: cannot parse --c value '" << c_text << "'\n";
      return kExitInvalidInput;
    }
    tb_config_set_pinned_c(config.ptr, re, im, resample ? 1 : 0);
  }
  RileyHandle riley;
  tb_status status = tb_riley_new(p, q, &riley.ptr);
  if (status != TB_OK) return status_exit(status);
  OwnedString json_text;
  status = tb_verify_json(riley.ptr, config.ptr, &json_text.ptr);
  if (status != TB_OK) return status_exit(status);
  const Json j = Json::parse(json_text.ptr);
  if (opts.format == "json")
    emit(j.dump(2), output_path);
  else if (opts.format == "csv")
    emit(render_verify_csv(j), output_path);
  else
    emit(render_verify_text(j), output_path);
  return j["pass"].get<bool>() ? kExitPass : kExitComputation;
}

int run_oracle(int p, int q, int samples, bool dump_cochain, const CommonOptions& opts,
               const std::string& output_path) {
  ConfigHandle config;
  const int setup = apply_common(opts, config);
  if (setup != kExitPass) return setup;
  RileyHandle riley;
  tb_status status = tb_riley_new(p, q, &riley.ptr);
  if (status != TB_OK) return status_exit(status);
  OwnedString json_text;
  status = tb_oracle_json(riley.ptr, config.ptr, samples, dump_cochain ? 1 : 0, &json_text.ptr);
  if (status != TB_OK) return status_exit(status);
  const Json j = Json::parse(json_text.ptr);
  if (opts.format == "json")
    emit(j.dump(2), output_path);
  else if (opts.format == "csv")
    emit(render_oracle_csv(j), output_path);
  else
    emit(render_oracle_text(j), output_path);
  return j["pass"].get<bool>() ? kExitPass : kExitComputation;
}

int run_batch(const std::string& input_path, const std::string& output_path, int trials,
              const CommonOptions& opts) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open batch input " << input_path << "\n";
    return kExitInvalidInput;
  }
  std::string line;
  if (!std::getline(in, line) || line.find("p") == std::string::npos ||
      line.find("q") == std::string::npos) {
    std::cerr << "error: batch input must start with a 'p,q' header\n";
    return kExitInvalidInput;
  }

  Json rows = Json::array();
  bool all_pass = true;
  int index = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json row;
    row["index"] = index;
    int p = 0, q = 0;
    if (std::sscanf(line.c_str(), "%d , %d", &p, &q) != 2 &&
        std::sscanf(line.c_str(), "%d,%d", &p, &q) != 2) {
      row["status"] = "error";
      row["error"] = "cannot parse row '" + line + "'";
      all_pass = false;
      rows.push_back(row);
      ++index;
      continue;
    }
    row["p"] = p;
    row["q"] = q;

    ConfigHandle config;
    const int setup = apply_common(opts, config);
    if (setup != kExitPass) return setup;
    tb_config_set_trials(config.ptr, trials);

    RileyHandle riley;
    tb_status status = tb_riley_new(p, q, &riley.ptr);
    if (status != TB_OK) {
      row["status"] = "error";
      row["error"] = tb_last_error();
      all_pass = false;
      rows.push_back(row);
      ++index;
      continue;
    }
    OwnedString json_text;
    status = tb_verify_json(riley.ptr, config.ptr, &json_text.ptr);
    if (status != TB_OK) {
      row["status"] = "error";
      row["error"] = tb_last_error();
      all_pass = false;
    } else {
      const Json verify = Json::parse(json_text.ptr);
      const bool pass = verify["pass"].get<bool>();
      row["status"] = pass ? "pass" : "fail";
      row["hyperbolic"] = verify["hyperbolic"];
      row["summary"] = verify["summary"];
      all_pass &= pass;
    }
    rows.push_back(row);
    std::cout << "row " << index << " (" << p << ", " << q
              << "): " << row["status"].get<std::string>() << "\n";
    ++index;
  }

  Json doc{{"trials", trials},
           {"seed", opts.seed},
           {"precision", opts.precision},
           {"rows", rows},
           {"all_pass", all_pass}};
  if (output_path.empty()) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::ofstream out(output_path);
    out << doc.dump(2) << "\n";
    std::cout << (all_pass ? "PASS" : "FAIL") << " -> " << output_path << "\n";
  }
  return all_pass ? kExitPass : kExitComputation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Riley polynomials and adjoint Reidemeister torsion of two-bridge knots"};
  app.require_subcommand(1);

  CommonOptions opts;
  int trials = 20;
  std::string env_error;
  if (!load_env_config(opts, trials, env_error)) {
    std::cerr << "error: " << env_error << "\n";
    return kExitInvalidInput;
  }

  int p = 0, q = 0;
  int samples = 10;
  bool resample = false;
  bool dump_cochain = false;
  std::string c_text;
  std::string input_path;
  std::string output_path;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", opts.tolerance_overrides,
                    "override a named tolerance, name=value (repeatable)");
    cmd->add_option("--precision", opts.precision, "standard|extended");
    cmd->add_option("--format", opts.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--seed", opts.seed, "RNG seed");
    cmd->add_option("--output", output_path, "write the rendered output to a file");
  };

  CLI::App* riley = app.add_subcommand("riley", "Riley polynomial and exact identities");
  riley->add_option("--p", p, "Schubert p")->required();
  riley->add_option("--q", q, "Schubert q")->required();
  add_common(riley);

  CLI::App* verify = app.add_subcommand("verify", "inverse torsion sums over sampled fibers");
  verify->add_option("--p", p, "Schubert p")->required();
  verify->add_option("--q", q, "Schubert q")->required();
  verify->add_option("--trials", trials, "number of sampled trace values");
  verify->add_option("--c", c_text, "pin the first trial's trace value, e.g. 2.5 or 2.0+0.3i");
  verify->add_flag("--resample", resample, "resample when a pinned --c is rejected");
  add_common(verify);

  CLI::App* oracle = app.add_subcommand("oracle", "closed-form formula vs cochain oracle");
  oracle->add_option("--p", p, "Schubert p")->required();
  oracle->add_option("--q", q, "Schubert q")->required();
  oracle->add_option("--samples", samples, "number of sampled trace values");
  oracle->add_flag("--dump-cochain", dump_cochain, "attach the first character's cochain data");
  add_common(oracle);

  CLI::App* batch = app.add_subcommand("batch", "run verify for every row of a p,q CSV");
  batch->add_option("--input", input_path, "CSV file with header p,q")->required();
  batch->add_option("--trials", trials, "trials per row");
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitInvalidInput;
  }

  if (riley->parsed()) return run_riley(p, q, opts, output_path);
  if (verify->parsed()) return run_verify(p, q, trials, c_text, resample, opts, output_path);
  if (oracle->parsed()) return run_oracle(p, q, samples, dump_cochain, opts, output_path);
  return run_batch(input_path, output_path, trials, opts);
}
