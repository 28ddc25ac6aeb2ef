#include "twobridge/twobridge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "twobridge/config.hpp"
#include "twobridge/json_io.hpp"
#include "twobridge/numeric.hpp"
#include "twobridge/oracle.hpp"
#include "twobridge/riley.hpp"
#include "twobridge/torsion.hpp"

struct tb_riley {
  twobridge::RileyData data;
};

struct tb_config {
  twobridge::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

tb_status fail(const std::exception& e, tb_status status) {
  g_last_error = e.what();
  return status;
}

template <class Fn>
tb_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return TB_OK;
  } catch (const twobridge::Error& e) {
    return fail(e, e.invalid_input() ? TB_INVALID_INPUT : TB_COMPUTATION_ERROR);
  } catch (const std::exception& e) {
    return fail(e, TB_COMPUTATION_ERROR);
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out != nullptr) std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tb_status require(bool ok, const char* what) {
  if (ok) return TB_OK;
  g_last_error = std::string("null argument: ") + what;
  return TB_INVALID_INPUT;
}

}  // namespace

extern "C" {

const char* tb_version(void) { return "1.0.0"; }

tb_config* tb_config_new(void) { return new (std::nothrow) tb_config(); }

void tb_config_free(tb_config* config) { delete config; }

tb_status tb_config_set_tolerance(tb_config* config, const char* name, double value) {
  if (require(config && name, "config/name") != TB_OK) return TB_INVALID_INPUT;
  return guarded([&] { config->cfg.tol.set(name, value); });
}

tb_status tb_config_set_seed(tb_config* config, uint64_t seed) {
  if (require(config != nullptr, "config") != TB_OK) return TB_INVALID_INPUT;
  config->cfg.seed = seed;
  return TB_OK;
}

tb_status tb_config_set_trials(tb_config* config, int32_t trials) {
  if (require(config != nullptr, "config") != TB_OK) return TB_INVALID_INPUT;
  return guarded([&] {
    if (trials < 1) twobridge::raise(twobridge::ErrorCode::invalid_argument, "trials must be >= 1");
    config->cfg.trials = trials;
  });
}

tb_status tb_config_set_precision(tb_config* config, const char* mode) {
  if (require(config && mode, "config/mode") != TB_OK) return TB_INVALID_INPUT;
  return guarded([&] { config->cfg.precision = twobridge::precision_from_name(mode); });
}

tb_status tb_config_set_pinned_c(tb_config* config, double c_re, double c_im, int32_t resample) {
  if (require(config != nullptr, "config") != TB_OK) return TB_INVALID_INPUT;
  config->cfg.has_pinned_c = true;
  config->cfg.pinned_c = {c_re, c_im};
  config->cfg.resample_on_reject = resample != 0;
  return TB_OK;
}

tb_status tb_riley_new(int32_t p, int32_t q, tb_riley** out) {
  if (require(out != nullptr, "out") != TB_OK) return TB_INVALID_INPUT;
  *out = nullptr;
  return guarded([&] {
    auto riley = std::make_unique<tb_riley>();
    riley->data = twobridge::riley_polynomial(twobridge::validate_form(p, q));
    *out = riley.release();
  });
}

void tb_riley_free(tb_riley* riley) { delete riley; }

tb_status tb_riley_json(const tb_riley* riley, char** json_out) {
  if (require(riley && json_out, "riley/json_out") != TB_OK) return TB_INVALID_INPUT;
  return guarded([&] { *json_out = dup_string(twobridge::riley_json(riley->data).dump(2)); });
}

tb_status tb_spectrum_json(const tb_riley* riley, const tb_config* config, double c_re,
                           double c_im, char** json_out) {
  if (require(riley && json_out, "riley/json_out") != TB_OK) return TB_INVALID_INPUT;
  const twobridge::RunConfig cfg = config ? config->cfg : twobridge::RunConfig{};
  return guarded([&] {
    const auto report = twobridge::torsion_spectrum(riley->data, {c_re, c_im}, cfg.tol,
                                                    cfg.precision);
    *json_out = dup_string(twobridge::report_json(report).dump(2));
  });
}

tb_status tb_verify_json(const tb_riley* riley, const tb_config* config, char** json_out) {
  if (require(riley && json_out, "riley/json_out") != TB_OK) return TB_INVALID_INPUT;
  const twobridge::RunConfig cfg = config ? config->cfg : twobridge::RunConfig{};
  return guarded([&] {
    cfg.validate();
    twobridge::StatisticsOptions options;
    options.has_pinned_c = cfg.has_pinned_c;
    options.pinned_c = cfg.pinned_c;
    options.resample_on_reject = cfg.resample_on_reject;
    const auto stats = twobridge::inverse_sum_statistics(riley->data, cfg.trials, cfg.seed,
                                                         cfg.tol, cfg.precision, options);
    *json_out = dup_string(twobridge::statistics_json(riley->data, stats, cfg).dump(2));
  });
}

tb_status tb_oracle_json(const tb_riley* riley, const tb_config* config, int32_t samples,
                         int32_t dump_cochain, char** json_out) {
  if (require(riley && json_out, "riley/json_out") != TB_OK) return TB_INVALID_INPUT;
  const twobridge::RunConfig cfg = config ? config->cfg : twobridge::RunConfig{};
  return guarded([&] {
    const auto comparison =
        twobridge::compare_oracle(riley->data, samples, cfg.seed, cfg.tol, cfg.precision);
    twobridge::Json j = twobridge::oracle_json(riley->data, comparison, cfg);
    if (dump_cochain != 0 && !comparison.rows.empty()) {
      const auto& row = comparison.rows.front();
      const auto fiber = riley->data.phi_w.to_unipoly<double>(row.d);
      const auto pt = twobridge::make_character_point(
          riley->data, row.d, row.u, static_cast<double>(fiber.coefficient_scale()), cfg.tol);
      j["cochain"] = twobridge::cochain_json(twobridge::assemble_cochain(riley->data, pt, cfg.tol));
    }
    *json_out = dup_string(j.dump(2));
  });
}

void tb_string_free(char* s) { std::free(s); }

const char* tb_last_error(void) { return g_last_error.c_str(); }

const char* tb_status_name(tb_status status) {
  switch (status) {
    case TB_OK: return "ok";
    case TB_COMPUTATION_ERROR: return "computation-error";
    case TB_INVALID_INPUT: return "invalid-input";
  }
  return "unknown";
}

}  // extern "C"
