#include "mcg/mcg.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "constructions.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "report.hpp"

struct mcg_instance {
  mcg::Instance value;
};

namespace {

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void set_error(char** error, const std::string& message) {
  if (error) *error = copy_string(message);
}

// Runs fn and folds any escaping exception into a status + message.
template <typename Fn>
mcg_status guarded(char** error, Fn&& fn) {
  try {
    fn();
    return MCG_OK;
  } catch (const mcg::input_error& e) {
    set_error(error, e.what());
    return MCG_INPUT_ERROR;
  } catch (const mcg::not_applicable_error& e) {
    set_error(error, e.what());
    return MCG_INFEASIBLE;
  } catch (const mcg::budget_error& e) {
    set_error(error, e.what());
    return MCG_BUDGET_EXCEEDED;
  } catch (const mcg::alarm_error& e) {
    set_error(error, e.what());
    return MCG_THEOREM_ALARM;
  } catch (const std::exception& e) {
    set_error(error, e.what());
    return MCG_INTERNAL_ERROR;
  } catch (...) {
    set_error(error, "unknown failure");
    return MCG_INTERNAL_ERROR;
  }
}

mcg::AnalysisParams to_analysis_params(const mcg_params* params) {
  mcg::AnalysisParams out;
  if (!params) return out;
  out.ell = params->ell;
  out.budget_nodes = params->budget_nodes;
  out.max_items = params->max_items;
  out.seed = params->seed;
  out.walk_count = params->walk_count;
  out.walk_max_len = params->walk_max_len;
  if (params->oracle_which) out.oracle_which = params->oracle_which;
  return out;
}

} // namespace

extern "C" {

void mcg_params_init(mcg_params* params) {
  if (!params) return;
  params->ell = 1;
  params->budget_nodes = 0;
  params->max_items = 5'000'000;
  params->seed = 0;
  params->walk_count = 16;
  params->walk_max_len = 10;
  params->oracle_which = nullptr;
}

mcg_status mcg_instance_parse(const char* json_text, mcg_instance** out, char** error) {
  if (out) *out = nullptr;
  if (error) *error = nullptr;
  if (!json_text || !out) {
    set_error(error, "null argument");
    return MCG_INPUT_ERROR;
  }
  return guarded(error, [&] {
    mcg::Instance parsed = mcg::parse_instance(json_text);
    *out = new mcg_instance{std::move(parsed)};
  });
}

mcg_status mcg_instance_construct(const char* name, mcg_instance** out, char** error) {
  if (out) *out = nullptr;
  if (error) *error = nullptr;
  if (!name || !out) {
    set_error(error, "null argument");
    return MCG_INPUT_ERROR;
  }
  return guarded(error, [&] {
    mcg::CatalogEntry entry = mcg::catalog(name);
    *out = new mcg_instance{std::move(entry.instance)};
  });
}

mcg_status mcg_instance_to_json(const mcg_instance* instance, char** out, char** error) {
  if (out) *out = nullptr;
  if (error) *error = nullptr;
  if (!instance || !out) {
    set_error(error, "null argument");
    return MCG_INPUT_ERROR;
  }
  return guarded(error, [&] { *out = copy_string(mcg::serialize_instance(instance->value)); });
}

void mcg_instance_free(mcg_instance* instance) { delete instance; }

mcg_status mcg_analyze(const mcg_instance* instance, const char* command,
                       const mcg_params* params, char** report_json, char** error) {
  if (report_json) *report_json = nullptr;
  if (error) *error = nullptr;
  if (!instance || !command || !report_json) {
    set_error(error, "null argument");
    return MCG_INPUT_ERROR;
  }
  return guarded(error, [&] {
    std::string report = mcg::run_analysis(instance->value, command, to_analysis_params(params));
    *report_json = copy_string(report);
  });
}

mcg_status mcg_render_text(const char* report_json, char** out, char** error) {
  if (out) *out = nullptr;
  if (error) *error = nullptr;
  if (!report_json || !out) {
    set_error(error, "null argument");
    return MCG_INPUT_ERROR;
  }
  return guarded(error, [&] { *out = copy_string(mcg::render_text(report_json)); });
}

void mcg_string_free(char* text) { std::free(text); }

const char* mcg_status_name(mcg_status status) {
  switch (status) {
    case MCG_OK: return "ok";
    case MCG_INPUT_ERROR: return "input_error";
    case MCG_INFEASIBLE: return "infeasible";
    case MCG_BUDGET_EXCEEDED: return "budget_exceeded";
    case MCG_THEOREM_ALARM: return "theorem_alarm";
    default: return "internal_error";
  }
}

const char* mcg_version(void) { return "1.0.0"; }

} // extern "C"
