#include "lieb/lieb.h"

#include <exception>
#include <new>
#include <string>

#include "app/dispatch.hpp"
#include "app/run_config.hpp"
#include "lieb/errors.hpp"
#include "lieb/solutions.hpp"

struct lieb_request {
  lieb::app::RunConfig config;
};

struct lieb_report {
  lieb::app::Outcome outcome;
};

namespace {

thread_local std::string g_last_error;

lieb_status record(lieb_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

lieb_status status_for(lieb::ErrorCode code) {
  switch (code) {
    case lieb::ErrorCode::InvalidArgument:
    case lieb::ErrorCode::Parse:
      return LIEB_E_CONFIG;
    default:
      return LIEB_E_NUMERIC;
  }
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
lieb_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return LIEB_OK;
  } catch (const lieb::app::UsageError& e) {
    return record(LIEB_E_CONFIG, e.what());
  } catch (const lieb::Error& e) {
    return record(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return record(LIEB_E_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return record(LIEB_E_INTERNAL, e.what());
  } catch (...) {
    return record(LIEB_E_INTERNAL, "unknown failure");
  }
}

// Invalid (n, lambda) is a caller error, not a numerical one.
lieb::Params checked_params(int n, double lambda) {
  try {
    return lieb::Params::make(n, lambda);
  } catch (const lieb::Error& e) {
    throw lieb::app::UsageError(e.what());
  }
}

lieb_verdict to_c(lieb::Verdict v) {
  switch (v) {
    case lieb::Verdict::Verified: return LIEB_VERIFIED;
    case lieb::Verdict::Refuted: return LIEB_REFUTED;
    case lieb::Verdict::Inconclusive: return LIEB_INCONCLUSIVE;
    case lieb::Verdict::NotApplicable: return LIEB_NOT_APPLICABLE;
    case lieb::Verdict::Convergent: return LIEB_CONVERGENT;
    case lieb::Verdict::Diverged: return LIEB_DIVERGED;
  }
  return LIEB_INCONCLUSIVE;
}

}  // namespace

extern "C" {

const char* lieb_last_error(void) { return g_last_error.c_str(); }

const char* lieb_status_name(lieb_status status) {
  switch (status) {
    case LIEB_OK: return "ok";
    case LIEB_E_CONFIG: return "config";
    case LIEB_E_NUMERIC: return "numeric";
    case LIEB_E_IO: return "io";
    case LIEB_E_ARGUMENT: return "argument";
    case LIEB_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lieb_verdict_name(lieb_verdict verdict) {
  switch (verdict) {
    case LIEB_VERIFIED: return lieb::verdict_name(lieb::Verdict::Verified);
    case LIEB_REFUTED: return lieb::verdict_name(lieb::Verdict::Refuted);
    case LIEB_INCONCLUSIVE: return lieb::verdict_name(lieb::Verdict::Inconclusive);
    case LIEB_NOT_APPLICABLE: return lieb::verdict_name(lieb::Verdict::NotApplicable);
    case LIEB_CONVERGENT: return lieb::verdict_name(lieb::Verdict::Convergent);
    case LIEB_DIVERGED: return lieb::verdict_name(lieb::Verdict::Diverged);
  }
  return "unknown";
}

const char* lieb_version(void) { return "1.0.0"; }

lieb_status lieb_constant_C(int n, double lambda, double* out) {
  if (!out) return record(LIEB_E_ARGUMENT, "null output pointer");
  return guarded([&] { *out = lieb::lieb_constant_C(checked_params(n, lambda)); });
}

lieb_status lieb_constant_L(int n, double lambda, double rel_tol, double* out) {
  if (!out) return record(LIEB_E_ARGUMENT, "null output pointer");
  return guarded([&] {
    lieb::QuadratureSpec quad;
    if (rel_tol > 0.0) quad.rel_tol = rel_tol;
    quad.validate();
    *out = lieb::lieb_constant_L(checked_params(n, lambda), quad);
  });
}

lieb_status lieb_critical_exponent(int n, double lambda, double* out) {
  if (!out) return record(LIEB_E_ARGUMENT, "null output pointer");
  return guarded([&] { *out = checked_params(n, lambda).p; });
}

lieb_status lieb_request_create(const char* subcommand, lieb_request** out) {
  if (!subcommand || !out) return record(LIEB_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    const std::string sub = subcommand;
    const auto& names = lieb::app::subcommands();
    bool known = false;
    for (const auto& s : names) known = known || s == sub;
    if (!known) throw lieb::app::UsageError("unknown subcommand '" + sub + "'");
    *out = new lieb_request{lieb::app::RunConfig(sub)};
  });
}

lieb_status lieb_request_set(lieb_request* req, const char* key, const char* value) {
  if (!req || !key || !value) return record(LIEB_E_ARGUMENT, "null argument");
  return guarded([&] { req->config.set(key, value); });
}

lieb_status lieb_request_merge_config_file(lieb_request* req, const char* path) {
  if (!req || !path) return record(LIEB_E_ARGUMENT, "null argument");
  return guarded([&] { req->config.merge_file(path); });
}

void lieb_request_destroy(lieb_request* req) { delete req; }

lieb_status lieb_run(const lieb_request* req, lieb_report** out) {
  if (!req || !out) return record(LIEB_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new lieb_report{lieb::app::run(req->config)}; });
}

const char* lieb_report_json(const lieb_report* rep) { return rep ? rep->outcome.text.c_str() : ""; }

lieb_verdict lieb_report_verdict(const lieb_report* rep) {
  return rep ? to_c(rep->outcome.overall) : LIEB_INCONCLUSIVE;
}

int lieb_report_exit_code(const lieb_report* rep) { return rep ? rep->outcome.exit_code : 1; }

size_t lieb_report_result_count(const lieb_report* rep) { return rep ? rep->outcome.verdicts.size() : 0; }

lieb_status lieb_report_result_verdict(const lieb_report* rep, size_t index, lieb_verdict* out) {
  if (!rep || !out) return record(LIEB_E_ARGUMENT, "null argument");
  if (index >= rep->outcome.verdicts.size()) return record(LIEB_E_ARGUMENT, "result index out of range");
  *out = to_c(rep->outcome.verdicts[index]);
  return LIEB_OK;
}

lieb_status lieb_report_from_json(const char* json, lieb_report** out) {
  if (!json || !out) return record(LIEB_E_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new lieb_report{lieb::app::parse_report(json)}; });
}

void lieb_report_destroy(lieb_report* rep) { delete rep; }

}  // extern "C"
