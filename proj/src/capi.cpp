#include "versal/versal.h"

#include <new>
#include <string>

#include "versal/errors.hpp"
#include "versal/report.hpp"

struct vd_system {
  versal::InputSystem system;
};

struct vd_result {
  versal::Report report;
};

namespace {

struct LastError {
  std::string message;
  std::size_t line = 0;
  std::size_t column = 0;
};

thread_local LastError lastError;

void clearError() { lastError = {}; }

vd_status fail(vd_status status, const std::string& message) {
  lastError.message = message;
  return status;
}

// Maps the active exception to a status code.
vd_status translate() {
  try {
    throw;
  } catch (const versal::ParseError& e) {
    lastError.line = e.line();
    lastError.column = e.column();
    return fail(VD_ERR_PARSE, e.what());
  } catch (const versal::IoError& e) {
    return fail(VD_ERR_IO, e.what());
  } catch (const versal::UsageError& e) {
    return fail(VD_ERR_USAGE, e.what());
  } catch (const versal::PreconditionError& e) {
    return fail(VD_ERR_PRECONDITION, e.what());
  } catch (const versal::DimensionError& e) {
    return fail(VD_ERR_DIMENSION, e.what());
  } catch (const versal::LiftError& e) {
    return fail(VD_ERR_LIFT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(VD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(VD_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(VD_ERR_INTERNAL, "unknown error");
  }
}

template <class Load>
vd_status load(vd_system** out, Load&& loader) {
  clearError();
  if (!out) return fail(VD_ERR_NULL_ARGUMENT, "output pointer is null");
  *out = nullptr;
  try {
    *out = new vd_system{loader()};
    return VD_OK;
  } catch (...) {
    return translate();
  }
}

}  // namespace

extern "C" {

void vd_run_options_init(vd_run_options* options) {
  if (!options) return;
  *options = vd_run_options{};
  options->max_order = 20;
  options->hilbert_upto = 10;
}

vd_status vd_system_load_file(const char* path, vd_system** out) {
  if (!path) {
    clearError();
    return fail(VD_ERR_NULL_ARGUMENT, "path is null");
  }
  return load(out, [&] { return versal::loadInput(path); });
}

vd_status vd_system_load_string(const char* text, vd_system** out) {
  if (!text) {
    clearError();
    return fail(VD_ERR_NULL_ARGUMENT, "text is null");
  }
  return load(out, [&] { return versal::parseInput(text); });
}

void vd_system_free(vd_system* system) { delete system; }

size_t vd_system_num_variables(const vd_system* system) {
  return system ? system->system.ring->numX() : 0;
}

size_t vd_system_num_generators(const vd_system* system) {
  return system ? system->system.generators.size() : 0;
}

size_t vd_system_grading_rank(const vd_system* system) {
  return system ? system->system.ring->gradingRank() : 0;
}

vd_status vd_run(const vd_system* system, const vd_run_options* options, vd_result** out) {
  clearError();
  if (!system || !options || !out) return fail(VD_ERR_NULL_ARGUMENT, "null argument");
  *out = nullptr;
  if (!options->command) return fail(VD_ERR_USAGE, "no command given");
  if (options->degree_len > 0 && !options->degree)
    return fail(VD_ERR_NULL_ARGUMENT, "degree pointer is null");
  try {
    versal::RunRequest req;
    req.command = options->command;
    if (options->degree_len > 0)
      req.degree = versal::Degree(options->degree, options->degree + options->degree_len);
    req.maxOrder = options->max_order;
    req.verbosity = options->verbosity;
    req.hilbertUpto = options->hilbert_upto;
    if (options->log) {
      vd_log_fn fn = options->log;
      void* user = options->log_user_data;
      req.log = [fn, user](const std::string& line) { fn(line.c_str(), user); };
    }
    *out = new vd_result{versal::runCommand(system->system, req)};
    return VD_OK;
  } catch (...) {
    return translate();
  }
}

const char* vd_result_text(const vd_result* result) {
  return result ? result->report.text.c_str() : "";
}

const char* vd_result_json(const vd_result* result) {
  return result ? result->report.json.c_str() : "";
}

void vd_result_free(vd_result* result) { delete result; }

const char* vd_last_error(void) { return lastError.message.c_str(); }
size_t vd_last_error_line(void) { return lastError.line; }
size_t vd_last_error_column(void) { return lastError.column; }

const char* vd_status_name(vd_status status) {
  switch (status) {
    case VD_OK: return "ok";
    case VD_ERR_NULL_ARGUMENT: return "null argument";
    case VD_ERR_IO: return "i/o error";
    case VD_ERR_PARSE: return "parse error";
    case VD_ERR_USAGE: return "usage error";
    case VD_ERR_PRECONDITION: return "precondition failed";
    case VD_ERR_DIMENSION: return "dimension mismatch";
    case VD_ERR_LIFT: return "lift failed";
    case VD_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* vd_version(void) { return "0.1.0"; }

}  // extern "C"
