#include "ulrichtk.h"

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "core/commands.hpp"
#include "core/corpus.hpp"
#include "core/errors.hpp"

using namespace ultk;

struct ultk_ring {
  LoadedPresentation loaded;
  std::string origin;  // path or "<text>"
  std::string digest;
};

namespace {

thread_local std::string g_last_error;

char *dup_string(const std::string &s) {
  char *out = static_cast<char *>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

ultk_status status_of_exception() {
  try {
    throw;
  } catch (const ParseError &e) {
    g_last_error = e.what();
    return ULTK_ERR_PARSE;
  } catch (const IoError &e) {
    g_last_error = e.what();
    return ULTK_ERR_IO;
  } catch (const BudgetExceeded &e) {
    g_last_error = e.what();
    return ULTK_ERR_BUDGET;
  } catch (const AmbientMismatch &e) {
    g_last_error = e.what();
    return ULTK_ERR_ARG;
  } catch (const ArgError &e) {
    g_last_error = e.what();
    return ULTK_ERR_ARG;
  } catch (const Error &e) {
    g_last_error = e.what();
    return ULTK_ERR_INTERNAL;
  } catch (const std::exception &e) {
    g_last_error = e.what();
    return ULTK_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return ULTK_ERR_INTERNAL;
  }
}

Json ring_inputs(const ultk_ring *ring) {
  return Json{{"files", Json::array({Json{{"path", ring->origin}, {"digest", ring->digest}}})}};
}

// Wraps a command: runs it, assembles the envelope, maps passed -> status.
template <typename Fn>
ultk_status run_command(const char *name, const Json &inputs, char **report_json, Fn &&fn) {
  if (!report_json) {
    g_last_error = "report output pointer is NULL";
    return ULTK_ERR_ARG;
  }
  *report_json = nullptr;
  try {
    auto t0 = std::chrono::steady_clock::now();
    CommandOutcome outcome = fn();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    Json report = make_report(name, inputs, outcome.result, outcome.passed, ms);
    *report_json = dup_string(report.dump(2));
    return outcome.passed ? ULTK_OK : ULTK_CHECK_FAILED;
  } catch (...) {
    return status_of_exception();
  }
}

std::vector<std::string> to_vector(const char *const *items, size_t n) {
  std::vector<std::string> out;
  for (size_t i = 0; i < n; ++i) {
    if (items && items[i]) out.emplace_back(items[i]);
  }
  return out;
}

}  // namespace

extern "C" {

const char *ultk_version(void) { return kToolVersion; }

const char *ultk_last_error(void) { return g_last_error.c_str(); }

void ultk_string_free(char *s) { std::free(s); }

ultk_status ultk_ring_load(const char *path, ultk_ring **out) {
  if (!path || !out) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  *out = nullptr;
  try {
    std::string text = read_file(path);
    auto *ring = new ultk_ring{parse_presentation(text), path, content_digest(text)};
    *out = ring;
    return ULTK_OK;
  } catch (...) {
    return status_of_exception();
  }
}

ultk_status ultk_ring_from_text(const char *text, ultk_ring **out) {
  if (!text || !out) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  *out = nullptr;
  try {
    auto *ring = new ultk_ring{parse_presentation(text), "<text>", content_digest(text)};
    *out = ring;
    return ULTK_OK;
  } catch (...) {
    return status_of_exception();
  }
}

void ultk_ring_free(ultk_ring *ring) { delete ring; }

ultk_status ultk_ring_serialize(const ultk_ring *ring, char **out) {
  if (!ring || !out) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  try {
    *out = dup_string(serialize_presentation(ring->loaded));
    return ULTK_OK;
  } catch (...) {
    return status_of_exception();
  }
}

ultk_status ultk_hilbert(const ultk_ring *ring, char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  return run_command("hilbert", ring_inputs(ring), report_json,
                     [&] { return cmd_hilbert(ring->loaded); });
}

ultk_status ultk_dim(const ultk_ring *ring, char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  return run_command("dim", ring_inputs(ring), report_json,
                     [&] { return cmd_dim(ring->loaded); });
}

ultk_status ultk_ci_check(const ultk_ring *ring, char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  return run_command("ci-check", ring_inputs(ring), report_json,
                     [&] { return cmd_ci_check(ring->loaded); });
}

ultk_status ultk_length(const ultk_ring *ring, const char *const *extra_gens, size_t n_extra,
                        char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  Json inputs = ring_inputs(ring);
  inputs["parameters"] = Json{{"extra", to_vector(extra_gens, n_extra)}};
  return run_command("length", inputs, report_json,
                     [&] { return cmd_length(ring->loaded, to_vector(extra_gens, n_extra)); });
}

ultk_status ultk_multiplicity(const ultk_ring *ring, const char *const *params, size_t n_params,
                              char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  Json inputs = ring_inputs(ring);
  inputs["parameters"] = Json{{"params", to_vector(params, n_params)}};
  return run_command("multiplicity", inputs, report_json, [&] {
    return cmd_multiplicity(ring->loaded, to_vector(params, n_params));
  });
}

ultk_status ultk_surjectivity(const ultk_ring *ring, unsigned long a, unsigned long j,
                              unsigned long j_max, char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  Json inputs = ring_inputs(ring);
  inputs["parameters"] = Json{{"a", a}, {"j", j}, {"j_max", j_max}};
  return run_command("surjectivity", inputs, report_json, [&] {
    std::optional<std::uint64_t> jj, jm;
    if (j > 0) jj = j;
    if (j_max > 0) jm = j_max;
    return cmd_surjectivity(ring->loaded, a, jj, jm);
  });
}

ultk_status ultk_truncation(const ultk_ring *ring, unsigned long a, unsigned long j_max,
                            char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  Json inputs = ring_inputs(ring);
  inputs["parameters"] = Json{{"a", a}, {"j_max", j_max}};
  return run_command("truncation", inputs, report_json,
                     [&] { return cmd_truncation(ring->loaded, a, j_max); });
}

ultk_status ultk_section_cert(const ultk_ring *ring, char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  return run_command("section-cert", ring_inputs(ring), report_json,
                     [&] { return cmd_section_cert(ring->loaded); });
}

ultk_status ultk_verdict(const ultk_ring *ring, unsigned long a, unsigned long j_max,
                         int acknowledge_assumptions, char **report_json) {
  if (!ring) {
    g_last_error = "NULL ring";
    return ULTK_ERR_ARG;
  }
  Json inputs = ring_inputs(ring);
  inputs["parameters"] =
      Json{{"a", a}, {"j_max", j_max}, {"acknowledge", acknowledge_assumptions != 0}};
  return run_command("verdict", inputs, report_json, [&] {
    return cmd_verdict(ring->loaded, a, j_max, acknowledge_assumptions != 0);
  });
}

ultk_status ultk_newton(const char *polynomial, const char *var1, const char *var2,
                        char **report_json) {
  if (!polynomial || !var1 || !var2) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  Json inputs{{"parameters",
               Json{{"polynomial", polynomial}, {"vars", Json::array({var1, var2})}}}};
  return run_command("newton", inputs, report_json,
                     [&] { return cmd_newton(polynomial, var1, var2); });
}

ultk_status ultk_kernel_verify(const char *map_path, char **report_json) {
  if (!map_path) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  return run_command("kernel-verify", Json{{"files", Json::array({map_path})}}, report_json,
                     [&] { return cmd_kernel_verify(load_map(map_path)); });
}

ultk_status ultk_cyclotomic(const char *polynomial_in_t, char **report_json) {
  if (!polynomial_in_t) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  Json inputs{{"parameters", Json{{"polynomial", polynomial_in_t}}}};
  return run_command("cyclotomic", inputs, report_json,
                     [&] { return cmd_cyclotomic(polynomial_in_t); });
}

ultk_status ultk_corpus_run(const char *corpus_dir, unsigned jobs, int include_experimental,
                            char **report_json) {
  if (!corpus_dir) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  Json inputs{{"parameters", Json{{"dir", corpus_dir}, {"jobs", jobs}}}};
  return run_command("corpus", inputs, report_json, [&] {
    CorpusRun run = corpus_run(corpus_dir, jobs == 0 ? 1 : jobs, include_experimental != 0);
    Json result{{"entries", run.table},
                {"passed", run.passed},
                {"failed", run.failed},
                {"errors", run.errors},
                {"skipped", run.skipped},
                {"all_passed", run.all_passed}};
    return CommandOutcome{result, run.all_passed};
  });
}

ultk_status ultk_report_to_text(const char *report_json, char **text) {
  if (!report_json || !text) {
    g_last_error = "NULL argument";
    return ULTK_ERR_ARG;
  }
  *text = nullptr;
  try {
    Json report = Json::parse(report_json);
    *text = dup_string(render_text(report));
    return ULTK_OK;
  } catch (const nlohmann::json::parse_error &e) {
    g_last_error = std::string("invalid report JSON: ") + e.what();
    return ULTK_ERR_PARSE;
  } catch (...) {
    return status_of_exception();
  }
}

}  // extern "C"
