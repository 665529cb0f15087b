// Exercises the shared-library C API end to end: handle lifecycle, report
// envelopes, status codes, and error reporting. Takes the corpus directory
// as argv[1].

#include <cassert>
#include <cstdio>
#include <cstring>
#include <string>

#include "ulrichtk.h"

namespace {

int failures = 0;

void expect(bool ok, const char* what) {
  if (!ok) {
    std::fprintf(stderr, "FAIL: %s (last error: %s)\n", what, ultk_last_error());
    ++failures;
  }
}

std::string take(char* s) {
  std::string out = s ? s : "";
  ultk_string_free(s);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  expect(argc >= 2, "corpus dir argument");
  std::string corpus = argv[1];
  std::string ci_ring = corpus + "/rings/ci_f_y3x2z.ring";

  // Version and error-state basics.
  expect(std::strcmp(ultk_version(), "0.1.0") == 0, "version string");

  // Lifecycle and serialization.
  ultk_ring* ring = nullptr;
  expect(ultk_ring_load(ci_ring.c_str(), &ring) == ULTK_OK, "load ci ring");
  char* canon = nullptr;
  expect(ultk_ring_serialize(ring, &canon) == ULTK_OK, "serialize");
  std::string canon_text = take(canon);
  expect(canon_text.find("field rationals") == 0, "canonical starts with field line");

  ultk_ring* reparsed = nullptr;
  expect(ultk_ring_from_text(canon_text.c_str(), &reparsed) == ULTK_OK, "reparse canonical");
  char* canon2 = nullptr;
  expect(ultk_ring_serialize(reparsed, &canon2) == ULTK_OK, "reserialize");
  expect(take(canon2) == canon_text, "canonical form is a fixpoint");
  ultk_ring_free(reparsed);

  // Commands with positive outcomes.
  char* report = nullptr;
  expect(ultk_dim(ring, &report) == ULTK_OK, "dim status");
  expect(take(report).find("\"dimension\": 2") != std::string::npos, "dim value");

  expect(ultk_hilbert(ring, &report) == ULTK_OK, "hilbert status");
  expect(take(report).find("1 - 3*t^6 + 3*t^12 - t^18") != std::string::npos,
         "hilbert numerator");

  expect(ultk_ci_check(ring, &report) == ULTK_OK, "ci status");
  take(report);

  const char* params[] = {"x", "z"};
  expect(ultk_length(ring, params, 2, &report) == ULTK_OK, "length status");
  expect(take(report).find("\"length\": 12") != std::string::npos, "length 12");

  expect(ultk_multiplicity(ring, params, 2, &report) == ULTK_OK, "multiplicity status");
  expect(take(report).find("\"multiplicity\": 12") != std::string::npos, "multiplicity 12");

  expect(ultk_surjectivity(ring, 2, 0, 12, &report) == ULTK_OK, "surjectivity condition");
  expect(take(report).find("certified-for-all-j") != std::string::npos, "certified status");

  expect(ultk_truncation(ring, 2, 3, &report) == ULTK_OK, "truncation status");
  take(report);

  expect(ultk_section_cert(ring, &report) == ULTK_OK, "section cert status");
  take(report);

  expect(ultk_verdict(ring, 2, 20, 0, &report) == ULTK_OK, "verdict status");
  std::string verdict_json = take(report);
  expect(verdict_json.find("no-ulrich-modules") != std::string::npos, "verdict conclusion");
  expect(verdict_json.find("\"assumed\": []") != std::string::npos, "no assumptions");

  // Text rendering carries the same verdict fields.
  char* text = nullptr;
  expect(ultk_report_to_text(verdict_json.c_str(), &text) == ULTK_OK, "render text");
  std::string rendered = take(text);
  expect(rendered.find("no-ulrich-modules") != std::string::npos, "text conclusion");
  expect(rendered.find("timing_ms") != std::string::npos, "text carries timing field");

  // Determinism: identical inputs give identical reports up to timing.
  char* again = nullptr;
  expect(ultk_verdict(ring, 2, 20, 0, &again) == ULTK_OK, "verdict rerun");
  std::string verdict2 = take(again);
  auto strip_timing = [](std::string s) {
    auto pos = s.find("\"timing_ms\"");
    return pos == std::string::npos ? s : s.substr(0, pos);
  };
  expect(strip_timing(verdict_json) == strip_timing(verdict2), "verdict determinism");

  // Negative outcome maps to ULTK_CHECK_FAILED but still yields a report.
  expect(ultk_cyclotomic("1 - 2t + 4t^2 - 2t^3 + t^4", &report) == ULTK_CHECK_FAILED,
         "cyclotomic negative status");
  expect(take(report).find("\"is_cyclotomic_product\": false") != std::string::npos,
         "cyclotomic negative body");
  expect(ultk_cyclotomic("1 - 2t + 2t^2 - 2t^3 + t^4", &report) == ULTK_OK,
         "cyclotomic positive status");
  take(report);

  expect(ultk_newton("x^4*z^2 - x^3*z^3 - 2*x^2*z + 1", "x", "z", &report) == ULTK_OK,
         "newton status");
  expect(take(report).find("\"verdict\": \"irreducible\"") != std::string::npos,
         "newton verdict");

  std::string map_path = corpus + "/maps/pkernel.map";
  expect(ultk_kernel_verify(map_path.c_str(), &report) == ULTK_OK, "kernel status");
  expect(take(report).find("\"equal\": true") != std::string::npos, "kernel equal");

  // Corpus run through the API.
  expect(ultk_corpus_run(corpus.c_str(), 2, 0, &report) == ULTK_OK, "corpus status");
  expect(take(report).find("\"all_passed\": true") != std::string::npos, "corpus all passed");

  // Error paths.
  expect(ultk_ring_load("/nope.ring", &reparsed) == ULTK_ERR_IO, "io error status");
  expect(std::strlen(ultk_last_error()) > 0, "io error message");
  expect(ultk_ring_from_text("field rationals\nvar x 1\nrel y\n", &reparsed) ==
             ULTK_ERR_PARSE,
         "parse error status");
  expect(ultk_surjectivity(ring, 0, 2, 0, &report) == ULTK_ERR_ARG, "arg error status");
  expect(ultk_cyclotomic("0", &report) == ULTK_ERR_ARG, "zero polynomial rejected");
  expect(ultk_corpus_run("/not/a/corpus", 1, 0, &report) == ULTK_ERR_IO,
         "missing corpus dir");

  // Budget error surfaces distinctly. The ring must not already sit in the
  // in-process basis cache, so use a relation set no other test computes.
  setenv("ULTK_GB_MAX_STEPS", "1", 1);
  ultk_ring* tiny = nullptr;
  expect(ultk_ring_from_text("field rationals\nvar s 3\nvar t 3\nvar x 2\nvar y 2\nvar z 2\n"
                             "rel s^2 - x^3\nrel s*t - 5*y^3\nrel t^2 - z^3\n",
                             &tiny) == ULTK_OK,
         "load under budget env");
  expect(ultk_dim(tiny, &report) == ULTK_ERR_BUDGET, "budget exceeded status");
  unsetenv("ULTK_GB_MAX_STEPS");
  ultk_ring_free(tiny);
  ultk_ring_free(ring);

  if (failures == 0) {
    std::printf("capi: all checks passed\n");
    return 0;
  }
  std::fprintf(stderr, "capi: %d failures\n", failures);
  return 1;
}
