// Command-line front end for the ulrichtk shared library. Talks to the
// library exclusively through the public C API in ulrichtk.h.
//
// Exit codes: 0 all checks passed / answer computed, 1 a mathematical check
// failed, 2 usage, parse, I/O or budget error.

#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "ulrichtk.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitError = 2;

void usage(std::FILE* to) {
  std::fprintf(to, "%s",
               "usage: ulrichtk <command> [arguments] [--json]\n"
               "\n"
               "commands:\n"
               "  hilbert <ring-file>                  exact Hilbert series\n"
               "  dim <ring-file>                      Krull dimension\n"
               "  ci-check <ring-file>                 complete-intersection test + witness\n"
               "  length <ring-file> [poly ...]        k-length of ring/(polys)\n"
               "                                       (default polys: the file's params)\n"
               "  multiplicity <ring-file> [poly ...]  reduction-length multiplicity\n"
               "  surjectivity <ring-file> --a N (--j N | --jmax N)\n"
               "                                       multiplication-map surjectivity\n"
               "  truncation <ring-file> --a N --jmax N\n"
               "                                       power-vs-truncation check\n"
               "  section-cert <ring-file>             verify the file's section-ring cert\n"
               "  newton <poly> --vars X,Y             Newton polygon irreducibility cert\n"
               "  kernel-verify <map-file>             kernel of a ring map vs expected\n"
               "  cyclotomic <poly-in-t>               cyclotomic-product analysis\n"
               "  verdict <ring-file> [--a N] [--jmax N] [--acknowledge-assumptions]\n"
               "                                       assemble the non-existence verdict\n"
               "  corpus [dir] [--jobs N] [--experimental]\n"
               "                                       run the bundled example corpus\n"
               "\n"
               "flags:\n"
               "  --json      print the raw JSON report instead of text\n"
               "  --help      this text\n"
               "\n"
               "environment: ULTK_GB_MAX_STEPS, ULTK_GB_MAX_BASIS override the Groebner "
               "budget.\n");
}

int fail_error() {
  std::fprintf(stderr, "error: %s\n", ultk_last_error());
  return kExitError;
}

int print_report(ultk_status status, char* report, bool json) {
  if (status != ULTK_OK && status != ULTK_CHECK_FAILED) return fail_error();
  if (json) {
    std::printf("%s\n", report);
  } else {
    char* text = nullptr;
    if (ultk_report_to_text(report, &text) != ULTK_OK) {
      ultk_string_free(report);
      return fail_error();
    }
    std::printf("%s", text);
    ultk_string_free(text);
  }
  ultk_string_free(report);
  return status == ULTK_OK ? kExitOk : kExitCheckFailed;
}

struct Args {
  std::vector<std::string> positional;
  bool json = false;
  bool acknowledge = false;
  bool experimental = false;
  unsigned long a = 0, j = 0, jmax = 0, jobs = 1;
  std::string vars;
  bool ok = true;
};

bool parse_ulong(const std::string& s, unsigned long* out) {
  if (s.empty()) return false;
  char* end = nullptr;
  unsigned long v = std::strtoul(s.c_str(), &end, 10);
  if (end == nullptr || *end != '\0') return false;
  *out = v;
  return true;
}

Args parse_args(int argc, char** argv, int from) {
  Args args;
  for (int i = from; i < argc; ++i) {
    std::string arg = argv[i];
    auto want_value = [&](unsigned long* slot) {
      if (i + 1 >= argc || !parse_ulong(argv[i + 1], slot)) {
        std::fprintf(stderr, "error: flag %s needs a numeric value\n", arg.c_str());
        args.ok = false;
        return;
      }
      ++i;
    };
    if (arg == "--json") {
      args.json = true;
    } else if (arg == "--acknowledge-assumptions") {
      args.acknowledge = true;
    } else if (arg == "--experimental") {
      args.experimental = true;
    } else if (arg == "--a") {
      want_value(&args.a);
    } else if (arg == "--j") {
      want_value(&args.j);
    } else if (arg == "--jmax") {
      want_value(&args.jmax);
    } else if (arg == "--jobs") {
      want_value(&args.jobs);
    } else if (arg == "--vars") {
      if (i + 1 >= argc) {
        std::fprintf(stderr, "error: --vars needs a value like x,z\n");
        args.ok = false;
      } else {
        args.vars = argv[++i];
      }
    } else if (arg == "--help") {
      usage(stdout);
      std::exit(kExitOk);
    } else if (arg.rfind("--", 0) == 0) {
      std::fprintf(stderr, "error: unknown flag '%s'\n", arg.c_str());
      usage(stderr);
      args.ok = false;
    } else {
      args.positional.push_back(arg);
    }
    if (!args.ok) break;
  }
  return args;
}

ultk_ring* load_or_die(const std::string& path) {
  ultk_ring* ring = nullptr;
  if (ultk_ring_load(path.c_str(), &ring) != ULTK_OK) {
    std::fprintf(stderr, "error: %s\n", ultk_last_error());
    std::exit(kExitError);
  }
  return ring;
}

std::vector<const char*> c_list(const std::vector<std::string>& items, std::size_t from) {
  std::vector<const char*> out;
  for (std::size_t i = from; i < items.size(); ++i) out.push_back(items[i].c_str());
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    usage(stderr);
    return kExitError;
  }
  std::string command = argv[1];
  if (command == "--help" || command == "help") {
    usage(stdout);
    return kExitOk;
  }
  Args args = parse_args(argc, argv, 2);
  if (!args.ok) return kExitError;

  auto need_file = [&](const char* what) -> const std::string* {
    if (args.positional.empty()) {
      std::fprintf(stderr, "error: %s requires a %s argument\n", command.c_str(), what);
      std::exit(kExitError);
    }
    return &args.positional[0];
  };

  char* report = nullptr;
  if (command == "hilbert" || command == "dim" || command == "ci-check" ||
      command == "section-cert") {
    ultk_ring* ring = load_or_die(*need_file("ring file"));
    ultk_status status;
    if (command == "hilbert") {
      status = ultk_hilbert(ring, &report);
    } else if (command == "dim") {
      status = ultk_dim(ring, &report);
    } else if (command == "ci-check") {
      status = ultk_ci_check(ring, &report);
    } else {
      status = ultk_section_cert(ring, &report);
    }
    ultk_ring_free(ring);
    return print_report(status, report, args.json);
  }
  if (command == "length" || command == "multiplicity") {
    ultk_ring* ring = load_or_die(*need_file("ring file"));
    auto polys = c_list(args.positional, 1);
    ultk_status status =
        command == "length"
            ? ultk_length(ring, polys.data(), polys.size(), &report)
            : ultk_multiplicity(ring, polys.data(), polys.size(), &report);
    ultk_ring_free(ring);
    return print_report(status, report, args.json);
  }
  if (command == "surjectivity") {
    if (args.a == 0 || (args.j == 0 && args.jmax == 0)) {
      std::fprintf(stderr, "error: surjectivity needs --a N and one of --j N / --jmax N\n");
      return kExitError;
    }
    ultk_ring* ring = load_or_die(*need_file("ring file"));
    ultk_status status = ultk_surjectivity(ring, args.a, args.j, args.jmax, &report);
    ultk_ring_free(ring);
    return print_report(status, report, args.json);
  }
  if (command == "truncation") {
    if (args.a == 0 || args.jmax == 0) {
      std::fprintf(stderr, "error: truncation needs --a N and --jmax N\n");
      return kExitError;
    }
    ultk_ring* ring = load_or_die(*need_file("ring file"));
    ultk_status status = ultk_truncation(ring, args.a, args.jmax, &report);
    ultk_ring_free(ring);
    return print_report(status, report, args.json);
  }
  if (command == "verdict") {
    ultk_ring* ring = load_or_die(*need_file("ring file"));
    ultk_status status =
        ultk_verdict(ring, args.a, args.jmax, args.acknowledge ? 1 : 0, &report);
    ultk_ring_free(ring);
    return print_report(status, report, args.json);
  }
  if (command == "newton") {
    const std::string* poly = need_file("polynomial");
    auto comma = args.vars.find(',');
    if (args.vars.empty() || comma == std::string::npos) {
      std::fprintf(stderr, "error: newton needs --vars X,Y\n");
      return kExitError;
    }
    std::string v1 = args.vars.substr(0, comma);
    std::string v2 = args.vars.substr(comma + 1);
    ultk_status status = ultk_newton(poly->c_str(), v1.c_str(), v2.c_str(), &report);
    return print_report(status, report, args.json);
  }
  if (command == "kernel-verify") {
    ultk_status status = ultk_kernel_verify(need_file("map file")->c_str(), &report);
    return print_report(status, report, args.json);
  }
  if (command == "cyclotomic") {
    ultk_status status = ultk_cyclotomic(need_file("polynomial")->c_str(), &report);
    return print_report(status, report, args.json);
  }
  if (command == "corpus") {
    std::string dir = args.positional.empty() ? "corpus" : args.positional[0];
    ultk_status status = ultk_corpus_run(dir.c_str(), static_cast<unsigned>(args.jobs),
                                         args.experimental ? 1 : 0, &report);
    return print_report(status, report, args.json);
  }
  std::fprintf(stderr, "error: unknown command '%s'\n", command.c_str());
  usage(stderr);
  return kExitError;
}
