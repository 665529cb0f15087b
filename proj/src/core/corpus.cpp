#include "corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <future>

#include "commands.hpp"
#include "errors.hpp"

namespace ultk {

namespace {

namespace fs = std::filesystem;

std::vector<std::string> string_list(const Json& j, const char* key) {
  std::vector<std::string> out;
  if (!j.contains(key)) return out;
  for (const auto& e : j.at(key)) out.push_back(e.get<std::string>());
  return out;
}

CommandOutcome dispatch(const Json& check, const fs::path& root) {
  std::string kind = check.at("kind").get<std::string>();
  auto ring = [&]() {
    return load_presentation((root / check.at("ring").get<std::string>()).string());
  };
  if (kind == "hilbert") return cmd_hilbert(ring());
  if (kind == "dim") return cmd_dim(ring());
  if (kind == "ci") return cmd_ci_check(ring());
  if (kind == "length") return cmd_length(ring(), string_list(check, "extra"));
  if (kind == "multiplicity") return cmd_multiplicity(ring(), string_list(check, "params"));
  if (kind == "gap") return cmd_gap(ring(), check.at("a").get<std::uint64_t>());
  if (kind == "surjectivity") {
    std::optional<std::uint64_t> j, jmax;
    if (check.contains("j")) j = check.at("j").get<std::uint64_t>();
    if (check.contains("jmax")) jmax = check.at("jmax").get<std::uint64_t>();
    return cmd_surjectivity(ring(), check.at("a").get<std::uint64_t>(), j, jmax);
  }
  if (kind == "truncation") {
    return cmd_truncation(ring(), check.at("a").get<std::uint64_t>(),
                          check.at("jmax").get<std::uint64_t>());
  }
  if (kind == "section-cert") return cmd_section_cert(ring());
  if (kind == "newton") {
    return cmd_newton(check.at("polynomial").get<std::string>(),
                      check.at("vars").at(0).get<std::string>(),
                      check.at("vars").at(1).get<std::string>());
  }
  if (kind == "kernel") {
    return cmd_kernel_verify(load_map((root / check.at("map").get<std::string>()).string()));
  }
  if (kind == "cyclotomic") return cmd_cyclotomic(check.at("polynomial").get<std::string>());
  if (kind == "verdict") {
    return cmd_verdict(ring(), check.value("a", 0ull), check.value("jmax", 0ull),
                       check.value("acknowledge", false));
  }
  if (kind == "rees") {
    return cmd_rees(ring(), string_list(check, "ideal"), string_list(check, "expected_relations"));
  }
  if (kind == "gr") {
    return cmd_gr(ring(), string_list(check, "ideal"), string_list(check, "expected_relations"),
                  string_list(check, "surjection_relations"));
  }
  throw ArgError("corpus: unknown check kind '" + kind + "'");
}

// Looks up a dot-separated path in the result tree.
const Json* lookup(const Json& root, const std::string& path) {
  const Json* cur = &root;
  std::size_t start = 0;
  while (start <= path.size()) {
    std::size_t dot = path.find('.', start);
    std::string key = path.substr(start, dot == std::string::npos ? dot : dot - start);
    if (cur->is_object() && cur->contains(key)) {
      cur = &cur->at(key);
    } else {
      return nullptr;
    }
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  return cur;
}

struct EntryRow {
  std::string name;
  std::string provenance;
  std::string status;  // pass | fail | error | skipped | info
  std::string detail;
  bool experimental = false;
};

EntryRow run_entry(const Json& entry, const fs::path& root, bool include_experimental) {
  EntryRow row;
  row.name = entry.value("name", std::string("<unnamed>"));
  row.provenance = entry.value("provenance", std::string(""));
  row.experimental = entry.value("experimental", false);
  if (row.experimental && !include_experimental) {
    row.status = "skipped";
    row.detail = "experimental entry; enable with --experimental";
    return row;
  }
  try {
    CommandOutcome outcome = dispatch(entry.at("check"), root);
    bool ok = true;
    std::string detail;
    if (entry.contains("expect")) {
      for (const auto& [path, expected] : entry.at("expect").items()) {
        const Json* actual = lookup(outcome.result, path);
        if (!actual) {
          ok = false;
          detail = "missing result field '" + path + "'";
          break;
        }
        if (*actual != expected) {
          ok = false;
          detail = path + ": expected " + expected.dump() + ", got " + actual->dump();
          break;
        }
      }
    } else {
      ok = outcome.passed;
      if (!ok) detail = "check reported failure";
    }
    if (row.experimental) {
      row.status = "info";
      row.detail = ok ? "ran (informational)" : "ran (informational); " + detail;
    } else {
      row.status = ok ? "pass" : "fail";
      row.detail = detail;
    }
  } catch (const Error& e) {
    row.status = row.experimental ? "info" : "error";
    row.detail = e.what();
  }
  return row;
}

}  // namespace

CorpusRun corpus_run(const std::string& dir, unsigned jobs, bool include_experimental) {
  fs::path root(dir);
  fs::path entries_dir = root / "entries";
  if (!fs::is_directory(entries_dir)) {
    throw IoError("corpus directory '" + dir + "' has no entries/ subdirectory");
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(entries_dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw IoError("corpus directory '" + dir + "' contains no entries");
  }

  std::vector<Json> entries;
  for (const auto& f : files) {
    try {
      entries.push_back(Json::parse(read_file(f.string())));
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError("corpus entry " + f.filename().string() + ": " + e.what(), 1, 1);
    }
  }

  std::vector<EntryRow> rows(entries.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < entries.size(); ++i) {
      rows[i] = run_entry(entries[i], root, include_experimental);
    }
  } else {
    // Entries are independent and pure; run them on a small async pool.
    std::vector<std::future<EntryRow>> futures(entries.size());
    std::size_t next = 0;
    while (next < entries.size()) {
      std::size_t batch = std::min<std::size_t>(jobs, entries.size() - next);
      for (std::size_t k = 0; k < batch; ++k) {
        std::size_t i = next + k;
        futures[i] = std::async(std::launch::async, [&entries, i, &root,
                                                     include_experimental] {
          return run_entry(entries[i], root, include_experimental);
        });
      }
      for (std::size_t k = 0; k < batch; ++k) rows[next + k] = futures[next + k].get();
      next += batch;
    }
  }

  CorpusRun run;
  run.table = Json::array();
  for (const auto& r : rows) {
    run.table.push_back(Json{{"name", r.name},
                             {"provenance", r.provenance},
                             {"status", r.status},
                             {"detail", r.detail},
                             {"experimental", r.experimental}});
    if (r.status == "pass") ++run.passed;
    if (r.status == "fail") ++run.failed;
    if (r.status == "error") ++run.errors;
    if (r.status == "skipped") ++run.skipped;
  }
  run.all_passed = run.failed == 0 && run.errors == 0;
  return run;
}

}  // namespace ultk
