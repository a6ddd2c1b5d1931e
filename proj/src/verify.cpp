#include <sstream>

#include "valext/errors.hpp"
#include "valext/report.hpp"

namespace valext {

namespace {

std::string short_dump(const Json& j) {
  std::string s = j.dump();
  return s.size() > 80 ? s.substr(0, 77) + "..." : s;
}

// every leaf of `want` must be present and equal in `got`; arrays match by
// length and position
void compare(const Json& want, const Json& got, const std::string& path, std::size_t& checks,
             std::vector<std::string>& fails) {
  if (want.is_object()) {
    for (const auto& [k, w] : want.items()) {
      const std::string p = path.empty() ? k : path + "." + k;
      if (!got.is_object() || !got.contains(k)) {
        ++checks;
        fails.push_back("expect " + p + ": missing");
        continue;
      }
      compare(w, got.at(k), p, checks, fails);
    }
    return;
  }
  if (want.is_array()) {
    ++checks;
    if (!got.is_array() || got.size() != want.size()) {
      fails.push_back("expect " + path + ": expected " + std::to_string(want.size()) + " entries, got " +
                      (got.is_array() ? std::to_string(got.size()) : short_dump(got)));
      return;
    }
    for (std::size_t i = 0; i < want.size(); ++i)
      compare(want[i], got[i], path + "[" + std::to_string(i) + "]", checks, fails);
    return;
  }
  ++checks;
  if (want != got) fails.push_back("expect " + path + ": expected " + short_dump(want) + ", got " + short_dump(got));
}

struct EntryResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  std::string error;
  int code = 0;
  Json report;
};

EntryResult run_entry(const Json& entry, std::size_t index) {
  EntryResult r;
  r.name = entry.value("name", "entry " + std::to_string(index));
  try {
    ProblemSpec spec = spec_from_json(entry.at("spec"));
    spec.name = r.name;
    r.report = run_problem(spec, false);
    for (const auto& c : r.report.at("checks")) {
      ++r.checks;
      if (!c.at("pass").get<bool>()) r.failures.push_back(c.at("name").get<std::string>());
    }
    if (entry.contains("expect")) compare(entry.at("expect"), r.report, "", r.checks, r.failures);
    if (!r.failures.empty()) r.code = 1;
  } catch (const ParseError& e) {
    r.error = e.what();
    r.code = 2;
  } catch (const ResourceError& e) {
    r.error = e.what();
    r.code = 3;
  } catch (const std::exception& e) {
    r.error = e.what();
    r.code = 2;
  }
  if (!r.error.empty()) {
    ++r.checks;
    r.failures.push_back("run: " + r.error);
  }
  return r;
}

}  // namespace

VerifyOutcome verify_corpus(const Json& corpus, bool parallel) {
  const Json entries = corpus.is_array() ? corpus : corpus.value("entries", Json::array());
  const long n = static_cast<long>(entries.size());
  std::vector<EntryResult> results(entries.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (long i = 0; i < n; ++i) results[i] = run_entry(entries[i], static_cast<std::size_t>(i));

  VerifyOutcome out;
  Json rows = Json::array();
  for (const auto& r : results) {
    out.checks += r.checks;
    for (const auto& f : r.failures) out.failures.push_back(r.name + ": " + f);
    Json row{{"name", r.name}, {"checks", r.checks}, {"failed", r.failures}};
    if (!r.error.empty()) row["error"] = r.error;
    rows.push_back(std::move(row));
    // parse and resource errors outrank plain verification failures
    if (r.code >= 2 && out.exit_code < 2) out.exit_code = r.code;
    if (r.code == 1 && out.exit_code == 0) out.exit_code = 1;
  }
  out.report = Json{{"entries", rows}, {"checks", out.checks}, {"failed", out.failures}, {"exit_code", out.exit_code}};
  return out;
}

std::string render_verify_text(const VerifyOutcome& v) {
  std::ostringstream o;
  for (const auto& e : v.report.at("entries")) {
    const auto& failed = e.at("failed");
    o << (failed.empty() ? "PASS " : "FAIL ") << e.at("name").get<std::string>() << " (" << e.at("checks").get<std::size_t>()
      << " checks)\n";
    for (const auto& f : failed) o << "  failed: " << f.get<std::string>() << "\n";
  }
  o << v.checks << " checks, " << v.failures.size() << " failed\n";
  return o.str();
}

}  // namespace valext
