#include <omp.h>

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "valext/errors.hpp"
#include "valext/report.hpp"

using namespace valext;

namespace {

int emit(const Json& report, const std::string& format) {
  if (format == "json")
    std::cout << report.dump(2) << "\n";
  else
    std::cout << render_text(report);
  return failed_checks(report) == 0 ? 0 : 1;
}

template <class Fn>
int guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.message() << " at position " << e.position() << " (token '" << e.token() << "')\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "malformed corpus: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"valcli: extensions of discrete valuations, decomposition and inertia groups"};
  app.require_subcommand(1);

  ProblemSpec spec;
  std::string format = "text";
  const auto problem_options = [&](CLI::App* sub, bool with_w) {
    sub->add_option("--val", spec.valuation, "valuation: Q@p, Fp(p,t)@<poly in t>, Fp(p,t)@inf")->required();
    sub->add_option("--poly", spec.polys, "defining polynomial in x (repeatable)")->required();
    sub->add_option("--precision", spec.precision, "minimum working precision");
    sub->add_option("--seed", spec.seed, "seed for randomized searches");
    sub->add_option("--max-closure", spec.max_closure, "degree cap for the Galois closure");
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    if (with_w) sub->add_option("--w", spec.w, "index of the extension of v to L");
  };
  auto* ext = app.add_subcommand("extend", "all extensions of v to K[x]/(f)");
  problem_options(ext, false);
  auto* gal = app.add_subcommand("galois", "Galois closure with D, I, V at the first extension");
  problem_options(gal, false);
  auto* cls = app.add_subcommand("classify", "classification and subextension lattice of w/v");
  problem_options(cls, true);

  auto* ver = app.add_subcommand("verify", "run a corpus of problems with expected values");
  std::string corpus_file;
  bool builtin = false;
  int jobs = 0;
  ver->add_option("file", corpus_file, "corpus JSON file");
  ver->add_flag("--builtin", builtin, "use the builtin corpus");
  ver->add_option("--jobs", jobs, "worker threads (1 = serial)");
  ver->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  for (auto* sub : {ext, gal, cls})
    if (sub->parsed()) {
      spec.command = sub->get_name();
      return guarded([&] { return emit(run_problem(spec), format); });
    }

  return guarded([&] {
    if (builtin == !corpus_file.empty()) {
      std::cerr << "verify needs exactly one of a corpus file or --builtin\n";
      return 2;
    }
    std::string text;
    if (builtin) {
      text = builtin_corpus_text();
    } else {
      std::ifstream in(corpus_file);
      if (!in) {
        std::cerr << "cannot read " << corpus_file << "\n";
        return 2;
      }
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    }
    if (jobs > 0) omp_set_num_threads(jobs);
    auto out = verify_corpus(Json::parse(text), jobs != 1);
    if (format == "json")
      std::cout << out.report.dump(2) << "\n";
    else
      std::cout << render_verify_text(out);
    for (const auto& f : out.failures) std::cerr << "failed check: " << f << "\n";
    return out.exit_code;
  });
}
