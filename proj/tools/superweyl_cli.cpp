#include <CLI11.hpp>
#include <omp.h>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "superweyl/combin.hpp"
#include "superweyl/report.hpp"
#include "superweyl/verify.hpp"

namespace {

const std::vector<std::string> kChecks{"closure", "derived", "axioms", "branching", "associators", "supermat"};

bool branching_applies(const sw::GroupSpec& s) { return s.n >= 3 && (s.kind != sw::Kind::D || s.n >= 5); }
bool axioms_apply(const sw::GroupSpec& s) {
  return s.kind == sw::Kind::A ? s.n >= 4 : s.kind == sw::Kind::B ? s.n >= 3 : true;
}

template <class F>
void guarded(sw::RunRecord& rec, const std::string& check, F&& f) {
  try {
    f();
  } catch (const std::exception& e) {
    rec.errors.push_back(check + ": " + e.what());
  }
}

int write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path);
  if (!f) {
    std::cerr << "cannot open " << path << "\n";
    return 1;
  }
  f << text;
  return f ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lie superalgebras generated by reflections in Weyl group algebras"};
  app.require_subcommand(1);

  std::vector<std::string> kinds{"B"};
  std::vector<int> ns{2};
  std::vector<std::string> checks{"all"};
  std::string format = "json", out, cache_dir = sw::default_cache_dir();
  int threads = 0;
  bool serial = false;
  sw::VerifyOptions opt;

  auto* verify = app.add_subcommand("verify", "run verification checks");
  verify->add_option("--kind", kinds, "group kinds")->check(CLI::IsMember({"A", "B", "D"}))->delimiter(',');
  verify->add_option("--n", ns, "ranks")->check(CLI::Range(2, sw::kMaxRank))->delimiter(',');
  std::vector<std::string> allowed = kChecks;
  allowed.push_back("all");
  verify->add_option("--check", checks, "checks to run")->check(CLI::IsMember(allowed))->delimiter(',');
  verify->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "markdown"}));
  verify->add_option("--threads", threads, "OpenMP threads (0: runtime default)")->check(CLI::NonNegativeNumber);
  verify->add_option("--max-order", opt.max_order, "largest group order accepted");
  verify->add_option("--out", out, "output file (default stdout)");
  verify->add_option("--budget-seconds", opt.budget_seconds, "per-phase wall-clock budget, 0 unlimited");
  verify->add_option("--shuffle-seed", opt.shuffle_seed, "shuffle the reflection generators (0: canonical order)");
  verify->add_option("--batch", opt.batch, "closure work units per batch")->check(CLI::PositiveNumber);
  verify->add_option("--fixpoint-max-order", opt.fixpoint_max_order, "re-bracket the closure up to this order");
  verify->add_option("--cache-dir", cache_dir, "multiplication-table cache (default $SUPERWEYL_CACHE_DIR)");
  verify->add_flag("--serial", serial, "use the serial reference kernel");

  std::string table_kind = "B";
  int table_n = 2;
  auto* table = app.add_subcommand("table", "print the simple-supermodule family table as CSV");
  table->add_option("--kind", table_kind, "group kind")->check(CLI::IsMember({"A", "B", "D"}));
  table->add_option("--n", table_n, "rank")->check(CLI::Range(2, sw::kMaxRank));

  CLI11_PARSE(app, argc, argv);

  if (*table) {
    try {
      std::cout << sw::family_table_csv({sw::parse_kind(table_kind), table_n});
    } catch (const std::exception& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
    return 0;
  }

  if (threads > 0) omp_set_num_threads(threads);
  opt.parallel = !serial;
  opt.cache_dir = cache_dir;

  std::set<std::string> want;
  const bool all = std::find(checks.begin(), checks.end(), "all") != checks.end();
  for (const auto& c : all ? kChecks : checks) want.insert(c);

  sw::ReportBundle bundle;
  bundle.threads = threads > 0 ? threads : omp_get_max_threads();
  bundle.fingerprint = sw::fingerprint(bundle.threads);

  std::set<std::pair<int, int>> seen;
  for (const auto& k : kinds)
    for (int n : ns) {
      const sw::GroupSpec s{sw::parse_kind(k), n};
      if (!seen.insert({static_cast<int>(s.kind), n}).second) continue;
      sw::RunRecord rec;
      rec.spec = s;
      try {
        sw::validate(s);
      } catch (const std::exception& e) {
        rec.errors.push_back(e.what());
        bundle.runs.push_back(std::move(rec));
        continue;
      }
      if (want.count("closure")) guarded(rec, "closure", [&] { rec.theorem = sw::verify_theorem(s, opt); });
      if (want.count("derived")) guarded(rec, "derived", [&] { rec.derived = sw::verify_derived(s, opt); });
      if (want.count("axioms") && (!all || axioms_apply(s)))
        guarded(rec, "axioms", [&] { rec.axioms = sw::verify_axioms(s, opt); });
      if (want.count("branching") && (!all || branching_applies(s)))
        guarded(rec, "branching", [&] {
          if (sw::group_order(s) > opt.max_order) throw std::invalid_argument("order above the cap");
          rec.branching = sw::verify_branching_all(s);
        });
      if (want.count("associators") && (!all || n <= 6))
        guarded(rec, "associators", [&] { rec.associators = sw::verify_associators(s.n); });
      bundle.runs.push_back(std::move(rec));
    }
  if (want.count("supermat")) {
    try {
      bundle.supermat = sw::verify_supermat(opt);
    } catch (const std::exception& e) {
      std::cerr << "supermat: " << e.what() << "\n";
      return 1;
    }
  }

  const std::string text = format == "json" ? sw::emit_json(bundle) : sw::emit_markdown(bundle);
  if (write_out(text, out) != 0) return 1;
  return sw::exit_code(sw::outcome(bundle));
}
