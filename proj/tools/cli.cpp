#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "hilbert/bitmap.hpp"
#include "hilbert/curve.hpp"
#include "hilbert/dfao.hpp"
#include "hilbert/error.hpp"
#include "hilbert/linrep.hpp"
#include "hilbert/sync.hpp"
#include "hilbert/verify.hpp"

namespace hilbert::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t parse_index(const std::string& text, bool base4) {
  if (base4) {
    try {
      return from_base(parse_digits(text, 4));
    } catch (const Error& e) {
      throw UsageError(std::string("bad base-4 index: ") + e.what());
    }
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw UsageError("expected a non-negative decimal integer, got '" + text + "'");
  return v;
}

template <typename T, typename Reader>
T load(const std::string& path, Reader reader) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return reader(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void with_output(const std::string& path, std::ostream& out,
                 const std::function<void(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    body(out);
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  body(f);
  if (!f) throw Error("write to '" + path + "' failed");
}

LatticePoint coords_by(const std::string& method, std::uint64_t n, const Budget& budget) {
  if (method == "sync") return sync_coords(hilbert_sync(), n);
  if (method == "linrep") {
    const ColVectorQ v = eval_linrep(hilbert_linrep(), n);
    return {static_cast<std::uint64_t>(v(0).to_int64()),
            static_cast<std::uint64_t>(v(1).to_int64())};
  }
  if (method == "oracle") return walk(hc_prefix(n, budget)).back();
  // dfao: follow the automaton's letters from the origin.
  if (generation_covering(n) > budget.max_generation)
    throw BudgetError("dfao walk to n=" + std::to_string(n) + " exceeds budget");
  const Dfao m = hilbert_dfao();
  DirectionWord letters;
  letters.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) letters.push_back(eval_dfao(m, i));
  return walk(letters).back();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert curve via automatic, regular and synchronized descriptions", "hilbert"};
  app.require_subcommand(1);

  int budget_flag = -1;
  app.add_option("--budget", budget_flag, "Largest generation that may be materialised")
      ->check(CLI::Range(0, 31));

  std::string n_text, x_text, y_text, method = "sync", out_path, kind, path;
  bool base4 = false;
  int gen = 0;
  SuiteBounds bounds;
  std::string sync_file, dfao_file, linrep_file;
  int queries = 1000;
  unsigned bench_exp = 30;

  auto* dir = app.add_subcommand("dir", "Print HC[n] as a letter and its 0-3 coding");
  dir->add_option("n", n_text, "Index")->required();
  dir->add_flag("--base4", base4, "Read n as base-4 digits");

  auto* coords = app.add_subcommand("coords", "Print the coordinates x y of point n");
  coords->add_option("n", n_text, "Index")->required();
  coords->add_option("--method", method, "oracle, dfao, linrep or sync")
      ->check(CLI::IsMember({"oracle", "dfao", "linrep", "sync"}));
  coords->add_flag("--base4", base4, "Read n as base-4 digits");

  auto* locate = app.add_subcommand("locate", "Print the index n of lattice point (x, y)");
  locate->add_option("x", x_text)->required();
  locate->add_option("y", y_text)->required();

  auto* render = app.add_subcommand("render", "Write generation g as a plain PBM");
  render->add_option("g", gen, "Generation (>= 1)")->required();
  render->add_option("-o,--output", out_path, "Output path ('-' for stdout)");

  auto* verify = app.add_subcommand("verify", "Run the bounded verification suite");
  verify->add_option("--gen-bound", bounds.gen_bound, "Identity checks for x = 4^0..4^N")
      ->check(CLI::Range(0, 11));
  verify->add_option("--digit-bound", bounds.digit_bound, "Sync checks over n < 4^T")
      ->check(CLI::Range(1, 8));
  verify->add_option("--cross-bound", bounds.cross_bound, "Cross checks over n < 4^B")
      ->check(CLI::Range(0, 7));
  verify->add_option("--sync-file", sync_file, "Synchronized automaton to test");
  verify->add_option("--dfao-file", dfao_file, "DFAO to test");
  verify->add_option("--linrep-file", linrep_file, "Coordinate representation to test");

  auto* exp = app.add_subcommand("export", "Write a built-in machine in text form");
  exp->add_option("kind", kind,
                  "dfao, sync, linrep, step-linrep, successor-linrep, difference-linrep, "
                  "minimized-linrep or semigroup-dfao")
      ->required();
  exp->add_option("path", path, "Output path ('-' for stdout)")->required();

  auto* imp = app.add_subcommand("import", "Parse a machine file and print its canonical form");
  imp->add_option("kind", kind, "dfao, sync or linrep")
      ->required()
      ->check(CLI::IsMember({"dfao", "sync", "linrep"}));
  imp->add_option("path", path, "Input path")->required();
  imp->add_option("-o,--output", out_path, "Output path ('-' for stdout)");

  auto* word = app.add_subcommand("word", "Print generation A_n as a U/R/D/L word");
  word->add_option("n", gen)->required()->check(CLI::NonNegativeNumber);

  auto* walk_cmd = app.add_subcommand("walk", "Print the points of A_n as CSV n,x,y");
  walk_cmd->add_option("n", gen)->required()->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "Time coordinate queries near 4^E");
  bench->add_option("--queries", queries)->check(CLI::Range(1, 1000000));
  bench->add_option("--exp", bench_exp, "Exponent E")->check(CLI::Range(1u, 31u));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    Budget budget = Budget::from_env();
    if (budget_flag >= 0) budget.max_generation = budget_flag;

    if (*dir) {
      const Direction d = eval_dfao(hilbert_dfao(), parse_index(n_text, base4));
      out << to_char(d) << ' ' << coding_of(d) << '\n';
    } else if (*coords) {
      const LatticePoint p = coords_by(method, parse_index(n_text, base4), budget);
      out << p.x << ' ' << p.y << '\n';
    } else if (*locate) {
      out << sync_locate(hilbert_sync(), parse_index(x_text, false), parse_index(y_text, false))
          << '\n';
    } else if (*render) {
      if (gen < 1) throw UsageError("render generation must be at least 1");
      const Bitmap b = render_generation(gen, budget);
      with_output(out_path, out, [&](std::ostream& o) { write_pbm(o, b); });
    } else if (*verify) {
      VerifyInputs in;
      in.budget = budget;
      if (!sync_file.empty()) in.sync = load<SyncAutomaton>(sync_file, read_sync);
      if (!dfao_file.empty()) in.dfao = load<Dfao>(dfao_file, read_dfao);
      if (!linrep_file.empty()) in.linrep = load<LinearRepQ>(linrep_file, read_linrep);
      const auto reports = verify_all(bounds, in);
      for (const auto& r : reports) out << format_report(r) << '\n';
      return all_passed(reports) ? kSuccess : kVerificationFailed;
    } else if (*exp) {
      using Writer = std::function<void(std::ostream&)>;
      const std::map<std::string, std::function<Writer()>> kinds{
          {"dfao", [] { return Writer([m = hilbert_dfao()](std::ostream& o) { write_dfao(o, m); }); }},
          {"sync", [] { return Writer([m = hilbert_sync()](std::ostream& o) { write_sync(o, m); }); }},
          {"linrep", [] { return Writer([r = hilbert_linrep()](std::ostream& o) { write_linrep(o, r); }); }},
          {"step-linrep", [] { return Writer([r = hilbert_step_rep()](std::ostream& o) { write_linrep(o, r); }); }},
          {"successor-linrep", [] { return Writer([r = hilbert_successor_rep()](std::ostream& o) { write_linrep(o, r); }); }},
          {"difference-linrep", [] { return Writer([r = hilbert_difference_rep()](std::ostream& o) { write_linrep(o, r); }); }},
          {"minimized-linrep", [] { return Writer([r = hilbert_minimized_step_rep()](std::ostream& o) { write_linrep(o, r); }); }},
          {"semigroup-dfao", [] {
             return Writer([m = direction_outputs(semigroup_trick(hilbert_minimized_step_rep()))](
                               std::ostream& o) { write_dfao(o, m); });
           }},
      };
      const auto it = kinds.find(kind);
      if (it == kinds.end()) throw UsageError("unknown export kind '" + kind + "'");
      with_output(path, out, it->second());
    } else if (*imp) {
      if (kind == "dfao") {
        const Dfao m = load<Dfao>(path, read_dfao);
        with_output(out_path, out, [&](std::ostream& o) { write_dfao(o, m); });
      } else if (kind == "sync") {
        const SyncAutomaton m = load<SyncAutomaton>(path, read_sync);
        with_output(out_path, out, [&](std::ostream& o) { write_sync(o, m); });
      } else {
        const LinearRepQ r = load<LinearRepQ>(path, read_linrep);
        with_output(out_path, out, [&](std::ostream& o) { write_linrep(o, r); });
      }
    } else if (*word) {
      out << to_string(generate_generation(gen, budget)) << '\n';
    } else if (*walk_cmd) {
      const auto points = walk(generate_generation(gen, budget));
      write_walk_csv(out, points);
    } else if (*bench) {
      const std::uint64_t base_n = std::uint64_t{1} << (2 * bench_exp);
      const SyncAutomaton sync = hilbert_sync();
      const LinearRepQ rep = hilbert_linrep();
      bool within_ceiling = true;
      for (const std::string m : {"linrep", "sync"}) {
        double worst = 0, total = 0;
        std::uint64_t checksum = 0;
        for (int q = 0; q < queries; ++q) {
          const std::uint64_t n = base_n - static_cast<std::uint64_t>(queries / 2) +
                                  static_cast<std::uint64_t>(q);
          const auto t0 = std::chrono::steady_clock::now();
          const LatticePoint p = m == "sync" ? sync_coords(sync, n) : [&] {
            const ColVectorQ v = eval_linrep(rep, n);
            return LatticePoint{static_cast<std::uint64_t>(v(0).to_int64()),
                                static_cast<std::uint64_t>(v(1).to_int64())};
          }();
          const auto t1 = std::chrono::steady_clock::now();
          const double us = std::chrono::duration<double, std::micro>(t1 - t0).count();
          worst = std::max(worst, us);
          total += us;
          checksum ^= p.x * 31 + p.y;
        }
        const double mean = total / queries;
        within_ceiling = within_ceiling && worst < 100000.0;
        out << "bench method=" << m << " n~4^" << bench_exp << " queries=" << queries
            << " mean_us=" << mean << " max_us=" << worst
            << " under_1ms=" << (mean < 1000.0 ? "true" : "false") << " checksum=" << checksum
            << '\n';
      }
      return within_ceiling ? kSuccess : kVerificationFailed;
    }
    return kSuccess;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetError& e) {
    err << "budget error: " << e.what() << '\n';
    return kBudgetError;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kVerificationFailed;
  }
}

}  // namespace hilbert::cli
