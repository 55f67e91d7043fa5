#include "cli.hpp"

#include "sqpack/adversary.hpp"
#include "sqpack/hole_analysis.hpp"
#include "sqpack/io.hpp"
#include "sqpack/slot_analysis.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <ostream>

namespace sqpack {

namespace {

// Raised for usage problems found after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Scalar option_scalar(const std::string& text, const char* what) {
  try {
    return parse_scalar(text);
  } catch (const std::exception&) {
    throw UsageError(std::string("bad ") + what + " '" + text + "'");
  }
}

std::vector<SquareItem> load_instance(const std::string& path) {
  return make_items(parse_instance(read_file(path)).sides);
}

Packing run_strategy(const std::string& name, const std::vector<SquareItem>& seq) {
  auto s = make_strategy(name);
  for (const auto& it : seq) s->place(it);
  return s->packing();
}

std::string decimal(const Scalar& v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", to_double(v));
  return buf;
}

int report_checks(const std::vector<CheckLine>& checks, std::ostream& err) {
  if (const CheckLine* f = first_failure(checks)) {
    err << "FAIL " << f->name << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online square packing with Tetris and gravity constraints", "sqpack"};
  app.require_subcommand(1);
  const std::vector<std::string> strategies{"bottomleft", "slot"};

  std::string strategy, input, csv_out, svg_out, placements, report_out, out_path;
  std::string epsilon = "1/100", delta, min_side = "1/64", max_side = "1";
  bool stats = false;
  int iterations = 0, k = 0, n = 0;
  std::uint64_t seed = 0;

  auto* run = app.add_subcommand("run", "Pack an instance with one strategy");
  run->add_option("--strategy", strategy)->required()->check(CLI::IsMember(strategies));
  run->add_option("--input", input)->required();
  run->add_option("--csv", csv_out);
  run->add_option("--svg", svg_out);
  run->add_flag("--stats", stats);

  auto* verify = app.add_subcommand("verify", "Check a placements CSV against an instance");
  verify->add_option("--input", input)->required();
  verify->add_option("--placements", placements)->required();

  auto* analyze = app.add_subcommand("analyze", "Hole or charge analysis with all checks");
  analyze->add_option("--strategy", strategy)->required()->check(CLI::IsMember(strategies));
  analyze->add_option("--input", input)->required();
  analyze->add_option("--svg", svg_out);

  auto* adversary = app.add_subcommand("adversary", "Play the adaptive 5/4 adversary");
  adversary->add_option("--strategy", strategy)->required()->check(CLI::IsMember(strategies));
  adversary->add_option("--iterations", iterations)->required()->check(CLI::PositiveNumber);
  adversary->add_option("--epsilon", epsilon);
  adversary->add_option("--report", report_out);

  auto* killer = app.add_subcommand("killer", "Run the slot algorithm on equal squares just above a power of 1/2");
  killer->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  killer->add_option("--delta", delta)->required();
  killer->add_option("--n", n)->required()->check(CLI::PositiveNumber);
  killer->add_flag("--stats", stats);

  auto* gen = app.add_subcommand("gen-random", "Write a random instance on the 2^-20 grid");
  gen->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed)->required();
  gen->add_option("--min", min_side);
  gen->add_option("--max", max_side);
  gen->add_option("--out", out_path)->required();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) {
      auto seq = load_instance(input);
      Packing p = run_strategy(strategy, seq);
      if (!csv_out.empty()) write_file(csv_out, placements_csv(p));
      if (!svg_out.empty()) write_file(svg_out, render_svg(p));
      if (!stats) {
        out << "height " << to_string(packing_height(p)) << "\n";
        return 0;
      }
      RunStats st = run_stats(p);
      if (strategy == "bottomleft") {
        BottomLeftAnalysis a = analyze_bottom_left(p);
        st.hole_sum = a.hole_area;
        st.max_charge = a.ledger.total.empty() ? Scalar(0) : *std::max_element(a.ledger.total.begin(), a.ledger.total.end());
      } else {
        SlotAnalysis a = analyze_slot(seq);
        Scalar m = 0;
        for (std::size_t i = 0; i < a.charges.regions.size(); ++i) {
          const Scalar& side = a.closed.placements()[i].side();
          m = std::max(m, a.charges.regions[i].area / (side * side));
        }
        st.max_charge = m;
      }
      out << format_stats(st);
      return 0;
    }

    if (verify->parsed()) {
      auto seq = load_instance(input);
      auto pls = parse_placements_csv(read_file(placements));
      if (pls.size() != seq.size()) {
        err << "placement count " << pls.size() << " does not match instance size " << seq.size() << "\n";
        return 1;
      }
      for (std::size_t i = 0; i < seq.size(); ++i)
        if (pls[i].item.id != seq[i].id || pls[i].side() != seq[i].side) {
          err << "row " << i + 1 << " does not match square " << seq[i].id << "\n";
          return 1;
        }
      VerificationReport r = verify_packing(seq, pls);
      (r.passed() ? out : err) << r.describe() << "\n";
      return r.passed() ? 0 : 1;
    }

    if (analyze->parsed()) {
      auto seq = load_instance(input);
      if (strategy == "bottomleft") {
        Packing p = bl_run(seq);
        BottomLeftAnalysis a = analyze_bottom_left(p);
        out << a.report();
        if (!svg_out.empty()) {
          SvgOptions opt;
          for (const auto& h : a.extracted)
            for (const auto& c : h.region.cells()) opt.hatched.push_back(c);
          write_file(svg_out, render_svg(p, opt));
        }
        return report_checks(a.checks, err);
      }
      SlotAnalysis a = analyze_slot(seq);
      out << a.report();
      if (!svg_out.empty()) {
        SvgOptions opt;
        for (const auto& r : a.charges.regions) opt.hatched.insert(opt.hatched.end(), r.cells.begin(), r.cells.end());
        Packing p = a.closed;
        Packing orig;
        for (std::size_t i = 0; i + 1 < p.size(); ++i) orig.add(p.placements()[i]);
        write_file(svg_out, render_svg(orig, opt));
      }
      return report_checks(a.checks, err);
    }

    if (adversary->parsed()) {
      Scalar eps = option_scalar(epsilon, "epsilon");
      auto s = make_strategy(strategy);
      AdversaryTranscript t = adversary_run(*s, iterations, eps);
      Packing opt = optimal_packing_for_transcript(t);
      Scalar h = t.height(t.iterations.size()), o = packing_height(opt);
      long type_i = std::count_if(t.iterations.begin(), t.iterations.end(),
                                  [](const AdversaryIteration& it) { return it.type == IterationType::type_i; });
      out << "iterations " << t.iterations.size() << " type_I " << type_i << " type_II "
          << t.iterations.size() - static_cast<std::size_t>(type_i) << "\n";
      out << "height " << to_string(h) << "\n";
      out << "optimum " << to_string(o) << "\n";
      out << "ratio " << to_string(h / o) << " (" << decimal(h / o) << ")\n";
      auto checks = adversary_checks(t, opt);
      for (const auto& c : checks) out << format_check(c) << "\n";
      if (!report_out.empty()) write_file(report_out, t.serialize());
      return report_checks(checks, err);
    }

    if (killer->parsed()) {
      Scalar d = option_scalar(delta, "delta");
      std::vector<SquareItem> seq;
      try {
        seq = slot_killer_instance(k, d, n);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      Packing p = slot_run(seq);
      RunStats s = run_stats(p);
      if (stats)
        out << format_stats(s);
      else
        out << "height " << to_string(s.height) << "\n";
      out << "height_over_area " << to_string(s.height / s.area_sum) << " (" << decimal(s.height / s.area_sum) << ")\n";
      return 0;
    }

    if (gen->parsed()) {
      Scalar lo = option_scalar(min_side, "min"), hi = option_scalar(max_side, "max");
      if (!(lo > 0) || hi > 1 || lo > hi) throw UsageError("need 0 < min <= max <= 1");
      std::vector<Scalar> sides;
      try {
        sides = gen_random(n, seed, lo, hi);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_file(out_path, format_instance(sides));
      return 0;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InvariantError& e) {
    err << "FAIL " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace sqpack
