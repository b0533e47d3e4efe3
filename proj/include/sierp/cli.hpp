/* sierp: Sierpinski-gasket logic function toolkit
 * SPDX-License-Identifier: MIT
 */

/*!
  \file cli.hpp
  \brief Command-line front end and benchmark harness.

  Exit codes: 0 success, 1 invalid result (failed verification), 2 usage
  error, 3 I/O or parse error.
*/

#pragma once

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sierp/esop.hpp"
#include "sierp/gasket.hpp"
#include "sierp/gfsop.hpp"
#include "sierp/minimize.hpp"
#include "sierp/pla.hpp"
#include "sierp/render.hpp"
#include "sierp/verify.hpp"
#include "sierp/xor_triangle.hpp"

namespace sierp::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;

namespace detail {

inline logic_spec load_pla(const std::string& path, std::ostream& err) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  logic_spec spec = parse_pla(in);
  spec.name = std::filesystem::path(path).stem().string();
  for (const auto& w : spec.warnings)
    err << path << ": " << w << "\n";
  return spec;
}

inline esop load_esop(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  return parse_esop(in);
}

inline quaternary_function load_q4(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("cannot open '" + path + "'");
  return parse_q4(in);
}

inline void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out)
    throw parse_error("cannot write '" + path + "'");
  out << content;
}

inline std::string fmt_seconds(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << s;
  return os.str();
}

inline minimize_config make_config(const std::string& cost, const std::string& init,
                                   std::uint64_t seed, std::uint64_t iters, std::uint32_t restarts,
                                   std::uint32_t budget) {
  minimize_config cfg;
  if (cost == "terms")
    cfg.metric = cost_metric::terms;
  else if (cost == "literals")
    cfg.metric = cost_metric::literals;
  else if (cost == "lex")
    cfg.metric = cost_metric::lexicographic;
  else
    throw CLI::ValidationError("--cost must be terms, literals or lex");
  if (init == "minterms")
    cfg.init = init_strategy::minterms;
  else if (init == "pprm")
    cfg.init = init_strategy::pprm;
  else if (init == "best_fixed")
    cfg.init = init_strategy::best_fixed;
  else if (init == "disjoint_cubes")
    cfg.init = init_strategy::disjoint_cubes;
  else if (init != "auto")
    throw CLI::ValidationError("--init must be auto, minterms, pprm, best_fixed or disjoint_cubes");
  cfg.rng_seed = seed;
  cfg.max_iterations = iters;
  cfg.restarts = restarts;
  cfg.perturbation_budget = budget;
  return cfg;
}

struct bench_row {
  std::string name;
  std::uint32_t inputs = 0, outputs = 0;
  std::uint64_t terms_sum = 0, terms_union = 0, literals = 0;
  double wall_time = 0.0;
  bool verified = false;
  std::uint64_t seed = 0;
};

inline void write_bench_csv(const std::vector<bench_row>& rows, bool timing, std::ostream& os) {
  os << "name,in,out,terms_sum,terms_union,literals,time_s,verified,seed\n";
  for (const auto& r : rows) {
    os << r.name << ',' << r.inputs << ',' << r.outputs << ',' << r.terms_sum << ','
       << r.terms_union << ',' << r.literals << ',' << fmt_seconds(timing ? r.wall_time : 0.0)
       << ',' << (r.verified ? 1 : 0) << ',' << r.seed << "\n";
  }
}

} // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sierpinski-gasket representation and AND-XOR minimization of logic functions"};
  app.require_subcommand(1);

  // stats
  std::uint32_t stats_n = 1;
  auto* stats = app.add_subcommand("stats", "structural counts of the n-variable gasket");
  stats->add_option("n", stats_n, "variable count")->required();

  // build
  std::string build_file;
  std::uint32_t build_output = 0;
  auto* build = app.add_subcommand("build", "build the spectrum of a PLA output");
  build->add_option("pla", build_file, "PLA file")->required();
  build->add_option("--output", build_output, "output index (default 0)");

  // minimize
  std::string min_file, min_cost = "lex", min_init = "auto", min_emit, min_report;
  std::uint64_t min_seed = 1, min_iters = 10000;
  std::uint32_t min_restarts = 8, min_budget = 4;
  std::int64_t min_output = -1;
  auto* min = app.add_subcommand("minimize", "minimize the ESOP of a PLA");
  min->add_option("pla", min_file, "PLA file")->required();
  min->add_option("--cost", min_cost, "terms|literals|lex (default lex)")
      ->check(CLI::IsMember({"terms", "literals", "lex"}));
  min->add_option("--init", min_init, "auto|minterms|pprm|best_fixed|disjoint_cubes")
      ->check(CLI::IsMember({"auto", "minterms", "pprm", "best_fixed", "disjoint_cubes"}));
  min->add_option("--seed", min_seed, "rng seed (default 1)");
  min->add_option("--iters", min_iters, "iteration cap (default 10000)");
  min->add_option("--restarts", min_restarts, "restart count (default 8)");
  min->add_option("--budget", min_budget, "perturbation budget (default 4)");
  min->add_option("--emit", min_emit, "write the result as an ESOP file");
  min->add_option("--report", min_report, "write a JSON report");
  min->add_option("--output", min_output, "minimize a single output index");
  bool min_terms = false;
  min->add_flag("--terms", min_terms, "list the result terms as gasket coordinates");

  // verify
  std::string ver_pla, ver_esop, ver_mode = "exhaustive";
  std::uint32_t ver_output = 0;
  auto* ver = app.add_subcommand("verify", "check an ESOP file against a PLA");
  ver->add_option("pla", ver_pla, "PLA file")->required();
  ver->add_option("esop", ver_esop, "ESOP file")->required();
  ver->add_option("--output", ver_output, "output index (default 0)");
  ver->add_option("--mode", ver_mode, "exhaustive|sampled")
      ->check(CLI::IsMember({"exhaustive", "sampled"}));

  // render
  std::string ren_pla, ren_format = "svg", ren_out, ren_esop;
  std::uint32_t ren_output = 0;
  bool ren_triangle = false;
  auto* ren = app.add_subcommand("render", "render the gasket or XOR triangle of a PLA output");
  ren->add_option("pla", ren_pla, "PLA file")->required();
  ren->add_option("--format", ren_format, "svg|text (default svg)")
      ->check(CLI::IsMember({"svg", "text"}));
  ren->add_option("-o,--out", ren_out, "output file (default stdout)");
  ren->add_option("--output", ren_output, "output index (default 0)");
  ren->add_option("--esop", ren_esop, "ESOP file drawn as the marking");
  ren->add_flag("--triangle", ren_triangle, "render the XOR triangle instead of the gasket");

  // bench
  std::string bench_dir, bench_out, bench_cost = "lex";
  std::uint64_t bench_seed = 1;
  bool bench_timing = false, bench_memory = false;
  auto* bench = app.add_subcommand("bench", "minimize every .pla in a directory, emit CSV");
  bench->add_option("dir", bench_dir, "directory of .pla files")->required();
  bench->add_option("-o,--out", bench_out, "CSV file (default stdout)");
  bench->add_option("--seed", bench_seed, "rng seed (default 1)");
  bench->add_option("--cost", bench_cost, "terms|literals|lex")
      ->check(CLI::IsMember({"terms", "literals", "lex"}));
  bench->add_flag("--timing", bench_timing, "report wall time in the CSV (non-reproducible)");
  bench->add_flag("--report-memory", bench_memory, "report marking storage in bytes");

  // gf4
  auto* gf4cmd = app.add_subcommand("gf4", "4-valued paths");
  std::string pair_pla, pair_out;
  auto* pair = gf4cmd->add_subcommand("pair", "pair a binary PLA into quaternary functions");
  pair->add_option("pla", pair_pla, "PLA file")->required();
  pair->add_option("-o,--out", pair_out, "output file base (writes <base>.<k>.q4)");
  std::string gmin_file, gmin_emit;
  std::uint64_t gmin_seed = 1;
  auto* gmin = gf4cmd->add_subcommand("minimize", "minimize a GFSOP");
  gmin->add_option("input", gmin_file, "quaternary .q4 file or binary .pla to pair")->required();
  gmin->add_option("--seed", gmin_seed, "recorded seed (default 1)");
  gmin->add_option("--emit", gmin_emit, "write the result as a GFSOP file");
  gf4cmd->require_subcommand(1);

  try {
    std::reverse(args.begin(), args.end()); // CLI11 parses back to front
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return exit_usage;
  }

  try {
    if (*stats) {
      const auto s = compute_structural_counts(stats_n);
      out << "vertices=" << s.vertex_count << " cells=" << s.triangle_cells
          << " empty=" << s.empty_cells << " (alt closed form: " << s.alt_cell_count << ")\n";
      return exit_ok;
    }

    if (*build) {
      const logic_spec spec = detail::load_pla(build_file, err);
      const truth_table tt = to_truth_table(spec, build_output);
      const gasket g = build_spectrum(tt);
      std::uint64_t minterms = tt.bits().count();
      out << "name=" << spec.name << " n=" << tt.num_vars() << " vertices=" << pow3(tt.num_vars())
          << " spectrum_ones=" << g.spectrum().count() << " minterms=" << minterms << "\n";
      return exit_ok;
    }

    if (*min) {
      const logic_spec spec = detail::load_pla(min_file, err);
      const minimize_config cfg = detail::make_config(min_cost, min_init, min_seed, min_iters,
                                                      min_restarts, min_budget);
      std::vector<std::uint32_t> outputs;
      if (min_output >= 0)
        outputs.push_back(static_cast<std::uint32_t>(min_output));
      else
        for (std::uint32_t o = 0; o < spec.n_outputs; ++o)
          outputs.push_back(o);

      if (!min_emit.empty() && outputs.size() != 1) {
        err << "--emit needs a single output; pass --output\n";
        return exit_usage;
      }

      const auto t0 = std::chrono::steady_clock::now();
      std::vector<minimize_result> results;
      for (auto o : outputs)
        results.push_back(minimize(spec, o, cfg));
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;

      bool all_valid = true;
      std::uint64_t terms_sum = 0, literals = 0;
      std::set<term> distinct;
      for (std::size_t k = 0; k < results.size(); ++k) {
        const auto& r = results[k];
        all_valid = all_valid && r.verified.valid;
        terms_sum += r.cost.term_count;
        literals += r.cost.literal_count;
        for (const auto& t : r.expr.terms())
          distinct.insert(t);
        if (results.size() > 1)
          out << "out" << outputs[k] << ": terms=" << r.cost.term_count
              << " literals=" << r.cost.literal_count << "\n";
      }
      if (results.size() == 1)
        out << "terms=" << results[0].cost.term_count
            << " literals=" << results[0].cost.literal_count << "\n";
      else
        out << "terms_sum=" << terms_sum << " terms_union=" << distinct.size()
            << " literals=" << literals << "\n";
      if (min_terms)
        for (std::size_t k = 0; k < results.size(); ++k)
          for (const auto& t : results[k].expr.terms())
            out << "out" << outputs[k] << " " << t.coordinate_string() << "\n";

      if (!min_emit.empty())
        detail::write_file(min_emit, emit_esop(results[0].expr));
      if (!min_report.empty()) {
        nlohmann::json j;
        j["name"] = spec.name;
        j["terms_sum"] = terms_sum;
        j["terms_union"] = distinct.size();
        j["literals"] = literals;
        j["iterations"] = results[0].iterations;
        j["seed"] = cfg.rng_seed;
        j["verified"] = all_valid;
        j["wall_time_s"] = dt.count();
        detail::write_file(min_report, j.dump(2) + "\n");
      }
      return all_valid ? exit_ok : exit_invalid;
    }

    if (*ver) {
      const logic_spec spec = detail::load_pla(ver_pla, err);
      const esop e = detail::load_esop(ver_esop);
      const verify_mode mode =
          ver_mode == "sampled" ? verify_mode::sampled : verify_mode::exhaustive;
      const verdict v = verify(e, spec, ver_output, mode);
      if (v.valid) {
        out << "valid (" << v.points_checked << " points)\n";
        return exit_ok;
      }
      out << "invalid at (";
      for (std::size_t i = 0; i < v.counterexample->bits.size(); ++i)
        out << (i ? "," : "") << int(v.counterexample->bits[i]);
      out << ")\n";
      return exit_invalid;
    }

    if (*ren) {
      const logic_spec spec = detail::load_pla(ren_pla, err);
      const truth_table tt = to_truth_table(spec, ren_output);
      std::string doc;
      if (ren_triangle) {
        const xor_triangle tri(tt.bits());
        doc = ren_format == "text" ? render_text(tri) : render_svg(tri);
      } else {
        gasket g = build_spectrum(tt);
        if (!ren_esop.empty()) {
          const esop e = detail::load_esop(ren_esop);
          for (const auto& t : e.terms())
            g.marking().insert(t);
        }
        doc = ren_format == "text" ? render_text(g) : render_svg(g);
      }
      if (ren_out.empty())
        out << doc;
      else
        detail::write_file(ren_out, doc);
      return exit_ok;
    }

    if (*bench) {
      namespace fs = std::filesystem;
      if (!fs::is_directory(bench_dir)) {
        err << "not a directory: " << bench_dir << "\n";
        return exit_io;
      }
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(bench_dir))
        if (entry.is_regular_file() && entry.path().extension() == ".pla")
          files.push_back(entry.path());
      std::sort(files.begin(), files.end());

      std::vector<detail::bench_row> rows;
      bool all_ok = true;
      for (const auto& path : files) {
        detail::bench_row row;
        row.name = path.stem().string();
        row.seed = bench_seed;
        try {
          const logic_spec spec = detail::load_pla(path.string(), err);
          row.inputs = spec.n_inputs;
          row.outputs = spec.n_outputs;
          minimize_config cfg = detail::make_config(bench_cost, "auto", bench_seed, 10000, 8, 4);
          const auto t0 = std::chrono::steady_clock::now();
          bool verified = true;
          std::set<term> distinct;
          std::uint64_t marking_bytes = 0;
          for (std::uint32_t o = 0; o < spec.n_outputs; ++o) {
            const auto r = minimize(spec, o, cfg);
            verified = verified && r.verified.valid;
            row.terms_sum += r.cost.term_count;
            row.literals += r.cost.literal_count;
            for (const auto& t : r.expr.terms())
              distinct.insert(t);
            marking_bytes += r.cost.term_count * spec.n_inputs;
          }
          const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
          row.wall_time = dt.count();
          row.terms_union = distinct.size();
          row.verified = verified;
          if (bench_memory)
            err << row.name << ": marking storage " << marking_bytes << " bytes (one byte per digit)\n";
          err << row.name << ": terms=" << row.terms_sum << " literals=" << row.literals << " ("
              << detail::fmt_seconds(row.wall_time) << " s)\n";
        } catch (const std::exception& ex) {
          err << path.string() << ": " << ex.what() << "\n";
          row.verified = false;
        }
        all_ok = all_ok && row.verified;
        rows.push_back(std::move(row));
      }

      if (bench_out.empty()) {
        detail::write_bench_csv(rows, bench_timing, out);
      } else {
        std::ostringstream os;
        detail::write_bench_csv(rows, bench_timing, os);
        detail::write_file(bench_out, os.str());
      }
      return all_ok ? exit_ok : exit_invalid;
    }

    if (*pair) {
      const logic_spec spec = detail::load_pla(pair_pla, err);
      const auto funcs = pair_binary(spec);
      for (std::size_t k = 0; k < funcs.size(); ++k) {
        out << "q4[" << k << "]: vars=" << funcs[k].num_vars() << "\n";
        if (!pair_out.empty())
          detail::write_file(pair_out + "." + std::to_string(k) + ".q4", emit_q4(funcs[k]));
        else
          out << emit_q4(funcs[k]);
      }
      return exit_ok;
    }

    if (*gmin) {
      std::vector<quaternary_function> funcs;
      if (gmin_file.size() > 4 && gmin_file.substr(gmin_file.size() - 4) == ".pla")
        funcs = pair_binary(detail::load_pla(gmin_file, err));
      else
        funcs.push_back(detail::load_q4(gmin_file));
      gfsop_config cfg;
      cfg.rng_seed = gmin_seed;
      bool all_valid = true;
      std::uint64_t terms = 0, literals = 0;
      std::string emitted;
      for (std::size_t k = 0; k < funcs.size(); ++k) {
        const auto r = minimize_gfsop(funcs[k], cfg);
        all_valid = all_valid && r.verified.valid;
        terms += r.cost.term_count;
        literals += r.cost.literal_count;
        if (funcs.size() > 1)
          out << "q4[" << k << "]: terms=" << r.cost.term_count
              << " literals=" << r.cost.literal_count << "\n";
        emitted += emit_gfsop(r.expr);
      }
      out << "terms=" << terms << " literals=" << literals << "\n";
      if (!gmin_emit.empty())
        detail::write_file(gmin_emit, emitted);
      return all_valid ? exit_ok : exit_invalid;
    }
  } catch (const parse_error& ex) {
    err << ex.what() << "\n";
    return exit_io;
  } catch (const capacity_error& ex) {
    err << ex.what() << "\n";
    return exit_io;
  } catch (const std::exception& ex) {
    err << ex.what() << "\n";
    return exit_io;
  }

  return exit_usage;
}

} // namespace sierp::cli
