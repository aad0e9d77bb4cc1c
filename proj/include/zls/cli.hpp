#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zls/compactness.hpp"
#include "zls/homlift.hpp"
#include "zls/json_io.hpp"
#include "zls/presentation.hpp"
#include "zls/solver.hpp"
#include "zls/system.hpp"

namespace zls::cli {

// Exit codes: 0 success/solvable, 1 unsolvable (certificate or core emitted),
// 2 usage or parse error, 3 hypothesis failure (torsion, zero image, strict
// filtration violation, zero constraint vector).
inline constexpr int kExitSolvable = 0;
inline constexpr int kExitUnsolvable = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitHypothesis = 3;

namespace detail {

inline std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline void emit_warnings(const std::vector<std::string>& warnings,
                          std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

inline System load_system(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  System sys = parse_system(read_input(path), &warnings);
  emit_warnings(warnings, err);
  return sys;
}

inline Presentation load_presentation(const std::string& path, std::ostream& err) {
  std::vector<std::string> warnings;
  Presentation p = parse_presentation(read_input(path), &warnings);
  emit_warnings(warnings, err);
  return p;
}

inline void warn_killed_generators(const Presentation& p, std::ostream& err) {
  auto hits = generators_in_relation_lattice(p);
  if (hits.empty()) return;
  err << "warning: generator(s)";
  for (std::size_t j : hits) err << ' ' << generator_name(p, j);
  err << " lie in the relation lattice; the quotient kills them\n";
}

inline void print_report(const SolveReport& rep, bool as_json, std::ostream& out) {
  if (as_json) {
    out << solve_report_to_json(rep).dump(2) << '\n';
    return;
  }
  if (rep.status == SolveReport::Status::solvable) {
    out << "status: solvable\n";
    for (const auto& [name, value] : rep.witness->assignment)
      out << "  " << name << " = " << value << '\n';
  } else {
    out << "status: unsolvable\ndead variables:";
    for (const auto& name : rep.certificate->dead_variables) out << ' ' << name;
    out << '\n';
  }
}

inline int report_exit(const SolveReport& rep) {
  return rep.status == SolveReport::Status::solvable ? kExitSolvable
                                                     : kExitUnsolvable;
}

inline json presentation_to_json(const Presentation& p) {
  json j;
  j["n_generators"] = p.n_generators;
  j["relations"] = matrix_to_json(p.relations);
  return j;
}

}  // namespace detail

/// Parse and execute one CLI invocation; `args` excludes the program name.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact solvers and translators for homogeneous Z-linear systems"};
  app.require_subcommand(1);

  std::string in_path;
  std::string from_format;
  std::string mode_name = "nontrivial";
  std::size_t bound = 20;
  std::size_t chain_n = 0;
  std::string chain_p;
  bool as_json = false;
  bool strict = false;

  auto add_input = [&](CLI::App* cmd, const char* desc) {
    cmd->add_option("input", in_path, desc)->required();
  };
  auto add_json = [&](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "emit JSON instead of human-readable text");
  };
  auto add_mode = [&](CLI::App* cmd) {
    cmd->add_option("--mode", mode_name, "solvability mode")
        ->check(CLI::IsMember({"nontrivial", "weak"}))
        ->capture_default_str();
  };

  CLI::App* solve = app.add_subcommand("solve", "decide nontrivial solvability of a .zls system");
  add_input(solve, ".zls file or - for stdin");
  add_json(solve);

  CLI::App* weak = app.add_subcommand("weak-solve", "decide weak solvability of a .zls system");
  add_input(weak, ".zls file or - for stdin");
  add_json(weak);

  CLI::App* kernel = app.add_subcommand("kernel", "kernel lattice basis of a system's coefficient matrix");
  add_input(kernel, ".zls file or - for stdin");
  add_json(kernel);

  CLI::App* hnf_cmd = app.add_subcommand("hnf", "Hermite normal form of a matrix ([a, b, ...] rows)");
  add_input(hnf_cmd, "matrix file or - for stdin");
  add_json(hnf_cmd);

  CLI::App* snf_cmd = app.add_subcommand("snf", "Smith normal form of a matrix ([a, b, ...] rows)");
  add_input(snf_cmd, "matrix file or - for stdin");
  add_json(snf_cmd);

  CLI::App* dual = app.add_subcommand("dual", "invariant factors and dual rank of a .zpres presentation");
  add_input(dual, ".zpres file or - for stdin");
  add_json(dual);

  CLI::App* translate = app.add_subcommand("translate", "convert between .zls systems and .zpres presentations");
  add_input(translate, ".zls or .zpres file, or - for stdin");
  translate->add_option("--from", from_format, "input format when not implied by the extension")
      ->check(CLI::IsMember({"zls", "zpres"}));
  add_json(translate);

  CLI::App* core = app.add_subcommand("core", "locally minimal unsolvable core of a .zls system");
  add_input(core, ".zls file or - for stdin");
  add_mode(core);
  add_json(core);

  CLI::App* minsize = app.add_subcommand("min-size", "least cardinality of an unsolvable subsystem");
  add_input(minsize, ".zls file or - for stdin");
  add_mode(minsize);
  minsize->add_option("--bound", bound, "maximum equation count for the exact search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_json(minsize);

  CLI::App* gen = app.add_subcommand("gen", "generate example systems");
  gen->require_subcommand(1);
  CLI::App* chain = gen->add_subcommand("chain", "divisibility chain x_i = p*x_{i+1}, i < n");
  chain->add_option("n", chain_n, "number of equations (>= 1)")->required();
  chain->add_option("p", chain_p, "ratio (integer >= 2)")->required();
  add_json(chain);

  CLI::App* lemma = app.add_subcommand("lemma-hom", "run the avoidance construction on a JSON problem");
  add_input(lemma, "JSON file or - for stdin");
  lemma->add_flag("--strict-filtration", strict,
                  "require each constraint vector to avoid the lattice of the earlier ones");
  add_json(lemma);

  CLI::App* filtration = app.add_subcommand("filtration-solve",
                                            "nontrivial solving through the free-quotient filtration");
  add_input(filtration, ".zls file or - for stdin");
  filtration->add_flag("--strict-filtration", strict,
                       "validate the one-generator filtration steps");
  add_json(filtration);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    const CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty())
      deepest = deepest->get_subcommands().front();
    out << deepest->help();
    return kExitSolvable;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSolvable;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  const WitnessKind mode =
      mode_name == "weak" ? WitnessKind::weak : WitnessKind::nontrivial;

  try {
    if (solve->parsed() || weak->parsed()) {
      System sys = detail::load_system(in_path, err);
      SolveReport rep = solve->parsed() ? solve_nontrivial(sys) : solve_weak(sys);
      detail::print_report(rep, as_json, out);
      return detail::report_exit(rep);
    }

    if (kernel->parsed()) {
      System sys = detail::load_system(in_path, err);
      auto [matrix, order] = coefficient_matrix(sys);
      KernelBasis basis = kernel_basis(matrix);
      if (as_json) {
        json j = kernel_to_json(basis);
        j["variables"] = order;
        out << j.dump(2) << '\n';
      } else {
        out << "variables:";
        for (const auto& v : order) out << ' ' << v;
        out << "\nkernel basis (" << basis.vectors.size() << " vectors):\n"
            << to_debug_string(basis.as_matrix());
      }
      return kExitSolvable;
    }

    if (hnf_cmd->parsed()) {
      IntMatrix m = parse_debug_matrix(detail::read_input(in_path));
      HnfResult r = hnf(m);
      if (as_json) {
        out << hnf_to_json(r).dump(2) << '\n';
      } else {
        out << "H:\n" << to_debug_string(r.H) << "U:\n" << to_debug_string(r.U)
            << "rank: " << r.rank << '\n';
      }
      return kExitSolvable;
    }

    if (snf_cmd->parsed()) {
      IntMatrix m = parse_debug_matrix(detail::read_input(in_path));
      SnfResult r = snf(m);
      if (as_json) {
        out << snf_to_json(r).dump(2) << '\n';
      } else {
        out << "D:\n" << to_debug_string(r.D) << "U:\n" << to_debug_string(r.U)
            << "V:\n" << to_debug_string(r.V) << "invariant factors:";
        for (const Int& d : r.invariant_factors) out << ' ' << d;
        out << '\n';
      }
      return kExitSolvable;
    }

    if (dual->parsed()) {
      Presentation p = detail::load_presentation(in_path, err);
      detail::warn_killed_generators(p, err);
      GroupInfo info = analyze(p);
      KernelBasis basis = dual_basis(p);
      if (as_json) {
        json j = group_info_to_json(info);
        json vecs = json::array();
        for (const auto& v : basis.vectors) vecs.push_back(vector_to_json(v));
        j["dual_basis"] = std::move(vecs);
        out << j.dump(2) << '\n';
      } else {
        out << "invariant factors:";
        for (const Int& d : info.invariant_factors) out << ' ' << d;
        out << "\nfree rank: " << info.free_rank
            << "\ndual rank: " << info.dual_rank << "\ndual basis:\n"
            << to_debug_string(basis.as_matrix());
      }
      return kExitSolvable;
    }

    if (translate->parsed()) {
      std::string format = from_format;
      if (format.empty()) {
        if (in_path.size() >= 4 && in_path.substr(in_path.size() - 4) == ".zls")
          format = "zls";
        else if (in_path.size() >= 6 && in_path.substr(in_path.size() - 6) == ".zpres")
          format = "zpres";
        else
          throw std::invalid_argument(
              "cannot infer the input format; pass --from zls|zpres");
      }
      if (format == "zls") {
        System sys = detail::load_system(in_path, err);
        Presentation p = system_to_presentation(sys);
        if (as_json)
          out << detail::presentation_to_json(p).dump(2) << '\n';
        else
          out << serialize_presentation(p);
      } else {
        Presentation p = detail::load_presentation(in_path, err);
        detail::warn_killed_generators(p, err);
        System sys = presentation_to_system(p);
        if (as_json)
          out << system_to_json(sys).dump(2) << '\n';
        else
          out << serialize_system(sys);
      }
      return kExitSolvable;
    }

    if (core->parsed()) {
      System sys = detail::load_system(in_path, err);
      auto rep = minimal_core(sys, mode);
      if (!rep) {
        if (as_json)
          out << json{{"mode", to_string(mode)}, {"core_indices", nullptr}}.dump(2)
              << '\n';
        else
          out << "system is " << to_string(mode) << "-solvable; no core\n";
        return kExitSolvable;
      }
      if (as_json)
        out << core_report_to_json(*rep).dump(2) << '\n';
      else {
        out << "core indices:";
        for (std::size_t i : rep->core_indices) out << ' ' << i;
        out << "\nlocally minimal: " << (rep->locally_minimal ? "yes" : "no")
            << '\n';
      }
      return kExitUnsolvable;
    }

    if (minsize->parsed()) {
      System sys = detail::load_system(in_path, err);
      auto size = min_unsolvable_size(sys, mode, bound);
      if (as_json) {
        json j;
        j["mode"] = to_string(mode);
        if (size)
          j["min_unsolvable_size"] = *size;
        else
          j["min_unsolvable_size"] = nullptr;
        out << j.dump(2) << '\n';
      } else if (size) {
        out << "minimum unsolvable subsystem size: " << *size << '\n';
      } else {
        out << "every nonempty subsystem is " << to_string(mode) << "-solvable\n";
      }
      return size ? kExitUnsolvable : kExitSolvable;
    }

    if (chain->parsed()) {
      Int ratio;
      try {
        ratio = Int(chain_p);
      } catch (const std::runtime_error&) {
        throw std::invalid_argument("chain ratio must be an integer, got '" +
                                    chain_p + "'");
      }
      System sys = gen_chain(chain_n, ratio);
      if (as_json)
        out << system_to_json(sys).dump(2) << '\n';
      else
        out << serialize_system(sys);
      return kExitSolvable;
    }

    if (lemma->parsed()) {
      AvoidanceProblem problem =
          avoidance_from_json(json::parse(detail::read_input(in_path)));
      if (strict) validate_strict_filtration(problem);
      std::vector<Int> psi = avoid_hom(problem);
      if (as_json)
        out << vector_to_json(psi).dump(2) << '\n';
      else {
        out << "psi:";
        for (const Int& x : psi) out << ' ' << x;
        out << '\n';
      }
      return kExitSolvable;
    }

    if (filtration->parsed()) {
      System sys = detail::load_system(in_path, err);
      Witness w = nontrivial_solution_via_filtration(sys, strict);
      if (as_json)
        out << witness_to_json(w).dump(2) << '\n';
      else {
        out << "status: solvable\n";
        for (const auto& [name, value] : w.assignment)
          out << "  " << name << " = " << value << '\n';
      }
      return kExitSolvable;
    }
  } catch (const parse_error& e) {
    err << "parse error at " << e.what() << '\n';
    return kExitUsage;
  } catch (const hypothesis_error& e) {
    err << "hypothesis failure: " << e.what() << '\n';
    return kExitHypothesis;
  } catch (const search_bound_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const json::exception& e) {
    err << "error: invalid JSON input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;  // unreachable: require_subcommand guarantees a match
}

}  // namespace zls::cli
