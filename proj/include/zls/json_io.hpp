#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "zls/compactness.hpp"
#include "zls/homlift.hpp"
#include "zls/normal_form.hpp"
#include "zls/presentation.hpp"
#include "zls/solver.hpp"
#include "zls/system.hpp"

namespace zls {

// All JSON output uses ordered_json so key order is stable, and every
// integer of the domain is encoded as a decimal string: witness entries and
// invariant factors routinely exceed 64 bits.
using json = nlohmann::ordered_json;

inline std::string int_to_string(const Int& x) { return x.str(); }

inline Int int_from_json(const json& j) {
  if (!j.is_string())
    throw std::invalid_argument("expected an integer-as-string, got: " + j.dump());
  try {
    return Int(j.get<std::string>());
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a decimal integer: " + j.dump());
  }
}

inline json vector_to_json(const std::vector<Int>& v) {
  json out = json::array();
  for (const Int& x : v) out.push_back(int_to_string(x));
  return out;
}

inline std::vector<Int> vector_from_json(const json& j) {
  std::vector<Int> out;
  for (const auto& e : j) out.push_back(int_from_json(e));
  return out;
}

inline json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
  return rows;
}

inline IntMatrix matrix_from_json(const json& j) {
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return IntMatrix::from_rows(rows);
}

inline json system_to_json(const System& sys) {
  json j;
  j["name"] = sys.name;
  j["variables"] = sys.variables;
  json eqs = json::array();
  for (const Equation& eq : sys.equations) {
    json terms;
    for (const auto& [idx, coef] : eq.terms)
      terms[sys.variables[idx]] = int_to_string(coef);
    eqs.push_back(std::move(terms));
  }
  j["equations"] = std::move(eqs);
  return j;
}

inline System system_from_json(const json& j) {
  System sys;
  sys.name = j.value("name", std::string{});
  sys.variables = j.at("variables").get<std::vector<std::string>>();
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < sys.variables.size(); ++i)
    index[sys.variables[i]] = i;
  for (const auto& terms : j.at("equations")) {
    std::vector<std::pair<std::size_t, Int>> raw;
    for (const auto& [name, coef] : terms.items()) {
      auto it = index.find(name);
      if (it == index.end())
        throw std::invalid_argument("equation references unknown variable " + name);
      raw.emplace_back(it->second, int_from_json(coef));
    }
    auto eq = detail::normalize_terms(raw);
    if (!eq) throw std::invalid_argument("equation reduces to 0 = 0");
    sys.equations.push_back(std::move(*eq));
  }
  return sys;
}

inline json witness_to_json(const Witness& w) {
  json j;
  j["kind"] = to_string(w.kind);
  json a;
  for (const auto& [name, value] : w.assignment) a[name] = int_to_string(value);
  j["assignment"] = std::move(a);
  return j;
}

inline Witness witness_from_json(const json& j) {
  Witness w;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "nontrivial")
    w.kind = WitnessKind::nontrivial;
  else if (kind == "weak")
    w.kind = WitnessKind::weak;
  else
    throw std::invalid_argument("unknown witness kind: " + kind);
  for (const auto& [name, value] : j.at("assignment").items())
    w.assignment.emplace_back(name, int_from_json(value));
  return w;
}

inline json solve_report_to_json(const SolveReport& rep) {
  json j;
  j["status"] = rep.status == SolveReport::Status::solvable ? "solvable"
                                                            : "unsolvable";
  if (rep.witness) {
    json a;
    for (const auto& [name, value] : rep.witness->assignment)
      a[name] = int_to_string(value);
    j["witness"] = std::move(a);
  }
  if (rep.certificate) j["dead_variables"] = rep.certificate->dead_variables;
  return j;
}

inline SolveReport solve_report_from_json(const json& j, WitnessKind mode) {
  SolveReport rep;
  const std::string status = j.at("status").get<std::string>();
  if (status == "solvable") {
    rep.status = SolveReport::Status::solvable;
    Witness w;
    w.kind = mode;
    for (const auto& [name, value] : j.at("witness").items())
      w.assignment.emplace_back(name, int_from_json(value));
    rep.witness = std::move(w);
  } else if (status == "unsolvable") {
    rep.status = SolveReport::Status::unsolvable;
    rep.certificate = UnsolvabilityCertificate{
        mode, j.at("dead_variables").get<std::vector<std::string>>()};
  } else {
    throw std::invalid_argument("unknown status: " + status);
  }
  return rep;
}

inline json group_info_to_json(const GroupInfo& info) {
  json j;
  j["invariant_factors"] = vector_to_json(info.invariant_factors);
  j["free_rank"] = info.free_rank;
  j["dual_rank"] = info.dual_rank;
  return j;
}

inline GroupInfo group_info_from_json(const json& j) {
  GroupInfo info;
  info.invariant_factors = vector_from_json(j.at("invariant_factors"));
  info.free_rank = j.at("free_rank").get<std::size_t>();
  info.dual_rank = j.at("dual_rank").get<std::size_t>();
  return info;
}

inline json core_report_to_json(const CoreReport& rep) {
  json j;
  j["mode"] = to_string(rep.mode);
  j["core_indices"] = rep.core_indices;
  j["locally_minimal"] = rep.locally_minimal;
  return j;
}

inline CoreReport core_report_from_json(const json& j) {
  CoreReport rep;
  const std::string mode = j.at("mode").get<std::string>();
  rep.mode = mode == "weak" ? WitnessKind::weak : WitnessKind::nontrivial;
  rep.core_indices = j.at("core_indices").get<std::vector<std::size_t>>();
  rep.locally_minimal = j.at("locally_minimal").get<bool>();
  return rep;
}

inline json kernel_to_json(const KernelBasis& basis) {
  json j;
  j["ambient_dim"] = basis.ambient_dim;
  json vecs = json::array();
  for (const auto& v : basis.vectors) vecs.push_back(vector_to_json(v));
  j["vectors"] = std::move(vecs);
  return j;
}

inline json avoidance_to_json(const AvoidanceProblem& p) {
  json j;
  j["free_rank"] = p.free_rank;
  json cs = json::array();
  for (const auto& c : p.constraints) {
    json jc;
    jc["a"] = vector_to_json(c.coeffs);
    jc["z"] = int_to_string(c.excluded);
    cs.push_back(std::move(jc));
  }
  j["constraints"] = std::move(cs);
  return j;
}

inline AvoidanceProblem avoidance_from_json(const json& j) {
  AvoidanceProblem p;
  p.free_rank = j.at("free_rank").get<std::size_t>();
  for (const auto& jc : j.at("constraints"))
    p.constraints.push_back({vector_from_json(jc.at("a")), int_from_json(jc.at("z"))});
  return p;
}

inline json hnf_to_json(const HnfResult& r) {
  json j;
  j["H"] = matrix_to_json(r.H);
  j["U"] = matrix_to_json(r.U);
  j["rank"] = r.rank;
  return j;
}

inline json snf_to_json(const SnfResult& r) {
  json j;
  j["D"] = matrix_to_json(r.D);
  j["U"] = matrix_to_json(r.U);
  j["V"] = matrix_to_json(r.V);
  j["invariant_factors"] = vector_to_json(r.invariant_factors);
  return j;
}

}  // namespace zls
