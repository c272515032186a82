// JSON documents: instances, approval instances, solve results and axiom
// reports. Integers only; floats are rejected on input.

#ifndef MDPB_IO_HPP
#define MDPB_IO_HPP

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "mdpb/axioms.hpp"
#include "mdpb/exact.hpp"
#include "mdpb/model.hpp"
#include "mdpb/reductions.hpp"

namespace mdpb {

using Json = nlohmann::ordered_json;

inline constexpr const char* kReportVersion = "1.0";

namespace detail {

[[noreturn]] inline void parse_fail(const std::string& path, const std::string& what) {
  throw Error(ErrorCode::kParseError, path + ": " + what);
}

inline const Json& field(const Json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) parse_fail(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) parse_fail(path, std::string("missing \"") + key + "\"");
  return *it;
}

inline Money integer(const Json& v, const std::string& path) {
  if (!v.is_number_integer()) parse_fail(path, "expected an integer");
  return v.get<Money>();
}

inline const Json& array(const Json& v, const std::string& path) {
  if (!v.is_array()) parse_fail(path, "expected an array");
  return v;
}

inline std::string text(const Json& v, const std::string& path) {
  if (!v.is_string()) parse_fail(path, "expected a string");
  return v.get<std::string>();
}

inline std::vector<Money> integers(const Json& v, const std::string& path) {
  std::vector<Money> out;
  const auto& arr = array(v, path);
  for (std::size_t k = 0; k < arr.size(); ++k) out.push_back(integer(arr[k], path + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Instances

inline Json to_json(const Instance& inst) {
  Json doc;
  doc["budget"] = inst.budget;
  doc["projects"] = Json::array();
  for (const auto& p : inst.projects) doc["projects"].push_back({{"name", p.name}, {"costs", p.costs}});
  doc["voters"] = Json::array();
  for (std::size_t i = 0; i < inst.num_voters; ++i) {
    doc["voters"].push_back({{"lower", inst.lower_bounds[i]}, {"upper", inst.upper_bounds[i]}});
  }
  return doc;
}

/// Parses and validates an instance document. Throws Error(kParseError)
/// for structural problems and InvalidInstance for model violations.
inline Instance instance_from_json(const Json& doc) {
  using namespace detail;
  Instance inst;
  inst.budget = integer(field(doc, "budget", "$"), "$.budget");
  const auto& projects = array(field(doc, "projects", "$"), "$.projects");
  std::set<std::string> names;
  for (std::size_t j = 0; j < projects.size(); ++j) {
    const auto path = "$.projects[" + std::to_string(j) + "]";
    ProjectDegrees p;
    p.name = text(field(projects[j], "name", path), path + ".name");
    if (!names.insert(p.name).second) parse_fail(path + ".name", "duplicate project name \"" + p.name + "\"");
    p.costs = integers(field(projects[j], "costs", path), path + ".costs");
    inst.projects.push_back(std::move(p));
  }
  const auto& voters = array(field(doc, "voters", "$"), "$.voters");
  inst.num_voters = voters.size();
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const auto path = "$.voters[" + std::to_string(i) + "]";
    inst.lower_bounds.push_back(integers(field(voters[i], "lower", path), path + ".lower"));
    inst.upper_bounds.push_back(integers(field(voters[i], "upper", path), path + ".upper"));
  }
  return validate_instance(std::move(inst));
}

inline Instance parse_instance(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  return instance_from_json(doc);
}

inline std::string serialize(const Instance& inst) { return to_json(inst).dump(2); }

// ---------------------------------------------------------------------------
// Approval instances

inline Json to_json(const ApprovalInstance& a) {
  Json doc;
  doc["budget"] = a.budget;
  doc["projects"] = Json::array();
  for (std::size_t j = 0; j < a.num_projects(); ++j) doc["projects"].push_back({{"name", a.names[j]}, {"cost", a.costs[j]}});
  doc["voters"] = Json::array();
  for (const auto& approved : a.approvals) {
    Json names = Json::array();
    for (auto j : approved) names.push_back(a.names[j]);
    doc["voters"].push_back({{"approves", names}});
  }
  return doc;
}

inline ApprovalInstance approval_from_json(const Json& doc) {
  using namespace detail;
  ApprovalInstance a;
  a.budget = integer(field(doc, "budget", "$"), "$.budget");
  const auto& projects = array(field(doc, "projects", "$"), "$.projects");
  for (std::size_t j = 0; j < projects.size(); ++j) {
    const auto path = "$.projects[" + std::to_string(j) + "]";
    a.names.push_back(text(field(projects[j], "name", path), path + ".name"));
    a.costs.push_back(integer(field(projects[j], "cost", path), path + ".cost"));
  }
  const auto& voters = array(field(doc, "voters", "$"), "$.voters");
  for (std::size_t i = 0; i < voters.size(); ++i) {
    const auto path = "$.voters[" + std::to_string(i) + "].approves";
    const auto& approves = array(field(voters[i], "approves", path), path);
    std::vector<std::size_t> set;
    for (std::size_t k = 0; k < approves.size(); ++k) {
      const auto name = text(approves[k], path + "[" + std::to_string(k) + "]");
      auto it = std::find(a.names.begin(), a.names.end(), name);
      if (it == a.names.end()) parse_fail(path + "[" + std::to_string(k) + "]", "unknown project \"" + name + "\"");
      set.push_back(static_cast<std::size_t>(it - a.names.begin()));
    }
    a.approvals.push_back(std::move(set));
  }
  validate_approval(a);
  return a;
}

// ---------------------------------------------------------------------------
// Results and reports

/// Project name -> chosen cost, in project order.
inline Json allocation_to_json(const Instance& inst, const Allocation& alloc) {
  Json out = Json::object();
  for (std::size_t j = 0; j < inst.num_projects(); ++j) out[inst.projects[j].name] = chosen_cost(inst, alloc, j);
  return out;
}

inline Json to_json(const TableStats& s) {
  return Json{{"rows", s.rows}, {"columns", s.columns}, {"cells", s.cells}};
}

inline Json solve_result_to_json(const Instance& inst, const SolveResult& r) {
  Json out;
  out["optimal_value"] = r.optimal_value;
  out["allocation"] = allocation_to_json(inst, r.allocation);
  out["algorithm"] = std::string(to_string(r.algorithm));
  if (r.epsilon) out["epsilon"] = r.epsilon->str();
  out["table_stats"] = to_json(r.table_stats);
  if (r.exact_fallback) out["exact_fallback"] = true;
  if (r.zero_anchor) out["zero_anchor"] = true;
  return out;
}

inline Json to_json(const Mutation& m) {
  Json out;
  out["kind"] = std::string(to_string(m.kind));
  if (m.kind == MutationKind::kShrinkLower) out["bound"] = "lower";
  if (m.kind == MutationKind::kShrinkUpper) out["bound"] = "upper";
  if (m.voter) out["voter"] = *m.voter;
  if (m.project) out["project"] = *m.project;
  if (m.degree) out["degree"] = *m.degree;
  out["from"] = m.from;
  out["to"] = m.to;
  return out;
}

inline Json to_json(const Witness& w) {
  Json out;
  out["instance"] = to_json(w.instance);
  if (w.mutation) out["mutation"] = to_json(*w.mutation);
  out["selected"] = allocation_to_json(w.instance, w.selected);
  if (w.other) {
    const bool grown = w.mutation && w.mutation->kind == MutationKind::kBudgetIncrease;
    out["other"] = allocation_to_json(grown ? apply(*w.mutation, w.instance) : w.instance, *w.other);
  }
  if (w.voter) out["voter"] = *w.voter;
  if (w.project) out["project"] = w.instance.projects[*w.project].name;
  if (w.degree) out["degree"] = *w.degree;
  return out;
}

inline Json to_json(const AxiomReport& r) {
  Json out;
  out["axiom"] = std::string(to_string(r.axiom));
  out["verdict"] = r.violated() ? "Violated" : "Satisfied";
  if (r.trials) out["trials"] = *r.trials;
  if (r.trial_index) out["trial_index"] = *r.trial_index;
  if (r.skipped_mutations) out["skipped_mutations"] = r.skipped_mutations;
  if (r.witness) out["witness"] = to_json(*r.witness);
  return out;
}

/// {command, inputs, <payload_key>, version}
inline Json make_report(const std::string& command, Json inputs, const char* payload_key, Json payload) {
  Json out;
  out["command"] = command;
  out["inputs"] = std::move(inputs);
  out[payload_key] = std::move(payload);
  out["version"] = kReportVersion;
  return out;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace mdpb

#endif  // MDPB_IO_HPP
