#pragma once

#include <json.hpp>

#include <map>
#include <optional>
#include <string>

#include "gfa/fg.hpp"
#include "gfa/group.hpp"
#include "gfa/hilbert.hpp"
#include "gfa/oracle.hpp"

namespace gfa {

struct CheckFlags {
  bool oracle = false;
  bool structure = false;
  bool fg = false;
  bool components = false;
};

struct JobSpec {
  Group group;
  std::string group_desc = "table";
  DimVector dims;
  int expand_to = 30;
  CheckFlags checks;
  int threads = 0;
};

// Group specs: {"kind":"cyclic","n":6} | {"kind":"dihedral","n":4} |
// {"kind":"symmetric","n":4} | {"kind":"product","factors":[...]} |
// {"kind":"table","labels":[...],"table":[[...]]}.
Group group_from_json(const nlohmann::json& j);

// Presets: cyclic:N, dihedral:N, symmetric:N, product:spec+spec.
Group group_from_preset(const std::string& preset);

// Dims: {"<label-or-index>": <nonnegative integer>, ...}; labels win over
// index interpretation, absent elements get 0.
DimVector dims_from_json(const nlohmann::json& j, const Group& g);

CheckFlags checks_from_string(const std::string& csv);

struct Report {
  HilbertResult result;
  std::vector<Int> expansion;
  GeneratorSeries generators;
  FgVerdict verdict;
  bool outside_paper_theorems = false;
  std::map<std::string, RatFun> components;  // filled by the components check
  std::optional<StructureReport> structure;  // filled by the structure check
  std::map<std::string, bool> checks;        // outcome per enabled check
  double timing_ms = 0.0;

  bool all_checks_passed() const;
};

Report run(const JobSpec& spec);

// Machine form; all big integers as decimal strings, key order fixed.
nlohmann::json report_to_json(const Report& rep);

// Human form, including the factored shape p(t) / ((1 - d t) q(t)).
std::string report_to_text(const Report& rep, const JobSpec& spec);

}  // namespace gfa
