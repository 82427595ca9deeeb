#include "gfa/report.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <sstream>

#include "gfa/errors.hpp"
#include "gfa/rational_function.hpp"

namespace gfa {

namespace {

using nlohmann::json;

json coeff_array(const IntPoly& p) {
  json a = json::array();
  for (const Int& c : p.coeffs()) a.push_back(to_decimal(c));
  return a;
}

json coeff_array(const std::vector<Int>& v) {
  json a = json::array();
  for (const Int& c : v) a.push_back(to_decimal(c));
  return a;
}

json ratfun_json(const RatFun& f) {
  return json{{"num", coeff_array(f.num)}, {"den", coeff_array(f.den)}};
}

int require_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw InputError(std::string("expected an integer for ") + what);
  return j.get<int>();
}

bool is_index(const std::string& s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string join_expansion(const std::vector<Int>& v, std::size_t limit) {
  std::string out;
  for (std::size_t i = 0; i < v.size() && i < limit; ++i) {
    if (i) out += ", ";
    out += to_decimal(v[i]);
  }
  if (v.size() > limit) out += ", ...";
  return out;
}

}  // namespace

Group group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind"))
    throw InputError("group spec must be an object with a \"kind\" field");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "cyclic") return cyclic(require_int(j.at("n"), "n"));
    if (kind == "dihedral") return dihedral(require_int(j.at("n"), "n"));
    if (kind == "symmetric") return symmetric(require_int(j.at("n"), "n"));
    if (kind == "product") {
      const auto& factors = j.at("factors");
      if (!factors.is_array() || factors.empty())
        throw InputError("product: \"factors\" must be a nonempty array");
      Group g = group_from_json(factors[0]);
      for (std::size_t i = 1; i < factors.size(); ++i)
        g = direct_product(g, group_from_json(factors[i]));
      return g;
    }
    if (kind == "table") {
      const auto& t = j.at("table");
      if (!t.is_array()) throw InputError("table: \"table\" must be an array of rows");
      std::vector<std::vector<int>> rows;
      for (const auto& row : t) {
        if (!row.is_array()) throw InputError("table: rows must be arrays");
        std::vector<int> r;
        for (const auto& v : row) r.push_back(require_int(v, "table entry"));
        rows.push_back(std::move(r));
      }
      std::vector<std::string> labels;
      if (j.contains("labels"))
        labels = j.at("labels").get<std::vector<std::string>>();
      return from_cayley_table(rows, std::move(labels));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("group spec: ") + e.what());
  } catch (const NotAGroup& e) {
    throw InputError(std::string("group spec: ") + e.what());
  } catch (const BoundExceeded& e) {
    throw InputError(std::string("group spec: ") + e.what());
  }
  throw InputError("unknown group kind \"" + kind + "\"");
}

Group group_from_preset(const std::string& preset) {
  const auto colon = preset.find(':');
  if (colon == std::string::npos)
    throw InputError("group preset must look like cyclic:N, dihedral:N, "
                     "symmetric:N or product:a+b");
  const std::string kind = preset.substr(0, colon);
  const std::string rest = preset.substr(colon + 1);
  if (kind == "product") {
    std::vector<std::string> parts;
    // Factors are themselves kind:N presets, so split on '+' only where a
    // new kind starts.
    std::string cur;
    std::stringstream ss(rest);
    std::string tok;
    while (std::getline(ss, tok, '+')) parts.push_back(tok);
    if (parts.empty()) throw InputError("product preset needs factors");
    Group g = group_from_preset(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      g = direct_product(g, group_from_preset(parts[i]));
    return g;
  }
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(rest, &used);
    if (used != rest.size()) throw InputError("");
  } catch (...) {
    throw InputError("group preset " + preset + ": bad parameter \"" + rest + "\"");
  }
  try {
    if (kind == "cyclic") return cyclic(n);
    if (kind == "dihedral") return dihedral(n);
    if (kind == "symmetric") return symmetric(n);
  } catch (const BoundExceeded& e) {
    throw InputError(std::string("group preset: ") + e.what());
  }
  throw InputError("unknown group preset kind \"" + kind + "\"");
}

DimVector dims_from_json(const json& j, const Group& g) {
  if (!j.is_object())
    throw InputError("dims must be an object of label/index -> dimension");
  std::vector<int> dims(static_cast<std::size_t>(g.order), 0);
  std::vector<char> seen(static_cast<std::size_t>(g.order), 0);
  for (const auto& [key, value] : j.items()) {
    int idx = -1;
    const auto it = std::find(g.labels.begin(), g.labels.end(), key);
    if (it != g.labels.end()) {
      idx = static_cast<int>(it - g.labels.begin());
    } else if (is_index(key)) {
      try {
        idx = std::stoi(key);
      } catch (...) {
        idx = -1;
      }
      if (idx < 0 || idx >= g.order)
        throw InputError("dims: index " + key + " out of range for order " +
                         std::to_string(g.order));
    } else {
      throw InputError("dims: \"" + key + "\" is neither a label nor an index");
    }
    if (!value.is_number_integer() || value.get<long>() < 0)
      throw InputError("dims: value for \"" + key +
                       "\" must be a nonnegative integer");
    if (seen[static_cast<std::size_t>(idx)])
      throw InputError("dims: element \"" + key + "\" specified twice");
    seen[static_cast<std::size_t>(idx)] = 1;
    dims[static_cast<std::size_t>(idx)] = value.get<int>();
  }
  return dim_vector(dims);
}

CheckFlags checks_from_string(const std::string& csv) {
  CheckFlags f;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    if (tok == "all") {
      f.oracle = f.structure = f.fg = f.components = true;
    } else if (tok == "oracle") {
      f.oracle = true;
    } else if (tok == "structure") {
      f.structure = true;
    } else if (tok == "fg") {
      f.fg = true;
    } else if (tok == "components") {
      f.components = true;
    } else {
      throw InputError("unknown check \"" + tok +
                       "\" (choose from oracle, structure, fg, components, all)");
    }
  }
  return f;
}

bool Report::all_checks_passed() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

Report run(const JobSpec& spec) {
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  const Group& g = spec.group;
  const DimVector& dims = spec.dims;

  rep.result = hilbert_identity(g, dims, spec.threads);
  rep.expansion = expand(rep.result.series, spec.expand_to);
  rep.generators = generator_series(rep.result, spec.expand_to);
  rep.verdict = is_finitely_generated(g, dims, rep.result);
  const GradingClass cls = classify_grading(dims);
  rep.outside_paper_theorems = !cls.trivial && dims.dims(0) == 0;

  std::optional<ComponentTable> table;
  if (spec.checks.oracle) {
    table = tensor_dimensions(g, dims, spec.expand_to);
    bool ok = static_cast<bool>(cross_check(rep.result, *table));
    // Partition identity on the table itself: the row sums must be d^n.
    for (int n = 0; n <= table->n_max && ok; ++n) {
      Int sum = 0;
      for (int x = 0; x < g.order; ++x) sum += table->rows(n, x);
      ok = sum == pow_int(Int(rep.result.d), static_cast<unsigned long>(n));
    }
    rep.checks["oracle"] = ok;
  }

  if (spec.checks.structure) {
    if (rep.result.d > 0) {
      rep.structure = verify_structure(rep.result);
      rep.checks["structure"] = rep.structure->all();
    } else {
      rep.checks["structure"] = true;  // vacuous for V = 0
    }
  }

  if (spec.checks.fg) {
    bool ok = true;
    if (cls.trivial) {
      ok = rep.verdict.finitely_generated;
      const int r = rep.verdict.trivial_support_order.value_or(1);
      ok = ok && rep.result.series == trivial_grading_series(rep.result.d, r);
      ok = ok && rep.generators.closed_form ==
                     RatFun{IntPoly::monomial(generator_count_trivial(rep.result.d, r), r),
                            IntPoly(1)};
    } else if (dims.dims(0) > 0) {
      ok = !rep.verdict.finitely_generated;
    }
    // Reconstruction: the generator prefix must rebuild the expansion.
    std::vector<Int> rebuilt(rep.expansion.size());
    for (std::size_t n = 0; n < rebuilt.size() && ok; ++n) {
      Int acc = n == 0 ? Int(1) : Int(0);
      for (std::size_t k = 1; k <= n; ++k)
        acc += rep.generators.coeffs[k] * rebuilt[n - k];
      rebuilt[n] = acc;
      ok = rebuilt[n] == rep.expansion[n];
    }
    rep.checks["fg"] = ok;
  }

  if (spec.checks.components) {
    bool ok = true;
    RatFun sum;
    for (int x = 0; x < g.order; ++x) {
      RatFun fx = hilbert_component(g, dims, x, spec.threads);
      if (x == 0) ok = ok && fx == rep.result.series;
      if (table) {
        const std::vector<Int> coeffs = expand(fx, table->n_max);
        for (int n = 0; n <= table->n_max && ok; ++n)
          ok = coeffs[static_cast<std::size_t>(n)] == table->rows(n, x);
      }
      sum = sum + fx;
      rep.components[g.labels[static_cast<std::size_t>(x)]] = std::move(fx);
    }
    const RatFun total{IntPoly(1),
                       IntPoly::from_coeffs({Int(1), Int(-rep.result.d)})};
    ok = ok && sum == total;
    rep.checks["components"] = ok;
  }

  rep.timing_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return rep;
}

json report_to_json(const Report& rep) {
  json j;
  j["series"] = ratfun_json(rep.result.series);
  j["expansion"] = coeff_array(rep.expansion);
  if (!rep.components.empty()) {
    json comps = json::object();
    for (const auto& [label, f] : rep.components) comps[label] = ratfun_json(f);
    j["components"] = std::move(comps);
  }
  j["generators"] = json{{"closed_form", ratfun_json(rep.generators.closed_form)},
                         {"prefix", coeff_array(rep.generators.coeffs)}};
  j["verdict"] = json{{"finitely_generated", rep.verdict.finitely_generated},
                      {"reason", to_string(rep.verdict.reason)},
                      {"outside_paper_theorems", rep.outside_paper_theorems}};
  json checks = json::object();
  for (const auto& [name, ok] : rep.checks) checks[name] = ok;
  j["checks"] = std::move(checks);
  j["timing_ms"] = rep.timing_ms;
  return j;
}

std::string report_to_text(const Report& rep, const JobSpec& spec) {
  std::ostringstream os;
  const Group& g = spec.group;
  os << "group: " << spec.group_desc << " (order " << g.order << ")\n";
  os << "dims:";
  for (int i = 0; i < g.order; ++i)
    if (spec.dims.dims(i) > 0)
      os << " " << g.labels[static_cast<std::size_t>(i)] << ":" << spec.dims.dims(i);
  os << "  (d = " << rep.result.d << ")\n";

  os << "identity component Hilbert series:\n";
  os << "  P(t) = " << to_string(rep.result.series) << "\n";
  if (rep.result.d > 0) {
    const bool s_even = rep.result.s % 2 == 0;
    const IntPoly p_norm = s_even ? rep.result.p_raw : -rep.result.p_raw;
    os << "  factored: (" << to_string(p_norm) << ") / ((1 - " << rep.result.d
       << "*t) * (" << to_string(rep.result.q) << "))\n";
  }
  os << "  expansion: " << join_expansion(rep.expansion, 16) << "\n";

  os << "generators: g(t) = " << to_string(rep.generators.closed_form)
     << "; counts " << join_expansion(rep.generators.coeffs, 16) << "\n";

  os << "verdict: "
     << (rep.verdict.finitely_generated ? "finitely generated"
                                        : "not finitely generated")
     << " (" << to_string(rep.verdict.reason) << ")";
  if (rep.verdict.reason == FgReason::TrivialGrading && rep.result.d > 0)
    os << ", generator count "
       << to_decimal(generator_count_trivial(
              rep.result.d, rep.verdict.trivial_support_order.value_or(1)));
  if (rep.outside_paper_theorems)
    os << " [nontrivial grading with V_e = 0: not covered by the structure "
          "theorems, decided by the inverse-polynomial criterion]";
  os << "\n";

  if (rep.structure) {
    os << "structure: r(1/d) = 0: " << (rep.structure->r_vanishes_at_inv_d ? "yes" : "NO")
       << ", deg p <= s-1: " << (rep.structure->p_degree_bound ? "yes" : "NO")
       << ", deg q <= s-1: " << (rep.structure->q_degree_bound ? "yes" : "NO")
       << ", p(0) = r(0) = (-1)^s: " << (rep.structure->const_terms ? "yes" : "NO")
       << "\n";
  }
  if (!rep.checks.empty()) {
    os << "checks:";
    for (const auto& [name, ok] : rep.checks)
      os << " " << name << (ok ? " PASS" : " FAIL");
    os << "\n";
  }
  os << "time: " << rep.timing_ms << " ms\n";
  return os.str();
}

}  // namespace gfa
