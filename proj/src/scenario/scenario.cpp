#include "ydual/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

namespace ydual {

using nlohmann::json;
using nlohmann::ordered_json;

ScenarioSyntaxError::ScenarioSyntaxError(std::size_t line, std::size_t column,
                                         const std::string& what)
    : ScenarioError("syntax error at line " + std::to_string(line) + ", column " +
                    std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ScenarioError(path + ": " + what);
}

const json& member(const json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) fail(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& path) {
  if (!obj.is_object()) fail(path, "expected an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(path.empty() ? k : path + "." + k, "unknown field");
}

std::string sub(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string at(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

Scalar scalar_from(const json& j, Field f, const std::string& path) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>(), f);
    } catch (const std::exception& e) {
      fail(path, e.what());
    }
  }
  if (j.is_number_integer()) return Scalar::from_int(j.get<long long>(), f);
  if (j.is_number_float()) fail(path, "floats are not accepted; write \"p/q\"");
  fail(path, "expected a scalar string \"p\" or \"p/q\"");
}

Matrix matrix_from(const json& j, std::size_t rows, std::size_t cols, Field f,
                   const std::string& path) {
  const std::string shape = std::to_string(rows) + "x" + std::to_string(cols);
  if (!j.is_array() || j.size() != rows)
    fail(path, "expected a " + shape + " matrix (" + std::to_string(rows) + " rows)");
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols)
      fail(at(path, r), "expected " + std::to_string(cols) + " entries for a " + shape +
                            " matrix");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = scalar_from(row[c], f, at(at(path, r), c));
  }
  return m;
}

std::size_t count_from(const json& j, const std::string& path, std::size_t min) {
  if (!j.is_number_unsigned() || j.get<std::size_t>() < min)
    fail(path, "expected an integer >= " + std::to_string(min));
  return j.get<std::size_t>();
}

std::string string_from(const json& j, const std::string& path) {
  if (!j.is_string()) fail(path, "expected a string");
  return j.get<std::string>();
}

struct ModuleEntry {
  YDModule module;
  bool graded = false;
  std::string used_by;
};

struct Parser {
  Field f;
  BaseRef base;
  std::map<std::string, ModuleEntry> modules;

  SpaceRef b() const { return base->carrier; }

  void parse_base(const json& j) {
    only_keys(j, {"basis", "mult", "unit", "comult", "counit", "antipode"}, "base");
    const json& basis = member(j, "basis", "base");
    if (!basis.is_array() || basis.empty()) fail("base.basis", "expected a non-empty array");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < basis.size(); ++i)
      labels.push_back(string_from(basis[i], at("base.basis", i)));
    const std::size_t n = labels.size();
    const SpaceRef c = make_space("B", n, labels);
    auto mat = [&](const char* key, std::size_t rows, std::size_t cols) {
      return matrix_from(member(j, key, "base"), rows, cols, f, sub("base", key));
    };
    HopfAlgebraData h{c,
                      LinMap({c, c}, {c}, mat("mult", n, n * n)),
                      LinMap({}, {c}, mat("unit", n, 1)),
                      LinMap({c}, {c, c}, mat("comult", n * n, n)),
                      LinMap({c}, {}, mat("counit", 1, n)),
                      LinMap({c}, {c}, mat("antipode", n, n)),
                      std::nullopt};
    try {
      h = with_antipode_inverse(std::move(h));
    } catch (const NotInvertible&) {
      // left for check_hopf to report
    }
    base = std::make_shared<const HopfAlgebraData>(std::move(h));
  }

  void parse_modules(const json& j) {
    if (!j.is_object()) fail("modules", "expected an object");
    const std::size_t nb = base->dim();
    for (const auto& [name, m] : j.items()) {
      const std::string path = "modules." + name;
      if (name.empty() || name == "B") fail(path, "module name is reserved");
      only_keys(m, {"dim", "graded_dims", "labels", "action", "coaction"}, path);
      const bool has_dim = m.contains("dim");
      const bool graded = m.contains("graded_dims");
      if (has_dim == graded) fail(path, "give exactly one of dim and graded_dims");
      std::size_t dim = 0;
      std::vector<int> degrees;
      if (has_dim) {
        dim = count_from(m["dim"], sub(path, "dim"), 1);
      } else {
        const json& gd = m["graded_dims"];
        if (!gd.is_array() || gd.empty()) fail(sub(path, "graded_dims"), "expected a non-empty array");
        for (std::size_t d = 0; d < gd.size(); ++d) {
          const std::size_t k = count_from(gd[d], at(sub(path, "graded_dims"), d), 0);
          dim += k;
          degrees.insert(degrees.end(), k, static_cast<int>(d));
        }
        if (dim == 0) fail(sub(path, "graded_dims"), "the space is empty");
      }
      std::vector<std::string> labels;
      if (m.contains("labels")) {
        const json& l = m["labels"];
        if (!l.is_array() || l.size() != dim)
          fail(sub(path, "labels"), "expected " + std::to_string(dim) + " labels");
        for (std::size_t i = 0; i < dim; ++i)
          labels.push_back(string_from(l[i], at(sub(path, "labels"), i)));
      }
      const SpaceRef v = make_space(name, dim, labels, degrees);
      YDModule mod{base,
                   {v},
                   LinMap({b(), v}, {v},
                          matrix_from(member(m, "action", path), dim, nb * dim, f,
                                      sub(path, "action"))),
                   LinMap({v}, {b(), v},
                          matrix_from(member(m, "coaction", path), nb * dim, dim, f,
                                      sub(path, "coaction")))};
      modules.emplace(name, ModuleEntry{std::move(mod), graded, {}});
    }
  }

  ModuleEntry& use_module(const json& j, const std::string& path, const std::string& user) {
    const std::string name = string_from(member(j, "module", path), sub(path, "module"));
    const auto it = modules.find(name);
    if (it == modules.end()) fail(sub(path, "module"), "undefined module '" + name + "'");
    if (!it->second.used_by.empty())
      fail(sub(path, "module"), "module '" + name + "' is already used by " + it->second.used_by);
    it->second.used_by = user;
    return it->second;
  }

  BraidedRef parse_braided(const json& j, const std::string& key) {
    only_keys(j, {"module", "mult", "unit", "comult", "counit", "antipode"}, key);
    const ModuleEntry& e = use_module(j, key, key);
    const SpaceRef v = e.module.legs.at(0);
    const std::size_t n = v->dim;
    auto mat = [&](const char* k, std::size_t rows, std::size_t cols) {
      return matrix_from(member(j, k, key), rows, cols, f, sub(key, k));
    };
    BraidedHopfAlgebra h{e.module,
                         LinMap({v, v}, {v}, mat("mult", n, n * n)),
                         LinMap({}, {v}, mat("unit", n, 1)),
                         LinMap({v}, {v, v}, mat("comult", n * n, n)),
                         LinMap({v}, {}, mat("counit", 1, n)),
                         LinMap({v}, {v}, mat("antipode", n, n)),
                         std::nullopt,
                         std::nullopt};
    if (e.graded) {
      try {
        h.graded = GradedSpace::adopt(v);
      } catch (const std::exception& ex) {
        fail(sub(key, "module"), ex.what());
      }
    }
    return share(std::move(h));
  }

  static BraidedRef share(BraidedHopfAlgebra h) {
    try {
      h = with_antipode_inverse(std::move(h));
    } catch (const NotInvertible&) {
      // hyp-antipodes-invertible reports it
    }
    return std::make_shared<const BraidedHopfAlgebra>(std::move(h));
  }

  ComoduleAlgebra parse_comodule(const json& j, const BraidedHopfAlgebra& hd) {
    only_keys(j, {"module", "mult", "unit", "coaction"}, "R");
    const ModuleEntry& e = use_module(j, "R", "R");
    if (e.graded != hd.graded.has_value())
      fail("R.module", "must be graded exactly when H^d is");
    const SpaceRef v = e.module.legs.at(0);
    const std::size_t n = v->dim;
    const Matrix m = matrix_from(member(j, "mult", "R"), n, n * n, f, "R.mult");
    const Matrix u = matrix_from(member(j, "unit", "R"), n, 1, f, "R.unit");
    const Matrix c =
        matrix_from(member(j, "coaction", "R"), n * hd.dim(), n, f, "R.coaction");
    Algebra a{v->name, {v}, CachedOp(Op(LinMap({v, v}, {v}, m))), Op(LinMap({}, {v}, u))};
    return ComoduleAlgebra{std::move(a), e.module, Op(LinMap({v}, {v, hd.carrier()}, c))};
  }
};

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// "dual-of:X" / "graded-dual-of:X"
std::optional<std::pair<bool, std::string>> dual_ref(const json& j) {
  if (!j.is_string()) return std::nullopt;
  const std::string s = j.get<std::string>();
  if (s.rfind("dual-of:", 0) == 0) return std::make_pair(false, s.substr(8));
  if (s.rfind("graded-dual-of:", 0) == 0) return std::make_pair(true, s.substr(15));
  return std::nullopt;
}

}  // namespace

ScenarioFile parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::string what = e.what();
    // drop nlohmann's "[json.exception.parse_error.101] parse error at ...: " prefix
    if (const auto p = what.find(": "); p != std::string::npos) what = what.substr(p + 2);
    throw ScenarioSyntaxError(line, col, what);
  }
  only_keys(doc, {"name", "field", "base", "modules", "H", "Hd", "pairing", "R", "truncation",
                  "suites"},
            "");

  ScenarioFile out;
  DualityScenario& s = out.scenario;
  s.name = string_from(member(doc, "name", ""), "name");

  Parser p;
  try {
    p.f = Field::parse(string_from(member(doc, "field", ""), "field"));
  } catch (const ArithmeticError& e) {
    fail("field", e.what());
  }
  p.parse_base(member(doc, "base", ""));
  s.base = p.base;
  if (doc.contains("modules")) p.parse_modules(doc["modules"]);

  const json& jh = member(doc, "H", "");
  const json& jhd = member(doc, "Hd", "");
  const auto h_ref = dual_ref(jh);
  const auto hd_ref = dual_ref(jhd);
  if (h_ref && hd_ref) fail("Hd", "H and Hd cannot both be duals");
  auto dualise = [&](const BraidedRef& src, const std::pair<bool, std::string>& ref,
                     const std::string& key, const std::string& other) -> BraidedRef {
    if (ref.second != other) fail(key, "can only be the dual of " + other);
    if (ref.first != src->graded.has_value())
      fail(key, other + (ref.first ? " is not graded; use dual-of:" : " is graded; use graded-dual-of:") +
                    other);
    try {
      return Parser::share(dual_braided_hopf(*src, key));
    } catch (const RefusalError& e) {
      s.refusal = e.what();
      return nullptr;
    }
  };
  if (hd_ref) {
    s.h = p.parse_braided(jh, "H");
    s.hd = dualise(s.h, *hd_ref, "Hd", "H");
  } else if (h_ref) {
    const BraidedRef hd = p.parse_braided(jhd, "Hd");
    // a refused H has nothing to verify against; keep H^d in its place
    const BraidedRef h = dualise(hd, *h_ref, "H", "Hd");
    s.h = h ? h : hd;
    s.hd = h ? hd : nullptr;
  } else {
    s.h = p.parse_braided(jh, "H");
    s.hd = p.parse_braided(jhd, "Hd");
  }
  if (s.hd && s.h->graded.has_value() != s.hd->graded.has_value())
    fail("Hd", "H and Hd must both be graded or both finite");
  if (s.hd && s.h->carrier()->name == s.hd->carrier()->name)
    fail("Hd", "H and Hd need different carrier names");
  if (s.hd && s.h->graded && s.hd->graded->truncation() != s.h->graded->truncation())
    fail("Hd", "components stop at degree " + std::to_string(s.hd->graded->truncation()) +
                   ", H at " + std::to_string(s.h->graded->truncation()));

  if (doc.contains("truncation")) {
    const int n = static_cast<int>(count_from(doc["truncation"], "truncation", 0));
    if (!s.h->graded) fail("truncation", "only graded scenarios are truncated");
    if (n != s.h->graded->truncation())
      fail("truncation", "is " + std::to_string(n) + " but H has components up to degree " +
                             std::to_string(s.h->graded->truncation()));
  }

  if (doc.contains("suites")) {
    const json& js = doc["suites"];
    if (!js.is_array() || js.empty()) fail("suites", "expected a non-empty array");
    out.suites.clear();
    for (std::size_t i = 0; i < js.size(); ++i) {
      try {
        out.suites.push_back(parse_suite(string_from(js[i], at("suites", i))));
      } catch (const std::invalid_argument& e) {
        fail(at("suites", i), e.what());
      }
    }
  }

  if (!s.hd) return out;  // refused: nothing below can be built

  const json& jp = member(doc, "pairing", "");
  if (jp.is_string()) {
    const std::string kind = jp.get<std::string>();
    if (s.h->dim() != s.hd->dim()) fail("pairing", kind + " needs dim H = dim Hd");
    if (kind == "evaluation") {
      s.pairing = evaluation_pairing(s.hd, s.h);
      s.evaluation = true;
    } else if (kind == "evaluation-composed-with-braiding") {
      s.pairing = evaluation_composed_with_braiding(s.hd, s.h);
    } else {
      fail("pairing",
           "unknown pairing '" + kind + "' (expected evaluation, "
           "evaluation-composed-with-braiding or an object with values)");
    }
  } else {
    only_keys(jp, {"values", "evaluation"}, "pairing");
    const Matrix v = matrix_from(member(jp, "values", "pairing"), s.hd->dim(), s.h->dim(), p.f,
                                 "pairing.values");
    if (jp.contains("evaluation")) {
      if (!jp["evaluation"].is_boolean()) fail("pairing.evaluation", "expected true or false");
      s.evaluation = jp["evaluation"].get<bool>();
    }
    try {
      s.pairing = make_pairing(s.hd, s.h, v);
    } catch (const StructureError& e) {
      fail("pairing.values", e.what());
    }
  }

  const json& jr = member(doc, "R", "");
  if (jr.is_string()) {
    if (jr.get<std::string>() != "hd-with-comult")
      fail("R", "unknown comodule algebra '" + jr.get<std::string>() +
                    "' (expected hd-with-comult or an object)");
    s.r = comodule_from_comult(*s.hd, "R");
  } else {
    s.r = p.parse_comodule(jr, *s.hd);
  }
  const std::string rn = s.r->algebra.legs.at(0)->name;
  if (rn == s.h->carrier()->name || rn == s.hd->carrier()->name)
    fail("R", "carrier name '" + rn + "' clashes with H or Hd");

  for (const auto& [name, e] : p.modules)
    if (e.used_by.empty()) fail("modules." + name, "defined but never used");
  return out;
}

ScenarioFile parse_scenario(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scenario_text(ss.str());
}

// ---------------------------------------------------------------- output

namespace {

ordered_json matrix_json(const Matrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

ordered_json module_json(const YDModule& m, bool graded) {
  const SpaceRef& v = m.legs.at(0);
  ordered_json j;
  if (graded) {
    j["graded_dims"] = ordered_json::array();
    for (std::size_t i = 0; i < v->dim; ++i) {
      const auto d = static_cast<std::size_t>(v->degree(i));
      while (j["graded_dims"].size() <= d) j["graded_dims"].push_back(0);
      j["graded_dims"][d] = j["graded_dims"][d].get<std::size_t>() + 1;
    }
  } else {
    j["dim"] = v->dim;
  }
  if (!v->labels.empty()) j["labels"] = v->labels;
  j["action"] = matrix_json(m.action.matrix());
  j["coaction"] = matrix_json(m.coaction.matrix());
  return j;
}

ordered_json braided_json(const BraidedHopfAlgebra& h) {
  ordered_json j;
  j["module"] = h.carrier()->name;
  j["mult"] = matrix_json(h.mult.matrix());
  j["unit"] = matrix_json(h.unit.matrix());
  j["comult"] = matrix_json(h.comult.matrix());
  j["counit"] = matrix_json(h.counit.matrix());
  j["antipode"] = matrix_json(h.antipode.matrix());
  return j;
}

bool scalar_leaf(const ordered_json& j) { return !j.is_array() && !j.is_object(); }

// Arrays of scalars on one line, everything else indented: a matrix row per line.
void write(const ordered_json& j, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + ordered_json(k).dump() + ": ";
      write(v, out, indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "}";
  } else if (j.is_array()) {
    if (std::all_of(j.begin(), j.end(), scalar_leaf)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write(j[i], out, indent + 2);
    }
    out += "\n" + std::string(static_cast<std::size_t>(indent), ' ') + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string serialize_scenario(const DualityScenario& s, const std::vector<Suite>& suites) {
  if (!s.base || !s.h) throw ScenarioError("scenario " + s.name + " is incomplete");
  const bool graded = s.graded();
  ordered_json j;
  j["name"] = s.name;
  j["field"] = s.base->field().to_string();
  ordered_json& b = j["base"];
  b["basis"] = ordered_json::array();
  for (std::size_t i = 0; i < s.base->dim(); ++i) b["basis"].push_back(s.base->carrier->label(i));
  b["mult"] = matrix_json(s.base->mult.matrix());
  b["unit"] = matrix_json(s.base->unit.matrix());
  b["comult"] = matrix_json(s.base->comult.matrix());
  b["counit"] = matrix_json(s.base->counit.matrix());
  b["antipode"] = matrix_json(s.base->antipode.matrix());

  ordered_json& mods = j["modules"];
  mods[s.h->carrier()->name] = module_json(s.h->module, graded);
  if (s.hd) mods[s.hd->carrier()->name] = module_json(s.hd->module, graded);
  if (s.hd && s.r) mods[s.r->algebra.legs.at(0)->name] = module_json(s.r->module, graded);

  j["H"] = braided_json(*s.h);
  if (s.hd) {
    j["Hd"] = braided_json(*s.hd);
  } else {
    j["Hd"] = (graded ? "graded-dual-of:" : "dual-of:") + std::string("H");
  }
  if (s.hd && s.pairing) {
    j["pairing"]["values"] = matrix_json(s.pairing->values());
    j["pairing"]["evaluation"] = s.evaluation;
  }
  if (s.hd && s.r) {
    ordered_json& r = j["R"];
    r["module"] = s.r->algebra.legs.at(0)->name;
    r["mult"] = matrix_json(s.r->algebra.mult.lazy().materialize().matrix());
    r["unit"] = matrix_json(s.r->algebra.unit.materialize().matrix());
    r["coaction"] = matrix_json(s.r->coaction.materialize().matrix());
  }
  if (graded) j["truncation"] = *s.truncation();
  j["suites"] = ordered_json::array();
  for (const Suite x : suites) j["suites"].push_back(to_string(x));

  std::string out;
  write(j, out, 0);
  return out + "\n";
}

Report run_suites(const DualityScenario& s, const std::vector<Suite>& suites,
                  std::optional<int> max_degree) {
  const bool all = suites.empty() || !s.refusal.empty() ||
                   std::find(suites.begin(), suites.end(), Suite::all) != suites.end();
  if (all) return verify_duality(s, Suite::all, max_degree);
  Report r(s.name);
  std::set<Suite> seen;
  for (const Suite x : suites)
    if (seen.insert(x).second) r.append(verify_duality(s, x, max_degree));
  return r;
}

}  // namespace ydual
