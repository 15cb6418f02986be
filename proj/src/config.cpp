#include "relaxsolve/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "relaxsolve/chaplygin.hpp"
#include "relaxsolve/jin_xin.hpp"
#include "relaxsolve/two_phase.hpp"

namespace relaxsolve {

std::unique_ptr<Model> make_model(const ModelSpec& spec) {
  if (spec.name == "jinxin") {
    ScalarFlux g = ScalarFlux::burgers();
    if (spec.flux == "linear") {
      g = ScalarFlux::linear(spec.flux_speed);
    } else if (spec.flux != "burgers") {
      throw ConfigError("[model] flux: unknown flux '" + spec.flux + "' (expected burgers or linear)");
    }
    if (!(spec.k_max >= spec.k_min)) throw ConfigError("[model] k_min/k_max: empty interval");
    return std::make_unique<JinXinModel>(spec.lambda, g, Interval{spec.k_min, spec.k_max});
  }
  if (spec.name == "chaplygin") return std::make_unique<ChaplyginModel>(spec.a, spec.gamma);
  if (spec.name == "twophase") return std::make_unique<TwoPhaseModel>(spec.gamma1, spec.gamma2);
  throw ConfigError("[model] name: unknown model '" + spec.name +
                    "' (expected jinxin, chaplygin or twophase)");
}

namespace {

StateVector riemann_state(const Model& model, const std::vector<double>& prim, const char* side) {
  if (const auto* tp = dynamic_cast<const TwoPhaseModel*>(&model); tp && prim.size() == 3) {
    return tp->from_equilibrium_primitive(prim[0], prim[1], prim[2]);
  }
  if (prim.size() != model.size()) {
    throw ConfigError(std::string("[initial] ") + side + ": expected " +
                      std::to_string(model.size()) + " primitive values for model " +
                      std::string(model.id()) + ", got " + std::to_string(prim.size()));
  }
  StateVector p(prim.size());
  for (std::size_t i = 0; i < prim.size(); ++i) p[i] = prim[i];
  return model.from_primitive(p);
}

const JinXinModel& require_jinxin(const Model& model, const std::string& ic) {
  const auto* jx = dynamic_cast<const JinXinModel*>(&model);
  if (jx == nullptr) throw ConfigError("[initial] name: '" + ic + "' needs the jinxin model");
  return *jx;
}

}  // namespace

FieldState make_initial(const Model& model, const InitialSpec& spec, const Grid1D& grid) {
  FieldState field{grid, std::vector<StateVector>(grid.n_cells()), 0.0};
  if (spec.name == "jinxin-3state" || spec.name == "burgers-smooth") {
    const JinXinModel& jx = require_jinxin(model, spec.name);
    const bool three_state = spec.name == "jinxin-3state";
    for (std::size_t j = 0; j < grid.n_cells(); ++j) {
      const double x = grid.center(j);
      double u = x;
      if (three_state) u = x < 0.3 ? 0.0 : (x < 0.7 ? -1.0 : 0.5);
      field.cells[j] = StateVector{u, jx.g()(u)};
    }
    return field;
  }
  if (spec.name == "riemann") {
    const StateVector left = riemann_state(model, spec.left, "left");
    const StateVector right = riemann_state(model, spec.right, "right");
    for (std::size_t j = 0; j < grid.n_cells(); ++j) {
      field.cells[j] = grid.center(j) < spec.x0 ? left : right;
    }
    return field;
  }
  throw ConfigError("[initial] name: unknown initial condition '" + spec.name +
                    "' (expected jinxin-3state, burgers-smooth or riemann)");
}

void RunConfig::validate() const {
  if (!(eps > 0.0) || std::isnan(eps)) throw ConfigError("[scheme] epsilon: must be positive");
  if (cells == 0) throw ConfigError("[grid] cells: must be positive");
  if (cells > kMaxCells) {
    throw ConfigError("[grid] cells: " + std::to_string(cells) + " exceeds the limit of " +
                      std::to_string(kMaxCells));
  }
  if (reference.cells > kMaxCells) throw ConfigError("[reference] cells: exceeds the cell limit");
  (void)grid();
  controls().validate();
  const auto model_ptr = make_model(model);
  if (initial.name == "riemann") {
    (void)riemann_state(*model_ptr, initial.left, "left");
    (void)riemann_state(*model_ptr, initial.right, "right");
  } else if (initial.name == "jinxin-3state" || initial.name == "burgers-smooth") {
    (void)require_jinxin(*model_ptr, initial.name);
  } else {
    throw ConfigError("[initial] name: unknown initial condition '" + initial.name + "'");
  }
  if (reference.kind == OracleKind::exact && initial.name == "riemann") {
    throw ConfigError("[reference] kind: no exact solution for riemann data");
  }
  if (sweep.component >= model_ptr->size()) {
    throw ConfigError("[sweep] component: index out of range for model " +
                      std::string(model_ptr->id()));
  }
  if (!sweep.axis.empty() && sweep.axis != "eps" && sweep.axis != "dx") {
    throw ConfigError("[sweep] axis: expected eps or dx");
  }
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_real(const std::string& text) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw ConfigError("expected a real number, got '" + text + "'");
  return value;
}

std::size_t parse_count(const std::string& text) {
  std::size_t value = 0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

}  // namespace

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (t.empty()) throw ConfigError("empty entry in list '" + text + "'");
    out.push_back(parse_real(t));
  }
  return out;
}

namespace {

using Setter = std::function<void(RunConfig&, const std::string&)>;

const std::map<std::string, std::map<std::string, Setter>>& setters() {
  static const std::map<std::string, std::map<std::string, Setter>> table = {
      {"model",
       {{"name", [](RunConfig& c, const std::string& v) { c.model.name = v; }},
        {"lambda", [](RunConfig& c, const std::string& v) { c.model.lambda = parse_real(v); }},
        {"flux", [](RunConfig& c, const std::string& v) { c.model.flux = v; }},
        {"flux_speed", [](RunConfig& c, const std::string& v) { c.model.flux_speed = parse_real(v); }},
        {"k_min", [](RunConfig& c, const std::string& v) { c.model.k_min = parse_real(v); }},
        {"k_max", [](RunConfig& c, const std::string& v) { c.model.k_max = parse_real(v); }},
        {"a", [](RunConfig& c, const std::string& v) { c.model.a = parse_real(v); }},
        {"gamma", [](RunConfig& c, const std::string& v) { c.model.gamma = parse_real(v); }},
        {"gamma1", [](RunConfig& c, const std::string& v) { c.model.gamma1 = parse_real(v); }},
        {"gamma2", [](RunConfig& c, const std::string& v) { c.model.gamma2 = parse_real(v); }}}},
      {"scheme",
       {{"kind", [](RunConfig& c, const std::string& v) { c.scheme = parse_scheme_kind(v); }},
        {"epsilon", [](RunConfig& c, const std::string& v) { c.eps = parse_real(v); }},
        {"cfl", [](RunConfig& c, const std::string& v) { c.cfl = parse_real(v); }},
        {"t_final", [](RunConfig& c, const std::string& v) { c.t_final = parse_real(v); }},
        {"kernels",
         [](RunConfig& c, const std::string& v) {
           if (v == "auto") {
             c.kernels = KernelPolicy::automatic;
           } else if (v == "generic") {
             c.kernels = KernelPolicy::generic;
           } else {
             throw ConfigError("expected auto or generic, got '" + v + "'");
           }
         }}}},
      {"grid",
       {{"x_min", [](RunConfig& c, const std::string& v) { c.x_min = parse_real(v); }},
        {"x_max", [](RunConfig& c, const std::string& v) { c.x_max = parse_real(v); }},
        {"cells", [](RunConfig& c, const std::string& v) { c.cells = parse_count(v); }}}},
      {"initial",
       {{"name", [](RunConfig& c, const std::string& v) { c.initial.name = v; }},
        {"left", [](RunConfig& c, const std::string& v) { c.initial.left = parse_real_list(v); }},
        {"right", [](RunConfig& c, const std::string& v) { c.initial.right = parse_real_list(v); }},
        {"x0", [](RunConfig& c, const std::string& v) { c.initial.x0 = parse_real(v); }}}},
      {"reference",
       {{"kind",
         [](RunConfig& c, const std::string& v) {
           if (v == "auto") {
             c.reference.kind = OracleKind::automatic;
           } else if (v == "exact") {
             c.reference.kind = OracleKind::exact;
           } else if (v == "splitting") {
             c.reference.kind = OracleKind::splitting;
           } else {
             throw ConfigError("expected auto, exact or splitting, got '" + v + "'");
           }
         }},
        {"cells", [](RunConfig& c, const std::string& v) { c.reference.cells = parse_count(v); }}}},
      {"sweep",
       {{"axis", [](RunConfig& c, const std::string& v) { c.sweep.axis = v; }},
        {"values", [](RunConfig& c, const std::string& v) { c.sweep.values = parse_real_list(v); }},
        {"component", [](RunConfig& c, const std::string& v) { c.sweep.component = parse_count(v); }}}},
      {"output",
       {{"profile", [](RunConfig& c, const std::string& v) { c.output.profile = v; }},
        {"sweep", [](RunConfig& c, const std::string& v) { c.output.sweep = v; }},
        {"plot", [](RunConfig& c, const std::string& v) { c.output.plot = v; }},
        {"compare", [](RunConfig& c, const std::string& v) { c.output.compare = v; }}}},
  };
  return table;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source) {
  RunConfig config;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  const auto& table = setters();
  auto fail = [&](const std::string& what) {
    throw ConfigError(source + ":" + std::to_string(line_no) + ": " + what);
  };

  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (const auto hash = line.find_first_of("#;"); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') fail("malformed section header '" + line + "'");
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!table.contains(section)) fail("unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value', got '" + line + "'");
    if (section.empty()) fail("key outside of any section");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto& keys = table.at(section);
    const auto it = keys.find(key);
    if (it == keys.end()) fail("unknown key '" + key + "' in [" + section + "]");
    if (!seen.insert(section + "." + key).second) fail("duplicate key '" + key + "' in [" + section + "]");
    if (value.empty()) fail("[" + section + "] " + key + ": missing value");
    try {
      it->second(config, value);
    } catch (const ConfigError& e) {
      fail("[" + section + "] " + key + ": " + e.what());
    }
  }

  try {
    config.validate();
  } catch (const ConfigError& e) {
    throw ConfigError(source + ": " + e.what());
  }
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

}  // namespace relaxsolve
