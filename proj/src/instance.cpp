#include "gls/instance.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace gls {

using nlohmann::json;

struct Instance::RawDoc {
  json doc;
};

Instance::Instance() : raw_(std::make_unique<RawDoc>()) {}
Instance::~Instance() = default;
Instance::Instance(Instance&&) noexcept = default;
Instance& Instance::operator=(Instance&&) noexcept = default;

Instance::Instance(const Instance& other)
    : spaces_(other.spaces_),
      functions_(other.functions_),
      kernels_(other.kernels_),
      maps2_(other.maps2_),
      maps3_(other.maps3_),
      raw_(std::make_unique<RawDoc>(*other.raw_)) {}

Instance& Instance::operator=(const Instance& other) {
  if (this != &other) {
    spaces_ = other.spaces_;
    functions_ = other.functions_;
    kernels_ = other.kernels_;
    maps2_ = other.maps2_;
    maps3_ = other.maps3_;
    raw_ = std::make_unique<RawDoc>(*other.raw_);
  }
  return *this;
}

const json& Instance::raw() const { return raw_->doc; }

namespace {

bool finite_number(const json& v) { return v.is_number() && std::isfinite(v.get<double>()); }

std::vector<double> to_doubles(const json& arr) {
  std::vector<double> out;
  out.reserve(arr.size());
  for (const auto& v : arr) out.push_back(v.get<double>());
  return out;
}

void validate_map_entry(const json& m, const json& doc, std::vector<std::string>& out,
                        const std::string& where) {
  if (!m.contains("kind") || !m["kind"].is_string()) {
    out.push_back(where + ": missing map kind");
    return;
  }
  const std::string kind = m["kind"].get<std::string>();
  const json params = m.value("params", json::object());
  auto has_function = [&](const std::string& label) {
    if (!doc.contains("functions")) return false;
    for (const auto& f : doc["functions"])
      if (f.value("label", "") == label) return true;
    return false;
  };
  auto has_kernel = [&](const std::string& label) {
    if (!doc.contains("kernels")) return false;
    for (const auto& k : doc["kernels"])
      if (k.value("label", "") == label) return true;
    return false;
  };
  if (kind == "power") {
    if (!finite_number(params.value("c", json())) || !finite_number(params.value("beta", json())))
      out.push_back(where + ": power map needs finite params c and beta");
    else if (!(params["beta"].get<double>() > 0.0))
      out.push_back(where + ": power map needs beta > 0");
  } else if (kind == "affine") {
    if (!finite_number(params.value("a", json())) || !finite_number(params.value("b", json())))
      out.push_back(where + ": affine map needs finite params a and b");
  } else if (kind == "product_power") {
    if (!params.contains("phi") || !params["phi"].is_string() ||
        !has_function(params["phi"].get<std::string>()))
      out.push_back(where + ": product_power map references an unknown function");
    if (!finite_number(params.value("beta", json())) ||
        !(params.value("beta", 0.0) > 0.0))
      out.push_back(where + ": product_power map needs beta > 0");
  } else if (kind == "kernel_power") {
    if (!params.contains("u0") || !params["u0"].is_string() ||
        !has_kernel(params["u0"].get<std::string>()))
      out.push_back(where + ": kernel_power map references an unknown kernel");
    if (!finite_number(params.value("beta", json())) ||
        !(params.value("beta", 0.0) > 0.0))
      out.push_back(where + ": kernel_power map needs beta > 0");
  } else {
    out.push_back(where + ": unknown map kind '" + kind + "'");
  }
}

} // namespace

std::vector<std::string> validate_instance(const json& doc) {
  std::vector<std::string> out;
  if (!doc.is_object()) {
    out.push_back("instance document is not an object");
    return out;
  }

  std::map<std::string, std::size_t> space_sizes;
  for (const auto& s : doc.value("spaces", json::array())) {
    const std::string label = s.value("label", "");
    const std::string where = "space '" + label + "'";
    if (label.empty()) {
      out.push_back("space with missing label");
      continue;
    }
    if (space_sizes.count(label)) {
      out.push_back(where + ": duplicate label");
      continue;
    }
    if (!s.contains("weights") || !s["weights"].is_array() || s["weights"].empty()) {
      out.push_back(where + ": missing weights");
      continue;
    }
    bool ok = true, any_positive = false;
    for (const auto& w : s["weights"]) {
      if (!finite_number(w)) {
        out.push_back(where + ": non-finite weight");
        ok = false;
        break;
      }
      const double wv = w.get<double>();
      if (wv < 0.0) {
        out.push_back(where + ": negative weight " + std::to_string(wv));
        ok = false;
        break;
      }
      if (wv > 0.0) any_positive = true;
    }
    if (ok && !any_positive) out.push_back(where + ": measure is trivial (all weights zero)");
    if (ok) space_sizes[label] = s["weights"].size();
  }

  std::map<std::string, int> seen;
  for (const auto& f : doc.value("functions", json::array())) {
    const std::string label = f.value("label", "");
    const std::string where = "function '" + label + "'";
    if (seen["fn:" + label]++) {
      out.push_back(where + ": duplicate label");
      continue;
    }
    const std::string space = f.value("space", "");
    if (!space_sizes.count(space)) {
      out.push_back(where + ": unknown space '" + space + "'");
      continue;
    }
    if (!f.contains("values") || !f["values"].is_array()) {
      out.push_back(where + ": missing values");
      continue;
    }
    if (f["values"].size() != space_sizes[space]) {
      out.push_back(where + ": " + std::to_string(f["values"].size()) + " values on a " +
                    std::to_string(space_sizes[space]) + "-atom space");
      continue;
    }
    for (const auto& v : f["values"])
      if (!finite_number(v)) {
        out.push_back(where + ": non-finite value");
        break;
      }
  }

  for (const auto& k : doc.value("kernels", json::array())) {
    const std::string label = k.value("label", "");
    const std::string where = "kernel '" + label + "'";
    if (seen["k:" + label]++) {
      out.push_back(where + ": duplicate label");
      continue;
    }
    const std::string sx = k.value("space_x", "");
    const std::string sy = k.value("space_y", "");
    if (!space_sizes.count(sx) || !space_sizes.count(sy)) {
      out.push_back(where + ": unknown space reference");
      continue;
    }
    if (!k.contains("entries") || !k["entries"].is_array() ||
        k["entries"].size() != space_sizes[sx]) {
      out.push_back(where + ": entry rows do not match the X atom count");
      continue;
    }
    for (const auto& row : k["entries"]) {
      if (!row.is_array() || row.size() != space_sizes[sy]) {
        out.push_back(where + ": entry columns do not match the Y atom count");
        break;
      }
      bool bad = false;
      for (const auto& v : row)
        if (!finite_number(v)) {
          out.push_back(where + ": non-finite entry");
          bad = true;
          break;
        }
      if (bad) break;
    }
  }

  for (const auto& m : doc.value("maps", json::array())) {
    const std::string label = m.value("label", "");
    if (label.empty()) {
      out.push_back("map with missing label");
      continue;
    }
    if (seen["m:" + label]++) {
      out.push_back("map '" + label + "': duplicate label");
      continue;
    }
    validate_map_entry(m, doc, out, "map '" + label + "'");
  }
  return out;
}

Instance Instance::from_json(const json& doc) {
  auto violations = validate_instance(doc);
  if (!violations.empty()) {
    std::ostringstream msg;
    msg << "invalid instance:";
    for (const auto& v : violations) msg << "\n  - " << v;
    throw std::invalid_argument(msg.str());
  }

  Instance inst;
  inst.raw_->doc = doc;
  for (const auto& s : doc.value("spaces", json::array()))
    inst.spaces_.emplace(s["label"].get<std::string>(),
                         std::make_shared<MeasureSpace>(s["label"].get<std::string>(),
                                                        to_doubles(s["weights"])));
  for (const auto& f : doc.value("functions", json::array()))
    inst.functions_.emplace(f["label"].get<std::string>(),
                            GridFunction(inst.spaces_.at(f["space"].get<std::string>()),
                                         to_doubles(f["values"])));
  for (const auto& k : doc.value("kernels", json::array())) {
    std::vector<std::vector<double>> rows;
    for (const auto& row : k["entries"]) rows.push_back(to_doubles(row));
    inst.kernels_.emplace(k["label"].get<std::string>(),
                          Kernel2(inst.spaces_.at(k["space_x"].get<std::string>()),
                                  inst.spaces_.at(k["space_y"].get<std::string>()),
                                  std::move(rows)));
  }
  for (const auto& m : doc.value("maps", json::array())) {
    const std::string label = m["label"].get<std::string>();
    const std::string kind = m["kind"].get<std::string>();
    const json params = m.value("params", json::object());
    if (kind == "power") {
      const double c = params["c"].get<double>();
      const double beta = params["beta"].get<double>();
      inst.maps2_.emplace(label, ScalarMap2::power(c, beta, label));
      inst.maps3_.emplace(label, ScalarMap3::power(c, beta, label));
    } else if (kind == "affine") {
      const double a = params["a"].get<double>();
      const double b = params["b"].get<double>();
      inst.maps2_.emplace(label, ScalarMap2::affine(a, b, label));
      inst.maps3_.emplace(label, ScalarMap3::affine(a, b, label));
    } else if (kind == "product_power") {
      inst.maps2_.emplace(label,
                          ScalarMap2::product_power(
                              inst.functions_.at(params["phi"].get<std::string>()),
                              params["beta"].get<double>(), label));
    } else if (kind == "kernel_power") {
      inst.maps3_.emplace(label,
                          ScalarMap3::kernel_power(
                              inst.kernels_.at(params["u0"].get<std::string>()),
                              params["beta"].get<double>(), label));
    }
  }
  return inst;
}

Instance Instance::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  json doc;
  in >> doc;
  return from_json(doc);
}

const SpacePtr& Instance::space(const std::string& label) const {
  auto it = spaces_.find(label);
  if (it == spaces_.end()) throw std::out_of_range("no space labelled '" + label + "'");
  return it->second;
}

const GridFunction& Instance::function(const std::string& label) const {
  auto it = functions_.find(label);
  if (it == functions_.end()) throw std::out_of_range("no function labelled '" + label + "'");
  return it->second;
}

const Kernel2& Instance::kernel(const std::string& label) const {
  auto it = kernels_.find(label);
  if (it == kernels_.end()) throw std::out_of_range("no kernel labelled '" + label + "'");
  return it->second;
}

const ScalarMap2& Instance::map2(const std::string& label) const {
  auto it = maps2_.find(label);
  if (it == maps2_.end())
    throw std::out_of_range("no two-argument map labelled '" + label + "'");
  return it->second;
}

const ScalarMap3& Instance::map3(const std::string& label) const {
  auto it = maps3_.find(label);
  if (it == maps3_.end())
    throw std::out_of_range("no three-argument map labelled '" + label + "'");
  return it->second;
}

namespace {

Interval support_from_config(const json& spec) {
  Interval s{1.0, kInf};
  if (spec.contains("support")) {
    const auto& arr = spec["support"];
    if (!arr.is_array() || arr.size() != 2)
      throw std::invalid_argument("generating config: support must be [a, b]");
    s.lo = arr[0].get<double>();
    if (arr[1].is_string()) {
      if (arr[1].get<std::string>() != "inf")
        throw std::invalid_argument("generating config: unrecognized support bound");
      s.hi = kInf;
    } else {
      s.hi = arr[1].get<double>();
    }
  }
  return s;
}

} // namespace

GeneratingFunction generating_from_config(const json& spec, const Instance& inst) {
  const std::string kind = spec.value("kind", "");
  const Interval support = support_from_config(spec);
  if (kind == "constant")
    return GeneratingFunction(GeneratingFunction::Constant{spec.value("value", 1.0)}, support);
  if (kind == "power")
    return GeneratingFunction(
        GeneratingFunction::Power{spec.value("scale", 1.0), spec.value("gamma", 1.0)}, support);
  if (kind == "tabulated")
    return make_tabulated(to_doubles(spec.at("p")), to_doubles(spec.at("values")));
  if (kind == "natural")
    return natural_from_function(inst.function(spec.at("function").get<std::string>()), support);
  throw std::invalid_argument("generating config: unknown kind '" + kind + "'");
}

GeneratingFunction2 generating2_from_config(const json& spec, const Instance& inst) {
  const std::string kind = spec.value("kind", "");
  Interval sq{1.0, kInf}, sr{1.0, kInf};
  if (kind == "constant")
    return GeneratingFunction2(GeneratingFunction2::Constant2{spec.value("value", 1.0)}, sq, sr);
  if (kind == "power2")
    return GeneratingFunction2(
        GeneratingFunction2::Power2{spec.value("scale", 1.0), spec.value("gamma_q", 0.0),
                                    spec.value("gamma_r", 0.0)},
        sq, sr);
  if (kind == "natural2")
    return natural_from_kernel(inst.kernel(spec.at("kernel").get<std::string>()));
  throw std::invalid_argument("bivariate generating config: unknown kind '" + kind + "'");
}

} // namespace gls
