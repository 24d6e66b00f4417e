#ifndef GLS_INSTANCE_HPP
#define GLS_INSTANCE_HPP

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gls/generating.hpp"
#include "gls/spaces.hpp"

namespace gls {

/// A parsed instance document: measure spaces plus the functions, kernels,
/// and scalar maps living on them.  The document schema is
///   spaces:    [{label, weights}]
///   functions: [{label, space, values}]
///   kernels:   [{label, space_x, space_y, entries}]
///   maps:      [{label, kind, params}]
/// Map kinds: "power" {c, beta}, "affine" {a, b} (usable in both the
/// two- and three-argument roles), "product_power" {phi, beta}, and
/// "kernel_power" {u0, beta}.
class Instance {
 public:
  static Instance from_json(const nlohmann::json& doc);
  static Instance load(const std::string& path);

  const SpacePtr& space(const std::string& label) const;
  const GridFunction& function(const std::string& label) const;
  const Kernel2& kernel(const std::string& label) const;
  const ScalarMap2& map2(const std::string& label) const;
  const ScalarMap3& map3(const std::string& label) const;

  bool has_function(const std::string& label) const { return functions_.count(label) > 0; }
  bool has_kernel(const std::string& label) const { return kernels_.count(label) > 0; }
  bool has_map2(const std::string& label) const { return maps2_.count(label) > 0; }
  bool has_map3(const std::string& label) const { return maps3_.count(label) > 0; }

  /// The original document, preserved verbatim for round-trips.
  const nlohmann::json& raw() const;

  Instance(); // empty document
  Instance(const Instance&);
  Instance& operator=(const Instance&);
  Instance(Instance&&) noexcept;
  Instance& operator=(Instance&&) noexcept;
  ~Instance();

 private:
  std::map<std::string, SpacePtr> spaces_;
  std::map<std::string, GridFunction> functions_;
  std::map<std::string, Kernel2> kernels_;
  std::map<std::string, ScalarMap2> maps2_;
  std::map<std::string, ScalarMap3> maps3_;
  struct RawDoc;
  std::unique_ptr<RawDoc> raw_;
};

/// Reports every shape/finiteness/nonnegativity/reference violation in the
/// document, one human-readable line each; empty means from_json succeeds.
/// Never throws.
std::vector<std::string> validate_instance(const nlohmann::json& doc);

/// Parse a 1-D generating-function config against an instance:
///   {kind: "constant"|"power"|"tabulated"|"natural", params..., support: [a, b]}
/// with "inf" accepted for b and support defaulting to [1, "inf"].
GeneratingFunction generating_from_config(const nlohmann::json& spec, const Instance& inst);

/// Bivariate configs: kinds "constant" {value}, "power2"
/// {scale, gamma_q, gamma_r}, "natural2" {kernel}.
GeneratingFunction2 generating2_from_config(const nlohmann::json& spec, const Instance& inst);

} // namespace gls

#endif
