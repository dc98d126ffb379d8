#pragma once

#include <json.hpp>

#include "fstruct/manifold.hpp"

namespace fstruct {

/// Full pipeline: validate -> classify -> torsion -> connection -> curvature
/// -> holonomy -> property suites, aggregated into one deterministic JSON
/// document (all numbers rendered canonically: "p/q" rationals, 12
/// significant digits for floats). The text rendering walks the same
/// document, so the two carry identical numeric content.
nlohmann::ordered_json build_report(const MetricFManifold& M, bool include_properties = true);

/// Classification-only document.
nlohmann::ordered_json build_classify_report(const MetricFManifold& M);

std::string render_text(const nlohmann::ordered_json& j);

}  // namespace fstruct
