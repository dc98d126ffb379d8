#pragma once

#include "fstruct/connection.hpp"
#include "fstruct/curvature.hpp"
#include "fstruct/holonomy.hpp"

namespace fstruct {

/// The whole identity battery for one structure: validation, the Lie- and
/// covariant-derivative identities, Nijenhuis relations, the torsion
/// characterization and adaptedness of the characteristic connection,
/// S-manifold specifics, curvature identities, holonomy invariants.
/// Identities whose hypotheses fail are reported as skipped with a reason.
PropertyReport full_property_suite(const MetricFManifold& M);

}  // namespace fstruct
