#pragma once

#include "fstruct/curvature.hpp"

namespace fstruct {

struct HolonomyResult {
    std::vector<Matrix> generators;  // reduced basis; rational in exact mode
    int dim = 0;
    bool is_abelian = false;
    int stabilized_at = 0;  // derivative levels consumed beyond bracket closure
    bool stabilized = true; // false iff the n^2 iteration cap was hit
};

/// Infinitesimal holonomy at the identity: span of the curvature
/// endomorphisms, closed under commutators and under the derivative step
/// h -> [Gamma_m, h] (equivalent to adjoining (nabla^k R)(e_i,e_j) for
/// left-invariant data). Stops when the dimension stabilizes; the n^2 cap
/// is reported, never silently truncated.
HolonomyResult infinitesimal_holonomy(const MetricFManifold& M, const Connection& conn);

struct AmbroseSingerResult {
    bool nabla_T_zero = false;
    bool nabla_R_zero = false;
    double t_defect = 0;
    double r_defect = 0;
};

/// nabla T = 0 = nabla R^nabla, evaluated componentwise for the torsion the
/// connection actually carries.
AmbroseSingerResult ambrose_singer_check(const MetricFManifold& M, const Connection& conn);

/// (nabla_m R)(e_i, e_j) endomorphisms from the explicit 5-index derivative;
/// exposed so tests can cross-check the [Gamma_m, .] recursion.
std::vector<Matrix> nabla_R_endos(const MetricFManifold& M, const Connection& conn);

}  // namespace fstruct
