#pragma once

#include <optional>

#include "fstruct/manifold.hpp"
#include "fstruct/vv_form.hpp"

namespace fstruct {

/// N_phi(X,Y) = [phi X, phi Y] + phi^2 [X,Y] - phi [X, phi Y] - phi [phi X, Y].
VvForm nijenhuis_phi(const MetricFManifold& M);

/// N^(1) = N_phi + sum_i d eta_i (x) xi_i.
VvForm nijenhuis_n1(const MetricFManifold& M);

/// N^(2)_i(X,Y) = d eta_i(phi X, Y) + d eta_i(X, phi Y), one 2-form per i.
std::vector<KForm> n2_forms(const MetricFManifold& M);

/// For left-invariant metrics, xi_i Killing <=> ad(xi_i) is g-skew.
Scalar killing_defect(const MetricFManifold& M, int i);  // i in 1..s
bool is_killing(const MetricFManifold& M, int i);

/// max over i<j of |[xi_i, xi_j]|.
Scalar commute_defect(const MetricFManifold& M);

/// Deviation of the g-lowered N^(1) from total antisymmetry.
Scalar skewness_defect_n1(const MetricFManifold& M);

struct ClassificationReport {
    bool valid_metric_f = false;
    bool xi_commute = false;
    bool xi_all_killing = false;
    bool normal = false;
    bool dF_zero = false;
    bool contact_metric = false;  // 2F = d eta_i for every i (s >= 1)
    bool all_deta_zero = false;
    bool is_K = false;
    bool is_S = false;
    bool is_C = false;
    bool is_almost_S = false;
    bool admits_characteristic_connection = false;
    std::optional<std::vector<Scalar>> alpha;  // alpha_j F = d eta_j
    std::vector<std::string> notes;
};

/// All flags computed independently, then cross-checked against the class
/// table; an inconsistency on a valid structure is an internal error.
ClassificationReport classify(const MetricFManifold& M);

/// One-line human summary ("S-manifold, s=2, n=1", ...).
std::string classification_summary(const MetricFManifold& M, const ClassificationReport& c);

}  // namespace fstruct
