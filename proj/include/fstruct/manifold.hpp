#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fstruct/gram.hpp"
#include "fstruct/kform.hpp"
#include "fstruct/lie_algebra.hpp"
#include "fstruct/linalg.hpp"

namespace fstruct {

/// phi, the characteristic vector fields and their dual 1-forms.
/// Defining identities (validated, not assumed): phi^3 + phi = 0,
/// rank(phi) = 2n, eta_i(xi_j) = delta_ij, eta_i . phi = 0,
/// phi^2 = -Id + sum eta_i (x) xi_i.
struct FStructureData {
    Matrix phi;                // EndoField, dim x dim
    std::vector<SVec> xi;      // s vectors
    std::vector<SVec> eta;     // s covectors
    int n = 0;                 // CR-dimension
    int s = 0;                 // CR-codimension
};

struct CheckResult {
    std::string name;
    bool pass;
    double defect;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    double max_defect() const;
    const CheckResult* find(const std::string& name) const;
};

/// Left-invariant metric f-manifold: Lie algebra + Gram + f-structure.
/// The fundamental 2-form F(X,Y) = g(X, phi Y) is cached when it is
/// antisymmetric (it always is on a valid structure).
class MetricFManifold {
public:
    MetricFManifold(std::string name, LieAlgebra L, Gram G, FStructureData fs);

    const std::string& name() const { return name_; }
    const LieAlgebra& L() const { return L_; }
    const Gram& G() const { return G_; }
    const FStructureData& fs() const { return fs_; }
    int dim() const { return L_.dim(); }
    int n() const { return fs_.n; }
    int s() const { return fs_.s; }

    SVec basis(int i) const;
    SVec phi_apply(const SVec& X) const { return fs_.phi.apply(X); }
    Scalar eta_val(int i, const SVec& X) const;

    /// Raw matrix g(e_i, phi e_j); defined for any input.
    const Matrix& f_raw() const { return f_raw_; }
    bool f_antisymmetric() const { return F_.has_value(); }
    /// The fundamental 2-form; throws when g(.,phi .) is not antisymmetric.
    const KForm& F() const;
    /// d eta_i, cached.
    const KForm& deta(int i) const { return deta_[i]; }

private:
    std::string name_;
    LieAlgebra L_;
    Gram G_;
    FStructureData fs_;
    Matrix f_raw_;
    std::optional<KForm> F_;
    std::vector<KForm> deta_;
};

/// Every structural invariant evaluated exhaustively over the frame;
/// failures are report entries, never exceptions.
ValidationReport validate_f_structure(const MetricFManifold& M);

/// F(e_i, e_j) = g(e_i, phi e_j); requires a valid (antisymmetric) structure.
KForm fundamental_form(const MetricFManifold& M);

/// Build eta_i = flat(xi_i) from the Gram (the default construction).
std::vector<SVec> derive_eta(const Gram& G, const std::vector<SVec>& xi);

}  // namespace fstruct
