#pragma once

#include <optional>

#include "fstruct/connection.hpp"

namespace fstruct {

/// R(e_i,e_j)e_k = sum_l R[i][j][k][l] e_l, from
/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
class CurvatureTensor {
public:
    CurvatureTensor() : dim_(0) {}
    explicit CurvatureTensor(int dim)
        : dim_(dim), r_(size_t(dim) * dim * dim * dim) {}

    int dim() const { return dim_; }
    Scalar& at(int i, int j, int k, int l) {
        return r_[((size_t(i) * dim_ + j) * dim_ + k) * dim_ + l];
    }
    const Scalar& at(int i, int j, int k, int l) const {
        return r_[((size_t(i) * dim_ + j) * dim_ + k) * dim_ + l];
    }

    /// R(e_i,e_j) as an endomorphism matrix.
    Matrix endo(int i, int j) const;
    /// Lowered R(e_i,e_j,e_k,e_l) = g(R(e_i,e_j)e_k, e_l).
    Scalar lowered(const Gram& G, int i, int j, int k, int l) const;
    /// R(X,Y)Z by multilinear expansion.
    SVec apply(const SVec& X, const SVec& Y, const SVec& Z) const;

    Scalar max_abs() const { return svec_max_abs(r_); }

private:
    int dim_;
    SVec r_;
};

CurvatureTensor curvature(const MetricFManifold& M, const Connection& conn);

/// The scalar c with R = c * F (x) phi when the curvature has that shape.
std::optional<Scalar> curvature_as_f_phi(const MetricFManifold& M, const Connection& conn);

struct RicciData {
    Matrix ric;
    Scalar scal;
    bool symmetric = false;
    double symmetry_defect = 0;
};

/// Ric(U,V) = sum_{p,q} g^{pq} g(R(e_p,U)V, e_q); scal = ginv-trace.
RicciData ricci(const MetricFManifold& M, const Connection& conn);

/// S(U,V) = sum_{p,q} g^{pq} g(T(e_p,U), T(e_q,V)).
Matrix s_tensor(const MetricFManifold& M, const TorsionData& T);

/// sigma_T = (1/2) sum g^{pq} (e_p -| T) ^ (e_q -| T), cross-checked against
/// the expanded pairing formula; disagreement is an internal error.
KForm sigma_four_form(const MetricFManifold& M, const TorsionData& T);

struct KernelData {
    std::vector<SVec> basis;  // spans Ker(T) at the identity
    int rank = 0;             // dim Ker(T)
};

/// Null space of U -> U -| T.
KernelData torsion_kernel(const MetricFManifold& M, const TorsionData& T);

/// Curvature identities linking nabla and nabla^g; identities conditional
/// on nabla T = 0 / sigma_T = 0 are skipped with a reason when the
/// hypotheses fail. Requires the characteristic connection to exist.
PropertyReport curvature_identity_suite(const MetricFManifold& M);

/// Ric^g(X, xi_i) = 2n sum_j eta_j(X) on S-manifolds.
PropertyReport s_manifold_ricci_identity(const MetricFManifold& M);

/// Ric^nabla proportional to g (the nabla-Einstein condition).
bool nabla_einstein(const MetricFManifold& M, const RicciData& ric);

}  // namespace fstruct
