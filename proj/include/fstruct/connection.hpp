#pragma once

#include "fstruct/fstructure.hpp"
#include "fstruct/manifold.hpp"
#include "fstruct/vv_form.hpp"

namespace fstruct {

enum class ConnectionKind { levi_civita, characteristic, tanaka_webster, custom };

/// Coefficient array over the frame: nabla_{e_i} e_j = sum_k gamma(i,j,k) e_k.
class Connection {
public:
    Connection() = default;
    Connection(int dim, ConnectionKind kind) : kind_(kind), gamma_(dim) {}

    int dim() const { return gamma_.dim(); }
    ConnectionKind kind() const { return kind_; }
    Scalar& gamma(int i, int j, int k) { return gamma_.at(i, j, k); }
    const Scalar& gamma(int i, int j, int k) const { return gamma_.at(i, j, k); }
    const Tensor3& coefficients() const { return gamma_; }

    /// nabla_{e_i} Y for a constant-coefficient (left-invariant) Y.
    SVec nabla_basis(int i, const SVec& Y) const;
    /// nabla_X Y, both constant-coefficient.
    SVec nabla(const SVec& X, const SVec& Y) const;

    /// T(e_i,e_j) = nabla_i e_j - nabla_j e_i - [e_i,e_j].
    VvForm torsion(const LieAlgebra& L) const;

    bool approx_equal_to(const Connection& o) const {
        return approx_zero((gamma_ - o.gamma_).max_abs());
    }

private:
    ConnectionKind kind_ = ConnectionKind::custom;
    Tensor3 gamma_;
};

struct TorsionData {
    KForm three_form;  // g-lowered torsion
    VvForm vv_form;    // raised, T(X,Y) as a vector
};

/// Koszul formula for a left-invariant metric:
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([X,Z],Y) - g([Y,Z],X).
/// The result is verified metric and torsion-free.
Connection levi_civita(const MetricFManifold& M);

/// d^phi F(X,Y,Z) := -dF(phi X, phi Y, phi Z).
KForm d_phi_F(const MetricFManifold& M);

/// Torsion 3-form of the unique adapted connection:
/// T = sum eta_i ^ d eta_i + d^phi F + N^(1) - sum eta_i ^ (xi_i -| N^(1)).
/// Throws ObstructionError (naming every failed condition) unless the xi
/// commute, every xi is Killing and N^(1) is totally skew.
TorsionData characteristic_torsion(const MetricFManifold& M);

/// On an S-manifold the torsion collapses to T = sum eta_i ^ d eta_i
/// = 2 etabar ^ F; cross-checked against characteristic_torsion.
TorsionData s_manifold_torsion(const MetricFManifold& M);

/// gamma' = gamma + (1/2) raised T.
Connection with_torsion(const MetricFManifold& M, const Connection& conn_g,
                        const TorsionData& T);

/// levi_civita + with_torsion(characteristic_torsion).
Connection characteristic_connection(const MetricFManifold& M);

/// Covariant differentiation of left-invariant tensors: frame-direction
/// derivatives of constant components vanish, leaving only -Gamma hooks
/// (plus the +Gamma hook on the contravariant slot).
std::vector<SVec> covariant_derivative(const Connection& c, const SVec& X);       // vector
std::vector<SVec> covariant_derivative_covec(const Connection& c, const SVec& w); // covector
std::vector<Matrix> covariant_derivative(const Connection& c, const Matrix& A);   // endo
std::vector<KForm> covariant_derivative(const Connection& c, const KForm& w);     // k-form
std::vector<Tensor3> covariant_derivative(const Connection& c, const Tensor3& t); // (1,2)

struct AdaptednessReport {
    double g_defect = 0, phi_defect = 0, xi_defect = 0, eta_defect = 0;
    bool g_parallel = false, phi_parallel = false, xi_parallel = false, eta_parallel = false;
    bool all_parallel() const { return g_parallel && phi_parallel && xi_parallel && eta_parallel; }
};

/// Defects of nabla g, nabla phi, max_i nabla xi_i, max_i nabla eta_i.
AdaptednessReport verify_adapted(const MetricFManifold& M, const Connection& conn);

struct PropertyCheck {
    std::string name;
    bool applicable = true;
    std::string reason;  // skip reason when not applicable
    double defect = 0;
    bool pass = true;
};

struct PropertyReport {
    std::vector<PropertyCheck> checks;
    bool all_pass() const {
        for (const auto& c : checks)
            if (c.applicable && !c.pass) return false;
        return true;
    }
    double max_defect() const {
        double m = 0;
        for (const auto& c : checks)
            if (c.applicable) m = std::max(m, c.defect);
        return m;
    }
};

/// The torsion characterization identities of an adapted connection:
/// d eta_i = xi_i -| T = 2 nabla^g eta_i; N^(1) = -T^-;
/// 2 (nabla^g_X F)(Y,Z) = T(X,Y,phi Z) + T(X,phi Y,Z);
/// dF = cyclic T(X,Y,phi Z); the (TxTyTz) identity; and the phi^2-argument
/// torsion identity for commuting xi.
PropertyReport torsion_characterization_suite(const MetricFManifold& M,
                                              const Connection& conn,
                                              const TorsionData& T);

struct TanakaWebsterResult {
    Connection conn;          // nabla~ = nabla^g + A~
    Tensor3 a_tilde;          // A~(X,Y) = sum_j { F(X,Y)xi_j + eta_j(X)phi Y + eta_j(Y)phi X }
    Tensor3 a;                // A(X,Y)  = sum_j { F(X,Y)xi_j - eta_j(X)phi Y + eta_j(Y)phi X }
    VvForm torsion;           // of nabla~
    double torsion_skewness_defect = 0;
    // Cartan-type decomposition norms of the lowered torsion
    double skew_part_norm_sq = 0, vectorial_part_norm_sq = 0, remainder_norm_sq = 0;
    std::string torsion_type;
};

/// The comparison connection of Lotta-Pastore on S-manifolds; preserves the
/// structure but its torsion is not totally skew.
TanakaWebsterResult tanaka_webster(const MetricFManifold& M);

}  // namespace fstruct
