#pragma once

#include "fstruct/gram.hpp"
#include "fstruct/kform.hpp"
#include "fstruct/linalg.hpp"

namespace fstruct {

/// Dense (1,2)-tensor over the frame: value(e_i, e_j) = sum_k at(i,j,k) e_k.
/// No symmetry assumed; connection coefficient arrays and the
/// Tanaka-Webster tensors live here.
class Tensor3 {
public:
    Tensor3() : dim_(0) {}
    explicit Tensor3(int dim) : dim_(dim), a_(size_t(dim) * dim * dim) {}

    int dim() const { return dim_; }
    Scalar& at(int i, int j, int k) { return a_[(size_t(i) * dim_ + j) * dim_ + k]; }
    const Scalar& at(int i, int j, int k) const { return a_[(size_t(i) * dim_ + j) * dim_ + k]; }

    SVec value(int i, int j) const;                 // value(e_i, e_j) coefficients
    SVec value(const SVec& X, const SVec& Y) const; // bilinear expansion

    Tensor3 operator+(const Tensor3& o) const;
    Tensor3 operator-(const Tensor3& o) const;
    Tensor3 scaled(const Scalar& c) const;
    Scalar max_abs() const;

private:
    int dim_;
    SVec a_;
};

/// Antisymmetric-in-(X,Y) map to vectors; houses N_phi, N^(1) and the
/// vector-valued torsion.
class VvForm {
public:
    VvForm() = default;
    explicit VvForm(int dim) : t_(dim) {}
    /// Validates M[i][j][k] = -M[j][i][k]; InternalError otherwise.
    static VvForm from_tensor(const Tensor3& t);

    int dim() const { return t_.dim(); }
    const Tensor3& tensor() const { return t_; }
    /// Sets value(e_i, e_j) = v and value(e_j, e_i) = -v.
    void set_pair(int i, int j, const SVec& v);
    SVec value(int i, int j) const { return t_.value(i, j); }
    SVec value(const SVec& X, const SVec& Y) const { return t_.value(X, Y); }

    VvForm operator+(const VvForm& o) const;
    VvForm operator-(const VvForm& o) const;
    Scalar max_abs() const { return t_.max_abs(); }
    bool is_zero() const { return max_abs().is_raw_zero(); }

    /// g-lowering to the trilinear map (X,Y,Z) -> g(value(X,Y), Z).
    Scalar lowered(const Gram& G, int i, int j, int k) const;
    /// Max over basis triples of |N(X,Y,Z) + N(X,Z,Y)|: deviation from total
    /// antisymmetry (first-two-slot antisymmetry is automatic).
    Scalar total_skewness_defect(const Gram& G) const;
    /// The lowered tensor as a 3-form; requires total skewness.
    KForm lowered_form(const Gram& G) const;

private:
    Tensor3 t_;
};

/// Raise a 3-form with ginv in the last slot: T(e_i,e_j) = T(e_i,e_j,e_l) g^{lk} e_k.
VvForm raise_three_form(const Gram& G, const KForm& T3);

}  // namespace fstruct
