#pragma once

#include <string>
#include <vector>

#include "fstruct/linalg.hpp"

namespace fstruct {

/// A Lie algebra presented by a frame: bracket table [e_i, e_j] = sum_k c[i][j][k] e_k.
/// Antisymmetry of c in (i,j) and the Jacobi identity are the defining
/// invariants; check_jacobi measures the latter.
class LieAlgebra {
public:
    LieAlgebra() : dim_(0) {}
    LieAlgebra(int dim, std::vector<std::string> labels);

    int dim() const { return dim_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Sets [e_i, e_j] = value e_k and [e_j, e_i] = -value e_k.
    void set_bracket(int i, int j, int k, const Scalar& value);
    const Scalar& c(int i, int j, int k) const { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }

    /// Coefficients of [e_i, e_j].
    SVec bracket_basis(int i, int j) const;

    bool antisymmetric() const;

private:
    Scalar& cref(int i, int j, int k) { return c_[(size_t(i) * dim_ + j) * dim_ + k]; }
    int dim_;
    SVec c_;
    std::vector<std::string> labels_;
};

/// Bilinear antisymmetric expansion of the bracket table.
SVec lie_bracket(const LieAlgebra& L, const SVec& X, const SVec& Y);

/// Max-norm over all basis triples of the Jacobi defect
/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]; zero iff L is a Lie algebra.
Scalar check_jacobi(const LieAlgebra& L);

}  // namespace fstruct
