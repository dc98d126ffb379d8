#pragma once

#include "fstruct/linalg.hpp"

namespace fstruct {

/// Inner product on the frame: symmetric positive definite matrix and its
/// (cached) inverse. Frames need not be orthonormal; every trace in the
/// library goes through ginv.
class Gram {
public:
    Gram() = default;
    explicit Gram(Matrix g);

    int dim() const { return g_.rows(); }
    const Matrix& g() const { return g_; }
    const Matrix& ginv() const { return ginv_; }

    Scalar ip(const SVec& x, const SVec& y) const;  // g(x, y)
    bool symmetric() const;
    bool is_positive_definite() const { return positive_definite(g_); }

private:
    Matrix g_, ginv_;
};

/// eta_i(X) = g(X, xi_i) realized as index lowering/raising.
SVec flat(const Gram& G, const SVec& X);    // vector -> covector
SVec sharp(const Gram& G, const SVec& eta); // covector -> vector

}  // namespace fstruct
