#include "fstruct/lie_algebra.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

LieAlgebra::LieAlgebra(int dim, std::vector<std::string> labels)
    : dim_(dim), c_(size_t(dim) * dim * dim), labels_(std::move(labels)) {
    if (dim <= 0) throw DimensionMismatch("LieAlgebra dimension must be positive");
    if (labels_.empty())
        for (int i = 0; i < dim; ++i) labels_.push_back("e" + std::to_string(i + 1));
    if (int(labels_.size()) != dim) throw DimensionMismatch("label count != dim");
}

void LieAlgebra::set_bracket(int i, int j, int k, const Scalar& value) {
    cref(i, j, k) = value;
    cref(j, i, k) = -value;
}

SVec LieAlgebra::bracket_basis(int i, int j) const {
    SVec r(dim_);
    for (int k = 0; k < dim_; ++k) r[k] = c(i, j, k);
    return r;
}

bool LieAlgebra::antisymmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j)
            for (int k = 0; k < dim_; ++k)
                if (!(c(i, j, k) + c(j, i, k)).is_raw_zero()) return false;
    return true;
}

SVec lie_bracket(const LieAlgebra& L, const SVec& X, const SVec& Y) {
    if (int(X.size()) != L.dim() || int(Y.size()) != L.dim())
        throw DimensionMismatch("lie_bracket: vector length != dim");
    SVec r(L.dim());
    for (int i = 0; i < L.dim(); ++i) {
        if (X[i].is_raw_zero()) continue;
        for (int j = 0; j < L.dim(); ++j) {
            if (Y[j].is_raw_zero()) continue;
            Scalar f = X[i] * Y[j];
            for (int k = 0; k < L.dim(); ++k) r[k] += f * L.c(i, j, k);
        }
    }
    return r;
}

Scalar check_jacobi(const LieAlgebra& L) {
    Defect d;
    int n = L.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                SVec ei(n), ej(n), ek(n);
                ei[i] = Scalar(1);
                ej[j] = Scalar(1);
                ek[k] = Scalar(1);
                SVec s = svec_add(
                    svec_add(lie_bracket(L, L.bracket_basis(i, j), ek),
                             lie_bracket(L, L.bracket_basis(j, k), ei)),
                    lie_bracket(L, L.bracket_basis(k, i), ej));
                d.update(svec_max_abs(s));
            }
    return d.value();
}

}  // namespace fstruct
