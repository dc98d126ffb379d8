#include "fstruct/gram.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

Gram::Gram(Matrix g) : g_(std::move(g)) {
    if (g_.rows() != g_.cols()) throw DimensionMismatch("Gram must be square");
    auto inv = inverse(g_);
    if (!inv) throw SingularGram("Gram matrix is singular");
    ginv_ = *inv;
}

Scalar Gram::ip(const SVec& x, const SVec& y) const {
    if (int(x.size()) != dim() || int(y.size()) != dim())
        throw DimensionMismatch("Gram::ip");
    Scalar s;
    for (int i = 0; i < dim(); ++i) {
        if (x[i].is_raw_zero()) continue;
        for (int j = 0; j < dim(); ++j) s += x[i] * g_.at(i, j) * y[j];
    }
    return s;
}

bool Gram::symmetric() const {
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            if (!(g_.at(i, j) - g_.at(j, i)).is_raw_zero()) return false;
    return true;
}

SVec flat(const Gram& G, const SVec& X) { return G.g().apply(X); }

SVec sharp(const Gram& G, const SVec& eta) { return G.ginv().apply(eta); }

}  // namespace fstruct
