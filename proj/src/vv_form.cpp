#include "fstruct/vv_form.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

SVec Tensor3::value(int i, int j) const {
    SVec r(dim_);
    for (int k = 0; k < dim_; ++k) r[k] = at(i, j, k);
    return r;
}

SVec Tensor3::value(const SVec& X, const SVec& Y) const {
    if (int(X.size()) != dim_ || int(Y.size()) != dim_)
        throw DimensionMismatch("Tensor3::value");
    SVec r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (X[i].is_raw_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (Y[j].is_raw_zero()) continue;
            Scalar f = X[i] * Y[j];
            for (int k = 0; k < dim_; ++k) r[k] += f * at(i, j, k);
        }
    }
    return r;
}

Tensor3 Tensor3::operator+(const Tensor3& o) const {
    Tensor3 r = *this;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Tensor3 Tensor3::operator-(const Tensor3& o) const {
    Tensor3 r = *this;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Tensor3 Tensor3::scaled(const Scalar& c) const {
    Tensor3 r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Scalar Tensor3::max_abs() const { return svec_max_abs(a_); }

VvForm VvForm::from_tensor(const Tensor3& t) {
    int n = t.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!approx_zero(t.at(i, j, k) + t.at(j, i, k)))
                    throw InternalError("VvForm: tensor not antisymmetric in (i,j)");
    VvForm v(n);
    v.t_ = t;
    return v;
}

void VvForm::set_pair(int i, int j, const SVec& v) {
    for (int k = 0; k < dim(); ++k) {
        t_.at(i, j, k) = v[k];
        t_.at(j, i, k) = -v[k];
    }
}

VvForm VvForm::operator+(const VvForm& o) const {
    VvForm r = *this;
    r.t_ = r.t_ + o.t_;
    return r;
}

VvForm VvForm::operator-(const VvForm& o) const {
    VvForm r = *this;
    r.t_ = r.t_ - o.t_;
    return r;
}

Scalar VvForm::lowered(const Gram& G, int i, int j, int k) const {
    Scalar s;
    for (int l = 0; l < dim(); ++l) s += t_.at(i, j, l) * G.g().at(l, k);
    return s;
}

Scalar VvForm::total_skewness_defect(const Gram& G) const {
    Defect d;
    int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                d.update(lowered(G, i, j, k) + lowered(G, i, k, j));
    return d.value();
}

KForm VvForm::lowered_form(const Gram& G) const {
    int n = dim();
    KForm f(n, 3);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Scalar v = lowered(G, i, j, k);
                if (!v.is_raw_zero()) f.set({i, j, k}, v);
            }
    return f;
}

VvForm raise_three_form(const Gram& G, const KForm& T3) {
    if (T3.degree() != 3) throw DegreeError("raise_three_form needs a 3-form");
    int n = T3.dim();
    VvForm v(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SVec low(n);
            for (int l = 0; l < n; ++l) low[l] = T3.coeff({i, j, l});
            v.set_pair(i, j, G.ginv().apply(low));
        }
    return v;
}

}  // namespace fstruct
