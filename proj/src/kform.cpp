#include "fstruct/kform.hpp"

#include <algorithm>

#include "fstruct/errors.hpp"
#include "fstruct/gram.hpp"

namespace fstruct {

namespace {

// Sorts idx in place, returns the permutation sign, or 0 on a repeated index.
int sort_sign(std::vector<int>& idx) {
    int sign = 1;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            if (idx[i] == idx[j]) return 0;
            if (idx[i] > idx[j]) {
                std::swap(idx[i], idx[j]);
                sign = -sign;
            }
        }
    return sign;
}

// Enumerate strictly increasing k-tuples in [0, n).
bool next_tuple(std::vector<int>& t, int n) {
    int k = int(t.size());
    for (int i = k - 1; i >= 0; --i) {
        if (t[i] < n - (k - i)) {
            ++t[i];
            for (int j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<int> first_tuple(int k) {
    std::vector<int> t(k);
    for (int i = 0; i < k; ++i) t[i] = i;
    return t;
}

}  // namespace

// deg > dim is allowed and denotes the zero form (no increasing tuples exist).
KForm::KForm(int dim, int deg) : dim_(dim), deg_(deg) {
    if (deg < 0) throw DegreeError("KForm degree out of range");
}

KForm KForm::basis_covector(int dim, int i) {
    KForm f(dim, 1);
    f.set({i}, Scalar(1));
    return f;
}

bool KForm::is_zero() const {
    for (const auto& [k, v] : comp_)
        if (!v.is_raw_zero()) return false;
    return true;
}

void KForm::set(const std::vector<int>& increasing, const Scalar& value) {
    if (int(increasing.size()) != deg_) throw DegreeError("KForm::set arity");
    for (size_t i = 0; i + 1 < increasing.size(); ++i)
        if (increasing[i] >= increasing[i + 1])
            throw DegreeError("KForm::set needs a strictly increasing tuple");
    if (value.is_raw_zero())
        comp_.erase(increasing);
    else
        comp_[increasing] = value;
}

void KForm::add_to(const std::vector<int>& increasing, const Scalar& value) {
    auto it = comp_.find(increasing);
    if (it == comp_.end()) {
        if (!value.is_raw_zero()) comp_[increasing] = value;
        return;
    }
    it->second += value;
    if (it->second.is_raw_zero()) comp_.erase(it);
}

Scalar KForm::coeff(std::vector<int> idx) const {
    if (int(idx.size()) != deg_) throw DegreeError("KForm::coeff arity");
    int sign = sort_sign(idx);
    if (sign == 0) return Scalar(0);
    auto it = comp_.find(idx);
    if (it == comp_.end()) return Scalar(0);
    return sign > 0 ? it->second : -it->second;
}

Scalar KForm::eval(const std::vector<SVec>& args) const {
    if (int(args.size()) != deg_) throw DegreeError("KForm::eval arity");
    for (const auto& a : args)
        if (int(a.size()) != dim_) throw DimensionMismatch("KForm::eval vector length");
    Scalar total;
    for (const auto& [I, v] : comp_) {
        // det of pairings e^{i_a}(args_b) = args[b][I[a]]
        Matrix m(deg_, deg_);
        for (int a = 0; a < deg_; ++a)
            for (int b = 0; b < deg_; ++b) m.at(a, b) = args[b][I[a]];
        total += v * determinant(m);
    }
    return total;
}

KForm KForm::operator+(const KForm& o) const {
    if (dim_ != o.dim_ || deg_ != o.deg_) throw DegreeError("KForm::operator+ mismatch");
    KForm r = *this;
    for (const auto& [k, v] : o.comp_) r.add_to(k, v);
    return r;
}

KForm KForm::operator-(const KForm& o) const { return *this + o.scaled(Scalar(-1)); }

KForm KForm::scaled(const Scalar& c) const {
    KForm r(dim_, deg_);
    if (c.is_raw_zero()) return r;
    for (const auto& [k, v] : comp_) r.comp_[k] = c * v;
    return r;
}

KForm KForm::wedge(const KForm& o) const {
    if (dim_ != o.dim_) throw DimensionMismatch("wedge dimension mismatch");
    if (deg_ + o.deg_ > dim_) throw DegreeError("wedge degree overflow");
    KForm r(dim_, deg_ + o.deg_);
    for (const auto& [I, a] : comp_)
        for (const auto& [J, b] : o.comp_) {
            std::vector<int> merged = I;
            merged.insert(merged.end(), J.begin(), J.end());
            int sign = sort_sign(merged);
            if (sign == 0) continue;
            r.add_to(merged, Scalar(sign) * a * b);
        }
    return r;
}

KForm KForm::interior(const SVec& X) const {
    if (deg_ < 1) throw DegreeError("interior product needs degree >= 1");
    if (int(X.size()) != dim_) throw DimensionMismatch("interior vector length");
    KForm r(dim_, deg_ - 1);
    for (const auto& [I, v] : comp_) {
        // X ⌟ e^I: contract the a-th slot, sign (-1)^a.
        for (int a = 0; a < deg_; ++a) {
            const Scalar& xi = X[I[a]];
            if (xi.is_raw_zero()) continue;
            std::vector<int> rest;
            rest.reserve(deg_ - 1);
            for (int b = 0; b < deg_; ++b)
                if (b != a) rest.push_back(I[b]);
            Scalar term = v * xi;
            if (a % 2 == 1) term = -term;
            r.add_to(rest, term);
        }
    }
    return r;
}

Scalar KForm::max_abs() const {
    Scalar m;
    for (const auto& [k, v] : comp_) m = scalar_abs_max(m, v);
    return m;
}

bool KForm::approx_equal_to(const KForm& o) const {
    if (dim_ != o.dim_ || deg_ != o.deg_) return false;
    return approx_zero((*this - o).max_abs());
}

KForm ce_d(const LieAlgebra& L, const KForm& w) {
    int n = L.dim();
    if (w.dim() != n) throw DimensionMismatch("ce_d dimension mismatch");
    if (w.degree() >= n) return KForm(n, w.degree() + 1);  // top or above: d w = 0
    int k = w.degree();
    KForm r(n, k + 1);
    if (k == 0) return r;  // left-invariant functions are constant
    std::vector<int> S = first_tuple(k + 1);
    do {
        Scalar val;
        for (int a = 0; a <= k; ++a)
            for (int b = a + 1; b <= k; ++b) {
                SVec br = L.bracket_basis(S[a], S[b]);
                // w(br, rest) expanded through the first slot
                std::vector<int> rest;
                for (int t = 0; t <= k; ++t)
                    if (t != a && t != b) rest.push_back(S[t]);
                Scalar inner;
                for (int m = 0; m < n; ++m) {
                    if (br[m].is_raw_zero()) continue;
                    std::vector<int> idx;
                    idx.reserve(k);
                    idx.push_back(m);
                    idx.insert(idx.end(), rest.begin(), rest.end());
                    inner += br[m] * w.coeff(idx);
                }
                if ((a + b) % 2 == 1) inner = -inner;
                val += inner;
            }
        if (!val.is_raw_zero()) r.set(S, val);
    } while (next_tuple(S, n));
    return r;
}

Scalar form_norm_sq(const Gram& G, const KForm& T) {
    int k = T.degree();
    // (1/k!) over all tuples equals the sum over increasing pairs (I, J)
    // of T_I T_J det(ginv[I, J]).
    Scalar total;
    const auto& gi = G.ginv();
    for (const auto& [I, a] : T.components())
        for (const auto& [J, b] : T.components()) {
            Matrix minor(k, k);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) minor.at(p, q) = gi.at(I[p], J[q]);
            total += a * b * determinant(minor);
        }
    return total;
}

}  // namespace fstruct
