#include "fstruct/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "fstruct/errors.hpp"

namespace fstruct {

SVec svec_zero(int n) { return SVec(n); }

SVec svec_add(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("svec_add");
    SVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

SVec svec_sub(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("svec_sub");
    SVec r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

SVec svec_scale(const Scalar& c, const SVec& a) {
    SVec r = a;
    for (auto& x : r) x *= c;
    return r;
}

bool svec_approx_equal(const SVec& a, const SVec& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (!approx_equal(a[i], b[i])) return false;
    return true;
}

Scalar svec_max_abs(const SVec& a) {
    Scalar m;
    for (const auto& x : a) m = scalar_abs_max(m, x);
    return m;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

SVec Matrix::apply(const SVec& v) const {
    if (int(v.size()) != cols_) throw DimensionMismatch("Matrix::apply");
    SVec r(rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("Matrix::operator*");
    Matrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            if (at(i, k).is_raw_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += o.a_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    Matrix r = *this;
    for (size_t i = 0; i < r.a_.size(); ++i) r.a_[i] -= o.a_[i];
    return r;
}

Matrix Matrix::scaled(const Scalar& c) const {
    Matrix r = *this;
    for (auto& x : r.a_) x *= c;
    return r;
}

Matrix Matrix::from_flat(int rows, int cols, const SVec& v) {
    Matrix m(rows, cols);
    m.a_ = v;
    return m;
}

Scalar Matrix::max_abs() const { return svec_max_abs(a_); }

bool Matrix::all_exact() const {
    for (const auto& x : a_)
        if (!x.exact()) return false;
    return true;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

namespace {

// Row echelon elimination in place; returns (pivots, sign). Pivoting by
// largest |entry| keeps the float path stable and is harmless for exact.
struct Echelon {
    std::vector<std::pair<int, int>> pivots;  // (row, col)
    int sign = 1;
};

Echelon eliminate(Matrix& m, bool exact) {
    Echelon e;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int best = -1;
        double best_mag = 0;
        for (int i = r; i < m.rows(); ++i) {
            double mag = std::fabs(m.at(i, c).dbl());
            if (exact ? !m.at(i, c).is_raw_zero() && (best == -1 || mag > best_mag)
                      : mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (best == -1 || (!exact && best_mag <= comparison_tolerance())) continue;
        if (best != r) {
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(best, j), m.at(r, j));
            e.sign = -e.sign;
        }
        Scalar piv = m.at(r, c);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c).is_raw_zero()) continue;
            Scalar f = m.at(i, c) / piv;
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
            m.at(i, c) = Scalar(0);
        }
        e.pivots.emplace_back(r, c);
        ++r;
    }
    return e;
}

}  // namespace

Scalar determinant(Matrix m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("determinant of non-square matrix");
    bool exact = m.all_exact();
    Echelon e = eliminate(m, exact);
    if (int(e.pivots.size()) < m.rows()) return Scalar(0);
    Scalar d(e.sign);
    for (int i = 0; i < m.rows(); ++i) d *= m.at(i, i);
    return d;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    int n = m.rows();
    Matrix aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = Scalar(1);
    }
    bool exact = m.all_exact();
    // Gauss-Jordan with the same pivot policy as eliminate().
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int best = -1;
        double best_mag = 0;
        for (int i = r; i < n; ++i) {
            double mag = std::fabs(aug.at(i, c).dbl());
            if (exact ? !aug.at(i, c).is_raw_zero() && (best == -1 || mag > best_mag)
                      : mag > best_mag) {
                best = i;
                best_mag = mag;
            }
        }
        if (best == -1 || (!exact && best_mag <= comparison_tolerance())) return std::nullopt;
        if (best != r)
            for (int j = 0; j < 2 * n; ++j) std::swap(aug.at(best, j), aug.at(r, j));
        Scalar piv = aug.at(r, c);
        for (int j = 0; j < 2 * n; ++j) aug.at(r, j) /= piv;
        for (int i = 0; i < n; ++i) {
            if (i == r || aug.at(i, c).is_raw_zero()) continue;
            Scalar f = aug.at(i, c);
            for (int j = 0; j < 2 * n; ++j) aug.at(i, j) -= f * aug.at(r, j);
        }
        ++r;
    }
    if (r < n) return std::nullopt;
    Matrix inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
    return inv;
}

namespace {

// Singular values of a Scalar matrix read as doubles, via eigenvalues of A^T A.
std::vector<double> singular_values(const Matrix& m, std::vector<std::vector<double>>* v_out) {
    int n = m.cols();
    std::vector<std::vector<double>> ata(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            double s = 0;
            for (int k = 0; k < m.rows(); ++k) s += m.at(k, i).dbl() * m.at(k, j).dbl();
            ata[i][j] = s;
        }
    std::vector<double> eig;
    std::vector<std::vector<double>> vecs;
    jacobi_eigen_sym(ata, eig, vecs);
    if (v_out) *v_out = vecs;
    std::vector<double> sv(n);
    for (int i = 0; i < n; ++i) sv[i] = std::sqrt(std::max(eig[i], 0.0));
    return sv;
}

}  // namespace

int matrix_rank(const Matrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (m.all_exact()) {
        Matrix w = m;
        return int(eliminate(w, true).pivots.size());
    }
    auto sv = singular_values(m, nullptr);
    double svmax = *std::max_element(sv.begin(), sv.end());
    if (svmax == 0.0) return 0;
    int r = 0;
    for (double s : sv)
        if (s > comparison_tolerance() * svmax) ++r;
    return r;
}

std::vector<SVec> null_space(const Matrix& m) {
    int n = m.cols();
    if (m.rows() == 0) {
        std::vector<SVec> basis;
        for (int j = 0; j < n; ++j) {
            SVec v(n);
            v[j] = Scalar(1);
            basis.push_back(v);
        }
        return basis;
    }
    if (m.all_exact()) {
        Matrix w = m;
        Echelon e = eliminate(w, true);
        // Back-substitute to reduced form.
        for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
            auto [pr, pc] = *it;
            Scalar piv = w.at(pr, pc);
            for (int j = pc; j < n; ++j) w.at(pr, j) /= piv;
            for (int i = 0; i < pr; ++i) {
                if (w.at(i, pc).is_raw_zero()) continue;
                Scalar f = w.at(i, pc);
                for (int j = pc; j < n; ++j) w.at(i, j) -= f * w.at(pr, j);
            }
        }
        std::vector<bool> is_pivot(n, false);
        for (auto [pr, pc] : e.pivots) is_pivot[pc] = true;
        std::vector<SVec> basis;
        for (int free = 0; free < n; ++free) {
            if (is_pivot[free]) continue;
            SVec v(n);
            v[free] = Scalar(1);
            for (auto [pr, pc] : e.pivots) v[pc] = -w.at(pr, free);
            basis.push_back(v);
        }
        return basis;
    }
    std::vector<std::vector<double>> vecs;
    auto sv = singular_values(m, &vecs);
    double svmax = *std::max_element(sv.begin(), sv.end());
    std::vector<SVec> basis;
    for (int i = 0; i < n; ++i) {
        if (svmax > 0.0 && sv[i] > comparison_tolerance() * svmax) continue;
        SVec v(n);
        for (int j = 0; j < n; ++j) v[j] = Scalar::raw_double(vecs[j][i]);
        basis.push_back(v);
    }
    return basis;
}

bool positive_definite(const Matrix& m) {
    if (m.rows() != m.cols()) return false;
    for (int k = 1; k <= m.rows(); ++k) {
        Matrix lead(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) lead.at(i, j) = m.at(i, j);
        if (determinant(lead).sign() <= 0) return false;
    }
    return true;
}

void jacobi_eigen_sym(const std::vector<std::vector<double>>& a_in,
                      std::vector<double>& eigvals,
                      std::vector<std::vector<double>>& eigvecs) {
    int n = int(a_in.size());
    auto a = a_in;
    eigvecs.assign(n, std::vector<double>(n, 0.0));
    for (int i = 0; i < n; ++i) eigvecs[i][i] = 1.0;
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
        if (off < 1e-30) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                if (std::fabs(a[p][q]) < 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a[k][p], akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a[p][k], aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                for (int k = 0; k < n; ++k) {
                    double vkp = eigvecs[k][p], vkq = eigvecs[k][q];
                    eigvecs[k][p] = c * vkp - s * vkq;
                    eigvecs[k][q] = s * vkp + c * vkq;
                }
            }
    }
    eigvals.resize(n);
    for (int i = 0; i < n; ++i) eigvals[i] = a[i][i];
}

bool SpanBuilder::insert(const SVec& v) {
    bool exact = true;
    for (const auto& x : v)
        if (!x.exact()) {
            exact = false;
            break;
        }
    for (const auto& b : basis_)
        for (const auto& x : b)
            if (!x.exact()) exact = false;

    SVec w = v;
    if (exact) {
        for (size_t k = 0; k < basis_.size(); ++k) {
            const Scalar& lead = w[pivot_cols_[k]];
            if (lead.is_raw_zero()) continue;
            Scalar f = lead;  // basis rows are normalized to pivot 1
            w = svec_sub(w, svec_scale(f, basis_[k]));
        }
        int piv = -1;
        for (size_t i = 0; i < w.size(); ++i)
            if (!w[i].is_raw_zero()) {
                piv = int(i);
                break;
            }
        if (piv < 0) return false;
        w = svec_scale(Scalar(1) / w[piv], w);
        // keep earlier rows reduced against the new pivot
        for (size_t k = 0; k < basis_.size(); ++k) {
            const Scalar& c = basis_[k][piv];
            if (!c.is_raw_zero()) basis_[k] = svec_sub(basis_[k], svec_scale(c, w));
        }
        basis_.push_back(w);
        pivot_cols_.push_back(piv);
        return true;
    }
    // Float path: Gram-Schmidt against the (orthonormal) basis.
    auto dot = [](const SVec& a, const SVec& b) {
        double s = 0;
        for (size_t i = 0; i < a.size(); ++i) s += a[i].dbl() * b[i].dbl();
        return s;
    };
    double orig = std::sqrt(dot(w, w));
    if (orig == 0.0) return false;
    for (const auto& b : basis_) {
        double c = dot(w, b);
        for (size_t i = 0; i < w.size(); ++i)
            w[i] = Scalar::raw_double(w[i].dbl() - c * b[i].dbl());
    }
    double res = std::sqrt(dot(w, w));
    if (res <= comparison_tolerance() * std::max(1.0, orig)) return false;
    for (auto& x : w) x = Scalar::raw_double(x.dbl() / res);
    basis_.push_back(w);
    pivot_cols_.push_back(-1);
    return true;
}

}  // namespace fstruct
