#include "fstruct/holonomy.hpp"

namespace fstruct {

namespace {

Matrix gamma_endo(const Connection& conn, int m) {
    int n = conn.dim();
    Matrix g(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) g.at(k, j) = conn.gamma(m, j, k);
    return g;
}

}  // namespace

HolonomyResult infinitesimal_holonomy(const MetricFManifold& M, const Connection& conn) {
    int n = M.dim();
    CurvatureTensor R = curvature(M, conn);
    SpanBuilder span;
    std::vector<Matrix> reps;
    auto try_insert = [&](const Matrix& A) {
        if (span.insert(A.flatten())) {
            reps.push_back(A);
            return true;
        }
        return false;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) try_insert(R.endo(i, j));

    auto bracket_close = [&] {
        size_t processed = 0;
        while (processed < reps.size()) {
            for (size_t t = 0; t < reps.size(); ++t)
                try_insert(commutator(reps[processed], reps[t]));
            ++processed;
        }
    };
    bracket_close();

    std::vector<Matrix> gammas;
    for (int m = 0; m < n; ++m) gammas.push_back(gamma_endo(conn, m));

    HolonomyResult out;
    int level = 0;
    const int cap = n * n;
    while (true) {
        int before = span.dim();
        size_t count = reps.size();
        for (int m = 0; m < n; ++m)
            for (size_t t = 0; t < count; ++t) try_insert(commutator(gammas[m], reps[t]));
        bracket_close();
        if (span.dim() == before) break;
        ++level;
        if (level > cap) {
            out.stabilized = false;
            break;
        }
    }
    out.stabilized_at = level;
    out.dim = span.dim();
    for (const auto& v : span.reduced_basis())
        out.generators.push_back(Matrix::from_flat(n, n, v));
    out.is_abelian = true;
    for (size_t a = 0; a < out.generators.size() && out.is_abelian; ++a)
        for (size_t b = a + 1; b < out.generators.size(); ++b)
            if (!approx_zero(commutator(out.generators[a], out.generators[b]).max_abs())) {
                out.is_abelian = false;
                break;
            }
    return out;
}

AmbroseSingerResult ambrose_singer_check(const MetricFManifold& M, const Connection& conn) {
    AmbroseSingerResult out;
    Defect dt;
    VvForm T = conn.torsion(M.L());
    for (const auto& d : covariant_derivative(conn, T.tensor())) dt.update(d.max_abs());
    out.t_defect = dt.dbl();
    out.nabla_T_zero = dt.pass();

    int n = M.dim();
    CurvatureTensor R = curvature(M, conn);
    Defect dr;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        Scalar s;
                        for (int p = 0; p < n; ++p) {
                            s += R.at(i, j, k, p) * conn.gamma(m, p, l);
                            s -= conn.gamma(m, i, p) * R.at(p, j, k, l);
                            s -= conn.gamma(m, j, p) * R.at(i, p, k, l);
                            s -= conn.gamma(m, k, p) * R.at(i, j, p, l);
                        }
                        dr.update(s);
                    }
    out.r_defect = dr.dbl();
    out.nabla_R_zero = dr.pass();
    return out;
}

std::vector<Matrix> nabla_R_endos(const MetricFManifold& M, const Connection& conn) {
    int n = M.dim();
    CurvatureTensor R = curvature(M, conn);
    std::vector<Matrix> out;
    for (int m = 0; m < n; ++m)
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Matrix e(n, n);
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        Scalar s;
                        for (int p = 0; p < n; ++p) {
                            s += R.at(i, j, k, p) * conn.gamma(m, p, l);
                            s -= conn.gamma(m, i, p) * R.at(p, j, k, l);
                            s -= conn.gamma(m, j, p) * R.at(i, p, k, l);
                            s -= conn.gamma(m, k, p) * R.at(i, j, p, l);
                        }
                        e.at(l, k) = s;
                    }
                out.push_back(e);
            }
    return out;
}

}  // namespace fstruct
