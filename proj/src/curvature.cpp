#include "fstruct/curvature.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

Matrix CurvatureTensor::endo(int i, int j) const {
    Matrix m(dim_, dim_);
    for (int k = 0; k < dim_; ++k)
        for (int l = 0; l < dim_; ++l) m.at(l, k) = at(i, j, k, l);
    return m;
}

Scalar CurvatureTensor::lowered(const Gram& G, int i, int j, int k, int l) const {
    Scalar s;
    for (int m = 0; m < dim_; ++m) s += at(i, j, k, m) * G.g().at(m, l);
    return s;
}

SVec CurvatureTensor::apply(const SVec& X, const SVec& Y, const SVec& Z) const {
    SVec r(dim_);
    for (int i = 0; i < dim_; ++i) {
        if (X[i].is_raw_zero()) continue;
        for (int j = 0; j < dim_; ++j) {
            if (Y[j].is_raw_zero()) continue;
            Scalar f = X[i] * Y[j];
            for (int k = 0; k < dim_; ++k) {
                if (Z[k].is_raw_zero()) continue;
                Scalar fk = f * Z[k];
                for (int l = 0; l < dim_; ++l) r[l] += fk * at(i, j, k, l);
            }
        }
    }
    return r;
}

CurvatureTensor curvature(const MetricFManifold& M, const Connection& conn) {
    int n = M.dim();
    CurvatureTensor R(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                SVec v(n);
                // nabla_i nabla_j e_k - nabla_j nabla_i e_k - nabla_[e_i,e_j] e_k
                for (int m = 0; m < n; ++m) {
                    if (!conn.gamma(j, k, m).is_raw_zero())
                        v = svec_add(v, svec_scale(conn.gamma(j, k, m),
                                                   conn.nabla_basis(i, M.basis(m))));
                    if (!conn.gamma(i, k, m).is_raw_zero())
                        v = svec_sub(v, svec_scale(conn.gamma(i, k, m),
                                                   conn.nabla_basis(j, M.basis(m))));
                    if (!M.L().c(i, j, m).is_raw_zero())
                        v = svec_sub(v, svec_scale(M.L().c(i, j, m),
                                                   conn.nabla_basis(m, M.basis(k))));
                }
                for (int l = 0; l < n; ++l) {
                    R.at(i, j, k, l) = v[l];
                    R.at(j, i, k, l) = -v[l];
                }
            }
    return R;
}

std::optional<Scalar> curvature_as_f_phi(const MetricFManifold& M, const Connection& conn) {
    if (!M.f_antisymmetric()) return std::nullopt;
    CurvatureTensor R = curvature(M, conn);
    int n = M.dim();
    const KForm& F = M.F();
    const Matrix& phi = M.fs().phi;
    // find the factor on the first nonzero product F(e_i,e_j) phi(e_k)_l
    std::optional<Scalar> c;
    for (int i = 0; i < n && !c; ++i)
        for (int j = 0; j < n && !c; ++j)
            for (int k = 0; k < n && !c; ++k)
                for (int l = 0; l < n && !c; ++l) {
                    Scalar prod = F.coeff({i, j}) * phi.at(l, k);
                    if (!prod.is_raw_zero()) c = R.at(i, j, k, l) / prod;
                }
    if (!c) {
        // F (x) phi vanishes identically; the factor exists iff R does too.
        return approx_zero(R.max_abs()) ? std::optional<Scalar>(Scalar(0)) : std::nullopt;
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l)
                    if (!approx_equal(R.at(i, j, k, l), *c * F.coeff({i, j}) * phi.at(l, k)))
                        return std::nullopt;
    return c;
}

RicciData ricci(const MetricFManifold& M, const Connection& conn) {
    CurvatureTensor R = curvature(M, conn);
    int n = M.dim();
    const Gram& G = M.G();
    RicciData out;
    out.ric = Matrix(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar s;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    if (G.ginv().at(p, q).is_raw_zero()) continue;
                    s += G.ginv().at(p, q) * R.lowered(G, p, a, b, q);
                }
            out.ric.at(a, b) = s;
        }
    Scalar scal;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) scal += G.ginv().at(a, b) * out.ric.at(a, b);
    out.scal = scal;
    Defect sym;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) sym.update(out.ric.at(a, b) - out.ric.at(b, a));
    out.symmetric = sym.pass();
    out.symmetry_defect = sym.dbl();
    return out;
}

Matrix s_tensor(const MetricFManifold& M, const TorsionData& T) {
    int n = M.dim();
    const Gram& G = M.G();
    Matrix S(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Scalar s;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) {
                    const Scalar& gpq = G.ginv().at(p, q);
                    if (gpq.is_raw_zero()) continue;
                    s += gpq * G.ip(T.vv_form.value(p, a), T.vv_form.value(q, b));
                }
            S.at(a, b) = s;
        }
    return S;
}

KForm sigma_four_form(const MetricFManifold& M, const TorsionData& T) {
    int n = M.dim();
    const Gram& G = M.G();
    // wedge route
    KForm sigma(n, 4);
    if (n >= 4) {
        Scalar half(1, 2);
        for (int p = 0; p < n; ++p) {
            KForm ip = T.three_form.interior(M.basis(p));
            for (int q = 0; q < n; ++q) {
                const Scalar& gpq = G.ginv().at(p, q);
                if (gpq.is_raw_zero()) continue;
                KForm iq = (p == q) ? ip : T.three_form.interior(M.basis(q));
                sigma = sigma + ip.wedge(iq).scaled(half * gpq);
            }
        }
        // expanded pairing route, cross-checked
        Defect diff;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (int d = c + 1; d < n; ++d) {
                        Scalar v = G.ip(T.vv_form.value(a, b), T.vv_form.value(c, d)) +
                                   G.ip(T.vv_form.value(b, c), T.vv_form.value(a, d)) +
                                   G.ip(T.vv_form.value(c, a), T.vv_form.value(b, d));
                        diff.update(sigma.coeff({a, b, c, d}) - v);
                    }
        if (!diff.pass())
            throw InternalError("sigma_T: wedge and pairing formulas disagree (defect " +
                                std::to_string(diff.dbl()) + ")");
    }
    return sigma;
}

KernelData torsion_kernel(const MetricFManifold& M, const TorsionData& T) {
    int n = M.dim();
    int rows = n * (n - 1) / 2;
    Matrix A(rows, n);
    int r = 0;
    for (int j = 0; j < n; ++j)
        for (int k = j + 1; k < n; ++k, ++r)
            for (int i = 0; i < n; ++i) A.at(r, i) = T.three_form.coeff({i, j, k});
    KernelData out;
    out.basis = null_space(A);
    out.rank = int(out.basis.size());
    return out;
}

PropertyReport curvature_identity_suite(const MetricFManifold& M) {
    PropertyReport rep;
    int n = M.dim();
    const Gram& G = M.G();
    TorsionData T = characteristic_torsion(M);  // may throw ObstructionError
    Connection lc = levi_civita(M);
    Connection conn = with_torsion(M, lc, T);
    CurvatureTensor Rn = curvature(M, conn);
    CurvatureTensor Rg = curvature(M, lc);

    Defect nablaT;
    for (const auto& d : covariant_derivative(conn, T.vv_form.tensor())) nablaT.update(d.max_abs());
    bool parallel_T = nablaT.pass();
    KForm sigma = sigma_four_form(M, T);
    bool sigma_zero = approx_zero(sigma.max_abs());

    auto add = [&rep](const std::string& name, const Defect& d) {
        rep.checks.push_back({name, true, "", d.dbl(), d.pass()});
    };
    auto skip = [&rep](const std::string& name, const std::string& why) {
        rep.checks.push_back({name, false, why, 0, true});
    };

    {
        Defect d;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                for (int k = 0; k < n; ++k)
                    for (int l = 0; l < n; ++l) {
                        d.update(Rn.lowered(G, i, j, k, l) + Rn.lowered(G, j, i, k, l));
                        d.update(Rn.lowered(G, i, j, k, l) + Rn.lowered(G, i, j, l, k));
                    }
        add("R^nabla antisymmetric in first and last pairs", d);
    }
    const std::string hyp = "requires nabla T = 0 and sigma_T = 0";
    if (parallel_T && sigma_zero) {
        {
            Defect d;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            Scalar rhs = Rg.lowered(G, i, j, k, l) +
                                         Scalar(1, 4) * G.ip(T.vv_form.value(i, j),
                                                             T.vv_form.value(k, l));
                            d.update(Rn.lowered(G, i, j, k, l) - rhs);
                        }
            add("R^nabla = R^g + (1/4) g(T(X,Y),T(Z,V))", d);
        }
        {
            Defect d;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l)
                            d.update(Rn.lowered(G, i, j, k, l) + Rn.lowered(G, j, k, i, l) +
                                     Rn.lowered(G, k, i, j, l));
            add("first Bianchi (classical form)", d);
        }
        {
            Defect d;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l)
                            d.update(Rn.lowered(G, i, j, k, l) - Rn.lowered(G, k, l, i, j));
            add("pair symmetry R(X,Y,Z,V) = R(Z,V,X,Y)", d);
        }
    } else {
        skip("R^nabla = R^g + (1/4) g(T(X,Y),T(Z,V))", hyp);
        skip("first Bianchi (classical form)", hyp);
        skip("pair symmetry R(X,Y,Z,V) = R(Z,V,X,Y)", hyp);
    }
    if (parallel_T) {
        Matrix S = s_tensor(M, T);
        RicciData rn = ricci(M, conn), rg = ricci(M, lc);
        Defect d;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                d.update(rn.ric.at(a, b) - (rg.ric.at(a, b) - Scalar(1, 4) * S.at(a, b)));
        add("Ric^nabla = Ric^g - S/4", d);

        Defect dt;
        KForm dT = ce_d(M.L(), T.three_form);
        dt.update((dT - sigma.scaled(Scalar(2))).max_abs());
        add("dT = 2 sigma_T", dt);
    } else {
        skip("Ric^nabla = Ric^g - S/4", "requires nabla T = 0");
        skip("dT = 2 sigma_T", "requires nabla T = 0");
    }
    {
        RicciData rn = ricci(M, conn), rg = ricci(M, lc);
        Defect d;
        d.update(rn.scal - (rg.scal - Scalar(3, 2) * form_norm_sq(G, T.three_form)));
        add("Scal^nabla = Scal^g - (3/2) ||T||^2", d);
    }
    return rep;
}

PropertyReport s_manifold_ricci_identity(const MetricFManifold& M) {
    ClassificationReport c = classify(M);
    if (!c.is_S) throw NotSManifold(M.name() + " is not an S-manifold");
    PropertyReport rep;
    RicciData rg = ricci(M, levi_civita(M));
    Defect d;
    for (int a = 0; a < M.dim(); ++a)
        for (int i = 0; i < M.s(); ++i) {
            Scalar lhs;
            for (int b = 0; b < M.dim(); ++b) lhs += rg.ric.at(a, b) * M.fs().xi[i][b];
            Scalar rhs;
            for (int j = 0; j < M.s(); ++j) rhs += M.eta_val(j, M.basis(a));
            rhs *= Scalar(2 * M.n());
            d.update(lhs - rhs);
        }
    rep.checks.push_back({"Ric^g(X, xi_i) = 2n sum_j eta_j(X)", true, "", d.dbl(), d.pass()});
    return rep;
}

bool nabla_einstein(const MetricFManifold& M, const RicciData& ric) {
    int n = M.dim();
    Scalar lambda = ric.scal / Scalar(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (!approx_equal(ric.ric.at(a, b), lambda * M.G().g().at(a, b))) return false;
    return true;
}

}  // namespace fstruct
