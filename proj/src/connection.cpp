#include "fstruct/connection.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

SVec Connection::nabla_basis(int i, const SVec& Y) const {
    SVec r(dim());
    for (int j = 0; j < dim(); ++j) {
        if (Y[j].is_raw_zero()) continue;
        for (int k = 0; k < dim(); ++k) r[k] += Y[j] * gamma_.at(i, j, k);
    }
    return r;
}

SVec Connection::nabla(const SVec& X, const SVec& Y) const {
    SVec r(dim());
    for (int i = 0; i < dim(); ++i) {
        if (X[i].is_raw_zero()) continue;
        r = svec_add(r, svec_scale(X[i], nabla_basis(i, Y)));
    }
    return r;
}

VvForm Connection::torsion(const LieAlgebra& L) const {
    int n = dim();
    VvForm t(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SVec v(n);
            for (int k = 0; k < n; ++k)
                v[k] = gamma_.at(i, j, k) - gamma_.at(j, i, k) - L.c(i, j, k);
            t.set_pair(i, j, v);
        }
    return t;
}

Connection levi_civita(const MetricFManifold& M) {
    int n = M.dim();
    const Gram& G = M.G();
    Connection conn(n, ConnectionKind::levi_civita);
    Scalar half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            SVec low(n);
            for (int k = 0; k < n; ++k) {
                Scalar v = G.ip(M.L().bracket_basis(i, j), M.basis(k)) -
                           G.ip(M.L().bracket_basis(i, k), M.basis(j)) -
                           G.ip(M.L().bracket_basis(j, k), M.basis(i));
                low[k] = half * v;
            }
            SVec up = G.ginv().apply(low);
            for (int k = 0; k < n; ++k) conn.gamma(i, j, k) = up[k];
        }
    // Verified outputs: metric and torsion-free.
    Defect tf;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                tf.update(conn.gamma(i, j, k) - conn.gamma(j, i, k) - M.L().c(i, j, k));
    Defect mg;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar s;
                for (int m = 0; m < n; ++m)
                    s += conn.gamma(i, j, m) * G.g().at(m, k) +
                         conn.gamma(i, k, m) * G.g().at(j, m);
                mg.update(s);
            }
    if (!tf.value().is_raw_zero() && !approx_zero(tf.value()))
        throw InternalError("Koszul output has torsion");
    if (!mg.value().is_raw_zero() && !approx_zero(mg.value()))
        throw InternalError("Koszul output is not metric");
    return conn;
}

KForm d_phi_F(const MetricFManifold& M) {
    int n = M.dim();
    KForm dF = ce_d(M.L(), M.F());
    KForm out(n, 3);
    std::vector<SVec> phi_basis(n);
    for (int i = 0; i < n; ++i) phi_basis[i] = M.phi_apply(M.basis(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Scalar v = -dF.eval({phi_basis[i], phi_basis[j], phi_basis[k]});
                if (!v.is_raw_zero()) out.set({i, j, k}, v);
            }
    return out;
}

namespace {

KForm eta_form(const MetricFManifold& M, int i) {
    KForm f(M.dim(), 1);
    for (int k = 0; k < M.dim(); ++k)
        if (!M.fs().eta[i][k].is_raw_zero()) f.set({k}, M.fs().eta[i][k]);
    return f;
}

}  // namespace

TorsionData characteristic_torsion(const MetricFManifold& M) {
    bool commute_failed = !approx_zero(commute_defect(M));
    bool killing_failed = false;
    for (int i = 1; i <= M.s(); ++i)
        if (!is_killing(M, i)) {
            killing_failed = true;
            break;
        }
    VvForm N1 = nijenhuis_n1(M);
    bool skewness_failed = !approx_zero(N1.total_skewness_defect(M.G()));
    if (commute_failed || killing_failed || skewness_failed)
        throw ObstructionError(commute_failed, killing_failed, skewness_failed);

    int n = M.dim();
    KForm T(n, 3);
    for (int i = 0; i < M.s(); ++i) T = T + eta_form(M, i).wedge(M.deta(i));
    T = T + d_phi_F(M);
    KForm N3 = N1.lowered_form(M.G());
    T = T + N3;
    for (int i = 0; i < M.s(); ++i)
        T = T - eta_form(M, i).wedge(N3.interior(M.fs().xi[i]));

    return TorsionData{T, raise_three_form(M.G(), T)};
}

TorsionData s_manifold_torsion(const MetricFManifold& M) {
    ClassificationReport c = classify(M);
    if (!c.is_S) throw NotSManifold(M.name() + " is not an S-manifold");
    int n = M.dim();
    KForm T(n, 3);
    for (int i = 0; i < M.s(); ++i) T = T + eta_form(M, i).wedge(M.deta(i));
    TorsionData full = characteristic_torsion(M);
    if (!T.approx_equal_to(full.three_form))
        throw InternalError("S-manifold torsion disagrees with the characteristic formula");
    return TorsionData{T, raise_three_form(M.G(), T)};
}

Connection with_torsion(const MetricFManifold& M, const Connection& conn_g,
                        const TorsionData& T) {
    int n = M.dim();
    Connection conn(n, ConnectionKind::characteristic);
    Scalar half(1, 2);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                conn.gamma(i, j, k) = conn_g.gamma(i, j, k) + half * T.vv_form.tensor().at(i, j, k);
    return conn;
}

Connection characteristic_connection(const MetricFManifold& M) {
    return with_torsion(M, levi_civita(M), characteristic_torsion(M));
}

std::vector<SVec> covariant_derivative(const Connection& c, const SVec& X) {
    std::vector<SVec> out;
    for (int i = 0; i < c.dim(); ++i) out.push_back(c.nabla_basis(i, X));
    return out;
}

std::vector<SVec> covariant_derivative_covec(const Connection& c, const SVec& w) {
    int n = c.dim();
    std::vector<SVec> out;
    for (int i = 0; i < n; ++i) {
        SVec r(n);
        for (int j = 0; j < n; ++j) {
            Scalar s;
            for (int k = 0; k < n; ++k) s -= c.gamma(i, j, k) * w[k];
            r[j] = s;
        }
        out.push_back(r);
    }
    return out;
}

std::vector<Matrix> covariant_derivative(const Connection& c, const Matrix& A) {
    int n = c.dim();
    std::vector<Matrix> out;
    for (int i = 0; i < n; ++i) {
        Matrix d(n, n);
        for (int j = 0; j < n; ++j) {
            // (nabla_i A) e_j = nabla_i (A e_j) - A (nabla_i e_j)
            SVec col(n);
            for (int k = 0; k < n; ++k) col[k] = A.at(k, j);
            SVec t1 = c.nabla_basis(i, col);
            SVec ge(n);
            for (int k = 0; k < n; ++k) ge[k] = c.gamma(i, j, k);
            SVec t2 = A.apply(ge);
            for (int k = 0; k < n; ++k) d.at(k, j) = t1[k] - t2[k];
        }
        out.push_back(d);
    }
    return out;
}

std::vector<KForm> covariant_derivative(const Connection& c, const KForm& w) {
    int n = c.dim();
    int k = w.degree();
    std::vector<KForm> out;
    for (int i = 0; i < n; ++i) {
        KForm d(n, k);
        // (nabla_i w)(e_{j1..jk}) = -sum_a sum_m Gamma[i][j_a][m] w(.., e_m, ..)
        std::vector<int> J(k);
        for (int t = 0; t < k; ++t) J[t] = t;
        bool more = k <= n;
        while (more) {
            Scalar val;
            for (int a = 0; a < k; ++a)
                for (int m = 0; m < n; ++m) {
                    const Scalar& gam = c.gamma(i, J[a], m);
                    if (gam.is_raw_zero()) continue;
                    std::vector<int> idx = J;
                    idx[a] = m;
                    val -= gam * w.coeff(idx);
                }
            if (!val.is_raw_zero()) d.set(J, val);
            // advance strictly increasing tuple
            int t;
            for (t = k - 1; t >= 0; --t)
                if (J[t] < n - (k - t)) break;
            if (t < 0) break;
            ++J[t];
            for (int u = t + 1; u < k; ++u) J[u] = J[u - 1] + 1;
        }
        out.push_back(d);
    }
    return out;
}

std::vector<Tensor3> covariant_derivative(const Connection& c, const Tensor3& t) {
    int n = c.dim();
    std::vector<Tensor3> out;
    for (int i = 0; i < n; ++i) {
        Tensor3 d(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                // nabla_i (t(e_a, e_b)) - t(nabla_i e_a, e_b) - t(e_a, nabla_i e_b)
                SVec v = c.nabla_basis(i, t.value(a, b));
                for (int m = 0; m < n; ++m) {
                    if (!c.gamma(i, a, m).is_raw_zero())
                        v = svec_sub(v, svec_scale(c.gamma(i, a, m), t.value(m, b)));
                    if (!c.gamma(i, b, m).is_raw_zero())
                        v = svec_sub(v, svec_scale(c.gamma(i, b, m), t.value(a, m)));
                }
                for (int k = 0; k < n; ++k) d.at(a, b, k) = v[k];
            }
        out.push_back(d);
    }
    return out;
}

AdaptednessReport verify_adapted(const MetricFManifold& M, const Connection& conn) {
    int n = M.dim();
    AdaptednessReport rep;
    Defect dg;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Scalar s;
                for (int m = 0; m < n; ++m)
                    s += conn.gamma(i, j, m) * M.G().g().at(m, k) +
                         conn.gamma(i, k, m) * M.G().g().at(j, m);
                dg.update(s);
            }
    rep.g_defect = dg.dbl();
    rep.g_parallel = dg.pass();

    Defect dphi;
    for (const auto& d : covariant_derivative(conn, M.fs().phi)) dphi.update(d.max_abs());
    rep.phi_defect = dphi.dbl();
    rep.phi_parallel = dphi.pass();

    Defect dxi, deta;
    for (int i = 0; i < M.s(); ++i) {
        for (const auto& v : covariant_derivative(conn, M.fs().xi[i])) dxi.update(svec_max_abs(v));
        for (const auto& v : covariant_derivative_covec(conn, M.fs().eta[i]))
            deta.update(svec_max_abs(v));
    }
    rep.xi_defect = dxi.dbl();
    rep.xi_parallel = dxi.pass();
    rep.eta_defect = deta.dbl();
    rep.eta_parallel = deta.pass();
    return rep;
}

PropertyReport torsion_characterization_suite(const MetricFManifold& M,
                                              const Connection& /*conn*/,
                                              const TorsionData& T) {
    PropertyReport rep;
    int n = M.dim();
    Connection lc = levi_civita(M);
    const KForm& T3 = T.three_form;
    KForm F = M.F();
    KForm dF = ce_d(M.L(), F);
    VvForm N1 = nijenhuis_n1(M);
    std::vector<KForm> N2 = n2_forms(M);
    std::vector<SVec> phi_basis(n);
    for (int i = 0; i < n; ++i) phi_basis[i] = M.phi_apply(M.basis(i));

    auto add = [&rep](const std::string& name, const Defect& d) {
        rep.checks.push_back({name, true, "", d.dbl(), d.pass()});
    };

    {
        Defect d;
        for (int i = 0; i < M.s(); ++i)
            d.update((M.deta(i) - T3.interior(M.fs().xi[i])).max_abs());
        add("deta_i = xi_i -| T", d);
    }
    {
        Defect d;
        for (int i = 0; i < M.s(); ++i) {
            auto grad = covariant_derivative_covec(lc, M.fs().eta[i]);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    d.update(M.deta(i).coeff({a, b}) - Scalar(2) * grad[a][b]);
        }
        add("deta_i = 2 nabla^g eta_i", d);
    }
    {
        Defect d;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    SVec ea = M.basis(a), eb = M.basis(b), ec = M.basis(c);
                    Scalar tminus = T3.eval({ea, phi_basis[b], phi_basis[c]}) +
                                    T3.eval({phi_basis[a], eb, phi_basis[c]}) +
                                    T3.eval({phi_basis[a], phi_basis[b], ec}) -
                                    T3.eval({ea, eb, ec});
                    d.update(N1.lowered(M.G(), a, b, c) + tminus);
                }
        add("N^(1) = -T^-", d);
    }
    {
        Defect d;
        auto gradF = covariant_derivative(lc, F);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    Scalar lhs = Scalar(2) * gradF[a].eval({M.basis(b), M.basis(c)});
                    Scalar rhs = T3.eval({M.basis(a), M.basis(b), phi_basis[c]}) +
                                 T3.eval({M.basis(a), phi_basis[b], M.basis(c)});
                    d.update(lhs - rhs);
                }
        add("2 (nabla^g F) = T(X,Y,phi Z) + T(X,phi Y,Z)", d);
    }
    {
        Defect d;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    Scalar rhs = T3.eval({M.basis(a), M.basis(b), phi_basis[c]}) +
                                 T3.eval({M.basis(b), M.basis(c), phi_basis[a]}) +
                                 T3.eval({M.basis(c), M.basis(a), phi_basis[b]});
                    d.update(dF.coeff({a, b, c}) - rhs);
                }
        add("dF = cyclic T(X,Y,phi Z)", d);
    }
    {
        Defect d;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    Scalar lhs = T3.eval({phi_basis[a], phi_basis[b], phi_basis[c]});
                    Scalar rhs = dF.eval({M.basis(a), M.basis(b), M.basis(c)});
                    // N^(1)(X,Y,phi Z)
                    Scalar nphi = M.G().ip(N1.value(a, b), phi_basis[c]);
                    rhs -= nphi;
                    for (int i = 0; i < M.s(); ++i)
                        rhs -= M.fs().eta[i][c] * N2[i].coeff({a, b});
                    d.update(lhs - rhs);
                }
        add("T(phiX,phiY,phiZ) = dF - N^(1)(X,Y,phiZ) - sum eta_i(Z) N2_i(X,Y)", d);
    }
    {
        bool commute = approx_zero(commute_defect(M));
        if (commute) {
            Defect d;
            std::vector<SVec> phi2(n);
            for (int i = 0; i < n; ++i) phi2[i] = M.phi_apply(phi_basis[i]);
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b)
                    for (int c = b + 1; c < n; ++c) {
                        Scalar lhs = T3.eval({phi2[a], phi2[b], phi2[c]});
                        Scalar rhs = -T3.coeff({a, b, c});
                        for (int i = 0; i < M.s(); ++i)
                            rhs += eta_form(M, i).wedge(M.deta(i)).coeff({a, b, c});
                        d.update(lhs - rhs);
                    }
            add("T(phi^2 X, phi^2 Y, phi^2 Z) = -T + sum eta_i ^ deta_i", d);
        } else {
            rep.checks.push_back({"T(phi^2 X, phi^2 Y, phi^2 Z) = -T + sum eta_i ^ deta_i",
                                  false, "xi do not commute", 0, true});
        }
    }
    return rep;
}

TanakaWebsterResult tanaka_webster(const MetricFManifold& M) {
    ClassificationReport c = classify(M);
    if (!c.is_S) throw NotSManifold(M.name() + " is not an S-manifold");
    int n = M.dim();
    TanakaWebsterResult tw;
    tw.a_tilde = Tensor3(n);
    tw.a = Tensor3(n);
    const KForm& F = M.F();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            SVec ea = M.basis(a), eb = M.basis(b);
            SVec pa = M.phi_apply(ea), pb = M.phi_apply(eb);
            Scalar Fab = F.coeff({a, b});
            SVec vt(n), vv(n);
            for (int j = 0; j < M.s(); ++j) {
                vt = svec_add(vt, svec_scale(Fab, M.fs().xi[j]));
                vv = svec_add(vv, svec_scale(Fab, M.fs().xi[j]));
                const Scalar& ea_j = M.fs().eta[j][a];
                const Scalar& eb_j = M.fs().eta[j][b];
                if (!ea_j.is_raw_zero()) {
                    vt = svec_add(vt, svec_scale(ea_j, pb));
                    vv = svec_sub(vv, svec_scale(ea_j, pb));
                }
                if (!eb_j.is_raw_zero()) {
                    vt = svec_add(vt, svec_scale(eb_j, pa));
                    vv = svec_add(vv, svec_scale(eb_j, pa));
                }
            }
            for (int k = 0; k < n; ++k) {
                tw.a_tilde.at(a, b, k) = vt[k];
                tw.a.at(a, b, k) = vv[k];
            }
        }
    Connection lc = levi_civita(M);
    tw.conn = Connection(n, ConnectionKind::tanaka_webster);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                tw.conn.gamma(i, j, k) = lc.gamma(i, j, k) + tw.a_tilde.at(i, j, k);

    tw.torsion = tw.conn.torsion(M.L());
    tw.torsion_skewness_defect = tw.torsion.total_skewness_defect(M.G()).dbl();

    // Cartan-type decomposition of the lowered torsion.
    const Gram& G = M.G();
    auto lower = [&](int a, int b, int k) { return tw.torsion.lowered(G, a, b, k); };
    // skew part: alternation
    std::vector<std::vector<std::vector<Scalar>>> skew(n,
        std::vector<std::vector<Scalar>>(n, std::vector<Scalar>(n)));
    Scalar third(1, 3);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k)
                skew[a][b][k] = third * (lower(a, b, k) + lower(b, k, a) + lower(k, a, b));
    // vectorial part from the (1,3)-trace of the rest
    SVec theta(n);
    for (int k = 0; k < n; ++k) {
        Scalar s;
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                s += G.ginv().at(p, q) * (lower(p, k, q) - skew[p][k][q]);
        theta[k] = s / Scalar(n - 1);
    }
    auto vect = [&](int a, int b, int k) {
        return G.g().at(a, k) * theta[b] - G.g().at(b, k) * theta[a];
    };
    auto norm_sq = [&](auto&& f) {
        double s = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int k = 0; k < n; ++k)
                    for (int d = 0; d < n; ++d)
                        for (int e = 0; e < n; ++e)
                            for (int l = 0; l < n; ++l)
                                s += f(a, b, k).dbl() * f(d, e, l).dbl() * G.ginv().at(a, d).dbl() *
                                     G.ginv().at(b, e).dbl() * G.ginv().at(k, l).dbl();
        return s;
    };
    tw.skew_part_norm_sq = norm_sq([&](int a, int b, int k) { return skew[a][b][k]; });
    tw.vectorial_part_norm_sq = norm_sq(vect);
    tw.remainder_norm_sq =
        norm_sq([&](int a, int b, int k) { return lower(a, b, k) - skew[a][b][k] - vect(a, b, k); });
    double tol = std::max(comparison_tolerance(), 1e-15);
    bool has_skew = tw.skew_part_norm_sq > tol;
    bool has_vect = tw.vectorial_part_norm_sq > tol;
    bool has_rem = tw.remainder_norm_sq > tol;
    if (has_rem)
        tw.torsion_type = "mixed (Cartan component present)";
    else if (has_skew && has_vect)
        tw.torsion_type = "skew+vectorial";
    else if (has_skew)
        tw.torsion_type = "totally skew";
    else if (has_vect)
        tw.torsion_type = "vectorial";
    else
        tw.torsion_type = "zero";
    return tw;
}

}  // namespace fstruct
