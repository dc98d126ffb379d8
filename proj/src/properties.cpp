#include "fstruct/properties.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

namespace {

struct Ctx {
    const MetricFManifold& M;
    int n;
    Connection lc;
    std::vector<Matrix> grad_phi;                // (nabla^g_{e_a} phi)
    std::vector<KForm> grad_F;                   // (nabla^g_{e_a} F)
    std::vector<std::vector<SVec>> grad_xi;      // [i][a] = nabla^g_{e_a} xi_i
    std::vector<std::vector<SVec>> grad_eta;     // [i][a] = nabla^g_{e_a} eta_i
    VvForm N1;
    std::vector<KForm> N2;
    KForm F, dF;
    std::vector<SVec> phi_basis;

    explicit Ctx(const MetricFManifold& m)
        : M(m), n(m.dim()), lc(levi_civita(m)), N1(nijenhuis_n1(m)), N2(n2_forms(m)),
          F(m.F()), dF(ce_d(m.L(), m.F())) {
        grad_phi = covariant_derivative(lc, M.fs().phi);
        grad_F = covariant_derivative(lc, F);
        for (int i = 0; i < M.s(); ++i) {
            grad_xi.push_back(covariant_derivative(lc, M.fs().xi[i]));
            grad_eta.push_back(covariant_derivative_covec(lc, M.fs().eta[i]));
        }
        for (int i = 0; i < n; ++i) phi_basis.push_back(M.phi_apply(M.basis(i)));
    }

    Scalar eta(int i, int a) const { return M.fs().eta[i][a]; }
    Scalar lie_eta(int i, int j, int b) const {
        // (L_{xi_i} eta_j)(e_b) = -eta_j([xi_i, e_b]) for left-invariant data
        return -M.eta_val(j, lie_bracket(M.L(), M.fs().xi[i], M.basis(b)));
    }
    Scalar N1_low(int a, int b, const SVec& Z) const {
        return M.G().ip(N1.value(a, b), Z);
    }
};

void add(PropertyReport& rep, const std::string& name, const Defect& d) {
    rep.checks.push_back({name, true, "", d.dbl(), d.pass()});
}

void skip(PropertyReport& rep, const std::string& name, const std::string& why) {
    rep.checks.push_back({name, false, why, 0, true});
}

void add_flag(PropertyReport& rep, const std::string& name, bool pass, double defect = 0) {
    rep.checks.push_back({name, true, "", defect, pass});
}

void lie_derivative_checks(PropertyReport& rep, const Ctx& c) {
    const auto& M = c.M;
    {
        Defect d;  // (nabla^g_X eta_i)Y = g(nabla^g_X xi_i, Y)
        for (int i = 0; i < M.s(); ++i)
            for (int a = 0; a < c.n; ++a)
                for (int b = 0; b < c.n; ++b)
                    d.update(c.grad_eta[i][a][b] - M.G().ip(c.grad_xi[i][a], M.basis(b)));
        add(rep, "(nabla^g_X eta_i)Y = g(nabla^g_X xi_i, Y)", d);
    }
    {
        Defect d;  // (L_{xi_i} eta_j)(X) = deta_j(xi_i, X)
        for (int i = 0; i < M.s(); ++i)
            for (int j = 0; j < M.s(); ++j)
                for (int b = 0; b < c.n; ++b)
                    d.update(c.lie_eta(i, j, b) -
                             M.deta(j).eval({M.fs().xi[i], M.basis(b)}));
        add(rep, "(L_xi_i eta_j)(X) = deta_j(xi_i, X)", d);
    }
    {
        Defect d;  // ... = g(X, nabla^g_{xi_i} xi_j) + g(nabla^g_X xi_i, xi_j)
        for (int i = 0; i < M.s(); ++i)
            for (int j = 0; j < M.s(); ++j) {
                SVec nxx = c.lc.nabla(M.fs().xi[i], M.fs().xi[j]);
                for (int b = 0; b < c.n; ++b)
                    d.update(c.lie_eta(i, j, b) - M.G().ip(M.basis(b), nxx) -
                             M.G().ip(c.grad_xi[i][b], M.fs().xi[j]));
            }
        add(rep, "(L_xi_i eta_j)(X) = g(X, nabla^g_xi_i xi_j) + g(nabla^g_X xi_i, xi_j)", d);
    }

    bool killing = true;
    for (int i = 1; i <= M.s(); ++i) killing = killing && is_killing(M, i);
    bool commute = approx_zero(commute_defect(M));
    const std::string hyp = "requires commuting Killing xi";
    if (killing && commute) {
        {
            Defect d;  // deta_j = 2 nabla^g eta_j
            for (int j = 0; j < M.s(); ++j)
                for (int a = 0; a < c.n; ++a)
                    for (int b = 0; b < c.n; ++b)
                        d.update(M.deta(j).coeff({a, b}) - Scalar(2) * c.grad_eta[j][a][b]);
            add(rep, "deta_j = 2 nabla^g eta_j", d);
        }
        {
            Defect d;  // L_{xi_i} eta_j = 0 and nabla^g_{xi_i} xi_j = 0
            for (int i = 0; i < M.s(); ++i)
                for (int j = 0; j < M.s(); ++j) {
                    for (int b = 0; b < c.n; ++b) d.update(c.lie_eta(i, j, b));
                    d.update(svec_max_abs(c.lc.nabla(M.fs().xi[i], M.fs().xi[j])));
                }
            add(rep, "L_xi_i eta_j = 0 and nabla^g_xi_i xi_j = 0", d);
        }
        {
            Defect d;  // xi_j -| deta_i = 0
            for (int i = 0; i < M.s(); ++i)
                for (int j = 0; j < M.s(); ++j)
                    d.update(M.deta(i).interior(M.fs().xi[j]).max_abs());
            add(rep, "xi_j -| deta_i = 0", d);
        }
        {
            Defect d;  // g(nabla^g_X xi_i, xi_j) = 0
            for (int i = 0; i < M.s(); ++i)
                for (int j = 0; j < M.s(); ++j)
                    for (int a = 0; a < c.n; ++a)
                        d.update(M.G().ip(c.grad_xi[i][a], M.fs().xi[j]));
            add(rep, "g(nabla^g_X xi_i, xi_j) = 0", d);
        }
    } else {
        skip(rep, "deta_j = 2 nabla^g eta_j", hyp);
        skip(rep, "L_xi_i eta_j = 0 and nabla^g_xi_i xi_j = 0", hyp);
        skip(rep, "xi_j -| deta_i = 0", hyp);
        skip(rep, "g(nabla^g_X xi_i, xi_j) = 0", hyp);
    }
}

void covariant_checks(PropertyReport& rep, const Ctx& c) {
    const auto& M = c.M;
    const auto& G = M.G();
    {
        Defect d;  // (nabla^g_X phi) phi Y = -nabla^g_X Y + sum eta_i(Y) nabla^g_X xi_i - phi(nabla^g_X phi Y)
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b) {
                SVec lhs = c.grad_phi[a].apply(c.phi_basis[b]);
                SVec rhs = svec_scale(Scalar(-1), c.lc.nabla_basis(a, M.basis(b)));
                for (int i = 0; i < M.s(); ++i)
                    rhs = svec_add(rhs, svec_scale(c.eta(i, b), c.grad_xi[i][a]));
                rhs = svec_sub(rhs, M.phi_apply(c.lc.nabla_basis(a, c.phi_basis[b])));
                d.update(svec_max_abs(svec_sub(lhs, rhs)));
            }
        add(rep, "(nabla^g_X phi)phi Y = -nabla^g_X Y + sum eta_i(Y) nabla^g_X xi_i - phi(nabla^g_X phi Y)", d);
    }
    {
        Defect d;  // (nabla^g_X F)(Y,Z) = g((nabla^g_X phi)Z, Y) = -g((nabla^g_X phi)Y, Z)
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int e = 0; e < c.n; ++e) {
                    Scalar nf = c.grad_F[a].eval({M.basis(b), M.basis(e)});
                    d.update(nf - G.ip(c.grad_phi[a].apply(M.basis(e)), M.basis(b)));
                    d.update(nf + G.ip(c.grad_phi[a].apply(M.basis(b)), M.basis(e)));
                }
        add(rep, "(nabla^g_X F)(Y,Z) = g((nabla^g_X phi)Z, Y) = -g((nabla^g_X phi)Y, Z)", d);
    }
    {
        Defect d;  // (nabla^g_X F)(xi_i, phi Y) = (nabla^g_X eta_i)Y + sum_j eta_j(Y) g(nabla^g_X xi_j, xi_i)
        for (int i = 0; i < M.s(); ++i)
            for (int a = 0; a < c.n; ++a)
                for (int b = 0; b < c.n; ++b) {
                    Scalar lhs = c.grad_F[a].eval({M.fs().xi[i], c.phi_basis[b]});
                    Scalar rhs = c.grad_eta[i][a][b];
                    for (int j = 0; j < M.s(); ++j)
                        rhs += c.eta(j, b) * G.ip(c.grad_xi[j][a], M.fs().xi[i]);
                    d.update(lhs - rhs);
                }
        add(rep, "(nabla^g_X F)(xi_i, phi Y) = (nabla^g_X eta_i)Y + sum_j eta_j(Y) g(nabla^g_X xi_j, xi_i)", d);
    }
    {
        Defect d;  // (nabla^g_X F)(Y,Z) + (nabla^g_X F)(phi Y, phi Z)
                   //   = sum eta_i(Z)(nabla^g_X eta_i)(phi Y) - sum eta_i(Y)(nabla^g_X eta_i)(phi Z)
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int e = 0; e < c.n; ++e) {
                    Scalar lhs = c.grad_F[a].eval({M.basis(b), M.basis(e)}) +
                                 c.grad_F[a].eval({c.phi_basis[b], c.phi_basis[e]});
                    Scalar rhs;
                    for (int i = 0; i < M.s(); ++i) {
                        Scalar ge_pb, ge_pe;
                        for (int k = 0; k < c.n; ++k) {
                            ge_pb += c.grad_eta[i][a][k] * c.phi_basis[b][k];
                            ge_pe += c.grad_eta[i][a][k] * c.phi_basis[e][k];
                        }
                        rhs += c.eta(i, e) * ge_pb - c.eta(i, b) * ge_pe;
                    }
                    d.update(lhs - rhs);
                }
        add(rep, "(nabla^g_X F)(Y,Z) + (nabla^g_X F)(phi Y, phi Z) = eta-corrections", d);
    }
    {
        Defect d;  // N^(1)(X,Y) expressed through nabla^g phi and nabla^g xi
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b) {
                SVec rhs(c.n);
                // (nabla^g_{phi X} phi)Y - (nabla^g_{phi Y} phi)X
                for (int m = 0; m < c.n; ++m) {
                    if (!c.phi_basis[a][m].is_raw_zero())
                        rhs = svec_add(rhs, svec_scale(c.phi_basis[a][m],
                                                       c.grad_phi[m].apply(M.basis(b))));
                    if (!c.phi_basis[b][m].is_raw_zero())
                        rhs = svec_sub(rhs, svec_scale(c.phi_basis[b][m],
                                                       c.grad_phi[m].apply(M.basis(a))));
                }
                rhs = svec_add(rhs, c.grad_phi[a].apply(c.phi_basis[b]));
                rhs = svec_sub(rhs, c.grad_phi[b].apply(c.phi_basis[a]));
                for (int j = 0; j < M.s(); ++j) {
                    rhs = svec_add(rhs, svec_scale(c.eta(j, a), c.grad_xi[j][b]));
                    rhs = svec_sub(rhs, svec_scale(c.eta(j, b), c.grad_xi[j][a]));
                }
                d.update(svec_max_abs(svec_sub(c.N1.value(a, b), rhs)));
            }
        add(rep, "N^(1)(X,Y) = (nabla^g_phiX phi)Y - (nabla^g_phiY phi)X + (nabla^g_X phi)phiY - (nabla^g_Y phi)phiX + xi-corrections", d);
    }
    {
        Defect d;  // N(X,Y,Z) = -N(phiX,phiY,Z) + sum eta_i(X)N(xi_i,Y,Z)
                   //            + sum eta_i(Y)N(X,xi_i,Z) + sum eta_i(X)eta_j(Y) g([xi_i,xi_j],Z)
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int e = 0; e < c.n; ++e) {
                    SVec Z = c.M.basis(e);
                    Scalar lhs = c.N1_low(a, b, Z);
                    Scalar rhs = -M.G().ip(c.N1.value(c.phi_basis[a], c.phi_basis[b]), Z);
                    for (int i = 0; i < M.s(); ++i) {
                        rhs += c.eta(i, a) * M.G().ip(c.N1.value(M.fs().xi[i], M.basis(b)), Z);
                        rhs += c.eta(i, b) * M.G().ip(c.N1.value(M.basis(a), M.fs().xi[i]), Z);
                    }
                    for (int i = 0; i < M.s(); ++i)
                        for (int j = 0; j < M.s(); ++j)
                            rhs += c.eta(i, a) * c.eta(j, b) *
                                   M.G().ip(lie_bracket(M.L(), M.fs().xi[i], M.fs().xi[j]), Z);
                    d.update(lhs - rhs);
                }
        add(rep, "N(X,Y,Z) = -N(phiX,phiY,Z) + eta-corrections + bracket term", d);
    }
    {
        Defect d;  // 2 g((nabla^g_X phi)Y, Z) = dF(X,phiY,phiZ) - dF(X,Y,Z) + N(Y,Z,phiX) + eta-terms
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int e = 0; e < c.n; ++e) {
                    Scalar lhs = Scalar(2) * G.ip(c.grad_phi[a].apply(M.basis(b)), M.basis(e));
                    Scalar rhs = c.dF.eval({M.basis(a), c.phi_basis[b], c.phi_basis[e]}) -
                                 c.dF.eval({M.basis(a), M.basis(b), M.basis(e)}) +
                                 c.N1_low(b, e, c.phi_basis[a]);
                    for (int i = 0; i < M.s(); ++i)
                        rhs += c.eta(i, a) * c.N2[i].coeff({b, e}) +
                               c.eta(i, e) * M.deta(i).eval({c.phi_basis[b], M.basis(a)}) +
                               c.eta(i, b) * M.deta(i).eval({M.basis(a), c.phi_basis[e]});
                    d.update(lhs - rhs);
                }
        add(rep, "2 g((nabla^g_X phi)Y, Z) = dF(X,phiY,phiZ) - dF(X,Y,Z) + N(Y,Z,phiX) + eta-terms", d);
    }
    {
        Defect d;  // dF^-(X,Y,Z) = -N(X,Y,phiZ) - N(Y,Z,phiX) - N(Z,X,phiY)
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int e = 0; e < c.n; ++e) {
                    Scalar lhs = c.dF.eval({M.basis(a), c.phi_basis[b], c.phi_basis[e]}) +
                                 c.dF.eval({c.phi_basis[a], M.basis(b), c.phi_basis[e]}) +
                                 c.dF.eval({c.phi_basis[a], c.phi_basis[b], M.basis(e)}) -
                                 c.dF.eval({M.basis(a), M.basis(b), M.basis(e)});
                    Scalar rhs = -c.N1_low(a, b, c.phi_basis[e]) - c.N1_low(b, e, c.phi_basis[a]) -
                                 c.N1_low(e, a, c.phi_basis[b]);
                    d.update(lhs - rhs);
                }
        add(rep, "dF^- = -N(X,Y,phiZ) - N(Y,Z,phiX) - N(Z,X,phiY)", d);
    }

    // normality consequences
    bool normal = approx_zero(c.N1.max_abs());
    if (normal) {
        Defect d;
        for (int i = 0; i < M.s(); ++i) {
            for (int j = 0; j < M.s(); ++j)
                d.update(svec_max_abs(lie_bracket(M.L(), M.fs().xi[i], M.fs().xi[j])));
            for (int b = 0; b < c.n; ++b) d.update(c.lie_eta(i, i, b));
            // (L_{xi_i} phi)(X) = [xi_i, phi X] - phi[xi_i, X]
            for (int b = 0; b < c.n; ++b) {
                SVec v = lie_bracket(M.L(), M.fs().xi[i], c.phi_basis[b]);
                v = svec_sub(v, M.phi_apply(lie_bracket(M.L(), M.fs().xi[i], M.basis(b))));
                d.update(svec_max_abs(v));
            }
            d.update(c.N2[i].max_abs());
        }
        add(rep, "normal => [xi_i,xi_j] = 0, L_xi eta = 0 = L_xi phi, N^(2)_i = 0", d);
    } else {
        skip(rep, "normal => [xi_i,xi_j] = 0, L_xi eta = 0 = L_xi phi, N^(2)_i = 0",
             "structure is not normal");
    }

    // the chain of N^(1)/N^(2)/dF identities for commuting Killing xi with skew N
    bool killing = true;
    for (int i = 1; i <= M.s(); ++i) killing = killing && is_killing(M, i);
    bool commute = approx_zero(commute_defect(M));
    bool skewN = approx_zero(c.N1.total_skewness_defect(G));
    if (killing && commute && skewN) {
        Defect d;
        for (int a = 0; a < c.n; ++a)
            for (int i = 0; i < M.s(); ++i)
                for (int j = 0; j < M.s(); ++j)
                    d.update(M.G().ip(c.N1.value(M.basis(a), M.fs().xi[i]), M.fs().xi[j]));
        add(rep, "N(X, xi_i, xi_j) = 0", d);

        Defect ch;
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int i = 0; i < M.s(); ++i) {
                    Scalar n_phiX = M.G().ip(c.N1.value(c.phi_basis[a], M.basis(b)), M.fs().xi[i]);
                    Scalar n_phiY = M.G().ip(c.N1.value(M.basis(a), c.phi_basis[b]), M.fs().xi[i]);
                    Scalar n2 = c.N2[i].coeff({a, b});
                    Scalar df = c.dF.eval({M.basis(a), M.basis(b), M.fs().xi[i]});
                    Scalar df_phi = c.dF.eval({c.phi_basis[a], c.phi_basis[b], M.fs().xi[i]});
                    ch.update(n_phiX - n_phiY);
                    ch.update(n_phiX - n2);
                    ch.update(n2 - df);
                    ch.update(df + df_phi);
                }
        add(rep, "N(phiX,Y,xi_i) = N(X,phiY,xi_i) = N^(2)_i(X,Y) = dF(X,Y,xi_i) = -dF(phiX,phiY,xi_i)", ch);
    } else {
        const std::string hyp = "requires commuting Killing xi and totally skew N^(1)";
        skip(rep, "N(X, xi_i, xi_j) = 0", hyp);
        skip(rep, "N(phiX,Y,xi_i) = N(X,phiY,xi_i) = N^(2)_i(X,Y) = dF(X,Y,xi_i) = -dF(phiX,phiY,xi_i)", hyp);
    }
}

void connection_checks(PropertyReport& rep, const Ctx& c, const ClassificationReport& cls) {
    const auto& M = c.M;
    if (!cls.admits_characteristic_connection) {
        skip(rep, "characteristic connection adapted (nabla g = nabla phi = nabla xi = nabla eta = 0)",
             "structure admits no characteristic connection");
        return;
    }
    TorsionData T = characteristic_torsion(M);
    Connection conn = with_torsion(M, c.lc, T);
    {
        AdaptednessReport a = verify_adapted(M, conn);
        Defect d;
        d.update(Scalar::raw_double(a.g_defect));
        d.update(Scalar::raw_double(a.phi_defect));
        d.update(Scalar::raw_double(a.xi_defect));
        d.update(Scalar::raw_double(a.eta_defect));
        add_flag(rep, "characteristic connection adapted (nabla g = nabla phi = nabla xi = nabla eta = 0)",
                 a.all_parallel(), d.dbl());
    }
    {
        PropertyReport sub = torsion_characterization_suite(M, conn, T);
        for (auto& ck : sub.checks) rep.checks.push_back(ck);
    }
    {
        // appendix identity with the adapted connection's torsion
        Defect d;
        auto nphi = covariant_derivative(conn, M.fs().phi);
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b) {
                SVec rhs(c.n);
                for (int m = 0; m < c.n; ++m) {
                    if (!c.phi_basis[a][m].is_raw_zero())
                        rhs = svec_add(rhs, svec_scale(c.phi_basis[a][m], nphi[m].apply(M.basis(b))));
                    if (!c.phi_basis[b][m].is_raw_zero())
                        rhs = svec_sub(rhs, svec_scale(c.phi_basis[b][m], nphi[m].apply(M.basis(a))));
                }
                SVec inner = svec_sub(nphi[b].apply(M.basis(a)), nphi[a].apply(M.basis(b)));
                rhs = svec_add(rhs, M.phi_apply(inner));
                rhs = svec_add(rhs, T.vv_form.value(a, b));
                rhs = svec_sub(rhs, T.vv_form.value(c.phi_basis[a], c.phi_basis[b]));
                rhs = svec_add(rhs, M.phi_apply(svec_add(T.vv_form.value(c.phi_basis[a], M.basis(b)),
                                                         T.vv_form.value(M.basis(a), c.phi_basis[b]))));
                d.update(svec_max_abs(svec_sub(c.N1.value(a, b), rhs)));
            }
        add(rep, "N^(1)(X,Y) = (nabla_phiX phi)Y - (nabla_phiY phi)X + phi((nabla_Y phi)X - (nabla_X phi)Y) + T-terms", d);
    }
    if (cls.normal) {
        // torsion reduces to sum eta_i ^ deta_i + d^phi F
        KForm expect(c.n, 3);
        for (int i = 0; i < M.s(); ++i) {
            KForm ei(c.n, 1);
            for (int k = 0; k < c.n; ++k)
                if (!M.fs().eta[i][k].is_raw_zero()) ei.set({k}, M.fs().eta[i][k]);
            expect = expect + ei.wedge(M.deta(i));
        }
        expect = expect + d_phi_F(M);
        Defect d;
        d.update((T.three_form - expect).max_abs());
        add(rep, "normal => T = sum eta_i ^ deta_i + d^phi F", d);
    } else {
        skip(rep, "normal => T = sum eta_i ^ deta_i + d^phi F", "structure is not normal");
    }
    if (cls.is_K) {
        KForm expect(c.n, 3);
        for (int i = 0; i < M.s(); ++i) {
            KForm ei(c.n, 1);
            for (int k = 0; k < c.n; ++k)
                if (!M.fs().eta[i][k].is_raw_zero()) ei.set({k}, M.fs().eta[i][k]);
            expect = expect + ei.wedge(M.deta(i));
        }
        Defect d;
        d.update((T.three_form - expect).max_abs());
        add(rep, "K-manifold => T = sum eta_j ^ deta_j", d);
    } else {
        skip(rep, "K-manifold => T = sum eta_j ^ deta_j", "structure is not a K-manifold");
    }
}

void s_manifold_checks(PropertyReport& rep, const Ctx& c, const ClassificationReport& cls) {
    const auto& M = c.M;
    const std::string hyp = "structure is not an S-manifold";
    if (!cls.is_S) {
        skip(rep, "S: T(X,Y) = 2 sum_j {F(X,Y)xi_j - eta_j(X)phi Y + eta_j(Y)phi X}", hyp);
        skip(rep, "S: T(X,xi_i) = 2 phi X (horizontal X), T(xi_i,xi_j) = 0, T|_D = 0", hyp);
        skip(rep, "S: nabla^g_X xi_i = -phi X", hyp);
        skip(rep, "S: nabla T = 0", hyp);
        skip(rep, "S: Ker(T) in D-perp with rank s-1, no nonzero horizontal kernel vector", hyp);
        skip(rep, "S: Ric^g(X, xi_i) = 2n sum_j eta_j(X)", hyp);
        skip(rep, "S: Tanaka-Webster preserves the structure, nabla~ != nabla, torsion not skew, A = T/2", hyp);
        return;
    }
    TorsionData T = s_manifold_torsion(M);  // cross-checks against the general formula
    Connection conn = with_torsion(M, c.lc, T);
    {
        Defect d;
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b) {
                SVec rhs(c.n);
                Scalar Fab = c.F.coeff({a, b});
                for (int j = 0; j < M.s(); ++j) {
                    rhs = svec_add(rhs, svec_scale(Fab, M.fs().xi[j]));
                    rhs = svec_sub(rhs, svec_scale(c.eta(j, a), c.phi_basis[b]));
                    rhs = svec_add(rhs, svec_scale(c.eta(j, b), c.phi_basis[a]));
                }
                d.update(svec_max_abs(svec_sub(T.vv_form.value(a, b), svec_scale(Scalar(2), rhs))));
            }
        add(rep, "S: T(X,Y) = 2 sum_j {F(X,Y)xi_j - eta_j(X)phi Y + eta_j(Y)phi X}", d);
    }
    {
        Defect d;
        for (int a = 0; a < c.n; ++a) {
            // horizontal projection X_D = X - sum eta_j(X) xi_j
            SVec xd = M.basis(a);
            for (int j = 0; j < M.s(); ++j)
                xd = svec_sub(xd, svec_scale(c.eta(j, a), M.fs().xi[j]));
            for (int i = 0; i < M.s(); ++i)
                d.update(svec_max_abs(svec_sub(T.vv_form.value(xd, M.fs().xi[i]),
                                               svec_scale(Scalar(2), M.phi_apply(xd)))));
        }
        for (int i = 0; i < M.s(); ++i)
            for (int j = 0; j < M.s(); ++j)
                d.update(svec_max_abs(T.vv_form.value(M.fs().xi[i], M.fs().xi[j])));
        // T(X,Y,Z) = 0 on horizontal triples
        std::vector<SVec> hor;
        for (int a = 0; a < c.n; ++a) {
            SVec xd = M.basis(a);
            for (int j = 0; j < M.s(); ++j)
                xd = svec_sub(xd, svec_scale(c.eta(j, a), M.fs().xi[j]));
            hor.push_back(xd);
        }
        for (int a = 0; a < c.n; ++a)
            for (int b = 0; b < c.n; ++b)
                for (int e = 0; e < c.n; ++e)
                    d.update(T.three_form.eval({hor[a], hor[b], hor[e]}));
        add(rep, "S: T(X,xi_i) = 2 phi X (horizontal X), T(xi_i,xi_j) = 0, T|_D = 0", d);
    }
    {
        Defect d;
        for (int i = 0; i < M.s(); ++i)
            for (int a = 0; a < c.n; ++a)
                d.update(svec_max_abs(svec_add(c.grad_xi[i][a], c.phi_basis[a])));
        add(rep, "S: nabla^g_X xi_i = -phi X", d);
    }
    {
        Defect d;
        for (const auto& t : covariant_derivative(conn, T.vv_form.tensor())) d.update(t.max_abs());
        add(rep, "S: nabla T = 0", d);
    }
    {
        KernelData ker = torsion_kernel(M, T);
        bool ok = ker.rank == M.s() - 1;
        double defect = std::abs(ker.rank - (M.s() - 1));
        // every kernel vector is vertical: phi(U) = 0 and eta-span membership
        Defect vert;
        for (const auto& u : ker.basis) vert.update(svec_max_abs(M.phi_apply(u)));
        ok = ok && vert.pass();
        add_flag(rep, "S: Ker(T) in D-perp with rank s-1, no nonzero horizontal kernel vector", ok,
                 std::max(defect, vert.dbl()));
    }
    {
        PropertyReport sub = s_manifold_ricci_identity(M);
        for (auto& ck : sub.checks)
            rep.checks.push_back({"S: " + ck.name, ck.applicable, ck.reason, ck.defect, ck.pass});
    }
    {
        TanakaWebsterResult tw = tanaka_webster(M);
        AdaptednessReport a = verify_adapted(M, tw.conn);
        bool distinct = !tw.conn.approx_equal_to(conn);
        bool not_skew = tw.torsion_skewness_defect > comparison_tolerance();
        Defect ahalf;  // A = T/2 as (1,2)-tensors
        for (int i = 0; i < c.n; ++i)
            for (int j = 0; j < c.n; ++j)
                for (int k = 0; k < c.n; ++k)
                    ahalf.update(tw.a.at(i, j, k) -
                                 Scalar(1, 2) * T.vv_form.tensor().at(i, j, k));
        bool ok = a.all_parallel() && distinct && not_skew && ahalf.pass();
        double defect = std::max({a.g_defect, a.phi_defect, a.xi_defect, a.eta_defect, ahalf.dbl()});
        add_flag(rep, "S: Tanaka-Webster preserves the structure, nabla~ != nabla, torsion not skew, A = T/2",
                 ok, defect);
    }
}

void curvature_holonomy_checks(PropertyReport& rep, const Ctx& c, const ClassificationReport& cls) {
    const auto& M = c.M;
    if (!cls.admits_characteristic_connection) {
        skip(rep, "curvature identity suite", "structure admits no characteristic connection");
        return;
    }
    PropertyReport sub = curvature_identity_suite(M);
    for (auto& ck : sub.checks) rep.checks.push_back(ck);

    Connection conn = characteristic_connection(M);
    HolonomyResult hol = infinitesimal_holonomy(M, conn);
    {
        Defect d;
        for (const auto& A : hol.generators) {
            // g-skew
            for (int a = 0; a < c.n; ++a)
                for (int b = 0; b < c.n; ++b)
                    d.update(M.G().ip(A.apply(M.basis(a)), M.basis(b)) +
                             M.G().ip(M.basis(a), A.apply(M.basis(b))));
            // annihilates the parallel tensors
            for (int i = 0; i < M.s(); ++i) d.update(svec_max_abs(A.apply(M.fs().xi[i])));
            d.update(commutator(A, M.fs().phi).max_abs());
        }
        add(rep, "holonomy generators are g-skew, kill xi_i and commute with phi", d);
    }
    {
        AmbroseSingerResult as = ambrose_singer_check(M, conn);
        bool consistent = !(as.nabla_T_zero && as.nabla_R_zero) || hol.stabilized_at == 0;
        add_flag(rep, "nabla R = 0 => holonomy stabilizes at iteration 0", consistent,
                 double(hol.stabilized_at));
    }
}

}  // namespace

PropertyReport full_property_suite(const MetricFManifold& M) {
    PropertyReport rep;
    ValidationReport val = validate_f_structure(M);
    for (const auto& ck : val.checks)
        rep.checks.push_back({"validate: " + ck.name, true, "", ck.defect, ck.pass});

    ClassificationReport cls = classify(M);
    if (M.s() >= 1)
        add_flag(rep, "S-manifold => admits characteristic connection",
                 !cls.is_S || cls.admits_characteristic_connection);

    if (!M.f_antisymmetric()) return rep;  // identities below need the 2-form

    Ctx c(M);
    lie_derivative_checks(rep, c);
    covariant_checks(rep, c);
    connection_checks(rep, c, cls);
    s_manifold_checks(rep, c, cls);
    curvature_holonomy_checks(rep, c, cls);
    return rep;
}

}  // namespace fstruct
