#include "fstruct/fstructure.hpp"

#include "fstruct/errors.hpp"

namespace fstruct {

VvForm nijenhuis_phi(const MetricFManifold& M) {
    int nt = M.dim();
    const Matrix& phi = M.fs().phi;
    VvForm N(nt);
    for (int i = 0; i < nt; ++i) {
        SVec ei = M.basis(i);
        SVec pei = phi.apply(ei);
        for (int j = i + 1; j < nt; ++j) {
            SVec ej = M.basis(j);
            SVec pej = phi.apply(ej);
            SVec v = lie_bracket(M.L(), pei, pej);
            v = svec_add(v, phi.apply(phi.apply(M.L().bracket_basis(i, j))));
            v = svec_sub(v, phi.apply(lie_bracket(M.L(), ei, pej)));
            v = svec_sub(v, phi.apply(lie_bracket(M.L(), pei, ej)));
            N.set_pair(i, j, v);
        }
    }
    return N;
}

VvForm nijenhuis_n1(const MetricFManifold& M) {
    VvForm N = nijenhuis_phi(M);
    int nt = M.dim();
    for (int i = 0; i < nt; ++i)
        for (int j = i + 1; j < nt; ++j) {
            SVec v = N.value(i, j);
            for (int k = 0; k < M.s(); ++k) {
                Scalar de = M.deta(k).coeff({i, j});
                if (de.is_raw_zero()) continue;
                v = svec_add(v, svec_scale(de, M.fs().xi[k]));
            }
            N.set_pair(i, j, v);
        }
    return N;
}

std::vector<KForm> n2_forms(const MetricFManifold& M) {
    int nt = M.dim();
    std::vector<KForm> out;
    for (int i = 0; i < M.s(); ++i) {
        KForm f(nt, 2);
        for (int a = 0; a < nt; ++a) {
            SVec pa = M.phi_apply(M.basis(a));
            for (int b = a + 1; b < nt; ++b) {
                SVec pb = M.phi_apply(M.basis(b));
                Scalar v = M.deta(i).eval({pa, M.basis(b)}) + M.deta(i).eval({M.basis(a), pb});
                if (!v.is_raw_zero()) f.set({a, b}, v);
            }
        }
        out.push_back(f);
    }
    return out;
}

Scalar killing_defect(const MetricFManifold& M, int i) {
    if (i < 1 || i > M.s()) throw std::out_of_range("killing index out of range");
    const SVec& xi = M.fs().xi[i - 1];
    Defect d;
    for (int a = 0; a < M.dim(); ++a) {
        SVec ad_a = lie_bracket(M.L(), xi, M.basis(a));
        for (int b = a; b < M.dim(); ++b) {
            SVec ad_b = lie_bracket(M.L(), xi, M.basis(b));
            d.update(M.G().ip(ad_a, M.basis(b)) + M.G().ip(M.basis(a), ad_b));
        }
    }
    return d.value();
}

bool is_killing(const MetricFManifold& M, int i) { return approx_zero(killing_defect(M, i)); }

Scalar commute_defect(const MetricFManifold& M) {
    Defect d;
    for (int i = 0; i < M.s(); ++i)
        for (int j = i + 1; j < M.s(); ++j)
            d.update(svec_max_abs(lie_bracket(M.L(), M.fs().xi[i], M.fs().xi[j])));
    return d.value();
}

Scalar skewness_defect_n1(const MetricFManifold& M) {
    return nijenhuis_n1(M).total_skewness_defect(M.G());
}

namespace {

std::optional<std::vector<Scalar>> solve_alpha(const MetricFManifold& M) {
    if (!M.f_antisymmetric()) return std::nullopt;
    const KForm& F = M.F();
    if (F.is_zero()) return std::nullopt;
    std::vector<Scalar> alpha;
    for (int j = 0; j < M.s(); ++j) {
        const KForm& de = M.deta(j);
        Scalar a;
        if (arithmetic_mode() == Mode::exact) {
            // exact proportionality on every component pair
            bool found = false;
            for (const auto& [I, v] : F.components()) {
                if (v.is_raw_zero()) continue;
                a = de.coeff(I) / v;
                found = true;
                break;
            }
            if (!found) return std::nullopt;
        } else {
            // least squares over components
            double num = 0, den = 0;
            for (const auto& [I, v] : F.components()) {
                num += de.coeff(I).dbl() * v.dbl();
                den += v.dbl() * v.dbl();
            }
            if (den == 0) return std::nullopt;
            a = Scalar::raw_double(num / den);
        }
        if (!de.approx_equal_to(F.scaled(a))) return std::nullopt;
        alpha.push_back(a);
    }
    return alpha;
}

}  // namespace

ClassificationReport classify(const MetricFManifold& M) {
    ClassificationReport c;
    ValidationReport val = validate_f_structure(M);
    c.valid_metric_f = val.all_pass();

    c.xi_commute = approx_zero(commute_defect(M));
    c.xi_all_killing = true;
    for (int i = 1; i <= M.s(); ++i)
        if (!is_killing(M, i)) {
            c.xi_all_killing = false;
            break;
        }

    VvForm N1 = nijenhuis_n1(M);
    c.normal = approx_zero(N1.max_abs());

    c.all_deta_zero = true;
    for (int i = 0; i < M.s(); ++i)
        if (!approx_zero(M.deta(i).max_abs())) {
            c.all_deta_zero = false;
            break;
        }

    if (M.f_antisymmetric()) {
        const KForm& F = M.F();
        c.dF_zero = approx_zero(ce_d(M.L(), F).max_abs());
        if (M.s() >= 1) {
            c.contact_metric = true;
            KForm twoF = F.scaled(Scalar(2));
            for (int i = 0; i < M.s(); ++i)
                if (!M.deta(i).approx_equal_to(twoF)) {
                    c.contact_metric = false;
                    break;
                }
        }
        c.alpha = solve_alpha(M);
    } else {
        c.notes.push_back("fundamental form g(.,phi .) is not antisymmetric; "
                          "F-dependent flags are unreliable");
    }

    c.is_K = c.normal && c.dF_zero;
    c.is_S = c.normal && c.contact_metric;
    c.is_C = c.is_K && c.all_deta_zero && M.s() >= 1;
    c.is_almost_S = M.s() >= 1 ? c.contact_metric : c.dF_zero;
    c.admits_characteristic_connection =
        c.xi_commute && c.xi_all_killing && approx_zero(N1.total_skewness_defect(M.G()));

    if (c.valid_metric_f) {
        // Class-table implications that are not true by construction.
        if (c.is_S && !c.is_K)
            throw InternalError("classification inconsistency: S-manifold with dF != 0");
        if (c.normal && !c.xi_commute)
            throw InternalError("classification inconsistency: normal structure with non-commuting xi");
    }
    return c;
}

std::string classification_summary(const MetricFManifold& M, const ClassificationReport& c) {
    std::string ns = "s=" + std::to_string(M.s()) + ", n=" + std::to_string(M.n());
    if (!c.valid_metric_f) return "INVALID metric f-structure (" + ns + ")";
    if (c.is_S) {
        if (M.s() == 1) return "Sasakian (S-manifold, s=1)";
        return "S-manifold, " + ns;
    }
    if (c.is_C) return "C-manifold, " + ns;
    if (c.is_K) {
        if (M.s() == 0) return "Kaehler (K-manifold, s=0)";
        if (M.s() == 1) return "quasi-Sasakian (K-manifold, s=1)";
        return "K-manifold, " + ns;
    }
    std::string out;
    if (c.normal)
        out = "normal" + std::string(c.dF_zero ? "" : ", not K (dF != 0)");
    else if (c.is_almost_S && M.s() >= 1)
        out = "almost S-manifold (contact metric, not normal), " + ns;
    else if (M.s() == 0)
        out = "almost Hermitian, " + ns;
    else
        out = "metric f-manifold, " + ns;
    if (c.admits_characteristic_connection) out += ", admits characteristic connection";
    return out;
}

}  // namespace fstruct
