#include "fstruct/manifold.hpp"

#include <cmath>

#include "fstruct/errors.hpp"

namespace fstruct {

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double ValidationReport::max_defect() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.defect);
    return m;
}

const CheckResult* ValidationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

MetricFManifold::MetricFManifold(std::string name, LieAlgebra L, Gram G, FStructureData fs)
    : name_(std::move(name)), L_(std::move(L)), G_(std::move(G)), fs_(std::move(fs)) {
    int nt = L_.dim();
    if (G_.dim() != nt) throw DimensionMismatch("Gram dim != Lie algebra dim");
    if (fs_.phi.rows() != nt || fs_.phi.cols() != nt)
        throw DimensionMismatch("phi dim != Lie algebra dim");
    if (int(fs_.xi.size()) != fs_.s || int(fs_.eta.size()) != fs_.s)
        throw DimensionMismatch("xi/eta count != s");
    if (2 * fs_.n + fs_.s != nt) throw DimensionMismatch("2n + s != dim");

    auto unit = [nt](int i) {
        SVec v(nt);
        v[i] = Scalar(1);
        return v;
    };
    f_raw_ = Matrix(nt, nt);
    for (int i = 0; i < nt; ++i)
        for (int j = 0; j < nt; ++j)
            f_raw_.at(i, j) = G_.ip(unit(i), fs_.phi.apply(unit(j)));
    bool antisym = true;
    for (int i = 0; i < nt && antisym; ++i)
        for (int j = 0; j < nt; ++j)
            if (!(f_raw_.at(i, j) + f_raw_.at(j, i)).is_raw_zero()) {
                antisym = false;
                break;
            }
    if (antisym) {
        KForm F(nt, 2);
        for (int i = 0; i < nt; ++i)
            for (int j = i + 1; j < nt; ++j)
                if (!f_raw_.at(i, j).is_raw_zero()) F.set({i, j}, f_raw_.at(i, j));
        F_ = F;
    }
    for (int i = 0; i < fs_.s; ++i) {
        KForm eta_i(nt, 1);
        for (int k = 0; k < nt; ++k)
            if (!fs_.eta[i][k].is_raw_zero()) eta_i.set({k}, fs_.eta[i][k]);
        deta_.push_back(ce_d(L_, eta_i));
    }
}

SVec MetricFManifold::basis(int i) const {
    SVec v(dim());
    v[i] = Scalar(1);
    return v;
}


Scalar MetricFManifold::eta_val(int i, const SVec& X) const {
    Scalar s;
    for (int k = 0; k < dim(); ++k) s += fs_.eta[i][k] * X[k];
    return s;
}

const KForm& MetricFManifold::F() const {
    if (!F_) throw InternalError("fundamental form is not antisymmetric; structure invalid");
    return *F_;
}

std::vector<SVec> derive_eta(const Gram& G, const std::vector<SVec>& xi) {
    std::vector<SVec> eta;
    eta.reserve(xi.size());
    for (const auto& x : xi) eta.push_back(flat(G, x));
    return eta;
}

namespace {

double dbl_abs(const Scalar& s) { return std::fabs(s.dbl()); }

void push(ValidationReport& rep, const std::string& name, const Scalar& defect) {
    rep.checks.push_back({name, approx_zero(defect), dbl_abs(defect)});
}

}  // namespace

ValidationReport validate_f_structure(const MetricFManifold& M) {
    ValidationReport rep;
    int nt = M.dim();
    const auto& fs = M.fs();
    const auto& G = M.G();

    rep.checks.push_back({"lie_antisymmetry", M.L().antisymmetric(),
                          M.L().antisymmetric() ? 0.0 : 1.0});
    push(rep, "jacobi", check_jacobi(M.L()));
    rep.checks.push_back({"gram_symmetric", G.symmetric(), G.symmetric() ? 0.0 : 1.0});
    rep.checks.push_back({"gram_positive_definite", G.is_positive_definite(),
                          G.is_positive_definite() ? 0.0 : 1.0});

    // phi^3 + phi = 0
    {
        Matrix p2 = fs.phi * fs.phi;
        Matrix p3 = p2 * fs.phi;
        push(rep, "phi_cubed_plus_phi", (p3 + fs.phi).max_abs());
    }
    // rank(phi) = 2n
    {
        int r = matrix_rank(fs.phi);
        rep.checks.push_back({"phi_rank_2n", r == 2 * fs.n, double(std::abs(r - 2 * fs.n))});
    }
    // eta_i(xi_j) = delta_ij
    {
        Defect d;
        for (int i = 0; i < fs.s; ++i)
            for (int j = 0; j < fs.s; ++j)
                d.update(M.eta_val(i, fs.xi[j]) - Scalar(i == j ? 1 : 0));
        push(rep, "eta_xi_duality", d.value());
    }
    // eta_i . phi = 0
    {
        Defect d;
        for (int i = 0; i < fs.s; ++i)
            for (int j = 0; j < nt; ++j)
                d.update(M.eta_val(i, fs.phi.apply(M.basis(j))));
        push(rep, "eta_circ_phi", d.value());
    }
    // phi^2 = -Id + sum eta_i (x) xi_i
    {
        Matrix p2 = fs.phi * fs.phi;
        Defect d;
        for (int a = 0; a < nt; ++a)
            for (int b = 0; b < nt; ++b) {
                Scalar expect = Scalar(a == b ? -1 : 0);
                for (int i = 0; i < fs.s; ++i) expect += fs.eta[i][b] * fs.xi[i][a];
                d.update(p2.at(a, b) - expect);
            }
        push(rep, "phi_squared_identity", d.value());
    }
    // g(phi X, phi Y) = g(X,Y) - sum eta_i(X) eta_i(Y)
    {
        Defect d;
        for (int a = 0; a < nt; ++a)
            for (int b = 0; b < nt; ++b) {
                SVec ea = M.basis(a), eb = M.basis(b);
                Scalar lhs = G.ip(fs.phi.apply(ea), fs.phi.apply(eb));
                Scalar rhs = G.ip(ea, eb);
                for (int i = 0; i < fs.s; ++i)
                    rhs -= M.eta_val(i, ea) * M.eta_val(i, eb);
                d.update(lhs - rhs);
            }
        push(rep, "metric_phi_compatibility", d.value());
    }
    // g(phi X, Y) + g(X, phi Y) = 0
    {
        Defect d;
        for (int a = 0; a < nt; ++a)
            for (int b = 0; b < nt; ++b) {
                SVec ea = M.basis(a), eb = M.basis(b);
                d.update(G.ip(fs.phi.apply(ea), eb) + G.ip(ea, fs.phi.apply(eb)));
            }
        push(rep, "phi_g_skew", d.value());
    }
    // g(xi_i, xi_j) = delta_ij
    {
        Defect d;
        for (int i = 0; i < fs.s; ++i)
            for (int j = 0; j < fs.s; ++j)
                d.update(G.ip(fs.xi[i], fs.xi[j]) - Scalar(i == j ? 1 : 0));
        push(rep, "xi_orthonormal", d.value());
    }
    // eta_i = flat(xi_i)
    {
        Defect d;
        for (int i = 0; i < fs.s; ++i)
            d.update(svec_max_abs(svec_sub(fs.eta[i], flat(G, fs.xi[i]))));
        push(rep, "eta_is_flat_xi", d.value());
    }
    // F antisymmetric, F(phi X, phi Y) = F(X,Y), F(phi X, Y) + F(X, phi Y) = 0
    {
        Defect d;
        for (int a = 0; a < nt; ++a)
            for (int b = 0; b < nt; ++b) d.update(M.f_raw().at(a, b) + M.f_raw().at(b, a));
        push(rep, "fundamental_form_antisymmetric", d.value());
    }
    {
        Defect inv, skew;
        for (int a = 0; a < nt; ++a)
            for (int b = 0; b < nt; ++b) {
                SVec ea = M.basis(a), eb = M.basis(b);
                SVec pa = fs.phi.apply(ea), pb = fs.phi.apply(eb);
                Scalar F_ab = G.ip(ea, pb);
                Scalar F_papb = G.ip(pa, fs.phi.apply(pb));
                Scalar F_pab = G.ip(pa, pb);
                Scalar F_apb = G.ip(ea, fs.phi.apply(pb));
                inv.update(F_papb - F_ab);
                skew.update(F_pab + F_apb);
            }
        push(rep, "F_phi_invariance", inv.value());
        push(rep, "F_phi_skew", skew.value());
    }
    // eta_1 ^ ... ^ eta_s ^ F^n != 0
    {
        bool pass = false;
        if (M.f_antisymmetric()) {
            KForm vol(nt, 0);
            vol.set({}, Scalar(1));
            for (int i = 0; i < fs.s; ++i) {
                KForm ei(nt, 1);
                for (int k = 0; k < nt; ++k)
                    if (!fs.eta[i][k].is_raw_zero()) ei.set({k}, fs.eta[i][k]);
                vol = vol.wedge(ei);
            }
            for (int p = 0; p < fs.n; ++p) vol = vol.wedge(M.F());
            pass = !approx_zero(vol.max_abs());
        }
        rep.checks.push_back({"volume_form_nonzero", pass, pass ? 0.0 : 1.0});
    }
    return rep;
}

KForm fundamental_form(const MetricFManifold& M) { return M.F(); }

}  // namespace fstruct
