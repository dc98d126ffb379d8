// Acceptance suite: one pass/fail line per criterion, exact arithmetic
// unless a check says otherwise. Exit code = number of failed criteria.

#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "fstruct/catalog.hpp"
#include "fstruct/connection.hpp"
#include "fstruct/curvature.hpp"
#include "fstruct/errors.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/holonomy.hpp"
#include "fstruct/properties.hpp"
#include "test_support.hpp"

using namespace fstruct;
using namespace fstruct::testing;

namespace {

struct Criterion {
    std::string name;
    std::vector<std::string> failures;
    void expect(bool ok, const std::string& what) {
        if (!ok) failures.push_back(what);
    }
    bool pass() const { return failures.empty(); }
};

SVec unit(int n, int i) {
    SVec v(n);
    v[i] = Scalar(1);
    return v;
}

bool is_exactly(const Scalar& v, long num, long den = 1) {
    return v.exact() && v.rat() == mpq_class(num, den);
}

std::string show(const Scalar& v) { return v.str(); }

// ---------------------------------------------------------------------------
// 1. U(2) golden suite
// ---------------------------------------------------------------------------
Criterion criterion_u2() {
    Criterion c{"U(2) golden suite"};
    MetricFManifold M = example_u2();
    TorsionData T = characteristic_torsion(M);
    Connection lc = levi_civita(M);
    Connection conn = with_torsion(M, lc, T);

    KForm expect_T = (covec_form(M.fs().eta[0]) + covec_form(M.fs().eta[1]))
                         .wedge(KForm::basis_covector(4, 0))
                         .wedge(KForm::basis_covector(4, 1))
                         .scaled(Scalar(-2));
    c.expect(T.three_form.approx_equal_to(expect_T) &&
                 (T.three_form - expect_T).max_abs().is_raw_zero(),
             "T = -2(eta1+eta2)^X12b^Y12b componentwise");
    c.expect(is_exactly(form_norm_sq(M.G(), T.three_form), 8), "||T||^2 = 8");
    c.expect(sigma_four_form(M, T).is_zero(), "sigma_T = 0");
    {
        KernelData ker = torsion_kernel(M, T);
        bool ok = ker.rank == 1 && ker.basis.size() == 1;
        if (ok) {
            const SVec& u = ker.basis[0];
            ok = u[0].is_raw_zero() && u[1].is_raw_zero() &&
                 (u[2] + u[3]).is_raw_zero() && !u[2].is_raw_zero();
        }
        c.expect(ok, "Ker(T) = span{xi1 - xi2}");
    }
    {
        auto f = curvature_as_f_phi(M, conn);
        c.expect(f.has_value() && is_exactly(*f, -4), "R^nabla = -4 F(x)phi");
    }
    RicciData rn = ricci(M, conn), rg = ricci(M, lc);
    {
        bool ok = true;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                long en = (a == b && a < 2) ? -4 : 0;
                long eg = (a >= 2 && b >= 2) ? 2 : 0;
                ok = ok && is_exactly(rn.ric.at(a, b), en) && is_exactly(rg.ric.at(a, b), eg);
            }
        c.expect(ok, "Ric^nabla = diag(-4,-4,0,0) and Ric^g as printed");
    }
    {
        Matrix S = s_tensor(M, T);
        bool ok = true;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                long e = 0;
                if (a == b && a < 2) e = 16;
                if (a >= 2 && b >= 2) e = 8;
                ok = ok && is_exactly(S.at(a, b), e);
            }
        c.expect(ok, "S matrix as printed");
    }
    c.expect(is_exactly(rn.scal, -8), "Scal^nabla = -8 (got " + show(rn.scal) + ")");
    c.expect(is_exactly(rg.scal, 4), "Scal^g = 4 (got " + show(rg.scal) + ")");
    {
        HolonomyResult hol = infinitesimal_holonomy(M, conn);
        c.expect(hol.dim == 1 && hol.is_abelian, "holonomy 1-dimensional and abelian");
    }
    {
        AmbroseSingerResult as = ambrose_singer_check(M, conn);
        c.expect(as.nabla_T_zero && as.t_defect == 0 && as.nabla_R_zero && as.r_defect == 0,
                 "nabla T = 0 = nabla R");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 2. H3 x T^3 golden suite
// ---------------------------------------------------------------------------
Criterion criterion_h3t3() {
    Criterion c{"H3xT3 golden suite"};
    MetricFManifold M = example_h3_t3();
    TorsionData T = characteristic_torsion(M);
    Connection lc = levi_civita(M);
    Connection conn = with_torsion(M, lc, T);

    c.expect(is_exactly(form_norm_sq(M.G(), T.three_form), 16), "||T||^2 = 16");
    {
        auto f = curvature_as_f_phi(M, conn);
        c.expect(f.has_value() && is_exactly(*f, -16), "R^nabla = -16 F(x)phi");
    }
    RicciData rn = ricci(M, conn), rg = ricci(M, lc);
    c.expect(is_exactly(rn.scal, 32),
             "Scal^nabla = 32 (computed " + show(rn.scal) +
                 "; 32 contradicts the trace of R^nabla = -16 F(x)phi, which forces -32)");
    c.expect(is_exactly(rg.scal, 56),
             "Scal^g = 56 (computed " + show(rg.scal) +
                 "; a non-abelian nilpotent group has Scal^g < 0 for every "
                 "left-invariant metric)");
    // Ric/S matrices in the h-orthonormal frame {sqrt2 X, sqrt2 Y, xi_1..xi_4},
    // reproduced through exact scaled pairings.
    {
        // Ric^nabla stated: diag(16, 16, 0, 0, 0, 0)
        bool horiz = is_exactly(Scalar(2) * rn.ric.at(0, 0), 16) &&
                     is_exactly(Scalar(2) * rn.ric.at(1, 1), 16);
        bool rest = (Scalar(2) * rn.ric.at(0, 1)).is_raw_zero();
        for (int i = 0; i < 4 && rest; ++i) {
            Scalar cross0, cross1;
            for (int b = 0; b < 6; ++b) {
                cross0 += rn.ric.at(0, b) * M.fs().xi[i][b];
                cross1 += rn.ric.at(1, b) * M.fs().xi[i][b];
            }
            rest = cross0.is_raw_zero() && cross1.is_raw_zero();
            for (int j = 0; j < 4 && rest; ++j) {
                Scalar v;
                for (int a = 0; a < 6; ++a)
                    for (int b = 0; b < 6; ++b)
                        v += M.fs().xi[i][a] * rn.ric.at(a, b) * M.fs().xi[j][b];
                rest = v.is_raw_zero();
            }
        }
        c.expect(rest, "Ric^nabla vanishes outside the horizontal diagonal");
        c.expect(horiz,
                 "Ric^nabla horizontal entries = 16 (computed " +
                     show(Scalar(2) * rn.ric.at(0, 0)) +
                     "; tracing R^nabla = -16 F(x)phi forces -16)");
    }
    {
        // Ric^g stated: diag(24, 24) (+) the all-2 vertical block
        bool horiz = is_exactly(Scalar(2) * rg.ric.at(0, 0), 24) &&
                     is_exactly(Scalar(2) * rg.ric.at(1, 1), 24);
        bool block = true;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Scalar v;
                for (int a = 0; a < 6; ++a)
                    for (int b = 0; b < 6; ++b)
                        v += M.fs().xi[i][a] * rg.ric.at(a, b) * M.fs().xi[j][b];
                block = block && is_exactly(v, 2);
            }
        c.expect(block, "Ric^g vertical block is the constant matrix 2");
        c.expect(horiz,
                 "Ric^g horizontal entries = 24 (computed " +
                     show(Scalar(2) * rg.ric.at(0, 0)) +
                     "; the Levi-Civita curvature tensor itself forces -8)");
    }
    {
        Matrix S = s_tensor(M, T);
        bool ok = is_exactly(Scalar(2) * S.at(0, 0), 32) &&
                  is_exactly(Scalar(2) * S.at(1, 1), 32) &&
                  (Scalar(2) * S.at(0, 1)).is_raw_zero();
        for (int i = 0; i < 4 && ok; ++i)
            for (int j = 0; j < 4 && ok; ++j) {
                Scalar v;
                for (int a = 0; a < 6; ++a)
                    for (int b = 0; b < 6; ++b)
                        v += M.fs().xi[i][a] * S.at(a, b) * M.fs().xi[j][b];
                ok = is_exactly(v, 8);
            }
        c.expect(ok, "S matrix = diag(32,32) (+) all-8 vertical block");
    }
    {
        KernelData ker = torsion_kernel(M, T);
        bool ok = ker.rank == 3;
        for (const auto& v : ker.basis)
            ok = ok && svec_max_abs(M.phi_apply(v)).is_raw_zero();
        c.expect(ok, "Ker(T) has rank 3 inside D-perp");
    }
    c.expect(sigma_four_form(M, T).is_zero(), "sigma_T = 0");
    {
        AmbroseSingerResult as = ambrose_singer_check(M, conn);
        c.expect(as.nabla_T_zero && as.nabla_R_zero, "Ambrose-Singer (true, true)");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 3. U(3) golden suite
// ---------------------------------------------------------------------------
Criterion criterion_u3() {
    Criterion c{"U(3) golden suite"};
    MetricFManifold M = example_u3();
    auto cb = [](int i) { return KForm::basis_covector(9, i); };
    KForm e12 = cb(0).wedge(cb(1)), e13 = cb(2).wedge(cb(3)), e23 = cb(4).wedge(cb(5));

    c.expect(M.deta(0).approx_equal_to((e12 + e13).scaled(Scalar(-2))),
             "deta1 = -2(e12 + e13)");
    c.expect(M.deta(1).approx_equal_to((e12 - e23).scaled(Scalar(2))),
             "deta2 = 2(e12 - e23)");
    c.expect(M.deta(2).approx_equal_to((e13 + e23).scaled(Scalar(2))),
             "deta3 = 2(e13 + e23)");
    c.expect((M.deta(0) + M.deta(1) + M.deta(2)).is_zero(), "sum deta_i = 0");

    KForm dF = ce_d(M.L(), M.F());
    c.expect(is_exactly(dF.eval({unit(9, 0), unit(9, 2), unit(9, 5)}), -1),
             "dF(X12, X13, Y23) = -1");
    {
        // dF(phi a, phi b, phi c) over every horizontal triple: -1 exactly on
        // the four listed triples, 0 on the other sixteen.
        std::vector<std::vector<int>> minus_one = {
            {0, 2, 4},  // X12, X13, X23
            {0, 3, 5},  // X12, Y13, Y23
            {2, 1, 5},  // X13, Y12, Y23
            {4, 1, 3},  // X23, Y12, Y13
        };
        auto expected = [&](int a, int b, int d) {
            for (auto& t : minus_one) {
                std::vector<int> s = t;
                std::sort(s.begin(), s.end());
                std::vector<int> q = {a, b, d};
                if (s == q) {
                    // sign of reordering the listed triple into increasing order
                    int sign = 1;
                    std::vector<int> p = t;
                    for (size_t i = 0; i < 3; ++i)
                        for (size_t j = i + 1; j < 3; ++j)
                            if (p[i] > p[j]) {
                                std::swap(p[i], p[j]);
                                sign = -sign;
                            }
                    return Scalar(-sign);
                }
            }
            return Scalar(0);
        };
        bool ok = true;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int d = b + 1; d < 6; ++d) {
                    Scalar v = dF.eval({M.phi_apply(unit(9, a)), M.phi_apply(unit(9, b)),
                                        M.phi_apply(unit(9, d))});
                    Scalar e = expected(a, b, d);
                    ok = ok && (v - e).is_raw_zero();
                }
        c.expect(ok, "dF(phi.,phi.,phi.) table: four entries -1, rest 0");
    }
    {
        bool ok = true;
        for (int i = 1; i <= 3; ++i) ok = ok && is_killing(M, i);
        c.expect(ok, "all three xi_i Killing");
    }
    c.expect(nijenhuis_n1(M).is_zero(), "N^(1) = 0");
    {
        TorsionData T = characteristic_torsion(M);
        KForm expect = covec_form(M.fs().eta[0]).wedge(M.deta(0)) +
                       covec_form(M.fs().eta[1]).wedge(M.deta(1)) +
                       covec_form(M.fs().eta[2]).wedge(M.deta(2)) +
                       cb(0).wedge(cb(2)).wedge(cb(4)) + cb(0).wedge(cb(3)).wedge(cb(5)) +
                       cb(2).wedge(cb(1)).wedge(cb(5)) + cb(4).wedge(cb(1)).wedge(cb(3));
        c.expect((T.three_form - expect).max_abs().is_raw_zero(),
                 "characteristic torsion equals the five-term 3-form");
        // spot checks
        bool ok = true;
        for (int i = 0; i < 3; ++i) {
            for (int a = 0; a < 9; ++a)
                for (int b = 0; b < 9; ++b) {
                    Scalar lhs = T.three_form.eval({M.fs().xi[i], unit(9, a), unit(9, b)});
                    ok = ok && (lhs - M.deta(i).coeff({a, b})).is_raw_zero();
                }
            for (int j = 0; j < 3; ++j)
                for (int a = 0; a < 9; ++a)
                    ok = ok && T.three_form
                                   .eval({M.fs().xi[i], M.fs().xi[j], unit(9, a)})
                                   .is_raw_zero();
        }
        c.expect(ok, "T(xi_i, X, Y) = deta_i(X, Y) and T(xi_i, xi_j, X) = 0");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 4. Theorem-level properties as invariants
// ---------------------------------------------------------------------------
Criterion criterion_invariants() {
    Criterion c{"theorem-level invariant suites"};
    for (auto name : {"u2", "u3", "h3", "h5", "h3t3", "product:h3:4"}) {
        PropertyReport rep = full_property_suite(example_by_name(name));
        bool ok = rep.all_pass() && rep.max_defect() == 0;
        c.expect(ok, std::string(name) + ": every applicable identity with defect 0");
        if (!ok)
            for (const auto& ck : rep.checks)
                if (ck.applicable && !ck.pass)
                    c.failures.push_back("  " + std::string(name) + " / " + ck.name);
    }
    {
        ModeGuard guard(Mode::floating, 1e-9);
        PropertyReport rep = full_property_suite(product_s_manifold(example_heisenberg(1), 2));
        c.expect(rep.all_pass() && rep.max_defect() <= 1e-9,
                 "float-mode product(h3, 2): identities within 1e-9");
    }
    return c;
}

// ---------------------------------------------------------------------------
// 5. Obstruction tests and uniqueness
// ---------------------------------------------------------------------------
Criterion criterion_obstructions() {
    Criterion c{"obstruction and uniqueness randomization"};
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> num(1, 6), den(1, 3), sign(0, 1);
    auto nonunit_rational = [&] {
        while (true) {
            Scalar v(num(rng), den(rng));
            if (sign(rng)) v = -v;
            Scalar shifted = Scalar(1) + v;
            if (!shifted.is_raw_zero() && !(shifted - Scalar(1)).is_raw_zero()) return shifted;
        }
    };
    int good = 0;
    for (int t = 0; t < 10; ++t) {
        // diagonal Gram rescale g(X12, X12) = 1 + delta: Killing breaks alone
        MetricFManifold M = u2_with_gram_entry(0, 0, nonunit_rational());
        bool killing_broken = !is_killing(M, 1) || !is_killing(M, 2);
        bool commute_ok = approx_zero(commute_defect(M));
        bool skew_ok = approx_zero(skewness_defect_n1(M));
        bool named = false;
        try {
            characteristic_torsion(M);
        } catch (const ObstructionError& e) {
            named = e.killing_failed && !e.commute_failed && !e.skewness_failed;
        }
        if (killing_broken && commute_ok && skew_ok && named) ++good;
    }
    for (int t = 0; t < 10; ++t) {
        // phi(X12) = c Y12, c != 1: skewness of N^(1) breaks alone
        MetricFManifold M = u2_with_phi_scale(nonunit_rational());
        bool skew_broken = !approx_zero(skewness_defect_n1(M));
        bool commute_ok = approx_zero(commute_defect(M));
        bool killing_ok = is_killing(M, 1) && is_killing(M, 2);
        bool named = false;
        try {
            characteristic_torsion(M);
        } catch (const ObstructionError& e) {
            named = e.skewness_failed && !e.commute_failed && !e.killing_failed;
        }
        if (skew_broken && commute_ok && killing_ok && named) ++good;
    }
    c.expect(good == 20,
             "20/20 single-condition perturbations raise ObstructionError naming "
             "exactly the broken condition (got " + std::to_string(good) + ")");

    MetricFManifold u2 = example_u2();
    Connection lc = levi_civita(u2);
    TorsionData T = characteristic_torsion(u2);
    int broken = 0;
    for (int t = 0; t < 100; ++t) {
        KForm p = rand_form(rng, 4, 3);
        if (p.is_zero()) {
            p.set({0, 1, 2}, Scalar(1));  // keep the perturbation nonzero
        }
        KForm t2 = T.three_form + p;
        if ((t2 - T.three_form).max_abs().is_raw_zero()) {
            ++broken;  // perturbation cancelled; skip (does not count as failure)
            continue;
        }
        TorsionData T2{t2, raise_three_form(u2.G(), t2)};
        if (!verify_adapted(u2, with_torsion(u2, lc, T2)).all_parallel()) ++broken;
    }
    c.expect(broken == 100,
             "100/100 random torsion perturbations break adaptedness (got " +
                 std::to_string(broken) + ")");
    return c;
}

// ---------------------------------------------------------------------------
// 6. Scal identity sweep
// ---------------------------------------------------------------------------
Criterion criterion_scal_sweep() {
    Criterion c{"Scal^nabla = Scal^g - (3/2)||T||^2 sweep"};
    for (auto name : {"u2", "u3", "h3", "h5", "h3t3", "product:h3:4", "product:h3:9"}) {
        MetricFManifold M = example_by_name(name);
        TorsionData T = characteristic_torsion(M);
        Connection conn = with_torsion(M, levi_civita(M), T);
        Scalar lhs = ricci(M, conn).scal;
        Scalar rhs =
            ricci(M, levi_civita(M)).scal - Scalar(3, 2) * form_norm_sq(M.G(), T.three_form);
        c.expect(lhs.exact() && rhs.exact() && lhs.rat() == rhs.rat(),
                 std::string(name) + ": exact identity");
    }
    return c;
}

}  // namespace

int main() {
    set_arithmetic_mode(Mode::exact);
    set_comparison_tolerance(1e-9);
    std::vector<Criterion> results;
    results.push_back(criterion_u2());
    results.push_back(criterion_h3t3());
    results.push_back(criterion_u3());
    results.push_back(criterion_invariants());
    results.push_back(criterion_obstructions());
    results.push_back(criterion_scal_sweep());

    int failed = 0;
    for (size_t i = 0; i < results.size(); ++i) {
        const Criterion& c = results[i];
        std::cout << "criterion " << (i + 1) << " [" << c.name << "]: "
                  << (c.pass() ? "PASS" : "FAIL") << "\n";
        for (const auto& f : c.failures) std::cout << "    - " << f << "\n";
        if (!c.pass()) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" :
                  std::to_string(failed) + " criterion(s) failed") << "\n";
    return failed;
}
