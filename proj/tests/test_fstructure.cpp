#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace fstruct;
using namespace fstruct::testing;

namespace {

SVec unit(int n, int i) {
    SVec v(n);
    v[i] = Scalar(1);
    return v;
}

/// Flat R^4 with the standard complex structure: the s = 0 reduction.
MetricFManifold almost_hermitian_r4() {
    LieAlgebra L(4, {"e1", "e2", "e3", "e4"});  // abelian
    Gram G(Matrix::identity(4));
    FStructureData fs;
    fs.phi = Matrix(4, 4);
    fs.phi.at(1, 0) = Scalar(1);
    fs.phi.at(0, 1) = Scalar(-1);
    fs.phi.at(3, 2) = Scalar(1);
    fs.phi.at(2, 3) = Scalar(-1);
    fs.n = 2;
    fs.s = 0;
    return MetricFManifold("r4", std::move(L), std::move(G), std::move(fs));
}

}  // namespace

TEST_CASE("validate_f_structure") {
    CHECK(validate_f_structure(example_u2()).all_pass());
    CHECK(validate_f_structure(example_u3()).all_pass());
    CHECK(validate_f_structure(example_heisenberg(1)).all_pass());
    CHECK(validate_f_structure(example_heisenberg(2)).all_pass());
    CHECK(validate_f_structure(example_h3_t3()).all_pass());

    // s = 0 almost-Hermitian input: xi/eta checks vacuous, the rest pass
    MetricFManifold r4 = almost_hermitian_r4();
    ValidationReport val = validate_f_structure(r4);
    CHECK(val.all_pass());
    CHECK(val.find("eta_xi_duality")->pass);

    // eta1 replaced by 2 eta1 breaks eta_i(xi_j) = delta_ij
    MetricFManifold base = example_u2();
    FStructureData fs = base.fs();
    fs.eta[0] = svec_scale(Scalar(2), fs.eta[0]);
    MetricFManifold bad("u2_bad_eta", base.L(), base.G(), std::move(fs));
    ValidationReport vbad = validate_f_structure(bad);
    CHECK(!vbad.all_pass());
    CHECK(!vbad.find("eta_xi_duality")->pass);
    CHECK(vbad.find("eta_xi_duality")->defect == doctest::Approx(1.0));
}

TEST_CASE("fundamental_form") {
    // u2: F = -X12^b ^ Y12^b
    MetricFManifold u2 = example_u2();
    KForm expect = covec_form(flat(u2.G(), unit(4, 0)))
                       .wedge(covec_form(flat(u2.G(), unit(4, 1))))
                       .scaled(Scalar(-1));
    CHECK(fundamental_form(u2).approx_equal_to(expect));

    // h3t3: F = -2 (X^b ^ Y^b)
    MetricFManifold h6 = example_h3_t3();
    KForm expect6 = covec_form(flat(h6.G(), unit(6, 0)))
                        .wedge(covec_form(flat(h6.G(), unit(6, 1))))
                        .scaled(Scalar(-2));
    CHECK(fundamental_form(h6).approx_equal_to(expect6));

    // u3: F = -(e12 + e13 + e23) with e_ij = X_ij^b ^ Y_ij^b
    MetricFManifold u3 = example_u3();
    KForm e12 = KForm::basis_covector(9, 0).wedge(KForm::basis_covector(9, 1));
    KForm e13 = KForm::basis_covector(9, 2).wedge(KForm::basis_covector(9, 3));
    KForm e23 = KForm::basis_covector(9, 4).wedge(KForm::basis_covector(9, 5));
    CHECK(fundamental_form(u3).approx_equal_to((e12 + e13 + e23).scaled(Scalar(-1))));
}

TEST_CASE("nijenhuis tensors") {
    MetricFManifold u2 = example_u2();
    CHECK(nijenhuis_n1(u2).is_zero());

    MetricFManifold u3 = example_u3();
    // N_phi(X12, Y12) = 2(xi1 - xi2)
    SVec np = nijenhuis_phi(u3).value(0, 1);
    SVec expect(9);
    expect[6] = Scalar(2);
    expect[7] = Scalar(-2);
    CHECK(svec_approx_equal(np, expect));
    CHECK(nijenhuis_n1(u3).is_zero());
}

TEST_CASE("n2_forms") {
    // u2: N^(2)_1 = 0 (deta = 2F and the phi-invariance of F force cancellation)
    MetricFManifold u2 = example_u2();
    auto n2 = n2_forms(u2);
    REQUIRE(n2.size() == 2);
    CHECK(n2[0].is_zero());
    CHECK(n2[1].is_zero());

    // normal structure => all N^(2)_i = 0 (checked on u3, which is normal)
    MetricFManifold u3 = example_u3();
    REQUIRE(classify(u3).normal);
    for (const auto& f : n2_forms(u3)) CHECK(f.is_zero());

    // s = 0: empty list
    CHECK(n2_forms(almost_hermitian_r4()).empty());
}

TEST_CASE("is_killing") {
    MetricFManifold u3 = example_u3();
    for (int i = 1; i <= 3; ++i) CHECK(is_killing(u3, i));
    MetricFManifold u2 = example_u2();
    for (int i = 1; i <= 2; ++i) CHECK(is_killing(u2, i));
    CHECK_THROWS_AS(is_killing(u2, 3), std::out_of_range);
    CHECK_THROWS_AS(is_killing(u2, 0), std::out_of_range);

    // One-sided rescale g(X12,X12) = 2: ad(xi_1) is a quarter turn of the
    // X-Y plane, skew only for an isotropic plane metric. The ad-skewness
    // evaluation gives defect 1 on the pair (X12, Y12).
    MetricFManifold aniso = u2_with_gram_entry(0, 0, Scalar(2));
    CHECK(!is_killing(aniso, 1));
    Scalar d = killing_defect(aniso, 1);
    CHECK(d.exact());
    CHECK(d.rat() == 1);
    // Isotropic rescale g(X,X) = g(Y,Y) = 2 keeps both xi Killing.
    {
        Matrix g = Matrix::identity(4);
        g.at(0, 0) = Scalar(2);
        g.at(1, 1) = Scalar(2);
        Gram G(std::move(g));
        FStructureData fs = u2.fs();
        fs.eta = derive_eta(G, fs.xi);
        MetricFManifold iso("u2_iso", u2.L(), std::move(G), std::move(fs));
        CHECK(is_killing(iso, 1));
        CHECK(is_killing(iso, 2));
    }
}

TEST_CASE("classify") {
    {
        ClassificationReport c = classify(example_u2());
        CHECK(c.is_S);
        CHECK(c.is_K);
        CHECK(!c.is_C);
        CHECK(c.admits_characteristic_connection);
        REQUIRE(c.alpha.has_value());
        REQUIRE(c.alpha->size() == 2);
        CHECK((*c.alpha)[0].rat() == 2);
        CHECK((*c.alpha)[1].rat() == 2);
    }
    {
        MetricFManifold u3 = example_u3();
        ClassificationReport c = classify(u3);
        CHECK(c.normal);
        CHECK(!c.contact_metric);
        CHECK(!c.dF_zero);
        CHECK(!c.is_K);
        CHECK(!c.is_S);
        CHECK(c.xi_all_killing);
        CHECK(c.admits_characteristic_connection);
        CHECK(!c.alpha.has_value());
        // the three deta sum to zero
        CHECK((u3.deta(0) + u3.deta(1) + u3.deta(2)).is_zero());
    }
    CHECK(classify(example_h3_t3()).is_S);
    CHECK(classify(example_heisenberg(1)).is_S);
    {
        // s = 0 flat Kaehler
        ClassificationReport c = classify(almost_hermitian_r4());
        CHECK(c.is_K);
        CHECK(!c.is_S);
        CHECK(!c.contact_metric);
        CHECK(c.is_almost_S);  // s = 0: the dF = 0 (almost Kaehler) reading
        CHECK(c.admits_characteristic_connection);
    }
}

TEST_CASE("skewness_defect_n1") {
    CHECK(skewness_defect_n1(example_u2()).is_raw_zero());
    CHECK(skewness_defect_n1(example_u3()).is_raw_zero());
    // phi(X12) = 2 Y12 is an invalid f-structure and breaks total skewness
    MetricFManifold bad = u2_with_phi_scale(Scalar(2));
    CHECK(!validate_f_structure(bad).all_pass());
    Scalar d = skewness_defect_n1(bad);
    CHECK(!d.is_raw_zero());
    CHECK(d.rat() == 3);  // extremal pair: N(Y,xi_i,X) + N(Y,X,xi_i)
}

TEST_CASE("classification summaries") {
    MetricFManifold u2 = example_u2();
    CHECK(classification_summary(u2, classify(u2)) == "S-manifold, s=2, n=1");
    MetricFManifold h3 = example_heisenberg(1);
    CHECK(classification_summary(h3, classify(h3)) == "Sasakian (S-manifold, s=1)");
    MetricFManifold u3 = example_u3();
    CHECK(classification_summary(u3, classify(u3)) ==
          "normal, not K (dF != 0), admits characteristic connection");
}
