#pragma once

#include <map>
#include <vector>

#include "fstruct/lie_algebra.hpp"
#include "fstruct/linalg.hpp"

namespace fstruct {

class Gram;

/// Degree-k totally antisymmetric tensor over the frame, stored sparsely on
/// strictly increasing index tuples; every other evaluation is derived by
/// permutation sign. The wedge follows the determinant convention with no
/// 1/k! normalization: (a^b)(X,Y) = a(X)b(Y) - a(Y)b(X) for 1-forms.
class KForm {
public:
    KForm() : dim_(0), deg_(0) {}
    KForm(int dim, int deg);

    static KForm basis_covector(int dim, int i);

    int dim() const { return dim_; }
    int degree() const { return deg_; }
    bool is_zero() const;

    /// Component on a strictly increasing tuple.
    void set(const std::vector<int>& increasing, const Scalar& value);
    /// Component on any tuple (sign-extended; 0 on repeats).
    Scalar coeff(std::vector<int> idx) const;

    /// Evaluate on coefficient vectors (multilinear alternating).
    Scalar eval(const std::vector<SVec>& args) const;

    KForm operator+(const KForm& o) const;
    KForm operator-(const KForm& o) const;
    KForm scaled(const Scalar& c) const;
    KForm operator-() const { return scaled(Scalar(-1)); }

    KForm wedge(const KForm& o) const;
    KForm interior(const SVec& X) const;

    Scalar max_abs() const;
    bool approx_equal_to(const KForm& o) const;

    const std::map<std::vector<int>, Scalar>& components() const { return comp_; }

private:
    void add_to(const std::vector<int>& increasing, const Scalar& value);
    int dim_, deg_;
    std::map<std::vector<int>, Scalar> comp_;
};

/// Left-invariant (Chevalley-Eilenberg) exterior derivative:
/// the pointwise-derivative terms vanish, leaving
/// d w(e_{i0},...,e_{ik}) = sum_{a<b} (-1)^{a+b} w([e_a,e_b], ..rest..).
/// For 1-forms this is d eta(X,Y) = -eta([X,Y]).
KForm ce_d(const LieAlgebra& L, const KForm& w);

/// ||T||^2 = (1/6) T_abc T_def g^{ad} g^{be} g^{cf} for a 3-form
/// (general k uses the same full contraction with 1/k!); frame-independent.
Scalar form_norm_sq(const Gram& G, const KForm& T);

}  // namespace fstruct
