#include "fstruct/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace fstruct {

namespace {
Mode g_mode = Mode::exact;
double g_tol = 1e-9;
}  // namespace

Mode arithmetic_mode() { return g_mode; }
void set_arithmetic_mode(Mode m) { g_mode = m; }
double comparison_tolerance() { return g_tol; }
void set_comparison_tolerance(double tol) { g_tol = tol; }

Scalar::Scalar(long num, long den) : exact_(true), rat_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    rat_.canonicalize();
}

Scalar Scalar::from_double(double d) {
    if (arithmetic_mode() == Mode::exact)
        throw ExactModeUnsupported("float value " + std::to_string(d) + " not representable in exact mode");
    return raw_double(d);
}

Scalar Scalar::raw_double(double d) {
    Scalar s;
    s.exact_ = false;
    s.flt_ = d;
    return s;
}

Scalar Scalar::parse(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    if (text.find_first_of(".eE") != std::string::npos &&
        text.find('/') == std::string::npos) {
        return from_double(std::strtod(text.c_str(), nullptr));
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal '" + text + "'");
    q.canonicalize();
    return Scalar(q);
}

const mpq_class& Scalar::rat() const {
    if (!exact_) throw std::logic_error("rat() on float-backed scalar");
    return rat_;
}

std::string Scalar::str() const {
    if (exact_) return rat_.get_str();
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", flt_);
    return buf;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (r.exact_)
        r.rat_ = -r.rat_;
    else
        r.flt_ = -r.flt_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ += o.rat_;
    } else {
        flt_ = dbl() + o.dbl();
        exact_ = false;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ -= o.rat_;
    } else {
        flt_ = dbl() - o.dbl();
        exact_ = false;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (exact_ && o.exact_) {
        rat_ *= o.rat_;
    } else {
        flt_ = dbl() * o.dbl();
        exact_ = false;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_raw_zero()) throw std::domain_error("scalar division by zero");
    if (exact_ && o.exact_) {
        rat_ /= o.rat_;
    } else {
        flt_ = dbl() / o.dbl();
        exact_ = false;
    }
    return *this;
}

Scalar Scalar::abs() const {
    Scalar r = *this;
    if (r.exact_)
        r.rat_ = ::abs(r.rat_);
    else
        r.flt_ = std::fabs(r.flt_);
    return r;
}

int Scalar::sign() const {
    if (exact_) return sgn(rat_);
    return flt_ > 0 ? 1 : (flt_ < 0 ? -1 : 0);
}

bool approx_equal(const Scalar& a, const Scalar& b) {
    if (arithmetic_mode() == Mode::exact && a.exact() && b.exact())
        return a.rat() == b.rat();
    return std::fabs(a.dbl() - b.dbl()) <= comparison_tolerance();
}

bool approx_zero(const Scalar& a) { return approx_equal(a, Scalar(0)); }

Scalar scalar_sqrt(const Scalar& a) {
    if (a.sign() < 0) throw std::domain_error("sqrt of negative scalar");
    if (a.exact()) {
        const mpq_class& q = a.rat();
        mpz_class num = q.get_num(), den = q.get_den();
        if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
            mpz_class rn, rd;
            mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
            mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
            return Scalar(mpq_class(rn, rd));
        }
        return Scalar::from_double(std::sqrt(a.dbl()));
    }
    return Scalar::raw_double(std::sqrt(a.dbl()));
}

Scalar scalar_abs_max(const Scalar& a, const Scalar& b) {
    Scalar aa = a.abs(), bb = b.abs();
    if (aa.exact() && bb.exact()) return aa.rat() >= bb.rat() ? aa : bb;
    return aa.dbl() >= bb.dbl() ? aa : bb;
}

}  // namespace fstruct
