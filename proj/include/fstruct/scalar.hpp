#pragma once

#include <gmpxx.h>

#include <string>

#include "fstruct/errors.hpp"

namespace fstruct {

enum class Mode { exact, floating };

/// Session-wide arithmetic mode. Set once before a computation starts
/// (CLI startup or test fixture); values themselves are immutable.
Mode arithmetic_mode();
void set_arithmetic_mode(Mode m);
double comparison_tolerance();
void set_comparison_tolerance(double tol);

/// RAII save/restore of mode + tolerance, for tests that switch modes.
struct ModeGuard {
    Mode saved_mode;
    double saved_tol;
    ModeGuard() : saved_mode(arithmetic_mode()), saved_tol(comparison_tolerance()) {}
    ModeGuard(Mode m, double tol) : ModeGuard() {
        set_arithmetic_mode(m);
        set_comparison_tolerance(tol);
    }
    ~ModeGuard() {
        set_arithmetic_mode(saved_mode);
        set_comparison_tolerance(saved_tol);
    }
};

/// A number that is an exact rational as long as every input was rational,
/// and a double as soon as anything irrational entered the computation.
/// Exactness propagates through arithmetic: exact op exact stays exact,
/// anything touching a float value becomes float.
class Scalar {
public:
    Scalar() : exact_(true), rat_(0) {}
    Scalar(long n) : exact_(true), rat_(n) {}
    Scalar(int n) : exact_(true), rat_(n) {}
    Scalar(long num, long den);
    explicit Scalar(const mpq_class& q) : exact_(true), rat_(q) { rat_.canonicalize(); }

    /// Float-backed scalar; refused in exact mode (no rounding admitted there).
    static Scalar from_double(double d);
    /// Same, but without the mode gate; for internal float-path code only.
    static Scalar raw_double(double d);
    /// Parse "p/q", "p", or a decimal literal (decimal => float-backed).
    static Scalar parse(const std::string& text);

    bool exact() const { return exact_; }
    const mpq_class& rat() const;
    double dbl() const { return exact_ ? rat_.get_d() : flt_; }

    /// Canonical rendering: "p/q" (or "p") in exact form, 12 significant
    /// digits otherwise.
    std::string str() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar abs() const;
    /// True iff the value is identically zero (no tolerance).
    bool is_raw_zero() const { return exact_ ? rat_ == 0 : flt_ == 0.0; }
    int sign() const;

private:
    bool exact_;
    mpq_class rat_;
    double flt_ = 0.0;
};

/// The one comparator every equality predicate routes through.
/// Exact mode: exact rational equality. Float mode (or float-backed
/// operands): |a - b| <= tolerance.
bool approx_equal(const Scalar& a, const Scalar& b);
bool approx_zero(const Scalar& a);

/// sqrt: exact when the operand is a ratio of perfect squares; otherwise a
/// float (which requires float mode).
Scalar scalar_sqrt(const Scalar& a);

/// max(|a|,|b|) convenience used by defect accumulation.
Scalar scalar_abs_max(const Scalar& a, const Scalar& b);

/// Accumulates the max |expression| over a sweep of identities; keeps the
/// exact flag so "defect 0 in exact mode" is a literal statement.
class Defect {
public:
    void update(const Scalar& diff) { value_ = scalar_abs_max(value_, diff); }
    const Scalar& value() const { return value_; }
    double dbl() const { return value_.dbl(); }
    bool pass() const { return approx_zero(value_); }

private:
    Scalar value_;  // exact 0 initially
};

}  // namespace fstruct
