#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fstruct {

struct DimensionMismatch : std::runtime_error {
    explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeError : std::runtime_error {
    explicit DegreeError(const std::string& what) : std::runtime_error(what) {}
};

struct SingularGram : std::runtime_error {
    explicit SingularGram(const std::string& what) : std::runtime_error(what) {}
};

/// Requested an irrational value (or float input) while the session runs exact.
struct ExactModeUnsupported : std::runtime_error {
    explicit ExactModeUnsupported(const std::string& what) : std::runtime_error(what) {}
};

/// Two independent routes to the same tensor disagreed; an algebra bug, not user error.
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

struct NotSManifold : std::runtime_error {
    explicit NotSManifold(const std::string& what) : std::runtime_error(what) {}
};

struct NotSasakian : std::runtime_error {
    explicit NotSasakian(const std::string& what) : std::runtime_error(what) {}
};

/// Structure fails one or more of the three existence conditions of the
/// characteristic connection: commuting xi, Killing xi, totally skew N1.
/// Failures compose; all broken conditions are carried.
struct ObstructionError : std::runtime_error {
    bool commute_failed = false;
    bool killing_failed = false;
    bool skewness_failed = false;

    ObstructionError(bool commute, bool killing, bool skewness)
        : std::runtime_error(describe(commute, killing, skewness)),
          commute_failed(commute),
          killing_failed(killing),
          skewness_failed(skewness) {}

    std::vector<std::string> reasons() const {
        std::vector<std::string> r;
        if (commute_failed) r.push_back("commute");
        if (killing_failed) r.push_back("killing");
        if (skewness_failed) r.push_back("skewness");
        return r;
    }

private:
    static std::string describe(bool commute, bool killing, bool skewness) {
        std::string s = "no adapted connection; reasons:";
        if (commute) s += " commute";
        if (killing) s += " killing";
        if (skewness) s += " skewness";
        return s;
    }
};

struct ParseError : std::runtime_error {
    std::string field;
    explicit ParseError(const std::string& field_, const std::string& what)
        : std::runtime_error("parse error [" + field_ + "]: " + what), field(field_) {}
};

}  // namespace fstruct
