#include "fstruct/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "fstruct/catalog.hpp"
#include "fstruct/errors.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/properties.hpp"
#include "fstruct/report.hpp"

namespace fstruct {

namespace {

constexpr int kOk = 0, kInternal = 1, kInvalidStructure = 2, kVerifyFailed = 3;

MetricFManifold resolve_source(const CliOptions& opt, std::vector<std::string>* warnings) {
    if (!opt.example.empty()) return example_by_name(opt.example);
    if (!opt.file.empty()) return load_structure(opt.file, warnings);
    throw std::invalid_argument("no source: pass --example NAME or a structure file");
}

int emit(const CliOptions& opt, const nlohmann::ordered_json& j, std::ostream& os) {
    std::string payload = opt.format == "json" ? j.dump(2) + "\n" : render_text(j);
    if (!opt.out.empty()) {
        std::ofstream f(opt.out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + opt.out);
        f << payload;
    } else {
        os << payload;
    }
    return kOk;
}

}  // namespace

int cmd_classify(const CliOptions& opt, std::ostream& os) {
    try {
        std::vector<std::string> warnings;
        MetricFManifold M = resolve_source(opt, &warnings);
        nlohmann::ordered_json j = build_classify_report(M);
        if (!warnings.empty()) j["warnings"] = warnings;
        emit(opt, j, os);
        return j["validation"]["all_pass"].get<bool>() ? kOk : kInvalidStructure;
    } catch (const ParseError& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const ExactModeUnsupported& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const std::invalid_argument& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const std::exception& e) {
        os << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int cmd_report(const CliOptions& opt, std::ostream& os) {
    try {
        std::vector<std::string> warnings;
        MetricFManifold M = resolve_source(opt, &warnings);
        nlohmann::ordered_json j = build_report(M);
        if (!warnings.empty()) j["warnings"] = warnings;
        emit(opt, j, os);
        // "no adapted connection" is a valid mathematical answer: exit 0.
        return j["validation"]["all_pass"].get<bool>() ? kOk : kInvalidStructure;
    } catch (const ParseError& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const ExactModeUnsupported& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const std::invalid_argument& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const InternalError& e) {
        os << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const std::exception& e) {
        os << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

int cmd_verify(const CliOptions& opt, std::ostream& os) {
    try {
        std::vector<std::pair<std::string, MetricFManifold>> targets;
        if (opt.all) {
            for (const auto& n : example_names())
                targets.emplace_back(n, example_by_name(n));
            if (arithmetic_mode() == Mode::floating)
                targets.emplace_back("product:h3:2", example_by_name("product:h3:2"));
        } else {
            std::vector<std::string> warnings;
            MetricFManifold M = resolve_source(opt, &warnings);
            targets.emplace_back(M.name(), std::move(M));
            for (const auto& w : warnings) os << "warning: " << w << "\n";
        }
        bool all_pass = true;
        nlohmann::ordered_json out = nlohmann::ordered_json::array();
        for (const auto& [name, M] : targets) {
            PropertyReport rep = full_property_suite(M);
            all_pass = all_pass && rep.all_pass();
            if (opt.format == "json") {
                nlohmann::ordered_json e;
                e["structure"] = name;
                nlohmann::ordered_json checks = nlohmann::ordered_json::array();
                for (const auto& c : rep.checks) {
                    nlohmann::ordered_json cj;
                    cj["name"] = c.name;
                    if (!c.applicable) {
                        cj["skipped"] = true;
                        cj["reason"] = c.reason;
                    } else {
                        cj["pass"] = c.pass;
                        cj["defect"] = Scalar::raw_double(c.defect).str();
                    }
                    checks.push_back(cj);
                }
                e["checks"] = checks;
                e["all_pass"] = rep.all_pass();
                out.push_back(e);
            } else {
                os << "== " << name << " ==\n";
                for (const auto& c : rep.checks) {
                    if (!c.applicable)
                        os << "  skip  " << c.name << " (" << c.reason << ")\n";
                    else
                        os << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << ": "
                           << Scalar::raw_double(c.defect).str() << "\n";
                }
            }
        }
        if (opt.format == "json") {
            std::string payload = out.dump(2) + "\n";
            if (!opt.out.empty()) {
                std::ofstream f(opt.out, std::ios::binary);
                f << payload;
            } else {
                os << payload;
            }
        }
        return all_pass ? kOk : kVerifyFailed;
    } catch (const ParseError& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const ExactModeUnsupported& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const std::invalid_argument& e) {
        os << "error: " << e.what() << "\n";
        return kInvalidStructure;
    } catch (const std::exception& e) {
        os << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}

}  // namespace fstruct
