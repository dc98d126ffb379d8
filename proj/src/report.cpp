#include "fstruct/report.hpp"

#include <sstream>

#include "fstruct/catalog.hpp"
#include "fstruct/connection.hpp"
#include "fstruct/curvature.hpp"
#include "fstruct/errors.hpp"
#include "fstruct/fstructure.hpp"
#include "fstruct/holonomy.hpp"
#include "fstruct/properties.hpp"

namespace fstruct {

using nlohmann::ordered_json;

namespace {

ordered_json matrix_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

ordered_json vec_json(const SVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(x.str());
    return a;
}

ordered_json form_json(const KForm& f) {
    ordered_json a = ordered_json::array();
    for (const auto& [I, v] : f.components()) {
        if (v.is_raw_zero()) continue;
        ordered_json entry = ordered_json::array();
        for (int i : I) entry.push_back(i);
        entry.push_back(v.str());
        a.push_back(entry);
    }
    return a;
}

ordered_json validation_json(const ValidationReport& val) {
    ordered_json v;
    v["all_pass"] = val.all_pass();
    ordered_json checks = ordered_json::array();
    for (const auto& c : val.checks) {
        ordered_json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        e["defect"] = Scalar::raw_double(c.defect).str();
        checks.push_back(e);
    }
    v["checks"] = checks;
    return v;
}

ordered_json classification_json(const MetricFManifold& M, const ClassificationReport& c) {
    ordered_json j;
    j["summary"] = classification_summary(M, c);
    j["valid_metric_f"] = c.valid_metric_f;
    j["xi_commute"] = c.xi_commute;
    j["xi_all_killing"] = c.xi_all_killing;
    j["normal"] = c.normal;
    j["dF_zero"] = c.dF_zero;
    j["contact_metric"] = c.contact_metric;
    j["all_deta_zero"] = c.all_deta_zero;
    j["is_K"] = c.is_K;
    j["is_S"] = c.is_S;
    j["is_C"] = c.is_C;
    j["is_almost_S"] = c.is_almost_S;
    j["admits_characteristic_connection"] = c.admits_characteristic_connection;
    if (c.alpha) {
        ordered_json a = ordered_json::array();
        for (const auto& x : *c.alpha) a.push_back(x.str());
        j["alpha"] = a;
    } else {
        j["alpha"] = nullptr;
    }
    if (!c.notes.empty()) j["notes"] = c.notes;
    return j;
}

ordered_json properties_json(const PropertyReport& rep) {
    ordered_json a = ordered_json::array();
    for (const auto& c : rep.checks) {
        ordered_json e;
        e["name"] = c.name;
        if (!c.applicable) {
            e["skipped"] = true;
            e["reason"] = c.reason;
        } else {
            e["pass"] = c.pass;
            e["defect"] = Scalar::raw_double(c.defect).str();
        }
        a.push_back(e);
    }
    return a;
}

}  // namespace

ordered_json build_classify_report(const MetricFManifold& M) {
    ordered_json j;
    ordered_json s;
    s["name"] = M.name();
    s["dim"] = M.dim();
    s["n"] = M.n();
    s["s"] = M.s();
    s["labels"] = M.L().labels();
    s["mode"] = arithmetic_mode() == Mode::exact ? "exact" : "float";
    j["structure"] = s;
    j["validation"] = validation_json(validate_f_structure(M));
    j["classification"] = classification_json(M, classify(M));
    return j;
}

ordered_json build_report(const MetricFManifold& M, bool include_properties) {
    ordered_json j = build_classify_report(M);
    ClassificationReport cls = classify(M);

    ordered_json conn_j;
    bool have_connection = false;
    TorsionData T;
    if (!M.f_antisymmetric()) {
        conn_j["exists"] = false;
        conn_j["obstructions"] = ordered_json::array();
        conn_j["note"] = "fundamental form g(.,phi .) is not antisymmetric; no torsion 3-form";
    } else {
        try {
            T = characteristic_torsion(M);
            have_connection = true;
        } catch (const ObstructionError& e) {
            conn_j["exists"] = false;
            conn_j["obstructions"] = e.reasons();
        }
    }
    if (have_connection) {
        Connection lc = levi_civita(M);
        Connection conn = with_torsion(M, lc, T);
        conn_j["exists"] = true;
        conn_j["torsion"] = form_json(T.three_form);
        conn_j["torsion_norm_sq"] = form_norm_sq(M.G(), T.three_form).str();
        AdaptednessReport a = verify_adapted(M, conn);
        ordered_json aj;
        aj["g_defect"] = Scalar::raw_double(a.g_defect).str();
        aj["phi_defect"] = Scalar::raw_double(a.phi_defect).str();
        aj["xi_defect"] = Scalar::raw_double(a.xi_defect).str();
        aj["eta_defect"] = Scalar::raw_double(a.eta_defect).str();
        aj["all_parallel"] = a.all_parallel();
        conn_j["adaptedness"] = aj;
        j["connection"] = conn_j;

        ordered_json cur;
        CurvatureTensor R = curvature(M, conn);
        ordered_json rnz = ordered_json::array();
        for (int a2 = 0; a2 < M.dim(); ++a2)
            for (int b = a2 + 1; b < M.dim(); ++b)
                for (int k = 0; k < M.dim(); ++k)
                    for (int l = 0; l < M.dim(); ++l)
                        if (!R.at(a2, b, k, l).is_raw_zero())
                            rnz.push_back(ordered_json::array(
                                {a2, b, k, l, R.at(a2, b, k, l).str()}));
        cur["nonzero_R_nabla"] = rnz;
        auto fphi = curvature_as_f_phi(M, conn);
        cur["f_phi_factor"] = fphi ? ordered_json(fphi->str()) : ordered_json(nullptr);
        RicciData rn = ricci(M, conn), rg = ricci(M, lc);
        cur["ric_nabla"] = matrix_json(rn.ric);
        cur["ric_g"] = matrix_json(rg.ric);
        cur["s_tensor"] = matrix_json(s_tensor(M, T));
        cur["scal_nabla"] = rn.scal.str();
        cur["scal_g"] = rg.scal.str();
        cur["ric_nabla_symmetric"] = rn.symmetric;
        cur["nabla_einstein"] = nabla_einstein(M, rn);
        j["curvature"] = cur;

        ordered_json ker_j;
        KernelData ker = torsion_kernel(M, T);
        ker_j["rank"] = ker.rank;
        ordered_json basis = ordered_json::array();
        for (const auto& v : ker.basis) basis.push_back(vec_json(v));
        ker_j["basis"] = basis;
        j["torsion_kernel"] = ker_j;

        j["sigma_T"] = form_json(sigma_four_form(M, T));

        HolonomyResult hol = infinitesimal_holonomy(M, conn);
        ordered_json hj;
        hj["dim"] = hol.dim;
        hj["abelian"] = hol.is_abelian;
        hj["stabilized_at"] = hol.stabilized_at;
        hj["stabilized"] = hol.stabilized;
        ordered_json gens = ordered_json::array();
        for (const auto& g : hol.generators) gens.push_back(matrix_json(g));
        hj["generators"] = gens;
        j["holonomy"] = hj;

        AmbroseSingerResult as = ambrose_singer_check(M, conn);
        ordered_json asj;
        asj["nabla_T_zero"] = as.nabla_T_zero;
        asj["nabla_R_zero"] = as.nabla_R_zero;
        asj["t_defect"] = Scalar::raw_double(as.t_defect).str();
        asj["r_defect"] = Scalar::raw_double(as.r_defect).str();
        j["ambrose_singer"] = asj;

        if (cls.is_S) {
            TanakaWebsterResult tw = tanaka_webster(M);
            ordered_json twj;
            twj["distinct_from_characteristic"] = !tw.conn.approx_equal_to(conn);
            twj["torsion_skewness_defect"] =
                Scalar::raw_double(tw.torsion_skewness_defect).str();
            twj["torsion_type"] = tw.torsion_type;
            j["tanaka_webster"] = twj;
        }
    } else {
        j["connection"] = conn_j;
    }

    if (include_properties) j["properties"] = properties_json(full_property_suite(M));
    return j;
}

namespace {

void render(std::ostream& os, const ordered_json& j, const std::string& key, int indent) {
    std::string pad(indent, ' ');
    if (j.is_object()) {
        if (!key.empty()) os << pad << key << ":\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render(os, it.value(), it.key(), indent + (key.empty() ? 0 : 2));
    } else if (j.is_array()) {
        if (j.empty()) {
            os << pad << key << ": []\n";
            return;
        }
        bool scalar_items = true;
        for (const auto& item : j)
            if (item.is_object() || item.is_array()) scalar_items = false;
        if (scalar_items) {
            os << pad << key << ": [";
            bool first = true;
            for (const auto& item : j) {
                if (!first) os << ", ";
                first = false;
                os << (item.is_string() ? item.get<std::string>() : item.dump());
            }
            os << "]\n";
        } else {
            os << pad << key << ":\n";
            for (const auto& item : j) {
                if (item.is_array()) {
                    os << pad << "  - [";
                    bool first = true;
                    for (const auto& x : item) {
                        if (!first) os << ", ";
                        first = false;
                        os << (x.is_string() ? x.get<std::string>() : x.dump());
                    }
                    os << "]\n";
                } else if (item.is_object()) {
                    bool first = true;
                    for (auto it = item.begin(); it != item.end(); ++it) {
                        std::string mark = first ? pad + "  - " : pad + "    ";
                        first = false;
                        if (it.value().is_object() || it.value().is_array()) {
                            render(os, it.value(), it.key(), indent + 4);
                        } else {
                            os << mark << it.key() << ": "
                               << (it.value().is_string() ? it.value().get<std::string>()
                                                          : it.value().dump())
                               << "\n";
                        }
                    }
                } else {
                    render(os, item, "-", indent + 2);
                }
            }
        }
    } else {
        os << pad << key << ": "
           << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

}  // namespace

std::string render_text(const ordered_json& j) {
    std::ostringstream os;
    for (auto it = j.begin(); it != j.end(); ++it) render(os, it.value(), it.key(), 0);
    return os.str();
}

}  // namespace fstruct
