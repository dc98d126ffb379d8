#include "fstruct/catalog.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fstruct/errors.hpp"
#include "fstruct/fstructure.hpp"

namespace fstruct {

namespace {

Matrix identity_gram(int n) { return Matrix::identity(n); }

Matrix diag_gram(const std::vector<Scalar>& d) {
    Matrix g(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) g.at(int(i), int(i)) = d[i];
    return g;
}

// phi sending e_{x} -> e_{y}, e_{y} -> -e_{x} for each horizontal pair.
Matrix phi_from_pairs(int dim, const std::vector<std::pair<int, int>>& pairs) {
    Matrix phi(dim, dim);
    for (auto [x, y] : pairs) {
        phi.at(y, x) = Scalar(1);
        phi.at(x, y) = Scalar(-1);
    }
    return phi;
}

SVec unit(int dim, int i) {
    SVec v(dim);
    v[i] = Scalar(1);
    return v;
}

}  // namespace

MetricFManifold example_u2() {
    LieAlgebra L(4, {"X12", "Y12", "xi1", "xi2"});
    SVec b(4);
    // [X12, Y12] = 2(xi1 + xi2)
    L.set_bracket(0, 1, 2, Scalar(2));
    L.set_bracket(0, 1, 3, Scalar(2));
    // [X12, xi_i] = -Y12, [Y12, xi_i] = X12
    L.set_bracket(0, 2, 1, Scalar(-1));
    L.set_bracket(0, 3, 1, Scalar(-1));
    L.set_bracket(1, 2, 0, Scalar(1));
    L.set_bracket(1, 3, 0, Scalar(1));

    Gram G(identity_gram(4));
    FStructureData fs;
    fs.phi = phi_from_pairs(4, {{0, 1}});
    fs.xi = {unit(4, 2), unit(4, 3)};
    fs.eta = derive_eta(G, fs.xi);
    fs.n = 1;
    fs.s = 2;
    return MetricFManifold("u2", std::move(L), std::move(G), std::move(fs));
}

MetricFManifold example_u3() {
    LieAlgebra L(9, {"X12", "Y12", "X13", "Y13", "X23", "Y23", "xi1", "xi2", "xi3"});
    // horizontal-horizontal
    L.set_bracket(0, 1, 6, Scalar(2));   // [X12,Y12] = 2(xi1 - xi2)
    L.set_bracket(0, 1, 7, Scalar(-2));
    L.set_bracket(2, 3, 6, Scalar(2));   // [X13,Y13] = 2(xi1 - xi3)
    L.set_bracket(2, 3, 8, Scalar(-2));
    L.set_bracket(4, 5, 7, Scalar(2));   // [X23,Y23] = 2(xi2 - xi3)
    L.set_bracket(4, 5, 8, Scalar(-2));
    L.set_bracket(0, 2, 4, Scalar(-1));  // [X12,X13] = -X23
    L.set_bracket(2, 4, 0, Scalar(-1));  // [X13,X23] = -X12
    L.set_bracket(1, 4, 3, Scalar(1));   // [X23,Y12] = -Y13
    L.set_bracket(0, 4, 2, Scalar(1));   // [X12,X23] = X13
    L.set_bracket(1, 2, 5, Scalar(1));   // [X13,Y12] = -Y23
    L.set_bracket(3, 4, 1, Scalar(-1));  // [X23,Y13] = Y12
    L.set_bracket(0, 3, 5, Scalar(-1));  // [X12,Y13] = -Y23
    L.set_bracket(2, 5, 1, Scalar(1));   // [X13,Y23] = Y12
    L.set_bracket(1, 3, 4, Scalar(-1));  // [Y12,Y13] = -X23
    L.set_bracket(0, 5, 3, Scalar(1));   // [X12,Y23] = Y13
    L.set_bracket(3, 5, 0, Scalar(-1));  // [Y13,Y23] = -X12
    L.set_bracket(1, 5, 2, Scalar(-1));  // [Y12,Y23] = -X13
    // horizontal-vertical
    L.set_bracket(0, 6, 1, Scalar(-1));  // [X12,xi1] = -Y12
    L.set_bracket(0, 7, 1, Scalar(1));   // [X12,xi2] = Y12
    L.set_bracket(2, 6, 3, Scalar(-1));  // [X13,xi1] = -Y13
    L.set_bracket(2, 8, 3, Scalar(1));   // [X13,xi3] = Y13
    L.set_bracket(4, 7, 5, Scalar(-1));  // [X23,xi2] = -Y23
    L.set_bracket(4, 8, 5, Scalar(1));   // [X23,xi3] = Y23
    L.set_bracket(1, 6, 0, Scalar(1));   // [Y12,xi1] = X12
    L.set_bracket(1, 7, 0, Scalar(-1));  // [Y12,xi2] = -X12
    L.set_bracket(3, 6, 2, Scalar(1));   // [Y13,xi1] = X13
    L.set_bracket(3, 8, 2, Scalar(-1));  // [Y13,xi3] = -X13
    L.set_bracket(5, 7, 4, Scalar(1));   // [Y23,xi2] = X23
    L.set_bracket(5, 8, 4, Scalar(-1));  // [Y23,xi3] = -X23

    Gram G(identity_gram(9));
    FStructureData fs;
    fs.phi = phi_from_pairs(9, {{0, 1}, {2, 3}, {4, 5}});
    fs.xi = {unit(9, 6), unit(9, 7), unit(9, 8)};
    fs.eta = derive_eta(G, fs.xi);
    fs.n = 3;
    fs.s = 3;
    return MetricFManifold("u3", std::move(L), std::move(G), std::move(fs));
}

MetricFManifold example_heisenberg(int n) {
    if (n < 1) throw std::invalid_argument("heisenberg: n >= 1 required");
    int dim = 2 * n + 1;
    std::vector<std::string> labels;
    for (int i = 1; i <= n; ++i) labels.push_back(n == 1 ? "X" : "X" + std::to_string(i));
    for (int i = 1; i <= n; ++i) labels.push_back(n == 1 ? "Y" : "Y" + std::to_string(i));
    labels.push_back("Z");
    LieAlgebra L(dim, labels);
    for (int i = 0; i < n; ++i) L.set_bracket(i, n + i, 2 * n, Scalar(1));

    std::vector<Scalar> d(dim, Scalar(1, 2));
    d[2 * n] = Scalar(1);
    Gram G(diag_gram(d));
    FStructureData fs;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, n + i});
    fs.phi = phi_from_pairs(dim, pairs);
    fs.xi = {unit(dim, 2 * n)};
    fs.eta = derive_eta(G, fs.xi);
    fs.n = n;
    fs.s = 1;
    std::string name = "h" + std::to_string(dim);
    return MetricFManifold(name, std::move(L), std::move(G), std::move(fs));
}

namespace {

MetricFManifold h3_t3_with_hadamard(const int H[4][4], const std::string& name) {
    // frame {X, Y, Z, zeta1, zeta2, zeta3}
    LieAlgebra L(6, {"X", "Y", "Z", "zeta1", "zeta2", "zeta3"});
    L.set_bracket(0, 1, 2, Scalar(1));
    std::vector<Scalar> d = {Scalar(1, 2), Scalar(1, 2), Scalar(4),
                             Scalar(1), Scalar(1), Scalar(1)};
    Gram G(diag_gram(d));
    FStructureData fs;
    fs.phi = phi_from_pairs(6, {{0, 1}});
    for (int i = 0; i < 4; ++i) {
        SVec xi(6);
        xi[2] = Scalar(1, 4);  // (1/2)(Z/2)
        for (int j = 1; j < 4; ++j) xi[2 + j] = Scalar(H[i][j], 2);
        fs.xi.push_back(xi);
    }
    fs.eta = derive_eta(G, fs.xi);
    fs.n = 1;
    fs.s = 4;
    return MetricFManifold(name, std::move(L), std::move(G), std::move(fs));
}

}  // namespace

MetricFManifold example_h3_t3() {
    static const int H[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, 1, -1, -1}, {1, -1, -1, 1}};
    return h3_t3_with_hadamard(H, "h3t3");
}

MetricFManifold example_h3_t3_alt() {
    static const int H[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}};
    return h3_t3_with_hadamard(H, "h3t3_alt");
}

MetricFManifold product_s_manifold(const MetricFManifold& N, int s_target) {
    if (s_target < 1) throw std::invalid_argument("product_s_manifold: s >= 1 required");
    {
        ClassificationReport c = classify(N);
        if (!(c.is_S && N.s() == 1))
            throw NotSasakian(N.name() + " is not a Sasakian (s=1) structure");
    }
    if (s_target == 1) return N;
    if (arithmetic_mode() == Mode::exact) {
        mpz_class s(s_target);
        if (!mpz_perfect_square_p(s.get_mpz_t()))
            throw ExactModeUnsupported(
                "product_s_manifold: s = " + std::to_string(s_target) +
                " is not a perfect square; the vertical splitting needs 1/sqrt(s)");
    }
    int base = N.dim();
    int dim = base + s_target - 1;
    std::vector<std::string> labels = N.L().labels();
    for (int j = 1; j < s_target; ++j) labels.push_back("zeta" + std::to_string(j));
    LieAlgebra L(dim, labels);
    for (int i = 0; i < base; ++i)
        for (int j = i + 1; j < base; ++j)
            for (int k = 0; k < base; ++k)
                if (!N.L().c(i, j, k).is_raw_zero()) L.set_bracket(i, j, k, N.L().c(i, j, k));

    const SVec& eta0 = N.fs().eta[0];
    Matrix g(dim, dim);
    Scalar sm1(s_target - 1);
    for (int a = 0; a < base; ++a)
        for (int b = 0; b < base; ++b)
            g.at(a, b) = N.G().g().at(a, b) + sm1 * eta0[a] * eta0[b];
    for (int j = base; j < dim; ++j) g.at(j, j) = Scalar(1);
    Gram G(std::move(g));

    FStructureData fs;
    fs.phi = Matrix(dim, dim);
    for (int a = 0; a < base; ++a)
        for (int b = 0; b < base; ++b) fs.phi.at(a, b) = N.fs().phi.at(a, b);

    // Householder reflection O = I - 2 w w^T / (w^T w), w = e_0 - (1/sqrt s, ...):
    // symmetric orthogonal with first column the constant vector.
    Scalar inv_sqrt_s = Scalar(1) / scalar_sqrt(Scalar(s_target));
    std::vector<Scalar> w(s_target, -inv_sqrt_s);
    w[0] += Scalar(1);
    Scalar wtw;
    for (const auto& x : w) wtw += x * x;
    auto O = [&](int i, int j) {
        Scalar v = Scalar(i == j ? 1 : 0) - Scalar(2) * w[i] * w[j] / wtw;
        return v;
    };
    // Z = old xi embedded; u0 = Z / sqrt(s), u_j = zeta_j.
    SVec Z(dim);
    for (int a = 0; a < base; ++a) Z[a] = N.fs().xi[0][a];
    for (int i = 0; i < s_target; ++i) {
        SVec xi(dim);
        Scalar c0 = O(i, 0) * inv_sqrt_s;
        for (int a = 0; a < base; ++a) xi[a] = c0 * Z[a];
        for (int j = 1; j < s_target; ++j) xi[base + j - 1] = O(i, j);
        fs.xi.push_back(xi);
    }
    fs.eta = derive_eta(G, fs.xi);
    fs.n = N.n();
    fs.s = s_target;
    std::string name = "product:" + N.name() + ":" + std::to_string(s_target);
    return MetricFManifold(name, std::move(L), std::move(G), std::move(fs));
}

MetricFManifold example_by_name(const std::string& name) {
    if (name == "u2") return example_u2();
    if (name == "u3") return example_u3();
    if (name == "h3") return example_heisenberg(1);
    if (name == "h5") return example_heisenberg(2);
    if (name == "h3t3") return example_h3_t3();
    if (name.rfind("product:", 0) == 0) {
        std::string rest = name.substr(8);
        auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("product syntax: product:<base>:<s>");
        std::string base = rest.substr(0, colon);
        int s = std::stoi(rest.substr(colon + 1));
        return product_s_manifold(example_by_name(base), s);
    }
    throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<std::string> example_names() { return {"u2", "u3", "h3", "h5", "h3t3", "product:h3:4"}; }

// ---------------------------------------------------------------------------
// Structure files
// ---------------------------------------------------------------------------

namespace {

using nlohmann::ordered_json;

ordered_json scalar_to_json(const Scalar& s) {
    if (s.exact()) return s.str();
    return s.dbl();
}

Scalar scalar_from_json(const ordered_json& j, const std::string& field) {
    try {
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
        if (j.is_number_integer()) return Scalar(j.get<long>());
        if (j.is_number_float()) return Scalar::from_double(j.get<double>());
    } catch (const ExactModeUnsupported&) {
        throw;
    } catch (const std::exception& e) {
        throw ParseError(field, e.what());
    }
    throw ParseError(field, "expected a rational string or a number");
}

}  // namespace

std::string structure_to_json(const MetricFManifold& M) {
    ordered_json j;
    j["name"] = M.name();
    j["dim"] = M.dim();
    j["labels"] = M.L().labels();
    bool all_exact = M.G().g().all_exact() && M.fs().phi.all_exact();
    for (const auto& x : M.fs().xi)
        for (const auto& v : x) all_exact = all_exact && v.exact();
    j["mode"] = all_exact ? "exact" : "float";
    ordered_json brackets = ordered_json::array();
    for (int i = 0; i < M.dim(); ++i)
        for (int jj = i + 1; jj < M.dim(); ++jj)
            for (int k = 0; k < M.dim(); ++k)
                if (!M.L().c(i, jj, k).is_raw_zero())
                    brackets.push_back({i, jj, k, scalar_to_json(M.L().c(i, jj, k))});
    j["brackets"] = brackets;
    ordered_json gram = ordered_json::array();
    for (int i = 0; i < M.dim(); ++i)
        for (int jj = i; jj < M.dim(); ++jj)
            if (!M.G().g().at(i, jj).is_raw_zero())
                gram.push_back({i, jj, scalar_to_json(M.G().g().at(i, jj))});
    j["gram"] = gram;
    ordered_json phi = ordered_json::array();
    for (int i = 0; i < M.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (int jj = 0; jj < M.dim(); ++jj) row.push_back(scalar_to_json(M.fs().phi.at(i, jj)));
        phi.push_back(row);
    }
    j["phi"] = phi;
    ordered_json xi = ordered_json::array();
    for (const auto& x : M.fs().xi) {
        int idx = -1;
        int nonzero = 0;
        for (int k = 0; k < M.dim(); ++k)
            if (!x[k].is_raw_zero()) {
                ++nonzero;
                idx = k;
            }
        if (nonzero == 1 && x[idx].exact() && x[idx].rat() == 1) {
            xi.push_back(idx);
        } else {
            ordered_json vec = ordered_json::array();
            for (const auto& v : x) vec.push_back(scalar_to_json(v));
            xi.push_back(vec);
        }
    }
    j["xi"] = xi;
    return j.dump(2) + "\n";
}

MetricFManifold structure_from_json(const std::string& text, std::vector<std::string>* warnings) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError("json", e.what());
    }
    auto require = [&](const char* field) -> const ordered_json& {
        if (!j.contains(field)) throw ParseError(field, "missing field");
        return j.at(field);
    };
    std::string name = require("name").get<std::string>();
    int dim = require("dim").get<int>();
    if (dim <= 0) throw ParseError("dim", "must be positive");
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    LieAlgebra L(dim, labels);

    // brackets: sparse triples; entries must be mutually antisymmetric.
    std::map<std::tuple<int, int, int>, Scalar> seen;
    for (const auto& e : require("brackets")) {
        if (!e.is_array() || e.size() != 4) throw ParseError("brackets", "entry must be [i,j,k,value]");
        int i = e[0].get<int>(), jj = e[1].get<int>(), k = e[2].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim || k < 0 || k >= dim)
            throw ParseError("brackets", "index out of range");
        Scalar v = scalar_from_json(e[3], "brackets");
        if (i == jj && !v.is_raw_zero())
            throw ParseError("brackets", "structconst not antisymmetric: c[i][i][k] != 0");
        auto key = std::make_tuple(std::min(i, jj), std::max(i, jj), k);
        Scalar canonical = i < jj ? v : -v;
        auto it = seen.find(key);
        if (it != seen.end()) {
            if (!(it->second - canonical).is_raw_zero())
                throw ParseError("brackets",
                                 "structconst not antisymmetric: conflicting c[i][j][k] entries");
            continue;
        }
        seen[key] = canonical;
        if (i != jj) L.set_bracket(std::get<0>(key), std::get<1>(key), k, canonical);
    }

    Matrix g(dim, dim);
    for (const auto& e : require("gram")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("gram", "entry must be [i,j,value]");
        int i = e[0].get<int>(), jj = e[1].get<int>();
        if (i < 0 || i >= dim || jj < 0 || jj >= dim) throw ParseError("gram", "index out of range");
        Scalar v = scalar_from_json(e[2], "gram");
        if (!g.at(i, jj).is_raw_zero() && !(g.at(i, jj) - v).is_raw_zero())
            throw ParseError("gram", "conflicting duplicate entries");
        g.at(i, jj) = v;
        g.at(jj, i) = v;
    }
    Gram G(std::move(g));  // throws SingularGram when not invertible

    const auto& phi_j = require("phi");
    if (!phi_j.is_array() || int(phi_j.size()) != dim) throw ParseError("phi", "need dim rows");
    Matrix phi(dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (int(phi_j[i].size()) != dim) throw ParseError("phi", "row length != dim");
        for (int jj = 0; jj < dim; ++jj) phi.at(i, jj) = scalar_from_json(phi_j[i][jj], "phi");
    }

    FStructureData fs;
    fs.phi = std::move(phi);
    for (const auto& e : require("xi")) {
        if (e.is_number_integer()) {
            int idx = e.get<int>();
            if (idx < 0 || idx >= dim) throw ParseError("xi", "index out of range");
            SVec v(dim);
            v[idx] = Scalar(1);
            fs.xi.push_back(v);
        } else if (e.is_array()) {
            if (int(e.size()) != dim) throw ParseError("xi", "vector length != dim");
            SVec v(dim);
            for (int k = 0; k < dim; ++k) v[k] = scalar_from_json(e[k], "xi");
            fs.xi.push_back(v);
        } else {
            throw ParseError("xi", "entry must be an index or a coefficient vector");
        }
    }
    fs.s = int(fs.xi.size());
    if ((dim - fs.s) % 2 != 0) throw ParseError("xi", "dim - s must be even (2n + s = dim)");
    fs.n = (dim - fs.s) / 2;
    fs.eta = derive_eta(G, fs.xi);

    MetricFManifold M(name, std::move(L), std::move(G), std::move(fs));
    ValidationReport val = validate_f_structure(M);
    if (!val.all_pass() && warnings) {
        for (const auto& c : val.checks)
            if (!c.pass)
                warnings->push_back("validation: " + c.name + " failed (defect " +
                                    std::to_string(c.defect) + ")");
    }
    return M;
}

void save_structure(const MetricFManifold& M, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << structure_to_json(M);
}

MetricFManifold load_structure(const std::string& path, std::vector<std::string>* warnings) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return structure_from_json(ss.str(), warnings);
}

}  // namespace fstruct
