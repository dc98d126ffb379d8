#pragma once

#include <string>
#include <vector>

#include "fstruct/manifold.hpp"

namespace fstruct {

/// U(2) with the orthonormal frame {X12, Y12, xi1, xi2}: an S-manifold of
/// CR-codimension 2.
MetricFManifold example_u2();

/// U(3) with the orthonormal frame {X12, Y12, X13, Y13, X23, Y23, xi1..xi3}:
/// normal, Killing Reeb fields, F not closed.
MetricFManifold example_u3();

/// H_{2n+1} with g(X_i,X_i) = g(Y_i,Y_i) = 1/2, g(Z,Z) = 1, phi(X_i) = Y_i,
/// xi = Z: the standard Sasakian structure.
MetricFManifold example_heisenberg(int n);

/// H3 x T^3 with h(Z,Z) = 4 and the Hadamard vertical splitting
/// xi_i = (1/2)(Z/2 + sum_j h_ij zeta_j): an S-manifold with s = 4.
MetricFManifold example_h3_t3();
/// Same structure under a different Hadamard sign choice (frame-independence
/// checks).
MetricFManifold example_h3_t3_alt();

/// Dileo-Lotta product: rescale g1(xi,xi) = s, adjoin an abelian factor of
/// dimension s-1, split Z = sum xi_i through the Householder orthogonal
/// matrix with first column (1/sqrt(s), ...). Exact mode needs s a perfect
/// square; float mode handles every s >= 1.
MetricFManifold product_s_manifold(const MetricFManifold& N, int s_target);

/// CLI names: u2 | u3 | h3 | h5 | h3t3 | product:<base>:<s>.
MetricFManifold example_by_name(const std::string& name);
std::vector<std::string> example_names();

/// Canonical UTF-8 JSON structure files; byte-exact round-trip in exact mode.
std::string structure_to_json(const MetricFManifold& M);
MetricFManifold structure_from_json(const std::string& text,
                                    std::vector<std::string>* warnings = nullptr);
void save_structure(const MetricFManifold& M, const std::string& path);
MetricFManifold load_structure(const std::string& path,
                               std::vector<std::string>* warnings = nullptr);

}  // namespace fstruct
