#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qwalk/digraph.hpp"
#include "qwalk/op_matrix.hpp"

namespace qwalk {

/// Vertices of positive degree, ascending. Rows of K and of the normalized
/// matrix use this index set.
std::vector<int> active_vertices(const Digraph& g);

// Every builder has an overload taking the arc index explicitly; the short
// forms use SymmetricArcIndex(g). Builders that need a coin reject a digraph
// without arcs.

/// K: vertex x arc, K_{v,a} = delta_{v,t(a)} / sqrt(deg t(a)), stored as
/// diag(deg)^{-1/2} times a 0/1 core.
SqrtScaledMatrix build_K(const Digraph& g, const SymmetricArcIndex& index);
SqrtScaledMatrix build_K(const Digraph& g);

/// Grover coin C = 2 K^* K - I.
OpMatrix build_C(const Digraph& g, const SymmetricArcIndex& index);
OpMatrix build_C(const Digraph& g);

/// (S_theta)_{ab} = e^{i theta(b)} delta_{a, b^{-1}}.
OpMatrix build_S_theta(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta);
OpMatrix build_S_theta(const Digraph& g, const Angle& eta);

/// (D_theta)_{aa} = e^{i theta(a)}.
OpMatrix build_D_theta(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta);
OpMatrix build_D_theta(const Digraph& g, const Angle& eta);

/// Plain shift S(G^pm): S_{ab} = delta_{a, b^{-1}}.
OpMatrix build_S(const Digraph& g, const SymmetricArcIndex& index);
OpMatrix build_S(const Digraph& g);

/// U_theta = S_theta C.
OpMatrix build_U_theta(const Digraph& g, const SymmetricArcIndex& index, const Angle& eta);
OpMatrix build_U_theta(const Digraph& g, const Angle& eta);

/// Grover transfer matrix of G^pm from the closed form
/// U_{ab} = 2/deg t(b) delta_{t(b), o(a)} - delta_{a, b^{-1}}.
OpMatrix build_grover_U(const Digraph& g, const SymmetricArcIndex& index);
OpMatrix build_grover_U(const Digraph& g);

/// eta-Hermitian adjacency matrix on all vertices.
OpMatrix build_H_eta(const Digraph& g, const Angle& eta);
/// Hermitian adjacency matrix H = H_{pi/2}.
OpMatrix build_H(const Digraph& g);
/// Normalized D^{-1/2} H_eta D^{-1/2} on the active vertices.
SqrtScaledMatrix build_H_tilde(const Digraph& g, const Angle& eta);
/// Degree matrix on all vertices.
OpMatrix build_D(const Digraph& g);

/// Incidence matrices (F_t)_{x,a} = delta_{x,t(a)} and (F_o)_{x,a} = delta_{x,o(a)}.
std::pair<OpMatrix, OpMatrix> build_F(const Digraph& g, const SymmetricArcIndex& index);
std::pair<OpMatrix, OpMatrix> build_F(const Digraph& g);

/// R_{ab} = 1 iff (t(b), o(a)) is an arc of a digon of G.
OpMatrix build_R(const Digraph& g, const SymmetricArcIndex& index);
OpMatrix build_R(const Digraph& g);

/// Theta-twisted route for k-regular digraphs: D_theta^{-1} (2/k F_o^T F_t - S).
OpMatrix build_U_theta_regular(const Digraph& g, const SymmetricArcIndex& index,
                               const Angle& eta);

/// Row-major dump, one row per line, entries separated by " | ".
/// With `with_float`, each entry is followed by its floating value.
std::string dump_matrix(const OpMatrix& m, bool with_float = false);
/// Entries rendered as "core/sqrt(r*c)" whenever the scale is not a square.
std::string dump_matrix(const SqrtScaledMatrix& m, bool with_float = false);

}  // namespace qwalk
