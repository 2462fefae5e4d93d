#pragma once

#include "riccheck/geom/fields.hpp"

namespace riccheck::geom {

// Curvature and derivative operators in jet arithmetic. Each consumes jets of
// some order r and returns jets of a lower order; the drop equals the number
// of coordinate derivatives the operator takes (1 for Christoffel symbols,
// 2 for curvature). Callers choose the input order so that the result still
// carries whatever derivative depth they need.

// Gamma^k_ij, indexed (k, i, j); input order >= 1.
JetR3 christoffel(const JetMat& g);

// Ric_ij; input order >= 2. Sign convention: the round unit sphere has
// positive Ricci curvature.
JetMat ricci(const JetMat& g);

Jet scalar_curvature(const JetMat& g);

// Coordinate differential df, one order lower.
JetVec differential(const Jet& f);

// Covariant Hessian (nabla df)_ij.
JetMat hessian(const Jet& f, const JetMat& g);

// trace_g of the Hessian.
Jet laplacian(const Jet& f, const JetMat& g);

// grad f = (df)^sharp.
JetVec gradient(const Jet& f, const JetMat& g);

// div w = trace of nabla w.
Jet divergence(const JetVec& w, const JetMat& g);

// (L_w g)_ij.
JetMat lie_derivative_metric(const JetVec& w, const JetMat& g);

// (div T)_j = g^{ik} (nabla_i T)_{kj} for symmetric T.
JetVec divergence_sym2(const JetMat& t, const JetMat& g);

// (nabla_k A)^i_j for a (1,1)-tensor A, indexed (k, i, j).
JetR3 covariant_derivative_endo(const JetMat& a, const JetMat& g);

// [v, w]^i = v^k d_k w^i - w^k d_k v^i.
JetVec commutator(const JetVec& v, const JetVec& w);

// (da)_ij = d_i a_j - d_j a_i for a 1-form a.
JetMat exterior_derivative_oneform(const JetVec& a);

// (a wedge b)_ij = a_i b_j - a_j b_i.
JetMat wedge(const JetVec& a, const JetVec& b);

// Symmetric product: (a . b)_ij = (a_i b_j + a_j b_i) / 2.
JetMat sym_product(const JetVec& a, const JetVec& b);

// (i_w om)_j = w^i om_ij.
JetVec interior_product(const JetVec& w, const JetMat& om);

JetVec lower_index(const JetVec& w, const JetMat& g);
JetVec raise_index(const JetVec& a, const JetMat& ginv);

// |a wedge b| in coordinates: sqrt(|a|^2 |b|^2 - (a.b)^2). Zero iff the
// covectors are pointwise linearly dependent.
double functional_dependence_defect(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

// g(v, w) and g^{-1}(a, b).
Jet inner_vec(const JetVec& v, const JetVec& w, const JetMat& g);
Jet inner_covec(const JetVec& a, const JetVec& b, const JetMat& ginv);

// Pointwise norms on value matrices. metric_op_norm is the operator norm of
// a symmetric bilinear form measured against g (largest generalized
// eigenvalue magnitude); bilinear_norm = sqrt(g^{ik} g^{jl} T_ij T_kl) works
// for any 2-tensor; endo_norm = sqrt(g_ik g^{jl} A^i_j A^k_l).
double sup_norm(const Eigen::MatrixXd& t);
double sup_norm(const Eigen::VectorXd& v);
double metric_op_norm(const Eigen::MatrixXd& t, const Eigen::MatrixXd& g);
double bilinear_norm(const Eigen::MatrixXd& t, const Eigen::MatrixXd& g);
double endo_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& g);
double covector_norm(const Eigen::VectorXd& a, const Eigen::MatrixXd& g);
double vector_norm(const Eigen::VectorXd& v, const Eigen::MatrixXd& g);

}  // namespace riccheck::geom
