#pragma once

#include "ckgeom/tensors.hpp"

#include <utility>

namespace ckgeom {

// ---------------------------------------------------------------------------
// Connections and curvature
// ---------------------------------------------------------------------------

/// Ric_ij = sum_k [ (G^k_ij)_k - (G^k_kj)_i ] + sum_{k,l} [ G^l_ij G^k_kl - G^l_kj G^k_il ].
Bilinear ricci(const Connection& c);

/// First-order part sum_k [ (G^k_ij)_k - (G^k_kj)_i ] of the Ricci tensor.
Bilinear ricci_derivative_part(const Connection& c);

/// Lambda_ij = sum_{k,l} [ G^l_kj G^k_il - G^l_ij G^k_kl ], so that
/// ricci = ricci_derivative_part - lambda_term.
Bilinear lambda_term(const Connection& c);

/// T^k_ij = G^k_ij - G^k_ji.
TorsionTensor torsion(const Connection& c);

/// tau_j = sum_i (G^i_ij - G^i_ji).
OneForm torsion_trace(const Connection& c);

/// D_j = sum_k G^k_kj.
OneForm divergence_form(const Connection& c);

/// b = s + a with s symmetric and a antisymmetric.
std::pair<Bilinear, TwoForm> split(const Bilinear& b);

// ---------------------------------------------------------------------------
// Exterior calculus on jets
//
// Closedness and primitives are stated as raw coefficient identities, so no
// normalisation convention for d enters.
// ---------------------------------------------------------------------------

/// True iff (a_ij)_k + (a_jk)_i + (a_ki)_j vanishes up to total degree
/// `order` for every i < j < k.
bool two_form_closed(const TwoForm& a, int order);

/// True iff (d_i)_j == (d_j)_i up to total degree `order`.
bool one_form_closed(const OneForm& d, int order);

/// alpha with (alpha_i)_j - (alpha_j)_i = 2 a_ij, from the radial homotopy
/// operator: a monomial of degree m in a_ji contributes 2 x^i / (m + 2) to
/// alpha_j. Throws PreconditionError("not-closed") when a fails the closedness
/// test below its valid order.
OneForm primitive_of_two_form(const TwoForm& a);

/// f with (f)_k = d_k and f(0) = 0 (a monomial of degree m in d_i contributes
/// x^i / (m + 1)). Throws PreconditionError("not-closed") for non-closed d.
Jet potential_of_one_form(const OneForm& d);

/// (f)_k.
OneForm gradient(const Jet& f);

/// a_ij = ((beta_i)_j - (beta_j)_i) / 2: the antisymmetrised derivative.
TwoForm antisymmetrized_derivative(const OneForm& beta);

// ---------------------------------------------------------------------------
// Metrics
// ---------------------------------------------------------------------------

/// (nabla g)_ijk = (g_jk)_i - sum_l G^l_ij g_lk - sum_l G^l_ik g_jl.
CubicForm nabla_g(const Connection& c, const Metric& g);

/// Codazzi test on the reduced index set i < j, i <= k:
/// (nabla g)_ijk == (nabla g)_jik up to total degree `order`.
bool is_codazzi(const Connection& c, const Metric& g, int order);

/// Full test: the cubic form is invariant under every permutation of its
/// slots up to total degree `order`.
bool is_totally_symmetric(const CubicForm& t, int order);

/// Levi-Civita connection, with g^{-1} computed by jet Gauss-Jordan
/// elimination pivoting on constant terms.
Connection levi_civita(const Metric& g);

/// Closed-form Levi-Civita symbols of a diagonal 2D metric.
Connection levi_civita_diagonal_2d(const Metric& g);

/// Sectional curvature f of a diagonal 2D metric, Ric = f g.
Jet sectional_curvature_2d(const Metric& g);

/// Derivatives of a diagonal 2D metric entering the curvature formula.
/// Separated out so callers can isolate the (g_22)_11 contribution.
struct DiagonalMetricJets {
    Jet g11, g22;
    Jet g11_1, g11_2, g22_1, g22_2;
    Jet g11_22, g22_11;
};

/// f = -1/2 g^11 g^22 [(g11)_22 + (g22)_11]
///     + 1/4 g^11 (g^22)^2 [(g22)_2 (g11)_2 + ((g22)_1)^2]
///     + 1/4 (g^11)^2 g^22 [(g11)_1 (g22)_1 + ((g11)_2)^2].
Jet sectional_curvature_from_parts(const DiagonalMetricJets& parts);

/// t_k = G^1_k1 + G^2_k2: the 1-form with nabla_k nu = (d_k nu_12 - t_k nu_12) dx1^dx2.
OneForm volume_trace_form_2d(const Connection& c);

/// nu_12 with (nu_12)_k = t_k nu_12 and nu_12(0) = 1. Throws
/// PreconditionError("ricci-not-symmetric") when t is not closed.
Jet parallel_volume_2d(const Connection& c);

} // namespace ckgeom
