#pragma once

#include <orbcc/chern.hpp>
#include <orbcc/model.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace orbcc {

enum class Theorem {
    TheoremA,
    RemarkForm,
    PlanePair,
    NodesCusps,
    NodalSurface,
    Nevanlinna,
    BogomolovStack,
    Jet2,
    Jet3,
};

std::string_view theorem_name(Theorem tag);
std::string_view theorem_description(Theorem tag);

/// Exact left-hand side of a positivity criterion together with its strict
/// verdict. holds <=> lhs > 0; boundary values fail.
struct CriterionVerdict {
    Theorem tag;
    Rational lhs;
    bool holds = false;
    // Denominator of the asymptotic normalization for the jet criteria
    // (1920 for order 2, 6531840 for order 3); absent otherwise.
    std::optional<long long> normalization;
};

/// Ramification multiplicities over points of the line.
struct NevanlinnaConfig {
    std::vector<Multiplicity> multiplicities;
};

/// Two smooth plane curves of degree d1, d2 >= 4 with normal crossings,
/// carrying multiplicities m1, m2.
struct PlanePairConfig {
    long long d1 = 4;
    long long d2 = 4;
    Multiplicity m1{2};
    Multiplicity m2{2};
};

/// The degeneracy criterion for smooth orbifold surfaces:
///   cbar1^2 - cbar2 - sum_i (1/m_i)(2g_i - 2 + sum_{j!=i} C_i.C_j)
///   + sum_{i<=j} C_i.C_j / (m_i m_j) > 0
/// (the double sum includes the diagonal terms C_i^2 / m_i^2).
CriterionVerdict theorem_a_lhs(const SmoothOrbifoldSurface& s);

/// The same criterion written in ambient Chern numbers:
///   d1^2 - d2 + 2 K_X.D + D^2 + chi(D) > 0, D = sum (1 - 1/m_i) C_i,
/// with chi(D) = sum (1 - 1/m_i) chi(C_i)
///              - sum_{i<j} (1 - 1/m_i)(1 - 1/m_j) C_i.C_j.
CriterionVerdict remark_form_lhs(const AmbientSurfaceData& amb);

/// c1^2 - c2 > 0 for the stack of a klt pair.
CriterionVerdict bogomolov_stack(const ChernNumbers& ch);

/// Specialized two-plane-curve criterion:
///   deg(D)^2 - deg(D)(d + 3) + d1 d2 (1 - 1/(m1 m2)) + 6 > 0,
/// deg(D) = (1 - 1/m1) d1 + (1 - 1/m2) d2, d = d1 + d2.
CriterionVerdict plane_pair_lhs(const PlanePairConfig& cfg);

/// The P^2 two-curve configuration as a SmoothOrbifoldSurface (genus of a
/// smooth degree-d curve, C_i^2 = d_i^2, C_1.C_2 = d1 d2, ambient (9, 3)).
/// Used to cross-check plane_pair_lhs against theorem_a_lhs.
SmoothOrbifoldSurface plane_pair_surface(const PlanePairConfig& cfg);

/// Node/cusp curve criterion: -d^2 - 15d + 75/2 + (1079/96)c + 6n > 0.
/// Multiplicity is fixed at 5, the largest klt value.
CriterionVerdict nodes_cusps_lhs(long long d, long long n, long long c);

/// Nodal surface criterion, reported as the Chern difference
///   (3/2)(l - (8/3)(d^2 - (5/2)d)) > 0.
CriterionVerdict nodal_surface_lhs(long long d, long long l);

/// sum (1 - 1/m_i) - 2 > 0.
CriterionVerdict nevanlinna_excess(const NevanlinnaConfig& cfg);

/// Leading coefficient of chi of the jet bundle of order k on a nodal
/// surface (numerator of the N^(2k+1) term):
///   k = 2: 15l/2 + 2d^3 - 36d^2 + 82d   (normalization 1920)
///   k = 3: 147l/2 + 36d^3 - 484d^2 + 1066d   (normalization 6531840)
CriterionVerdict jet_h0_coefficient(int k, long long d, long long l);

/// N^3 coefficient of chi of symmetric differential powers: (c1^2 - c2)/6.
Rational sym_chi_leading(const ChernNumbers& ch);

}  // namespace orbcc
