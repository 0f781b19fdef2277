#pragma once

#include <orbcc/model.hpp>

#include <vector>

namespace orbcc {

/// One stratum of the coarse space on which the ramification order of the
/// stack is constant.
struct Stratum {
    long long euler_char = 0;  // topological Euler characteristic
    Rational order = 1;        // local group / ramification order, > 0
};

/// A plane curve of degree d with n nodes and c cusps, carried with orbifold
/// multiplicity m. The pair is klt only for m <= 5; m = 5 is the published
/// regime, smaller m is exposed for exploration.
struct PlaneNodeCuspCurve {
    long long degree = 4;
    long long nodes = 0;
    long long cusps = 0;
    long long multiplicity = 5;
};

/// A nodal surface in P^3 of general type: degree d >= 5 with l nodes.
struct NodalSurface {
    long long degree = 5;
    long long nodes = 0;
};

struct LogChern {
    Rational c1_sq;
    Rational c2;
};

struct NormalizationGenus {
    long long genus = 0;
    long long euler_char = 0;  // 2 - 2g
};

/// Log Chern numbers of (X, sum C_i) from the ambient Chern numbers, via
/// adjunction K_X.C_i = 2g_i - 2 - C_i^2:
///   cbar1^2 = c1^2(X) + sum 2(2g_i - 2 - C_i^2) + (sum C_i)^2
///   cbar2   = c2(X) - sum (2 - 2g_i) + sum_{i<j} C_i.C_j
LogChern log_chern_from_ambient(const AmbientSurfaceData& amb);

/// Convenience: the SmoothOrbifoldSurface carrying the log Chern numbers of
/// the ambient data together with its components and intersections.
SmoothOrbifoldSurface surface_from_ambient(const AmbientSurfaceData& amb);

/// c1^2 of the stack over the pair:
///   cbar1^2 - 2 sum (1/m_i)(2g_i - 2) + sum C_i^2/m_i^2
///   + 2 sum_{i<j} C_i.C_j/(m_i m_j) - 2 sum_j sum_{i!=j} C_i.C_j/m_j
Rational stack_c1_sq(const SmoothOrbifoldSurface& s);

/// c2 of the stack over the pair:
///   cbar2 - sum (1/m_i)(2g_i - 2) - sum_j sum_{i!=j} C_i.C_j/m_j
///   + sum_{i<j} C_i.C_j/(m_i m_j)
Rational stack_c2(const SmoothOrbifoldSurface& s);

ChernNumbers stack_chern(const SmoothOrbifoldSurface& s);

/// Gauss-Bonnet over a stratification by constant ramification order:
/// integral of the top Chern class = sum chi(M_i) / m_i.
Rational gauss_bonnet(const std::vector<Stratum>& strata);

/// Order of the local group at a node of an m-multiplicity orbifold curve:
/// m^2. Requires m >= 2.
long long node_order(long long m);

/// Order of the local group at a cusp: (2/3) * (1/m - 1/6)^(-2).
/// Only valid in the klt range 2 <= m <= 5; the formula has a pole at m = 6.
Rational cusp_order(long long m);

/// Genus and Euler characteristic of the normalization of a plane curve of
/// degree d with n nodes and c cusps:
///   g = (d-1)(d-2)/2 - n - c,  chi = 2 - 2g.
/// Throws NegativeGenus for unrealizable configurations.
NormalizationGenus normalization_genus(long long d, long long n, long long c);

/// Stack Chern numbers for the orbifold (P^2, (1 - 1/m)C) with C a plane
/// node/cusp curve. c1^2 = (-3 + (1 - 1/m)d)^2; c2 via Gauss-Bonnet on the
/// strata {P^2 \ C, C \ Sing(C), nodes, cusps}.
ChernNumbers plane_nc_curve_chern(const PlaneNodeCuspCurve& cfg);

/// Stack Chern numbers of a nodal surface of degree d with l nodes:
/// c1^2 = d(d-4)^2, c2 = d(d^2 - 4d + 6) - 3l/2.
ChernNumbers nodal_surface_chern(const NodalSurface& cfg);

}  // namespace orbcc
