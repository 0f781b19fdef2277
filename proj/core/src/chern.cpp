#include <orbcc/chern.hpp>

namespace orbcc {

LogChern log_chern_from_ambient(const AmbientSurfaceData& amb) {
    validate_ambient(amb);
    const auto& m = amb.intersections;
    const std::size_t n = amb.components.size();

    Rational c1 = amb.c1_sq;
    for (std::size_t i = 0; i < n; ++i) {
        c1 += 2 * (2 * amb.components[i].genus - 2 - m.at(i, i));
    }
    // (sum C_i)^2 expanded via the intersection matrix.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            c1 += m.at(i, j);
        }
    }

    Rational c2 = amb.c2;
    for (std::size_t i = 0; i < n; ++i) {
        c2 -= 2 - 2 * amb.components[i].genus;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            c2 += m.at(i, j);
        }
    }
    return {c1, c2};
}

SmoothOrbifoldSurface surface_from_ambient(const AmbientSurfaceData& amb) {
    LogChern lc = log_chern_from_ambient(amb);
    return {lc.c1_sq, lc.c2, amb.components, amb.intersections};
}

Rational stack_c1_sq(const SmoothOrbifoldSurface& s) {
    validate_surface(s);
    const auto& m = s.intersections;
    const std::size_t n = s.components.size();

    Rational r = s.log_c1_sq;
    for (std::size_t i = 0; i < n; ++i) {
        Rational e = s.components[i].multiplicity.reciprocal();
        r -= 2 * e * (2 * s.components[i].genus - 2);
        r += m.at(i, i) * e * e;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational ei = s.components[i].multiplicity.reciprocal();
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational ej = s.components[j].multiplicity.reciprocal();
            r += 2 * m.at(i, j) * ei * ej;
        }
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational ej = s.components[j].multiplicity.reciprocal();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            r -= 2 * m.at(i, j) * ej;
        }
    }
    return r;
}

Rational stack_c2(const SmoothOrbifoldSurface& s) {
    validate_surface(s);
    const auto& m = s.intersections;
    const std::size_t n = s.components.size();

    Rational r = s.log_c2;
    for (std::size_t i = 0; i < n; ++i) {
        Rational e = s.components[i].multiplicity.reciprocal();
        r -= e * (2 * s.components[i].genus - 2);
    }
    for (std::size_t j = 0; j < n; ++j) {
        Rational ej = s.components[j].multiplicity.reciprocal();
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            r -= m.at(i, j) * ej;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational ei = s.components[i].multiplicity.reciprocal();
        for (std::size_t j = i + 1; j < n; ++j) {
            Rational ej = s.components[j].multiplicity.reciprocal();
            r += m.at(i, j) * ei * ej;
        }
    }
    return r;
}

ChernNumbers stack_chern(const SmoothOrbifoldSurface& s) {
    return {stack_c1_sq(s), stack_c2(s)};
}

Rational gauss_bonnet(const std::vector<Stratum>& strata) {
    if (strata.empty()) {
        throw EmptyStratification("gauss_bonnet requires at least one stratum");
    }
    Rational r = 0;
    for (const Stratum& st : strata) {
        if (st.order <= 0) {
            throw ValidationError("stratum order must be positive");
        }
        r += Rational(st.euler_char) / st.order;
    }
    return r;
}

long long node_order(long long m) {
    if (m < 2) {
        throw InvalidMultiplicity("node order needs m >= 2, got " +
                                  std::to_string(m));
    }
    return m * m;
}

Rational cusp_order(long long m) {
    if (m < 2 || m > 5) {
        throw OutsideKltRange("cusp order is only defined for 2 <= m <= 5, got " +
                              std::to_string(m));
    }
    Rational inner = Rational(1, m) - Rational(1, 6);
    return Rational(2, 3) / (inner * inner);
}

NormalizationGenus normalization_genus(long long d, long long n, long long c) {
    long long g = (d - 1) * (d - 2) / 2 - n - c;
    if (g < 0) {
        throw NegativeGenus("degree " + std::to_string(d) + " with " +
                            std::to_string(n) + " nodes and " +
                            std::to_string(c) +
                            " cusps is not realizable (genus " +
                            std::to_string(g) + ")");
    }
    return {g, 2 - 2 * g};
}

ChernNumbers plane_nc_curve_chern(const PlaneNodeCuspCurve& cfg) {
    if (cfg.degree < 4) {
        throw ValidationError("plane node/cusp curve needs degree >= 4, got " +
                              std::to_string(cfg.degree));
    }
    if (cfg.nodes < 0 || cfg.cusps < 0) {
        throw ValidationError("node and cusp counts must be nonnegative");
    }
    if (cfg.multiplicity < 2 || cfg.multiplicity > 5) {
        throw OutsideKltRange("the pair is klt only for 2 <= m <= 5, got " +
                              std::to_string(cfg.multiplicity));
    }

    const long long m = cfg.multiplicity;
    NormalizationGenus ng =
        normalization_genus(cfg.degree, cfg.nodes, cfg.cusps);

    Rational c1 = Rational(-3) + (1 - Rational(1, m)) * cfg.degree;
    c1 *= c1;

    // chi(C \ Sing): the normalization identifies two points per node and
    // one per cusp; chi(C) regains one point per singularity.
    long long chi_smooth = ng.euler_char - 2 * cfg.nodes - cfg.cusps;
    long long chi_curve = chi_smooth + cfg.nodes + cfg.cusps;
    std::vector<Stratum> strata{
        {3 - chi_curve, Rational(1)},
        {chi_smooth, Rational(m)},
        {cfg.nodes, Rational(node_order(m))},
        {cfg.cusps, cusp_order(m)},
    };
    return {c1, gauss_bonnet(strata)};
}

ChernNumbers nodal_surface_chern(const NodalSurface& cfg) {
    if (cfg.degree < 5) {
        throw ValidationError("nodal surface of general type needs degree >= 5, got " +
                              std::to_string(cfg.degree));
    }
    if (cfg.nodes < 0) {
        throw ValidationError("node count must be nonnegative");
    }
    const long long d = cfg.degree;
    Rational c1 = d * (d - 4) * (d - 4);
    Rational c2 = d * (d * d - 4 * d + 6) - Rational(3 * cfg.nodes, 2);
    return {c1, c2};
}

}  // namespace orbcc
