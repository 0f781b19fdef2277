#include <orbcc/criteria.hpp>

namespace orbcc {

std::string_view theorem_name(Theorem tag) {
    switch (tag) {
        case Theorem::TheoremA: return "TheoremA";
        case Theorem::RemarkForm: return "RemarkForm";
        case Theorem::PlanePair: return "PlanePair";
        case Theorem::NodesCusps: return "NodesCusps";
        case Theorem::NodalSurface: return "NodalSurface";
        case Theorem::Nevanlinna: return "Nevanlinna";
        case Theorem::BogomolovStack: return "BogomolovStack";
        case Theorem::Jet2: return "Jet2";
        case Theorem::Jet3: return "Jet3";
    }
    return "?";
}

std::string_view theorem_description(Theorem tag) {
    switch (tag) {
        case Theorem::TheoremA:
            return "degeneracy criterion for smooth orbifold surfaces of general type";
        case Theorem::RemarkForm:
            return "the smooth-surface criterion written in ambient Chern numbers";
        case Theorem::PlanePair:
            return "two smooth plane curves with orbifold multiplicities";
        case Theorem::NodesCusps:
            return "complement of a plane curve with nodes and cusps";
        case Theorem::NodalSurface:
            return "symmetric differentials on a nodal surface in P^3";
        case Theorem::Nevanlinna:
            return "ramified entire curves to the line: sum(1 - 1/m_i) > 2";
        case Theorem::BogomolovStack:
            return "c1^2 - c2 > 0 for the stack of a klt pair";
        case Theorem::Jet2:
            return "order-2 jet differentials on a nodal surface";
        case Theorem::Jet3:
            return "order-3 jet differentials on a nodal surface";
    }
    return "?";
}

namespace {

CriterionVerdict make_verdict(Theorem tag, Rational lhs,
                              std::optional<long long> normalization = {}) {
    bool holds = lhs > 0;  // strict: boundary values fail
    return {tag, std::move(lhs), holds, normalization};
}

}  // namespace

CriterionVerdict theorem_a_lhs(const SmoothOrbifoldSurface& s) {
    validate_surface(s);
    const auto& m = s.intersections;
    const std::size_t n = s.components.size();

    Rational lhs = s.log_c1_sq - s.log_c2;
    for (std::size_t i = 0; i < n; ++i) {
        long long cross = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i) cross += m.at(i, j);
        }
        lhs -= s.components[i].multiplicity.reciprocal() *
               (2 * s.components[i].genus - 2 + cross);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rational ei = s.components[i].multiplicity.reciprocal();
        for (std::size_t j = i; j < n; ++j) {
            Rational ej = s.components[j].multiplicity.reciprocal();
            lhs += m.at(i, j) * ei * ej;
        }
    }
    return make_verdict(Theorem::TheoremA, std::move(lhs));
}

CriterionVerdict remark_form_lhs(const AmbientSurfaceData& amb) {
    validate_ambient(amb);
    const auto& m = amb.intersections;
    const std::size_t n = amb.components.size();

    std::vector<Rational> a(n);  // orbifold coefficients 1 - 1/m_i
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = 1 - amb.components[i].multiplicity.reciprocal();
    }

    Rational k_dot_delta = 0;  // K_X . D via adjunction
    Rational delta_sq = 0;
    Rational chi_delta = 0;
    for (std::size_t i = 0; i < n; ++i) {
        long long g = amb.components[i].genus;
        k_dot_delta += a[i] * (2 * g - 2 - m.at(i, i));
        chi_delta += a[i] * (2 - 2 * g);
        for (std::size_t j = 0; j < n; ++j) {
            delta_sq += a[i] * a[j] * m.at(i, j);
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            chi_delta -= a[i] * a[j] * m.at(i, j);
        }
    }
    Rational lhs =
        amb.c1_sq - amb.c2 + 2 * k_dot_delta + delta_sq + chi_delta;
    return make_verdict(Theorem::RemarkForm, std::move(lhs));
}

CriterionVerdict bogomolov_stack(const ChernNumbers& ch) {
    return make_verdict(Theorem::BogomolovStack, ch.c1_sq - ch.c2);
}

CriterionVerdict plane_pair_lhs(const PlanePairConfig& cfg) {
    if (cfg.d1 < 4 || cfg.d2 < 4) {
        throw ValidationError("plane pair needs degrees >= 4");
    }
    Rational deg_delta = (1 - cfg.m1.reciprocal()) * cfg.d1 +
                         (1 - cfg.m2.reciprocal()) * cfg.d2;
    long long d = cfg.d1 + cfg.d2;
    Rational lhs = deg_delta * deg_delta - deg_delta * (d + 3) +
                   cfg.d1 * cfg.d2 *
                       (1 - cfg.m1.reciprocal() * cfg.m2.reciprocal()) +
                   6;
    return make_verdict(Theorem::PlanePair, std::move(lhs));
}

SmoothOrbifoldSurface plane_pair_surface(const PlanePairConfig& cfg) {
    auto genus = [](long long d) { return (d - 1) * (d - 2) / 2; };
    AmbientSurfaceData amb{
        Rational(9),
        Rational(3),
        {{"C1", genus(cfg.d1), cfg.m1}, {"C2", genus(cfg.d2), cfg.m2}},
        IntersectionMatrix({{cfg.d1 * cfg.d1, cfg.d1 * cfg.d2},
                            {cfg.d1 * cfg.d2, cfg.d2 * cfg.d2}}),
    };
    return surface_from_ambient(amb);
}

CriterionVerdict nodes_cusps_lhs(long long d, long long n, long long c) {
    if (d < 4) {
        throw ValidationError("node/cusp criterion needs degree >= 4, got " +
                              std::to_string(d));
    }
    normalization_genus(d, n, c);  // realizability check
    Rational lhs = -d * d - 15 * d + Rational(75, 2) +
                   Rational(1079, 96) * c + 6 * n;
    return make_verdict(Theorem::NodesCusps, std::move(lhs));
}

CriterionVerdict nodal_surface_lhs(long long d, long long l) {
    ChernNumbers ch = nodal_surface_chern({d, l});
    return make_verdict(Theorem::NodalSurface, ch.c1_sq - ch.c2);
}

CriterionVerdict nevanlinna_excess(const NevanlinnaConfig& cfg) {
    if (cfg.multiplicities.empty()) {
        throw ValidationError("nevanlinna criterion needs at least one multiplicity");
    }
    Rational lhs = -2;
    for (const Multiplicity& m : cfg.multiplicities) {
        lhs += 1 - m.reciprocal();
    }
    return make_verdict(Theorem::Nevanlinna, std::move(lhs));
}

CriterionVerdict jet_h0_coefficient(int k, long long d, long long l) {
    if (k != 2 && k != 3) {
        throw UnsupportedJetOrder("jet criterion is available for orders 2 and 3, got " +
                                  std::to_string(k));
    }
    ChernNumbers ch = nodal_surface_chern({d, l});
    if (k == 2) {
        return make_verdict(Theorem::Jet2, 7 * ch.c1_sq - 5 * ch.c2, 1920);
    }
    return make_verdict(Theorem::Jet3, 85 * ch.c1_sq - 49 * ch.c2, 6531840);
}

Rational sym_chi_leading(const ChernNumbers& ch) {
    return (ch.c1_sq - ch.c2) / 6;
}

}  // namespace orbcc
