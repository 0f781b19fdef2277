#include <orbcc/gg_oracle.hpp>

#include <orbcc/errors.hpp>

#include <numeric>

namespace orbcc {

long long Composition::weight() const {
    long long w = 0;
    for (std::size_t j = 0; j < parts.size(); ++j) {
        w += static_cast<long long>(j + 1) * parts[j];
    }
    return w;
}

CoeffForm& CoeffForm::operator+=(const CoeffForm& other) {
    alpha += other.alpha;
    beta += other.beta;
    gamma += other.gamma;
    return *this;
}

Rational evaluate(const CoeffForm& f, const Rational& c1_sq,
                  const Rational& c2, const Rational& chi_o) {
    return f.alpha * c1_sq + f.beta * c2 + f.gamma * chi_o;
}

std::string render_coeff_form(const CoeffForm& f) {
    std::string out;
    auto term = [&out](const Rational& coeff, const char* symbol) {
        if (coeff == 0) return;
        Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
        if (out.empty()) {
            if (coeff < 0) out += "-";
        } else {
            out += coeff < 0 ? " - " : " + ";
        }
        if (mag != 1) {
            out += render_rational(mag);
            out += "*";
        }
        out += symbol;
    };
    term(f.alpha, "c1^2");
    term(f.beta, "c2");
    term(f.gamma, "chi(O)");
    if (out.empty()) out = "0";
    return out;
}

namespace {

void build_compositions(int k, long long remaining, int position,
                        std::vector<long long>& parts,
                        std::vector<Composition>& out) {
    if (position == k - 1) {
        if (remaining % k == 0) {
            parts[position] = remaining / k;
            out.push_back(Composition{parts});
        }
        return;
    }
    long long w = position + 1;
    for (long long l = remaining / w; l >= 0; --l) {
        parts[position] = l;
        build_compositions(k, remaining - l * w, position + 1, parts, out);
    }
}

// Power sums of the line-bundle weight multiset {(p, q)}: t = count,
// s1 = sum p (= sum q by symmetry), s2 = sum p^2, s11 = sum pq.
struct PowerSums {
    Integer t = 1;
    Integer s1 = 0;
    Integer s2 = 0;
    Integer s11 = 0;
};

PowerSums symmetric_power_sums(long long l) {
    PowerSums ps;
    Integer L = l;
    ps.t = L + 1;
    ps.s1 = L * (L + 1) / 2;
    ps.s2 = L * (L + 1) * (2 * L + 1) / 6;
    ps.s11 = L * (L + 1) * (L - 1) / 6;
    return ps;
}

// Power sums of a tensor product: summands are pairwise sums, so the
// combined sums follow from independence and the p<->q symmetry of each
// factor.
PowerSums combine(const PowerSums& a, const PowerSums& b) {
    PowerSums c;
    c.t = a.t * b.t;
    c.s1 = a.s1 * b.t + a.t * b.s1;
    c.s2 = a.s2 * b.t + a.t * b.s2 + 2 * a.s1 * b.s1;
    c.s11 = a.s11 * b.t + a.t * b.s11 + 2 * a.s1 * b.s1;
    return c;
}

}  // namespace

std::vector<Composition> compositions(int k, long long N) {
    if (k < 1) {
        throw ValidationError("composition order must be >= 1");
    }
    if (N < 0) {
        throw ValidationError("composition weight must be >= 0");
    }
    std::vector<Composition> out;
    std::vector<long long> parts(static_cast<std::size_t>(k), 0);
    build_compositions(k, N, 0, parts, out);
    return out;
}

CoeffForm chi_graded_term(const Composition& comp) {
    PowerSums ps;
    for (long long l : comp.parts) {
        if (l < 0) throw ValidationError("composition parts must be >= 0");
        ps = combine(ps, symmetric_power_sums(l));
    }
    // (1/2)[(S2 - S1)(c1^2 - 2c2) + 2(S11 - S1)c2] + T chi(O)
    CoeffForm f;
    f.alpha = Rational(ps.s2 - ps.s1) / 2;
    f.beta = Rational(ps.s11 - ps.s2);
    f.gamma = Rational(ps.t);
    return f;
}

CoeffForm chi_jet_exact(int k, long long N) {
    CoeffForm total;
    for (const Composition& comp : compositions(k, N)) {
        total += chi_graded_term(comp);
    }
    return total;
}

namespace {

// Lagrange evaluation of the interpolating polynomial through (x_i, y_i).
Rational interpolate_at(const std::vector<Rational>& xs,
                        const std::vector<Rational>& ys, const Rational& x) {
    Rational result = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        Rational term = ys[i];
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            term *= (x - xs[j]) / (xs[i] - xs[j]);
        }
        result += term;
    }
    return result;
}

// Leading coefficient of the degree-D interpolant through equally spaced
// samples (spacing h): D-th forward difference / (D! h^D).
Rational leading_from_samples(const std::vector<Rational>& ys, long long h) {
    const std::size_t d = ys.size() - 1;
    Rational acc = 0;
    Rational binom = 1;
    for (std::size_t i = 0; i <= d; ++i) {
        Rational sign = ((d - i) % 2 == 0) ? 1 : -1;
        acc += sign * binom * ys[i];
        binom = binom * Rational(static_cast<long long>(d - i)) /
                Rational(static_cast<long long>(i + 1));
    }
    Rational denom = 1;
    for (std::size_t i = 2; i <= d; ++i) denom *= static_cast<long long>(i);
    Rational hp = 1;
    for (std::size_t i = 0; i < d; ++i) hp *= h;
    return acc / (denom * hp);
}

}  // namespace

LeadingCoefficient leading_coefficient(int k) {
    if (k < 1 || k > 4) {
        throw UnsupportedJetOrder("leading_coefficient supports 1 <= k <= 4, got " +
                                  std::to_string(k));
    }
    long long modulus = 1;
    for (long long j = 2; j <= k; ++j) modulus = std::lcm(modulus, j);
    const int degree = 2 * k + 1;
    const int fit_points = degree + 1;
    const int check_points = 2;

    bool have_leading = false;
    CoeffForm leading;
    for (long long r = 0; r < modulus; ++r) {
        std::vector<Rational> xs;
        std::vector<CoeffForm> ys;
        for (int t = 1; t <= fit_points + check_points; ++t) {
            long long n = r + modulus * t;
            xs.emplace_back(n);
            ys.push_back(chi_jet_exact(k, n));
        }

        // Verify that a degree-(2k+1) polynomial through the fit points
        // reproduces the extra samples, component by component.
        for (int component = 0; component < 3; ++component) {
            auto pick = [component](const CoeffForm& f) -> const Rational& {
                return component == 0 ? f.alpha
                       : component == 1 ? f.beta
                                        : f.gamma;
            };
            std::vector<Rational> fit_x(xs.begin(), xs.begin() + fit_points);
            std::vector<Rational> fit_y;
            for (int t = 0; t < fit_points; ++t) fit_y.push_back(pick(ys[t]));
            for (int t = fit_points; t < fit_points + check_points; ++t) {
                if (interpolate_at(fit_x, fit_y, xs[t]) != pick(ys[t])) {
                    throw DegreeMismatch(
                        "degree-" + std::to_string(degree) +
                        " fit fails verification at N = " +
                        render_rational(xs[t]) + " (residue class " +
                        std::to_string(r) + ")");
                }
            }
        }

        CoeffForm top;
        {
            std::vector<Rational> ya, yb, yg;
            for (int t = 0; t < fit_points; ++t) {
                ya.push_back(ys[t].alpha);
                yb.push_back(ys[t].beta);
                yg.push_back(ys[t].gamma);
            }
            top.alpha = leading_from_samples(ya, modulus);
            top.beta = leading_from_samples(yb, modulus);
            top.gamma = leading_from_samples(yg, modulus);
        }
        if (top.gamma != 0) {
            throw DegreeMismatch("chi(O) part survives in the top coefficient");
        }
        if (top.alpha == 0 && top.beta == 0) {
            throw DegreeMismatch("degree-" + std::to_string(degree) +
                                 " coefficient vanishes");
        }
        if (!have_leading) {
            leading = top;
            have_leading = true;
        } else if (!(top == leading)) {
            throw ClassDisagreement("residue class " + std::to_string(r) +
                                    " yields a different leading term");
        }
    }
    return {leading, degree};
}

namespace {

void build_monomials(int k, long long remaining, std::size_t cell,
                     std::vector<std::vector<long long>>& exponents,
                     const std::vector<Multiplicity>& mults,
                     std::vector<JetMonomial>& out) {
    const std::size_t n = exponents.size();
    if (cell == n * static_cast<std::size_t>(k)) {
        if (remaining != 0) return;
        JetMonomial mono{exponents, {}};
        mono.ceil_powers.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            long long w = 0;
            for (int j = 0; j < k; ++j) {
                w += static_cast<long long>(j + 1) * exponents[i][j];
            }
            long long m = mults[i].value();
            mono.ceil_powers.push_back((w + m - 1) / m);
        }
        out.push_back(std::move(mono));
        return;
    }
    std::size_t i = cell / k;
    std::size_t j = cell % k;
    long long w = static_cast<long long>(j) + 1;
    for (long long a = remaining / w; a >= 0; --a) {
        exponents[i][j] = a;
        build_monomials(k, remaining - a * w, cell + 1, exponents, mults, out);
    }
    exponents[i][j] = 0;
}

}  // namespace

std::pair<long long, std::vector<JetMonomial>> count_orbifold_jet_generators(
    int k, long long N, const std::vector<Multiplicity>& multiplicities) {
    if (k < 1) throw ValidationError("jet order must be >= 1");
    if (N < 0) throw ValidationError("weight must be >= 0");
    if (multiplicities.empty()) {
        throw ValidationError("need at least one variable");
    }
    for (const Multiplicity& m : multiplicities) {
        if (m.is_infinite()) {
            throw InvalidMultiplicity(
                "generator enumeration requires finite multiplicities");
        }
    }
    std::vector<JetMonomial> out;
    std::vector<std::vector<long long>> exponents(
        multiplicities.size(), std::vector<long long>(k, 0));
    build_monomials(k, N, 0, exponents, multiplicities, out);
    return {static_cast<long long>(out.size()), std::move(out)};
}

}  // namespace orbcc
