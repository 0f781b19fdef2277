#pragma once

#include <orbcc/model.hpp>

#include <utility>
#include <vector>

namespace orbcc {

/// A weighted composition (l_1, ..., l_k): the graded pieces of the jet
/// bundle of order k and weight N are S^{l_1}Omega x ... x S^{l_k}Omega over
/// all tuples with l_1 + 2 l_2 + ... + k l_k = N.
struct Composition {
    std::vector<long long> parts;

    long long order() const { return static_cast<long long>(parts.size()); }
    long long weight() const;

    friend bool operator==(const Composition&, const Composition&) = default;
};

/// A linear form alpha*c1^2 + beta*c2 + gamma*chi(O) with exact rational
/// coefficients.
struct CoeffForm {
    Rational alpha;
    Rational beta;
    Rational gamma;

    friend bool operator==(const CoeffForm&, const CoeffForm&) = default;
    CoeffForm& operator+=(const CoeffForm& other);
};

Rational evaluate(const CoeffForm& f, const Rational& c1_sq,
                  const Rational& c2, const Rational& chi_o);

/// Renders e.g. "7/1920*c1^2 - 1/384*c2 + 3*chi(O)"; zero terms are
/// dropped, a zero form renders as "0".
std::string render_coeff_form(const CoeffForm& f);

/// All compositions of weight N with parts up to order k, in decreasing
/// lexicographic order: compositions(2, 3) = [(3,0), (1,1)].
std::vector<Composition> compositions(int k, long long N);

/// Exact Euler characteristic of S^{l_1}Omega x ... x S^{l_k}Omega on a
/// surface via the splitting principle. With line-bundle summands of class
/// p*a + q*b (a, b the Chern roots of Omega) and power sums S1 = sum p,
/// S2 = sum p^2, S11 = sum pq, T = summand count:
///   (1/2)[(S2 - S1)(c1^2 - 2 c2) + 2 (S11 - S1) c2] + T * chi(O).
CoeffForm chi_graded_term(const Composition& comp);

/// chi of the full jet bundle of order k and weight N: the sum of
/// chi_graded_term over compositions(k, N).
CoeffForm chi_jet_exact(int k, long long N);

struct LeadingCoefficient {
    CoeffForm form;  // gamma is always 0 here
    int degree = 0;  // 2k + 1
};

/// Extracts the leading N^(2k+1) coefficient of chi_jet_exact(k, .) by exact
/// polynomial interpolation per residue class of N modulo lcm(1..k), with
/// verification samples. Throws DegreeMismatch if a fit fails its check
/// points (or the top coefficient has a chi(O) part), ClassDisagreement if
/// the residue classes disagree. Supported for 1 <= k <= 4.
LeadingCoefficient leading_coefficient(int k);

/// A local generator of the orbifold jet differential sheaf: the exponent
/// matrix alpha[i][j] (variable i, derivative order j) and the ceiling
/// powers ceil((alpha_{i,1} + 2 alpha_{i,2} + ... + k alpha_{i,k}) / m_i).
struct JetMonomial {
    std::vector<std::vector<long long>> exponents;  // n rows, k columns
    std::vector<long long> ceil_powers;             // one per variable
};

/// Enumerates all exponent matrices of weighted degree N in n variables
/// (n = multiplicities.size(), all finite). The count is the rank of the
/// jet bundle of order k and weight N.
std::pair<long long, std::vector<JetMonomial>> count_orbifold_jet_generators(
    int k, long long N, const std::vector<Multiplicity>& multiplicities);

}  // namespace orbcc
