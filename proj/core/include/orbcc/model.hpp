#pragma once

#include <orbcc/errors.hpp>
#include <orbcc/rational.hpp>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace orbcc {

/// A branching multiplicity: a positive integer or infinity. The reciprocal
/// of infinity is 0, which realizes the logarithmic limit.
class Multiplicity {
public:
    explicit Multiplicity(long long value);
    static Multiplicity infinity();

    bool is_infinite() const { return !value_.has_value(); }
    long long value() const;  // finite multiplicities only
    Rational reciprocal() const;
    std::string str() const;  // "5" or "inf"

    friend bool operator==(const Multiplicity&, const Multiplicity&) = default;

private:
    Multiplicity() = default;
    std::optional<long long> value_;
};

/// Parses a decimal integer or "inf".
Multiplicity parse_multiplicity(std::string_view text);

/// An irreducible curve on the surface carrying an orbifold multiplicity.
struct CurveComponent {
    std::string label;
    long long genus = 0;  // genus of the smooth projective model, >= 0
    Multiplicity multiplicity{1};
};

/// Symmetric matrix of pairwise intersection numbers. Off-diagonal entries
/// are C_i.C_j >= 0; diagonal entries are self-intersections C_i^2 and may
/// be negative (exceptional curves of resolutions appear as components).
class IntersectionMatrix {
public:
    IntersectionMatrix() = default;
    explicit IntersectionMatrix(std::vector<std::vector<long long>> rows);

    std::size_t size() const { return n_; }
    long long at(std::size_t i, std::size_t j) const;

private:
    std::size_t n_ = 0;
    std::vector<long long> entries_;  // row-major n x n
};

/// A smooth orbifold surface configuration: log Chern numbers of the pair
/// plus the boundary components and their intersection numbers. Immutable
/// value type; all downstream operations are pure.
struct SmoothOrbifoldSurface {
    Rational log_c1_sq;
    Rational log_c2;
    std::vector<CurveComponent> components;
    IntersectionMatrix intersections;
};

/// Same boundary data but with the Chern numbers of the ambient surface X
/// instead of the log pair.
struct AmbientSurfaceData {
    Rational c1_sq;
    Rational c2;
    std::vector<CurveComponent> components;
    IntersectionMatrix intersections;
};

/// Chern numbers (c1^2, c2) of the stack over an orbifold pair.
struct ChernNumbers {
    Rational c1_sq;
    Rational c2;
};

/// Checks the shared invariants: matrix dimension matches the component
/// count, the matrix is symmetric, off-diagonal entries are nonnegative.
/// Returns its argument unchanged; throws naming the offending index.
const SmoothOrbifoldSurface& validate_surface(const SmoothOrbifoldSurface& cfg);
const AmbientSurfaceData& validate_ambient(const AmbientSurfaceData& cfg);

/// True when any component has infinite multiplicity (reports flag this;
/// such values are evaluated as the logarithmic limit 1/m = 0).
bool has_infinite_multiplicity(const std::vector<CurveComponent>& components);

}  // namespace orbcc
