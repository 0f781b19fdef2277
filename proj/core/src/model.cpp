#include <orbcc/model.hpp>

#include <algorithm>

namespace orbcc {

Multiplicity::Multiplicity(long long value) : value_(value) {
    if (value < 1) {
        throw InvalidMultiplicity("multiplicity must be >= 1, got " +
                                  std::to_string(value));
    }
}

Multiplicity Multiplicity::infinity() {
    return Multiplicity{};
}

long long Multiplicity::value() const {
    if (!value_) {
        throw InvalidMultiplicity("infinite multiplicity has no finite value");
    }
    return *value_;
}

Rational Multiplicity::reciprocal() const {
    if (!value_) return Rational(0);
    return Rational(1, *value_);
}

std::string Multiplicity::str() const {
    return value_ ? std::to_string(*value_) : "inf";
}

Multiplicity parse_multiplicity(std::string_view text) {
    if (text == "inf") return Multiplicity::infinity();
    std::string s(text);
    try {
        std::size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return Multiplicity(v);
    } catch (const InvalidMultiplicity&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("not a multiplicity: \"" + s + "\"");
    }
}

IntersectionMatrix::IntersectionMatrix(std::vector<std::vector<long long>> rows)
    : n_(rows.size()) {
    entries_.reserve(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (rows[i].size() != n_) {
            throw DimensionMismatch("intersection matrix row " +
                                    std::to_string(i) + " has " +
                                    std::to_string(rows[i].size()) +
                                    " entries, expected " + std::to_string(n_));
        }
        entries_.insert(entries_.end(), rows[i].begin(), rows[i].end());
    }
}

long long IntersectionMatrix::at(std::size_t i, std::size_t j) const {
    return entries_[i * n_ + j];
}

namespace {

void validate_boundary(const std::vector<CurveComponent>& components,
                       const IntersectionMatrix& m) {
    if (components.size() != m.size()) {
        throw DimensionMismatch("got " + std::to_string(components.size()) +
                                " components but a " + std::to_string(m.size()) +
                                "x" + std::to_string(m.size()) +
                                " intersection matrix");
    }
    for (std::size_t i = 0; i < components.size(); ++i) {
        if (components[i].genus < 0) {
            throw NegativeGenus("component " + std::to_string(i) +
                                " has negative genus");
        }
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            if (m.at(i, j) != m.at(j, i)) {
                throw AsymmetricMatrix("entries (" + std::to_string(i) + "," +
                                       std::to_string(j) + ") and (" +
                                       std::to_string(j) + "," +
                                       std::to_string(i) + ") differ");
            }
            if (m.at(i, j) < 0) {
                throw NegativeOffDiagonal("entry (" + std::to_string(i) + "," +
                                          std::to_string(j) + ") is negative");
            }
        }
    }
}

}  // namespace

const SmoothOrbifoldSurface& validate_surface(const SmoothOrbifoldSurface& cfg) {
    validate_boundary(cfg.components, cfg.intersections);
    return cfg;
}

const AmbientSurfaceData& validate_ambient(const AmbientSurfaceData& cfg) {
    validate_boundary(cfg.components, cfg.intersections);
    return cfg;
}

bool has_infinite_multiplicity(const std::vector<CurveComponent>& components) {
    return std::any_of(components.begin(), components.end(),
                       [](const CurveComponent& c) {
                           return c.multiplicity.is_infinite();
                       });
}

}  // namespace orbcc
