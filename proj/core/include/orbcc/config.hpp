#pragma once

#include <orbcc/criteria.hpp>
#include <orbcc/model.hpp>

#include <optional>
#include <string_view>

namespace orbcc {

struct NodesCuspsParams {
    long long d = 4;
    long long n = 0;
    long long c = 0;
};

/// Result of parsing a configuration file. Exactly the blocks that were
/// present are populated; a `surface` block given in ambient form also
/// yields the derived SmoothOrbifoldSurface.
struct ParsedConfig {
    std::optional<SmoothOrbifoldSurface> surface;
    std::optional<AmbientSurfaceData> ambient;
    std::optional<PlanePairConfig> plane_pair;
    std::optional<NodesCuspsParams> nodes_cusps;
    std::optional<NodalSurface> nodal_surface;
    std::optional<NevanlinnaConfig> nevanlinna;
};

/// Parses the structured key-value configuration format:
///
///   surface {
///     ambient_c1_sq = 9
///     ambient_c2 = 3
///   }
///   component { label = C1 genus = 6 multiplicity = 69 }
///   component { label = C2 genus = 6 multiplicity = 69 }
///   intersections { matrix = [[25, 25], [25, 25]] }
///
/// A `surface` block carries either `log_c1_sq`/`log_c2` or
/// `ambient_c1_sq`/`ambient_c2` (strings "p/q" or integers). Multiplicities
/// are integers or "inf". Family shortcuts: plane_pair {d1,d2,m1,m2},
/// nodes_cusps {d,n,c}, nodal_surface {d,l}, nevanlinna {multiplicities}.
/// '#' starts a comment. Throws ParseError with line and field information;
/// structural invariants are checked by the model validators.
ParsedConfig parse_config(std::string_view text);

}  // namespace orbcc
