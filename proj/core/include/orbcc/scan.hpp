#pragma once

#include <orbcc/criteria.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace orbcc {

enum class ScanFamily { PlanePair, NodesCusps, NodalSurface, NodalJet };

ScanFamily parse_scan_family(std::string_view name);
std::string_view scan_family_name(ScanFamily family);

/// A one-parameter sweep over a criterion family. The swept range is
/// inclusive and must be explicitly bounded. Infinity may be appended as a
/// final swept value for multiplicity parameters only.
struct ScanRequest {
    ScanFamily family = ScanFamily::PlanePair;
    std::map<std::string, long long> fixed;
    std::string swept_name;
    long long lo = 0;
    long long hi = 0;
    bool include_infinity = false;
};

struct ScanRow {
    long long value = 0;       // swept parameter value (ignored when infinite)
    bool is_infinity = false;
    Rational lhs;
    bool holds = false;

    std::string param_str() const;  // "69" or "inf"
};

/// One row per swept value, evaluated in increasing order. Deterministic and
/// order-stable. Evaluation errors are rethrown with the offending value.
std::vector<ScanRow> grid_scan(const ScanRequest& req);

/// Smallest swept value whose verdict holds (linear scan, no monotonicity
/// assumed); absent when no finite value in range passes.
std::optional<long long> minimal_passing(const ScanRequest& req);

}  // namespace orbcc
