#include <orbcc/scan.hpp>

#include <orbcc/errors.hpp>

namespace orbcc {

ScanFamily parse_scan_family(std::string_view name) {
    if (name == "plane-pair") return ScanFamily::PlanePair;
    if (name == "nodes-cusps") return ScanFamily::NodesCusps;
    if (name == "nodal-surface") return ScanFamily::NodalSurface;
    if (name == "nodal-jet") return ScanFamily::NodalJet;
    throw ParseError("unknown scan family: \"" + std::string(name) + "\"");
}

std::string_view scan_family_name(ScanFamily family) {
    switch (family) {
        case ScanFamily::PlanePair: return "plane-pair";
        case ScanFamily::NodesCusps: return "nodes-cusps";
        case ScanFamily::NodalSurface: return "nodal-surface";
        case ScanFamily::NodalJet: return "nodal-jet";
    }
    return "?";
}

std::string ScanRow::param_str() const {
    return is_infinity ? "inf" : std::to_string(value);
}

namespace {

struct SweptValue {
    long long value = 0;
    bool is_infinity = false;

    std::string str() const {
        return is_infinity ? "inf" : std::to_string(value);
    }
};

long long param(const ScanRequest& req, const SweptValue& v,
                const std::string& name) {
    if (req.swept_name == name) {
        if (v.is_infinity) {
            throw ValidationError("parameter \"" + name +
                                  "\" does not admit an infinite value");
        }
        return v.value;
    }
    auto it = req.fixed.find(name);
    if (it == req.fixed.end()) {
        throw ValidationError("missing parameter \"" + name + "\" for family " +
                              std::string(scan_family_name(req.family)));
    }
    return it->second;
}

Multiplicity mult_param(const ScanRequest& req, const SweptValue& v,
                        const std::string& name) {
    // "m" sweeps all multiplicity parameters at once.
    if (req.swept_name == name || req.swept_name == "m") {
        return v.is_infinity ? Multiplicity::infinity() : Multiplicity(v.value);
    }
    auto it = req.fixed.find(name);
    if (it == req.fixed.end()) {
        throw ValidationError("missing parameter \"" + name + "\" for family " +
                              std::string(scan_family_name(req.family)));
    }
    return Multiplicity(it->second);
}

CriterionVerdict evaluate(const ScanRequest& req, const SweptValue& v) {
    switch (req.family) {
        case ScanFamily::PlanePair: {
            PlanePairConfig cfg{param(req, v, "d1"), param(req, v, "d2"),
                                mult_param(req, v, "m1"),
                                mult_param(req, v, "m2")};
            return plane_pair_lhs(cfg);
        }
        case ScanFamily::NodesCusps:
            return nodes_cusps_lhs(param(req, v, "d"), param(req, v, "n"),
                                   param(req, v, "c"));
        case ScanFamily::NodalSurface:
            return nodal_surface_lhs(param(req, v, "d"), param(req, v, "l"));
        case ScanFamily::NodalJet:
            return jet_h0_coefficient(static_cast<int>(param(req, v, "k")),
                                      param(req, v, "d"), param(req, v, "l"));
    }
    throw ValidationError("unknown scan family");
}

bool sweeps_multiplicity(const ScanRequest& req) {
    return req.family == ScanFamily::PlanePair &&
           (req.swept_name == "m" || req.swept_name == "m1" ||
            req.swept_name == "m2");
}

void validate_request(const ScanRequest& req) {
    if (req.swept_name.empty()) {
        throw ValidationError("scan request has no swept parameter");
    }
    if (req.lo > req.hi && !req.include_infinity) {
        throw ValidationError("swept range is empty");
    }
    if (req.include_infinity && !sweeps_multiplicity(req)) {
        throw ValidationError(
            "infinity is only a valid sweep endpoint for multiplicities");
    }
}

}  // namespace

std::vector<ScanRow> grid_scan(const ScanRequest& req) {
    validate_request(req);
    std::vector<ScanRow> rows;
    auto push = [&](const SweptValue& v) {
        try {
            CriterionVerdict verdict = evaluate(req, v);
            rows.push_back({v.value, v.is_infinity, verdict.lhs, verdict.holds});
        } catch (const Error& e) {
            throw Error(std::string(e.what()) + " (at " + req.swept_name + "=" +
                        v.str() + ")");
        }
    };
    for (long long x = req.lo; x <= req.hi; ++x) {
        push({x, false});
    }
    if (req.include_infinity) {
        push({0, true});
    }
    return rows;
}

std::optional<long long> minimal_passing(const ScanRequest& req) {
    for (const ScanRow& row : grid_scan(req)) {
        if (row.holds && !row.is_infinity) {
            return row.value;
        }
    }
    return std::nullopt;
}

}  // namespace orbcc
