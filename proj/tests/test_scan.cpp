#include <doctest.h>

#include <orbcc/scan.hpp>

using namespace orbcc;

TEST_CASE("scan family names round trip") {
    for (const char* name :
         {"plane-pair", "nodes-cusps", "nodal-surface", "nodal-jet"}) {
        CHECK(scan_family_name(parse_scan_family(name)) == name);
    }
    CHECK_THROWS_AS(parse_scan_family("unknown"), ParseError);
}

TEST_CASE("two quintics sweep finds the threshold") {
    ScanRequest req;
    req.family = ScanFamily::PlanePair;
    req.fixed = {{"d1", 5}, {"d2", 5}};
    req.swept_name = "m";
    req.lo = 2;
    req.hi = 100;
    req.include_infinity = true;

    std::vector<ScanRow> rows = grid_scan(req);
    REQUIRE(rows.size() == 100);  // 99 finite values + infinity
    CHECK(minimal_passing(req) == 69);
    for (const ScanRow& row : rows) {
        if (row.is_infinity) {
            CHECK(row.holds);
        } else {
            CHECK(row.holds == (row.value >= 69));
        }
    }
    CHECK(rows.back().is_infinity);
    CHECK(rows.back().param_str() == "inf");
}

TEST_CASE("nodal surface sweep: quintics need 34 nodes") {
    ScanRequest req;
    req.family = ScanFamily::NodalSurface;
    req.fixed = {{"d", 5}};
    req.swept_name = "l";
    req.lo = 0;
    req.hi = 40;
    CHECK(minimal_passing(req) == 34);

    req.fixed = {{"d", 6}};
    req.hi = 70;
    CHECK(minimal_passing(req) == 57);
}

TEST_CASE("order-3 jets reach quintics with 31 nodes") {
    ScanRequest req;
    req.family = ScanFamily::NodalJet;
    req.fixed = {{"d", 5}, {"k", 3}};
    req.swept_name = "l";
    req.lo = 0;
    req.hi = 40;
    CHECK(minimal_passing(req) == 31);

    req.fixed = {{"d", 5}, {"k", 2}};
    CHECK(minimal_passing(req) == 33);  // order 2 needs two more nodes
}

TEST_CASE("cusp count sweep for sextics") {
    ScanRequest req;
    req.family = ScanFamily::NodesCusps;
    req.fixed = {{"d", 6}, {"n", 0}};
    req.swept_name = "c";
    req.lo = 0;
    req.hi = 10;
    CHECK(minimal_passing(req) == 8);
}

TEST_CASE("scan validation") {
    ScanRequest req;
    req.family = ScanFamily::NodalSurface;
    req.fixed = {{"d", 5}};
    req.swept_name = "l";
    req.lo = 5;
    req.hi = 4;
    CHECK_THROWS_AS(grid_scan(req), ValidationError);

    req.hi = 6;
    req.include_infinity = true;  // node counts are never infinite
    CHECK_THROWS_AS(grid_scan(req), ValidationError);

    req.include_infinity = false;
    req.fixed.clear();  // missing d
    CHECK_THROWS_WITH_AS(grid_scan(req),
                         doctest::Contains("missing parameter \"d\""), Error);
}

TEST_CASE("scan errors carry the offending value") {
    ScanRequest req;
    req.family = ScanFamily::NodalSurface;
    req.fixed = {{"l", 10}};
    req.swept_name = "d";
    req.lo = 4;  // degree 4 is rejected by the family
    req.hi = 6;
    CHECK_THROWS_WITH_AS(grid_scan(req), doctest::Contains("(at d=4)"), Error);
}

TEST_CASE("rows are ordered and deterministic") {
    ScanRequest req;
    req.family = ScanFamily::NodesCusps;
    req.fixed = {{"d", 6}, {"c", 0}};
    req.swept_name = "n";
    req.lo = 0;
    req.hi = 10;
    std::vector<ScanRow> a = grid_scan(req);
    std::vector<ScanRow> b = grid_scan(req);
    REQUIRE(a.size() == 11);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].value == static_cast<long long>(i));
        CHECK(a[i].lhs == b[i].lhs);
        CHECK(a[i].holds == b[i].holds);
    }
}
