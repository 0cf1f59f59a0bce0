#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "teichlab/continued_fraction.hpp"
#include "teichlab/experiments.hpp"
#include "teichlab/teich.hpp"

using namespace teichlab;

namespace {

ContinuedFraction golden() { return ContinuedFraction::periodic(1, {}, {1}); }
ContinuedFraction root_two() { return ContinuedFraction::periodic(1, {}, {2}); }

LabConfig coarse() {
    LabConfig cfg;
    cfg.spacing = 0.3;  // coarse net keeps the unit runs quick
    return cfg;
}

std::vector<std::string> csv_rows(const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) rows.push_back(line);
    return rows;
}

std::vector<std::string> split_row(const std::string& row) {
    std::vector<std::string> cells;
    std::istringstream in(row);
    std::string cell;
    while (std::getline(in, cell, ',')) cells.push_back(cell);
    if (!row.empty() && row.back() == ',') cells.push_back("");
    return cells;
}

}  // namespace

TEST_CASE("experiment validation") {
    LabConfig cfg = coarse();
    CHECK_THROWS_AS(ray_profile(golden(), 0.0, 0.5, cfg), std::invalid_argument);
    CHECK_THROWS_AS(ray_profile(golden(), 3.0, -1.0, cfg), std::invalid_argument);
    CHECK_THROWS_AS(ray_profile(golden(), 3.0, 4.0, cfg), std::invalid_argument);

    LabConfig narrow_cfg = coarse();
    narrow_cfg.cone_denom_bound = 5;
    CHECK_THROWS_WITH_AS(ray_profile(ContinuedFraction::finite(0, {7}), 3.0, 0.5, narrow_cfg),
                         doctest::Contains("widen cone_denom_bound"), std::invalid_argument);

    CHECK_THROWS_WITH_AS(separation_profile(ContinuedFraction::finite(0, {2}), golden(), 8, cfg),
                         doctest::Contains("irrational"), std::invalid_argument);
    CHECK_THROWS_AS(separation_profile(golden(), root_two(), 7, cfg), std::invalid_argument);

    CHECK_THROWS_AS(qi_audit(0, cfg), std::invalid_argument);

    CHECK_THROWS_AS(segment_accumulation(ContinuedFraction::finite(2), golden(), 2, cfg),
                    std::invalid_argument);
    CHECK_THROWS_AS(segment_accumulation(golden(), root_two(), 0, cfg), std::invalid_argument);

    CHECK_THROWS_AS(
        boundary_map_audit({Slope::of(1, 1), Slope::of(2, 1)}, cfg), std::invalid_argument);
}

TEST_CASE("a ray toward a rational slope stalls inside its horoball") {
    LabConfig cfg;  // default spacing: the window around 0 is small anyway
    ExperimentReport rep = ray_profile(ContinuedFraction::finite(0), 4.0, 0.5, cfg);
    CHECK(rep.outcome == "bounded");
    CHECK(rep.verdict == "pass");
    CHECK(rep.exit_code() == 0);
    CHECK(rep.details["tail_oscillation"].get<double>() <= 1.0);

    // the recorded tail really sits inside the target's thin region
    auto rows = csv_rows(rep.profile_csv);
    REQUIRE(rows.size() >= 2);
    auto last = split_row(rows.back());
    REQUIRE(last.size() == 5);
    CHECK(last[4] == "0/1");
    TeichPoint tail{std::stod(last[1]), std::stod(last[2])};
    CHECK(thin_contains(ThinRegion{Slope::of(0, 1), cfg.epsilon}, tail));
}

TEST_CASE("boundary audit classifies convergent and milling sequences") {
    LabConfig cfg;
    auto conv = cf_convergents(golden(), 10).convergents;
    ExperimentReport rep = boundary_map_audit(conv, cfg);
    CHECK(rep.outcome == "boundary-point");
    CHECK(rep.verdict == "pass");
    CHECK(rep.details["graph_verdict"] == "diverging");
    CHECK(rep.details["tail_value_spread"].get<double>() <= 1e-3);

    // a sequence stuck on one slope neither diverges nor picks a direction
    std::vector<Slope> stuck(8, Slope::of(2, 1));
    ExperimentReport flat = boundary_map_audit(stuck, cfg);
    CHECK(flat.outcome == "no-boundary-point");
    CHECK(flat.verdict == "pass");

    // bouncing between two slopes keeps the graph profile flat as well
    std::vector<Slope> bounce;
    for (int i = 0; i < 8; ++i) bounce.push_back(i % 2 ? Slope::infinity() : Slope::of(0, 1));
    ExperimentReport pair = boundary_map_audit(bounce, cfg);
    CHECK(pair.outcome == "no-boundary-point");

    // interleaving two convergent sequences leaves the verdict open
    auto other = cf_convergents(root_two(), 5).convergents;
    std::vector<Slope> mixed;
    for (std::size_t i = 0; i < 5; ++i) {
        mixed.push_back(conv[i]);
        mixed.push_back(other[i]);
    }
    ExperimentReport tangled = boundary_map_audit(mixed, cfg);
    CHECK((tangled.verdict == "inconclusive" || tangled.outcome == "no-boundary-point"));
    CHECK(tangled.outcome != "boundary-point");
}

TEST_CASE("reports are byte-stable under reruns") {
    LabConfig cfg = coarse();

    ExperimentReport r1 = ray_profile(golden(), 3.0, 0.75, cfg);
    ExperimentReport r2 = ray_profile(golden(), 3.0, 0.75, cfg);
    CHECK(r1.dump() == r2.dump());
    CHECK(r1.to_json() == r2.to_json());

    auto conv = cf_convergents(golden(), 8).convergents;
    CHECK(boundary_map_audit(conv, cfg).dump() == boundary_map_audit(conv, cfg).dump());

    ExperimentReport s1 = separation_profile(golden(), root_two(), 8, cfg);
    ExperimentReport s2 = separation_profile(golden(), root_two(), 8, cfg);
    CHECK(s1.dump() == s2.dump());

    ExperimentReport q1 = qi_audit(5, cfg, 2);
    ExperimentReport q2 = qi_audit(5, cfg, 2);
    CHECK(q1.dump() == q2.dump());

    ExperimentReport g1 = segment_accumulation(golden(), root_two(), 2, cfg);
    ExperimentReport g2 = segment_accumulation(golden(), root_two(), 2, cfg);
    CHECK(g1.dump() == g2.dump());

    // the dump embeds the parameters that were actually used
    CHECK(r1.parameters["target"] == "[1;(1)]");
    CHECK(r1.parameters["seed"] == cfg.seed);
    CHECK(q1.parameters["epsilon"] == cfg.epsilon);
}
