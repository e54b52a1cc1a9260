#include <doctest.h>

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "helpers.hpp"
#include "lcone/parser.hpp"
#include "lcone/resources.hpp"

using namespace lcone;

namespace {

ClusteredCircuit load_brickwall() {
    std::ifstream in(testutil::data_path("brickwall5.circ"));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

// brick-wall chain of `n` clusters, depth 2, uniform local structure
ClusteredCircuit chain(int n) {
    std::ostringstream ss;
    ss << "layout lattice D=1 extents=" << n << " d=1\nlayer\n";
    for (int q = 0; q + 1 < n; q += 2) ss << "inter ZZ(0.9) q" << q << " q" << q + 1 << "\n";
    ss << "layer\n";
    for (int q = 1; q + 1 < n; q += 2) ss << "inter ZZ(0.7) q" << q << " q" << q + 1 << "\n";
    return parse_circuit(ss.str());
}

}  // namespace

TEST_SUITE("resource_analysis") {

TEST_CASE("cut counts: 1D chain and 2D grid") {
    CHECK(gate_cutting_cut_count(ClusterLayout::lattice({5}, 1), 1) == 4);
    CHECK(gate_cutting_cut_count(ClusterLayout::lattice({3, 3}, 2), 2) == 24);
    CHECK(gate_cutting_cut_count(ClusterLayout::lattice({10}, 1), 2) == 18);
    CHECK_THROWS_AS(gate_cutting_cut_count(ClusterLayout::all_to_all(5, 1), 1), ConfigError);
}

TEST_CASE("measured extremes on the brick-wall fixture") {
    auto c = load_brickwall();
    Observable obs({{1.0, PauliString::single(PauliOp::Z, 2)}});
    ConeExtremes ex = measure_cone_extremes(c, obs);
    CHECK(ex.size_max == 4);
    CHECK(ex.vol_max == 3);
    CHECK(ex.range == 2);
}

TEST_CASE("comparison table rows") {
    auto c = load_brickwall();
    Observable obs({{1.0, PauliString::single(PauliOp::Z, 2)}});
    auto rows = comparison_table(c, obs, 0.1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].method == "gate_cutting");
    CHECK(rows[0].qubit_requirement == 1);
    CHECK(rows[0].sample_exponent == doctest::Approx(2.0 * 8));  // 4 edges x T=2 x 2 bits
    CHECK(rows[1].method == "causal_decoupling");
    CHECK(rows[1].qubit_requirement == 4);
    CHECK(rows[1].sample_exponent == 0.0);
    CHECK(rows[1].sample_prefactor == doctest::Approx(1.0 / 0.01));  // s^2 lam^2 / eps^2
    CHECK(rows[2].method == "algebraic_decomposition");
    CHECK(rows[2].qubit_requirement == 2);
    CHECK(rows[2].circuit_depth == 5);
    CHECK(rows[2].sample_exponent == doctest::Approx(12.0));  // 4 * Vol_max
    CHECK(rows[2].sample_prefactor == doctest::Approx(16.0 / 0.01));  // Size_max^2 lam^2/eps^2
}

TEST_CASE("local quantities are independent of the chain length") {
    Observable obs({{1.0, PauliString::single(PauliOp::Z, 4)}});
    ConeExtremes base = measure_cone_extremes(chain(10), obs);
    for (int n : {20, 40}) {
        ConeExtremes ex = measure_cone_extremes(chain(n), obs);
        CHECK(ex.size_max == base.size_max);
        CHECK(ex.vol_max == base.vol_max);
        CHECK(ex.range == base.range);
    }
    // while the gate-cutting cut count grows with n: N-1 edges per layer
    CHECK(gate_cutting_cut_count(ClusterLayout::lattice({10}, 1), 1) == 9);
    CHECK(gate_cutting_cut_count(ClusterLayout::lattice({20}, 1), 1) == 19);
    CHECK(gate_cutting_cut_count(ClusterLayout::lattice({40}, 1), 1) == 39);
}

TEST_CASE("all-to-all comparisons require beta and predict the size curve") {
    std::ostringstream ss;
    ss << "layout all_to_all N=6 d=1\nlayer\ninter ZZ(0.5) q0 q1\n";
    auto c = parse_circuit(ss.str());
    Observable obs({{1.0, PauliString::single(PauliOp::Z, 0)}});
    CHECK_THROWS_AS(comparison_table(c, obs, 0.1), ConfigError);
    auto rows = comparison_table(c, obs, 0.1, 2.0);
    REQUIRE(rows.size() == 3);
    REQUIRE(rows[0].predicted_size.has_value());
    CHECK(*rows[0].predicted_size == doctest::Approx(2.0));  // min{6, 1*2^1}
}

TEST_CASE("branching-factor fit recovers beta on synthetic growth data") {
    // sizes following 1 * 1.5^T until saturation at 12 clusters
    std::vector<int> sizes;
    for (int t = 1; t <= 8; ++t)
        sizes.push_back(static_cast<int>(std::min(12.0, std::round(std::pow(1.5, t)))));
    BranchingFit fit = fit_branching_factor(sizes, 1, 12);
    CHECK(fit.beta == doctest::Approx(1.5).epsilon(0.15));
    REQUIRE(fit.residuals.size() == sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i) CHECK(std::abs(fit.residuals[i]) < 2.0);
}

TEST_CASE("CSV and JSON emissions round-trip the key fields") {
    auto c = load_brickwall();
    Observable obs({{1.0, PauliString::single(PauliOp::Z, 2)}});
    auto rows = comparison_table(c, obs, 0.1);

    std::string csv = resource_rows_csv(rows);
    CHECK(csv.find("gate_cutting") != std::string::npos);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);  // header + 3 rows

    auto parsed = nlohmann::json::parse(resource_rows_json(rows));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[1]["method"] == "causal_decoupling");
    CHECK(parsed[1]["qubit_requirement"] == 4);
    CHECK(parsed[2]["sample_exponent_log2"] == doctest::Approx(12.0));
}

}
