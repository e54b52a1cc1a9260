#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "lcone/errors.hpp"
#include "lcone/oracle.hpp"
#include "lcone/parser.hpp"

using namespace lcone;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_SUITE("circuit_model") {

TEST_CASE("brick-wall fixture parses with the expected structure") {
    auto c = parse_circuit(slurp(testutil::data_path("brickwall5.circ")));
    CHECK(c.layout().num_clusters() == 5);
    CHECK(c.layout().cluster_size() == 1);
    CHECK(c.depth() == 2);
    CHECK(c.inter_gate_count() == 4);
    CHECK(c.layers()[0].inter.size() == 2);
    CHECK(c.layers()[0].intra.size() == 5);
    CHECK(c.layers()[1].inter[0].qubit_a == 1);
    CHECK(c.layers()[1].inter[0].qubit_b == 2);
    CHECK(c.layers()[1].inter[1].theta == doctest::Approx(-1.1));
}

TEST_CASE("non-unitary intra gate is rejected with the deviation magnitude") {
    Layer layer;
    CMatrix bad(2);
    bad(0, 0) = 1.0;
    bad(1, 1) = 1.1;
    layer.intra.push_back({0, {0}, bad});
    auto layout = ClusterLayout::lattice({2}, 1);
    CHECK(bad.unitarity_deviation() == doctest::Approx(0.21));
    CHECK_THROWS_AS(validate_layer(layer, layout), ValidationError);
}

TEST_CASE("inter gate between non-adjacent clusters is rejected") {
    auto layout = ClusterLayout::lattice({3}, 1);
    Layer layer;
    layer.inter.push_back({PauliOp::Z, PauliOp::Z, 0, 2, 1.0});
    CHECK_THROWS_AS(validate_layer(layer, layout), ValidationError);
}

TEST_CASE("two inter gates on the same cluster pair in one layer are rejected") {
    auto layout = ClusterLayout::lattice({2}, 2);
    Layer layer;
    layer.inter.push_back({PauliOp::Z, PauliOp::Z, 0, 2, 1.0});
    layer.inter.push_back({PauliOp::X, PauliOp::X, 1, 3, 0.5});
    CHECK_THROWS_AS(validate_layer(layer, layout), ValidationError);
}

TEST_CASE("theta outside (-2pi, 2pi] is rejected") {
    auto layout = ClusterLayout::lattice({2}, 1);
    Layer layer;
    layer.inter.push_back({PauliOp::Z, PauliOp::Z, 0, 1, 7.0});
    CHECK_THROWS_AS(validate_layer(layer, layout), ValidationError);
    layer.inter[0].theta = -6.3;
    CHECK_THROWS_AS(validate_layer(layer, layout), ValidationError);
    layer.inter[0].theta = 2 * M_PI;
    CHECK_NOTHROW(validate_layer(layer, layout));
}

TEST_CASE("inter gate matrix equals cos I - i sin (P x Q)") {
    InterGate g{PauliOp::X, PauliOp::Y, 0, 1, 0.8};
    CMatrix m = inter_gate_matrix(g);
    CMatrix expect = CMatrix::identity(4);
    expect *= std::cos(0.4);
    CMatrix py = pauli_matrix(PauliOp::X).kron(pauli_matrix(PauliOp::Y));
    py *= cplx{0.0, -std::sin(0.4)};
    expect += py;
    CHECK(m.max_abs_diff(expect) < 1e-15);
    CHECK(m.unitarity_deviation() < 1e-14);
}

TEST_CASE("CZ shorthand reproduces the dense CZ matrix including phase") {
    auto c = parse_circuit("layout lattice D=1 extents=2 d=1\nlayer\ninter CZ q0 q1\n");
    QubitMap map(c.layout(), {0, 1});
    CMatrix u = testutil::dense_unitary(c, map);
    u *= c.global_phase();
    CMatrix cz = CMatrix::identity(4);
    cz(3, 3) = -1.0;
    CHECK(u.max_abs_diff(cz) < 1e-12);
}

TEST_CASE("CNOT shorthand reproduces the dense CNOT matrix including phase") {
    auto c = parse_circuit("layout lattice D=1 extents=2 d=1\nlayer\ninter CNOT q0 q1\n");
    QubitMap map(c.layout(), {0, 1});
    CMatrix u = testutil::dense_unitary(c, map);
    u *= c.global_phase();
    // register index bit 0 = q0 (control); control set on indices 1 and 3
    CMatrix cnot(4);
    cnot(0, 0) = cnot(2, 2) = 1.0;
    cnot(1, 3) = cnot(3, 1) = 1.0;
    CHECK(u.max_abs_diff(cnot) < 1e-12);
}

TEST_CASE("round trip: serialize then parse preserves the circuit") {
    std::mt19937_64 rng(71);
    for (int rep = 0; rep < 10; ++rep) {
        testutil::CircuitSpec spec;
        spec.extents = {3};
        spec.cluster_size = 2;
        spec.depth = 2;
        auto a = testutil::random_circuit(spec, rng);
        auto b = parse_circuit(serialize_circuit(a));
        REQUIRE(b.depth() == a.depth());
        QubitMap map(a.layout(), {0, 1, 2});
        CHECK(testutil::dense_unitary(a, map).max_abs_diff(testutil::dense_unitary(b, map)) <
              1e-12);
    }
}

TEST_CASE("parse errors carry line numbers") {
    try {
        parse_circuit("layout lattice D=1 extents=2 d=1\nlayer\ninter ZZ(0.5) q0\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.code() == ErrorCode::Parse);
    }
    CHECK_THROWS_AS(parse_circuit("layer\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("layout lattice D=2 extents=3 d=1\n"), ParseError);
}

TEST_CASE("observable parsing and validation") {
    auto obs = parse_observable("term 0.5 Zq0 Xq3\nterm -0.25 Yq1\n");
    REQUIRE(obs.terms().size() == 2);
    CHECK(obs.one_norm() == doctest::Approx(0.75));
    CHECK(obs.terms()[0].pauli.to_string() == "Zq0 Xq3");
    CHECK_THROWS_AS(parse_observable("term 0 Zq0\n"), ParseError);
    CHECK_THROWS_AS(parse_observable("term 1 Zq0 Xq0\n"), ParseError);
    auto layout = ClusterLayout::lattice({2}, 2);
    CHECK(obs.locality(layout) == 2);
}

TEST_CASE("complex literal forms") {
    CHECK(parse_complex("1.5") == cplx{1.5, 0.0});
    CHECK(parse_complex("-2i") == cplx{0.0, -2.0});
    CHECK(parse_complex("0.5+0.5i") == cplx{0.5, 0.5});
    CHECK(parse_complex("i") == cplx{0.0, 1.0});
    CHECK(parse_complex("(0.25,-1)") == cplx{0.25, -1.0});
    CHECK(parse_complex("1e-3-2e-4i") == cplx{1e-3, -2e-4});
    CHECK_THROWS_AS(parse_complex("zz"), ParseError);
}

}
