#include <doctest.h>

#include <fstream>
#include <sstream>

#include "helpers.hpp"
#include "lcone/errors.hpp"
#include "lcone/oracle.hpp"
#include "lcone/parser.hpp"

using namespace lcone;

namespace {

ClusteredCircuit load(const std::string& name) {
    std::ifstream in(testutil::data_path(name));
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_circuit(ss.str());
}

const CMatrix kHadamard(2, {M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2});

}  // namespace

TEST_SUITE("statevector_oracle") {

TEST_CASE("trivial expectations on the empty circuit") {
    auto c = load("trivial.circ");
    CHECK(exact_expectation(c, PauliString::single(PauliOp::Z, 0)) == doctest::Approx(1.0));
    CHECK(exact_expectation(c, PauliString::single(PauliOp::X, 0)) ==
          doctest::Approx(0.0).epsilon(1e-14));
    CHECK(exact_expectation(c, PauliString::single(PauliOp::Y, 0)) ==
          doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("brick-wall middle-qubit expectation equals cos(0.7)") {
    // layer-2 H on q2 turns <Z2> into <X2> of ZZ(0.7)|++>, i.e. cos 0.7
    auto c = load("brickwall5.circ");
    double mu = exact_expectation(c, PauliString::single(PauliOp::Z, 2));
    CHECK(mu == doctest::Approx(std::cos(0.7)).epsilon(1e-12));
}

TEST_CASE("norm drift stays below 1e-9 across 1000 random gates") {
    std::mt19937_64 rng(41);
    StateVector st(8);
    for (int g = 0; g < 1000; ++g) {
        int k = 1 + static_cast<int>(rng() % 2);
        std::vector<int> targets{static_cast<int>(rng() % 8)};
        if (k == 2) {
            int t;
            do { t = static_cast<int>(rng() % 8); } while (t == targets[0]);
            targets.push_back(t);
        }
        st.apply(testutil::random_unitary(1 << k, rng), targets);
    }
    CHECK(std::abs(st.norm() - 1.0) < 1e-9);
}

TEST_CASE("Heisenberg operator is Hermitian and unitary-conjugated Pauli") {
    std::mt19937_64 rng(43);
    testutil::CircuitSpec spec;
    spec.extents = {4};
    spec.depth = 2;
    auto c = testutil::random_circuit(spec, rng);
    CMatrix h = heisenberg_operator(c, PauliString::single(PauliOp::Z, 1));
    CHECK(h.max_abs_diff(h.adjoint()) < 1e-12);       // hermitian
    CHECK((h * h).max_abs_diff(CMatrix::identity(16)) < 1e-11);  // involution
}

TEST_CASE("layer reordering of commuting intra gates leaves the oracle fixed") {
    std::mt19937_64 rng(47);
    testutil::CircuitSpec spec;
    spec.extents = {4};
    spec.depth = 2;
    auto c = testutil::random_circuit(spec, rng);
    // same layers with the intra gate list reversed (disjoint clusters commute)
    ClusteredCircuit reordered(c.layout());
    for (auto layer : c.layers()) {
        std::reverse(layer.intra.begin(), layer.intra.end());
        reordered.add_layer(std::move(layer));
    }
    for (int q = 0; q < 4; ++q) {
        PauliString p = PauliString::single(PauliOp::Z, q);
        CHECK(exact_expectation(c, p) ==
              doctest::Approx(exact_expectation(reordered, p)).epsilon(1e-12));
    }
}

TEST_CASE("transition amplitudes") {
    auto layout = ClusterLayout::lattice({1}, 1);
    QubitMap map(layout, {0});
    IntraGate h{0, {0}, kHadamard};

    // <0|X|+> = 1/sqrt(2)
    cplx a = transition_amplitude({}, {h}, PauliString::single(PauliOp::X, 0), map);
    CHECK(std::abs(a - cplx{M_SQRT1_2, 0.0}) < 1e-14);
    // <0|Y|+> = -i/sqrt(2)
    cplx b = transition_amplitude({}, {h}, PauliString::single(PauliOp::Y, 0), map);
    CHECK(std::abs(b - cplx{0.0, -M_SQRT1_2}) < 1e-14);
    // <+|Z|0> = 1/sqrt(2); no Pauli -> plain overlap <+|0>
    cplx d = transition_amplitude({h}, {}, PauliString(), map);
    CHECK(std::abs(d - cplx{M_SQRT1_2, 0.0}) < 1e-14);
}

TEST_CASE("oracle capacity errors name the offending term") {
    auto c = parse_circuit("layout lattice D=1 extents=1 d=14\nlayer\n");
    Observable obs({{1.0, PauliString::single(PauliOp::Z, 0)}});
    OracleLimits tight;
    tight.statevector_qubits = 8;
    try {
        exact_observable_expectation(c, obs, tight);
        FAIL("expected a capacity error");
    } catch (const CapacityError& e) {
        CHECK(std::string(e.what()).find("term 0") != std::string::npos);
        CHECK(e.code() == ErrorCode::Capacity);
    }
}

TEST_CASE("observable expectation is the coefficient-weighted sum of terms") {
    auto c = load("brickwall5.circ");
    Observable obs({{0.5, PauliString::single(PauliOp::Z, 2)}, {2.0, PauliString()}});
    double v = exact_observable_expectation(c, obs);
    CHECK(v == doctest::Approx(0.5 * std::cos(0.7) + 2.0).epsilon(1e-12));
}

}
