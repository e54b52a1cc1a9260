#pragma once

// Shared generators for the test suite: Haar-ish random unitaries, random
// clustered circuits, and dense matrix builds of small circuits.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lcone/circuit.hpp"
#include "lcone/oracle.hpp"
#include "lcone/statevector.hpp"

namespace testutil {

using lcone::CMatrix;
using lcone::cplx;

inline CMatrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
    for (int i = 0; i < dim; ++i) {  // Gram-Schmidt rows
        for (int k = 0; k < i; ++k) {
            cplx dot{};
            for (int j = 0; j < dim; ++j) dot += std::conj(a(k, j)) * a(i, j);
            for (int j = 0; j < dim; ++j) a(i, j) -= dot * a(k, j);
        }
        double nrm = 0.0;
        for (int j = 0; j < dim; ++j) nrm += std::norm(a(i, j));
        nrm = std::sqrt(nrm);
        for (int j = 0; j < dim; ++j) a(i, j) /= nrm;
    }
    return a;
}

inline lcone::PauliOp random_pauli(std::mt19937_64& rng) {
    switch (rng() % 3) {
        case 0: return lcone::PauliOp::X;
        case 1: return lcone::PauliOp::Y;
        default: return lcone::PauliOp::Z;
    }
}

struct CircuitSpec {
    std::vector<int> extents{4};
    int cluster_size = 1;
    int depth = 2;
    double inter_prob = 0.7;  // chance of bridging each eligible cluster pair
    double intra_prob = 0.8;  // chance of a random unitary on each cluster
};

/// Random layered circuit on a 1D/2D lattice: per layer, a random disjoint
/// set of adjacent cluster pairs gets random Pauli rotations, and each
/// cluster optionally gets a random intra unitary on all its qubits.
inline lcone::ClusteredCircuit random_circuit(const CircuitSpec& spec, std::mt19937_64& rng) {
    auto layout = lcone::ClusterLayout::lattice(spec.extents, spec.cluster_size);
    lcone::ClusteredCircuit circuit(layout);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(-3.1, 3.1);

    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < layout.num_clusters(); ++a)
        for (int b = a + 1; b < layout.num_clusters(); ++b)
            if (layout.adjacent(a, b)) edges.emplace_back(a, b);

    for (int t = 0; t < spec.depth; ++t) {
        lcone::Layer layer;
        std::vector<char> used(layout.num_clusters(), 0);
        std::shuffle(edges.begin(), edges.end(), rng);
        for (auto [a, b] : edges) {
            if (used[a] || used[b] || unit(rng) > spec.inter_prob) continue;
            used[a] = used[b] = 1;
            lcone::InterGate g;
            g.pauli_a = random_pauli(rng);
            g.pauli_b = random_pauli(rng);
            int d = layout.cluster_size();
            g.qubit_a = a * d + static_cast<int>(rng() % d);
            g.qubit_b = b * d + static_cast<int>(rng() % d);
            g.theta = angle(rng);
            layer.inter.push_back(g);
        }
        for (int c = 0; c < layout.num_clusters(); ++c) {
            if (unit(rng) > spec.intra_prob) continue;
            lcone::IntraGate g;
            g.cluster = c;
            g.targets = layout.cluster_qubits(c);
            g.unitary = random_unitary(1 << g.targets.size(), rng);
            layer.intra.push_back(g);
        }
        circuit.add_layer(std::move(layer));
    }
    return circuit;
}

/// Dense unitary of the circuit on the mapped clusters (column by column).
inline CMatrix dense_unitary(const lcone::ClusteredCircuit& circuit, const lcone::QubitMap& map) {
    int n = map.size();
    uint64_t dim = uint64_t{1} << n;
    CMatrix u(static_cast<int>(dim));
    for (uint64_t col = 0; col < dim; ++col) {
        lcone::StateVector st(n);
        st.amplitudes().assign(dim, cplx{});
        st.amplitudes()[col] = 1.0;
        lcone::run_circuit_on(st, circuit, map);
        for (uint64_t row = 0; row < dim; ++row)
            u(static_cast<int>(row), static_cast<int>(col)) = st.amplitudes()[row];
    }
    return u;
}

/// Dense matrix of an intra-gate sequence applied in order through the map.
inline CMatrix dense_sequence(const std::vector<lcone::IntraGate>& seq,
                              const lcone::QubitMap& map) {
    int n = map.size();
    uint64_t dim = uint64_t{1} << n;
    CMatrix u(static_cast<int>(dim));
    for (uint64_t col = 0; col < dim; ++col) {
        lcone::StateVector st(n);
        st.amplitudes().assign(dim, cplx{});
        st.amplitudes()[col] = 1.0;
        for (const auto& g : seq) st.apply(g.unitary, map.local_targets(g.targets));
        for (uint64_t row = 0; row < dim; ++row)
            u(static_cast<int>(row), static_cast<int>(col)) = st.amplitudes()[row];
    }
    return u;
}

/// Random s-local observable supported on random clusters of the layout.
inline lcone::Observable random_observable(const lcone::ClusterLayout& layout, int terms,
                                           int max_clusters_per_term, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::vector<lcone::ObservableTerm> ts;
    for (int i = 0; i < terms; ++i) {
        lcone::ObservableTerm t;
        do { t.coeff = coeff(rng); } while (t.coeff == 0.0);
        int nc = 1 + static_cast<int>(rng() % max_clusters_per_term);
        std::set<int> clusters;
        while (static_cast<int>(clusters.size()) < nc)
            clusters.insert(static_cast<int>(rng() % layout.num_clusters()));
        for (int c : clusters) {
            auto qs = layout.cluster_qubits(c);
            t.pauli.set(qs[rng() % qs.size()], random_pauli(rng));
        }
        ts.push_back(std::move(t));
    }
    return lcone::Observable(std::move(ts));
}

inline std::string data_path(const std::string& name) {
    return std::string(LCONE_TEST_DATA) + "/" + name;
}

}  // namespace testutil
