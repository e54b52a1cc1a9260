#include "lcone/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#include "lcone/errors.hpp"
#include "lcone/lightcone.hpp"

namespace lcone {

namespace {
std::atomic<int> g_max_qubits{0};
}

int max_simulated_qubits() { return g_max_qubits.load(); }

void note_simulated_qubits(int n) {
    int cur = g_max_qubits.load();
    while (n > cur && !g_max_qubits.compare_exchange_weak(cur, n)) {}
}

void reset_simulated_qubits() { g_max_qubits.store(0); }

QubitMap::QubitMap(const ClusterLayout& layout, const std::set<int>& clusters) {
    for (int c : clusters)
        for (int q : layout.cluster_qubits(c)) qubits_.push_back(q);
    std::sort(qubits_.begin(), qubits_.end());
}

int QubitMap::local(int global_qubit) const {
    auto it = std::lower_bound(qubits_.begin(), qubits_.end(), global_qubit);
    if (it == qubits_.end() || *it != global_qubit)
        throw std::out_of_range("qubit q" + std::to_string(global_qubit) +
                                " not in the simulated cluster set");
    return static_cast<int>(it - qubits_.begin());
}

std::vector<int> QubitMap::local_targets(const std::vector<int>& global_targets) const {
    std::vector<int> t(global_targets.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = local(global_targets[i]);
    return t;
}

void run_circuit_on(StateVector& state, const ClusteredCircuit& circuit, const QubitMap& map) {
    note_simulated_qubits(state.num_qubits());
    for (const auto& layer : circuit.layers()) {
        for (const auto& g : layer.inter)
            state.apply(inter_gate_matrix(g), {map.local(g.qubit_a), map.local(g.qubit_b)});
        for (const auto& g : layer.intra) state.apply(g.unitary, map.local_targets(g.targets));
    }
}

void apply_pauli(StateVector& state, const PauliString& pauli, const QubitMap& map,
                 int control) {
    for (auto& [q, p] : pauli.letters()) state.apply(pauli_matrix(p), {map.local(q)}, control);
}

double exact_expectation_on(const ClusteredCircuit& circuit, const PauliString& pauli,
                            const std::set<int>& clusters, const OracleLimits& limits) {
    QubitMap map(circuit.layout(), clusters);
    if (map.size() > limits.statevector_qubits)
        throw CapacityError("simulation needs " + std::to_string(map.size()) +
                            " qubits, above the oracle limit of " +
                            std::to_string(limits.statevector_qubits) +
                            "; restrict to the observable's light cone");
    StateVector psi(map.size());
    run_circuit_on(psi, circuit, map);
    StateVector phi = psi;
    apply_pauli(phi, pauli, map);
    return psi.inner(phi).real();
}

double exact_expectation(const ClusteredCircuit& circuit, const PauliString& pauli,
                         const OracleLimits& limits) {
    std::set<int> all;
    for (int c = 0; c < circuit.layout().num_clusters(); ++c) all.insert(c);
    return exact_expectation_on(circuit, pauli, all, limits);
}

double exact_observable_expectation(const ClusteredCircuit& circuit, const Observable& obs,
                                    const OracleLimits& limits) {
    double total = 0.0;
    for (size_t a = 0; a < obs.terms().size(); ++a) {
        const auto& term = obs.terms()[a];
        if (term.pauli.is_identity()) {
            total += term.coeff;
            continue;
        }
        LightCone cone = pauli_lightcone(circuit, term.pauli);
        try {
            total += term.coeff *
                     exact_expectation_on(cone.restricted_circuit, term.pauli,
                                          cone.cone_clusters, limits);
        } catch (const CapacityError& e) {
            throw CapacityError("term " + std::to_string(a) + " (" + term.pauli.to_string() +
                                "): " + e.what());
        }
    }
    return total;
}

cplx transition_amplitude(const std::vector<IntraGate>& prep_a,
                          const std::vector<IntraGate>& prep_b, const PauliString& pauli,
                          const QubitMap& map) {
    note_simulated_qubits(map.size());
    StateVector a(map.size()), b(map.size());
    for (const auto& g : prep_a) a.apply(g.unitary, map.local_targets(g.targets));
    for (const auto& g : prep_b) b.apply(g.unitary, map.local_targets(g.targets));
    apply_pauli(b, pauli, map);
    return a.inner(b);
}

std::vector<cplx> heisenberg_column(const ClusteredCircuit& circuit, const PauliString& pauli,
                                    const QubitMap& map, uint64_t column) {
    note_simulated_qubits(map.size());
    StateVector psi(map.size());
    psi.amplitudes()[0] = 0.0;
    psi.amplitudes()[column] = 1.0;
    run_circuit_on(psi, circuit, map);
    apply_pauli(psi, pauli, map);
    // inverse circuit: layers reversed, intra before inter inside a layer
    const auto& layers = circuit.layers();
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
        for (auto g = it->intra.rbegin(); g != it->intra.rend(); ++g)
            psi.apply(g->unitary.adjoint(), map.local_targets(g->targets));
        for (auto g = it->inter.rbegin(); g != it->inter.rend(); ++g)
            psi.apply(inter_gate_matrix(*g).adjoint(), {map.local(g->qubit_a), map.local(g->qubit_b)});
    }
    return psi.amplitudes();
}

CMatrix heisenberg_operator(const ClusteredCircuit& circuit, const PauliString& pauli,
                            const OracleLimits& limits) {
    std::set<int> all;
    for (int c = 0; c < circuit.layout().num_clusters(); ++c) all.insert(c);
    QubitMap map(circuit.layout(), all);
    if (map.size() > limits.dense_operator_qubits)
        throw CapacityError("dense operator build limited to " +
                            std::to_string(limits.dense_operator_qubits) + " qubits, got " +
                            std::to_string(map.size()));
    uint64_t dim = uint64_t{1} << map.size();
    CMatrix m(static_cast<int>(dim));
    for (uint64_t col = 0; col < dim; ++col) {
        auto v = heisenberg_column(circuit, pauli, map, col);
        for (uint64_t row = 0; row < dim; ++row)
            m(static_cast<int>(row), static_cast<int>(col)) = v[row];
    }
    return m;
}

}  // namespace lcone
