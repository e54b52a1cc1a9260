#pragma once

#include <optional>
#include <set>

#include "lcone/circuit.hpp"
#include "lcone/statevector.hpp"

namespace lcone {

struct OracleLimits {
    int statevector_qubits = 24;
    int dense_operator_qubits = 12;
};

/// Map between a simulated register and the global qubit ids of a cluster
/// subset. Local bit i corresponds to qubits()[i].
class QubitMap {
public:
    QubitMap(const ClusterLayout& layout, const std::set<int>& clusters);

    int size() const { return static_cast<int>(qubits_.size()); }
    const std::vector<int>& qubits() const { return qubits_; }
    int local(int global_qubit) const;
    std::vector<int> local_targets(const std::vector<int>& global_targets) const;

private:
    std::vector<int> qubits_;
};

/// Applies the circuit layer by layer on the clusters of `map`. Every gate
/// must be supported inside the mapped clusters. Extra register qubits above
/// the mapped ones (e.g. a Hadamard-test ancilla) are left untouched.
void run_circuit_on(StateVector& state, const ClusteredCircuit& circuit, const QubitMap& map);

/// <0| U^dag P U |0> over the full register; capacity-limited.
double exact_expectation(const ClusteredCircuit& circuit, const PauliString& pauli,
                         const OracleLimits& limits = {});

/// Same, but simulating only the given clusters (the circuit must already be
/// restricted to them).
double exact_expectation_on(const ClusteredCircuit& circuit, const PauliString& pauli,
                            const std::set<int>& clusters, const OracleLimits& limits = {});

/// Per-term light-cone evaluation of a full observable.
double exact_observable_expectation(const ClusteredCircuit& circuit, const Observable& obs,
                                    const OracleLimits& limits = {});

/// <psi_a| P |psi_b> with |psi_x> = (sequence x)|0> over `num_qubits` local
/// qubits addressed through `map`.
cplx transition_amplitude(const std::vector<IntraGate>& prep_a,
                          const std::vector<IntraGate>& prep_b, const PauliString& pauli,
                          const QubitMap& map);

/// Dense U^dag P U; capacity-limited to dense_operator_qubits.
CMatrix heisenberg_operator(const ClusteredCircuit& circuit, const PauliString& pauli,
                            const OracleLimits& limits = {});

/// One column of U^dag P U over the mapped clusters (for streaming
/// comparisons without building the dense matrix).
std::vector<cplx> heisenberg_column(const ClusteredCircuit& circuit, const PauliString& pauli,
                                    const QubitMap& map, uint64_t column);

/// Applies a Pauli string through the map.
void apply_pauli(StateVector& state, const PauliString& pauli, const QubitMap& map,
                 int control = -1);

/// Largest register simulated so far (runtime ceiling checks).
int max_simulated_qubits();
void note_simulated_qubits(int n);
void reset_simulated_qubits();

}  // namespace lcone
