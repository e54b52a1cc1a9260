#pragma once

#include <set>
#include <vector>

#include "lcone/circuit.hpp"
#include "lcone/pauli.hpp"

namespace lcone {

/// One connected component of a Pauli-term light cone, with its own
/// restricted circuit and the restriction of the term to its qubits.
struct ConeComponent {
    std::set<int> clusters;
    ClusteredCircuit circuit;
    PauliString pauli;
    int volume = 0;
};

/// Reverse-reachability (syntactic) light cone of one Pauli term or one
/// target cluster.
struct LightCone {
    bool identity = false;  // degenerate cone of an identity term
    std::set<int> target_clusters;
    std::set<int> cone_clusters;
    ClusteredCircuit restricted_circuit;
    int volume = 0;  // inter gates retained
    int range = 0;   // max distance target -> cone member
    std::vector<ConeComponent> components;  // ordered by smallest member id
};

/// Cone of a single target cluster (observable support = that cluster).
LightCone cluster_lightcone(const ClusteredCircuit& circuit, int target);

/// Combined cone of a Pauli term: joint reverse sweep from all support
/// clusters; components found by union-find over retained inter gates.
LightCone pauli_lightcone(const ClusteredCircuit& circuit, const PauliString& term);

/// max_j range(cluster_lightcone(j)); always <= depth T.
int range_of_unitary(const ClusteredCircuit& circuit);

}  // namespace lcone
