#pragma once

#include <complex>
#include <vector>

#include "lcone/layout.hpp"
#include "lcone/matrix.hpp"
#include "lcone/pauli.hpp"

namespace lcone {

/// Arbitrary unitary on up to d qubits inside one cluster.
struct IntraGate {
    int cluster = 0;
    std::vector<int> targets;  // global qubit ids, all within `cluster`
    CMatrix unitary;           // dim 2^targets.size()
};

/// Two-qubit Pauli rotation exp(-i theta/2 P_a x P_b) bridging two
/// adjacent clusters.
struct InterGate {
    PauliOp pauli_a = PauliOp::Z;
    PauliOp pauli_b = PauliOp::Z;
    int qubit_a = 0;
    int qubit_b = 0;
    double theta = 0.0;
};

/// 4x4 matrix of an inter gate: cos(theta/2) I - i sin(theta/2) (P_a x P_b).
CMatrix inter_gate_matrix(const InterGate& g);

struct Layer {
    std::vector<InterGate> inter;
    std::vector<IntraGate> intra;
};

/// Layered clustered circuit. Within layer t the inter gates V_t apply
/// first, then the intra gates W_t.
class ClusteredCircuit {
public:
    explicit ClusteredCircuit(ClusterLayout layout) : layout_(std::move(layout)) {}

    const ClusterLayout& layout() const { return layout_; }
    const std::vector<Layer>& layers() const { return layers_; }
    int depth() const { return static_cast<int>(layers_.size()); }

    cplx global_phase() const { return global_phase_; }
    void multiply_global_phase(cplx p) { global_phase_ *= p; }

    /// Appends a layer after checking layer-local invariants
    /// (qubit-disjointness, adjacency, unitarity).
    void add_layer(Layer layer);

    /// Total inter gate count across layers.
    int inter_gate_count() const {
        int n = 0;
        for (auto& l : layers_) n += static_cast<int>(l.inter.size());
        return n;
    }

private:
    ClusterLayout layout_;
    std::vector<Layer> layers_;
    cplx global_phase_{1.0, 0.0};
};

/// Validates one layer against the layout; throws ValidationError.
void validate_layer(const Layer& layer, const ClusterLayout& layout);

constexpr double kUnitaryTol = 1e-10;

}  // namespace lcone
