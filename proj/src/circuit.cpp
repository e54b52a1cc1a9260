#include "lcone/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lcone/errors.hpp"

namespace lcone {

CMatrix pauli_matrix(PauliOp p) {
    CMatrix m(2);
    switch (p) {
        case PauliOp::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case PauliOp::Y:
            m(0, 1) = cplx{0.0, -1.0};
            m(1, 0) = cplx{0.0, 1.0};
            break;
        case PauliOp::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
    }
    return m;
}

char pauli_char(PauliOp p) { return static_cast<char>(p); }

PauliOp pauli_from_char(char c) {
    switch (c) {
        case 'X': return PauliOp::X;
        case 'Y': return PauliOp::Y;
        case 'Z': return PauliOp::Z;
        default: throw ValidationError(std::string("unknown Pauli letter '") + c + "'");
    }
}

Observable::Observable(std::vector<ObservableTerm> terms) : terms_(std::move(terms)) {
    for (auto& t : terms_)
        if (t.coeff == 0.0) throw ValidationError("observable stores a zero coefficient");
}

CMatrix inter_gate_matrix(const InterGate& g) {
    CMatrix pq = pauli_matrix(g.pauli_a).kron(pauli_matrix(g.pauli_b));
    CMatrix m = CMatrix::identity(4);
    m *= std::cos(g.theta / 2.0);
    pq *= cplx{0.0, -std::sin(g.theta / 2.0)};
    m += pq;
    return m;
}

void validate_layer(const Layer& layer, const ClusterLayout& layout) {
    std::set<int> inter_clusters;
    std::set<int> used_qubits;
    for (const auto& g : layer.inter) {
        int ca = layout.cluster_of(g.qubit_a);
        int cb = layout.cluster_of(g.qubit_b);
        if (ca == cb)
            throw ValidationError("inter gate endpoints q" + std::to_string(g.qubit_a) + " q" +
                                  std::to_string(g.qubit_b) + " lie in the same cluster");
        if (!layout.adjacent(ca, cb))
            throw ValidationError("non-adjacent clusters C" + std::to_string(ca) + ",C" +
                                  std::to_string(cb) + " in inter gate");
        if (!inter_clusters.insert(ca).second || !inter_clusters.insert(cb).second)
            throw ValidationError("cluster pair C" + std::to_string(ca) + ",C" +
                                  std::to_string(cb) + " overlaps another inter gate in the layer");
        if (!used_qubits.insert(g.qubit_a).second || !used_qubits.insert(g.qubit_b).second)
            throw ValidationError("qubit reused within a layer");
        if (!(g.theta > -2.0 * M_PI && g.theta <= 2.0 * M_PI + 1e-15))
            throw ValidationError("inter gate angle outside (-2pi, 2pi]");
    }
    std::set<int> intra_clusters;
    for (const auto& g : layer.intra) {
        if (g.targets.empty()) throw ValidationError("intra gate with no targets");
        if (static_cast<int>(g.targets.size()) > layout.cluster_size())
            throw ValidationError("intra gate targets exceed cluster size");
        std::set<int> tset(g.targets.begin(), g.targets.end());
        if (tset.size() != g.targets.size())
            throw ValidationError("intra gate repeats a target qubit");
        for (int q : g.targets)
            if (layout.cluster_of(q) != g.cluster)
                throw ValidationError("intra gate target q" + std::to_string(q) +
                                      " outside cluster C" + std::to_string(g.cluster));
        if (!intra_clusters.insert(g.cluster).second)
            throw ValidationError("cluster C" + std::to_string(g.cluster) +
                                  " appears in two intra gates in one layer");
        if (g.unitary.dim() != (1 << g.targets.size()))
            throw ValidationError("intra gate matrix dimension does not match target count");
        double dev = g.unitary.unitarity_deviation();
        if (dev > kUnitaryTol)
            throw ValidationError("non-unitary intra gate matrix, deviation " +
                                  std::to_string(dev));
    }
}

void ClusteredCircuit::add_layer(Layer layer) {
    validate_layer(layer, layout_);
    layers_.push_back(std::move(layer));
}

}  // namespace lcone
