#include "lcone/lightcone.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lcone/errors.hpp"

namespace lcone {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<int> parent_;
};

// Joint reverse-layer sweep. Retention rule: at layer t (processed from the
// last layer down), an intra gate is kept iff its cluster is already in the
// sweep set; an inter gate is kept iff at least one endpoint is in the set,
// after which both endpoints join it.
LightCone sweep(const ClusteredCircuit& circuit, const std::set<int>& targets,
                const PauliString& term) {
    const ClusterLayout& lay = circuit.layout();
    LightCone cone{false, targets, targets, ClusteredCircuit(lay), 0, 0, {}};

    int depth = circuit.depth();
    std::vector<Layer> retained(depth);
    std::set<int>& reach = cone.cone_clusters;
    for (int t = depth - 1; t >= 0; --t) {
        const Layer& layer = circuit.layers()[t];
        // W_t applies after V_t, so it is met first going backwards.
        for (const auto& g : layer.intra)
            if (reach.count(g.cluster)) retained[t].intra.push_back(g);
        for (const auto& g : layer.inter) {
            int ca = lay.cluster_of(g.qubit_a);
            int cb = lay.cluster_of(g.qubit_b);
            if (reach.count(ca) || reach.count(cb)) {
                retained[t].inter.push_back(g);
                reach.insert(ca);
                reach.insert(cb);
                ++cone.volume;
            }
        }
    }
    for (auto& l : retained) cone.restricted_circuit.add_layer(std::move(l));

    for (int c : cone.cone_clusters) {
        int dmin = -1;
        for (int j : targets) {
            int d = lay.distance(j, c);
            if (dmin < 0 || d < dmin) dmin = d;
        }
        cone.range = std::max(cone.range, dmin);
    }

    // connected components over retained inter gates
    UnionFind uf(lay.num_clusters());
    for (const auto& layer : cone.restricted_circuit.layers())
        for (const auto& g : layer.inter)
            uf.unite(lay.cluster_of(g.qubit_a), lay.cluster_of(g.qubit_b));

    std::map<int, std::set<int>> groups;  // keyed by root == smallest member
    for (int c : cone.cone_clusters) groups[uf.find(c)].insert(c);

    for (auto& [root, clusters] : groups) {
        ConeComponent comp{clusters, ClusteredCircuit(lay), PauliString{}, 0};
        for (const auto& layer : cone.restricted_circuit.layers()) {
            Layer sub;
            for (const auto& g : layer.inter)
                if (clusters.count(lay.cluster_of(g.qubit_a))) {
                    sub.inter.push_back(g);
                    ++comp.volume;
                }
            for (const auto& g : layer.intra)
                if (clusters.count(g.cluster)) sub.intra.push_back(g);
            comp.circuit.add_layer(std::move(sub));
        }
        comp.pauli = term.restricted_to_clusters(clusters, lay);
        cone.components.push_back(std::move(comp));
    }
    return cone;
}

}  // namespace

LightCone cluster_lightcone(const ClusteredCircuit& circuit, int target) {
    if (target < 0 || target >= circuit.layout().num_clusters())
        throw std::out_of_range("invalid target cluster " + std::to_string(target));
    return sweep(circuit, {target}, PauliString{});
}

LightCone pauli_lightcone(const ClusteredCircuit& circuit, const PauliString& term) {
    if (term.is_identity()) {
        LightCone cone{true, {}, {}, ClusteredCircuit(circuit.layout()), 0, 0, {}};
        return cone;
    }
    return sweep(circuit, term.support_clusters(circuit.layout()), term);
}

int range_of_unitary(const ClusteredCircuit& circuit) {
    int r = 0;
    for (int j = 0; j < circuit.layout().num_clusters(); ++j)
        r = std::max(r, cluster_lightcone(circuit, j).range);
    return r;
}

}  // namespace lcone
