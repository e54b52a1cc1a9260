#include "lcone/algebraic.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "lcone/errors.hpp"

namespace lcone {

LocalExpansion::LocalExpansion(const LightCone& cone) {
    const ClusteredCircuit& circuit = cone.restricted_circuit;
    const ClusterLayout& lay = circuit.layout();
    clusters_ = cone.cone_clusters;
    if (cone.volume > 62) throw BudgetError("light-cone volume too large to enumerate branches");

    for (const auto& layer : circuit.layers()) {
        for (const auto& g : layer.inter) {
            int idx = volume_++;
            double c = std::cos(g.theta / 2.0), s = std::sin(g.theta / 2.0);
            weight_id_.push_back(c);
            weight_pauli_.push_back(cplx{0.0, -s});
            weight_norm_ *= std::abs(c) + std::abs(s);
            // Pauli factors become single-qubit intra gates at the gate's
            // position in circuit order.
            IntraGate ga{lay.cluster_of(g.qubit_a), {g.qubit_a}, pauli_matrix(g.pauli_a)};
            IntraGate gb{lay.cluster_of(g.qubit_b), {g.qubit_b}, pauli_matrix(g.pauli_b)};
            timeline_[ga.cluster].push_back({idx, std::move(ga)});
            timeline_[gb.cluster].push_back({idx, std::move(gb)});
        }
        for (const auto& g : layer.intra) timeline_[g.cluster].push_back({-1, g});
    }
}

cplx LocalExpansion::branch_weight(uint64_t mask) const {
    cplx w{1.0, 0.0};
    for (int i = 0; i < volume_; ++i) w *= (mask >> i) & 1 ? weight_pauli_[i] : weight_id_[i];
    return w;
}

std::vector<IntraGate> LocalExpansion::branch_sequence(uint64_t mask, int cluster) const {
    std::vector<IntraGate> seq;
    auto it = timeline_.find(cluster);
    if (it == timeline_.end()) return seq;
    for (const auto& slot : it->second) {
        if (slot.gate_index < 0 || ((mask >> slot.gate_index) & 1)) seq.push_back(slot.gate);
    }
    return seq;
}

LocalExpansion decompose_lightcone_circuit(const LightCone& cone) { return LocalExpansion(cone); }

double hadamard_second_moment(cplx mu, long shots) {
    double r = std::norm(mu);
    return r + 2.0 * (2.0 - r) / shots;
}

double crossterm_variance_bound(const std::vector<cplx>& amplitudes,
                                const std::vector<long>& shots) {
    if (amplitudes.empty() || amplitudes.size() != shots.size())
        throw std::domain_error("amplitude/shot lists must be non-empty and aligned");
    double prod = 1.0, sum = 0.0;
    for (size_t l = 0; l < amplitudes.size(); ++l) {
        if (std::abs(amplitudes[l]) > 1.0 + 1e-12)
            throw std::domain_error("|amplitude| must be <= 1");
        if (shots[l] < 2) throw std::domain_error("shots must be >= 2 per complex estimate");
        double m2 = hadamard_second_moment(amplitudes[l], shots[l]);
        prod *= m2;
        sum += (m2 - std::norm(amplitudes[l])) / m2;
    }
    return prod * sum;
}

double crossterm_exact_variance(const std::vector<cplx>& amplitudes,
                                const std::vector<long>& shots) {
    if (amplitudes.empty() || amplitudes.size() != shots.size())
        throw std::domain_error("amplitude/shot lists must be non-empty and aligned");
    double second = 1.0, mean_sq = 1.0;
    for (size_t l = 0; l < amplitudes.size(); ++l) {
        second *= hadamard_second_moment(amplitudes[l], shots[l]);
        mean_sq *= std::norm(amplitudes[l]);
    }
    return second - mean_sq;
}

EstimateReport estimate_algebraic(const ClusteredCircuit& circuit, const Observable& obs,
                                  double epsilon, uint64_t seed, const AlgebraicConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    if (epsilon <= 0.0) throw ConfigError("epsilon must be positive");

    const ClusterLayout& lay = circuit.layout();
    size_t m = obs.terms().size();

    std::vector<LightCone> cones;
    std::vector<LocalExpansion> expansions;
    std::vector<ExpansionShape> shapes(m);
    cones.reserve(m);
    long total_tasks = 0;
    for (size_t a = 0; a < m; ++a) {
        cones.push_back(pauli_lightcone(circuit, obs.terms()[a].pauli));
        expansions.emplace_back(cones[a]);
        if (!cones[a].identity) {
            shapes[a].branches = static_cast<long>(expansions[a].num_branches());
            shapes[a].size = static_cast<long>(cones[a].cone_clusters.size());
            total_tasks += shapes[a].branches * shapes[a].branches * shapes[a].size;
        }
        if (total_tasks > cfg.task_budget)
            throw BudgetError("task budget " + std::to_string(cfg.task_budget) +
                              " exceeded at term " + std::to_string(a) + ": N=" +
                              std::to_string(expansions[a].num_branches()) + " Size=" +
                              std::to_string(cones[a].cone_clusters.size()) + " Vol=" +
                              std::to_string(cones[a].volume));
    }
    ShotPlan plan = plan_algebraic(obs, shapes, epsilon, cfg.delta, cfg.variance_constant);

    EstimateReport rep;
    rep.method = "algebraic";
    rep.plan = plan;
    rep.circuit_depth = circuit.depth();
    rep.hadamard_depth = 2 * circuit.depth() + 1;
    rep.max_device_qubits = lay.cluster_size() + 1;

    cplx total{};
    for (size_t a = 0; a < m; ++a) {
        if (cones[a].identity) {
            rep.term_estimates.push_back(1.0);
            total += obs.terms()[a].coeff;
            continue;
        }
        const LocalExpansion& exp = expansions[a];
        std::vector<int> cone_clusters(cones[a].cone_clusters.begin(),
                                       cones[a].cone_clusters.end());
        std::vector<QubitMap> maps;
        std::vector<PauliString> restrictions;
        for (int c : cone_clusters) {
            maps.emplace_back(lay, std::set<int>{c});
            if (maps.back().size() > lay.cluster_size())
                throw std::logic_error("single-cluster device exceeds d qubits");
            restrictions.push_back(
                obs.terms()[a].pauli.restricted_to_clusters({c}, lay));
        }
        long K = plan.shots_per_task[a];
        long shots_real = std::max<long>(1, K - K / 2);
        long shots_imag = std::max<long>(1, K / 2);

        uint64_t n_br = exp.num_branches();
        int64_t n_pairs = static_cast<int64_t>(n_br) * static_cast<int64_t>(n_br);
        std::vector<cplx> eta(n_pairs);
#pragma omp parallel for schedule(dynamic)
        for (int64_t p = 0; p < n_pairs; ++p) {
            uint64_t j = static_cast<uint64_t>(p) / n_br;
            uint64_t k = static_cast<uint64_t>(p) % n_br;
            cplx prod{1.0, 0.0};
            for (size_t l = 0; l < cone_clusters.size(); ++l) {
                ShotStream stream(seed, ShotStream::stream_id(2, a, static_cast<uint64_t>(p),
                                                              static_cast<uint64_t>(l)));
                prod *= hadamard_test(exp.branch_sequence(j, cone_clusters[l]),
                                      exp.branch_sequence(k, cone_clusters[l]), restrictions[l],
                                      maps[l], shots_real, shots_imag, stream,
                                      cfg.hadamard_mode);
            }
            eta[p] = prod;
        }
        cplx mu_alpha{};
        for (int64_t p = 0; p < n_pairs; ++p) {
            uint64_t j = static_cast<uint64_t>(p) / n_br;
            uint64_t k = static_cast<uint64_t>(p) % n_br;
            mu_alpha += std::conj(exp.branch_weight(j)) * exp.branch_weight(k) * eta[p];
        }
        rep.term_estimates.push_back(mu_alpha.real());
        total += obs.terms()[a].coeff * mu_alpha;
        rep.total_shots += (shots_real + shots_imag) * n_pairs *
                           static_cast<long>(cone_clusters.size());
        double c = obs.terms()[a].coeff;
        rep.variance_bound += c * c * cfg.variance_constant *
                              static_cast<double>(n_pairs) * cone_clusters.size() / K;
    }
    rep.estimate = total.real();
    rep.imag_diagnostic = total.imag();

    if (cfg.compute_oracle) {
        try {
            rep.oracle = exact_observable_expectation(circuit, obs, cfg.limits);
        } catch (const CapacityError&) {}
    }
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

}  // namespace lcone
