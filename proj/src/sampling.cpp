#include "lcone/sampling.hpp"

#include <cmath>
#include <stdexcept>

#include "lcone/errors.hpp"

namespace lcone {

namespace {

constexpr uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

inline uint64_t fin(uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

inline uint64_t stream_key(uint64_t seed, uint64_t stream) {
    return fin(seed ^ fin(stream * kGolden + 0x632be59bd9b4e019ULL));
}

}  // namespace

uint64_t ShotStream::stream_id(uint64_t a, uint64_t b, uint64_t c, uint64_t d) {
    uint64_t h = fin(a + kGolden);
    h = fin(h ^ (b + 0x7f4a7c15ULL));
    h = fin(h ^ (c + 0x2545f4914f6cdd1dULL));
    h = fin(h ^ (d + 0xda942042e4dd58b5ULL));
    return h;
}

uint64_t ShotStream::next_u64() {
    ++counter_;
    return fin(stream_key(seed_, stream_) + counter_ * kGolden);
}

double ShotStream::next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

SampleStats sample_pm(double mu_exact, long shots, ShotStream& stream) {
    if (shots < 1) throw std::domain_error("shot count must be >= 1");
    long plus = 0;
    for (long i = 0; i < shots; ++i)
        if (stream.next_pm(mu_exact) > 0) ++plus;
    SampleStats st;
    st.shots = shots;
    st.mean = (2.0 * plus - shots) / shots;
    // outcomes are +-1, so the unbiased sample variance has a closed form
    st.variance = shots > 1 ? shots * (1.0 - st.mean * st.mean) / (shots - 1) : 0.0;
    return st;
}

SampleStats sample_pauli_measurement(const ClusteredCircuit& circuit, const PauliString& pauli,
                                     const std::set<int>& clusters, long shots,
                                     ShotStream stream, const OracleLimits& limits) {
    double mu = exact_expectation_on(circuit, pauli, clusters, limits);
    return sample_pm(mu, shots, stream);
}

cplx hadamard_branch_means(const std::vector<IntraGate>& prep_j,
                           const std::vector<IntraGate>& prep_k, const PauliString& pauli,
                           const QubitMap& map, HadamardMode mode) {
    if (mode == HadamardMode::Shortcut) {
        return transition_amplitude(prep_j, prep_k, pauli, map);
    }
    // Full ancilla construction: H, controlled V_k, controlled P, controlled
    // V_j^dag, (S^dag for the imaginary branch), H; depth 2T+1.
    int anc = map.size();
    note_simulated_qubits(anc + 1);
    CMatrix h(2);
    double inv_sqrt2 = 1.0 / std::sqrt(2.0);
    h(0, 0) = h(0, 1) = h(1, 0) = inv_sqrt2;
    h(1, 1) = -inv_sqrt2;
    CMatrix sdg(2);
    sdg(0, 0) = 1.0;
    sdg(1, 1) = cplx{0.0, -1.0};

    double re = 0.0, im = 0.0;
    for (int branch = 0; branch < 2; ++branch) {
        StateVector psi(anc + 1);
        psi.apply(h, {anc});
        for (const auto& g : prep_k) psi.apply(g.unitary, map.local_targets(g.targets), anc);
        apply_pauli(psi, pauli, map, anc);
        for (auto it = prep_j.rbegin(); it != prep_j.rend(); ++it)
            psi.apply(it->unitary.adjoint(), map.local_targets(it->targets), anc);
        if (branch == 1) psi.apply(sdg, {anc});
        psi.apply(h, {anc});
        (branch == 0 ? re : im) = psi.z_expectation(anc);
    }
    return {re, im};
}

cplx hadamard_test(const std::vector<IntraGate>& prep_j, const std::vector<IntraGate>& prep_k,
                   const PauliString& pauli, const QubitMap& map, long shots_real,
                   long shots_imag, ShotStream stream, HadamardMode mode) {
    if (shots_real < 1 || shots_imag < 1)
        throw std::domain_error("hadamard test needs at least one shot per branch");
    cplx means = hadamard_branch_means(prep_j, prep_k, pauli, map, mode);
    SampleStats re = sample_pm(means.real(), shots_real, stream);
    SampleStats im = sample_pm(means.imag(), shots_imag, stream);
    return {re.mean, im.mean};
}

}  // namespace lcone
