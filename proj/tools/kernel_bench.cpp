// Micro-benchmark: serial vs OpenMP statevector kernels on random
// single/two-qubit gate sweeps. Prints one line per (qubits, kernel) pair
// and the speedup, plus a max-amplitude-difference check between the two.

#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lcone/matrix.hpp"
#include "lcone/statevector.hpp"

using namespace lcone;

namespace {

CMatrix random_unitary(int dim, std::mt19937_64& rng) {
    std::normal_distribution<double> g;
    CMatrix a(dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = {g(rng), g(rng)};
    // Gram-Schmidt on rows
    for (int i = 0; i < dim; ++i) {
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

struct GateSweep {
    std::vector<CMatrix> mats;
    std::vector<std::vector<int>> targets;
};

GateSweep make_sweep(int nq, int gates, std::mt19937_64& rng) {
    GateSweep sw;
    std::uniform_int_distribution<int> pick(0, nq - 1);
    for (int g = 0; g < gates; ++g) {
        if (g % 2 == 0) {
            sw.mats.push_back(random_unitary(2, rng));
            sw.targets.push_back({pick(rng)});
        } else {
            int a = pick(rng), b;
            do { b = pick(rng); } while (b == a);
            sw.mats.push_back(random_unitary(4, rng));
            sw.targets.push_back({a, b});
        }
    }
    return sw;
}

template <typename Apply>
double time_sweep(StateVector& st, const GateSweep& sw, Apply&& apply) {
    auto t0 = std::chrono::steady_clock::now();
    for (size_t g = 0; g < sw.mats.size(); ++g) apply(st, sw.mats[g], sw.targets[g]);
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    int max_qubits = argc > 1 ? std::stoi(argv[1]) : 22;
    int gates = argc > 2 ? std::stoi(argv[2]) : 200;
    std::mt19937_64 rng(12345);

    std::printf("%-8s %-10s %-10s %-8s %s\n", "qubits", "serial_s", "omp_s", "speedup",
                "max_diff");
    for (int nq = 14; nq <= max_qubits; nq += 2) {
        GateSweep sw = make_sweep(nq, gates, rng);
        StateVector a(nq), b(nq);
        double ts = time_sweep(a, sw, [](StateVector& s, const CMatrix& u,
                                         const std::vector<int>& t) { s.apply_serial(u, t); });
        double tp = time_sweep(b, sw, [](StateVector& s, const CMatrix& u,
                                         const std::vector<int>& t) { s.apply_parallel(u, t); });
        double diff = 0.0;
        for (size_t i = 0; i < a.size(); ++i)
            diff = std::max(diff, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
        std::printf("%-8d %-10.4f %-10.4f %-8.2f %.3e\n", nq, ts, tp, ts / tp, diff);
        if (diff > 1e-10) {
            std::fprintf(stderr, "kernel mismatch at %d qubits\n", nq);
            return 1;
        }
    }
    return 0;
}
