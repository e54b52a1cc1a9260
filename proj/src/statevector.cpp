#include "lcone/statevector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lcone {

namespace {

// Inserts zero bits at the (ascending) positions in `bits`.
inline uint64_t expand_index(uint64_t m, const std::vector<int>& bits) {
    for (int b : bits) {
        uint64_t low = m & ((uint64_t{1} << b) - 1);
        m = ((m >> b) << (b + 1)) | low;
    }
    return m;
}

struct GatePlan {
    int k;
    std::vector<int> sorted_bits;
    std::vector<uint64_t> offsets;  // gate row index -> amplitude offset
};

GatePlan make_plan(const std::vector<int>& targets, int nq) {
    GatePlan p;
    p.k = static_cast<int>(targets.size());
    for (int t : targets)
        if (t < 0 || t >= nq) throw std::out_of_range("gate target outside the register");
    p.sorted_bits = targets;
    std::sort(p.sorted_bits.begin(), p.sorted_bits.end());
    p.offsets.resize(size_t{1} << p.k);
    for (uint64_t r = 0; r < p.offsets.size(); ++r) {
        uint64_t off = 0;
        for (int j = 0; j < p.k; ++j)
            if ((r >> (p.k - 1 - j)) & 1) off |= uint64_t{1} << targets[j];
        p.offsets[r] = off;
    }
    return p;
}

template <bool Parallel>
void apply_impl(std::vector<cplx>& amp, int nq, const CMatrix& u,
                const std::vector<int>& targets, int control) {
    GatePlan plan = make_plan(targets, nq);
    const int k = plan.k;
    const uint64_t groups = uint64_t{1} << (nq - k);
    const uint64_t dim = uint64_t{1} << k;
    const uint64_t cmask = control >= 0 ? (uint64_t{1} << control) : 0;

#pragma omp parallel for schedule(static) if (Parallel)
    for (int64_t m = 0; m < static_cast<int64_t>(groups); ++m) {
        uint64_t base = expand_index(static_cast<uint64_t>(m), plan.sorted_bits);
        if (cmask && !(base & cmask)) continue;
        cplx local[64];
        cplx* buf = local;
        std::vector<cplx> heap;
        if (dim > 64) {
            heap.resize(dim);
            buf = heap.data();
        }
        for (uint64_t r = 0; r < dim; ++r) buf[r] = amp[base | plan.offsets[r]];
        for (uint64_t r = 0; r < dim; ++r) {
            cplx acc{};
            for (uint64_t c = 0; c < dim; ++c) acc += u(static_cast<int>(r), static_cast<int>(c)) * buf[c];
            amp[base | plan.offsets[r]] = acc;
        }
    }
}

}  // namespace

StateVector::StateVector(int num_qubits) : nq_(num_qubits), amp_(size_t{1} << num_qubits) {
    amp_[0] = 1.0;
}

void StateVector::apply(const CMatrix& u, const std::vector<int>& targets, int control) {
    if (nq_ - static_cast<int>(targets.size()) >= 14)
        apply_parallel(u, targets, control);
    else
        apply_serial(u, targets, control);
}

void StateVector::apply_serial(const CMatrix& u, const std::vector<int>& targets, int control) {
    apply_impl<false>(amp_, nq_, u, targets, control);
}

void StateVector::apply_parallel(const CMatrix& u, const std::vector<int>& targets,
                                 int control) {
    apply_impl<true>(amp_, nq_, u, targets, control);
}

double StateVector::norm() const {
    double s = 0.0;
    for (const auto& a : amp_) s += std::norm(a);
    return std::sqrt(s);
}

cplx StateVector::inner(const StateVector& other) const {
    cplx s{};
    for (size_t i = 0; i < amp_.size(); ++i) s += std::conj(amp_[i]) * other.amp_[i];
    return s;
}

double StateVector::z_expectation(int qubit) const {
    double s = 0.0;
    uint64_t mask = uint64_t{1} << qubit;
    for (size_t i = 0; i < amp_.size(); ++i)
        s += (i & mask) ? -std::norm(amp_[i]) : std::norm(amp_[i]);
    return s;
}

}  // namespace lcone
