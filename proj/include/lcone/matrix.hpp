#pragma once

#include <cmath>
#include <complex>
#include <vector>

namespace lcone {

using cplx = std::complex<double>;

/// Small dense complex matrix, row-major. Used for gate matrices and the
/// dense operator builds in tests; statevectors live elsewhere.
class CMatrix {
public:
    CMatrix() = default;
    explicit CMatrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim) {}
    CMatrix(int dim, std::vector<cplx> data) : dim_(dim), a_(std::move(data)) {}

    static CMatrix identity(int dim) {
        CMatrix m(dim);
        for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
        return m;
    }

    int dim() const { return dim_; }
    cplx& operator()(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const cplx& operator()(int r, int c) const { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const std::vector<cplx>& data() const { return a_; }
    std::vector<cplx>& data() { return a_; }

    CMatrix adjoint() const {
        CMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) m(c, r) = std::conj((*this)(r, c));
        return m;
    }

    CMatrix operator*(const CMatrix& o) const {
        CMatrix m(dim_);
        for (int r = 0; r < dim_; ++r)
            for (int k = 0; k < dim_; ++k) {
                cplx v = (*this)(r, k);
                if (v == cplx{}) continue;
                for (int c = 0; c < dim_; ++c) m(r, c) += v * o(k, c);
            }
        return m;
    }

    CMatrix& operator+=(const CMatrix& o) {
        for (size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }

    CMatrix& operator*=(cplx s) {
        for (auto& v : a_) v *= s;
        return *this;
    }

    CMatrix kron(const CMatrix& o) const {
        CMatrix m(dim_ * o.dim_);
        for (int r1 = 0; r1 < dim_; ++r1)
            for (int c1 = 0; c1 < dim_; ++c1)
                for (int r2 = 0; r2 < o.dim_; ++r2)
                    for (int c2 = 0; c2 < o.dim_; ++c2)
                        m(r1 * o.dim_ + r2, c1 * o.dim_ + c2) = (*this)(r1, c1) * o(r2, c2);
        return m;
    }

    /// max |(U^dag U - I)_{rc}|
    double unitarity_deviation() const {
        CMatrix p = adjoint() * (*this);
        double dev = 0.0;
        for (int r = 0; r < dim_; ++r)
            for (int c = 0; c < dim_; ++c) {
                cplx expect = (r == c) ? cplx{1.0, 0.0} : cplx{};
                dev = std::max(dev, std::abs(p(r, c) - expect));
            }
        return dev;
    }

    double max_abs_diff(const CMatrix& o) const {
        double m = 0.0;
        for (size_t i = 0; i < a_.size(); ++i) m = std::max(m, std::abs(a_[i] - o.a_[i]));
        return m;
    }

private:
    int dim_ = 0;
    std::vector<cplx> a_;
};

}  // namespace lcone
