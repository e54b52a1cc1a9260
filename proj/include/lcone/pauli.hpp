#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "lcone/layout.hpp"
#include "lcone/matrix.hpp"

namespace lcone {

enum class PauliOp : char { X = 'X', Y = 'Y', Z = 'Z' };

CMatrix pauli_matrix(PauliOp p);
char pauli_char(PauliOp p);
PauliOp pauli_from_char(char c);

/// Sparse Pauli string: qubit -> non-identity letter. Empty map is identity.
class PauliString {
public:
    PauliString() = default;
    explicit PauliString(std::map<int, PauliOp> letters) : letters_(std::move(letters)) {}

    static PauliString single(PauliOp p, int qubit) { return PauliString({{qubit, p}}); }

    bool is_identity() const { return letters_.empty(); }
    const std::map<int, PauliOp>& letters() const { return letters_; }

    void set(int qubit, PauliOp p) { letters_[qubit] = p; }

    std::vector<int> support() const {
        std::vector<int> s;
        s.reserve(letters_.size());
        for (auto& [q, p] : letters_) s.push_back(q);
        return s;
    }

    /// Distinct clusters carrying at least one non-identity letter.
    std::set<int> support_clusters(const ClusterLayout& layout) const {
        std::set<int> cs;
        for (auto& [q, p] : letters_) cs.insert(layout.cluster_of(q));
        return cs;
    }

    int cluster_weight(const ClusterLayout& layout) const {
        return static_cast<int>(support_clusters(layout).size());
    }

    /// Sub-string on the given cluster set; letters elsewhere are dropped.
    PauliString restricted_to_clusters(const std::set<int>& clusters,
                                       const ClusterLayout& layout) const {
        std::map<int, PauliOp> kept;
        for (auto& [q, p] : letters_)
            if (clusters.count(layout.cluster_of(q))) kept.emplace(q, p);
        return PauliString(std::move(kept));
    }

    std::string to_string() const {
        if (letters_.empty()) return "I";
        std::string s;
        for (auto& [q, p] : letters_) {
            if (!s.empty()) s += ' ';
            s += pauli_char(p);
            s += 'q';
            s += std::to_string(q);
        }
        return s;
    }

    bool operator==(const PauliString& o) const { return letters_ == o.letters_; }

private:
    std::map<int, PauliOp> letters_;
};

struct ObservableTerm {
    double coeff = 0.0;
    PauliString pauli;
};

/// m-sparse weighted sum of Pauli strings with real coefficients.
class Observable {
public:
    Observable() = default;
    explicit Observable(std::vector<ObservableTerm> terms);

    const std::vector<ObservableTerm>& terms() const { return terms_; }
    size_t sparsity() const { return terms_.size(); }

    double one_norm() const {
        double s = 0.0;
        for (auto& t : terms_) s += std::abs(t.coeff);
        return s;
    }

    /// s: maximum cluster weight over terms.
    int locality(const ClusterLayout& layout) const {
        int s = 0;
        for (auto& t : terms_) s = std::max(s, t.pauli.cluster_weight(layout));
        return s;
    }

private:
    std::vector<ObservableTerm> terms_;
};

}  // namespace lcone
