#pragma once

#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcone/errors.hpp"

namespace lcone {

enum class LayoutKind { Lattice, AllToAll };

/// Partition of n = N*d qubits into N uniform clusters of d qubits each.
/// Qubit q belongs to cluster q / d. Lattice layouts place clusters on a
/// D-dimensional grid with L1 adjacency; all-to-all layouts make every
/// distinct pair adjacent.
class ClusterLayout {
public:
    static ClusterLayout lattice(std::vector<int> extents, int cluster_size) {
        if (extents.empty()) throw ValidationError("lattice layout needs at least one extent");
        int n = 1;
        for (int e : extents) {
            if (e < 1) throw ValidationError("lattice extents must be positive");
            n *= e;
        }
        ClusterLayout l;
        l.kind_ = LayoutKind::Lattice;
        l.extents_ = std::move(extents);
        l.num_clusters_ = n;
        l.cluster_size_ = check_cluster_size(cluster_size);
        return l;
    }

    static ClusterLayout all_to_all(int num_clusters, int cluster_size) {
        if (num_clusters < 1) throw ValidationError("cluster count must be positive");
        ClusterLayout l;
        l.kind_ = LayoutKind::AllToAll;
        l.num_clusters_ = num_clusters;
        l.cluster_size_ = check_cluster_size(cluster_size);
        return l;
    }

    LayoutKind kind() const { return kind_; }
    int dim() const { return static_cast<int>(extents_.size()); }
    const std::vector<int>& extents() const { return extents_; }
    int num_clusters() const { return num_clusters_; }
    int cluster_size() const { return cluster_size_; }
    int num_qubits() const { return num_clusters_ * cluster_size_; }

    int cluster_of(int qubit) const {
        if (qubit < 0 || qubit >= num_qubits())
            throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                    " outside [0, " + std::to_string(num_qubits()) + ")");
        return qubit / cluster_size_;
    }

    std::vector<int> cluster_qubits(int cluster) const {
        check_cluster(cluster);
        std::vector<int> qs(cluster_size_);
        for (int i = 0; i < cluster_size_; ++i) qs[i] = cluster * cluster_size_ + i;
        return qs;
    }

    std::vector<int> coords(int cluster) const {
        check_cluster(cluster);
        std::vector<int> c(extents_.size());
        for (size_t k = 0; k < extents_.size(); ++k) {
            c[k] = cluster % extents_[k];
            cluster /= extents_[k];
        }
        return c;
    }

    bool adjacent(int a, int b) const { return a != b && distance(a, b) == 1; }

    /// L1 graph distance between clusters; 0/1 for all-to-all layouts.
    int distance(int a, int b) const {
        check_cluster(a);
        check_cluster(b);
        if (a == b) return 0;
        if (kind_ == LayoutKind::AllToAll) return 1;
        auto ca = coords(a), cb = coords(b);
        int d = 0;
        for (size_t k = 0; k < ca.size(); ++k) d += std::abs(ca[k] - cb[k]);
        return d;
    }

    bool operator==(const ClusterLayout& o) const {
        return kind_ == o.kind_ && extents_ == o.extents_ &&
               num_clusters_ == o.num_clusters_ && cluster_size_ == o.cluster_size_;
    }

private:
    ClusterLayout() = default;

    static int check_cluster_size(int d) {
        if (d < 1) throw ValidationError("cluster size must be positive");
        return d;
    }

    void check_cluster(int c) const {
        if (c < 0 || c >= num_clusters_)
            throw std::out_of_range("cluster index " + std::to_string(c) + " outside [0, " +
                                    std::to_string(num_clusters_) + ")");
    }

    LayoutKind kind_ = LayoutKind::Lattice;
    std::vector<int> extents_;
    int num_clusters_ = 0;
    int cluster_size_ = 1;
};

}  // namespace lcone
