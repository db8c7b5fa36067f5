#pragma once

#include <numeric>
#include <vector>

namespace rgbt {

/// Union-find that tracks the parity between each element and its root.
/// relate(a, b, p) records side(a) xor side(b) == p and reports whether that
/// is consistent with what was recorded before.
class ParityUnionFind {
public:
    explicit ParityUnionFind(int n) : parent_(n), parity_(n, 0), rank_(n, 0) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        if (parent_[x] == x) return x;
        int root = find(parent_[x]);
        parity_[x] ^= parity_[parent_[x]];
        parent_[x] = root;
        return root;
    }

    int parity(int x) {
        find(x);
        return parity_[x];
    }

    bool relate(int a, int b, int p) {
        int ra = find(a), rb = find(b);
        int pa = parity_[a], pb = parity_[b];
        if (ra == rb) return (pa ^ pb) == p;
        if (rank_[ra] < rank_[rb]) std::swap(ra, rb);
        parent_[rb] = ra;
        parity_[rb] = pa ^ pb ^ p;
        if (rank_[ra] == rank_[rb]) ++rank_[ra];
        return true;
    }

    bool same_set(int a, int b) { return find(a) == find(b); }

private:
    std::vector<int> parent_;
    std::vector<int> parity_;
    std::vector<int> rank_;
};

} // namespace rgbt
