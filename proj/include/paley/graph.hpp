#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "paley/residue.hpp"

namespace paley {

struct not_a_square : std::invalid_argument {
    not_a_square() : std::invalid_argument("multiplier a is not a unit square mod n") {}
};

/// Immutable undirected graph on vertices 0..n-1 with bitset adjacency rows.
class Graph {
  public:
    /// Builds from an explicit edge list (test / synthetic graphs).
    static Graph from_edges(int64 n, const std::vector<std::pair<int64, int64>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.set_edge(u, v);
        g.recount();
        return g;
    }

    /// The Paley-type graph G_n: u ~ v iff (u - v) mod n is a unit square.
    static Graph paley(int64 n) {
        if (!is_admissible(n))
            throw not_admissible("G_n is not well-defined for n = " + std::to_string(n));
        std::vector<bool> is_sq(static_cast<size_t>(n), false);
        for (int64 r : unit_squares(n)) is_sq[static_cast<size_t>(r)] = true;
        Graph g(n);
        for (int64 u = 0; u < n; ++u)
            for (int64 v = u + 1; v < n; ++v)
                if (is_sq[static_cast<size_t>((v - u) % n)]) g.set_edge(u, v);
        g.recount();
        return g;
    }

    int64 vertex_count() const { return n_; }
    int64 edge_count() const { return edge_count_; }
    size_t words_per_row() const { return words_; }

    bool adjacent(int64 u, int64 v) const {
        return (row(u)[static_cast<size_t>(v) >> 6] >> (v & 63)) & 1;
    }

    std::span<const uint64_t> row(int64 u) const {
        return {bits_.data() + static_cast<size_t>(u) * words_, words_};
    }

    int64 degree(int64 u) const {
        int64 d = 0;
        for (uint64_t w : row(u)) d += std::popcount(w);
        return d;
    }

  private:
    explicit Graph(int64 n)
        : n_(n), words_((static_cast<size_t>(n) + 63) / 64),
          bits_(static_cast<size_t>(n) * words_, 0) {
        if (n < 1) throw std::invalid_argument("Graph: n must be >= 1");
    }

    void set_edge(int64 u, int64 v) {
        if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_)
            throw std::invalid_argument("Graph: bad edge");
        bits_[static_cast<size_t>(u) * words_ + (static_cast<size_t>(v) >> 6)] |= 1ULL << (v & 63);
        bits_[static_cast<size_t>(v) * words_ + (static_cast<size_t>(u) >> 6)] |= 1ULL << (u & 63);
    }

    void recount() {
        int64 total = 0;
        for (uint64_t w : bits_) total += std::popcount(w);
        edge_count_ = total / 2;
    }

    int64 n_;
    size_t words_;
    std::vector<uint64_t> bits_;
    int64 edge_count_ = 0;
};

inline std::pair<int64, int64> degree_profile(const Graph& g) {
    int64 lo = g.vertex_count(), hi = 0;
    for (int64 u = 0; u < g.vertex_count(); ++u) {
        int64 d = g.degree(u);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

inline bool is_connected(const Graph& g) {
    int64 n = g.vertex_count();
    std::vector<bool> seen(static_cast<size_t>(n), false);
    std::vector<int64> stack{0};
    seen[0] = true;
    int64 visited = 1;
    while (!stack.empty()) {
        int64 u = stack.back();
        stack.pop_back();
        for (int64 v = 0; v < n; ++v)
            if (!seen[static_cast<size_t>(v)] && g.adjacent(u, v)) {
                seen[static_cast<size_t>(v)] = true;
                ++visited;
                stack.push_back(v);
            }
    }
    return visited == n;
}

inline bool is_complete(const Graph& g) {
    int64 n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

inline bool is_cycle(const Graph& g) {
    auto [lo, hi] = degree_profile(g);
    return lo == 2 && hi == 2 && is_connected(g);
}

/// The edge-count obstruction to self-complementarity: edge_count = n(n-1)/4.
/// For admissible n this holds iff n is prime.
inline bool self_complementary_edge_test(int64 n) {
    if (!is_admissible(n)) throw not_admissible("n = " + std::to_string(n) + " is not admissible");
    auto m = Modulus::of(n);
    // degree phi(n)/2^k, so 4 * edges = n * phi(n) / 2^(k-1)
    return euler_phi(n) == (n - 1) * (int64(1) << (m.k - 1));
}

/// Checks exhaustively that x -> ax + b maps edges to edges and non-edges to
/// non-edges. a must be a unit square mod n.
inline bool affine_automorphism_check(const Graph& g, int64 a, int64 b) {
    int64 n = g.vertex_count();
    auto squares = unit_squares(n);
    a = ((a % n) + n) % n;
    b = ((b % n) + n) % n;
    if (!std::binary_search(squares.begin(), squares.end(), a)) throw not_a_square();
    for (int64 u = 0; u < n; ++u)
        for (int64 v = u + 1; v < n; ++v)
            if (g.adjacent(u, v) != g.adjacent((a * u + b) % n, (a * v + b) % n)) return false;
    return true;
}

struct DecompositionReport {
    int64 p;
    int alpha;
    int64 block_count;        // p^(alpha-1)
    int64 intra_block_edges;
    int64 inter_block_edges;
    bool blocks_isomorphic;       // each block induces G(p) via i -> kp+i
    bool star_structure_verified; // each vertex sees (p-1)/2 vertices per other block
};

/// Audits the edge-disjoint decomposition of G_{p^alpha} into p^(alpha-1)
/// copies of G(p) plus complete bipartite stars between blocks.
inline DecompositionReport decomposition_report(int64 p, int alpha) {
    auto m = PrimePowerModulus::of(p, alpha);
    Graph g = Graph::paley(m.n);
    Graph gp = Graph::paley(p);
    int64 blocks = m.n / p;

    DecompositionReport r{p, alpha, blocks, 0, 0, true, true};
    for (int64 k = 0; k < blocks; ++k)
        for (int64 i = 0; i < p; ++i)
            for (int64 j = i + 1; j < p; ++j) {
                bool e = g.adjacent(k * p + i, k * p + j);
                if (e) ++r.intra_block_edges;
                if (e != gp.adjacent(i, j)) r.blocks_isomorphic = false;
            }
    r.inter_block_edges = g.edge_count() - r.intra_block_edges;

    if (r.intra_block_edges != blocks * p * (p - 1) / 4) r.blocks_isomorphic = false;
    if (r.inter_block_edges != (p * (p - 1) / 2) * (blocks * (blocks - 1) / 2))
        r.star_structure_verified = false;
    for (int64 k1 = 0; k1 < blocks && r.star_structure_verified; ++k1)
        for (int64 k2 = 0; k2 < blocks; ++k2) {
            if (k1 == k2) continue;
            for (int64 i = 0; i < p; ++i) {
                int64 cross = 0;
                for (int64 j = 0; j < p; ++j)
                    if (g.adjacent(k1 * p + i, k2 * p + j)) ++cross;
                if (cross != (p - 1) / 2) {
                    r.star_structure_verified = false;
                    break;
                }
            }
        }
    return r;
}

}  // namespace paley
