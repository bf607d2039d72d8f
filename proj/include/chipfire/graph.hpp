#pragma once

#include <optional>
#include <vector>

#include "chipfire/chips.hpp"
#include "chipfire/errors.hpp"

namespace chipfire {

/// One directed arc family u -> v with a positive multiplicity.
struct Arc {
    int from = 0;
    int to = 0;
    int count = 1;

    bool operator==(const Arc&) const = default;
};

/// Loop-free multidigraph on vertices 0..n-1, immutable after construction.
/// Multiplicities live in a dense n x n table; strong connectivity is checked
/// once at construction and cached. Bidirected graphs (m(u,v) = m(v,u)) are
/// how undirected graphs are represented.
class MultiDigraph {
public:
    MultiDigraph(int n, const std::vector<Arc>& arcs);

    /// Builds the bidirected graph of an undirected edge list (each edge
    /// becomes a pair of opposite arcs) and remembers the undirected edge
    /// count, which several identities need.
    static MultiDigraph undirected(int n, const std::vector<Arc>& edges);

    int vertex_count() const { return n_; }
    /// Arc count |E|, counting multiplicity.
    long long arc_count() const { return arc_count_; }
    int multiplicity(int u, int v) const { return mult_[static_cast<size_t>(u) * n_ + v]; }
    int outdeg(int v) const { return outdeg_[v]; }
    int indeg(int v) const { return indeg_[v]; }
    ChipDistribution outdeg_vector() const;
    ChipDistribution indeg_vector() const;

    bool strongly_connected() const { return strongly_connected_; }
    bool eulerian() const;
    bool bidirected() const;

    /// Set only for graphs built via undirected(); equals arc_count()/2 there.
    std::optional<long long> undirected_edge_count() const { return undirected_edges_; }

    /// Distinct arc families (count > 0), sorted by (from, to).
    std::vector<Arc> arcs() const;

    bool operator==(const MultiDigraph&) const = default;

    void require_vertex(int v) const {
        if (v < 0 || v >= n_) throw VertexOutOfRangeError("vertex index out of range");
    }

private:
    int n_ = 0;
    std::vector<int> mult_;  // row-major n x n, mult_[u*n+v] = #arcs u->v
    std::vector<int> outdeg_, indeg_;
    long long arc_count_ = 0;
    bool strongly_connected_ = false;
    std::optional<long long> undirected_edges_;
};

/// Sub-multiset of a graph's arcs: a multiplicity table that must stay
/// dominated by the host graph's table wherever it is used.
class ArcSubset {
public:
    explicit ArcSubset(int n) : n_(n), mult_(static_cast<size_t>(n) * n, 0) {}

    static ArcSubset all_arcs(const MultiDigraph& g);

    int vertex_count() const { return n_; }
    int multiplicity(int u, int v) const { return mult_[static_cast<size_t>(u) * n_ + v]; }

    void add(int u, int v, int count = 1);

    /// |T|, counting multiplicity.
    long long cardinality() const;
    /// Indegree vector of the sub-digraph (V, T).
    ChipDistribution indegree_vector() const;
    ChipDistribution outdegree_vector() const;
    std::vector<Arc> arcs() const;
    bool empty() const { return cardinality() == 0; }

    bool operator==(const ArcSubset&) const = default;

private:
    int n_;
    std::vector<int> mult_;
};

/// Indegree vector of the arc subset, after checking it is dominated by g.
ChipDistribution subgraph_indegree(const MultiDigraph& g, const ArcSubset& arcs);

/// True iff g, with the `reversed` arcs flipped and the `removed` arcs
/// deleted, has no directed cycle. The two subsets must be disjoint
/// sub-multisets of g's arcs.
bool is_acyclic_after(const MultiDigraph& g, const ArcSubset& reversed, const ArcSubset& removed);

namespace detail {
/// Kahn acyclicity test on a raw multiplicity table.
bool table_is_acyclic(int n, const std::vector<int>& mult);
void require_subset(const MultiDigraph& g, const ArcSubset& t, const char* what);
}  // namespace detail

}  // namespace chipfire
