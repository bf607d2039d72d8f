#include "chipfire/graph.hpp"

#include <algorithm>

namespace chipfire {

MultiDigraph::MultiDigraph(int n, const std::vector<Arc>& arcs)
    : n_(n), mult_(static_cast<size_t>(std::max(n, 0)) * std::max(n, 0), 0) {
    if (n <= 0) throw VertexOutOfRangeError("vertex count must be positive");
    for (const Arc& a : arcs) {
        require_vertex(a.from);
        require_vertex(a.to);
        if (a.from == a.to) throw LoopArcError("loop arcs are not allowed");
        if (a.count < 0) throw VertexOutOfRangeError("negative arc multiplicity");
        mult_[static_cast<size_t>(a.from) * n_ + a.to] += a.count;
    }
    outdeg_.assign(n_, 0);
    indeg_.assign(n_, 0);
    for (int u = 0; u < n_; ++u) {
        for (int v = 0; v < n_; ++v) {
            int m = multiplicity(u, v);
            outdeg_[u] += m;
            indeg_[v] += m;
            arc_count_ += m;
        }
    }

    // one forward and one backward reachability sweep from vertex 0
    auto reaches_all = [&](bool backward) {
        std::vector<char> seen(n_, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n_; ++v) {
                int m = backward ? multiplicity(v, u) : multiplicity(u, v);
                if (m > 0 && !seen[v]) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n_;
    };
    strongly_connected_ = reaches_all(false) && reaches_all(true);
}

MultiDigraph MultiDigraph::undirected(int n, const std::vector<Arc>& edges) {
    std::vector<Arc> arcs;
    arcs.reserve(edges.size() * 2);
    long long m_undir = 0;
    for (const Arc& e : edges) {
        if (e.from == e.to) throw LoopArcError("self edges are not allowed");
        arcs.push_back({e.from, e.to, e.count});
        arcs.push_back({e.to, e.from, e.count});
        m_undir += e.count;
    }
    MultiDigraph g(n, arcs);
    g.undirected_edges_ = m_undir;
    return g;
}

ChipDistribution MultiDigraph::outdeg_vector() const {
    std::vector<long long> v(outdeg_.begin(), outdeg_.end());
    return ChipDistribution(std::move(v));
}

ChipDistribution MultiDigraph::indeg_vector() const {
    std::vector<long long> v(indeg_.begin(), indeg_.end());
    return ChipDistribution(std::move(v));
}

bool MultiDigraph::eulerian() const {
    for (int v = 0; v < n_; ++v)
        if (outdeg_[v] != indeg_[v]) return false;
    return true;
}

bool MultiDigraph::bidirected() const {
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (multiplicity(u, v) != multiplicity(v, u)) return false;
    return true;
}

std::vector<Arc> MultiDigraph::arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (int m = multiplicity(u, v); m > 0) out.push_back({u, v, m});
    return out;
}

ArcSubset ArcSubset::all_arcs(const MultiDigraph& g) {
    ArcSubset t(g.vertex_count());
    for (const Arc& a : g.arcs()) t.add(a.from, a.to, a.count);
    return t;
}

void ArcSubset::add(int u, int v, int count) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw VertexOutOfRangeError("vertex index out of range");
    if (u == v) throw LoopArcError("loop arcs are not allowed");
    if (count < 0) throw NotASubsetError("negative multiplicity in arc subset");
    mult_[static_cast<size_t>(u) * n_ + v] += count;
}

long long ArcSubset::cardinality() const {
    long long c = 0;
    for (int m : mult_) c += m;
    return c;
}

ChipDistribution ArcSubset::indegree_vector() const {
    std::vector<long long> in(n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) in[v] += multiplicity(u, v);
    return ChipDistribution(std::move(in));
}

ChipDistribution ArcSubset::outdegree_vector() const {
    std::vector<long long> out(n_, 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v) out[u] += multiplicity(u, v);
    return ChipDistribution(std::move(out));
}

std::vector<Arc> ArcSubset::arcs() const {
    std::vector<Arc> out;
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (int m = multiplicity(u, v); m > 0) out.push_back({u, v, m});
    return out;
}

namespace detail {

bool table_is_acyclic(int n, const std::vector<int>& mult) {
    std::vector<long long> indeg(n, 0);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) indeg[v] += mult[static_cast<size_t>(u) * n + v];
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) order.push_back(v);
    for (size_t k = 0; k < order.size(); ++k) {
        int u = order[k];
        for (int v = 0; v < n; ++v) {
            int m = mult[static_cast<size_t>(u) * n + v];
            if (m > 0) {
                indeg[v] -= m;
                if (indeg[v] == 0) order.push_back(v);
            }
        }
    }
    return static_cast<int>(order.size()) == n;
}

void require_subset(const MultiDigraph& g, const ArcSubset& t, const char* what) {
    if (t.vertex_count() != g.vertex_count())
        throw NotASubsetError(std::string(what) + ": vertex count differs from host graph");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = 0; v < g.vertex_count(); ++v)
            if (t.multiplicity(u, v) > g.multiplicity(u, v))
                throw NotASubsetError(std::string(what) + ": multiplicity exceeds host graph");
}

}  // namespace detail

ChipDistribution subgraph_indegree(const MultiDigraph& g, const ArcSubset& arcs) {
    detail::require_subset(g, arcs, "subgraph_indegree");
    return arcs.indegree_vector();
}

bool is_acyclic_after(const MultiDigraph& g, const ArcSubset& reversed, const ArcSubset& removed) {
    detail::require_subset(g, reversed, "is_acyclic_after(reversed)");
    detail::require_subset(g, removed, "is_acyclic_after(removed)");
    int n = g.vertex_count();
    std::vector<int> mult(static_cast<size_t>(n) * n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = 0; v < n; ++v) {
            int rev = reversed.multiplicity(u, v);
            int rem = removed.multiplicity(u, v);
            if (rev + rem > g.multiplicity(u, v))
                throw NotASubsetError("is_acyclic_after: reversed and removed overlap");
            mult[static_cast<size_t>(u) * n + v] += g.multiplicity(u, v) - rev - rem;
            mult[static_cast<size_t>(v) * n + u] += rev;
        }
    }
    return detail::table_is_acyclic(n, mult);
}

}  // namespace chipfire
