#include "chipfire/game.hpp"

#include <algorithm>
#include <sstream>

namespace chipfire {

namespace {

bool active(const MultiDigraph& g, const std::vector<long long>& x, int v) {
    return x[v] >= g.outdeg(v);
}

int pick_vertex(const MultiDigraph& g, const std::vector<long long>& x, FiringStrategy strategy,
                int& pointer) {
    int n = g.vertex_count();
    switch (strategy) {
        case FiringStrategy::LowestActive:
            for (int v = 0; v < n; ++v)
                if (active(g, x, v)) return v;
            return -1;
        case FiringStrategy::HighestActive:
            for (int v = n - 1; v >= 0; --v)
                if (active(g, x, v)) return v;
            return -1;
        case FiringStrategy::Rotating:
            for (int k = 0; k < n; ++k) {
                int v = (pointer + k) % n;
                if (active(g, x, v)) {
                    pointer = (v + 1) % n;
                    return v;
                }
            }
            return -1;
    }
    return -1;
}

void fire_in_place(const MultiDigraph& g, std::vector<long long>& x, int v) {
    x[v] = checked_sub(x[v], g.outdeg(v));
    for (int u = 0; u < g.vertex_count(); ++u) {
        int m = g.multiplicity(v, u);
        if (m) x[u] = checked_add(x[u], m);
    }
}

// Chips on any vertex stay within [min(0, x(v)), sum of positive entries], so
// the reachable state count is bounded by the product of the range sizes.
unsigned long long pigeonhole_limit(const MultiDigraph& g, const ChipDistribution& x) {
    unsigned long long limit = 1;
    long long hi = 0;
    for (long long c : x.values())
        if (c > 0) hi = checked_add(hi, c);
    for (long long c : x.values()) {
        long long lo = std::min(0ll, c);
        unsigned long long range = static_cast<unsigned long long>(hi - lo) + 1;
        if (__builtin_mul_overflow(limit, range, &limit)) return ~0ull;
    }
    return limit == ~0ull ? limit : limit + 1;
}

}  // namespace

long long nonterminating_degree_bound(const MultiDigraph& g) {
    return g.arc_count() - g.vertex_count();
}

ChipDistribution fire(const MultiDigraph& g, const ChipDistribution& x, int v) {
    g.require_vertex(v);
    if (x.size() != g.vertex_count())
        throw DimensionMismatchError("distribution length differs from vertex count");
    std::vector<long long> next = x.values();
    fire_in_place(g, next, v);
    return ChipDistribution(std::move(next));
}

GameTrace play(const MultiDigraph& g, const ChipDistribution& x, FiringStrategy strategy,
               std::optional<unsigned long long> step_limit) {
    if (!g.strongly_connected())
        throw NotStronglyConnectedError("play requires a strongly connected digraph");
    if (x.size() != g.vertex_count())
        throw DimensionMismatchError("distribution length differs from vertex count");

    unsigned long long limit = step_limit ? *step_limit : pigeonhole_limit(g, x);
    GameTrace trace;
    trace.fire_counts.assign(g.vertex_count(), 0);
    std::vector<long long> cur = x.values();
    std::unordered_map<ChipDistribution, long long, ChipDistributionHash> first_seen;
    first_seen.emplace(x, 0);
    int pointer = 0;

    for (unsigned long long step = 0; step < limit; ++step) {
        int v = pick_vertex(g, cur, strategy, pointer);
        if (v < 0) {
            trace.outcome = GameTrace::Outcome::Terminated;
            trace.last_state = ChipDistribution(cur);
            return trace;
        }
        fire_in_place(g, cur, v);
        trace.firing_sequence.push_back(v);
        ++trace.fire_counts[v];
        ChipDistribution state(cur);
        auto [it, inserted] = first_seen.emplace(state, trace.moves());
        if (!inserted) {
            trace.outcome = GameTrace::Outcome::CycleDetected;
            trace.last_state = std::move(state);
            trace.cycle_length = trace.moves() - it->second;
            return trace;
        }
    }
    throw StepLimitExceededError("no stable or repeated state within " + std::to_string(limit) +
                                 " moves");
}

Verdict decide_termination(const MultiDigraph& g, const ChipDistribution& x) {
    if (!g.strongly_connected())
        throw NotStronglyConnectedError("decide_termination requires a strongly connected digraph");
    if (x.size() != g.vertex_count())
        throw DimensionMismatchError("distribution length differs from vertex count");
    if (x.degree() > nonterminating_degree_bound(g)) return Verdict::NonTerminating;
    return play(g, x).outcome == GameTrace::Outcome::Terminated ? Verdict::Terminating
                                                                : Verdict::NonTerminating;
}

std::string format_trace_log(const ChipDistribution& start, const GameTrace& trace,
                             const MultiDigraph& g) {
    std::ostringstream out;
    std::vector<long long> cur = start.values();
    long long step = 0;
    for (int v : trace.firing_sequence) {
        fire_in_place(g, cur, v);
        out << "step " << ++step << ": fire " << v << " -> " << ChipDistribution(cur).to_csv()
            << "\n";
    }
    return out.str();
}

bool for_each_composition(long long degree, int n,
                          const std::function<bool(const std::vector<long long>&)>& fn) {
    std::vector<long long> y(n, 0);
    std::function<bool(int, long long)> rec = [&](int i, long long remaining) {
        if (i == n - 1) {
            y[i] = remaining;
            return fn(y);
        }
        for (long long v = 0; v <= remaining; ++v) {
            y[i] = v;
            if (rec(i + 1, remaining - v)) return true;
        }
        y[i] = 0;
        return false;
    };
    if (n <= 0 || degree < 0) return false;
    return rec(0, degree);
}

Engine::Engine(MultiDigraph g) : g_(std::move(g)), lattice_(LaplacianMatrix(g_)) {
    if (!g_.strongly_connected())
        throw NotStronglyConnectedError("engine requires a strongly connected digraph");
    bound_ = nonterminating_degree_bound(g_);
}

Verdict Engine::decide_termination(const ChipDistribution& x) const {
    if (x.size() != g_.vertex_count())
        throw DimensionMismatchError("distribution length differs from vertex count");
    if (x.degree() > bound_) return Verdict::NonTerminating;
    ChipDistribution key = lattice_.canonical_rep(x);
    auto it = term_memo_.find(key);
    if (it == term_memo_.end()) {
        bool term = play(g_, x).outcome == GameTrace::Outcome::Terminated;
        it = term_memo_.emplace(std::move(key), term).first;
    }
    return it->second ? Verdict::Terminating : Verdict::NonTerminating;
}

long long Engine::dist(const ChipDistribution& x) const {
    if (x.size() != g_.vertex_count())
        throw DimensionMismatchError("distribution length differs from vertex count");
    ChipDistribution key = lattice_.canonical_rep(x);
    if (auto it = dist_memo_.find(key); it != dist_memo_.end()) return it->second;

    long long deg = x.degree();
    long long last_level = std::max(0ll, bound_ + 1 - deg);
    int n = g_.vertex_count();
    for (long long d = 0; d <= last_level; ++d) {
        bool found = for_each_composition(d, n, [&](const std::vector<long long>& y) {
            ChipDistribution candidate = x;
            for (int i = 0; i < n; ++i) candidate[i] = checked_add(candidate[i], y[i]);
            return decide_termination(candidate) == Verdict::NonTerminating;
        });
        if (found) {
            dist_memo_.emplace(std::move(key), d);
            return d;
        }
    }
    // unreachable: at last_level the degree exceeds the pigeonhole bound
    throw Error("dist search exhausted its level bound");
}

long long Engine::rank(const ChipDistribution& f) const {
    ChipDistribution dual = g_.outdeg_vector() - ChipDistribution::constant(g_.vertex_count(), 1) - f;
    return dist(dual) - 1;
}

bool Engine::is_equi_effective(const ChipDistribution& f) const {
    ChipDistribution dual = g_.outdeg_vector() - ChipDistribution::constant(g_.vertex_count(), 1) - f;
    return terminating(dual);
}

std::optional<ChipDistribution> Engine::nonnegative_representative(const ChipDistribution& x) const {
    if (decide_termination(x) == Verdict::Terminating) return std::nullopt;
    std::vector<long long> cur = x.values();
    std::vector<char> fired(g_.vertex_count(), 0);
    int remaining = g_.vertex_count();
    unsigned long long limit = pigeonhole_limit(g_, x);
    int pointer = 0;
    for (unsigned long long step = 0; step < limit; ++step) {
        int v = pick_vertex(g_, cur, FiringStrategy::LowestActive, pointer);
        if (v < 0) throw Error("non-terminating game stalled");  // cannot happen
        fire_in_place(g_, cur, v);
        if (!fired[v]) {
            fired[v] = 1;
            if (--remaining == 0) return ChipDistribution(std::move(cur));
        }
    }
    throw StepLimitExceededError("every vertex should fire within the pigeonhole bound");
}

}  // namespace chipfire
