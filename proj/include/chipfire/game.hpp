#pragma once

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chipfire/lattice.hpp"

namespace chipfire {

/// Deterministic active-vertex selectors. The abelian property guarantees the
/// verdict (and, for terminating games, the whole outcome) is the same for
/// all of them; the suite checks that.
enum class FiringStrategy {
    LowestActive,   // canonical
    HighestActive,
    Rotating,       // round-robin pointer, first active at or after it
};

enum class Verdict { Terminating, NonTerminating };

/// Record of one legal game.
struct GameTrace {
    enum class Outcome { Terminated, CycleDetected };

    Outcome outcome = Outcome::Terminated;
    std::vector<int> firing_sequence;
    /// Per-vertex firing totals over the whole recorded game.
    std::vector<long long> fire_counts;
    /// Stable final state, or the state whose recurrence was detected.
    ChipDistribution last_state;
    /// Number of moves separating the two visits of last_state (CycleDetected only).
    long long cycle_length = 0;

    long long moves() const { return static_cast<long long>(firing_sequence.size()); }
};

/// Degree threshold |E| - |V|: any distribution of larger degree is
/// non-terminating (pigeonhole).
long long nonterminating_degree_bound(const MultiDigraph& g);

/// x + L·1_v. Legality is not required here.
ChipDistribution fire(const MultiDigraph& g, const ChipDistribution& x, int v);

/// Plays a legal game until the state is stable or repeats. The default step
/// limit is pigeonhole-complete (product of per-vertex state ranges + 1), so
/// StepLimitExceededError can only surface with an explicit, smaller limit.
GameTrace play(const MultiDigraph& g, const ChipDistribution& x,
               FiringStrategy strategy = FiringStrategy::LowestActive,
               std::optional<unsigned long long> step_limit = std::nullopt);

/// Verdict by pigeonhole shortcut or simulation; strategy-independent.
Verdict decide_termination(const MultiDigraph& g, const ChipDistribution& x);

/// `step i: fire v -> state` lines.
std::string format_trace_log(const ChipDistribution& start, const GameTrace& trace,
                             const MultiDigraph& g);

/// Per-graph session over the game and the class lattice. Termination and
/// dist are class properties, so both are memoized by canonical
/// representative; all queries are logically pure. Not synchronized.
class Engine {
public:
    /// Throws NotStronglyConnectedError.
    explicit Engine(MultiDigraph g);

    const MultiDigraph& graph() const { return g_; }
    const LaplacianLattice& lattice() const { return lattice_; }

    Verdict decide_termination(const ChipDistribution& x) const;
    bool terminating(const ChipDistribution& x) const {
        return decide_termination(x) == Verdict::Terminating;
    }

    /// Minimum degree of a non-negative y with x + y non-terminating.
    /// Searches degree levels 0,1,2,... enumerating added-chip vectors in
    /// lexicographic order; the level loop guarantees minimality and the
    /// pigeonhole bound guarantees the search stops.
    long long dist(const ChipDistribution& x) const;

    /// rank(f) = dist(d+ - 1 - f) - 1.
    long long rank(const ChipDistribution& f) const;

    /// f equivalent to an effective divisor? (duality: terminating(d+ - 1 - f))
    bool is_equi_effective(const ChipDistribution& f) const;

    /// Plays from a non-terminating x until every vertex has fired once; the
    /// resulting equivalent state is nowhere negative. Returns nothing for
    /// terminating x.
    std::optional<ChipDistribution> nonnegative_representative(const ChipDistribution& x) const;

private:
    MultiDigraph g_;
    LaplacianLattice lattice_;
    long long bound_;
    mutable std::unordered_map<ChipDistribution, bool, ChipDistributionHash> term_memo_;
    mutable std::unordered_map<ChipDistribution, long long, ChipDistributionHash> dist_memo_;
};

/// Calls fn on every vector of n non-negative entries summing to degree, in
/// lexicographic order; stops early when fn returns true. Returns whether fn
/// ever did.
bool for_each_composition(long long degree, int n,
                          const std::function<bool(const std::vector<long long>&)>& fn);

}  // namespace chipfire
