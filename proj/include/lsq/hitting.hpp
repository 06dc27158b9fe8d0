#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lsq/entry.hpp"
#include "lsq/trades.hpp"

namespace lsq {

// At most bound-1 chosen positions inside cells.
struct Nogood {
    CellMask cells;
    int bound = 1;
};

// 0-1 hitting-set instance over the cell positions of a square: each
// constraint (one per trade) needs at least one chosen position; cap is an
// inclusive bound on how many positions may be chosen in total.
struct HittingInstance {
    int universe = 0;
    std::vector<CellMask> constraints;
    std::optional<int> cap;
    std::vector<Nogood> nogoods;

    static HittingInstance from_trades(const TradeList& trades, std::optional<int> cap = {});
    void add_constraint(const CellMask& c);
};

// Future solutions select at most s-1 positions inside s-sized set S, so
// the witness S itself is excluded.
HittingInstance add_nogood(HittingInstance i, const CellMask& s, int bound);

// Objective restricted to < bound (an inclusive cap of bound - 1).
HittingInstance add_cap_constraint(HittingInstance i, int bound);

enum class SolveStatus { kOptimal, kFeasible, kInfeasible, kBudgetExhausted };

struct SolveStats {
    uint64_t nodes = 0;
    double seconds = 0;
};

struct SolveOutcome {
    SolveStatus status = SolveStatus::kInfeasible;
    std::vector<int> witness;  // ascending position indices
    int objective = 0;         // |witness|
    SolveStats stats;

    bool feasible() const {
        return status == SolveStatus::kOptimal || status == SolveStatus::kFeasible;
    }
};

struct SolveBudget {
    std::optional<uint64_t> max_nodes;
};

// Minimum-cardinality hitting set subject to the cap and nogoods.
// Deterministic: branches on the unhit constraint of smallest residual
// size, include-branch first, ties by position index.
SolveOutcome solve_min(const HittingInstance& inst, const SolveBudget& budget = {});

// Any hitting set of size <= cap, or proof that none exists.
SolveOutcome solve_feasible(const HittingInstance& inst, int cap, const SolveBudget& budget = {});

// Line-oriented text form for debugging: "universe N", optional "cap K",
// "nogood S i j k ...", and one constraint per line as position indices.
std::string dump_instance(const HittingInstance& inst);
HittingInstance load_instance(std::string_view text);  // throws ParseError

}  // namespace lsq
