#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>

#include "lsq/square.hpp"

namespace lsq {

struct CompletionBudget {
    std::optional<uint64_t> max_solutions;
    std::optional<uint64_t> max_nodes;
};

struct EnumerationSummary {
    uint64_t count = 0;
    bool exhausted = true;  // false when a budget or the consumer stopped the search
    uint64_t nodes = 0;
};

// Visits every Latin square extending P exactly once, in the deterministic
// order induced by the most-constrained-cell heuristic (ties by smallest
// (row, col), candidate values ascending). Return false from the consumer
// to stop early.
EnumerationSummary enumerate_completions(const PartialLatinSquare& p,
                                         const std::function<bool(const LatinSquare&)>& visit,
                                         const CompletionBudget& budget = {});

uint64_t count_completions(const PartialLatinSquare& p);

enum class Uniqueness { kUnique, kMultiple, kUncompletable };

struct UniquenessResult {
    Uniqueness status = Uniqueness::kUncompletable;
    // A completion different from the expected square (when given) or from
    // the first completion found; present iff status is kMultiple.
    std::optional<LatinSquare> witness;

    bool unique() const { return status == Uniqueness::kUnique; }
};

// expected, when given, must be a completion of p.
UniquenessResult is_uniquely_completable(const PartialLatinSquare& p,
                                         const LatinSquare* expected = nullptr);

// True iff c is uniquely completable for l and no single-entry deletion is
// (which by monotonicity rules out every proper subset).
bool is_critical(std::span<const Entry> c, const LatinSquare& l);

}  // namespace lsq
