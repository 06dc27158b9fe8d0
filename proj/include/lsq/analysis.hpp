#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lsq/square.hpp"
#include "lsq/trades.hpp"

namespace lsq {

// Checks one published size-15 set against its host square: hits every
// minimised 3-line trade yet has more than one completion, with the stated
// line-profile shape.
struct BlockerVerdict {
    std::string set_id;
    bool size_ok = false;                // |S| == 15
    bool hits_all_3line_trades = false;
    bool is_uc = false;                  // expected false
    uint64_t completion_count = 0;
    bool rce_profile_ok = false;         // every |R_i|, |C_j|, |E_k| in {1,2}
    bool singleton_pattern_ok = false;   // exactly one singleton row, column, element

    bool confirmed_blocker() const { return size_ok && hits_all_3line_trades && !is_uc; }
};

BlockerVerdict verify_blocker(const LatinSquare& l, const PartialLatinSquare& s,
                              std::string set_id = {});
// Variant reusing a precomputed minimised 3-line list of l, and optionally
// skipping the full completion enumeration (the count is the slow part).
BlockerVerdict verify_blocker(const LatinSquare& l, const PartialLatinSquare& s,
                              std::string set_id, const TradeList& trades,
                              bool count_all_completions = true);

struct EntryUsage {
    std::vector<std::pair<Entry, int>> multiplicities;  // sorted by entry
    int support = 0;                                    // distinct entries used
};

EntryUsage entry_usage(const LatinSquare& l, std::span<const PartialLatinSquare> sets);

// The set of filled positions is invariant under (i,j) -> (j,i).
bool positional_diagonal_symmetry(const PartialLatinSquare& s);

struct ExceptionalReport {
    char family = '?';
    bool rcs_symmetric_presentation = false;  // literal closure of the printed square
    bool rcs_symmetric_class = false;         // isotopic to its rcs-conjugate
    int intercalate_count = 0;
    int intercalates_through_corner = 0;      // through (n,n;n), 1-based
    std::vector<BlockerVerdict> verdicts;
    EntryUsage usage;
    std::vector<std::pair<std::string, bool>> diagonal_symmetry;  // per set
    bool has_multiplicity_transversal = false;  // top-two multiplicity tiers form one
    std::vector<Entry> transversal;
    bool all_confirmed = false;
};

// family is 'X', 'Y', or 'W'; runs on the bundled fixtures.
ExceptionalReport exceptional_summary(char family, bool count_all_completions = true);
ExceptionalReport exceptional_summary(char family, const LatinSquare& l,
                                      std::span<const PartialLatinSquare> sets,
                                      std::span<const std::string> ids,
                                      bool count_all_completions = true);

}  // namespace lsq
