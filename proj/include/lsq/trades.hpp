#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lsq/completion.hpp"
#include "lsq/square.hpp"

namespace lsq {

// Entries of a base square L at the positions where some other Latin
// square of the same order differs from L. Within a fixed L the position
// mask determines the entries, so it doubles as the canonical key.
struct Trade {
    std::vector<Entry> entries;  // sorted by (row, col)
    CellMask mask;

    int size() const { return static_cast<int>(entries.size()); }
    bool operator==(const Trade& o) const { return mask == o.mask; }
};

struct TradeList {
    int order = 0;
    std::vector<Trade> trades;  // deduplicated, sorted by (size, entries)
    bool minimised = false;

    size_t size() const { return trades.size(); }
};

enum class LineKind { kRows, kCols, kElems };

// Empties the three chosen lines of L and diffs L against every completion
// of the remainder. Every trade of L confined to those lines shows up.
std::vector<Trade> trades_from_deletion(const LatinSquare& l, LineKind kind,
                                        const std::array<int, 3>& lines);

// Union over all C(n,3) triples of rows, columns, and elements, then
// deduplicated, size-filtered, and (unless told otherwise) minimised.
TradeList all_3line_trades(const LatinSquare& l, std::optional<int> size_limit = {},
                           bool do_minimise = true);

std::vector<Trade> intercalates(const LatinSquare& l);
int intercalates_through(const LatinSquare& l, const Entry& e);  // throws if e not in l

// Drops every trade that strictly contains another; idempotent.
TradeList minimise(TradeList list);

// Disjoint-mate certificate: L with the trade's positions emptied admits a
// completion other than L differing from L exactly there.
bool has_disjoint_mate(const LatinSquare& l, const Trade& t);

}  // namespace lsq
