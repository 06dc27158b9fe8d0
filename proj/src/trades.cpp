#include "lsq/trades.hpp"

#include <algorithm>
#include <map>

namespace lsq {

namespace {

Trade diff_trade(const LatinSquare& base, const LatinSquare& other) {
    Trade t;
    const int n = base.order();
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (base.at(r, c) != other.at(r, c)) {
                t.entries.emplace_back(r, c, base.at(r, c));
                t.mask.set(r * n + c);
            }
    return t;
}

PartialLatinSquare delete_lines(const LatinSquare& l, LineKind kind,
                                const std::array<int, 3>& lines) {
    const int n = l.order();
    auto deleted = [&](int r, int c) {
        switch (kind) {
            case LineKind::kRows: return r == lines[0] || r == lines[1] || r == lines[2];
            case LineKind::kCols: return c == lines[0] || c == lines[1] || c == lines[2];
            case LineKind::kElems: {
                int v = l.at(r, c);
                return v == lines[0] || v == lines[1] || v == lines[2];
            }
        }
        return false;
    };
    std::vector<Entry> kept;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!deleted(r, c)) kept.emplace_back(r, c, l.at(r, c));
    return PartialLatinSquare::from_entries(n, kept);
}

}  // namespace

std::vector<Trade> trades_from_deletion(const LatinSquare& l, LineKind kind,
                                        const std::array<int, 3>& lines) {
    for (int i = 0; i < 3; ++i) {
        if (lines[i] < 0 || lines[i] >= l.order())
            throw ParseError("line index out of range");
        for (int j = i + 1; j < 3; ++j)
            if (lines[i] == lines[j]) throw ParseError("line indices must be distinct");
    }
    std::vector<Trade> out;
    auto consumer = [&](const LatinSquare& m) {
        if (!(m == l)) out.push_back(diff_trade(l, m));
        return true;
    };
    enumerate_completions(delete_lines(l, kind, lines), consumer, {});
    return out;
}

TradeList all_3line_trades(const LatinSquare& l, std::optional<int> size_limit,
                           bool do_minimise) {
    const int n = l.order();
    TradeList list;
    list.order = n;
    std::map<CellMask, Trade> seen;
    for (LineKind kind : {LineKind::kRows, LineKind::kCols, LineKind::kElems}) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c)
                    for (Trade& t : trades_from_deletion(l, kind, {a, b, c})) {
                        if (size_limit && t.size() > *size_limit) continue;
                        seen.try_emplace(t.mask, std::move(t));
                    }
    }
    list.trades.reserve(seen.size());
    for (auto& [mask, t] : seen) list.trades.push_back(std::move(t));
    std::sort(list.trades.begin(), list.trades.end(), [](const Trade& a, const Trade& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.entries < b.entries;
    });
    if (do_minimise) list = minimise(std::move(list));
    return list;
}

std::vector<Trade> intercalates(const LatinSquare& l) {
    const int n = l.order();
    std::vector<Trade> out;
    for (int r1 = 0; r1 < n; ++r1)
        for (int r2 = r1 + 1; r2 < n; ++r2)
            for (int c1 = 0; c1 < n; ++c1)
                for (int c2 = c1 + 1; c2 < n; ++c2)
                    if (l.at(r1, c1) == l.at(r2, c2) && l.at(r1, c2) == l.at(r2, c1)) {
                        Trade t;
                        t.entries = {Entry(r1, c1, l.at(r1, c1)), Entry(r1, c2, l.at(r1, c2)),
                                     Entry(r2, c1, l.at(r2, c1)), Entry(r2, c2, l.at(r2, c2))};
                        t.mask.set(r1 * n + c1);
                        t.mask.set(r1 * n + c2);
                        t.mask.set(r2 * n + c1);
                        t.mask.set(r2 * n + c2);
                        out.push_back(std::move(t));
                    }
    return out;
}

int intercalates_through(const LatinSquare& l, const Entry& e) {
    if (!l.contains(e)) throw ParseError("entry " + e.str() + " not in the square");
    int pos = e.row * l.order() + e.col;
    int count = 0;
    for (const Trade& t : intercalates(l)) count += t.mask.test(pos);
    return count;
}

TradeList minimise(TradeList list) {
    std::sort(list.trades.begin(), list.trades.end(), [](const Trade& a, const Trade& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.entries < b.entries;
    });
    list.trades.erase(std::unique(list.trades.begin(), list.trades.end()), list.trades.end());
    // Ascending by size, so any strict subset of a trade precedes it.
    std::vector<Trade> kept;
    kept.reserve(list.trades.size());
    for (Trade& t : list.trades) {
        bool dominated = false;
        for (const Trade& k : kept) {
            if (k.size() >= t.size()) break;  // kept is size-sorted; equal sizes deduped already
            if (k.mask.subset_of(t.mask)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) kept.push_back(std::move(t));
    }
    list.trades = std::move(kept);
    list.minimised = true;
    return list;
}

bool has_disjoint_mate(const LatinSquare& l, const Trade& t) {
    const int n = l.order();
    std::vector<Entry> kept;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            if (!t.mask.test(r * n + c)) kept.emplace_back(r, c, l.at(r, c));
    bool found = false;
    auto consumer = [&](const LatinSquare& m) {
        if (m == l) return true;
        if (diff_trade(l, m).mask == t.mask) {
            found = true;
            return false;
        }
        return true;
    };
    enumerate_completions(PartialLatinSquare::from_entries(n, kept), consumer, {});
    return found;
}

}  // namespace lsq
