#include "lsq/completion.hpp"

#include <algorithm>
#include <array>

namespace lsq {

namespace {

// Backtracking search over the empty cells with per-row/per-column
// used-symbol bitmasks. One instance owns all mutable state.
class Engine {
  public:
    Engine(const PartialLatinSquare& p, const CompletionBudget& budget,
           const std::function<bool(const LatinSquare&)>* visit)
        : order_(p.order()), budget_(budget), visit_(visit) {
        full_ = static_cast<uint16_t>((1u << order_) - 1);
        for (int r = 0; r < order_; ++r)
            for (int c = 0; c < order_; ++c) {
                int8_t v = p.at(r, c);
                grid_[r][c] = v;
                if (v == PartialLatinSquare::kEmpty) {
                    empties_[num_empty_++] = static_cast<int8_t>(r * 16 + c);
                } else {
                    row_used_[r] |= uint16_t{1} << v;
                    col_used_[c] |= uint16_t{1} << v;
                }
            }
    }

    EnumerationSummary run() {
        stopped_ = false;
        dfs(0);
        summary_.exhausted = !stopped_;
        return summary_;
    }

  private:
    bool over_node_budget() {
        return budget_.max_nodes && summary_.nodes > *budget_.max_nodes;
    }

    // Returns false to unwind the whole search.
    bool dfs(int depth) {
        if (depth == num_empty_) return emit();
        ++summary_.nodes;
        if (over_node_budget()) {
            stopped_ = true;
            return false;
        }

        // Most-constrained cell among empties_[depth..); ties by (row, col).
        int best = -1, best_count = 99, best_rc = 0;
        for (int i = depth; i < num_empty_; ++i) {
            int rc = empties_[i];
            int r = rc >> 4, c = rc & 15;
            uint16_t cand = full_ & static_cast<uint16_t>(~(row_used_[r] | col_used_[c]));
            int cnt = __builtin_popcount(cand);
            if (cnt == 0) return true;  // dead branch
            if (cnt < best_count || (cnt == best_count && rc < best_rc)) {
                best = i;
                best_count = cnt;
                best_rc = rc;
            }
        }

        std::swap(empties_[depth], empties_[best]);
        int r = best_rc >> 4, c = best_rc & 15;
        uint16_t cand = full_ & static_cast<uint16_t>(~(row_used_[r] | col_used_[c]));
        bool keep_going = true;
        while (cand && keep_going) {
            int v = __builtin_ctz(cand);
            cand &= static_cast<uint16_t>(cand - 1);
            uint16_t bit = static_cast<uint16_t>(1u << v);
            grid_[r][c] = static_cast<int8_t>(v);
            row_used_[r] |= bit;
            col_used_[c] |= bit;
            keep_going = dfs(depth + 1);
            row_used_[r] &= static_cast<uint16_t>(~bit);
            col_used_[c] &= static_cast<uint16_t>(~bit);
            grid_[r][c] = PartialLatinSquare::kEmpty;
        }
        std::swap(empties_[depth], empties_[best]);
        return keep_going;
    }

    bool emit() {
        ++summary_.count;
        if (visit_ && *visit_) {
            std::vector<Entry> es;
            es.reserve(static_cast<size_t>(order_) * order_);
            for (int r = 0; r < order_; ++r)
                for (int c = 0; c < order_; ++c) es.emplace_back(r, c, grid_[r][c]);
            LatinSquare out =
                LatinSquare::from_partial(PartialLatinSquare::from_entries(order_, es));
            if (!(*visit_)(out)) {
                stopped_ = true;
                return false;
            }
        }
        if (budget_.max_solutions && summary_.count >= *budget_.max_solutions) {
            stopped_ = true;
            return false;
        }
        return true;
    }

    int order_;
    CompletionBudget budget_;
    const std::function<bool(const LatinSquare&)>* visit_;
    uint16_t full_ = 0;
    std::array<std::array<int8_t, kMaxOrder>, kMaxOrder> grid_{};
    std::array<uint16_t, kMaxOrder> row_used_{};
    std::array<uint16_t, kMaxOrder> col_used_{};
    std::array<int8_t, kMaxOrder * kMaxOrder> empties_{};
    int num_empty_ = 0;
    bool stopped_ = false;
    EnumerationSummary summary_;
};

}  // namespace

EnumerationSummary enumerate_completions(const PartialLatinSquare& p,
                                         const std::function<bool(const LatinSquare&)>& visit,
                                         const CompletionBudget& budget) {
    Engine engine(p, budget, &visit);
    return engine.run();
}

uint64_t count_completions(const PartialLatinSquare& p) {
    Engine engine(p, CompletionBudget{}, nullptr);
    return engine.run().count;
}

UniquenessResult is_uniquely_completable(const PartialLatinSquare& p, const LatinSquare* expected) {
    if (expected) {
        if (expected->order() != p.order())
            throw ParseError("expected square order mismatch");
        for (int r = 0; r < p.order(); ++r)
            for (int c = 0; c < p.order(); ++c)
                if (p.filled(r, c) && p.at(r, c) != expected->at(r, c))
                    throw ParseError("partial square is not a subset of the expected square");
    }
    UniquenessResult result;
    std::optional<LatinSquare> first;
    uint64_t seen = 0;
    auto consumer = [&](const LatinSquare& m) {
        ++seen;
        if (expected) {
            if (m == *expected) return true;       // keep looking for a different one
            result.witness = m;
            return false;                           // second completion certain: expected is one
        }
        if (!first) {
            first = m;
            return true;
        }
        result.witness = m;
        return false;
    };
    EnumerationSummary s = enumerate_completions(p, consumer, {});
    if (result.witness) {
        result.status = Uniqueness::kMultiple;
    } else if (seen == 0) {
        result.status = Uniqueness::kUncompletable;
    } else {
        result.status = Uniqueness::kUnique;
    }
    return result;
}

bool is_critical(std::span<const Entry> c, const LatinSquare& l) {
    for (const Entry& e : c)
        if (!l.contains(e)) throw ParseError("entry " + e.str() + " not in the square");
    PartialLatinSquare p = PartialLatinSquare::from_entries(l.order(), c);
    if (!is_uniquely_completable(p, &l).unique()) return false;
    std::vector<Entry> reduced(c.begin(), c.end());
    for (size_t drop = 0; drop < reduced.size(); ++drop) {
        std::vector<Entry> sub;
        sub.reserve(reduced.size() - 1);
        for (size_t i = 0; i < reduced.size(); ++i)
            if (i != drop) sub.push_back(reduced[i]);
        if (is_uniquely_completable(PartialLatinSquare::from_entries(l.order(), sub), &l).unique())
            return false;
    }
    return true;
}

}  // namespace lsq
