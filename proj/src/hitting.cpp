#include "lsq/hitting.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace lsq {

HittingInstance HittingInstance::from_trades(const TradeList& trades, std::optional<int> cap) {
    HittingInstance inst;
    inst.universe = trades.order * trades.order;
    inst.cap = cap;
    for (const Trade& t : trades.trades) inst.add_constraint(t.mask);
    return inst;
}

void HittingInstance::add_constraint(const CellMask& c) {
    if (c.empty()) throw ParseError("constraint must be nonempty");
    CellMask allowed;
    for (int p = 0; p < universe; ++p) allowed.set(p);
    if (!c.subset_of(allowed)) throw ParseError("constraint reaches outside the universe");
    constraints.push_back(c);
}

HittingInstance add_nogood(HittingInstance i, const CellMask& s, int bound) {
    if (bound < 1 || bound > s.count())
        throw ParseError("nogood bound " + std::to_string(bound) + " outside 1..|S|");
    i.nogoods.push_back(Nogood{s, bound});
    return i;
}

HittingInstance add_cap_constraint(HittingInstance i, int bound) {
    if (bound < 1) throw ParseError("cap bound must be >= 1");
    int cap = bound - 1;
    i.cap = i.cap ? std::min(*i.cap, cap) : cap;
    return i;
}

namespace {

class Solver {
  public:
    Solver(const HittingInstance& inst, bool minimise, int cap, const SolveBudget& budget)
        : inst_(inst), minimise_(minimise), cap_(cap), budget_(budget) {
        const int m = static_cast<int>(inst.constraints.size());
        hit_.assign(m, 0);
        free_cnt_.resize(m);
        adj_.resize(inst.universe);
        for (int c = 0; c < m; ++c) {
            free_cnt_[c] = static_cast<int16_t>(inst.constraints[c].count());
            for_each_pos(inst.constraints[c], [&](int p) { adj_[p].push_back(c); });
        }
        ng_chosen_.assign(inst.nogoods.size(), 0);
        ngadj_.resize(inst.universe);
        for (size_t g = 0; g < inst.nogoods.size(); ++g)
            for_each_pos(inst.nogoods[g].cells, [&](int p) { ngadj_[p].push_back(static_cast<int>(g)); });
        unhit_ = m;
    }

    SolveOutcome run() {
        auto t0 = std::chrono::steady_clock::now();
        SolveOutcome out;
        best_size_ = cap_ + 1;

        // Root propagation: every constraint and nogood gets one look.
        for (int c = 0; c < static_cast<int>(inst_.constraints.size()); ++c) pending_c_.push_back(c);
        for (int g = 0; g < static_cast<int>(inst_.nogoods.size()); ++g) pending_g_.push_back(g);
        size_t mark = trail_.size();
        bool root_ok = propagate();
        if (root_ok) search();
        undo_to(mark);

        out.stats.nodes = nodes_;
        out.stats.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (exhausted_budget_) {
            out.status = SolveStatus::kBudgetExhausted;
            if (have_best_) {
                out.witness = best_witness_;
                out.objective = static_cast<int>(best_witness_.size());
            }
        } else if (have_best_) {
            out.status = minimise_ ? SolveStatus::kOptimal : SolveStatus::kFeasible;
            out.witness = best_witness_;
            out.objective = static_cast<int>(best_witness_.size());
        } else {
            out.status = SolveStatus::kInfeasible;
        }
        return out;
    }

  private:
    template <typename F>
    static void for_each_pos(const CellMask& m, F f) {
        CellMask rest = m;
        for (int p = rest.lowest(); p != -1; p = rest.lowest()) {
            f(p);
            if (p < 64) rest.lo &= rest.lo - 1;
            else rest.hi &= rest.hi - 1;
        }
    }

    // ---- trail ----
    enum OpKind : int8_t { kOpChoose, kOpBan, kOpHit, kOpFree, kOpNgChosen };
    struct Op {
        OpKind kind;
        int32_t index;
    };

    void undo_to(size_t mark) {
        while (trail_.size() > mark) {
            Op op = trail_.back();
            trail_.pop_back();
            switch (op.kind) {
                case kOpChoose: {
                    int p = op.index;
                    if (p < 64) chosen_.lo &= ~(uint64_t{1} << p);
                    else chosen_.hi &= ~(uint64_t{1} << (p - 64));
                    --chosen_cnt_;
                    break;
                }
                case kOpBan: {
                    int p = op.index;
                    if (p < 64) banned_.lo &= ~(uint64_t{1} << p);
                    else banned_.hi &= ~(uint64_t{1} << (p - 64));
                    break;
                }
                case kOpHit:
                    hit_[op.index] = 0;
                    ++unhit_;
                    break;
                case kOpFree:
                    ++free_cnt_[op.index];
                    break;
                case kOpNgChosen:
                    --ng_chosen_[op.index];
                    break;
            }
        }
    }

    bool choose(int p) {
        trail_.push_back({kOpChoose, p});
        chosen_.set(p);
        ++chosen_cnt_;
        if (chosen_cnt_ > effective_bound()) return false;
        for (int c : adj_[p])
            if (!hit_[c]) {
                hit_[c] = 1;
                --unhit_;
                trail_.push_back({kOpHit, c});
            }
        for (int g : ngadj_[p]) {
            ++ng_chosen_[g];
            trail_.push_back({kOpNgChosen, g});
            pending_g_.push_back(g);
        }
        return true;
    }

    void ban(int p) {
        trail_.push_back({kOpBan, p});
        banned_.set(p);
        for (int c : adj_[p]) {
            --free_cnt_[c];
            trail_.push_back({kOpFree, c});
            if (!hit_[c]) pending_c_.push_back(c);
        }
    }

    // Max objective still worth exploring.
    int effective_bound() const { return minimise_ ? std::min(best_size_ - 1, cap_) : cap_; }

    bool propagate() {
        while (!pending_c_.empty() || !pending_g_.empty()) {
            if (!pending_c_.empty()) {
                int c = pending_c_.back();
                pending_c_.pop_back();
                if (hit_[c]) continue;
                if (free_cnt_[c] == 0) return false;
                if (free_cnt_[c] == 1) {
                    CellMask free = inst_.constraints[c] & ~banned_;
                    if (!choose(free.lowest())) return false;
                }
                continue;
            }
            int g = pending_g_.back();
            pending_g_.pop_back();
            const Nogood& ng = inst_.nogoods[g];
            if (ng_chosen_[g] >= ng.bound) return false;
            if (ng_chosen_[g] == ng.bound - 1) {
                CellMask free = ng.cells & ~banned_ & ~chosen_;
                for_each_pos(free, [&](int p) { ban(p); });
            }
        }
        return true;
    }

    // Greedy packing of pairwise-disjoint unhit constraints; each needs a
    // distinct new position. Stops as soon as the bound is exceeded.
    bool bound_prunes() {
        int allowance = effective_bound() - chosen_cnt_;
        if (allowance < 0) return true;
        int packed = 0;
        CellMask used;
        for (size_t c = 0; c < inst_.constraints.size(); ++c) {
            if (hit_[c]) continue;
            CellMask free = inst_.constraints[c] & ~banned_;
            if (free.intersects(used)) continue;
            used = used | free;
            if (++packed > allowance) return true;
        }
        return false;
    }

    void record_solution() {
        best_size_ = chosen_cnt_;
        have_best_ = true;
        best_witness_.clear();
        for_each_pos(chosen_, [&](int p) { best_witness_.push_back(p); });
    }

    // Returns false when the whole search should stop (budget / feasible hit).
    bool search() {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) {
            exhausted_budget_ = true;
            return false;
        }
        if (unhit_ == 0) {
            record_solution();
            return minimise_;  // keep improving in min mode, stop in feasible mode
        }
        if (bound_prunes()) return true;

        // Unhit constraint with the smallest residual; ties by index.
        int best_c = -1;
        int best_free = 1 << 14;
        for (size_t c = 0; c < inst_.constraints.size(); ++c)
            if (!hit_[c] && free_cnt_[c] < best_free) {
                best_free = free_cnt_[c];
                best_c = static_cast<int>(c);
                if (best_free <= 2) break;  // can't do better than a near-unit constraint
            }
        CellMask free = inst_.constraints[best_c] & ~banned_;
        int p = free.lowest();

        size_t mark = trail_.size();
        pending_c_.clear();
        pending_g_.clear();
        if (choose(p) && propagate()) {
            if (!search()) {
                undo_to(mark);
                return false;
            }
        }
        undo_to(mark);

        mark = trail_.size();
        pending_c_.clear();
        pending_g_.clear();
        ban(p);
        if (propagate()) {
            if (!search()) {
                undo_to(mark);
                return false;
            }
        }
        undo_to(mark);
        return true;
    }

    const HittingInstance& inst_;
    bool minimise_;
    int cap_;
    SolveBudget budget_;

    std::vector<uint8_t> hit_;
    std::vector<int16_t> free_cnt_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> ngadj_;
    std::vector<int> ng_chosen_;
    CellMask chosen_, banned_;
    int chosen_cnt_ = 0;
    int unhit_ = 0;
    int best_size_ = 0;
    bool have_best_ = false;
    std::vector<int> best_witness_;
    std::vector<Op> trail_;
    std::vector<int> pending_c_, pending_g_;
    uint64_t nodes_ = 0;
    bool exhausted_budget_ = false;
};

}  // namespace

SolveOutcome solve_min(const HittingInstance& inst, const SolveBudget& budget) {
    int cap = inst.cap ? *inst.cap : inst.universe;
    Solver s(inst, /*minimise=*/true, cap, budget);
    return s.run();
}

SolveOutcome solve_feasible(const HittingInstance& inst, int cap, const SolveBudget& budget) {
    if (cap < 0) throw ParseError("cap must be >= 0");
    if (inst.cap) cap = std::min(cap, *inst.cap);
    Solver s(inst, /*minimise=*/false, cap, budget);
    return s.run();
}

std::string dump_instance(const HittingInstance& inst) {
    std::ostringstream out;
    out << "universe " << inst.universe << "\n";
    if (inst.cap) out << "cap " << *inst.cap << "\n";
    for (const Nogood& ng : inst.nogoods) {
        out << "nogood " << ng.bound;
        CellMask rest = ng.cells;
        for (int p = rest.lowest(); p != -1; p = rest.lowest()) {
            out << ' ' << p;
            if (p < 64) rest.lo &= rest.lo - 1;
            else rest.hi &= rest.hi - 1;
        }
        out << "\n";
    }
    for (const CellMask& c : inst.constraints) {
        CellMask rest = c;
        bool first = true;
        for (int p = rest.lowest(); p != -1; p = rest.lowest()) {
            out << (first ? "" : " ") << p;
            first = false;
            if (p < 64) rest.lo &= rest.lo - 1;
            else rest.hi &= rest.hi - 1;
        }
        out << "\n";
    }
    return out.str();
}

HittingInstance load_instance(std::string_view text) {
    HittingInstance inst;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    bool have_universe = false;
    std::vector<std::pair<int, std::vector<int>>> nogoods;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head) || head[0] == '#') continue;
        auto fail = [&](const std::string& why) {
            throw ParseError("line " + std::to_string(lineno) + ": " + why);
        };
        if (head == "universe") {
            int u;
            if (!(ls >> u) || u < 1 || u > kMaxOrder * kMaxOrder) fail("bad universe");
            inst.universe = u;
            have_universe = true;
        } else if (head == "cap") {
            int cap;
            if (!(ls >> cap) || cap < 0) fail("bad cap");
            inst.cap = cap;
        } else if (head == "nogood") {
            int b;
            if (!(ls >> b)) fail("bad nogood bound");
            std::vector<int> cells;
            int p;
            while (ls >> p) cells.push_back(p);
            nogoods.emplace_back(b, std::move(cells));
        } else {
            if (!have_universe) fail("constraint before universe declaration");
            CellMask m;
            std::istringstream rs(line);
            int p;
            while (rs >> p) {
                if (p < 0 || p >= inst.universe) fail("position out of universe");
                m.set(p);
            }
            if (rs.fail() && !rs.eof()) fail("bad token in constraint");
            try {
                inst.add_constraint(m);
            } catch (const ParseError& e) {
                fail(e.what());
            }
        }
    }
    if (!have_universe) throw ParseError("missing universe declaration");
    for (auto& [b, cells] : nogoods) {
        CellMask m;
        for (int p : cells) {
            if (p < 0 || p >= inst.universe)
                throw ParseError("nogood position out of universe");
            m.set(p);
        }
        inst = add_nogood(std::move(inst), m, b);
    }
    return inst;
}

}  // namespace lsq
