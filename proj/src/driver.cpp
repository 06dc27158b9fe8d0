#include "lsq/driver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "lsq/completion.hpp"

namespace lsq {

Schedule Schedule::defaults(int order, Mode mode) {
    Schedule s;
    s.mode = mode;
    s.z_max = 3 * order;
    s.cap = order * order / 4;
    if (mode == Mode::kFeasibility) s.cap -= 1;
    return s;
}

std::vector<int> Schedule::stages(int order) const {
    int zmax = z_max > 0 ? z_max : 3 * order;
    std::vector<int> out;
    if (mode == Mode::kFeasibility) {
        for (int z : {10, 12, 14, 24})
            if (z < zmax) out.push_back(z);
    } else {
        for (int z = z_init; z < zmax; z += z_step) out.push_back(z);
    }
    out.push_back(zmax);  // final stage: the complete 3-line list
    return out;
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::kNoSmallSet: return "no-small-set";
        case Verdict::kSmallUcFound: return "small-UC-found";
        case Verdict::kExhausted: return "exhausted";
    }
    return "?";
}

namespace {

std::vector<Entry> positions_to_entries(const LatinSquare& l, const std::vector<int>& positions) {
    std::vector<Entry> out;
    out.reserve(positions.size());
    for (int p : positions) out.emplace_back(p / l.order(), p % l.order(), l.at(p / l.order(), p % l.order()));
    return out;
}

// Iterative single-entry removal: the IP optimum is a UC set, not
// necessarily critical.
std::vector<Entry> refine_to_critical(const LatinSquare& l, std::vector<Entry> uc_set) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t i = 0; i < uc_set.size(); ++i) {
            std::vector<Entry> sub;
            sub.reserve(uc_set.size() - 1);
            for (size_t j = 0; j < uc_set.size(); ++j)
                if (j != i) sub.push_back(uc_set[j]);
            if (is_uniquely_completable(PartialLatinSquare::from_entries(l.order(), sub), &l)
                    .unique()) {
                uc_set = std::move(sub);
                changed = true;
                break;
            }
        }
    }
    return uc_set;
}

}  // namespace

ClassReport analyse_class(const LatinSquare& l, const Schedule& sched) {
    auto t0 = std::chrono::steady_clock::now();
    const int n = l.order();
    ClassReport report;
    report.order = n;
    report.square_text = l.serialize();
    report.intercalate_count = static_cast<int>(intercalates(l).size());

    TradeList trades = all_3line_trades(l);
    std::vector<int> stages = sched.stages(n);

    // Constraints added lazily by step-(3) escalation, kept across stages.
    std::vector<CellMask> extra;
    std::set<CellMask> extra_seen;
    std::vector<Nogood> nogoods;

    auto finish = [&](Verdict v) {
        report.verdict = v;
        report.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        return report;
    };

    for (size_t stage = 0; stage < stages.size(); ++stage) {
        const bool final_stage = stage + 1 == stages.size();
        const int z = stages[stage];
        report.z_final = z;

        HittingInstance inst;
        inst.universe = n * n;
        inst.cap = sched.cap;
        for (const Trade& t : trades.trades)
            if (final_stage || t.size() < z) inst.add_constraint(t.mask);
        for (const CellMask& m : extra) inst.add_constraint(m);
        inst.nogoods = nogoods;

        while (true) {
            report.trades_used = inst.constraints.size();
            SolveBudget budget{sched.solver_node_budget};
            SolveOutcome outcome = sched.mode == Schedule::Mode::kMinimise
                                       ? solve_min(inst, budget)
                                       : solve_feasible(inst, sched.cap, budget);
            report.solver_nodes += outcome.stats.nodes;
            if (outcome.status == SolveStatus::kBudgetExhausted) return finish(Verdict::kExhausted);
            if (outcome.status == SolveStatus::kInfeasible) return finish(Verdict::kNoSmallSet);

            std::vector<Entry> candidate = positions_to_entries(l, outcome.witness);
            if (!final_stage) break;  // raise z first; unique completion is tested at z_max

            PartialLatinSquare cand_sq = PartialLatinSquare::from_entries(n, candidate);
            UniquenessResult uc = is_uniquely_completable(cand_sq, &l);
            ++report.completions_checked;
            if (uc.unique()) {
                report.witness = candidate;
                report.witness_size = static_cast<int>(candidate.size());
                report.critical_set = refine_to_critical(l, candidate);
                report.critical_size = static_cast<int>(report.critical_set.size());
                return finish(Verdict::kSmallUcFound);
            }

            // Step (3): completions other than L define additional trades;
            // each is disjoint from the witness, so the witness is excluded.
            ++report.escalations;
            if (sched.max_escalations && report.escalations > static_cast<int>(*sched.max_escalations))
                return finish(Verdict::kExhausted);
            int added = 0;
            auto harvest = [&](const LatinSquare& m) {
                if (m == l) return true;
                CellMask diff;
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        if (m.at(r, c) != l.at(r, c)) diff.set(r * n + c);
                if (extra_seen.insert(diff).second) {
                    extra.push_back(diff);
                    inst.add_constraint(diff);
                }
                return ++added < sched.escalation_completions;
            };
            enumerate_completions(cand_sq, harvest, {});
            if (static_cast<int>(candidate.size()) == sched.cap) {
                CellMask s;
                for (int p : outcome.witness) s.set(p);
                nogoods.push_back(Nogood{s, static_cast<int>(candidate.size())});
                inst.nogoods = nogoods;
            }
        }
    }
    return finish(Verdict::kExhausted);  // unreachable: the final stage loops to a verdict
}

std::vector<LatinSquare> load_class_file(std::string_view text, int order) {
    std::vector<LatinSquare> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            LatinSquare l = LatinSquare::parse(line);
            if (l.order() != order)
                throw ParseError("square of order " + std::to_string(l.order()) + ", expected " +
                                 std::to_string(order));
            out.push_back(std::move(l));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

ScsResult scs_over_classes(const std::vector<LatinSquare>& classes, const Schedule& sched,
                           int jobs, const std::function<void(const ClassReport&)>& progress) {
    ScsResult result;
    result.cap = sched.cap;
    if (classes.empty()) return result;
    result.order = classes[0].order();
    result.reports.resize(classes.size());

    // Descending intercalate count, ties by class index.
    std::vector<std::pair<int, int>> order_key(classes.size());
    for (size_t i = 0; i < classes.size(); ++i)
        order_key[i] = {-static_cast<int>(intercalates(classes[i]).size()), static_cast<int>(i)};
    std::sort(order_key.begin(), order_key.end());

    std::atomic<size_t> next{0};
    std::mutex progress_mu;
    auto worker = [&] {
        while (true) {
            size_t slot = next.fetch_add(1);
            if (slot >= order_key.size()) break;
            int idx = order_key[slot].second;
            ClassReport r = analyse_class(classes[idx], sched);
            r.class_id = idx;
            result.reports[idx] = std::move(r);
            if (progress) {
                std::lock_guard<std::mutex> lock(progress_mu);
                progress(result.reports[idx]);
            }
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    for (const ClassReport& r : result.reports)
        if (r.verdict == Verdict::kSmallUcFound)
            result.scs = result.scs ? std::min(*result.scs, r.witness_size) : r.witness_size;
    return result;
}

CorrelationReport correlation_report(const std::vector<ClassReport>& reports) {
    CorrelationReport out;
    for (const ClassReport& r : reports) {
        out.rows.push_back(CorrelationRow{r.class_id, r.intercalate_count, r.seconds, 0});
        if (r.intercalate_count == 0) out.zero_intercalate_classes.push_back(r.class_id);
    }
    std::sort(out.rows.begin(), out.rows.end(), [](const CorrelationRow& a, const CorrelationRow& b) {
        if (a.seconds != b.seconds) return a.seconds > b.seconds;
        return a.class_id < b.class_id;
    });
    for (size_t i = 0; i < out.rows.size(); ++i) out.rows[i].time_rank = static_cast<int>(i) + 1;
    if (!out.rows.empty()) out.slowest_class = out.rows.front().class_id;

    // Spearman: Pearson correlation of average ranks.
    const size_t m = out.rows.size();
    if (m >= 2) {
        auto ranks = [&](auto key) {
            std::vector<double> rank(m);
            std::vector<size_t> idx(m);
            std::iota(idx.begin(), idx.end(), size_t{0});
            std::stable_sort(idx.begin(), idx.end(),
                             [&](size_t a, size_t b) { return key(out.rows[a]) < key(out.rows[b]); });
            size_t i = 0;
            while (i < m) {
                size_t j = i;
                while (j + 1 < m && key(out.rows[idx[j + 1]]) == key(out.rows[idx[i]])) ++j;
                double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
                for (size_t k = i; k <= j; ++k) rank[idx[k]] = avg;
                i = j + 1;
            }
            return rank;
        };
        std::vector<double> ri = ranks([](const CorrelationRow& r) { return r.intercalates; });
        std::vector<double> rt = ranks([](const CorrelationRow& r) { return r.seconds; });
        double mi = 0, mt = 0;
        for (size_t k = 0; k < m; ++k) {
            mi += ri[k];
            mt += rt[k];
        }
        mi /= static_cast<double>(m);
        mt /= static_cast<double>(m);
        double num = 0, di = 0, dt = 0;
        for (size_t k = 0; k < m; ++k) {
            num += (ri[k] - mi) * (rt[k] - mt);
            di += (ri[k] - mi) * (ri[k] - mi);
            dt += (rt[k] - mt) * (rt[k] - mt);
        }
        out.spearman_rho = (di > 0 && dt > 0) ? num / std::sqrt(di * dt) : 0.0;
    }
    return out;
}

}  // namespace lsq
