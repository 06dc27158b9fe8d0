#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lsq/hitting.hpp"
#include "lsq/square.hpp"
#include "lsq/trades.hpp"

namespace lsq {

// Escalating trade-size schedule for one class. cap bounds witness size
// inclusively; minimise mode looks for the smallest UC set of size <= cap,
// feasibility mode for any witness of size <= cap.
struct Schedule {
    enum class Mode { kMinimise, kFeasibility };

    Mode mode = Mode::kMinimise;
    int z_init = 10;
    int z_step = 2;
    int z_max = 0;  // defaults to 3n; the final stage uses the full 3-line list
    int cap = 0;    // inclusive; defaults to floor(n^2/4)
    std::optional<uint64_t> solver_node_budget;
    std::optional<uint64_t> max_escalations;
    // Diff trades are taken from up to this many completions of a failed
    // witness per escalation round.
    int escalation_completions = 16;

    static Schedule defaults(int order, Mode mode = Mode::kMinimise);
    // Stage thresholds: trades of size < z feed intermediate stages; the
    // final stage always uses every 3-line trade. Feasibility mode walks
    // the staged limits 10, 12, 14, 24 (clipped to 3n).
    std::vector<int> stages(int order) const;
};

enum class Verdict { kNoSmallSet, kSmallUcFound, kExhausted };

std::string_view to_string(Verdict v);

struct ClassReport {
    int class_id = 0;
    int order = 0;
    std::string square_text;
    int intercalate_count = 0;
    Verdict verdict = Verdict::kExhausted;
    int witness_size = 0;               // UC witness, when found
    std::vector<Entry> witness;
    int critical_size = 0;              // after redundant-entry removal
    std::vector<Entry> critical_set;
    int escalations = 0;                // step-(3) rounds
    uint64_t trades_used = 0;           // constraints in the final instance
    int z_final = 0;
    uint64_t solver_nodes = 0;
    uint64_t completions_checked = 0;
    double seconds = 0;
};

ClassReport analyse_class(const LatinSquare& l, const Schedule& sched);

struct ScsResult {
    int order = 0;
    int cap = 0;
    std::optional<int> scs;  // min witness size over classes; empty if none found
    std::vector<ClassReport> reports;  // by class index
};

// One representative per line; '#' lines and blanks ignored. Errors carry
// line numbers.
std::vector<LatinSquare> load_class_file(std::string_view text, int order);

// Runs analyse_class over every representative, visiting classes in
// descending intercalate order, reports merged back by class index.
ScsResult scs_over_classes(const std::vector<LatinSquare>& classes, const Schedule& sched,
                           int jobs = 1,
                           const std::function<void(const ClassReport&)>& progress = {});

struct CorrelationRow {
    int class_id = 0;
    int intercalates = 0;
    double seconds = 0;
    int time_rank = 0;  // 1 = slowest
};

struct CorrelationReport {
    std::vector<CorrelationRow> rows;          // sorted by descending time
    double spearman_rho = 0;                   // intercalates vs time
    std::vector<int> zero_intercalate_classes;
    int slowest_class = -1;
};

CorrelationReport correlation_report(const std::vector<ClassReport>& reports);

}  // namespace lsq
