// clintag -- rule-based POS tagger for clinical English
//
// Accuracy arithmetic: per-group, macro (unweighted mean of rounded group
// accuracies, the reporting convention of the source tagger) and micro
// (pooled correct/total).
#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "tagset.hpp"

namespace clintag {

struct GroupCounts {
    std::string group;
    std::int64_t correct = 0;
    std::int64_t incorrect = 0;
    std::int64_t total = 0;

    bool consistent() const {
        return correct >= 0 && incorrect >= 0 && correct + incorrect == total;
    }
};

/// Round half-up to 2 decimals (display convention).
inline double round2_half_up(double v) {
    return std::floor(v * 100.0 + 0.5) / 100.0;
}

struct Accuracy {
    double unrounded = 0.0;
    double rounded = 0.0; // half-up, 2 decimals
};

inline Accuracy accuracy(std::int64_t correct, std::int64_t total) {
    if (total == 0) throw ZeroTotalError();
    double u = 100.0 * static_cast<double>(correct) / static_cast<double>(total);
    return {u, round2_half_up(u)};
}

struct EvalReport {
    std::vector<GroupCounts> groups;
    std::vector<double> per_group_accuracy; // rounded, parallel to groups
    double macro_accuracy = 0.0; // unweighted mean of rounded group accuracies
    double micro_accuracy = 0.0; // pooled, rounded
    double micro_unrounded = 0.0;
    double fallback_rate = 0.0; // percent of tokens tagged by lexicon-fallback
};

inline EvalReport build_report(const std::vector<GroupCounts>& groups,
                               double fallback_rate = 0.0) {
    EvalReport report;
    report.fallback_rate = fallback_rate;
    std::int64_t sum_correct = 0, sum_total = 0;
    double acc_sum = 0.0;
    for (const auto& g : groups) {
        if (!g.consistent())
            throw Error("group '" + g.group + "' violates correct + incorrect = total");
        report.groups.push_back(g);
        Accuracy a = accuracy(g.correct, g.total);
        report.per_group_accuracy.push_back(a.rounded);
        acc_sum += a.rounded;
        sum_correct += g.correct;
        sum_total += g.total;
    }
    if (groups.empty()) throw ZeroTotalError();
    report.macro_accuracy =
        round2_half_up(acc_sum / static_cast<double>(groups.size()));
    Accuracy micro = accuracy(sum_correct, sum_total);
    report.micro_accuracy = micro.rounded;
    report.micro_unrounded = micro.unrounded;
    return report;
}

} // namespace clintag
