#include "dnet/report_json.hpp"

namespace dnet {

using nlohmann::json;

json net_report_json(const TReport& rep, int target_t) {
    const bool passed = rep.t_value <= target_t;
    json witness; // null
    if (!passed && rep.witness)
        witness = json{{"composition", *rep.witness}};
    return json{{"kind", "net"},
                {"m", rep.m},
                {"s", rep.s},
                {"t", target_t},
                {"strength", rep.strength},
                {"passed", passed},
                {"witness", std::move(witness)},
                {"checked_depths", json::array()}};
}

json geometric_report_json(int m, int s, int target_t, int strength,
                           const GeometricReport& rep) {
    json witness;
    if (!rep.passed && rep.witness)
        witness = json{{"shape", rep.witness->shape},
                       {"offsets", rep.witness->offsets}};
    return json{{"kind", "net"},
                {"m", m},
                {"s", s},
                {"t", target_t},
                {"strength", strength},
                {"passed", rep.passed},
                {"witness", std::move(witness)},
                {"checked_depths", json::array()}};
}

json sequence_report_json(const SequencePrefixReport& rep, int s) {
    json witness;
    json out{{"kind", "sequence-prefix"},
             {"s", s},
             {"t", rep.t},
             {"passed", rep.certified},
             {"m", rep.max_depth}};
    std::vector<int> checked;
    checked.reserve(rep.depths.size());
    for (const auto& d : rep.depths)
        checked.push_back(d.depth);
    out["checked_depths"] = checked;
    out["strength"] =
        rep.depths.empty() ? 0 : rep.depths.back().report.strength;
    if (!rep.certified && rep.first_failing_depth) {
        out["failed_depth"] = *rep.first_failing_depth;
        const auto& failing = rep.depths[*rep.first_failing_depth - 1];
        if (failing.report.witness)
            witness = json{{"composition", *failing.report.witness}};
    }
    out["witness"] = std::move(witness);
    return out;
}

} // namespace dnet
