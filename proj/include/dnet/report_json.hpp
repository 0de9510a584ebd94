// JSON serialization of verification reports.
//
// One schema covers both kinds:
//   { "kind": "net" | "sequence-prefix", "m", "s", "t", "strength",
//     "passed": bool,
//     "witness": {"composition": [...]} | {"shape": [...], "offsets": [...]} | null,
//     "checked_depths": [...] }
// "t" echoes the target the check ran against; "strength" is the
// measured one.  Sequence-prefix reports use the deepest examined
// window for "m"/"strength" and add "failed_depth" on rejection.

#ifndef DNET_REPORT_JSON_HPP
#define DNET_REPORT_JSON_HPP

#include <json.hpp>

#include "dnet/net_check.hpp"

namespace dnet {

nlohmann::json net_report_json(const TReport& rep, int target_t);

// The geometric checker decides a single t, so the caller supplies the
// measured strength (from an ascending scan) alongside the verdict at
// the target.
nlohmann::json geometric_report_json(int m, int s, int target_t, int strength,
                                     const GeometricReport& rep);

nlohmann::json sequence_report_json(const SequencePrefixReport& rep, int s);

} // namespace dnet

#endif
