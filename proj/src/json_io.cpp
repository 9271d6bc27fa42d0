#include "metric_lines/json_io.hpp"

namespace mlines {

using nlohmann::json;

json to_json(const LineSystem& system) {
    json lines = json::array();
    for (const auto& l : system.lines) lines.push_back(l.members());
    return {{"schema", kSchema},
            {"n", system.n},
            {"lines", std::move(lines)},
            {"count", system.count()},
            {"universal", system.has_universal()}};
}

json to_json(const VerificationReport& r) {
    json props = json::object();
    for (const auto& p : r.properties) {
        json entry = {{"status", to_string(p.status)}};
        if (p.status == Status::fail) entry["witness"] = p.witness;
        props[p.name] = std::move(entry);
    }
    return {{"schema", kSchema},
            {"id", r.id},
            {"n", r.n},
            {"diameter", r.diameter},
            {"lines", r.line_count},
            {"universal", r.universal},
            {"lc", r.lc},
            {"chordal", r.chordal},
            {"biconnected", r.biconnected},
            {"passed", r.all_passed()},
            {"properties", std::move(props)}};
}

json to_json(const TheoremVerdict& v) {
    return {{"schema", kSchema},     {"suite", "main-theorem"},   {"scanned", v.scanned},
            {"lc_members", v.lc_members}, {"exceptions", v.exceptions}, {"expected", v.expected},
            {"unexpected", v.unexpected}, {"missing", v.missing},       {"matched", v.matched}};
}

json to_json(const Diam3Verdict& v) {
    return {{"schema", kSchema},   {"suite", "diam3"},          {"scanned", v.scanned},
            {"checked", v.checked}, {"violators", v.violators}, {"passed", v.passed()}};
}

json to_json(const std::vector<FamilyCheck>& checks) {
    json rows = json::array();
    bool all = true;
    for (const auto& c : checks) {
        all = all && c.ok;
        rows.push_back({{"name", c.name},
                        {"n", c.n},
                        {"diameter", c.diameter},
                        {"lines", c.lines},
                        {"bridges", c.bridges},
                        {"biconnected", c.biconnected},
                        {"expectation", c.expectation},
                        {"ok", c.ok}});
    }
    return {{"schema", kSchema}, {"checks", std::move(rows)}, {"passed", all}};
}

}  // namespace mlines
