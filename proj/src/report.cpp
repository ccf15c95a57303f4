#include "exptrio/report.hpp"

#include <cstdio>

namespace exptrio {

using nlohmann::json;

std::string fnv1a_hex(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ull;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

json make_run_report(const std::string& command, const std::string& inputs,
                     const std::vector<std::uint64_t>& seeds, json results) {
    return json{{"command", command},
                {"inputs_digest", fnv1a_hex(inputs)},
                {"artifact_version", kArtifactVersion},
                {"seeds", seeds},
                {"results", std::move(results)}};
}

json to_json(const WilcoxonResult& result) {
    return json{{"W", result.w},
                {"z", result.z},
                {"p_value", result.p_value},
                {"method", result.method == WilcoxonResult::Method::exact ? "exact" : "normal-approx"},
                {"ties_present", result.ties_present},
                {"m", result.m},
                {"n", result.n}};
}

json to_json(const TestReport& report) {
    return json{{"r_vs_t", to_json(report.r_vs_t)},
                {"s_vs_t", to_json(report.s_vs_t)},
                {"alpha", report.alpha},
                {"reject_exponentiality", report.reject},
                {"split_seed", report.triples.split_seed},
                {"group_size", report.triples.r.size()}};
}

json to_json(const PowerEstimate& estimate) {
    return json{{"alternative", estimate.alternative.describe()},
                {"sample_size", estimate.sample_size},
                {"replicates", estimate.replicates},
                {"rejections", estimate.rejections},
                {"alpha", estimate.alpha},
                {"rate", estimate.rate},
                {"wilson99", {estimate.wilson99.first, estimate.wilson99.second}},
                {"master_seed", estimate.master_seed}};
}

json summary_json(const DiscrepancyReport& report) {
    return json{{"points", report.grid.size()},
                {"sup_residual", report.sup_residual},
                {"l2_residual", report.l2_residual},
                {"argmax_x", report.argmax_x}};
}

}  // namespace exptrio
