#ifndef EXPTRIO_REPORT_HPP
#define EXPTRIO_REPORT_HPP

#include <json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "exptrio/densities.hpp"
#include "exptrio/gof.hpp"
#include "exptrio/montecarlo.hpp"
#include "exptrio/ranksum.hpp"

namespace exptrio {

inline constexpr const char* kArtifactVersion = "1.0.0";

// FNV-1a 64-bit digest as a 16-hex-digit string.
std::string fnv1a_hex(std::string_view data);

// Report envelope shared by all subcommands. `inputs` is the canonical
// argument string that gets digested; `results` is the subcommand body.
nlohmann::json make_run_report(const std::string& command, const std::string& inputs,
                               const std::vector<std::uint64_t>& seeds,
                               nlohmann::json results);

nlohmann::json to_json(const WilcoxonResult& result);
nlohmann::json to_json(const TestReport& report);
nlohmann::json to_json(const PowerEstimate& estimate);
nlohmann::json summary_json(const DiscrepancyReport& report);

}  // namespace exptrio

#endif  // EXPTRIO_REPORT_HPP
