#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "softtop/instance.hpp"
#include "softtop/map.hpp"
#include "softtop/miner.hpp"

namespace softtop::cli {

/// Result of one command: the machine-readable form and its stable
/// line-oriented rendering. Verdicts ("invalid", "false") are not errors.
struct Report {
  nlohmann::ordered_json json;
  std::string text;
};

Report validate_command(const ResolvedInstance& ri, const std::string& topology, Flavor flavor);
Report closed_command(const ResolvedInstance& ri, const std::string& topology);

enum class SetOperator { kClosure, kInterior, kDerived };
Report set_operator_command(const ResolvedInstance& ri, const std::string& topology,
                            const std::string& set, SetOperator op);

Report base_command(const ResolvedInstance& ri, const std::string& topology,
                    const std::string& candidate);
Report subbase_command(const ResolvedInstance& ri, const std::string& topology,
                       const std::string& candidate);
Report axioms_command(const ResolvedInstance& ri, const std::string& topology);

/// `criterion` empty means every criterion.
Report continuity_command(const ResolvedInstance& ri, const std::string& fn,
                          const std::string& from, const std::string& to,
                          std::optional<ContinuityCriterion> criterion);

/// JSON form is the witness instance document itself when one is found.
Report mine_command(const MinerGoal& goal, const EnumerationCaps& caps);

Report corpus_command(const std::string& dir);

/// Exit status a verdict report maps to: always 0, errors are exceptions.
inline constexpr int kVerdictStatus = 0;
inline constexpr int kErrorStatus = 2;

Flavor parse_flavor(const std::string& name);

}  // namespace softtop::cli
