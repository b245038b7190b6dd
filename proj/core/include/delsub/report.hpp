#pragma once

#include <string>
#include <vector>

#include "delsub/verify.hpp"

namespace delsub {

// Renderings of the same report data. Elapsed time is included only when
// `timing` is set, so default output is byte-identical across runs.
std::string to_json(const VerificationReport& report, bool timing = false);
std::string to_json(const std::vector<VerificationReport>& reports, bool timing = false);
std::string to_text(const VerificationReport& report, bool timing = false);
std::string to_csv(const std::vector<VerificationReport>& reports, bool timing = false);

}  // namespace delsub
