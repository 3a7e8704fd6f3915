#pragma once

#include <functional>
#include <optional>
#include <tuple>
#include <vector>

#include "qcert/pohozaev4.hpp"
#include "qcert/report.hpp"

namespace qcert {

/// Shared expected-vs-actual definiteness scan over (family, n, s) cells.
std::vector<VerificationReport> scan_family_reports(
    const char* check_id, const std::vector<std::tuple<Family, long, long>>& cells,
    const std::function<SymMatrix(Family, long, long)>& build,
    const std::function<std::optional<bool>(Family, long, long)>& expect, int jobs);

}  // namespace qcert
