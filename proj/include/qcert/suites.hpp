#pragma once

#include <vector>

#include "qcert/report.hpp"

namespace qcert {

/// The certification suites, one per acceptance criterion. Every function
/// returns one report per individual check; a criterion holds iff all its
/// reports pass.
namespace suites {

std::vector<VerificationReport> q4_thresholds(int jobs);                     // criterion 1
std::vector<VerificationReport> q6_thresholds(int jobs);                     // criterion 2
std::vector<VerificationReport> pinned_entry();                              // criterion 3
std::vector<VerificationReport> linearized_systems(long n_max, int jobs);    // criterion 4
std::vector<VerificationReport> radial_oracles(int jobs);                    // criterion 5
std::vector<VerificationReport> noncompactness(long n_lo, long n_hi, bool with_tables,
                                               int jobs);                    // criterion 6
std::vector<VerificationReport> definiteness_properties(long trials);        // criterion 7
std::vector<VerificationReport> fault_injection();                           // criterion 8

}  // namespace suites

}  // namespace qcert
