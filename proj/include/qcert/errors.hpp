#pragma once

#include <stdexcept>
#include <string>

namespace qcert {

// Inputs outside an operation's admissible range.
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& msg) : std::runtime_error("domain error: " + msg) {}
};

// Adding pi-inhomogeneous quantities. Signals a derivation bug upstream,
// never a recoverable condition.
struct homogeneity_error : std::runtime_error {
    explicit homogeneity_error(const std::string& msg)
        : std::runtime_error("homogeneity error: " + msg) {}
};

// A moment integral with i - 2j >= -1.
struct convergence_error : std::runtime_error {
    explicit convergence_error(const std::string& msg)
        : std::runtime_error("convergence error: " + msg) {}
};

// Zero pivot during back-substitution; carries the offending position.
struct degeneracy_error : std::runtime_error {
    degeneracy_error(long row, long col)
        : std::runtime_error("degeneracy error: zero pivot at (" + std::to_string(row) + "," +
                             std::to_string(col) + ")"),
          row(row),
          col(col) {}
    long row;
    long col;
};

// Two independent computation paths disagreed. The run must not continue.
struct internal_check_error : std::logic_error {
    explicit internal_check_error(const std::string& msg)
        : std::logic_error("internal check failed: " + msg) {}
};

}  // namespace qcert
