#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace qcert {

/// One certified check: what was run, what the published claim predicts, what
/// the engine found, and (on failure) the witness data making it auditable.
struct VerificationReport {
    enum class Verdict { pass, fail, error };

    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    Verdict verdict = Verdict::error;
    std::string expected;
    std::string actual;
    std::vector<std::pair<std::string, std::string>> witness;
    long long elapsed_ms = 0;

    bool passed() const { return verdict == Verdict::pass; }
};

const char* verdict_name(VerificationReport::Verdict v);

/// JSON-lines: one object per report, keys in fixed order so runs are
/// byte-identical apart from elapsed_ms.
std::string to_json_line(const VerificationReport& r);
void write_json_lines(std::ostream& os, const std::vector<VerificationReport>& reports);

void write_markdown_summary(std::ostream& os, const std::vector<VerificationReport>& reports);

}  // namespace qcert
