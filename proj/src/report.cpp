#include "qcert/report.hpp"

#include <map>

namespace qcert {

const char* verdict_name(VerificationReport::Verdict v) {
    switch (v) {
        case VerificationReport::Verdict::pass: return "pass";
        case VerificationReport::Verdict::fail: return "fail";
        default: return "error";
    }
}

namespace {

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size() + 2);
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

void append_object(std::string& out,
                   const std::vector<std::pair<std::string, std::string>>& kv) {
    out += '{';
    bool first = true;
    for (const auto& [k, v] : kv) {
        if (!first) out += ',';
        first = false;
        out += '"' + json_escape(k) + "\":\"" + json_escape(v) + '"';
    }
    out += '}';
}

}  // namespace

std::string to_json_line(const VerificationReport& r) {
    std::string out = "{\"check_id\":\"" + json_escape(r.check_id) + "\",\"params\":";
    append_object(out, r.params);
    out += ",\"verdict\":\"";
    out += verdict_name(r.verdict);
    out += "\",\"expected\":\"" + json_escape(r.expected) + "\",\"actual\":\"" +
           json_escape(r.actual) + "\"";
    if (!r.witness.empty()) {
        out += ",\"witness\":";
        append_object(out, r.witness);
    }
    out += ",\"elapsed_ms\":" + std::to_string(r.elapsed_ms) + "}";
    return out;
}

void write_json_lines(std::ostream& os, const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports) os << to_json_line(r) << '\n';
}

void write_markdown_summary(std::ostream& os, const std::vector<VerificationReport>& reports) {
    std::map<std::string, std::array<long, 3>> tally;
    for (const auto& r : reports) {
        auto& t = tally[r.check_id];
        t[static_cast<int>(r.verdict)]++;
    }
    os << "# Certification summary\n\n";
    os << "| check | pass | fail | error |\n|---|---:|---:|---:|\n";
    for (const auto& [id, t] : tally)
        os << "| " << id << " | " << t[0] << " | " << t[1] << " | " << t[2] << " |\n";

    bool any_bad = false;
    for (const auto& r : reports)
        if (!r.passed()) {
            any_bad = true;
            break;
        }
    if (any_bad) {
        os << "\n## Failures\n\n| check | params | expected | actual |\n|---|---|---|---|\n";
        for (const auto& r : reports) {
            if (r.passed()) continue;
            os << "| " << r.check_id << " | ";
            bool first = true;
            for (const auto& [k, v] : r.params) {
                if (!first) os << ", ";
                first = false;
                os << k << "=" << v;
            }
            os << " | " << r.expected << " | " << r.actual << " |\n";
        }
    } else {
        os << "\nAll " << reports.size() << " reports passed.\n";
    }
}

}  // namespace qcert
