#ifndef PILAB_REPORT_HPP
#define PILAB_REPORT_HPP

#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace pilab {

/// One verified statement inside a check: expected vs actual with provenance
/// (PAPER / TRIVIAL / DERIVED) carried through to the report.
struct Assertion {
    std::string name;
    std::string expected;
    std::string actual;
    std::string provenance;
    bool pass = false;
};

/// Structured outcome of a scenario or theorem check.
struct CheckReport {
    std::string scenario;
    std::vector<std::pair<std::string, std::string>> quantities;
    std::vector<Assertion> assertions;
    std::vector<std::string> witnesses;
    std::uint64_t seed = 0;
    std::int64_t elapsed_ms = 0;

    void quantity(const std::string& name, const std::string& value);
    void quantity(const std::string& name, std::int64_t value);
    void check_eq(const std::string& name, const std::string& expected, const std::string& actual,
                  const std::string& provenance, const std::string& witness_on_fail = "");
    void check_eq(const std::string& name, std::int64_t expected, std::int64_t actual,
                  const std::string& provenance, const std::string& witness_on_fail = "");
    void check_true(const std::string& name, bool ok, const std::string& provenance,
                    const std::string& witness_on_fail = "");
    void merge(const CheckReport& other, const std::string& prefix = "");

    bool passed() const;
};

enum class ReportFormat { Json, Text };

std::string reports_to_json(const std::vector<CheckReport>& reports);
std::string reports_to_text(const std::vector<CheckReport>& reports);
void emit_reports(const std::vector<CheckReport>& reports, ReportFormat format, std::ostream& out);
/// JSON with the elapsed_ms fields removed; used by the determinism check.
std::string reports_to_json_stable(const std::vector<CheckReport>& reports);

}  // namespace pilab

#endif
