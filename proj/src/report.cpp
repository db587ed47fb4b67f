#include "pilab/report.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "pilab/error.hpp"

namespace pilab {

void CheckReport::quantity(const std::string& name, const std::string& value) {
    quantities.emplace_back(name, value);
}
void CheckReport::quantity(const std::string& name, std::int64_t value) {
    quantities.emplace_back(name, std::to_string(value));
}

void CheckReport::check_eq(const std::string& name, const std::string& expected,
                           const std::string& actual, const std::string& provenance,
                           const std::string& witness_on_fail) {
    Assertion a{name, expected, actual, provenance, expected == actual};
    if (!a.pass) witnesses.push_back(witness_on_fail.empty() ? name + ": got " + actual : witness_on_fail);
    assertions.push_back(std::move(a));
}

void CheckReport::check_eq(const std::string& name, std::int64_t expected, std::int64_t actual,
                           const std::string& provenance, const std::string& witness_on_fail) {
    check_eq(name, std::to_string(expected), std::to_string(actual), provenance, witness_on_fail);
}

void CheckReport::check_true(const std::string& name, bool ok, const std::string& provenance,
                             const std::string& witness_on_fail) {
    Assertion a{name, "true", ok ? "true" : "false", provenance, ok};
    if (!ok) witnesses.push_back(witness_on_fail.empty() ? name + " failed" : witness_on_fail);
    assertions.push_back(std::move(a));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
    for (const auto& q : other.quantities) quantities.emplace_back(prefix + q.first, q.second);
    for (auto a : other.assertions) {
        a.name = prefix + a.name;
        assertions.push_back(std::move(a));
    }
    for (const auto& w : other.witnesses) witnesses.push_back(w);
}

bool CheckReport::passed() const {
    for (const auto& a : assertions)
        if (!a.pass) return false;
    return true;
}

namespace {

nlohmann::ordered_json report_to_json(const CheckReport& r, bool with_elapsed) {
    nlohmann::ordered_json j;
    j["scenario"] = r.scenario;
    nlohmann::ordered_json q = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.quantities) q[k] = v;
    j["quantities"] = q;
    nlohmann::ordered_json as = nlohmann::ordered_json::array();
    for (const auto& a : r.assertions)
        as.push_back({{"name", a.name},
                      {"expected", a.expected},
                      {"actual", a.actual},
                      {"provenance", a.provenance},
                      {"pass", a.pass}});
    j["assertions"] = as;
    j["witnesses"] = r.witnesses;
    j["seed"] = r.seed;
    if (with_elapsed) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

std::string render_json(const std::vector<CheckReport>& reports, bool with_elapsed) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_to_json(r, with_elapsed));
    return arr.dump(2) + "\n";
}

}  // namespace

std::string reports_to_json(const std::vector<CheckReport>& reports) {
    return render_json(reports, true);
}

std::string reports_to_json_stable(const std::vector<CheckReport>& reports) {
    return render_json(reports, false);
}

std::string reports_to_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    std::size_t pass = 0, fail = 0;
    for (const auto& r : reports) {
        out << "== " << r.scenario << " (" << r.elapsed_ms << " ms)\n";
        if (!r.quantities.empty()) {
            out << "   quantities:";
            for (const auto& [k, v] : r.quantities) out << " " << k << "=" << v;
            out << "\n";
        }
        for (const auto& a : r.assertions) {
            out << "   " << (a.pass ? "[pass]" : "[FAIL]") << " " << std::left << std::setw(40)
                << a.name << " expected=" << a.expected << " actual=" << a.actual << " ["
                << a.provenance << "]\n";
            (a.pass ? pass : fail)++;
        }
        if (!r.passed())
            for (const auto& w : r.witnesses) out << "   witness: " << w << "\n";
    }
    out << pass << " assertions passed, " << fail << " failed\n";
    return out.str();
}

void emit_reports(const std::vector<CheckReport>& reports, ReportFormat format, std::ostream& out) {
    out << (format == ReportFormat::Json ? reports_to_json(reports) : reports_to_text(reports));
    if (!out) throw Error("report emission failed: output stream in bad state");
}

}  // namespace pilab
