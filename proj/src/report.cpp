#include "mlk/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace mlk {

void Report::add(std::string id, bool pass, std::string expected, std::string actual,
                 std::string anchor) {
    checks.push_back({std::move(id), pass, std::move(expected), std::move(actual),
                      std::move(anchor)});
}

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::sort_by_id() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.id < b.id; });
}

void Report::absorb(const Report& other, const std::string& prefix) {
    for (const auto& c : other.checks)
        checks.push_back({prefix + c.id, c.pass, c.expected, c.actual, c.anchor});
}

std::string Report::to_json(int indent) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["check"] = c.id;
        e["status"] = c.pass ? "pass" : "fail";
        e["expected"] = c.expected;
        e["actual"] = c.actual;
        if (!c.anchor.empty()) e["anchor"] = c.anchor;
        j["checks"].push_back(e);
    }
    j["all_pass"] = all_pass();
    return j.dump(indent);
}

std::string Report::to_csv() const {
    std::ostringstream os;
    os << "check,status,expected,actual,anchor\n";
    auto esc = [](const std::string& s) {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"') out += "\"\"";
            else out += c;
        }
        return out + "\"";
    };
    for (const auto& c : checks)
        os << esc(c.id) << "," << (c.pass ? "pass" : "fail") << "," << esc(c.expected) << ","
           << esc(c.actual) << "," << esc(c.anchor) << "\n";
    return os.str();
}

}  // namespace mlk
