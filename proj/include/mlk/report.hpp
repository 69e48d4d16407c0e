#ifndef MLK_REPORT_HPP
#define MLK_REPORT_HPP

#include <string>
#include <vector>

namespace mlk {

struct Check {
    std::string id;
    bool pass = false;
    std::string expected;
    std::string actual;
    std::string anchor;  // short human label of what this check covers
};

struct Report {
    std::string command;
    std::vector<Check> checks;

    void add(std::string id, bool pass, std::string expected = "", std::string actual = "",
             std::string anchor = "");
    bool all_pass() const;
    void sort_by_id();
    // Merge another report's checks under a prefix.
    void absorb(const Report& other, const std::string& prefix = "");

    std::string to_json(int indent = 2) const;
    std::string to_csv() const;
};

}  // namespace mlk

#endif
