#ifndef CBX_REPORT_HPP
#define CBX_REPORT_HPP

#include <string>
#include <vector>

namespace cbx {

struct VerificationReport {
    std::string relation;
    std::vector<std::string> vertices;
    bool verified = false;
    long lhs_terms = 0;
    long rhs_terms = 0;
    std::string witness; // first offending term when not verified
    std::vector<std::string> notes;

    std::string json() const; // stable key order
    std::string text() const;
};

} // namespace cbx

#endif
