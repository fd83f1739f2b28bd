#include "cbx/report.hpp"

#include <sstream>

#include <json.hpp>

namespace cbx {

std::string VerificationReport::json() const
{
    nlohmann::ordered_json j;
    j["relation"] = relation;
    j["vertices"] = vertices;
    j["status"] = verified ? "verified" : "failed";
    j["lhs_terms"] = lhs_terms;
    j["rhs_terms"] = rhs_terms;
    if (!witness.empty()) j["witness"] = witness;
    if (!notes.empty()) j["notes"] = notes;
    return j.dump();
}

std::string VerificationReport::text() const
{
    std::ostringstream os;
    os << relation;
    if (!vertices.empty()) {
        os << "(";
        for (size_t i = 0; i < vertices.size(); ++i) {
            if (i) os << ",";
            os << vertices[i];
        }
        os << ")";
    }
    os << ": " << (verified ? "verified" : "FAILED");
    if (!witness.empty()) os << "  witness: " << witness;
    for (const auto& n : notes) os << "  [" << n << "]";
    return os.str();
}

} // namespace cbx
