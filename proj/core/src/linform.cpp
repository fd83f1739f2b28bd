#include "cbx/linform.hpp"

#include <algorithm>
#include <sstream>

#include "cbx/error.hpp"

namespace cbx {

std::pair<LinForm, Rat> LinForm::canonical(const VarTable* vt, Rat constant,
                                           std::vector<std::pair<int, Rat>> coeffs)
{
    std::sort(coeffs.begin(), coeffs.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge duplicates, drop zeros
    std::vector<std::pair<int, Rat>> merged;
    for (auto& [s, c] : coeffs) {
        if (!merged.empty() && merged.back().first == s)
            merged.back().second += c;
        else
            merged.emplace_back(s, c);
        if (!merged.empty() && merged.back().second == 0) merged.pop_back();
    }
    if (merged.empty())
        throw NonLinearDenominator("affine form with no variable part");
    Rat scale = merged.front().second;
    for (auto& [s, c] : merged) c /= scale;
    constant /= scale;
    LinForm l;
    l.vt_ = vt;
    l.constant_ = std::move(constant);
    l.coeffs_ = std::move(merged);
    return {std::move(l), std::move(scale)};
}

LinForm LinForm::var_minus(const VarTable* vt, int slot, const Rat& c)
{
    LinForm l;
    l.vt_ = vt;
    l.constant_ = -c;
    l.coeffs_ = {{slot, Rat(1)}};
    return l;
}

LinForm LinForm::var(const VarTable* vt, int slot) { return var_minus(vt, slot, Rat(0)); }

Rat LinForm::coeff(int slot) const
{
    for (const auto& [s, c] : coeffs_)
        if (s == slot) return c;
    return Rat(0);
}

std::pair<LinForm, Rat> LinForm::substituted(int slot, const Rat& sub_constant,
                                             const std::vector<std::pair<int, Rat>>& sub_coeffs) const
{
    Rat k = coeff(slot);
    if (k == 0) return {*this, Rat(1)};
    Rat constant = constant_ + k * sub_constant;
    std::vector<std::pair<int, Rat>> coeffs;
    for (const auto& [s, c] : coeffs_)
        if (s != slot) coeffs.emplace_back(s, c);
    for (const auto& [s, c] : sub_coeffs) coeffs.emplace_back(s, k * c);
    return canonical(vt_, std::move(constant), std::move(coeffs));
}

std::string LinForm::str() const
{
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, c] : coeffs_) {
        Rat v = c;
        if (first) {
            if (v < 0) { os << "-"; v = -v; }
        } else {
            os << (v < 0 ? " - " : " + ");
            if (v < 0) v = -v;
        }
        first = false;
        if (v != 1) os << v << "*";
        os << vt_->name(s);
    }
    if (constant_ != 0) {
        Rat v = constant_;
        os << (v < 0 ? " - " : " + ");
        if (v < 0) v = -v;
        os << v;
    }
    return os.str();
}

} // namespace cbx
