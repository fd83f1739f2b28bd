#ifndef CBX_LINFORM_HPP
#define CBX_LINFORM_HPP

#include <string>
#include <utility>
#include <vector>

#include "cbx/rat.hpp"
#include "cbx/vartable.hpp"

namespace cbx {

// Affine-linear form c0 + sum c_s * x_s, canonically scaled: the first nonzero
// slot coefficient (in slot order) is 1.  The scaling factor removed by
// canonicalization is carried by the owning RatFunc.
class LinForm {
public:
    LinForm() : vt_(nullptr) {}

    // builds the canonical form; returns the scale that was divided out
    static std::pair<LinForm, Rat> canonical(const VarTable* vt, Rat constant,
                                             std::vector<std::pair<int, Rat>> coeffs);

    // x_slot - c  (already canonical)
    static LinForm var_minus(const VarTable* vt, int slot, const Rat& c);
    // x_slot (already canonical)
    static LinForm var(const VarTable* vt, int slot);

    const VarTable* table() const { return vt_; }
    const Rat& constant() const { return constant_; }
    const std::vector<std::pair<int, Rat>>& coeffs() const { return coeffs_; }
    Rat coeff(int slot) const;
    bool depends_on(int slot) const { return coeff(slot) != 0; }
    int pivot() const { return coeffs_.front().first; }

    // substitute slot := affine form given by (constant, coeffs); result is
    // re-canonicalized, returning the scale divided out
    std::pair<LinForm, Rat> substituted(int slot, const Rat& sub_constant,
                                        const std::vector<std::pair<int, Rat>>& sub_coeffs) const;

    bool operator==(const LinForm& o) const
    {
        return constant_ == o.constant_ && coeffs_ == o.coeffs_;
    }
    bool operator<(const LinForm& o) const
    {
        if (coeffs_ != o.coeffs_) return coeffs_ < o.coeffs_;
        return constant_ < o.constant_;
    }

    std::string str() const;

private:
    const VarTable* vt_;
    Rat constant_;
    std::vector<std::pair<int, Rat>> coeffs_; // sorted by slot, nonzero, front coeff == 1
};

} // namespace cbx

#endif
