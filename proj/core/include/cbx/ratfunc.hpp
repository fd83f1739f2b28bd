#ifndef CBX_RATFUNC_HPP
#define CBX_RATFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "cbx/linform.hpp"
#include "cbx/mpoly.hpp"

namespace cbx {

// Exact rational function scale * core * prod(nfac) / prod(den).  Both the
// numerator factors and the denominator are multisets of canonically scaled
// affine-linear forms; core is the expanded remainder (primitive, positive
// leading coefficient).  Keeping numerators factored is what makes products
// of monopole operators tractable: multiplication concatenates multisets and
// common factors cancel without expansion.
class RatFunc {
public:
    using Den = std::map<LinForm, int>;

    RatFunc() : vt_(nullptr) {}
    explicit RatFunc(const VarTable* vt) : vt_(vt), core_(MPoly(vt)), scale_(1) {}

    static RatFunc constant(const VarTable* vt, const Rat& c);
    static RatFunc var(const VarTable* vt, int slot);
    static RatFunc from_poly(MPoly p);
    static RatFunc from_linform(const LinForm& l); // as a numerator factor
    static RatFunc inv_linform(const LinForm& l);  // 1 / form
    // scale * num / prod(den); reduces
    static RatFunc make(MPoly num, Den den, Rat scale);
    static RatFunc from_parts(MPoly core, Den nfac, Den den, Rat scale);
    // degree <= 1 polynomial, canonicalized into a numerator factor
    static RatFunc from_linear_poly(const MPoly& p);

    const VarTable* table() const { return vt_; }
    const MPoly& core() const { return core_; }
    const Den& num_forms() const { return nfac_; }
    const Den& den() const { return den_; }
    const Rat& scale() const { return scale_; }
    // expanded numerator core * prod(nfac) (scale not included)
    MPoly num() const;
    bool is_zero() const { return core_.is_zero(); }
    bool is_constant() const { return den_.empty() && nfac_.empty() && core_.is_constant(); }
    Rat constant_value() const { return scale_ * core_.constant_value(); }
    bool is_polynomial() const { return den_.empty(); }
    MPoly as_poly() const; // requires is_polynomial
    bool depends_on(int slot) const;

    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
    RatFunc operator*(const Rat& c) const;
    RatFunc inverse() const; // errors: DivisionByZero, NonLinearDenominator

    // value equality: fast structural path, else cross-multiplication of
    // expanded polynomials
    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }
    bool equals_crossmul(const RatFunc& o) const;

    // multi-term sum: pulls out common numerator factors, builds one common
    // denominator, reduces once
    static RatFunc sum(const std::vector<RatFunc>& terms);

    // substitute slot := slot + steps * hbar
    RatFunc shifted(int slot, const Rat& steps) const;
    RatFunc substituted_affine(int slot, const Rat& constant,
                               const std::vector<std::pair<int, Rat>>& coeffs) const;
    RatFunc specialized(int slot, const Rat& value) const;

    std::optional<long> homogeneous_degree(const std::vector<long>& weights) const;

    std::string str() const;

private:
    const VarTable* vt_;
    MPoly core_;
    Den nfac_;
    Den den_;
    Rat scale_{1};

    void reduce();
    void normalize();
    void set_zero();
};

// --- module ratfield free operations -------------------------------------

// w_slot -> w_slot + steps * hbar applied throughout (rf_shift)
RatFunc rf_shift(const RatFunc& f, int slot, int steps);

// coefficient of var^{-p} in the expansion at infinity (simple poles only)
RatFunc rf_coeff_at_infinity(const RatFunc& f, int var, int p);

// as above but admitting repeated poles (binomial expansion per order)
RatFunc rf_coeff_at_infinity_general(const RatFunc& f, int var, int p);

// f minus its polynomial part in var
RatFunc rf_principal_part(const RatFunc& f, int var);

// polynomial part of f in var
RatFunc rf_polynomial_part(const RatFunc& f, int var);

// factor a polynomial into linear forms (trial factorization); returns
// scale and forms or nullopt when the trial fails
std::optional<std::pair<Rat, std::vector<LinForm>>> try_factor_linear(const MPoly& p);

} // namespace cbx

#endif
