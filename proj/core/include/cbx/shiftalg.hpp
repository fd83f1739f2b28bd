#ifndef CBX_SHIFTALG_HPP
#define CBX_SHIFTALG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cbx/ratfunc.hpp"

namespace cbx {

// Integer shift monomial prod u_{i,r}^{m_{i,r}} acting on gauge slots only.
class ShiftMono {
public:
    ShiftMono() = default;

    static ShiftMono unit() { return ShiftMono(); }
    static ShiftMono u(const VarTable& vt, int slot, int power = 1);
    static ShiftMono from_exponents(const VarTable& vt, const std::vector<std::pair<int, int>>& e);

    const std::vector<std::pair<int, int>>& exponents() const { return e_; }
    bool is_unit() const { return e_.empty(); }
    int exponent(int slot) const;
    ShiftMono inverse() const;

    friend ShiftMono operator*(const ShiftMono& a, const ShiftMono& b);
    bool operator==(const ShiftMono& o) const { return e_ == o.e_; }
    bool operator<(const ShiftMono& o) const { return e_ < o.e_; }

    std::string str(const VarTable& vt) const;

private:
    std::vector<std::pair<int, int>> e_; // sorted by slot, exponents nonzero
};

// Element of the localized hbar-difference-operator ring: finite sum of
// RatFunc coefficients times shift monomials.
class DiffOp {
public:
    using Terms = std::map<ShiftMono, RatFunc>;

    DiffOp() : vt_(nullptr) {}
    explicit DiffOp(const VarTable* vt) : vt_(vt) {}

    static DiffOp zero(const VarTable* vt) { return DiffOp(vt); }
    static DiffOp coeff(RatFunc f); // f * u^0
    static DiffOp term(RatFunc f, ShiftMono m);
    static DiffOp shift(const VarTable* vt, ShiftMono m);
    static DiffOp one(const VarTable* vt) { return coeff(RatFunc::constant(vt, Rat(1))); }

    const VarTable* table() const { return vt_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }
    void add_term(const ShiftMono& m, const RatFunc& f);

    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp& operator-=(const DiffOp& o);
    friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
    friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
    friend DiffOp operator*(const DiffOp& a, const DiffOp& b); // op_mul
    DiffOp operator*(const Rat& c) const;
    DiffOp operator*(const RatFunc& f) const; // left multiplication by f

    bool operator==(const DiffOp& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    std::string str() const;

private:
    const VarTable* vt_;
    Terms terms_;
};

// apply w_{slot} -> w_{slot} + m_{slot} * hbar throughout f
RatFunc rf_shift_by(const RatFunc& f, const ShiftMono& m);

DiffOp op_commutator(const DiffOp& a, const DiffOp& b);

// (1/hbar)(ab - ba) with hbar then set to 0
DiffOp op_poisson_limit(const DiffOp& a, const DiffOp& b);

// substitute slots by rational constants in every coefficient
DiffOp op_specialize(const DiffOp& a, const std::map<int, Rat>& assignments);

// common homogeneity degree (coefficient degree under the weights; shift
// monomials weigh 0), or nullopt when some term breaks homogeneity
std::optional<long> op_homogeneity(const DiffOp& a, const std::vector<long>& weights);
std::optional<long> op_homogeneity(const DiffOp& a); // all slots weight 1

// substitute a spectral slot: var := var + steps * hbar (steps rational)
DiffOp op_spectral_shift(const DiffOp& a, int var, const Rat& steps);

// coefficient-wise principal part / coefficient at infinity in a spectral slot
DiffOp op_principal_part(const DiffOp& a, int var);
DiffOp op_coeff_at_infinity(const DiffOp& a, int var, int p);

} // namespace cbx

#endif
