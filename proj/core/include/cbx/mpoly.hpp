#ifndef CBX_MPOLY_HPP
#define CBX_MPOLY_HPP

#include <optional>
#include <string>
#include <vector>

#include "cbx/rat.hpp"
#include "cbx/vartable.hpp"

namespace cbx {

using Expo = std::vector<uint16_t>;

class LinForm;

// Sparse exact multivariate polynomial over Q.  Monomials are packed into a
// 128-bit key: the top byte holds the total degree, the remaining 15 bytes
// one exponent per slot, so unsigned comparison is graded-lex order and key
// addition is monomial multiplication.  The symbolic layer therefore supports
// at most 15 slots and total degree < 256 (desk scale).
class MPoly {
public:
    using Key = unsigned __int128;
    static constexpr int kMaxSlots = 15;
    using Terms = std::vector<std::pair<Key, Rat>>; // sorted by key, descending

    MPoly() : vt_(nullptr) {}
    explicit MPoly(const VarTable* vt) : vt_(vt) {}

    static MPoly constant(const VarTable* vt, const Rat& c);
    static MPoly var(const VarTable* vt, int slot, int power = 1);
    static MPoly from_linform(const LinForm& l);

    static Key pack(const VarTable* vt, const Expo& e);
    static long degree_of(Key k) { return static_cast<long>(k >> 120); }
    static int exp_of(Key k, int slot)
    {
        return static_cast<int>((k >> (8 * (14 - slot))) & 0xFF);
    }
    static Key key_of_var(int slot, int power = 1)
    {
        return (Key(power) << 120) | (Key(power) << (8 * (14 - slot)));
    }

    const VarTable* table() const { return vt_; }
    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first == 0); }
    Rat constant_value() const { return t_.empty() ? Rat(0) : t_[0].second; }
    long total_degree() const { return t_.empty() ? -1 : degree_of(t_[0].first); }
    int degree_in(int slot) const;
    bool depends_on(int slot) const;
    const Rat& leading_coeff() const { return t_[0].second; }
    size_t size() const { return t_.size(); }
    Rat coeff_of(Key k) const;

    void add_term(const Expo& e, const Rat& c);
    void add_term_key(Key k, const Rat& c);

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    MPoly& operator*=(const MPoly& o) { return *this = *this * o; }
    MPoly& operator*=(const Rat& c);
    MPoly pow(int k) const;

    bool operator==(const MPoly& o) const { return t_ == o.t_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    // univariate view in one slot: coefficients c[k] of slot^k (slot cleared)
    std::vector<MPoly> univariate_in(int slot) const;
    static MPoly from_univariate(int slot, const std::vector<MPoly>& coeffs);

    MPoly substituted(int slot, const MPoly& value) const;
    MPoly substituted(int slot, const Rat& value) const;

    // exact division by a canonical linear form; nullopt if not divisible
    std::optional<MPoly> divided_by(const LinForm& l) const;
    std::optional<MPoly> divided_by_var(int slot) const;

    // divide out rational content; returns the removed factor (old = factor *
    // new, new has coprime integer coefficients, positive leading coefficient)
    Rat normalize_primitive();

    std::optional<long> homogeneous_degree(const std::vector<long>& weights) const;

    std::string str() const;

private:
    const VarTable* vt_;
    Terms t_;

    void normal_form(); // sort descending and collapse duplicates
    friend class RatFunc;
};

} // namespace cbx

#endif
