#ifndef CBX_SYMFUNC_HPP
#define CBX_SYMFUNC_HPP

#include <map>
#include <string>
#include <vector>

#include "cbx/mpoly.hpp"

namespace cbx {

// Symmetric polynomial in n abstract variables, written in the elementary
// symmetric generators e_1, e_2, ...
class SymFunc {
public:
    SymFunc() = default;

    static SymFunc one() { return constant(Rat(1)); }
    static SymFunc constant(const Rat& c);
    static SymFunc e(int k); // elementary symmetric e_k

    bool is_one() const;

    SymFunc operator-() const;
    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(const SymFunc& a, const SymFunc& b);
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    // substitute concrete variables (as polynomials) for the abstract ones
    MPoly expand(const VarTable* vt, const std::vector<MPoly>& vars) const;

    // tiny expression grammar: e1, e2, ... with + - * ^ and rational scalars
    static SymFunc parse(const std::string& text);

    std::string str() const;

private:
    // exponent vector over e_1..e_k -> coefficient
    std::map<std::vector<int>, Rat> terms_;
};

} // namespace cbx

#endif
