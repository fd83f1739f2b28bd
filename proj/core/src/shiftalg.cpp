#include "cbx/shiftalg.hpp"

#include <algorithm>
#include <sstream>

#include "cbx/error.hpp"

namespace cbx {

ShiftMono ShiftMono::u(const VarTable& vt, int slot, int power)
{
    if (!vt.is_gauge(slot)) throw IndexOutOfRange("shift monomial on non-gauge slot");
    ShiftMono m;
    if (power != 0) m.e_.emplace_back(slot, power);
    return m;
}

ShiftMono ShiftMono::from_exponents(const VarTable& vt, const std::vector<std::pair<int, int>>& e)
{
    ShiftMono m;
    for (const auto& [s, k] : e) {
        if (!vt.is_gauge(s)) throw IndexOutOfRange("shift monomial on non-gauge slot");
        if (k != 0) m.e_.emplace_back(s, k);
    }
    std::sort(m.e_.begin(), m.e_.end());
    return m;
}

int ShiftMono::exponent(int slot) const
{
    for (const auto& [s, k] : e_)
        if (s == slot) return k;
    return 0;
}

ShiftMono ShiftMono::inverse() const
{
    ShiftMono m = *this;
    for (auto& [s, k] : m.e_) k = -k;
    return m;
}

ShiftMono operator*(const ShiftMono& a, const ShiftMono& b)
{
    ShiftMono m;
    auto ia = a.e_.begin(), ib = b.e_.begin();
    while (ia != a.e_.end() || ib != b.e_.end()) {
        if (ib == b.e_.end() || (ia != a.e_.end() && ia->first < ib->first)) {
            m.e_.push_back(*ia++);
        } else if (ia == a.e_.end() || ib->first < ia->first) {
            m.e_.push_back(*ib++);
        } else {
            int k = ia->second + ib->second;
            if (k != 0) m.e_.emplace_back(ia->first, k);
            ++ia;
            ++ib;
        }
    }
    return m;
}

std::string ShiftMono::str(const VarTable& vt) const
{
    if (e_.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [s, k] : e_) {
        if (!first) os << "*";
        first = false;
        os << "u" << vt.name(s).substr(1); // w<i>_<r> -> u<i>_<r>
        if (k != 1) os << "^" << k;
    }
    return os.str();
}

DiffOp DiffOp::coeff(RatFunc f)
{
    DiffOp d(f.table());
    d.add_term(ShiftMono::unit(), f);
    return d;
}

DiffOp DiffOp::term(RatFunc f, ShiftMono m)
{
    DiffOp d(f.table());
    d.add_term(m, f);
    return d;
}

DiffOp DiffOp::shift(const VarTable* vt, ShiftMono m)
{
    DiffOp d(vt);
    d.add_term(m, RatFunc::constant(vt, Rat(1)));
    return d;
}

void DiffOp::add_term(const ShiftMono& m, const RatFunc& f)
{
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, f);
    if (!inserted) {
        it->second += f;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const
{
    DiffOp d(vt_);
    for (const auto& [m, f] : terms_) d.terms_.emplace(m, -f);
    return d;
}

DiffOp& DiffOp::operator+=(const DiffOp& o)
{
    for (const auto& [m, f] : o.terms_) add_term(m, f);
    return *this;
}

DiffOp& DiffOp::operator-=(const DiffOp& o)
{
    for (const auto& [m, f] : o.terms_) add_term(m, -f);
    return *this;
}

RatFunc rf_shift_by(const RatFunc& f, const ShiftMono& m)
{
    RatFunc g = f;
    for (const auto& [slot, k] : m.exponents()) g = g.shifted(slot, Rat(k));
    return g;
}

DiffOp operator*(const DiffOp& a, const DiffOp& b)
{
    // (f u^m)(g u^n) = f * (g shifted by m) * u^{m+n}; colliding shift
    // monomials are summed in one batch over a common denominator
    DiffOp r(a.vt_ ? a.vt_ : b.vt_);
    std::map<ShiftMono, std::vector<RatFunc>> buckets;
    for (const auto& [m, f] : a.terms_)
        for (const auto& [n, g] : b.terms_) buckets[m * n].push_back(f * rf_shift_by(g, m));
    for (auto& [m, fs] : buckets)
        r.add_term(m, fs.size() == 1 ? fs.front() : RatFunc::sum(fs));
    return r;
}

DiffOp DiffOp::operator*(const Rat& c) const
{
    DiffOp r(vt_);
    if (c == 0) return r;
    for (const auto& [m, f] : terms_) r.terms_.emplace(m, f * c);
    return r;
}

DiffOp DiffOp::operator*(const RatFunc& g) const
{
    DiffOp r(vt_);
    for (const auto& [m, f] : terms_) r.add_term(m, g * f);
    return r;
}

std::string DiffOp::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, f] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << f.str() << "] " << m.str(*vt_);
    }
    return os.str();
}

DiffOp op_commutator(const DiffOp& a, const DiffOp& b) { return a * b - b * a; }

DiffOp op_poisson_limit(const DiffOp& a, const DiffOp& b)
{
    DiffOp c = op_commutator(a, b);
    const VarTable* vt = c.table();
    if (!vt) vt = a.table();
    DiffOp r(vt);
    int h = vt->hbar();
    for (const auto& [m, f] : c.terms()) {
        auto q = f.num().divided_by_var(h);
        if (!q)
            throw NotDivisibleByHbar("commutator coefficient " + f.str() + " is not divisible by hbar");
        RatFunc g = RatFunc::make(std::move(*q), f.den(), f.scale());
        try {
            r.add_term(m, g.specialized(h, Rat(0)));
        } catch (const DenominatorVanishes&) {
            throw NotDivisibleByHbar("denominator of " + f.str() + " vanishes at hbar=0");
        }
    }
    return r;
}

DiffOp op_specialize(const DiffOp& a, const std::map<int, Rat>& assignments)
{
    DiffOp r(a.table());
    for (const auto& [m, f] : a.terms()) {
        RatFunc g = f;
        for (const auto& [slot, v] : assignments) g = g.specialized(slot, v);
        r.add_term(m, g);
    }
    return r;
}

std::optional<long> op_homogeneity(const DiffOp& a, const std::vector<long>& weights)
{
    std::optional<long> deg;
    for (const auto& [m, f] : a.terms()) {
        auto d = f.homogeneous_degree(weights);
        if (!d) return std::nullopt;
        if (deg && *deg != *d) return std::nullopt;
        deg = d;
    }
    return deg ? deg : std::optional<long>(0);
}

std::optional<long> op_homogeneity(const DiffOp& a)
{
    const VarTable* vt = a.table();
    return op_homogeneity(a, std::vector<long>(static_cast<size_t>(vt->nslots()), 1));
}

DiffOp op_spectral_shift(const DiffOp& a, int var, const Rat& steps)
{
    const VarTable* vt = a.table();
    DiffOp r(vt);
    for (const auto& [m, f] : a.terms())
        r.add_term(m, f.substituted_affine(var, Rat(0), {{var, Rat(1)}, {vt->hbar(), steps}}));
    return r;
}

DiffOp op_principal_part(const DiffOp& a, int var)
{
    DiffOp r(a.table());
    for (const auto& [m, f] : a.terms()) r.add_term(m, rf_principal_part(f, var));
    return r;
}

DiffOp op_coeff_at_infinity(const DiffOp& a, int var, int p)
{
    DiffOp r(a.table());
    for (const auto& [m, f] : a.terms()) r.add_term(m, rf_coeff_at_infinity_general(f, var, p));
    return r;
}

} // namespace cbx
