#include "cbx/symfunc.hpp"

#include <cctype>
#include <sstream>

#include "cbx/error.hpp"

namespace cbx {

SymFunc SymFunc::constant(const Rat& c)
{
    SymFunc f;
    if (c != 0) f.terms_[{}] = c;
    return f;
}

SymFunc SymFunc::e(int k)
{
    if (k < 1) throw IndexOutOfRange("e_k needs k >= 1");
    SymFunc f;
    std::vector<int> ex(static_cast<size_t>(k), 0);
    ex[static_cast<size_t>(k - 1)] = 1;
    f.terms_[ex] = 1;
    return f;
}

bool SymFunc::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

namespace {
void trim(std::vector<int>& e)
{
    while (!e.empty() && e.back() == 0) e.pop_back();
}
} // namespace

SymFunc SymFunc::operator-() const
{
    SymFunc f = *this;
    for (auto& [e, c] : f.terms_) c = -c;
    return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& o)
{
    for (const auto& [e, c] : o.terms_) {
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& o) { return *this += -o; }

SymFunc operator*(const SymFunc& a, const SymFunc& b)
{
    SymFunc r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            std::vector<int> e(std::max(ea.size(), eb.size()), 0);
            for (size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
            for (size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
            trim(e);
            auto [it, fresh] = r.terms_.emplace(e, ca * cb);
            if (!fresh) {
                it->second += ca * cb;
                if (it->second == 0) r.terms_.erase(it);
            }
        }
    return r;
}

MPoly SymFunc::expand(const VarTable* vt, const std::vector<MPoly>& vars) const
{
    size_t n = vars.size();
    // e_j(vars) via the generating product prod (1 + x_i T)
    std::vector<MPoly> elem(n + 1, MPoly(vt));
    elem[0] = MPoly::constant(vt, 1);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = std::min(i + 1, n); j >= 1; --j) elem[j] += elem[j - 1] * vars[i];
    MPoly out(vt);
    for (const auto& [e, c] : terms_) {
        MPoly term = MPoly::constant(vt, c);
        for (size_t k = 0; k < e.size(); ++k) {
            if (e[k] == 0) continue;
            if (k + 1 > n) {
                term = MPoly(vt); // e_k vanishes with fewer than k variables
                break;
            }
            term = term * elem[k + 1].pow(e[k]);
        }
        out += term;
    }
    return out;
}

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    explicit Parser(const std::string& str) : s(str) {}
    void skip()
    {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c)
    {
        skip();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    SymFunc expr()
    {
        SymFunc r = term();
        while (true) {
            skip();
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }
    SymFunc term()
    {
        SymFunc r = power();
        while (true) {
            skip();
            if (eat('*'))
                r *= power();
            else
                return r;
        }
    }
    SymFunc power()
    {
        SymFunc base = atom();
        skip();
        if (eat('^')) {
            long k = integer();
            if (k < 0) throw SchemaError("negative power in symmetric function");
            SymFunc r = SymFunc::one();
            for (long i = 0; i < k; ++i) r *= base;
            return r;
        }
        return base;
    }
    long integer()
    {
        skip();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw SchemaError("expected integer in symmetric function at offset " + std::to_string(pos));
        return std::stol(s.substr(start, pos - start));
    }
    SymFunc atom()
    {
        skip();
        if (eat('(')) {
            SymFunc r = expr();
            if (!eat(')')) throw SchemaError("missing ')' in symmetric function");
            return r;
        }
        if (eat('-')) return -atom();
        if (pos < s.size() && s[pos] == 'e') {
            ++pos;
            long k = integer();
            return SymFunc::e(static_cast<int>(k));
        }
        if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
            long n = integer();
            if (eat('/')) {
                long d = integer();
                return SymFunc::constant(Rat(n, d));
            }
            return SymFunc::constant(Rat(n));
        }
        throw SchemaError("cannot parse symmetric function at offset " + std::to_string(pos));
    }
};

} // namespace

SymFunc SymFunc::parse(const std::string& text)
{
    Parser p(text);
    SymFunc r = p.expr();
    p.skip();
    if (p.pos != text.size()) throw SchemaError("trailing input in symmetric function: '" + text.substr(p.pos) + "'");
    return r;
}

std::string SymFunc::str() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c;
        for (size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) {
                os << "*e" << k + 1;
                if (e[k] > 1) os << "^" << e[k];
            }
    }
    return os.str();
}

} // namespace cbx
