#include "cbx/ratfunc.hpp"

#include <algorithm>
#include <sstream>

#include "cbx/error.hpp"

namespace cbx {

void RatFunc::set_zero()
{
    core_ = MPoly(vt_);
    nfac_.clear();
    den_.clear();
    scale_ = 1;
}

RatFunc RatFunc::constant(const VarTable* vt, const Rat& c)
{
    RatFunc f(vt);
    f.core_ = MPoly::constant(vt, c == 0 ? Rat(0) : Rat(1));
    f.scale_ = (c == 0) ? Rat(1) : c;
    return f;
}

RatFunc RatFunc::var(const VarTable* vt, int slot)
{
    RatFunc f(vt);
    f.core_ = MPoly::var(vt, slot);
    return f;
}

RatFunc RatFunc::from_poly(MPoly p)
{
    RatFunc f(p.table());
    f.core_ = std::move(p);
    f.scale_ = f.core_.normalize_primitive();
    if (f.core_.is_zero()) f.set_zero();
    return f;
}

RatFunc RatFunc::from_linform(const LinForm& l)
{
    RatFunc f(l.table());
    f.core_ = MPoly::constant(l.table(), Rat(1));
    f.nfac_[l] = 1;
    return f;
}

RatFunc RatFunc::inv_linform(const LinForm& l)
{
    RatFunc f(l.table());
    f.core_ = MPoly::constant(l.table(), Rat(1));
    f.den_[l] = 1;
    return f;
}

RatFunc RatFunc::from_linear_poly(const MPoly& p)
{
    const VarTable* vt = p.table();
    if (p.is_zero()) return RatFunc(vt);
    if (p.total_degree() == 0) return constant(vt, p.constant_value());
    if (p.total_degree() != 1) throw Unsupported("from_linear_poly needs degree <= 1");
    Rat c0(0);
    std::vector<std::pair<int, Rat>> co;
    for (const auto& [k, c] : p.terms()) {
        if (MPoly::degree_of(k) == 0) {
            c0 = c;
            continue;
        }
        for (int s = 0; s < vt->nslots(); ++s)
            if (MPoly::exp_of(k, s) != 0) co.emplace_back(s, c);
    }
    auto [form, sc] = LinForm::canonical(vt, std::move(c0), std::move(co));
    RatFunc f(vt);
    f.core_ = MPoly::constant(vt, Rat(1));
    f.nfac_[form] = 1;
    f.scale_ = sc;
    return f;
}

RatFunc RatFunc::make(MPoly num, Den den, Rat scale)
{
    RatFunc f(num.table());
    f.core_ = std::move(num);
    f.den_ = std::move(den);
    f.scale_ = std::move(scale);
    f.reduce();
    f.normalize();
    return f;
}

RatFunc RatFunc::from_parts(MPoly core, Den nfac, Den den, Rat scale)
{
    RatFunc f(core.table());
    f.core_ = std::move(core);
    f.nfac_ = std::move(nfac);
    f.den_ = std::move(den);
    f.scale_ = std::move(scale);
    f.reduce();
    f.normalize();
    return f;
}

MPoly RatFunc::num() const
{
    MPoly n = core_;
    for (const auto& [l, m] : nfac_)
        for (int k = 0; k < m; ++k) n *= MPoly::from_linform(l);
    return n;
}

MPoly RatFunc::as_poly() const
{
    MPoly p = num();
    p *= scale_;
    return p;
}

bool RatFunc::depends_on(int slot) const
{
    if (core_.depends_on(slot)) return true;
    for (const auto& [l, m] : nfac_)
        if (l.depends_on(slot)) return true;
    for (const auto& [l, m] : den_)
        if (l.depends_on(slot)) return true;
    return false;
}

void RatFunc::reduce()
{
    if (core_.is_zero() || scale_ == 0) {
        set_zero();
        return;
    }
    // multiset cancellation between numerator factors and the denominator
    for (auto it = den_.begin(); it != den_.end();) {
        auto jt = nfac_.find(it->first);
        if (jt != nfac_.end()) {
            int c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0) nfac_.erase(jt);
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
    // remaining denominator forms: trial exact division of the core
    for (auto it = den_.begin(); it != den_.end();) {
        while (it->second > 0) {
            auto q = core_.divided_by(it->first);
            if (!q) break;
            core_ = std::move(*q);
            --it->second;
        }
        if (it->second == 0)
            it = den_.erase(it);
        else
            ++it;
    }
}

void RatFunc::normalize()
{
    if (core_.is_zero() || scale_ == 0) {
        set_zero();
        return;
    }
    scale_ *= core_.normalize_primitive();
}

RatFunc RatFunc::operator-() const
{
    RatFunc f = *this;
    if (!f.is_zero()) f.scale_ = -f.scale_;
    return f;
}

RatFunc RatFunc::sum(const std::vector<RatFunc>& terms)
{
    const VarTable* vt = nullptr;
    for (const auto& t : terms)
        if (t.table()) vt = t.table();
    std::vector<const RatFunc*> live;
    for (const auto& t : terms)
        if (!t.is_zero()) live.push_back(&t);
    if (live.empty()) return RatFunc(vt);
    if (live.size() == 1) return *live.front();
    // common numerator factors across every term
    Den common = live.front()->nfac_;
    for (size_t i = 1; i < live.size() && !common.empty(); ++i) {
        for (auto it = common.begin(); it != common.end();) {
            auto jt = live[i]->nfac_.find(it->first);
            int c = (jt == live[i]->nfac_.end()) ? 0 : std::min(it->second, jt->second);
            if (c == 0)
                it = common.erase(it);
            else {
                it->second = c;
                ++it;
            }
        }
    }
    // common denominator
    Den den;
    for (const auto* t : live)
        for (const auto& [l, m] : t->den_) {
            auto it = den.find(l);
            if (it == den.end())
                den[l] = m;
            else
                it->second = std::max(it->second, m);
        }
    MPoly acc(vt);
    for (const auto* t : live) {
        MPoly n = t->core_;
        n *= t->scale_;
        for (const auto& [l, m] : t->nfac_) {
            int extra = m;
            auto it = common.find(l);
            if (it != common.end()) extra -= it->second;
            for (int k = 0; k < extra; ++k) n *= MPoly::from_linform(l);
        }
        for (const auto& [l, m] : den) {
            int have = 0;
            auto it = t->den_.find(l);
            if (it != t->den_.end()) have = it->second;
            for (int k = have; k < m; ++k) n *= MPoly::from_linform(l);
        }
        acc += n;
    }
    return from_parts(std::move(acc), std::move(common), std::move(den), Rat(1));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return RatFunc::sum({a, b});
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b)
{
    if (a.is_zero() || b.is_zero()) return RatFunc(a.vt_ ? a.vt_ : b.vt_);
    RatFunc f(a.vt_ ? a.vt_ : b.vt_);
    f.core_ = a.core_ * b.core_;
    f.nfac_ = a.nfac_;
    for (const auto& [l, m] : b.nfac_) f.nfac_[l] += m;
    f.den_ = a.den_;
    for (const auto& [l, m] : b.den_) f.den_[l] += m;
    f.scale_ = a.scale_ * b.scale_;
    f.reduce();
    f.normalize();
    return f;
}

RatFunc RatFunc::operator*(const Rat& c) const
{
    if (c == 0 || is_zero()) return RatFunc(vt_);
    RatFunc f = *this;
    f.scale_ *= c;
    return f;
}

RatFunc RatFunc::inverse() const
{
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    RatFunc f(vt_);
    f.core_ = MPoly::constant(vt_, Rat(1));
    f.nfac_ = den_;
    f.den_ = nfac_;
    f.scale_ = Rat(1) / scale_;
    if (!core_.is_constant()) {
        auto fac = try_factor_linear(core_);
        if (!fac)
            throw NonLinearDenominator("divisor numerator is not a product of linear forms: " +
                                       core_.str());
        for (const auto& l : fac->second) f.den_[l] += 1;
        f.scale_ /= fac->first;
    } else {
        f.scale_ /= core_.constant_value();
    }
    f.reduce();
    f.normalize();
    return f;
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }

bool RatFunc::operator==(const RatFunc& o) const
{
    if (scale_ == o.scale_ && core_ == o.core_ && nfac_ == o.nfac_ && den_ == o.den_) return true;
    return equals_crossmul(o);
}

bool RatFunc::equals_crossmul(const RatFunc& o) const
{
    MPoly lhs = num();
    lhs *= scale_;
    for (const auto& [l, m] : o.den_)
        for (int k = 0; k < m; ++k) lhs *= MPoly::from_linform(l);
    MPoly rhs = o.num();
    rhs *= o.scale_;
    for (const auto& [l, m] : den_)
        for (int k = 0; k < m; ++k) rhs *= MPoly::from_linform(l);
    return lhs == rhs;
}

namespace {

// substitute into a form multiset; returns accumulated scale or nullopt when a
// form collapses to zero
std::optional<Rat> substitute_forms(const VarTable* vt, const RatFunc::Den& src, RatFunc::Den& dst,
                                    int slot, const Rat& constant,
                                    const std::vector<std::pair<int, Rat>>& coeffs)
{
    Rat scale(1);
    for (const auto& [l, m] : src) {
        Rat k = l.coeff(slot);
        if (k == 0) {
            dst[l] += m;
            continue;
        }
        Rat c0 = l.constant() + k * constant;
        std::vector<std::pair<int, Rat>> co;
        for (const auto& [s, c] : l.coeffs())
            if (s != slot) co.emplace_back(s, c);
        for (const auto& [s, c] : coeffs) co.emplace_back(s, k * c);
        std::sort(co.begin(), co.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        std::vector<std::pair<int, Rat>> merged;
        for (auto& [s, c] : co) {
            if (!merged.empty() && merged.back().first == s)
                merged.back().second += c;
            else
                merged.emplace_back(s, c);
            if (!merged.empty() && merged.back().second == 0) merged.pop_back();
        }
        if (merged.empty()) {
            if (c0 == 0) return std::nullopt;
            for (int j = 0; j < m; ++j) scale *= c0;
            continue;
        }
        auto [nl, s] = LinForm::canonical(vt, std::move(c0), std::move(merged));
        for (int j = 0; j < m; ++j) scale *= s;
        dst[nl] += m;
    }
    return scale;
}

} // namespace

RatFunc RatFunc::substituted_affine(int slot, const Rat& constant,
                                    const std::vector<std::pair<int, Rat>>& coeffs) const
{
    if (!depends_on(slot)) return *this;
    MPoly value = MPoly::constant(vt_, constant);
    for (const auto& [s, c] : coeffs) {
        MPoly v = MPoly::var(vt_, s);
        v *= c;
        value += v;
    }
    RatFunc f(vt_);
    f.scale_ = scale_;
    f.core_ = core_.substituted(slot, value);
    auto nscale = substitute_forms(vt_, nfac_, f.nfac_, slot, constant, coeffs);
    if (!nscale) return RatFunc(vt_); // a numerator factor vanished
    f.scale_ *= *nscale;
    auto dscale = substitute_forms(vt_, den_, f.den_, slot, constant, coeffs);
    if (!dscale)
        throw DenominatorVanishes("denominator form vanishes under substitution of slot " +
                                  vt_->name(slot));
    f.scale_ /= *dscale;
    f.reduce();
    f.normalize();
    return f;
}

RatFunc RatFunc::shifted(int slot, const Rat& steps) const
{
    if (steps == 0) return *this;
    return substituted_affine(slot, Rat(0), {{slot, Rat(1)}, {vt_->hbar(), steps}});
}

RatFunc RatFunc::specialized(int slot, const Rat& value) const
{
    return substituted_affine(slot, value, {});
}

std::optional<long> RatFunc::homogeneous_degree(const std::vector<long>& weights) const
{
    if (is_zero()) return 0;
    auto nd = core_.homogeneous_degree(weights);
    if (!nd) return std::nullopt;
    long deg = *nd;
    auto form_weight = [&](const LinForm& l) -> std::optional<long> {
        if (l.constant() != 0) return std::nullopt;
        std::optional<long> fd;
        for (const auto& [s, c] : l.coeffs()) {
            long w = weights[static_cast<size_t>(s)];
            if (fd && *fd != w) return std::nullopt;
            fd = w;
        }
        return fd;
    };
    for (const auto& [l, m] : nfac_) {
        auto fd = form_weight(l);
        if (!fd) return std::nullopt;
        deg += *fd * m;
    }
    for (const auto& [l, m] : den_) {
        auto fd = form_weight(l);
        if (!fd) return std::nullopt;
        deg -= *fd * m;
    }
    return deg;
}

std::string RatFunc::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    if (scale_ != 1) os << "(" << scale_ << ")*";
    os << "(" << core_.str() << ")";
    for (const auto& [l, m] : nfac_) {
        os << "*(" << l.str() << ")";
        if (m > 1) os << "^" << m;
    }
    if (!den_.empty()) {
        os << "/(";
        bool first = true;
        for (const auto& [l, m] : den_) {
            if (!first) os << "*";
            first = false;
            os << "(" << l.str() << ")";
            if (m > 1) os << "^" << m;
        }
        os << ")";
    }
    return os.str();
}

// --- free operations -------------------------------------------------------

RatFunc rf_shift(const RatFunc& f, int slot, int steps)
{
    if (!f.table()->is_gauge(slot))
        throw IndexOutOfRange("rf_shift expects a gauge slot");
    return f.shifted(slot, Rat(steps));
}

namespace {

// denominator split of f in var
struct VarSplit {
    std::vector<LinForm> var_forms; // repeated by multiplicity
    RatFunc::Den rest;
};

VarSplit split_denominator(const RatFunc& f, int var, bool require_simple)
{
    VarSplit s;
    for (const auto& [l, m] : f.den()) {
        if (l.depends_on(var)) {
            if (require_simple && m > 1) throw RepeatedPole("repeated pole in " + l.str());
            for (int k = 0; k < m; ++k) s.var_forms.push_back(l);
        } else {
            s.rest[l] += m;
        }
    }
    return s;
}

// root of form in var: var = -(l - c*var)/c, returned as (constant, coeffs)
struct AffineRoot {
    Rat constant;
    std::vector<std::pair<int, Rat>> coeffs;
    Rat var_coeff;
};

AffineRoot root_of(const LinForm& l, int var)
{
    AffineRoot r;
    r.var_coeff = l.coeff(var);
    r.constant = -l.constant() / r.var_coeff;
    for (const auto& [s, c] : l.coeffs())
        if (s != var) r.coeffs.emplace_back(s, -c / r.var_coeff);
    return r;
}

// expanded numerator including only the factors that involve var; the
// var-free factors are returned as a prefactor
std::pair<MPoly, RatFunc> split_numerator(const RatFunc& f, int var)
{
    const VarTable* vt = f.table();
    MPoly nvar = f.core();
    RatFunc::Den keep;
    for (const auto& [l, m] : f.num_forms()) {
        if (l.depends_on(var))
            for (int k = 0; k < m; ++k) nvar *= MPoly::from_linform(l);
        else
            keep[l] += m;
    }
    RatFunc pre = RatFunc::from_parts(MPoly::constant(vt, f.scale()), std::move(keep), {}, Rat(1));
    return {std::move(nvar), std::move(pre)};
}

} // namespace

RatFunc rf_polynomial_part(const RatFunc& f, int var)
{
    if (f.is_zero()) return f;
    auto s = split_denominator(f, var, false);
    if (s.var_forms.empty()) return f; // f is already polynomial in var
    const VarTable* vt = f.table();
    MPoly d = MPoly::constant(vt, Rat(1));
    for (const auto& l : s.var_forms) d *= MPoly::from_linform(l);
    auto [nvar, pre] = split_numerator(f, var);
    int dd = d.degree_in(var);
    auto dc = d.univariate_in(var);
    Rat lead = dc.back().constant_value(); // leading var coefficient of affine forms is constant
    auto nc = nvar.univariate_in(var);
    std::vector<MPoly> quot;
    while (static_cast<int>(nc.size()) - 1 >= dd && !(nc.size() == 1 && nc[0].is_zero())) {
        int k = static_cast<int>(nc.size()) - 1 - dd;
        MPoly q = nc.back();
        q *= Rat(1) / lead;
        if (static_cast<size_t>(k) >= quot.size()) quot.resize(static_cast<size_t>(k) + 1, MPoly(vt));
        quot[static_cast<size_t>(k)] += q;
        for (int j = 0; j <= dd; ++j) nc[static_cast<size_t>(k + j)] -= q * dc[static_cast<size_t>(j)];
        while (!nc.empty() && nc.back().is_zero()) nc.pop_back();
        if (nc.empty()) break;
    }
    MPoly qpoly = MPoly::from_univariate(var, quot);
    return RatFunc::make(std::move(qpoly), s.rest, Rat(1)) * pre;
}

RatFunc rf_principal_part(const RatFunc& f, int var) { return f - rf_polynomial_part(f, var); }

RatFunc rf_coeff_at_infinity(const RatFunc& f, int var, int p)
{
    if (p <= 0) throw IndexOutOfRange("rf_coeff_at_infinity needs p >= 1");
    RatFunc g = rf_principal_part(f, var);
    if (g.is_zero()) return g;
    auto s = split_denominator(g, var, true); // RepeatedPole on higher multiplicities
    const VarTable* vt = f.table();
    RatFunc acc(vt);
    for (const auto& l : s.var_forms) {
        AffineRoot r = root_of(l, var);
        RatFunc residue = (g * RatFunc::from_linform(l)).substituted_affine(var, r.constant, r.coeffs);
        if (p > 1) {
            MPoly rootp = MPoly::constant(vt, r.constant);
            for (const auto& [slot, c] : r.coeffs) {
                MPoly v = MPoly::var(vt, slot);
                v *= c;
                rootp += v;
            }
            residue = residue * RatFunc::from_poly(rootp.pow(p - 1));
        }
        acc += residue * (Rat(1) / r.var_coeff);
    }
    return acc;
}

RatFunc rf_coeff_at_infinity_general(const RatFunc& f, int var, int p)
{
    if (p <= 0) throw IndexOutOfRange("rf_coeff_at_infinity needs p >= 1");
    const VarTable* vt = f.table();
    RatFunc g = rf_principal_part(f, var);
    RatFunc acc(vt);
    // peel poles one at a time; a pole of order k contributes
    // binom(q-1, k-1) r^{q-k} / c^k at var^{-q}
    while (!g.is_zero()) {
        const LinForm* pole = nullptr;
        int k = 0;
        for (const auto& [l, m] : g.den())
            if (l.depends_on(var)) {
                pole = &l;
                k = m;
                break;
            }
        if (!pole) break;
        LinForm l = *pole;
        AffineRoot r = root_of(l, var);
        RatFunc lk = RatFunc::from_linform(l);
        RatFunc top = g;
        for (int j = 0; j < k; ++j) top *= lk;
        RatFunc lead = top.substituted_affine(var, r.constant, r.coeffs); // var-free
        if (p >= k) {
            Rat binom(1);
            for (int j = 1; j <= k - 1; ++j) binom *= Rat(p - j, j);
            MPoly rootp = MPoly::constant(vt, r.constant);
            for (const auto& [slot, c] : r.coeffs) {
                MPoly v = MPoly::var(vt, slot);
                v *= c;
                rootp += v;
            }
            RatFunc contrib = lead * binom;
            if (p > k) contrib = contrib * RatFunc::from_poly(rootp.pow(p - k));
            for (int j = 0; j < k; ++j) contrib = contrib * (Rat(1) / r.var_coeff);
            acc += contrib;
        }
        RatFunc piece = lead;
        for (int j = 0; j < k; ++j) piece /= lk;
        g -= piece;
        g = rf_principal_part(g, var);
    }
    return acc;
}

// --- trial factorization ----------------------------------------------------

namespace {

bool factor_linear_rec(const MPoly& p, Rat& scale, std::vector<LinForm>& out);

std::vector<int> slots_of(const MPoly& p)
{
    std::vector<int> r;
    if (p.is_zero()) return r;
    for (int i = 0; i < p.table()->nslots(); ++i)
        if (p.depends_on(i)) r.push_back(i);
    return r;
}

// rational roots of a univariate (in slot x) polynomial with constant coeffs
std::vector<Rat> rational_roots(const MPoly& p, int x)
{
    std::vector<Rat> roots;
    auto cs = p.univariate_in(x);
    Int dlcm = 1;
    for (size_t k = 0; k < cs.size(); ++k) {
        if (!cs[k].is_constant()) return roots;
        dlcm = lcm(dlcm, rat_den(cs[k].constant_value()));
    }
    std::vector<Int> ic(cs.size());
    for (size_t k = 0; k < cs.size(); ++k)
        ic[k] = rat_num(cs[k].constant_value()) * (dlcm / rat_den(cs[k].constant_value()));
    size_t lo = 0;
    while (lo < ic.size() && ic[lo] == 0) ++lo;
    if (lo >= ic.size()) return roots;
    Int a0 = abs(ic[lo]), ad = abs(ic.back());
    auto divisors = [](Int n) {
        std::vector<Int> d;
        for (Int i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                d.push_back(i);
                if (i != n / i) d.push_back(n / i);
            }
        return d;
    };
    auto eval = [&](const Rat& r) {
        Rat v = 0;
        for (size_t k = ic.size(); k-- > 0;) v = v * r + Rat(ic[k]);
        return v;
    };
    for (const Int& a : divisors(a0))
        for (const Int& b : divisors(ad))
            for (int sgn : {1, -1}) {
                Rat cand(sgn * a, b);
                if (eval(cand) == 0) roots.push_back(cand);
            }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

bool try_divide_form(MPoly& p, std::vector<LinForm>& out, const LinForm& l)
{
    bool any = false;
    while (true) {
        auto q = p.divided_by(l);
        if (!q) break;
        p = std::move(*q);
        out.push_back(l);
        any = true;
    }
    return any;
}

bool factor_linear_rec(const MPoly& p0, Rat& scale, std::vector<LinForm>& out)
{
    MPoly p = p0;
    scale *= p.normalize_primitive();
    const VarTable* vt = p.table();
    if (p.is_zero()) return false;
    while (true) {
        long d = p.total_degree();
        if (d <= 0) {
            scale *= p.constant_value();
            return true;
        }
        if (d == 1) {
            Rat c0;
            std::vector<std::pair<int, Rat>> co;
            for (const auto& [k, c] : p.terms()) {
                if (MPoly::degree_of(k) == 0) {
                    c0 = c;
                    continue;
                }
                for (int i = 0; i < vt->nslots(); ++i)
                    if (MPoly::exp_of(k, i) != 0) co.emplace_back(i, c);
            }
            auto [l, s] = LinForm::canonical(vt, std::move(c0), std::move(co));
            scale *= s;
            out.push_back(l);
            return true;
        }
        auto sl = slots_of(p);
        int x = sl.front();
        if (auto q = p.divided_by_var(x)) {
            p = std::move(*q);
            out.push_back(LinForm::var(vt, x));
            continue;
        }
        if (sl.size() == 1) {
            auto roots = rational_roots(p, x);
            bool progress = false;
            for (const auto& r : roots) progress |= try_divide_form(p, out, LinForm::var_minus(vt, x, r));
            if (!progress) return false;
            scale *= p.normalize_primitive();
            continue;
        }
        // multivariate: x-free factors all divide the leading x-coefficient
        auto cs = p.univariate_in(x);
        bool progress = false;
        if (!cs.back().is_constant()) {
            Rat s2(1);
            std::vector<LinForm> lead_factors;
            if (!factor_linear_rec(cs.back(), s2, lead_factors)) return false;
            for (const auto& l : lead_factors) progress |= try_divide_form(p, out, l);
        }
        if (progress) {
            scale *= p.normalize_primitive();
            continue;
        }
        // x-containing factors x + t*m: directions m from factoring p(x=0),
        // plus purely numeric roots from zeroing the other slots
        MPoly at0 = cs.front();
        std::vector<LinForm> directions;
        if (!at0.is_zero()) {
            Rat s2(1);
            std::vector<LinForm> f0;
            if (factor_linear_rec(at0, s2, f0)) {
                for (const auto& l : f0)
                    if (std::find(directions.begin(), directions.end(), l) == directions.end())
                        directions.push_back(l);
            }
        }
        for (const auto& m : directions) {
            MPoly mm = MPoly::from_linform(m);
            std::vector<MPoly> powm(static_cast<size_t>(d) + 1, MPoly::constant(vt, Rat(1)));
            for (size_t k = 1; k < powm.size(); ++k) powm[k] = powm[k - 1] * mm;
            MPoly::Key probe = powm[static_cast<size_t>(cs.size() - 1)].terms().front().first;
            std::vector<Rat> phic(cs.size(), Rat(0));
            for (size_t k = 0; k < cs.size(); ++k) {
                MPoly prod = cs[k] * powm[k];
                Rat val = prod.coeff_of(probe);
                if (val != 0) phic[k] = (k % 2 ? -val : val);
            }
            MPoly phi_poly(vt);
            for (size_t k = 0; k < phic.size(); ++k)
                if (phic[k] != 0)
                    phi_poly.add_term_key(MPoly::key_of_var(x, static_cast<int>(k)), phic[k]);
            for (const auto& t : rational_roots(phi_poly, x)) {
                if (t == 0) continue;
                std::vector<std::pair<int, Rat>> co = {{x, Rat(1)}};
                for (const auto& [s, c] : m.coeffs()) co.emplace_back(s, t * c);
                auto [cand, s3] = LinForm::canonical(vt, t * m.constant(), std::move(co));
                (void)s3;
                progress |= try_divide_form(p, out, cand);
            }
        }
        {
            MPoly shadow = p;
            for (int s : sl)
                if (s != x) shadow = shadow.substituted(s, Rat(0));
            if (!shadow.is_zero())
                for (const auto& r : rational_roots(shadow, x))
                    progress |= try_divide_form(p, out, LinForm::var_minus(vt, x, r));
        }
        if (!progress) return false;
        scale *= p.normalize_primitive();
    }
}

} // namespace

std::optional<std::pair<Rat, std::vector<LinForm>>> try_factor_linear(const MPoly& p)
{
    if (p.is_zero()) return std::nullopt;
    Rat scale(1);
    std::vector<LinForm> out;
    if (!factor_linear_rec(p, scale, out)) return std::nullopt;
    return std::make_pair(scale, out);
}

} // namespace cbx
