#include "cbx/mpoly.hpp"

#include <algorithm>
#include <sstream>

#include "cbx/error.hpp"
#include "cbx/linform.hpp"

namespace cbx {

namespace {

void check_capacity(const VarTable* vt)
{
    if (vt && vt->nslots() > MPoly::kMaxSlots)
        throw Unsupported("symbolic layer supports at most 15 variable slots; this table has " +
                          std::to_string(vt->nslots()));
}

} // namespace

MPoly::Key MPoly::pack(const VarTable* vt, const Expo& e)
{
    check_capacity(vt);
    Key k = 0;
    long deg = 0;
    for (size_t s = 0; s < e.size(); ++s) {
        deg += e[s];
        if (e[s] != 0) k |= Key(e[s]) << (8 * (14 - static_cast<int>(s)));
    }
    if (deg > 255) throw Unsupported("monomial degree exceeds 255");
    k |= Key(deg) << 120;
    return k;
}

MPoly MPoly::constant(const VarTable* vt, const Rat& c)
{
    check_capacity(vt);
    MPoly p(vt);
    if (c != 0) p.t_.emplace_back(0, c);
    return p;
}

MPoly MPoly::var(const VarTable* vt, int slot, int power)
{
    check_capacity(vt);
    if (slot < 0 || slot >= vt->nslots()) throw IndexOutOfRange("slot " + std::to_string(slot));
    if (power < 0) throw IndexOutOfRange("negative power in MPoly::var");
    MPoly p(vt);
    if (power == 0)
        p.t_.emplace_back(0, Rat(1));
    else
        p.t_.emplace_back(key_of_var(slot, power), Rat(1));
    return p;
}

MPoly MPoly::from_linform(const LinForm& l)
{
    const VarTable* vt = l.table();
    check_capacity(vt);
    MPoly p(vt);
    for (const auto& [slot, c] : l.coeffs()) p.t_.emplace_back(key_of_var(slot), c);
    if (l.constant() != 0) p.t_.emplace_back(0, l.constant());
    std::sort(p.t_.begin(), p.t_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    return p;
}

int MPoly::degree_in(int slot) const
{
    int d = 0;
    for (const auto& [k, c] : t_) d = std::max(d, exp_of(k, slot));
    return d;
}

bool MPoly::depends_on(int slot) const
{
    for (const auto& [k, c] : t_)
        if (exp_of(k, slot) != 0) return true;
    return false;
}

Rat MPoly::coeff_of(Key key) const
{
    auto it = std::lower_bound(t_.begin(), t_.end(), key,
                               [](const auto& term, Key k) { return term.first > k; });
    if (it != t_.end() && it->first == key) return it->second;
    return Rat(0);
}

void MPoly::add_term(const Expo& e, const Rat& c) { add_term_key(pack(vt_, e), c); }

void MPoly::add_term_key(Key key, const Rat& c)
{
    if (c == 0) return;
    auto it = std::lower_bound(t_.begin(), t_.end(), key,
                               [](const auto& term, Key k) { return term.first > k; });
    if (it != t_.end() && it->first == key) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    } else {
        t_.emplace(it, key, c);
    }
}

void MPoly::normal_form()
{
    std::sort(t_.begin(), t_.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    size_t out = 0;
    for (size_t i = 0; i < t_.size();) {
        Key k = t_[i].first;
        Rat c = std::move(t_[i].second);
        size_t j = i + 1;
        while (j < t_.size() && t_[j].first == k) c += t_[j++].second;
        if (c != 0) {
            t_[out].first = k;
            t_[out].second = std::move(c);
            ++out;
        }
        i = j;
    }
    t_.resize(out);
}

MPoly MPoly::operator-() const
{
    MPoly r(*this);
    for (auto& [k, c] : r.t_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o)
{
    if (o.t_.empty()) return *this;
    if (!vt_) vt_ = o.vt_;
    Terms merged;
    merged.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first > o.t_[j].first)) {
            merged.push_back(std::move(t_[i++]));
        } else if (i == t_.size() || o.t_[j].first > t_[i].first) {
            merged.push_back(o.t_[j++]);
        } else {
            Rat c = std::move(t_[i].second);
            c += o.t_[j].second;
            if (c != 0) merged.emplace_back(t_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    t_ = std::move(merged);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o)
{
    if (o.t_.empty()) return *this;
    if (!vt_) vt_ = o.vt_;
    Terms merged;
    merged.reserve(t_.size() + o.t_.size());
    size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].first > o.t_[j].first)) {
            merged.push_back(std::move(t_[i++]));
        } else if (i == t_.size() || o.t_[j].first > t_[i].first) {
            merged.emplace_back(o.t_[j].first, -o.t_[j].second);
            ++j;
        } else {
            Rat c = std::move(t_[i].second);
            c -= o.t_[j].second;
            if (c != 0) merged.emplace_back(t_[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    t_ = std::move(merged);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b)
{
    MPoly r(a.vt_ ? a.vt_ : b.vt_);
    if (a.t_.empty() || b.t_.empty()) return r;
    if (MPoly::degree_of(a.t_[0].first) + MPoly::degree_of(b.t_[0].first) > 255)
        throw Unsupported("monomial degree exceeds 255 in product");
    // multiply the smaller operand into the bigger one, merging per term
    const MPoly& big = a.t_.size() >= b.t_.size() ? a : b;
    const MPoly& small = a.t_.size() >= b.t_.size() ? b : a;
    if (small.t_.size() == 1) {
        const auto& [k0, c0] = small.t_[0];
        r.t_.reserve(big.t_.size());
        for (const auto& [k, c] : big.t_) r.t_.emplace_back(k + k0, c * c0);
        return r;
    }
    MPoly::Terms prods;
    prods.reserve(a.t_.size() * b.t_.size());
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) prods.emplace_back(ka + kb, ca * cb);
    r.t_ = std::move(prods);
    r.normal_form();
    return r;
}

MPoly& MPoly::operator*=(const Rat& c)
{
    if (c == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [k, v] : t_) v *= c;
    return *this;
}

MPoly MPoly::pow(int k) const
{
    MPoly r = MPoly::constant(vt_, 1);
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::vector<MPoly> MPoly::univariate_in(int slot) const
{
    std::vector<MPoly> c(static_cast<size_t>(degree_in(slot)) + 1, MPoly(vt_));
    for (const auto& [k, v] : t_) {
        int e = exp_of(k, slot);
        Key cleared = k - (Key(e) << (8 * (14 - slot))) - (Key(e) << 120);
        c[static_cast<size_t>(e)].t_.emplace_back(cleared, v);
    }
    // clearing one slot preserves the relative graded-lex order of the rest?
    // not in general: re-sort each bucket
    for (auto& p : c)
        std::sort(p.t_.begin(), p.t_.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
    return c;
}

MPoly MPoly::from_univariate(int slot, const std::vector<MPoly>& coeffs)
{
    const VarTable* vt = nullptr;
    for (const auto& c : coeffs)
        if (c.table()) vt = c.table();
    MPoly r(vt);
    for (size_t k = 0; k < coeffs.size(); ++k) {
        Key add = (Key(k) << (8 * (14 - slot))) | (Key(k) << 120);
        for (const auto& [key, v] : coeffs[k].t_) r.t_.emplace_back(key + add, v);
    }
    r.normal_form();
    return r;
}

MPoly MPoly::substituted(int slot, const MPoly& value) const
{
    if (!depends_on(slot)) return *this;
    auto c = univariate_in(slot);
    MPoly r = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) r = r * value + c[k];
    return r;
}

MPoly MPoly::substituted(int slot, const Rat& value) const
{
    return substituted(slot, MPoly::constant(vt_, value));
}

std::optional<MPoly> MPoly::divided_by(const LinForm& l) const
{
    if (is_zero()) return *this;
    int p = l.pivot();
    MPoly rest = MPoly::from_linform(l) - MPoly::var(vt_, p);
    MPoly root = -rest; // x_p = root on the zero locus
    auto c = univariate_in(p);
    if (c.size() < 2) return std::nullopt;
    std::vector<MPoly> q(c.size() - 1, MPoly(vt_));
    MPoly carry = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) {
        q[k] = carry;
        carry = c[k] + carry * root;
    }
    if (!carry.is_zero()) return std::nullopt;
    return MPoly::from_univariate(p, q);
}

std::optional<MPoly> MPoly::divided_by_var(int slot) const
{
    MPoly r(vt_);
    r.t_.reserve(t_.size());
    const Key unit = (Key(1) << (8 * (14 - slot))) | (Key(1) << 120);
    for (const auto& [k, v] : t_) {
        if (exp_of(k, slot) == 0) return std::nullopt;
        r.t_.emplace_back(k - unit, v);
    }
    // subtracting a fixed key preserves the descending order
    return r;
}

Rat MPoly::normalize_primitive()
{
    if (t_.empty()) return Rat(1);
    Int num_gcd = 0, den_lcm = 1;
    bool trivial_possible = true;
    for (const auto& [k, v] : t_) {
        num_gcd = gcd(num_gcd, rat_num(v));
        den_lcm = lcm(den_lcm, rat_den(v));
        if (num_gcd == 1 && den_lcm == 1) {
            trivial_possible = false;
            break;
        }
    }
    Rat factor = trivial_possible ? Rat(num_gcd, den_lcm) : Rat(1);
    if (leading_coeff() < 0) factor = -factor;
    if (factor != 1)
        for (auto& [k, v] : t_) v /= factor;
    return factor;
}

std::optional<long> MPoly::homogeneous_degree(const std::vector<long>& weights) const
{
    std::optional<long> deg;
    bool unit_weights = true;
    for (long w : weights)
        if (w != 1) unit_weights = false;
    for (const auto& [k, v] : t_) {
        long d = 0;
        if (unit_weights) {
            d = degree_of(k);
        } else {
            for (size_t i = 0; i < weights.size(); ++i) d += weights[i] * exp_of(k, static_cast<int>(i));
        }
        if (deg && *deg != d) return std::nullopt;
        deg = d;
    }
    return deg;
}

std::string MPoly::str() const
{
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, v] : t_) {
        Rat c = v;
        if (first) {
            if (c < 0) {
                os << "-";
                c = -c;
            }
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        first = false;
        bool any_var = false;
        std::ostringstream vars;
        for (int s = 0; s < vt_->nslots(); ++s) {
            int e = exp_of(k, s);
            if (e == 0) continue;
            if (any_var) vars << "*";
            any_var = true;
            vars << vt_->name(s);
            if (e > 1) vars << "^" << e;
        }
        if (!any_var) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << vars.str();
        }
    }
    return os.str();
}

} // namespace cbx
