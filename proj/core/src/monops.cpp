#include "cbx/monops.hpp"

#include <algorithm>
#include <functional>

#include "cbx/error.hpp"

namespace cbx {

namespace {

// all n-element subsets of {0..a-1}
std::vector<std::vector<int>> subsets(int a, int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int r = start; r < a; ++r) {
            cur.push_back(r);
            rec(r + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// degree-one polynomial from slot coefficients, kept as a numerator factor
RatFunc linear_rf(const VarTable* vt, const std::vector<std::pair<int, Rat>>& coeffs,
                  const Rat& constant = Rat(0))
{
    MPoly p = MPoly::constant(vt, constant);
    for (const auto& [slot, c] : coeffs) {
        MPoly v = MPoly::var(vt, slot);
        v *= c;
        p += v;
    }
    return RatFunc::from_linear_poly(p);
}

// push a canonicalized linear form onto the numerator factor multiset
void mul_form(RatFunc::Den& nfac, Rat& scale, const VarTable* vt,
              std::vector<std::pair<int, Rat>> coeffs, Rat constant = Rat(0))
{
    auto [form, sc] = LinForm::canonical(vt, std::move(constant), std::move(coeffs));
    nfac[form] += 1;
    scale *= sc;
}

// push a canonicalized linear form onto the denominator
void div_form(RatFunc::Den& den, Rat& scale, const VarTable* vt,
              std::vector<std::pair<int, Rat>> coeffs, Rat constant = Rat(0))
{
    auto [form, sc] = LinForm::canonical(vt, std::move(constant), std::move(coeffs));
    den[form] += 1;
    scale /= sc;
}

} // namespace

DiffOp quiver_E(const QuiverTheory& q, const VarTable* vt, int vertex, int n, const SymFunc& f)
{
    if (vertex < 0 || vertex >= q.nvertices()) throw IndexOutOfRange("quiver_E: bad vertex");
    int a = q.dim[static_cast<size_t>(vertex)];
    if (n < 1 || n > a) throw IndexOutOfRange("quiver_E: n out of range");
    const Rat half(1, 2);
    DiffOp out(vt);
    for (const auto& I : subsets(a, n)) {
        std::vector<bool> in_I(static_cast<size_t>(a), false);
        for (int r : I) in_I[static_cast<size_t>(r)] = true;
        std::vector<MPoly> vars;
        for (int r : I) vars.push_back(MPoly::var(vt, vt->gauge(vertex, r)));
        MPoly core = f.expand(vt, vars);
        Rat scale(1);
        RatFunc::Den nfac, den;
        for (auto [src, dst] : q.arrows) {
            if (src != vertex) continue;
            for (int r : I)
                for (int s = 0; s < q.dim[static_cast<size_t>(dst)]; ++s) {
                    if (dst == vertex && in_I[static_cast<size_t>(s)]) continue; // edge-loop exclusion
                    mul_form(nfac, scale, vt,
                             {{vt->gauge(vertex, r), Rat(-1)}, {vt->gauge(dst, s), Rat(1)}, {vt->hbar(), -half}});
                }
        }
        for (int r : I)
            for (int s = 0; s < a; ++s) {
                if (in_I[static_cast<size_t>(s)]) continue;
                div_form(den, scale, vt, {{vt->gauge(vertex, r), Rat(1)}, {vt->gauge(vertex, s), Rat(-1)}});
            }
        std::vector<std::pair<int, int>> shift;
        for (int r : I) shift.emplace_back(vt->gauge(vertex, r), 1);
        out.add_term(ShiftMono::from_exponents(*vt, shift),
                     RatFunc::from_parts(std::move(core), std::move(nfac), std::move(den), scale));
    }
    return out;
}

DiffOp quiver_F(const QuiverTheory& q, const VarTable* vt, int vertex, int n, const SymFunc& f)
{
    if (vertex < 0 || vertex >= q.nvertices()) throw IndexOutOfRange("quiver_F: bad vertex");
    int a = q.dim[static_cast<size_t>(vertex)];
    if (n < 1 || n > a) throw IndexOutOfRange("quiver_F: n out of range");
    const Rat half(1, 2);
    DiffOp out(vt);
    for (const auto& I : subsets(a, n)) {
        std::vector<bool> in_I(static_cast<size_t>(a), false);
        for (int r : I) in_I[static_cast<size_t>(r)] = true;
        std::vector<MPoly> vars;
        for (int r : I)
            vars.push_back(MPoly::var(vt, vt->gauge(vertex, r)) - MPoly::var(vt, vt->hbar()));
        MPoly core = f.expand(vt, vars);
        Rat scale(1);
        RatFunc::Den nfac, den;
        for (int k = 0; k < vt->nmass(); ++k) {
            if (vt->slot(vt->mass(k)).vertex != vertex) continue;
            for (int r : I)
                mul_form(nfac, scale, vt,
                         {{vt->gauge(vertex, r), Rat(1)}, {vt->mass(k), Rat(-1)}, {vt->hbar(), -half}});
        }
        for (auto [src, dst] : q.arrows) {
            if (dst != vertex) continue;
            for (int r : I)
                for (int s = 0; s < q.dim[static_cast<size_t>(src)]; ++s) {
                    if (src == vertex && in_I[static_cast<size_t>(s)]) continue;
                    mul_form(nfac, scale, vt,
                             {{vt->gauge(vertex, r), Rat(1)}, {vt->gauge(src, s), Rat(-1)}, {vt->hbar(), -half}});
                }
        }
        for (int r : I)
            for (int s = 0; s < a; ++s) {
                if (in_I[static_cast<size_t>(s)]) continue;
                div_form(den, scale, vt, {{vt->gauge(vertex, r), Rat(-1)}, {vt->gauge(vertex, s), Rat(1)}});
            }
        std::vector<std::pair<int, int>> shift;
        for (int r : I) shift.emplace_back(vt->gauge(vertex, r), -1);
        out.add_term(ShiftMono::from_exponents(*vt, shift),
                     RatFunc::from_parts(std::move(core), std::move(nfac), std::move(den), scale));
    }
    return out;
}

DiffOp jordan_op(int a, int l, const VarTable* vt, int n, const SymFunc& f, JordanKind kind)
{
    if (n < 1 || n > a) throw IndexOutOfRange("jordan_op: n out of range");
    if (vt->nmass() < l) throw IndexOutOfRange("jordan_op: table lacks mass slots");
    DiffOp out(vt);
    for (const auto& I : subsets(a, n)) {
        std::vector<bool> in_I(static_cast<size_t>(a), false);
        for (int r : I) in_I[static_cast<size_t>(r)] = true;
        std::vector<MPoly> vars;
        for (int r : I) {
            MPoly v = MPoly::var(vt, vt->gauge(0, r));
            if (kind == JordanKind::F) v -= MPoly::var(vt, vt->hbar());
            vars.push_back(std::move(v));
        }
        MPoly core = f.expand(vt, vars);
        Rat scale(1);
        RatFunc::Den nfac, den;
        Rat tcoeff = (kind == JordanKind::E) ? Rat(-1) : Rat(1);
        for (int r : I)
            for (int s = 0; s < a; ++s) {
                if (in_I[static_cast<size_t>(s)]) continue;
                mul_form(nfac, scale, vt,
                         {{vt->gauge(0, r), Rat(1)}, {vt->gauge(0, s), Rat(-1)}, {vt->tflavor(), tcoeff}});
                div_form(den, scale, vt, {{vt->gauge(0, r), Rat(1)}, {vt->gauge(0, s), Rat(-1)}});
            }
        if (kind == JordanKind::F)
            for (int r : I)
                for (int k = 0; k < l; ++k)
                    mul_form(nfac, scale, vt,
                             {{vt->gauge(0, r), Rat(1)}, {vt->hbar(), Rat(-1)}, {vt->mass(k), Rat(-1)}});
        std::vector<std::pair<int, int>> shift;
        for (int r : I) shift.emplace_back(vt->gauge(0, r), kind == JordanKind::E ? 1 : -1);
        out.add_term(ShiftMono::from_exponents(*vt, shift),
                     RatFunc::from_parts(std::move(core), std::move(nfac), std::move(den), scale));
    }
    return out;
}

MPoly weyl_transform_poly(const RootDatum& rd, const VarTable* vt, const std::vector<int>& word,
                          const MPoly& f)
{
    if (word.empty() || f.is_constant()) return f;
    int g0 = vt->gauge_begin();
    std::vector<MPoly> image;
    for (int c = 0; c < rd.ambient(); ++c) {
        RootDatum::Vec unit(static_cast<size_t>(rd.ambient()), 0);
        unit[static_cast<size_t>(c)] = 1;
        RootDatum::Vec tf = rd.apply_word_form(word, unit);
        MPoly p(vt);
        for (int d = 0; d < rd.ambient(); ++d)
            if (tf[static_cast<size_t>(d)] != 0) {
                MPoly v = MPoly::var(vt, g0 + d);
                v *= Rat(tf[static_cast<size_t>(d)]);
                p += v;
            }
        image.push_back(std::move(p));
    }
    MPoly out(vt);
    for (const auto& [k, coef] : f.terms()) {
        MPoly term = MPoly::constant(vt, coef);
        for (int slot = 0; slot < vt->nslots(); ++slot) {
            int e = MPoly::exp_of(k, slot);
            if (e == 0) continue;
            if (slot >= g0 && slot < g0 + rd.ambient())
                term = term * image[static_cast<size_t>(slot - g0)].pow(e);
            else
                term = term * MPoly::var(vt, slot, e);
        }
        out += term;
    }
    return out;
}

ShiftMono coweight_shift(const VarTable* vt, const RootDatum::Vec& cw)
{
    int g0 = vt->gauge_begin();
    std::vector<std::pair<int, int>> e;
    for (size_t c = 0; c < cw.size(); ++c)
        if (cw[c] != 0) e.emplace_back(g0 + static_cast<int>(c), static_cast<int>(cw[c]));
    return ShiftMono::from_exponents(*vt, e);
}

namespace {

RatFunc form_rf(const RootDatum& rd, const VarTable* vt, const RootDatum::Vec& form,
                const Rat& hbar_coeff = Rat(0), const Rat& t_coeff = Rat(0))
{
    std::vector<std::pair<int, Rat>> coeffs;
    if (hbar_coeff != 0) coeffs.emplace_back(vt->hbar(), hbar_coeff);
    if (t_coeff != 0) coeffs.emplace_back(vt->tflavor(), t_coeff);
    int g0 = vt->gauge_begin();
    for (int c = 0; c < rd.ambient(); ++c)
        if (form[static_cast<size_t>(c)] != 0)
            coeffs.emplace_back(g0 + c, Rat(form[static_cast<size_t>(c)]));
    return linear_rf(vt, coeffs);
}

long pair_weight_coweight(const VarTable* vt, const RatFunc& chi, const RootDatum::Vec& cw)
{
    if (!chi.is_polynomial()) throw Unsupported("matter weight must be polynomial");
    int g0 = vt->gauge_begin();
    Rat p(0);
    for (const auto& [k, c] : chi.num().terms()) {
        if (MPoly::degree_of(k) > 1) throw Unsupported("matter weight must be degree one");
        if (MPoly::degree_of(k) != 1) continue;
        for (int slot = g0; slot < g0 + static_cast<int>(cw.size()); ++slot)
            if (MPoly::exp_of(k, slot) != 0)
                p += chi.scale() * c * Rat(cw[static_cast<size_t>(slot - g0)]);
    }
    if (!is_integer(p)) throw Unsupported("matter weight pairs non-integrally with coweight");
    return static_cast<long>(rat_num(p));
}

} // namespace

DiffOp minuscule_general(const RootDatum& rd, const VarTable* vt, const RootDatum::Vec& lambda,
                         const MPoly& f, const std::vector<RatFunc>& N_weights)
{
    if (!rd.is_minuscule(lambda))
        throw NotMinuscule("coweight pairs outside {-1,0,1} with some root");
    RatFunc hbar = RatFunc::var(vt, vt->hbar());
    DiffOp out(vt);
    for (const auto& elem : rd.weyl_orbit(lambda)) {
        RatFunc coeff = RatFunc::from_poly(weyl_transform_poly(rd, vt, elem.word, f));
        for (const auto& chi : N_weights) {
            long p = pair_weight_coweight(vt, chi, elem.cw);
            for (long j = 1; j <= -p; ++j) coeff = coeff * (chi - hbar * Rat(j));
        }
        for (const auto& root : rd.roots()) {
            if (RootDatum::pair(root.form, elem.cw) != 1) continue;
            coeff = coeff / form_rf(rd, vt, root.form);
        }
        out.add_term(coweight_shift(vt, elem.cw), coeff);
    }
    return out;
}

std::vector<RatFunc> quiver_matter_weights(const QuiverTheory& q, const VarTable* vt)
{
    const Rat half(1, 2);
    std::vector<RatFunc> weights;
    for (auto [src, dst] : q.arrows)
        for (int r = 0; r < q.dim[static_cast<size_t>(src)]; ++r)
            for (int s = 0; s < q.dim[static_cast<size_t>(dst)]; ++s)
                weights.push_back(linear_rf(
                    vt, {{vt->gauge(dst, s), Rat(1)}, {vt->gauge(src, r), Rat(-1)}, {vt->hbar(), half}}));
    for (int k = 0; k < vt->nmass(); ++k) {
        int v = vt->slot(vt->mass(k)).vertex;
        for (int r = 0; r < q.dim[static_cast<size_t>(v)]; ++r)
            weights.push_back(linear_rf(
                vt, {{vt->gauge(v, r), Rat(1)}, {vt->mass(k), Rat(-1)}, {vt->hbar(), half}}));
    }
    return weights;
}

std::vector<RatFunc> adjoint_matter_weights(const RootDatum& rd, const VarTable* vt)
{
    const Rat half(1, 2);
    std::vector<RatFunc> weights;
    for (const auto& root : rd.roots())
        weights.push_back(form_rf(rd, vt, root.form, half, Rat(1)));
    return weights;
}

DiffOp quasi_minuscule(const RootDatum& rd, const VarTable* vt, const MPoly& f)
{
    const Rat half(1, 2), three_half(3, 2);
    const auto& hr = rd.highest_root();
    const RootDatum::Vec& lambda = hr.coroot; // quasi-minuscule coweight alpha_0
    DiffOp out(vt);
    for (const auto& elem : rd.weyl_orbit(lambda)) {
        RatFunc wf = RatFunc::from_poly(weyl_transform_poly(rd, vt, elem.word, f));
        RootDatum::Vec walpha = rd.apply_word_form(elem.word, hr.form);
        RootDatum::Vec neg_walpha = walpha;
        for (auto& x : neg_walpha) x = -x;
        RatFunc prod = wf;
        for (const auto& root : rd.roots()) {
            if (RootDatum::pair(root.form, elem.cw) <= 0) continue;
            RootDatum::Vec neg = root.form;
            for (auto& x : neg) x = -x;
            prod = prod * (form_rf(rd, vt, neg, -half, Rat(1)) / form_rf(rd, vt, root.form));
        }
        RatFunc pre_shift = form_rf(rd, vt, neg_walpha, -three_half, Rat(1)) /
                            form_rf(rd, vt, walpha, Rat(1));
        out.add_term(coweight_shift(vt, elem.cw), prod * pre_shift);
        RatFunc pre_flat = form_rf(rd, vt, walpha, half, Rat(1)) /
                           form_rf(rd, vt, neg_walpha, Rat(-1));
        out.add_term(ShiftMono::unit(), prod * pre_flat);
    }
    return out;
}

} // namespace cbx
