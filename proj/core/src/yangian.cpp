#include "cbx/yangian.hpp"

#include <algorithm>

#include "cbx/error.hpp"

namespace cbx {

Relation relation_from_name(const std::string& name)
{
    if (name == "HH") return Relation::HH;
    if (name == "HE") return Relation::HE;
    if (name == "HF") return Relation::HF;
    if (name == "EE") return Relation::EE;
    if (name == "FF") return Relation::FF;
    if (name == "EF") return Relation::EF;
    if (name == "SerreE") return Relation::SerreE;
    if (name == "SerreF") return Relation::SerreF;
    throw SchemaError("unknown relation '" + name + "'");
}

std::string relation_name(Relation r)
{
    switch (r) {
    case Relation::HH: return "HH";
    case Relation::HE: return "HE";
    case Relation::HF: return "HF";
    case Relation::EE: return "EE";
    case Relation::FF: return "FF";
    case Relation::EF: return "EF";
    case Relation::SerreE: return "SerreE";
    case Relation::SerreF: return "SerreF";
    }
    return "?";
}

GkloGen gklo_gen_from_name(const std::string& name)
{
    if (name == "A") return GkloGen::A;
    if (name == "E") return GkloGen::E;
    if (name == "F") return GkloGen::F;
    if (name == "H") return GkloGen::H;
    throw SchemaError("unknown generator '" + name + "'");
}

ShiftData ShiftData::of(const QuiverTheory& q)
{
    ShiftData d;
    int nv = q.nvertices();
    d.mu1.assign(static_cast<size_t>(nv), 0);
    d.mu2.assign(static_cast<size_t>(nv), 0);
    for (int i = 0; i < nv; ++i) {
        d.mu1[static_cast<size_t>(i)] = q.flavor[static_cast<size_t>(i)] - q.dim[static_cast<size_t>(i)];
        d.mu2[static_cast<size_t>(i)] = -q.dim[static_cast<size_t>(i)];
    }
    for (auto [src, dst] : q.arrows) {
        d.mu1[static_cast<size_t>(dst)] += q.dim[static_cast<size_t>(src)];
        d.mu2[static_cast<size_t>(src)] += q.dim[static_cast<size_t>(dst)];
    }
    d.mu.resize(static_cast<size_t>(nv));
    for (int i = 0; i < nv; ++i)
        d.mu[static_cast<size_t>(i)] = d.mu1[static_cast<size_t>(i)] + d.mu2[static_cast<size_t>(i)];
    return d;
}

namespace {

const Rat kHalf(1, 2);

// prod over k with mass vertex == v of (x - z_k - hbar/2)
MPoly flavor_poly(const QuiverTheory& q, const VarTable* vt, int v, const MPoly& x)
{
    (void)q;
    MPoly p = MPoly::constant(vt, 1);
    for (int k = 0; k < vt->nmass(); ++k) {
        if (vt->slot(vt->mass(k)).vertex != v) continue;
        MPoly h = MPoly::var(vt, vt->hbar());
        h *= kHalf;
        p = p * (x - MPoly::var(vt, vt->mass(k)) - h);
    }
    return p;
}

// W_v(x) = prod_s (x - w_{v,s}), optionally skipping one index
MPoly w_poly(const QuiverTheory& q, const VarTable* vt, int v, const MPoly& x, int skip = -1)
{
    MPoly p = MPoly::constant(vt, 1);
    for (int s = 0; s < q.dim[static_cast<size_t>(v)]; ++s) {
        if (s == skip) continue;
        p = p * (x - MPoly::var(vt, vt->gauge(v, s)));
    }
    return p;
}

} // namespace

DiffOp gklo_image_at(const QuiverTheory& q, const VarTable* vt, GkloGen gen, int vertex, int var)
{
    if (q.has_loops())
        throw LoopsUnsupported("the GKLO homomorphism is defined for quivers without edge loops");
    if (vertex < 0 || vertex >= q.nvertices()) throw IndexOutOfRange("gklo_image: bad vertex");
    int a = q.dim[static_cast<size_t>(vertex)];
    MPoly z = MPoly::var(vt, var);
    MPoly hbar = MPoly::var(vt, vt->hbar());
    MPoly half_h = hbar;
    half_h *= kHalf;

    DiffOp out(vt);
    switch (gen) {
    case GkloGen::A: {
        MPoly num = w_poly(q, vt, vertex, z);
        RatFunc::Den den;
        den[LinForm::var(vt, var)] = a;
        out.add_term(ShiftMono::unit(), RatFunc::make(std::move(num), std::move(den), Rat(1)));
        return out;
    }
    case GkloGen::H: {
        MPoly num = flavor_poly(q, vt, vertex, z);
        for (auto [src, dst] : q.arrows) {
            if (src == vertex) num = num * w_poly(q, vt, dst, z - half_h);
            if (dst == vertex) num = num * w_poly(q, vt, src, z - half_h);
        }
        Rat scale(1);
        RatFunc::Den den;
        for (int r = 0; r < a; ++r) {
            auto [f1, s1] = LinForm::canonical(
                vt, Rat(0), {{var, Rat(1)}, {vt->gauge(vertex, r), Rat(-1)}});
            den[f1] += 1;
            scale /= s1;
            auto [f2, s2] = LinForm::canonical(
                vt, Rat(0), {{var, Rat(1)}, {vt->gauge(vertex, r), Rat(-1)}, {vt->hbar(), Rat(-1)}});
            den[f2] += 1;
            scale /= s2;
        }
        out.add_term(ShiftMono::unit(), RatFunc::make(std::move(num), std::move(den), scale));
        return out;
    }
    case GkloGen::E: {
        for (int r = 0; r < a; ++r) {
            MPoly wr = MPoly::var(vt, vt->gauge(vertex, r));
            MPoly num = flavor_poly(q, vt, vertex, wr);
            for (auto [src, dst] : q.arrows)
                if (dst == vertex) num = num * w_poly(q, vt, src, wr - half_h);
            Rat scale(-1);
            RatFunc::Den den;
            auto [f1, s1] = LinForm::canonical(
                vt, Rat(0), {{var, Rat(1)}, {vt->gauge(vertex, r), Rat(-1)}});
            den[f1] += 1;
            scale /= s1;
            for (int s = 0; s < a; ++s) {
                if (s == r) continue;
                auto [f2, s2] = LinForm::canonical(
                    vt, Rat(0), {{vt->gauge(vertex, r), Rat(1)}, {vt->gauge(vertex, s), Rat(-1)}});
                den[f2] += 1;
                scale /= s2;
            }
            out.add_term(ShiftMono::u(*vt, vt->gauge(vertex, r), -1),
                         RatFunc::make(std::move(num), std::move(den), scale));
        }
        return out;
    }
    case GkloGen::F: {
        for (int r = 0; r < a; ++r) {
            MPoly wr = MPoly::var(vt, vt->gauge(vertex, r));
            MPoly num = MPoly::constant(vt, 1);
            for (auto [src, dst] : q.arrows)
                if (src == vertex) num = num * w_poly(q, vt, dst, wr + half_h);
            Rat scale(1);
            RatFunc::Den den;
            auto [f1, s1] = LinForm::canonical(
                vt, Rat(0), {{var, Rat(1)}, {vt->gauge(vertex, r), Rat(-1)}, {vt->hbar(), Rat(-1)}});
            den[f1] += 1;
            scale /= s1;
            for (int s = 0; s < a; ++s) {
                if (s == r) continue;
                auto [f2, s2] = LinForm::canonical(
                    vt, Rat(0), {{vt->gauge(vertex, r), Rat(1)}, {vt->gauge(vertex, s), Rat(-1)}});
                den[f2] += 1;
                scale /= s2;
            }
            out.add_term(ShiftMono::u(*vt, vt->gauge(vertex, r), 1),
                         RatFunc::make(std::move(num), std::move(den), scale));
        }
        return out;
    }
    }
    throw Unsupported("gklo_image: unknown generator");
}

DiffOp gklo_image(const QuiverTheory& q, const VarTable* vt, GkloGen gen, int vertex)
{
    return gklo_image_at(q, vt, gen, vertex, vt->spectral(0));
}

DiffOp series_coeff(const DiffOp& x, const VarTable* vt, int p)
{
    return op_coeff_at_infinity(x, vt->spectral(0), p);
}

namespace {

Rat edge_constant(const QuiverTheory& q, int i, int j)
{
    if (i == j) return Rat(1); // alpha.alpha/2
    for (auto [s, t] : q.arrows)
        if ((s == i && t == j) || (s == j && t == i)) return Rat(-1, 2);
    return Rat(0);
}

RatFunc spectral_gap(const VarTable* vt, int vz, int vy, const Rat& ah)
{
    // z - y - ah * hbar
    MPoly p = MPoly::var(vt, vz) - MPoly::var(vt, vy);
    MPoly h = MPoly::var(vt, vt->hbar());
    h *= ah;
    p -= h;
    return RatFunc::from_poly(std::move(p));
}

std::string first_witness(const DiffOp& d)
{
    if (d.is_zero()) return "";
    const auto& [m, f] = *d.terms().begin();
    return "[" + f.str() + "] " + m.str(*d.table());
}

VerificationReport make_report(const QuiverTheory& q, Relation rel, int i, int j, const DiffOp& lhs,
                               const DiffOp& rhs)
{
    VerificationReport rep;
    rep.relation = relation_name(rel);
    rep.vertices = {q.vertices[static_cast<size_t>(i)], q.vertices[static_cast<size_t>(j)]};
    rep.lhs_terms = static_cast<long>(lhs.size());
    rep.rhs_terms = static_cast<long>(rhs.size());
    DiffOp diff = lhs - rhs;
    rep.verified = diff.is_zero();
    if (!rep.verified) rep.witness = first_witness(diff);
    return rep;
}

} // namespace

VerificationReport check_relation(const QuiverTheory& q, const VarTable* vt, Relation rel, int i, int j)
{
    const int Z = vt->spectral(0), Y = vt->spectral(1), Z2 = vt->spectral(2);
    Rat a = edge_constant(q, i, j);
    switch (rel) {
    case Relation::HH: {
        DiffOp Hi = gklo_image_at(q, vt, GkloGen::H, i, Z);
        DiffOp Hj = gklo_image_at(q, vt, GkloGen::H, j, Y);
        return make_report(q, rel, i, j, Hi * Hj, Hj * Hi);
    }
    case Relation::HE: {
        DiffOp Hi = gklo_image_at(q, vt, GkloGen::H, i, Z);
        DiffOp Ej = gklo_image_at(q, vt, GkloGen::E, j, Y);
        DiffOp Ej_shift = op_spectral_shift(gklo_image_at(q, vt, GkloGen::E, j, Z), Z, -a);
        DiffOp lhs = (Hi * Ej) * spectral_gap(vt, Z, Y, a);
        DiffOp rhs = (Ej * Hi) * spectral_gap(vt, Z, Y, -a) -
                     (Ej_shift * Hi) * (RatFunc::var(vt, vt->hbar()) * (Rat(2) * a));
        return make_report(q, rel, i, j, lhs, rhs);
    }
    case Relation::HF: {
        DiffOp Hi = gklo_image_at(q, vt, GkloGen::H, i, Z);
        DiffOp Fj = gklo_image_at(q, vt, GkloGen::F, j, Y);
        DiffOp Fj_shift = op_spectral_shift(gklo_image_at(q, vt, GkloGen::F, j, Z), Z, a);
        DiffOp lhs = (Hi * Fj) * spectral_gap(vt, Z, Y, -a);
        DiffOp rhs = (Fj * Hi) * spectral_gap(vt, Z, Y, a) +
                     (Fj_shift * Hi) * (RatFunc::var(vt, vt->hbar()) * (Rat(2) * a));
        return make_report(q, rel, i, j, lhs, rhs);
    }
    case Relation::EE:
    case Relation::FF: {
        GkloGen g = (rel == Relation::EE) ? GkloGen::E : GkloGen::F;
        Rat sgn = (rel == Relation::EE) ? a : -a;
        DiffOp Xi = gklo_image_at(q, vt, g, i, Z);
        DiffOp Xj = gklo_image_at(q, vt, g, j, Y);
        DiffOp Xi1 = series_coeff(Xi, vt, 1);
        DiffOp Xj1 = op_coeff_at_infinity(Xj, Y, 1);
        DiffOp lhs = (Xi * Xj) * spectral_gap(vt, Z, Y, sgn) + Xi * Xj1 - Xi1 * Xj;
        DiffOp rhs = (Xj * Xi) * spectral_gap(vt, Z, Y, -sgn) + Xj1 * Xi - Xj * Xi1;
        return make_report(q, rel, i, j, lhs, rhs);
    }
    case Relation::EF: {
        DiffOp Ei = gklo_image_at(q, vt, GkloGen::E, i, Z);
        DiffOp Fj = gklo_image_at(q, vt, GkloGen::F, j, Y);
        DiffOp lhs = (Ei * Fj - Fj * Ei) * spectral_gap(vt, Z, Y, Rat(0));
        DiffOp rhs(vt);
        if (i == j) {
            // in the Rees normalization [E^{(p)}, F^{(q)}] = hbar H^{(p+q-1)}
            DiffOp Hy = gklo_image_at(q, vt, GkloGen::H, i, Y);
            DiffOp Hz = gklo_image_at(q, vt, GkloGen::H, i, Z);
            rhs = (op_principal_part(Hy, Y) - op_principal_part(Hz, Z)) *
                  RatFunc::var(vt, vt->hbar());
        }
        return make_report(q, rel, i, j, lhs, rhs);
    }
    case Relation::SerreE:
    case Relation::SerreF: {
        if (i == j) throw IndexOutOfRange("Serre relations need i != j");
        GkloGen g = (rel == Relation::SerreE) ? GkloGen::E : GkloGen::F;
        if (a == 0) {
            DiffOp Xi = gklo_image_at(q, vt, g, i, Z);
            DiffOp Xj = gklo_image_at(q, vt, g, j, Y);
            return make_report(q, rel, i, j, Xi * Xj, Xj * Xi);
        }
        DiffOp X1 = gklo_image_at(q, vt, g, i, Z);
        DiffOp X2 = gklo_image_at(q, vt, g, i, Z2);
        DiffOp Xj = gklo_image_at(q, vt, g, j, Y);
        DiffOp lhs = op_commutator(X1, op_commutator(X2, Xj));
        DiffOp rhs = -op_commutator(X2, op_commutator(X1, Xj));
        return make_report(q, rel, i, j, lhs, rhs);
    }
    }
    throw Unsupported("unknown relation");
}

std::vector<VerificationReport> check_all_relations(const QuiverTheory& q, const VarTable* vt)
{
    std::vector<VerificationReport> out;
    for (Relation rel : {Relation::HH, Relation::HE, Relation::HF, Relation::EE, Relation::FF,
                         Relation::EF, Relation::SerreE, Relation::SerreF}) {
        auto reps = check_all_relations(q, vt, rel);
        out.insert(out.end(), reps.begin(), reps.end());
    }
    return out;
}

std::vector<VerificationReport> check_all_relations(const QuiverTheory& q, const VarTable* vt, Relation rel)
{
    std::vector<VerificationReport> out;
    bool serre = (rel == Relation::SerreE || rel == Relation::SerreF);
    for (int i = 0; i < q.nvertices(); ++i)
        for (int j = 0; j < q.nvertices(); ++j) {
            if (serre && i == j) continue;
            out.push_back(check_relation(q, vt, rel, i, j));
        }
    return out;
}

long rees_check(const QuiverTheory& q, const VarTable* vt, GkloGen gen, int vertex, int p)
{
    if (p < 1) throw IndexOutOfRange("rees_check needs p >= 1");
    ShiftData sd = ShiftData::of(q);
    long expected = 0;
    switch (gen) {
    case GkloGen::A: expected = p; break;
    case GkloGen::E: expected = sd.mu1[static_cast<size_t>(vertex)] + p; break;
    case GkloGen::F: expected = sd.mu2[static_cast<size_t>(vertex)] + p; break;
    case GkloGen::H: expected = sd.mu[static_cast<size_t>(vertex)] + p; break;
    }
    DiffOp x = gklo_image(q, vt, gen, vertex);
    DiffOp c = series_coeff(x, vt, p);
    if (c.is_zero()) return expected;
    auto deg = op_homogeneity(c);
    if (!deg) throw Inhomogeneous("generator coefficient is not homogeneous");
    if (*deg != expected)
        throw Inhomogeneous("degree " + std::to_string(*deg) + " != expected " + std::to_string(expected));
    return *deg;
}

} // namespace cbx
