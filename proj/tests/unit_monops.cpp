#include <doctest.h>

#include "cbx/error.hpp"
#include "cbx/monops.hpp"
#include "cbx/yangian.hpp"

using namespace cbx;

namespace {

DiffOp specialize_all(const DiffOp& d, bool masses_too)
{
    const VarTable* vt = d.table();
    std::map<int, Rat> at0{{vt->hbar(), Rat(0)}, {vt->tflavor(), Rat(0)}};
    if (masses_too)
        for (int k = 0; k < vt->nmass(); ++k) at0[vt->mass(k)] = Rat(0);
    return op_specialize(d, at0);
}

// permute the two gauge slots of a rank-2 vertex everywhere
DiffOp transpose_slots(const DiffOp& d, int wa, int wb)
{
    const VarTable* vt = d.table();
    DiffOp out(vt);
    int tmp = vt->spectral(2);
    for (const auto& [m, f] : d.terms()) {
        RatFunc g = f.substituted_affine(wa, Rat(0), {{tmp, Rat(1)}});
        g = g.substituted_affine(wb, Rat(0), {{wa, Rat(1)}});
        g = g.substituted_affine(tmp, Rat(0), {{wb, Rat(1)}});
        std::vector<std::pair<int, int>> e;
        for (const auto& [slot, k] : m.exponents())
            e.emplace_back(slot == wa ? wb : (slot == wb ? wa : slot), k);
        out.add_term(ShiftMono::from_exponents(*vt, e), g);
    }
    return out;
}

} // namespace

TEST_CASE("abelian quiver operators")
{
    // a=1, l=0, no arrows: E -> u, F -> u^{-1}
    QuiverTheory q = QuiverTheory::a_chain({1}, {0});
    VarTable vt = q.make_table();
    CHECK(quiver_E(q, &vt, 0, 1, SymFunc::one()) ==
          DiffOp::shift(&vt, ShiftMono::u(vt, vt.gauge(0, 0))));
    CHECK(quiver_F(q, &vt, 0, 1, SymFunc::one()) ==
          DiffOp::shift(&vt, ShiftMono::u(vt, vt.gauge(0, 0), -1)));
}

TEST_CASE("quiver operators with matter")
{
    // A2 arrow 1->2, dims (1,1): E at the arrow tail sees the single factor
    // (-w_{1,1} + w_{2,1} - h/2); the head vertex has an empty product
    QuiverTheory q = QuiverTheory::a_chain({1, 1}, {0, 0});
    VarTable vt = q.make_table();
    const VarTable* t = &vt;
    RatFunc w11 = RatFunc::var(t, vt.gauge(0, 0)), w21 = RatFunc::var(t, vt.gauge(1, 0)),
            H = RatFunc::var(t, vt.hbar());
    DiffOp e1 = quiver_E(q, t, 0, 1, SymFunc::one());
    CHECK(e1 == DiffOp::term(-w11 + w21 - H * Rat(1, 2), ShiftMono::u(vt, vt.gauge(0, 0))));
    DiffOp e2 = quiver_E(q, t, 1, 1, SymFunc::one());
    CHECK(e2 == DiffOp::shift(t, ShiftMono::u(vt, vt.gauge(1, 0))));
    // F at vertex 2 sees the incoming arrow factor (w_{2,1} - w_{1,1} - h/2)
    DiffOp f2 = quiver_F(q, t, 1, 1, SymFunc::one());
    CHECK(f2 == DiffOp::term(w21 - w11 - H * Rat(1, 2), ShiftMono::u(vt, vt.gauge(1, 0), -1)));

    // A1, a=1, l=2: product over both masses
    QuiverTheory ql = QuiverTheory::a_chain({1}, {2});
    VarTable vl = ql.make_table();
    const VarTable* tl = &vl;
    RatFunc w = RatFunc::var(tl, vl.gauge(0, 0)), Hl = RatFunc::var(tl, vl.hbar());
    RatFunc z1 = RatFunc::var(tl, vl.mass(0)), z2 = RatFunc::var(tl, vl.mass(1));
    DiffOp f = quiver_F(ql, tl, 0, 1, SymFunc::one());
    CHECK(f == DiffOp::term((w - z1 - Hl * Rat(1, 2)) * (w - z2 - Hl * Rat(1, 2)),
                            ShiftMono::u(vl, vl.gauge(0, 0), -1)));
    // l=1 single factor
    QuiverTheory q1 = QuiverTheory::a_chain({1}, {1});
    VarTable v1 = q1.make_table();
    DiffOp f1 = quiver_F(q1, &v1, 0, 1, SymFunc::one());
    CHECK(f1.size() == 1);
    CHECK(f1.terms().begin()->second.num().total_degree() == 1);
}

TEST_CASE("jordan operators at a=1 and a=2")
{
    for (int l = 0; l <= 2; ++l) {
        QuiverTheory q = QuiverTheory::jordan(1, l);
        VarTable vt = q.make_table();
        const VarTable* t = &vt;
        CHECK(jordan_op(1, l, t, 1, SymFunc::one(), JordanKind::E) ==
              DiffOp::shift(t, ShiftMono::u(vt, vt.gauge(0, 0))));
        RatFunc coeff = RatFunc::constant(t, 1);
        for (int k = 0; k < l; ++k)
            coeff *= RatFunc::var(t, vt.gauge(0, 0)) - RatFunc::var(t, vt.hbar()) -
                     RatFunc::var(t, vt.mass(k));
        CHECK(jordan_op(1, l, t, 1, SymFunc::one(), JordanKind::F) ==
              DiffOp::term(coeff, ShiftMono::u(vt, vt.gauge(0, 0), -1)));
    }
    // a=2, n=2: the (r in I, s not in I) product is empty
    QuiverTheory q = QuiverTheory::jordan(2, 0);
    VarTable vt = q.make_table();
    CHECK(jordan_op(2, 0, &vt, 2, SymFunc::one(), JordanKind::E) ==
          DiffOp::shift(&vt, ShiftMono::from_exponents(
                                 vt, {{vt.gauge(0, 0), 1}, {vt.gauge(0, 1), 1}})));
    // a=2, n=1, f=e1: sum of w_r (w_r - w_s - t)/(w_r - w_s) u_r
    const VarTable* t = &vt;
    RatFunc w1 = RatFunc::var(t, vt.gauge(0, 0)), w2 = RatFunc::var(t, vt.gauge(0, 1)),
            tf = RatFunc::var(t, vt.tflavor());
    DiffOp expect = DiffOp::term(w1 * (w1 - w2 - tf) / (w1 - w2), ShiftMono::u(vt, vt.gauge(0, 0))) +
                    DiffOp::term(w2 * (w2 - w1 - tf) / (w2 - w1), ShiftMono::u(vt, vt.gauge(0, 1)));
    CHECK(jordan_op(2, 0, t, 1, SymFunc::e(1), JordanKind::E) == expect);
}

TEST_CASE("t-absorption links the raw and absorbed constructors")
{
    // E_n[f] at t = -h/2 equals (-1)^{n(a-n)} quiver_E for the Jordan quiver
    for (int a = 2; a <= 3; ++a)
        for (int n = 1; n <= a; ++n) {
            QuiverTheory q = QuiverTheory::jordan(a, 0);
            VarTable vt = q.make_table();
            DiffOp absorbed = jordan_op(a, 0, &vt, n, SymFunc::one(), JordanKind::E);
            DiffOp raw = quiver_E(q, &vt, 0, n, SymFunc::one());
            // substitute t := -h/2
            DiffOp absorbed_at(&vt);
            for (const auto& [m, f] : absorbed.terms())
                absorbed_at.add_term(
                    m, f.substituted_affine(vt.tflavor(), Rat(0), {{vt.hbar(), Rat(-1, 2)}}));
            Rat sign = (n * (a - n)) % 2 ? Rat(-1) : Rat(1);
            CHECK(absorbed_at == raw * sign);
        }
}

TEST_CASE("jordan specialization reproduces the classical displays")
{
    for (int a = 1; a <= 3; ++a)
        for (int l = 0; l <= 2; ++l)
            for (int n = 1; n <= a; ++n)
                for (const SymFunc& f : {SymFunc::one(), SymFunc::e(1)}) {
                    QuiverTheory q = QuiverTheory::jordan(a, l);
                    VarTable vt = q.make_table();
                    const VarTable* t = &vt;
                    DiffOp e0 = specialize_all(jordan_op(a, l, t, n, f, JordanKind::E), true);
                    DiffOp f0 = specialize_all(jordan_op(a, l, t, n, f, JordanKind::F), true);
                    // expected: sum over subsets of f(w_I) prod u_r and
                    // f(w_I) prod w_r^l u_r^{-1}
                    DiffOp ee(t), fe(t);
                    std::vector<int> idx(static_cast<size_t>(n));
                    std::function<void(int, size_t)> rec = [&](int start, size_t k) {
                        if (k == idx.size()) {
                            std::vector<MPoly> vars;
                            for (int r : idx) vars.push_back(MPoly::var(t, vt.gauge(0, r)));
                            RatFunc fw = RatFunc::from_poly(f.expand(t, vars));
                            std::vector<std::pair<int, int>> up, dn;
                            RatFunc wl = fw;
                            for (int r : idx) {
                                up.emplace_back(vt.gauge(0, r), 1);
                                dn.emplace_back(vt.gauge(0, r), -1);
                                for (int j = 0; j < l; ++j) wl *= RatFunc::var(t, vt.gauge(0, r));
                            }
                            ee.add_term(ShiftMono::from_exponents(vt, up), fw);
                            fe.add_term(ShiftMono::from_exponents(vt, dn), wl);
                            return;
                        }
                        for (int r = start; r < a; ++r) {
                            idx[k] = r;
                            rec(r + 1, k + 1);
                        }
                    };
                    rec(0, 0);
                    CHECK(e0 == ee);
                    CHECK(f0 == fe);
                }
}

TEST_CASE("macdonald commutativity at a <= 3")
{
    for (int a = 2; a <= 3; ++a) {
        QuiverTheory q = QuiverTheory::jordan(a, 1);
        VarTable vt = q.make_table();
        for (int m = 1; m <= a; ++m)
            for (int n = m; n <= a; ++n) {
                DiffOp em = jordan_op(a, 1, &vt, m, SymFunc::one(), JordanKind::E);
                DiffOp en = jordan_op(a, 1, &vt, n, SymFunc::one(), JordanKind::E);
                CHECK(op_commutator(em, en).is_zero());
                DiffOp fm = jordan_op(a, 1, &vt, m, SymFunc::one(), JordanKind::F);
                DiffOp fn = jordan_op(a, 1, &vt, n, SymFunc::one(), JordanKind::F);
                CHECK(op_commutator(fm, fn).is_zero());
            }
    }
}

TEST_CASE("permutation invariance of the full sums")
{
    QuiverTheory q = QuiverTheory::jordan(2, 1);
    VarTable vt = q.make_table();
    int w1 = vt.gauge(0, 0), w2 = vt.gauge(0, 1);
    for (JordanKind k : {JordanKind::E, JordanKind::F}) {
        DiffOp d = jordan_op(2, 1, &vt, 1, SymFunc::e(1), k);
        CHECK(transpose_slots(d, w1, w2) == d);
    }
    DiffOp e = quiver_E(q, &vt, 0, 1, SymFunc::one());
    CHECK(transpose_slots(e, w1, w2) == e);
}

TEST_CASE("homogeneity matches the filtration degrees")
{
    // ADE, n=1, f=1: quiver_E has degree <mu_2, alpha_i> + 1, quiver_F has
    // <mu_1, alpha_i> + 1
    for (auto dims : {std::vector<int>{1, 1}, std::vector<int>{2, 1}, std::vector<int>{2, 2}}) {
        QuiverTheory q = QuiverTheory::a_chain(dims, {1, 0});
        VarTable vt = q.make_table();
        ShiftData sd = ShiftData::of(q);
        for (int i = 0; i < q.nvertices(); ++i) {
            auto de = op_homogeneity(quiver_E(q, &vt, i, 1, SymFunc::one()));
            REQUIRE(de.has_value());
            CHECK(*de == sd.mu2[static_cast<size_t>(i)] + 1);
            auto df = op_homogeneity(quiver_F(q, &vt, i, 1, SymFunc::one()));
            REQUIRE(df.has_value());
            CHECK(*df == sd.mu1[static_cast<size_t>(i)] + 1);
        }
    }
}

TEST_CASE("minuscule operator on quiver data matches the quiver constructors")
{
    QuiverTheory q = QuiverTheory::a_chain({1, 1}, {1, 0});
    VarTable vt = q.make_table();
    RootDatum rd = RootDatum::gl_product({1, 1});
    auto weights = quiver_matter_weights(q, &vt);
    MPoly one = MPoly::constant(&vt, 1);
    for (int i = 0; i < 2; ++i) {
        RootDatum::Vec lam(2, 0);
        lam[static_cast<size_t>(i)] = 1;
        CHECK(minuscule_general(rd, &vt, lam, one, weights) ==
              quiver_E(q, &vt, i, 1, SymFunc::one()));
        RootDatum::Vec lams(2, 0);
        lams[static_cast<size_t>(i)] = -1;
        CHECK(minuscule_general(rd, &vt, lams, one, weights) ==
              quiver_F(q, &vt, i, 1, SymFunc::one()));
    }
    // lambda = 0: identity shift, no factors
    CHECK(minuscule_general(rd, &vt, {0, 0}, one, weights) == DiffOp::one(&vt));
}

TEST_CASE("minuscule operator for rank-2 gauge groups")
{
    // GL(2) fundamental: two orbit elements with (w_r - w_s) denominators
    QuiverTheory q = QuiverTheory::a_chain({2}, {1});
    VarTable vt = q.make_table();
    RootDatum rd = RootDatum::gl_product({2});
    auto weights = quiver_matter_weights(q, &vt);
    MPoly one = MPoly::constant(&vt, 1);
    DiffOp d = minuscule_general(rd, &vt, {1, 0}, one, weights);
    CHECK(d == quiver_E(q, &vt, 0, 1, SymFunc::one()));
    DiffOp dm = minuscule_general(rd, &vt, {0, -1}, one, weights);
    CHECK(dm == quiver_F(q, &vt, 0, 1, SymFunc::one()));
    CHECK_THROWS_AS(minuscule_general(rd, &vt, {2, 0}, one, weights), NotMinuscule);
}

TEST_CASE("quasi-minuscule operator for sl2")
{
    RootDatum rd = RootDatum::simple('A', 1);
    VarTable vt = VarTable::make({rd.ambient()}, 0);
    const VarTable* t = &vt;
    DiffOp d = quasi_minuscule(rd, t, MPoly::constant(t, 1));
    DiffOp d0 = op_specialize(d, {{vt.hbar(), Rat(0)}, {vt.tflavor(), Rat(0)}});
    // u_{alpha_0} + u_{-alpha_0} + 2 (alpha_0 shifts the root coordinate by 2)
    DiffOp expect = DiffOp::shift(t, ShiftMono::u(vt, vt.gauge(0, 0), 2)) +
                    DiffOp::shift(t, ShiftMono::u(vt, vt.gauge(0, 0), -2)) +
                    DiffOp::coeff(RatFunc::constant(t, 2));
    CHECK(d0 == expect);
    // W-invariant f: the shiftless part is W-invariant
    MPoly f = MPoly::var(t, vt.gauge(0, 0), 2);
    DiffOp df = quasi_minuscule(rd, t, f);
    auto it = df.terms().find(ShiftMono::unit());
    REQUIRE(it != df.terms().end());
    RatFunc flat = it->second;
    RatFunc flipped = flat.substituted_affine(vt.gauge(0, 0), Rat(0), {{vt.gauge(0, 0), Rat(-1)}});
    CHECK(flat == flipped);
}

TEST_CASE("quasi-minuscule operator for sl3")
{
    RootDatum rd = RootDatum::simple('A', 2);
    VarTable vt = VarTable::make({rd.ambient()}, 0);
    DiffOp d = quasi_minuscule(rd, &vt, MPoly::constant(&vt, 1));
    // 6-element orbit: six shifted terms plus the merged shiftless one
    CHECK(rd.weyl_orbit(rd.highest_root().coroot).size() == 6);
    CHECK(d.size() == 7);
    CHECK(d.terms().count(ShiftMono::unit()) == 1);
}
