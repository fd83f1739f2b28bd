#include <doctest.h>

#include "cbx/classical.hpp"
#include "cbx/error.hpp"
#include "cbx/yangian.hpp"

using namespace cbx;

TEST_CASE("gklo images in closed form")
{
    // A(i) for a_i = 2
    QuiverTheory q = QuiverTheory::a_chain({2}, {0});
    VarTable vt = q.make_table();
    const VarTable* t = &vt;
    RatFunc Z = RatFunc::var(t, vt.spectral(0)), w1 = RatFunc::var(t, vt.gauge(0, 0)),
            w2 = RatFunc::var(t, vt.gauge(0, 1));
    DiffOp A = gklo_image(q, t, GkloGen::A, 0);
    CHECK(A == DiffOp::coeff((Z - w1) * (Z - w2) / (Z * Z)));

    // A1 with a=1, l=0: E and F
    QuiverTheory q1 = QuiverTheory::a_chain({1}, {0});
    VarTable v1 = q1.make_table();
    const VarTable* t1 = &v1;
    RatFunc Z1 = RatFunc::var(t1, v1.spectral(0)), w = RatFunc::var(t1, v1.gauge(0, 0)),
            H = RatFunc::var(t1, v1.hbar()), one = RatFunc::constant(t1, 1);
    CHECK(gklo_image(q1, t1, GkloGen::E, 0) ==
          DiffOp::term(-one / (Z1 - w), ShiftMono::u(v1, v1.gauge(0, 0), -1)));
    CHECK(gklo_image(q1, t1, GkloGen::F, 0) ==
          DiffOp::term(one / (Z1 - w - H), ShiftMono::u(v1, v1.gauge(0, 0))));

    // H for A1 with a=1, l=1
    QuiverTheory qh = QuiverTheory::a_chain({1}, {1});
    VarTable vh = qh.make_table();
    const VarTable* th = &vh;
    RatFunc Zh = RatFunc::var(th, vh.spectral(0)), wh = RatFunc::var(th, vh.gauge(0, 0)),
            Hh = RatFunc::var(th, vh.hbar()), zm = RatFunc::var(th, vh.mass(0));
    CHECK(gklo_image(qh, th, GkloGen::H, 0) ==
          DiffOp::coeff((Zh - zm - Hh * Rat(1, 2)) / ((Zh - wh) * (Zh - wh - Hh))));

    // loops are rejected
    QuiverTheory qj = QuiverTheory::jordan(2, 1);
    VarTable vj = qj.make_table();
    CHECK_THROWS_AS(gklo_image(qj, &vj, GkloGen::E, 0), LoopsUnsupported);
}

TEST_CASE("series coefficients of the images")
{
    QuiverTheory q = QuiverTheory::a_chain({1}, {0});
    VarTable vt = q.make_table();
    const VarTable* t = &vt;
    RatFunc w = RatFunc::var(t, vt.gauge(0, 0)), H = RatFunc::var(t, vt.hbar());
    DiffOp E = gklo_image(q, t, GkloGen::E, 0);
    CHECK(series_coeff(E, t, 1) ==
          DiffOp::term(RatFunc::constant(t, -1), ShiftMono::u(vt, vt.gauge(0, 0), -1)));
    DiffOp F = gklo_image(q, t, GkloGen::F, 0);
    CHECK(series_coeff(F, t, 2) == DiffOp::term(w + H, ShiftMono::u(vt, vt.gauge(0, 0))));

    // truncation kernel: A_i^{(p)} = 0 for p > a_i
    for (auto dims : {std::vector<int>{1}, std::vector<int>{2}, std::vector<int>{3}}) {
        QuiverTheory qa = QuiverTheory::a_chain(dims, {1});
        VarTable va = qa.make_table();
        DiffOp A = gklo_image(qa, &va, GkloGen::A, 0);
        for (int p = dims[0] + 1; p <= dims[0] + 3; ++p)
            CHECK(series_coeff(A, &va, p).is_zero());
        // and nonzero at p = a_i (top elementary symmetric)
        CHECK(!series_coeff(A, &va, dims[0]).is_zero());
    }
}

TEST_CASE("E reconstructed from its first coefficients by partial fractions")
{
    QuiverTheory q = QuiverTheory::a_chain({2, 1}, {1, 0});
    VarTable vt = q.make_table();
    const VarTable* t = &vt;
    RatFunc Z = RatFunc::var(t, vt.spectral(0)), w1 = RatFunc::var(t, vt.gauge(0, 0)),
            w2 = RatFunc::var(t, vt.gauge(0, 1)), one = RatFunc::constant(t, 1);
    DiffOp E = gklo_image(q, t, GkloGen::E, 0);
    DiffOp c1 = series_coeff(E, t, 1), c2 = series_coeff(E, t, 2);
    // residues from the 2x2 Vandermonde: A_1 = (c2 - w2 c1)/(w1 - w2)
    DiffOp A1 = (c2 - c1 * w2) * (one / (w1 - w2));
    DiffOp A2 = (c2 - c1 * w1) * (one / (w2 - w1));
    DiffOp rec = A1 * (one / (Z - w1)) + A2 * (one / (Z - w2));
    CHECK(rec == E);
}

TEST_CASE("lagrange interpolation identity with abstract symbols")
{
    // sum_r y_r / ((z - w_r) W_r(w_r)) * W(z) is the interpolation polynomial
    VarTable vt = VarTable::make({3}, 3); // three gauge slots, three abstract y-symbols
    const VarTable* t = &vt;
    RatFunc Z = RatFunc::var(t, vt.spectral(0)), one = RatFunc::constant(t, 1);
    RatFunc sum(t);
    RatFunc W = one;
    for (int r = 0; r < 3; ++r) W *= Z - RatFunc::var(t, vt.gauge(0, r));
    for (int r = 0; r < 3; ++r) {
        RatFunc y_r = RatFunc::var(t, vt.mass(r));
        RatFunc denom = Z - RatFunc::var(t, vt.gauge(0, r));
        for (int s = 0; s < 3; ++s) {
            if (s == r) continue;
            denom *= RatFunc::var(t, vt.gauge(0, r)) - RatFunc::var(t, vt.gauge(0, s));
        }
        sum += y_r / denom;
    }
    RatFunc G = sum * W;
    // polynomial in z of degree <= 2 interpolating y_r at w_r
    CHECK(rf_principal_part(G, vt.spectral(0)).is_zero());
    CHECK(G.num().degree_in(vt.spectral(0)) <= 2);
    for (int r = 0; r < 3; ++r) {
        RatFunc at = G.substituted_affine(vt.spectral(0), Rat(0), {{vt.gauge(0, r), Rat(1)}});
        CHECK(at == RatFunc::var(t, vt.mass(r)));
    }
}

TEST_CASE("hbar = 0 specialization of gklo F matches the Xi image")
{
    QuiverTheory q = QuiverTheory::a_chain({2, 1}, {0, 0});
    VarTable vt = q.make_table();
    const VarTable* t = &vt;
    RatFunc Z = RatFunc::var(t, vt.spectral(0)), one = RatFunc::constant(t, 1);
    DiffOp F0 = op_specialize(gklo_image(q, t, GkloGen::F, 0), {{vt.hbar(), Rat(0)}});
    DiffOp expect(t);
    int a2 = q.dim[1];
    for (int r = 0; r < q.dim[0]; ++r) {
        RatFunc denom = Z - RatFunc::var(t, vt.gauge(0, r));
        for (int s = 0; s < q.dim[0]; ++s) {
            if (s == r) continue;
            denom *= RatFunc::var(t, vt.gauge(0, r)) - RatFunc::var(t, vt.gauge(0, s));
        }
        RatFunc pref = (a2 % 2 ? -one : one) / denom;
        expect += op_specialize(xi_map(q, t, 0, r), {{vt.hbar(), Rat(0)}}) * pref;
    }
    CHECK(F0 == expect);
}

TEST_CASE("defining relations for small theories")
{
    QuiverTheory a1 = QuiverTheory::a_chain({2}, {1});
    VarTable v1 = a1.make_table();
    for (const auto& rep : check_all_relations(a1, &v1)) {
        INFO(rep.text());
        CHECK(rep.verified);
    }
    QuiverTheory a2 = QuiverTheory::a_chain({1, 1}, {1, 0});
    VarTable v2 = a2.make_table();
    for (const auto& rep : check_all_relations(a2, &v2)) {
        INFO(rep.text());
        CHECK(rep.verified);
    }
}

TEST_CASE("EF diagonal telescoping for abelian theories with flavors")
{
    for (int l = 0; l <= 3; ++l) {
        QuiverTheory q = QuiverTheory::a_chain({1}, {l});
        VarTable vt = q.make_table();
        VerificationReport rep = check_relation(q, &vt, Relation::EF, 0, 0);
        INFO(rep.text());
        CHECK(rep.verified);
    }
}

TEST_CASE("serre relation for the (2,1) chain")
{
    QuiverTheory q = QuiverTheory::a_chain({2, 1}, {1, 1});
    VarTable vt = q.make_table();
    CHECK(check_relation(q, &vt, Relation::SerreE, 0, 1).verified);
    CHECK(check_relation(q, &vt, Relation::SerreF, 1, 0).verified);
    CHECK_THROWS_AS(check_relation(q, &vt, Relation::SerreE, 0, 0), IndexOutOfRange);
}

TEST_CASE("rees filtration degrees")
{
    // A1, a=1, l=2: deg E^{(1)} = <mu_1, alpha> + 1 = (2 - 1) + 1 = 2
    QuiverTheory q = QuiverTheory::a_chain({1}, {2});
    VarTable vt = q.make_table();
    CHECK(rees_check(q, &vt, GkloGen::E, 0, 1) == 2);
    // A-coefficients have degree p
    for (int p = 1; p <= 3; ++p) CHECK(rees_check(q, &vt, GkloGen::A, 0, p) == p);
    // F^{(1)} for A2 dims (1,1), arrow 1->2, vertex 1: (-1 + 1) + 1 = 1
    QuiverTheory a2 = QuiverTheory::a_chain({1, 1}, {0, 0});
    VarTable v2 = a2.make_table();
    CHECK(rees_check(a2, &v2, GkloGen::F, 0, 1) == 1);
    ShiftData sd = ShiftData::of(a2);
    CHECK(sd.mu2[0] == 0);
    CHECK(sd.mu1[0] == -1);
}
