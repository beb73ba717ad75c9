#include "twistlab/axbdouble/double_group.hpp"
#include "twistlab/errors.hpp"
#include "twistlab/quantizeudf/udf.hpp"

#include <doctest.h>

using namespace twistlab;
using namespace twistlab::quantizeudf;

namespace {

Scalar c(const char* n) { return Scalar::coord(n); }

std::string failures(const VerificationReport& r) {
    std::string out;
    for (const auto& ch : r.checks)
        if (!ch.passed) out += ch.name + ": " + ch.detail + "\n";
    return out;
}

LieAlgebra axb() { return liebialg::build_axb(); }

}  // namespace

TEST_CASE("act on the dressing chart") {
    HopfAction lam = dressing_hopf_action();
    LieAlgebra g = axb();
    UEA H = UEA::generator(g, "H"), E = UEA::generator(g, "E");
    CHECK(lam.side() == ModuleSide::Right);
    CHECK(act(lam, H, c("y")) == Scalar(-2) * c("y"));
    CHECK(act(lam, UEA::one(g), c("x") * c("y")) == c("x") * c("y"));
    Scalar x = c("x");
    CHECK(act(lam, H * E, x) - act(lam, E * H, x) == Scalar(2) * act(lam, E, x));
    VerificationReport r = representation_check(lam, {x, c("y"), x * c("y")}, 3);
    CHECK_MESSAGE(r.passed(), failures(r));

    HopfAction grp = left_invariant_action();
    CHECK(grp.side() == ModuleSide::Left);
    CHECK(grp.field(0).str() == "d_a - 2*n*d_n");
    CHECK(grp.field(1).str() == "d_n");
    VerificationReport r2 = representation_check(grp, {c("a"), c("n"), c("a") * c("n")}, 3);
    CHECK_MESSAGE(r2.passed(), failures(r2));
}

TEST_CASE("a field assignment closing under neither sign is rejected") {
    poissongeom::Chart ch("plane", {"x", "y"});
    poissongeom::VectorField dx = poissongeom::VectorField::coordinate(ch, "x");
    poissongeom::VectorField ydy(ch, {0, c("y")});
    CHECK_THROWS_AS(HopfAction("bad", axb(), {dx, ydy}), PreconditionFailed);
}

TEST_CASE("star products on the dressing chart") {
    LieAlgebra g = axb();
    TwistSeries F = ueahopf::jordanian_twist(g, 3);
    HopfAction lam = dressing_hopf_action();
    StarProduct star(F, lam, 3);
    Scalar x = c("x"), y = c("y");
    SSeries xy = star(x, y);
    CHECK(xy[0] == x * y);
    // F_1 = 1/2 H(x)E, Lambda(H)x = 0
    CHECK(xy[1] == Scalar(0));
    SSeries yx = star(y, x);
    CHECK(yx[1] == Scalar(-1) * y * y);
    CHECK(series_str(star(x, y).truncated(1)) == "x*y");
    CHECK(series_str(yx.truncated(1)) == "x*y + hbar*(-y^2)");
    // antisymmetric part = 1/2 {x,y}, {x,y} = 2y^2
    CHECK(xy[1] - yx[1] == Scalar(1) / Scalar(2) * Scalar(2) * y * y);

    std::vector<Scalar> mono = monomials(lam.chart(), 2);
    CHECK(mono.size() == 6);
    VerificationReport u = unit_check(star, mono);
    CHECK_MESSAGE(u.passed(), failures(u));

    StarProduct star2(F, lam, 2);
    VerificationReport bad = assoc_check(StarProduct(corrupt_order2(F), lam, 2), mono);
    CHECK(bad.first_failing_order() == std::optional<int>(2));
    VerificationReport good = assoc_check(star2, mono);
    CHECK_MESSAGE(good.passed(), failures(good));

    CHECK_THROWS_AS(StarProduct(F, lam, 4), PreconditionFailed);
}

TEST_CASE("udf suite") {
    VerificationReport r = udf_suite(3);
    CHECK_MESSAGE(r.passed(), failures(r));
    CHECK(r.value("Lambda constant") == std::optional<std::string>("1/2"));
    CHECK(r.value("corrupted F_2 first failing order") == std::optional<std::string>("2"));
}

TEST_CASE("pairing") {
    LieAlgebra g = axb();
    UEA H = UEA::generator(g, "H"), E = UEA::generator(g, "E");
    Scalar a = c("a"), n = c("n");
    CHECK(pairing(UEA::one(g), Scalar(3) + a) == 3);
    CHECK(pairing(H, a) == 1);
    CHECK(pairing(H, n) == 0);
    CHECK(pairing(E, n) == 1);
    // H^L = d_a - 2n d_n, E^L = d_n: <HE, n> = H^L(1) = 0, <EH, n> = E^L(-2n) = -2
    CHECK(pairing(H * E, n) == 0);
    CHECK(pairing(E * H, n) == -2);
    CHECK(pairing(H * H, Scalar::exp(Scalar(2) * a)) == 4);
    CHECK_THROWS_AS(pairing(UEA::one(g), c("x")), PreconditionFailed);
}

TEST_CASE("gamma") {
    LieAlgebra g = axb();
    TwistSeries F = ueahopf::jordanian_twist(g, 2);
    Scalar a = c("a"), n = c("n");
    SSeries one = gamma_eval(F, Scalar(1), a + Scalar(5));
    CHECK(one[0] == Scalar(5));
    CHECK(one[1] == Scalar(0));
    // order 1: 1/2 <H,a><E,n> = 1/2
    SSeries an = gamma_eval(F, a, n);
    CHECK(an[0] == Scalar(0));
    CHECK(an[1] == Scalar(1) / Scalar(2));
    auto [l, r] = gamma_cocycle_sides(F, a, n, a * n);
    CHECK(l == r);
    auto [l2, r2] = gamma_cocycle_sides(F, n, a, n * n);
    CHECK(l2 == r2);
}

TEST_CASE("m gamma duality") {
    LieAlgebra g = axb();
    TwistSeries F = ueahopf::jordanian_twist(g, 2);
    Scalar a = c("a"), n = c("n");
    SSeries m = m_gamma(F, a, n);
    CHECK(m[0] == a * n);
    for (const char* x : {"H", "E"}) {
        auto [l, r] = mgamma_duality_sides(F, UEA::generator(g, x), a, n);
        CHECK_MESSAGE(l == r, x);
    }
    SSeries id = m_gamma(ueahopf::series_one(g, 2, 2), a, n);
    CHECK(id[1] == Scalar(0));
}

TEST_CASE("coactions") {
    Coaction d = dressing_coaction();
    CHECK(d.side() == ModuleSide::Left);
    CHECK(d.counit_law(c("x") * c("y")));
    CHECK(right_regular_coaction().side() == ModuleSide::Right);
    CHECK(left_regular_coaction().side() == ModuleSide::Left);
    CHECK_THROWS_AS(Coaction("bad", axbdouble::dressing_chart(), {c("x") + c("g_n"), c("y") + c("g_a")}), PreconditionFailed);

    LieAlgebra g = axb();
    TwistSeries F = ueahopf::jordanian_twist(g, 3);
    HopfAction lam = dressing_hopf_action();
    Scalar x = c("x"), y = c("y");
    CHECK(star_cocycle(F, d, x * y, y, 3) == star_udf(F, lam, x * y, y, 3));
    SSeries flat = star_cocycle(ueahopf::series_one(g, 2, 2), d, x, y, 2);
    CHECK(flat[0] == x * y);
    CHECK(flat[1] == Scalar(0));
}

TEST_CASE("duality suite") {
    VerificationReport r = duality_suite(3, 11);
    CHECK_MESSAGE(r.passed(), failures(r));
}
