#include "doctest.h"

#include "twistlab/errors.hpp"
#include "twistlab/poissongeom/geometry.hpp"

#include <random>

using namespace twistlab;
using namespace twistlab::poissongeom;
using exprcas::parse_scalar;

namespace {

Scalar S(const char* s) { return parse_scalar(s); }

const Chart& plane() {
    static Chart c("dressing", {"x", "y"});
    return c;
}
const Chart& space() {
    static Chart c("R3", {"x", "y", "z"});
    return c;
}
VectorField vf(const Chart& c, std::vector<Scalar> v) { return VectorField(c, std::move(v)); }
Form f1(const Chart& c, std::vector<Scalar> v) { return one_form(c, v); }
Multivector pi2(const char* coef) { return bivector(plane(), "x", "y", S(coef)); }

Scalar random_scalar(std::mt19937& rng, const Chart& c) {
    std::uniform_int_distribution<int> coef(-3, 3), pw(0, 2), pick(0, c.dim() - 1);
    auto poly = [&] {
        Scalar p = coef(rng);
        for (int t = 0; t < 3; ++t) {
            Scalar m = coef(rng);
            for (int i = 0; i < c.dim(); ++i) m *= c.coord(i).pow(pw(rng));
            p += m;
        }
        return p;
    };
    Scalar den = c.coord(pick(rng)) + Scalar(coef(rng) == 0 ? 1 : 2);
    return poly() / den;
}

}  // namespace

TEST_CASE("vector field brackets") {
    VectorField lH = vf(plane(), {0, S("-2*y")}), lE = vf(plane(), {S("y"), 0});
    CHECK(lie_bracket_vf(lH, lE) == lE * Scalar(-2));
    CHECK(lie_bracket_vf(lH, lE).str() == "-2*y*d_x");
    VectorField dx = VectorField::coordinate(plane(), "x"), dy = VectorField::coordinate(plane(), "y");
    CHECK(lie_bracket_vf(dx, dy).is_zero());
    CHECK(lie_bracket_vf(dx * S("y^2+1"), dx).is_zero());
    CHECK_THROWS_AS(lie_bracket_vf(dx, VectorField::coordinate(space(), "x")), ChartMismatch);
    CHECK_THROWS_AS(Chart("empty", {}), PreconditionFailed);
}

TEST_CASE("vector field bracket is a lie bracket") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        VectorField a = vf(plane(), {random_scalar(rng, plane()), random_scalar(rng, plane())});
        VectorField b = vf(plane(), {random_scalar(rng, plane()), random_scalar(rng, plane())});
        VectorField c = vf(plane(), {random_scalar(rng, plane()), random_scalar(rng, plane())});
        CHECK(lie_bracket_vf(a, b) == -lie_bracket_vf(b, a));
        CHECK((lie_bracket_vf(a, lie_bracket_vf(b, c)) + lie_bracket_vf(b, lie_bracket_vf(c, a)) +
               lie_bracket_vf(c, lie_bracket_vf(a, b)))
                  .is_zero());
    }
}

TEST_CASE("sharp slot convention") {
    Multivector pl = pi2("2*y^2"), ps = pi2("2*y*(y+1)");
    CHECK(sharp(pl, f1(plane(), {S("1/y"), 0})) == vf(plane(), {0, S("-2*y")}));
    CHECK(sharp(pl, f1(plane(), {0, S("1/(2*y)")})) == vf(plane(), {S("y"), 0}));
    CHECK(sharp(pl, Form(plane(), 1)).is_zero());
    // the star family needs +dx/(y+1) under this slot order
    CHECK(sharp(ps, f1(plane(), {S("1/(y+1)"), 0})) == vf(plane(), {0, S("-2*y")}));
    CHECK(sharp(ps, f1(plane(), {S("-1/(y+1)"), 0})) == vf(plane(), {0, S("2*y")}));

    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Scalar f = random_scalar(rng, plane()), g = random_scalar(rng, plane());
        Form df = de_rham_d(plane(), f);
        CHECK(sharp(pl, df) == -sharp(pl, df * Scalar(-1)));
        CHECK(sharp(pl, df * g) == sharp(pl, df) * g);
        // X_f(g) = {g, f}
        CHECK(sharp(pl, df).apply(g) == poisson_bracket(pl, g, f));
    }
}

TEST_CASE("exterior derivative") {
    CHECK(de_rham_d(f1(plane(), {S("1/y"), 0})) == Form::basis(plane(), {"x", "y"}, S("1/y^2")));
    CHECK(de_rham_d(plane(), S("7")).is_zero());
    CHECK(de_rham_d(de_rham_d(plane(), S("x^2/y"))).is_zero());
    CHECK(Form::basis(plane(), {"y", "x"}) == -Form::basis(plane(), {"x", "y"}));
    CHECK(Form::basis(plane(), {"x", "y"}).str() == "dx^dy");

    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Scalar f = random_scalar(rng, space()), g = random_scalar(rng, space());
        CHECK(de_rham_d(de_rham_d(space(), f)).is_zero());
        Form a = de_rham_d(space(), f) * g;
        CHECK(de_rham_d(de_rham_d(a)).is_zero());
        CHECK(de_rham_d(space(), f * g) == de_rham_d(space(), f) * g + de_rham_d(space(), g) * f);
        // d(a ^ b) = da ^ b - a ^ db for one-forms
        Form b = one_form(space(), {g, f, S("x")});
        CHECK(de_rham_d(wedge(a, b)) == wedge(de_rham_d(a), b) - wedge(a, de_rham_d(b)));
        // Cartan on functions and forms
        VectorField X = vf(space(), {f, S("z"), g});
        CHECK(lie_derivative(X, Form::scalar(space(), g)) == Form::scalar(space(), X.apply(g)));
        CHECK(lie_derivative(X, de_rham_d(space(), g)) == de_rham_d(space(), X.apply(g)));
        CHECK(interior(X, de_rham_d(space(), g)).coeff(Index{}) == X.apply(g));
    }
}

TEST_CASE("koszul bracket") {
    Multivector pl = pi2("2*y^2");
    Form aH = f1(plane(), {S("1/y"), 0}), aE = f1(plane(), {0, S("1/(2*y)")});
    CHECK(koszul_bracket(pl, aH, aE) == aE * Scalar(-2));
    CHECK(koszul_bracket(pl, aH, aH).is_zero());
    Multivector pc = pi2("3");
    CHECK(koszul_bracket(pc, Form::basis(plane(), {"x"}), Form::basis(plane(), {"y"})).is_zero());
    // [df, dg] = d{f, g} up to the slot convention
    Scalar f = S("x*y"), g = S("x^2 + y");
    CHECK(koszul_bracket(pl, de_rham_d(plane(), f), de_rham_d(plane(), g)) ==
          de_rham_d(plane(), poisson_bracket(pl, g, f)));
    // sharp intertwines the brackets up to the same sign
    CHECK(sharp(pl, koszul_bracket(pl, aH, aE)) == lie_bracket_vf(sharp(pl, aH), sharp(pl, aE)));
}

TEST_CASE("schouten bracket") {
    CHECK(schouten_bracket(pi2("2*y*(y+1)"), pi2("2*y*(y+1)")).is_zero());
    Multivector X = to_multivector(vf(plane(), {S("y"), 0}));
    CHECK(schouten_bracket(X, Multivector::scalar(plane(), S("x"))) == Multivector::scalar(plane(), S("y")));
    CHECK(schouten_bracket(Multivector::scalar(plane(), S("x")), X) == Multivector::scalar(plane(), S("-y")));
    VectorField a = vf(plane(), {S("x*y"), S("y^2")}), b = vf(plane(), {S("1/y"), S("x")});
    CHECK(to_vector_field(schouten_bracket(to_multivector(a), to_multivector(b))) == lie_bracket_vf(a, b));

    // so(3)*: Poisson; a perturbed bivector is not
    Multivector so3 = bivector(space(), "x", "y", S("z")) + bivector(space(), "y", "z", S("x")) +
                      bivector(space(), "z", "x", S("y"));
    Multivector bad = so3 + bivector(space(), "x", "y", S("x"));
    CHECK(schouten_bracket(so3, so3).is_zero());
    CHECK_FALSE(schouten_bracket(bad, bad).is_zero());

    // graded antisymmetry on random arguments
    std::mt19937 rng(9);
    for (int trial = 0; trial < 6; ++trial) {
        Multivector P = bivector(space(), "x", "z", random_scalar(rng, space())) +
                        bivector(space(), "y", "z", random_scalar(rng, space()));
        Multivector Q = to_multivector(vf(space(), {random_scalar(rng, space()), S("x"), random_scalar(rng, space())}));
        CHECK(schouten_bracket(P, Q) == -schouten_bracket(Q, P));
        CHECK(schouten_bracket(Q, Q).is_zero());
    }
}

TEST_CASE("poisson brackets and jacobi") {
    Multivector pl = pi2("2*y^2"), ps = pi2("2*y*(y+1)");
    CHECK(poisson_bracket(pl, S("x"), S("y")) == S("2*y^2"));
    CHECK(poisson_bracket(ps - pl, S("x"), S("y")) == S("2*y"));
    CHECK(poisson_bracket(pl, S("x^2/y"), S("x^2/y")).is_zero());

    Multivector so3 = bivector(space(), "x", "y", S("z")) + bivector(space(), "y", "z", S("x")) +
                      bivector(space(), "z", "x", S("y"));
    Multivector bad = so3 + bivector(space(), "x", "y", S("x"));
    std::mt19937 rng(21);
    auto jacobiator = [](const Multivector& p, const Scalar& f, const Scalar& g, const Scalar& h) {
        return poisson_bracket(p, f, poisson_bracket(p, g, h)) + poisson_bracket(p, g, poisson_bracket(p, h, f)) +
               poisson_bracket(p, h, poisson_bracket(p, f, g));
    };
    for (const auto& p : {pl, ps, pi2("2*y")}) {
        for (int trial = 0; trial < 5; ++trial) {
            Scalar f = random_scalar(rng, plane()), g = random_scalar(rng, plane()), h = random_scalar(rng, plane());
            CHECK(poisson_bracket(p, f, g) == -poisson_bracket(p, g, f));
            CHECK(poisson_bracket(p, f, g * h) == poisson_bracket(p, f, g) * h + poisson_bracket(p, f, h) * g);
            CHECK(jacobiator(p, f, g, h).is_zero());
        }
    }
    for (int trial = 0; trial < 5; ++trial) {
        Scalar f = random_scalar(rng, space()), g = random_scalar(rng, space()), h = random_scalar(rng, space());
        CHECK(jacobiator(so3, f, g, h).is_zero());
    }
    CHECK_FALSE(jacobiator(bad, S("x"), S("y"), S("z")).is_zero());
}

TEST_CASE("lie algebra morphism up to a global sign") {
    Multivector pl = pi2("2*y^2");
    Form aH = f1(plane(), {S("1/y"), 0}), aE = f1(plane(), {0, S("1/(2*y)")});
    VectorField lH = sharp(pl, aH), lE = sharp(pl, aE);
    // [H,E] = 2E goes to -2 l_E
    CHECK(lie_bracket_vf(lH, lE) == lE * Scalar(-2));
    // X -> -l_X is a homomorphism
    CHECK(lie_bracket_vf(-lH, -lE) == -lE * Scalar(2));
    // Maurer-Cartan shape
    CHECK(de_rham_d(aH) == wedge(aH, aE) * Scalar(2));
    CHECK(de_rham_d(aE).is_zero());
}

TEST_CASE("pullback and pushforward") {
    const Chart gstar("gstar-coadjoint", {"xiH", "xiE"});
    ChartMap Exp(gstar, plane(), {S("xiH"), S("2*xiE")});
    Exp.with_inverse({S("x"), S("y/2")});
    Form w = f1(plane(), {S("1/y"), 0});
    CHECK(pullback(ChartMap::identity(plane()), w) == w);
    CHECK(pullback(Exp, w) == f1(gstar, {S("1/(2*xiE)"), 0}));
    CHECK(pullback(Exp, de_rham_d(w)) == de_rham_d(pullback(Exp, w)));
    Scalar f = S("x^2/y"), g = S("y + x");
    CHECK(pullback(Exp, f * g) == pullback(Exp, f) * pullback(Exp, g));
    CHECK(pullback(Exp, de_rham_d(plane(), f)) == de_rham_d(gstar, pullback(Exp, f)));

    ChartMap dbl(plane(), plane(), {S("2*x"), S("y")});
    dbl.with_inverse({S("x/2"), S("y")});
    VectorField dx = VectorField::coordinate(plane(), "x");
    CHECK(pushforward_vf(ChartMap::identity(plane()), dx) == dx);
    CHECK(pushforward_vf(dbl, dx) == dx * Scalar(2));
    CHECK_THROWS_AS(pushforward_vf(ChartMap(plane(), plane(), {S("x"), S("x+y")}), dx), PreconditionFailed);
    CHECK_THROWS_AS(ChartMap(plane(), plane(), {S("x"), S("y")}).with_inverse({S("y"), S("x")}), PreconditionFailed);

    // nonlinear map: functoriality and bracket intertwining
    ChartMap shear(plane(), plane(), {S("x + y^2"), S("y")});
    shear.with_inverse({S("x - y^2"), S("y")});
    ChartMap both = shear.compose(dbl);
    CHECK(pullback(both, w) == pullback(dbl, pullback(shear, w)));
    VectorField a = vf(plane(), {S("y"), S("x*y")}), b = vf(plane(), {S("1"), S("y^2")});
    CHECK(pushforward_vf(shear, lie_bracket_vf(a, b)) == lie_bracket_vf(pushforward_vf(shear, a), pushforward_vf(shear, b)));
    CHECK(pushforward_vf(both, a) == pushforward_vf(shear, pushforward_vf(dbl, a)));
    CHECK(to_vector_field(pushforward(shear, to_multivector(a))) == pushforward_vf(shear, a));
}

TEST_CASE("sharp compatibility") {
    Multivector pl = pi2("2*y^2"), ps = pi2("2*y*(y+1)");
    auto r1 = sharp_compat_check(pl, f1(plane(), {S("1/y"), 0}));
    CHECK_MESSAGE(r1.passed(), r1.checks[0].detail);
    CHECK(sharp_compat_check(Multivector(plane(), 2), f1(plane(), {S("1/y"), 0})).passed());
    auto r2 = sharp_compat_check(ps, Form::basis(plane(), {"x"}));
    CHECK_MESSAGE(r2.passed(), r2.checks[0].detail);
    CHECK(sharp_compat_check(ps, Form::scalar(plane(), S("x^2*y"))).passed());

    Multivector so3 = bivector(space(), "x", "y", S("z")) + bivector(space(), "y", "z", S("x")) +
                      bivector(space(), "z", "x", S("y"));
    auto r3 = sharp_compat_check(so3, one_form(space(), {S("y*z"), S("x"), S("1/(z+1)")}));
    CHECK_MESSAGE(r3.passed(), r3.checks[0].detail);
    auto r4 = sharp_compat_check(so3, wedge(Form::basis(space(), {"x"}, S("y")), Form::basis(space(), {"z"})));
    CHECK_MESSAGE(r4.passed(), r4.checks[0].detail);
}
