#include "doctest.h"

#include "twistlab/errors.hpp"
#include "twistlab/liebialg/lie_algebra.hpp"

using namespace twistlab;
using namespace twistlab::liebialg;

namespace {

Tensor B(const LieAlgebra& g, const char* l) { return Tensor::basis(g, l); }

}  // namespace

TEST_CASE("brackets of the shipped algebras") {
    LieAlgebra s = build_axb();
    CHECK(bracket(B(s, "H"), B(s, "E")) == B(s, "E") * 2);
    CHECK(bracket(B(s, "H"), B(s, "H")).is_zero());
    LieAlgebra sd = fixture("axb_dual");
    CHECK(bracket(B(sd, "H*"), B(sd, "E*")) == B(sd, "H*") * -2);

    LieAlgebra d = build_double_axb();
    CHECK(bracket(B(d, "bH"), B(d, "H")) == (B(d, "bH") - B(d, "H")) * 2);
    CHECK(bracket(B(d, "E"), B(d, "bE")).is_zero());
    CHECK(bracket(B(d, "H"), B(d, "bE")) == B(d, "E") * 2);
    CHECK(bracket(B(d, "E"), B(d, "bH")) == B(d, "bE") * -2);
    CHECK(bracket(B(d, "bH"), B(d, "bE")) == B(d, "bE") * 2);
    CHECK_THROWS_AS(bracket(B(s, "H"), B(d, "E")), BasisMismatch);
}

TEST_CASE("jacobi") {
    CHECK(jacobi_check(build_axb()).passed());
    CHECK(jacobi_check(fixture("axb_dual")).passed());
    CHECK(jacobi_check(build_double_axb()).passed());

    // [H,E] = 3E with the mixed brackets of the double left alone
    auto triples = build_double_axb().triples();
    for (auto& t : triples)
        if (t.i == 0 && t.j == 1 && t.k == 1) t.c = 3;
    LieAlgebra bad = LieAlgebra::from_triples("tampered", build_double_axb().basis(), triples);
    auto rep = jacobi_check(bad);
    CHECK_FALSE(rep.passed());
    CHECK(rep.checks.size() >= 1);
}

TEST_CASE("heisenberg subalgebra of the double") {
    auto rep = double_heisenberg_check(build_double_axb());
    CHECK(rep.passed());
    CHECK(rep.value("z_scale") == "1");
}

TEST_CASE("cobracket from r = H^E") {
    LieAlgebra s = build_axb();
    Tensor r = r_matrix_axb(s);
    CHECK(r.is_alternating());
    CHECK(r.str() == "H^E");
    Tensor HE = Tensor::wedge(B(s, "H"), B(s, "E"));
    CHECK(cobracket(r, B(s, "H")) == HE * -2);
    CHECK(cobracket(r, B(s, "E")).is_zero());
    CHECK(cobracket(r, B(s, "H") + B(s, "E")) == HE * -2);
    CHECK(cobracket(r, B(s, "H")).str() == "-2 H^E");
    CHECK(cobracket_cocycle_check(r).passed());
}

TEST_CASE("classical Yang-Baxter") {
    LieAlgebra s = build_axb();
    CHECK(schouten_cybe(r_matrix_axb(s)).is_zero());
    CHECK(schouten_cybe(Tensor(s, 2)).is_zero());

    LieAlgebra d = build_double_axb();
    Tensor rd = r_matrix_axb(d);
    Tensor v = schouten_cybe(rd);
    CHECK(v == schouten_cybe_bruteforce(rd));
    // H^E spans a subalgebra, so the value vanishes inside the double too
    CHECK(v.is_zero());

    Tensor r2 = Tensor::wedge(B(d, "H"), B(d, "bE")) + Tensor::wedge(B(d, "E"), B(d, "bH"));
    Tensor w = schouten_cybe(r2);
    CHECK(w == schouten_cybe_bruteforce(r2));
    CHECK_FALSE(w.is_zero());
    CHECK(w.is_alternating());
}

TEST_CASE("dual algebra") {
    LieAlgebra s = build_axb();
    auto delta = cobracket_table(r_matrix_axb(s));
    LieAlgebra sd = dual_algebra(s, delta);
    CHECK(sd.basis() == std::vector<std::string>{"H*", "E*"});
    CHECK(sd.c(0, 1, 0) == -2);
    CHECK(sd.c(0, 1, 1) == 0);
    CHECK(sd.same_as(fixture("axb_dual")));

    std::vector<Tensor> zero(2, Tensor(s, 2));
    LieAlgebra ab = dual_algebra(s, zero);
    CHECK(ab.triples().empty());

    std::vector<Tensor> scaled;
    for (auto& t : delta) scaled.push_back(t * 3);
    CHECK(dual_algebra(s, scaled).c(0, 1, 0) == -6);

    // re-dualization returns the original constants
    LieAlgebra back = dual_algebra(sd, transpose_cobracket(s));
    CHECK(back.basis() == s.basis());
    CHECK(back.triples().size() == s.triples().size());
    CHECK(back.c(0, 1, 1) == s.c(0, 1, 1));
}

TEST_CASE("flat map intertwines brackets") {
    // bH = E*, bE = -H*
    std::vector<std::vector<Rational>> flat = {{0, 1}, {-1, 0}};
    CHECK(bracket_intertwine_check(build_axb(), fixture("axb_dual"), flat).passed());
    std::vector<std::vector<Rational>> wrong = {{1, 0}, {0, 1}};
    CHECK_FALSE(bracket_intertwine_check(build_axb(), fixture("axb_dual"), wrong).passed());
}

TEST_CASE("fixture round trip") {
    for (const auto& name : fixture_names()) {
        LieAlgebra g = fixture(name);
        CHECK(LieAlgebra::from_json(g.to_json()).same_as(g));
    }
    CHECK_THROWS_AS(fixture("nope"), Error);
}
