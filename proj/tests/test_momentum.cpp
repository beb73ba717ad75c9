#include "twistlab/momentum/momentum.hpp"

#include <doctest.h>

using namespace twistlab;
using namespace twistlab::momentum;

namespace {

Scalar c(const char* n) { return Scalar::coord(n); }

std::string failures(const VerificationReport& r) {
    std::string out;
    for (const auto& ch : r.checks)
        if (!ch.passed) out += ch.name + ": " + ch.detail + "\n";
    return out;
}

const std::vector<Scalar>& fns() {
    static const std::vector<Scalar> f{c("x"), c("y"), c("x") * c("y")};
    return f;
}

}  // namespace

TEST_CASE("coadjoint data") {
    HopfAction co = coadjoint_fields();
    CHECK(co.field(0).str() == "-2*xiE*d_xiE");
    CHECK(co.field(1).str() == "2*xiE*d_xiH");
    CHECK(co.side() == quantizeudf::ModuleSide::Right);
    CHECK(coadjoint_coaction().side() == quantizeudf::ModuleSide::Left);
    CHECK(pi_r().str() == "4*xiE^2*d_xiH^d_xiE");
    CHECK(coadjoint_rep("H", {1, 0}) == std::vector<Scalar>{0, 0});
}

TEST_CASE("j and Exp") {
    Scalar h = c("xiH"), e = c("xiE");
    CHECK(j_map(h, e) == axbdouble::DoubleElt{0, 0, -e, -h / Scalar(2)});
    auto p = exp_modified(h, e);
    CHECK(p[0] == h);
    CHECK(p[1] == Scalar(2) * e);
    MomentumMap J = exp_momentum_map();
    CHECK(J.J.has_inverse());
    VerificationReport r = exp_intertwining_check(3, 10);
    CHECK_MESSAGE(r.passed(), failures(r));
}

TEST_CASE("dressing is Hamiltonian with J = id") {
    auto ps = axbdouble::poisson_structures();
    HopfAction lam = quantizeudf::dressing_hopf_action();
    auto cert = certify(identity_momentum_map(), lam, ps.pi_lambda, quantizeudf::dressing_coaction(),
                        ueahopf::jordanian_twist(liebialg::build_axb(), 2), 2);
    CHECK(cert.hamiltonian());
    CHECK_MESSAGE(cert.poisson_map.passed(), failures(cert.poisson_map));
    CHECK_MESSAGE(cert.poisson_action.passed(), failures(cert.poisson_action));
    CHECK_MESSAGE(cert.quantum.passed(), failures(cert.quantum));
}

TEST_CASE("mutations") {
    auto ps = axbdouble::poisson_structures();
    HopfAction lam = quantizeudf::dressing_hopf_action();
    CHECK_FALSE(check_ell_equivariance(scaled_momentum_map(), lam, fns()).passed());
    CHECK_FALSE(check_poisson_map(scaled_momentum_map(), ps.pi_lambda, ps.pi_lambda).passed());
    CHECK_FALSE(check_momentum_condition(constant_momentum_map(), lam, ps.pi_lambda, axbdouble::lambda_generators()).passed());
    CHECK(check_ell_equivariance(shifted_momentum_map(), lam, fns()).passed());
    CHECK(check_poisson_map(shifted_momentum_map(), ps.pi_lambda, ps.pi_lambda).passed());
    CHECK_FALSE(check_ell_equivariance(exp_scaled_momentum_map(), coadjoint_fields(), fns()).passed());

    auto q = quantum_momentum_check(scaled_momentum_map(), lam, quantizeudf::dressing_coaction(),
                                    ueahopf::jordanian_twist(liebialg::build_axb(), 2), 2);
    REQUIRE(q.first_failing_order());
    CHECK(*q.first_failing_order() == 1);
}

TEST_CASE("r sharp does not intertwine") {
    VerificationReport r = rsharp_intertwine_check();
    CHECK_FALSE(r.passed());
    CHECK(r.value("adjoint certificate") == std::optional<std::string>("not produced"));
}

TEST_CASE("suites") {
    VerificationReport cl = classical_suite(11);
    CHECK_MESSAGE(cl.passed(), failures(cl));
    CHECK(cl.value("r^# intertwines ad and ad*") == std::optional<std::string>("no"));
    CHECK(cl.value("mutation scaled (x, 2y): verdict") == std::optional<std::string>("fail/fail"));
    CHECK(cl.value("mutation shifted (x + 1, y): verdict") == std::optional<std::string>("pass/pass"));
    VerificationReport qu = quantum_suite(2, 11);
    CHECK_MESSAGE(qu.passed(), failures(qu));
}
