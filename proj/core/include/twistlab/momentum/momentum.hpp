#pragma once

#include "twistlab/axbdouble/double_group.hpp"
#include "twistlab/poissongeom/geometry.hpp"
#include "twistlab/quantizeudf/udf.hpp"
#include "twistlab/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace twistlab::momentum {

using exprcas::Scalar;
using poissongeom::Chart;
using poissongeom::ChartMap;
using poissongeom::Multivector;
using poissongeom::VectorField;
using quantizeudf::Coaction;
using quantizeudf::HopfAction;

// J : M -> G* with G* in the dressing chart.
struct MomentumMap {
    std::string name;
    ChartMap J;
};

struct HamiltonianCertificate {
    VerificationReport momentum, equivariance, poisson_map, poisson_action, quantum;
    // momentum condition and equivariance both pass
    bool hamiltonian() const { return momentum.passed() && equivariance.passed(); }
};

// phi(X) = pi_M^#(J^* alpha_X) per generator.
VerificationReport check_momentum_condition(const MomentumMap& J, const HopfAction& phi, const Multivector& pi_m,
                                            const axbdouble::DressingGeneratorSet& alpha);
// phi(X)(J^* f) = J^*(l_X f) on the given functions of the dressing chart.
VerificationReport check_ell_equivariance(const MomentumMap& J, const HopfAction& phi, const std::vector<Scalar>& functions);
// dJ(pi_M^#(J^* a)) = pi_G*^#(a) o J for a in {dx, dy}.
VerificationReport check_poisson_map(const MomentumMap& J, const Multivector& pi_m, const Multivector& pi_g);
// L_{phi(X)} pi_M = (phi ^ phi)(delta X) per generator.
VerificationReport check_poisson_action(const HopfAction& phi, const Multivector& pi_m);
// Equivariance and Poisson-map verdicts agree.
VerificationReport poisson_eq_equivalence(const MomentumMap& J, const HopfAction& phi, const Multivector& pi_m,
                                          const Multivector& pi_g, const std::vector<Scalar>& functions);

// Coordinates (xiH, xiE) = (xi(H), xi(E)) on g*.
Chart coadjoint_chart();
// phi(X) = d/dt Ad*_{exp tX} xi at t = 0.
HopfAction coadjoint_fields();
// A(xi, s) = Ad*_s xi
Coaction coadjoint_coaction();
// pi_r = sum_{i<j} r^{ij} phi(X_i) ^ phi(X_j)
Multivector pi_r();
// xi o ad_X on the coordinate chart: (ad*_X xi)(Y) = -xi([X, Y]).
std::vector<Scalar> coadjoint_rep(const std::string& x, const std::vector<Scalar>& xi);

// j(xi) = xi - r(xi, .) in double coordinates (a, vE, vF, z), with
// E* = H - F, H* = -E - Z/2 and r(xi, .) = xi(E) H - xi(H) E.
axbdouble::DoubleElt j_map(const Scalar& xiH, const Scalar& xiE);
// Exp(xi) = pr_{G*} exp(j(xi)) in the dressing chart; NotInImage off the domain.
axbdouble::ChartPoint exp_modified(const Scalar& xiH, const Scalar& xiE);
MomentumMap exp_momentum_map();
MomentumMap identity_momentum_map();
// Mutations for the certificate tests.
MomentumMap scaled_momentum_map();    // (x, 2y)
MomentumMap constant_momentum_map();  // (0, 1)
MomentumMap shifted_momentum_map();   // (x + 1, y)
MomentumMap exp_scaled_momentum_map();  // (xiH, 4 xiE) on g*

// Exp_* phi(X) = l_X o Exp symbolically and at seeded rational points.
VerificationReport exp_intertwining_check(std::uint64_t seed, int samples);

// J(A_M(m, s)) = A_G*(J(m), s).
VerificationReport comodule_check(const Coaction& m, const Coaction& g, const MomentumMap& J);

// J^*(f *_l g) = J^* f *_phi J^* g per order on monomials x^i y^j, i+j <= 2,
// plus the comodule identity on every coefficient of f *_l g.
VerificationReport quantum_momentum_check(const MomentumMap& J, const HopfAction& phi, const Coaction& m_coaction,
                                          const ueahopf::TwistSeries& F, int order);

// r^#(ad*_X xi) = ad_X(r^# xi) on the ax+b basis, r^#(xi) = r(., xi).
VerificationReport rsharp_intertwine_check();

// Full certificate for one example.
HamiltonianCertificate certify(const MomentumMap& J, const HopfAction& phi, const Multivector& pi_m,
                               const Coaction& m_coaction, const ueahopf::TwistSeries& F, int order);

VerificationReport classical_suite(std::uint64_t seed);
VerificationReport quantum_suite(int order, std::uint64_t seed);

}  // namespace twistlab::momentum
