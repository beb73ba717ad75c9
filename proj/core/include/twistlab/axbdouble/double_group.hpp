#pragma once

#include "twistlab/exprcas/sampling.hpp"
#include "twistlab/exprcas/scalar.hpp"
#include "twistlab/liebialg/lie_algebra.hpp"
#include "twistlab/poissongeom/geometry.hpp"
#include "twistlab/report.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace twistlab::axbdouble {

using exprcas::Scalar;
using poissongeom::Chart;
using poissongeom::Form;
using poissongeom::Multivector;
using poissongeom::VectorField;

// (a, v_E E + v_F F, z) in the model R x V x R of the double group.
struct DoubleElt {
    Scalar a, vE, vF, z;

    std::array<Scalar, 4> components() const { return {a, vE, vF, z}; }
    std::string str() const;
    friend bool operator==(const DoubleElt&, const DoubleElt&) = default;
};

DoubleElt double_unit();
// (a,v,z)(a',v',z') = (a+a', v + e^{2aB}v', z + z' + Omega(v, e^{2aB}v')/2),
// B = diag(1,-1), Omega(E,F) = 1.
DoubleElt double_mul(const DoubleElt& g, const DoubleElt& h);
DoubleElt double_inverse(const DoubleElt& g);
// Closed form; a0 must be zero or a rational linear form (NotInClass otherwise).
DoubleElt double_exp(const DoubleElt& xi);
// Taylor coefficients of t -> exp(t xi) for rational xi, orders 0..order.
std::vector<DoubleElt> double_exp_series(const DoubleElt& xi, int order);

// (a, n) = exp(aH) exp(nE)
struct SElt {
    Scalar a, n;
    friend bool operator==(const SElt&, const SElt&) = default;
};
SElt s_group_mul(const SElt& s, const SElt& t);
DoubleElt embed_s(const SElt& s);

// Point of S*: kappa and eta = e^{-2 nu} - 1, with nu itself when known.
// Eta chart (x, y) = (kappa, eta); dressing chart (x, y) = (kappa, -eta).
struct SStarElt {
    Scalar kappa, eta;
    std::optional<Scalar> nu;

    static SStarElt from_nu(const Scalar& nu, const Scalar& kappa);
    static SStarElt from_eta_chart(const Scalar& x, const Scalar& y) { return {x, y, std::nullopt}; }
    static SStarElt from_dressing_chart(const Scalar& x, const Scalar& y) { return {x, -y, std::nullopt}; }
    Scalar y_eta() const { return eta; }
    Scalar y_dressing() const { return -eta; }
};
// Needs nu.
DoubleElt embed_sstar(const SStarElt& xi);

using ChartPoint = std::array<Scalar, 2>;
// S* law in the eta chart: ((y'+1)x + x', (y'+1)y + y').
ChartPoint sstar_group_mul(const ChartPoint& p, const ChartPoint& q);
// (-x, -y)/(y+1); NotInImage on y = -1.
ChartPoint sstar_inverse(const ChartPoint& p);

// d = embed_sstar(xi) embed_s(s).
struct Decomposition {
    SStarElt xi;
    std::optional<Scalar> a;  // when log(e^{2a}) is in the expression class
    Scalar exp2a, n;
    SElt s() const;  // PreconditionFailed without a
};
// NotInImage on the locus e^{-2nu} = 0 (y = -1).
Decomposition decompose(const DoubleElt& d);

Chart dressing_chart();
Chart eta_chart();

// Closed form in the dressing chart: (x + n y, e^{-2a} y).
ChartPoint dressing_action(const ChartPoint& p, const SElt& s);
// Derives the action from decompose(embed_s(s) embed_sstar(xi)) and compares
// with the closed form and the displayed solve; records the x-sign and both
// action-axiom readings.
VerificationReport dressing_action_check();

// l_X = d/dt act(p, exp tX) at t = 0.
std::pair<VectorField, VectorField> dressing_fundamental_fields();
VectorField dressing_field_of(const std::string& generator);  // "H" or "E"

struct PoissonStructures {
    Multivector pi_star, pi_lambda, pi_lin;
};
// pi_lambda from r and the fundamental fields; pi_star the printed 2y(y+1).
PoissonStructures poisson_structures();
// sum_{i<j} r^{ij} l_i ^ l_j
Multivector pi_from_r(const liebialg::Tensor& r, const std::vector<VectorField>& fields);

struct DressingGeneratorSet {
    std::string name;
    std::string tag;  // "pi_star" or "pi_lambda"
    std::map<std::string, Form> alpha;
};
DressingGeneratorSet star_generators();          // +dx/(y+1), dy/(2(y+1))
DressingGeneratorSet star_generators_printed();  // -dx/(y+1), dy/(2(y+1))
DressingGeneratorSet lambda_generators();        // dx/y, dy/(2y)
const Multivector& tagged_structure(const DressingGeneratorSet& g);

// Sign s in l_{[X,Y]} = s [l_X, l_Y]: the fundamental fields are an
// anti-homomorphism.
constexpr int kFieldBracketSign = -1;

// DressShift, AlgMorph (bracket of the given structure, relative to
// kFieldBracketSign) and MC (one global constant fixed by H, then required
// for E) per basis element.
VerificationReport verify_dressing_generator(const DressingGeneratorSet& alpha, const Multivector& pi);

// Seeded sample suites.
VerificationReport double_group_suite(std::uint64_t seed, int samples);
VerificationReport poisson_suite();
VerificationReport dressing_generator_suite();

}  // namespace twistlab::axbdouble
