#pragma once

#include "twistlab/exprcas/sampling.hpp"
#include "twistlab/exprcas/scalar.hpp"
#include "twistlab/liebialg/lie_algebra.hpp"
#include "twistlab/poissongeom/geometry.hpp"
#include "twistlab/report.hpp"
#include "twistlab/ueahopf/uea.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

namespace twistlab::quantizeudf {

using exprcas::Scalar;
using liebialg::LieAlgebra;
using poissongeom::Chart;
using poissongeom::Multivector;
using poissongeom::VectorField;
using ueahopf::TwistSeries;
using ueahopf::UEA;

using SSeries = ueahopf::HSeries<Scalar>;

// Left module: act(uv, f) = act(u, act(v, f)). Right module: act(uv, f) = act(v, act(u, f)).
enum class ModuleSide { Left, Right };

// Generators act by Lie derivative along their fields. The side is whichever
// makes act a representation: fields closing as a homomorphism give a left
// module, as an anti-homomorphism a right module.
class HopfAction {
public:
    HopfAction() = default;
    // PreconditionFailed when the fields close under neither sign.
    HopfAction(std::string name, LieAlgebra g, std::vector<VectorField> fields);

    const std::string& name() const { return name_; }
    const LieAlgebra& algebra() const { return g_; }
    const Chart& chart() const { return fields_.at(0).chart(); }
    const std::vector<VectorField>& fields() const { return fields_; }
    const VectorField& field(int i) const { return fields_.at(i); }
    ModuleSide side() const { return side_; }

private:
    std::string name_;
    LieAlgebra g_;
    std::vector<VectorField> fields_;
    ModuleSide side_ = ModuleSide::Left;
};

// PBW monomials of one function under an action, memoized on partial words.
class ActCache {
public:
    ActCache(const HopfAction& action, Scalar f);
    const Scalar& monomial(const ueahopf::Multidegree& m);
    Scalar apply(const UEA& u);  // rank 1

private:
    const Scalar& sequence(const std::vector<int>& seq);
    HopfAction action_;
    std::map<std::vector<int>, Scalar> memo_;
};

Scalar act(const HopfAction& action, const UEA& u, const Scalar& f);
// act(uv, f) against act(u, act(v, f)) (left) or act(v, act(u, f)) (right)
// on every pair of PBW monomials of total degree <= max_degree.
VerificationReport representation_check(const HopfAction& action, const std::vector<Scalar>& functions, int max_degree);

Chart s_chart();  // (a, n)
// Lambda: dressing fields on the dressing chart.
HopfAction dressing_hopf_action();
// Left-invariant fields X^L f(s) = d/dt f(s exp tX) on the (a, n) chart.
HopfAction left_invariant_action(const std::string& a = "a", const std::string& n = "n");

// f * g = m(T |> (f (x) g)) with T = F^{-1} on left modules and T = F on
// right modules, natural leg order.
class StarProduct {
public:
    StarProduct(TwistSeries F, HopfAction action, int order);

    int order() const { return order_; }
    const HopfAction& action() const { return action_; }
    const TwistSeries& twist() const { return F_; }
    const TwistSeries& applied() const { return T_; }

    SSeries operator()(const Scalar& f, const Scalar& g) const;
    SSeries operator()(const SSeries& f, const SSeries& g) const;

    // Bidifferential terms of f * g before multiplication: (order, coef, T1 f, T2 g).
    struct Term {
        int order;
        ueahopf::Rational coef;
        Scalar left, right;
    };
    std::vector<Term> terms(const Scalar& f, const Scalar& g) const;

private:
    TwistSeries F_, T_;
    HopfAction action_;
    int order_;
};

SSeries star_udf(const TwistSeries& F, const HopfAction& action, const Scalar& f, const Scalar& g, int order);

// (f*g)*h - f*(g*h) per order on every triple.
VerificationReport assoc_check(const StarProduct& star, const std::vector<Scalar>& functions);
// f*1 = 1*f = f and order 0 = f g.
VerificationReport unit_check(const StarProduct& star, const std::vector<Scalar>& functions);

// (f*g - g*f)_1 = s c {f, g}_pi on all pairs, s = +1 for right modules and
// -1 for left modules (F^{-1} enters at first order).
VerificationReport semiclassical_check(const StarProduct& star, const Multivector& pi, const ueahopf::Rational& c,
                                       const std::vector<Scalar>& functions);

// <X_1...X_k, f> = (X_1^L ... X_k^L f)(e) on the (a, n) chart; constant result required.
mpq_class pairing(const UEA& u, const Scalar& f);
// Pairing in the copy (a, n) of the group coordinates; other symbols are kept.
Scalar pair_partial(const UEA& u, const Scalar& f, const std::string& a, const std::string& n);

// gamma(f (x) g) = <F^a, f><F_a, g> per order, on the (a, n) chart.
SSeries gamma_eval(const TwistSeries& F, const Scalar& f, const Scalar& g);
// Both sides of the 2-cocycle identity
// sum gamma(f1, g1) gamma(f2 g2, h) = sum gamma(g1, h1) gamma(f, g2 h2).
std::pair<SSeries, SSeries> gamma_cocycle_sides(const TwistSeries& F, const Scalar& f, const Scalar& g, const Scalar& h);

// Product s t of the ax+b group in arbitrary coordinate names.
std::pair<Scalar, Scalar> s_mul(const Scalar& a1, const Scalar& n1, const Scalar& a2, const Scalar& n2);

// m^gamma(f (x) g)(h) = <F legs on k> <F^{-1} legs on k'> f(k h k') g(k h k').
SSeries m_gamma(const TwistSeries& F, const Scalar& f, const Scalar& g);
// <D_F X, f (x) g> and <X, m^gamma(f (x) g)> per order.
std::pair<SSeries, SSeries> mgamma_duality_sides(const TwistSeries& F, const UEA& x, const Scalar& f, const Scalar& g);

// Action map A : M x S -> M as chart expressions in the M coordinates and
// the group coordinates (g_a, g_n). Left: A(A(p, s'), s) = A(p, s s'); right: A(A(p, s), s') = A(p, s s').
class Coaction {
public:
    Coaction() = default;
    // PreconditionFailed when neither axiom holds.
    Coaction(std::string name, Chart m, std::vector<Scalar> action);

    const std::string& name() const { return name_; }
    const Chart& chart() const { return m_; }
    const std::vector<Scalar>& action() const { return A_; }
    ModuleSide side() const { return side_; }
    // f(A(p, s)) with s in the coordinates (a, n).
    Scalar pullback(const Scalar& f, const std::string& a = "g_a", const std::string& n = "g_n") const;
    // Restricting the group leg to the unit returns f.
    bool counit_law(const Scalar& f) const;

private:
    std::string name_;
    Chart m_;
    std::vector<Scalar> A_;
    ModuleSide side_ = ModuleSide::Left;
};

Coaction dressing_coaction();
Coaction right_regular_coaction();  // A(p, s) = p s on the (a, n) chart
Coaction left_regular_coaction();   // A(p, s) = s p

// Deformation through the coaction: twist legs act as left-invariant
// operators on the group slot of f(A(p, .)), g(A(p, .)), evaluated at e.
// Left actions pair with gamma (F), right actions with gamma^{-1}.
SSeries star_cocycle(const TwistSeries& F, const Coaction& coaction, const Scalar& f, const Scalar& g, int order);

// delta(f*g) = delta f * delta g in (M, *) (x) (S, m^gamma), per order.
VerificationReport deformed_comodule_check(const StarProduct& star, const Coaction& coaction,
                                           const std::vector<std::pair<Scalar, Scalar>>& pairs);

// F with H^2 (x) E added at order 2.
TwistSeries corrupt_order2(const TwistSeries& F);

// Monomials x^i y^j with i + j <= deg on the first two coordinates of a chart.
std::vector<Scalar> monomials(const Chart& chart, int deg);

// Print "c0 + hbar*(c1) + hbar^2*(c2)", zero orders dropped.
std::string series_str(const SSeries& s);

// Seeded suites.
VerificationReport udf_suite(int order);
VerificationReport duality_suite(int order, std::uint64_t seed);

}  // namespace twistlab::quantizeudf
