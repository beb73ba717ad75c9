#pragma once

#include "twistlab/liebialg/lie_algebra.hpp"
#include "twistlab/report.hpp"
#include "twistlab/ueahopf/hseries.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace twistlab::ueahopf {

using liebialg::LieAlgebra;
using Rational = mpq_class;

using Word = std::vector<int>;         // letters as basis indices
using Multidegree = std::vector<int>;  // exponent of each basis element, basis order

// Element of U(g)^{(x)rank} in the PBW basis. A term key concatenates one
// multidegree per leg. The default value is a zero that adopts the algebra
// and rank of whatever it is combined with.
class UEA {
public:
    using Key = std::vector<std::int16_t>;

    UEA() = default;
    UEA(LieAlgebra g, int rank);

    static UEA one(const LieAlgebra& g, int rank = 1);
    static UEA generator(const LieAlgebra& g, int i);
    static UEA generator(const LieAlgebra& g, const std::string& label) { return generator(g, g.index(label)); }
    static UEA monomial(const LieAlgebra& g, const Multidegree& m, const Rational& c = 1);
    // Product of letters, PBW-normalized.
    static UEA word(const LieAlgebra& g, const Word& w);
    static UEA tensor(const UEA& a, const UEA& b);
    static UEA scalar(const LieAlgebra& g, const Rational& c, int rank = 1);

    const LieAlgebra& algebra() const { return g_; }
    int rank() const { return rank_; }
    bool is_zero() const { return t_.empty(); }
    bool has_algebra() const { return g_.valid(); }
    const std::map<Key, Rational>& terms() const { return t_; }
    Rational coeff(const std::vector<Multidegree>& legs) const;
    Multidegree leg_degree(const Key& k, int leg) const;
    // Coefficient of the unit of every leg.
    Rational unit_coeff() const;

    void add(const Key& k, const Rational& c);

    UEA operator+(const UEA& o) const;
    UEA operator-(const UEA& o) const;
    UEA operator-() const { return *this * Rational(-1); }
    UEA operator*(const UEA& o) const;  // leg-wise product
    UEA operator*(const Rational& s) const;
    friend UEA operator*(const Rational& s, const UEA& u) { return u * s; }
    friend bool operator==(const UEA& a, const UEA& b);

    // Legs permuted: result leg p is input leg perm[p].
    UEA permuted(const std::vector<int>& perm) const;
    UEA flipped() const { return permuted({1, 0}); }

    // "H^2*E", "1/2*H(x)E", "1(x)1".
    std::string str() const;

private:
    void adopt(const UEA& o);
    LieAlgebra g_;
    int rank_ = 0;
    std::map<Key, Rational> t_;
};

// Normal form of a product of letters.
UEA pbw_normalize(const LieAlgebra& g, const Word& w);
// Every normal form reachable by rewriting adjacent inversions in any order;
// a confluent system yields exactly one.
std::vector<UEA> pbw_normalize_all_orders(const LieAlgebra& g, const Word& w);

// Hopf structure, extended leg-wise. `leg` selects the tensor factor.
UEA coproduct(const UEA& u, int leg = 0);
UEA counit(const UEA& u, int leg = 0);  // drops one leg
UEA antipode(const UEA& u, int leg = 0);
UEA multiply_legs(const UEA& u, int leg = 0);  // legs (leg, leg+1) -> one leg
// Inserts the unit as a new leg at position `leg`.
UEA insert_unit(const UEA& u, int leg);
Rational counit_value(const UEA& u);  // rank 1

using USeries = HSeries<UEA>;

USeries constant_series(const UEA& u, int order);
USeries series_one(const LieAlgebra& g, int rank, int order);
// Applies a leg-wise linear map to every coefficient.
template <class F>
USeries series_map(const USeries& s, F&& f) {
    USeries r(s.order());
    for (int k = 0; k <= s.order(); ++k) r[k] = f(s[k]);
    return r;
}
USeries series_tensor(const USeries& a, const USeries& b);
// Throws PreconditionFailed when the order-0 term is not an invertible
// multiple of the unit.
USeries series_invert(const USeries& f);

// Twist F = 1(x)1 + sum h^k F_k, rank-2 coefficients.
using TwistSeries = USeries;

// Cocycle (F(x)1)(D(x)id)F = (1(x)F)(id(x)D)F and both counit conditions,
// per order; reports the first failing order.
VerificationReport twist_check(const TwistSeries& F);

// D_F(u) = F D(u) F^{-1}
USeries twisted_coproduct(const TwistSeries& F, const USeries& u);
// D_F applied on one leg of a rank-k series.
USeries twisted_coproduct_leg(const TwistSeries& F, const USeries& x, int leg);

struct Semiclassical {
    liebialg::Tensor r;  // F_1 - flip(F_1), degree-2 part
    bool in_g_tensor_g = true;
    std::string detail;
};
Semiclassical twist_semiclassical(const TwistSeries& F);
// c with t = c * ref, when it exists.
std::optional<Rational> proportionality(const liebialg::Tensor& t, const liebialg::Tensor& ref);

// exp(1/2 H (x) log(1 + h E)) on a basis containing H and E.
TwistSeries jordanian_twist(const LieAlgebra& g, int order);

struct TwistedAntipode {
    USeries u;      // u_F = F^a S(F_a)
    USeries u_inv;
    // S_F(x) = u_F S(x) u_F^{-1}
    USeries apply(const USeries& x) const;
};
TwistedAntipode twisted_antipode_data(const TwistSeries& F);

// Coassociativity, counit and antipode axioms of (D_F, eps, S_F) on the given
// rank-1 test elements, and D_F multiplicativity on their pairwise products.
VerificationReport twisted_hopf_check(const TwistSeries& F, const std::vector<UEA>& elements);

// Hopf axioms of (D, eps, S) on every PBW monomial of degree <= max_degree.
VerificationReport hopf_axioms_check(const LieAlgebra& g, int max_degree);

std::string twist_to_json(const TwistSeries& F);
TwistSeries twist_from_json(const LieAlgebra& g, const std::string& text);

std::string series_str(const USeries& s);

}  // namespace twistlab::ueahopf
