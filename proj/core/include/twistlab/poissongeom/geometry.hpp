#pragma once

#include "twistlab/exprcas/scalar.hpp"
#include "twistlab/report.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace twistlab::poissongeom {

using exprcas::Scalar;

class Chart {
public:
    Chart() = default;
    Chart(std::string name, std::vector<std::string> coords);  // throws PreconditionFailed if empty

    const std::string& name() const { return name_; }
    const std::vector<std::string>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()); }
    int index(const std::string& coord) const;  // UnknownCoordinate when absent
    Scalar coord(int i) const { return Scalar::coord(coords_.at(i)); }
    Scalar coord(const std::string& c) const { return coord(index(c)); }

    friend bool operator==(const Chart& a, const Chart& b) { return a.name_ == b.name_ && a.coords_ == b.coords_; }

private:
    std::string name_;
    std::vector<std::string> coords_;
};

// Throws ChartMismatch.
void require_same_chart(const Chart& a, const Chart& b, const char* what);

class VectorField {
public:
    VectorField() = default;
    explicit VectorField(Chart chart);
    VectorField(Chart chart, std::vector<Scalar> comps);
    static VectorField coordinate(const Chart& chart, const std::string& coord);

    const Chart& chart() const { return chart_; }
    const Scalar& operator[](int i) const { return c_.at(i); }
    const std::vector<Scalar>& components() const { return c_; }
    bool is_zero() const;

    // X(f)
    Scalar apply(const Scalar& f) const;

    VectorField operator+(const VectorField& o) const;
    VectorField operator-(const VectorField& o) const;
    VectorField operator-() const { return *this * Scalar(-1); }
    VectorField operator*(const Scalar& s) const;
    friend VectorField operator*(const Scalar& s, const VectorField& v) { return v * s; }
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.chart_ == b.chart_ && a.c_ == b.c_; }

    // "-2*y*d_y", "y*d_x"
    std::string str() const;

private:
    Chart chart_;
    std::vector<Scalar> c_;
};

using Index = std::vector<int>;

struct FormTag {};
struct MultivectorTag {};

// Alternating coefficients over strictly increasing coordinate tuples.
// Forms print on dx^dy, multivectors on d_x^d_y.
template <class Tag>
class Graded {
public:
    Graded() = default;
    Graded(Chart chart, int degree) : chart_(std::move(chart)), deg_(degree) {}

    static Graded scalar(const Chart& chart, const Scalar& f) {
        Graded g(chart, 0);
        g.add({}, f);
        return g;
    }
    // Basis element for the listed coordinates (any order, sign applied).
    static Graded basis(const Chart& chart, const std::vector<std::string>& coords, const Scalar& c = 1);

    const Chart& chart() const { return chart_; }
    int degree() const { return deg_; }
    const std::map<Index, Scalar>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    // Coefficient on an index tuple in any order; 0 on repeats.
    Scalar coeff(const Index& idx) const;
    Scalar coeff(const std::vector<std::string>& coords) const;
    void add(const Index& idx, const Scalar& c);

    Graded operator+(const Graded& o) const;
    Graded operator-(const Graded& o) const;
    Graded operator-() const { return *this * Scalar(-1); }
    Graded operator*(const Scalar& s) const;
    friend Graded operator*(const Scalar& s, const Graded& g) { return g * s; }
    friend bool operator==(const Graded& a, const Graded& b) {
        return a.chart_ == b.chart_ && (a.t_.empty() ? b.t_.empty() : a.deg_ == b.deg_ && a.t_ == b.t_);
    }

    std::string str() const;

private:
    Chart chart_;
    int deg_ = 0;
    std::map<Index, Scalar> t_;
};

using Form = Graded<FormTag>;
using Multivector = Graded<MultivectorTag>;
using OneForm = Form;

template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b);

Form one_form(const Chart& chart, const std::vector<Scalar>& comps);
Multivector bivector(const Chart& chart, const std::string& a, const std::string& b, const Scalar& c);
Multivector to_multivector(const VectorField& x);
VectorField to_vector_field(const Multivector& m);  // degree 1

VectorField lie_bracket_vf(const VectorField& x, const VectorField& y);

// d f as a one-form, and d on forms of any degree.
Form de_rham_d(const Chart& chart, const Scalar& f);
Form de_rham_d(const Form& w);
Form interior(const VectorField& x, const Form& w);
// Cartan: L_X w = i_X d w + d i_X w; X(f) in degree 0.
Form lie_derivative(const VectorField& x, const Form& w);

// Stored pairing pi(a, b) = sum pi^{ij} a_i b_j over all (i, j).
Scalar pi_pair(const Multivector& pi, const Form& a, const Form& b);
// Slot convention: pi^#(a) = pi(., a).
VectorField sharp(const Multivector& pi, const Form& a);
// a_1 ^ ... ^ a_p  ->  pi^#(a_1) ^ ... ^ pi^#(a_p), extended linearly.
Multivector wedge_sharp(const Multivector& pi, const Form& xi);

// [a,b]_pi = L_{pi^#a} b - L_{pi^#b} a - d <pi^#a, b>
Form koszul_bracket(const Multivector& pi, const Form& a, const Form& b);

// Super-commutator calculus: [X, f] = X(f), [X, Y] the vector field bracket.
Multivector schouten_bracket(const Multivector& p, const Multivector& q);

// {f, g} = pi(df, dg)
Scalar poisson_bracket(const Multivector& pi, const Scalar& f, const Scalar& g);

// [pi, pi^# xi] = (^2 pi^#)(d xi), generalized to p-forms.
VerificationReport sharp_compat_check(const Multivector& pi, const Form& xi);

// Smooth map source -> target given by target coordinates as Scalars over the
// source, with optional inverse expressions.
class ChartMap {
public:
    ChartMap() = default;
    ChartMap(Chart source, Chart target, std::vector<Scalar> exprs);
    static ChartMap identity(const Chart& chart);

    const Chart& source() const { return src_; }
    const Chart& target() const { return dst_; }
    const std::vector<Scalar>& exprs() const { return f_; }
    bool has_inverse() const { return inv_.has_value(); }
    const std::vector<Scalar>& inverse_exprs() const;

    // Throws PreconditionFailed unless both compositions are the identity.
    ChartMap& with_inverse(std::vector<Scalar> inverse);
    ChartMap inverse() const;

    // this o inner
    ChartMap compose(const ChartMap& inner) const;
    // Row i = gradient of target coordinate i.
    std::vector<std::vector<Scalar>> jacobian() const;
    Scalar apply_subs(const Scalar& f_on_target) const;  // f o J

    friend bool operator==(const ChartMap& a, const ChartMap& b) {
        return a.src_ == b.src_ && a.dst_ == b.dst_ && a.f_ == b.f_;
    }

private:
    Chart src_, dst_;
    std::vector<Scalar> f_;
    std::optional<std::vector<Scalar>> inv_;
};

Scalar pullback(const ChartMap& j, const Scalar& f);
Form pullback(const ChartMap& j, const Form& w);
// (Jacobian X) o J^{-1}; PreconditionFailed without an inverse.
VectorField pushforward_vf(const ChartMap& j, const VectorField& x);
Multivector pushforward(const ChartMap& j, const Multivector& m);

}  // namespace twistlab::poissongeom
