#pragma once

#include <boost/rational.hpp>
#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// boost 1.74's mixed rational/int operator== recurses under C++20 rewritten
// comparisons; an exact non-template overload takes precedence.
namespace boost {
inline bool operator==(const rational<std::int64_t>& a, int b) { return a.denominator() == 1 && a.numerator() == b; }
}  // namespace boost

namespace twistlab::exprcas {

using Exponent = boost::rational<std::int64_t>;

// Interned variable. A Coord symbol is a chart coordinate c; an Exp symbol is
// the primitive atom e^c of that coordinate (its powers may be rational).
class Symbol {
public:
    enum class Kind : std::uint8_t { Coord = 0, Exp = 1 };

    Symbol() = default;
    static Symbol coord(std::string_view name);
    static Symbol exp_of(std::string_view name);

    const std::string& name() const { return *name_; }
    Kind kind() const { return kind_; }
    bool is_exp() const { return kind_ == Kind::Exp; }

    friend bool operator==(Symbol a, Symbol b) { return a.name_ == b.name_ && a.kind_ == b.kind_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b);

private:
    Symbol(const std::string* n, Kind k) : name_(n), kind_(k) {}
    const std::string* name_ = nullptr;
    Kind kind_ = Kind::Coord;
};

struct Factor {
    Symbol sym;
    Exponent exp;
    friend bool operator==(const Factor&, const Factor&) = default;
};

// Sorted by symbol, no zero exponents.
class Monomial {
public:
    Monomial() = default;
    static Monomial of(Symbol s, Exponent e = 1);

    const std::vector<Factor>& factors() const { return f_; }
    bool is_one() const { return f_.empty(); }
    Exponent degree_of(Symbol s) const;
    int total_coord_degree() const;

    Monomial operator*(const Monomial& o) const;
    Monomial with(Symbol s, Exponent e) const;  // replaces the exponent of s
    bool divides(const Monomial& o) const;      // o / this has no negative coord exponents
    Monomial quotient(const Monomial& o) const; // o / this

    friend bool operator==(const Monomial&, const Monomial&) = default;
    // Lexicographic in symbol order; larger exponent on the first differing symbol wins.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);

private:
    std::vector<Factor> f_;
};

struct Term {
    Monomial mono;
    mpq_class coef;
};

// Sparse polynomial over Q in coordinates and exponential atoms, terms kept in
// strictly descending lex order. Atom exponents may be negative or rational.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(const mpq_class& c);
    static Polynomial monomial(const Monomial& m, const mpq_class& c = 1);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].mono.is_one()); }
    bool is_monomial() const { return t_.size() == 1; }
    mpq_class constant_value() const;  // requires is_constant
    const Term& leading() const { return t_.front(); }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const mpq_class& c) const;
    Polynomial times(const Monomial& m) const;
    Polynomial pow(unsigned k) const;

    Polynomial derivative(const std::string& coord) const;

    std::vector<Symbol> symbols() const;
    bool has_symbol(Symbol s) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    std::string str() const;

    static Polynomial from_terms(std::vector<Term> terms);  // sorts and merges

private:
    std::vector<Term> t_;
};

// Exact division; throws twistlab::Error when b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

// Multivariate gcd for polynomials with nonnegative integer exponents,
// normalized to leading coefficient 1.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

std::string format_exponent(const Exponent& e);

}  // namespace twistlab::exprcas
