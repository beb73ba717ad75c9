#pragma once

#include "twistlab/exprcas/polynomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace twistlab::exprcas {

// Rational sample assignment. `coord` gives values of coordinates, `exp`
// gives independent values for the primitive atoms e^c.
struct Point {
    std::map<std::string, mpq_class> coord;
    std::map<std::string, mpq_class> exp;
};

// Canonical fraction num/den over Q in coordinates and exponential atoms.
// den has integer coprime coefficients, positive leading coefficient and
// minimal atom exponent 0; gcd(num, den) = 1 in the Laurent ring of atoms.
class Scalar {
public:
    Scalar() : den_(1) {}
    Scalar(long v) : num_(mpq_class(v)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Scalar(const mpq_class& v) : num_(v), den_(1) {}  // NOLINT(google-explicit-constructor)

    static Scalar coord(std::string_view name);
    // e^{L} for a homogeneous rational linear form L; NotInClass otherwise.
    static Scalar exp(const Scalar& linear_form);
    static Scalar fraction(const Polynomial& num, const Polynomial& den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const { return den_.is_constant(); }
    mpq_class constant_value() const;  // requires is_constant
    bool is_linear_form() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar pow(int k) const;

    Scalar diff(const std::string& coord) const;
    Scalar subs(const std::map<std::string, Scalar>& repl) const;
    mpq_class eval(const Point& p) const;

    // L when this equals e^{L} exactly, otherwise nothing.
    std::optional<Scalar> log_of_exp() const;

    std::vector<std::string> coordinates() const;  // coordinates and atom bases, sorted
    std::map<std::string, std::int64_t> root_orders() const;

    std::string str() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

private:
    // num/den already coprime and atom-free; only the scale is normalized.
    static Scalar from_coprime(const Polynomial& num, const Polynomial& den);
    Polynomial num_, den_;
};

inline Scalar differentiate(const Scalar& f, const std::string& c) { return f.diff(c); }
inline bool equals(const Scalar& f, const Scalar& g) { return f == g; }
inline mpq_class eval_at(const Scalar& f, const Point& p) { return f.eval(p); }

Scalar parse_scalar(std::string_view text);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace twistlab::exprcas
