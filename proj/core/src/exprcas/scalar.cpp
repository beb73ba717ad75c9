#include "twistlab/exprcas/scalar.hpp"

#include "twistlab/errors.hpp"

#include <numeric>
#include <ostream>

namespace twistlab::exprcas {

namespace {

std::int64_t to_i64(const mpz_class& z) {
    if (!z.fits_slong_p()) throw NotInClass("exponent does not fit in 64 bits");
    return z.get_si();
}

Exponent to_exponent(const mpq_class& q) { return Exponent(to_i64(q.get_num()), to_i64(q.get_den())); }

mpq_class exponent_to_mpq(const Exponent& e) {
    mpq_class q(static_cast<long>(e.numerator()), static_cast<long>(e.denominator()));
    q.canonicalize();
    return q;
}

struct AtomInfo {
    Exponent min_num = 0, min_den = 0;
    std::int64_t lcm = 1;
};

// Scales atom exponents: e -> (e - shift) * lcm, giving nonnegative integers.
Polynomial integerize(const Polynomial& p, const std::map<Symbol, AtomInfo>& info, bool is_num) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (const auto& f : t.mono.factors()) {
            if (!f.sym.is_exp()) {
                m = m * Monomial::of(f.sym, f.exp);
            }
        }
        for (const auto& [s, a] : info) {
            Exponent e = t.mono.degree_of(s) - (is_num ? a.min_num : a.min_den);
            m = m * Monomial::of(s, e * a.lcm);
        }
        out.push_back({m, t.coef});
    }
    return Polynomial::from_terms(std::move(out));
}

Polynomial deintegerize(const Polynomial& p, const std::map<Symbol, AtomInfo>& info) {
    std::vector<Term> out;
    out.reserve(p.terms().size());
    for (const auto& t : p.terms()) {
        Monomial m;
        for (const auto& f : t.mono.factors()) {
            if (f.sym.is_exp()) {
                m = m * Monomial::of(f.sym, f.exp / info.at(f.sym).lcm);
            } else {
                m = m * Monomial::of(f.sym, f.exp);
            }
        }
        out.push_back({m, t.coef});
    }
    return Polynomial::from_terms(std::move(out));
}

// Integer content normalization: coprime integer coefficients, positive lead.
mpq_class normalizer(const Polynomial& den) {
    mpz_class l = 1, g = 0;
    for (const auto& t : den.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coef.get_den_mpz_t());
    for (const auto& t : den.terms()) {
        mpz_class v = t.coef.get_num() * (l / t.coef.get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    mpq_class k(l, g);
    k.canonicalize();
    if (den.leading().coef < 0) k = -k;
    return k;
}

bool exact_root(const mpz_class& v, unsigned long q, mpz_class& out) {
    if (v < 0) {
        if (q % 2 == 0) return false;
        mpz_class pos = -v;
        if (!mpz_root(out.get_mpz_t(), pos.get_mpz_t(), q)) return false;
        out = -out;
        return true;
    }
    return mpz_root(out.get_mpz_t(), v.get_mpz_t(), q) != 0;
}

mpq_class power(const mpq_class& base, std::int64_t k) {
    if (k == 0) return 1;
    if (base == 0) {
        if (k < 0) throw PoleError("pole at point: zero raised to a negative power");
        return 0;
    }
    mpz_class n, d;
    unsigned long e = static_cast<unsigned long>(k < 0 ? -k : k);
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), e);
    mpq_class r = k < 0 ? mpq_class(d, n) : mpq_class(n, d);
    r.canonicalize();
    return r;
}

bool atom_free(const Polynomial& p) {
    for (const auto& t : p.terms())
        for (const auto& f : t.mono.factors())
            if (f.sym.is_exp()) return false;
    return true;
}

mpq_class eval_poly(const Polynomial& p, const Point& pt) {
    mpq_class sum = 0;
    for (const auto& t : p.terms()) {
        mpq_class v = t.coef;
        for (const auto& f : t.mono.factors()) {
            const auto& name = f.sym.name();
            if (f.sym.is_exp()) {
                auto it = pt.exp.find(name);
                if (it == pt.exp.end()) throw UnknownCoordinate("no sample value for exp(" + name + ")");
                mpz_class rn, rd;
                auto q = static_cast<unsigned long>(f.exp.denominator());
                if (!exact_root(it->second.get_num(), q, rn) || !exact_root(it->second.get_den(), q, rd))
                    throw PoleError("sample value for exp(" + name + ") has no exact root of order " +
                                    std::to_string(q));
                mpq_class root(rn, rd);
                root.canonicalize();
                v *= power(root, f.exp.numerator());
            } else {
                auto it = pt.coord.find(name);
                if (it == pt.coord.end()) throw UnknownCoordinate("no sample value for " + name);
                v *= power(it->second, f.exp.numerator());
            }
        }
        sum += v;
    }
    return sum;
}

}  // namespace

Scalar Scalar::coord(std::string_view name) {
    Scalar s;
    s.num_ = Polynomial::monomial(Monomial::of(Symbol::coord(name)));
    return s;
}

Scalar Scalar::exp(const Scalar& linear_form) {
    if (linear_form.is_zero()) return Scalar(1);
    if (!linear_form.is_linear_form()) throw NotInClass("exp() needs a homogeneous rational linear form, got " + linear_form.str());
    Monomial m;
    mpq_class scale = 1 / linear_form.den_.constant_value();
    for (const auto& t : linear_form.num_.terms()) {
        m = m * Monomial::of(Symbol::exp_of(t.mono.factors()[0].sym.name()), to_exponent(t.coef * scale));
    }
    Scalar s;
    s.num_ = Polynomial::monomial(m);
    return s;
}

Scalar Scalar::from_coprime(const Polynomial& num, const Polynomial& den) {
    Scalar s;
    if (num.is_zero()) return s;
    if (den.is_constant()) {
        s.num_ = num.scaled(1 / den.constant_value());
        return s;
    }
    mpq_class k = normalizer(den);
    s.num_ = num.scaled(k);
    s.den_ = den.scaled(k);
    return s;
}

Scalar Scalar::fraction(const Polynomial& num, const Polynomial& den) {
    if (den.is_zero()) throw DivisionByZero();
    Scalar s;
    if (num.is_zero()) return s;
    if (den.is_constant()) {
        s.num_ = num.scaled(1 / den.constant_value());
        return s;
    }

    std::map<Symbol, AtomInfo> info;
    auto scan = [&](const Polynomial& p) {
        for (const auto& t : p.terms())
            for (const auto& f : t.mono.factors())
                if (f.sym.is_exp()) info[f.sym];
    };
    scan(num);
    scan(den);
    for (auto& [sym, a] : info) {
        bool first_n = true, first_d = true;
        for (const auto& t : num.terms()) {
            Exponent e = t.mono.degree_of(sym);
            a.min_num = first_n ? e : std::min(a.min_num, e);
            first_n = false;
            a.lcm = std::lcm(a.lcm, e.denominator());
        }
        for (const auto& t : den.terms()) {
            Exponent e = t.mono.degree_of(sym);
            a.min_den = first_d ? e : std::min(a.min_den, e);
            first_d = false;
            a.lcm = std::lcm(a.lcm, e.denominator());
        }
    }
    Monomial unit;
    for (const auto& [sym, a] : info) unit = unit * Monomial::of(sym, a.min_num - a.min_den);

    Polynomial n = integerize(num, info, true);
    Polynomial d = integerize(den, info, false);
    if (d.is_monomial()) {
        // gcd with a monomial is the common coordinate monomial
        Monomial g;
        for (const auto& f : d.leading().mono.factors()) {
            Exponent m = f.exp;
            for (const auto& t : n.terms()) m = std::min(m, t.mono.degree_of(f.sym));
            if (m > 0) g = g * Monomial::of(f.sym, m);
        }
        if (!g.is_one()) {
            n = exact_divide(n, Polynomial::monomial(g));
            d = exact_divide(d, Polynomial::monomial(g));
        }
    } else {
        Polynomial g = poly_gcd(n, d);
        if (!g.is_constant()) {
            n = exact_divide(n, g);
            d = exact_divide(d, g);
        }
    }
    n = deintegerize(n, info).times(unit);
    d = deintegerize(d, info);
    if (d.is_constant()) {
        s.num_ = n.scaled(1 / d.constant_value());
        s.den_ = Polynomial(1);
        return s;
    }
    mpq_class k = normalizer(d);
    s.num_ = n.scaled(k);
    s.den_ = d.scaled(k);
    return s;
}

mpq_class Scalar::constant_value() const {
    if (!is_constant()) throw Error("constant_value of non-constant scalar " + str());
    return num_.constant_value() / den_.constant_value();
}

bool Scalar::is_linear_form() const {
    if (!den_.is_constant()) return false;
    for (const auto& t : num_.terms()) {
        const auto& fs = t.mono.factors();
        if (fs.size() != 1 || fs[0].sym.is_exp() || fs[0].exp != Exponent(1)) return false;
    }
    return true;
}

Scalar Scalar::operator+(const Scalar& o) const {
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    if (den_ == o.den_) {
        if (den_.is_constant()) {
            Scalar s;
            s.num_ = num_ + o.num_;
            return s;
        }
        if (atom_free(num_) && atom_free(den_) && atom_free(o.num_) && atom_free(o.den_)) {
            Polynomial t = num_ + o.num_;
            Polynomial g = poly_gcd(t, den_);
            return from_coprime(exact_divide(t, g), exact_divide(den_, g));
        }
        return fraction(num_ + o.num_, den_);
    }
    if (atom_free(num_) && atom_free(den_) && atom_free(o.num_) && atom_free(o.den_)) {
        // a/b + c/d with g = gcd(b, d): only gcd(t, g) can remain
        Polynomial g = poly_gcd(den_, o.den_);
        Polynomial bg = exact_divide(den_, g), dg = exact_divide(o.den_, g);
        Polynomial t = num_ * dg + o.num_ * bg;
        if (t.is_zero()) return {};
        Polynomial g2 = g.is_constant() ? Polynomial(1) : poly_gcd(t, g);
        return from_coprime(exact_divide(t, g2), bg * exact_divide(o.den_, g2));
    }
    return fraction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    s.num_ = -s.num_;
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (den_.is_constant() && o.den_.is_constant()) {
        Scalar s;
        s.num_ = num_ * o.num_;
        return s;
    }
    if (atom_free(num_) && atom_free(den_) && atom_free(o.num_) && atom_free(o.den_)) {
        Polynomial g1 = poly_gcd(num_, o.den_), g2 = poly_gcd(o.num_, den_);
        return from_coprime(exact_divide(num_, g1) * exact_divide(o.num_, g2),
                            exact_divide(den_, g2) * exact_divide(o.den_, g1));
    }
    return fraction(num_ * o.num_, den_ * o.den_);
}

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return fraction(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::pow(int k) const {
    if (k == 0) return Scalar(1);
    if (k < 0) return Scalar(1) / pow(-k);
    if (den_.is_constant()) {
        Scalar s;
        s.num_ = num_.pow(static_cast<unsigned>(k));
        return s;
    }
    Scalar s;
    s.num_ = num_.pow(static_cast<unsigned>(k));
    s.den_ = den_.pow(static_cast<unsigned>(k));
    return fraction(s.num_, s.den_);
}

Scalar Scalar::diff(const std::string& coord) const {
    Polynomial dn = num_.derivative(coord);
    if (den_.is_constant()) {
        Scalar s;
        s.num_ = dn;
        return s;
    }
    Polynomial dd = den_.derivative(coord);
    if (atom_free(num_) && atom_free(den_)) {
        // d = g u, d' = g v: (n'u - n v) / (g u^2), reduced against g only
        if (dd.is_zero()) return from_coprime(dn, den_);
        Polynomial g = poly_gcd(den_, dd);
        Polynomial u = exact_divide(den_, g), v = exact_divide(dd, g);
        Polynomial t = dn * u - num_ * v;
        if (t.is_zero()) return {};
        Polynomial g2 = g.is_constant() ? Polynomial(1) : poly_gcd(t, g);
        return from_coprime(exact_divide(t, g2), exact_divide(g, g2) * u * u);
    }
    return fraction(dn * den_ - num_ * dd, den_ * den_);
}

namespace {

Scalar subs_poly(const Polynomial& p, const std::map<std::string, Scalar>& repl) {
    Scalar sum;
    for (const auto& t : p.terms()) {
        Scalar term(t.coef);
        Monomial kept;
        for (const auto& f : t.mono.factors()) {
            auto it = repl.find(f.sym.name());
            if (it == repl.end()) {
                kept = kept * Monomial::of(f.sym, f.exp);
            } else if (f.sym.is_exp()) {
                term *= Scalar::exp(it->second * Scalar(exponent_to_mpq(f.exp)));
            } else {
                term *= it->second.pow(static_cast<int>(f.exp.numerator()));
            }
        }
        if (!kept.is_one()) term *= Scalar::fraction(Polynomial::monomial(kept), Polynomial(1));
        sum += term;
    }
    return sum;
}

}  // namespace

Scalar Scalar::subs(const std::map<std::string, Scalar>& repl) const {
    Scalar n = subs_poly(num_, repl);
    if (den_.is_constant()) return n / Scalar(den_.constant_value());
    return n / subs_poly(den_, repl);
}

mpq_class Scalar::eval(const Point& p) const {
    mpq_class d = eval_poly(den_, p);
    if (d == 0) throw PoleError("pole at point: denominator " + den_.str() + " vanishes");
    return eval_poly(num_, p) / d;
}

std::optional<Scalar> Scalar::log_of_exp() const {
    if (!den_.is_constant() || !num_.is_monomial()) return std::nullopt;
    if (num_.leading().coef != den_.constant_value()) return std::nullopt;
    Scalar lin;
    for (const auto& f : num_.leading().mono.factors()) {
        if (!f.sym.is_exp()) return std::nullopt;
        lin += Scalar(exponent_to_mpq(f.exp)) * coord(f.sym.name());
    }
    return lin;
}

std::vector<std::string> Scalar::coordinates() const {
    std::vector<std::string> out;
    for (const auto* p : {&num_, &den_})
        for (const auto& s : p->symbols()) out.push_back(s.name());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<std::string, std::int64_t> Scalar::root_orders() const {
    std::map<std::string, std::int64_t> out;
    for (const auto* p : {&num_, &den_})
        for (const auto& t : p->terms())
            for (const auto& f : t.mono.factors())
                if (f.sym.is_exp()) {
                    auto& l = out[f.sym.name()];
                    l = std::lcm(l == 0 ? 1 : l, f.exp.denominator());
                }
    return out;
}

std::string Scalar::str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace twistlab::exprcas
