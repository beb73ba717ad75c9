#include "twistlab/exprcas/polynomial.hpp"

#include "twistlab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <map>
#include <mutex>
#include <set>

namespace twistlab::exprcas {

namespace {

const std::string* intern(std::string_view name) {
    static std::mutex mu;
    static std::set<std::string, std::less<>> pool;
    std::lock_guard<std::mutex> lock(mu);
    auto it = pool.find(name);
    if (it == pool.end()) it = pool.emplace(name).first;
    return &*it;
}

std::strong_ordering cmp_exp(const Exponent& a, const Exponent& b) {
    if (a < b) return std::strong_ordering::less;
    if (b < a) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

mpq_class to_mpq(const Exponent& e) {
    mpq_class q(mpz_class(std::to_string(e.numerator())), mpz_class(std::to_string(e.denominator())));
    q.canonicalize();
    return q;
}

}  // namespace

Symbol Symbol::coord(std::string_view name) { return Symbol(intern(name), Kind::Coord); }
Symbol Symbol::exp_of(std::string_view name) { return Symbol(intern(name), Kind::Exp); }

std::strong_ordering operator<=>(Symbol a, Symbol b) {
    if (a.name_ != b.name_) {
        int c = a.name_->compare(*b.name_);
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
}

// ---------------------------------------------------------------- Monomial

Monomial Monomial::of(Symbol s, Exponent e) {
    Monomial m;
    if (e != Exponent(0)) m.f_.push_back({s, e});
    return m;
}

Exponent Monomial::degree_of(Symbol s) const {
    for (const auto& f : f_)
        if (f.sym == s) return f.exp;
    return 0;
}

int Monomial::total_coord_degree() const {
    int d = 0;
    for (const auto& f : f_)
        if (!f.sym.is_exp()) d += static_cast<int>(f.exp.numerator());
    return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r;
    r.f_.reserve(f_.size() + o.f_.size());
    std::size_t i = 0, j = 0;
    while (i < f_.size() || j < o.f_.size()) {
        if (j == o.f_.size() || (i < f_.size() && f_[i].sym < o.f_[j].sym)) {
            r.f_.push_back(f_[i++]);
        } else if (i == f_.size() || o.f_[j].sym < f_[i].sym) {
            r.f_.push_back(o.f_[j++]);
        } else {
            Exponent e = f_[i].exp + o.f_[j].exp;
            if (e != Exponent(0)) r.f_.push_back({f_[i].sym, e});
            ++i;
            ++j;
        }
    }
    return r;
}

Monomial Monomial::with(Symbol s, Exponent e) const {
    Monomial r;
    bool placed = false;
    for (const auto& f : f_) {
        if (!placed && s < f.sym) {
            if (e != Exponent(0)) r.f_.push_back({s, e});
            placed = true;
        }
        if (f.sym == s) {
            if (e != Exponent(0)) r.f_.push_back({s, e});
            placed = true;
        } else {
            r.f_.push_back(f);
        }
    }
    if (!placed && e != Exponent(0)) r.f_.push_back({s, e});
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    for (const auto& f : f_)
        if (o.degree_of(f.sym) < f.exp) return false;
    for (const auto& f : o.f_)
        if (f.exp < Exponent(0) && degree_of(f.sym) == Exponent(0)) return false;
    return true;
}

Monomial Monomial::quotient(const Monomial& o) const {
    Monomial inv;
    for (const auto& f : f_) inv.f_.push_back({f.sym, -f.exp});
    return o * inv;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    std::size_t i = 0, j = 0;
    const auto& fa = a.f_;
    const auto& fb = b.f_;
    while (i < fa.size() || j < fb.size()) {
        if (j == fb.size() || (i < fa.size() && fa[i].sym < fb[j].sym)) {
            return cmp_exp(fa[i].exp, 0);
        }
        if (i == fa.size() || fb[j].sym < fa[i].sym) {
            return cmp_exp(0, fb[j].exp);
        }
        auto c = cmp_exp(fa[i].exp, fb[j].exp);
        if (c != 0) return c;
        ++i;
        ++j;
    }
    return std::strong_ordering::equal;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(const mpq_class& c) {
    if (c != 0) t_.push_back({Monomial{}, c});
}

Polynomial Polynomial::monomial(const Monomial& m, const mpq_class& c) {
    Polynomial p;
    if (c != 0) p.t_.push_back({m, c});
    return p;
}

mpq_class Polynomial::constant_value() const {
    if (t_.empty()) return 0;
    return t_[0].coef;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.t_.empty() && p.t_.back().mono == t.mono) {
            p.t_.back().coef += t.coef;
            if (p.t_.back().coef == 0) p.t_.pop_back();
        } else if (t.coef != 0) {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    Polynomial r;
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() || j < o.t_.size()) {
        if (j == o.t_.size() || (i < t_.size() && t_[i].mono > o.t_[j].mono)) {
            r.t_.push_back(t_[i++]);
        } else if (i == t_.size() || o.t_[j].mono > t_[i].mono) {
            r.t_.push_back(o.t_[j++]);
        } else {
            mpq_class c = t_[i].coef + o.t_[j].coef;
            if (c != 0) r.t_.push_back({t_[i].mono, c});
            ++i;
            ++j;
        }
    }
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.coef = -t.coef;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    if (o.is_constant()) return scaled(o.t_[0].coef);
    if (is_constant()) return o.scaled(t_[0].coef);
    std::map<Monomial, mpq_class, std::greater<>> acc;
    for (const auto& a : t_)
        for (const auto& b : o.t_) acc[a.mono * b.mono] += a.coef * b.coef;
    Polynomial r;
    r.t_.reserve(acc.size());
    for (auto& [m, c] : acc)
        if (c != 0) r.t_.push_back({m, c});
    return r;
}

Polynomial Polynomial::scaled(const mpq_class& c) const {
    if (c == 0) return {};
    Polynomial r = *this;
    for (auto& t : r.t_) t.coef *= c;
    return r;
}

Polynomial Polynomial::times(const Monomial& m) const {
    Polynomial r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) r.t_.push_back({t.mono * m, t.coef});
    return r;  // multiplication by a monomial preserves lex order
}

Polynomial Polynomial::pow(unsigned k) const {
    Polynomial result(1), base = *this;
    while (k) {
        if (k & 1u) result = result * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(const std::string& coord) const {
    Symbol c = Symbol::coord(coord), e = Symbol::exp_of(coord);
    std::vector<Term> out;
    for (const auto& t : t_) {
        Exponent dc = t.mono.degree_of(c);
        Exponent de = t.mono.degree_of(e);
        if (dc != 0) out.push_back({t.mono.with(c, dc - 1), t.coef * to_mpq(dc)});
        if (de != Exponent(0)) out.push_back({t.mono, t.coef * to_mpq(de)});
    }
    return from_terms(std::move(out));
}

std::vector<Symbol> Polynomial::symbols() const {
    std::vector<Symbol> s;
    for (const auto& t : t_)
        for (const auto& f : t.mono.factors()) s.push_back(f.sym);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

bool Polynomial::has_symbol(Symbol s) const {
    for (const auto& t : t_)
        if (t.mono.degree_of(s) != Exponent(0)) return true;
    return false;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (std::size_t i = 0; i < a.t_.size(); ++i)
        if (a.t_[i].coef != b.t_[i].coef || !(a.t_[i].mono == b.t_[i].mono)) return false;
    return true;
}

std::string format_exponent(const Exponent& e) {
    if (e.denominator() == 1) return std::to_string(e.numerator());
    return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

namespace {

std::string format_monomial(const Monomial& m) {
    std::string s;
    for (const auto& f : m.factors()) {
        if (!s.empty()) s += "*";
        if (f.sym.is_exp()) {
            s += "exp(";
            if (f.exp == Exponent(1)) {
            } else if (f.exp == Exponent(-1)) {
                s += "-";
            } else {
                s += format_exponent(f.exp) + "*";
            }
            s += f.sym.name() + ")";
        } else {
            s += f.sym.name();
            if (f.exp != Exponent(1)) s += "^" + format_exponent(f.exp);
        }
    }
    return s;
}

}  // namespace

std::string Polynomial::str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& t : t_) {
        mpq_class mag = abs(t.coef);
        bool neg = t.coef < 0;
        if (first) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        first = false;
        if (t.mono.is_one()) {
            s += mag.get_str();
        } else if (mag == 1) {
            s += format_monomial(t.mono);
        } else {
            s += mag.get_str() + "*" + format_monomial(t.mono);
        }
    }
    return s;
}

// ---------------------------------------------------------------- division

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (b.is_constant()) return a.scaled(1 / b.constant_value());
    std::vector<Term> q;
    Polynomial r = a;
    const Term& lb = b.leading();
    while (!r.is_zero()) {
        const Term& lr = r.leading();
        if (!lb.mono.divides(lr.mono)) throw Error("exact_divide: not divisible");
        Monomial m = lb.mono.quotient(lr.mono);
        mpq_class c = lr.coef / lb.coef;
        q.push_back({m, c});
        r = r - b.times(m).scaled(c);
    }
    return Polynomial::from_terms(std::move(q));
}

// ---------------------------------------------------------------------- gcd

namespace {

Polynomial monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(1 / p.leading().coef);
}

// Scaled to integer coefficients with gcd 1; keeps PRS coefficients small.
Polynomial primitive_q(const Polynomial& p) {
    if (p.is_zero()) return p;
    mpz_class l = 1, g = 0;
    for (const auto& t : p.terms()) l = lcm(l, mpz_class(t.coef.get_den()));
    for (const auto& t : p.terms()) g = gcd(g, mpz_class(t.coef.get_num() * (l / t.coef.get_den())));
    return p.scaled(mpq_class(l, g));
}

int degree_in(const Polynomial& p, Symbol s) {
    int d = 0;
    for (const auto& t : p.terms()) d = std::max(d, static_cast<int>(t.mono.degree_of(s).numerator()));
    return d;
}

std::vector<Polynomial> coeffs_in(const Polynomial& p, Symbol s) {
    std::vector<std::vector<Term>> buckets(degree_in(p, s) + 1);
    for (const auto& t : p.terms()) {
        int k = static_cast<int>(t.mono.degree_of(s).numerator());
        buckets[k].push_back({t.mono.with(s, 0), t.coef});
    }
    std::vector<Polynomial> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
    return out;
}

Polynomial content_in(const Polynomial& p, Symbol s) {
    Polynomial g;
    for (const auto& c : coeffs_in(p, s)) {
        if (c.is_zero()) continue;
        g = g.is_zero() ? monic(c) : poly_gcd(g, c);
        if (g.is_constant()) return Polynomial(1);
    }
    return g;
}

Polynomial lead_in(const Polynomial& p, Symbol s) { return coeffs_in(p, s).back(); }

// Degree in s of gcd(a, b) after specializing every other symbol to a value
// mod a prime. When both leading coefficients survive, the true gcd has at
// most this degree in s. -1 when the specialization is unlucky.
int modular_gcd_degree(const Polynomial& a, const Polynomial& b, Symbol s, std::uint64_t seed) {
    constexpr std::uint64_t P = 2147483647;
    auto inv = [](std::uint64_t x) {
        std::uint64_t r = 1, e = P - 2;
        while (e) {
            if (e & 1) r = r * x % P;
            x = x * x % P;
            e >>= 1;
        }
        return r;
    };
    auto modq = [&](const mpq_class& q, std::uint64_t& out) {
        mpz_class n = q.get_num() % static_cast<unsigned long>(P), d = q.get_den() % static_cast<unsigned long>(P);
        if (n < 0) n += static_cast<unsigned long>(P);
        if (d == 0) return false;
        out = n.get_ui() * inv(d.get_ui()) % P;
        return true;
    };
    std::map<Symbol, std::uint64_t> values;
    auto value = [&](Symbol sym) {
        auto it = values.find(sym);
        if (it != values.end()) return it->second;
        seed = (seed * 6364136223846793005ULL + 1442695040888963407ULL);
        std::uint64_t v = (seed >> 33) % (P - 2) + 2;
        values.emplace(sym, v);
        return v;
    };
    auto image = [&](const Polynomial& p, std::vector<std::uint64_t>& out) {
        out.assign(static_cast<std::size_t>(degree_in(p, s)) + 1, 0);
        for (const auto& t : p.terms()) {
            std::uint64_t v;
            if (!modq(t.coef, v)) return false;
            int k = 0;
            for (const auto& f : t.mono.factors()) {
                if (f.exp.denominator() != 1 || f.exp < 0) return false;
                if (f.sym == s) {
                    k = static_cast<int>(f.exp.numerator());
                    continue;
                }
                std::uint64_t x = value(f.sym);
                for (std::int64_t e = 0; e < f.exp.numerator(); ++e) v = v * x % P;
            }
            out[k] = (out[k] + v) % P;
        }
        return out.back() != 0;
    };
    std::vector<std::uint64_t> u, w;
    if (!image(a, u) || !image(b, w)) return -1;
    auto strip = [](std::vector<std::uint64_t>& x) {
        while (!x.empty() && x.back() == 0) x.pop_back();
    };
    if (u.size() < w.size()) std::swap(u, w);
    while (!w.empty()) {
        // u mod w
        std::uint64_t li = inv(w.back());
        while (u.size() >= w.size()) {
            std::uint64_t c = u.back() * li % P;
            std::size_t shift = u.size() - w.size();
            for (std::size_t i = 0; i < w.size(); ++i) u[shift + i] = (u[shift + i] + P - c * w[i] % P) % P;
            strip(u);
            if (u.empty()) break;
        }
        std::swap(u, w);
    }
    return static_cast<int>(u.size()) - 1;
}

Polynomial prem(const Polynomial& a, const Polynomial& b, Symbol s) {
    int db = degree_in(b, s);
    Polynomial lb = lead_in(b, s);
    Polynomial r = a;
    while (!r.is_zero() && degree_in(r, s) >= db) {
        int dr = degree_in(r, s);
        Polynomial lr = lead_in(r, s);
        r = r * lb - (b * lr).times(Monomial::of(s, dr - db));
    }
    return r;
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return monic(a);

    auto sa = a.symbols(), sb = b.symbols();
    // The gcd is free of symbols that occur in only one argument, so it
    // divides every coefficient of that argument with respect to them.
    for (int side = 0; side < 2; ++side) {
        const Polynomial& p = side ? b : a;
        const auto& own = side ? sb : sa;
        const auto& other = side ? sa : sb;
        std::vector<Symbol> foreign;
        std::set_difference(own.begin(), own.end(), other.begin(), other.end(), std::back_inserter(foreign));
        if (foreign.empty()) continue;
        std::map<Monomial, std::vector<Term>> groups;
        for (const auto& t : p.terms()) {
            Monomial key, rest;
            for (const auto& f : t.mono.factors()) {
                if (std::binary_search(foreign.begin(), foreign.end(), f.sym)) key = key * Monomial::of(f.sym, f.exp);
                else rest = rest * Monomial::of(f.sym, f.exp);
            }
            groups[key].push_back({rest, t.coef});
        }
        Polynomial g = side ? a : b;
        for (auto& [key, terms] : groups) {
            g = poly_gcd(g, Polynomial::from_terms(std::move(terms)));
            if (g.is_constant()) return Polynomial(1);
        }
        return monic(g);
    }
    Symbol s = std::min(sa.front(), sb.front());
    bool in_a = a.has_symbol(s), in_b = b.has_symbol(s);
    if (!in_a) return poly_gcd(a, content_in(b, s));
    if (!in_b) return poly_gcd(content_in(a, s), b);

    Polynomial ca = content_in(a, s), cb = content_in(b, s);
    Polynomial c = poly_gcd(ca, cb);
    Polynomial pa = primitive_q(exact_divide(a, ca)), pb = primitive_q(exact_divide(b, cb));
    if (degree_in(pa, s) < degree_in(pb, s)) std::swap(pa, pb);
    Polynomial g;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        int k = modular_gcd_degree(pa, pb, s, seed);
        if (k == 0) return monic(c);
        if (k > 0) break;
    }
    while (true) {
        Polynomial r = prem(pa, pb, s);
        if (r.is_zero()) {
            g = pb;
            break;
        }
        if (degree_in(r, s) == 0) {
            g = Polynomial(1);
            break;
        }
        pa = pb;
        pb = primitive_q(exact_divide(r, content_in(r, s)));
    }
    if (!g.is_constant()) g = exact_divide(g, content_in(g, s));
    return monic(c * g);
}

}  // namespace twistlab::exprcas
