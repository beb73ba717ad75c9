#include "twistlab/ueahopf/uea.hpp"

#include "twistlab/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace twistlab::ueahopf {

namespace {

using Mono = std::vector<std::int16_t>;
using Lin = std::map<Mono, Rational>;

void accumulate(Lin& out, const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = out.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) out.erase(it);
    }
}

// PBW multiplication for one algebra, memoized on (monomial, letter) and
// (monomial, monomial).
class Engine {
public:
    explicit Engine(LieAlgebra g) : g_(std::move(g)), n_(g_.dim()) {}

    Lin mul(const Mono& a, const Mono& b) {
        int x = -1;
        for (int i = 0; i < n_; ++i)
            if (b[i] > 0) {
                x = i;
                break;
            }
        if (x < 0) return Lin{{a, 1}};
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = mul_memo_.find({a, b});
            if (it != mul_memo_.end()) return it->second;
        }
        Mono rest = b;
        --rest[x];
        Lin out;
        for (const auto& [m, c] : mul_letter(a, x))
            for (const auto& [m2, c2] : mul(m, rest)) accumulate(out, m2, c * c2);
        std::lock_guard<std::mutex> lock(mu_);
        mul_memo_.emplace(std::make_pair(a, b), out);
        return out;
    }

    Lin mul_letter(const Mono& m, int x) {
        int y = -1;
        for (int i = n_ - 1; i >= 0; --i)
            if (m[i] > 0) {
                y = i;
                break;
            }
        if (y <= x) {
            Mono r = m;
            ++r[x];
            return Lin{{r, 1}};
        }
        {
            std::lock_guard<std::mutex> lock(mu_);
            auto it = letter_memo_.find({m, x});
            if (it != letter_memo_.end()) return it->second;
        }
        // m = m' y with y > x: m' y x = (m' x) y + m' [y, x]
        Mono mp = m;
        --mp[y];
        Lin out;
        for (const auto& [t, c] : mul_letter(mp, x))
            for (const auto& [t2, c2] : mul_letter(t, y)) accumulate(out, t2, c * c2);
        for (int k = 0; k < n_; ++k) {
            const Rational& s = g_.c(y, x, k);
            if (s == 0) continue;
            for (const auto& [t, c] : mul_letter(mp, k)) accumulate(out, t, s * c);
        }
        std::lock_guard<std::mutex> lock(mu_);
        letter_memo_.emplace(std::make_pair(m, x), out);
        return out;
    }

    const LieAlgebra& algebra() const { return g_; }

private:
    LieAlgebra g_;
    int n_;
    std::mutex mu_;
    std::map<std::pair<Mono, Mono>, Lin> mul_memo_;
    std::map<std::pair<Mono, int>, Lin> letter_memo_;
};

Engine& engine(const LieAlgebra& g) {
    static std::mutex mu;
    static std::map<const void*, std::unique_ptr<Engine>> engines;
    std::lock_guard<std::mutex> lock(mu);
    auto& e = engines[g.id()];
    if (!e) e = std::make_unique<Engine>(g);
    return *e;
}

Mono leg_of(const UEA::Key& k, int leg, int n) { return Mono(k.begin() + leg * n, k.begin() + (leg + 1) * n); }

UEA::Key splice(const UEA::Key& k, int leg, int n, int width, const Mono& replacement) {
    UEA::Key out(k.begin(), k.begin() + leg * n);
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), k.begin() + (leg + width) * n, k.end());
    return out;
}

std::string mono_str(const LieAlgebra& g, const Mono& m) {
    std::string s;
    for (int i = 0; i < g.dim(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += g.label(i);
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

// ---------------------------------------------------------------- UEA

UEA::UEA(LieAlgebra g, int rank) : g_(std::move(g)), rank_(rank) {}

UEA UEA::one(const LieAlgebra& g, int rank) { return scalar(g, 1, rank); }

UEA UEA::scalar(const LieAlgebra& g, const Rational& c, int rank) {
    UEA u(g, rank);
    u.add(Key(static_cast<std::size_t>(rank) * g.dim(), 0), c);
    return u;
}

UEA UEA::generator(const LieAlgebra& g, int i) {
    Multidegree m(g.dim(), 0);
    m.at(i) = 1;
    return monomial(g, m);
}

UEA UEA::monomial(const LieAlgebra& g, const Multidegree& m, const Rational& c) {
    if (static_cast<int>(m.size()) != g.dim()) throw BasisMismatch("multidegree length differs from dimension");
    UEA u(g, 1);
    u.add(Key(m.begin(), m.end()), c);
    return u;
}

UEA UEA::word(const LieAlgebra& g, const Word& w) {
    UEA u = one(g);
    for (int x : w) u = u * generator(g, x);
    return u;
}

UEA UEA::tensor(const UEA& a, const UEA& b) {
    if (a.has_algebra() && b.has_algebra() && !a.g_.same_as(b.g_)) throw BasisMismatch("tensor of different algebras");
    UEA r(a.has_algebra() ? a.g_ : b.g_, a.rank_ + b.rank_);
    for (const auto& [ka, ca] : a.t_)
        for (const auto& [kb, cb] : b.t_) {
            Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add(k, ca * cb);
        }
    return r;
}

Rational UEA::coeff(const std::vector<Multidegree>& legs) const {
    Key k;
    for (const auto& m : legs) k.insert(k.end(), m.begin(), m.end());
    auto it = t_.find(k);
    return it == t_.end() ? Rational(0) : it->second;
}

Multidegree UEA::leg_degree(const Key& k, int leg) const {
    Mono m = leg_of(k, leg, g_.dim());
    return Multidegree(m.begin(), m.end());
}

Rational UEA::unit_coeff() const {
    if (!has_algebra()) return 0;
    auto it = t_.find(Key(static_cast<std::size_t>(rank_) * g_.dim(), 0));
    return it == t_.end() ? Rational(0) : it->second;
}

void UEA::add(const Key& k, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

void UEA::adopt(const UEA& o) {
    if (!has_algebra() && o.has_algebra()) {
        g_ = o.g_;
        rank_ = o.rank_;
    }
}

UEA UEA::operator+(const UEA& o) const {
    if (has_algebra() && o.has_algebra()) {
        if (!g_.same_as(o.g_)) throw BasisMismatch("sum of different algebras");
        if (rank_ != o.rank_ && !t_.empty() && !o.t_.empty()) throw BasisMismatch("sum of different tensor ranks");
    }
    if (t_.empty() && o.has_algebra()) return o;
    UEA r = *this;
    r.adopt(o);
    for (const auto& [k, c] : o.t_) r.add(k, c);
    return r;
}

UEA UEA::operator-(const UEA& o) const { return *this + o * Rational(-1); }

UEA UEA::operator*(const Rational& s) const {
    UEA r(g_, rank_);
    if (s == 0) return r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
    return r;
}

UEA UEA::operator*(const UEA& o) const {
    if (t_.empty() || o.t_.empty()) {
        UEA r = has_algebra() ? UEA(g_, rank_) : UEA(o.g_, o.rank_);
        return r;
    }
    if (!g_.same_as(o.g_)) throw BasisMismatch("product of different algebras");
    if (rank_ != o.rank_) throw BasisMismatch("product of different tensor ranks");
    Engine& e = engine(g_);
    const int n = g_.dim();
    UEA r(g_, rank_);
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            std::vector<std::pair<Key, Rational>> partial{{Key{}, ca * cb}};
            for (int leg = 0; leg < rank_; ++leg) {
                Lin p = e.mul(leg_of(ka, leg, n), leg_of(kb, leg, n));
                std::vector<std::pair<Key, Rational>> next;
                next.reserve(partial.size() * p.size());
                for (const auto& [pk, pc] : partial)
                    for (const auto& [m, c] : p) {
                        Key k = pk;
                        k.insert(k.end(), m.begin(), m.end());
                        next.emplace_back(std::move(k), pc * c);
                    }
                partial = std::move(next);
            }
            for (const auto& [k, c] : partial) r.add(k, c);
        }
    return r;
}

bool operator==(const UEA& a, const UEA& b) {
    if (a.t_.empty() || b.t_.empty()) return a.t_.empty() && b.t_.empty();
    return a.rank_ == b.rank_ && a.t_ == b.t_;
}

UEA UEA::permuted(const std::vector<int>& perm) const {
    const int n = g_.dim();
    UEA r(g_, rank_);
    for (const auto& [k, c] : t_) {
        Key out;
        for (int p = 0; p < rank_; ++p) {
            Mono m = leg_of(k, perm[p], n);
            out.insert(out.end(), m.begin(), m.end());
        }
        r.add(out, c);
    }
    return r;
}

std::string UEA::str() const {
    if (t_.empty()) return "0";
    const int n = g_.dim();
    std::ostringstream os;
    bool first = true;
    // Highest total degree first.
    std::vector<std::pair<Key, Rational>> items(t_.begin(), t_.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db) return da > db;
        return a.first > b.first;
    });
    for (const auto& [k, c] : items) {
        Rational a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        std::string body;
        for (int leg = 0; leg < rank_; ++leg) {
            if (leg) body += "(x)";
            body += mono_str(g_, leg_of(k, leg, n));
        }
        if (a != 1) os << a.get_str() << "*";
        os << body;
    }
    return os.str();
}

// ---------------------------------------------------------------- PBW

UEA pbw_normalize(const LieAlgebra& g, const Word& w) { return UEA::word(g, w); }

std::vector<UEA> pbw_normalize_all_orders(const LieAlgebra& g, const Word& w) {
    // Normal forms of a word, exploring every choice of inversion to rewrite.
    std::map<Word, std::vector<UEA>> memo;
    std::function<std::vector<UEA>(const Word&)> rec = [&](const Word& word) -> std::vector<UEA> {
        auto it = memo.find(word);
        if (it != memo.end()) return it->second;
        std::vector<UEA> results;
        bool sorted = true;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] <= word[i + 1]) continue;
            sorted = false;
            // w = u y x v  ->  u x y v + sum_k c^k_{yx} u k v
            Word swapped = word;
            std::swap(swapped[i], swapped[i + 1]);
            std::vector<UEA> acc = rec(swapped);
            for (int k = 0; k < g.dim(); ++k) {
                const Rational& c = g.c(word[i], word[i + 1], k);
                if (c == 0) continue;
                Word shorter(word.begin(), word.begin() + i);
                shorter.push_back(k);
                shorter.insert(shorter.end(), word.begin() + i + 2, word.end());
                std::vector<UEA> sub = rec(shorter), next;
                for (const auto& a : acc)
                    for (const auto& b : sub) {
                        UEA s = a + b * c;
                        if (std::find(next.begin(), next.end(), s) == next.end()) next.push_back(s);
                    }
                acc = std::move(next);
            }
            for (const auto& a : acc)
                if (std::find(results.begin(), results.end(), a) == results.end()) results.push_back(a);
        }
        if (sorted) {
            Multidegree m(g.dim(), 0);
            for (int x : word) ++m[x];
            results.push_back(UEA::monomial(g, m));
        }
        memo[word] = results;
        return results;
    };
    return rec(w);
}

// ---------------------------------------------------------------- Hopf maps

UEA coproduct(const UEA& u, int leg) {
    if (!u.has_algebra()) return u;
    const LieAlgebra& g = u.algebra();
    const int n = g.dim();
    UEA r(g, u.rank() + 1);
    for (const auto& [k, c] : u.terms()) {
        Mono m = leg_of(k, leg, n);
        // D(X1^p1 ... Xn^pn) = sum over splits q <= p of prod binom(p_i, q_i)
        Mono q(n, 0);
        while (true) {
            mpz_class coef = 1;
            Mono rest(n);
            for (int i = 0; i < n; ++i) {
                mpz_class b;
                mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(m[i]), static_cast<unsigned long>(q[i]));
                coef *= b;
                rest[i] = static_cast<std::int16_t>(m[i] - q[i]);
            }
            Mono both = q;
            both.insert(both.end(), rest.begin(), rest.end());
            r.add(splice(k, leg, n, 1, both), c * Rational(coef));
            int i = 0;
            while (i < n && q[i] == m[i]) q[i++] = 0;
            if (i == n) break;
            ++q[i];
        }
    }
    return r;
}

UEA counit(const UEA& u, int leg) {
    if (!u.has_algebra()) return u;
    const int n = u.algebra().dim();
    UEA r(u.algebra(), u.rank() - 1);
    for (const auto& [k, c] : u.terms()) {
        Mono m = leg_of(k, leg, n);
        if (std::any_of(m.begin(), m.end(), [](std::int16_t e) { return e != 0; })) continue;
        r.add(splice(k, leg, n, 1, {}), c);
    }
    return r;
}

Rational counit_value(const UEA& u) {
    if (!u.has_algebra()) return 0;
    if (u.rank() != 1) throw BasisMismatch("counit_value needs rank 1");
    return u.unit_coeff();
}

UEA antipode(const UEA& u, int leg) {
    if (!u.has_algebra()) return u;
    const LieAlgebra& g = u.algebra();
    const int n = g.dim();
    Engine& e = engine(g);
    UEA r(g, u.rank());
    for (const auto& [k, c] : u.terms()) {
        Mono m = leg_of(k, leg, n);
        // S(X1^p1 ... Xn^pn) = (-1)^|p| Xn^pn ... X1^p1
        int total = 0;
        Lin acc{{Mono(n, 0), 1}};
        for (int i = n - 1; i >= 0; --i) {
            if (m[i] == 0) continue;
            total += m[i];
            Mono p(n, 0);
            p[i] = m[i];
            Lin next;
            for (const auto& [a, ca] : acc)
                for (const auto& [b, cb] : e.mul(a, p)) accumulate(next, b, ca * cb);
            acc = std::move(next);
        }
        Rational sign = total % 2 ? -1 : 1;
        for (const auto& [a, ca] : acc) r.add(splice(k, leg, n, 1, a), c * ca * sign);
    }
    return r;
}

UEA multiply_legs(const UEA& u, int leg) {
    if (!u.has_algebra()) return u;
    const LieAlgebra& g = u.algebra();
    const int n = g.dim();
    Engine& e = engine(g);
    UEA r(g, u.rank() - 1);
    for (const auto& [k, c] : u.terms())
        for (const auto& [m, cm] : e.mul(leg_of(k, leg, n), leg_of(k, leg + 1, n)))
            r.add(splice(k, leg, n, 2, m), c * cm);
    return r;
}

UEA insert_unit(const UEA& u, int leg) {
    if (!u.has_algebra()) return u;
    const int n = u.algebra().dim();
    UEA r(u.algebra(), u.rank() + 1);
    for (const auto& [k, c] : u.terms()) {
        UEA::Key out(k.begin(), k.begin() + leg * n);
        out.insert(out.end(), static_cast<std::size_t>(n), 0);
        out.insert(out.end(), k.begin() + leg * n, k.end());
        r.add(out, c);
    }
    return r;
}

// ---------------------------------------------------------------- series

USeries constant_series(const UEA& u, int order) { return USeries::constant(order, u, UEA(u.algebra(), u.rank())); }

USeries series_one(const LieAlgebra& g, int rank, int order) { return constant_series(UEA::one(g, rank), order); }

USeries series_tensor(const USeries& a, const USeries& b) {
    int n = std::min(a.order(), b.order());
    USeries r(n);
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) r[k] = r[k] + UEA::tensor(a[i], b[k - i]);
    return r;
}

USeries series_invert(const USeries& f) {
    const UEA& f0 = f[0];
    if (!f0.has_algebra() || f0.terms().size() != 1 || f0.unit_coeff() == 0)
        throw PreconditionFailed("series_invert: order-0 term is not an invertible multiple of the unit");
    Rational inv = 1 / f0.unit_coeff();
    USeries g(f.order());
    g[0] = UEA::scalar(f0.algebra(), inv, f0.rank());
    for (int n = 1; n <= f.order(); ++n) {
        UEA acc(f0.algebra(), f0.rank());
        for (int k = 1; k <= n; ++k) acc = acc + f[k] * g[n - k];
        g[n] = acc * (-inv);
    }
    return g;
}

namespace {

// F placed on legs (leg, leg+1) of a rank-`rank` tensor, units elsewhere.
USeries embed_twist(const TwistSeries& F, int leg, int rank) {
    return series_map(F, [&](const UEA& x) {
        UEA y = x;
        for (int p = 0; p < leg; ++p) y = insert_unit(y, 0);
        for (int p = leg + 2; p < rank; ++p) y = insert_unit(y, y.rank());
        return y;
    });
}

void compare_orders(VerificationReport& rep, const std::string& name, const USeries& a, const USeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k) rep.add(name, a[k] == b[k], a[k] == b[k] ? "" : (a[k] - b[k]).str(), k);
}

// First order where a and b differ, or -1.
int first_mismatch(const USeries& a, const USeries& b) {
    int n = std::min(a.order(), b.order());
    for (int k = 0; k <= n; ++k)
        if (!(a[k] == b[k])) return k;
    return -1;
}

}  // namespace

VerificationReport twist_check(const TwistSeries& F) {
    VerificationReport rep("twist");
    const int N = F.order();
    const LieAlgebra& g = F[0].algebra();
    if (!F[0].has_algebra()) throw PreconditionFailed("twist has no algebra");
    rep.add("order-0 term is 1(x)1", F[0] == UEA::one(g, 2), F[0].str(), 0);

    USeries lhs = series_map(F, [](const UEA& x) { return insert_unit(x, 2); }) *
                  series_map(F, [](const UEA& x) { return coproduct(x, 0); });
    USeries rhs = series_map(F, [](const UEA& x) { return insert_unit(x, 0); }) *
                  series_map(F, [](const UEA& x) { return coproduct(x, 1); });
    compare_orders(rep, "cocycle", lhs, rhs);

    USeries one1 = series_one(g, 1, N);
    compare_orders(rep, "counit (eps(x)id)F", series_map(F, [](const UEA& x) { return counit(x, 0); }), one1);
    compare_orders(rep, "counit (id(x)eps)F", series_map(F, [](const UEA& x) { return counit(x, 1); }), one1);
    if (auto k = rep.first_failing_order()) rep.record("first_failing_order", std::to_string(*k));
    return rep;
}

USeries twisted_coproduct(const TwistSeries& F, const USeries& u) {
    return F * series_map(u, [](const UEA& x) { return coproduct(x, 0); }) * series_invert(F);
}

USeries twisted_coproduct_leg(const TwistSeries& F, const USeries& x, int leg) {
    int rank = 1;
    for (int k = x.order(); k >= 0; --k)
        if (x[k].has_algebra()) rank = x[k].rank();
    USeries Fe = embed_twist(F, leg, rank + 1);
    USeries Fi = embed_twist(series_invert(F), leg, rank + 1);
    return Fe * series_map(x, [leg](const UEA& y) { return coproduct(y, leg); }) * Fi;
}

Semiclassical twist_semiclassical(const TwistSeries& F) {
    if (F.order() < 1) throw PreconditionFailed("twist_semiclassical needs order >= 1");
    const LieAlgebra& g = F[0].algebra();
    UEA a = F[1] - F[1].flipped();
    Semiclassical out{liebialg::Tensor(g, 2), true, {}};
    const int n = g.dim();
    for (const auto& [k, c] : a.terms()) {
        int i = -1, j = -1;
        bool linear = true;
        for (int leg = 0; leg < 2; ++leg) {
            int total = 0, at = -1;
            for (int p = 0; p < n; ++p) {
                total += k[leg * n + p];
                if (k[leg * n + p]) at = p;
            }
            if (total != 1) linear = false;
            (leg == 0 ? i : j) = at;
        }
        if (!linear) {
            out.in_g_tensor_g = false;
            UEA t(g, 2);
            t.add(k, c);
            out.detail += (out.detail.empty() ? "" : ", ") + t.str();
            continue;
        }
        out.r.add({i, j}, c);
    }
    return out;
}

std::optional<Rational> proportionality(const liebialg::Tensor& t, const liebialg::Tensor& ref) {
    if (ref.is_zero()) return t.is_zero() ? std::optional<Rational>(0) : std::nullopt;
    auto [idx, c] = *ref.terms().begin();
    Rational s = t.coeff(idx) / c;
    if (t == ref * s) return s;
    return std::nullopt;
}

TwistSeries jordanian_twist(const LieAlgebra& g, int order) {
    if (order < 1) throw PreconditionFailed("jordanian_twist needs order >= 1");
    UEA H = UEA::generator(g, "H"), E = UEA::generator(g, "E");
    // sigma = log(1 + h E)
    USeries sigma(order);
    UEA Ek = UEA::one(g);
    for (int m = 1; m <= order; ++m) {
        Ek = Ek * E;
        sigma[m] = Ek * Rational(m % 2 ? 1 : -1, m);
    }
    sigma[0] = UEA(g, 1);
    TwistSeries F = series_one(g, 2, order);
    USeries sigma_k = series_one(g, 1, order);
    UEA Hk = UEA::one(g);
    Rational coef = 1;
    for (int k = 1; k <= order; ++k) {
        sigma_k = sigma_k * sigma;
        Hk = Hk * H;
        coef = coef / (2 * k);  // (1/2)^k / k!
        F = F + series_tensor(constant_series(Hk * coef, order), sigma_k);
    }
    return F;
}

USeries TwistedAntipode::apply(const USeries& x) const {
    return u * series_map(x, [](const UEA& y) { return antipode(y, 0); }) * u_inv;
}

TwistedAntipode twisted_antipode_data(const TwistSeries& F) {
    TwistedAntipode t;
    t.u = series_map(F, [](const UEA& x) { return multiply_legs(antipode(x, 1), 0); });
    t.u_inv = series_invert(t.u);
    return t;
}

VerificationReport twisted_hopf_check(const TwistSeries& F, const std::vector<UEA>& elements) {
    VerificationReport rep("twisted hopf algebra");
    const int N = F.order();
    const LieAlgebra& g = F[0].algebra();
    TwistedAntipode sf = twisted_antipode_data(F);
    USeries Finv = series_invert(F);
    rep.add("u_F leading term is 1", sf.u[0] == UEA::one(g), sf.u[0].str(), 0);
    rep.add("u_F invertible", first_mismatch(sf.u * sf.u_inv, series_one(g, 1, N)) < 0);

    auto report = [&](const std::string& name, const USeries& a, const USeries& b) {
        int k = first_mismatch(a, b);
        rep.add(name, k < 0, k < 0 ? "" : "first differs at order " + std::to_string(k),
                k < 0 ? std::optional<int>() : std::optional<int>(k));
    };
    // S_F on the first leg of a rank-2 series.
    auto sf_leg0 = [&](const USeries& x) {
        USeries u2 = series_map(sf.u, [](const UEA& y) { return insert_unit(y, 1); });
        USeries ui2 = series_map(sf.u_inv, [](const UEA& y) { return insert_unit(y, 1); });
        return u2 * series_map(x, [](const UEA& y) { return antipode(y, 0); }) * ui2;
    };
    auto sf_leg1 = [&](const USeries& x) {
        USeries u2 = series_map(sf.u, [](const UEA& y) { return insert_unit(y, 0); });
        USeries ui2 = series_map(sf.u_inv, [](const UEA& y) { return insert_unit(y, 0); });
        return u2 * series_map(x, [](const UEA& y) { return antipode(y, 1); }) * ui2;
    };

    for (const auto& e : elements) {
        USeries x = constant_series(e, N);
        USeries d = twisted_coproduct(F, x);
        std::string tag = "[" + e.str() + "] ";
        report(tag + "coassociativity", twisted_coproduct_leg(F, d, 0), twisted_coproduct_leg(F, d, 1));
        report(tag + "counit left", series_map(d, [](const UEA& y) { return counit(y, 0); }), x);
        report(tag + "counit right", series_map(d, [](const UEA& y) { return counit(y, 1); }), x);
        USeries eps = series_map(x, [](const UEA& y) { return UEA::scalar(y.algebra(), counit_value(y)); });
        report(tag + "antipode m(S_F(x)id)D_F",
               series_map(sf_leg0(d), [](const UEA& y) { return multiply_legs(y, 0); }), eps);
        report(tag + "antipode m(id(x)S_F)D_F",
               series_map(sf_leg1(d), [](const UEA& y) { return multiply_legs(y, 0); }), eps);
        for (const auto& f : elements) {
            USeries y = constant_series(f, N);
            report(tag + "D_F multiplicative with [" + f.str() + "]", twisted_coproduct(F, x * y),
                   twisted_coproduct(F, x) * twisted_coproduct(F, y));
        }
    }
    (void)Finv;
    return rep;
}

VerificationReport hopf_axioms_check(const LieAlgebra& g, int max_degree) {
    VerificationReport rep("hopf axioms");
    const int n = g.dim();
    std::vector<Multidegree> monos;
    Multidegree m(n, 0);
    std::function<void(int, int)> gen = [&](int i, int left) {
        if (i == n) {
            monos.push_back(m);
            return;
        }
        for (int e = 0; e <= left; ++e) {
            m[i] = e;
            gen(i + 1, left - e);
        }
        m[i] = 0;
    };
    gen(0, max_degree);
    int bad = 0;
    for (const auto& md : monos) {
        UEA u = UEA::monomial(g, md);
        UEA d = coproduct(u);
        UEA eps = UEA::scalar(g, counit_value(u));
        bool ok = coproduct(d, 0) == coproduct(d, 1) && counit(d, 0) == u && counit(d, 1) == u &&
                  multiply_legs(antipode(d, 0)) == eps && multiply_legs(antipode(d, 1)) == eps;
        for (const auto& md2 : monos) {
            UEA v = UEA::monomial(g, md2);
            ok = ok && coproduct(u * v) == coproduct(u) * coproduct(v) && antipode(u * v) == antipode(v) * antipode(u);
        }
        if (!ok) {
            ++bad;
            rep.add("[" + u.str() + "]", false);
        }
    }
    if (!bad) rep.add("all PBW monomials of degree <= " + std::to_string(max_degree), true, std::to_string(monos.size()) + " monomials");
    return rep;
}

std::string twist_to_json(const TwistSeries& F) {
    const LieAlgebra& g = F[0].algebra();
    nlohmann::ordered_json j;
    j["algebra"] = g.name();
    j["basis"] = g.basis();
    j["order"] = F.order();
    auto coeffs = nlohmann::ordered_json::array();
    for (int k = 0; k <= F.order(); ++k) {
        auto terms = nlohmann::ordered_json::array();
        for (const auto& [key, c] : F[k].terms()) {
            nlohmann::ordered_json t;
            t["legs"] = {F[k].leg_degree(key, 0), F[k].leg_degree(key, 1)};
            t["coef"] = c.get_str();
            terms.push_back(t);
        }
        coeffs.push_back({{"order", k}, {"terms", terms}});
    }
    j["coefficients"] = coeffs;
    return j.dump(2);
}

TwistSeries twist_from_json(const LieAlgebra& g, const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what(), e.byte);
    }
    if (j.at("basis").get<std::vector<std::string>>() != g.basis()) throw BasisMismatch("twist basis differs from algebra");
    TwistSeries F(j.at("order").get<int>());
    for (int k = 0; k <= F.order(); ++k) F[k] = UEA(g, 2);
    for (const auto& c : j.at("coefficients")) {
        int k = c.at("order").get<int>();
        for (const auto& t : c.at("terms")) {
            UEA::Key key;
            for (const auto& leg : t.at("legs"))
                for (int e : leg.get<std::vector<int>>()) key.push_back(static_cast<std::int16_t>(e));
            if (static_cast<int>(key.size()) != 2 * g.dim()) throw BasisMismatch("term multidegree length");
            F[k].add(key, Rational(t.at("coef").get<std::string>()));
        }
    }
    return F;
}

std::string series_str(const USeries& s) {
    std::string out;
    for (int k = 0; k <= s.order(); ++k) {
        if (s[k].is_zero()) continue;
        std::string c = s[k].str();
        if (!out.empty()) out += " + ";
        if (k == 0) out += c;
        else out += (k == 1 ? std::string("hbar") : "hbar^" + std::to_string(k)) + "*(" + c + ")";
    }
    return out.empty() ? "0" : out;
}

}  // namespace twistlab::ueahopf
