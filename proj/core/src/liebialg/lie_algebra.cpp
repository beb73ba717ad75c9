#include "twistlab/liebialg/lie_algebra.hpp"

#include "twistlab/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twistlab::fixtures_detail {
const std::map<std::string, std::string>& embedded();
}

namespace twistlab::liebialg {

using nlohmann::json;

namespace {

Rational parse_rational(const json& v) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    Rational q(v.get<std::string>());
    q.canonicalize();
    return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

}  // namespace

// ---------------------------------------------------------------- LieAlgebra

LieAlgebra LieAlgebra::from_triples(std::string name, std::vector<std::string> basis,
                                    const std::vector<BracketTriple>& triples) {
    auto d = std::make_shared<Data>();
    d->name = std::move(name);
    d->basis = std::move(basis);
    const int n = static_cast<int>(d->basis.size());
    d->c.assign(static_cast<std::size_t>(n) * n * n, Rational(0));
    std::vector<bool> set(d->c.size(), false);
    auto at = [&](int i, int j, int k) { return static_cast<std::size_t>((i * n + j) * n + k); };
    for (const auto& t : triples) {
        if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n || t.j >= n || t.k >= n)
            throw BasisMismatch("structure constant index out of range");
        if (t.i == t.j && t.c != 0) throw PreconditionFailed("[X,X] must vanish for " + d->basis[t.i]);
        auto put = [&](std::size_t p, const Rational& v) {
            if (set[p] && d->c[p] != v) throw PreconditionFailed("inconsistent structure constants");
            d->c[p] = v;
            set[p] = true;
        };
        put(at(t.i, t.j, t.k), t.c);
        put(at(t.j, t.i, t.k), -t.c);
    }
    LieAlgebra g;
    g.d_ = std::move(d);
    return g;
}

LieAlgebra LieAlgebra::from_json(const std::string& text) {
    json j = json::parse(text);
    std::vector<BracketTriple> triples;
    for (const auto& t : j.at("brackets"))
        triples.push_back({t.at(0).get<int>(), t.at(1).get<int>(), t.at(2).get<int>(), parse_rational(t.at(3))});
    return from_triples(j.at("name").get<std::string>(), j.at("basis").get<std::vector<std::string>>(), triples);
}

std::string LieAlgebra::to_json() const {
    json j;
    j["name"] = name();
    j["basis"] = basis();
    j["brackets"] = json::array();
    for (const auto& t : triples()) j["brackets"].push_back({t.i, t.j, t.k, rational_str(t.c)});
    return j.dump(2);
}

int LieAlgebra::index(const std::string& label) const {
    for (int i = 0; i < dim(); ++i)
        if (d_->basis[i] == label) return i;
    throw BasisMismatch("no basis element '" + label + "' in " + name());
}

std::vector<BracketTriple> LieAlgebra::triples() const {
    std::vector<BracketTriple> out;
    for (int i = 0; i < dim(); ++i)
        for (int j = i + 1; j < dim(); ++j)
            for (int k = 0; k < dim(); ++k)
                if (c(i, j, k) != 0) out.push_back({i, j, k, c(i, j, k)});
    return out;
}

// ---------------------------------------------------------------- Tensor

Tensor Tensor::basis(const LieAlgebra& g, int i) {
    Tensor t(g, 1);
    t.add({i}, 1);
    return t;
}

Tensor Tensor::vector(const LieAlgebra& g, const std::vector<Rational>& comps) {
    if (static_cast<int>(comps.size()) != g.dim()) throw BasisMismatch("component count differs from dimension");
    Tensor t(g, 1);
    for (int i = 0; i < g.dim(); ++i) t.add({i}, comps[i]);
    return t;
}

Tensor Tensor::tensor(const Tensor& a, const Tensor& b) {
    a.check_same(b);
    Tensor t(a.g_, a.deg_ + b.deg_);
    for (const auto& [ia, ca] : a.t_)
        for (const auto& [ib, cb] : b.t_) {
            Index idx = ia;
            idx.insert(idx.end(), ib.begin(), ib.end());
            t.add(idx, ca * cb);
        }
    return t;
}

Tensor Tensor::wedge(const Tensor& a, const Tensor& b) { return tensor(a, b) - tensor(b, a); }

Rational Tensor::coeff(const Index& idx) const {
    auto it = t_.find(idx);
    return it == t_.end() ? Rational(0) : it->second;
}

void Tensor::add(const Index& idx, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(idx, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

bool Tensor::is_alternating() const {
    for (int p = 0; p + 1 < deg_; ++p) {
        std::vector<int> perm(deg_);
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[p], perm[p + 1]);
        if (!(permuted(perm) == *this * Rational(-1))) return false;
    }
    return true;
}

Tensor Tensor::permuted(const std::vector<int>& perm) const {
    Tensor t(g_, deg_);
    for (const auto& [idx, c] : t_) {
        Index out(deg_);
        for (int p = 0; p < deg_; ++p) out[p] = idx[perm[p]];
        t.add(out, c);
    }
    return t;
}

void Tensor::check_same(const Tensor& o) const {
    if (g_.valid() && o.g_.valid() && !g_.same_as(o.g_)) throw BasisMismatch("tensors over different algebras");
}

Tensor Tensor::operator+(const Tensor& o) const {
    check_same(o);
    if (t_.empty() && !g_.valid()) return o;
    if (deg_ != o.deg_ && !o.t_.empty() && !t_.empty()) throw BasisMismatch("tensor degrees differ");
    Tensor r = t_.empty() ? Tensor(o.g_.valid() ? o.g_ : g_, o.deg_) : *this;
    if (t_.empty()) r.t_ = o.t_;
    else
        for (const auto& [idx, c] : o.t_) r.add(idx, c);
    return r;
}

Tensor Tensor::operator-(const Tensor& o) const { return *this + o * Rational(-1); }

Tensor Tensor::operator*(const Rational& s) const {
    Tensor r(g_, deg_);
    if (s == 0) return r;
    for (const auto& [idx, c] : t_) r.t_.emplace(idx, c * s);
    return r;
}

Tensor Tensor::ad(const Tensor& x) const {
    check_same(x);
    if (x.deg_ != 1) throw BasisMismatch("ad needs a degree-1 element");
    const int n = g_.dim();
    Tensor r(g_, deg_);
    for (const auto& [xi, xc] : x.t_)
        for (const auto& [idx, c] : t_)
            for (int p = 0; p < deg_; ++p)
                for (int k = 0; k < n; ++k) {
                    const Rational& s = g_.c(xi[0], idx[p], k);
                    if (s == 0) continue;
                    Index out = idx;
                    out[p] = k;
                    r.add(out, xc * c * s);
                }
    return r;
}

std::string Tensor::str() const {
    if (t_.empty()) return "0";
    bool alt = deg_ >= 2 && is_alternating();
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : t_) {
        if (alt && !std::is_sorted(idx.begin(), idx.end())) continue;
        if (alt && std::adjacent_find(idx.begin(), idx.end()) != idx.end()) continue;
        Rational a = abs(c);
        if (first) os << (c < 0 ? "-" : "");
        else os << (c < 0 ? " - " : " + ");
        first = false;
        if (a != 1) os << a.get_str() << (deg_ == 1 ? "*" : " ");
        for (int p = 0; p < deg_; ++p) {
            if (p) os << (alt ? "^" : "(x)");
            os << g_.label(idx[p]);
        }
    }
    return os.str();
}

Tensor bracket(const Tensor& x, const Tensor& y) {
    if (x.degree() != 1 || y.degree() != 1) throw BasisMismatch("bracket needs degree-1 elements");
    if (!x.algebra().same_as(y.algebra())) throw BasisMismatch("bracket of elements over different algebras");
    return y.ad(x);
}

// ---------------------------------------------------------------- checks

VerificationReport jacobi_check(const LieAlgebra& g) {
    VerificationReport rep("jacobi " + g.name());
    const int n = g.dim();
    int bad = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                // [[Xi,Xj],Xk] + [[Xj,Xk],Xi] + [[Xk,Xi],Xj]
                std::vector<Rational> jac(n, 0);
                for (int m = 0; m < n; ++m)
                    for (int l = 0; l < n; ++l)
                        jac[l] += g.c(i, j, m) * g.c(m, k, l) + g.c(j, k, m) * g.c(m, i, l) + g.c(k, i, m) * g.c(m, j, l);
                bool zero = std::all_of(jac.begin(), jac.end(), [](const Rational& q) { return q == 0; });
                if (!zero) {
                    ++bad;
                    rep.add("triple (" + g.label(i) + "," + g.label(j) + "," + g.label(k) + ")", false,
                            "nonzero Jacobiator");
                }
            }
    if (bad == 0) rep.add("all basis triples", true, std::to_string(n * (n - 1) * (n - 2) / 6) + " triples");
    return rep;
}

Tensor schouten_cybe(const Tensor& r) {
    const LieAlgebra& g = r.algebra();
    const int n = g.dim();
    Tensor out(g, 3);
    for (const auto& [ij, a] : r.terms())
        for (const auto& [kl, b] : r.terms()) {
            int i = ij[0], j = ij[1], k = kl[0], l = kl[1];
            for (int m = 0; m < n; ++m) {
                out.add({m, j, l}, a * b * g.c(i, k, m));  // [r12, r13]
                out.add({i, m, l}, a * b * g.c(j, k, m));  // [r12, r23]
                out.add({i, k, m}, a * b * g.c(j, l, m));  // [r13, r23]
            }
        }
    return out;
}

Tensor schouten_cybe_bruteforce(const Tensor& r) {
    // Embed r into legs (p,q) of the triple tensor power with the unit on
    // the remaining leg, then form commutators leg by leg. The unit is
    // encoded as index -1.
    const LieAlgebra& g = r.algebra();
    const int n = g.dim();
    using Elem = std::map<std::vector<int>, Rational>;
    auto embed = [&](int p, int q) {
        Elem e;
        for (const auto& [idx, c] : r.terms()) {
            std::vector<int> k{-1, -1, -1};
            k[p] = idx[0];
            k[q] = idx[1];
            e[k] += c;
        }
        return e;
    };
    // Multiply leg by leg in the tensor cube of the enveloping algebra.
    // A leg carrying two letters XY is rewritten as the sorted word plus
    // [X,Y] when X > Y; sorted words must cancel in the commutator.
    auto commutator = [&](const Elem& A, const Elem& B) {
        Tensor out(g, 3);
        std::map<std::vector<int>, Rational> sorted;  // 3 legs x 2 slots
        auto product = [&](const std::vector<int>& ka, const std::vector<int>& kb, const Rational& c) {
            int two = -1;
            std::vector<int> idx(3, -1);
            for (int p = 0; p < 3; ++p) {
                if (ka[p] >= 0 && kb[p] >= 0) two = p;
                else idx[p] = std::max(ka[p], kb[p]);
            }
            if (two < 0) throw Error("commuting legs in brute-force CYBE");
            int x = ka[two], y = kb[two];
            std::vector<int> key{idx[0], idx[1], idx[2], two, std::min(x, y), std::max(x, y)};
            sorted[key] += c;
            if (x > y)
                for (int m = 0; m < n; ++m) {
                    idx[two] = m;
                    out.add(idx, c * g.c(x, y, m));
                }
        };
        for (const auto& [ka, ca] : A)
            for (const auto& [kb, cb] : B) {
                product(ka, kb, ca * cb);
                product(kb, ka, -ca * cb);
            }
        for (const auto& [k, c] : sorted)
            if (c != 0) throw Error("non-Lie term in brute-force CYBE");
        return out;
    };
    Elem r12 = embed(0, 1), r13 = embed(0, 2), r23 = embed(1, 2);
    return commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23);
}

Tensor cobracket(const Tensor& r, const Tensor& x) {
    // [r, X(x)1 + 1(x)X] = -(X . r)
    return r.ad(x) * Rational(-1);
}

std::vector<Tensor> cobracket_table(const Tensor& r) {
    std::vector<Tensor> out;
    for (int k = 0; k < r.algebra().dim(); ++k) out.push_back(cobracket(r, Tensor::basis(r.algebra(), k)));
    return out;
}

namespace {

std::string dual_label(const std::string& s) {
    if (!s.empty() && s.back() == '*') return s.substr(0, s.size() - 1);
    return s + "*";
}

}  // namespace

LieAlgebra dual_algebra(const LieAlgebra& g, const std::vector<Tensor>& delta) {
    const int n = g.dim();
    if (static_cast<int>(delta.size()) != n) throw BasisMismatch("cobracket table size differs from dimension");
    std::vector<BracketTriple> triples;
    for (int k = 0; k < n; ++k) {
        if (!delta[k].is_zero() && (delta[k].degree() != 2 || !delta[k].is_alternating()))
            throw PreconditionFailed("cobracket of " + g.label(k) + " is not alternating");
        for (const auto& [idx, c] : delta[k].terms())
            if (idx[0] < idx[1]) triples.push_back({idx[0], idx[1], k, c});
    }
    std::vector<std::string> basis;
    for (const auto& b : g.basis()) basis.push_back(dual_label(b));
    std::string name = g.name().size() > 5 && g.name().substr(g.name().size() - 5) == "_dual"
                           ? g.name().substr(0, g.name().size() - 5)
                           : g.name() + "_dual";
    LieAlgebra d = LieAlgebra::from_triples(name, basis, triples);
    auto rep = jacobi_check(d);
    if (!rep.passed()) throw PreconditionFailed("co-Jacobi fails for the cobracket of " + g.name());
    return d;
}

std::vector<Tensor> transpose_cobracket(const LieAlgebra& g) {
    const int n = g.dim();
    std::vector<std::string> basis;
    for (const auto& b : g.basis()) basis.push_back(dual_label(b));
    // Abelian algebra on the dual labels carrying the tensors.
    LieAlgebra carrier = LieAlgebra::from_triples(g.name() + "_dual", basis, {});
    std::vector<Tensor> out;
    for (int k = 0; k < n; ++k) {
        Tensor t(carrier, 2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t.add({i, j}, g.c(i, j, k));
        out.push_back(t);
    }
    return out;
}

VerificationReport cobracket_cocycle_check(const Tensor& r) {
    const LieAlgebra& g = r.algebra();
    VerificationReport rep("cobracket cocycle " + g.name());
    for (int i = 0; i < g.dim(); ++i)
        for (int j = i + 1; j < g.dim(); ++j) {
            Tensor X = Tensor::basis(g, i), Y = Tensor::basis(g, j);
            Tensor lhs = cobracket(r, bracket(X, Y));
            Tensor rhs = cobracket(r, Y).ad(X) - cobracket(r, X).ad(Y);
            rep.add("(" + g.label(i) + "," + g.label(j) + ")", lhs == rhs, lhs.str() + " vs " + rhs.str());
        }
    return rep;
}

VerificationReport bracket_intertwine_check(const LieAlgebra& src, const LieAlgebra& dst,
                                            const std::vector<std::vector<Rational>>& matrix) {
    VerificationReport rep("intertwine " + src.name() + " -> " + dst.name());
    auto image = [&](const Tensor& x) {
        std::vector<Rational> v(dst.dim(), 0);
        for (const auto& [idx, c] : x.terms())
            for (int k = 0; k < dst.dim(); ++k) v[k] += c * matrix[idx[0]][k];
        return Tensor::vector(dst, v);
    };
    for (int i = 0; i < src.dim(); ++i)
        for (int j = i + 1; j < src.dim(); ++j) {
            Tensor X = Tensor::basis(src, i), Y = Tensor::basis(src, j);
            Tensor lhs = image(bracket(X, Y));
            Tensor rhs = bracket(image(X), image(Y));
            rep.add("(" + src.label(i) + "," + src.label(j) + ")", lhs == rhs, lhs.str() + " vs " + rhs.str());
        }
    return rep;
}

// ---------------------------------------------------------------- fixtures

std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& [k, v] : fixtures_detail::embedded()) out.push_back(k);
    return out;
}

std::string fixture_text(const std::string& name) {
    const auto& m = fixtures_detail::embedded();
    auto it = m.find(name);
    if (it == m.end()) throw Error("unknown fixture '" + name + "'");
    return it->second;
}

LieAlgebra fixture(const std::string& name) {
    LieAlgebra g = LieAlgebra::from_json(fixture_text(name));
    if (!jacobi_check(g).passed()) throw PreconditionFailed("fixture " + name + " fails Jacobi");
    return g;
}

LieAlgebra build_axb() { return fixture("axb"); }
LieAlgebra build_double_axb() { return fixture("axb_double"); }

Tensor r_matrix_axb(const LieAlgebra& g) {
    return Tensor::wedge(Tensor::basis(g, "H"), Tensor::basis(g, "E"));
}

VerificationReport double_heisenberg_check(const LieAlgebra& d) {
    VerificationReport rep("heisenberg subalgebra");
    Tensor H = Tensor::basis(d, "H"), E = Tensor::basis(d, "E");
    Tensor bH = Tensor::basis(d, "bH"), bE = Tensor::basis(d, "bE");
    Tensor F = bH - H;
    Tensor Z = E * Rational(2) - bE * Rational(2);
    Tensor EF = bracket(E, F);
    // Find s with [E,F] = s Z.
    Rational s = 0;
    bool proportional = false;
    if (!EF.is_zero()) {
        auto [idx, c] = *Z.terms().begin();
        s = EF.coeff(idx) / c;
        proportional = EF == Z * s;
    }
    rep.add("[E,F] proportional to Z", proportional, EF.str());
    rep.add("[E,Z] = 0", bracket(E, Z).is_zero());
    rep.add("[F,Z] = 0", bracket(F, Z).is_zero());
    rep.record("z_scale", s.get_str());
    return rep;
}

}  // namespace twistlab::liebialg
