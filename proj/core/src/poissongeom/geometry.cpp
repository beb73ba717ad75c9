#include "twistlab/poissongeom/geometry.hpp"

#include "twistlab/errors.hpp"

#include <algorithm>

namespace twistlab::poissongeom {

namespace {

// Sorts idx in place; returns the permutation sign, or 0 on a repeated entry.
int sort_sign(Index& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    return sign;
}

// theta_I theta_J = sign theta_K
int concat_sign(const Index& a, const Index& b, Index& out) {
    out = a;
    out.insert(out.end(), b.begin(), b.end());
    return sort_sign(out);
}

// Right derivative d_r theta_I / d theta_i = sign theta_{I \ i}.
int right_derivative(const Index& idx, int i, Index& out) {
    auto it = std::find(idx.begin(), idx.end(), i);
    if (it == idx.end()) return 0;
    auto m = it - idx.begin();
    out = idx;
    out.erase(out.begin() + m);
    return (static_cast<long>(idx.size()) - 1 - m) % 2 ? -1 : 1;
}

std::string wrap(const Scalar& c) {
    std::string s = c.str();
    return s.find_first_of(" /") == std::string::npos ? s : "(" + s + ")";
}

template <class Tag>
constexpr const char* prefix() {
    return std::is_same_v<Tag, FormTag> ? "d" : "d_";
}

}  // namespace

// ---------------------------------------------------------------- Chart

Chart::Chart(std::string name, std::vector<std::string> coords) : name_(std::move(name)), coords_(std::move(coords)) {
    if (coords_.empty()) throw PreconditionFailed("chart " + name_ + " has no coordinates");
}

int Chart::index(const std::string& coord) const {
    auto it = std::find(coords_.begin(), coords_.end(), coord);
    if (it == coords_.end()) throw UnknownCoordinate("chart " + name_ + " has no coordinate " + coord);
    return static_cast<int>(it - coords_.begin());
}

void require_same_chart(const Chart& a, const Chart& b, const char* what) {
    if (!(a == b)) throw ChartMismatch(std::string(what) + ": chart " + a.name() + " vs " + b.name());
}

// ---------------------------------------------------------------- VectorField

VectorField::VectorField(Chart chart) : chart_(std::move(chart)), c_(chart_.dim()) {}

VectorField::VectorField(Chart chart, std::vector<Scalar> comps) : chart_(std::move(chart)), c_(std::move(comps)) {
    if (static_cast<int>(c_.size()) != chart_.dim()) throw ChartMismatch("vector field component count");
}

VectorField VectorField::coordinate(const Chart& chart, const std::string& coord) {
    VectorField v(chart);
    v.c_[chart.index(coord)] = 1;
    return v;
}

bool VectorField::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Scalar VectorField::apply(const Scalar& f) const {
    Scalar out;
    for (int i = 0; i < chart_.dim(); ++i)
        if (!c_[i].is_zero()) out += c_[i] * f.diff(chart_.coords()[i]);
    return out;
}

VectorField VectorField::operator+(const VectorField& o) const {
    require_same_chart(chart_, o.chart_, "vector field sum");
    VectorField r = *this;
    for (int i = 0; i < chart_.dim(); ++i) r.c_[i] += o.c_[i];
    return r;
}

VectorField VectorField::operator-(const VectorField& o) const { return *this + o * Scalar(-1); }

VectorField VectorField::operator*(const Scalar& s) const {
    VectorField r = *this;
    for (auto& c : r.c_) c *= s;
    return r;
}

namespace {

std::string coef_times(const Scalar& c, const std::string& base) {
    if (c == Scalar(1)) return base;
    if (c == Scalar(-1)) return "-" + base;
    return wrap(c) + "*" + base;
}

void append_term(std::string& out, const std::string& term) {
    if (out.empty())
        out = term;
    else if (term[0] == '-')
        out += " - " + term.substr(1);
    else
        out += " + " + term;
}

}  // namespace

std::string VectorField::str() const {
    std::string out;
    for (int i = 0; i < chart_.dim(); ++i)
        if (!c_[i].is_zero()) append_term(out, coef_times(c_[i], "d_" + chart_.coords()[i]));
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- Graded

template <class Tag>
Graded<Tag> Graded<Tag>::basis(const Chart& chart, const std::vector<std::string>& coords, const Scalar& c) {
    Graded g(chart, static_cast<int>(coords.size()));
    Index idx;
    for (const auto& s : coords) idx.push_back(chart.index(s));
    g.add(idx, c);
    return g;
}

template <class Tag>
Scalar Graded<Tag>::coeff(const Index& idx) const {
    Index s = idx;
    int sign = sort_sign(s);
    if (sign == 0) return 0;
    auto it = t_.find(s);
    if (it == t_.end()) return 0;
    return sign > 0 ? it->second : -it->second;
}

template <class Tag>
Scalar Graded<Tag>::coeff(const std::vector<std::string>& coords) const {
    Index idx;
    for (const auto& c : coords) idx.push_back(chart_.index(c));
    return coeff(idx);
}

template <class Tag>
void Graded<Tag>::add(const Index& idx, const Scalar& c) {
    if (static_cast<int>(idx.size()) != deg_) throw PreconditionFailed("index length differs from degree");
    if (c.is_zero()) return;
    Index s = idx;
    int sign = sort_sign(s);
    if (sign == 0) return;
    auto [it, fresh] = t_.emplace(s, sign > 0 ? c : -c);
    if (!fresh) {
        it->second += sign > 0 ? c : -c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator+(const Graded& o) const {
    require_same_chart(chart_, o.chart_, "sum");
    if (t_.empty()) return o;
    if (!o.t_.empty() && deg_ != o.deg_) throw PreconditionFailed("sum of different degrees");
    Graded r = *this;
    for (const auto& [k, c] : o.t_) r.add(k, c);
    return r;
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator-(const Graded& o) const {
    return *this + o * Scalar(-1);
}

template <class Tag>
Graded<Tag> Graded<Tag>::operator*(const Scalar& s) const {
    Graded r(chart_, deg_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : t_) r.t_.emplace(k, c * s);
    return r;
}

template <class Tag>
std::string Graded<Tag>::str() const {
    std::string out;
    for (const auto& [idx, c] : t_) {
        std::string base;
        for (int i : idx) base += (base.empty() ? "" : "^") + std::string(prefix<Tag>()) + chart_.coords()[i];
        append_term(out, base.empty() ? c.str() : coef_times(c, base));
    }
    return out.empty() ? "0" : out;
}

template <class Tag>
Graded<Tag> wedge(const Graded<Tag>& a, const Graded<Tag>& b) {
    require_same_chart(a.chart(), b.chart(), "wedge");
    Graded<Tag> r(a.chart(), a.degree() + b.degree());
    for (const auto& [i, ca] : a.terms())
        for (const auto& [j, cb] : b.terms()) {
            Index k;
            int s = concat_sign(i, j, k);
            if (s) r.add(k, s > 0 ? ca * cb : -(ca * cb));
        }
    return r;
}

template class Graded<FormTag>;
template class Graded<MultivectorTag>;
template Form wedge(const Form&, const Form&);
template Multivector wedge(const Multivector&, const Multivector&);

Form one_form(const Chart& chart, const std::vector<Scalar>& comps) {
    if (static_cast<int>(comps.size()) != chart.dim()) throw ChartMismatch("one-form component count");
    Form f(chart, 1);
    for (int i = 0; i < chart.dim(); ++i) f.add({i}, comps[i]);
    return f;
}

Multivector bivector(const Chart& chart, const std::string& a, const std::string& b, const Scalar& c) {
    return Multivector::basis(chart, {a, b}, c);
}

Multivector to_multivector(const VectorField& x) {
    Multivector m(x.chart(), 1);
    for (int i = 0; i < x.chart().dim(); ++i) m.add({i}, x[i]);
    return m;
}

VectorField to_vector_field(const Multivector& m) {
    if (!m.is_zero() && m.degree() != 1) throw PreconditionFailed("multivector of degree " + std::to_string(m.degree()) + " is not a vector field");
    VectorField v(m.chart());
    std::vector<Scalar> c(m.chart().dim());
    for (const auto& [idx, s] : m.terms()) c[idx[0]] = s;
    return VectorField(m.chart(), c);
}

// ---------------------------------------------------------------- calculus

VectorField lie_bracket_vf(const VectorField& x, const VectorField& y) {
    require_same_chart(x.chart(), y.chart(), "lie bracket");
    std::vector<Scalar> c(x.chart().dim());
    for (int i = 0; i < x.chart().dim(); ++i) c[i] = x.apply(y[i]) - y.apply(x[i]);
    return VectorField(x.chart(), c);
}

Form de_rham_d(const Chart& chart, const Scalar& f) {
    Form r(chart, 1);
    for (int i = 0; i < chart.dim(); ++i) r.add({i}, f.diff(chart.coords()[i]));
    return r;
}

Form de_rham_d(const Form& w) {
    const Chart& ch = w.chart();
    Form r(ch, w.degree() + 1);
    for (const auto& [idx, c] : w.terms())
        for (int j = 0; j < ch.dim(); ++j) {
            Index k{j};
            k.insert(k.end(), idx.begin(), idx.end());
            r.add(k, c.diff(ch.coords()[j]));
        }
    return r;
}

Form interior(const VectorField& x, const Form& w) {
    require_same_chart(x.chart(), w.chart(), "interior product");
    if (w.degree() == 0) return Form(w.chart(), 0);
    Form r(w.chart(), w.degree() - 1);
    for (const auto& [idx, c] : w.terms())
        for (std::size_t m = 0; m < idx.size(); ++m) {
            Index k = idx;
            k.erase(k.begin() + static_cast<long>(m));
            Scalar t = x[idx[m]] * c;
            r.add(k, m % 2 ? -t : t);
        }
    return r;
}

Form lie_derivative(const VectorField& x, const Form& w) {
    require_same_chart(x.chart(), w.chart(), "lie derivative");
    if (w.degree() == 0) return Form::scalar(w.chart(), x.apply(w.coeff(Index{})));
    return interior(x, de_rham_d(w)) + de_rham_d(interior(x, w));
}

Scalar pi_pair(const Multivector& pi, const Form& a, const Form& b) {
    require_same_chart(pi.chart(), a.chart(), "pairing");
    require_same_chart(pi.chart(), b.chart(), "pairing");
    Scalar out;
    for (const auto& [idx, c] : pi.terms()) {
        if (idx.size() != 2) throw PreconditionFailed("pairing needs a bivector");
        int i = idx[0], j = idx[1];
        out += c * (a.coeff(Index{i}) * b.coeff(Index{j}) - a.coeff(Index{j}) * b.coeff(Index{i}));
    }
    return out;
}

VectorField sharp(const Multivector& pi, const Form& a) {
    const Chart& ch = pi.chart();
    std::vector<Scalar> c(ch.dim());
    for (int i = 0; i < ch.dim(); ++i) c[i] = pi_pair(pi, Form::basis(ch, {ch.coords()[i]}), a);
    return VectorField(ch, c);
}

Multivector wedge_sharp(const Multivector& pi, const Form& xi) {
    const Chart& ch = pi.chart();
    require_same_chart(ch, xi.chart(), "wedge sharp");
    std::vector<Multivector> images;
    for (int i = 0; i < ch.dim(); ++i) images.push_back(to_multivector(sharp(pi, Form::basis(ch, {ch.coords()[i]}))));
    Multivector out(ch, xi.degree());
    for (const auto& [idx, c] : xi.terms()) {
        Multivector t = Multivector::scalar(ch, c);
        for (int i : idx) t = wedge(t, images[i]);
        out = out + t;
    }
    return out;
}

Form koszul_bracket(const Multivector& pi, const Form& a, const Form& b) {
    VectorField sa = sharp(pi, a), sb = sharp(pi, b);
    // <pi^# a, b>
    Scalar pab;
    for (int i = 0; i < pi.chart().dim(); ++i) pab += sa[i] * b.coeff(Index{i});
    return lie_derivative(sa, b) - lie_derivative(sb, a) - de_rham_d(pi.chart(), pab);
}

Multivector schouten_bracket(const Multivector& p, const Multivector& q) {
    const Chart& ch = p.chart();
    require_same_chart(ch, q.chart(), "schouten bracket");
    const int dp = p.degree(), dq = q.degree();
    Multivector r(ch, dp + dq - 1);
    if (dp + dq == 0) return r;
    const int sym = ((dp - 1) * (dq - 1)) % 2 ? -1 : 1;
    auto half = [&](const Multivector& a, const Multivector& b, int outer) {
        for (int i = 0; i < ch.dim(); ++i) {
            const std::string& xi = ch.coords()[i];
            for (const auto& [ia, ca] : a.terms()) {
                Index ra;
                int s1 = right_derivative(ia, i, ra);
                if (!s1) continue;
                for (const auto& [ib, cb] : b.terms()) {
                    Scalar db = cb.diff(xi);
                    if (db.is_zero()) continue;
                    Index k;
                    int s2 = concat_sign(ra, ib, k);
                    if (!s2) continue;
                    Scalar t = ca * db;
                    r.add(k, s1 * s2 * outer > 0 ? t : -t);
                }
            }
        }
    };
    half(p, q, 1);
    half(q, p, -sym);
    return r;
}

Scalar poisson_bracket(const Multivector& pi, const Scalar& f, const Scalar& g) {
    return pi_pair(pi, de_rham_d(pi.chart(), f), de_rham_d(pi.chart(), g));
}

VerificationReport sharp_compat_check(const Multivector& pi, const Form& xi) {
    VerificationReport rep("sharp compatibility");
    Multivector lhs = schouten_bracket(pi, wedge_sharp(pi, xi));
    Multivector rhs = wedge_sharp(pi, de_rham_d(xi));
    bool ok = lhs == rhs;
    rep.add("[pi, pi^# xi] = pi^#(d xi)", ok, ok ? lhs.str() : "lhs " + lhs.str() + ", rhs " + rhs.str());
    rep.record("lhs", lhs.str());
    rep.record("rhs", rhs.str());
    return rep;
}

// ---------------------------------------------------------------- maps

ChartMap::ChartMap(Chart source, Chart target, std::vector<Scalar> exprs)
    : src_(std::move(source)), dst_(std::move(target)), f_(std::move(exprs)) {
    if (static_cast<int>(f_.size()) != dst_.dim()) throw ChartMismatch("chart map needs one expression per target coordinate");
    for (const auto& e : f_)
        for (const auto& c : e.coordinates()) src_.index(c);
}

ChartMap ChartMap::identity(const Chart& chart) {
    std::vector<Scalar> f;
    for (int i = 0; i < chart.dim(); ++i) f.push_back(chart.coord(i));
    ChartMap m(chart, chart, f);
    m.inv_ = f;
    return m;
}

const std::vector<Scalar>& ChartMap::inverse_exprs() const {
    if (!inv_) throw PreconditionFailed("chart map " + src_.name() + " -> " + dst_.name() + " has no inverse");
    return *inv_;
}

ChartMap& ChartMap::with_inverse(std::vector<Scalar> inverse) {
    ChartMap back(dst_, src_, std::move(inverse));
    ChartMap there = back.compose(*this), again = compose(back);
    for (int i = 0; i < src_.dim(); ++i)
        if (!(there.f_[i] == src_.coord(i))) throw PreconditionFailed("inverse fails on " + src_.coords()[i]);
    for (int i = 0; i < dst_.dim(); ++i)
        if (!(again.f_[i] == dst_.coord(i))) throw PreconditionFailed("inverse fails on " + dst_.coords()[i]);
    inv_ = back.f_;
    return *this;
}

ChartMap ChartMap::inverse() const {
    ChartMap m(dst_, src_, inverse_exprs());
    m.inv_ = f_;
    return m;
}

Scalar ChartMap::apply_subs(const Scalar& f) const {
    std::map<std::string, Scalar> repl;
    for (int i = 0; i < dst_.dim(); ++i) repl[dst_.coords()[i]] = f_[i];
    return f.subs(repl);
}

ChartMap ChartMap::compose(const ChartMap& inner) const {
    require_same_chart(inner.dst_, src_, "compose");
    std::vector<Scalar> f;
    for (const auto& e : f_) f.push_back(inner.apply_subs(e));
    ChartMap m(inner.src_, dst_, f);
    if (inv_ && inner.inv_) {
        std::vector<Scalar> g;
        ChartMap a(dst_, src_, *inv_), b(src_, inner.src_, *inner.inv_);
        for (const auto& e : b.f_) g.push_back(a.apply_subs(e));
        m.inv_ = g;
    }
    return m;
}

std::vector<std::vector<Scalar>> ChartMap::jacobian() const {
    std::vector<std::vector<Scalar>> j;
    for (const auto& e : f_) {
        std::vector<Scalar> row;
        for (const auto& c : src_.coords()) row.push_back(e.diff(c));
        j.push_back(row);
    }
    return j;
}

Scalar pullback(const ChartMap& j, const Scalar& f) { return j.apply_subs(f); }

Form pullback(const ChartMap& j, const Form& w) {
    require_same_chart(j.target(), w.chart(), "pullback");
    const Chart& src = j.source();
    std::vector<Form> dj;
    for (const auto& e : j.exprs()) dj.push_back(de_rham_d(src, e));
    Form out(src, w.degree());
    for (const auto& [idx, c] : w.terms()) {
        Form t = Form::scalar(src, j.apply_subs(c));
        for (int i : idx) t = wedge(t, dj[i]);
        out = out + t;
    }
    return out;
}

VectorField pushforward_vf(const ChartMap& j, const VectorField& x) {
    require_same_chart(j.source(), x.chart(), "pushforward");
    ChartMap back = j.inverse();
    auto jac = j.jacobian();
    std::vector<Scalar> c;
    for (int i = 0; i < j.target().dim(); ++i) {
        Scalar s;
        for (int k = 0; k < j.source().dim(); ++k) s += jac[i][k] * x[k];
        c.push_back(back.apply_subs(s));
    }
    return VectorField(j.target(), c);
}

Multivector pushforward(const ChartMap& j, const Multivector& m) {
    require_same_chart(j.source(), m.chart(), "pushforward");
    ChartMap back = j.inverse();
    const Chart& src = j.source();
    std::vector<Multivector> images;
    for (int k = 0; k < src.dim(); ++k)
        images.push_back(to_multivector(pushforward_vf(j, VectorField::coordinate(src, src.coords()[k]))));
    Multivector out(j.target(), m.degree());
    for (const auto& [idx, c] : m.terms()) {
        Multivector t = Multivector::scalar(j.target(), back.apply_subs(c));
        for (int i : idx) t = wedge(t, images[i]);
        out = out + t;
    }
    return out;
}

}  // namespace twistlab::poissongeom
