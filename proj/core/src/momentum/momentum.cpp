#include "twistlab/momentum/momentum.hpp"

#include "twistlab/errors.hpp"
#include "twistlab/exprcas/sampling.hpp"

#include <sstream>

namespace twistlab::momentum {

using axbdouble::ChartPoint;
using poissongeom::Form;
using quantizeudf::SSeries;
using quantizeudf::StarProduct;

namespace {

Scalar sym(const std::string& n) { return Scalar::coord(n); }

liebialg::LieAlgebra axb() { return liebialg::build_axb(); }

std::vector<Scalar> dressing_functions() {
    Scalar x = sym("x"), y = sym("y");
    return {x, y, x * y};
}

// Jacobian of J applied to a field on the source, as target components over the source.
std::vector<Scalar> push_components(const ChartMap& J, const VectorField& v) {
    auto jac = J.jacobian();
    std::vector<Scalar> out;
    for (const auto& row : jac) {
        Scalar s;
        for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * v[static_cast<int>(k)];
        out.push_back(s);
    }
    return out;
}

std::vector<Scalar> compose_components(const ChartMap& J, const VectorField& w) {
    std::vector<Scalar> out;
    for (const auto& c : w.components()) out.push_back(J.apply_subs(c));
    return out;
}

std::string comps_str(const std::vector<Scalar>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + ")";
}

MomentumMap on_dressing(std::string name, std::vector<Scalar> exprs) {
    Chart ch = axbdouble::dressing_chart();
    return {std::move(name), ChartMap(ch, ch, std::move(exprs))};
}

void per_order(VerificationReport& rep, const std::string& name, int order,
               const std::vector<std::tuple<std::string, SSeries, SSeries>>& cmp) {
    for (int k = 0; k <= order; ++k) {
        int bad = 0;
        std::string fail;
        for (const auto& [label, a, b] : cmp)
            if (!(a[k] == b[k])) {
                ++bad;
                if (fail.empty()) fail = label + ": " + a[k].str() + " vs " + b[k].str();
            }
        rep.add(name + " order " + std::to_string(k), bad == 0,
                bad ? std::to_string(bad) + "/" + std::to_string(cmp.size()) + " fail; " + fail
                    : std::to_string(cmp.size()) + " cases",
                k);
    }
}

}  // namespace

VerificationReport check_momentum_condition(const MomentumMap& J, const HopfAction& phi, const Multivector& pi_m,
                                            const axbdouble::DressingGeneratorSet& alpha) {
    VerificationReport rep("momentum condition " + J.name);
    VerificationReport cert = axbdouble::verify_dressing_generator(alpha, axbdouble::tagged_structure(alpha));
    rep.add("alpha certified against " + alpha.tag, cert.passed());
    const auto& g = phi.algebra();
    for (int i = 0; i < g.dim(); ++i) {
        Form a = poissongeom::pullback(J.J, alpha.alpha.at(g.label(i)));
        VectorField lhs = poissongeom::sharp(pi_m, a);
        rep.add("phi(" + g.label(i) + ") = pi^#(J^* alpha)", lhs == phi.field(i),
                "pi^#(J^* alpha) = " + lhs.str() + ", phi = " + phi.field(i).str());
    }
    return rep;
}

VerificationReport check_ell_equivariance(const MomentumMap& J, const HopfAction& phi, const std::vector<Scalar>& functions) {
    VerificationReport rep("l-equivariance " + J.name);
    const auto& g = phi.algebra();
    for (int i = 0; i < g.dim(); ++i) {
        VectorField l = axbdouble::dressing_field_of(g.label(i));
        bool ok = true;
        std::string fail;
        for (const auto& f : functions) {
            Scalar lhs = phi.field(i).apply(poissongeom::pullback(J.J, f));
            Scalar rhs = poissongeom::pullback(J.J, l.apply(f));
            if (!(lhs == rhs)) {
                ok = false;
                if (fail.empty()) fail = f.str() + ": " + lhs.str() + " vs " + rhs.str();
            }
        }
        rep.add("phi(" + g.label(i) + ") J^* = J^* l", ok, fail);
    }
    return rep;
}

VerificationReport check_poisson_map(const MomentumMap& J, const Multivector& pi_m, const Multivector& pi_g) {
    VerificationReport rep("Poisson map " + J.name);
    const Chart& tgt = J.J.target();
    for (int i = 0; i < tgt.dim(); ++i) {
        Form a = poissongeom::de_rham_d(tgt, tgt.coord(i));
        auto lhs = push_components(J.J, poissongeom::sharp(pi_m, poissongeom::pullback(J.J, a)));
        auto rhs = compose_components(J.J, poissongeom::sharp(pi_g, a));
        rep.add("J_* pi^#(J^* d" + tgt.coords()[i] + ") = pi_G*^#(d" + tgt.coords()[i] + ")", lhs == rhs,
                comps_str(lhs) + " vs " + comps_str(rhs));
    }
    return rep;
}

VerificationReport check_poisson_action(const HopfAction& phi, const Multivector& pi_m) {
    VerificationReport rep("Poisson action " + phi.name());
    const auto& g = phi.algebra();
    liebialg::Tensor r = liebialg::r_matrix_axb(g);
    for (int x = 0; x < g.dim(); ++x) {
        Multivector lhs = poissongeom::schouten_bracket(poissongeom::to_multivector(phi.field(x)), pi_m);
        liebialg::Tensor d = liebialg::cobracket(r, liebialg::Tensor::basis(g, x));
        Multivector rhs(pi_m.chart(), 2);
        for (const auto& [idx, c] : d.terms())
            if (idx[0] < idx[1])
                rhs = rhs + poissongeom::wedge(poissongeom::to_multivector(phi.field(idx[0])),
                                               poissongeom::to_multivector(phi.field(idx[1]))) *
                                Scalar(c);
        rep.add("L_phi(" + g.label(x) + ") pi = (phi^phi)(delta " + g.label(x) + ")", lhs == rhs,
                lhs.str() + " vs " + rhs.str());
    }
    return rep;
}

VerificationReport poisson_eq_equivalence(const MomentumMap& J, const HopfAction& phi, const Multivector& pi_m,
                                          const Multivector& pi_g, const std::vector<Scalar>& functions) {
    VerificationReport rep("Poisson equivalence " + J.name);
    bool eq = check_ell_equivariance(J, phi, functions).passed();
    bool pm = check_poisson_map(J, pi_m, pi_g).passed();
    rep.add("equivariant iff Poisson", eq == pm,
            std::string("equivariance ") + (eq ? "pass" : "fail") + ", Poisson map " + (pm ? "pass" : "fail"));
    rep.record("verdict", std::string(eq ? "pass" : "fail") + "/" + (pm ? "pass" : "fail"));
    return rep;
}

Chart coadjoint_chart() { return Chart("coadjoint", {"xiH", "xiE"}); }

std::vector<Scalar> coadjoint_rep(const std::string& x, const std::vector<Scalar>& xi) {
    auto g = axb();
    int i = g.index(x);
    std::vector<Scalar> out(g.dim());
    for (int k = 0; k < g.dim(); ++k)
        for (int m = 0; m < g.dim(); ++m)
            if (g.c(i, k, m) != 0) out[k] -= Scalar(g.c(i, k, m)) * xi[m];
    return out;
}

HopfAction coadjoint_fields() {
    auto g = axb();
    Chart ch = coadjoint_chart();
    std::vector<Scalar> xi{ch.coord(0), ch.coord(1)};
    std::vector<VectorField> f;
    for (int i = 0; i < g.dim(); ++i) f.emplace_back(ch, coadjoint_rep(g.label(i), xi));
    return HopfAction("coadjoint", g, f);
}

Coaction coadjoint_coaction() {
    Chart ch = coadjoint_chart();
    Scalar h = ch.coord(0), e = ch.coord(1), a = sym("g_a"), n = sym("g_n");
    // Ad*_s xi = xi o Ad_{s^{-1}}, s = exp(aH) exp(nE): H -> H + 2n E, E -> e^{-2a} E
    return Coaction("coadjoint", ch, {h + Scalar(2) * n * e, Scalar::exp(Scalar(-2) * a) * e});
}

Multivector pi_r() {
    auto g = axb();
    return axbdouble::pi_from_r(liebialg::r_matrix_axb(g), coadjoint_fields().fields());
}

axbdouble::DoubleElt j_map(const Scalar& xiH, const Scalar& xiE) {
    // xi = xiH H* + xiE E* = xiE H - xiH E - xiE F - xiH/2 Z
    axbdouble::DoubleElt xi{xiE, -xiH, -xiE, -xiH / Scalar(2)};
    // minus r(xi, .) = xi(E) H - xi(H) E
    xi.a -= xiE;
    xi.vE += xiH;
    return xi;
}

ChartPoint exp_modified(const Scalar& xiH, const Scalar& xiE) {
    axbdouble::Decomposition dec = axbdouble::decompose(axbdouble::double_exp(j_map(xiH, xiE)));
    return {dec.xi.kappa, dec.xi.y_dressing()};
}

MomentumMap exp_momentum_map() {
    Chart src = coadjoint_chart();
    ChartPoint e = exp_modified(src.coord(0), src.coord(1));
    ChartMap J(src, axbdouble::dressing_chart(), {e[0], e[1]});
    Scalar x = sym("x"), y = sym("y");
    J.with_inverse({x, y / Scalar(2)});
    return {"Exp", J};
}

MomentumMap identity_momentum_map() { return {"identity", ChartMap::identity(axbdouble::dressing_chart())}; }
MomentumMap scaled_momentum_map() { return on_dressing("scaled (x, 2y)", {sym("x"), Scalar(2) * sym("y")}); }
MomentumMap constant_momentum_map() { return on_dressing("constant (0, 1)", {Scalar(0), Scalar(1)}); }
MomentumMap shifted_momentum_map() { return on_dressing("shifted (x + 1, y)", {sym("x") + Scalar(1), sym("y")}); }

MomentumMap exp_scaled_momentum_map() {
    Chart src = coadjoint_chart();
    return {"Exp scaled (xiH, 4 xiE)", ChartMap(src, axbdouble::dressing_chart(), {src.coord(0), Scalar(4) * src.coord(1)})};
}

VerificationReport exp_intertwining_check(std::uint64_t seed, int samples) {
    VerificationReport rep("Exp intertwining");
    MomentumMap J = exp_momentum_map();
    HopfAction phi = coadjoint_fields();
    const auto& g = phi.algebra();
    exprcas::Sampler s(seed);
    for (int i = 0; i < g.dim(); ++i) {
        auto lhs = push_components(J.J, phi.field(i));
        auto rhs = compose_components(J.J, axbdouble::dressing_field_of(g.label(i)));
        rep.add("Exp_* phi(" + g.label(i) + ") = l o Exp", lhs == rhs, comps_str(lhs) + " vs " + comps_str(rhs));
        // pointwise: evaluate Exp itself at the point, then l there
        int agreed = 0, total = 0, skipped = 0;
        std::string fail;
        while (total < samples && skipped < 10 * samples) {
            exprcas::Point p;
            p.coord["xiH"] = s.rational();
            p.coord["xiE"] = s.rational();
            ChartPoint e;
            try {
                e = exp_modified(Scalar(p.coord["xiH"]), Scalar(p.coord["xiE"]));
            } catch (const NotInImage&) {
                // xiE = 1/2 leaves the image of the decomposition
                ++skipped;
                continue;
            }
            exprcas::Point q;
            q.coord["x"] = e[0].constant_value();
            q.coord["y"] = e[1].constant_value();
            VectorField l = axbdouble::dressing_field_of(g.label(i));
            ++total;
            bool ok = true;
            for (std::size_t k = 0; k < lhs.size(); ++k)
                if (lhs[k].eval(p) != l[static_cast<int>(k)].eval(q)) ok = false;
            if (ok)
                ++agreed;
            else if (fail.empty())
                fail = "xi = (" + p.coord["xiH"].get_str() + ", " + p.coord["xiE"].get_str() + ")";
        }
        rep.add("Exp_* phi(" + g.label(i) + ") = l at sampled points", total == samples && agreed == total,
                std::to_string(agreed) + "/" + std::to_string(total) + " samples, " + std::to_string(skipped) +
                    " off the image" + (fail.empty() ? "" : "; " + fail));
    }
    return rep;
}

VerificationReport comodule_check(const Coaction& m, const Coaction& g, const MomentumMap& J) {
    VerificationReport rep("comodule " + J.name);
    const Chart& tgt = J.J.target();
    poissongeom::require_same_chart(tgt, g.chart(), "comodule_check");
    poissongeom::require_same_chart(J.J.source(), m.chart(), "comodule_check");
    std::map<std::string, Scalar> at_j;
    for (int i = 0; i < tgt.dim(); ++i) at_j[tgt.coords()[i]] = J.J.exprs()[i];
    bool ok = true;
    std::string fail;
    for (int i = 0; i < tgt.dim(); ++i) {
        Scalar lhs = m.pullback(J.J.exprs()[i]);
        Scalar rhs = g.action()[i].subs(at_j);
        if (!(lhs == rhs)) {
            ok = false;
            if (fail.empty()) fail = tgt.coords()[i] + ": " + lhs.str() + " vs " + rhs.str();
        }
    }
    rep.add("delta_Phi J^* = (J^* (x) id) delta_Lambda", ok, fail);
    return rep;
}

VerificationReport quantum_momentum_check(const MomentumMap& J, const HopfAction& phi, const Coaction& m_coaction,
                                          const ueahopf::TwistSeries& F, int order) {
    VerificationReport rep("quantum momentum " + J.name);
    HopfAction lam = quantizeudf::dressing_hopf_action();
    StarProduct sl(F, lam, order), sp(F, phi, order);
    Coaction dress = quantizeudf::dressing_coaction();
    std::vector<std::tuple<std::string, SSeries, SSeries>> cmp;
    bool comod = true;
    std::string fail;
    std::map<std::string, Scalar> at_j;
    for (int i = 0; i < J.J.target().dim(); ++i) at_j[J.J.target().coords()[i]] = J.J.exprs()[i];
    for (const auto& f : quantizeudf::monomials(lam.chart(), 2))
        for (const auto& g : quantizeudf::monomials(lam.chart(), 2)) {
            SSeries fg = sl(f, g);
            SSeries lhs = fg.map([&](const Scalar& c) { return poissongeom::pullback(J.J, c); });
            SSeries rhs = sp(poissongeom::pullback(J.J, f), poissongeom::pullback(J.J, g));
            cmp.emplace_back("(" + f.str() + ", " + g.str() + ")", lhs, rhs);
            for (int k = 0; k <= order; ++k) {
                Scalar a = m_coaction.pullback(poissongeom::pullback(J.J, fg[k]));
                Scalar b = dress.pullback(fg[k]).subs(at_j);
                if (!(a == b)) {
                    comod = false;
                    if (fail.empty()) fail = "order " + std::to_string(k) + " of (" + f.str() + ", " + g.str() + ")";
                }
            }
        }
    per_order(rep, "J^*(f * g) = J^*f * J^*g", order, cmp);
    rep.add("comodule identity on deformed products", comod, fail);
    if (auto k = rep.first_failing_order()) rep.record("first_failing_order", std::to_string(*k));
    return rep;
}

VerificationReport rsharp_intertwine_check() {
    VerificationReport rep("r^# intertwining");
    auto g = axb();
    liebialg::Tensor r = liebialg::r_matrix_axb(g);
    const int d = g.dim();
    // r^#(xi) = sum r^{ij} xi(X_j) X_i
    auto rsharp = [&](const liebialg::Tensor& rr, const std::vector<liebialg::Rational>& xi) {
        std::vector<liebialg::Rational> v(d, 0);
        for (const auto& [idx, c] : rr.terms()) v[idx[0]] += c * xi[idx[1]];
        return v;
    };
    auto coad = [&](int x, const std::vector<liebialg::Rational>& xi) {
        std::vector<liebialg::Rational> out(d, 0);
        for (int k = 0; k < d; ++k)
            for (int m = 0; m < d; ++m) out[k] -= g.c(x, k, m) * xi[m];
        return out;
    };
    auto ad = [&](int x, const std::vector<liebialg::Rational>& v) {
        std::vector<liebialg::Rational> out(d, 0);
        for (int j = 0; j < d; ++j)
            for (int m = 0; m < d; ++m) out[m] += v[j] * g.c(x, j, m);
        return out;
    };
    auto vec_str = [&](const std::vector<liebialg::Rational>& v) {
        std::string s;
        for (int i = 0; i < d; ++i) s += (i ? ", " : "") + v[i].get_str();
        return "(" + s + ")";
    };
    for (int x = 0; x < d; ++x)
        for (int b = 0; b < d; ++b) {
            std::vector<liebialg::Rational> xi(d, 0);
            xi[b] = 1;
            auto lhs = rsharp(r, coad(x, xi));
            auto rhs = ad(x, rsharp(r, xi));
            rep.add("r^#(ad*_" + g.label(x) + " " + g.label(b) + "*) = ad_" + g.label(x) + " r^#(" + g.label(b) + "*)",
                    lhs == rhs, vec_str(lhs) + " vs " + vec_str(rhs));
        }
    rep.record("adjoint certificate", rep.passed() ? "produced" : "not produced");
    return rep;
}

HamiltonianCertificate certify(const MomentumMap& J, const HopfAction& phi, const Multivector& pi_m,
                               const Coaction& m_coaction, const ueahopf::TwistSeries& F, int order) {
    HamiltonianCertificate c;
    axbdouble::PoissonStructures ps = axbdouble::poisson_structures();
    c.momentum = check_momentum_condition(J, phi, pi_m, axbdouble::lambda_generators());
    c.equivariance = check_ell_equivariance(J, phi, dressing_functions());
    c.poisson_map = check_poisson_map(J, pi_m, ps.pi_lambda);
    c.poisson_action = check_poisson_action(phi, pi_m);
    c.quantum = quantum_momentum_check(J, phi, m_coaction, F, order);
    return c;
}

VerificationReport classical_suite(std::uint64_t seed) {
    VerificationReport rep("classical momentum maps");
    axbdouble::PoissonStructures ps = axbdouble::poisson_structures();
    HopfAction lam = quantizeudf::dressing_hopf_action(), co = coadjoint_fields();
    auto fns = dressing_functions();
    auto alpha = axbdouble::lambda_generators();
    Multivector pr = pi_r();

    MomentumMap id = identity_momentum_map();
    rep.merge(check_momentum_condition(id, lam, ps.pi_lambda, alpha), "dressing: ");
    rep.merge(check_ell_equivariance(id, lam, fns), "dressing: ");
    rep.merge(check_poisson_map(id, ps.pi_lambda, ps.pi_lambda), "dressing: ");
    rep.merge(check_poisson_action(lam, ps.pi_lambda), "dressing: ");
    rep.merge(poisson_eq_equivalence(id, lam, ps.pi_lambda, ps.pi_lambda, fns), "dressing: ");
    rep.merge(comodule_check(quantizeudf::dressing_coaction(), quantizeudf::dressing_coaction(), id), "dressing: ");

    MomentumMap ex = exp_momentum_map();
    Chart cc = coadjoint_chart();
    ChartPoint zero = exp_modified(0, 0);
    rep.add("Exp(0) = (0, 0)", zero[0].is_zero() && zero[1].is_zero());
    axbdouble::DoubleElt j = j_map(cc.coord(0), cc.coord(1));
    rep.add("j(xi) = -xi_E F - xi_H/2 Z",
            j == axbdouble::DoubleElt{0, 0, -cc.coord(1), -cc.coord(0) / Scalar(2)}, j.str());
    rep.add("Exp(xi) = (xi_H, 2 xi_E)", ex.J.exprs() == std::vector<Scalar>{cc.coord(0), Scalar(2) * cc.coord(1)});
    Multivector lin = poissongeom::bivector(cc, "xiH", "xiE", Scalar(2) * cc.coord(1));
    rep.add("pi_r differs from the linear structure", !(pr == lin), "pi_r = " + pr.str() + ", linear = " + lin.str());
    rep.merge(check_momentum_condition(ex, co, pr, alpha), "coadjoint: ");
    rep.merge(check_ell_equivariance(ex, co, fns), "coadjoint: ");
    rep.merge(check_poisson_map(ex, pr, ps.pi_lambda), "coadjoint: ");
    rep.merge(check_poisson_action(co, pr), "coadjoint: ");
    rep.merge(poisson_eq_equivalence(ex, co, pr, ps.pi_lambda, fns), "coadjoint: ");
    rep.merge(exp_intertwining_check(seed, 20), "coadjoint: ");
    rep.merge(comodule_check(coadjoint_coaction(), quantizeudf::dressing_coaction(), ex), "coadjoint: ");

    struct Mutation {
        MomentumMap J;
        const HopfAction* phi;
        const Multivector* pi;
    };
    std::vector<Mutation> muts{{scaled_momentum_map(), &lam, &ps.pi_lambda},
                               {constant_momentum_map(), &lam, &ps.pi_lambda},
                               {shifted_momentum_map(), &lam, &ps.pi_lambda},
                               {exp_scaled_momentum_map(), &co, &pr}};
    for (const auto& m : muts) {
        VerificationReport e = poisson_eq_equivalence(m.J, *m.phi, *m.pi, ps.pi_lambda, fns);
        rep.merge(e, "mutation " + m.J.name + ": ");
        bool mc = check_momentum_condition(m.J, *m.phi, *m.pi, alpha).passed();
        rep.record("mutation " + m.J.name + ": momentum condition", mc ? "pass" : "fail");
    }
    rep.add("J = (x, 2y) breaks equivariance",
            !check_ell_equivariance(scaled_momentum_map(), lam, fns).passed());
    rep.add("J = constant fails the momentum condition",
            !check_momentum_condition(constant_momentum_map(), lam, ps.pi_lambda, alpha).passed());
    rep.add("id from pi* to pi_lambda fails the Poisson map check",
            !check_poisson_map(id, ps.pi_star, ps.pi_lambda).passed());

    VerificationReport rs = rsharp_intertwine_check();
    rep.record("r^# intertwines ad and ad*", rs.passed() ? "yes" : "no");
    rep.record("adjoint certificate", *rs.value("adjoint certificate"));
    return rep;
}

VerificationReport quantum_suite(int order, std::uint64_t seed) {
    VerificationReport rep("quantum momentum maps");
    auto g = axb();
    ueahopf::TwistSeries F = ueahopf::jordanian_twist(g, order);
    HopfAction lam = quantizeudf::dressing_hopf_action(), co = coadjoint_fields();
    Coaction dress = quantizeudf::dressing_coaction(), coad = coadjoint_coaction();

    rep.merge(quantum_momentum_check(identity_momentum_map(), lam, dress, F, order), "identity: ");
    VerificationReport ex = quantum_momentum_check(exp_momentum_map(), co, coad, F, order);
    rep.merge(ex, "Exp: ");

    // Exp at sampled rational points: both sides of every order evaluated there
    {
        MomentumMap J = exp_momentum_map();
        StarProduct sl(F, lam, order), sp(F, co, order);
        exprcas::Sampler s(seed);
        std::vector<std::pair<Scalar, Scalar>> pairs;
        auto mono = quantizeudf::monomials(lam.chart(), 2);
        for (const auto& f : mono)
            for (const auto& h : mono) {
                SSeries a = sl(f, h), b = sp(poissongeom::pullback(J.J, f), poissongeom::pullback(J.J, h));
                for (int k = 0; k <= order; ++k) pairs.emplace_back(poissongeom::pullback(J.J, a[k]), b[k]);
            }
        exprcas::SampleResult r = exprcas::sample_compare(pairs, s, 20);
        rep.add("Exp: sampled J^*(f * g) = J^*f * J^*g", r.passed(),
                std::to_string(r.agreed) + "/" + std::to_string(r.samples) + " samples" +
                    (r.first_failure.empty() ? "" : "; " + r.first_failure));
    }

    int N2 = std::min(order, 2);
    ueahopf::TwistSeries F2 = F.truncated(N2);
    Scalar x = sym("x"), y = sym("y"), h = sym("xiH"), e = sym("xiE");
    rep.merge(quantizeudf::deformed_comodule_check(StarProduct(F2, lam, N2), dress, {{x, y}, {y, x}, {x * y, y}}),
              "dressing: ");
    rep.merge(quantizeudf::deformed_comodule_check(StarProduct(F2, co, N2), coad, {{h, e}, {e, h}, {h * e, e}}),
              "coadjoint: ");

    axbdouble::PoissonStructures ps = axbdouble::poisson_structures();
    for (const auto& m : {scaled_momentum_map(), constant_momentum_map()}) {
        bool classical = check_momentum_condition(m, lam, ps.pi_lambda, axbdouble::lambda_generators()).passed() &&
                         check_ell_equivariance(m, lam, dressing_functions()).passed();
        VerificationReport q = quantum_momentum_check(m, lam, dress, F, order);
        auto k = q.first_failing_order();
        rep.record("mutation " + m.name + ": first failing order", k ? std::to_string(*k) : "none");
        rep.add("mutation " + m.name + " fails at first order", k && *k == 1);
        rep.add("mutation " + m.name + ": quantum never passes when classical fails", classical || !q.passed());
    }
    return rep;
}

}  // namespace twistlab::momentum
