#include "twistlab/exprcas/sampling.hpp"

#include "twistlab/errors.hpp"

#include <numeric>
#include <set>

#include <sstream>

namespace twistlab::exprcas {

int Sampler::integer(int lo, int hi) {
    return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
}

mpq_class Sampler::rational(int max_num, int max_den) {
    mpq_class q(integer(-max_num, max_num), integer(1, max_den));
    q.canonicalize();
    return q;
}

mpq_class Sampler::nonzero_rational(int max_num, int max_den) {
    mpq_class q = 0;
    while (q == 0) q = rational(max_num, max_den);
    return q;
}

Point Sampler::point(const std::vector<Scalar>& exprs) {
    std::map<std::string, std::int64_t> roots;
    std::set<std::string> coords;
    for (const auto& e : exprs) {
        for (const auto& [name, q] : e.root_orders()) roots[name] = std::lcm(roots[name] ? roots[name] : 1, q);
        for (const auto& t : e.num().terms())
            for (const auto& f : t.mono.factors())
                if (!f.sym.is_exp()) coords.insert(f.sym.name());
        for (const auto& t : e.den().terms())
            for (const auto& f : t.mono.factors())
                if (!f.sym.is_exp()) coords.insert(f.sym.name());
    }
    Point p;
    for (const auto& c : coords) p.coord[c] = rational();
    for (const auto& [name, q] : roots) {
        mpq_class base(integer(1, 5), integer(1, 4));
        base.canonicalize();
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(q));
        mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(q));
        p.exp[name] = mpq_class(n, d);
    }
    return p;
}

SampleResult sample_compare(const std::vector<std::pair<Scalar, Scalar>>& pairs, Sampler& s, int n) {
    std::vector<Scalar> all;
    for (const auto& [a, b] : pairs) {
        all.push_back(a);
        all.push_back(b);
    }
    SampleResult r;
    int attempts = 0;
    while (r.samples < n && attempts < 20 * n) {
        ++attempts;
        Point p = s.point(all);
        std::vector<std::pair<mpq_class, mpq_class>> vals;
        try {
            for (const auto& [a, b] : pairs) vals.emplace_back(a.eval(p), b.eval(p));
        } catch (const PoleError&) {
            ++r.skipped;
            continue;
        }
        ++r.samples;
        bool ok = true;
        for (std::size_t i = 0; i < vals.size(); ++i)
            if (vals[i].first != vals[i].second) {
                ok = false;
                if (r.first_failure.empty()) {
                    std::ostringstream os;
                    os << "component " << i << ": " << vals[i].first.get_str() << " vs " << vals[i].second.get_str() << " at";
                    for (const auto& [k, v] : p.coord) os << " " << k << "=" << v.get_str();
                    for (const auto& [k, v] : p.exp) os << " e^" << k << "=" << v.get_str();
                    r.first_failure = os.str();
                }
            }
        if (ok) ++r.agreed;
    }
    return r;
}

}  // namespace twistlab::exprcas
