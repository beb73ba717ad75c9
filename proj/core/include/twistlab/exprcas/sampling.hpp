#pragma once

#include "twistlab/exprcas/scalar.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace twistlab::exprcas {

// Seeded source of exact rational sample points. Coordinates get values p/q
// with |p| <= 12, 1 <= q <= 6; an exponential atom gets a positive rational
// raised to the root order its expressions need.
class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : rng_(seed) {}

    mpq_class rational(int max_num = 12, int max_den = 6);
    mpq_class nonzero_rational(int max_num = 12, int max_den = 6);
    int integer(int lo, int hi);
    // Values for every coordinate and atom occurring in exprs.
    Point point(const std::vector<Scalar>& exprs);

private:
    std::mt19937_64 rng_;
};

struct SampleResult {
    int samples = 0;
    int agreed = 0;
    int skipped = 0;  // points hitting a pole on either side
    std::string first_failure;
    bool passed() const { return samples > 0 && agreed == samples; }
};

// Compares every pair at n points where all sides are finite.
SampleResult sample_compare(const std::vector<std::pair<Scalar, Scalar>>& pairs, Sampler& s, int n);

}  // namespace twistlab::exprcas
