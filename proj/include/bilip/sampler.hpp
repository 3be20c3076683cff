#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bilip/ideal_ops.hpp"

namespace bilip {

// Empirical two-sided distortion of a map between two parametrized sets.
// Sampling points are exact rationals; ratios are computed exactly (sup norm)
// and converted to floating point only for reporting.
struct ScaleRecord {
    long scale = 1;
    Rational min_ratio_exact;
    Rational max_ratio_exact;
    double min_ratio = 0.0;
    double max_ratio = 0.0;
    std::vector<Rational> argmin_pair;  // {t, s} attaining min_ratio
    long skipped = 0;                   // degenerate draws (p(t) = p(s))
};

struct DistortionReport {
    std::vector<ScaleRecord> records;

    std::string to_csv() const;
};

// Per-scale min/max of ||q(t)-q(s)|| / ||p(t)-p(s)|| over `pairs` rational
// parameter pairs with |t|,|s| <= scale.  Deterministic per seed.
DistortionReport distortion(const Parametrization& p, const Parametrization& q, int pairs,
                            const std::vector<long>& scales, std::uint64_t seed,
                            bool sup_norm = true);

// Sup-norm-normalized secant directions p(t)-p(s) for sampled pairs.
std::vector<std::vector<Rational>> secant_cloud(const Parametrization& p, int pairs,
                                                std::uint64_t seed, long scale = 16);

}  // namespace bilip
