#include "bilip/sampler.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace bilip {

namespace {

Rational sup_norm_of(const std::vector<Rational>& v) {
    Rational m = 0;
    for (const auto& c : v) {
        Rational a = abs(c);
        if (a > m) m = a;
    }
    return m;
}

Rational sq_norm_of(const std::vector<Rational>& v) {
    Rational s = 0;
    for (const auto& c : v) s += c * c;
    return s;
}

std::vector<Rational> diff(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    std::vector<Rational> d(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
    return d;
}

// Uniform rational in [-scale, scale] with denominator up to 16.
Rational draw_rational(std::mt19937_64& rng, long scale) {
    std::uniform_int_distribution<long> den_d(1, 16);
    long den = den_d(rng);
    std::uniform_int_distribution<long> num_d(-scale * den, scale * den);
    return make_rational(num_d(rng), den);
}

std::vector<Rational> params_point(std::mt19937_64& rng, int arity, long scale) {
    std::vector<Rational> t(static_cast<std::size_t>(arity));
    for (auto& c : t) c = draw_rational(rng, scale);
    return t;
}

}  // namespace

DistortionReport distortion(const Parametrization& p, const Parametrization& q, int pairs,
                            const std::vector<long>& scales, std::uint64_t seed, bool sup_norm) {
    if (p.param_ring->arity() != q.param_ring->arity())
        throw PreconditionError("distortion: parameter arity mismatch");
    int arity = p.param_ring->arity();

    DistortionReport report;
    for (std::size_t si = 0; si < scales.size(); ++si) {
        long scale = scales[si];
        std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (si + 1)));
        ScaleRecord rec;
        rec.scale = scale;
        bool have = false;
        for (int k = 0; k < pairs; ++k) {
            auto t = params_point(rng, arity, scale);
            auto s = params_point(rng, arity, scale);
            if (t == s) {
                ++rec.skipped;
                continue;
            }
            auto dp = diff(p.evaluate(t), p.evaluate(s));
            auto dq = diff(q.evaluate(t), q.evaluate(s));
            Rational np = sup_norm ? sup_norm_of(dp) : sq_norm_of(dp);
            if (np == 0) {
                ++rec.skipped;
                continue;
            }
            Rational nq = sup_norm ? sup_norm_of(dq) : sq_norm_of(dq);
            Rational ratio = nq / np;
            if (!have || ratio < rec.min_ratio_exact) {
                rec.min_ratio_exact = ratio;
                if (arity == 1)
                    rec.argmin_pair = {t.front(), s.front()};
                else {
                    rec.argmin_pair = t;
                    rec.argmin_pair.insert(rec.argmin_pair.end(), s.begin(), s.end());
                }
            }
            if (!have || ratio > rec.max_ratio_exact) rec.max_ratio_exact = ratio;
            have = true;
        }
        double lo = rec.min_ratio_exact.get_d();
        double hi = rec.max_ratio_exact.get_d();
        if (!sup_norm) {
            lo = std::sqrt(lo);
            hi = std::sqrt(hi);
        }
        rec.min_ratio = lo;
        rec.max_ratio = hi;
        report.records.push_back(std::move(rec));
    }
    return report;
}

std::vector<std::vector<Rational>> secant_cloud(const Parametrization& p, int pairs,
                                                std::uint64_t seed, long scale) {
    int arity = p.param_ring->arity();
    std::mt19937_64 rng(seed);
    std::vector<std::vector<Rational>> dirs;
    int guard = 0;
    while (static_cast<int>(dirs.size()) < pairs && guard < 100 * pairs) {
        ++guard;
        auto t = params_point(rng, arity, scale);
        auto s = params_point(rng, arity, scale);
        if (t == s) continue;
        auto d = diff(p.evaluate(t), p.evaluate(s));
        Rational n = sup_norm_of(d);
        if (n == 0) continue;
        for (auto& c : d) c /= n;
        dirs.push_back(std::move(d));
    }
    return dirs;
}

std::string DistortionReport::to_csv() const {
    std::ostringstream os;
    os << "scale,min_ratio,max_ratio,argmin_t,argmin_s\n";
    for (const auto& r : records) {
        os << r.scale << "," << r.min_ratio << "," << r.max_ratio << ",";
        if (r.argmin_pair.size() == 2)
            os << to_string(r.argmin_pair[0]) << "," << to_string(r.argmin_pair[1]);
        else {
            for (std::size_t i = 0; i < r.argmin_pair.size(); ++i)
                os << (i ? ";" : "") << to_string(r.argmin_pair[i]);
            os << ",";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace bilip
