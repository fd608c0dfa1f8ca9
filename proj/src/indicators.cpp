#include "fsind/indicators.hpp"

#include <algorithm>
#include <cstdlib>

#include "fsind/parallel.hpp"

namespace fsind {

namespace {

void require_degree(std::int64_t m) {
    if (m < 2) throw ValidationError("indicator degree m must be >= 2, got " + std::to_string(m));
}

}  // namespace

BigInt indicator(const RootSystem& rs, const WeylGroup& w, const MultiplicityTable& table, std::int64_t m) {
    require_degree(m);
    const std::size_t n = rs.rank();
    const std::size_t chunks = std::min<std::size_t>(64, w.size());
    std::vector<BigInt> partial(chunks, 0);
    parallel_chunks(w.size(), chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
        IntVector point(n);
        for (std::size_t k = begin; k < end; ++k) {
            auto image = w.rho_image_labels(k);
            bool integral = true;
            for (std::size_t i = 0; i < n && integral; ++i) {
                const std::int64_t v = 1 - image[i];  // (rho - w rho)(h_i)
                integral = v % m == 0;
                point[i] = v / m;
            }
            if (!integral) continue;
            BigInt mult = multiplicity_at_labels(rs, table, point);
            if (mult == 0) continue;
            if (w.sign(k) > 0) partial[c] += mult;
            else partial[c] -= mult;
        }
    });
    BigInt total = 0;
    for (const auto& p : partial) total += p;
    return total;
}

BigInt indicator(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, std::int64_t m,
                 MultiplicityEngine engine, std::size_t support_cap) {
    require_degree(m);
    return indicator(rs, w, weight_support(rs, w, lambda, engine, support_cap), m);
}

bool is_self_dual(const RootSystem& rs, const WeylGroup& w, const Weight& lambda) {
    if (!rs.is_dominant_integral(lambda))
        throw ValidationError("highest weight must be dominant integral, got " + lambda.to_string());
    return (lambda + w.apply(w.longest_element(), lambda)).is_zero();
}

int indicator_tits(const RootSystem& rs, const WeylGroup& w, const Weight& lambda) {
    if (!is_self_dual(rs, w, lambda)) return 0;
    return rs.eval_two_rho_check(lambda) % 2 == 0 ? 1 : -1;
}

std::int64_t stabilization_bound(const RootSystem& rs) {
    std::int64_t best = -1;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
        std::int64_t s = 1;
        for (const auto& beta : rs.positive_root_labels()) s += std::llabs(beta[i]);
        if (best < 0 || s < best) best = s;
    }
    return best;
}

std::optional<std::int64_t> classical_stabilization_bound(const LieType& type) {
    const auto r = static_cast<std::int64_t>(type.rank);
    switch (type.family) {
        case Family::A: return 2 * (r + 1) - 1;
        case Family::B:
            if (r < 2) return std::nullopt;
            return 4 * r - 3;
        case Family::C: return 2 * r + 1;
        case Family::D: return 4 * r - 5;
        case Family::Custom: return std::nullopt;
    }
    return std::nullopt;
}

IndicatorProfile indicator_profile(const RootSystem& rs, const WeylGroup& w, const MultiplicityTable& table,
                                   std::int64_t m_max) {
    if (m_max < 2) throw ValidationError("m_max must be >= 2, got " + std::to_string(m_max));
    IndicatorProfile profile;
    profile.lambda_labels = table.lambda_labels();
    for (std::int64_t m = 2; m <= m_max; ++m) profile.values.push_back({m, indicator(rs, w, table, m)});
    profile.stabilization_bound = stabilization_bound(rs);
    profile.stable_value = multiplicity_at_labels(rs, table, IntVector(rs.rank(), 0));
    profile.in_root_lattice = rs.integral_root_coords(table.lambda_labels()).has_value();
    return profile;
}

IndicatorProfile indicator_profile(const RootSystem& rs, const WeylGroup& w, const Weight& lambda,
                                   std::int64_t m_max, MultiplicityEngine engine, std::size_t support_cap) {
    if (m_max < 2) throw ValidationError("m_max must be >= 2, got " + std::to_string(m_max));
    return indicator_profile(rs, w, weight_support(rs, w, lambda, engine, support_cap), m_max);
}

int sl2_closed_form(std::int64_t n, std::int64_t m) {
    require_degree(m);
    if (n < 0) throw ValidationError("sl2 highest weight must be nonnegative");
    if (m == 2) return n % 2 == 0 ? 1 : -1;
    return n % 2 == 0 ? 1 : 0;
}

std::int64_t sl3_closed_form(std::int64_t a, std::int64_t b, std::int64_t m) {
    require_degree(m);
    if (a < 0 || b < 0) throw ValidationError("sl3 highest weight labels must be nonnegative");
    if (m == 2) return a == b ? 1 : 0;
    if (m == 3) return 1 + std::min(a, b);
    return (a - b) % 3 == 0 ? 1 + std::min(a, b) : 0;
}

}  // namespace fsind
