#include "fsind/torus_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>

#include "fsind/parallel.hpp"

namespace fsind {

namespace {

using Complex = std::complex<double>;

void update_max(IntVector& max_abs, const IntVector& freq) {
    for (std::size_t j = 0; j < freq.size(); ++j) max_abs[j] = std::max<std::int64_t>(max_abs[j], std::llabs(freq[j]));
}

/// e(k / N) for k in [0, N).
std::vector<Complex> roots_of_unity(std::size_t n) {
    std::vector<Complex> table(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        table[k] = {std::cos(angle), std::sin(angle)};
    }
    return table;
}

struct Quadrature {
    std::vector<std::size_t> grid;
    std::vector<std::vector<Complex>> phasors;
    std::size_t points = 1;

    explicit Quadrature(std::vector<std::size_t> g) : grid(std::move(g)) {
        for (auto n : grid) {
            phasors.push_back(roots_of_unity(n));
            points *= n;
        }
    }

    std::int64_t reduce(std::int64_t x, std::size_t n) const {
        auto r = x % static_cast<std::int64_t>(n);
        return r < 0 ? r + static_cast<std::int64_t>(n) : r;
    }

    /// Monomial exp(2 pi i sum_j index_j freq_j / N_j).
    Complex monomial(const std::vector<std::size_t>& index, const IntVector& freq) const {
        Complex z = 1.0;
        for (std::size_t j = 0; j < grid.size(); ++j)
            z *= phasors[j][reduce(static_cast<std::int64_t>(index[j]) * freq[j], grid[j])];
        return z;
    }

    void unflatten(std::size_t flat, std::vector<std::size_t>& index) const {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            index[j] = flat % grid[j];
            flat /= grid[j];
        }
    }
};

std::vector<std::size_t> validate_grid(const std::optional<std::vector<std::size_t>>& grid,
                                       const std::vector<std::size_t>& fallback) {
    if (!grid) return fallback;
    if (grid->size() != fallback.size())
        throw ValidationError("grid must have one size per rank coordinate (" + std::to_string(fallback.size()) + ")");
    for (auto n : *grid)
        if (n < 1) throw ValidationError("grid sizes must be positive");
    return *grid;
}

}  // namespace

FourierTermSet character_terms(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, std::int64_t m,
                               std::size_t support_cap) {
    if (m < 1) throw ValidationError("character power m must be >= 1");
    const auto table = weight_support(rs, w, lambda, MultiplicityEngine::Freudenthal, support_cap);
    FourierTermSet out;
    out.max_abs_frequency.assign(rs.rank(), 0);
    for (const auto& [mu, mult] : table.entries()) {
        for (auto nu : weyl_orbit(rs, mu, support_cap)) {
            if (out.terms.size() >= support_cap)
                throw ResourceError("character support exceeds cap of " + std::to_string(support_cap));
            for (auto& x : nu) x *= m;
            update_max(out.max_abs_frequency, nu);
            out.terms.push_back({std::move(nu), mult});
        }
    }
    return out;
}

FourierTermSet denominator_terms(const RootSystem& rs, const WeylGroup& w) {
    FourierTermSet out;
    out.max_abs_frequency.assign(rs.rank(), 0);
    for (std::size_t k = 0; k < w.size(); ++k) {
        auto image = w.rho_image_labels(k);
        IntVector freq(image.begin(), image.end());
        update_max(out.max_abs_frequency, freq);
        out.terms.push_back({std::move(freq), BigInt(w.sign(k))});
    }
    return out;
}

NumericIndicator indicator_numeric(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, std::int64_t m,
                                   std::optional<std::vector<std::size_t>> grid, const OracleOptions& options) {
    if (m < 2) throw ValidationError("indicator degree m must be >= 2, got " + std::to_string(m));
    if (rs.rank() > options.max_rank)
        throw ResourceError("torus oracle limited to rank <= " + std::to_string(options.max_rank) + ", got rank " +
                            std::to_string(rs.rank()));

    const auto chi = character_terms(rs, w, lambda, m, options.support_cap);
    const auto denom = denominator_terms(rs, w);

    NumericIndicator result;
    std::vector<std::size_t> fallback;
    for (std::size_t j = 0; j < rs.rank(); ++j) {
        // chi(t^m) * A * conj(A): frequencies add.
        const auto f = static_cast<std::size_t>(chi.max_abs_frequency[j] + 2 * denom.max_abs_frequency[j]);
        result.exactness_bound.push_back(f + 1);
        fallback.push_back(2 * f + 1);
    }
    result.grid = validate_grid(grid, fallback);
    for (std::size_t j = 0; j < rs.rank(); ++j)
        if (result.grid[j] < result.exactness_bound[j]) result.grid_exact = false;

    const Quadrature quad(result.grid);
    if (quad.points > options.max_grid_points)
        throw ResourceError("quadrature grid of " + std::to_string(quad.points) + " points exceeds cap of " +
                            std::to_string(options.max_grid_points));

    std::vector<double> chi_coeff, denom_coeff;
    for (const auto& t : chi.terms) chi_coeff.push_back(t.coefficient.get_d());
    for (const auto& t : denom.terms) denom_coeff.push_back(t.coefficient.get_d());

    const std::size_t chunks = std::min<std::size_t>(256, quad.points);
    std::vector<Complex> partial(chunks, 0.0);
    parallel_chunks(quad.points, chunks, [&](std::size_t c, std::size_t begin, std::size_t end) {
        std::vector<std::size_t> index(rs.rank());
        Complex acc = 0.0;
        for (std::size_t p = begin; p < end; ++p) {
            quad.unflatten(p, index);
            Complex character = 0.0, a_rho = 0.0;
            for (std::size_t t = 0; t < chi.terms.size(); ++t)
                character += chi_coeff[t] * quad.monomial(index, chi.terms[t].frequency);
            for (std::size_t t = 0; t < denom.terms.size(); ++t)
                a_rho += denom_coeff[t] * quad.monomial(index, denom.terms[t].frequency);
            acc += character * std::norm(a_rho);
        }
        partial[c] = acc;
    });
    Complex total = 0.0;
    for (const auto& p : partial) total += p;
    total /= static_cast<double>(quad.points) * static_cast<double>(w.size());
    result.value = total.real();
    result.imaginary = total.imag();
    return result;
}

double torus_character_integral(const RootSystem& rs, const Weight& mu, std::optional<std::vector<std::size_t>> grid) {
    auto labels = rs.dynkin_labels(mu);
    if (!labels) throw ValidationError("torus characters require an integral weight, got " + mu.to_string());
    std::vector<std::size_t> fallback;
    for (auto f : *labels) fallback.push_back(2 * static_cast<std::size_t>(std::llabs(f)) + 1);
    const Quadrature quad(validate_grid(grid, fallback));
    std::vector<std::size_t> index(rs.rank());
    Complex total = 0.0;
    for (std::size_t p = 0; p < quad.points; ++p) {
        quad.unflatten(p, index);
        total += quad.monomial(index, *labels);
    }
    return total.real() / static_cast<double>(quad.points);
}

}  // namespace fsind
