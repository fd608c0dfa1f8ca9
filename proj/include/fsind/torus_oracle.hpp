#pragma once

#include <optional>
#include <vector>

#include "fsind/core.hpp"
#include "fsind/multiplicities.hpp"
#include "fsind/root_system.hpp"
#include "fsind/weyl_group.hpp"

namespace fsind {

// The maximal torus is parameterized as theta in [0,1)^rank along a basis of
// the coroot lattice, so a torus character mu becomes the monomial
// exp(2 pi i sum_j theta_j mu(h_j)): frequencies are Dynkin labels.

struct FourierTerm {
    IntVector frequency;
    BigInt coefficient;
};

struct FourierTermSet {
    std::vector<FourierTerm> terms;
    IntVector max_abs_frequency;
};

struct OracleOptions {
    std::size_t max_rank = 3;
    std::size_t max_grid_points = 50'000'000;
    std::size_t support_cap = kDefaultSupportCap;
};

/// chi(t^m): terms (m * mu(h), dim V[mu]) over all weights mu of V(lambda).
FourierTermSet character_terms(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, std::int64_t m,
                               std::size_t support_cap = kDefaultSupportCap);

/// Weyl denominator: terms ((w rho)(h), sign(w)) for every w in W.
FourierTermSet denominator_terms(const RootSystem& rs, const WeylGroup& w);

struct NumericIndicator {
    double value = 0.0;
    double imaginary = 0.0;
    std::vector<std::size_t> grid;
    /// Smallest per-coordinate grid size for which the quadrature is exact.
    std::vector<std::size_t> exactness_bound;
    /// False when an explicit grid is below the exactness bound in some coordinate.
    bool grid_exact = true;
};

/// (1/|W|) * mean over a uniform grid of chi(t^m) |A_rho(t)|^2. The default
/// grid has 2F_j + 1 points in coordinate j, where F_j bounds the integrand's
/// frequencies, which integrates every monomial exactly.
NumericIndicator indicator_numeric(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, std::int64_t m,
                                   std::optional<std::vector<std::size_t>> grid = std::nullopt,
                                   const OracleOptions& options = {});

/// Mean of the torus character of an integral weight over a uniform grid
/// (default 2|mu(h_j)| + 1 points per coordinate).
double torus_character_integral(const RootSystem& rs, const Weight& mu,
                                std::optional<std::vector<std::size_t>> grid = std::nullopt);

}  // namespace fsind
