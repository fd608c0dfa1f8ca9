#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "fixtures.hpp"
#include "fsind/indicators.hpp"
#include "fsind/torus_oracle.hpp"

using namespace fsind;
using fixtures::build;

namespace {

std::map<IntVector, BigInt> as_map(const FourierTermSet& s) {
    std::map<IntVector, BigInt> out;
    for (const auto& t : s.terms) out[t.frequency] += t.coefficient;
    return out;
}

/// Constant term of chi(t^m) * A * conj(A), computed by convolving coefficients.
BigInt constant_term(const FourierTermSet& chi, const FourierTermSet& denom) {
    std::map<IntVector, BigInt> a_abs2;
    for (const auto& x : denom.terms)
        for (const auto& y : denom.terms) {
            IntVector f = x.frequency;
            for (std::size_t i = 0; i < f.size(); ++i) f[i] -= y.frequency[i];
            a_abs2[f] += x.coefficient * y.coefficient;
        }
    BigInt total = 0;
    for (const auto& t : chi.terms) {
        IntVector f = t.frequency;
        for (auto& x : f) x = -x;
        if (auto it = a_abs2.find(f); it != a_abs2.end()) total += t.coefficient * it->second;
    }
    return total;
}

}  // namespace

TEST_CASE("character_terms") {
    auto a1 = build(Family::A, 1);
    auto g = WeylGroup::enumerate(a1);
    auto lambda = a1.from_dynkin_labels({1});
    CHECK(as_map(character_terms(a1, g, lambda, 1)) == std::map<IntVector, BigInt>{{{1}, 1}, {{-1}, 1}});
    CHECK(as_map(character_terms(a1, g, lambda, 2)) == std::map<IntVector, BigInt>{{{2}, 1}, {{-2}, 1}});
    auto trivial = character_terms(a1, g, Weight::zero(1), 3);
    CHECK(as_map(trivial) == std::map<IntVector, BigInt>{{{0}, 1}});
    CHECK(character_terms(a1, g, lambda, 2).max_abs_frequency == IntVector{2});

    auto a2 = build(Family::A, 2);
    auto g2 = WeylGroup::enumerate(a2);
    auto adjoint = character_terms(a2, g2, a2.from_dynkin_labels({1, 1}), 1);
    BigInt dim = 0;
    for (const auto& t : adjoint.terms) dim += t.coefficient;
    CHECK(dim == 8);
    CHECK(adjoint.terms.size() == 7);
}

TEST_CASE("denominator_terms") {
    auto a1 = build(Family::A, 1);
    auto d1 = denominator_terms(a1, WeylGroup::enumerate(a1));
    CHECK(as_map(d1) == std::map<IntVector, BigInt>{{{1}, 1}, {{-1}, -1}});

    auto a2 = build(Family::A, 2);
    auto g2 = WeylGroup::enumerate(a2);
    auto d2 = denominator_terms(a2, g2);
    CHECK(d2.terms.size() == 6);
    for (std::size_t k = 0; k < g2.size(); ++k)
        CHECK(d2.terms[k].coefficient == (g2.length(k) % 2 == 0 ? 1 : -1));

    for (auto [family, rank] : fixtures::builtins_up_to_rank(3)) {
        auto rs = build(family, rank);
        BigInt sum = 0;
        for (const auto& t : denominator_terms(rs, WeylGroup::enumerate(rs)).terms) sum += t.coefficient;
        CHECK(sum == 0);
    }
}

TEST_CASE("indicator_numeric: examples") {
    auto a1 = build(Family::A, 1);
    auto g1 = WeylGroup::enumerate(a1);
    CHECK(indicator_numeric(a1, g1, a1.from_dynkin_labels({1}), 2).value == doctest::Approx(-1.0).epsilon(1e-9));

    auto a2 = build(Family::A, 2);
    auto g2 = WeylGroup::enumerate(a2);
    auto r = indicator_numeric(a2, g2, a2.from_dynkin_labels({1, 1}), 3);
    CHECK(std::fabs(r.value - 2.0) < 1e-6);
    CHECK(std::fabs(r.imaginary) < 1e-6);
    CHECK(r.grid_exact);
    for (long m = 2; m <= 5; ++m) CHECK(std::fabs(indicator_numeric(a2, g2, Weight::zero(2), m).value - 1.0) < 1e-6);
}

TEST_CASE("indicator_numeric agrees with the exact formula") {
    for (auto [family, rank] : fixtures::builtins_up_to_rank(2)) {
        auto rs = build(family, rank);
        auto g = WeylGroup::enumerate(rs);
        for (const auto& labels : fixtures::label_box(rank, 2))
            for (long m = 2; m <= 4; ++m) {
                auto lambda = rs.from_dynkin_labels(labels);
                auto exact = indicator(rs, g, lambda, m);
                CHECK(std::fabs(indicator_numeric(rs, g, lambda, m).value - exact.get_d()) < 1e-6);
            }
    }
    // rank-3 spot checks
    auto b3 = build(Family::B, 3);
    auto gb = WeylGroup::enumerate(b3);
    for (IntVector labels : {IntVector{1, 0, 0}, IntVector{0, 0, 1}})
        for (long m = 2; m <= 3; ++m) {
            auto lambda = b3.from_dynkin_labels(labels);
            CHECK(std::fabs(indicator_numeric(b3, gb, lambda, m).value - indicator(b3, gb, lambda, m).get_d()) < 1e-6);
        }
    auto a3 = build(Family::A, 3);
    auto ga = WeylGroup::enumerate(a3);
    auto adj = a3.from_dynkin_labels({1, 0, 1});
    CHECK(std::fabs(indicator_numeric(a3, ga, adj, 3).value - indicator(a3, ga, adj, 3).get_d()) < 1e-6);
}

TEST_CASE("frequency-domain constant term equals |W| * nu_m") {
    for (auto [family, rank] : fixtures::builtins_up_to_rank(2)) {
        auto rs = build(family, rank);
        auto g = WeylGroup::enumerate(rs);
        auto denom = denominator_terms(rs, g);
        for (const auto& labels : fixtures::label_box(rank, 2))
            for (long m = 2; m <= 5; ++m) {
                auto lambda = rs.from_dynkin_labels(labels);
                auto chi = character_terms(rs, g, lambda, m);
                CHECK(constant_term(chi, denom) == BigInt(static_cast<unsigned long>(g.size())) * indicator(rs, g, lambda, m));
            }
    }
}

TEST_CASE("grid handling") {
    auto a2 = build(Family::A, 2);
    auto g = WeylGroup::enumerate(a2);
    auto lambda = a2.from_dynkin_labels({2, 1});
    auto base = indicator_numeric(a2, g, lambda, 3);
    std::vector<std::size_t> doubled = base.grid;
    for (auto& n : doubled) n *= 2;
    auto fine = indicator_numeric(a2, g, lambda, 3, doubled);
    CHECK(fine.grid_exact);
    CHECK(std::fabs(fine.value - base.value) < 1e-9);

    auto coarse = indicator_numeric(a2, g, lambda, 3, std::vector<std::size_t>{3, 3});
    CHECK_FALSE(coarse.grid_exact);
    CHECK_THROWS_AS(indicator_numeric(a2, g, lambda, 3, std::vector<std::size_t>{3}), ValidationError);
    CHECK_THROWS_AS(indicator_numeric(a2, g, lambda, 1), ValidationError);

    auto a4 = build(Family::A, 4);
    auto g4 = WeylGroup::enumerate(a4);
    CHECK_THROWS_AS(indicator_numeric(a4, g4, Weight::zero(4), 2), ResourceError);
    OracleOptions opts;
    opts.max_grid_points = 10;
    CHECK_THROWS_AS(indicator_numeric(a2, g, lambda, 3, std::nullopt, opts), ResourceError);
}

TEST_CASE("torus_character_integral") {
    auto a1 = build(Family::A, 1);
    auto a2 = build(Family::A, 2);
    CHECK(std::fabs(torus_character_integral(a1, Weight::zero(1)) - 1.0) < 1e-9);
    CHECK(std::fabs(torus_character_integral(a1, a1.simple_root(0))) < 1e-9);
    CHECK(std::fabs(torus_character_integral(a2, Weight::from_integers({1, 1}))) < 1e-9);
    CHECK_THROWS_AS(torus_character_integral(a2, Weight(std::vector<Rational>{Rational(1, 2), 0})), ValidationError);

    std::mt19937 rng(17);
    std::uniform_int_distribution<long> label(-10, 10);
    auto b2 = build(Family::B, 2);
    for (int trial = 0; trial < 100; ++trial) {
        IntVector labels{label(rng), label(rng)};
        if (trial % 10 == 0) labels = {0, 0};
        const double expected = (labels == IntVector{0, 0}) ? 1.0 : 0.0;
        CHECK(std::fabs(torus_character_integral(b2, b2.from_dynkin_labels(labels)) - expected) < 1e-9);
    }
}
