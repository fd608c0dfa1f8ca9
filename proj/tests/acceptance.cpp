// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "fsind/indicators.hpp"
#include "fsind/torus_oracle.hpp"

using namespace fsind;
using fixtures::build;

namespace {

std::string type_name(Family f, std::size_t r) { return LieType::classical(f, r).name(); }

struct Outcome {
    bool ok = true;
    std::size_t cases = 0;
    std::string first_failure;

    void expect(bool condition, const std::function<std::string()>& what) {
        ++cases;
        if (condition) return;
        if (ok) first_failure = what();
        ok = false;
    }
};

int failures = 0;

void run(int id, const std::string& title, double budget_seconds, const std::function<void(Outcome&)>& body) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
        body(outcome);
    } catch (const std::exception& e) {
        outcome.ok = false;
        outcome.first_failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = budget_seconds <= 0 || seconds < budget_seconds;
    const bool pass = outcome.ok && in_time;
    if (!pass) ++failures;

    std::printf("[%s] %d. %s: %zu checks, %.3f s", pass ? "PASS" : "FAIL", id, title.c_str(), outcome.cases, seconds);
    if (budget_seconds > 0) std::printf(" (budget %.0f s)", budget_seconds);
    if (!outcome.ok) std::printf(" -- %s", outcome.first_failure.c_str());
    else if (!in_time) std::printf(" -- over time budget");
    std::printf("\n");
    std::fflush(stdout);
}

std::string show(const IntVector& v) {
    std::ostringstream s;
    for (std::size_t i = 0; i < v.size(); ++i) s << (i ? "," : "") << v[i];
    return s.str();
}

IntVector random_labels(std::mt19937& rng, std::size_t rank, long max_label) {
    std::uniform_int_distribution<long> d(0, max_label);
    IntVector v(rank);
    for (auto& x : v) x = d(rng);
    return v;
}

/// Product over positive roots of (lambda + rho, beta) / (rho, beta).
BigInt weyl_dimension_product(const RootSystem& rs, const Weight& lambda) {
    Rational num = 1, den = 1;
    const Weight shifted = lambda + rs.rho();
    for (const auto& coords : rs.positive_root_coords()) {
        const Weight beta = Weight::from_integers(coords);
        num *= rs.form(shifted, beta);
        den *= rs.form(rs.rho(), beta);
    }
    Rational q = num / den;
    q.canonicalize();
    return q.get_num();
}

}  // namespace

int main() {
    run(1, "sl2 golden table", 1.0, [](Outcome& o) {
        const auto rs = build(Family::A, 1);
        const auto w = WeylGroup::enumerate(rs);
        for (long n = 0; n <= 20; ++n) {
            const auto table = weight_support(rs, w, rs.from_dynkin_labels({n}));
            for (long m = 2; m <= 10; ++m) {
                const long expected = m == 2 ? (n % 2 == 0 ? 1 : -1) : (n % 2 == 0 ? 1 : 0);
                const BigInt nu = indicator(rs, w, table, m);
                o.expect(nu == expected && sl2_closed_form(n, m) == expected, [&] {
                    return "n=" + std::to_string(n) + " m=" + std::to_string(m) + " got " + nu.get_str();
                });
            }
        }
    });

    run(2, "sl3 golden table", 10.0, [](Outcome& o) {
        const auto rs = build(Family::A, 2);
        const auto w = WeylGroup::enumerate(rs);
        for (long a = 0; a <= 8; ++a)
            for (long b = 0; b <= 8; ++b) {
                const auto table = weight_support(rs, w, rs.from_dynkin_labels({a, b}));
                for (long m = 2; m <= 8; ++m) {
                    const long k = 1 + std::min(a, b);
                    const long expected = m == 2 ? (a == b ? 1 : 0) : m == 3 ? k : ((a - b) % 3 == 0 ? k : 0);
                    const BigInt nu = indicator(rs, w, table, m);
                    o.expect(nu == expected && sl3_closed_form(a, b, m) == expected, [&] {
                        return "(a,b)=(" + std::to_string(a) + "," + std::to_string(b) + ") m=" + std::to_string(m) +
                               " got " + nu.get_str();
                    });
                }
            }
    });

    run(3, "nu_2 equals the Tits indicator, rank <= 4, labels <= 2", 60.0, [](Outcome& o) {
        for (auto [family, rank] : fixtures::builtins_up_to_rank(4)) {
            const auto rs = build(family, rank);
            const auto w = WeylGroup::enumerate(rs);
            for (const auto& labels : fixtures::label_box(rank, 2)) {
                const auto lambda = rs.from_dynkin_labels(labels);
                const BigInt nu = indicator(rs, w, lambda, 2);
                const int tits = indicator_tits(rs, w, lambda);
                o.expect(nu == tits, [&] {
                    return type_name(family, rank) + " (" + show(labels) + "): nu_2=" + nu.get_str() +
                           " tits=" + std::to_string(tits);
                });
            }
        }
    });

    run(4, "stabilization bounds and nu_M = nu_{M+1} = dim V[0]", 0, [](Outcome& o) {
        for (Family family : {Family::A, Family::B, Family::C, Family::D})
            for (std::size_t rank = 2; rank <= 8; ++rank) {
                if (family == Family::D && rank < 3) continue;
                const auto n = static_cast<std::int64_t>(rank);
                const std::int64_t expected = family == Family::A   ? 2 * (n + 1) - 1
                                              : family == Family::B ? 4 * n - 3
                                              : family == Family::C ? 2 * n + 1
                                                                    : 4 * n - 5;
                const std::int64_t got = stabilization_bound(build(family, rank));
                o.expect(got == expected, [&] {
                    return type_name(family, rank) + " bound " + std::to_string(got) + " expected " +
                           std::to_string(expected);
                });
            }
        std::mt19937 rng(4);
        for (auto [family, rank] : fixtures::builtins_up_to_rank(3)) {
            const auto rs = build(family, rank);
            const auto w = WeylGroup::enumerate(rs);
            const std::int64_t bound = stabilization_bound(rs);
            for (int trial = 0; trial < 20; ++trial) {
                const IntVector labels = random_labels(rng, rank, 4);
                const auto lambda = rs.from_dynkin_labels(labels);
                const BigInt zero = multiplicity_kostant(rs, w, lambda, Weight::zero(rank));
                const BigInt at_m = indicator(rs, w, lambda, bound);
                const BigInt at_m1 = indicator(rs, w, lambda, bound + 1);
                o.expect(at_m == zero && at_m1 == zero, [&] {
                    return type_name(family, rank) + " (" + show(labels) + "): nu_M=" + at_m.get_str() +
                           " nu_M+1=" + at_m1.get_str() + " dim V[0]=" + zero.get_str();
                });
            }
        }
    });

    run(5, "Kostant and Freudenthal agree, rank <= 3, labels <= 3", 0, [](Outcome& o) {
        for (auto [family, rank] : fixtures::builtins_up_to_rank(3)) {
            const auto rs = build(family, rank);
            const auto w = WeylGroup::enumerate(rs);
            for (const auto& labels : fixtures::label_box(rank, 3)) {
                const auto lambda = rs.from_dynkin_labels(labels);
                BigInt total = 0;
                for (const auto& mu_labels : dominant_weights_below(rs, labels)) {
                    const auto mu = rs.from_dynkin_labels(mu_labels);
                    const BigInt k = multiplicity_kostant(rs, w, lambda, mu);
                    const BigInt f = multiplicity_freudenthal(rs, lambda, mu);
                    o.expect(k == f, [&] {
                        return type_name(family, rank) + " (" + show(labels) + ") at (" + show(mu_labels) +
                               "): kostant=" + k.get_str() + " freudenthal=" + f.get_str();
                    });
                    total += f * static_cast<unsigned long>(weyl_orbit(rs, mu_labels).size());
                }
                const BigInt dim = weyl_dimension_product(rs, lambda);
                o.expect(total == dim && weyl_dimension(rs, lambda) == dim, [&] {
                    return type_name(family, rank) + " (" + show(labels) + "): sum " + total.get_str() +
                           " vs Weyl dimension " + dim.get_str();
                });
            }
        }
    });

    run(6, "torus oracle agrees with the exact indicator", 300.0, [](Outcome& o) {
        for (auto [family, rank] : fixtures::builtins_up_to_rank(2)) {
            const auto rs = build(family, rank);
            const auto w = WeylGroup::enumerate(rs);
            for (const auto& labels : fixtures::label_box(rank, 3)) {
                const auto lambda = rs.from_dynkin_labels(labels);
                const auto table = weight_support(rs, w, lambda);
                for (long m = 2; m <= 6; ++m) {
                    const double exact = indicator(rs, w, table, m).get_d();
                    const double numeric = indicator_numeric(rs, w, lambda, m).value;
                    o.expect(std::fabs(numeric - exact) < 1e-6, [&] {
                        return type_name(family, rank) + " (" + show(labels) + ") m=" + std::to_string(m) +
                               ": numeric " + std::to_string(numeric) + " exact " + std::to_string(exact);
                    });
                }
            }
        }
        std::mt19937 rng(6);
        std::uniform_int_distribution<long> entry(-6, 6);
        const auto types = fixtures::builtins_up_to_rank(3);
        for (int trial = 0; trial < 100; ++trial) {
            const auto [family, rank] = types[trial % types.size()];
            const auto rs = build(family, rank);
            IntVector labels(rank);
            for (auto& x : labels) x = trial % 5 == 0 ? 0 : entry(rng);
            const double expected = std::all_of(labels.begin(), labels.end(), [](auto x) { return x == 0; }) ? 1.0 : 0.0;
            const double got = torus_character_integral(rs, rs.from_dynkin_labels(labels));
            o.expect(std::fabs(got - expected) < 1e-9, [&] {
                return type_name(family, rank) + " mu=(" + show(labels) + "): integral " + std::to_string(got);
            });
        }
    });

    run(7, "rho - w rho is the sum of the inversion set", 0, [](Outcome& o) {
        for (auto [family, rank] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}}) {
            const auto rs = build(family, rank);
            const auto w = WeylGroup::enumerate(rs);
            const auto& roots = rs.positive_root_coords();
            for (std::size_t k = 0; k < w.size(); ++k) {
                IntVector sum(rank, 0);
                std::set<IntVector> expected_set;
                for (const auto& beta : roots) {
                    const IntVector image = w.apply(k, beta);
                    if (std::all_of(image.begin(), image.end(), [](auto x) { return x <= 0; })) {
                        IntVector neg = image;
                        for (auto& x : neg) x = -x;
                        expected_set.insert(neg);
                        for (std::size_t i = 0; i < rank; ++i) sum[i] += neg[i];
                    }
                }
                std::set<IntVector> got_set;
                IntVector got_sum(rank, 0);
                for (std::size_t idx : w.inversion_set(k)) {
                    got_set.insert(roots[idx]);
                    for (std::size_t i = 0; i < rank; ++i) got_sum[i] += roots[idx][i];
                }
                const auto direct = rs.rho() - w.apply(k, rs.rho());
                o.expect(got_set == expected_set && got_sum == sum && direct.integer_coords() == sum &&
                             w.rho_minus_w_rho(k).integer_coords() == sum,
                         [&] { return type_name(family, rank) + " element " + std::to_string(k); });
            }
        }
    });

    run(8, "dim V[0] != 0 iff lambda is in the root lattice", 0, [](Outcome& o) {
        std::mt19937 rng(8);
        for (auto [family, rank] : fixtures::builtins_up_to_rank(3)) {
            const auto rs = build(family, rank);
            const auto w = WeylGroup::enumerate(rs);
            for (int trial = 0; trial < 50; ++trial) {
                const IntVector labels = random_labels(rng, rank, 5);
                const auto lambda = rs.from_dynkin_labels(labels);
                const auto table = weight_support(rs, w, lambda);
                const BigInt zero = multiplicity_at(rs, table, Weight::zero(rank));
                const bool in_lattice = lambda.integer_coords().has_value();
                o.expect((zero != 0) == in_lattice, [&] {
                    return type_name(family, rank) + " (" + show(labels) + "): dim V[0]=" + zero.get_str() +
                           " in_root_lattice=" + (in_lattice ? "yes" : "no");
                });
            }
        }
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAILED" : "ALL PASSED", failures);
    return failures ? 1 : 0;
}
