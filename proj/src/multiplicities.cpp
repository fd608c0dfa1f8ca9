#include "fsind/multiplicities.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

namespace fsind {

namespace {

bool nonnegative(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

bool all_zero(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

IntVector require_dominant_labels(const RootSystem& rs, const Weight& lambda) {
    if (lambda.size() != rs.rank()) throw ValidationError("highest weight has wrong rank");
    auto labels = rs.dynkin_labels(lambda);
    if (!labels || !nonnegative(*labels))
        throw ValidationError("highest weight must be dominant integral, got " + lambda.to_string());
    return *labels;
}

}  // namespace

const char* engine_name(MultiplicityEngine e) {
    return e == MultiplicityEngine::Kostant ? "kostant" : "freudenthal";
}

// ---------------------------------------------------------------------------
// Kostant partition function

PartitionFunction::PartitionFunction(const RootSystem& rs) : PartitionFunction(rs, [&] {
    std::vector<std::size_t> order(rs.num_positive_roots());
    std::iota(order.begin(), order.end(), 0);
    return order;
}()) {}

PartitionFunction::PartitionFunction(const RootSystem& rs, std::vector<std::size_t> root_order)
    : order_(std::move(root_order)) {
    std::vector<std::size_t> check = order_;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != i || check.size() != rs.num_positive_roots())
            throw ValidationError("partition root order must be a permutation of the positive roots");
    for (auto k : order_) roots_.push_back(rs.positive_root_coords()[k]);
}

BigInt PartitionFunction::operator()(const Weight& v) {
    auto c = v.integer_coords();
    if (!c) return 0;
    return (*this)(*c);
}

BigInt PartitionFunction::operator()(const IntVector& v) {
    if (!nonnegative(v)) return 0;
    return count(roots_.size(), v);
}

const BigInt& PartitionFunction::count(std::size_t k, const IntVector& v) {
    static const BigInt zero = 0, one = 1;
    if (k == 0) return all_zero(v) ? one : zero;
    if (all_zero(v)) return one;

    IntVector key = v;
    key.push_back(static_cast<std::int64_t>(k));
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    const IntVector& beta = roots_[k - 1];
    BigInt total = 0;
    IntVector u = v;
    while (nonnegative(u)) {
        total += count(k - 1, u);
        for (std::size_t i = 0; i < u.size(); ++i) u[i] -= beta[i];
    }
    return memo_.emplace(std::move(key), std::move(total)).first->second;
}

BigInt kostant_partition(const RootSystem& rs, const Weight& v) {
    PartitionFunction p(rs);
    return p(v);
}

// ---------------------------------------------------------------------------
// Tables and support

BigInt MultiplicityTable::lookup_dominant(const IntVector& labels) const {
    auto it = entries_.find(labels);
    return it == entries_.end() ? BigInt(0) : it->second;
}

std::vector<IntVector> dominant_weights_below(const RootSystem& rs, const IntVector& lambda, std::size_t cap) {
    // Dominant weights below lambda are connected to lambda through dominant
    // weights differing by positive roots.
    std::unordered_set<IntVector, IntVectorHash> seen{lambda};
    std::vector<IntVector> out{lambda};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& alpha : rs.positive_root_labels()) {
            IntVector nu = out[k];
            for (std::size_t i = 0; i < nu.size(); ++i) nu[i] -= alpha[i];
            if (!nonnegative(nu) || seen.contains(nu)) continue;
            if (out.size() >= cap)
                throw ResourceError("weight support exceeds cap of " + std::to_string(cap) + " dominant weights");
            seen.insert(nu);
            out.push_back(std::move(nu));
        }
    }
    std::vector<std::pair<std::int64_t, IntVector>> keyed;
    keyed.reserve(out.size());
    for (auto& mu : out) {
        IntVector diff(lambda.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lambda[i] - mu[i];
        auto c = rs.integral_root_coords(diff);
        if (!c) throw std::logic_error("internal error: dominant weight outside lambda + root lattice");
        keyed.emplace_back(std::accumulate(c->begin(), c->end(), std::int64_t{0}), std::move(mu));
    }
    std::sort(keyed.begin(), keyed.end());
    out.clear();
    for (auto& [h, mu] : keyed) out.push_back(std::move(mu));
    return out;
}

namespace {

std::map<IntVector, BigInt> freudenthal_entries(const RootSystem& rs, const IntVector& lambda, std::size_t cap) {
    const std::size_t n = rs.rank();
    const auto dominant = dominant_weights_below(rs, lambda, cap);
    std::map<IntVector, BigInt> mult;
    mult.emplace(lambda, 1);

    const auto& root_labels = rs.positive_root_labels();
    const auto& root_coords = rs.positive_root_coords();
    for (std::size_t idx = 1; idx < dominant.size(); ++idx) {
        const IntVector& mu = dominant[idx];
        BigInt numerator = 0;
        for (std::size_t r = 0; r < root_labels.size(); ++r) {
            IntVector shifted = mu;
            for (;;) {
                for (std::size_t i = 0; i < n; ++i) shifted[i] += root_labels[r][i];
                auto it = mult.find(rs.dominant_representative(shifted));
                if (it == mult.end()) break;
                numerator += it->second * static_cast<long>(rs.form_labels_roots(shifted, root_coords[r]));
            }
        }
        numerator *= 2;

        // (lambda+rho, lambda+rho) - (mu+rho, mu+rho) = (lambda - mu, lambda + mu + 2 rho)
        IntVector diff(n), sum(n);
        for (std::size_t i = 0; i < n; ++i) {
            diff[i] = lambda[i] - mu[i];
            sum[i] = lambda[i] + mu[i] + 2;
        }
        auto diff_coords = rs.integral_root_coords(diff);
        const std::int64_t denominator = rs.form_labels_roots(sum, *diff_coords);
        if (denominator <= 0) throw std::logic_error("internal error: nonpositive Freudenthal denominator");
        BigInt m;
        BigInt rem;
        mpz_fdiv_qr_ui(m.get_mpz_t(), rem.get_mpz_t(), numerator.get_mpz_t(), static_cast<unsigned long>(denominator));
        if (rem != 0) throw std::logic_error("internal error: Freudenthal recursion produced a non-integer");
        mult.emplace(mu, std::move(m));
    }
    return mult;
}

}  // namespace

MultiplicityTable weight_support(const RootSystem& rs, const WeylGroup& w, const Weight& lambda,
                                 MultiplicityEngine engine, std::size_t support_cap) {
    const IntVector labels = require_dominant_labels(rs, lambda);
    if (engine == MultiplicityEngine::Freudenthal)
        return MultiplicityTable(labels, freudenthal_entries(rs, labels, support_cap));

    KostantEngine kostant(rs, w);
    std::map<IntVector, BigInt> entries;
    for (const auto& mu : dominant_weights_below(rs, labels, support_cap))
        entries.emplace(mu, kostant.multiplicity(lambda, rs.from_dynkin_labels(mu)));
    return MultiplicityTable(labels, std::move(entries));
}

BigInt multiplicity_at_labels(const RootSystem& rs, const MultiplicityTable& table, const IntVector& mu) {
    const IntVector& lambda = table.lambda_labels();
    IntVector diff(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) diff[i] = lambda[i] - mu[i];
    if (!rs.integral_root_coords(diff)) return 0;
    return table.lookup_dominant(rs.dominant_representative(mu));
}

BigInt multiplicity_at(const RootSystem& rs, const MultiplicityTable& table, const Weight& mu) {
    auto labels = rs.dynkin_labels(mu);
    if (!labels) return 0;
    return multiplicity_at_labels(rs, table, *labels);
}

BigInt multiplicity_freudenthal(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
    const IntVector labels = require_dominant_labels(rs, lambda);
    auto mu_labels = rs.dynkin_labels(mu);
    if (!mu_labels) return 0;
    IntVector diff(labels.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = labels[i] - (*mu_labels)[i];
    if (!rs.integral_root_coords(diff)) return 0;
    MultiplicityTable table(labels, freudenthal_entries(rs, labels, kDefaultSupportCap));
    return multiplicity_at_labels(rs, table, *mu_labels);
}

// ---------------------------------------------------------------------------
// Kostant's formula

BigInt KostantEngine::multiplicity(const Weight& lambda, const Weight& mu) {
    require_dominant_labels(rs_, lambda);
    auto offset = (lambda - mu).integer_coords();  // lambda - mu must lie in the root lattice
    if (!offset) return 0;
    const Weight shifted = lambda + rs_.rho();
    BigInt total = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) {
        // sigma(lambda + rho) - mu - rho = (sigma(lambda+rho) - (lambda+rho)) + (lambda - mu)
        auto delta = (w_.apply(k, shifted) - shifted).integer_coords();
        IntVector v = *delta;
        bool feasible = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] += (*offset)[i];
            feasible = feasible && v[i] >= 0;
        }
        if (!feasible) continue;
        BigInt p = partition_(v);
        if (w_.sign(k) > 0) total += p;
        else total -= p;
    }
    return total;
}

BigInt multiplicity_kostant(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, const Weight& mu) {
    KostantEngine engine(rs, w);
    return engine.multiplicity(lambda, mu);
}

// ---------------------------------------------------------------------------
// Orbits and dimensions

std::vector<IntVector> weyl_orbit(const RootSystem& rs, const IntVector& labels, std::size_t cap) {
    std::unordered_set<IntVector, IntVectorHash> seen{labels};
    std::vector<IntVector> out{labels};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (std::size_t i = 0; i < rs.rank(); ++i) {
            IntVector nu = out[k];
            rs.reflect_labels(nu, i);
            if (seen.contains(nu)) continue;
            if (out.size() >= cap) throw ResourceError("Weyl orbit exceeds cap of " + std::to_string(cap));
            seen.insert(nu);
            out.push_back(std::move(nu));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda) {
    IntVector shifted = require_dominant_labels(rs, lambda);
    for (auto& x : shifted) x += 1;
    const IntVector rho_labels(rs.rank(), 1);
    BigInt num = 1, den = 1;
    for (const auto& alpha : rs.positive_root_coords()) {
        num *= static_cast<long>(rs.form_labels_roots(shifted, alpha));
        den *= static_cast<long>(rs.form_labels_roots(rho_labels, alpha));
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (r != 0) throw std::logic_error("internal error: Weyl dimension formula gave a non-integer");
    return q;
}

BigInt total_dimension(const RootSystem& rs, const MultiplicityTable& table) {
    BigInt total = 0;
    for (const auto& [mu, m] : table.entries()) total += m * static_cast<unsigned long>(weyl_orbit(rs, mu).size());
    return total;
}

}  // namespace fsind
