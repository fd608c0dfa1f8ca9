#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "fsind/core.hpp"
#include "fsind/root_system.hpp"
#include "fsind/weyl_group.hpp"

namespace fsind {

inline constexpr std::size_t kDefaultSupportCap = 1'000'000;

enum class MultiplicityEngine { Freudenthal, Kostant };

const char* engine_name(MultiplicityEngine e);

/// Memoized Kostant partition function: the number of ways to write a vector
/// as a nonnegative integer combination of positive roots.
///
/// Counting is coin-change style over a fixed ordering of the positive roots:
/// p_k(v) = sum_{j >= 0} p_{k-1}(v - j beta_k), with p_0(v) = [v == 0].
/// Not thread-safe (the memo is mutated on lookup).
class PartitionFunction {
public:
    explicit PartitionFunction(const RootSystem& rs);
    /// `root_order` is a permutation of positive-root indices.
    PartitionFunction(const RootSystem& rs, std::vector<std::size_t> root_order);

    /// p(v); zero when v has a negative or non-integral coordinate.
    BigInt operator()(const Weight& v);
    BigInt operator()(const IntVector& root_coords);

    const std::vector<std::size_t>& root_order() const { return order_; }
    std::size_t memo_size() const { return memo_.size(); }

private:
    const BigInt& count(std::size_t k, const IntVector& v);

    std::vector<IntVector> roots_;  // in counting order
    std::vector<std::size_t> order_;
    std::unordered_map<IntVector, BigInt, IntVectorHash> memo_;  // key: v with k appended
};

BigInt kostant_partition(const RootSystem& rs, const Weight& v);

/// Dominant weights of V(lambda) with their multiplicities. Keys are Dynkin labels.
class MultiplicityTable {
public:
    MultiplicityTable() = default;
    MultiplicityTable(IntVector lambda_labels, std::map<IntVector, BigInt> entries)
        : lambda_(std::move(lambda_labels)), entries_(std::move(entries)) {}

    const IntVector& lambda_labels() const { return lambda_; }
    const std::map<IntVector, BigInt>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }

    /// Multiplicity of a dominant weight given by labels; 0 if absent.
    BigInt lookup_dominant(const IntVector& labels) const;

private:
    IntVector lambda_;
    std::map<IntVector, BigInt> entries_;
};

/// Dominant weights mu <= lambda, ordered by increasing height of lambda - mu.
/// Throws ResourceError past `cap`.
std::vector<IntVector> dominant_weights_below(const RootSystem& rs, const IntVector& lambda_labels,
                                              std::size_t cap = kDefaultSupportCap);

/// Multiplicities via Kostant's alternating sum over W.
class KostantEngine {
public:
    KostantEngine(const RootSystem& rs, const WeylGroup& w) : rs_(rs), w_(w), partition_(rs) {}

    /// m_lambda(mu); 0 when mu is not a weight of V(lambda).
    BigInt multiplicity(const Weight& lambda, const Weight& mu);

private:
    const RootSystem& rs_;
    const WeylGroup& w_;
    PartitionFunction partition_;
};

BigInt multiplicity_kostant(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, const Weight& mu);

/// m_lambda(mu) by Freudenthal's recursion over the dominant weights of V(lambda).
BigInt multiplicity_freudenthal(const RootSystem& rs, const Weight& lambda, const Weight& mu);

/// All dominant weights of V(lambda) with multiplicities.
MultiplicityTable weight_support(const RootSystem& rs, const WeylGroup& w, const Weight& lambda,
                                 MultiplicityEngine engine = MultiplicityEngine::Freudenthal,
                                 std::size_t support_cap = kDefaultSupportCap);

/// Multiplicity of an arbitrary weight: reduce to the dominant chamber and look
/// up. Returns 0 for non-integral mu or mu outside lambda + root lattice.
BigInt multiplicity_at(const RootSystem& rs, const MultiplicityTable& table, const Weight& mu);
BigInt multiplicity_at_labels(const RootSystem& rs, const MultiplicityTable& table, const IntVector& mu_labels);

/// W-orbit of an integral weight, as Dynkin-label vectors (sorted).
std::vector<IntVector> weyl_orbit(const RootSystem& rs, const IntVector& labels,
                                  std::size_t cap = kDefaultSupportCap);

/// prod_{alpha > 0} (lambda + rho, alpha) / (rho, alpha).
BigInt weyl_dimension(const RootSystem& rs, const Weight& lambda);

/// Sum of multiplicities over the full weight set (orbit sizes times entries).
BigInt total_dimension(const RootSystem& rs, const MultiplicityTable& table);

}  // namespace fsind
