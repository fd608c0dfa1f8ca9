#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "fsind/core.hpp"
#include "fsind/root_system.hpp"

namespace fsind {

/// Covers A8, B7/C7, D7.
inline constexpr std::size_t kDefaultWeylCap = 1'048'576;

/// Weyl group element as its matrix on simple-root coordinates. Column j is
/// w(alpha_j).
struct WeylElement {
    IntMatrix matrix;
    int sign = 1;
    /// Length as a word in simple reflections (breadth-first depth).
    std::size_t length = 0;

    Weight apply(const Weight& mu) const;
    IntVector apply(const IntVector& root_coords) const { return matrix * root_coords; }
};

WeylElement simple_reflection(const RootSystem& rs, std::size_t i);

/// The full Weyl group, enumerated as the orbit of rho. Immutable after
/// construction. Element 0 is the identity.
class WeylGroup {
public:
    /// Throws ResourceError if the group has more than `cap` elements.
    static WeylGroup enumerate(const RootSystem& rs, std::size_t cap = kDefaultWeylCap);

    const RootSystem& root_system() const { return rs_; }
    std::size_t size() const { return signs_.size(); }

    WeylElement element(std::size_t k) const;
    int sign(std::size_t k) const { return signs_[k]; }
    std::size_t length(std::size_t k) const { return lengths_[k]; }
    std::int8_t matrix_entry(std::size_t k, std::size_t i, std::size_t j) const {
        return matrices_[k * rank_sq_ + i * rs_.rank() + j];
    }
    /// Dynkin labels of w_k(rho).
    std::span<const std::int32_t> rho_image_labels(std::size_t k) const {
        return {rho_images_.data() + k * rs_.rank(), rs_.rank()};
    }
    /// Dynkin labels of rho - w_k(rho); integer-valued.
    IntVector rho_minus_w_rho_labels(std::size_t k) const;

    Weight apply(std::size_t k, const Weight& mu) const;
    IntVector apply(std::size_t k, const IntVector& root_coords) const;

    std::size_t longest_element() const { return longest_; }
    /// rho - w_k(rho) in simple-root coordinates.
    Weight rho_minus_w_rho(std::size_t k) const;
    /// Indices of positive roots alpha with w_k^{-1}(alpha) negative.
    std::vector<std::size_t> inversion_set(std::size_t k) const;

    /// Index of the element equal to `w`, located through its image of rho.
    std::optional<std::size_t> find(const WeylElement& w) const;

private:
    RootSystem rs_;
    std::size_t rank_sq_ = 0;
    std::vector<std::int8_t> matrices_;
    std::vector<std::int32_t> rho_images_;
    std::vector<int> signs_;
    std::vector<std::size_t> lengths_;
    std::size_t longest_ = 0;
    std::unordered_map<IntVector, std::size_t, IntVectorHash> index_by_rho_image_;
};

}  // namespace fsind
