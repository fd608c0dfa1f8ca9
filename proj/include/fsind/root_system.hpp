#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsind/core.hpp"

namespace fsind {

enum class Family { A, B, C, D, Custom };

/// Identifies a Lie algebra: a classical simple family with its rank, or an
/// arbitrary Cartan matrix.
struct LieType {
    Family family = Family::A;
    std::size_t rank = 1;
    std::optional<IntMatrix> custom_cartan;

    static LieType classical(Family family, std::size_t rank);
    static LieType custom(IntMatrix cartan);

    /// Parses "A2", "b3", ... Custom types are loaded with load_cartan_file.
    static LieType parse(std::string_view descriptor);

    std::string name() const;
};

/// Reads the plain-text Cartan matrix format: the rank on the first line,
/// followed by rank lines of rank whitespace-separated integers.
IntMatrix read_cartan_matrix(std::istream& in);
IntMatrix load_cartan_file(const std::string& path);

/// Point of the real span of the roots, in coordinates with respect to the
/// simple roots: mu = sum_j coords[j] * alpha_j.
class Weight {
public:
    Weight() = default;
    explicit Weight(std::size_t rank) : coords_(rank) {}
    explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
    static Weight from_integers(const IntVector& coords);
    static Weight zero(std::size_t rank) { return Weight(rank); }

    std::size_t size() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;
    /// Integer coordinates if every coordinate is an integer.
    std::optional<IntVector> integer_coords() const;

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    Weight& operator*=(const Rational& s);
    Weight& operator/=(const Rational& s);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(Weight a, const Rational& s) { return a *= s; }
    friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
    friend Weight operator/(Weight a, const Rational& s) { return a /= s; }
    Weight operator-() const;

    bool operator==(const Weight& o) const { return coords_ == o.coords_; }

    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

/// Immutable root datum built from a Cartan matrix A with A(i,j) = alpha_j(h_i).
class RootSystem {
public:
    /// Validates the type, generates the positive roots by reflection closure
    /// and computes rho. Throws ValidationError on invalid input.
    static RootSystem build(const LieType& type);

    const LieType& lie_type() const { return type_; }
    std::size_t rank() const { return cartan_.rows(); }
    const IntMatrix& cartan() const { return cartan_; }
    /// Smallest positive integers d_i with d_i * A(i,j) symmetric (per component).
    const IntVector& symmetrizer() const { return symmetrizer_; }
    const std::vector<std::vector<Rational>>& inverse_cartan() const { return inverse_cartan_; }
    const BigInt& cartan_determinant() const { return det_; }

    /// Positive roots ordered by height, then lexicographically; simple roots first.
    const std::vector<Weight>& positive_roots() const { return positive_roots_; }
    const std::vector<IntVector>& positive_root_coords() const { return root_coords_; }
    /// Coroot pairings (beta(h_1), ..., beta(h_r)) of each positive root.
    const std::vector<IntVector>& positive_root_labels() const { return root_labels_; }
    std::size_t num_positive_roots() const { return root_coords_.size(); }

    const Weight& rho() const { return rho_; }

    Weight simple_root(std::size_t i) const;

    /// mu(h_i) for simple coroot h_i (0-based index).
    Rational pair_coroot(const Weight& mu, std::size_t i) const;
    /// (mu(h_1), ..., mu(h_r)).
    std::vector<Rational> pairings(const Weight& mu) const;
    /// Dynkin labels of mu when all pairings are integers.
    std::optional<IntVector> dynkin_labels(const Weight& mu) const;
    /// Dynkin labels of an integer root-coordinate vector.
    IntVector labels_of_root_coords(const IntVector& coords) const;
    /// Root coordinates of the weight with the given labels, if they are integral
    /// (that is, the weight lies in the root lattice).
    std::optional<IntVector> integral_root_coords(const IntVector& labels) const;

    Weight from_dynkin_labels(const IntVector& labels) const;

    /// Expansion of the coroot h_beta in simple coroots. Throws if beta is not
    /// a positive root.
    IntVector coroot_of_root(const Weight& beta) const;
    IntVector coroot_of_root(std::size_t root_index) const { return coroots_[root_index]; }
    std::optional<std::size_t> positive_root_index(const IntVector& coords) const;
    bool is_root(const Weight& mu) const;

    /// Sum over positive roots beta of lambda(h_beta). Throws on non-integral lambda.
    std::int64_t eval_two_rho_check(const Weight& lambda) const;

    /// W-invariant form with (alpha_i, alpha_j) = d_i * A(i,j).
    Rational form(const Weight& mu, const Weight& nu) const;
    /// Same form on Dynkin-label vectors, scaled so (mu, alpha_j) = d_j * mu(h_j):
    /// returns (mu, nu) where nu is given in root coordinates.
    std::int64_t form_labels_roots(const IntVector& mu_labels, const IntVector& nu_coords) const;

    bool is_integral(const Weight& mu) const { return dynkin_labels(mu).has_value(); }
    bool in_root_lattice(const Weight& mu) const { return mu.integer_coords().has_value(); }
    bool is_dominant_integral(const Weight& mu) const;

    /// Reflects an integral weight (in Dynkin labels) into the dominant chamber
    /// using simple reflections.
    IntVector dominant_representative(IntVector labels) const;
    /// Applies s_i to a Dynkin-label vector in place.
    void reflect_labels(IntVector& labels, std::size_t i) const;

private:
    LieType type_;
    IntMatrix cartan_;
    IntVector symmetrizer_;
    std::vector<std::vector<Rational>> inverse_cartan_;
    IntMatrix adjugate_;
    BigInt det_;
    std::int64_t det_small_ = 1;
    std::vector<Weight> positive_roots_;
    std::vector<IntVector> root_coords_;
    std::vector<IntVector> root_labels_;
    std::vector<IntVector> coroots_;
    Weight rho_;
};

/// Cartan matrix of a classical family (Bourbaki numbering, alpha_n short for
/// B_n and long for C_n).
IntMatrix classical_cartan(Family family, std::size_t rank);

/// Checks the Cartan-matrix axioms and returns the minimal integer symmetrizer.
/// Throws ValidationError naming the violated condition.
IntVector validate_cartan(const IntMatrix& a);

}  // namespace fsind
