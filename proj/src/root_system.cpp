#include "fsind/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace fsind {

namespace {

constexpr std::size_t kMaxPositiveRoots = 1u << 20;

std::string family_letter(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::Custom: return "custom";
    }
    return "?";
}

bool is_nonnegative(const IntVector& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; });
}

}  // namespace

// ---------------------------------------------------------------------------
// LieType

LieType LieType::classical(Family family, std::size_t rank) {
    if (family == Family::Custom) throw ValidationError("custom types need a Cartan matrix");
    if (rank < 1) throw ValidationError("rank must be at least 1");
    if (family == Family::D && rank < 3)
        throw ValidationError("type D requires rank >= 3 (D1 and D2 are not simple)");
    LieType t;
    t.family = family;
    t.rank = rank;
    return t;
}

LieType LieType::custom(IntMatrix cartan) {
    validate_cartan(cartan);
    LieType t;
    t.family = Family::Custom;
    t.rank = cartan.rows();
    t.custom_cartan = std::move(cartan);
    return t;
}

LieType LieType::parse(std::string_view descriptor) {
    constexpr std::string_view custom_prefix = "custom:";
    if (descriptor.substr(0, custom_prefix.size()) == custom_prefix) {
        return custom(load_cartan_file(std::string(descriptor.substr(custom_prefix.size()))));
    }
    if (descriptor.size() < 2) throw ValidationError("type descriptor must look like A2, B3, C4, D5 or custom:<path>");
    Family family;
    switch (std::toupper(static_cast<unsigned char>(descriptor[0]))) {
        case 'A': family = Family::A; break;
        case 'B': family = Family::B; break;
        case 'C': family = Family::C; break;
        case 'D': family = Family::D; break;
        default:
            throw ValidationError("unknown Lie type family '" + std::string(1, descriptor[0]) +
                                  "' (expected A, B, C, D or custom:<path>)");
    }
    auto digits = descriptor.substr(1);
    if (!std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        digits.size() > 6)
        throw ValidationError("invalid rank in type descriptor '" + std::string(descriptor) + "'");
    return classical(family, std::stoul(std::string(digits)));
}

std::string LieType::name() const {
    if (family == Family::Custom) return "custom";
    return family_letter(family) + std::to_string(rank);
}

IntMatrix read_cartan_matrix(std::istream& in) {
    long long rank = 0;
    if (!(in >> rank)) throw ValidationError("Cartan file: missing rank on first line");
    if (rank < 1) throw ValidationError("Cartan file: rank must be at least 1");
    if (rank > 64) throw ValidationError("Cartan file: rank above 64 is not supported");
    IntMatrix a(rank, rank);
    for (long long i = 0; i < rank; ++i) {
        for (long long j = 0; j < rank; ++j) {
            long long x;
            if (!(in >> x))
                throw ValidationError("Cartan file: expected " + std::to_string(rank * rank) + " integer entries");
            a(i, j) = x;
        }
    }
    std::string extra;
    if (in >> extra) throw ValidationError("Cartan file: trailing data after matrix");
    return a;
}

IntMatrix load_cartan_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open Cartan matrix file '" + path + "'");
    return read_cartan_matrix(in);
}

// ---------------------------------------------------------------------------
// Weight

Weight Weight::from_integers(const IntVector& coords) {
    Weight w(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) w.coords_[i] = static_cast<long>(coords[i]);
    return w;
}

bool Weight::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rational& q) { return q == 0; });
}

std::optional<IntVector> Weight::integer_coords() const {
    IntVector out(coords_.size());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i].get_den() != 1) return std::nullopt;
        out[i] = coords_[i].get_num().get_si();
    }
    return out;
}

Weight& Weight::operator+=(const Weight& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
}

Weight& Weight::operator*=(const Rational& s) {
    for (auto& c : coords_) c *= s;
    return *this;
}

Weight& Weight::operator/=(const Rational& s) {
    for (auto& c : coords_) c /= s;
    return *this;
}

Weight Weight::operator-() const {
    Weight w(*this);
    for (auto& c : w.coords_) c = -c;
    return w;
}

std::string Weight::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) s += ", ";
        s += coords_[i].get_str();
    }
    return s + "]";
}

// ---------------------------------------------------------------------------
// Cartan matrices

IntMatrix classical_cartan(Family family, std::size_t n) {
    IntMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
    switch (family) {
        case Family::A:
            for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
            break;
        case Family::B:
        case Family::C:
            for (std::size_t i = 0; i + 1 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
            if (n >= 2) {
                // alpha_n(h_{n-1}) and alpha_{n-1}(h_n)
                if (family == Family::B) a(n - 1, n - 2) = -2;
                else a(n - 2, n - 1) = -2;
            }
            break;
        case Family::D:
            if (n < 3) throw ValidationError("type D requires rank >= 3");
            for (std::size_t i = 0; i + 2 < n; ++i) a(i, i + 1) = a(i + 1, i) = -1;
            a(n - 1, n - 3) = a(n - 3, n - 1) = -1;
            break;
        case Family::Custom:
            throw ValidationError("custom family has no built-in Cartan matrix");
    }
    return a;
}

IntVector validate_cartan(const IntMatrix& a) {
    const std::size_t n = a.rows();
    if (n == 0 || a.cols() != n) throw ValidationError("Cartan matrix must be square with rank >= 1");
    for (std::size_t i = 0; i < n; ++i) {
        if (a(i, i) != 2) throw ValidationError("Cartan matrix diagonal entries must equal 2");
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            if (a(i, j) > 0) throw ValidationError("Cartan matrix off-diagonal entries must be <= 0");
            if ((a(i, j) == 0) != (a(j, i) == 0))
                throw ValidationError("Cartan matrix must satisfy A_ij = 0 <=> A_ji = 0");
        }
    }

    // Propagate d_j = d_i * A_ij / A_ji over each connected component.
    std::vector<Rational> d(n, 0);
    std::vector<int> component(n, -1);
    int ncomp = 0;
    for (std::size_t s = 0; s < n; ++s) {
        if (component[s] >= 0) continue;
        d[s] = 1;
        component[s] = ncomp;
        std::deque<std::size_t> queue{s};
        while (!queue.empty()) {
            auto i = queue.front();
            queue.pop_front();
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i || a(i, j) == 0) continue;
                Rational ratio(BigInt(static_cast<long>(a(i, j))), BigInt(static_cast<long>(a(j, i))));
                ratio.canonicalize();
                Rational dj = d[i] * ratio;
                if (component[j] < 0) {
                    component[j] = ncomp;
                    d[j] = dj;
                    queue.push_back(j);
                } else if (d[j] != dj) {
                    throw ValidationError("Cartan matrix is not symmetrizable");
                }
            }
        }
        ++ncomp;
    }

    IntVector sym(n);
    for (int c = 0; c < ncomp; ++c) {
        BigInt lcm_den = 1, gcd_num = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (component[i] != c) continue;
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d[i].get_den_mpz_t());
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (component[i] != c) continue;
            BigInt v = d[i].get_num() * (lcm_den / d[i].get_den());
            mpz_gcd(gcd_num.get_mpz_t(), gcd_num.get_mpz_t(), v.get_mpz_t());
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (component[i] != c) continue;
            BigInt v = d[i].get_num() * (lcm_den / d[i].get_den()) / gcd_num;
            if (!v.fits_slong_p() || v <= 0) throw ValidationError("Cartan matrix symmetrizer out of range");
            sym[i] = v.get_si();
        }
    }

    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = sym[i] * a(i, j);
    // Sylvester's criterion on the symmetrized matrix.
    for (std::size_t k = 1; k <= n; ++k) {
        IntMatrix minor(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) minor(i, j) = b(i, j);
        if (minor.determinant() <= 0)
            throw ValidationError("symmetrized Cartan matrix is not positive definite (not of finite type)");
    }
    return sym;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem RootSystem::build(const LieType& type) {
    RootSystem rs;
    rs.type_ = type;
    if (type.family == Family::Custom) {
        if (!type.custom_cartan) throw ValidationError("custom type is missing its Cartan matrix");
        rs.cartan_ = *type.custom_cartan;
        if (rs.cartan_.rows() != type.rank) throw ValidationError("custom type rank does not match its Cartan matrix");
    } else {
        rs.type_ = LieType::classical(type.family, type.rank);
        rs.cartan_ = classical_cartan(type.family, type.rank);
    }
    rs.symmetrizer_ = validate_cartan(rs.cartan_);
    const std::size_t n = rs.rank();
    const IntMatrix& a = rs.cartan_;

    // Exact inverse by Gauss-Jordan over the rationals.
    {
        std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, 0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) m[i][j] = static_cast<long>(a(i, j));
            m[i][n + i] = 1;
        }
        for (std::size_t col = 0; col < n; ++col) {
            std::size_t piv = col;
            while (m[piv][col] == 0) ++piv;
            std::swap(m[piv], m[col]);
            Rational p = m[col][col];
            for (auto& x : m[col]) x /= p;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == col || m[r][col] == 0) continue;
                Rational f = m[r][col];
                for (std::size_t c = 0; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
            }
        }
        rs.inverse_cartan_.assign(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rs.inverse_cartan_[i][j] = m[i][n + j];
    }
    rs.det_ = a.determinant();
    if (!rs.det_.fits_slong_p()) throw ValidationError("Cartan determinant out of range");
    rs.det_small_ = rs.det_.get_si();
    rs.adjugate_ = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Rational v = rs.inverse_cartan_[i][j] * rs.det_;
            rs.adjugate_(i, j) = v.get_num().get_si();
        }
    }

    // Reflection closure from the simple roots.
    std::unordered_set<IntVector, IntVectorHash> seen;
    std::deque<IntVector> queue;
    std::vector<IntVector> roots;
    for (std::size_t i = 0; i < n; ++i) {
        IntVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
        roots.push_back(e);
    }
    while (!queue.empty()) {
        IntVector beta = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            std::int64_t p = 0;
            for (std::size_t j = 0; j < n; ++j) p += a(i, j) * beta[j];
            if (p == 0) continue;
            IntVector r = beta;
            r[i] -= p;
            if (!is_nonnegative(r) || seen.contains(r)) continue;
            if (roots.size() >= kMaxPositiveRoots) throw ValidationError("positive root closure did not terminate");
            seen.insert(r);
            queue.push_back(r);
            roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const IntVector& x, const IntVector& y) {
        auto hx = std::accumulate(x.begin(), x.end(), std::int64_t{0});
        auto hy = std::accumulate(y.begin(), y.end(), std::int64_t{0});
        if (hx != hy) return hx < hy;
        return x > y;
    });
    rs.root_coords_ = roots;
    rs.rho_ = Weight(n);
    for (const auto& r : roots) {
        rs.positive_roots_.push_back(Weight::from_integers(r));
        rs.root_labels_.push_back(rs.labels_of_root_coords(r));
        rs.rho_ += rs.positive_roots_.back();
    }
    rs.rho_ /= 2;
    for (std::size_t k = 0; k < roots.size(); ++k) rs.coroots_.push_back(rs.coroot_of_root(rs.positive_roots_[k]));

    for (std::size_t i = 0; i < n; ++i) {
        if (rs.pair_coroot(rs.rho_, i) != 1)
            throw std::logic_error("internal error: rho(h_i) != 1 after root closure");
    }
    return rs;
}

Weight RootSystem::simple_root(std::size_t i) const {
    if (i >= rank()) throw ValidationError("simple root index out of range");
    Weight w(rank());
    w[i] = 1;
    return w;
}

Rational RootSystem::pair_coroot(const Weight& mu, std::size_t i) const {
    if (i >= rank()) throw ValidationError("simple coroot index out of range");
    Rational s = 0;
    for (std::size_t j = 0; j < rank(); ++j)
        if (cartan_(i, j) != 0) s += mu[j] * static_cast<long>(cartan_(i, j));
    return s;
}

std::vector<Rational> RootSystem::pairings(const Weight& mu) const {
    std::vector<Rational> out(rank());
    for (std::size_t i = 0; i < rank(); ++i) out[i] = pair_coroot(mu, i);
    return out;
}

std::optional<IntVector> RootSystem::dynkin_labels(const Weight& mu) const {
    IntVector out(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        Rational p = pair_coroot(mu, i);
        if (p.get_den() != 1) return std::nullopt;
        out[i] = p.get_num().get_si();
    }
    return out;
}

IntVector RootSystem::labels_of_root_coords(const IntVector& coords) const { return cartan_ * coords; }

std::optional<IntVector> RootSystem::integral_root_coords(const IntVector& labels) const {
    IntVector c = adjugate_ * labels;
    for (auto& x : c) {
        if (x % det_small_ != 0) return std::nullopt;
        x /= det_small_;
    }
    return c;
}

Weight RootSystem::from_dynkin_labels(const IntVector& labels) const {
    if (labels.size() != rank())
        throw ValidationError("expected " + std::to_string(rank()) + " Dynkin labels, got " +
                              std::to_string(labels.size()));
    Weight w(rank());
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < rank(); ++j) w[i] += inverse_cartan_[i][j] * static_cast<long>(labels[j]);
    return w;
}

Rational RootSystem::form(const Weight& mu, const Weight& nu) const {
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (mu[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) {
            if (cartan_(i, j) == 0 || nu[j] == 0) continue;
            s += mu[i] * nu[j] * static_cast<long>(symmetrizer_[i] * cartan_(i, j));
        }
    }
    return s;
}

std::int64_t RootSystem::form_labels_roots(const IntVector& mu_labels, const IntVector& nu_coords) const {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < rank(); ++j) s += nu_coords[j] * symmetrizer_[j] * mu_labels[j];
    return s;
}

std::optional<std::size_t> RootSystem::positive_root_index(const IntVector& coords) const {
    auto it = std::find(root_coords_.begin(), root_coords_.end(), coords);
    if (it == root_coords_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - root_coords_.begin());
}

bool RootSystem::is_root(const Weight& mu) const {
    auto c = mu.integer_coords();
    if (!c) return false;
    if (positive_root_index(*c)) return true;
    for (auto& x : *c) x = -x;
    return positive_root_index(*c).has_value();
}

IntVector RootSystem::coroot_of_root(const Weight& beta) const {
    if (beta.size() != rank() || !is_root(beta)) throw ValidationError("coroot requested for a non-root " + beta.to_string());
    Rational norm = form(beta, beta);
    IntVector out(rank());
    for (std::size_t j = 0; j < rank(); ++j) {
        Rational c = 2 * beta[j] * static_cast<long>(symmetrizer_[j]) / norm;
        if (c.get_den() != 1) throw std::logic_error("internal error: non-integral coroot coefficient");
        out[j] = c.get_num().get_si();
    }
    return out;
}

std::int64_t RootSystem::eval_two_rho_check(const Weight& lambda) const {
    auto labels = dynkin_labels(lambda);
    if (!labels) throw ValidationError("lambda(2 rho-check) requires an integral weight, got " + lambda.to_string());
    std::int64_t s = 0;
    for (const auto& h : coroots_)
        for (std::size_t j = 0; j < rank(); ++j) s += h[j] * (*labels)[j];
    return s;
}

bool RootSystem::is_dominant_integral(const Weight& mu) const {
    auto l = dynkin_labels(mu);
    return l && is_nonnegative(*l);
}

void RootSystem::reflect_labels(IntVector& labels, std::size_t i) const {
    const std::int64_t p = labels[i];
    if (p == 0) return;
    for (std::size_t j = 0; j < rank(); ++j) labels[j] -= p * cartan_(j, i);
}

IntVector RootSystem::dominant_representative(IntVector labels) const {
    for (;;) {
        std::size_t i = 0;
        while (i < labels.size() && labels[i] >= 0) ++i;
        if (i == labels.size()) return labels;
        reflect_labels(labels, i);
    }
}

}  // namespace fsind
