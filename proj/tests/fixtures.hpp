#pragma once

// Classical root systems realized in the orthonormal epsilon basis. These are
// independent of the Cartan-matrix driven construction in the library and serve
// as its test oracle.

#include <algorithm>
#include <set>
#include <vector>

#include "fsind/root_system.hpp"

namespace fixtures {

using Vec = std::vector<long>;

struct EpsilonRoots {
    std::vector<Vec> simple;
    std::vector<Vec> positive;
};

inline Vec unit(std::size_t dim, std::size_t i, long scale = 1) {
    Vec v(dim, 0);
    v[i] = scale;
    return v;
}

inline Vec add(Vec a, const Vec& b, long sb = 1) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += sb * b[i];
    return a;
}

inline long dot(const Vec& a, const Vec& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline EpsilonRoots epsilon_roots(fsind::Family family, std::size_t n) {
    EpsilonRoots r;
    const std::size_t dim = family == fsind::Family::A ? n + 1 : n;
    const std::size_t k = family == fsind::Family::A ? n + 1 : n;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i + 1; j < k; ++j) {
            r.positive.push_back(add(unit(dim, i), unit(dim, j), -1));
            if (family != fsind::Family::A) r.positive.push_back(add(unit(dim, i), unit(dim, j)));
        }
    if (family == fsind::Family::B)
        for (std::size_t i = 0; i < n; ++i) r.positive.push_back(unit(dim, i));
    if (family == fsind::Family::C)
        for (std::size_t i = 0; i < n; ++i) r.positive.push_back(unit(dim, i, 2));

    const std::size_t chain = family == fsind::Family::A ? n : n - 1;
    for (std::size_t i = 0; i < chain; ++i) r.simple.push_back(add(unit(dim, i), unit(dim, i + 1), -1));
    if (family == fsind::Family::B) r.simple.push_back(unit(dim, n - 1));
    if (family == fsind::Family::C) r.simple.push_back(unit(dim, n - 1, 2));
    if (family == fsind::Family::D) r.simple.push_back(add(unit(dim, n - 2), unit(dim, n - 1)));
    return r;
}

/// Coordinates of v in the basis of simple roots (exact Gaussian elimination on
/// the first rank coordinates, which determine the expansion for these bases).
inline fsind::IntVector simple_root_coords(const EpsilonRoots& r, const Vec& v) {
    const std::size_t n = r.simple.size();
    std::vector<std::vector<fsind::Rational>> m(n, std::vector<fsind::Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = r.simple[j][i];
        m[i][n] = v[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            fsind::Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j <= n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    fsind::IntVector out(n);
    for (std::size_t i = 0; i < n; ++i) {
        fsind::Rational q = m[i][n] / m[i][i];
        out[i] = q.get_num().get_si();
        if (q.get_den() != 1) out[i] = 1 << 30;  // flags a non-integral expansion
    }
    return out;
}

inline std::set<fsind::IntVector> positive_root_set(fsind::Family family, std::size_t n) {
    auto r = epsilon_roots(family, n);
    std::set<fsind::IntVector> out;
    for (const auto& v : r.positive) out.insert(simple_root_coords(r, v));
    return out;
}

struct BuiltinType {
    fsind::Family family;
    std::size_t rank;
};

inline std::vector<BuiltinType> builtins_up_to_rank(std::size_t max_rank) {
    std::vector<BuiltinType> out;
    for (std::size_t r = 1; r <= max_rank; ++r) {
        out.push_back({fsind::Family::A, r});
        out.push_back({fsind::Family::B, r});
        out.push_back({fsind::Family::C, r});
        if (r >= 3) out.push_back({fsind::Family::D, r});
    }
    return out;
}

inline fsind::RootSystem build(fsind::Family f, std::size_t r) {
    return fsind::RootSystem::build(fsind::LieType::classical(f, r));
}

/// All label vectors with entries in [0, max_label].
inline std::vector<fsind::IntVector> label_box(std::size_t rank, long max_label) {
    std::vector<fsind::IntVector> out;
    fsind::IntVector v(rank, 0);
    for (;;) {
        out.push_back(v);
        std::size_t i = 0;
        while (i < rank && v[i] == max_label) v[i++] = 0;
        if (i == rank) return out;
        ++v[i];
    }
}

}  // namespace fixtures
