#include "fsind/weyl_group.hpp"

#include <algorithm>
#include <limits>

namespace fsind {

Weight WeylElement::apply(const Weight& mu) const {
    Weight out(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        for (std::size_t j = 0; j < mu.size(); ++j)
            if (matrix(i, j) != 0) out[i] += mu[j] * static_cast<long>(matrix(i, j));
    return out;
}

WeylElement simple_reflection(const RootSystem& rs, std::size_t i) {
    if (i >= rs.rank()) throw ValidationError("simple reflection index out of range");
    WeylElement s;
    s.matrix = IntMatrix::identity(rs.rank());
    for (std::size_t j = 0; j < rs.rank(); ++j) s.matrix(i, j) -= rs.cartan()(i, j);
    s.sign = -1;
    s.length = 1;
    return s;
}

WeylGroup WeylGroup::enumerate(const RootSystem& rs, std::size_t cap) {
    WeylGroup g;
    g.rs_ = rs;
    const std::size_t n = rs.rank();
    g.rank_sq_ = n * n;
    const IntMatrix& a = rs.cartan();

    auto push = [&](const IntMatrix& m, const IntVector& rho_labels, std::size_t length) {
        if (g.signs_.size() >= cap)
            throw ResourceError("Weyl group too large: more than " + std::to_string(cap) +
                                " elements (raise the Weyl group cap)");
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                auto x = m(i, j);
                if (x < std::numeric_limits<std::int8_t>::min() || x > std::numeric_limits<std::int8_t>::max())
                    throw std::logic_error("internal error: Weyl matrix entry out of range");
                g.matrices_.push_back(static_cast<std::int8_t>(x));
            }
        }
        for (auto x : rho_labels) g.rho_images_.push_back(static_cast<std::int32_t>(x));
        BigInt det = m.determinant();
        if (det != 1 && det != -1) throw std::logic_error("internal error: Weyl matrix is not unimodular");
        g.signs_.push_back(det == 1 ? 1 : -1);
        g.lengths_.push_back(length);
        g.index_by_rho_image_.emplace(rho_labels, g.signs_.size() - 1);
    };

    push(IntMatrix::identity(n), IntVector(n, 1), 0);
    for (std::size_t k = 0; k < g.signs_.size(); ++k) {
        const WeylElement w = g.element(k);
        const IntVector rho_k(g.rho_image_labels(k).begin(), g.rho_image_labels(k).end());
        for (std::size_t i = 0; i < n; ++i) {
            IntVector image = rho_k;
            rs.reflect_labels(image, i);
            if (g.index_by_rho_image_.contains(image)) continue;
            // s_i * M only changes row i.
            IntMatrix m = w.matrix;
            for (std::size_t c = 0; c < n; ++c) {
                std::int64_t v = 0;
                for (std::size_t j = 0; j < n; ++j) v += a(i, j) * w.matrix(j, c);
                m(i, c) -= v;
            }
            push(m, image, g.lengths_[k] + 1);
        }
    }

    const std::size_t nroots = rs.num_positive_roots();
    auto it = std::find(g.lengths_.begin(), g.lengths_.end(), nroots);
    if (it == g.lengths_.end()) throw std::logic_error("internal error: no longest element");
    g.longest_ = static_cast<std::size_t>(it - g.lengths_.begin());
    return g;
}

WeylElement WeylGroup::element(std::size_t k) const {
    const std::size_t n = rs_.rank();
    WeylElement w;
    w.matrix = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) w.matrix(i, j) = matrix_entry(k, i, j);
    w.sign = signs_[k];
    w.length = lengths_[k];
    return w;
}

IntVector WeylGroup::rho_minus_w_rho_labels(std::size_t k) const {
    auto img = rho_image_labels(k);
    IntVector out(img.size());
    for (std::size_t i = 0; i < img.size(); ++i) out[i] = 1 - img[i];
    return out;
}

Weight WeylGroup::apply(std::size_t k, const Weight& mu) const {
    const std::size_t n = rs_.rank();
    Weight out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (auto x = matrix_entry(k, i, j)) out[i] += mu[j] * static_cast<long>(x);
    return out;
}

IntVector WeylGroup::apply(std::size_t k, const IntVector& v) const {
    const std::size_t n = rs_.rank();
    IntVector out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += matrix_entry(k, i, j) * v[j];
    return out;
}

Weight WeylGroup::rho_minus_w_rho(std::size_t k) const { return rs_.rho() - apply(k, rs_.rho()); }

std::vector<std::size_t> WeylGroup::inversion_set(std::size_t k) const {
    // {alpha > 0 : w^{-1} alpha < 0} = {-w beta : beta > 0, w beta < 0}
    std::vector<std::size_t> out;
    for (const auto& beta : rs_.positive_root_coords()) {
        IntVector image = apply(k, beta);
        if (std::all_of(image.begin(), image.end(), [](auto x) { return x <= 0; })) {
            for (auto& x : image) x = -x;
            auto idx = rs_.positive_root_index(image);
            if (!idx) throw std::logic_error("internal error: Weyl element does not permute roots");
            out.push_back(*idx);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::size_t> WeylGroup::find(const WeylElement& w) const {
    auto labels = rs_.dynkin_labels(w.apply(rs_.rho()));
    if (!labels) return std::nullopt;
    auto it = index_by_rho_image_.find(*labels);
    if (it == index_by_rho_image_.end()) return std::nullopt;
    if (!(element(it->second).matrix == w.matrix)) return std::nullopt;
    return it->second;
}

}  // namespace fsind
