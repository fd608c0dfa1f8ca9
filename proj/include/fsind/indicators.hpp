#pragma once

#include <optional>
#include <vector>

#include "fsind/core.hpp"
#include "fsind/multiplicities.hpp"
#include "fsind/root_system.hpp"
#include "fsind/weyl_group.hpp"

namespace fsind {

struct IndicatorValue {
    std::int64_t m;
    BigInt nu;
};

/// nu_m for m = 2..m_max, with the stabilization bound and the limit dim V[0].
struct IndicatorProfile {
    IntVector lambda_labels;
    std::vector<IndicatorValue> values;
    std::int64_t stabilization_bound = 0;
    BigInt stable_value;
    bool in_root_lattice = false;
};

/// nu_m(V(lambda)) = sum over w in W of sign(w) * dim V(lambda)[(rho - w rho) / m].
/// Candidate points that are not integral or not in lambda + root lattice
/// contribute nothing. Throws ValidationError for m < 2.
BigInt indicator(const RootSystem& rs, const WeylGroup& w, const MultiplicityTable& table, std::int64_t m);
BigInt indicator(const RootSystem& rs, const WeylGroup& w, const Weight& lambda, std::int64_t m,
                 MultiplicityEngine engine = MultiplicityEngine::Freudenthal,
                 std::size_t support_cap = kDefaultSupportCap);

/// Second indicator from the duality test and the parity of lambda(2 rho-check).
int indicator_tits(const RootSystem& rs, const WeylGroup& w, const Weight& lambda);

/// lambda + w0(lambda) == 0.
bool is_self_dual(const RootSystem& rs, const WeylGroup& w, const Weight& lambda);

/// min over simple coroots h_i of (sum_{beta > 0} |beta(h_i)|) + 1.
std::int64_t stabilization_bound(const RootSystem& rs);

/// Classical closed forms of the bound: 2n-1 for sl(n) (A_{n-1}), 4n-3 for
/// so(2n+1) (B_n, n >= 2), 2n+1 for sp(2n) (C_n), 4n-5 for so(2n) (D_n).
/// Empty for custom types and for B_1, where the closed form does not apply.
std::optional<std::int64_t> classical_stabilization_bound(const LieType& type);

IndicatorProfile indicator_profile(const RootSystem& rs, const WeylGroup& w, const MultiplicityTable& table,
                                   std::int64_t m_max);
IndicatorProfile indicator_profile(const RootSystem& rs, const WeylGroup& w, const Weight& lambda,
                                   std::int64_t m_max,
                                   MultiplicityEngine engine = MultiplicityEngine::Freudenthal,
                                   std::size_t support_cap = kDefaultSupportCap);

/// sl(2): (-1)^n for m = 2, otherwise [n even].
int sl2_closed_form(std::int64_t n, std::int64_t m);

/// sl(3) with highest weight labels (a, b).
std::int64_t sl3_closed_form(std::int64_t a, std::int64_t b, std::int64_t m);

}  // namespace fsind
