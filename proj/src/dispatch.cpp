#include "hw4k/dispatch.hpp"

#include <algorithm>

#include "hw4k/constructions.hpp"
#include "hw4k/matching_algebra.hpp"
#include "hw4k/walecki.hpp"

namespace hw4k {

namespace {

// Canonical ordering of serialized output: hamilton factors first, each group
// in construction order, every cycle in canonical form.
void finalize(Certificate& cert) {
    for (auto& f : cert.factors) f = canonical_factor(std::move(f));
    std::stable_partition(cert.factors.begin(), cert.factors.end(),
                          [](const TwoFactor& f) { return f.kind == FactorKind::hamilton; });
    if (cert.one_factor) std::sort(cert.one_factor->begin(), cert.one_factor->end());
}

}  // namespace

Support supported(int k, int t, int r) {
    if (k < 1 || t < 1) return Support::invalid;
    const int n = 4 * k * t;
    if (r < 0 || r > (n - 2) / 2) return Support::invalid;
    if (t == 2 && k >= 2 && r % 2 == 1 && r >= 3 && r <= 2 * k - 1)
        return Support::unsupported_by_paper;
    return Support::yes;
}

Certificate construct_hw(int k, int t, int r) {
    switch (supported(k, t, r)) {
        case Support::invalid:
            throw InvalidParamsError("construct_hw: r must be in [0, (n-2)/2] with k, t >= 1");
        case Support::unsupported_by_paper:
            throw UnsupportedError(
                "construct_hw: n = 8k with odd r in {3,...,2k-1} relies on a construction "
                "cited from elsewhere and is not produced here");
        case Support::yes:
            break;
    }
    const Params p = Params::make(k, t, r);
    Certificate cert;
    cert.n = p.n;
    cert.k = k;
    cert.t = t;
    cert.r = r;
    cert.s = p.s;
    cert.one_factor.emplace();

    if (t == 1) {
        // K_4k directly: every HC of K_4k is also a C_4k-factor.
        const WaleckiEven w = walecki_even(2 * k);
        for (int x = 0; x < static_cast<int>(w.hcs.size()); ++x)
            cert.factors.push_back(TwoFactor{x < r ? FactorKind::hamilton : FactorKind::c4k,
                                             {w.hcs[static_cast<std::size_t>(x)]}});
        *cert.one_factor = w.i_factor;
        finalize(cert);
        return cert;
    }

    const SuperPlan plan = make_super_plan(t);
    auto greedy_pairs = [&](int first_pair, int remaining) {
        for (int i = first_pair; i < t; ++i) {
            const int r_i = std::min(remaining, 2 * k);
            remaining -= r_i;
            for (auto& f : decompose_pair(plan, i, r_i, k)) cert.factors.push_back(std::move(f));
        }
        if (remaining != 0) throw std::logic_error("construct_hw: leftover hamilton budget");
    };

    if (r >= 2 * k) {
        // triple route: put as much of the hamilton budget as possible on
        // F_1 u F_2 u F_{2t-1}; r_1 keeps the parity of r so the remainder
        // is even and splits over pairs.
        const int r_1 = std::min(r, 4 * k - 2 + r % 2);
        auto triple = decompose_triple(plan, r_1, k);
        for (auto& f : triple.factors) cert.factors.push_back(std::move(f));
        *cert.one_factor = std::move(triple.one_factor);
        greedy_pairs(2, r - r_1);
    } else if (r % 2 == 0) {
        // even r < 2k: blocks eat F_{2t-1}, pairs carry the hamilton budget.
        auto blocks = decompose_blocks(plan, 2 * t - 1, false, k);
        for (auto& f : blocks.factors) cert.factors.push_back(std::move(f));
        *cert.one_factor = std::move(blocks.one_factor);
        greedy_pairs(1, r);
    } else {
        // odd r < 2k: blocks eat F_2 with the designated leftover, which F_1
        // turns into the single odd hamilton factor; F_{2t-1} blows up to c4k.
        auto blocks = decompose_blocks(plan, 2, true, k);
        for (auto& f : blocks.factors) cert.factors.push_back(std::move(f));
        auto f1 = decompose_f1_with_matching(plan, blocks.one_factor, k);
        for (auto& f : f1.factors) cert.factors.push_back(std::move(f));
        *cert.one_factor = std::move(f1.one_factor);
        greedy_pairs(2, r - 1);
        for (auto& f : blowup_to_c4k(plan, 2 * t - 1, k)) cert.factors.push_back(std::move(f));
    }
    finalize(cert);
    return cert;
}

Certificate construct_hamilton_only(int n) {
    if (n < 3) throw InvalidParamsError("construct_hamilton_only: n must be >= 3");
    Certificate cert;
    cert.n = n;
    cert.s = 0;
    if (n % 2 == 1) {
        cert.r = (n - 1) / 2;
        for (auto& c : walecki_odd((n - 1) / 2))
            cert.factors.push_back(TwoFactor{FactorKind::hamilton, {std::move(c)}});
    } else {
        cert.r = (n - 2) / 2;
        WaleckiEven w = walecki_even(n / 2);
        for (auto& c : w.hcs) cert.factors.push_back(TwoFactor{FactorKind::hamilton, {std::move(c)}});
        cert.one_factor = std::move(w.i_factor);
    }
    finalize(cert);
    return cert;
}

}  // namespace hw4k
