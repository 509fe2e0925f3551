#include "stiefelmw/gysin.hpp"

#include <vector>

namespace stiefelmw {

FormalSum inductive_cohomology(StiefelIndex idx) {
    const int n = idx.n();
    // The even branch reaches back two steps, so keep the whole tower.
    std::vector<FormalSum> h(static_cast<std::size_t>(idx.k()) + 1);
    h[0] = FormalSum::single(RingKind::MW, {0, 0});
    h[1] = h[0] + FormalSum::single(RingKind::MW, {2 * n - 1, n});
    for (int m = 2; m <= idx.k(); ++m) {
        const int c = n - m + 1;
        if (c % 2 != 0) {
            h[m] = h[m - 1] + shift_sum(h[m - 1], {2 * c - 1, c});
        } else {
            h[m] = h[m - 2] + shift_sum(coker_eta(h[m - 2]), {2 * c + 1, c + 1}) +
                   shift_sum(ker_eta(h[m - 2]), {2 * c - 1, c}) +
                   shift_sum(h[m - 2], {4 * c, 2 * c + 1});
        }
    }
    return h[idx.k()];
}

EulerClass euler_class(StiefelIndex idx) {
    const int m = idx.n() - idx.k();
    if (m % 2 != 0) return {};
    return {false, m, {2 * m, m}};
}

std::string to_string(const EulerClass& e) {
    if (e.zero) return "0";
    return "eta*beta_{" + std::to_string(e.beta_index) + "}";
}

}  // namespace stiefelmw
