#ifndef HW4K_DISPATCH_HPP
#define HW4K_DISPATCH_HPP

#include "hw4k/types.hpp"

namespace hw4k {

enum class Support { yes, unsupported_by_paper, invalid };

/// Case analysis for (k, t, r): invalid when r is out of [0, (n-2)/2];
/// unsupported_by_paper exactly for t = 2, k >= 2 and odd r in [3, 2k-1];
/// yes otherwise.
Support supported(int k, int t, int r);

struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Build a certificate with exactly r Hamilton factors and
/// s = (n-2)/2 - r C_4k-factors plus one perfect matching, n = 4kt.
/// Throws InvalidParamsError / UnsupportedError per supported().
Certificate construct_hw(int k, int t, int r);

/// s = 0 branch for arbitrary n >= 3: odd n gives (n-1)/2 Hamilton factors,
/// even n gives (n-2)/2 Hamilton factors plus a perfect matching.
Certificate construct_hamilton_only(int n);

}  // namespace hw4k

#endif
