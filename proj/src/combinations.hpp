#pragma once

#include <vector>

namespace trackcut::detail {

/// Calls fn(idx) for every k-subset of {0..n-1} as an increasing index
/// vector, in lexicographic order. Stops early when fn returns true; the
/// return value says whether it did.
template <class Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return false;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        if (fn(static_cast<const std::vector<int>&>(idx))) return true;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) return false;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace trackcut::detail
