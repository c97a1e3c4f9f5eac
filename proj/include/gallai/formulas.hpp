#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gallai {

enum class BoundStatus { exact, lower_only, interval, not_covered };

// Evaluated closed form with the applicability conditions that actually
// fired. For gr reports two flavors of lower bound travel together: the
// stated general form (n+3m+1 term) and the form the explicit construction
// certifies (n+2m+1 term). They differ and are reported side by side rather
// than reconciled.
struct BoundReport {
    std::string query; // "ramsey" or "gr"
    int n = 0;
    int m = 0;
    int k = 2;
    BoundStatus status = BoundStatus::not_covered;
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::optional<long long> stated_lower;   // general-form lower (gr only)
    std::optional<long long> proven_lower;   // construction-backed lower (gr only)
    std::optional<long long> alt_upper;      // 2n + m(k+3) + 8/9 form (gr only)
    std::vector<std::string> citations;

    bool exact() const { return status == BoundStatus::exact; }
    long long value() const { return *lower; } // exact reports only
};

const char* bound_status_name(BoundStatus s);

// Two-color Ramsey number of S(n,m) vs itself. Exact where the classical
// case analysis applies, an upper-bound window for m <= n <= 1.699(m+1),
// otherwise just the universal lower bound n+2m+2.
BoundReport ramsey_double_star(int n, int m);

// Exact k-color value behind the n >= 6m+7 gate (relaxed_gate lowers it to
// 6m+5); outside the gate, falls through to gr_bounds.
BoundReport gr_exact(int n, int m, int k, bool relaxed_gate = false);

// General lower/upper forms. The upper applies for n <= 6m+6; the two upper
// forms are algebraically identical there and both are reported.
BoundReport gr_bounds(int n, int m, int k);

} // namespace gallai
