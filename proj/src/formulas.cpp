#include "gallai/formulas.hpp"

#include <algorithm>
#include <stdexcept>

namespace gallai {

const char* bound_status_name(BoundStatus s)
{
    switch (s) {
    case BoundStatus::exact: return "Exact";
    case BoundStatus::lower_only: return "LowerOnly";
    case BoundStatus::interval: return "Interval";
    case BoundStatus::not_covered: return "NotCovered";
    }
    return "?";
}

namespace {

using LL = long long;

// Comparisons against sqrt(2)*m and 1.699(m+1) stay in integers: squares for
// the first, the rational 1699/1000 for the second.
bool le_sqrt2_m(LL n, LL m) { return n * n <= 2 * m * m; }
bool in_norin_window(LL n, LL m) { return m <= n && 1000 * n <= 1699 * (m + 1); }

} // namespace

BoundReport ramsey_double_star(int n, int m)
{
    if (m < 0 || n < m)
        throw std::invalid_argument("ramsey_double_star requires n >= m >= 0");

    const LL ln = n, lm = m;
    BoundReport r;
    r.query = "ramsey";
    r.n = n;
    r.m = m;
    r.k = 2;

    const LL base = ln + 2 * lm + 2;
    const bool odd = n % 2 != 0;
    if (odd && m <= 2) {
        r.status = BoundStatus::exact;
        r.lower = r.upper = std::max(2 * ln + 1, base);
        r.citations.push_back("double-star-ramsey-exact-odd");
        return r;
    }
    if ((!odd || m >= 3) && (le_sqrt2_m(ln, lm) || ln >= 3 * lm)) {
        r.status = BoundStatus::exact;
        r.lower = r.upper = std::max(2 * ln + 2, base);
        r.citations.push_back("double-star-ramsey-exact-even");
        return r;
    }
    if (in_norin_window(ln, lm)) {
        r.status = BoundStatus::interval;
        r.lower = base;
        r.upper = base;
        r.citations.push_back("double-star-ramsey-lower");
        r.citations.push_back("double-star-ramsey-upper-window");
        return r;
    }
    r.status = BoundStatus::not_covered;
    r.lower = base;
    r.citations.push_back("double-star-ramsey-lower");
    return r;
}

BoundReport gr_bounds(int n, int m, int k)
{
    if (k < 3)
        throw std::invalid_argument("gr_bounds requires k >= 3");
    if (m < 1 || n < m)
        throw std::invalid_argument("gr_bounds requires n >= m >= 1");

    const LL ln = n, lm = m, lk = k;
    const bool odd = n % 2 != 0;
    const LL tail = lm * (lk - 3) + (odd ? 2 : 1);
    const LL five_half = 5 * (odd ? (ln - 1) / 2 : ln / 2);

    BoundReport r;
    r.query = "gr";
    r.n = n;
    r.m = m;
    r.k = k;
    r.stated_lower = std::max(five_half, ln + 3 * lm + 1) + tail;
    r.proven_lower = std::max(five_half, ln + 2 * lm + 1) + tail;
    r.lower = r.stated_lower;
    r.citations.push_back("gallai-general-lower");
    r.citations.push_back("gallai-construction-lower");

    if (ln <= 6 * lm + 6) {
        const LL five_up = 5 * (odd ? (ln + 1) / 2 : (ln + 2) / 2);
        r.upper = std::max(five_up, 2 * ln + 6 * lm + 7) + tail;
        r.alt_upper = 2 * ln + lm * (lk + 3) + (odd ? 9 : 8);
        r.status = BoundStatus::interval;
        r.citations.push_back("gallai-general-upper");
        r.citations.push_back("gallai-alt-upper");
    } else {
        r.status = BoundStatus::lower_only;
    }
    return r;
}

BoundReport gr_exact(int n, int m, int k, bool relaxed_gate)
{
    if (k < 3)
        throw std::invalid_argument("gr_exact requires k >= 3");
    if (m < 1 || n < m)
        throw std::invalid_argument("gr_exact requires n >= m >= 1");

    const LL gate = 6LL * m + (relaxed_gate ? 5 : 7);
    if (n < gate)
        return gr_bounds(n, m, k);

    const LL ln = n, lm = m, lk = k;
    BoundReport r;
    r.query = "gr";
    r.n = n;
    r.m = m;
    r.k = k;
    r.status = BoundStatus::exact;
    const LL value = n % 2 == 0 ? 5 * (ln / 2) + lm * (lk - 3) + 1
                                : 5 * ((ln - 1) / 2) + lm * (lk - 3) + 2;
    r.lower = r.upper = value;
    r.citations.push_back("gallai-exact-large-n");
    return r;
}

} // namespace gallai
