#include "h1/growth.hpp"

#include <stdexcept>

#include "h1/indicator.hpp"

namespace h1 {

namespace {

mpz_class pow3(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 3, e);
    return r;
}

mpz_class mpz_pow(const mpz_class& base, const mpz_class& exp) {
    if (!exp.fits_ulong_p())
        throw resource_limit_error("growth_g: exponent too large for exact evaluation");
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp.get_ui());
    return r;
}

mpz_class ceil_sqrt(const mpz_class& k) {
    mpz_class root, rem;
    mpz_sqrtrem(root.get_mpz_t(), rem.get_mpz_t(), k.get_mpz_t());
    if (rem != 0) root += 1;
    return root;
}

// Sufficient certificate that n_terms * k'^E < 3^isqrt(k') for all k' with
// isqrt(k') >= s:
//   C1  n_terms * ((s+1)^2)^E < 3^s       (dominance on the s-interval)
//   C2  (s+2)^(2E) <= 3 * (s+1)^(2E)      (interval-to-interval ratio)
// C1 propagates to s+1 through C2, and C2 itself is monotone in s, so the
// conjunction is monotone and admits binary search for the least such s.
bool certified_at(const mpz_class& s, const mpz_class& max_exp, int n_terms) {
    if (!s.fits_ulong_p())
        throw resource_limit_error("growth_g: certificate index too large");
    mpz_class c1 = n_terms * mpz_pow((s + 1) * (s + 1), max_exp);
    if (c1 >= pow3(s.get_ui())) return false;
    mpz_class lhs = mpz_pow(s + 2, 2 * max_exp);
    mpz_class rhs = 3 * mpz_pow(s + 1, 2 * max_exp);
    return lhs <= rhs;
}

} // namespace

bool growth_inequality_holds(const std::vector<long long>& sizes,
                             const std::vector<mpz_class>& g_prefix,
                             const mpz_class& k) {
    if (g_prefix.size() < sizes.size())
        throw std::invalid_argument("growth_inequality_holds: prefix too short");
    mpz_class sum = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i)
        sum += mpz_pow(k, g_prefix[i] * static_cast<long>(sizes[i]));
    mpz_class ceil = ceil_sqrt(k);
    if (!ceil.fits_ulong_p())
        throw resource_limit_error("growth_inequality_holds: value too large");
    return sum < pow3(ceil.get_ui());
}

GrowthResult growth_g(const std::vector<long long>& sizes, const mpz_class& k_max) {
    if (sizes.empty()) throw std::invalid_argument("growth_g: sizes must be non-empty");
    for (long long s : sizes)
        if (s < 1) throw std::invalid_argument("growth_g: sizes must be positive");
    if (k_max < 2) throw std::invalid_argument("growth_g: k_max too small");

    GrowthResult out;
    out.g.push_back(1);

    mpz_class s_max = ceil_sqrt(k_max) + 1;
    for (std::size_t n = 1; n <= sizes.size(); ++n) {
        mpz_class max_exp = 0;
        for (std::size_t i = 0; i < n; ++i) {
            mpz_class e = out.g[i] * static_cast<long>(sizes[i]);
            if (e > max_exp) max_exp = e;
        }
        // least s with the monotone certificate, by binary search
        if (!certified_at(s_max, max_exp, static_cast<int>(n)))
            throw resource_limit_error(
                "growth_g: certificate did not fire below k_max at step " +
                std::to_string(n));
        mpz_class lo = 1, hi = s_max;
        while (lo < hi) {
            mpz_class mid = (lo + hi) / 2;
            if (certified_at(mid, max_exp, static_cast<int>(n)))
                hi = mid;
            else
                lo = mid + 1;
        }
        mpz_class k = lo * lo;
        if (k < out.g[n - 1] + 1) k = out.g[n - 1] + 1;
        if (k > k_max)
            throw resource_limit_error("growth_g: k_" + std::to_string(n) +
                                       " exceeds k_max");
        std::vector<long long> prefix(sizes.begin(), sizes.begin() + n);
        if (!growth_inequality_holds(prefix, out.g, k))
            throw std::logic_error("growth_g: certified threshold failed direct check");
        out.k.push_back(k);
        out.g.push_back(k + 1);
    }
    return out;
}

} // namespace h1
