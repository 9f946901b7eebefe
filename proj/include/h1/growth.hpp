#ifndef H1_GROWTH_HPP
#define H1_GROWTH_HPP

#include <gmpxx.h>

#include <vector>

namespace h1 {

struct GrowthResult {
    std::vector<mpz_class> g;  // g(1), ..., g(len(sizes)+1)
    std::vector<mpz_class> k;  // the certified thresholds k_1, ..., k_len
};

// Builds the strictly increasing schedule from the orbit-growth bound,
// with f(k) = 3^ceil(sqrt(k)): g(1) = 1 and g(n+1) = k_n + 1 where k_n is
// the least k > g(n) such that sum_i k'^(g(i)*sizes[i]) < f(k') holds at
// k' = k and, by an exact monotone-dominance criterion, for every k' >= k.
// Throws if a threshold would exceed k_max.
GrowthResult growth_g(const std::vector<long long>& sizes, const mpz_class& k_max);

// The exact defining inequality sum_i k^(g(i)*sizes[i]) < 3^ceil(sqrt(k));
// exposed so certificates can be replayed independently of the schedule.
bool growth_inequality_holds(const std::vector<long long>& sizes,
                             const std::vector<mpz_class>& g_prefix,
                             const mpz_class& k);

} // namespace h1

#endif
