#pragma once

#include <cstdint>

#include "mfc/k_param.hpp"

namespace mfc {

// Credit of one author of an n-author publication: (1/n)^(1/k).
// k = 1 is plain fractional counting, k = infinity full counting.
double author_credit(std::uint64_t n_authors, const KParam& k);

// Sum of the individual credits, n^((k-1)/k). Exactly 1 at k = 1 and
// exactly n at k = infinity.
double article_total(std::uint64_t n_authors, const KParam& k);

// Weighted geometric average of the two counting extremes 1/n and 1,
// with weight lambda on the fractional side: (1/n)^lambda. Coincides with
// author_credit(n, 1/lambda); lambda = 0 is the full-counting limit.
double geometric_bridge(std::uint64_t n_authors, Lambda lambda);

// The k that makes (1/n)^(1/k) equal the weighted arithmetic average
// lambda/n + (1 - lambda). Depends on n, which is the point: no single k
// reproduces the arithmetic bridge for every n. Requires 0 < lambda <= 1.
double solve_k_arithmetic(std::uint64_t n_authors, Lambda lambda);

// Same for the weighted harmonic average 1/(lambda*n + 1 - lambda).
double solve_k_harmonic(std::uint64_t n_authors, Lambda lambda);

}  // namespace mfc
