#include "mfc/author_credit.hpp"

#include <cmath>
#include <stdexcept>

namespace mfc {

namespace {

void require_authors(std::uint64_t n_authors, std::uint64_t at_least) {
  if (n_authors < at_least)
    throw std::domain_error("publication needs at least " + std::to_string(at_least) +
                            " author(s)");
}

}  // namespace

double author_credit(std::uint64_t n_authors, const KParam& k) {
  require_authors(n_authors, 1);
  if (n_authors == 1 || k.is_infinite()) return 1.0;
  return k.root(1.0 / static_cast<double>(n_authors));
}

double article_total(std::uint64_t n_authors, const KParam& k) {
  require_authors(n_authors, 1);
  const double n = static_cast<double>(n_authors);
  if (k.is_infinite()) return n;
  if (k.is_one()) return 1.0;
  return std::pow(n, 1.0 - 1.0 / k.value());
}

double geometric_bridge(std::uint64_t n_authors, Lambda lambda) {
  require_authors(n_authors, 1);
  return std::pow(1.0 / static_cast<double>(n_authors), lambda.value());
}

double solve_k_arithmetic(std::uint64_t n_authors, Lambda lambda) {
  require_authors(n_authors, 2);
  const double l = lambda.value();
  if (l <= 0.0) throw std::domain_error("lambda must be > 0 here");
  const double n = static_cast<double>(n_authors);
  return std::log(1.0 / n) / std::log(l / n + (1.0 - l));
}

double solve_k_harmonic(std::uint64_t n_authors, Lambda lambda) {
  require_authors(n_authors, 2);
  const double l = lambda.value();
  if (l <= 0.0) throw std::domain_error("lambda must be > 0 here");
  const double n = static_cast<double>(n_authors);
  return std::log(n) / std::log(l * n + (1.0 - l));
}

}  // namespace mfc
