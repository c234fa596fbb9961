#pragma once

#include <vector>

#include "symprop/exact.hpp"

namespace symprop {

/// Memoized table of n! values. Storage grows with amortized doubling and
/// never shrinks. Not synchronized: give each worker thread its own cache.
class FactorialCache {
  public:
    FactorialCache() : table_{BigInt(1)} {}

    /// n!, extending the table as needed.
    BigInt factorial(std::size_t n);

    std::size_t cached_up_to() const { return table_.size() - 1; }

  private:
    std::vector<BigInt> table_;
};

/// n!/(k!(n-k)!) by the multiplicative formula (every intermediate division
/// is exact). Throws std::invalid_argument if k > n.
BigInt binomial(std::size_t n, std::size_t k);

}  // namespace symprop
