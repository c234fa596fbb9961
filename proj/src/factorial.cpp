#include "symprop/factorial.hpp"

#include <stdexcept>

namespace symprop {

BigInt FactorialCache::factorial(std::size_t n) {
    if (n >= table_.size()) {
        if (table_.capacity() < n + 1)
            table_.reserve(std::max(n + 1, 2 * table_.capacity()));
        for (std::size_t i = table_.size(); i <= n; ++i)
            table_.push_back(table_.back() * static_cast<unsigned long>(i));
    }
    return table_[n];
}

BigInt binomial(std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("binomial: k > n");
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        result *= static_cast<unsigned long>(n - k + i);
        result /= static_cast<unsigned long>(i);
    }
    return result;
}

}  // namespace symprop
