#include "numerics/bernoulli.hpp"

#include <deque>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace lamzeta {
namespace {

struct BernoulliTable {
  std::shared_mutex mutex;
  std::vector<Rational> values{Rational(1)};

  // Extends with sum_{k=0}^{n} C(n+1,k) B_k = 0, i.e.
  // B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k. Caller holds the unique lock.
  void extend_to(unsigned n) {
    while (values.size() <= n) {
      const unsigned m = static_cast<unsigned>(values.size());
      if (m >= 3 && m % 2 == 1) {
        values.emplace_back(0);
        continue;
      }
      BigInt binom = 1;  // C(m+1, 0)
      Rational acc = 0;
      for (unsigned k = 0; k < m; ++k) {
        if (values[k] != 0) acc += Rational(binom) * values[k];
        binom = binom * (m + 1 - k) / (k + 1);
      }
      values.push_back(-acc / Rational(m + 1));
    }
  }
};

BernoulliTable& table() {
  static BernoulliTable t;
  return t;
}

}  // namespace

Rational bernoulli(unsigned n) {
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    if (n < t.values.size()) return t.values[n];
  }
  std::unique_lock lock(t.mutex);
  t.extend_to(n);
  return t.values[n];
}

BigInt factorial(unsigned n) {
  BigInt out = 1;
  for (unsigned k = 2; k <= n; ++k) out *= k;
  return out;
}

Rational bernoulli_over_factorial(unsigned n) { return bernoulli(n) / Rational(factorial(n)); }

const BigReal& even_bernoulli_coefficient(unsigned k) {
  thread_local std::map<unsigned, std::deque<BigReal>> cache;
  auto& column = cache[current_digits()];
  while (column.size() <= k) {
    const unsigned idx = static_cast<unsigned>(column.size());
    column.push_back(to_big(bernoulli_over_factorial(2 * idx)));
  }
  return column[k];
}

}  // namespace lamzeta
