#include "gscale/arith.hpp"

#include <cstdlib>
#include <mutex>

namespace gscale::arith {

  std::int64_t gcd(std::int64_t a, std::int64_t b) {
    a = a < 0 ? -a : a;
    b = b < 0 ? -b : b;
    while (b != 0) {
      std::int64_t t = a % b;
      a              = b;
      b              = t;
    }
    return a;
  }

  ExtendedGcd extended_gcd(std::int64_t a, std::int64_t b) {
    __int128 old_r = a, r = b;
    __int128 old_s = 1, s = 0;
    __int128 old_t = 0, t = 1;
    while (r != 0) {
      __int128 q   = old_r / r;
      __int128 tmp = old_r - q * r;
      old_r        = r;
      r            = tmp;
      tmp          = old_s - q * s;
      old_s        = s;
      s            = tmp;
      tmp          = old_t - q * t;
      old_t        = t;
      t            = tmp;
    }
    if (old_r < 0) {
      old_r = -old_r;
      old_s = -old_s;
      old_t = -old_t;
    }
    return {narrow(old_r), narrow(old_s), narrow(old_t)};
  }

  bool is_prime(std::int64_t n) {
    if (n < 2) {
      return false;
    }
    for (std::int64_t d = 2; d <= n / d; ++d) {
      if (n % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d <= n / d; ++d) {
      while (n % d == 0) {
        out.push_back(d);
        n /= d;
      }
    }
    if (n > 1) {
      out.push_back(n);
    }
    return out;
  }

  std::int64_t nth_prime(std::size_t k) {
    static std::mutex                mtx;
    static std::vector<std::int64_t> cache{2};
    std::lock_guard<std::mutex>      lock(mtx);
    while (cache.size() <= k) {
      std::int64_t c = cache.back() + 1;
      while (!is_prime(c)) {
        ++c;
      }
      cache.push_back(c);
    }
    return cache[k];
  }

}  // namespace gscale::arith
