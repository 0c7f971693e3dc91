#include "lechlab/numeric.hpp"

namespace lech {

Integer factorialInt(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomialInt(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

Integer ipow(const Integer& base, int exp) {
  if (exp < 0) throw DomainError("negative integer exponent");
  Integer r = 1, b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    if (e > 1) b *= b;
  }
  return r;
}

Integer inthRootFloor(const Integer& x, int k) {
  if (x < 0) throw DomainError("root of negative integer");
  if (k < 1) throw DomainError("root index must be >= 1");
  if (x == 0 || x == 1 || k == 1) return x;
  // Newton iteration on r -> ((k-1)r + x / r^(k-1)) / k, seeded above the root.
  Integer r = Integer(1) << (static_cast<unsigned>(boost::multiprecision::msb(x)) / k + 1);
  while (true) {
    Integer next = ((k - 1) * r + x / ipow(r, k - 1)) / k;
    if (next >= r) break;
    r = next;
  }
  while (ipow(r, k) > x) --r;
  while (ipow(r + 1, k) <= x) ++r;
  return r;
}

std::string ratToString(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace lech
