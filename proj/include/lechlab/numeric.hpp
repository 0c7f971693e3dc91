#ifndef LECHLAB_NUMERIC_HPP
#define LECHLAB_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace lech {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Bad input (dimension mismatch, not m-primary, out-of-range parameters).
struct DomainError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A violated internal invariant; signals a bug, not bad input.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

/// The Hilbert-function fit did not stabilize within the window cap.
struct NotStabilized : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Integer factorialInt(int n);
Integer binomialInt(int n, int k);
Integer ipow(const Integer& base, int exp);

/// floor(x^(1/k)) for x >= 0, k >= 1, by Newton iteration.
Integer inthRootFloor(const Integer& x, int k);

inline Integer numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

/// "p/q" (or just "p" when q == 1); the exact-value wire format.
std::string ratToString(const Rational& r);

}  // namespace lech

#endif
