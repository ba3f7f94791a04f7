#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

#include "fano4/errors.hpp"

namespace fano4 {

using Integer = std::int64_t;
using Rational = boost::rational<Integer>;

/// Returns the value of `q` as an integer, or throws IntegrityError naming
/// `what` if `q` has a non-trivial denominator.
inline Integer as_integer(const Rational& q, std::string_view what) {
  if (q.denominator() != 1) {
    throw IntegrityError(std::string(what) + " is not integral: " +
                         std::to_string(q.numerator()) + "/" +
                         std::to_string(q.denominator()));
  }
  return q.numerator();
}

/// Renders an integer as "n" and anything else as "p/q".
inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace fano4
