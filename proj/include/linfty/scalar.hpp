#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace linfty {

// Exact rational scalar. Always stored reduced with positive denominator;
// there is no floating point anywhere in the kernel. Expression templates
// are disabled so values behave like plain numbers in containers.
using Scalar = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
std::string scalar_to_string(const Scalar& s);

// Accepts "p" and "p/q" with optional sign on p. Throws ParseError on
// anything else, including "1/0".
Scalar scalar_from_string(std::string_view text);

}  // namespace linfty
