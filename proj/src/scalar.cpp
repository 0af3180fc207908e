#include "linfty/scalar.hpp"

#include "linfty/errors.hpp"

#include <cctype>

namespace linfty {

std::string scalar_to_string(const Scalar& s) {
    const auto num = boost::multiprecision::numerator(s);
    const auto den = boost::multiprecision::denominator(s);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

namespace {

bool valid_integer(std::string_view t) {
    if (!t.empty() && (t[0] == '+' || t[0] == '-'))
        t.remove_prefix(1);
    if (t.empty())
        return false;
    for (char c : t)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

}  // namespace

Scalar scalar_from_string(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den =
        slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!valid_integer(num))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    boost::multiprecision::cpp_int n{std::string(num)};
    boost::multiprecision::cpp_int d = 1;
    if (slash != std::string_view::npos) {
        if (!valid_integer(den) || den[0] == '-' || den[0] == '+')
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        d = boost::multiprecision::cpp_int{std::string(den)};
        if (d == 0)
            throw ParseError("invalid rational literal '" + std::string(text) +
                             "': zero denominator");
    }
    return Scalar(n, d);
}

}  // namespace linfty
