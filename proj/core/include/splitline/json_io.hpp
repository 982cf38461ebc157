#pragma once

#include <string>

#include "splitline/extensions.hpp"
#include "splitline/scattering.hpp"

namespace splitline::jsonio {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Wire conventions: a complex number is the two-element array [re, im];
// the infinite Robin coefficient is the string "inf"; a matrix is a 2x2
// nested array of complex entries; a rho pair is [rho_plus, rho_minus].

C2Matrix parse_matrix(const std::string& text);
AlphaVector parse_alpha(const std::string& text);
RhoPair parse_rho(const std::string& text);

// Tagged payload {"alpha": [...]} or {"rho": [...]} (exactly one key).
Extension parse_extension(const std::string& text);

// Emission uses 17 significant digits so every double round-trips.
std::string format_double(double v);
std::string json_complex(Complex z);
std::string json_matrix(const C2Matrix& m);
std::string json_extended(const ExtendedReal& v);

}  // namespace splitline::jsonio
