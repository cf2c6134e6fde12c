#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace homolab {

using Q = mpq_class;
using Z = mpz_class;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedInputError : public Error { public: using Error::Error; };
class DomainError : public Error { public: using Error::Error; };
class MembershipError : public Error { public: using Error::Error; };
class ContainmentError : public Error { public: using Error::Error; };
class ResourceError : public Error { public: using Error::Error; };
class NumericError : public Error { public: using Error::Error; };

/**
 * Parse a rational from "p/q", an integer, or a finite decimal such as "1.25"
 * or "-3e-2". Throws MalformedInputError on anything else.
 */
Q parse_rational(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Q& q);

double to_double(const Q& q);

/// Round to 12 significant digits; used wherever floats reach reports.
double round12(double x);

}  // namespace homolab
