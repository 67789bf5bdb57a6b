#ifndef LIEBRANCH_RATIONAL_HPP
#define LIEBRANCH_RATIONAL_HPP

#include <boost/rational.hpp>
#include <string>

namespace liebranch {

// Exact rational scalar. Weight coordinates in this library are always
// multiples of 1/2, but nothing here relies on that.
using Rat = boost::rational<long long>;

inline bool is_integer(const Rat& r) { return r.denominator() == 1; }

// Requires r integral.
long long to_integer(const Rat& r);

// Largest integer <= r.
long long rat_floor(const Rat& r);

// Lowest-terms rendering: "5/2", "-3", "0".
std::string rat_to_string(const Rat& r);

// Parses "5/2", "-3", "0". Throws std::invalid_argument on malformed input.
Rat parse_rational(const std::string& s);

}  // namespace liebranch

#endif
