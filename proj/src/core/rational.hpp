#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "core/errors.hpp"

namespace skewrank {

using Int = mpz_class;
using Rat = mpq_class;  // always canonical: reduced, positive denominator

// Accepts "p", "-p" or "p/q" with integer p, q and q != 0.
Rat parse_rat(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string format_rat(const Rat& v);

// Comma separated parse_rat values; empty text means empty list.
std::vector<Rat> parse_rat_list(const std::string& csv);
std::vector<long> parse_long_list(const std::string& csv);
std::string format_rat_list(const std::vector<Rat>& v);

bool is_integer(const Rat& v);

// (a)_k = a (a-1) ... (a-k+1), with (a)_0 = 1.  Requires k >= 0.
Rat falling_factorial(const Rat& a, int k);

// (x | y)_k = (x - y[0]) (x - y[1]) ... (x - y[k-1]).  Requires k <= y.size().
Rat shifted_power(const Rat& x, const std::vector<Rat>& y, int k);

Int binomial(long n, unsigned long k);
Int factorial(unsigned long k);

}  // namespace skewrank
