#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace ppl {

using Int = mpz_class;
using Rat = mpq_class;

Int factorial(int n);
Int binomial(int n, int k);

// n! as a machine word; requires n <= 20.
uint64_t factorial_u64(int n);

// Exact conversion; throws if v does not fit in int64_t.
int64_t to_int64(const Int &v);

std::string rat_to_string(const Rat &v);

} // namespace ppl
