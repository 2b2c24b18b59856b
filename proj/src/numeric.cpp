#include "ppl/numeric.hpp"

#include <stdexcept>

namespace ppl {

Int factorial(int n) {
  if (n < 0)
    throw std::invalid_argument("factorial: negative argument");
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20)
    throw std::invalid_argument("factorial_u64: argument out of [0,20]");
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i)
    f *= static_cast<uint64_t>(i);
  return f;
}

int64_t to_int64(const Int &v) {
  if (!v.fits_slong_p())
    throw std::overflow_error("to_int64: value does not fit");
  return static_cast<int64_t>(v.get_si());
}

std::string rat_to_string(const Rat &v) {
  return v.get_str();
}

} // namespace ppl
