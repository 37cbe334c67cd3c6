#ifndef TPZ_SPECTRAL_HPP
#define TPZ_SPECTRAL_HPP

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "tpz/graph.hpp"

namespace tpz {

// Monic characteristic polynomial of an adjacency matrix, exact integer
// coefficients. coeff[i] multiplies x^i; coeff.back() == 1.
struct CharPoly {
  std::vector<mpz_class> coeff;
  int degree() const { return int(coeff.size()) - 1; }
};

struct SpectralOptions {
  int cap = 64;     // vertex cap; coefficients stay exact at any size, this bounds cost
  int threads = 1;  // row-parallel matrix products when > 1
};

// Exact char poly via the integer trace recurrence (every division is by a
// known-exact integer factor). Throws CapExceeded above opts.cap.
CharPoly char_poly(const Graph& g, const SpectralOptions& opts = {});

// Horner evaluation.
mpz_class char_poly_eval(const CharPoly& p, const mpz_class& x);

// det(xI - A) by fraction-free Bareiss elimination; independent of
// char_poly and used to spot-check it.
mpz_class shifted_determinant(const Graph& g, long long x);

// Integer roots with multiplicities. integral == true iff deflation by
// integer roots reaches degree 0; otherwise residual_degree reports what
// is left (never approximated).
struct Spectrum {
  std::vector<std::pair<long long, int>> roots;  // (value, multiplicity), ascending
  bool integral = false;
  int residual_degree = 0;
};

Spectrum integer_spectrum(const CharPoly& p);

// True iff the family graph's spectrum is exactly
// {n+1: 1, 1-n: 1, 1: n-2, -1: n}.
bool verify_family_spectrum(int n, const SpectralOptions& opts = {});

}  // namespace tpz

#endif
