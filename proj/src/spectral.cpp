#include "tpz/spectral.hpp"

#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tpz {

namespace {

// exact quotient with a loud failure if the divisor does not divide
mpz_class divide_exact(const mpz_class& num, long long den) {
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), mpz_class(den).get_mpz_t());
  if (r != 0) throw std::logic_error("trace recurrence division was not exact");
  return q;
}

// out = A * M for the 0/1 adjacency A: row i of out sums the neighbor rows
// of i, so the whole product is additions only.
void adj_times(const Graph& g, const std::vector<mpz_class>& m,
               std::vector<mpz_class>& out, int threads) {
  int n = g.order();
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(threads > 1 ? threads : 1) \
    if (threads > 1)
#endif
  for (int i = 0; i < n; i++) {
    const Bitset& nb = g.neighbors(i);
    for (int j = 0; j < n; j++) {
      mpz_class acc = 0;
      for (int t = nb.first(); t >= 0; t = nb.next(t)) acc += m[std::size_t(t) * n + j];
      out[std::size_t(i) * n + j] = std::move(acc);
    }
  }
}

}  // namespace

CharPoly char_poly(const Graph& g, const SpectralOptions& opts) {
  int n = g.order();
  if (n > opts.cap)
    throw CapExceeded("characteristic polynomial capped at " +
                      std::to_string(opts.cap) + " vertices (got " +
                      std::to_string(n) + ")");

  // M_1 = A, c_1 = -tr(M_1); M_{k+1} = A (M_k + c_k I),
  // c_{k+1} = -tr(M_{k+1}) / (k+1). All divisions are exact.
  std::vector<mpz_class> m(std::size_t(n) * n, 0), next(std::size_t(n) * n, 0);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (g.adjacent(i, j)) m[std::size_t(i) * n + j] = 1;

  std::vector<mpz_class> c(n + 1);
  c[0] = 1;  // leading coefficient, kept here in descending-power order
  for (int k = 1; k <= n; k++) {
    if (k > 1) {
      for (int i = 0; i < n; i++) m[std::size_t(i) * n + i] += c[k - 1];
      adj_times(g, m, next, opts.threads);
      m.swap(next);
    }
    mpz_class trace = 0;
    for (int i = 0; i < n; i++) trace += m[std::size_t(i) * n + i];
    c[k] = -divide_exact(trace, k);
  }

  CharPoly p;
  p.coeff.assign(n + 1, 0);
  for (int k = 0; k <= n; k++) p.coeff[n - k] = c[k];
  return p;
}

mpz_class char_poly_eval(const CharPoly& p, const mpz_class& x) {
  mpz_class r = 0;
  for (int i = p.degree(); i >= 0; i--) r = r * x + p.coeff[i];
  return r;
}

mpz_class shifted_determinant(const Graph& g, long long x) {
  int n = g.order();
  std::vector<mpz_class> a(std::size_t(n) * n, 0);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      a[std::size_t(i) * n + j] = (i == j) ? mpz_class(x) : (g.adjacent(i, j) ? -1 : 0);

  // Bareiss: divisions by the previous pivot are exact over the integers.
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; k++) {
    if (a[std::size_t(k) * n + k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; i++)
        if (a[std::size_t(i) * n + k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;
      for (int j = 0; j < n; j++)
        std::swap(a[std::size_t(k) * n + j], a[std::size_t(swap_row) * n + j]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; i++) {
      for (int j = k + 1; j < n; j++) {
        mpz_class num = a[std::size_t(i) * n + j] * a[std::size_t(k) * n + k] -
                        a[std::size_t(i) * n + k] * a[std::size_t(k) * n + j];
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
        if (r != 0) throw std::logic_error("Bareiss division was not exact");
        a[std::size_t(i) * n + j] = std::move(q);
      }
      a[std::size_t(i) * n + k] = 0;
    }
    prev = a[std::size_t(k) * n + k];
  }
  return sign * a[std::size_t(n - 1) * n + (n - 1)];
}

Spectrum integer_spectrum(const CharPoly& p) {
  Spectrum s;
  std::vector<mpz_class> q = p.coeff;  // ascending powers, monic
  int bound = p.degree();              // adjacency eigenvalues satisfy |λ| <= Δ < n

  // Roots at zero: trailing zero coefficients.
  int zero_mult = 0;
  while (int(q.size()) > 1 && q[0] == 0) {
    q.erase(q.begin());
    zero_mult++;
  }
  if (zero_mult > 0) s.roots.emplace_back(0, zero_mult);

  for (long long d = -bound; d <= bound; d++) {
    if (d == 0) continue;
    int mult = 0;
    while (int(q.size()) > 1) {
      if (!mpz_divisible_p(q[0].get_mpz_t(), mpz_class(d).get_mpz_t())) break;
      // synthetic division by (x - d); accept only on zero remainder
      std::vector<mpz_class> div(q.size() - 1);
      mpz_class carry = q.back();
      for (int i = int(q.size()) - 2; i >= 0; i--) {
        div[i] = carry;
        carry = carry * d + q[i];
      }
      if (carry != 0) break;
      q = std::move(div);
      mult++;
    }
    if (mult > 0) s.roots.emplace_back(d, mult);
  }

  std::sort(s.roots.begin(), s.roots.end());
  s.residual_degree = int(q.size()) - 1;
  s.integral = (s.residual_degree == 0);
  return s;
}

bool verify_family_spectrum(int n, const SpectralOptions& opts) {
  Spectrum s = integer_spectrum(char_poly(build_family(n), opts));
  std::vector<std::pair<long long, int>> expected = {
      {1 - n, 1}, {-1, n}, {1, n - 2}, {n + 1, 1}};
  return s.integral && s.roots == expected;
}

}  // namespace tpz
