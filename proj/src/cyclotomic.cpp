#include "vcyc/cyclotomic.hpp"

#include <stdexcept>

#include "vcyc/integer.hpp"

namespace vcyc::linalg {
namespace {

void require_unimodular(const IntMatrix& a, const char* op) {
  if (!a.is_square()) throw std::invalid_argument(std::string(op) + " requires a square matrix");
  Integer d = a.determinant();
  if (d != 1 && d != -1)
    throw std::invalid_argument(std::string(op) + " requires |det A| = 1, got det " + d.get_str());
}

IntMatrix minus_identity(const IntMatrix& m) { return m - IntMatrix::identity(m.rows()); }

}  // namespace

std::uint64_t totient(std::uint64_t d) {
  if (d == 0) return 0;
  std::uint64_t result = d;
  std::uint64_t n = d;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

static int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    sign = -sign;
  }
  if (n > 1) sign = -sign;
  return sign;
}

// Phi_d = prod over e | d of (x^e - 1)^mu(d/e).
IntPoly cyclotomic_poly(std::uint64_t d) {
  if (d == 0) throw std::invalid_argument("cyclotomic_poly: d must be positive");
  IntPoly num = IntPoly::constant(1);
  IntPoly den = IntPoly::constant(1);
  for (std::uint64_t e = 1; e <= d; ++e) {
    if (d % e != 0) continue;
    const int mu = mobius(d / e);
    if (mu == 0) continue;
    IntPoly f = IntPoly::monomial(e) - IntPoly::constant(1);
    if (mu > 0)
      num = num * f;
    else
      den = den * f;
  }
  return divmod_monic(num, den).quotient;
}

CyclotomicFactorization cyclotomic_factorization(const IntPoly& p) {
  if (!p.is_monic()) throw std::invalid_argument("cyclotomic_factorization requires a monic polynomial");
  CyclotomicFactorization out;
  out.remainder = p;
  const auto deg = static_cast<std::uint64_t>(p.degree());
  // totient(d) >= sqrt(d/2), so d <= 2 deg^2 covers every candidate.
  const std::uint64_t bound = std::max<std::uint64_t>(2, 2 * deg * deg);
  for (std::uint64_t d = 1; d <= bound; ++d) {
    if (totient(d) > deg) continue;
    if (out.remainder.degree() < static_cast<long>(totient(d))) continue;
    const IntPoly phi = cyclotomic_poly(d);
    while (out.remainder.degree() >= phi.degree()) {
      PolyDivision qr = divmod_monic(out.remainder, phi);
      if (!qr.remainder.is_zero()) break;
      out.remainder = qr.quotient;
      ++out.factors[d];
    }
  }
  return out;
}

MatrixOrder matrix_order(const IntMatrix& a) {
  require_unimodular(a, "matrix_order");
  CyclotomicFactorization f = cyclotomic_factorization(char_poly(a));
  if (!f.remainder.is_one()) return MatrixOrder::infinite();
  std::uint64_t k_star = 1;
  for (const auto& [d, mult] : f.factors) k_star = lcm_u64(k_star, d);
  if (!a.power(k_star).is_identity()) return MatrixOrder::infinite();
  for (std::uint64_t k = 1; k <= k_star; ++k)
    if (k_star % k == 0 && a.power(k).is_identity()) return MatrixOrder::finite(k);
  return MatrixOrder::finite(k_star);
}

Lattice fixed_lattice(const IntMatrix& a, std::uint64_t k) {
  if (!a.is_square()) throw std::invalid_argument("fixed_lattice requires a square matrix");
  if (k == 0) throw std::invalid_argument("fixed_lattice requires k >= 1");
  return kernel_lattice(minus_identity(a.power(k)));
}

MaxFixedRank max_fixed_rank(const IntMatrix& a) {
  require_unimodular(a, "max_fixed_rank");
  CyclotomicFactorization f = cyclotomic_factorization(char_poly(a));
  MaxFixedRank out;
  for (const auto& [d, mult] : f.factors) out.k_star = lcm_u64(out.k_star, d);
  out.lattice = fixed_lattice(a, out.k_star);
  out.rank = out.lattice.rank();
  return out;
}

std::uint64_t default_oracle_depth(std::size_t n) {
  constexpr std::uint64_t cap = 2520;
  std::uint64_t k = 1;
  const std::uint64_t bound = std::max<std::uint64_t>(2, 2 * n * n);
  for (std::uint64_t d = 1; d <= bound; ++d) {
    if (totient(d) > n) continue;
    k = lcm_u64(k, d);
    if (k >= cap) return cap;
  }
  return k;
}

}  // namespace vcyc::linalg
