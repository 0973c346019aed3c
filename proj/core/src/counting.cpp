#include "hgc/counting.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgc {

namespace {

int sign(int k) { return (k % 2 == 0) ? 1 : -1; }

BigInt exact_div(const BigInt& a, const BigInt& b, const char* what) {
  if (b == 0 || a % b != 0) throw std::logic_error(std::string("non-integral count in ") + what);
  return a / b;
}

}  // namespace

BigInt ipow(int base, int exp) {
  if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
  BigInt r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::uint64_t to_u64(const BigInt& x) {
  if (x < 0 || x > BigInt(UINT64_MAX)) throw std::overflow_error("value does not fit in 64 bits");
  return x.convert_to<std::uint64_t>();
}

std::string to_string(const BigInt& x) { return x.str(); }

BigInt mu(int m, int q) {
  if (m < 0) throw std::invalid_argument("mu: negative dimension");
  if (m == 0) return 0;
  const int s = sign(m - 1);
  const BigInt num = (ipow(q, m) + s) * (ipow(q, m - 1) - s);
  return exact_div(num, BigInt(q * q - 1), "mu");
}

BigInt cone_points(int d, int t, int q) {
  if (t < 0 || t > d) throw std::invalid_argument("cone_points: vertex dimension out of range");
  const BigInt q2t = ipow(q, 2 * t);
  return q2t * mu(d - t, q) + exact_div(q2t - 1, BigInt(q * q - 1), "cone_points");
}

BigInt mu_cone(int m, int i, int t, int q) {
  if (i < 1 || 2 * i > m) throw std::invalid_argument("mu_cone: i out of range");
  const int tmax = std::min(2 * i, m - 2 * i);
  if (t < 0 || t > tmax) throw std::invalid_argument("mu_cone: t out of range");
  return cone_points(m - 2 * i, t, q);
}

BigInt line_count(int m, int q) {
  if (m < 2) return 0;
  return exact_div(mu(m - 2, q) * mu(m, q), BigInt(q * q + 1), "line_count");
}

BigInt length_product_formula(int m, int q) {
  const int s1 = sign(m - 1), s3 = sign(m - 3);
  const BigInt num = (ipow(q, m) + s1) * (ipow(q, m - 1) - s1) * (ipow(q, m - 2) + s3) * (ipow(q, m - 3) - s3);
  const BigInt den = BigInt(q * q - 1) * (q * q - 1) * (q * q + 1);
  return exact_div(num, den, "length");
}

CodeParams params(int m, int q) {
  if (m < 4) throw std::invalid_argument("params: m must be at least 4");
  CodeParams p;
  p.n = length_product_formula(m, q);
  p.k = BigInt(m) * (m - 1) / 2;
  const BigInt top = ipow(q, 4 * m - 12);
  if (m == 4 || m == 6)
    p.d_min = top - ipow(q, 2 * m - 6);
  else if (m % 2 == 0)
    p.d_min = top;
  else
    p.d_min = top - ipow(q, 3 * m - 9);
  return p;
}

}  // namespace hgc
