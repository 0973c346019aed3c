#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hgc {

using BigInt = boost::multiprecision::cpp_int;

BigInt ipow(int base, int exp);
/// Converts to uint64, throwing std::overflow_error if it does not fit.
std::uint64_t to_u64(const BigInt& x);
std::string to_string(const BigInt& x);

/// Number of points of a non-degenerate Hermitian variety in PG(m-1, q²):
/// (q^m + (-1)^(m-1))(q^(m-1) - (-1)^(m-1)) / (q² - 1), with mu(0) = 0.
BigInt mu(int m, int q);

/// Points of the cone [Π_t]H_{d-t} inside a d-dimensional space:
/// q^(2t)·mu(d-t) + (q^(2t) - 1)/(q² - 1).
BigInt cone_points(int d, int t, int q);

/// cone_points(m - 2i, t) with the range check 0 <= t <= min(2i, m-2i).
BigInt mu_cone(int m, int i, int t, int q);

/// Number of totally isotropic lines, mu(m-2)·mu(m)/(q²+1).
BigInt line_count(int m, int q);

struct CodeParams {
  BigInt n;      ///< length
  BigInt k;      ///< dimension, C(m,2)
  BigInt d_min;  ///< minimum distance
};

/// Length from the four-factor product, dimension C(m,2) and the minimum
/// distance case split (m = 4,6 / even m >= 8 / odd m).  Throws for m < 4.
CodeParams params(int m, int q);

/// Length from the four-factor product only (independent of line_count).
BigInt length_product_formula(int m, int q);

}  // namespace hgc
