#include "quadinv/cuboid.hpp"

namespace quadinv {

BigInt cuboid_char_eval(const BigInt& t, const BigInt& p, const BigInt& q) {
  const BigInt t2 = t * t, p2 = p * p, q2 = q * q;
  const BigInt p4 = p2 * p2, q4 = q2 * q2;
  const BigInt p6 = p4 * p2, q6 = q4 * q2;
  const BigInt p8 = p4 * p4, q8 = q4 * q4;
  const BigInt t4 = t2 * t2, t6 = t4 * t2, t8 = t4 * t4, t10 = t8 * t2;

  BigInt v = t10;
  v += (2 * q2 + p2) * (3 * q2 - 2 * p2) * t8;
  v += (q8 + 10 * p2 * q6 + 4 * p4 * q4 - 14 * p6 * q2 + p8) * t6;
  v -= p2 * q2 * (q8 - 14 * p2 * q6 + 4 * p4 * q4 + 10 * p6 * q2 + p8) * t4;
  v -= p6 * q6 * (q2 + 2 * p2) * (3 * p2 - 2 * q2) * t2;
  v -= q8 * q2 * p8 * p2;
  return v;
}

std::vector<std::string> cuboid_param_warnings(const BigInt& t, const BigInt& p, const BigInt& q) {
  std::vector<std::string> w;
  if (t <= 0 || p <= 0 || q <= 0) w.emplace_back("t, p and q are expected to be positive");
  if (p == q) w.emplace_back("p and q are expected to differ");
  if (gcd(p, q) != 1) w.emplace_back("p and q are expected to be coprime");
  return w;
}

std::pair<BigInt, BigInt> cubic_param_transform(const BigInt& B, const BigInt& p, const BigInt& q) {
  return {BigInt(B * q * q * q - p), q};
}

}  // namespace quadinv
