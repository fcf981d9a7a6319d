#pragma once

/**
 * @file cuboid.hpp
 * @brief The tenth-degree cuboid characteristic polynomial and the cubic
 *        parameter involution (p, q) -> (B q^3 - p, q).
 */

#include <string>
#include <utility>
#include <vector>

#include "quadinv/exactnum.hpp"

namespace quadinv {

/// Exact value of the degree-10 polynomial in t with parameters p, q.
BigInt cuboid_char_eval(const BigInt& t, const BigInt& p, const BigInt& q);

/// Human-readable remarks when (t, p, q) falls outside the intended domain:
/// positive integers with p != q and gcd(p, q) = 1.
std::vector<std::string> cuboid_param_warnings(const BigInt& t, const BigInt& p, const BigInt& q);

/// (B q^3 - p, q); applying it twice returns (p, q).
std::pair<BigInt, BigInt> cubic_param_transform(const BigInt& B, const BigInt& p, const BigInt& q);

}  // namespace quadinv
