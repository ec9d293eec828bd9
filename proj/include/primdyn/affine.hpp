#pragma once

#include <optional>
#include <variant>

#include "primdyn/certificate.hpp"
#include "primdyn/mat2.hpp"

namespace primdyn {

// Fixed-point set of x -> ax + b on the real line.
struct AffFixedPoint {
  enum class Kind { Point, EveryPoint, None };
  Kind kind;
  Rat point;  // set when kind == Point
};

// M must be in Aff+(R) form: lower row (0,1), a > 0.
AffFixedPoint aff_fixed_point(const Mat2Q& m);

// Does base^n * coeff = 1 have an integer solution n?  Exact, via coprime
// base (gcd refinement) factorization of the operands; base, coeff > 0.
std::optional<long> solve_pow_eq(const Rat& base, const Rat& coeff);

// The Aff+(R) counterexample: every f^n g^{±1}, g^n f^{±1} has a fixed
// point (checked in range, extended to all n by multiplicative
// independence of the slopes) while [f,g] has none.
Certificate verify_aff_counterexample(const Mat2Q& f, const Mat2Q& g, int n_range);

}  // namespace primdyn
