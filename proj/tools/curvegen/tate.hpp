#pragma once

#include <optional>
#include <vector>

#include "genustool/bigint.hpp"
#include "genustool/rational.hpp"

// Offline machinery for producing the bundled curve table: Tate's algorithm
// for conductor exponents, Kraus-Laska-Connell minimal model reduction, and
// exact torsion order via Lutz-Nagell. Not part of the genustool library
// surface; the shipped database module only parses and serves records.
namespace curvegen {

using genustool::BigInt;
using genustool::BigRational;

struct Model {
    BigInt a1, a2, a3, a4, a6;

    BigInt b2() const;
    BigInt b4() const;
    BigInt b6() const;
    BigInt b8() const;
    BigInt c4() const;
    BigInt c6() const;
    BigInt discriminant() const;

    // coordinate change x = x' + r, y = y' + s x' + t  (u = 1)
    Model translate(const BigInt& r, const BigInt& s, const BigInt& t) const;
    // coordinate rescale by u: a_i -> a_i / u^i (must be exact)
    Model rescale_down(const BigInt& u) const;

    bool operator==(const Model&) const = default;
};

// Conductor exponent f_p at prime p of the curve's minimal model (Tate).
int local_conductor_exponent(const Model& m, long long p);

// Product of p^{f_p} over primes dividing the discriminant.
BigInt conductor(const Model& m);

// Global minimal model in reduced form: a1, a3 in {0,1}, a2 in {-1,0,1}.
Model reduced_minimal_model(const Model& m);

// Exact order of the rational torsion subgroup.
long long torsion_order(const Model& m);

// Exact integer roots of x^3 + a*x + b (monic), by sign-change bisection.
std::vector<BigInt> integer_cubic_roots(const BigInt& a, const BigInt& b);

}  // namespace curvegen
