#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genustool/bigint.hpp"
#include "genustool/cremona.hpp"

namespace genustool {
namespace modular {

bool is_prime(long long n);

// Legendre symbol (a|p) for odd prime p, by Euler's criterion; exact.
int legendre(long long a, long long p);

// |SL2(Z/m)| = m^3 prod_{p | m} (1 - p^-2); 1 for m = 1.
BigInt sl2_order(long long m);

// [SL2(Z) : Gamma_0(n)] = n prod_{p | n} (1 + 1/p), as matrix groups.
BigInt index_gamma0(long long n);

// [SL2(Z) : Gamma(m)] in the matrix-group convention (the reduction mod m is
// surjective, so this is |SL2(Z/m)| for every m >= 1, -I included).
BigInt index_gamma(long long m);

struct X0Genus {
    long long n = 1;
    long long genus = 0;
    long long mu = 1;      // index of Gamma_0(n)
    long long nu2 = 1;     // elliptic points of order 2
    long long nu3 = 1;     // elliptic points of order 3
    long long nu_inf = 1;  // cusps
};

// genus = 1 + mu/12 - nu2/4 - nu3/3 - nu_inf/2 with the classical counts:
// nu2 = 0 if 4|n else prod (1 + (-1|p)); nu3 = 0 if 9|n else prod (1 + (-3|p));
// nu_inf = sum_{d|n} phi(gcd(d, n/d)).
X0Genus x0_genus(long long n);

std::vector<long long> genus_zero_levels(long long bound);

// dim of the Steinberg representation of SL2(F_p): [SL2(F_p) : Borel] - 1 = p.
long long steinberg_dim(long long p);

struct SteinbergWitness {
    long long p = 0;
    long long level = 0;  // N with gcd(N, p) = 1 and X_0(N) of genus 0
    X0Genus certificate;
    EllipticCurveRecord curve;  // conductor p*N
};

struct WitnessSearch {
    std::optional<SteinbergWitness> witness;
    bool data_short = false;  // some candidate conductor fell outside coverage
};

// Scans genus-zero levels in increasing order and returns the first with a
// curve of conductor p*N in the database.
WitnessSearch steinberg_witness(long long p, const CurveDatabase& db);

struct CorollaryEntry {
    long long p = 0;
    std::optional<SteinbergWitness> witness;
    bool insufficient_data = false;
};

struct CorollaryReport {
    long long bound = 0;
    std::vector<CorollaryEntry> entries;  // one per prime < bound
    bool pass = false;                    // every prime has a witness
    bool data_complete = true;            // no entry hit a coverage shortfall
};

// The p < bound sweep; coverage shortfalls are reported as insufficient
// data, never as counterexamples.
CorollaryReport verify_corollary(long long bound, const CurveDatabase& db);

}  // namespace modular
}  // namespace genustool
