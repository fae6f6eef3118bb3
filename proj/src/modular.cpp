#include "genustool/modular.hpp"

#include <numeric>
#include <stdexcept>

namespace genustool {
namespace modular {

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<long long> prime_divisors(long long n) {
    std::vector<long long> out;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        out.push_back(p);
        while (n % p == 0) n /= p;
    }
    if (n > 1) out.push_back(n);
    return out;
}

long long mod_pow(long long base, long long exp, long long mod) {
    long long result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp) {
        if (exp & 1) result = static_cast<long long>(static_cast<__int128>(result) * base % mod);
        exp >>= 1;
        base = static_cast<long long>(static_cast<__int128>(base) * base % mod);
    }
    return result;
}

long long euler_phi(long long n) {
    long long out = n;
    for (long long p : prime_divisors(n)) out -= out / p;
    return out;
}

}  // namespace

int legendre(long long a, long long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long long e = mod_pow(a, (p - 1) / 2, p);
    if (e == 1) return 1;
    if (e == p - 1) return -1;
    throw std::logic_error("legendre: modulus is not an odd prime");
}

BigInt sl2_order(long long m) {
    if (m < 1) throw std::invalid_argument("sl2_order: m must be positive");
    // m^3 prod (1 - p^-2) = m * prod_p (p^2 - 1) p^(2e - 2) over p^e || m
    BigInt out(m);
    long long rest = m;
    for (long long p : prime_divisors(m)) {
        long long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out *= BigInt(p * p - 1);
        out *= BigInt::pow(BigInt(p), 2 * static_cast<unsigned long long>(e) - 2);
    }
    return out;
}

BigInt index_gamma0(long long n) {
    if (n < 1) throw std::invalid_argument("index_gamma0: n must be positive");
    // n prod (1 + 1/p) = prod (p + 1) p^(e-1)
    BigInt out(1);
    long long rest = n;
    for (long long p : prime_divisors(n)) {
        long long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out *= BigInt(p + 1);
        out *= BigInt::pow(BigInt(p), static_cast<unsigned long long>(e) - 1);
    }
    return out;
}

BigInt index_gamma(long long m) { return sl2_order(m); }

X0Genus x0_genus(long long n) {
    if (n < 1) throw std::invalid_argument("x0_genus: n must be positive");
    X0Genus g;
    g.n = n;

    std::vector<std::pair<long long, int>> factorization;
    long long rest = n;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        factorization.emplace_back(p, e);
    }
    if (rest > 1) factorization.emplace_back(rest, 1);

    g.mu = 1;
    for (auto [p, e] : factorization) {
        g.mu *= p + 1;
        for (int k = 1; k < e; ++k) g.mu *= p;
    }

    g.nu2 = n % 4 == 0 ? 0 : 1;
    if (g.nu2)
        for (auto [p, e] : factorization) g.nu2 *= p == 2 ? 1 : 1 + legendre(-1, p);
    g.nu3 = n % 9 == 0 ? 0 : 1;
    if (g.nu3)
        // (-3 | 2) = -1: x^2 + x + 1 has no root mod 2
        for (auto [p, e] : factorization) g.nu3 *= p == 3 ? 1 : p == 2 ? 0 : 1 + legendre(-3, p);

    std::vector<long long> divisors = {1};
    for (auto [p, e] : factorization) {
        size_t count = divisors.size();
        long long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * pk);
        }
    }
    g.nu_inf = 0;
    for (long long d : divisors) g.nu_inf += euler_phi(std::gcd(d, n / d));

    long long twelve_g = 12 + g.mu - 3 * g.nu2 - 4 * g.nu3 - 6 * g.nu_inf;
    if (twelve_g % 12 != 0) throw std::logic_error("x0_genus: non-integral genus");
    g.genus = twelve_g / 12;
    return g;
}

std::vector<long long> genus_zero_levels(long long bound) {
    if (bound < 1) throw std::invalid_argument("genus_zero_levels: bound must be positive");
    std::vector<long long> out;
    for (long long n = 1; n <= bound; ++n)
        if (x0_genus(n).genus == 0) out.push_back(n);
    return out;
}

long long steinberg_dim(long long p) {
    if (!is_prime(p)) throw std::invalid_argument("steinberg_dim: p must be prime");
    // Ind_P^{SL2(F_p)} Q = trivial + Steinberg, so dim St = [SL2(F_p) : P] - 1 = p
    return p;
}

WitnessSearch steinberg_witness(long long p, const CurveDatabase& db) {
    if (!is_prime(p)) throw std::invalid_argument("steinberg_witness: p must be prime");
    WitnessSearch out;
    // The genus-zero level set is finite (it stabilizes at N = 25).
    static const std::vector<long long> levels = genus_zero_levels(25);
    for (long long n : levels) {
        if (std::gcd(n, p) != 1) continue;
        long long conductor = p * n;
        switch (db.has_conductor(conductor)) {
            case CurveDatabase::Presence::kPresent: {
                SteinbergWitness w;
                w.p = p;
                w.level = n;
                w.certificate = x0_genus(n);
                w.curve = db.lookup(conductor)->front();
                out.witness = w;
                return out;
            }
            case CurveDatabase::Presence::kOutsideCoverage:
                out.data_short = true;
                break;
            case CurveDatabase::Presence::kAbsentInCoverage:
                break;
        }
    }
    return out;
}

CorollaryReport verify_corollary(long long bound, const CurveDatabase& db) {
    CorollaryReport report;
    report.bound = bound;
    report.pass = true;
    for (long long p = 2; p < bound; ++p) {
        if (!is_prime(p)) continue;
        CorollaryEntry entry;
        entry.p = p;
        WitnessSearch search = steinberg_witness(p, db);
        if (search.witness) {
            entry.witness = search.witness;
        } else {
            entry.insufficient_data = search.data_short;
            report.pass = false;
            if (search.data_short) report.data_complete = false;
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

}  // namespace modular
}  // namespace genustool
