#include "tate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

namespace curvegen {

namespace {

const BigInt kZero(0);

long long valuation(BigInt n, long long p) {
    if (n.is_zero()) throw std::logic_error("valuation of zero");
    long long v = 0;
    BigInt bp(p), q, r;
    while (true) {
        BigInt::divmod(n, bp, q, r);
        if (!r.is_zero()) return v;
        n = std::move(q);
        ++v;
    }
}

long long mod_ll(const BigInt& n, long long m) {
    BigInt q, r;
    BigInt::divmod(n, BigInt(m), q, r);
    long long v = r.to_int64();
    return v < 0 ? v + m : v;
}

bool divisible(const BigInt& n, long long m) { return n.is_zero() || mod_ll(n, m) == 0; }

}  // namespace

BigInt Model::b2() const { return a1 * a1 + BigInt(4) * a2; }
BigInt Model::b4() const { return a1 * a3 + BigInt(2) * a4; }
BigInt Model::b6() const { return a3 * a3 + BigInt(4) * a6; }
BigInt Model::b8() const {
    return a1 * a1 * a6 + BigInt(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
}
BigInt Model::c4() const { return b2() * b2() - BigInt(24) * b4(); }
BigInt Model::c6() const { return -(b2() * b2() * b2()) + BigInt(36) * b2() * b4() - BigInt(216) * b6(); }
BigInt Model::discriminant() const {
    BigInt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - BigInt(8) * B4 * B4 * B4 - BigInt(27) * B6 * B6 + BigInt(9) * B2 * B4 * B6;
}

Model Model::translate(const BigInt& r, const BigInt& s, const BigInt& t) const {
    Model out;
    out.a1 = a1 + BigInt(2) * s;
    out.a2 = a2 - s * a1 + BigInt(3) * r - s * s;
    out.a3 = a3 + r * a1 + BigInt(2) * t;
    out.a4 = a4 - s * a3 + BigInt(2) * r * a2 - (t + r * s) * a1 + BigInt(3) * r * r -
             BigInt(2) * s * t;
    out.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    return out;
}

Model Model::rescale_down(const BigInt& u) const {
    Model out;
    out.a1 = BigInt::divexact(a1, u);
    out.a2 = BigInt::divexact(a2, u * u);
    out.a3 = BigInt::divexact(a3, u * u * u);
    out.a4 = BigInt::divexact(a4, u * u * u * u);
    out.a6 = BigInt::divexact(a6, u * u * u * u * u * u);
    return out;
}

namespace {

// roots with multiplicity of the monic cubic T^3 + bT^2 + cT + d over F_p
std::map<long long, int> cubic_roots_mod_p(long long b, long long c, long long d, long long p) {
    std::map<long long, int> roots;
    for (long long x = 0; x < p; ++x) {
        // repeated synthetic division by (T - x) for the exact multiplicity
        std::vector<long long> coeffs = {1, ((b % p) + p) % p, ((c % p) + p) % p, ((d % p) + p) % p};
        int mult = 0;
        while (coeffs.size() > 1) {
            std::vector<long long> quot(coeffs.size() - 1);
            long long acc = 0;
            for (size_t i = 0; i < coeffs.size(); ++i) {
                acc = ((coeffs[i] + acc * x) % p + p) % p;
                if (i + 1 < coeffs.size()) quot[i] = acc;
            }
            if (acc != 0) break;
            ++mult;
            coeffs = std::move(quot);
        }
        if (mult > 0) roots[x] = mult;
    }
    return roots;
}

int exponent_large_p(const Model& m, long long p) {
    long long vd = valuation(m.discriminant(), p);
    BigInt c4 = m.c4();
    bool c4_zero = c4.is_zero();
    long long vc4 = c4_zero ? 0 : valuation(c4, p);
    while (vd >= 12 && (c4_zero || vc4 >= 4)) {
        vd -= 12;
        vc4 -= 4;
    }
    if (vd == 0) return 0;
    if (!c4_zero && vc4 == 0) return 1;
    return 2;
}

}  // namespace

int local_conductor_exponent(const Model& input, long long p) {
    if (input.discriminant().is_zero()) throw std::invalid_argument("singular model");
    if (p >= 5) return exponent_large_p(input, p);

    Model m = input;
    const long long p2 = p * p, p3 = p2 * p, p4 = p3 * p, p6 = p4 * p2;
    for (int rounds = 0; rounds < 64; ++rounds) {
        const long long n = valuation(m.discriminant(), p);
        if (n == 0) return 0;  // type I0
        {
            BigInt c4 = m.c4();
            if (!c4.is_zero() && valuation(c4, p) == 0) return 1;  // type I_n
        }

        // move the singular point of the reduction to the origin
        {
            bool moved = false;
            for (long long x = 0; x < p && !moved; ++x) {
                for (long long y = 0; y < p && !moved; ++y) {
                    BigInt bx(x), by(y);
                    BigInt f = by * by + m.a1 * bx * by + m.a3 * by - bx * bx * bx -
                               m.a2 * bx * bx - m.a4 * bx - m.a6;
                    BigInt fx = m.a1 * by - BigInt(3) * bx * bx - BigInt(2) * m.a2 * bx - m.a4;
                    BigInt fy = BigInt(2) * by + m.a1 * bx + m.a3;
                    if (divisible(f, p) && divisible(fx, p) && divisible(fy, p)) {
                        m = m.translate(bx, kZero, by);
                        moved = true;
                    }
                }
            }
            if (!moved) throw std::logic_error("tate: singular point not found");
        }

        if (!divisible(m.a6, p2)) return static_cast<int>(n);        // type II
        if (!divisible(m.b8(), p3)) return static_cast<int>(n - 1);  // type III
        if (!divisible(m.b6(), p3)) return static_cast<int>(n - 2);  // type IV

        // arrange p | a1, a2 ; p^2 | a3, a4 ; p^3 | a6
        {
            bool ok = false;
            for (long long s = 0; s < p && !ok; ++s) {
                for (long long t = 0; t < p2 && !ok; ++t) {
                    Model cand = m.translate(kZero, BigInt(s), BigInt(t));
                    if (divisible(cand.a1, p) && divisible(cand.a2, p) && divisible(cand.a3, p2) &&
                        divisible(cand.a4, p2) && divisible(cand.a6, p3)) {
                        m = cand;
                        ok = true;
                    }
                }
            }
            if (!ok) throw std::logic_error("tate: normalization failed");
        }

        // P(T) = T^3 + (a2/p) T^2 + (a4/p^2) T + (a6/p^3) over F_p
        auto roots = cubic_roots_mod_p(mod_ll(BigInt::divexact(m.a2, BigInt(p)), p),
                                       mod_ll(BigInt::divexact(m.a4, BigInt(p2)), p),
                                       mod_ll(BigInt::divexact(m.a6, BigInt(p3)), p), p);
        int max_mult = 0;
        long long mult_root = 0;
        for (auto [r, k] : roots)
            if (k > max_mult) {
                max_mult = k;
                mult_root = r;
            }

        if (max_mult <= 1) return static_cast<int>(n - 4);  // type I0*

        if (max_mult == 2) {
            // type I_m*: move the double root to T = 0, then count the
            // extra components by testing quadratics alternately in Y and X
            m = m.translate(BigInt(p * mult_root), kZero, kZero);
            long long extra = 1;
            long long mx = p2, my = p2;
            while (true) {
                BigInt a2t = BigInt::divexact(m.a2, BigInt(p));
                BigInt a3t = BigInt::divexact(m.a3, BigInt(my));
                BigInt a6t = BigInt::divexact(m.a6, BigInt(mx * my));
                // Y^2 + a3t Y - a6t
                if (!divisible(a3t * a3t + BigInt(4) * a6t, p)) break;
                long long y0 = -1;
                for (long long y = 0; y < p && y0 < 0; ++y)
                    if (divisible(BigInt(y) * BigInt(y) + a3t * BigInt(y) - a6t, p)) y0 = y;
                if (y0 < 0) throw std::logic_error("tate: I_m* Y-root not found");
                m = m.translate(kZero, kZero, BigInt(my * y0));
                my *= p;
                ++extra;

                a2t = BigInt::divexact(m.a2, BigInt(p));
                BigInt a4t = BigInt::divexact(m.a4, BigInt(p * mx));
                a6t = BigInt::divexact(m.a6, BigInt(mx * my));
                // a2t X^2 + a4t X + a6t
                if (!divisible(a4t * a4t - BigInt(4) * a2t * a6t, p)) break;
                long long x0 = -1;
                for (long long x = 0; x < p && x0 < 0; ++x)
                    if (divisible(a2t * BigInt(x) * BigInt(x) + a4t * BigInt(x) + a6t, p)) x0 = x;
                if (x0 < 0) throw std::logic_error("tate: I_m* X-root not found");
                m = m.translate(BigInt(mx * x0), kZero, kZero);
                mx *= p;
                ++extra;
            }
            return static_cast<int>(n - 4 - extra);
        }

        // triple root: move it to T = 0
        m = m.translate(BigInt(p * mult_root), kZero, kZero);

        // quadratic Y^2 + (a3/p^2) Y - (a6/p^4) over F_p
        long long q1 = mod_ll(BigInt::divexact(m.a3, BigInt(p2)), p);
        long long q0 = mod_ll(BigInt::divexact(m.a6, BigInt(p4)), p);
        if (((q1 * q1 + 4 * q0) % p) != 0) return static_cast<int>(n - 6);  // type IV*

        {
            bool found = false;
            for (long long y = 0; y < p && !found; ++y) {
                if (((y * y + q1 * y - q0) % p + p) % p == 0) {
                    m = m.translate(kZero, kZero, BigInt(p2 * y));
                    found = true;
                }
            }
            if (!found) throw std::logic_error("tate: quadratic root not found");
        }

        if (!divisible(m.a4, p4)) return static_cast<int>(n - 7);  // type III*
        if (!divisible(m.a6, p6)) return static_cast<int>(n - 8);  // type II*

        // non-minimal at p: rescale and start over
        m = m.rescale_down(BigInt(p));
    }
    throw std::logic_error("tate: did not terminate");
}

namespace {

// prime factorization; the generator only sees discriminants within int64
std::vector<std::pair<long long, int>> factor_ll(const BigInt& n) {
    long long rest = n.abs().to_int64();
    std::vector<std::pair<long long, int>> out;
    for (long long p = 2; p * p <= rest; ++p) {
        if (rest % p) continue;
        int e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (rest > 1) out.emplace_back(rest, 1);
    return out;
}

}  // namespace

BigInt conductor(const Model& m) {
    BigInt disc = m.discriminant();
    if (disc.is_zero()) throw std::invalid_argument("singular model");
    BigInt cond(1);
    for (auto [p, e] : factor_ll(disc))
        cond *= BigInt::pow(BigInt(p), local_conductor_exponent(m, p));
    return cond;
}

namespace {

bool kraus_ok(const BigInt& c4, const BigInt& c6) {
    // an integral model with invariants (c4, c6) exists iff:
    //   at 3: v3(c6) != 2
    //   at 2: c6 = -1 (mod 4), or c4 = 0 (mod 16) and c6 = 0 or 8 (mod 32)
    if (!c6.is_zero() && valuation(c6, 3) == 2) return false;
    if (mod_ll(c6, 4) == 3) return true;
    bool c4ok = c4.is_zero() || valuation(c4, 2) >= 4;
    long long c6m32 = mod_ll(c6, 32);
    return c4ok && (c6m32 == 0 || c6m32 == 8);
}

std::optional<Model> model_from_invariants(const BigInt& c4, const BigInt& c6) {
    for (long long A1 : {0, 1}) {
        for (long long A2 : {-1, 0, 1}) {
            for (long long A3 : {0, 1}) {
                BigInt b2 = BigInt(A1 * A1 + 4 * A2);
                BigInt q, r;
                BigInt::divmod(b2 * b2 - c4, BigInt(24), q, r);
                if (!r.is_zero()) continue;
                BigInt b4 = q;
                BigInt::divmod(-(b2 * b2 * b2) + BigInt(36) * b2 * b4 - c6, BigInt(216), q, r);
                if (!r.is_zero()) continue;
                BigInt b6 = q;
                BigInt::divmod(b4 - BigInt(A1 * A3), BigInt(2), q, r);
                if (!r.is_zero()) continue;
                BigInt a4 = q;
                BigInt::divmod(b6 - BigInt(A3 * A3), BigInt(4), q, r);
                if (!r.is_zero()) continue;
                BigInt a6 = q;
                Model m{BigInt(A1), BigInt(A2), BigInt(A3), a4, a6};
                if (m.c4() == c4 && m.c6() == c6) return m;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

Model reduced_minimal_model(const Model& m) {
    BigInt c4 = m.c4(), c6 = m.c6(), disc = m.discriminant();

    BigInt u(1);
    // only primes with p^12 dividing the discriminant can rescale
    for (long long p = 2; BigInt::pow(BigInt(p), 12) <= disc.abs(); ++p) {
        bool prime = true;
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) prime = false;
        if (!prime) continue;
        long long vd = valuation(disc, p);
        if (vd < 12) continue;
        long long vc4 = c4.is_zero() ? 1000 : valuation(c4, p);
        long long vc6 = c6.is_zero() ? 1000 : valuation(c6, p);
        long long k = std::min({vc4 / 4, vc6 / 6, vd / 12});
        if (p == 2 || p == 3) {
            while (k > 0) {
                BigInt pk = BigInt::pow(BigInt(p), static_cast<unsigned long long>(k));
                BigInt cand4 = BigInt::divexact(c4, BigInt::pow(pk, 4));
                BigInt cand6 = BigInt::divexact(c6, BigInt::pow(pk, 6));
                if (kraus_ok(cand4, cand6)) break;
                --k;
            }
        }
        if (k > 0) u *= BigInt::pow(BigInt(p), static_cast<unsigned long long>(k));
    }

    BigInt mc4 = BigInt::divexact(c4, BigInt::pow(u, 4));
    BigInt mc6 = BigInt::divexact(c6, BigInt::pow(u, 6));
    std::optional<Model> out = model_from_invariants(mc4, mc6);
    if (!out) throw std::logic_error("reduced_minimal_model: reconstruction failed");
    return *out;
}

namespace {

// smallest s >= 0 with s^k > n (n >= 0)
BigInt int_root_bound(const BigInt& n, int k) {
    BigInt lo(0), hi(2);
    while (BigInt::pow(hi, k) <= n) hi *= BigInt(2);
    while (lo < hi) {
        BigInt mid = (lo + hi) / BigInt(2);
        if (BigInt::pow(mid, k) <= n)
            lo = mid + BigInt(1);
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

namespace {

int sign_i128(__int128 v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

// fast path when the coefficients fit a machine word
std::vector<BigInt> cubic_roots_i128(long long a, long long b) {
    auto eval = [&](__int128 x) { return x * x * x + static_cast<__int128>(a) * x + b; };
    long long sq = static_cast<long long>(std::sqrt(static_cast<double>(std::abs(a)))) + 2;
    long long cb = static_cast<long long>(std::cbrt(static_cast<double>(std::abs(b)))) + 2;
    const __int128 bound = static_cast<__int128>(sq) + cb + 2;

    std::vector<std::pair<__int128, __int128>> intervals;
    if (a >= 0) {
        intervals.emplace_back(-bound, bound);
    } else {
        long long target = (-a) / 3;
        long long s = static_cast<long long>(std::sqrt(static_cast<double>(target)));
        while (s * s <= target) ++s;
        while (s > 0 && (s - 1) * (s - 1) > target) --s;
        intervals.emplace_back(-bound, -s);
        intervals.emplace_back(-s + 1, s - 1);
        intervals.emplace_back(s, bound);
    }
    std::vector<BigInt> roots;
    for (auto [lo, hi] : intervals) {
        if (lo > hi) continue;
        __int128 flo = eval(lo), fhi = eval(hi);
        if (flo == 0) roots.push_back(BigInt(static_cast<long long>(lo)));
        if (fhi == 0 && hi != lo) roots.push_back(BigInt(static_cast<long long>(hi)));
        if (sign_i128(flo) * sign_i128(fhi) >= 0) continue;
        __int128 a_end = lo, b_end = hi;
        while (b_end - a_end > 1) {
            __int128 mid = (a_end + b_end) / 2;
            __int128 fm = eval(mid);
            if (fm == 0) {
                roots.push_back(BigInt(static_cast<long long>(mid)));
                break;
            }
            if (sign_i128(fm) == sign_i128(flo))
                a_end = mid;
            else
                b_end = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

}  // namespace

std::vector<BigInt> integer_cubic_roots(const BigInt& a, const BigInt& b) {
    if (a.fits_int64() && b.fits_int64()) return cubic_roots_i128(a.to_int64(), b.to_int64());
    // sign-change bisection over the monotone pieces of x^3 + a x + b
    auto eval = [&](const BigInt& x) { return x * x * x + a * x + b; };
    // |x|^3 <= |a| |x| + |b| forces |x| <= sqrt(|a|) + cbrt(|b|) + 1
    BigInt bound = int_root_bound(a.abs(), 2) + int_root_bound(b.abs(), 3) + BigInt(2);

    std::vector<std::pair<BigInt, BigInt>> intervals;
    if (a >= kZero) {
        intervals.emplace_back(-bound, bound);
    } else {
        // critical points at +-sqrt(-a/3); integers beyond them are on the
        // increasing pieces, integers inside on the decreasing piece
        BigInt target = (-a) / BigInt(3);
        BigInt lo(0), hi = target + BigInt(2);
        while (lo < hi) {
            BigInt mid = (lo + hi) / BigInt(2);
            if (mid * mid <= target)
                lo = mid + BigInt(1);
            else
                hi = mid;
        }
        BigInt s = lo;  // smallest s with s^2 > floor(-a/3), so s > sqrt(-a/3)
        intervals.emplace_back(-bound, -s);
        intervals.emplace_back(-s + BigInt(1), s - BigInt(1));  // the decreasing piece
        intervals.emplace_back(s, bound);
    }

    std::vector<BigInt> roots;
    for (auto& [lo, hi] : intervals) {
        if (lo > hi) continue;
        BigInt flo = eval(lo), fhi = eval(hi);
        if (flo.is_zero()) roots.push_back(lo);
        if (fhi.is_zero() && hi != lo) roots.push_back(hi);
        if (flo.sign() * fhi.sign() >= 0) continue;
        BigInt a_end = lo, b_end = hi;
        while (b_end - a_end > BigInt(1)) {
            BigInt mid = (a_end + b_end) / BigInt(2);
            BigInt fm = eval(mid);
            if (fm.is_zero()) {
                roots.push_back(mid);
                break;
            }
            if (fm.sign() == flo.sign())
                a_end = mid;
            else
                b_end = mid;
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

namespace {

struct Point {
    bool infinity = true;
    BigRational x, y;
};

// chord-tangent addition on y^2 = x^3 + A x + B
Point add_points(const Point& P, const Point& Q, const BigInt& A) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    BigRational lambda;
    if (P.x == Q.x) {
        if (P.y == -Q.y) return Point{};
        lambda = (BigRational(3) * P.x * P.x + BigRational(A)) / (BigRational(2) * P.y);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    Point R;
    R.infinity = false;
    R.x = lambda * lambda - P.x - Q.x;
    R.y = lambda * (P.x - R.x) - P.y;
    return R;
}

bool is_torsion(const Point& P, const BigInt& A, const BigInt& x_bound) {
    // rational torsion has order at most 12 (Mazur); all its multiples are
    // integral (Lutz-Nagell) with x bounded, which prunes infinite-order
    // points before their coordinates blow up
    Point acc = P;
    for (int k = 2; k <= 13; ++k) {
        acc = add_points(acc, P, A);
        if (acc.infinity) return k <= 12;
        if (!acc.x.is_integer() || acc.x.num().abs() > x_bound) return false;
    }
    return false;
}

}  // namespace

long long torsion_order(const Model& m) {
    // short model Y^2 = X^3 + A X + B, A = -27 c4, B = -54 c6; torsion is
    // isomorphic and by Lutz-Nagell its points are integral with Y = 0 or
    // Y^2 dividing the discriminant
    BigInt A = BigInt(-27) * m.c4();
    BigInt B = BigInt(-54) * m.c6();
    if (m.discriminant().is_zero()) throw std::invalid_argument("singular model");

    std::set<std::pair<std::string, std::string>> torsion;
    for (const BigInt& x : integer_cubic_roots(A, B)) torsion.emplace(x.to_string(), "0");

    // disc of the short model is 6^12 times the model's discriminant
    std::vector<std::pair<long long, int>> factorization = factor_ll(m.discriminant());
    bool saw2 = false, saw3 = false;
    for (auto& [p, e] : factorization) {
        if (p == 2) {
            e += 12;
            saw2 = true;
        }
        if (p == 3) {
            e += 12;
            saw3 = true;
        }
    }
    if (!saw2) factorization.emplace_back(2, 12);
    if (!saw3) factorization.emplace_back(3, 12);

    std::vector<BigInt> ys = {BigInt(1)};
    for (auto [p, e] : factorization) {
        size_t count = ys.size();
        BigInt pk(1);
        for (int k = 1; 2 * k <= e; ++k) {
            pk *= BigInt(p);
            for (size_t i = 0; i < count; ++i) ys.push_back(ys[i] * pk);
        }
    }
    // cheap filter: x^3 + A x + (B - y^2) = 0 needs a root modulo m
    auto achievable = [&](long long m) {
        std::vector<char> ok(m, 0);
        long long am = mod_ll(A, m);
        for (long long x = 0; x < m; ++x) ok[(x * x % m * x + am * x) % m] = 1;
        return ok;
    };
    const std::vector<char> ok64 = achievable(64), ok63 = achievable(63);
    long long b64 = mod_ll(B, 64), b63 = mod_ll(B, 63);

    // torsion x-coordinates satisfy |x| <= sqrt|A| + cbrt(|disc| + |B|) + 2
    BigInt disc_short(1);
    for (auto [p, e] : factorization) disc_short *= BigInt::pow(BigInt(p), e);
    BigInt x_bound = int_root_bound(A.abs(), 2) + int_root_bound(disc_short + B.abs(), 3) + BigInt(2);

    for (const BigInt& y : ys) {
        long long y64 = mod_ll(y, 64), y63 = mod_ll(y, 63);
        if (!ok64[(y64 * y64 + 64 - b64) % 64] || !ok63[(y63 * y63 + 63 - b63) % 63]) continue;
        for (const BigInt& x : integer_cubic_roots(A, B - y * y)) {
            Point P{false, BigRational(x), BigRational(y)};
            if (is_torsion(P, A, x_bound)) {
                torsion.emplace(x.to_string(), y.to_string());
                torsion.emplace(x.to_string(), (-y).to_string());
            }
        }
    }
    return static_cast<long long>(torsion.size()) + 1;
}

}  // namespace curvegen
