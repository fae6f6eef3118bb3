#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "genustool/bigint.hpp"

namespace genustool {

// One line of an "allcurves"-format table:
//   conductor class number a1 a2 a3 a4 a6 rank torsion
struct EllipticCurveRecord {
    long long conductor = 0;
    std::string isogeny_class;
    long long curve_number = 0;
    long long a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
    long long rank = 0;
    long long torsion = 1;

    BigInt b2() const;
    BigInt b4() const;
    BigInt b6() const;
    BigInt b8() const;
    BigInt c4() const;
    BigInt c6() const;
    BigInt discriminant() const;

    std::string to_line() const;
};

// Curves keyed by conductor with observed coverage. A lookup distinguishes
// "absent but inside coverage" from "outside coverage": the corollary check
// must never confuse missing data with mathematical absence.
class CurveDatabase {
public:
    enum class Presence { kPresent, kAbsentInCoverage, kOutsideCoverage };

    static CurveDatabase parse_file(const std::string& path);
    static CurveDatabase parse_stream(std::istream& in, const std::string& origin);

    size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    long long min_conductor() const { return min_conductor_; }
    long long max_conductor() const { return max_conductor_; }

    const std::vector<EllipticCurveRecord>* lookup(long long conductor) const;
    Presence has_conductor(long long conductor) const;

    void serialize(std::ostream& out) const;

private:
    std::map<long long, std::vector<EllipticCurveRecord>> by_conductor_;
    long long min_conductor_ = 0;
    long long max_conductor_ = 0;
    size_t count_ = 0;
};

}  // namespace genustool
