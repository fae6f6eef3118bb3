#include "genustool/cremona.hpp"

#include <fstream>
#include <sstream>

#include "genustool/perm.hpp"  // ParseError

namespace genustool {

BigInt EllipticCurveRecord::b2() const { return BigInt(a1) * BigInt(a1) + BigInt(4) * BigInt(a2); }
BigInt EllipticCurveRecord::b4() const { return BigInt(2) * BigInt(a4) + BigInt(a1) * BigInt(a3); }
BigInt EllipticCurveRecord::b6() const { return BigInt(a3) * BigInt(a3) + BigInt(4) * BigInt(a6); }

BigInt EllipticCurveRecord::b8() const {
    return BigInt(a1) * BigInt(a1) * BigInt(a6) + BigInt(4) * BigInt(a2) * BigInt(a6) -
           BigInt(a1) * BigInt(a3) * BigInt(a4) + BigInt(a2) * BigInt(a3) * BigInt(a3) -
           BigInt(a4) * BigInt(a4);
}

BigInt EllipticCurveRecord::c4() const { return b2() * b2() - BigInt(24) * b4(); }

BigInt EllipticCurveRecord::c6() const {
    return -(b2() * b2() * b2()) + BigInt(36) * b2() * b4() - BigInt(216) * b6();
}

BigInt EllipticCurveRecord::discriminant() const {
    BigInt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -(B2 * B2 * B8) - BigInt(8) * B4 * B4 * B4 - BigInt(27) * B6 * B6 + BigInt(9) * B2 * B4 * B6;
}

std::string EllipticCurveRecord::to_line() const {
    std::ostringstream os;
    os << conductor << " " << isogeny_class << " " << curve_number << " " << a1 << " " << a2 << " "
       << a3 << " " << a4 << " " << a6 << " " << rank << " " << torsion;
    return os.str();
}

CurveDatabase CurveDatabase::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve table '" + path + "'");
    return parse_stream(in, path);
}

CurveDatabase CurveDatabase::parse_stream(std::istream& in, const std::string& origin) {
    CurveDatabase db;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        EllipticCurveRecord rec;
        if (!(is >> rec.conductor)) {
            if (is.eof() && line.find_first_not_of(" \t\r") == std::string::npos) continue;
            throw ParseError(origin + ":" + std::to_string(lineno) + ": malformed line", lineno);
        }
        if (!(is >> rec.isogeny_class >> rec.curve_number >> rec.a1 >> rec.a2 >> rec.a3 >> rec.a4 >>
              rec.a6 >> rec.rank >> rec.torsion))
            throw ParseError(origin + ":" + std::to_string(lineno) + ": malformed line", lineno);
        std::string extra;
        if (is >> extra)
            throw ParseError(origin + ":" + std::to_string(lineno) + ": trailing tokens", lineno);
        if (rec.conductor < 1)
            throw ParseError(origin + ":" + std::to_string(lineno) + ": conductor must be positive",
                             lineno);
        if (rec.rank < 0 || rec.torsion < 1)
            throw ParseError(origin + ":" + std::to_string(lineno) + ": bad rank or torsion", lineno);
        if (rec.discriminant().is_zero())
            throw ParseError(origin + ":" + std::to_string(lineno) + ": singular curve", lineno);

        if (db.count_ == 0 || rec.conductor < db.min_conductor_) db.min_conductor_ = rec.conductor;
        if (db.count_ == 0 || rec.conductor > db.max_conductor_) db.max_conductor_ = rec.conductor;
        db.by_conductor_[rec.conductor].push_back(std::move(rec));
        ++db.count_;
    }
    return db;
}

const std::vector<EllipticCurveRecord>* CurveDatabase::lookup(long long conductor) const {
    auto it = by_conductor_.find(conductor);
    return it == by_conductor_.end() ? nullptr : &it->second;
}

CurveDatabase::Presence CurveDatabase::has_conductor(long long conductor) const {
    if (lookup(conductor)) return Presence::kPresent;
    if (count_ == 0 || conductor < min_conductor_ || conductor > max_conductor_)
        return Presence::kOutsideCoverage;
    return Presence::kAbsentInCoverage;
}

void CurveDatabase::serialize(std::ostream& out) const {
    for (const auto& [cond, recs] : by_conductor_)
        for (const auto& rec : recs) out << rec.to_line() << "\n";
}

}  // namespace genustool
