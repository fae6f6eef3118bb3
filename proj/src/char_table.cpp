#include "genustool/char_table.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include "genustool/perm.hpp"  // ParseError

namespace genustool {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

bool is_prime_ll(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

long long euler_phi(long long n) {
    long long out = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        while (n % p == 0) n /= p;
        out -= out / p;
    }
    if (n > 1) out -= out / n;
    return out;
}

[[noreturn]] void fail(const std::string& origin, int line, const std::string& what) {
    throw ParseError(origin + ":" + std::to_string(line) + ": " + what, line);
}

}  // namespace

CharacterTable CharacterTable::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open character table file '" + path + "'");
    return parse_stream(in, path);
}

CharacterTable CharacterTable::parse_stream(std::istream& in, const std::string& origin) {
    CharacterTable t;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tok = split_ws(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];

        if (kw == "group") {
            if (tok.size() != 3) fail(origin, lineno, "group line needs: group <name> <order>");
            t.group_name_ = tok[1];
            t.group_order_ = BigInt::from_string(tok[2]);
            if (t.group_order_ <= BigInt(0)) fail(origin, lineno, "group order must be positive");
        } else if (kw == "partial") {
            t.partial_ = true;
        } else if (kw == "class") {
            if (tok.size() != 4) fail(origin, lineno, "class line needs: class <name> <order> <size>");
            ConjClass c;
            c.name = tok[1];
            c.element_order = std::stoll(tok[2]);
            c.size = BigInt::from_string(tok[3]);
            if (c.element_order < 1) fail(origin, lineno, "element order must be positive");
            if (c.size < BigInt(0)) fail(origin, lineno, "class size must be non-negative");
            if (!t.class_index_.emplace(c.name, static_cast<int>(t.classes_.size())).second)
                fail(origin, lineno, "duplicate class '" + c.name + "'");
            t.classes_.push_back(std::move(c));
        } else if (kw == "power") {
            if (tok.size() != 4) fail(origin, lineno, "power line needs: power <prime> <class> <class>");
            long long p = std::stoll(tok[1]);
            if (!is_prime_ll(p)) fail(origin, lineno, "power map prime " + tok[1] + " is not prime");
            auto from = t.class_index_.find(tok[2]);
            auto to = t.class_index_.find(tok[3]);
            if (from == t.class_index_.end() || to == t.class_index_.end())
                fail(origin, lineno, "power map names an unknown class");
            auto it = t.power_maps_.try_emplace(p).first;
            if (it->second.size() < t.classes_.size()) it->second.resize(t.classes_.size(), -1);
            if (it->second[from->second] >= 0 && it->second[from->second] != to->second)
                fail(origin, lineno, "conflicting power map for class '" + tok[2] + "'");
            it->second[from->second] = to->second;
            // ord(g^p) = ord(g)/gcd(ord(g), p)
            long long m = t.classes_[from->second].element_order;
            long long expected = m / std::gcd(m, p);
            if (t.classes_[to->second].element_order != expected)
                fail(origin, lineno, "power map order inconsistency: class '" + tok[2] + "' order " +
                                         std::to_string(m) + " to the " + std::to_string(p) +
                                         " maps to order " +
                                         std::to_string(t.classes_[to->second].element_order) +
                                         ", expected " + std::to_string(expected));
        } else if (kw == "char") {
            if (tok.size() < 3) fail(origin, lineno, "char line needs: char <name> <degree> <values...>");
            Character c;
            c.name = tok[1];
            c.degree = BigInt::from_string(tok[2]);
            if (c.degree <= BigInt(0)) fail(origin, lineno, "character degree must be positive");
            if (tok.size() - 3 != t.classes_.size())
                fail(origin, lineno, "character '" + c.name + "' has " +
                                         std::to_string(tok.size() - 3) + " values for " +
                                         std::to_string(t.classes_.size()) + " classes");
            for (size_t i = 3; i < tok.size(); ++i) {
                if (tok[i].find_first_not_of("+-0123456789") != std::string::npos)
                    fail(origin, lineno, "non-integer character value '" + tok[i] +
                                             "' (cyclotomic values are not supported)");
                c.values.push_back(BigInt::from_string(tok[i]));
            }
            if (!t.char_index_.emplace(c.name, static_cast<int>(t.characters_.size())).second)
                fail(origin, lineno, "duplicate character '" + c.name + "'");
            t.characters_.push_back(std::move(c));
        } else if (kw == "orbit") {
            if (tok.size() != 3) fail(origin, lineno, "orbit line needs: orbit <char> <count>");
            auto it = t.char_index_.find(tok[1]);
            if (it == t.char_index_.end()) fail(origin, lineno, "orbit names an unknown character");
            long long n = std::stoll(tok[2]);
            if (n < 1) fail(origin, lineno, "orbit count must be positive");
            t.characters_[it->second].orbit = n;
        } else if (kw == "alias") {
            if (tok.size() != 3) fail(origin, lineno, "alias line needs: alias <token> <class>");
            if (t.class_index_.find(tok[2]) == t.class_index_.end())
                fail(origin, lineno, "alias targets an unknown class");
            t.aliases_[tok[1]] = tok[2];
        } else {
            fail(origin, lineno, "unknown directive '" + kw + "'");
        }
    }
    t.validate(origin);
    return t;
}

void CharacterTable::validate(const std::string& origin) {
    if (group_order_.is_zero()) fail(origin, 0, "missing group line");
    if (classes_.empty()) fail(origin, 0, "no classes declared");

    int identity_count = 0;
    for (const auto& c : classes_) {
        if (c.element_order == 1) {
            ++identity_count;
            if (c.size != BigInt(1)) fail(origin, 0, "identity class must have size 1");
        }
        if (c.size.is_zero() && !partial_)
            fail(origin, 0, "class '" + c.name + "' has unknown size in a complete table");
    }
    if (identity_count != 1) fail(origin, 0, "exactly one identity class required");

    // each known size divides the group order (a Galois-fused class is a
    // union of equal-size classes, so the check only applies to unfused
    // tables); complete tables must tile the order either way
    bool fused = false;
    for (const auto& chi : characters_)
        if (chi.orbit > 1) fused = true;
    BigInt size_sum(0);
    for (const auto& c : classes_) {
        if (!fused && !c.size.is_zero() && !(group_order_ % c.size).is_zero())
            fail(origin, 0, "size of class '" + c.name + "' does not divide the group order");
        size_sum += c.size;
    }
    if (!partial_ && size_sum != group_order_)
        fail(origin, 0, "class sizes sum to " + size_sum.to_string() + ", group order is " +
                            group_order_.to_string());

    // power maps must cover every prime dividing any element order
    for (auto& [p, map] : power_maps_)
        if (map.size() < classes_.size()) map.resize(classes_.size(), -1);
    for (size_t ci = 0; ci < classes_.size(); ++ci) {
        long long m = classes_[ci].element_order;
        for (long long p = 2; p <= m; ++p) {
            if (!is_prime_ll(p) || m % p) continue;
            auto it = power_maps_.find(p);
            if (it == power_maps_.end() || it->second[ci] < 0)
                fail(origin, 0, "missing power map: prime " + std::to_string(p) + " on class '" +
                                    classes_[ci].name + "'");
        }
    }

    for (const auto& chi : characters_) {
        int id_class = -1;
        for (size_t ci = 0; ci < classes_.size(); ++ci)
            if (classes_[ci].element_order == 1) id_class = static_cast<int>(ci);
        if (chi.values[id_class] != chi.degree)
            fail(origin, 0, "character '" + chi.name + "' does not take its degree at the identity");
        for (size_t ci = 0; ci < classes_.size(); ++ci) {
            BigInt avg;
            try {
                avg = burnside_fixed_dim(chi, static_cast<int>(ci));
            } catch (const std::logic_error& e) {
                fail(origin, 0, e.what());
            }
            if (avg < BigInt(0) || avg > chi.degree)
                fail(origin, 0, "character '" + chi.name + "': fixed dimension at class '" +
                                    classes_[ci].name + "' out of range");
        }
    }

    if (!partial_) {
        if (characters_.size() != classes_.size())
            fail(origin, 0, "complete table needs as many characters as classes (got " +
                                std::to_string(characters_.size()) + " and " +
                                std::to_string(classes_.size()) + ")");
        // orthogonality over the integer (Galois-orbit-summed) rows:
        // sum_c |c| chi(c) psi(c) = |G| * orbit(chi) * [chi == psi]
        for (size_t a = 0; a < characters_.size(); ++a) {
            for (size_t b = a; b < characters_.size(); ++b) {
                BigInt dot(0);
                for (size_t ci = 0; ci < classes_.size(); ++ci)
                    dot += classes_[ci].size * characters_[a].values[ci] * characters_[b].values[ci];
                BigInt expect = a == b ? group_order_ * BigInt(characters_[a].orbit) : BigInt(0);
                if (dot != expect)
                    fail(origin, 0, "row orthogonality fails for characters '" +
                                        characters_[a].name + "', '" + characters_[b].name + "'");
            }
        }
    }
}

int CharacterTable::class_index(const std::string& name) const {
    std::string resolved = name;
    auto alias = aliases_.find(name);
    if (alias != aliases_.end()) resolved = alias->second;
    auto it = class_index_.find(resolved);
    if (it == class_index_.end())
        throw std::invalid_argument("character table '" + group_name_ + "' has no class '" + name + "'");
    return it->second;
}

int CharacterTable::character_index(const std::string& name) const {
    auto it = char_index_.find(name);
    if (it == char_index_.end())
        throw std::invalid_argument("character table '" + group_name_ + "' has no character '" + name +
                                    "'");
    return it->second;
}

bool CharacterTable::is_trivial_character(const Character& chi) const {
    for (const BigInt& v : chi.values)
        if (v != BigInt(1)) return false;
    return true;
}

int CharacterTable::power_class(int ci, long long k) const {
    long long m = classes_[ci].element_order;
    k %= m;
    if (k < 0) k += m;
    if (k == 0) {
        for (size_t i = 0; i < classes_.size(); ++i)
            if (classes_[i].element_order == 1) return static_cast<int>(i);
    }
    // chi(g^k) = chi(g^gcd(k, m)) on integer-valued tables, and gcd(k, m)
    // factors into primes dividing m, where the power maps are total
    long long d = std::gcd(k, m);
    int cur = ci;
    for (long long p = 2; d > 1; ++p) {
        if (!is_prime_ll(p)) continue;
        while (d % p == 0) {
            auto it = power_maps_.find(p);
            if (it == power_maps_.end() || it->second[cur] < 0)
                throw std::logic_error("power map missing during evaluation");
            cur = it->second[cur];
            d /= p;
        }
    }
    return cur;
}

BigInt CharacterTable::burnside_fixed_dim(const Character& chi, int ci) const {
    long long m = classes_[ci].element_order;
    // (1/m) sum_{k mod m} chi(g^k) = (1/m) sum_{d | m} phi(m/d) chi(g^d)
    BigInt total(0);
    for (long long d = 1; d <= m; ++d) {
        if (m % d) continue;
        total += BigInt(euler_phi(m / d)) * chi.values[power_class(ci, d)];
    }
    BigInt q, r;
    BigInt::divmod(total, BigInt(m), q, r);
    if (!r.is_zero())
        throw std::logic_error("inconsistent character data: Burnside average of '" + chi.name +
                               "' at class '" + classes_[ci].name + "' is not an integer");
    return q;
}

BigInt CharacterTable::class_triple_count(const std::string& c1, const std::string& c2,
                                          const std::string& c3) const {
    if (partial_ || characters_.size() != classes_.size())
        throw std::invalid_argument("unsupported table: class_triple_count needs a complete table");
    int i1 = class_index(c1), i2 = class_index(c2), i3 = class_index(c3);
    // chi(z^-1) = chi(z) on integer-valued tables. Each table row is a
    // Galois-orbit sum psi of orbit(psi) complex irreducibles, contributing
    // psi(c1) psi(c2) psi(c3) / (orbit * psi(1)).
    BigRational sum(0);
    for (const auto& chi : characters_) {
        BigRational term{chi.values[i1] * chi.values[i2] * chi.values[i3]};
        term /= BigRational(chi.degree * BigInt(chi.orbit));
        sum += term;
    }
    BigRational count = BigRational(classes_[i1].size * classes_[i2].size) / BigRational(group_order_);
    count *= sum;
    if (!count.is_integer() || count < BigRational(0))
        throw std::logic_error("class_triple_count: structure constant " + count.to_string() +
                               " is not a non-negative integer (data defect)");
    return count.as_integer();
}

GenusReport class_genus(const CharacterTable& table, const ClassTuple& tuple) {
    if (tuple.classes.empty()) throw std::invalid_argument("class_genus: empty class list");
    const auto& chi = table.characters()[table.character_index(tuple.character)];
    if (table.is_trivial_character(chi))
        throw std::invalid_argument("class_genus: the trivial character is rejected");

    std::vector<long long> fixed;
    std::vector<std::string> resolved;
    for (const auto& name : tuple.classes) {
        int ci = table.class_index(name);
        resolved.push_back(table.classes()[ci].name);
        fixed.push_back(table.burnside_fixed_dim(chi, ci).to_int64());
    }

    GenusReport r = evaluate_genus(
        "character " + chi.name + " of " + table.group_name() + ", degree " + chi.degree.to_string(),
        chi.degree.to_int64(), 0, std::move(fixed));
    r.product_ok = true;
    r.product_note = "assumed per cited reference (class data cannot witness the product)";
    r.generates = true;
    r.generation_note = "assumed per cited reference (class data cannot witness generation)";
    std::string names;
    for (size_t i = 0; i < resolved.size(); ++i) names += (i ? ", " : "") + resolved[i];
    r.notes.push_back("classes resolved to (" + names + ")");
    return r;
}

}  // namespace genustool
