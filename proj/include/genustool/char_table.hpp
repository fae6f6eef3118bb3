#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genustool/bigint.hpp"
#include "genustool/rational.hpp"
#include "genustool/rep.hpp"

namespace genustool {

// Character table over conjugacy-class data, parsed from the line format
//   group <name> <order>
//   partial                       (optional; marks an incomplete table)
//   class <name> <elt-order> <size>      (size 0 = unknown, partial only)
//   power <prime> <class> <class>
//   char <name> <degree> <v1> <v2> ...   (integers, class order)
//   orbit <char> <count>          (char is a sum of <count> Galois-conjugate
//                                  complex irreducibles; default 1)
//   alias <token> <class>
//   # comment
// Values are restricted to rational integers; anything cyclotomic is
// rejected at parse time. All structural invariants are validated and
// violations are hard errors with line numbers.
class CharacterTable {
public:
    struct ConjClass {
        std::string name;
        long long element_order = 1;
        BigInt size;  // 0 = unknown (allowed only in partial tables)
    };

    struct Character {
        std::string name;
        BigInt degree;
        std::vector<BigInt> values;  // one per class, declaration order
        long long orbit = 1;         // number of complex constituents
    };

    static CharacterTable parse_file(const std::string& path);
    static CharacterTable parse_stream(std::istream& in, const std::string& origin);

    const std::string& group_name() const { return group_name_; }
    const BigInt& group_order() const { return group_order_; }
    bool partial() const { return partial_; }
    bool complete() const { return !partial_; }

    const std::vector<ConjClass>& classes() const { return classes_; }
    const std::vector<Character>& characters() const { return characters_; }

    // resolves aliases (e.g. "-13A") to a class index
    int class_index(const std::string& name) const;
    int character_index(const std::string& name) const;
    bool is_trivial_character(const Character& chi) const;

    // class of g^k for g in class ci, via the power maps; valid because
    // integer-valued characters are constant on rational classes
    int power_class(int ci, long long k) const;

    // (1/ord g) sum_k chi(g^k): dim of the fixed space of g on the module
    // with character chi; must be a non-negative integer <= degree
    BigInt burnside_fixed_dim(const Character& chi, int ci) const;

    // Count of pairs (x, y) in C1 x C2 with x*y*z = 1 for a fixed z in C3.
    // Requires a complete integer table; the classical structure-constant
    // sum, with each Galois-orbit sum weighted by 1/orbit.
    BigInt class_triple_count(const std::string& c1, const std::string& c2,
                              const std::string& c3) const;

private:
    std::string group_name_;
    BigInt group_order_;
    bool partial_ = false;
    std::vector<ConjClass> classes_;
    std::map<std::string, int> class_index_;
    std::map<long long, std::vector<int>> power_maps_;  // prime -> per-class image (-1 unknown)
    std::vector<Character> characters_;
    std::map<std::string, int> char_index_;
    std::map<std::string, std::string> aliases_;

    void validate(const std::string& origin);
};

struct ClassTuple {
    std::string character;
    std::vector<std::string> classes;  // names, aliases allowed
};

// Genus of a class tuple over the named character: fixed dimensions by
// Burnside averaging through the power maps, dim V^G = 0 (the character must
// be non-trivial), generation and product-one assumed per the cited source.
GenusReport class_genus(const CharacterTable& table, const ClassTuple& tuple);

}  // namespace genustool
