#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "genustool/bigint.hpp"

namespace genustool {

// Order in which a product of permutations is applied to a point.
// kLeftToRight: (a*b)(x) = b(a(x)).  kRightToLeft: (a*b)(x) = a(b(x)).
enum class Convention { kLeftToRight, kRightToLeft };

std::string to_string(Convention c);

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what, int line = 0) : std::runtime_error(what), line(line) {}
    int line;
};

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(int degree);  // identity
    static Permutation from_images(std::vector<int> images);

    int degree() const { return static_cast<int>(images_.size()); }
    int image(int x) const { return images_[x]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const;
    Permutation inverse() const;

    int cycle_count() const;      // fixed points count as 1-cycles
    int fixed_points() const;
    BigInt order() const;         // lcm of cycle lengths
    std::vector<int> cycle_type() const;  // cycle lengths, longest first
    std::string cycle_type_string() const;

    Permutation power(long long k) const;

    bool operator==(const Permutation& rhs) const = default;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b, Convention conv);

// Display tokens for the points a permutation acts on, e.g. "0".."9","X"
// or "A".."X". Tokens must be pairwise distinct.
class Domain {
public:
    explicit Domain(std::vector<std::string> tokens);
    static Domain numeric(int degree);  // tokens "0", "1", ...

    int degree() const { return static_cast<int>(tokens_.size()); }
    const std::string& token(int i) const { return tokens_[i]; }
    const std::vector<std::string>& tokens() const { return tokens_; }
    std::optional<int> find(std::string_view token) const;

private:
    std::vector<std::string> tokens_;
    std::unordered_map<std::string, int> index_;
};

// Parses parenthesized cycle notation over the domain's tokens. Whitespace
// and commas are insignificant; unlisted tokens are fixed; "" and "()" give
// the identity. Tokens are matched greedily (longest first) so multi-char
// tokens need no separators when unambiguous.
Permutation parse_cycles(std::string_view text, const Domain& domain);

// Canonical cycle form: each cycle starts at its smallest point, cycles
// ordered by first point, fixed points omitted, identity printed as "()".
std::string print_cycles(const Permutation& p, const Domain& domain);

struct GeneratingTuple {
    std::vector<Permutation> elements;

    size_t size() const { return elements.size(); }
    int degree() const { return elements.empty() ? 0 : elements.front().degree(); }
};

struct ProductCheck {
    bool holds = false;
    bool left_to_right = false;
    bool right_to_left = false;
    // residual product when the check fails (left-to-right), for witnesses
    Permutation residual;

    std::optional<Convention> detected() const {
        if (left_to_right) return Convention::kLeftToRight;
        if (right_to_left) return Convention::kRightToLeft;
        return std::nullopt;
    }
};

Permutation tuple_product(const std::vector<Permutation>& t, Convention conv);

// Tries both conventions and reports which, if either, yields the identity.
ProductCheck tuple_product_check(const GeneratingTuple& t);

// For a product-one tuple, the value at `broken_index` forced by the other
// entries under `conv`: inverse of the product of the remaining elements in
// cyclic order.
Permutation diagnose_product(const GeneratingTuple& t, size_t broken_index,
                             Convention conv = Convention::kLeftToRight);

}  // namespace genustool
