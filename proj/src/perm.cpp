#include "genustool/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace genustool {

std::string to_string(Convention c) {
    return c == Convention::kLeftToRight ? "left-to-right" : "right-to-left";
}

Permutation::Permutation(int degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 0);
}

Permutation Permutation::from_images(std::vector<int> images) {
    std::vector<bool> seen(images.size(), false);
    for (int v : images) {
        if (v < 0 || v >= static_cast<int>(images.size()) || seen[v])
            throw std::invalid_argument("Permutation: image array is not a bijection");
        seen[v] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i) return false;
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(images_.size());
    for (int i = 0; i < degree(); ++i) inv[images_[i]] = i;
    Permutation p;
    p.images_ = std::move(inv);
    return p;
}

int Permutation::cycle_count() const {
    int count = 0;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        ++count;
        for (int j = i; !seen[j]; j = images_[j]) seen[j] = true;
    }
    return count;
}

int Permutation::fixed_points() const {
    int count = 0;
    for (int i = 0; i < degree(); ++i)
        if (images_[i] == i) ++count;
    return count;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> lengths;
    std::vector<bool> seen(images_.size(), false);
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

std::string Permutation::cycle_type_string() const {
    std::ostringstream os;
    auto type = cycle_type();
    for (size_t i = 0; i < type.size(); ++i) {
        if (i) os << "+";
        os << type[i];
    }
    return os.str();
}

BigInt Permutation::order() const {
    BigInt ord(1);
    for (int len : cycle_type()) ord = BigInt::lcm(ord, BigInt(len));
    return ord;
}

Permutation Permutation::power(long long k) const {
    long long m = order().to_int64();  // lcm of cycle lengths; fits for degree <= 256
    k %= m;
    if (k < 0) k += m;
    Permutation result(degree());
    Permutation sq = *this;
    while (k) {
        if (k & 1) result = compose(result, sq, Convention::kLeftToRight);
        k >>= 1;
        if (k) sq = compose(sq, sq, Convention::kLeftToRight);
    }
    return result;
}

Permutation compose(const Permutation& a, const Permutation& b, Convention conv) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> images(a.degree());
    if (conv == Convention::kLeftToRight) {
        for (int x = 0; x < a.degree(); ++x) images[x] = b.image(a.image(x));
    } else {
        for (int x = 0; x < a.degree(); ++x) images[x] = a.image(b.image(x));
    }
    return Permutation::from_images(std::move(images));
}

Domain::Domain(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
    for (int i = 0; i < static_cast<int>(tokens_.size()); ++i) {
        if (tokens_[i].empty()) throw std::invalid_argument("Domain: empty token");
        if (!index_.emplace(tokens_[i], i).second)
            throw std::invalid_argument("Domain: duplicate token '" + tokens_[i] + "'");
    }
}

Domain Domain::numeric(int degree) {
    std::vector<std::string> tokens;
    tokens.reserve(degree);
    for (int i = 0; i < degree; ++i) tokens.push_back(std::to_string(i));
    return Domain(std::move(tokens));
}

std::optional<int> Domain::find(std::string_view token) const {
    auto it = index_.find(std::string(token));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

namespace {

bool is_separator(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == ',';
}

// Longest domain token starting at position i, or -1.
int match_token(std::string_view text, size_t i, const Domain& domain, size_t* consumed) {
    int best = -1;
    size_t best_len = 0;
    for (int t = 0; t < domain.degree(); ++t) {
        const std::string& tok = domain.token(t);
        if (tok.size() > best_len && text.substr(i, tok.size()) == tok) {
            best = t;
            best_len = tok.size();
        }
    }
    *consumed = best_len;
    return best;
}

}  // namespace

Permutation parse_cycles(std::string_view text, const Domain& domain) {
    std::vector<int> images(domain.degree());
    std::iota(images.begin(), images.end(), 0);
    std::vector<bool> used(domain.degree(), false);

    size_t i = 0;
    bool in_cycle = false;
    std::vector<int> cycle;

    auto close_cycle = [&]() {
        for (size_t k = 0; k < cycle.size(); ++k) images[cycle[k]] = cycle[(k + 1) % cycle.size()];
        cycle.clear();
    };

    while (i < text.size()) {
        char c = text[i];
        if (is_separator(c)) {
            ++i;
            continue;
        }
        if (c == '(') {
            if (in_cycle) throw ParseError("parse_cycles: '(' inside a cycle");
            in_cycle = true;
            ++i;
            continue;
        }
        if (c == ')') {
            if (!in_cycle) throw ParseError("parse_cycles: unbalanced ')'");
            in_cycle = false;
            close_cycle();
            ++i;
            continue;
        }
        if (!in_cycle) throw ParseError("parse_cycles: token outside parentheses");
        size_t consumed = 0;
        int point = match_token(text, i, domain, &consumed);
        if (point < 0)
            throw ParseError("parse_cycles: unknown token at '" + std::string(text.substr(i, 8)) + "'");
        if (used[point])
            throw ParseError("parse_cycles: token '" + domain.token(point) + "' repeated");
        used[point] = true;
        cycle.push_back(point);
        i += consumed;
    }
    if (in_cycle) throw ParseError("parse_cycles: unbalanced '('");
    return Permutation::from_images(std::move(images));
}

std::string print_cycles(const Permutation& p, const Domain& domain) {
    if (p.degree() != domain.degree())
        throw std::invalid_argument("print_cycles: domain size does not match degree");
    bool multi_char = false;
    for (const auto& t : domain.tokens())
        if (t.size() > 1) multi_char = true;

    std::ostringstream os;
    std::vector<bool> seen(p.degree(), false);
    bool any = false;
    for (int i = 0; i < p.degree(); ++i) {
        if (seen[i] || p.image(i) == i) {
            seen[i] = true;
            continue;
        }
        any = true;
        os << "(";
        bool first = true;
        for (int j = i; !seen[j]; j = p.image(j)) {
            seen[j] = true;
            if (!first && multi_char) os << " ";
            os << domain.token(j);
            first = false;
        }
        os << ")";
    }
    if (!any) return "()";
    return os.str();
}

Permutation tuple_product(const std::vector<Permutation>& t, Convention conv) {
    if (t.empty()) throw std::invalid_argument("tuple_product: empty tuple");
    Permutation prod(t.front().degree());
    for (const Permutation& p : t) prod = compose(prod, p, conv);
    return prod;
}

ProductCheck tuple_product_check(const GeneratingTuple& t) {
    ProductCheck out;
    if (t.elements.empty()) return out;
    Permutation lr = tuple_product(t.elements, Convention::kLeftToRight);
    Permutation rl = tuple_product(t.elements, Convention::kRightToLeft);
    out.left_to_right = lr.is_identity();
    out.right_to_left = rl.is_identity();
    out.holds = out.left_to_right || out.right_to_left;
    if (!out.holds) out.residual = lr;
    return out;
}

Permutation diagnose_product(const GeneratingTuple& t, size_t broken_index, Convention conv) {
    if (broken_index >= t.elements.size())
        throw std::out_of_range("diagnose_product: index out of range");
    // product-one forces t_i = (t_{i+1} ... t_n t_1 ... t_{i-1})^{-1}
    std::vector<Permutation> rest;
    for (size_t k = 1; k < t.elements.size(); ++k)
        rest.push_back(t.elements[(broken_index + k) % t.elements.size()]);
    if (rest.empty()) return Permutation(t.degree());
    return tuple_product(rest, conv).inverse();
}

}  // namespace genustool
