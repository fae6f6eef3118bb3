#include "genustool/perm_group.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

namespace genustool {

namespace {
// Internal composition: apply a first, then b.
Permutation mult(const Permutation& a, const Permutation& b) {
    return compose(a, b, Convention::kLeftToRight);
}

int first_moved_point(const Permutation& p) {
    for (int i = 0; i < p.degree(); ++i)
        if (p.image(i) != i) return i;
    return -1;
}
}  // namespace

PermutationGroup PermutationGroup::from_generators(std::vector<Permutation> generators, uint64_t) {
    if (generators.empty()) throw std::invalid_argument("PermutationGroup: generator list is empty");
    const int degree = generators.front().degree();
    for (const auto& g : generators)
        if (g.degree() != degree) throw std::invalid_argument("PermutationGroup: generator degrees differ");

    PermutationGroup group;
    group.degree_ = degree;
    group.generators_ = std::move(generators);

    for (const auto& g : group.generators_) {
        if (g.is_identity()) continue;
        if (group.levels_.empty()) group.add_level(first_moved_point(g));
        group.add_generator(0, g);
        group.process_level(0);
    }

    group.order_ = BigInt(1);
    for (const auto& level : group.levels_) {
        group.order_ *= BigInt(static_cast<long long>(level.orbit.size()));
        group.base_.push_back(level.base_point);
        for (const auto& g : level.gens) {
            if (std::find(group.strong_generators_.begin(), group.strong_generators_.end(), g) ==
                group.strong_generators_.end())
                group.strong_generators_.push_back(g);
        }
    }
    return group;
}

void PermutationGroup::add_level(int base_point) {
    Level level;
    level.base_point = base_point;
    level.orbit = {base_point};
    level.orbit_pos.assign(degree_, -1);
    level.orbit_pos[base_point] = 0;
    level.transversal = {Permutation(degree_)};
    levels_.push_back(std::move(level));
    pending_.emplace_back();
}

void PermutationGroup::add_generator(size_t li, const Permutation& g) {
    Level& level = levels_[li];
    level.gens.push_back(g);
    const size_t gi = level.gens.size() - 1;
    for (size_t oi = 0; oi < level.orbit.size(); ++oi) pending_[li].emplace_back(oi, gi);
}

void PermutationGroup::process_pair(size_t li, size_t orbit_index, size_t gen_index) {
    Level& level = levels_[li];
    const Permutation& s = level.gens[gen_index];
    const int beta = level.orbit[orbit_index];
    const int gamma = s.image(beta);
    if (level.orbit_pos[gamma] < 0) {
        // new orbit point; its transversal element makes the Schreier
        // generator for this pair trivial by construction
        level.orbit_pos[gamma] = static_cast<int>(level.orbit.size());
        level.orbit.push_back(gamma);
        level.transversal.push_back(mult(level.transversal[orbit_index], s));
        const size_t oi = level.orbit.size() - 1;
        for (size_t gi = 0; gi < level.gens.size(); ++gi) pending_[li].emplace_back(oi, gi);
        return;
    }
    Permutation schreier = mult(mult(level.transversal[orbit_index], s),
                                level.transversal[level.orbit_pos[gamma]].inverse());
    if (!schreier.is_identity()) sift_and_extend(li + 1, std::move(schreier));
}

bool PermutationGroup::sift_and_extend(size_t from_level, Permutation g) {
    size_t li = from_level;
    for (; li < levels_.size(); ++li) {
        const Level& level = levels_[li];
        const int image = g.image(level.base_point);
        if (level.orbit_pos[image] < 0) break;
        g = mult(g, level.transversal[level.orbit_pos[image]].inverse());
        if (g.is_identity()) return false;
    }
    if (li == levels_.size()) add_level(first_moved_point(g));
    // the residue fixes the base points of every level in [from_level, li),
    // so it joins each of those generator lists, keeping them nested
    for (size_t j = from_level; j <= li; ++j) add_generator(j, g);
    for (size_t j = from_level; j <= li; ++j) process_level(j);
    return true;
}

void PermutationGroup::process_level(size_t li) {
    while (!pending_[li].empty()) {
        auto [oi, gi] = pending_[li].front();
        pending_[li].erase(pending_[li].begin());
        process_pair(li, oi, gi);
    }
}

bool PermutationGroup::contains(const Permutation& p) const {
    if (p.degree() != degree_) return false;
    Permutation g = p;
    for (const Level& level : levels_) {
        if (g.is_identity()) return true;
        const int image = g.image(level.base_point);
        if (level.orbit_pos[image] < 0) return false;
        g = mult(g, level.transversal[level.orbit_pos[image]].inverse());
    }
    return g.is_identity();
}

bool PermutationGroup::is_transitive() const {
    std::vector<bool> seen(degree_, false);
    std::vector<int> stack = {0};
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (const auto& g : generators_) {
            int y = g.image(x);
            if (!seen[y]) {
                seen[y] = true;
                ++count;
                stack.push_back(y);
            }
        }
    }
    return count == degree_;
}

namespace {
// unbiased and independent of the standard library's distribution details
size_t uniform_below(std::mt19937_64& rng, size_t n) {
    const uint64_t limit = std::numeric_limits<uint64_t>::max() / n * n;
    uint64_t draw;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<size_t>(draw % n);
}
}  // namespace

Permutation PermutationGroup::random_element(std::mt19937_64& rng) const {
    Permutation out(degree_);
    for (size_t li = levels_.size(); li-- > 0;) {
        const Level& level = levels_[li];
        out = mult(out, level.transversal[uniform_below(rng, level.orbit.size())]);
    }
    return out;
}

std::vector<Permutation> brute_force_elements(const std::vector<Permutation>& generators, size_t limit) {
    if (generators.empty()) return {};
    std::set<std::vector<int>> seen;
    std::vector<Permutation> elements;
    std::vector<Permutation> frontier = {Permutation(generators.front().degree())};
    seen.insert(frontier.front().images());
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier) {
            elements.push_back(e);
            if (elements.size() > limit) throw std::runtime_error("brute_force_elements: limit exceeded");
            for (const auto& g : generators) {
                Permutation h = mult(e, g);
                if (seen.insert(h.images()).second) next.push_back(std::move(h));
            }
        }
        frontier = std::move(next);
    }
    return elements;
}

}  // namespace genustool
