#pragma once

#include <random>
#include <vector>

#include "genustool/bigint.hpp"
#include "genustool/perm.hpp"

namespace genustool {

// Permutation group with a base and strong generating set built by a
// deterministic Schreier-Sims. Immutable once built; order and membership
// queries are exact and safe to call concurrently.
class PermutationGroup {
public:
    // `seed` is accepted for interface stability; the construction is
    // deterministic and does not consume randomness.
    static PermutationGroup from_generators(std::vector<Permutation> generators, uint64_t seed = 0);

    int degree() const { return degree_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const std::vector<int>& base() const { return base_; }
    const std::vector<Permutation>& strong_generators() const { return strong_generators_; }
    const BigInt& order() const { return order_; }

    bool contains(const Permutation& p) const;
    bool is_transitive() const;

    // Exactly uniform over the group: one transversal element per level.
    Permutation random_element(std::mt19937_64& rng) const;

private:
    struct Level {
        int base_point = 0;
        std::vector<Permutation> gens;
        std::vector<int> orbit;             // discovery order, orbit[0] == base_point
        std::vector<int> orbit_pos;         // point -> index into orbit, or -1
        std::vector<Permutation> transversal;  // transversal[i] maps base_point -> orbit[i]
    };

    int degree_ = 0;
    std::vector<Permutation> generators_;
    std::vector<int> base_;
    std::vector<Permutation> strong_generators_;
    std::vector<Level> levels_;
    BigInt order_ = BigInt(1);

    void add_level(int base_point);
    void add_generator(size_t level, const Permutation& g);
    void process_level(size_t level);
    // Applies pair (orbit index, gen index): extends the orbit or yields a
    // Schreier generator to sift.
    void process_pair(size_t level, size_t orbit_index, size_t gen_index);
    // Returns the first level whose sift residue is non-trivial, extending
    // the chain as needed; identity residues return false.
    bool sift_and_extend(size_t from_level, Permutation g);

    std::vector<std::vector<std::pair<size_t, size_t>>> pending_;
};

// Closure of the generators by repeated multiplication; for small groups and
// test oracles only.
std::vector<Permutation> brute_force_elements(const std::vector<Permutation>& generators,
                                              size_t limit = 100000);

}  // namespace genustool
