#pragma once

#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "genustool/matrix.hpp"
#include "genustool/perm.hpp"
#include "genustool/perm_group.hpp"
#include "genustool/rep.hpp"

namespace genustool {

// Irreducible root system with its Weyl group realized two ways: exact
// reflection matrices in the simple-root basis (so dim V = rank for every
// type) and permutations of the full root list. Vertex numbering follows
// Bourbaki, documented in the README.
class RootSystem {
public:
    // Valid pairs: A_r r>=1, B_r r>=2, C_r r>=3, D_r r>=4, E6/E7/E8, F4, G2.
    // B and C share a Weyl group; both labels are accepted.
    static RootSystem build(char type, int rank);
    static RootSystem build(const std::string& label);  // e.g. "E8", "a5"

    char type() const { return type_; }
    int rank() const { return rank_; }
    std::string label() const;

    const std::vector<std::vector<long long>>& cartan() const { return cartan_; }
    const std::vector<std::pair<int, int>>& dynkin_edges() const { return edges_; }

    // roots in simple-root coordinates
    const std::vector<std::vector<long long>>& roots() const { return roots_; }
    size_t root_count() const { return roots_.size(); }

    const RationalMatrix& simple_reflection(int i) const { return reflection_matrices_[i]; }
    const Permutation& simple_reflection_perm(int i) const { return reflection_perms_[i]; }

    // Weyl group as permutations of the root list, with BSGS.
    std::shared_ptr<const PermutationGroup> weyl_group() const { return weyl_group_; }
    BigInt classical_weyl_order() const;

private:
    char type_ = 'A';
    int rank_ = 0;
    std::vector<std::vector<long long>> cartan_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<long long>> roots_;
    std::vector<RationalMatrix> reflection_matrices_;
    std::vector<Permutation> reflection_perms_;
    std::shared_ptr<const PermutationGroup> weyl_group_;
};

// Two paths covering the Dynkin diagram, meeting in exactly one vertex,
// with |path1| + |path2| = rank + 1. Vertices are 0-based.
struct PathDecomposition {
    std::vector<int> path1;
    std::vector<int> path2;
};

// Canonical decomposition (rank >= 3): a path diagram splits at its second
// vertex; a branched diagram takes longest arm + branch + second arm, and
// third arm + branch. Deterministic for the fixed vertex numbering.
PathDecomposition path_decomposition(const RootSystem& rs);

struct WeylTupleEntry {
    RationalMatrix matrix;
    Permutation perm;
    std::string word;  // display form, e.g. "s1" or "s1*s2"
};

struct WeylTuple {
    std::vector<WeylTupleEntry> entries;

    GeneratingTuple perm_tuple() const;
    std::vector<MatrixTupleEntry> matrix_tuple() const;
};

// (s1, s1, s2, s2, ..., sr, sr, s1, s1), length 2r+2; genus 1 over the
// reflection representation and generates the full Weyl group.
WeylTuple full_tuple(const RootSystem& rs);

// The rotation tuple: consecutive products of simple reflections along the
// two paths, cyclically closed; r+1 entries with determinant +1 each.
WeylTuple rotation_tuple(const RootSystem& rs);

// Genus report over the reflection representation; fixed spaces by the
// kernel method, generation by BSGS order against expected_order.
GenusReport weyl_genus(const RootSystem& rs, const WeylTuple& t, const BigInt& expected_order);

struct RotationReport {
    BigInt subgroup_order;
    BigInt weyl_order;
    bool index_two_ok = false;
    bool determinants_ok = false;
    std::vector<std::string> witnesses;
    GenusReport genus;

    bool all_ok() const { return index_two_ok && determinants_ok && genus.all_ok(); }
};

// Certifies <tuple> = ker(det): BSGS order |W|/2 and every entry of
// determinant +1.
RotationReport verify_rotation_subgroup(const RootSystem& rs, const WeylTuple& t);

}  // namespace genustool
