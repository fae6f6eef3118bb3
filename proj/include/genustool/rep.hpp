#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "genustool/matrix.hpp"
#include "genustool/perm.hpp"
#include "genustool/perm_group.hpp"

namespace genustool {

// Transcript of one genus computation. Verification failures are report
// fields with witnesses, never exceptions: exposing bad data is the point.
struct GenusReport {
    std::string rep_description;
    size_t n = 0;
    long long dim_v = 0;
    long long dim_v_g = 0;  // dim V^G
    std::vector<long long> fixed_dims;

    long long lhs = 0;  // -2 dim V + 2 dim V^G + sum_i (dim V - dim V^{g_i})
    bool parity_ok = false;
    std::optional<long long> genus;  // lhs/2, present iff parity_ok

    bool product_ok = false;
    std::string product_note;
    bool generates = false;
    std::string generation_note;

    bool scott_ok = false;
    long long scott_slack = 0;  // equals lhs

    std::vector<std::string> notes;
    std::vector<std::string> witnesses;

    bool all_ok() const { return product_ok && generates && parity_ok && scott_ok; }
};

// Computes lhs / parity / genus / Scott slack from already-established data.
GenusReport evaluate_genus(std::string rep_description, long long dim_v, long long dim_v_g,
                           std::vector<long long> fixed_dims);

// V = deleted permutation module of a transitive group: dim = degree - 1,
// dim V^G = 0, dim V^g = cycle_count(g) - 1.
class DeletedPermRep {
public:
    explicit DeletedPermRep(std::shared_ptr<const PermutationGroup> group);

    const PermutationGroup& group() const { return *group_; }
    long long dim() const { return group_->degree() - 1; }
    long long invariant_dim() const { return 0; }
    long long fixed_dim(const Permutation& g) const { return g.cycle_count() - 1; }

private:
    std::shared_ptr<const PermutationGroup> group_;
};

// V given by exact rational matrices for each generator. An optional
// permutation shadow (a faithful action with aligned generators) enables
// generation checks; without it, generation is reported as assumed.
class MatrixRep {
public:
    MatrixRep(std::vector<RationalMatrix> generator_images,
              std::shared_ptr<const PermutationGroup> shadow = nullptr);

    long long dim() const { return static_cast<long long>(dim_); }
    long long invariant_dim() const { return invariant_dim_; }  // common kernel of rho(gen) - I
    long long fixed_dim(const RationalMatrix& g) const;
    const std::vector<RationalMatrix>& generator_images() const { return generator_images_; }
    const PermutationGroup* shadow() const { return shadow_.get(); }

private:
    std::vector<RationalMatrix> generator_images_;
    std::shared_ptr<const PermutationGroup> shadow_;
    size_t dim_ = 0;
    long long invariant_dim_ = 0;
};

// Common kernel dimension of {m - I : m in mats}.
long long common_fixed_dim(const std::vector<RationalMatrix>& mats);

// Tuple whose entries carry an exact matrix and optionally a shadow
// permutation in the same group action as the rep's shadow.
struct MatrixTupleEntry {
    RationalMatrix matrix;
    std::optional<Permutation> shadow;
};

GenusReport genus_of_tuple(const DeletedPermRep& rep, const GeneratingTuple& t);
// expected_order: order the generated group must hit (|G| of the intended
// triple); defaults to the rep shadow group's order.
GenusReport genus_of_tuple(const MatrixRep& rep, const std::vector<MatrixTupleEntry>& t,
                           const BigInt* expected_order = nullptr);

struct ScottCheck {
    bool ok = false;
    long long slack = 0;
    bool generates = true;
    std::string warning;
};

ScottCheck scott_check(const DeletedPermRep& rep, const GeneratingTuple& t);

struct SearchOptions {
    size_t tuple_length = 3;
    long long target_genus = 1;
    // optional per-entry cycle type constraint (sorted descending lengths)
    std::vector<std::optional<std::vector<int>>> cycle_constraints;
    uint64_t seed = 1;
    size_t budget = 10000;  // sampling attempts
};

struct SearchHit {
    GeneratingTuple tuple;
    GenusReport report;
    std::string fingerprint;  // cycle-type multiset + genus data
};

// Samples g_1..g_{n-1}, closes with the product inverse, keeps generating
// tuples of the target genus; deterministic per seed; results deduplicated
// by fingerprint.
std::vector<SearchHit> search_tuples(const DeletedPermRep& rep, const SearchOptions& options);

}  // namespace genustool
