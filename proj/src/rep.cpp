#include "genustool/rep.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace genustool {

GenusReport evaluate_genus(std::string rep_description, long long dim_v, long long dim_v_g,
                           std::vector<long long> fixed_dims) {
    GenusReport r;
    r.rep_description = std::move(rep_description);
    r.n = fixed_dims.size();
    r.dim_v = dim_v;
    r.dim_v_g = dim_v_g;
    r.fixed_dims = std::move(fixed_dims);

    r.lhs = -2 * dim_v + 2 * dim_v_g;
    for (long long f : r.fixed_dims) r.lhs += dim_v - f;

    r.parity_ok = (r.lhs % 2) == 0;
    if (r.parity_ok) {
        r.genus = r.lhs / 2;
    } else {
        std::ostringstream w;
        w << "parity violation: lhs " << r.lhs << " is odd, no integer genus exists";
        r.witnesses.push_back(w.str());
    }

    r.scott_slack = r.lhs;
    r.scott_ok = r.lhs >= 0;
    if (!r.scott_ok) {
        std::ostringstream w;
        w << "Scott inequality violated: slack " << r.scott_slack << " < 0";
        r.witnesses.push_back(w.str());
    }
    return r;
}

DeletedPermRep::DeletedPermRep(std::shared_ptr<const PermutationGroup> group) : group_(std::move(group)) {
    if (!group_) throw std::invalid_argument("DeletedPermRep: null group");
    if (!group_->is_transitive())
        throw std::invalid_argument(
            "DeletedPermRep: group is not transitive, so dim V^G != 0 and the deleted "
            "permutation module is rejected");
}

long long common_fixed_dim(const std::vector<RationalMatrix>& mats) {
    if (mats.empty()) throw std::invalid_argument("common_fixed_dim: no matrices");
    const size_t dim = mats.front().cols();
    RationalMatrix stacked(mats.size() * dim, dim);
    for (size_t k = 0; k < mats.size(); ++k) {
        const RationalMatrix& m = mats[k];
        if (m.rows() != dim || m.cols() != dim)
            throw std::invalid_argument("common_fixed_dim: dimension mismatch");
        for (size_t r = 0; r < dim; ++r)
            for (size_t c = 0; c < dim; ++c)
                stacked.at(k * dim + r, c) = m.at(r, c) - (r == c ? BigRational(1) : BigRational(0));
    }
    return static_cast<long long>(dim - stacked.rank());
}

MatrixRep::MatrixRep(std::vector<RationalMatrix> generator_images,
                     std::shared_ptr<const PermutationGroup> shadow)
    : generator_images_(std::move(generator_images)), shadow_(std::move(shadow)) {
    if (generator_images_.empty()) throw std::invalid_argument("MatrixRep: no generator images");
    dim_ = generator_images_.front().rows();
    for (const auto& m : generator_images_)
        if (m.rows() != dim_ || m.cols() != dim_)
            throw std::invalid_argument("MatrixRep: generator images must be square of equal size");
    if (shadow_ && shadow_->generators().size() != generator_images_.size())
        throw std::invalid_argument("MatrixRep: shadow generators are not aligned with matrices");
    invariant_dim_ = common_fixed_dim(generator_images_);
}

long long MatrixRep::fixed_dim(const RationalMatrix& g) const {
    if (g.rows() != dim_ || g.cols() != dim_)
        throw std::invalid_argument("MatrixRep: element dimension mismatch");
    return static_cast<long long>((g - RationalMatrix::identity(dim_)).kernel_dimension());
}

namespace {

void fill_product_status(GenusReport& r, const GeneratingTuple& t) {
    ProductCheck pc = tuple_product_check(t);
    r.product_ok = pc.holds;
    if (pc.left_to_right && pc.right_to_left) {
        r.product_note = "identity under both conventions";
    } else if (pc.holds) {
        r.product_note = "identity under " + to_string(*pc.detected()) + " composition";
    } else {
        r.product_note = "product is not the identity under either convention";
        r.witnesses.push_back("product residual (left-to-right) has cycle type " +
                              pc.residual.cycle_type_string());
    }
}

void fill_generation_status(GenusReport& r, const std::vector<Permutation>& elements,
                            const BigInt& expected_order) {
    PermutationGroup sub = PermutationGroup::from_generators(elements);
    if (sub.order() == expected_order) {
        r.generates = true;
        r.generation_note = "verified: generated order " + sub.order().to_string();
    } else {
        r.generates = false;
        r.generation_note = "generated order " + sub.order().to_string() + " != expected " +
                            expected_order.to_string();
        r.witnesses.push_back(r.generation_note);
    }
}

}  // namespace

GenusReport genus_of_tuple(const DeletedPermRep& rep, const GeneratingTuple& t) {
    if (t.elements.empty()) throw std::invalid_argument("genus_of_tuple: empty tuple");
    std::vector<long long> fixed;
    fixed.reserve(t.elements.size());
    for (const auto& g : t.elements) {
        if (g.degree() != rep.group().degree())
            throw std::invalid_argument("genus_of_tuple: tuple degree does not match the group");
        fixed.push_back(rep.fixed_dim(g));
    }
    GenusReport r = evaluate_genus("deleted permutation module, dim " + std::to_string(rep.dim()),
                                   rep.dim(), rep.invariant_dim(), std::move(fixed));
    fill_product_status(r, t);
    fill_generation_status(r, t.elements, rep.group().order());
    if (!r.generates && !r.scott_ok)
        r.witnesses.push_back("Scott slack is only claimed for generating tuples");
    return r;
}

GenusReport genus_of_tuple(const MatrixRep& rep, const std::vector<MatrixTupleEntry>& t,
                           const BigInt* expected_order) {
    if (t.empty()) throw std::invalid_argument("genus_of_tuple: empty tuple");
    std::vector<long long> fixed;
    std::vector<RationalMatrix> mats;
    for (const auto& e : t) {
        fixed.push_back(rep.fixed_dim(e.matrix));
        mats.push_back(e.matrix);
    }
    // G is the group generated by the tuple, so dim V^G is the common fixed
    // space of the tuple entries
    long long dim_v_g = common_fixed_dim(mats);
    GenusReport r = evaluate_genus("exact matrix representation, dim " + std::to_string(rep.dim()),
                                   rep.dim(), dim_v_g, std::move(fixed));

    // left-to-right tuple semantics: applying entries in order means
    // pre-multiplying the column-action matrices
    RationalMatrix prod = RationalMatrix::identity(rep.dim());
    for (const auto& e : t) prod = e.matrix * prod;
    r.product_ok = prod.is_identity();
    r.product_note = r.product_ok ? "matrix product is the identity" : "matrix product is not the identity";
    if (!r.product_ok) r.witnesses.push_back("matrix product differs from the identity");

    bool have_shadows = rep.shadow() && std::all_of(t.begin(), t.end(), [](const MatrixTupleEntry& e) {
        return e.shadow.has_value();
    });
    if (have_shadows) {
        std::vector<Permutation> perms;
        for (const auto& e : t) perms.push_back(*e.shadow);
        Permutation shadow_prod(perms.front().degree());
        for (const auto& p : perms) shadow_prod = compose(shadow_prod, p, Convention::kLeftToRight);
        if (shadow_prod.is_identity() != r.product_ok)
            r.witnesses.push_back("matrix and shadow permutation products disagree");
        fill_generation_status(r, perms, expected_order ? *expected_order : rep.shadow()->order());
    } else {
        r.generates = true;
        r.generation_note = "assumed: no faithful permutation shadow available";
    }
    return r;
}

ScottCheck scott_check(const DeletedPermRep& rep, const GeneratingTuple& t) {
    GenusReport r = genus_of_tuple(rep, t);
    ScottCheck out;
    out.slack = r.scott_slack;
    out.ok = r.scott_ok;
    out.generates = r.generates;
    if (!r.generates)
        out.warning = "tuple does not generate the group; Scott's inequality is only claimed for "
                      "generating tuples";
    return out;
}

namespace {

std::string tuple_fingerprint(const GeneratingTuple& t, const GenusReport& r) {
    std::vector<std::string> types;
    for (const auto& g : t.elements) types.push_back(g.cycle_type_string());
    std::sort(types.begin(), types.end());
    std::ostringstream os;
    for (const auto& s : types) os << s << "|";
    os << "lhs=" << r.lhs;
    return os.str();
}

}  // namespace

std::vector<SearchHit> search_tuples(const DeletedPermRep& rep, const SearchOptions& options) {
    if (options.tuple_length < 2) throw std::invalid_argument("search_tuples: n must be at least 2");
    if (options.budget == 0) throw std::invalid_argument("search_tuples: budget must be positive");
    if (!options.cycle_constraints.empty() && options.cycle_constraints.size() != options.tuple_length)
        throw std::invalid_argument("search_tuples: constraint list length mismatch");

    const PermutationGroup& group = rep.group();
    std::mt19937_64 rng(options.seed);

    // representatives for constrained entries, found by seeded sampling
    std::map<std::vector<int>, Permutation> reps_by_type;
    auto find_representative = [&](const std::vector<int>& type) -> const Permutation* {
        auto it = reps_by_type.find(type);
        if (it != reps_by_type.end()) return &it->second;
        for (int tries = 0; tries < 20000; ++tries) {
            Permutation g = group.random_element(rng);
            if (g.cycle_type() == type) return &reps_by_type.emplace(type, std::move(g)).first->second;
        }
        return nullptr;
    };

    std::vector<SearchHit> hits;
    std::set<std::string> seen;
    for (size_t attempt = 0; attempt < options.budget; ++attempt) {
        GeneratingTuple t;
        bool constrained_failed = false;
        for (size_t i = 0; i + 1 < options.tuple_length; ++i) {
            const auto* constraint =
                options.cycle_constraints.empty() ? nullptr : &options.cycle_constraints[i];
            if (constraint && constraint->has_value()) {
                const Permutation* repr = find_representative(**constraint);
                if (!repr) {
                    constrained_failed = true;
                    break;
                }
                Permutation c = group.random_element(rng);
                t.elements.push_back(
                    compose(compose(c.inverse(), *repr, Convention::kLeftToRight), c,
                            Convention::kLeftToRight));
            } else {
                t.elements.push_back(group.random_element(rng));
            }
        }
        if (constrained_failed) continue;
        t.elements.push_back(tuple_product(t.elements, Convention::kLeftToRight).inverse());
        if (!options.cycle_constraints.empty() && options.cycle_constraints.back().has_value() &&
            t.elements.back().cycle_type() != *options.cycle_constraints.back())
            continue;

        // cheap genus screen before the BSGS generation check
        std::vector<long long> fixed;
        for (const auto& g : t.elements) fixed.push_back(rep.fixed_dim(g));
        long long lhs = -2 * rep.dim();
        for (long long f : fixed) lhs += rep.dim() - f;
        if (lhs != 2 * options.target_genus) continue;

        GenusReport r = genus_of_tuple(rep, t);
        if (!r.generates || !r.genus || *r.genus != options.target_genus) continue;
        std::string fp = tuple_fingerprint(t, r);
        if (!seen.insert(fp).second) continue;
        hits.push_back(SearchHit{std::move(t), std::move(r), std::move(fp)});
    }
    return hits;
}

}  // namespace genustool
