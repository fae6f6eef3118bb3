#include "genustool/root_system.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace genustool {

namespace {

// Cartan matrix C[i][j] = <alpha_i, alpha_j^vee>, Bourbaki numbering.
std::vector<std::vector<long long>> cartan_matrix(char type, int r) {
    std::vector<std::vector<long long>> c(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) c[i][i] = 2;
    auto chain_edge = [&](int i, int j) {  // single bond between vertices i, j
        c[i][j] = -1;
        c[j][i] = -1;
    };
    switch (type) {
        case 'A':
            for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
            break;
        case 'B':  // alpha_r short
            for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
            c[r - 2][r - 1] = -2;
            c[r - 1][r - 2] = -1;
            break;
        case 'C':  // alpha_r long
            for (int i = 0; i + 1 < r; ++i) chain_edge(i, i + 1);
            c[r - 2][r - 1] = -1;
            c[r - 1][r - 2] = -2;
            break;
        case 'D':
            for (int i = 0; i + 1 < r - 1; ++i) chain_edge(i, i + 1);
            chain_edge(r - 3, r - 1);
            break;
        case 'E':
            // chain 1-3-4-5-6(-7(-8)) with 2 attached to 4 (1-based labels)
            chain_edge(0, 2);
            chain_edge(2, 3);
            chain_edge(3, 4);
            chain_edge(4, 5);
            if (r >= 7) chain_edge(5, 6);
            if (r >= 8) chain_edge(6, 7);
            chain_edge(1, 3);
            break;
        case 'F':
            chain_edge(0, 1);
            chain_edge(2, 3);
            c[1][2] = -2;
            c[2][1] = -1;
            break;
        case 'G':
            c[0][1] = -1;
            c[1][0] = -3;
            break;
        default:
            throw std::invalid_argument("RootSystem: unknown type");
    }
    return c;
}

size_t expected_root_count(char type, int r) {
    switch (type) {
        case 'A': return static_cast<size_t>(r) * (r + 1);
        case 'B':
        case 'C': return 2 * static_cast<size_t>(r) * r;
        case 'D': return 2 * static_cast<size_t>(r) * (r - 1);
        case 'E': return r == 6 ? 72 : r == 7 ? 126 : 240;
        case 'F': return 48;
        case 'G': return 12;
    }
    return 0;
}

}  // namespace

RootSystem RootSystem::build(char type, int rank) {
    type = static_cast<char>(std::toupper(static_cast<unsigned char>(type)));
    bool valid = (type == 'A' && rank >= 1) || (type == 'B' && rank >= 2) ||
                 (type == 'C' && rank >= 3) || (type == 'D' && rank >= 4) ||
                 (type == 'E' && rank >= 6 && rank <= 8) || (type == 'F' && rank == 4) ||
                 (type == 'G' && rank == 2);
    if (!valid) throw std::invalid_argument("RootSystem: invalid (type, rank) pair");

    RootSystem rs;
    rs.type_ = type;
    rs.rank_ = rank;
    rs.cartan_ = cartan_matrix(type, rank);
    for (int i = 0; i < rank; ++i)
        for (int j = i + 1; j < rank; ++j)
            if (rs.cartan_[i][j] != 0) rs.edges_.emplace_back(i, j);

    // reflection matrices in the simple-root basis: s_j sends alpha_i to
    // alpha_i - C[i][j] alpha_j, so only row j differs from the identity
    for (int j = 0; j < rank; ++j) {
        RationalMatrix m = RationalMatrix::identity(rank);
        for (int i = 0; i < rank; ++i)
            m.at(j, i) = BigRational(BigInt((i == j ? 1 : 0) - rs.cartan_[i][j]));
        rs.reflection_matrices_.push_back(std::move(m));
    }

    // close the simple roots under the simple reflections
    auto reflect = [&](const std::vector<long long>& v, int j) {
        std::vector<long long> out = v;
        long long pairing = 0;
        for (int i = 0; i < rank; ++i) pairing += v[i] * rs.cartan_[i][j];
        out[j] -= pairing;
        return out;
    };
    std::map<std::vector<long long>, int> index;
    for (int i = 0; i < rank; ++i) {
        std::vector<long long> simple(rank, 0);
        simple[i] = 1;
        index.emplace(std::move(simple), 0);
    }
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<long long>> current;
        for (const auto& [v, _] : index) current.push_back(v);
        for (const auto& v : current)
            for (int j = 0; j < rank; ++j)
                if (index.emplace(reflect(v, j), 0).second) grew = true;
    }
    rs.roots_.reserve(index.size());
    int pos = 0;
    for (auto& [v, idx] : index) {
        idx = pos++;
        rs.roots_.push_back(v);
    }
    if (rs.roots_.size() != expected_root_count(type, rank))
        throw std::logic_error("RootSystem: root closure has unexpected size");

    for (int j = 0; j < rank; ++j) {
        std::vector<int> images(rs.roots_.size());
        for (size_t k = 0; k < rs.roots_.size(); ++k) {
            auto it = index.find(reflect(rs.roots_[k], j));
            if (it == index.end()) throw std::logic_error("RootSystem: reflection left the root set");
            images[k] = it->second;
        }
        rs.reflection_perms_.push_back(Permutation::from_images(std::move(images)));
    }

    rs.weyl_group_ = std::make_shared<PermutationGroup>(
        PermutationGroup::from_generators(rs.reflection_perms_));
    return rs;
}

RootSystem RootSystem::build(const std::string& label) {
    if (label.size() < 2) throw std::invalid_argument("RootSystem: bad label '" + label + "'");
    int rank = 0;
    try {
        rank = std::stoi(label.substr(1));
    } catch (const std::exception&) {
        throw std::invalid_argument("RootSystem: bad label '" + label + "'");
    }
    return build(label[0], rank);
}

std::string RootSystem::label() const { return std::string(1, type_) + std::to_string(rank_); }

BigInt RootSystem::classical_weyl_order() const {
    auto factorial = [](int n) {
        BigInt f(1);
        for (int i = 2; i <= n; ++i) f *= BigInt(i);
        return f;
    };
    switch (type_) {
        case 'A': return factorial(rank_ + 1);
        case 'B':
        case 'C': return BigInt::pow(BigInt(2), rank_) * factorial(rank_);
        case 'D': return BigInt::pow(BigInt(2), rank_ - 1) * factorial(rank_);
        case 'E': return rank_ == 6 ? BigInt(51840) : rank_ == 7 ? BigInt(2903040) : BigInt(696729600);
        case 'F': return BigInt(1152);
        case 'G': return BigInt(12);
    }
    throw std::logic_error("RootSystem: unknown type");
}

PathDecomposition path_decomposition(const RootSystem& rs) {
    const int r = rs.rank();
    if (r < 3) throw std::invalid_argument("path_decomposition: requires rank >= 3");

    std::vector<std::vector<int>> adj(r);
    for (auto [a, b] : rs.dynkin_edges()) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& v : adj) std::sort(v.begin(), v.end());

    int branch = -1;
    for (int v = 0; v < r; ++v)
        if (adj[v].size() == 3) branch = v;

    PathDecomposition out;
    if (branch < 0) {
        // the diagram is a path: walk it from its lowest-numbered endpoint
        int start = -1;
        for (int v = 0; v < r && start < 0; ++v)
            if (adj[v].size() == 1) start = v;
        std::vector<int> walk = {start};
        int prev = -1, cur = start;
        while (static_cast<int>(walk.size()) < r) {
            for (int nxt : adj[cur]) {
                if (nxt == prev) continue;
                walk.push_back(nxt);
                prev = cur;
                cur = nxt;
                break;
            }
        }
        out.path1 = {walk[0], walk[1]};
        out.path2.assign(walk.begin() + 1, walk.end());
        return out;
    }

    // three arms from the branch vertex, ordered by length then lowest label
    std::vector<std::vector<int>> arms;
    for (int first : adj[branch]) {
        std::vector<int> arm = {first};
        int prev = branch, cur = first;
        while (adj[cur].size() == 2) {
            int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
            arm.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        arms.push_back(std::move(arm));
    }
    std::sort(arms.begin(), arms.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a.front() < b.front();
    });

    out.path1.assign(arms[0].rbegin(), arms[0].rend());
    out.path1.push_back(branch);
    out.path1.insert(out.path1.end(), arms[1].begin(), arms[1].end());
    out.path2 = arms[2];
    out.path2.push_back(branch);
    return out;
}

GeneratingTuple WeylTuple::perm_tuple() const {
    GeneratingTuple t;
    for (const auto& e : entries) t.elements.push_back(e.perm);
    return t;
}

std::vector<MatrixTupleEntry> WeylTuple::matrix_tuple() const {
    std::vector<MatrixTupleEntry> t;
    for (const auto& e : entries) t.push_back(MatrixTupleEntry{e.matrix, e.perm});
    return t;
}

WeylTuple full_tuple(const RootSystem& rs) {
    WeylTuple t;
    auto push = [&](int i) {
        t.entries.push_back(WeylTupleEntry{rs.simple_reflection(i), rs.simple_reflection_perm(i),
                                           "s" + std::to_string(i + 1)});
    };
    for (int i = 0; i < rs.rank(); ++i) {
        push(i);
        push(i);
    }
    push(0);
    push(0);
    return t;
}

WeylTuple rotation_tuple(const RootSystem& rs) {
    PathDecomposition pd = path_decomposition(rs);
    // a one-vertex path would degenerate a coordinate to s*s = 1
    if (pd.path1.size() < 2 || pd.path2.size() < 2)
        throw std::logic_error("rotation_tuple: paths must have at least two vertices");
    WeylTuple t;
    auto push_pair = [&](int a, int b) {
        // "apply s_a, then s_b": with matrices acting on column vectors the
        // element's matrix is M_b * M_a, matching the left-to-right perms
        t.entries.push_back(WeylTupleEntry{
            rs.simple_reflection(b) * rs.simple_reflection(a),
            compose(rs.simple_reflection_perm(a), rs.simple_reflection_perm(b),
                    Convention::kLeftToRight),
            "s" + std::to_string(a + 1) + "*s" + std::to_string(b + 1)});
    };
    auto push_path = [&](const std::vector<int>& path) {
        for (size_t k = 0; k + 1 < path.size(); ++k) push_pair(path[k], path[k + 1]);
        push_pair(path.back(), path.front());
    };
    push_path(pd.path1);
    push_path(pd.path2);
    return t;
}

GenusReport weyl_genus(const RootSystem& rs, const WeylTuple& t, const BigInt& expected_order) {
    std::vector<RationalMatrix> gens;
    for (int i = 0; i < rs.rank(); ++i) gens.push_back(rs.simple_reflection(i));
    MatrixRep rep(std::move(gens), rs.weyl_group());
    GenusReport r = genus_of_tuple(rep, t.matrix_tuple(), &expected_order);
    r.rep_description = "reflection representation of W(" + rs.label() + "), dim " +
                        std::to_string(rs.rank());
    return r;
}

RotationReport verify_rotation_subgroup(const RootSystem& rs, const WeylTuple& t) {
    RotationReport out;
    out.weyl_order = rs.weyl_group()->order();

    std::vector<Permutation> perms;
    for (const auto& e : t.entries) perms.push_back(e.perm);
    PermutationGroup sub = PermutationGroup::from_generators(perms);
    out.subgroup_order = sub.order();
    out.index_two_ok = out.subgroup_order * BigInt(2) == out.weyl_order;
    if (!out.index_two_ok)
        out.witnesses.push_back("subgroup order " + out.subgroup_order.to_string() +
                                " is not |W|/2 = " + (out.weyl_order / BigInt(2)).to_string());

    out.determinants_ok = true;
    for (const auto& e : t.entries) {
        BigRational det = e.matrix.determinant();
        if (det != BigRational(1)) {
            out.determinants_ok = false;
            out.witnesses.push_back("entry " + e.word + " has determinant " + det.to_string());
        }
    }

    out.genus = weyl_genus(rs, t, out.weyl_order / BigInt(2));
    return out;
}

}  // namespace genustool
