#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <random>

#include "doctest.h"
#include "genustool/bundles.hpp"
#include "genustool/mathieu.hpp"
#include "genustool/rep.hpp"
#include "genustool/root_system.hpp"

using namespace genustool;

namespace {

std::shared_ptr<PermutationGroup> group_of(std::vector<Permutation> gens) {
    return std::make_shared<PermutationGroup>(PermutationGroup::from_generators(std::move(gens)));
}

Permutation cyc(const std::string& text, int degree) {
    return parse_cycles(text, Domain::numeric(degree));
}

}  // namespace

TEST_CASE("deleted permutation rep rejects intransitive groups") {
    CHECK_THROWS(DeletedPermRep(group_of({cyc("(0 1)", 4)})));
    DeletedPermRep rep(group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)}));
    CHECK(rep.dim() == 3);
    CHECK(rep.invariant_dim() == 0);
}

TEST_CASE("fixed_dim characteristic cases") {
    // identity on n points has fixed dim = dim V
    DeletedPermRep s4(group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)}));
    CHECK(s4.fixed_dim(Permutation(4)) == 3);

    // M11 chi2 (dim 10), 11-cycle -> 0
    Domain m11dom({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "X"});
    Permutation g1 = parse_cycles("(0183649X257)", m11dom);
    CHECK(g1.cycle_count() - 1 == 0);

    // M24 chi2 (dim 23), 2^12 involution -> 11
    auto records = bundles::load_mathieu();
    const auto& m24 = records[4];
    REQUIRE(m24.display_id == "M24");
    CHECK(m24.relation[2].cycle_count() - 1 == 11);
}

TEST_CASE("W(A2) full tuple has lhs 2, genus 1 via the matrix rep") {
    RootSystem rs = RootSystem::build("A2");
    GenusReport r = weyl_genus(rs, full_tuple(rs), rs.weyl_group()->order());
    CHECK(r.lhs == 2);
    CHECK(r.genus);
    CHECK(*r.genus == 1);
    CHECK(r.all_ok());
}

TEST_CASE("M12 display: dims 1, 3, 5 and genus 1") {
    auto records = bundles::load_mathieu();
    const auto& rec = records[1];
    REQUIRE(rec.display_id == "M12");
    DeletedPermRep rep(group_of(rec.product_tuple().elements));
    GenusReport r = genus_of_tuple(rep, rec.product_tuple());
    CHECK(r.fixed_dims == std::vector<long long>{1, 3, 5});
    CHECK(r.lhs == 2);
    REQUIRE(r.genus);
    CHECK(*r.genus == 1);
    CHECK(r.product_ok);
    CHECK(r.generates);
    CHECK(r.scott_ok);
}

TEST_CASE("M23 verbatim display is flagged, not fixed") {
    auto records = bundles::load_mathieu();
    const auto& rec = records[3];
    REQUIRE(rec.display_id == "M23");
    CHECK(rec.expect_failure);
    DisplayVerification v = verify_display(rec);
    CHECK_FALSE(v.ok);
    CHECK(v.genus.lhs == 1);
    CHECK_FALSE(v.genus.parity_ok);
    CHECK_FALSE(v.genus.genus.has_value());
    CHECK_FALSE(v.genus.generates);  // order-22 element cannot lie in M23
    REQUIRE(v.implied_first_element);
    // the implied first element is produced with its cycle structure
    CHECK(v.implied_cycle_type);
}

TEST_CASE("all five displays verify as expected") {
    for (const auto& rec : bundles::load_mathieu()) {
        DisplayVerification v = verify_display(rec);
        CHECK(v.ok == !rec.expect_failure);
        if (v.ok) {
            CHECK(*v.genus.genus == 1);
            CHECK(v.generated_order == mathieu_order(rec.display_id));
        }
    }
}

TEST_CASE("scott_check: genus-1 tuples have slack 2") {
    auto records = bundles::load_mathieu();
    const auto& rec = records[0];
    DeletedPermRep rep(group_of(rec.product_tuple().elements));
    ScottCheck sc = scott_check(rep, rec.product_tuple());
    CHECK(sc.ok);
    CHECK(sc.slack == 2);
    CHECK(sc.generates);
    CHECK(sc.warning.empty());

    // W(A3) full tuple slack 2 via the matrix route
    RootSystem rs = RootSystem::build("A3");
    GenusReport r = weyl_genus(rs, full_tuple(rs), rs.weyl_group()->order());
    CHECK(r.scott_slack == 2);
}

TEST_CASE("scott check warns on non-generating tuples") {
    auto s4 = group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
    DeletedPermRep rep(s4);
    Permutation t = cyc("(0 1)(2 3)", 4);
    GeneratingTuple tup{{t, t}};
    ScottCheck sc = scott_check(rep, tup);
    CHECK_FALSE(sc.generates);
    CHECK_FALSE(sc.warning.empty());
}

TEST_CASE("search_tuples finds an S4 genus-0 triple that brute force confirms") {
    auto s4 = group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
    DeletedPermRep rep(s4);
    SearchOptions opt;
    opt.tuple_length = 3;
    opt.target_genus = 0;
    opt.seed = 5;
    opt.budget = 3000;
    auto hits = search_tuples(rep, opt);
    REQUIRE(!hits.empty());

    // brute-force oracle over all of S4^2: collect genus-0 generating triples
    auto all = brute_force_elements(s4->generators());
    std::set<std::string> fingerprints;
    for (const auto& a : all) {
        for (const auto& b : all) {
            GeneratingTuple t{{a, b, compose(a, b, Convention::kLeftToRight).inverse()}};
            GenusReport r = genus_of_tuple(rep, t);
            if (r.generates && r.genus && *r.genus == 0) {
                std::vector<std::string> types;
                for (const auto& g : t.elements) types.push_back(g.cycle_type_string());
                std::sort(types.begin(), types.end());
                std::string fp;
                for (const auto& s : types) fp += s + "|";
                fingerprints.insert(fp);
            }
        }
    }
    REQUIRE(!fingerprints.empty());
    for (const auto& hit : hits) {
        std::vector<std::string> types;
        for (const auto& g : hit.tuple.elements) types.push_back(g.cycle_type_string());
        std::sort(types.begin(), types.end());
        std::string fp;
        for (const auto& s : types) fp += s + "|";
        CHECK(fingerprints.count(fp) == 1);
        CHECK(*hit.report.genus == 0);
        CHECK(hit.report.generates);
        CHECK(hit.report.product_ok);
    }
    // a (4-cycle, 3-cycle, transposition)-style triple is among the hits
    bool found_style = false;
    for (const auto& hit : hits) {
        std::multiset<int> orders;
        for (const auto& g : hit.tuple.elements) orders.insert(static_cast<int>(g.order().to_int64()));
        if (orders == std::multiset<int>{2, 3, 4}) found_style = true;
    }
    CHECK(found_style);
}

TEST_CASE("search with negative target genus is empty") {
    auto s4 = group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
    DeletedPermRep rep(s4);
    SearchOptions opt;
    opt.target_genus = -1;
    opt.budget = 500;
    CHECK(search_tuples(rep, opt).empty());
}

TEST_CASE("search on M11 with chi2 finds a genus-1 triple") {
    auto records = bundles::load_mathieu();
    auto m11 = group_of(records[0].product_tuple().elements);
    REQUIRE(m11->order() == BigInt(7920));
    DeletedPermRep rep(m11);
    SearchOptions opt;
    opt.tuple_length = 3;
    opt.target_genus = 1;
    opt.seed = 7;
    opt.budget = 100000;
    auto hits = search_tuples(rep, opt);
    CHECK(!hits.empty());
}

TEST_CASE("search respects cycle-type constraints and dedupes") {
    auto s4 = group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
    DeletedPermRep rep(s4);
    SearchOptions opt;
    opt.tuple_length = 3;
    opt.target_genus = 0;
    opt.seed = 17;
    opt.budget = 4000;
    opt.cycle_constraints = {std::vector<int>{4}, std::nullopt, std::nullopt};
    auto hits = search_tuples(rep, opt);
    REQUIRE(!hits.empty());
    std::set<std::string> fps;
    for (const auto& hit : hits) {
        CHECK(hit.tuple.elements[0].cycle_type() == std::vector<int>{4});
        CHECK(fps.insert(hit.fingerprint).second);  // dedup by fingerprint
    }
}

TEST_CASE("search is deterministic per seed") {
    auto s4 = group_of({cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)});
    DeletedPermRep rep(s4);
    SearchOptions opt;
    opt.target_genus = 0;
    opt.seed = 23;
    opt.budget = 2000;
    auto h1 = search_tuples(rep, opt);
    auto h2 = search_tuples(rep, opt);
    REQUIRE(h1.size() == h2.size());
    for (size_t i = 0; i < h1.size(); ++i) CHECK(h1[i].fingerprint == h2[i].fingerprint);
}

TEST_CASE("parity and Scott across random generating tuples in small groups") {
    // transitive groups on 3..7 points
    std::vector<std::vector<Permutation>> gens = {
        {cyc("(0 1)", 3), cyc("(0 1 2)", 3)},                          // S3
        {cyc("(0 1 2)", 4), cyc("(0 1)(2 3)", 4)},                     // A4
        {cyc("(0 1)", 4), cyc("(0 1 2 3)", 4)},                        // S4
        {cyc("(0 1 2 3)", 4), cyc("(1 3)", 4)},                       // D4
        {cyc("(0 1 2 3 4)", 5), cyc("(1 2 4 3)", 5)},                 // F20
        {cyc("(0 1 2 3 4)", 5), cyc("(0 1)", 5)},                     // S5
        {cyc("(0 1 2 3 4)", 5), cyc("(0 1 2)", 5)},                   // A5
        {cyc("(0 1 2 3 4 5 6)", 7), cyc("(1 2 4)(3 6 5)", 7)},        // F21
        {cyc("(0 1 2 3 4 5 6)", 7), cyc("(0 1)", 7)},                 // S7
    };
    std::mt19937_64 rng(2718);
    int accepted = 0;
    while (accepted < 1100) {
        const auto& g = gens[rng() % gens.size()];
        auto grp = group_of(g);
        DeletedPermRep rep(grp);
        size_t n = 2 + rng() % 3;
        GeneratingTuple t;
        for (size_t i = 0; i + 1 < n; ++i) t.elements.push_back(grp->random_element(rng));
        t.elements.push_back(tuple_product(t.elements, Convention::kLeftToRight).inverse());
        GenusReport r = genus_of_tuple(rep, t);
        REQUIRE(r.product_ok);
        CHECK(r.parity_ok);  // parity holds for every product-one tuple
        if (!r.generates) continue;
        CHECK(r.scott_ok);
        CHECK(r.scott_slack >= 0);
        ++accepted;
    }
    CHECK(accepted >= 1000);
}

TEST_CASE("genus is invariant under simultaneous conjugation and convention") {
    auto records = bundles::load_mathieu();
    const auto& rec = records[0];
    auto m11 = group_of(rec.product_tuple().elements);
    DeletedPermRep rep(m11);
    GenusReport base = genus_of_tuple(rep, rec.product_tuple());
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        Permutation c = m11->random_element(rng);
        GeneratingTuple conj;
        for (const auto& g : rec.product_tuple().elements)
            conj.elements.push_back(compose(compose(c.inverse(), g, Convention::kLeftToRight), c,
                                            Convention::kLeftToRight));
        GenusReport r = genus_of_tuple(rep, conj);
        CHECK(r.lhs == base.lhs);
        CHECK(r.fixed_dims == base.fixed_dims);
        CHECK(r.product_ok == base.product_ok);
        CHECK(r.generates == base.generates);
    }
    // reversed tuple has the identity product under the other convention
    GeneratingTuple reversed{{rec.product_tuple().elements[2], rec.product_tuple().elements[1],
                              rec.product_tuple().elements[0]}};
    GenusReport r = genus_of_tuple(rep, reversed);
    CHECK(r.product_ok);
    CHECK(r.lhs == base.lhs);
}

TEST_CASE("matrix rep invariant dim and relation spot checks") {
    RootSystem rs = RootSystem::build("B3");
    std::vector<RationalMatrix> gens;
    for (int i = 0; i < 3; ++i) gens.push_back(rs.simple_reflection(i));
    MatrixRep rep(gens, rs.weyl_group());
    CHECK(rep.dim() == 3);
    CHECK(rep.invariant_dim() == 0);
    CHECK(rep.fixed_dim(rs.simple_reflection(0)) == 2);
    CHECK(rep.fixed_dim(RationalMatrix::identity(3)) == 3);
}

TEST_CASE("cycle-count and kernel methods agree where both encodings exist") {
    // a permutation matrix fixes a subspace of dimension cycle_count(g), so
    // the deleted module dimensions from both routes must coincide
    std::mt19937_64 rng(613);
    for (int trial = 0; trial < 200; ++trial) {
        int degree = 3 + static_cast<int>(rng() % 6);
        std::vector<int> images(degree);
        std::iota(images.begin(), images.end(), 0);
        std::shuffle(images.begin(), images.end(), rng);
        Permutation g = Permutation::from_images(images);

        RationalMatrix pm(degree, degree);
        for (int x = 0; x < degree; ++x) pm.at(g.image(x), x) = BigRational(1);
        long long kernel =
            static_cast<long long>((pm - RationalMatrix::identity(degree)).kernel_dimension());
        CHECK(kernel == g.cycle_count());
    }
}

TEST_CASE("Scott slack on the regular action of S3") {
    // S3 acting on its own six elements by right multiplication; the deleted
    // module has dimension 5 and generating triples keep slack >= 0
    Domain d3 = Domain::numeric(3);
    std::vector<Permutation> s3;
    for (const char* c : {"()", "(01)", "(02)", "(12)", "(012)", "(021)"})
        s3.push_back(parse_cycles(c, d3));
    auto mult_index = [&](int i, int j) {
        Permutation prod = compose(s3[i], s3[j], Convention::kLeftToRight);
        for (int k = 0; k < 6; ++k)
            if (s3[k] == prod) return k;
        throw std::logic_error("not closed");
    };
    auto regular = [&](int j) {
        std::vector<int> images(6);
        for (int i = 0; i < 6; ++i) images[i] = mult_index(i, j);
        return Permutation::from_images(images);
    };

    auto group = group_of({regular(1), regular(4)});  // a transposition and a 3-cycle
    REQUIRE(group->order() == BigInt(6));
    REQUIRE(group->is_transitive());
    DeletedPermRep rep(group);
    CHECK(rep.dim() == 5);

    // enumerate all product-one triples by brute force; every generating one
    // satisfies Scott's bound
    auto elements = brute_force_elements(group->generators());
    int generating = 0;
    for (const auto& a : elements) {
        for (const auto& b : elements) {
            GeneratingTuple t{{a, b, compose(a, b, Convention::kLeftToRight).inverse()}};
            GenusReport r = genus_of_tuple(rep, t);
            CHECK(r.parity_ok);
            if (!r.generates) continue;
            ++generating;
            CHECK(r.scott_ok);
            CHECK(r.scott_slack >= 0);
        }
    }
    CHECK(generating > 0);
}
