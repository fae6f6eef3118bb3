#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "genustool/bundles.hpp"
#include "genustool/perm_group.hpp"

using namespace genustool;

namespace {

Permutation cycles(const std::string& text, int degree) {
    return parse_cycles(text, Domain::numeric(degree));
}

}  // namespace

TEST_CASE("single transposition generates order 2") {
    PermutationGroup g = PermutationGroup::from_generators({cycles("(0 1)", 4)});
    CHECK(g.order() == BigInt(2));
    CHECK(g.contains(cycles("(0 1)", 4)));
    CHECK_FALSE(g.contains(cycles("(1 2)", 4)));
    CHECK(g.contains(Permutation(4)));
}

TEST_CASE("symmetric and alternating groups have the classical orders") {
    for (int n = 2; n <= 8; ++n) {
        std::vector<Permutation> gens = {cycles("(0 1)", n)};
        std::string big = "(";
        for (int i = 0; i < n; ++i) big += std::to_string(i) + " ";
        gens.push_back(parse_cycles(big + ")", Domain::numeric(n)));
        PermutationGroup g = PermutationGroup::from_generators(gens);
        BigInt fact(1);
        for (int i = 2; i <= n; ++i) fact *= BigInt(i);
        CHECK(g.order() == fact);
        CHECK(g.is_transitive());
    }
}

TEST_CASE("BSGS order equals brute-force enumeration on random S5 subgroups") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Permutation> gens;
        int count = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < count; ++i) {
            std::vector<int> im(5);
            for (int k = 0; k < 5; ++k) im[k] = k;
            std::shuffle(im.begin(), im.end(), rng);
            gens.push_back(Permutation::from_images(im));
        }
        auto all = brute_force_elements(gens);
        PermutationGroup g = PermutationGroup::from_generators(gens);
        CHECK(g.order() == BigInt(static_cast<long long>(all.size())));
    }
}

TEST_CASE("membership agrees with brute-force enumeration up to order 5040") {
    // S7 generated by a transposition and a 7-cycle
    std::vector<Permutation> gens = {cycles("(0 1)", 7), cycles("(0 1 2 3 4 5 6)", 7)};
    auto all = brute_force_elements(gens, 6000);
    REQUIRE(all.size() == 5040);

    // the even subgroup via two 3-cycles plus a 7-cycle
    std::vector<Permutation> a7gens = {cycles("(0 1 2)", 7), cycles("(0 1 2 3 4 5 6)", 7)};
    PermutationGroup a7 = PermutationGroup::from_generators(a7gens);
    CHECK(a7.order() == BigInt(2520));
    std::set<std::vector<int>> members;
    for (const auto& e : brute_force_elements(a7gens, 3000)) members.insert(e.images());
    for (const auto& e : all) CHECK(a7.contains(e) == (members.count(e.images()) > 0));
}

TEST_CASE("every generator passes membership in its own BSGS") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Permutation> gens;
        for (int i = 0; i < 3; ++i) {
            std::vector<int> im(8);
            for (int k = 0; k < 8; ++k) im[k] = k;
            std::shuffle(im.begin(), im.end(), rng);
            gens.push_back(Permutation::from_images(im));
        }
        PermutationGroup g = PermutationGroup::from_generators(gens);
        for (const auto& gen : gens) CHECK(g.contains(gen));
        CHECK(g.base().size() > 0);
    }
}

TEST_CASE("the bundled displays generate the Mathieu groups") {
    auto records = bundles::load_mathieu();
    REQUIRE(records.size() == 5);
    std::map<std::string, long long> expected = {
        {"M11", 7920}, {"M12", 95040}, {"M22", 443520}, {"M24", 244823040}};
    for (const auto& rec : records) {
        if (rec.display_id == "M23") continue;  // known-defective display
        PermutationGroup g = PermutationGroup::from_generators(rec.product_tuple().elements);
        CHECK(g.order() == BigInt(expected.at(rec.display_id)));
    }
}

TEST_CASE("random elements are members and deterministic per seed") {
    std::vector<Permutation> gens = {cycles("(0 1 2 3 4)", 5), cycles("(0 1)", 5)};
    PermutationGroup g = PermutationGroup::from_generators(gens);
    std::mt19937_64 rng1(77), rng2(77);
    for (int i = 0; i < 50; ++i) {
        Permutation p = g.random_element(rng1);
        CHECK(g.contains(p));
        CHECK(p == g.random_element(rng2));
    }
}

TEST_CASE("random elements are close to uniform on a small group") {
    std::vector<Permutation> gens = {cycles("(0 1)", 3), cycles("(0 1 2)", 3)};
    PermutationGroup g = PermutationGroup::from_generators(gens);
    std::mt19937_64 rng(2026);
    std::map<std::vector<int>, int> counts;
    const int draws = 6000;
    for (int i = 0; i < draws; ++i) ++counts[g.random_element(rng).images()];
    REQUIRE(counts.size() == 6);
    for (const auto& [imgs, count] : counts) {
        CHECK(count > 800);
        CHECK(count < 1200);
    }
}
