#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "genustool/perm.hpp"

using namespace genustool;

namespace {

Domain mathieu11_domain() {
    return Domain({"0", "1", "2", "3", "4", "5", "6", "7", "8", "9", "X"});
}

Permutation random_perm(int degree, std::mt19937_64& rng) {
    std::vector<int> images(degree);
    for (int i = 0; i < degree; ++i) images[i] = i;
    std::shuffle(images.begin(), images.end(), rng);
    return Permutation::from_images(std::move(images));
}

}  // namespace

TEST_CASE("parse_cycles on the bundled display strings") {
    Domain dom = mathieu11_domain();
    Permutation p = parse_cycles("(2X)(34)(59)(67)", dom);
    CHECK(p.degree() - p.fixed_points() == 8);
    CHECK(p.fixed_points() == 3);
    CHECK(p.image(*dom.find("0")) == *dom.find("0"));
    CHECK(p.image(*dom.find("1")) == *dom.find("1"));
    CHECK(p.image(*dom.find("8")) == *dom.find("8"));
    CHECK(p.image(*dom.find("2")) == *dom.find("X"));
    CHECK(p.order() == BigInt(2));

    CHECK(parse_cycles("", dom).is_identity());
    CHECK(parse_cycles("()", dom).is_identity());
    CHECK(parse_cycles(" ( 2 X ) (34)(59)(67) ", dom) == p);
}

TEST_CASE("the printed M23 first element is a 22-cycle missing Q") {
    std::vector<std::string> letters;
    for (char c = 'A'; c <= 'W'; ++c) letters.emplace_back(1, c);
    Domain dom(letters);
    Permutation p = parse_cycles("(AWEIHURTPBCSLGMOKJVNFD)", dom);
    CHECK(p.cycle_type() == std::vector<int>{22, 1});
    CHECK(p.image(*dom.find("Q")) == *dom.find("Q"));
    CHECK(p.order() == BigInt(22));
}

TEST_CASE("parse_cycles error cases") {
    Domain dom = mathieu11_domain();
    CHECK_THROWS_AS(parse_cycles("(2Y)", dom), ParseError);       // unknown token
    CHECK_THROWS_AS(parse_cycles("(22)", dom), ParseError);       // repeated token
    CHECK_THROWS_AS(parse_cycles("(12)(23)", dom), ParseError);   // repeated across cycles
    CHECK_THROWS_AS(parse_cycles("(12", dom), ParseError);        // unbalanced
    CHECK_THROWS_AS(parse_cycles("12)", dom), ParseError);
    CHECK_THROWS_AS(parse_cycles("((12))", dom), ParseError);
}

TEST_CASE("multi-character tokens parse greedily") {
    Domain dom({"10", "1", "0", "inf"});
    Permutation p = parse_cycles("(10 1)(0 inf)", dom);
    CHECK(p.image(0) == 1);
    CHECK(p.image(2) == 3);
    Permutation q = parse_cycles("(101)(0inf)", dom);  // longest match: "10" then "1"
    CHECK(q == p);
}

TEST_CASE("parse/print round-trip on random permutations") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        int degree = 1 + static_cast<int>(rng() % 12);
        Domain dom = Domain::numeric(degree);
        Permutation p = random_perm(degree, rng);
        CHECK(parse_cycles(print_cycles(p, dom), dom) == p);
    }
    // and over a letters domain
    std::vector<std::string> letters;
    for (char c = 'A'; c <= 'X'; ++c) letters.emplace_back(1, c);
    Domain dom(letters);
    for (int trial = 0; trial < 100; ++trial) {
        Permutation p = random_perm(24, rng);
        CHECK(parse_cycles(print_cycles(p, dom), dom) == p);
    }
}

TEST_CASE("compose conventions") {
    Domain dom = Domain::numeric(3);
    Permutation a = parse_cycles("(01)", dom);
    Permutation b = parse_cycles("(12)", dom);
    // left-to-right: x -> b(a(x)); 0 -> a 1 -> b 2
    Permutation lr = compose(a, b, Convention::kLeftToRight);
    CHECK(lr.image(0) == 2);
    CHECK(lr.image(2) == 1);
    CHECK(lr.image(1) == 0);
    Permutation rl = compose(a, b, Convention::kRightToLeft);
    CHECK(rl.image(0) == 1);
    CHECK(rl.image(1) == 2);
    CHECK(rl.image(2) == 0);
    CHECK(compose(a, a.inverse(), Convention::kLeftToRight).is_identity());
    CHECK(compose(Permutation(3), b, Convention::kLeftToRight) == b);
    CHECK_THROWS(compose(a, Permutation(5), Convention::kLeftToRight));
}

TEST_CASE("cycle statistics") {
    Domain dom = Domain::numeric(24);
    Permutation g2 = parse_cycles("(0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15 16 17 18 19 20 21 22)", dom);
    CHECK(g2.cycle_count() == 2);
    CHECK(g2.order() == BigInt(23));
    CHECK(g2.fixed_points() == 1);

    CHECK(Permutation(10).cycle_count() == 10);
    CHECK(Permutation(10).order() == BigInt(1));

    Permutation invol = parse_cycles("(0 1)(2 3)(4 5)(6 7)(8 9)(10 11)(12 13)(14 15)(16 17)(18 19)(20 21)(22 23)", dom);
    CHECK(invol.cycle_count() == 12);
    CHECK(invol.order() == BigInt(2));
    CHECK(invol.fixed_points() == 0);
}

TEST_CASE("Burnside on a cyclic group: average fixed points equals cycle count") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 1000; ++trial) {
        int degree = 2 + static_cast<int>(rng() % 11);
        Permutation p = random_perm(degree, rng);
        long long ord = p.order().to_int64();
        long long total = 0;
        for (long long k = 0; k < ord; ++k) total += p.power(k).fixed_points();
        CHECK(total % ord == 0);
        CHECK(total / ord == p.cycle_count());
    }
}

TEST_CASE("tuple_product_check detects conventions") {
    Domain dom = Domain::numeric(4);
    Permutation s1 = parse_cycles("(01)", dom);
    Permutation s2 = parse_cycles("(12)", dom);

    GeneratingTuple pairs{{s1, s1, s2, s2, s1, s1}};
    ProductCheck pc = tuple_product_check(pairs);
    CHECK(pc.holds);
    CHECK(pc.left_to_right);
    CHECK(pc.right_to_left);

    Permutation c3 = parse_cycles("(012)", dom);
    GeneratingTuple bad{{c3, c3}};
    ProductCheck pc2 = tuple_product_check(bad);
    CHECK_FALSE(pc2.holds);

    // a, b, (ab)^-1 holds left-to-right
    Permutation ab = compose(s1, c3, Convention::kLeftToRight);
    GeneratingTuple t{{s1, c3, ab.inverse()}};
    ProductCheck pc3 = tuple_product_check(t);
    CHECK(pc3.holds);
    CHECK(pc3.left_to_right);
}

TEST_CASE("diagnose_product recovers a consistent element") {
    Domain dom = Domain::numeric(5);
    Permutation a = parse_cycles("(01234)", dom);
    Permutation b = parse_cycles("(01)(23)", dom);
    Permutation c = compose(a, b, Convention::kLeftToRight);  // a b = c
    GeneratingTuple t{{a, b, c.inverse()}};
    REQUIRE(tuple_product_check(t).holds);
    for (size_t i = 0; i < 3; ++i)
        CHECK(diagnose_product(t, i, Convention::kLeftToRight) == t.elements[i]);
    CHECK_THROWS_AS(diagnose_product(t, 3, Convention::kLeftToRight), std::out_of_range);

    GeneratingTuple ones{{Permutation(5), Permutation(5), Permutation(5)}};
    CHECK(diagnose_product(ones, 0, Convention::kLeftToRight).is_identity());
}
