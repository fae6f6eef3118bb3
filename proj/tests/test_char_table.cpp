#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "genustool/bundles.hpp"
#include "genustool/char_table.hpp"
#include "genustool/perm_group.hpp"

using namespace genustool;

namespace {

CharacterTable parse(const std::string& text) {
    std::istringstream is(text);
    return CharacterTable::parse_stream(is, "<test>");
}

// assigns each element of the bundled oracle group to its table class;
// these mappings are frozen test data
std::string s_class_of(const Permutation& p, const std::string& group) {
    std::string type = p.cycle_type_string();
    static const std::map<std::string, std::map<std::string, std::string>> tables = {
        {"s3", {{"1+1+1", "1A"}, {"2+1", "2A"}, {"3", "3A"}}},
        {"s4",
         {{"1+1+1+1", "1A"}, {"2+1+1", "2A"}, {"2+2", "2B"}, {"3+1", "3A"}, {"4", "4A"}}},
        {"a4", {{"1+1+1+1", "1A"}, {"2+2", "2A"}, {"3+1", "3AB"}}},
        {"a5",
         {{"1+1+1+1+1", "1A"}, {"2+2+1", "2A"}, {"3+1+1", "3A"}, {"5", "5AB"}}},
        {"s5",
         {{"1+1+1+1+1", "1A"},
          {"2+1+1+1", "2A"},
          {"2+2+1", "2B"},
          {"3+1+1", "3A"},
          {"3+2", "6A"},
          {"4+1", "4A"},
          {"5", "5A"}}},
    };
    if (group == "d4") {
        if (type == "1+1+1+1") return "1A";
        if (type == "4") return "4A";
        if (type == "2+1+1") return "2B";
        // cycle type 2+2: the central rotation swaps opposite corners (0<->2)
        return p.image(0) == 2 ? "2A" : "2C";
    }
    return tables.at(group).at(type);
}

}  // namespace

TEST_CASE("all bundled tables parse and validate") {
    for (const std::string& name : bundles::char_table_names()) {
        CharacterTable t = bundles::load_char_table(name);
        CHECK(t.classes().size() > 0);
        CHECK(t.characters().size() > 0);
    }
}

TEST_CASE("bundled S3 table: sizes 1+3+2 = 6") {
    CharacterTable t = bundles::load_char_table("s3");
    BigInt sum(0);
    for (const auto& c : t.classes()) sum += c.size;
    CHECK(sum == BigInt(6));
    CHECK(t.complete());
}

TEST_CASE("class sizes summing to order-1 are rejected") {
    CHECK_THROWS_AS(parse("group X 6\n"
                          "class 1A 1 1\n"
                          "class 2A 2 3\n"
                          "class 3A 3 1\n"
                          "power 2 2A 1A\n"
                          "power 3 3A 1A\n"
                          "char chi1 1 1 1 1\n"),
                    ParseError);
}

TEST_CASE("missing power maps and malformed lines are rejected") {
    CHECK_THROWS_AS(parse("group X 6\nclass 1A 1 1\nclass 2A 2 3\nclass 3A 3 2\n"
                          "power 3 3A 1A\n"
                          "char chi1 1 1 1 1\n"),
                    ParseError);  // no 2-power map for 2A
    CHECK_THROWS_AS(parse("group X 6\nclass 1A 1\n"), ParseError);
    CHECK_THROWS_AS(parse("class 1A 1 1\n"), ParseError);  // missing group line
    CHECK_THROWS_AS(parse("group X 6\nclass 1A 1 1\npower 4 1A 1A\n"), ParseError);  // 4 not prime
    // power map order inconsistency: square of an order-4 class cannot have order 4
    CHECK_THROWS_AS(parse("group X 8\npartial\nclass 1A 1 1\nclass 4A 4 0\npower 2 4A 4A\n"),
                    ParseError);
    // cyclotomic values rejected
    CHECK_THROWS_AS(parse("group X 6\npartial\nclass 1A 1 1\nchar chi1 1 z3\n"), ParseError);
}

TEST_CASE("character value at identity must equal the degree") {
    CHECK_THROWS_AS(parse("group X 2\nclass 1A 1 1\nclass 2A 2 1\npower 2 2A 1A\n"
                          "char chi1 2 1 1\nchar chi2 1 1 1\n"),
                    ParseError);
}

TEST_CASE("Burnside averages are integers in range for every bundled table") {
    for (const std::string& name : bundles::char_table_names()) {
        CharacterTable t = bundles::load_char_table(name);
        for (const auto& chi : t.characters()) {
            for (size_t ci = 0; ci < t.classes().size(); ++ci) {
                BigInt f = t.burnside_fixed_dim(chi, static_cast<int>(ci));
                CHECK(f >= BigInt(0));
                CHECK(f <= chi.degree);
                // independent route: direct sum over all k mod ord
                long long m = t.classes()[ci].element_order;
                BigInt direct(0);
                for (long long k = 0; k < m; ++k)
                    direct += chi.values[t.power_class(static_cast<int>(ci), k)];
                CHECK(direct == f * BigInt(m));
            }
        }
    }
}

TEST_CASE("class_triple_count equals brute force for every class triple of the oracle groups") {
    for (const std::string& name : bundles::complete_table_names()) {
        CharacterTable t = bundles::load_char_table(name);
        GroupFile gf = load_group_file(bundles::data_dir() + "/groups/" + name + ".grp");
        auto elements = brute_force_elements(gf.generators);
        REQUIRE(BigInt(static_cast<long long>(elements.size())) == t.group_order());

        // bucket elements by table class and check the declared sizes
        std::map<std::string, std::vector<Permutation>> by_class;
        for (const auto& e : elements) by_class[s_class_of(e, name)].push_back(e);
        REQUIRE(by_class.size() == t.classes().size());
        for (const auto& c : t.classes())
            REQUIRE(BigInt(static_cast<long long>(by_class.at(c.name).size())) == c.size);

        for (const auto& c1 : t.classes()) {
            for (const auto& c2 : t.classes()) {
                for (const auto& c3 : t.classes()) {
                    const Permutation z0 = by_class.at(c3.name).front();
                    long long brute = 0;
                    for (const auto& x : by_class.at(c1.name))
                        for (const auto& y : by_class.at(c2.name)) {
                            Permutation xy = compose(x, y, Convention::kLeftToRight);
                            if (compose(xy, z0, Convention::kLeftToRight).is_identity()) ++brute;
                        }
                    CHECK(t.class_triple_count(c1.name, c2.name, c3.name) == BigInt(brute));
                }
            }
        }
    }
}

TEST_CASE("triple count with identity third class") {
    CharacterTable t = bundles::load_char_table("s4");
    CHECK(t.class_triple_count("2A", "3A", "1A") == BigInt(0));
    // (x, x^-1) pairs: |2A| = 6
    CHECK(t.class_triple_count("2A", "2A", "1A") == BigInt(6));
}

TEST_CASE("triple count rejects partial tables") {
    CharacterTable t = bundles::load_char_table("hs");
    CHECK_THROWS_AS(t.class_triple_count("2B", "5B", "7A"), std::invalid_argument);
}

TEST_CASE("class_genus on the sporadic rows returns genus 1") {
    struct Row {
        const char* table;
        const char* chi;
        std::vector<std::string> classes;
        long long dim;
        std::vector<long long> fixed;
    };
    std::vector<Row> rows = {
        {"hs", "chi2", {"2B", "5B", "7A"}, 22, {10, 6, 4}},
        {"mcl", "chi2", {"2A", "5A", "8A"}, 22, {14, 2, 4}},
        {"co3", "chi2", {"2B", "3C", "11A"}, 23, {11, 7, 3}},
        {"co2", "chi2", {"2B", "5A", "11A"}, 23, {15, 3, 3}},
        {"tits", "chi6", {"2A", "3A", "13A"}, 78, {46, 24, 6}},
        {"j2", "chi12", {"2B", "3B", "7A"}, 160, {80, 56, 22}},
        {"2co1", "chi102", {"~2A", "~7B", "-13A"}, 24, {16, 6, 0}},
    };
    for (const auto& row : rows) {
        CharacterTable t = bundles::load_char_table(row.table);
        GenusReport r = class_genus(t, ClassTuple{row.chi, row.classes});
        CHECK(r.dim_v == row.dim);
        CHECK(r.fixed_dims == row.fixed);
        REQUIRE(r.genus);
        CHECK(*r.genus == 1);
        CHECK(r.generation_note.find("assumed") != std::string::npos);
    }
}

TEST_CASE("2.Co1 aliases resolve to explicit classes in the report") {
    CharacterTable t = bundles::load_char_table("2co1");
    GenusReport r = class_genus(t, ClassTuple{"chi102", {"~2A", "~7B", "-13A"}});
    REQUIRE(!r.notes.empty());
    CHECK(r.notes[0].find("2B") != std::string::npos);
    CHECK(r.notes[0].find("26A") != std::string::npos);
}

TEST_CASE("trivial character is rejected") {
    CharacterTable t = bundles::load_char_table("s3");
    CHECK_THROWS_AS(class_genus(t, ClassTuple{"chi1", {"2A", "2A", "3A"}}), std::invalid_argument);
}

TEST_CASE("class_genus equals genus_of_tuple on Mathieu permutation data") {
    // the deleted permutation character is chi2: build a partial table from
    // the display permutations and cross-check both encodings
    for (const auto& rec : bundles::load_mathieu()) {
        if (rec.expect_failure) continue;
        GeneratingTuple tuple = rec.product_tuple();
        auto group = std::make_shared<PermutationGroup>(
            PermutationGroup::from_generators(tuple.elements));
        DeletedPermRep rep(group);
        GenusReport perm_report = genus_of_tuple(rep, tuple);

        // assemble the table: one class per distinct power of each entry
        std::map<std::vector<int>, std::string> class_of;
        std::ostringstream table;
        table << "group " << rec.display_id << " " << group->order() << "\npartial\n";
        std::ostringstream classes, powers, values;
        int counter = 0;
        auto ensure_class = [&](auto&& self, const Permutation& g) -> std::string {
            auto it = class_of.find(g.images());
            if (it != class_of.end()) return it->second;
            std::string name = "c" + std::to_string(counter++);
            class_of[g.images()] = name;
            long long ord = g.order().to_int64();
            classes << "class " << name << " " << ord << " " << (ord == 1 ? 1 : 0) << "\n";
            values << " " << (g.fixed_points() - 1);
            for (long long p = 2; p <= ord; ++p) {
                bool prime = true;
                for (long long d = 2; d * d <= p; ++d)
                    if (p % d == 0) prime = false;
                if (!prime || ord % p) continue;
                std::string target = self(self, g.power(p));  // may emit nested lines first
                powers << "power " << p << " " << name << " " << target << "\n";
            }
            return name;
        };
        std::vector<std::string> tuple_classes;
        ensure_class(ensure_class, Permutation(tuple.degree()));
        for (const auto& g : tuple.elements) tuple_classes.push_back(ensure_class(ensure_class, g));
        table << classes.str() << powers.str();
        table << "char chi2 " << rec.dimension << values.str() << "\n";

        CharacterTable t = parse(table.str());
        GenusReport class_report = class_genus(t, ClassTuple{"chi2", tuple_classes});
        CHECK(class_report.lhs == perm_report.lhs);
        CHECK(class_report.fixed_dims == perm_report.fixed_dims);
        CHECK(*class_report.genus == *perm_report.genus);
    }
}

TEST_CASE("2.Co1 lifted triple spot values") {
    CharacterTable t = bundles::load_char_table("2co1");
    const auto& chi = t.characters()[t.character_index("chi102")];
    // central involution acts as -1 on the 24-dimensional module
    CHECK(t.burnside_fixed_dim(chi, t.class_index("2A")) == BigInt(0));
    // order-26 class: fixed space dimension 0
    CHECK(t.burnside_fixed_dim(chi, t.class_index("-13A")) == BigInt(0));
}
