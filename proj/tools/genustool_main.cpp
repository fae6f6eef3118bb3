// Command-line front end: every verification in the library as a
// subcommand, with a human summary or a deterministic machine report.
// Exit codes: 0 = all checks pass, 1 = a verification failed (the report
// says which), 2 = usage or data error.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "genustool/bundles.hpp"
#include "genustool/char_table.hpp"
#include "genustool/mathieu.hpp"
#include "genustool/modular.hpp"
#include "genustool/report.hpp"
#include "genustool/root_system.hpp"

using namespace genustool;

namespace {

struct Output {
    bool structured = false;
    Report report;
    std::ostringstream human;

    int finish(int exit_code) {
        if (structured)
            std::cout << report.to_text();
        else
            std::cout << human.str();
        return exit_code;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> split_tokens(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

int run_verify_mathieu(Output& out, const std::string& data_dir) {
    bool all_expected = true;
    Report& rep = out.report.child("mathieu");
    for (const auto& record : bundles::load_mathieu(data_dir)) {
        DisplayVerification v = verify_display(record);
        Report& r = rep.child(record.display_id);
        r.set("group", record.group_name);
        r.set("expected_genus", record.expected_genus);
        r.set("generated_order", v.generated_order);
        r.set("classical_order", v.expected_order);
        describe_genus(r.child("genus"), v.genus);
        r.set("ok", v.ok);
        if (v.implied_first_element) {
            r.set("implied_first_element", *v.implied_first_element);
            r.set("implied_cycle_type", *v.implied_cycle_type);
        }
        out.human << record.display_id << ": " << (v.ok ? "PASS" : "FAIL") << " — "
                  << human_genus_summary(v.genus) << ", order " << v.generated_order << "\n";
        if (!v.ok) {
            for (const auto& w : v.genus.witnesses) out.human << "    witness: " << w << "\n";
            if (v.implied_first_element)
                out.human << "    implied first element: " << *v.implied_first_element << "\n";
            all_expected = false;
        }
    }
    return out.finish(all_expected ? 0 : 1);
}

int run_weyl(Output& out, const std::string& label, bool rotation) {
    RootSystem rs = RootSystem::build(label);
    Report& r = out.report.child("weyl");
    r.set("label", rs.label());
    r.set("roots", rs.root_count());
    r.set("weyl_order", rs.weyl_group()->order());

    bool ok;
    if (rotation) {
        RotationReport rr = verify_rotation_subgroup(rs, rotation_tuple(rs));
        r.set("tuple", "rotation");
        r.set("subgroup_order", rr.subgroup_order);
        r.set("index_two_ok", rr.index_two_ok);
        r.set("determinants_ok", rr.determinants_ok);
        describe_genus(r.child("genus"), rr.genus);
        for (const auto& w : rr.witnesses) r.push("witness", w);
        ok = rr.all_ok();
        out.human << "W(" << rs.label() << ") rotation tuple: " << (ok ? "PASS" : "FAIL")
                  << " — genus " << (rr.genus.genus ? std::to_string(*rr.genus.genus) : "n/a")
                  << ", order " << rr.subgroup_order << " = |W|/2, determinants "
                  << (rr.determinants_ok ? "all +1" : "FAIL") << "\n";
    } else {
        GenusReport g = weyl_genus(rs, full_tuple(rs), rs.weyl_group()->order());
        r.set("tuple", "full");
        describe_genus(r.child("genus"), g);
        ok = g.all_ok() && g.genus && *g.genus == 1;
        out.human << "W(" << rs.label() << ") full tuple: " << (ok ? "PASS" : "FAIL") << " — "
                  << human_genus_summary(g) << ", |W| = " << rs.weyl_group()->order() << "\n";
    }
    return out.finish(ok ? 0 : 1);
}

// tuple file for the CLI genus command: cycle-notation lines over the group
// file's domain, or "word i j k" lines (1-based generator indices)
std::vector<std::vector<int>> read_words(const std::string& path, const GroupFile& group,
                                         std::vector<Permutation>* perms) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tuple file '" + path + "'");
    std::vector<std::vector<int>> words;
    std::string line;
    bool domain_seen = false;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream is(line);
        std::string first;
        is >> first;
        if (first == "word") {
            std::vector<int> word;
            int idx;
            while (is >> idx) {
                if (idx < 1 || idx > static_cast<int>(group.generators.size()))
                    throw ParseError(path + ":" + std::to_string(lineno) + ": generator index " +
                                     std::to_string(idx) + " out of range");
                word.push_back(idx - 1);
            }
            Permutation p(group.domain.degree());
            for (int g : word) p = compose(p, group.generators[g], Convention::kLeftToRight);
            perms->push_back(p);
            words.push_back(std::move(word));
        } else if (!domain_seen && line.find('(') == std::string::npos) {
            domain_seen = true;  // optional domain line, must match the group file
            if (split_tokens(line) != group.domain.tokens())
                throw ParseError(path + ": tuple domain differs from the group domain");
        } else {
            perms->push_back(parse_cycles(line, group.domain));
            words.push_back({});
        }
    }
    return words;
}

std::vector<RationalMatrix> read_matrix_file(const std::string& path, size_t expected_count) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file '" + path + "'");
    std::string line;
    size_t dim = 0;
    std::vector<RationalMatrix> mats;
    std::vector<BigRational> pending;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream is(line);
        std::string tok;
        while (is >> tok) {
            if (tok == "dim") {
                is >> dim;
            } else if (tok == "matrix") {
                pending.clear();
            } else {
                pending.push_back(BigRational::from_string(tok));
                if (dim && pending.size() == dim * dim) {
                    RationalMatrix m(dim, dim);
                    for (size_t i = 0; i < dim * dim; ++i) m.at(i / dim, i % dim) = pending[i];
                    mats.push_back(std::move(m));
                    pending.clear();
                }
            }
        }
    }
    if (dim == 0) throw ParseError(path + ": missing 'dim' line");
    if (!pending.empty()) throw ParseError(path + ": trailing matrix entries");
    if (mats.size() != expected_count)
        throw ParseError(path + ": expected " + std::to_string(expected_count) + " matrices, got " +
                         std::to_string(mats.size()));
    return mats;
}

int run_genus(Output& out, const std::string& group_file, const std::string& tuple_file,
              const std::string& rep_arg, const std::string& data_dir) {
    Report& r = out.report.child("genus");
    GenusReport g;
    if (rep_arg.rfind("char", 0) == 0) {
        // char FILE:CHI with the tuple file listing class names
        std::string arg = rep_arg.substr(4);
        if (!arg.empty() && arg[0] == ' ') arg = arg.substr(1);
        size_t colon = arg.rfind(':');
        if (colon == std::string::npos) throw ParseError("--rep char needs FILE:CHI");
        CharacterTable table = CharacterTable::parse_file(arg.substr(0, colon));
        ClassTuple tuple{arg.substr(colon + 1), {}};
        std::ifstream in(tuple_file);
        if (!in) throw ParseError("cannot open tuple file '" + tuple_file + "'");
        std::string line;
        while (std::getline(in, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            std::istringstream is(line);
            std::string cls;
            while (is >> cls) tuple.classes.push_back(cls);
        }
        g = class_genus(table, tuple);
    } else {
        GroupFile group = load_group_file(group_file);
        std::vector<Permutation> perms;
        std::vector<std::vector<int>> words = read_words(tuple_file, group, &perms);
        if (rep_arg == "perm") {
            auto pg = std::make_shared<PermutationGroup>(
                PermutationGroup::from_generators(group.generators));
            DeletedPermRep rep(pg);
            g = genus_of_tuple(rep, GeneratingTuple{perms});
        } else if (rep_arg.rfind("matrix", 0) == 0) {
            std::string path = rep_arg.substr(6);
            size_t start = path.find_first_not_of(" :=");
            if (start == std::string::npos) throw ParseError("--rep matrix needs a file");
            auto gens = read_matrix_file(path.substr(start), group.generators.size());
            auto pg = std::make_shared<PermutationGroup>(
                PermutationGroup::from_generators(group.generators));
            MatrixRep rep(gens, pg);
            std::vector<MatrixTupleEntry> entries;
            for (size_t i = 0; i < words.size(); ++i) {
                if (words[i].empty() && !perms[i].is_identity())
                    throw ParseError("matrix representations need word-form tuple entries");
                RationalMatrix m = RationalMatrix::identity(rep.dim());
                for (int gi : words[i]) m = gens[gi] * m;
                entries.push_back(MatrixTupleEntry{std::move(m), perms[i]});
            }
            g = genus_of_tuple(rep, entries);
        } else {
            throw ParseError("unknown representation '" + rep_arg + "'");
        }
    }
    (void)data_dir;
    describe_genus(r, g);
    bool ok = g.all_ok();
    out.human << (ok ? "PASS" : "FAIL") << " — " << human_genus_summary(g) << "\n";
    for (const auto& w : g.witnesses) out.human << "    witness: " << w << "\n";
    return out.finish(ok ? 0 : 1);
}

int run_class_genus(Output& out, const std::string& table_file, const std::string& chi,
                    const std::string& classes) {
    CharacterTable table = CharacterTable::parse_file(table_file);
    ClassTuple tuple{chi, split(classes, ',')};
    GenusReport g = class_genus(table, tuple);
    describe_genus(out.report.child("class_genus"), g);
    bool ok = g.all_ok();
    out.human << (ok ? "PASS" : "FAIL") << " — " << human_genus_summary(g) << "\n";
    for (const auto& n : g.notes) out.human << "    " << n << "\n";
    return out.finish(ok ? 0 : 1);
}

int run_triple_count(Output& out, const std::string& table_file, const std::string& classes) {
    CharacterTable table = CharacterTable::parse_file(table_file);
    auto names = split(classes, ',');
    if (names.size() != 3) throw ParseError("--classes needs c1,c2,c3");
    BigInt count = table.class_triple_count(names[0], names[1], names[2]);
    Report& r = out.report.child("triple_count");
    r.set("group", table.group_name());
    r.set("classes", classes);
    r.set("count", count);
    out.human << table.group_name() << " (" << classes << "): " << count
              << " pairs completing a fixed third element\n";
    return out.finish(0);
}

int run_search(Output& out, const std::string& group_file, size_t n, long long target,
               size_t budget, uint64_t seed) {
    GroupFile group = load_group_file(group_file);
    auto pg = std::make_shared<PermutationGroup>(PermutationGroup::from_generators(group.generators));
    DeletedPermRep rep(pg);
    SearchOptions opt;
    opt.tuple_length = n;
    opt.target_genus = target;
    opt.budget = budget;
    opt.seed = seed;
    auto hits = search_tuples(rep, opt);
    Report& r = out.report.child("search");
    r.set("group_order", pg->order());
    r.set("tuple_length", n);
    r.set("target_genus", target);
    r.set("budget", budget);
    r.set("seed", std::to_string(seed));
    r.set("hits", hits.size());
    out.human << "found " << hits.size() << " tuple class(es) with genus " << target << "\n";
    size_t index = 0;
    for (const auto& hit : hits) {
        Report& h = r.child("hit" + std::to_string(index++));
        std::string cycles;
        for (const auto& g : hit.tuple.elements) {
            h.push("element", print_cycles(g, group.domain));
            cycles += (cycles.empty() ? "" : " | ") + g.cycle_type_string();
        }
        h.set("cycle_types", cycles);
        h.set("genus", *hit.report.genus);
        out.human << "  [" << cycles << "]";
        for (const auto& g : hit.tuple.elements) out.human << "  " << print_cycles(g, group.domain);
        out.human << "\n";
    }
    return out.finish(0);
}

int run_x0genus(Output& out, long long n, bool genus_zero, long long bound) {
    Report& r = out.report.child("x0");
    if (genus_zero) {
        auto levels = modular::genus_zero_levels(bound);
        std::string list;
        for (size_t i = 0; i < levels.size(); ++i)
            list += (i ? " " : "") + std::to_string(levels[i]);
        r.set("bound", bound);
        r.set("genus_zero_levels", list);
        out.human << "genus-zero levels up to " << bound << ": " << list << "\n";
    } else {
        modular::X0Genus g = modular::x0_genus(n);
        r.set("n", g.n);
        r.set("genus", g.genus);
        r.set("mu", g.mu);
        r.set("nu2", g.nu2);
        r.set("nu3", g.nu3);
        r.set("nu_inf", g.nu_inf);
        out.human << "X_0(" << n << "): genus " << g.genus << " (mu " << g.mu << ", nu2 " << g.nu2
                  << ", nu3 " << g.nu3 << ", cusps " << g.nu_inf << ")\n";
    }
    return out.finish(0);
}

void describe_witness(Report& r, std::ostringstream& human, const modular::CorollaryEntry& e) {
    Report& pr = r.child("p" + std::to_string(e.p));
    pr.set("p", e.p);
    if (e.witness) {
        pr.set("level", e.witness->level);
        pr.set("level_genus", e.witness->certificate.genus);
        pr.set("conductor", e.witness->curve.conductor);
        pr.set("curve", e.witness->curve.to_line());
    } else {
        pr.set("status", e.insufficient_data ? "insufficient data" : "no witness");
    }
    human << "p = " << e.p << ": ";
    if (e.witness)
        human << "N = " << e.witness->level << ", curve " << e.witness->curve.to_line() << "\n";
    else
        human << (e.insufficient_data ? "insufficient data" : "no witness") << "\n";
}

int run_steinberg(Output& out, long long p, long long below, const std::string& cremona_file) {
    CurveDatabase db = CurveDatabase::parse_file(cremona_file);
    Report& r = out.report.child("steinberg");
    r.set("curves", db.size());
    r.set("coverage", "[" + std::to_string(db.min_conductor()) + ", " +
                          std::to_string(db.max_conductor()) + "]");
    if (below > 0) {
        modular::CorollaryReport report = modular::verify_corollary(below, db);
        r.set("bound", below);
        size_t found = 0;
        for (const auto& e : report.entries) {
            describe_witness(r, out.human, e);
            if (e.witness) ++found;
        }
        r.set("witnesses", found);
        r.set("primes", report.entries.size());
        r.set("pass", report.pass);
        out.human << (report.pass ? "PASS" : "FAIL") << " — " << found << "/"
                  << report.entries.size() << " primes below " << below << " have witnesses\n";
        return out.finish(report.pass ? 0 : 1);
    }
    modular::CorollaryEntry entry;
    entry.p = p;
    auto search = modular::steinberg_witness(p, db);
    entry.witness = search.witness;
    entry.insufficient_data = search.data_short;
    describe_witness(r, out.human, entry);
    r.set("steinberg_dim", modular::steinberg_dim(p));
    return out.finish(entry.witness ? 0 : 1);
}

int run_validate(Output& out, const std::string& table_file, const std::string& cremona_file) {
    Report& r = out.report.child("validate");
    if (!table_file.empty()) {
        CharacterTable t = CharacterTable::parse_file(table_file);
        r.set("file", table_file);
        r.set("group", t.group_name());
        r.set("order", t.group_order());
        r.set("classes", t.classes().size());
        r.set("characters", t.characters().size());
        r.set("complete", t.complete());
        r.set("checksum", std::to_string(bundles::file_checksum(table_file)));
        out.human << table_file << ": character table of " << t.group_name() << ", "
                  << t.classes().size() << " classes, " << t.characters().size()
                  << " characters, all invariants hold\n";
    }
    if (!cremona_file.empty()) {
        CurveDatabase db = CurveDatabase::parse_file(cremona_file);
        r.set("file", cremona_file);
        r.set("curves", db.size());
        r.set("coverage", "[" + std::to_string(db.min_conductor()) + ", " +
                              std::to_string(db.max_conductor()) + "]");
        r.set("checksum", std::to_string(bundles::file_checksum(cremona_file)));
        out.human << cremona_file << ": " << db.size() << " curves, coverage ["
                  << db.min_conductor() << ", " << db.max_conductor()
                  << "], every record non-singular\n";
    }
    return out.finish(0);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verification toolkit for genus-1 generating tuples, Weyl group "
                 "constructions, character-table class data and Steinberg witnesses"};
    app.require_subcommand(1);

    Output out;
    std::string data_dir;
    app.add_flag("--structured", out.structured, "emit the machine-readable report");
    app.add_option("--data-dir", data_dir, "data directory (default: $GENUSTOOL_DATA or built-in)");

    auto* mathieu = app.add_subcommand("verify-mathieu", "check the five bundled displays");

    auto* weyl = app.add_subcommand("weyl", "Weyl group tuple checks");
    std::string wtype;
    int wrank = 0;
    bool rotation = false;
    weyl->add_option("--type", wtype, "root system type A..G, or a full label like E8")->required();
    weyl->add_option("--rank", wrank, "rank");
    weyl->add_flag("--rotation", rotation, "use the rotation-subgroup tuple");

    auto* genus = app.add_subcommand("genus", "genus of a tuple over a representation");
    std::string group_file, tuple_file, rep_arg = "perm";
    genus->add_option("--group", group_file, "group file");
    genus->add_option("--tuple", tuple_file, "tuple file")->required();
    genus->add_option("--rep", rep_arg, "perm | matrix FILE | char FILE:CHI");

    auto* cg = app.add_subcommand("class-genus", "genus from character-table class data");
    std::string table_file, chi, classes;
    cg->add_option("--table", table_file, "character table file")->required();
    cg->add_option("--chi", chi, "character name")->required();
    cg->add_option("--classes", classes, "comma-separated class names")->required();

    auto* tc = app.add_subcommand("triple-count", "class-multiplication structure constant");
    std::string tc_table, tc_classes;
    tc->add_option("--table", tc_table, "character table file")->required();
    tc->add_option("--classes", tc_classes, "c1,c2,c3")->required();

    auto* search = app.add_subcommand("search", "randomized search for target-genus tuples");
    std::string sgroup;
    size_t sn = 3, sbudget = 10000;
    long long starget = 1;
    uint64_t sseed = 1;
    search->add_option("--group", sgroup, "group file")->required();
    search->add_option("--n", sn, "tuple length");
    search->add_option("--target", starget, "target genus");
    search->add_option("--budget", sbudget, "sampling attempts");
    search->add_option("--seed", sseed, "random seed");

    auto* x0 = app.add_subcommand("x0genus", "genus of X_0(N)");
    long long xn = 1, xbound = 100;
    bool genus_zero = false;
    x0->add_option("--n", xn, "level N");
    x0->add_flag("--genus-zero", genus_zero, "list genus-zero levels");
    x0->add_option("--bound", xbound, "bound for --genus-zero");

    auto* st = app.add_subcommand("steinberg", "Steinberg witnesses from a curve table");
    long long sp = 0, sbelow = 0;
    std::string cremona_file;
    st->add_option("--p", sp, "single prime");
    st->add_option("--all-below", sbelow, "check every prime below the bound");
    st->add_option("--cremona", cremona_file, "allcurves file (default: bundled)");

    auto* val = app.add_subcommand("validate", "parse and validate a data file");
    std::string vtable, vcremona;
    val->add_option("--table", vtable, "character table file");
    val->add_option("--cremona", vcremona, "allcurves file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(mathieu)) return run_verify_mathieu(out, data_dir);
        if (app.got_subcommand(weyl)) {
            std::string label = wtype.size() > 1 ? wtype : wtype + std::to_string(wrank);
            return run_weyl(out, label, rotation);
        }
        if (app.got_subcommand(genus)) {
            if (rep_arg != "perm" && rep_arg.rfind("matrix", 0) != 0 &&
                rep_arg.rfind("char", 0) != 0)
                throw ParseError("unknown representation '" + rep_arg + "'");
            if (rep_arg.rfind("char", 0) != 0 && group_file.empty())
                throw ParseError("--group is required for perm and matrix representations");
            return run_genus(out, group_file, tuple_file, rep_arg, data_dir);
        }
        if (app.got_subcommand(cg)) return run_class_genus(out, table_file, chi, classes);
        if (app.got_subcommand(tc)) return run_triple_count(out, tc_table, tc_classes);
        if (app.got_subcommand(search)) return run_search(out, sgroup, sn, starget, sbudget, sseed);
        if (app.got_subcommand(x0)) return run_x0genus(out, xn, genus_zero, xbound);
        if (app.got_subcommand(st)) {
            if (cremona_file.empty()) cremona_file = bundles::cremona_path(data_dir);
            if (sbelow == 0 && sp == 0) throw ParseError("steinberg needs --p or --all-below");
            return run_steinberg(out, sp, sbelow, cremona_file);
        }
        if (app.got_subcommand(val)) {
            if (vtable.empty() && vcremona.empty())
                throw ParseError("validate needs --table or --cremona");
            return run_validate(out, vtable, vcremona);
        }
    } catch (const ParseError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
