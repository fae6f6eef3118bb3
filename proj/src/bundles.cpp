#include "genustool/bundles.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#ifndef GENUSTOOL_DEFAULT_DATA_DIR
#define GENUSTOOL_DEFAULT_DATA_DIR "data"
#endif

namespace genustool {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

}  // namespace

GeneratingTuple DisplayRecord::product_tuple() const {
    GeneratingTuple t;
    t.elements = {relation[0], relation[1], relation[2].inverse()};
    return t;
}

GroupFile load_group_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    std::optional<Domain> domain;
    std::vector<Permutation> gens;
    int lineno = 0;
    for (const std::string& raw : lines) {
        ++lineno;
        std::string line = raw;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        if (!domain) {
            domain.emplace(split_ws(line));
            continue;
        }
        try {
            gens.push_back(parse_cycles(line, *domain));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    if (!domain) throw ParseError(path + ": missing domain line");
    if (gens.empty()) throw ParseError(path + ": no generators");
    return GroupFile{std::move(*domain), std::move(gens)};
}

DisplayRecord load_tuple_file(const std::string& path) {
    std::vector<std::string> lines = read_lines(path);
    std::map<std::string, std::string> headers;
    std::optional<Domain> domain;
    std::vector<std::string> cycle_strings;
    std::vector<Permutation> perms;
    int lineno = 0;
    for (const std::string& raw : lines) {
        ++lineno;
        if (!raw.empty() && raw[0] == '#') {
            std::string body = raw.substr(1);
            size_t colon = body.find(':');
            if (colon != std::string::npos) {
                std::string key = body.substr(0, colon);
                std::string value = body.substr(colon + 1);
                auto trim = [](std::string& s) {
                    size_t b = s.find_first_not_of(" \t");
                    size_t e = s.find_last_not_of(" \t");
                    s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
                };
                trim(key);
                trim(value);
                headers[key] = value;
            }
            continue;
        }
        if (raw.find_first_not_of(" \t") == std::string::npos) continue;
        if (!domain) {
            domain.emplace(split_ws(raw));
            continue;
        }
        cycle_strings.push_back(raw);
        try {
            perms.push_back(parse_cycles(raw, *domain));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what(), lineno);
        }
    }
    if (!domain) throw ParseError(path + ": missing domain line");

    DisplayRecord rec{.group_name = headers.count("group") ? headers["group"] : "",
                         .display_id = headers.count("display") ? headers["display"] : "",
                         .character = headers.count("character") ? headers["character"] : "",
                         .dimension = headers.count("dimension") ? std::stoll(headers["dimension"]) : 0,
                         .expected_genus =
                             headers.count("expected-genus") ? std::stoll(headers["expected-genus"]) : 1,
                         .expect_failure = headers.count("expected-verification") &&
                                           headers["expected-verification"] == "fails",
                         .domain = std::move(*domain),
                         .cycle_strings = std::move(cycle_strings),
                         .relation = std::move(perms)};
    if (headers.count("form") && headers["form"] != "relation")
        throw ParseError(path + ": unsupported form '" + headers["form"] + "'");
    if (rec.relation.size() != 3) throw ParseError(path + ": expected three permutations");
    return rec;
}

namespace bundles {

std::string data_dir(const std::string& override_dir) {
    if (!override_dir.empty()) return override_dir;
    if (const char* env = std::getenv("GENUSTOOL_DATA"); env && *env) return env;
    return GENUSTOOL_DEFAULT_DATA_DIR;
}

std::vector<DisplayRecord> load_mathieu(const std::string& dir) {
    std::vector<DisplayRecord> out;
    for (const char* name : {"m11", "m12", "m22", "m23", "m24"})
        out.push_back(load_tuple_file(data_dir(dir) + "/mathieu/" + name + ".tuple"));
    return out;
}

std::vector<std::string> char_table_names() {
    return {"s3", "s4", "a4", "a5", "s5", "d4", "hs", "mcl", "co3", "co2", "2co1", "tits", "j2"};
}

std::vector<std::string> complete_table_names() { return {"s3", "s4", "a4", "a5", "s5", "d4"}; }

CharacterTable load_char_table(const std::string& name, const std::string& dir) {
    return CharacterTable::parse_file(data_dir(dir) + "/chartab/" + name + ".tbl");
}

std::string cremona_path(const std::string& dir) {
    return data_dir(dir) + "/cremona/allcurves-25000.txt";
}

CurveDatabase load_cremona(const std::string& dir) {
    return CurveDatabase::parse_file(cremona_path(dir));
}

uint64_t file_checksum(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    uint64_t hash = 0xcbf29ce484222325ull;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    }
    return hash;
}

}  // namespace bundles
}  // namespace genustool
