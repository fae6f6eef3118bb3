#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "genustool/char_table.hpp"
#include "genustool/cremona.hpp"
#include "genustool/perm.hpp"
#include "genustool/perm_group.hpp"

namespace genustool {

// A generating display from the bundled data, stored verbatim: the three printed
// permutations with the relation g1 * g2 = g3, never silently corrected.
struct DisplayRecord {
    std::string group_name;
    std::string display_id;
    std::string character;
    long long dimension = 0;
    long long expected_genus = 1;
    bool expect_failure = false;  // the verbatim data is known inconsistent
    Domain domain;
    std::vector<std::string> cycle_strings;  // byte-for-byte as printed
    std::vector<Permutation> relation;       // parsed g1, g2, g3

    // product-one tuple (g1, g2, g3^-1) for the genus machinery
    GeneratingTuple product_tuple() const;
};

// Group file: first line domain tokens, then one generator per line in cycle
// notation; "()" is the identity; '#' starts a comment.
struct GroupFile {
    Domain domain;
    std::vector<Permutation> generators;
};

GroupFile load_group_file(const std::string& path);

// Tuple file: '# key: value' headers, a domain line, then one permutation
// per line. Default form lists a product-one tuple; "form: relation" marks
// the three-line g1 * g2 = g3 shape used by the bundled displays.
DisplayRecord load_tuple_file(const std::string& path);

namespace bundles {

// Data directory resolution: explicit argument, else $GENUSTOOL_DATA, else
// the compiled-in default.
std::string data_dir(const std::string& override_dir = "");

std::vector<DisplayRecord> load_mathieu(const std::string& dir = "");
std::vector<std::string> char_table_names();       // bundled .tbl basenames
std::vector<std::string> complete_table_names();   // the small oracle tables
CharacterTable load_char_table(const std::string& name, const std::string& dir = "");
CurveDatabase load_cremona(const std::string& dir = "");
std::string cremona_path(const std::string& dir = "");

uint64_t file_checksum(const std::string& path);  // FNV-1a over the bytes

}  // namespace bundles
}  // namespace genustool
