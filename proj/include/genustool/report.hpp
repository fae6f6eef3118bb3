#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "genustool/bigint.hpp"
#include "genustool/rep.hpp"

namespace genustool {

// Ordered key/value tree with deterministic serialization; the machine
// output format of every CLI subcommand.
class Report {
public:
    void set(const std::string& key, const std::string& value);
    void set(const std::string& key, const char* value) { set(key, std::string(value)); }
    void set(const std::string& key, long long value) { set(key, std::to_string(value)); }
    void set(const std::string& key, size_t value) { set(key, std::to_string(value)); }
    void set(const std::string& key, bool value) { set(key, std::string(value ? "true" : "false")); }
    void set(const std::string& key, const BigInt& value) { set(key, value.to_string()); }

    Report& child(const std::string& key);
    void push(const std::string& key, const std::string& value);  // repeated key = list

    std::string to_text() const;  // "key: value" lines, two-space nesting

private:
    struct Node {
        std::string key;
        std::variant<std::string, std::unique_ptr<Report>> value;
    };
    std::vector<Node> nodes_;

    void write(std::string& out, int depth) const;
};

// Standard rendering of a genus transcript under `into`.
void describe_genus(Report& into, const GenusReport& r);

std::string human_genus_summary(const GenusReport& r);

}  // namespace genustool
