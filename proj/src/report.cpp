#include "genustool/report.hpp"

#include <sstream>

namespace genustool {

void Report::set(const std::string& key, const std::string& value) {
    nodes_.push_back(Node{key, value});
}

Report& Report::child(const std::string& key) {
    auto sub = std::make_unique<Report>();
    Report& ref = *sub;
    nodes_.push_back(Node{key, std::move(sub)});
    return ref;
}

void Report::push(const std::string& key, const std::string& value) {
    nodes_.push_back(Node{key, value});
}

void Report::write(std::string& out, int depth) const {
    const std::string indent(2 * static_cast<size_t>(depth), ' ');
    for (const auto& node : nodes_) {
        if (std::holds_alternative<std::string>(node.value)) {
            out += indent + node.key + ": " + std::get<std::string>(node.value) + "\n";
        } else {
            out += indent + node.key + ":\n";
            std::get<std::unique_ptr<Report>>(node.value)->write(out, depth + 1);
        }
    }
}

std::string Report::to_text() const {
    std::string out;
    write(out, 0);
    return out;
}

void describe_genus(Report& into, const GenusReport& r) {
    into.set("representation", r.rep_description);
    into.set("tuple_length", r.n);
    into.set("dim_v", r.dim_v);
    into.set("dim_v_invariant", r.dim_v_g);
    std::ostringstream dims;
    for (size_t i = 0; i < r.fixed_dims.size(); ++i) dims << (i ? " " : "") << r.fixed_dims[i];
    into.set("fixed_dims", dims.str());
    into.set("lhs", r.lhs);
    into.set("parity_ok", r.parity_ok);
    if (r.genus) into.set("genus", *r.genus);
    into.set("product_ok", r.product_ok);
    into.set("product_note", r.product_note);
    into.set("generates", r.generates);
    into.set("generation_note", r.generation_note);
    into.set("scott_ok", r.scott_ok);
    into.set("scott_slack", r.scott_slack);
    for (const auto& n : r.notes) into.push("note", n);
    for (const auto& w : r.witnesses) into.push("witness", w);
}

std::string human_genus_summary(const GenusReport& r) {
    std::ostringstream os;
    os << r.rep_description << ": ";
    if (r.genus)
        os << "genus " << *r.genus;
    else
        os << "no genus (lhs " << r.lhs << " odd)";
    os << ", product " << (r.product_ok ? "ok" : "FAIL") << ", generation "
       << (r.generates ? "ok" : "FAIL") << ", Scott " << (r.scott_ok ? "ok" : "FAIL");
    return os.str();
}

}  // namespace genustool
