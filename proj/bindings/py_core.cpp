#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <sstream>

#include "genustool/bundles.hpp"
#include "genustool/char_table.hpp"
#include "genustool/mathieu.hpp"
#include "genustool/modular.hpp"
#include "genustool/root_system.hpp"

namespace py = pybind11;
using namespace genustool;

namespace {

py::object big_to_py(const BigInt& v) {
    return py::reinterpret_steal<py::object>(
        PyLong_FromString(v.to_string().c_str(), nullptr, 10));
}

py::dict genus_to_dict(const GenusReport& r) {
    py::dict d;
    d["representation"] = r.rep_description;
    d["n"] = r.n;
    d["dim_v"] = r.dim_v;
    d["dim_v_invariant"] = r.dim_v_g;
    d["fixed_dims"] = r.fixed_dims;
    d["lhs"] = r.lhs;
    d["parity_ok"] = r.parity_ok;
    if (r.genus) d["genus"] = *r.genus;
    d["product_ok"] = r.product_ok;
    d["product_note"] = r.product_note;
    d["generates"] = r.generates;
    d["generation_note"] = r.generation_note;
    d["scott_ok"] = r.scott_ok;
    d["scott_slack"] = r.scott_slack;
    d["witnesses"] = r.witnesses;
    d["notes"] = r.notes;
    d["ok"] = r.all_ok();
    return d;
}

Domain make_domain(const std::vector<std::string>& tokens) { return Domain(tokens); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact genus computations for generating tuples, Weyl groups, character "
              "tables, modular curve levels and curve databases";

    py::class_<Permutation>(m, "Permutation")
        .def(py::init<int>(), py::arg("degree") = 0)
        .def_static("from_images", &Permutation::from_images)
        .def_property_readonly("degree", &Permutation::degree)
        .def("image", &Permutation::image)
        .def("images", &Permutation::images)
        .def("inverse", &Permutation::inverse)
        .def("is_identity", &Permutation::is_identity)
        .def("cycle_count", &Permutation::cycle_count)
        .def("fixed_points", &Permutation::fixed_points)
        .def("cycle_type", &Permutation::cycle_type)
        .def("order", [](const Permutation& p) { return big_to_py(p.order()); })
        .def("power", &Permutation::power)
        .def("__eq__", [](const Permutation& a, const Permutation& b) { return a == b; })
        .def("__mul__",  // left-to-right, "apply self first"
             [](const Permutation& a, const Permutation& b) {
                 return compose(a, b, Convention::kLeftToRight);
             });

    m.def("parse_cycles",
          [](const std::string& text, const std::vector<std::string>& tokens) {
              return parse_cycles(text, make_domain(tokens));
          },
          py::arg("text"), py::arg("domain"));
    m.def("print_cycles",
          [](const Permutation& p, const std::vector<std::string>& tokens) {
              return print_cycles(p, make_domain(tokens));
          });

    py::class_<PermutationGroup, std::shared_ptr<PermutationGroup>>(m, "PermutationGroup")
        .def_static("from_generators",
                    [](const std::vector<Permutation>& gens) {
                        return std::make_shared<PermutationGroup>(
                            PermutationGroup::from_generators(gens));
                    })
        .def_property_readonly("degree", &PermutationGroup::degree)
        .def_property_readonly("order",
                               [](const PermutationGroup& g) { return big_to_py(g.order()); })
        .def_property_readonly("base", &PermutationGroup::base)
        .def("contains", &PermutationGroup::contains)
        .def("is_transitive", &PermutationGroup::is_transitive);

    m.def("tuple_product_check", [](const std::vector<Permutation>& elements) {
        ProductCheck pc = tuple_product_check(GeneratingTuple{elements});
        py::dict d;
        d["holds"] = pc.holds;
        d["left_to_right"] = pc.left_to_right;
        d["right_to_left"] = pc.right_to_left;
        return d;
    });

    m.def("diagnose_product", [](const std::vector<Permutation>& elements, size_t index) {
        return diagnose_product(GeneratingTuple{elements}, index);
    });

    m.def("deleted_perm_genus",
          [](const std::vector<Permutation>& generators, const std::vector<Permutation>& tuple) {
              auto group = std::make_shared<PermutationGroup>(
                  PermutationGroup::from_generators(generators));
              DeletedPermRep rep(group);
              return genus_to_dict(genus_of_tuple(rep, GeneratingTuple{tuple}));
          },
          py::arg("generators"), py::arg("tuple"));

    m.def("search_tuples",
          [](const std::vector<Permutation>& generators, size_t n, long long target,
             size_t budget, uint64_t seed) {
              auto group = std::make_shared<PermutationGroup>(
                  PermutationGroup::from_generators(generators));
              DeletedPermRep rep(group);
              SearchOptions opt;
              opt.tuple_length = n;
              opt.target_genus = target;
              opt.budget = budget;
              opt.seed = seed;
              py::list out;
              for (const auto& hit : search_tuples(rep, opt)) {
                  py::dict d;
                  d["tuple"] = hit.tuple.elements;
                  d["report"] = genus_to_dict(hit.report);
                  d["fingerprint"] = hit.fingerprint;
                  out.append(d);
              }
              return out;
          },
          py::arg("generators"), py::arg("n") = 3, py::arg("target") = 1,
          py::arg("budget") = 10000, py::arg("seed") = 1);

    m.def("weyl_check",
          [](const std::string& label, bool rotation) {
              RootSystem rs = RootSystem::build(label);
              py::dict d;
              d["label"] = rs.label();
              d["roots"] = rs.root_count();
              d["weyl_order"] = big_to_py(rs.weyl_group()->order());
              if (rotation) {
                  RotationReport rr = verify_rotation_subgroup(rs, rotation_tuple(rs));
                  d["subgroup_order"] = big_to_py(rr.subgroup_order);
                  d["index_two_ok"] = rr.index_two_ok;
                  d["determinants_ok"] = rr.determinants_ok;
                  d["genus"] = genus_to_dict(rr.genus);
                  d["ok"] = rr.all_ok();
              } else {
                  GenusReport g = weyl_genus(rs, full_tuple(rs), rs.weyl_group()->order());
                  d["genus"] = genus_to_dict(g);
                  d["ok"] = g.all_ok();
              }
              return d;
          },
          py::arg("label"), py::arg("rotation") = false);

    py::class_<CharacterTable>(m, "CharacterTable")
        .def_static("parse_file", &CharacterTable::parse_file)
        .def_property_readonly("group_name", &CharacterTable::group_name)
        .def_property_readonly("order",
                               [](const CharacterTable& t) { return big_to_py(t.group_order()); })
        .def_property_readonly("complete", &CharacterTable::complete)
        .def_property_readonly("num_classes",
                               [](const CharacterTable& t) { return t.classes().size(); })
        .def_property_readonly("num_characters",
                               [](const CharacterTable& t) { return t.characters().size(); })
        .def("class_genus",
             [](const CharacterTable& t, const std::string& chi,
                const std::vector<std::string>& classes) {
                 return genus_to_dict(class_genus(t, ClassTuple{chi, classes}));
             })
        .def("triple_count",
             [](const CharacterTable& t, const std::string& c1, const std::string& c2,
                const std::string& c3) { return big_to_py(t.class_triple_count(c1, c2, c3)); });

    m.def("sl2_order", [](long long n) { return big_to_py(modular::sl2_order(n)); });
    m.def("index_gamma0", [](long long n) { return big_to_py(modular::index_gamma0(n)); });
    m.def("index_gamma", [](long long n) { return big_to_py(modular::index_gamma(n)); });
    m.def("steinberg_dim", &modular::steinberg_dim);
    m.def("genus_zero_levels", &modular::genus_zero_levels);
    m.def("x0_genus", [](long long n) {
        modular::X0Genus g = modular::x0_genus(n);
        py::dict d;
        d["n"] = g.n;
        d["genus"] = g.genus;
        d["mu"] = g.mu;
        d["nu2"] = g.nu2;
        d["nu3"] = g.nu3;
        d["nu_inf"] = g.nu_inf;
        return d;
    });

    py::class_<CurveDatabase>(m, "CurveDatabase")
        .def_static("parse_file", &CurveDatabase::parse_file)
        .def_property_readonly("size", &CurveDatabase::size)
        .def_property_readonly("min_conductor", &CurveDatabase::min_conductor)
        .def_property_readonly("max_conductor", &CurveDatabase::max_conductor)
        .def("has_conductor",
             [](const CurveDatabase& db, long long n) {
                 switch (db.has_conductor(n)) {
                     case CurveDatabase::Presence::kPresent: return "present";
                     case CurveDatabase::Presence::kAbsentInCoverage: return "absent";
                     default: return "unknown";
                 }
             })
        .def("lookup", [](const CurveDatabase& db, long long n) {
            py::list out;
            if (const auto* recs = db.lookup(n))
                for (const auto& r : *recs) out.append(r.to_line());
            return out;
        });

    m.def("steinberg_witness", [](long long p, const CurveDatabase& db) {
        auto search = modular::steinberg_witness(p, db);
        py::dict d;
        d["p"] = p;
        d["data_short"] = search.data_short;
        if (search.witness) {
            d["level"] = search.witness->level;
            d["curve"] = search.witness->curve.to_line();
        }
        return d;
    });

    m.def("verify_corollary", [](long long bound, const CurveDatabase& db) {
        auto rep = modular::verify_corollary(bound, db);
        py::dict d;
        d["pass"] = rep.pass;
        d["primes"] = rep.entries.size();
        size_t witnesses = 0;
        for (const auto& e : rep.entries)
            if (e.witness) ++witnesses;
        d["witnesses"] = witnesses;
        return d;
    });

    m.def("data_dir", [](const std::string& dir) { return bundles::data_dir(dir); },
          py::arg("override_dir") = "");

    m.def("verify_mathieu", [](const std::string& dir) {
        py::list out;
        for (const auto& rec : bundles::load_mathieu(dir)) {
            DisplayVerification v = verify_display(rec);
            py::dict d;
            d["display"] = rec.display_id;
            d["ok"] = v.ok;
            d["expected_failure"] = rec.expect_failure;
            d["generated_order"] = big_to_py(v.generated_order);
            d["classical_order"] = big_to_py(v.expected_order);
            d["genus"] = genus_to_dict(v.genus);
            if (v.implied_first_element) d["implied_first_element"] = *v.implied_first_element;
            out.append(d);
        }
        return out;
    }, py::arg("data_dir") = "");
}
