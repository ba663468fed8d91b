#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "twc/json_io.hpp"
#include "twc/oracle.hpp"
#include "twc/qcount.hpp"
#include "twc/rootsystem.hpp"
#include "twc/strata.hpp"
#include "twc/twist.hpp"
#include "twc/types.hpp"
#include "twc/weyl.hpp"

namespace py = pybind11;
using twc::io::json;

namespace {

py::object json_to_py(const json& j) {
  switch (j.type()) {
    case json::value_t::null: return py::none();
    case json::value_t::boolean: return py::bool_(j.get<bool>());
    case json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case json::value_t::number_float: return py::float_(j.get<double>());
    case json::value_t::string: return py::str(j.get<std::string>());
    case json::value_t::array: {
      py::list out;
      for (const json& item : j) out.append(json_to_py(item));
      return out;
    }
    case json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

py::object big_coeffs(const twc::QPolynomial& p) {
  const py::object to_int = py::module_::import("builtins").attr("int");
  py::list out;
  for (const twc::BigInt& c : p.coeffs()) out.append(to_int(c.str()));
  return out;
}

twc::Word word_in(const std::vector<int>& letters, int rank) {
  twc::Word w;
  for (int v : letters) {
    if (v < 1 || v > rank)
      throw twc::ValidationError("word letter " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(rank));
    w.push_back(static_cast<std::uint8_t>(v - 1));
  }
  return w;
}

std::vector<int> word_out(const twc::Word& w) {
  std::vector<int> out;
  for (std::uint8_t v : w) out.push_back(static_cast<int>(v) + 1);
  return out;
}

twc::IndexSet subset_in(const std::vector<int>& indices, int rank) {
  twc::IndexSet s;
  for (int v : indices) {
    if (v < 1 || v > rank)
      throw twc::ValidationError("index " + std::to_string(v) + " is outside 1.." +
                                 std::to_string(rank));
    s.add(v - 1);
  }
  return s;
}

twc::IVec weight_in(const std::vector<int>& coords, int rank) {
  if (static_cast<int>(coords.size()) != rank)
    throw twc::ValidationError("weight needs " + std::to_string(rank) + " coordinates");
  twc::IVec v = twc::IVec::zero(rank);
  for (int i = 0; i < rank; ++i) v[i] = coords[static_cast<std::size_t>(i)];
  return v;
}

twc::WeylEnumeration full_enum(const twc::RootSystem& rs, std::uint64_t cap) {
  return twc::WeylEnumeration::build(rs, twc::IndexSet::full(rs.rank()), cap);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact combinatorics of twisted wonderful compactifications";

  py::register_exception<twc::ValidationError>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<twc::CapExceededError>(m, "CapExceeded", PyExc_RuntimeError);

  py::class_<twc::RootSystem>(m, "RootSystem")
      .def_static(
          "build",
          [](const std::string& family, int rank) {
            if (family.size() != 1)
              throw twc::ValidationError("family must be a single letter A..G");
            return twc::RootSystem::build({twc::family_from_letter(family[0]), rank});
          },
          py::arg("family"), py::arg("rank"))
      .def_property_readonly("label", &twc::RootSystem::label)
      .def_property_readonly("rank", &twc::RootSystem::rank)
      .def_property_readonly("num_positive_roots", &twc::RootSystem::num_positive)
      .def_property_readonly("dim_g", &twc::RootSystem::dim_g)
      .def_property_readonly("weyl_order", &twc::RootSystem::weyl_order)
      .def_property_readonly("cartan",
                             [](const twc::RootSystem& rs) {
                               std::vector<std::vector<int>> rows;
                               for (int i = 0; i < rs.rank(); ++i) {
                                 std::vector<int> row;
                                 for (int j = 0; j < rs.rank(); ++j)
                                   row.push_back(rs.cartan().at(i, j));
                                 rows.push_back(std::move(row));
                               }
                               return rows;
                             })
      .def_property_readonly("positive_roots",
                             [](const twc::RootSystem& rs) {
                               std::vector<std::vector<int>> roots;
                               for (const twc::IVec& r : rs.positive_roots()) {
                                 std::vector<int> coords;
                                 for (int i = 0; i < rs.rank(); ++i)
                                   coords.push_back(r[i]);
                                 roots.push_back(std::move(coords));
                               }
                               return roots;
                             })
      .def("__repr__",
           [](const twc::RootSystem& rs) { return "RootSystem(" + rs.label() + ")"; });

  py::class_<twc::DiagramAut>(m, "DiagramAut")
      .def_static("resolve", &twc::DiagramAut::resolve, py::arg("root_system"),
                  py::arg("text"))
      .def_property_readonly("one_line", &twc::DiagramAut::one_line)
      .def_property_readonly("order", &twc::DiagramAut::order)
      .def_property_readonly("num_orbits", &twc::DiagramAut::num_orbits)
      .def_property_readonly("is_identity", &twc::DiagramAut::is_identity)
      .def_property_readonly("orbits",
                             [](const twc::DiagramAut& aut) {
                               std::vector<std::vector<int>> out;
                               for (const twc::IndexSet& orbit : aut.orbits()) {
                                 std::vector<int> one_based;
                                 for (int i : orbit.indices()) one_based.push_back(i + 1);
                                 out.push_back(std::move(one_based));
                               }
                               return out;
                             })
      .def("__repr__", [](const twc::DiagramAut& aut) {
        std::string s = "DiagramAut([";
        const auto line = aut.one_line();
        for (std::size_t i = 0; i < line.size(); ++i) {
          if (i) s += ", ";
          s += std::to_string(line[i]);
        }
        return s + "])";
      });

  m.def(
      "pieces",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut, std::uint64_t cap) {
        return json_to_py(twc::io::piece_list_json(
            rs, aut, "pieces", twc::enumerate_pieces(rs, aut, full_enum(rs, cap), cap)));
      },
      py::arg("root_system"), py::arg("twist"), py::arg("cap") = twc::kDefaultCap);

  m.def(
      "steinberg_boundary",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut, std::uint64_t cap) {
        return json_to_py(twc::io::piece_list_json(
            rs, aut, "steinberg_boundary",
            twc::steinberg_boundary(rs, aut, full_enum(rs, cap), cap)));
      },
      py::arg("root_system"), py::arg("twist"), py::arg("cap") = twc::kDefaultCap);

  m.def(
      "irreducible_components",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut) {
        return json_to_py(twc::io::piece_list_json(rs, aut, "irreducible_components",
                                                   twc::irreducible_components(rs, aut)));
      },
      py::arg("root_system"), py::arg("twist"));

  m.def(
      "nilcone",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut,
         const std::vector<int>& weight, std::uint64_t cap) {
        return json_to_py(twc::io::piece_list_json(
            rs, aut, "nilcone",
            twc::nilcone(rs, aut, full_enum(rs, cap), weight_in(weight, rs.rank()), cap)));
      },
      py::arg("root_system"), py::arg("twist"), py::arg("weight"),
      py::arg("cap") = twc::kDefaultCap);

  m.def(
      "coset_reps",
      [](const twc::RootSystem& rs, const std::vector<int>& subset, std::uint64_t cap) {
        const twc::WeylEnumeration en = full_enum(rs, cap);
        std::vector<std::vector<int>> out;
        for (std::uint32_t k :
             twc::min_coset_rep_indices(en, subset_in(subset, rs.rank())))
          out.push_back(word_out(en.word(k)));
        return out;
      },
      py::arg("root_system"), py::arg("subset") = std::vector<int>{},
      py::arg("cap") = twc::kDefaultCap);

  m.def(
      "twisted_coxeter",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut) {
        std::vector<std::vector<int>> out;
        for (const twc::Word& w : twc::twisted_coxeter_elements(rs, aut))
          out.push_back(word_out(w));
        return out;
      },
      py::arg("root_system"), py::arg("twist"));

  m.def(
      "poincare",
      [](const twc::RootSystem& rs, const std::vector<int>& subset, std::uint64_t cap) {
        const twc::WeylEnumeration en =
            twc::WeylEnumeration::build(rs, subset_in(subset, rs.rank()), cap);
        return big_coeffs(twc::poincare(en));
      },
      py::arg("root_system"), py::arg("subset"), py::arg("cap") = twc::kDefaultCap);

  m.def(
      "poincare",
      [](const twc::RootSystem& rs, std::uint64_t cap) {
        return big_coeffs(twc::poincare(full_enum(rs, cap)));
      },
      py::arg("root_system"), py::arg("cap") = twc::kDefaultCap);

  m.def(
      "boundary_count",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut, std::uint64_t cap) {
        return big_coeffs(twc::boundary_count(rs, aut, full_enum(rs, cap)));
      },
      py::arg("root_system"), py::arg("twist"), py::arg("cap") = twc::kDefaultCap);

  m.def(
      "boundary_count_pretty",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut, std::uint64_t cap) {
        return twc::boundary_count(rs, aut, full_enum(rs, cap)).pretty();
      },
      py::arg("root_system"), py::arg("twist"), py::arg("cap") = twc::kDefaultCap);

  m.def(
      "verify",
      [](const twc::RootSystem& rs, const twc::DiagramAut& aut, const std::string& check,
         int trials, std::uint64_t seed, std::uint64_t cap) {
        const twc::Report report =
            twc::run_check(check, rs, aut, full_enum(rs, cap), trials, seed, cap);
        return json_to_py(twc::io::report_json(report));
      },
      py::arg("root_system"), py::arg("twist"), py::arg("check"),
      py::arg("trials") = 100, py::arg("seed") = twc::kDefaultSeed,
      py::arg("cap") = twc::kDefaultCap);

  m.def("verification_checks", [] { return twc::verification_check_names(); });

  m.def(
      "canonical_word",
      [](const twc::RootSystem& rs, const std::vector<int>& word) {
        return word_out(twc::canonicalize_word(rs, word_in(word, rs.rank())));
      },
      py::arg("root_system"), py::arg("word"));

  m.def(
      "multiply",
      [](const twc::RootSystem& rs, const std::vector<int>& u, const std::vector<int>& v) {
        return word_out(
            twc::multiply(rs, word_in(u, rs.rank()), word_in(v, rs.rank())));
      },
      py::arg("root_system"), py::arg("u"), py::arg("v"));

  m.def(
      "act_on_weight",
      [](const twc::RootSystem& rs, const std::vector<int>& word,
         const std::vector<int>& coords) {
        const twc::IVec out =
            twc::act_on_weight(rs, word_in(word, rs.rank()), weight_in(coords, rs.rank()));
        std::vector<int> result;
        for (int i = 0; i < rs.rank(); ++i) result.push_back(out[i]);
        return result;
      },
      py::arg("root_system"), py::arg("word"), py::arg("weight"));

  m.attr("DEFAULT_CAP") = twc::kDefaultCap;
  m.attr("DEFAULT_SEED") = twc::kDefaultSeed;
}
