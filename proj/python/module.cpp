// Python bindings for the main operations: words, permutations, coded
// sets, the truth-table decider, the coding-equation verifier, and the
// abelianization toolkit.

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "permlab/abelian.hpp"
#include "permlab/pi01.hpp"
#include "permlab/testsets.hpp"
#include "permlab/ttwp.hpp"
#include "permlab/version.hpp"

namespace py = pybind11;
using namespace permlab;

namespace {

Word word_from_text(std::string const& text) { return parse_word(text); }

Presentation presentation_from_text(std::string const& text) {
  std::istringstream in(text);
  return parse_presentation(in);
}

ColumnFunction column_function_from_arg(py::object const& f) {
  if (py::isinstance<py::str>(f)) {
    return builtin_column_function(f.cast<std::string>());
  }
  if (py::isinstance<ColumnFunction>(f)) {
    return f.cast<ColumnFunction>();
  }
  auto fn = f.cast<std::function<int64_t(int64_t, int64_t)>>();
  return {fn, "python"};
}

IntegerMatrix matrix_from_rows(std::vector<std::vector<int64_t>> const& rows) {
  size_t cols = rows.empty() ? 0 : rows[0].size();
  IntegerMatrix m(rows.size(), cols);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) {
      throw std::invalid_argument("ragged matrix");
    }
    for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

std::vector<std::vector<int64_t>> matrix_to_rows(IntegerMatrix const& m) {
  std::vector<std::vector<int64_t>> rows(m.rows);
  for (size_t i = 0; i < m.rows; ++i) {
    for (size_t j = 0; j < m.cols; ++j) {
      rows[i].push_back(m.at(i, j).to_int64());
    }
  }
  return rows;
}

}  // namespace

PYBIND11_MODULE(permlab, m) {
  m.doc() =
      "word problems of finitely generated groups of computable "
      "permutations";
  m.attr("__version__") = kVersion;

  // -- words ------------------------------------------------------------
  py::class_<Word>(m, "Word")
      .def(py::init(&word_from_text), py::arg("text"))
      .def("__str__", &format_word)
      .def("__repr__",
           [](Word const& w) { return "Word('" + format_word(w) + "')"; })
      .def("__eq__", [](Word const& a, Word const& b) { return a == b; })
      .def("__len__", &Word::size)
      .def("__mul__", &multiply)
      .def("reduce", &free_reduce)
      .def("inverse", [](Word const& w) { return invert(w); })
      .def("is_reduced", &is_reduced);

  m.def("parse_word", &word_from_text, py::arg("text"));
  m.def("format_word", &format_word);
  m.def("free_reduce", &free_reduce);
  m.def("multiply", &multiply);
  m.def("invert", &invert);
  m.def("conjugate", &conjugate, py::arg("u"), py::arg("t"));
  m.def("commutator", &commutator, py::arg("u"), py::arg("v"));
  m.def("exponent_sum",
        [](Word const& w, std::string const& base,
           std::optional<int64_t> index) {
          return exponent_sum(w, base, index);
        },
        py::arg("word"), py::arg("base"), py::arg("index") = std::nullopt);
  m.def("separator_membership",
        [](Word const& w, std::string const& base,
           std::optional<int64_t> index) {
          return separator_membership(w, base, index);
        },
        py::arg("word"), py::arg("base"), py::arg("index") = std::nullopt);

  // -- permutations -------------------------------------------------------
  py::class_<Point>(m, "Point")
      .def(py::init([](int64_t col, int64_t row) {
             return Point{col, row};
           }),
           py::arg("col"), py::arg("row"))
      .def_readonly("col", &Point::col)
      .def_readonly("row", &Point::row)
      .def("__eq__", [](Point const& a, Point const& b) { return a == b; })
      .def("__repr__", [](Point const& p) { return to_string(p); });

  py::class_<Region>(m, "Region")
      .def(py::init<int64_t, int64_t, int64_t>(), py::arg("cmin"),
           py::arg("cmax"), py::arg("rmax"));

  py::class_<Permutation>(m, "Permutation")
      .def("__call__", &apply, py::arg("point"))
      .def("apply", &apply, py::arg("point"))
      .def("apply_inverse", &apply_inverse, py::arg("point"))
      .def_readonly("label", &Permutation::label);

  m.def("identity_perm", &identity_perm);
  m.def("inverse_perm", &inverse);
  m.def("compose", &compose);
  m.def("sigma_paired", &sigma_paired);
  m.def("tau_paired", &tau_paired);
  m.def("sigma_line", &sigma_line);
  m.def("tau_triples", &tau_triples);
  m.def("alpha_from_f", [](py::object const& f) {
    return alpha_from_f(column_function_from_arg(f));
  });
  m.def("beta_from_g",
        [](CodedSet const& set) { return beta_from_g(set.coder); });
  m.def("cycle_adder",
        [](std::vector<std::pair<int64_t, int64_t>> const& rows,
           int64_t horizon) {
          return cycle_adder(table_enumerator(rows, "py"), horizon);
        },
        py::arg("schedule"), py::arg("step_horizon"));
  m.def("bounded_equal", &bounded_equal);
  m.def("is_identity_on", &is_identity_on);

  // -- coded sets ---------------------------------------------------------
  py::class_<CodedSet>(m, "CodedSet")
      .def_static("from_schedule",
                  [](std::vector<std::pair<int64_t, int64_t>> const& rows,
                     std::string const& label) {
                    return coded_set_from_table(rows, label);
                  },
                  py::arg("rows"), py::arg("label") = "schedule")
      .def("contains", &CodedSet::contains)
      .def("complement_contains", &CodedSet::complement_contains)
      .def("coder_value",
           [](CodedSet const& set, int64_t t) { return set.coder.g(t); })
      .def_readonly("label", &CodedSet::label);

  m.def("empty_coded_set", &empty_coded_set);
  m.def("finite_coded_set", &finite_coded_set);
  m.def("periodic_coded_set", &periodic_coded_set);

  // -- decider --------------------------------------------------------------
  py::class_<Verdict>(m, "Verdict")
      .def_readonly("equal_identity", &Verdict::equal_identity)
      .def_readonly("queries", &Verdict::queries)
      .def_readonly("witness_x", &Verdict::witness_x)
      .def_readonly("witness_u", &Verdict::witness_u)
      .def_property_readonly(
          "rule", [](Verdict const& v) { return to_string(v.rule); })
      .def("__repr__", [](Verdict const& v) {
        return std::string("Verdict(") +
               (v.equal_identity ? "identity" : "not-identity") + ", rule=" +
               to_string(v.rule) + ")";
      });

  m.def("query_set_of",
        [](Word const& w) { return query_set(to_normal_form(w)); },
        py::arg("word"));
  m.def("decide_word",
        [](Word const& w, CodedSet const& set) {
          if (sigma_exponent_check(w) == SigmaCheck::kNonzero) {
            Verdict v;
            v.equal_identity = false;
            v.rule = Rule::kSigmaExponent;
            return v;
          }
          NormalForm nf = to_normal_form(w);
          return decide(nf, oracle_from_coded_set(set, query_set(nf)));
        },
        py::arg("word"), py::arg("coded_set"));
  m.def("decide_word_with_oracle",
        [](Word const& w, std::map<int64_t, bool> const& answers) {
          Oracle oracle;
          oracle.answers = answers;
          return decide_word(w, oracle);
        },
        py::arg("word"), py::arg("answers"));
  m.def("literal_case_decide",
        [](Word const& w, CodedSet const& set) {
          NormalForm nf = to_normal_form(w);
          return literal_case_decider(
              nf, oracle_from_coded_set(set, query_set(nf)));
        },
        py::arg("word"), py::arg("coded_set"));
  m.def("brute_force_identity", &brute_force_identity, py::arg("word"),
        py::arg("coded_set"));
  m.def("m_reduction_word", &m_reduction_word, py::arg("x"));

  // -- coding equation -------------------------------------------------------
  py::class_<ColumnFunction>(m, "ColumnFunction")
      .def(py::init([](py::object const& f, std::string const& name) {
             ColumnFunction cf = column_function_from_arg(f);
             cf.name = name;
             return cf;
           }),
           py::arg("f"), py::arg("name") = "python")
      .def("__call__",
           [](ColumnFunction const& f, int64_t x, int64_t n) {
             return column_value(f, x, n);
           })
      .def_readonly("name", &ColumnFunction::name);

  m.def("builtin_column_function", &builtin_column_function, py::arg("name"));
  m.def("term_t", &term_t, py::arg("x"));
  m.def("predicted_t_action", &predicted_t_action, py::arg("f"), py::arg("x"),
        py::arg("point"));

  py::class_<CodeEquationReport>(m, "CodeEquationReport")
      .def_readonly("x", &CodeEquationReport::x)
      .def_readonly("y", &CodeEquationReport::y)
      .def_readonly("bound", &CodeEquationReport::bound)
      .def_readonly("f_agrees_bounded", &CodeEquationReport::f_agrees_bounded)
      .def_readonly("f_witness_n", &CodeEquationReport::f_witness_n)
      .def_readonly("perms_agree_on_region",
                    &CodeEquationReport::perms_agree_on_region)
      .def_readonly("perm_witness", &CodeEquationReport::perm_witness)
      .def("sides_match", &CodeEquationReport::sides_match);

  m.def("verify_code_equation",
        [](py::object const& f, int64_t x, int64_t y, int64_t bound) {
          return verify_code_equation(column_function_from_arg(f), x, y,
                                      bound);
        },
        py::arg("f"), py::arg("x"), py::arg("y"), py::arg("bound"));

  // -- abelian ---------------------------------------------------------------
  py::class_<Presentation>(m, "Presentation")
      .def(py::init(&presentation_from_text), py::arg("text"))
      .def_readonly("generators", &Presentation::generators)
      .def("__str__", &format_presentation)
      .def("__repr__", [](Presentation const& p) {
        return "Presentation('" + format_presentation(p) + "')";
      });

  py::class_<AbelianInvariants>(m, "AbelianInvariants")
      .def_readonly("free_rank", &AbelianInvariants::free_rank)
      .def_readonly("invariant_factors",
                    &AbelianInvariants::invariant_factors)
      .def("__eq__",
           [](AbelianInvariants const& a, AbelianInvariants const& b) {
             return a == b;
           })
      .def("__repr__", [](AbelianInvariants const& inv) {
        std::string s = "AbelianInvariants(free_rank=" +
                        std::to_string(inv.free_rank) + ", factors=[";
        for (size_t i = 0; i < inv.invariant_factors.size(); ++i) {
          s += (i ? ", " : "") + std::to_string(inv.invariant_factors[i]);
        }
        return s + "])";
      });

  m.def("abelianize", &abelianize);
  m.def("abelian_invariants", &abelian_invariants);
  m.def("abelian_iso", &abelian_iso);
  m.def("strong_diagonal", &strong_diagonal, py::arg("presentations"));
  m.def("smith_normal_form",
        [](std::vector<std::vector<int64_t>> const& rows) {
          auto snf = smith_normal_form(matrix_from_rows(rows), true);
          return py::make_tuple(matrix_to_rows(snf.d), matrix_to_rows(*snf.u),
                                matrix_to_rows(*snf.v));
        },
        py::arg("rows"),
        "returns (D, U, V) with U*M*V = D as row lists");
  m.def("diagonal_check",
        [](Presentation const& output,
           std::vector<Presentation> const& inputs) {
          DiagonalReport r = diagonal_check(output, inputs);
          py::list witnesses;
          for (auto const& w : r.witnesses) {
            witnesses.append(py::dict(
                py::arg("input") = w.input,
                py::arg("input_rank") = w.input_rank,
                py::arg("output_rank") = w.output_rank,
                py::arg("iso") = w.iso));
          }
          return py::make_tuple(r.ok(), witnesses);
        },
        py::arg("output"), py::arg("inputs"));
}
