// Python bindings for the main operations: algebra arithmetic, derivations,
// Ore/Laurent polynomials, quasi-inverses and the verification harness.

#include "orenil/errors.hpp"
#include "orenil/harness.hpp"
#include "orenil/instance.hpp"
#include "orenil/quasi_inverse.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace orenil;

namespace {

Rational rational_from_py(const py::handle &value) {
    if (py::isinstance<py::int_>(value))
        return Rational::from_string(py::str(value).cast<std::string>());
    if (py::isinstance<py::str>(value))
        return Rational::from_string(value.cast<std::string>());
    throw ParseError("rationals must be Python ints or \"p/q\" strings");
}

QVec coords_from_py(const py::sequence &seq) {
    QVec out;
    out.reserve(seq.size());
    for (const auto &item : seq)
        out.push_back(rational_from_py(item));
    return out;
}

QMat matrix_from_py(const py::sequence &rows) {
    QMat out;
    for (const auto &row : rows)
        out.push_back(coords_from_py(row.cast<py::sequence>()));
    return out;
}

py::dict report_to_dict(const LemmaReport &report) {
    py::dict out;
    out["id"] = check_id_name(report.id);
    out["instance"] = report.instance_description;
    out["checks"] = report.checks_run;
    py::list failures;
    for (const auto &f : report.failures) {
        py::dict entry;
        entry["description"] = f.description;
        entry["expected"] = f.expected;
        entry["actual"] = f.actual;
        failures.append(entry);
    }
    out["failures"] = failures;
    out["passed"] = report.passed();
    return out;
}

py::dict trace_to_dict(const TheoremTrace &trace) {
    py::dict out;
    out["k"] = trace.k;
    out["nil_index"] = trace.nil_index;
    if (trace.t_degree)
        out["t_degree"] = *trace.t_degree;
    else
        out["t_degree"] = py::none();
    out["m"] = trace.chosen_m;
    out["M"] = trace.chosen_M;
    out["q_is_zero"] = trace.q_polynomial.is_zero();
    out["a_power"] = trace.a_power.str();
    out["a_power_is_zero"] = trace.a_power.is_zero();
    return out;
}

} // namespace

PYBIND11_MODULE(orenil, m) {
    m.doc() = "exact differential (Ore) polynomial arithmetic over "
              "finite-dimensional rational algebras, with a mechanical "
              "verification harness";

    // translators run most-recent-first, so the base class goes first
    py::register_exception<Error>(m, "OrenilError", PyExc_RuntimeError);
    py::register_exception<NotLocallyNilpotent>(m, "NotLocallyNilpotent",
                                                PyExc_ValueError);
    py::register_exception<NotNilpotentWithinBound>(
        m, "NotNilpotentWithinBound", PyExc_ValueError);

    py::class_<AlgebraElement>(m, "Element")
        .def("__add__", &AlgebraElement::operator+)
        .def("__sub__",
             [](const AlgebraElement &a, const AlgebraElement &b) {
                 return a - b;
             })
        .def("__neg__", [](const AlgebraElement &a) { return -a; })
        .def("__mul__", &mul_elements)
        .def("__pow__", &power)
        .def("__eq__", [](const AlgebraElement &a,
                          const AlgebraElement &b) { return a == b; })
        .def("scaled",
             [](const AlgebraElement &a, const py::handle &c) {
                 return a.scaled(rational_from_py(c));
             })
        .def("is_zero", &AlgebraElement::is_zero)
        .def("nilpotency_index",
             [](const AlgebraElement &x, unsigned bound) {
                 return element_nilpotency_index(x, bound);
             },
             py::arg("bound") = 64)
        .def("coords",
             [](const AlgebraElement &x) {
                 std::vector<std::string> out;
                 for (const auto &c : x.coords())
                     out.push_back(c.str());
                 return out;
             })
        .def("__repr__", &AlgebraElement::str)
        .def("__str__", &AlgebraElement::str);

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def_property_readonly("dim", &Algebra::dim)
        .def_property_readonly("labels", &Algebra::labels)
        .def("basis", &Algebra::basis)
        .def("zero", &Algebra::zero)
        .def("element",
             [](const Algebra &a, const py::sequence &coords) {
                 return a.element(coords_from_py(coords));
             })
        .def("nilpotency_class", [](const Algebra &a) {
            return algebra_nilpotency_class(a.shared_from_this());
        });

    m.def("heisenberg", [] {
        return std::const_pointer_cast<Algebra>(heisenberg_algebra());
    });
    m.def(
        "free_nilpotent",
        [](unsigned generators, unsigned truncation_class,
           std::size_t dim_cap) {
            return std::const_pointer_cast<Algebra>(
                free_nilpotent_algebra(generators, truncation_class, dim_cap));
        },
        py::arg("generators"), py::arg("truncation_class"),
        py::arg("dim_cap") = 512);
    m.def(
        "make_algebra",
        [](const py::sequence &table, const std::vector<std::string> &labels) {
            std::vector<std::vector<QVec>> dense;
            for (const auto &row : table) {
                std::vector<QVec> out_row;
                for (const auto &cell : row.cast<py::sequence>())
                    out_row.push_back(coords_from_py(cell.cast<py::sequence>()));
                dense.push_back(std::move(out_row));
            }
            return std::const_pointer_cast<Algebra>(
                make_algebra(labels.size(), dense, labels));
        },
        py::arg("table"), py::arg("labels"),
        "construct from a dense structure-constant table: table[i][j] = "
        "coords of e_i * e_j");

    py::class_<Derivation, std::shared_ptr<Derivation>>(m, "Derivation")
        .def("apply", &Derivation::apply)
        .def("apply_power",
             [](const DerivationPtr &d, const AlgebraElement &r, unsigned i) {
                 return apply_power(d, r, i);
             })
        .def_property_readonly("is_locally_nilpotent",
                               &Derivation::locally_nilpotent)
        .def_property_readonly("matrix_nilindex",
                               &Derivation::matrix_nilpotency_index)
        .def("local_nilpotency_index",
             [](const DerivationPtr &d, const AlgebraElement &a,
                unsigned bound) {
                 return local_nilpotency_index(d, a, bound);
             },
             py::arg("a"), py::arg("bound") = 64);

    m.def("inner_derivation", [](const AlgebraElement &x) {
        return std::const_pointer_cast<Derivation>(inner_derivation(x));
    });
    m.def("make_derivation",
          [](const AlgebraPtr &algebra, const py::sequence &rows) {
              return std::const_pointer_cast<Derivation>(
                  make_derivation(algebra, matrix_from_py(rows)));
          });

    py::class_<OrePoly>(m, "OrePoly")
        .def("__add__", &OrePoly::operator+)
        .def("__sub__",
             [](const OrePoly &a, const OrePoly &b) { return a - b; })
        .def("__mul__", &ore_mul)
        .def("__pow__", &ore_pow)
        .def("__eq__",
             [](const OrePoly &a, const OrePoly &b) { return a == b; })
        .def("is_zero", &OrePoly::is_zero)
        .def("degree", [](const OrePoly &p) { return p.degree(); })
        .def("low_degree", [](const OrePoly &p) { return p.low_degree(); })
        .def("coefficient_at", &OrePoly::coefficient_at)
        .def("__repr__", &OrePoly::str)
        .def("__str__", &OrePoly::str);

    m.def("constant", &OrePoly::constant, py::arg("a"), py::arg("derivation"));
    m.def("monomial", &OrePoly::monomial, py::arg("coeff"), py::arg("exponent"),
          py::arg("derivation"));
    m.def("commute_power", &commute_power, py::arg("n"), py::arg("a"),
          py::arg("d"), "left-normal form of x^n * a");
    m.def("commute_negative", &commute_negative, py::arg("a"), py::arg("d"),
          py::arg("k"), "left-normal form of x^-1 * a");
    m.def("conjugate_by_power", &conjugate_by_power, py::arg("n"), py::arg("a"),
          py::arg("d"), "x^n a x^-n");
    m.def("mul_x_left", &mul_x_left);
    m.def("mul_x_right", &mul_x_right);
    m.def("mul_xinv_left", &mul_xinv_left);
    m.def("mul_xinv_right", &mul_xinv_right);

    m.def(
        "quasi_inverse",
        [](const OrePoly &r, unsigned bound) {
            const auto result = quasi_inverse_nilpotent(r, bound);
            return py::make_tuple(result.inverse, result.nil_index);
        },
        py::arg("r"), py::arg("bound") = 32,
        "returns (inverse, nil_index) of a nilpotent Ore polynomial");
    m.def("verify_quasi_inverse", &verify_quasi_inverse);

    m.def("verify_property1",
          [](const DerivationPtr &d, const AlgebraElement &a, unsigned n_max) {
              return report_to_dict(verify_property1(d, a, n_max));
          },
          py::arg("d"), py::arg("a"), py::arg("n_max") = 8);
    m.def("verify_lemma1",
          [](const DerivationPtr &d, const AlgebraElement &a, unsigned m_max,
             unsigned n) { return report_to_dict(verify_lemma1(d, a, m_max, n)); },
          py::arg("d"), py::arg("a"), py::arg("m_max"), py::arg("n"));
    m.def("verify_lemma3",
          [](const DerivationPtr &d, const AlgebraElement &a, unsigned i_max,
             unsigned n_count, unsigned bound) {
              return report_to_dict(verify_lemma3(d, a, i_max, n_count, bound));
          },
          py::arg("d"), py::arg("a"), py::arg("i_max") = 5,
          py::arg("n_count") = 4, py::arg("bound") = 32);
    m.def("verify_lemma4",
          [](const DerivationPtr &d, const AlgebraElement &a, unsigned m_max,
             const std::vector<unsigned> &n_samples) {
              return report_to_dict(verify_lemma4(d, a, m_max, n_samples));
          });
    m.def("verify_lemma5",
          [](const DerivationPtr &d, const AlgebraElement &a, unsigned m0,
             const std::vector<unsigned> &n_samples) {
              return report_to_dict(verify_lemma5(d, a, m0, n_samples));
          });
    m.def("verify_weyl_homomorphism",
          [](const DerivationPtr &d, unsigned samples) {
              return report_to_dict(verify_weyl_homomorphism(d, samples));
          },
          py::arg("d"), py::arg("samples") = 25);
    m.def("compute_N", &compute_N, py::arg("k"), py::arg("m0"));
    m.def(
        "trace_main_theorem",
        [](const DerivationPtr &d, const AlgebraElement &a, unsigned bound) {
            return trace_to_dict(trace_main_theorem(d, a, bound));
        },
        py::arg("d"), py::arg("a"), py::arg("bound") = 32,
        "runs the full nil chain and returns its quantities");
}
