#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <irrmeasure/certificates.hpp>
#include <irrmeasure/contfrac.hpp>
#include <irrmeasure/error.hpp>
#include <irrmeasure/imf.hpp>
#include <irrmeasure/number_spec.hpp>
#include <irrmeasure/theorems.hpp>

#include <sstream>

namespace py = pybind11;
using namespace irrmeasure;
using nlohmann::json;

namespace pybind11::detail {

// Python int <-> mpz_class through the decimal string.
template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));
    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        return value.set_str(py::str(src).cast<std::string>(), 10) == 0;
    }
    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

// Fraction / int / decimal string -> mpq_class; mpq_class -> Fraction.
template <>
struct type_caster<mpq_class> {
    PYBIND11_TYPE_CASTER(mpq_class, const_name("fractions.Fraction"));
    bool load(handle src, bool) {
        if (!src || PyFloat_Check(src.ptr())) return false;
        try {
            value = parse_rat(py::str(src).cast<std::string>());
        } catch (const Error&) {
            return false;
        }
        return true;
    }
    static handle cast(const mpq_class& v, return_value_policy, handle) {
        py::object fraction = py::module_::import("fractions").attr("Fraction");
        return fraction(py::reinterpret_steal<py::object>(PyLong_FromString(v.get_num().get_str().c_str(), nullptr, 10)),
                        py::reinterpret_steal<py::object>(PyLong_FromString(v.get_den().get_str().c_str(), nullptr, 10)))
            .release();
    }
};

}  // namespace pybind11::detail

namespace {

RenderOptions opts(unsigned digits, unsigned long cap) { return {digits, cap}; }

std::string expand(const std::string& spec, std::size_t count) {
    Number n = parse_number(spec);
    json convs = json::array();
    for (const auto& c : convergents(n.cf, count)) convs.push_back({{"index", c.index}, {"p", c.p.get_str()}, {"q", c.q.get_str()}});
    return json{{"cf", n.cf.to_string()}, {"exact_value", n.value.to_string()}, {"convergents", convs}}.dump();
}

std::string profile(const std::string& a, const std::string& b, const Integer& lo, const Integer& hi, unsigned digits,
                    unsigned long cap) {
    std::ostringstream out;
    write_profile_csv(out, breakpoint_profile(parse_irrational(a), parse_irrational(b), lo, hi), digits, cap);
    return out.str();
}

std::vector<Integer> flips(const std::string& a, const std::string& b, const Integer& lo, const Integer& hi,
                           unsigned long cap) {
    return sign_changes(breakpoint_profile(parse_irrational(a), parse_irrational(b), lo, hi), cap);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Irrationality measure functions of quadratic irrationals";

    static py::exception<Error> error(m, "IrrmeasureError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object cls = error;
            PyErr_SetObject(cls.ptr(), py::make_tuple(std::string(to_string(e.code())), e.what()).ptr());
        }
    });

    py::class_<QuadExt>(m, "QuadExt")
        .def(py::init<const Rat&, const Rat&, const Integer&>(), py::arg("a"), py::arg("b"), py::arg("d"))
        .def(py::init<const Rat&>(), py::arg("a"))
        .def_property_readonly("a", &QuadExt::a)
        .def_property_readonly("b", &QuadExt::b)
        .def_property_readonly("d", &QuadExt::radicand)
        .def("floor", &QuadExt::floor)
        .def("sign", &QuadExt::sign)
        .def("conjugate", &QuadExt::conjugate)
        .def("norm", &QuadExt::norm)
        .def("decimal", [](const QuadExt& x, unsigned digits) { return render_decimal(Expr(x), digits); },
             py::arg("digits") = 12)
        .def(py::self + py::self)
        .def(py::self - py::self)
        .def(py::self * py::self)
        .def(py::self / py::self)
        .def(-py::self)
        .def(py::self == py::self)
        .def("__lt__", [](const QuadExt& x, const QuadExt& y) { return x < y; })
        .def("__str__", &QuadExt::to_string)
        .def("__repr__", [](const QuadExt& x) { return "QuadExt(" + x.to_string() + ")"; });

    m.def("expand", &expand, py::arg("spec"), py::arg("count") = 10);
    m.def("psi",
          [](const std::string& spec, const Integer& t, unsigned digits, unsigned long cap) {
              return to_json(psi(parse_irrational(spec).cf, t), opts(digits, cap)).dump();
          },
          py::arg("spec"), py::arg("t"), py::arg("digits") = 12, py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("d_decimal",
          [](const std::string& a, const std::string& b, const Integer& t, unsigned digits, unsigned long cap) {
              return d_at(parse_irrational(a), parse_irrational(b), t).decimal(digits, cap);
          },
          py::arg("alpha"), py::arg("beta"), py::arg("t"), py::arg("digits") = 12,
          py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("profile_csv", &profile, py::arg("alpha"), py::arg("beta"), py::arg("t_min"), py::arg("t_max"),
          py::arg("digits") = 12, py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("sign_changes", &flips, py::arg("alpha"), py::arg("beta"), py::arg("t_min"), py::arg("t_max"),
          py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("merged_word",
          [](const std::string& a, const std::string& b, std::size_t count) {
              return to_json(merged_word(parse_irrational(a), parse_irrational(b), count)).dump();
          },
          py::arg("alpha"), py::arg("beta"), py::arg("count"));
    m.def("find_witness",
          [](const std::string& a, const std::string& b, const Integer& from, const Integer& bound, unsigned digits,
             unsigned long cap) {
              return to_json(find_witness(parse_irrational(a), parse_irrational(b), from, bound, cap), opts(digits, cap))
                  .dump();
          },
          py::arg("alpha"), py::arg("beta"), py::arg("t_from"), py::arg("bound") = Integer("1000000000000"),
          py::arg("digits") = 12, py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("construct_optimal",
          [](const Rat& eps, unsigned digits, unsigned long cap) {
              return to_json(construct_optimal(eps, cap), opts(digits, cap)).dump();
          },
          py::arg("epsilon"), py::arg("digits") = 12, py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("verify_near_optimality",
          [](const Rat& eps, const Integer& lo, const Integer& hi, const Rat& slack, unsigned digits,
             unsigned long cap) {
              return to_json(verify_near_optimality(construct_optimal(eps, cap), lo, hi, slack, cap), opts(digits, cap))
                  .dump();
          },
          py::arg("epsilon"), py::arg("t_min"), py::arg("t_max"), py::arg("slack"), py::arg("digits") = 12,
          py::arg("cap_bits") = kDefaultPrecisionCapBits);
    m.def("constant",
          [](const std::string& name, unsigned digits) {
              auto n = constants::parse_name(name);
              if (!n) throw Error(ErrorCode::InvalidArgument, "unknown constant '" + name + "'");
              return render_decimal(constants::expr(*n), digits);
          },
          py::arg("name"), py::arg("digits") = 12);
    m.def("binet_fib", [](unsigned n) { return binet_fib(n).value; }, py::arg("n"));
}
