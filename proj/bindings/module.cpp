#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "csq/serialize.hpp"

namespace py = pybind11;

// mpz_class <-> python int, via decimal strings; exact in both directions.
namespace pybind11::detail {

template <>
struct type_caster<mpz_class> {
    PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

    bool load(handle src, bool) {
        PyObject* ptr = src.ptr();
        if (!PyLong_Check(ptr)) return false;
        PyObject* repr = PyObject_Str(ptr);
        if (repr == nullptr) return false;
        const char* text = PyUnicode_AsUTF8(repr);
        bool ok = text != nullptr;
        if (ok) {
            try {
                value = mpz_class(text);
            } catch (const std::invalid_argument&) {
                ok = false;
            }
        }
        Py_DECREF(repr);
        return ok;
    }

    static handle cast(const mpz_class& v, return_value_policy, handle) {
        return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
    }
};

}  // namespace pybind11::detail

namespace {

using namespace csq;

py::object json_loads(const Json& j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict solution_dict(const Solution& s) {
    py::dict d;
    d["d"] = s.d;
    d["x"] = py::cast(s.x);
    d["y"] = py::cast(s.y);
    d["n"] = s.n;
    d["sign_ambiguous"] = s.sign_ambiguous;
    return d;
}

py::dict pell_dict(const PellSolution& s) {
    py::dict d;
    d["r"] = s.r;
    d["sign"] = s.sign;
    d["x"] = py::cast(s.x);
    d["y"] = py::cast(s.y);
    return d;
}

py::object certificate_obj(const std::optional<EliminationCertificate>& c) {
    if (!c) return py::none();
    return json_loads(to_json(*c));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "exact arithmetic for perfect powers that are sums of consecutive squares";

    // arith
    m.def("padic_valuation", &padic_valuation, py::arg("n"), py::arg("p"));
    m.def(
        "exact_nth_root",
        [](const Integer& s, unsigned n) -> py::object {
            const auto r = exact_nth_root(s, n);
            return r ? py::cast(*r) : py::none();
        },
        py::arg("s"), py::arg("n"));
    m.def("perfect_power_exponents", &perfect_power_exponents, py::arg("s"), py::arg("n_max"));
    m.def("is_prime", &is_prime, py::arg("n"));
    m.def(
        "factorize",
        [](const Integer& n) {
            const Factorization f = factorize(n);
            py::dict d;
            d["factors"] = py::cast(f.factors);
            d["cofactor"] = py::cast(f.cofactor);
            d["complete"] = f.complete();
            return d;
        },
        py::arg("n"));

    // equation
    m.def("consecutive_square_sum", &consecutive_square_sum, py::arg("d"), py::arg("x"));
    m.def("check_solution", &check_solution, py::arg("d"), py::arg("x"), py::arg("y"),
          py::arg("n"));
    m.def("mirror", &mirror, py::arg("d"), py::arg("x"));

    // filters
    m.def("zhang_bai", [](unsigned d, unsigned n) { return certificate_obj(zhang_bai(d, n)); },
          py::arg("d"), py::arg("n"));
    m.def("dyadic", [](unsigned d, unsigned n) { return certificate_obj(dyadic(d, n)); },
          py::arg("d"), py::arg("n"));
    m.def("triadic", [](unsigned d, unsigned n) { return certificate_obj(triadic(d, n)); },
          py::arg("d"), py::arg("n"));
    m.def("mod8_square_obstruction",
          [](unsigned d) { return json_loads(to_json(mod8_square_obstruction(d))); },
          py::arg("d"));
    m.def("apply_all_filters",
          [](unsigned d, unsigned n) {
              py::list out;
              for (const auto& c : apply_all_filters(d, n)) out.append(json_loads(to_json(c)));
              return out;
          },
          py::arg("d"), py::arg("n"));

    // pell
    m.def("unit_power",
          [](long k) {
              const Z2Element z = unit_power(k);
              return py::make_tuple(py::cast(z.a), py::cast(z.b));
          },
          py::arg("k"));
    m.def("pell_solution",
          [](long r, int sign) { return pell_dict(pell_solution(r, sign)); }, py::arg("r"),
          py::arg("sign"));
    m.def("pell_enumerate",
          [](const Integer& x_bound) {
              py::list out;
              for (const auto& s : enumerate_in_range(x_bound)) out.append(pell_dict(s));
              return out;
          },
          py::arg("x_bound"));

    // lehmer
    m.def("gamma_to_pair",
          [](const Integer& u, const Integer& v) {
              const LehmerPair p = gamma_to_pair({u, v});
              return py::make_tuple(py::cast(p.R), py::cast(p.Q));
          },
          py::arg("u"), py::arg("v") = 1);
    m.def("is_valid_lehmer_pair",
          [](const Integer& R, const Integer& Q) { return is_valid_lehmer_pair({R, Q}); },
          py::arg("R"), py::arg("Q"));
    m.def("lehmer_term",
          [](const Integer& R, const Integer& Q, unsigned m) { return lehmer_term({R, Q}, m); },
          py::arg("R"), py::arg("Q"), py::arg("m"));
    m.def("primitive_divisors",
          [](const Integer& R, const Integer& Q, unsigned m) {
              const auto r = primitive_divisors({R, Q}, m);
              py::dict d;
              d["primes"] = py::cast(r.primes);
              d["complete"] = r.complete;
              return d;
          },
          py::arg("R"), py::arg("Q"), py::arg("m"));
    m.def("is_defective",
          [](const Integer& R, const Integer& Q, unsigned m) { return is_defective({R, Q}, m); },
          py::arg("R"), py::arg("Q"), py::arg("m"));
    m.def("defect_scan",
          [](unsigned p, const Integer& u_bound) {
              const DefectScanReport r = defect_scan(p, u_bound);
              py::dict d;
              d["p"] = r.p;
              d["u_bound"] = py::cast(r.u_bound);
              d["scanned"] = r.scanned;
              d["violations"] = py::cast(r.violations);
              return d;
          },
          py::arg("p"), py::arg("u_bound"));
    m.def("small_prime_poly_check",
          [](unsigned p) {
              const PolyCheckReport r = small_prime_poly_check(p);
              py::dict d;
              d["p"] = r.p;
              d["coefficients"] = py::cast(r.coefficients);
              d["targets"] = py::cast(r.targets);
              d["square_candidates"] = py::cast(r.square_candidates);
              d["integer_roots"] = py::cast(r.integer_roots);
              return d;
          },
          py::arg("p"));

    // search
    m.def("brute_force",
          [](unsigned d_min, unsigned d_max, const Integer& x_bound, unsigned n_max,
             unsigned threads) {
              py::list out;
              for (const auto& s : brute_force(SearchBox(d_min, d_max, x_bound, n_max), threads)) {
                  out.append(solution_dict(s));
              }
              return out;
          },
          py::arg("d_min"), py::arg("d_max"), py::arg("x_bound"), py::arg("n_max"),
          py::arg("threads") = 1);

    // pipeline
    m.def("exponent_reduction", &exponent_reduction, py::arg("n"));
    m.def("verify_theorem",
          [](const Integer& x_bound, unsigned n_max, unsigned threads) {
              VerifyOptions options;
              options.x_bound = x_bound;
              options.n_max = n_max;
              options.threads = threads;
              return json_loads(to_json(verify_theorem(options)));
          },
          py::arg("x_bound"), py::arg("n_max"), py::arg("threads") = 1,
          "run the full desk-scale verification; returns the report as a dict");
    m.def("verify_theorem_json",
          [](const Integer& x_bound, unsigned n_max, unsigned threads) {
              VerifyOptions options;
              options.x_bound = x_bound;
              options.n_max = n_max;
              options.threads = threads;
              return to_json(verify_theorem(options)).dump(2);
          },
          py::arg("x_bound"), py::arg("n_max"), py::arg("threads") = 1,
          "same as verify_theorem but returns the canonical JSON text");
}
