#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hw4k/dispatch.hpp"
#include "hw4k/serialize.hpp"
#include "hw4k/verify.hpp"

namespace py = pybind11;

namespace {

const char* support_name(hw4k::Support s) {
    switch (s) {
        case hw4k::Support::yes:
            return "yes";
        case hw4k::Support::unsupported_by_paper:
            return "unsupported_by_paper";
        default:
            return "invalid";
    }
}

py::list report_to_list(const hw4k::VerifyReport& rep) {
    py::list out;
    for (const auto& c : rep.checks) {
        py::dict d;
        d["id"] = c.id;
        d["name"] = c.name;
        d["pass"] = c.pass;
        d["detail"] = c.detail;
        out.append(std::move(d));
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_hw4k, m) {
    m.doc() = "2-factorizations of K_n minus a perfect matching into Hamilton "
              "cycles and C_4k-factors";

    static py::exception<hw4k::UnsupportedError> unsupported(m, "UnsupportedError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const hw4k::UnsupportedError& e) {
            PyErr_SetString(unsupported.ptr(), e.what());
        } catch (const hw4k::ParseError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const hw4k::InvalidParamsError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        }
    });

    m.def(
        "construct_json",
        [](int k, int t, int r) { return hw4k::certificate_to_json(hw4k::construct_hw(k, t, r)); },
        py::arg("k"), py::arg("t"), py::arg("r"),
        "Build an HW(n; r, s; n, 4k) certificate, n = 4kt, as a JSON string.");

    m.def(
        "construct_hamilton_only_json",
        [](int n) { return hw4k::certificate_to_json(hw4k::construct_hamilton_only(n)); },
        py::arg("n"), "Hamilton-decomposition certificate for any n >= 3 (s = 0).");

    m.def(
        "supported",
        [](int k, int t, int r) { return std::string(support_name(hw4k::supported(k, t, r))); },
        py::arg("k"), py::arg("t"), py::arg("r"),
        "'yes', 'unsupported_by_paper', or 'invalid' for the parameter triple.");

    m.def(
        "verify",
        [](const std::string& text) {
            return report_to_list(hw4k::verify_certificate(hw4k::certificate_from_string(text)));
        },
        py::arg("certificate"),
        "Run all checks on a serialized certificate (JSON or text); returns "
        "a list of {id, name, pass, detail} dicts.");

    m.def(
        "to_text",
        [](const std::string& text) {
            return hw4k::certificate_to_text(hw4k::certificate_from_string(text));
        },
        py::arg("certificate"), "Re-serialize a certificate into the line-oriented text format.");

    m.def(
        "to_json",
        [](const std::string& text) {
            return hw4k::certificate_to_json(hw4k::certificate_from_string(text));
        },
        py::arg("certificate"), "Re-serialize a certificate into the JSON format.");
}
