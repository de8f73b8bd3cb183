#include "toricmirror/commands.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tmir;

namespace {

// Domain errors surface as ValueError("<kind>: <detail>") so callers can
// branch on the kind without a custom exception type.
template <typename F>
auto guarded(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const DomainError& e) {
        throw py::value_error(e.kind() + ": " + e.what());
    }
}

std::string run(const std::string& command, const std::map<std::string, std::string>& inputs,
                const std::optional<std::vector<long long>>& omega, unsigned max_degree, bool drop_constant) {
    return guarded([&] {
        std::map<std::string, cli::json> docs;
        for (const auto& [k, v] : inputs) {
            try {
                docs[k] = cli::json::parse(v);
            } catch (const cli::json::exception& e) {
                throw DomainError("malformed_input", "input " + k + ": " + e.what());
            }
        }
        cli::CommandOptions opts;
        if (omega) {
            IntVec w;
            for (auto x : *omega) w.push_back(Int(std::to_string(x)));
            opts.omega = w;
        }
        opts.max_degree = max_degree;
        opts.drop_constant = drop_constant;
        return cli::run_command(command, docs, opts).dump();
    });
}

std::vector<std::string> period(const std::string& expr, const std::vector<std::string>& vars, unsigned d) {
    return guarded([&] {
        std::vector<std::string> out;
        for (const auto& c : classical_period(io::parse_laurent(expr, vars), d)) out.push_back(c.get_str());
        return out;
    });
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact toric mirror constructions: forward mirrors, scaffoldings and Laurent inversion.";
    m.def("commands", [] {
        std::vector<std::string> names;
        for (const auto& c : cli::command_table()) names.push_back(c.first);
        return names;
    });
    m.def("run", &run, py::arg("command"), py::arg("inputs"), py::arg("omega") = py::none(),
          py::arg("max_degree") = 10, py::arg("drop_constant") = false,
          "Run a subcommand on JSON-string inputs and return the JSON result.");
    m.def("check_fixture", [](const std::string& fx) {
        return guarded([&] { return cli::check_fixture(cli::json::parse(fx)).dump(); });
    });
    // Coefficients as decimal strings; the wrapper converts them to int.
    m.def("period", &period, py::arg("expr"), py::arg("vars"), py::arg("max_degree"));
}
