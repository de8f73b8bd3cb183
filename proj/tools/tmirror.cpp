// tmirror: JSON front end for the toricmirror library.
//
// Exit codes: 0 success, 1 domain error ({"error": {...}} on stdout),
// 2 usage error or malformed input.

#include "toricmirror/commands.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tmir;
using cli::json;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

json load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw UsageError("malformed JSON in " + path + ": " + e.what());
    }
}

IntVec parse_omega(const std::string& s) {
    IntVec v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        Int x;
        if (x.set_str(item, 10) != 0) throw UsageError("--omega expects comma-separated integers");
        v.push_back(x);
    }
    if (v.empty()) throw UsageError("--omega expects comma-separated integers");
    return v;
}

// Polygon vertices counter-clockwise, one "x y" pair per line, first vertex
// repeated to close the loop.
std::string tikz(const Polytope& P) {
    if (P.ambient_dim != 2 || P.empty()) throw DomainError("unsupported_dimension", "--emit-tikz needs a polygon");
    double cx = 0, cy = 0;
    for (const auto& v : P.vertices) cx += v[0].get_d(), cy += v[1].get_d();
    cx /= P.vertices.size();
    cy /= P.vertices.size();
    std::vector<RatVec> vs = P.vertices;
    auto angle = [&](const RatVec& a) { return std::atan2(a[1].get_d() - cy, a[0].get_d() - cx); };
    std::sort(vs.begin(), vs.end(), [&](const RatVec& a, const RatVec& b) { return angle(a) < angle(b); });
    vs.push_back(vs.front());
    std::ostringstream os;
    for (const auto& v : vs) os << v[0].get_str() << " " << v[1].get_str() << "\n";
    return os.str();
}

json run_fixtures(const std::string& dir) {
    std::vector<std::filesystem::path> files;
    for (const auto& e : std::filesystem::directory_iterator(dir))
        if (e.path().extension() == ".json") files.push_back(e.path());
    std::sort(files.begin(), files.end());
    json out = json::array();
    bool ok = true;
    for (const auto& p : files) {
        json fx = load(p.string());
        json r;
        try {
            r = cli::check_fixture(fx);
        } catch (const DomainError& e) {
            r = {{"name", fx.value("name", "")}, {"ok", false}, {"error", {{"kind", e.kind()}, {"detail", e.what()}}}};
        }
        r["file"] = p.filename().string();
        ok = ok && r.at("ok").get<bool>();
        out.push_back(r);
    }
    return {{"ok", ok}, {"fixtures", out}};
}

// Sorted keys give a canonical, byte-stable rendering.
void print(const json& j) { std::cout << nlohmann::json::parse(j.dump()).dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Laurent inversion and toric mirror constructions"};
    app.require_subcommand(0, 1);
    std::string fixtures_dir;
    app.add_option("--fixtures", fixtures_dir, "Run the fixture corpus in this directory");

    std::string command, omega;
    std::map<std::string, std::string> paths;
    cli::CommandOptions opts;
    bool emit_tikz = false;
    for (const auto& [name, keys] : cli::command_table()) {
        CLI::App* sub = app.add_subcommand(name);
        for (const auto& key : keys) sub->add_option("--" + key, paths[key], "JSON input file");
        sub->add_option("--omega", omega, "Stability condition, comma-separated");
        sub->add_option("--max-degree", opts.max_degree, "Highest period coefficient");
        sub->add_flag("--drop-constant", opts.drop_constant, "Remove the constant term");
        sub->add_flag("--emit-tikz", emit_tikz, "Print 2D polygon vertices as plain text");
        sub->callback([&command, name = name] { command = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (!fixtures_dir.empty()) {
            json r = run_fixtures(fixtures_dir);
            print(r);
            return r.at("ok").get<bool>() ? 0 : 1;
        }
        if (command.empty()) {
            std::cerr << app.help();
            return 2;
        }
        if (!omega.empty()) opts.omega = parse_omega(omega);
        std::map<std::string, json> inputs;
        for (const auto& [key, path] : paths)
            if (!path.empty()) inputs[key] = load(path);
        json out = cli::run_command(command, inputs, opts);
        if (emit_tikz && (command == "newton" || command == "mutate-polytope"))
            std::cout << tikz(io::polytope_from_json(out));
        else
            print(out);
        return 0;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        if (e.kind() == "malformed_input" || e.kind() == "unknown_command") {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        print({{"error", {{"kind", e.kind()}, {"detail", e.what()}}}});
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed input: " << e.what() << "\n";
        return 2;
    }
}
