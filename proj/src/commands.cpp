#include "toricmirror/commands.hpp"

#include <algorithm>

namespace tmir::cli {

const std::vector<std::pair<std::string, std::vector<std::string>>>& command_table() {
    static const std::vector<std::pair<std::string, std::vector<std::string>>> table = {
        {"period", {"f"}},
        {"newton", {"f"}},
        {"forward", {"git"}},
        {"invert", {"scaffolding"}},
        {"scaffold-validate", {"scaffolding"}},
        {"scaffold-dual-check", {"scaffolding"}},
        {"embed-check", {"scaffolding"}},
        {"ci-data", {"scaffolding"}},
        {"secondary-fan", {"git"}},
        {"mutate-polytope", {"polytope", "mutation"}},
        {"mutate-laurent", {"f", "mutation"}},
        {"mutate-scaffolding", {"scaffolding", "mutation"}},
        {"nef-partition", {"input"}},
        {"fano-nef-partition", {"scaffolding", "input"}},
        {"cayley", {"input"}},
        {"p-s", {"scaffolding"}},
        {"amenable-validate", {"git"}},
        {"amenable-tower", {"git"}},
        {"amenable-binomials", {"git"}},
        {"anticanonical", {"polytope"}},
        {"mutability", {"scaffolding"}},
    };
    return table;
}

namespace {

json report_json(const ScaffoldingReport& r) {
    json j = io::to_json(r.report);
    json miss = json::array();
    for (auto s : r.struts_missing_vertices) miss.push_back(s + 1);
    j["struts_missing_vertices"] = miss;
    return j;
}

json binomials_json(const std::vector<Binomial>& bs) {
    json a = json::array();
    for (const auto& b : bs) a.push_back(io::to_json(b));
    return a;
}

json vecs_json(const std::vector<IntVec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(io::to_json(v));
    return a;
}

std::vector<IntVec> amenable_weights(const json& j) {
    if (!j.contains("amenable")) throw DomainError("malformed_input", "missing field \"amenable\"");
    return io::intvecs_from_json(j.at("amenable"));
}

}  // namespace

json run_command(const std::string& cmd, const std::map<std::string, json>& inputs, const CommandOptions& opts) {
    auto in = [&](const std::string& key) -> const json& {
        auto it = inputs.find(key);
        if (it == inputs.end()) throw DomainError("malformed_input", "missing input --" + key);
        return it->second;
    };
    auto scaffolding = [&] { return io::scaffolding_from_json(io::section(in("scaffolding"), "scaffolding")); };
    auto laurent = [&] { return io::laurent_from_json(io::section(in("f"), "f")); };
    auto polytope = [&] { return io::polytope_from_json(io::section(in("polytope"), "polytope")); };
    auto git = [&] {
        GitData gd = io::git_from_json(io::section(in("git"), "git"));
        if (opts.omega) {
            gd.omega = *opts.omega;
            check_git_data(gd);
        }
        return gd;
    };
    auto partition = [&] { return io::partition_from_json(io::section(in("git"), "partition")); };

    if (cmd == "period") {
        auto c = classical_period(laurent(), opts.max_degree);
        return {{"coeffs", io::to_json(IntVec(c.begin(), c.end()))}};
    }
    if (cmd == "newton") return io::to_json(newton_polytope(laurent()));
    if (cmd == "forward") {
        GitData gd = git();
        ConvexPartition p = partition();
        Report rep = validate_partition(gd, p);
        Laurent f = przyjalkowski(gd, p);
        if (opts.drop_constant) f = without_constant(f);
        json vars = json::array();
        for (auto i : forward_variables(p)) vars.push_back(i + 1);
        return {{"laurent", io::to_json(f)}, {"variables", vars}, {"report", io::to_json(rep)}};
    }
    if (cmd == "invert") {
        return io::to_json(laurent_inversion(scaffolding(), opts.omega));
    }
    if (cmd == "scaffold-validate") return report_json(scaffolding_report(scaffolding()));
    if (cmd == "scaffold-dual-check") {
        DualConeResult d = dual_cone_result(scaffolding());
        return {{"preconditions", d.preconditions}, {"equal", d.equal}, {"result", d.preconditions && d.equal}};
    }
    if (cmd == "embed-check") return io::to_json(verify_embedding(scaffolding()));
    if (cmd == "ci-data") {
        CIData c = ci_data(scaffolding());
        return {{"groups", c.groups},
                 {"functionals", vecs_json(c.functionals)},
                 {"lattice_equal", c.lattice_equal},
                {"degrees", io::to_json(c.degrees)}};
    }
    if (cmd == "secondary-fan") {
        GitData gd = git();
        SecondaryFan sf = secondary_fan(gd);
        json walls = json::array();
        for (const auto& w : sf.walls) {
            json ch = json::array();
            for (auto i : w.characters) ch.push_back(i + 1);
            walls.push_back({{"normal", io::to_json(w.normal)}, {"characters", ch}});
        }
        json j{{"walls", walls}, {"chambers", io::to_json(canonical(sf.chambers))}, {"omega", io::to_json(gd.omega)}};
        bool inside = in_chamber_interior(gd, gd.omega);
        j["in_chamber_interior"] = inside;
        j["chamber"] = inside ? io::to_json(chamber_of(gd, gd.omega)) : json(nullptr);
        return j;
    }
    if (cmd == "mutate-polytope") {
        Polytope P = polytope();
        return io::to_json(mutate_polytope(P, io::mutation_from_json(in("mutation"), P.ambient_dim)));
    }
    if (cmd == "mutate-laurent") {
        Laurent f = laurent();
        const json& m = in("mutation");
        if (!m.contains("w") || !m.contains("factor_laurent"))
            throw DomainError("malformed_input", "mutation needs \"w\" and \"factor_laurent\"");
        IntVec w = io::intvec_from_json(m.at("w"));
        Laurent factor = io::parse_laurent(m.at("factor_laurent").get<std::string>(), f.vars());
        return io::to_json(algebraic_mutation(f, w, factor));
    }
    if (cmd == "mutate-scaffolding") {
        Scaffolding S = scaffolding();
        return io::to_json(mutate_scaffolding(S, io::mutation_from_json(in("mutation"), S.dim_bar())));
    }
    if (cmd == "nef-partition") {
        const json& j = in("input");
        Polytope Delta = io::polytope_from_json(io::section(j, "polytope"));
        std::vector<std::vector<IntVec>> parts;
        for (const auto& p : j.at("parts")) parts.push_back(io::intvecs_from_json(p));
        NefPartitionResult r = check_nef_partition(Delta, parts);
        json nablas = json::array();
        for (const auto& n : r.nablas) nablas.push_back(io::to_json(n));
        json pts = json::array();
        for (const auto& p : r.points) pts.push_back(io::to_json(p));
        return {{"report", io::to_json(r.report)}, {"nablas", nablas}, {"points", pts}};
    }
    if (cmd == "fano-nef-partition") {
        FanoNefPartition fnp;
        if (inputs.count("input")) {
            const json& j = in("input");
            fnp.fan = io::fan_from_json(j.at("fan"));
            for (const auto& e : j.at("E")) fnp.E.push_back(e.get<std::vector<std::size_t>>());
            fnp.F = j.at("F").get<std::vector<std::size_t>>();
        } else {
            Scaffolding S = scaffolding();
            fnp = fano_nef_partition_from_inversion(S, laurent_inversion(S, opts.omega));
        }
        return {{"report", io::to_json(check_fano_nef_partition(fnp))},
                 {"fan", io::to_json(fnp.fan)},
                 {"E", fnp.E},
                 {"F", fnp.F}};
    }
    if (cmd == "cayley") {
        const json& j = in("input");
        std::vector<Polytope> polys;
        for (const auto& p : j.at("polytopes")) polys.push_back(io::polytope_from_json(p));
        Cayley c = cayley(polys);
        json index = nullptr;
        for (unsigned r = 1; r <= 2 * polys.size() + 2 && index.is_null(); ++r)
            if (is_gorenstein_of_index(c.polytope, r)) index = r;
        return {{"polytope", io::to_json(c.polytope)}, {"cone", io::to_json(c.cone)}, {"gorenstein_index", index}};
    }
    if (cmd == "p-s") {
        Scaffolding S = scaffolding();
        MutationChain mc = mutation_chain(S);
        return {{"p_s", io::to_json(mc.p_s)},
                 {"spanning_fan", io::to_json(canonical(spanning_fan(mc.p_s)))},
                 {"chain_start", io::to_json(mc.start)},
                 {"chain_result", io::to_json(mc.result)},
                 {"isomorphic", mc.isomorphic}};
    }
    if (cmd == "amenable-validate") {
        return io::to_json(validate_amenable(git(), partition(), amenable_weights(in("git"))));
    }
    if (cmd == "amenable-tower") {
        Fan F = tower_from_amenable(git(), partition(), amenable_weights(in("git")));
        return {{"fan", io::to_json(F)}};
    }
    if (cmd == "amenable-binomials") {
        return {{"binomials", binomials_json(amenable_binomials(git(), partition(), amenable_weights(in("git"))))}};
    }
    if (cmd == "anticanonical") {
        Scaffolding S = anticanonical_scaffolding(polytope());
        InversionResult inv = laurent_inversion(S);
        BinomialEquations be = binomial_equations(S);
        return {{"scaffolding", io::to_json(S)},
                 {"inversion", io::to_json(inv)},
                 {"relations", vecs_json(be.relations)},
                 {"wall_relations", vecs_json(be.wall_relations)},
                 {"wall_torus", binomials_json(be.wall_torus)},
                 {"homogeneous", binomials_json(be.homogeneous)}};
    }
    if (cmd == "mutability") {
        const json& raw = in("scaffolding");
        const json& sec = io::section(raw, "scaffolding");
        Scaffolding S = scaffolding();
        std::vector<IntVec> weights = S.shape.rays;
        for (const json* j : {&sec, &raw})
            if (j->contains("mutability_weights")) {
                weights = io::intvecs_from_json(j->at("mutability_weights"));
                break;
            }
        json entries = json::array();
        bool ok = true;
        for (const auto& e : strut_mutability(S, weights)) {
            ok = ok && e.ok;
            entries.push_back({{"strut", e.strut + 1}, {"weight", io::to_json(weights[e.weight])}, {"ok", e.ok}, {"detail", e.detail}});
        }
        return {{"ok", ok}, {"entries", entries}};
    }
    throw DomainError("unknown_command", "unknown subcommand " + cmd);
}

// ---- fixture corpus -----------------------------------------------------------

json check_fixture(const json& fx) {
    json checks = json::array();
    auto record = [&](const std::string& name, bool ok, const std::string& detail = {}) {
        checks.push_back({{"name", name}, {"ok", ok}, {"detail", detail}});
    };
    const json expected = fx.value("expected", json::object());
    std::optional<Laurent> f;
    if (fx.contains("f")) f = io::laurent_from_json(fx.at("f"));
    if (fx.contains("git") && fx.contains("partition")) {
        GitData gd = io::git_from_json(fx.at("git"));
        ConvexPartition p = io::partition_from_json(fx.at("partition"));
        record("partition_valid", validate_partition(gd, p).ok());
        Laurent g = przyjalkowski(gd, p);
        if (f) {
            // Printed mirrors sometimes omit the constant term.
            bool same = fx.value("f_constant_dropped", false) ? without_constant(g) == without_constant(*f) : g == *f;
            record("forward_matches_f", same, g.to_string());
        }
        record("forward_round_trip", laurent_from_scaffolding(scaffolding_from_forward(gd, p)) == g);
    }
    if (fx.contains("scaffolding")) {
        Scaffolding S = io::scaffolding_from_json(fx.at("scaffolding"));
        record("scaffolding_valid", validate_scaffolding(S));
        record("dual_cone", dual_cone_check(S) == validate_scaffolding(S));
        record("embedding", verify_embedding(S).ok());
        std::optional<IntVec> omega;
        if (fx.contains("omega")) omega = io::intvec_from_json(fx.at("omega"));
        InversionResult inv = laurent_inversion(S, omega);
        if (expected.contains("matrix"))
            record("matrix", inv.matrix == io::intmatrix_from_json(expected.at("matrix")), io::to_json(inv.matrix).dump());
        if (f && product_factors(S.shape)) {
            Laurent g = laurent_from_scaffolding(S);
            record("scaffolding_polynomial", without_constant(g).terms() == without_constant(*f).terms(), g.to_string());
        }
    }
    if (f && expected.contains("period")) {
        IntVec want = io::intvec_from_json(expected.at("period"));
        auto got = classical_period(*f, want.size() - 1);
        record("period", IntVec(got.begin(), got.end()) == want);
    }
    bool ok = std::all_of(checks.begin(), checks.end(), [](const json& c) { return c.at("ok").get<bool>(); });
    return {{"name", fx.value("name", "")}, {"ok", ok}, {"checks", checks}};
}

}  // namespace tmir::cli
