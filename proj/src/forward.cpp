#include "toricmirror/forward.hpp"

#include <algorithm>
#include <set>

namespace tmir {

namespace {

IntMatrix basis_matrix(const GitData& gd, const std::vector<std::size_t>& B) {
    std::vector<IntVec> cols;
    for (auto b : B) cols.push_back(gd.characters.at(b));
    return IntMatrix::from_cols(cols, gd.r);
}

IntVec sum_of(const GitData& gd, const std::vector<std::size_t>& idx) {
    IntVec s(gd.r, Int(0));
    for (auto j : idx) s = add(s, gd.characters.at(j));
    return s;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::string structural_problem(const GitData& gd, const ConvexPartition& p) {
    std::vector<int> seen(gd.R(), 0);
    auto mark = [&](const std::vector<std::size_t>& v) {
        for (auto j : v) {
            if (j >= gd.R()) return false;
            ++seen[j];
        }
        return true;
    };
    if (!mark(p.B) || !mark(p.U)) return "index out of range";
    for (const auto& s : p.S)
        if (!mark(s)) return "index out of range";
    for (std::size_t j = 0; j < gd.R(); ++j)
        if (seen[j] != 1) return "index " + std::to_string(j + 1) + " used " + std::to_string(seen[j]) + " times";
    if (!p.choices.empty()) {
        if (p.choices.size() != p.S.size()) return "one choice per S_i required";
        for (std::size_t i = 0; i < p.S.size(); ++i)
            if (std::find(p.S[i].begin(), p.S[i].end(), p.choices[i]) == p.S[i].end())
                return "choice for S_" + std::to_string(i + 1) + " not in S_" + std::to_string(i + 1);
    }
    return {};
}

}  // namespace

std::vector<std::size_t> resolved_choices(const ConvexPartition& p) {
    if (!p.choices.empty()) return p.choices;
    std::vector<std::size_t> out;
    for (const auto& s : p.S) {
        if (s.empty()) throw DomainError("invalid_partition", "empty S_i");
        out.push_back(*std::min_element(s.begin(), s.end()));
    }
    return out;
}

IntMatrix normalised_weight_matrix(const GitData& gd, const std::vector<std::size_t>& B) {
    if (B.size() != gd.r) throw DomainError("not_unimodular", "basis must have r elements");
    IntMatrix inv = unimodular_inverse(basis_matrix(gd, B));
    return inv * gd.weight_matrix();
}

IntMatrix bundle_degrees(const GitData& gd, const ConvexPartition& p) {
    IntMatrix M = normalised_weight_matrix(gd, p.B);
    IntMatrix L(p.B.size(), p.S.size());
    for (std::size_t b = 0; b < p.B.size(); ++b)
        for (std::size_t i = 0; i < p.S.size(); ++i)
            for (auto j : p.S[i]) L(b, i) += M(b, j);
    return L;
}

Report validate_partition(const GitData& gd, const ConvexPartition& p) {
    check_git_data(gd);
    Report rep;
    std::string prob = structural_problem(gd, p);
    rep.add("partition", prob.empty(), prob);

    bool basis_ok = false;
    std::optional<IntMatrix> inv;
    if (p.B.size() != gd.r) {
        rep.add("basis", false, "|B| = " + std::to_string(p.B.size()) + " but r = " + std::to_string(gd.r));
    } else {
        Int d = determinant(basis_matrix(gd, p.B));
        basis_ok = d == 1 || d == -1;
        rep.add("basis", basis_ok, "det D_B = " + d.get_str());
        if (basis_ok) inv = unimodular_inverse(basis_matrix(gd, p.B));
    }

    auto nonneg_in_basis = [&](const IntVec& v) {
        if (!inv) return false;
        IntVec c = *inv * v;
        return std::all_of(c.begin(), c.end(), [](const Int& x) { return x >= 0; });
    };

    rep.add("omega", nonneg_in_basis(gd.omega), basis_ok ? "" : "no basis");

    bool nonempty = std::all_of(p.S.begin(), p.S.end(), [](const auto& s) { return !s.empty(); });
    rep.add("nonempty", nonempty);

    std::vector<std::vector<std::size_t>> mcs;
    std::string nef_detail;
    try {
        mcs = minimal_covering_sets(gd);
    } catch (const DomainError& e) {
        nef_detail = e.kind() + ": " + e.what();
    }
    bool nef = nef_detail.empty();
    bool effective = true;
    for (std::size_t i = 0; i < p.S.size(); ++i) {
        IntVec L = sum_of(gd, p.S[i]);
        effective = effective && nonneg_in_basis(L);
        for (const auto& I : mcs) {
            if (!nef) break;
            std::vector<RatVec> gens;
            for (auto j : I) gens.push_back(to_rat(gd.characters[j]));
            if (!positive_combination(gens, to_rat(L), false)) {
                nef = false;
                nef_detail = "L_" + std::to_string(i + 1) + " = " + to_string(L) + " is not nef";
            }
        }
    }
    rep.add("nef", nef, nef_detail);
    rep.add("effective", effective);
    return rep;
}

std::vector<std::size_t> forward_variables(const ConvexPartition& p) {
    auto ch = resolved_choices(p);
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < p.S.size(); ++i)
        for (auto j : sorted(p.S[i]))
            if (j != ch[i]) out.push_back(j);
    for (auto u : sorted(p.U)) out.push_back(u);
    return out;
}

Laurent przyjalkowski(const GitData& gd, const ConvexPartition& p) {
    std::string prob = structural_problem(gd, p);
    if (!prob.empty()) throw DomainError("invalid_partition", prob);
    IntMatrix M = normalised_weight_matrix(gd, p.B);
    IntMatrix L = bundle_degrees(gd, p);
    auto ch = resolved_choices(p);
    auto vars = forward_variables(p);
    const std::size_t n = vars.size();
    std::vector<long> pos(gd.R(), -1);
    std::vector<std::string> names;
    for (std::size_t v = 0; v < n; ++v) {
        pos[vars[v]] = static_cast<long>(v);
        names.push_back("y" + std::to_string(vars[v] + 1));
    }

    // 1 + sum of the non-chosen variables of S_i.
    std::vector<Laurent> linear;
    for (std::size_t i = 0; i < p.S.size(); ++i) {
        Laurent g(names);
        for (auto j : p.S[i]) g.add_term(j == ch[i] ? IntVec(n, Int(0)) : unit_vector(n, pos[j]), 1);
        linear.push_back(g);
    }

    std::set<std::size_t> inB(p.B.begin(), p.B.end());
    Laurent f(names);
    for (std::size_t b = 0; b < p.B.size(); ++b) {
        IntVec e(n, Int(0));
        for (std::size_t j = 0; j < gd.R(); ++j)
            if (!inB.count(j) && pos[j] >= 0) e[pos[j]] = -M(b, j);
        Laurent term = Laurent::monomial(n, e);
        term.set_vars(names);
        for (std::size_t i = 0; i < p.S.size(); ++i) {
            if (L(b, i) < 0)
                throw DomainError("negative_degree", "l_{" + std::to_string(b + 1) + "," + std::to_string(i + 1) +
                                                         "} = " + L(b, i).get_str());
            term = term * pow(linear[i], static_cast<unsigned>(L(b, i).get_ui()));
        }
        f = f + term;
    }
    for (auto u : p.U) f.add_term(unit_vector(n, pos[u]), 1);
    return f;
}

}  // namespace tmir
