#include "toricmirror/scaffolding.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace tmir {

namespace {

void check_strut(const Scaffolding& S, std::size_t s) {
    if (s >= S.struts.size()) throw DomainError("bad_index", "no strut " + std::to_string(s));
    const auto& st = S.struts[s];
    if (st.coeffs.size() != S.shape.rays.size() || st.chi.size() != S.u)
        throw DomainError("dimension_mismatch", "strut " + std::to_string(s + 1) + " has wrong shape");
}

bool shape_ok(const Fan& F) {
    if (F.dim == 0) return true;
    if (!is_complete(F)) return false;
    return saturate(F.rays, F.dim).size() == F.dim && lattice_basis(F.rays, F.dim) == saturate(F.rays, F.dim);
}

Int multinomial(const std::vector<Int>& parts) {
    Int total = 0, out = 1;
    for (const auto& p : parts) {
        total += p;
        Int b;
        mpz_bin_ui(b.get_mpz_t(), total.get_mpz_t(), p.get_ui());
        out *= b;
    }
    return out;
}

}  // namespace

ToricDivisor strut_divisor(const Scaffolding& S, std::size_t s) {
    check_strut(S, s);
    return {S.shape, S.struts[s].coeffs};
}

Polytope strut_polytope(const Scaffolding& S, std::size_t s) {
    check_strut(S, s);
    const auto& chi = S.struts[s].chi;
    std::vector<RatVec> pts;
    if (S.dim_bar() == 0) {
        pts.push_back(to_rat(chi));
    } else {
        Polytope PD = sections_polytope(strut_divisor(S, s));
        for (auto v : PD.vertices) {
            for (const auto& c : chi) v.push_back(Rat(c));
            pts.push_back(v);
        }
    }
    return convex_hull(pts, S.dim());
}

Polytope struts_hull(const Scaffolding& S) {
    std::vector<RatVec> pts;
    for (std::size_t s = 0; s < S.struts.size(); ++s) {
        Polytope Q = strut_polytope(S, s);
        pts.insert(pts.end(), Q.vertices.begin(), Q.vertices.end());
    }
    return convex_hull(pts, S.dim());
}

std::optional<StrutSplit> split_struts(const Scaffolding& S) {
    std::vector<std::size_t> cand;
    for (std::size_t s = 0; s < S.struts.size(); ++s)
        if (is_zero(S.struts[s].coeffs) && !is_zero(S.struts[s].chi)) cand.push_back(s);
    std::vector<std::size_t> chosen;
    std::optional<StrutSplit> found;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
        if (found) return;
        if (chosen.size() == S.u) {
            std::vector<IntVec> cols;
            for (auto s : chosen) cols.push_back(S.struts[s].chi);
            IntMatrix C = IntMatrix::from_cols(cols, S.u);
            Int d = S.u == 0 ? Int(1) : determinant(C);
            if (d != 1 && d != -1) return;
            StrutSplit sp;
            sp.basis_struts = chosen;
            sp.chi_inverse = S.u == 0 ? IntMatrix(0, 0) : unimodular_inverse(C);
            for (std::size_t s = 0; s < S.struts.size(); ++s)
                if (std::find(chosen.begin(), chosen.end(), s) == chosen.end()) sp.divisor_struts.push_back(s);
            found = sp;
            return;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
            chosen.push_back(cand[i]);
            rec(i + 1);
            chosen.pop_back();
        }
    };
    rec(0);
    return found;
}

ScaffoldingReport scaffolding_report(const Scaffolding& S) {
    ScaffoldingReport out;
    Report& rep = out.report;
    bool shape = shape_ok(S.shape);
    rep.add("shape", shape, shape ? "" : "shape fan is not complete or its rays do not span the lattice");

    bool wf = !S.struts.empty();
    for (const auto& st : S.struts) wf = wf && st.coeffs.size() == S.shape.rays.size() && st.chi.size() == S.u;
    wf = wf && S.target.ambient_dim == S.dim();
    rep.add("well_formed", wf);
    if (!wf || !shape) {
        rep.add("nef", false, "not checked");
        rep.add("target_fano", false, "not checked");
        rep.add("hull", false, "not checked");
        rep.add("uneliminated_basis", false, "not checked");
        return out;
    }

    bool nef = true;
    std::string nef_detail;
    for (std::size_t s = 0; s < S.struts.size(); ++s)
        if (S.dim_bar() > 0 && !is_nef(strut_divisor(S, s))) {
            nef = false;
            nef_detail = "strut " + std::to_string(s + 1) + " is not nef";
            break;
        }
    rep.add("nef", nef, nef_detail);

    bool fano = is_fano(S.target);
    rep.add("target_fano", fano);

    bool hull = false;
    if (nef) {
        hull = struts_hull(S) == S.target;
        for (std::size_t s = 0; s < S.struts.size(); ++s) {
            Polytope Q = strut_polytope(S, s);
            bool meets = false;
            for (const auto& v : S.target.vertices)
                if (Q.contains(v)) meets = true;
            if (!meets) out.struts_missing_vertices.push_back(s);
        }
    }
    rep.add("hull", hull, hull ? "" : "convex hull of the struts differs from the target");

    bool basis = split_struts(S).has_value();
    rep.add("uneliminated_basis", basis, basis ? "" : "no struts (0, e_i) forming a basis of N_U");
    return out;
}

bool validate_scaffolding(const Scaffolding& S) { return scaffolding_report(S).report.ok(); }

Cone strut_cone(const Scaffolding& S, std::size_t s) {
    check_strut(S, s);
    if (S.dim_bar() > 0 && !is_nef(strut_divisor(S, s)))
        throw DomainError("not_nef", "strut " + std::to_string(s + 1) + " is not nef");
    const std::size_t n = S.dim(), db = S.dim_bar();
    const auto& st = S.struts[s];
    std::vector<IntVec> rays, lin;
    for (std::size_t i = 0; i < S.shape.rays.size(); ++i) {
        IntVec g(n + 1, Int(0));
        for (std::size_t k = 0; k < db; ++k) g[k] = S.shape.rays[i][k];
        g[n] = st.coeffs[i];
        rays.push_back(g);
    }
    rays.push_back(unit_vector(n + 1, n));
    for (std::size_t j = 0; j < S.u; ++j) {
        IntVec g = unit_vector(n + 1, db + j);
        g[n] = -st.chi[j];
        lin.push_back(g);
    }
    return cone_from_generators(n + 1, rays, lin);
}

DualConeResult dual_cone_result(const Scaffolding& S) {
    DualConeResult out;
    auto rep = scaffolding_report(S).report;
    // The uneliminated basis is a standing assumption on every scaffolding,
    // so it is a precondition here as well.
    out.preconditions = rep.find("shape")->ok && rep.find("well_formed")->ok && rep.find("nef")->ok &&
                        rep.find("target_fano")->ok && rep.find("uneliminated_basis")->ok;
    if (!out.preconditions) return out;
    out.intersection = strut_cone(S, 0);
    for (std::size_t s = 1; s < S.struts.size(); ++s) out.intersection = intersect(out.intersection, strut_cone(S, s));
    out.expected = cone_over(dual_polytope(S.target), 1);
    out.equal = out.intersection == out.expected;
    return out;
}

bool dual_cone_check(const Scaffolding& S) {
    auto r = dual_cone_result(S);
    return r.preconditions && r.equal;
}

Fan projective_space_product(const std::vector<std::size_t>& dims) {
    Fan F;
    F.dim = std::accumulate(dims.begin(), dims.end(), std::size_t(0));
    std::vector<std::vector<std::size_t>> groups;
    std::size_t off = 0;
    for (auto d : dims) {
        std::vector<std::size_t> g;
        IntVec minus(F.dim, Int(0));
        for (std::size_t i = 0; i < d; ++i) {
            g.push_back(F.rays.size());
            F.rays.push_back(unit_vector(F.dim, off + i));
            minus[off + i] = -1;
        }
        g.push_back(F.rays.size());
        F.rays.push_back(minus);
        groups.push_back(g);
        off += d;
    }
    std::vector<std::size_t> omit(groups.size(), 0);
    while (true) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < groups.size(); ++i)
            for (std::size_t k = 0; k < groups[i].size(); ++k)
                if (k != omit[i]) c.push_back(groups[i][k]);
        std::sort(c.begin(), c.end());
        F.max_cones.push_back(c);
        std::size_t i = 0;
        while (i < groups.size() && ++omit[i] == groups[i].size()) omit[i++] = 0;
        if (i == groups.size()) break;
    }
    return F;
}

std::optional<std::vector<std::vector<std::size_t>>> product_factors(const Fan& F) {
    const std::size_t z = F.rays.size();
    if (F.dim == 0) return std::vector<std::vector<std::size_t>>{};
    auto ker = kernel_basis(IntMatrix::from_cols(F.rays, F.dim));
    if (ker.empty()) return std::nullopt;
    RatMatrix K = to_rat(IntMatrix::from_rows(ker));
    rref(K);
    std::vector<std::vector<std::size_t>> groups;
    std::vector<int> owner(z, -1);
    for (std::size_t i = 0; i < K.rows(); ++i) {
        std::vector<std::size_t> g;
        for (std::size_t j = 0; j < z; ++j) {
            if (K(i, j) == 0) continue;
            if (K(i, j) != 1 || owner[j] != -1) return std::nullopt;
            owner[j] = static_cast<int>(i);
            g.push_back(j);
        }
        if (g.size() < 2) return std::nullopt;
        groups.push_back(g);
    }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) return std::nullopt;
    std::size_t expect = 1;
    for (const auto& g : groups) expect *= g.size();
    if (F.max_cones.size() != expect) return std::nullopt;
    std::set<std::vector<std::size_t>> seen;
    for (const auto& c : F.max_cones) {
        for (const auto& g : groups) {
            std::size_t in = 0;
            for (auto j : g) in += std::count(c.begin(), c.end(), j);
            if (in != g.size() - 1) return std::nullopt;
        }
        if (c.size() != z - groups.size()) return std::nullopt;
        seen.insert(c);
    }
    if (seen.size() != expect) return std::nullopt;
    return groups;
}

Scaffolding scaffolding_from_forward(const GitData& gd, const ConvexPartition& p) {
    Report rep = validate_partition(gd, p);
    if (!rep.ok()) {
        std::string why;
        for (const auto& c : rep.checks)
            if (!c.ok) why += (why.empty() ? "" : "; ") + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")");
        throw DomainError("invalid_partition", why);
    }
    IntMatrix M = normalised_weight_matrix(gd, p.B);
    auto ch = resolved_choices(p);
    std::vector<std::size_t> dims, ray_index;
    for (const auto& s : p.S) dims.push_back(s.size() - 1);
    Scaffolding S;
    S.shape = projective_space_product(dims);
    // projective_space_product lists each factor's rays as e_1..e_d, -sum;
    // map the non-chosen indices (sorted) to e_k and the choice to -sum.
    for (std::size_t i = 0; i < p.S.size(); ++i) {
        std::vector<std::size_t> srt(p.S[i]);
        std::sort(srt.begin(), srt.end());
        for (auto j : srt)
            if (j != ch[i]) ray_index.push_back(j);
        ray_index.push_back(ch[i]);
    }
    std::vector<std::size_t> U(p.U);
    std::sort(U.begin(), U.end());
    S.u = U.size();
    for (std::size_t b = 0; b < p.B.size(); ++b) {
        Strut st;
        for (auto j : ray_index) st.coeffs.push_back(M(b, j));
        for (auto j : U) st.chi.push_back(-M(b, j));
        S.struts.push_back(st);
    }
    for (std::size_t k = 0; k < U.size(); ++k)
        S.struts.push_back({IntVec(S.shape.rays.size(), Int(0)), unit_vector(S.u, k)});
    S.target = struts_hull(S);
    return S;
}

Laurent strut_laurent(const Scaffolding& S, std::size_t s) {
    auto groups = product_factors(S.shape);
    if (!groups) throw DomainError("unsupported_shape", "shape is not a product of projective spaces");
    check_strut(S, s);
    const auto& st = S.struts[s];
    Laurent f(S.dim());
    std::vector<IntVec> pts{IntVec{}};
    if (S.dim_bar() > 0) pts = integral_points(sections_polytope(strut_divisor(S, s)));
    for (const auto& n : pts) {
        Int c = 1;
        for (const auto& g : *groups) {
            std::vector<Int> parts;
            for (auto j : g) parts.push_back(dot(S.shape.rays[j], n) + st.coeffs[j]);
            c *= multinomial(parts);
        }
        IntVec e(n);
        e.insert(e.end(), st.chi.begin(), st.chi.end());
        f.add_term(e, c);
    }
    return f;
}

Laurent laurent_from_scaffolding(const Scaffolding& S) {
    Laurent f(S.dim());
    for (std::size_t s = 0; s < S.struts.size(); ++s) f = f + strut_laurent(S, s);
    return f;
}

}  // namespace tmir
