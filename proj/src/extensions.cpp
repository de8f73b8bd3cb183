#include "toricmirror/extensions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tmir {

namespace {

Rat floor_rat(const Rat& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(f);
}

Rat ceil_rat(const Rat& q) {
    Int c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return Rat(c);
}

bool is_reflexive(const Polytope& P) {
    return P.full_dimensional() && P.is_lattice() && origin_in_interior(P) && dual_polytope(P).is_lattice();
}

std::vector<RatVec> pad(const std::vector<RatVec>& pts, std::size_t extra) {
    std::vector<RatVec> out;
    for (auto p : pts) {
        p.resize(p.size() + extra, Rat(0));
        out.push_back(p);
    }
    return out;
}

IntVec pad(IntVec v, std::size_t n) {
    v.resize(n, Int(0));
    return v;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

// ---- mutations ------------------------------------------------------------

Polytope slice(const Polytope& P, const IntVec& w, const Int& h) {
    std::vector<Hyperplane> eqs = P.equations;
    eqs.push_back({w, Rat(h)});
    return polytope_from_halfspaces(P.ambient_dim, P.facets, eqs);
}

Polytope mutate_polytope(const Polytope& P, const MutationData& m) {
    const std::size_t n = P.ambient_dim;
    if (m.weight.size() != n || m.factor.ambient_dim != n)
        throw DomainError("dimension_mismatch", "mutation data dimension");
    if (m.factor.empty()) throw DomainError("bad_factor", "empty factor");
    for (const auto& v : m.factor.vertices)
        if (dot(m.weight, v) != 0) throw DomainError("bad_factor", "factor is not contained in w-perp");
    if (P.empty()) return P;
    Rat lo = dot(m.weight, P.vertices.front()), hi = lo;
    for (const auto& v : P.vertices) {
        lo = std::min(lo, dot(m.weight, v));
        hi = std::max(hi, dot(m.weight, v));
    }
    std::vector<RatVec> pts;
    for (Int h = ceil_rat(lo).get_num(); h <= floor_rat(hi).get_num(); ++h) {
        Polytope sl = slice(P, m.weight, h);
        if (sl.empty()) continue;
        if (h == 0) {
            pts.insert(pts.end(), sl.vertices.begin(), sl.vertices.end());
        } else if (h > 0) {
            Polytope q = minkowski_sum(sl, dilate(m.factor, Rat(h)));
            pts.insert(pts.end(), q.vertices.begin(), q.vertices.end());
        } else {
            Erosion e = minkowski_difference(sl, dilate(m.factor, Rat(-h)));
            if (!e.result || !e.exact)
                throw DomainError("not_mutable", "slice at level " + h.get_str() + " does not contain " +
                                                     Int(-h).get_str() + "F as a Minkowski summand");
            pts.insert(pts.end(), e.result->vertices.begin(), e.result->vertices.end());
        }
    }
    // Non-integral vertex levels of a rational polytope are covered by the
    // hull only when P is lattice; keep the original vertices off-lattice.
    for (const auto& v : P.vertices) {
        Rat h = dot(m.weight, v);
        if (h.get_den() != 1) pts.push_back(v);
    }
    return convex_hull(pts, n);
}

RatVec mutate_dual_point(const RatVec& m, const MutationData& md) {
    Rat mn = dot(m, md.factor.vertices.front());
    for (const auto& f : md.factor.vertices) mn = std::min(mn, dot(m, f));
    return sub(m, scale(to_rat(md.weight), mn));
}

Scaffolding mutate_scaffolding(const Scaffolding& S, const MutationData& m) {
    const std::size_t db = S.dim_bar(), n = S.dim();
    if (m.weight.size() != db || m.factor.ambient_dim != db)
        throw DomainError("dimension_mismatch", "scaffolding mutation data must live in Mbar and Nbar");
    MutationData full{pad(m.weight, n), convex_hull(pad(m.factor.vertices, S.u), n)};

    Scaffolding out;
    out.u = S.u;
    out.target = mutate_polytope(S.target, full);

    // Shape: refine by the linearity domains of m -> min_F <m, f>, then map.
    std::vector<RatVec> fv = m.factor.vertices;
    std::set<IntVec> rayset;
    std::vector<std::vector<IntVec>> cones;
    for (std::size_t c = 0; c < S.shape.max_cones.size(); ++c) {
        Cone sigma = S.shape.cone(c);
        for (std::size_t a = 0; a < fv.size(); ++a) {
            std::vector<IntVec> ineq;
            for (std::size_t b = 0; b < fv.size(); ++b)
                if (b != a) ineq.push_back(primitive(sub(fv[b], fv[a])));
            Cone region = cone_from_inequalities(db, ineq);
            Cone piece = intersect(sigma, region);
            if (piece.dim() != db) continue;
            std::vector<IntVec> img;
            for (const auto& r : piece.rays) {
                RatVec t = sub(to_rat(r), scale(to_rat(m.weight), dot(r, fv[a])));
                img.push_back(primitive(t));
            }
            std::sort(img.begin(), img.end());
            if (std::find(cones.begin(), cones.end(), img) == cones.end()) cones.push_back(img);
            rayset.insert(img.begin(), img.end());
        }
    }
    out.shape.dim = db;
    out.shape.rays.assign(rayset.begin(), rayset.end());
    for (const auto& img : cones) {
        std::vector<std::size_t> idx;
        for (const auto& r : img)
            idx.push_back(static_cast<std::size_t>(std::lower_bound(out.shape.rays.begin(), out.shape.rays.end(), r) -
                                                   out.shape.rays.begin()));
        out.shape.max_cones.push_back(idx);
    }
    std::sort(out.shape.max_cones.begin(), out.shape.max_cones.end());

    for (std::size_t s = 0; s < S.struts.size(); ++s) {
        Polytope Q;
        try {
            Q = mutate_polytope(strut_polytope(S, s), full);
        } catch (const DomainError& e) {
            throw DomainError(e.kind(), "strut " + std::to_string(s + 1) + ": " + e.what());
        }
        Strut st;
        st.chi = S.struts[s].chi;
        for (const auto& rho : out.shape.rays) {
            Rat mn;
            bool first = true;
            for (const auto& v : Q.vertices) {
                RatVec vb(v.begin(), v.begin() + static_cast<long>(db));
                Rat val = dot(rho, vb);
                if (first || val < mn) mn = val;
                first = false;
            }
            if (mn.get_den() != 1)
                throw DomainError("non_integral_strut", "strut " + std::to_string(s + 1) + " becomes non-integral");
            st.coeffs.push_back(-mn.get_num());
        }
        out.struts.push_back(st);
    }
    return out;
}

// ---- nef partitions -------------------------------------------------------

NefPartitionResult check_nef_partition(const Polytope& Delta, const std::vector<std::vector<IntVec>>& parts) {
    NefPartitionResult out;
    Report& rep = out.report;
    bool refl = is_reflexive(Delta);
    rep.add("reflexive", refl);
    if (!refl) return out;
    Fan fan = spanning_fan(Delta);
    std::vector<int> owner(fan.rays.size(), -1);
    bool part_ok = true;
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (const auto& v : parts[i]) {
            auto it = std::find(fan.rays.begin(), fan.rays.end(), v);
            if (it == fan.rays.end() || owner[it - fan.rays.begin()] != -1) {
                part_ok = false;
                continue;
            }
            owner[it - fan.rays.begin()] = static_cast<int>(i);
        }
    part_ok = part_ok && std::find(owner.begin(), owner.end(), -1) == owner.end();
    rep.add("partition", part_ok);
    if (!part_ok) return out;

    bool integral = true, nef = true;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        ToricDivisor D{fan, IntVec(fan.rays.size(), Int(0))};
        for (std::size_t r = 0; r < fan.rays.size(); ++r)
            if (owner[r] == static_cast<int>(i)) D.coeffs[r] = 1;
        PLFunction pl;
        try {
            pl = pl_function(D);
        } catch (const DomainError& e) {
            throw DomainError("inconsistent_pl", "phi_" + std::to_string(i + 1) + " is not piecewise linear: " + e.what());
        }
        for (const auto& s : pl.slopes) integral = integral && is_integral(s);
        nef = nef && is_nef(D);
        out.nablas.push_back(sections_polytope(D));
    }
    rep.add("integral", integral);
    rep.add("nef", nef);
    bool mink = false;
    if (nef) {
        Polytope sum = out.nablas.front();
        for (std::size_t i = 1; i < out.nablas.size(); ++i) sum = minkowski_sum(sum, out.nablas[i]);
        mink = sum == dual_polytope(Delta);
    }
    rep.add("minkowski", mink);
    bool pts = false;
    if (mink) {
        std::vector<std::vector<RatVec>> groups;
        for (const auto& nb : out.nablas) groups.push_back(nb.vertices);
        if (auto sel = convex_selection(groups, RatVec(Delta.ambient_dim, Rat(0)))) {
            out.points = *sel;
            pts = true;
        }
    }
    rep.add("points", pts);
    return out;
}

Report check_fano_nef_partition(const FanoNefPartition& fnp) {
    Report rep;
    const Fan& fan = fnp.fan;
    std::vector<int> seen(fan.rays.size(), 0);
    bool ok = true;
    auto mark = [&](std::size_t j) {
        if (j >= seen.size()) ok = false;
        else ++seen[j];
    };
    for (const auto& e : fnp.E)
        for (auto j : e) mark(j);
    for (auto j : fnp.F) mark(j);
    ok = ok && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
    rep.add("partition", ok);
    if (!ok) return rep;

    ToricDivisor DF{fan, IntVec(fan.rays.size(), Int(0))};
    for (auto j : fnp.F) DF.coeffs[j] = 1;
    rep.add("ample_F", is_ample(DF));

    bool nef = true;
    std::string nef_detail;
    for (std::size_t i = 0; i < fnp.E.size(); ++i) {
        ToricDivisor Di{fan, IntVec(fan.rays.size(), Int(0))};
        for (auto j : fnp.E[i]) Di.coeffs[j] = 1;
        if (!is_nef(Di)) {
            nef = false;
            nef_detail = "D_" + std::to_string(i + 1) + " is not nef";
            break;
        }
    }
    rep.add("nef_E", nef, nef_detail);

    std::vector<std::size_t> Eall;
    for (const auto& e : fnp.E) Eall.insert(Eall.end(), e.begin(), e.end());
    Eall = sorted(Eall);
    bool gor = false;
    for (const auto& c : fan.max_cones) {
        if (!std::includes(c.begin(), c.end(), Eall.begin(), Eall.end())) continue;
        std::vector<IntVec> rows;
        for (auto j : Eall) rows.push_back(fan.rays[j]);
        if (rows.empty()) {
            gor = true;
            break;
        }
        auto sol = solve_linear(to_rat(IntMatrix::from_rows(rows)), RatVec(rows.size(), Rat(1)));
        gor = sol.has_value();
        break;
    }
    rep.add("gorenstein_cone", gor);
    return rep;
}

FanoNefPartition fano_nef_partition_from_inversion(const Scaffolding& S, const InversionResult& inv) {
    FanoNefPartition out;
    out.fan.dim = inv.rays.front().size();
    out.fan.rays = inv.rays;
    const std::size_t R = inv.git.R();
    for (const auto& I : minimal_covering_sets(inv.git)) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < R; ++i)
            if (!std::binary_search(I.begin(), I.end(), i)) c.push_back(i);
        out.fan.max_cones.push_back(c);
    }
    const std::size_t off = inv.row_struts.size() + inv.basis_struts.size();
    for (std::size_t j = 0; j < off; ++j) out.F.push_back(j);
    if (auto groups = product_factors(S.shape)) {
        for (const auto& g : *groups) {
            std::vector<std::size_t> e;
            for (auto j : g) e.push_back(off + j);
            out.E.push_back(e);
        }
    } else {
        std::vector<std::size_t> e;
        for (std::size_t j = off; j < R; ++j) e.push_back(j);
        out.E.push_back(e);
    }
    return out;
}

// ---- Cayley constructions ---------------------------------------------------

Cayley cayley(const std::vector<Polytope>& polys) {
    if (polys.empty()) throw DomainError("empty_input", "Cayley construction needs at least one polytope");
    const std::size_t n = polys.front().ambient_dim, r = polys.size();
    std::vector<RatVec> pts;
    for (std::size_t i = 0; i < r; ++i) {
        if (polys[i].ambient_dim != n) throw DomainError("dimension_mismatch", "Cayley factors differ in dimension");
        for (auto v : polys[i].vertices) {
            v.resize(n + r, Rat(0));
            v[n + i] = 1;
            pts.push_back(v);
        }
    }
    Cayley out;
    out.polytope = convex_hull(pts, n + r);
    std::vector<IntVec> gens;
    for (const auto& p : out.polytope.vertices) gens.push_back(primitive(p));
    out.cone = cone_from_generators(n + r, gens);
    return out;
}

bool is_gorenstein_of_index(const Polytope& P, unsigned r) {
    if (P.empty() || r == 0) return false;
    Polytope Q = dilate(P, Rat(r));
    if (!Q.is_lattice()) return false;
    std::vector<IntVec> inner;
    for (const auto& p : integral_points(Q))
        if (Q.contains_in_relative_interior(to_rat(p))) inner.push_back(p);
    if (inner.size() != 1) return false;
    auto chart = affine_lattice_chart(Q, to_rat(inner.front()));
    return is_reflexive(chart.polytope);
}

IntMatrix picard_class_map(const Fan& shape) {
    const std::size_t z = shape.rays.size();
    if (auto groups = product_factors(shape)) {
        IntMatrix C(groups->size(), z);
        for (std::size_t i = 0; i < groups->size(); ++i)
            for (auto j : (*groups)[i]) C(i, j) = 1;
        return C;
    }
    auto K = kernel_basis(IntMatrix::from_cols(shape.rays, shape.dim));
    return IntMatrix::from_rows(K, z);
}

Polytope p_tilde(const Scaffolding& S, const std::vector<IntVec>& R) {
    if (R.size() != S.struts.size()) throw DomainError("dimension_mismatch", "one lift per strut required");
    const std::size_t l = R.empty() ? 0 : R.front().size();
    std::vector<RatVec> pts;
    for (std::size_t s = 0; s < S.struts.size(); ++s) {
        if (R[s].size() != l) throw DomainError("dimension_mismatch", "lifts of different lengths");
        for (auto v : strut_polytope(S, s).vertices) {
            for (const auto& x : R[s]) v.push_back(Rat(x));
            pts.push_back(v);
        }
    }
    return convex_hull(pts, S.dim() + l);
}

Polytope p_tilde_canonical(const Scaffolding& S) {
    IntMatrix C = picard_class_map(S.shape);
    std::vector<IntVec> R;
    for (const auto& st : S.struts) R.push_back(neg(C * st.coeffs));
    return p_tilde(S, R);
}

Polytope p_tilde_one(const Scaffolding& S) {
    IntMatrix C = picard_class_map(S.shape);
    Polytope Pt = p_tilde_canonical(S);
    std::vector<RatVec> pts = Pt.vertices;
    const std::size_t n = S.dim(), l = C.rows();
    for (std::size_t i = 0; i < l; ++i) pts.push_back(to_rat(unit_vector(n + l, n + i)));
    return convex_hull(pts, n + l);
}

Laurent p_tilde_one_laurent(const Scaffolding& S) {
    auto groups = product_factors(S.shape);
    if (!groups) throw DomainError("unsupported_shape", "shape is not a product of projective spaces");
    IntMatrix C = picard_class_map(S.shape);
    const std::size_t n = S.dim(), l = C.rows();
    std::vector<std::string> names;
    if (n <= 2) {
        names = default_var_names(n);
    } else {
        for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < l; ++i) names.push_back("z" + std::to_string(i + 1));
    Laurent g(names);
    for (std::size_t s = 0; s < S.struts.size(); ++s) {
        IntVec rs = neg(C * S.struts[s].coeffs);
        const Laurent part = strut_laurent(S, s);
        for (const auto& [e, c] : part.terms()) {
            IntVec ex(e);
            ex.insert(ex.end(), rs.begin(), rs.end());
            g.add_term(ex, c);
        }
    }
    for (std::size_t i = 0; i < l; ++i) g.add_term(unit_vector(n + l, n + i), 1);
    return g;
}

Polytope p_s_polytope(const Scaffolding& S) {
    const std::size_t z = S.shape.rays.size(), dim = z + S.u;
    std::vector<IntVec> pts;
    for (std::size_t j = 0; j < z; ++j) pts.push_back(unit_vector(dim, j));
    for (const auto& r : ambient_strut_rays(S)) pts.push_back(r);
    return convex_hull(pts, dim);
}

MutationChain mutation_chain(const Scaffolding& S) {
    auto groups = product_factors(S.shape);
    if (!groups) throw DomainError("unsupported_shape", "shape is not a product of projective spaces");
    const std::size_t z = S.shape.rays.size(), dim = z + S.u, n = S.dim(), k = groups->size();
    IntMatrix theta = embedding_lattice_map(S);
    // Phi(n, c) = theta(n) + sum c_i v_i with v_i the first divisor of factor i.
    IntMatrix Phi(dim, n + k);
    for (std::size_t a = 0; a < dim; ++a)
        for (std::size_t b = 0; b < n; ++b) Phi(a, b) = theta(a, b);
    for (std::size_t i = 0; i < k; ++i) Phi((*groups)[i].front(), n + i) = 1;
    Int d = determinant(Phi);
    if (d != 1 && d != -1) throw DomainError("not_unimodular", "chosen divisors do not complete theta(N) to a basis");

    MutationChain out;
    std::vector<RatVec> pts;
    RatMatrix PhiQ = to_rat(Phi);
    for (const auto& v : p_tilde_one(S).vertices) pts.push_back(PhiQ * v);
    out.start = convex_hull(pts, dim);
    out.result = out.start;
    for (std::size_t i = 0; i < k; ++i) {
        IntVec w(dim, Int(0));
        std::vector<IntVec> fpts;
        const std::size_t vi = (*groups)[i].front();
        for (auto j : (*groups)[i]) {
            w[j] = 1;
            fpts.push_back(sub(unit_vector(dim, j), unit_vector(dim, vi)));
        }
        out.result = mutate_polytope(out.result, {w, convex_hull(fpts, dim)});
    }
    out.p_s = p_s_polytope(S);
    out.isomorphic = lattice_isomorphic(out.result, out.p_s).has_value();
    return out;
}

bool mutation_chain_check(const Scaffolding& S) { return mutation_chain(S).isomorphic; }

// ---- amenable collections ---------------------------------------------------

std::vector<IntVec> distinguished_rays(const GitData& gd, const std::vector<std::size_t>& B) {
    IntMatrix M = normalised_weight_matrix(gd, B);
    const std::size_t R = gd.R(), dim = R - gd.r;
    std::vector<long> pos(R, -1), bpos(R, -1);
    for (std::size_t i = 0; i < B.size(); ++i) bpos[B[i]] = static_cast<long>(i);
    long next = 0;
    for (std::size_t j = 0; j < R; ++j)
        if (bpos[j] < 0) pos[j] = next++;
    std::vector<IntVec> rays(R);
    for (std::size_t j = 0; j < R; ++j) {
        if (pos[j] >= 0) {
            rays[j] = unit_vector(dim, pos[j]);
            continue;
        }
        IntVec v(dim, Int(0));
        for (std::size_t t = 0; t < R; ++t)
            if (pos[t] >= 0) v[pos[t]] = -M(bpos[j], t);
        rays[j] = v;
    }
    return rays;
}

Report validate_amenable(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W) {
    Report rep;
    const std::size_t k = p.S.size();
    if (W.size() != k) {
        rep.add("size", false, "expected " + std::to_string(k) + " vectors");
        return rep;
    }
    auto rays = distinguished_rays(gd, p.B);
    bool own = true, earlier = true, later = true;
    std::string d1, d2, d3;
    for (std::size_t i = 0; i < k; ++i) {
        if (W[i].size() != rays.front().size()) throw DomainError("dimension_mismatch", "amenable vector length");
        for (auto j : p.S[i])
            if (dot(W[i], rays[j]) != -1) own = false, d1 = "w_" + std::to_string(i + 1);
        for (std::size_t l = 0; l < k; ++l)
            for (auto j : p.S[l]) {
                Int v = dot(W[i], rays[j]);
                if (l < i && v != 0) earlier = false, d2 = "w_" + std::to_string(i + 1);
                if (l > i && v < 0) later = false, d3 = "w_" + std::to_string(i + 1);
            }
        for (auto j : p.U)
            if (dot(W[i], rays[j]) != 0) earlier = false, d2 = "w_" + std::to_string(i + 1) + " on U";
    }
    rep.add("own_block", own, d1);
    rep.add("earlier_blocks", earlier, d2);
    rep.add("later_blocks", later, d3);
    return rep;
}

namespace {

void require_amenable(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W) {
    Report rep = validate_amenable(gd, p, W);
    if (!rep.ok()) {
        std::string why;
        for (const auto& c : rep.checks)
            if (!c.ok) why += (why.empty() ? "" : "; ") + c.name;
        throw DomainError("invalid_amenable", why);
    }
}

}  // namespace

Fan tower_from_amenable(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W) {
    require_amenable(gd, p, W);
    auto rays = distinguished_rays(gd, p.B);
    Fan Z;
    Z.dim = 0;
    Z.max_cones = {{}};
    std::vector<std::size_t> first_ray;  // ray index of the first element of each earlier block
    for (std::size_t j = 0; j < p.S.size(); ++j) {
        std::vector<IntVec> summands;
        for (auto nidx : sorted(p.S[j])) {
            IntVec c(Z.rays.size(), Int(0));
            for (std::size_t m = 0; m < j; ++m) c[first_ray[m]] = -dot(W[m], rays[nidx]);
            summands.push_back(c);
        }
        std::size_t base_rays = Z.rays.size();
        Z = projective_bundle_fan(Z, summands);
        first_ray.push_back(base_rays);
    }
    return Z;
}

Fan tower_from_relations(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W) {
    require_amenable(gd, p, W);
    auto rays = distinguished_rays(gd, p.B);
    std::vector<std::size_t> order;
    std::vector<std::vector<std::size_t>> groups;
    for (const auto& s : p.S) {
        std::vector<std::size_t> g;
        for (auto j : sorted(s)) {
            g.push_back(order.size());
            order.push_back(j);
        }
        groups.push_back(g);
    }
    const std::size_t z = order.size(), k = p.S.size();
    IntMatrix A(k, z);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = 0; t < z; ++t) A(i, t) = -dot(W[i], rays[order[t]]);
    auto Q = kernel_basis(A);
    Fan Z;
    Z.dim = Q.size();
    for (std::size_t t = 0; t < z; ++t) {
        IntVec r;
        for (const auto& row : Q) r.push_back(row[t]);
        Z.rays.push_back(r);
    }
    std::vector<std::size_t> omit(k, 0);
    while (true) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t a = 0; a < groups[i].size(); ++a)
                if (a != omit[i]) c.push_back(groups[i][a]);
        std::sort(c.begin(), c.end());
        Z.max_cones.push_back(c);
        std::size_t i = 0;
        while (i < k && ++omit[i] == groups[i].size()) omit[i++] = 0;
        if (i == k) break;
    }
    return Z;
}

std::vector<Binomial> amenable_binomials(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W) {
    require_amenable(gd, p, W);
    auto rays = distinguished_rays(gd, p.B);
    std::vector<Binomial> out;
    for (const auto& w : W) {
        IntVec v;
        for (const auto& r : rays) v.push_back(-dot(w, r));
        out.push_back(split_by_sign(v));
    }
    return out;
}

Scaffolding scaffolding_from_tower(const GitData& gd, const ConvexPartition& p, const std::vector<IntVec>& W) {
    Scaffolding S;
    S.shape = tower_from_amenable(gd, p, W);
    IntMatrix M = normalised_weight_matrix(gd, p.B);
    std::vector<std::size_t> order;
    for (const auto& s : p.S)
        for (auto j : sorted(s)) order.push_back(j);
    auto U = sorted(p.U);
    S.u = U.size();
    for (std::size_t b = 0; b < p.B.size(); ++b) {
        Strut st;
        for (auto j : order) st.coeffs.push_back(M(b, j));
        for (auto j : U) st.chi.push_back(-M(b, j));
        S.struts.push_back(st);
    }
    for (std::size_t k = 0; k < U.size(); ++k)
        S.struts.push_back({IntVec(S.shape.rays.size(), Int(0)), unit_vector(S.u, k)});
    S.target = struts_hull(S);
    return S;
}

// ---- mutability of struts ---------------------------------------------------

std::vector<MutabilityEntry> strut_mutability(const Scaffolding& S, const std::vector<IntVec>& weights) {
    if (S.dim() != 2) throw DomainError("unsupported_dimension", "strut mutability is implemented for polygons");
    std::vector<MutabilityEntry> out;
    for (std::size_t s = 0; s < S.struts.size(); ++s) {
        Polytope Q = strut_polytope(S, s);
        for (std::size_t k = 0; k < weights.size(); ++k) {
            const IntVec& w = weights[k];
            if (w.size() != 2 || is_zero(w)) throw DomainError("bad_weight", "weights must be non-zero vectors in M");
            IntVec v = primitive(IntVec{-w[1], w[0]});
            MutabilityEntry e{s, k, true, {}};
            try {
                mutate_polytope(Q, {w, convex_hull(std::vector<IntVec>{IntVec{0, 0}, v}, 2)});
            } catch (const DomainError& err) {
                e.ok = false;
                e.detail = err.what();
            }
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace tmir
