#include "toricmirror/polyhedra.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <functional>
#include <map>
#include <set>

namespace tmir {

namespace {

using Bits = boost::dynamic_bitset<>;

// Extreme rays of the pointed cone {y : A y >= 0}, A of full column rank k.
std::vector<IntVec> dd_pointed(const std::vector<IntVec>& A, std::size_t k) {
    if (k == 0) return {};
    const std::size_t m = A.size();
    std::vector<std::size_t> basis;
    std::vector<IntVec> chosen;
    for (std::size_t i = 0; i < m && basis.size() < k; ++i) {
        if (is_zero(A[i])) continue;
        chosen.push_back(A[i]);
        if (rank(IntMatrix::from_rows(chosen, k)) == chosen.size()) {
            basis.push_back(i);
        } else {
            chosen.pop_back();
        }
    }
    if (basis.size() != k) throw DomainError("internal", "double description: cone is not pointed");

    auto inv = rational_inverse(to_rat(IntMatrix::from_rows(chosen, k)));
    struct Ray {
        IntVec v;
        Bits z;
    };
    std::vector<Ray> rays;
    for (std::size_t j = 0; j < k; ++j) {
        Ray r{primitive(inv->col(j)), Bits(m)};
        for (std::size_t i = 0; i < k; ++i)
            if (i != j) r.z.set(basis[i]);
        rays.push_back(std::move(r));
    }
    std::vector<bool> in_basis(m, false);
    for (auto b : basis) in_basis[b] = true;

    for (std::size_t i = 0; i < m; ++i) {
        if (in_basis[i]) continue;
        const IntVec& a = A[i];
        std::vector<Int> val(rays.size());
        std::vector<std::size_t> pos, zero, negs;
        for (std::size_t r = 0; r < rays.size(); ++r) {
            val[r] = dot(a, rays[r].v);
            if (val[r] > 0)
                pos.push_back(r);
            else if (val[r] == 0)
                zero.push_back(r);
            else
                negs.push_back(r);
        }
        if (negs.empty()) {
            for (auto r : zero) rays[r].z.set(i);
            continue;
        }
        std::vector<Ray> next;
        for (auto p : pos) {
            for (auto n : negs) {
                Bits common = rays[p].z & rays[n].z;
                if (common.count() + 2 < k) continue;
                bool adjacent = true;
                for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
                    if (r == p || r == n) continue;
                    if (common.is_subset_of(rays[r].z)) adjacent = false;
                }
                if (!adjacent) continue;
                IntVec v(k);
                for (std::size_t t = 0; t < k; ++t) v[t] = val[p] * rays[n].v[t] - val[n] * rays[p].v[t];
                Ray nr{primitive(v), common};
                nr.z.set(i);
                next.push_back(std::move(nr));
            }
        }
        for (auto p : pos) next.push_back(rays[p]);
        for (auto z : zero) {
            Ray r = rays[z];
            r.z.set(i);
            next.push_back(std::move(r));
        }
        rays = std::move(next);
    }
    std::vector<IntVec> out;
    for (auto& r : rays) out.push_back(r.v);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntVec head(const IntVec& a, std::size_t n) { return IntVec(a.begin(), a.begin() + static_cast<long>(n)); }

IntVec homogenise(const RatVec& p) {
    RatVec h(p);
    h.push_back(Rat(1));
    return primitive(h);
}

}  // namespace

ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVec>& inequalities,
                               const std::vector<IntVec>& equations) {
    std::vector<IntVec> all(inequalities);
    all.insert(all.end(), equations.begin(), equations.end());
    ConeGenerators out;
    out.lineality = kernel_basis(IntMatrix::from_rows(all, dim));
    std::vector<IntVec> cut(equations);
    cut.insert(cut.end(), out.lineality.begin(), out.lineality.end());
    auto W = kernel_basis(IntMatrix::from_rows(cut, dim));
    const std::size_t k = W.size();
    if (k == 0) return out;
    std::vector<IntVec> A;
    for (const auto& a : inequalities) {
        IntVec row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(a, W[j]);
        A.push_back(row);
    }
    for (const auto& y : dd_pointed(A, k)) {
        IntVec x(dim, Int(0));
        for (std::size_t j = 0; j < k; ++j)
            for (std::size_t t = 0; t < dim; ++t) x[t] += y[j] * W[j][t];
        out.rays.push_back(primitive(x));
    }
    std::sort(out.rays.begin(), out.rays.end());
    return out;
}

Cone cone_from_inequalities(std::size_t dim, const std::vector<IntVec>& inequalities,
                            const std::vector<IntVec>& equations) {
    Cone c;
    c.ambient_dim = dim;
    auto g = cone_generators(dim, inequalities, equations);
    c.rays = g.rays;
    c.lineality = g.lineality;
    auto d = cone_generators(dim, g.rays, g.lineality);
    c.facets = d.rays;
    c.equations = d.lineality;
    return c;
}

Cone cone_from_generators(std::size_t dim, const std::vector<IntVec>& rays, const std::vector<IntVec>& lineality) {
    for (const auto& r : rays)
        if (r.size() != dim) throw DomainError("dimension_mismatch", "cone generator length");
    auto d = cone_generators(dim, rays, lineality);
    return cone_from_inequalities(dim, d.rays, d.lineality);
}

bool Cone::contains(const RatVec& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) < 0) return false;
    return true;
}

bool Cone::contains_in_relative_interior(const RatVec& x) const {
    for (const auto& e : equations)
        if (dot(e, x) != 0) return false;
    for (const auto& f : facets)
        if (dot(f, x) <= 0) return false;
    return true;
}

Cone intersect(const Cone& a, const Cone& b) {
    if (a.ambient_dim != b.ambient_dim) throw DomainError("dimension_mismatch", "cone intersection");
    std::vector<IntVec> ineq(a.facets), eq(a.equations);
    ineq.insert(ineq.end(), b.facets.begin(), b.facets.end());
    eq.insert(eq.end(), b.equations.begin(), b.equations.end());
    return cone_from_inequalities(a.ambient_dim, ineq, eq);
}

Cone pullback(const Cone& c, const IntMatrix& B) {
    if (B.rows() != c.ambient_dim) throw DomainError("dimension_mismatch", "pullback matrix rows");
    auto pull = [&](const std::vector<IntVec>& rows) {
        std::vector<IntVec> out;
        for (const auto& a : rows) {
            IntVec r(B.cols(), Int(0));
            for (std::size_t j = 0; j < B.cols(); ++j)
                for (std::size_t i = 0; i < B.rows(); ++i) r[j] += a[i] * B(i, j);
            out.push_back(r);
        }
        return out;
    };
    return cone_from_inequalities(B.cols(), pull(c.facets), pull(c.equations));
}

// ---------------------------------------------------------------------------

Halfspace make_halfspace(const RatVec& normal, const Rat& offset) {
    IntVec n = primitive(normal);
    std::size_t i = 0;
    while (i < normal.size() && normal[i] == 0) ++i;
    if (i == normal.size()) throw DomainError("degenerate", "zero normal in halfspace");
    Rat s = Rat(n[i]) / normal[i];
    Rat off = offset * s;
    return {n, off};
}

Polytope convex_hull(const std::vector<IntVec>& points, std::size_t ambient_dim) {
    std::vector<RatVec> r;
    for (const auto& p : points) r.push_back(to_rat(p));
    return convex_hull(r, ambient_dim);
}

Polytope convex_hull(const std::vector<RatVec>& points, std::size_t n) {
    if (points.empty()) throw DomainError("empty_input", "convex hull of no points");
    std::vector<RatVec> pts(points);
    for (const auto& p : pts)
        if (p.size() != n) throw DomainError("dimension_mismatch", "point of wrong dimension in hull");
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    std::vector<IntVec> gens;
    for (const auto& p : pts) gens.push_back(homogenise(p));
    auto dual = cone_generators(n + 1, gens, {});

    Polytope P;
    P.ambient_dim = n;
    for (const auto& l : dual.lineality) P.equations.push_back({head(l, n), Rat(-l[n])});
    const bool point = dual.lineality.size() == n;
    if (!point) {
        for (const auto& r : dual.rays) {
            IntVec a = head(r, n);
            Int g = gcd_of(a);
            if (g == 0) throw DomainError("internal", "degenerate facet in hull");
            P.facets.push_back({primitive(a), ratio(-r[n], g)});
        }
    }
    std::sort(P.facets.begin(), P.facets.end(), [](const Halfspace& a, const Halfspace& b) {
        return a.normal != b.normal ? a.normal < b.normal : a.offset < b.offset;
    });
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<IntVec> tight(dual.lineality);
        for (const auto& r : dual.rays)
            if (dot(r, to_rat(gens[i])) == 0) tight.push_back(r);
        if (rank(IntMatrix::from_rows(tight, n + 1)) == n) P.vertices.push_back(pts[i]);
    }
    return P;
}

Polytope polytope_from_halfspaces(std::size_t n, const std::vector<Halfspace>& halfspaces,
                                  const std::vector<Hyperplane>& equations) {
    std::vector<IntVec> ineq, eq;
    for (const auto& h : halfspaces) {
        RatVec row = to_rat(h.normal);
        row.push_back(-h.offset);
        ineq.push_back(primitive(row));
    }
    ineq.push_back(unit_vector(n + 1, n));
    for (const auto& h : equations) {
        RatVec row = to_rat(h.normal);
        row.push_back(-h.offset);
        eq.push_back(primitive(row));
    }
    auto g = cone_generators(n + 1, ineq, eq);
    std::vector<RatVec> pts;
    bool recession = !g.lineality.empty();
    for (const auto& r : g.rays) {
        if (r[n] == 0) {
            recession = true;
            continue;
        }
        RatVec p(n);
        for (std::size_t i = 0; i < n; ++i) p[i] = ratio(r[i], r[n]);
        pts.push_back(p);
    }
    if (pts.empty()) {
        Polytope P;
        P.ambient_dim = n;
        return P;
    }
    if (recession) throw DomainError("unbounded", "halfspace system is unbounded");
    return convex_hull(pts, n);
}

bool Polytope::contains(const RatVec& x) const {
    if (empty()) return false;
    for (const auto& e : equations)
        if (dot(e.normal, x) != e.offset) return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) < f.offset) return false;
    return true;
}

bool Polytope::contains_in_relative_interior(const RatVec& x) const {
    if (empty()) return false;
    for (const auto& e : equations)
        if (dot(e.normal, x) != e.offset) return false;
    for (const auto& f : facets)
        if (dot(f.normal, x) <= f.offset) return false;
    return true;
}

bool Polytope::is_lattice() const {
    return std::all_of(vertices.begin(), vertices.end(), [](const RatVec& v) { return is_integral(v); });
}

bool origin_in_interior(const Polytope& P) {
    return P.full_dimensional() && P.contains_in_relative_interior(RatVec(P.ambient_dim, Rat(0)));
}

Polytope dual_polytope(const Polytope& P) {
    if (!origin_in_interior(P)) throw DomainError("origin_not_interior", "dual polytope needs 0 in the interior");
    std::vector<Halfspace> hs;
    for (const auto& v : P.vertices) hs.push_back(make_halfspace(v, Rat(-1)));
    return polytope_from_halfspaces(P.ambient_dim, hs);
}

bool is_fano(const Polytope& P) {
    if (!origin_in_interior(P)) return false;
    for (const auto& v : P.vertices) {
        if (!is_integral(v)) return false;
        if (gcd_of(to_int(v)) != 1) return false;
    }
    return true;
}

std::vector<IntVec> integral_points(const Polytope& P) {
    std::vector<IntVec> out;
    if (P.empty()) return out;
    const std::size_t n = P.ambient_dim;
    IntVec lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat mn = P.vertices[0][i], mx = P.vertices[0][i];
        for (const auto& v : P.vertices) {
            mn = std::min(mn, v[i]);
            mx = std::max(mx, v[i]);
        }
        mpz_cdiv_q(lo[i].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
        mpz_fdiv_q(hi[i].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    }
    IntVec cur(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            if (P.contains(cur)) out.push_back(cur);
            return;
        }
        for (Int x = lo[i]; x <= hi[i]; ++x) {
            cur[i] = x;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

std::vector<IntVec> interior_integral_points(const Polytope& P) {
    std::vector<IntVec> out;
    for (auto& p : integral_points(P))
        if (P.contains_in_relative_interior(to_rat(p))) out.push_back(p);
    return out;
}

std::vector<IntVec> boundary_integral_points(const Polytope& P) {
    std::vector<IntVec> out;
    for (auto& p : integral_points(P))
        if (!P.contains_in_relative_interior(to_rat(p))) out.push_back(p);
    return out;
}

Polytope minkowski_sum(const Polytope& P, const Polytope& Q) {
    if (P.ambient_dim != Q.ambient_dim) throw DomainError("dimension_mismatch", "Minkowski sum");
    if (P.empty() || Q.empty()) return Polytope{P.ambient_dim, {}, {}, {}};
    std::vector<RatVec> pts;
    for (const auto& p : P.vertices)
        for (const auto& q : Q.vertices) pts.push_back(add(p, q));
    return convex_hull(pts, P.ambient_dim);
}

Erosion minkowski_difference(const Polytope& P, const Polytope& Q) {
    if (P.ambient_dim != Q.ambient_dim) throw DomainError("dimension_mismatch", "Minkowski difference");
    Erosion e;
    if (P.empty() || Q.empty()) return e;
    std::vector<Halfspace> hs;
    std::vector<Hyperplane> eqs;
    for (const auto& f : P.facets) {
        Rat mn = dot(f.normal, Q.vertices[0]);
        for (const auto& q : Q.vertices) mn = std::min(mn, dot(f.normal, q));
        hs.push_back({f.normal, f.offset - mn});
    }
    for (const auto& h : P.equations) {
        Rat val = dot(h.normal, Q.vertices[0]);
        for (const auto& q : Q.vertices)
            if (dot(h.normal, q) != val) return e;
        eqs.push_back({h.normal, h.offset - val});
    }
    Polytope R = polytope_from_halfspaces(P.ambient_dim, hs, eqs);
    if (R.empty()) return e;
    e.exact = minkowski_sum(R, Q) == P;
    e.result = std::move(R);
    return e;
}

Polytope translate(const Polytope& P, const RatVec& t) {
    std::vector<RatVec> pts;
    for (const auto& v : P.vertices) pts.push_back(add(v, t));
    return convex_hull(pts, P.ambient_dim);
}

Polytope dilate(const Polytope& P, const Rat& k) {
    std::vector<RatVec> pts;
    for (const auto& v : P.vertices) pts.push_back(scale(v, k));
    return convex_hull(pts, P.ambient_dim);
}

Polytope linear_image(const Polytope& P, const IntMatrix& U) {
    RatMatrix R = to_rat(U);
    std::vector<RatVec> pts;
    for (const auto& v : P.vertices) pts.push_back(R * v);
    return convex_hull(pts, U.rows());
}

std::vector<std::vector<std::size_t>> proper_faces(const Polytope& P) {
    std::vector<std::vector<std::size_t>> facets;
    for (const auto& f : P.facets) {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < P.vertices.size(); ++i)
            if (dot(f.normal, P.vertices[i]) == f.offset) s.push_back(i);
        facets.push_back(s);
    }
    std::set<std::vector<std::size_t>> faces(facets.begin(), facets.end());
    std::vector<std::vector<std::size_t>> frontier(facets.begin(), facets.end());
    while (!frontier.empty()) {
        std::vector<std::vector<std::size_t>> next;
        for (const auto& a : frontier)
            for (const auto& f : facets) {
                std::vector<std::size_t> c;
                std::set_intersection(a.begin(), a.end(), f.begin(), f.end(), std::back_inserter(c));
                if (c.empty() || faces.count(c)) continue;
                faces.insert(c);
                next.push_back(c);
            }
        frontier = std::move(next);
    }
    return {faces.begin(), faces.end()};
}

AffineLatticeChart affine_lattice_chart(const Polytope& P, const RatVec& base) {
    AffineLatticeChart ch;
    ch.base = base;
    std::vector<IntVec> normals;
    for (const auto& e : P.equations) normals.push_back(e.normal);
    ch.basis = kernel_basis(IntMatrix::from_rows(normals, P.ambient_dim));
    RatMatrix B = to_rat(IntMatrix::from_cols(ch.basis, P.ambient_dim));
    std::vector<RatVec> pts;
    for (const auto& v : P.vertices) {
        auto c = solve_linear(B, sub(v, base));
        if (!c) throw DomainError("not_in_affine_hull", "base point is not in the affine hull");
        pts.push_back(*c);
    }
    ch.polytope = convex_hull(pts, ch.basis.size());
    return ch;
}

Cone cone_over(const Polytope& P, const Int& height) {
    if (height <= 0) throw DomainError("bad_height", "cone height must be positive");
    std::vector<IntVec> gens;
    for (const auto& v : P.vertices) {
        RatVec h(v);
        h.push_back(Rat(height));
        gens.push_back(primitive(h));
    }
    return cone_from_generators(P.ambient_dim + 1, gens);
}

// ---------------------------------------------------------------------------

std::vector<IntVec> Fan::cone_rays(std::size_t i) const {
    std::vector<IntVec> out;
    for (auto r : max_cones.at(i)) out.push_back(rays.at(r));
    return out;
}

Cone Fan::cone(std::size_t i) const {
    std::vector<IntVec> rs;
    for (const auto& r : cone_rays(i)) rs.push_back(primitive(r));
    return cone_from_generators(dim, rs);
}

Fan canonical(const Fan& F) {
    std::vector<IntVec> prim;
    for (const auto& r : F.rays) prim.push_back(primitive(r));
    std::vector<IntVec> sorted(prim);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    auto index_of = [&](const IntVec& v) {
        return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), v) - sorted.begin());
    };
    Fan G;
    G.dim = F.dim;
    G.rays = sorted;
    std::set<std::vector<std::size_t>> cones;
    for (const auto& c : F.max_cones) {
        std::vector<std::size_t> s;
        for (auto i : c) s.push_back(index_of(prim[i]));
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        cones.insert(s);
    }
    G.max_cones.assign(cones.begin(), cones.end());
    return G;
}

bool fans_equal(const Fan& F, const Fan& G) {
    if (F.dim != G.dim) return false;
    auto key = [](const Fan& X) {
        Fan c = canonical(X);
        std::set<std::vector<IntVec>> s;
        for (std::size_t i = 0; i < c.max_cones.size(); ++i) s.insert(c.cone_rays(i));
        return s;
    };
    return key(F) == key(G);
}

Fan spanning_fan(const Polytope& P) {
    if (!origin_in_interior(P)) throw DomainError("origin_not_interior", "spanning fan needs 0 in the interior");
    Fan F;
    F.dim = P.ambient_dim;
    for (const auto& v : P.vertices) F.rays.push_back(primitive(v));
    for (const auto& f : P.facets) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < P.vertices.size(); ++i)
            if (dot(f.normal, P.vertices[i]) == f.offset) c.push_back(i);
        F.max_cones.push_back(c);
    }
    return canonical(F);
}

Fan normal_fan(const Polytope& P) {
    if (!P.full_dimensional()) throw DomainError("not_full_dimensional", "normal fan needs a full-dimensional polytope");
    Fan F;
    F.dim = P.ambient_dim;
    for (const auto& f : P.facets) F.rays.push_back(f.normal);
    for (const auto& v : P.vertices) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < P.facets.size(); ++i)
            if (dot(P.facets[i].normal, v) == P.facets[i].offset) c.push_back(i);
        F.max_cones.push_back(c);
    }
    return canonical(F);
}

Fan restrict_fan(const Fan& F, const IntMatrix& B) {
    if (B.rows() != F.dim) throw DomainError("dimension_mismatch", "sublattice basis has wrong row count");
    if (rank(B) != B.cols()) throw DomainError("dependent_basis", "sublattice basis columns are dependent");
    std::vector<Cone> pieces;
    for (std::size_t i = 0; i < F.max_cones.size(); ++i) {
        Cone c = pullback(F.cone(i), B);
        if (c.rays.empty() && c.lineality.empty()) continue;
        pieces.push_back(c);
    }
    Fan G;
    G.dim = B.cols();
    std::set<IntVec> rayset;
    for (const auto& c : pieces) rayset.insert(c.rays.begin(), c.rays.end());
    G.rays.assign(rayset.begin(), rayset.end());
    std::set<std::vector<std::size_t>> cones;
    for (const auto& c : pieces) {
        std::vector<std::size_t> s;
        for (const auto& r : c.rays)
            s.push_back(static_cast<std::size_t>(std::lower_bound(G.rays.begin(), G.rays.end(), r) - G.rays.begin()));
        std::sort(s.begin(), s.end());
        cones.insert(s);
    }
    for (const auto& s : cones) {
        bool dominated = false;
        for (const auto& t : cones)
            if (t != s && std::includes(t.begin(), t.end(), s.begin(), s.end())) dominated = true;
        if (!dominated) G.max_cones.push_back(s);
    }
    return G;
}

bool is_simplicial_cone(const Fan& F, std::size_t i) {
    auto rs = F.cone_rays(i);
    return rank(IntMatrix::from_rows(rs, F.dim)) == rs.size();
}

bool is_smooth_cone(const Fan& F, std::size_t i) {
    if (!is_simplicial_cone(F, i)) return false;
    std::vector<IntVec> rs;
    for (const auto& r : F.cone_rays(i)) rs.push_back(primitive(r));
    return lattice_basis(rs, F.dim) == saturate(rs, F.dim);
}

namespace {

// Codimension-one faces of a maximal cone, as ray index sets.
std::vector<std::vector<std::size_t>> cone_facets(const Fan& F, std::size_t i) {
    Cone c = F.cone(i);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : c.facets) {
        std::vector<std::size_t> s;
        for (auto r : F.max_cones[i])
            if (dot(f, F.rays[r]) == 0) s.push_back(r);
        out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<std::pair<std::size_t, std::size_t>> adjacent_cones(const Fan& F) {
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners;
    for (std::size_t i = 0; i < F.max_cones.size(); ++i)
        for (const auto& f : cone_facets(F, i)) owners[f].push_back(i);
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (const auto& [f, o] : owners)
        if (o.size() == 2) out.emplace_back(o[0], o[1]);
    return out;
}

bool is_complete(const Fan& F) {
    if (F.max_cones.empty()) return F.dim == 0;
    std::map<std::vector<std::size_t>, int> count;
    for (std::size_t i = 0; i < F.max_cones.size(); ++i) {
        if (rank(IntMatrix::from_rows(F.cone_rays(i), F.dim)) != F.dim) return false;
        for (const auto& f : cone_facets(F, i)) ++count[f];
    }
    return std::all_of(count.begin(), count.end(), [](const auto& kv) { return kv.second == 2; });
}

namespace {

// Greedy choice of `n` linearly independent vectors.
std::vector<std::size_t> independent_subset(const std::vector<RatVec>& vs, std::size_t n) {
    std::vector<std::size_t> idx;
    RatMatrix acc(0, n);
    std::vector<RatVec> chosen;
    for (std::size_t i = 0; i < vs.size() && idx.size() < n; ++i) {
        chosen.push_back(vs[i]);
        if (rank(RatMatrix::from_rows(chosen, n)) == chosen.size())
            idx.push_back(i);
        else
            chosen.pop_back();
    }
    return idx;
}

// Enumerate injective assignments of `basis` to candidate targets and test
// each induced linear map with `accept`.
std::optional<IntMatrix> search_linear_maps(const std::vector<RatVec>& src, const std::vector<std::size_t>& basis,
                                            const std::vector<RatVec>& dst, const std::vector<int>& src_sig,
                                            const std::vector<int>& dst_sig, std::size_t n,
                                            const std::function<bool(const IntMatrix&)>& accept) {
    RatMatrix S(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) S(i, j) = src[basis[j]][i];
    auto Sinv = rational_inverse(S);
    if (!Sinv) return std::nullopt;
    std::vector<std::size_t> pick(n);
    std::vector<bool> used(dst.size(), false);
    std::optional<IntMatrix> found;
    std::function<void(std::size_t)> rec = [&](std::size_t k) {
        if (found) return;
        if (k == n) {
            RatMatrix T(n, n);
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t i = 0; i < n; ++i) T(i, j) = dst[pick[j]][i];
            RatMatrix U = T * *Sinv;
            IntMatrix Ui(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    if (U(i, j).get_den() != 1) return;
                    Ui(i, j) = U(i, j).get_num();
                }
            Int d = determinant(Ui);
            if (d != 1 && d != -1) return;
            if (accept(Ui)) found = Ui;
            return;
        }
        for (std::size_t t = 0; t < dst.size(); ++t) {
            if (used[t] || dst_sig[t] != src_sig[basis[k]]) continue;
            used[t] = true;
            pick[k] = t;
            rec(k + 1);
            used[t] = false;
        }
    };
    rec(0);
    return found;
}

}  // namespace

std::optional<IntMatrix> lattice_isomorphic(const Polytope& P, const Polytope& Q) {
    if (P.ambient_dim != Q.ambient_dim || P.vertices.size() != Q.vertices.size() ||
        P.facets.size() != Q.facets.size())
        return std::nullopt;
    if (!P.full_dimensional() || !Q.full_dimensional()) return std::nullopt;
    const std::size_t n = P.ambient_dim;
    auto sig = [](const Polytope& X) {
        std::vector<int> s;
        for (const auto& v : X.vertices) {
            int c = 0;
            for (const auto& f : X.facets) c += dot(f.normal, v) == f.offset;
            s.push_back(c);
        }
        return s;
    };
    auto basis = independent_subset(P.vertices, n);
    if (basis.size() != n) return std::nullopt;
    return search_linear_maps(P.vertices, basis, Q.vertices, sig(P), sig(Q), n, [&](const IntMatrix& U) {
        std::vector<RatVec> img;
        RatMatrix R = to_rat(U);
        for (const auto& v : P.vertices) img.push_back(R * v);
        std::sort(img.begin(), img.end());
        return img == Q.vertices;
    });
}

std::optional<IntMatrix> fans_isomorphic(const Fan& F0, const Fan& G0) {
    Fan F = canonical(F0), G = canonical(G0);
    if (F.dim != G.dim || F.rays.size() != G.rays.size() || F.max_cones.size() != G.max_cones.size())
        return std::nullopt;
    const std::size_t n = F.dim;
    std::vector<RatVec> fr, gr;
    for (const auto& r : F.rays) fr.push_back(to_rat(r));
    for (const auto& r : G.rays) gr.push_back(to_rat(r));
    auto sig = [](const Fan& X) {
        std::vector<int> s(X.rays.size(), 0);
        for (const auto& c : X.max_cones)
            for (auto i : c) ++s[i];
        return s;
    };
    auto basis = independent_subset(fr, n);
    if (basis.size() != n) return std::nullopt;
    std::set<std::set<IntVec>> gcones;
    for (std::size_t i = 0; i < G.max_cones.size(); ++i) {
        auto rs = G.cone_rays(i);
        gcones.insert(std::set<IntVec>(rs.begin(), rs.end()));
    }
    return search_linear_maps(fr, basis, gr, sig(F), sig(G), n, [&](const IntMatrix& U) {
        std::set<std::set<IntVec>> img;
        for (std::size_t i = 0; i < F.max_cones.size(); ++i) {
            std::set<IntVec> s;
            for (const auto& r : F.cone_rays(i)) s.insert(U * r);
            img.insert(s);
        }
        return img == gcones;
    });
}

}  // namespace tmir
