#include "toricmirror/inversion.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tmir {

namespace {

StrutSplit require_split(const Scaffolding& S) {
    auto sp = split_struts(S);
    if (!sp) throw DomainError("invalid_scaffolding", "no struts (0, e_i) form a basis of N_U");
    return *sp;
}

// rho_s in Ntilde for every strut, indexed like S.struts.
std::vector<IntVec> strut_rays(const Scaffolding& S, const StrutSplit& sp) {
    std::vector<IntVec> out(S.struts.size());
    for (std::size_t s = 0; s < S.struts.size(); ++s) {
        IntVec v = neg(S.struts[s].coeffs);
        IntVec c = S.u == 0 ? IntVec{} : sp.chi_inverse * S.struts[s].chi;
        v.insert(v.end(), c.begin(), c.end());
        out[s] = v;
    }
    return out;
}

std::vector<IntVec> shape_divisor_rays(const Scaffolding& S) {
    const std::size_t z = S.shape.rays.size();
    std::vector<IntVec> out;
    for (std::size_t j = 0; j < z; ++j) out.push_back(unit_vector(z + S.u, j));
    return out;
}

// Facets of P containing all the given vertices.
std::vector<Halfspace> supporting_facets(const Polytope& P, const std::vector<std::size_t>& face) {
    std::vector<Halfspace> out;
    for (const auto& f : P.facets) {
        bool all = true;
        for (auto i : face) all = all && dot(f.normal, P.vertices[i]) == f.offset;
        if (all) out.push_back(f);
    }
    return out;
}

bool in_face(const Polytope& P, const std::vector<Halfspace>& sup, const RatVec& x) {
    if (!P.contains(x)) return false;
    for (const auto& f : sup)
        if (dot(f.normal, x) != f.offset) return false;
    return true;
}

}  // namespace

std::vector<IntVec> ambient_strut_rays(const Scaffolding& S) { return strut_rays(S, require_split(S)); }

Binomial split_by_sign(const IntVec& v) {
    Binomial b{IntVec(v.size(), Int(0)), IntVec(v.size(), Int(0))};
    for (std::size_t i = 0; i < v.size(); ++i) (v[i] > 0 ? b.positive[i] : b.negative[i]) = abs(v[i]);
    return b;
}

InversionResult laurent_inversion(const Scaffolding& S, const std::optional<IntVec>& omega) {
    auto rep = scaffolding_report(S).report;
    if (!rep.ok()) {
        std::string why;
        for (const auto& c : rep.checks)
            if (!c.ok) why += (why.empty() ? "" : "; ") + c.name;
        throw DomainError("invalid_scaffolding", why);
    }
    StrutSplit sp = require_split(S);
    const std::size_t r = sp.divisor_struts.size(), u = S.u, z = S.shape.rays.size(), R = r + u + z;
    InversionResult out;
    out.row_struts = sp.divisor_struts;
    out.basis_struts = sp.basis_struts;
    out.matrix = IntMatrix(r, R);
    for (std::size_t i = 0; i < r; ++i) {
        const auto& st = S.struts[sp.divisor_struts[i]];
        out.matrix(i, i) = 1;
        IntVec c = u == 0 ? IntVec{} : sp.chi_inverse * st.chi;
        for (std::size_t k = 0; k < u; ++k) out.matrix(i, r + k) = -c[k];
        for (std::size_t j = 0; j < z; ++j) out.matrix(i, r + u + j) = st.coeffs[j];
    }
    if (omega) {
        if (omega->size() != r) throw DomainError("dimension_mismatch", "omega must have length r");
        out.omega = *omega;
    } else {
        out.omega = IntVec(r, Int(0));
        for (std::size_t j = 0; j < r + u; ++j)
            for (std::size_t i = 0; i < r; ++i) out.omega[i] += out.matrix(i, j);
    }
    out.git.r = r;
    out.git.omega = out.omega;
    for (std::size_t j = 0; j < R; ++j) out.git.characters.push_back(out.matrix.col(j));

    auto srays = strut_rays(S, sp);
    for (auto s : sp.divisor_struts) out.rays.push_back(srays[s]);
    for (auto s : sp.basis_struts) out.rays.push_back(srays[s]);
    for (const auto& e : shape_divisor_rays(S)) out.rays.push_back(e);

    if (auto groups = product_factors(S.shape)) {
        ConvexPartition p;
        for (std::size_t i = 0; i < r; ++i) p.B.push_back(i);
        for (std::size_t k = 0; k < u; ++k) p.U.push_back(r + k);
        for (const auto& g : *groups) {
            std::vector<std::size_t> cols;
            for (auto j : g) cols.push_back(r + u + j);
            p.S.push_back(cols);
            p.choices.push_back(cols.back());
        }
        out.recovered_partition = p;
    }
    return out;
}

IntMatrix embedding_lattice_map(const Scaffolding& S) {
    StrutSplit sp = require_split(S);
    const std::size_t z = S.shape.rays.size(), db = S.dim_bar(), u = S.u;
    IntMatrix T(z + u, db + u);
    for (std::size_t j = 0; j < z; ++j)
        for (std::size_t k = 0; k < db; ++k) T(j, k) = S.shape.rays[j][k];
    for (std::size_t a = 0; a < u; ++a)
        for (std::size_t b = 0; b < u; ++b) T(z + a, db + b) = sp.chi_inverse(a, b);
    return T;
}

BinomialEquations binomial_equations(const Scaffolding& S) {
    BinomialEquations out;
    const std::size_t z = S.shape.rays.size();
    if (z == 0) return out;
    IntMatrix A = IntMatrix::from_cols(S.shape.rays, S.dim_bar());
    out.relations = kernel_basis(A);

    std::optional<StrutSplit> sp = split_struts(S);
    std::vector<IntVec> cox;
    if (sp) {
        auto srays = strut_rays(S, *sp);
        for (auto s : sp->divisor_struts) cox.push_back(srays[s]);
        for (auto s : sp->basis_struts) cox.push_back(srays[s]);
        for (const auto& e : shape_divisor_rays(S)) cox.push_back(e);
    }
    for (const auto& w : out.relations) {
        out.torus.push_back(split_by_sign(w));
        if (!sp) continue;
        IntVec wt(w);
        wt.resize(z + S.u, Int(0));
        IntVec ex;
        for (const auto& rho : cox) ex.push_back(dot(wt, rho));
        out.homogeneous.push_back(split_by_sign(ex));
    }

    std::set<IntVec> seen;
    for (auto [a, b] : adjacent_cones(S.shape)) {
        std::set<std::size_t> both(S.shape.max_cones[a].begin(), S.shape.max_cones[a].end());
        both.insert(S.shape.max_cones[b].begin(), S.shape.max_cones[b].end());
        if (both.size() != S.dim_bar() + 1) continue;  // non-simplicial walls carry no unique relation
        std::vector<std::size_t> idx(both.begin(), both.end());
        std::vector<IntVec> cols;
        for (auto j : idx) cols.push_back(S.shape.rays[j]);
        auto ker = kernel_basis(IntMatrix::from_cols(cols, S.dim_bar()));
        if (ker.size() != 1) continue;
        IntVec w(z, Int(0));
        for (std::size_t t = 0; t < idx.size(); ++t) w[idx[t]] = ker[0][t];
        // Orient so the rays off the shared wall enter positively.
        for (auto j : S.shape.max_cones[a])
            if (!std::binary_search(S.shape.max_cones[b].begin(), S.shape.max_cones[b].end(), j) && w[j] < 0)
                w = neg(w);
        if (seen.insert(w).second) {
            out.wall_relations.push_back(w);
            out.wall_torus.push_back(split_by_sign(w));
        }
    }
    return out;
}

Polytope q_s_polytope(const Scaffolding& S) {
    StrutSplit sp = require_split(S);
    const std::size_t z = S.shape.rays.size(), dim = z + S.u;
    std::vector<Halfspace> hs;
    for (std::size_t j = 0; j < z; ++j) hs.push_back({unit_vector(dim, j), Rat(0)});
    for (const auto& rho : strut_rays(S, sp)) hs.push_back({rho, Rat(-1)});
    Polytope Q = polytope_from_halfspaces(dim, hs);
    if (Q.empty()) throw DomainError("empty", "Q_S is empty");
    return Q;
}

Report verify_embedding(const Scaffolding& S) {
    Report rep;
    StrutSplit sp = require_split(S);
    Polytope Q = q_s_polytope(S);
    Fan sigma = normal_fan(Q);

    auto srays = strut_rays(S, sp);
    std::set<IntVec> expected, got(sigma.rays.begin(), sigma.rays.end());
    for (const auto& e : shape_divisor_rays(S)) expected.insert(e);
    std::string missing;
    for (std::size_t s = 0; s < srays.size(); ++s) {
        IntVec p = primitive(srays[s]);
        expected.insert(p);
        if (!got.count(p)) missing += (missing.empty() ? "strut " : ", strut ") + std::to_string(s + 1);
    }
    rep.add("all_rays", expected == got, missing.empty() ? (expected == got ? "" : "extra rays") : missing + " absent");

    IntMatrix theta = embedding_lattice_map(S);
    bool restr = false;
    std::string rdetail;
    try {
        restr = fans_equal(restrict_fan(sigma, theta), spanning_fan(S.target));
    } catch (const DomainError& e) {
        rdetail = e.kind() + ": " + e.what();
    }
    rep.add("restriction", restr, rdetail);

    // V(S,E) is read as the set of cells C_u = P* cap (sigma_u x M_U) meeting
    // the relative interior of the dual face E*. Reading it through the strut
    // vertices u(s) alone over-counts when a nef strut collapses several fixed
    // points onto one vertex.
    const std::size_t ncones = S.dim_bar() == 0 ? 1 : S.shape.max_cones.size();
    const Polytope Pstar = dual_polytope(S.target);
    std::vector<std::vector<Halfspace>> cell_bounds(ncones);
    if (S.dim_bar() > 0)
        for (std::size_t c = 0; c < ncones; ++c)
            for (const auto& a : S.shape.cone(c).facets) {
                IntVec n(a);
                n.resize(S.dim(), Int(0));
                cell_bounds[c].push_back({n, Rat(0)});
            }
    std::vector<Polytope> strut_polys;
    for (std::size_t s = 0; s < S.struts.size(); ++s) strut_polys.push_back(strut_polytope(S, s));

    bool good = true;
    std::string gdetail;
    for (const auto& face : proper_faces(S.target)) {
        auto sup = supporting_facets(S.target, face);
        std::vector<Hyperplane> dual_face;
        for (auto i : face) dual_face.push_back({to_int(S.target.vertices[i]), Rat(-1)});
        const Polytope Estar = polytope_from_halfspaces(S.dim(), Pstar.facets, dual_face);
        std::set<std::size_t> VSE;
        for (std::size_t c = 0; c < ncones; ++c) {
            std::vector<Halfspace> hs = Pstar.facets;
            hs.insert(hs.end(), cell_bounds[c].begin(), cell_bounds[c].end());
            Polytope X = polytope_from_halfspaces(S.dim(), hs, dual_face);
            if (X.empty()) continue;
            // The barycentre lies in relint X, which meets relint E* iff X does.
            RatVec bary(S.dim(), Rat(0));
            for (const auto& v : X.vertices) bary = add(bary, v);
            bary = scale(bary, ratio(Int(1), Int(static_cast<unsigned long>(X.vertices.size()))));
            if (Estar.contains_in_relative_interior(bary)) VSE.insert(c);
        }
        std::vector<IntVec> gens;
        for (std::size_t s = 0; s < S.struts.size(); ++s) {
            bool meets = false;
            for (const auto& v : strut_polys[s].vertices) meets = meets || in_face(S.target, sup, v);
            if (meets) gens.push_back(srays[s]);
        }
        const std::size_t z = S.shape.rays.size();
        for (std::size_t j = 0; j < z; ++j) {
            bool misses = false;
            for (auto c : VSE)
                if (!std::binary_search(S.shape.max_cones[c].begin(), S.shape.max_cones[c].end(), j)) misses = true;
            if (misses) gens.push_back(unit_vector(z + S.u, j));
        }
        Cone CE = cone_from_generators(z + S.u, gens);
        Cone lhs = pullback(CE, theta);
        std::vector<IntVec> ev;
        for (auto i : face) ev.push_back(primitive(S.target.vertices[i]));
        Cone rhs = cone_from_generators(S.dim(), ev);
        if (!(lhs == rhs)) {
            good = false;
            std::vector<IntVec> verts;
            for (auto i : face) verts.push_back(to_int(S.target.vertices[i]));
            gdetail = "face with vertices";
            for (const auto& v : verts) gdetail += " " + to_string(v);
            break;
        }
    }
    rep.add("good_cones", good, gdetail);
    return rep;
}

CIData ci_data(const Scaffolding& S) {
    auto groups = product_factors(S.shape);
    if (!groups) throw DomainError("unsupported_shape", "shape is not a product of projective spaces");
    StrutSplit sp = require_split(S);
    CIData out;
    out.groups = *groups;
    const std::size_t z = S.shape.rays.size(), dim = z + S.u;
    for (const auto& g : out.groups) {
        IntVec f(dim, Int(0));
        for (auto j : g) f[j] = 1;
        out.functionals.push_back(f);
    }
    std::vector<IntVec> common =
        out.functionals.empty() ? lattice_basis([&] {
            std::vector<IntVec> id;
            for (std::size_t i = 0; i < dim; ++i) id.push_back(unit_vector(dim, i));
            return id;
        }(), dim)
                                : kernel_basis(IntMatrix::from_rows(out.functionals));
    IntMatrix theta = embedding_lattice_map(S);
    out.lattice_equal = common == lattice_basis(theta.col_list(), dim);
    out.degrees = IntMatrix(sp.divisor_struts.size(), out.groups.size());
    for (std::size_t b = 0; b < sp.divisor_struts.size(); ++b)
        for (std::size_t i = 0; i < out.groups.size(); ++i) {
            for (auto j : out.groups[i]) out.degrees(b, i) += S.struts[sp.divisor_struts[b]].coeffs[j];
            if (out.degrees(b, i) < 0)
                throw DomainError("negative_degree", "l_{" + std::to_string(b + 1) + "," + std::to_string(i + 1) +
                                                         "} = " + out.degrees(b, i).get_str());
        }
    return out;
}

namespace {

// Fine triangulation of a lattice point set in a hyperplane slice via a
// strictly convex lift; returns index triples of lower faces.
std::vector<std::vector<std::size_t>> lifted_triangulation(const std::vector<IntVec>& pts, std::size_t dim) {
    std::vector<IntVec> lifted;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        IntVec q(pts[i]);
        Int h = 0;
        for (const auto& x : q) h += x * x;
        q.push_back(h * Int(1 << 12) + Int(static_cast<long>((i * i) % 97)));
        lifted.push_back(q);
    }
    Polytope L = convex_hull(lifted, dim + 1);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& f : L.facets) {
        if (f.normal[dim] <= 0) continue;
        std::vector<std::size_t> cell;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (dot(f.normal, lifted[i]) == f.offset) cell.push_back(i);
        out.push_back(cell);
    }
    return out;
}

}  // namespace

Scaffolding anticanonical_scaffolding(const Polytope& P) {
    if (!is_fano(P)) throw DomainError("not_reflexive", "polytope is not Fano");
    Polytope Pd = dual_polytope(P);
    if (!Pd.is_lattice()) throw DomainError("not_reflexive", "dual polytope has non-integral vertices");
    const std::size_t d = P.ambient_dim;
    if (d > 3) throw DomainError("unsupported_dimension", "crepant refinement implemented up to dimension 3");
    Scaffolding S;
    S.u = 0;
    S.target = P;
    Fan F;
    F.dim = d;
    auto bpts = boundary_integral_points(Pd);
    std::sort(bpts.begin(), bpts.end());
    F.rays = bpts;
    auto index_of = [&](const IntVec& v) {
        return static_cast<std::size_t>(std::lower_bound(F.rays.begin(), F.rays.end(), v) - F.rays.begin());
    };
    std::set<std::vector<std::size_t>> cones;
    for (const auto& f : Pd.facets) {
        std::vector<IntVec> on;
        for (const auto& p : bpts)
            if (dot(f.normal, p) == f.offset) on.push_back(p);
        if (d == 1) {
            cones.insert({index_of(on[0])});
        } else if (d == 2) {
            // Order along the edge and take consecutive pairs.
            IntVec dir = sub(on.back(), on.front());
            std::sort(on.begin(), on.end(), [&](const IntVec& a, const IntVec& b) { return dot(dir, a) < dot(dir, b); });
            for (std::size_t i = 0; i + 1 < on.size(); ++i) {
                std::vector<std::size_t> c{index_of(on[i]), index_of(on[i + 1])};
                std::sort(c.begin(), c.end());
                cones.insert(c);
            }
        } else {
            for (const auto& cell : lifted_triangulation(on, d)) {
                if (cell.size() != d)
                    throw DomainError("non_simplicial", "lifted triangulation produced a non-simplicial cell");
                std::vector<std::size_t> c;
                for (auto i : cell) c.push_back(index_of(on[i]));
                std::sort(c.begin(), c.end());
                cones.insert(c);
            }
        }
    }
    F.max_cones.assign(cones.begin(), cones.end());
    S.shape = F;
    S.struts.push_back({IntVec(F.rays.size(), Int(1)), IntVec{}});
    return S;
}

}  // namespace tmir
