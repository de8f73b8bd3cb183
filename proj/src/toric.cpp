#include "toricmirror/toric.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace tmir {

IntMatrix GitData::weight_matrix() const { return IntMatrix::from_cols(characters, r); }

void check_git_data(const GitData& gd) {
    if (gd.r == 0) throw DomainError("bad_git_data", "torus rank must be positive");
    if (gd.omega.size() != gd.r) throw DomainError("bad_git_data", "omega has wrong length");
    for (const auto& d : gd.characters)
        if (d.size() != gd.r) throw DomainError("bad_git_data", "character of wrong length");
    if (gd.R() < gd.r) throw DomainError("bad_git_data", "fewer characters than the torus rank");
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
    std::vector<std::size_t> idx(k);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
        if (depth == k) {
            f(idx);
            return;
        }
        for (std::size_t i = start; i + (k - depth) <= n; ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

std::vector<IntVec> pick(const std::vector<IntVec>& v, const std::vector<std::size_t>& idx) {
    std::vector<IntVec> out;
    for (auto i : idx) out.push_back(v.at(i));
    return out;
}

std::vector<RatVec> pick_rat(const std::vector<IntVec>& v, const std::vector<std::size_t>& idx) {
    std::vector<RatVec> out;
    for (auto i : idx) out.push_back(to_rat(v.at(i)));
    return out;
}

}  // namespace

bool covers(const GitData& gd, const std::vector<std::size_t>& I) {
    check_git_data(gd);
    return positive_combination(pick_rat(gd.characters, I), to_rat(gd.omega), true).has_value();
}

std::vector<Wall> wall_hyperplanes(const GitData& gd) {
    check_git_data(gd);
    std::vector<Wall> walls;
    if (gd.r == 1) return walls;
    std::set<IntVec> seen;
    for_each_subset(gd.R(), gd.r - 1, [&](const std::vector<std::size_t>& I) {
        auto sub = pick(gd.characters, I);
        if (rank(IntMatrix::from_rows(sub, gd.r)) != gd.r - 1) return;
        auto k = kernel_basis(IntMatrix::from_rows(sub, gd.r));
        IntVec n = primitive(k.at(0));
        // fix the sign: first non-zero entry positive
        for (const auto& x : n) {
            if (x == 0) continue;
            if (x < 0) n = neg(n);
            break;
        }
        if (!seen.insert(n).second) return;
        Wall w{n, {}};
        for (std::size_t i = 0; i < gd.R(); ++i)
            if (dot(n, gd.characters[i]) == 0) w.characters.push_back(i);
        walls.push_back(w);
    });
    return walls;
}

bool in_chamber_interior(const GitData& gd, const IntVec& omega) {
    check_git_data(gd);
    Cone big = cone_from_generators(gd.r, gd.characters);
    if (big.dim() != gd.r || !big.contains_in_relative_interior(to_rat(omega))) return false;
    for (const auto& w : wall_hyperplanes(gd)) {
        if (dot(w.normal, omega) != 0) continue;
        if (positive_combination(pick_rat(gd.characters, w.characters), to_rat(omega), false)) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> minimal_covering_sets(const GitData& gd) {
    if (!in_chamber_interior(gd, gd.omega))
        throw DomainError("omega_on_wall", "omega " + to_string(gd.omega) + " is not in the interior of a chamber");
    std::vector<std::vector<std::size_t>> out;
    for_each_subset(gd.R(), gd.r, [&](const std::vector<std::size_t>& I) {
        RatMatrix B = to_rat(IntMatrix::from_cols(pick(gd.characters, I), gd.r));
        auto lam = solve_linear(B, to_rat(gd.omega));
        if (rank(B) != gd.r || !lam) return;
        for (const auto& x : *lam)
            if (x <= 0) return;
        out.push_back(I);
    });
    return out;
}

Cone chamber_of(const GitData& gd, const IntVec& omega) {
    Cone acc = cone_from_generators(gd.r, gd.characters);
    for_each_subset(gd.R(), gd.r, [&](const std::vector<std::size_t>& I) {
        auto sub = pick(gd.characters, I);
        if (rank(IntMatrix::from_rows(sub, gd.r)) != gd.r) return;
        Cone c = cone_from_generators(gd.r, sub);
        if (c.contains(omega)) acc = intersect(acc, c);
    });
    return acc;
}

std::vector<std::string> cone_types(const Fan& fan) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < fan.max_cones.size(); ++i) {
        if (is_smooth_cone(fan, i))
            out.push_back("smooth");
        else if (is_simplicial_cone(fan, i))
            out.push_back("simplicial");
        else
            out.push_back("neither");
    }
    return out;
}

StackyFan git_to_stacky_fan(const GitData& gd) {
    check_git_data(gd);
    IntMatrix D = gd.weight_matrix();
    if (lattice_basis(gd.characters, gd.r) != IntMatrix::identity(gd.r).row_list())
        throw DomainError("characters_do_not_span", "the characters do not generate the character lattice");
    auto K = kernel_basis(D);  // basis of M = ker D
    StackyFan sf;
    sf.fan.dim = K.size();
    for (std::size_t i = 0; i < gd.R(); ++i) {
        IntVec rho(K.size());
        for (std::size_t k = 0; k < K.size(); ++k) rho[k] = K[k][i];
        sf.fan.rays.push_back(rho);
    }
    for (const auto& I : minimal_covering_sets(gd)) {
        std::vector<std::size_t> c;
        for (std::size_t i = 0; i < gd.R(); ++i)
            if (!std::binary_search(I.begin(), I.end(), i)) c.push_back(i);
        sf.fan.max_cones.push_back(c);
    }
    std::sort(sf.fan.max_cones.begin(), sf.fan.max_cones.end());
    sf.cone_types = cone_types(sf.fan);
    return sf;
}

GitData stacky_fan_to_git(const Fan& fan) {
    const std::size_t R = fan.rays.size();
    auto K = kernel_basis(IntMatrix::from_cols(fan.rays, fan.dim));
    if (rank(IntMatrix::from_cols(fan.rays, fan.dim)) != fan.dim)
        throw DomainError("rays_do_not_span", "fan rays do not span the lattice rationally");
    GitData gd;
    gd.r = K.size();
    for (std::size_t i = 0; i < R; ++i) {
        IntVec d(gd.r);
        for (std::size_t k = 0; k < gd.r; ++k) d[k] = K[k][i];
        gd.characters.push_back(d);
    }
    if (gd.r == 0) throw DomainError("no_torus", "fan has no relations; the quotient torus is trivial");
    Cone acc = cone_from_generators(gd.r, gd.characters);
    for (const auto& c : fan.max_cones) {
        std::vector<IntVec> comp;
        for (std::size_t i = 0; i < R; ++i)
            if (!std::binary_search(c.begin(), c.end(), i)) comp.push_back(gd.characters[i]);
        acc = intersect(acc, cone_from_generators(gd.r, comp));
    }
    if (acc.dim() != gd.r || !acc.pointed())
        throw DomainError("not_projective", "the nef cone has empty interior; no stability condition exists");
    gd.omega = IntVec(gd.r, Int(0));
    for (const auto& ray : acc.rays) gd.omega = add(gd.omega, ray);
    return gd;
}

SecondaryFan secondary_fan(const GitData& gd) {
    check_git_data(gd);
    SecondaryFan out;
    out.walls = wall_hyperplanes(gd);
    Cone big = cone_from_generators(gd.r, gd.characters);
    std::vector<Cone> cells{big};
    for (const auto& w : out.walls) {
        std::vector<Cone> next;
        for (const auto& c : cells) {
            Cone plus = intersect(c, cone_from_inequalities(gd.r, {w.normal}));
            Cone minus = intersect(c, cone_from_inequalities(gd.r, {neg(w.normal)}));
            if (plus.dim() == gd.r && minus.dim() == gd.r) {
                next.push_back(plus);
                next.push_back(minus);
            } else {
                next.push_back(c);
            }
        }
        cells = std::move(next);
    }
    std::set<std::vector<IntVec>> chambers;
    for (const auto& c : cells) {
        IntVec p(gd.r, Int(0));
        for (const auto& ray : c.rays) p = add(p, ray);
        chambers.insert(chamber_of(gd, p).rays);
    }
    std::set<IntVec> rays;
    for (const auto& ch : chambers) rays.insert(ch.begin(), ch.end());
    out.chambers.dim = gd.r;
    out.chambers.rays.assign(rays.begin(), rays.end());
    for (const auto& ch : chambers) {
        std::vector<std::size_t> idx;
        for (const auto& ray : ch)
            idx.push_back(static_cast<std::size_t>(std::lower_bound(out.chambers.rays.begin(), out.chambers.rays.end(), ray) -
                                                   out.chambers.rays.begin()));
        std::sort(idx.begin(), idx.end());
        out.chambers.max_cones.push_back(idx);
    }
    return out;
}

// ---------------------------------------------------------------------------

PLFunction pl_function(const ToricDivisor& D) {
    const Fan& F = D.fan;
    if (D.coeffs.size() != F.rays.size()) throw DomainError("dimension_mismatch", "divisor coefficient count");
    PLFunction pl;
    for (std::size_t i = 0; i < F.max_cones.size(); ++i) {
        const auto& c = F.max_cones[i];
        RatMatrix A(c.size(), F.dim);
        RatVec b(c.size());
        for (std::size_t k = 0; k < c.size(); ++k) {
            for (std::size_t j = 0; j < F.dim; ++j) A(k, j) = F.rays[c[k]][j];
            b[k] = D.coeffs[c[k]];
        }
        auto s = solve_linear(A, b);
        if (!s) throw DomainError("not_q_cartier", "divisor is not linear on maximal cone " + std::to_string(i));
        pl.slopes.push_back(*s);
    }
    return pl;
}

namespace {

bool convexity(const ToricDivisor& D, bool strict) {
    PLFunction pl;
    try {
        pl = pl_function(D);
    } catch (const DomainError&) {
        return false;
    }
    const Fan& F = D.fan;
    for (std::size_t i = 0; i < F.max_cones.size(); ++i) {
        for (std::size_t r = 0; r < F.rays.size(); ++r) {
            Rat v = dot(F.rays[r], pl.slopes[i]);
            bool inside = std::binary_search(F.max_cones[i].begin(), F.max_cones[i].end(), r);
            if (v > D.coeffs[r]) return false;
            if (strict && !inside && v == D.coeffs[r]) return false;
        }
    }
    return true;
}

}  // namespace

bool is_nef(const ToricDivisor& D) { return convexity(D, false); }
bool is_ample(const ToricDivisor& D) { return convexity(D, true); }

Polytope sections_polytope(const ToricDivisor& D) {
    if (D.coeffs.size() != D.fan.rays.size()) throw DomainError("dimension_mismatch", "divisor coefficient count");
    std::vector<Halfspace> hs;
    for (std::size_t i = 0; i < D.fan.rays.size(); ++i) hs.push_back({D.fan.rays[i], Rat(-D.coeffs[i])});
    return polytope_from_halfspaces(D.fan.dim, hs);
}

Fan projective_bundle_fan(const Fan& base, const std::vector<IntVec>& summands) {
    if (summands.empty()) throw DomainError("bad_bundle", "projective bundle needs at least one summand");
    const std::size_t d = base.dim, a = summands.size() - 1;
    for (const auto& s : summands)
        if (s.size() != base.rays.size()) throw DomainError("dimension_mismatch", "summand coefficient count");
    Fan F;
    F.dim = d + a;
    for (std::size_t r = 0; r < base.rays.size(); ++r) {
        IntVec v(base.rays[r]);
        for (std::size_t i = 1; i <= a; ++i) v.push_back(-(summands[i][r] - summands[0][r]));
        F.rays.push_back(v);
    }
    const std::size_t f0 = base.rays.size();
    IntVec minus_sum(F.dim, Int(0));
    for (std::size_t i = 0; i < a; ++i) minus_sum[d + i] = -1;
    F.rays.push_back(minus_sum);
    for (std::size_t i = 0; i < a; ++i) F.rays.push_back(unit_vector(F.dim, d + i));
    for (const auto& c : base.max_cones) {
        for (std::size_t omit = 0; omit <= a; ++omit) {
            std::vector<std::size_t> cone(c);
            for (std::size_t k = 0; k <= a; ++k)
                if (k != omit) cone.push_back(f0 + k);
            std::sort(cone.begin(), cone.end());
            F.max_cones.push_back(cone);
        }
    }
    if (base.max_cones.empty() && base.dim == 0) {
        for (std::size_t omit = 0; omit <= a; ++omit) {
            std::vector<std::size_t> cone;
            for (std::size_t k = 0; k <= a; ++k)
                if (k != omit) cone.push_back(f0 + k);
            F.max_cones.push_back(cone);
        }
    }
    return F;
}

}  // namespace tmir
