#pragma once
// Shared helpers for the unit and acceptance tests. The oracles here are
// deliberately naive and do not call the library routine they check.

#include "toricmirror/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <string>
#include <vector>

namespace tmir::test {

using io::json;

inline json load_fixture(const std::string& name) {
    std::ifstream in(std::string(TORICMIRROR_FIXTURE_DIR) + "/" + name + ".json");
    if (!in) throw std::runtime_error("missing fixture " + name);
    return json::parse(in);
}

inline std::vector<std::string> fixture_names() {
    std::vector<std::string> out;
    for (const auto& e : std::filesystem::directory_iterator(TORICMIRROR_FIXTURE_DIR))
        if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
    std::sort(out.begin(), out.end());
    return out;
}

inline Scaffolding fixture_scaffolding(const std::string& name) {
    return io::scaffolding_from_json(load_fixture(name).at("scaffolding"));
}

inline IntVec iv(std::initializer_list<long> xs) {
    IntVec v;
    for (long x : xs) v.emplace_back(x);
    return v;
}

inline IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<IntVec> r;
    for (auto row : rows) r.push_back(iv(row));
    return IntMatrix::from_rows(r);
}

// Constant terms of f^d by repeated full multiplication.
inline std::vector<Int> naive_period(const Laurent& f, unsigned d_max) {
    std::vector<Int> out{Int(1)};
    Laurent p = Laurent::monomial(f.nvars(), IntVec(f.nvars(), Int(0)));
    for (unsigned d = 1; d <= d_max; ++d) {
        p = p * f;
        out.push_back(p.constant_term());
    }
    return out;
}

// Random unimodular matrix as a product of elementary row operations and
// row swaps.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937& rng, int steps = 12) {
    IntMatrix U = IntMatrix::identity(n);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int s = 0; s < steps; ++s) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        if (coef(rng) == 0) {
            for (std::size_t k = 0; k < n; ++k) std::swap(U(i, k), U(j, k));
        } else {
            Int c = coef(rng);
            for (std::size_t k = 0; k < n; ++k) U(i, k) += c * U(j, k);
        }
    }
    return U;
}

// Determinant by Laplace expansion along the first row.
inline Int laplace_det(const IntMatrix& A) {
    const std::size_t n = A.rows();
    if (n == 0) return 1;
    if (n == 1) return A(0, 0);
    Int total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        IntMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = A(r, c);
        Int term = A(0, j) * laplace_det(minor);
        total += (j % 2 == 0) ? term : Int(-term);
    }
    return total;
}

// Andrew's monotone chain on integer points: counter-clockwise vertices,
// collinear points dropped.
inline std::vector<IntVec> hull2d_ccw(std::vector<IntVec> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    auto cross = [](const IntVec& o, const IntVec& a, const IntVec& b) {
        return Int((a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]));
    };
    std::vector<IntVec> h(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline std::vector<IntVec> hull2d(const std::vector<IntVec>& pts) {
    auto h = hull2d_ccw(pts);
    std::sort(h.begin(), h.end());
    return h;
}

// Point in the convex hull of a full-dimensional planar point set.
inline bool in_hull2d(const std::vector<IntVec>& pts, const IntVec& p) {
    std::vector<IntVec> h = hull2d_ccw(pts);
    if (h.size() < 3) return false;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const IntVec& a = h[i];
        const IntVec& b = h[(i + 1) % h.size()];
        if ((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0]) < 0) return false;
    }
    return true;
}

inline Int binomial_coeff(unsigned n, unsigned k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

// Binomial sets equal up to renaming the variables and swapping the two
// sides of each equation.
inline bool binomials_match_up_to_naming(const std::vector<Binomial>& got, const std::vector<Binomial>& want) {
    if (got.size() != want.size() || got.empty()) return got.size() == want.size();
    const std::size_t n = want.front().positive.size();
    auto canon = [](const std::vector<Binomial>& bs) {
        std::vector<std::pair<IntVec, IntVec>> out;
        for (const auto& b : bs) out.push_back(std::minmax(b.positive, b.negative));
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto target = canon(want);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Binomial> mapped;
        for (const auto& b : got) {
            if (b.positive.size() != n) return false;
            Binomial m{IntVec(n), IntVec(n)};
            for (std::size_t i = 0; i < n; ++i) {
                m.positive[perm[i]] = b.positive[i];
                m.negative[perm[i]] = b.negative[i];
            }
            mapped.push_back(m);
        }
        if (canon(mapped) == target) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

}  // namespace tmir::test
