#include "toricmirror/exact.hpp"

#include <algorithm>
#include <sstream>

namespace tmir {

Int dot(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension_mismatch", "dot product of unequal lengths");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension_mismatch", "dot product of unequal lengths");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rat dot(const IntVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw DomainError("dimension_mismatch", "dot product of unequal lengths");
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

RatVec to_rat(const IntVec& v) {
    RatVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

RatMatrix to_rat(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
    return r;
}

Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("division_by_zero", "zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

bool is_integral(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x.get_den() == 1; });
}

IntVec to_int(const RatVec& v) {
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].get_den() != 1) throw DomainError("not_integral", "expected an integer vector, got " + to_string(v));
        r[i] = v[i].get_num();
    }
    return r;
}

Int gcd_of(const IntVec& v) {
    Int g = 0;
    for (const auto& x : v) {
        Int ax = abs(x);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ax.get_mpz_t());
    }
    return g;
}

IntVec primitive(const IntVec& v) {
    Int g = gcd_of(v);
    if (g == 0) return v;
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

IntVec primitive(const RatVec& v) {
    Int l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    IntVec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Rat y = v[i] * l;
        r[i] = y.get_num();
    }
    return primitive(r);
}

bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}
bool is_zero(const RatVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b.at(i);
    return r;
}
IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b.at(i);
    return r;
}
IntVec scale(const IntVec& a, const Int& k) {
    IntVec r(a);
    for (auto& x : r) x *= k;
    return r;
}
IntVec neg(const IntVec& a) { return scale(a, Int(-1)); }
RatVec add(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b.at(i);
    return r;
}
RatVec sub(const RatVec& a, const RatVec& b) {
    RatVec r(a);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] -= b.at(i);
    return r;
}
RatVec scale(const RatVec& a, const Rat& k) {
    RatVec r(a);
    for (auto& x : r) x *= k;
    return r;
}

IntVec unit_vector(std::size_t n, std::size_t i) {
    IntVec v(n, Int(0));
    v.at(i) = 1;
    return v;
}

std::string to_string(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

std::string to_string(const RatVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------

namespace {

template <typename M>
void swap_rows(M& A, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < A.cols(); ++j) std::swap(A(a, j), A(b, j));
}

void combine_rows(IntMatrix& A, std::size_t r, std::size_t i, const Int& s, const Int& t, const Int& u,
                  const Int& v) {
    // (row_r, row_i) <- (s*row_r + t*row_i, u*row_r + v*row_i)
    for (std::size_t j = 0; j < A.cols(); ++j) {
        Int x = A(r, j), y = A(i, j);
        A(r, j) = s * x + t * y;
        A(i, j) = u * x + v * y;
    }
}

}  // namespace

HermiteResult hermite_normal_form(const IntMatrix& A) {
    HermiteResult res;
    res.H = A;
    res.U = IntMatrix::identity(A.rows());
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    const std::size_t m = A.rows();
    std::size_t r = 0;
    for (std::size_t j = 0; j < A.cols() && r < m; ++j) {
        for (std::size_t i = r + 1; i < m; ++i) {
            if (H(i, j) == 0) continue;
            if (H(r, j) == 0) {
                swap_rows(H, r, i);
                swap_rows(U, r, i);
                continue;
            }
            Int a = H(r, j), b = H(i, j), g, s, t;
            mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
            Int u = -b / g, v = a / g;
            combine_rows(H, r, i, s, t, u, v);
            combine_rows(U, r, i, s, t, u, v);
        }
        if (H(r, j) == 0) continue;
        if (H(r, j) < 0) {
            for (std::size_t k = 0; k < H.cols(); ++k) H(r, k) = -H(r, k);
            for (std::size_t k = 0; k < U.cols(); ++k) U(r, k) = -U(r, k);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(r, j).get_mpz_t());
            if (q == 0) continue;
            for (std::size_t k = 0; k < H.cols(); ++k) H(i, k) -= q * H(r, k);
            for (std::size_t k = 0; k < U.cols(); ++k) U(i, k) -= q * U(r, k);
        }
        res.pivots.push_back(j);
        ++r;
    }
    res.rank = r;
    return res;
}

std::vector<IntVec> lattice_basis(const std::vector<IntVec>& gens, std::size_t dim) {
    if (gens.empty()) return {};
    auto h = hermite_normal_form(IntMatrix::from_rows(gens, dim));
    std::vector<IntVec> out;
    for (std::size_t i = 0; i < h.rank; ++i) out.push_back(h.H.row(i));
    return out;
}

std::vector<IntVec> kernel_basis(const IntMatrix& A) {
    auto h = hermite_normal_form(A.transpose());
    std::vector<IntVec> raw;
    for (std::size_t i = h.rank; i < h.U.rows(); ++i) raw.push_back(h.U.row(i));
    return lattice_basis(raw, A.cols());
}

std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t dim) {
    auto ann = kernel_basis(IntMatrix::from_rows(gens, dim));
    return kernel_basis(IntMatrix::from_rows(ann, dim));
}

std::vector<std::size_t> rref(RatMatrix& A) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t j = 0; j < A.cols() && r < A.rows(); ++j) {
        std::size_t p = r;
        while (p < A.rows() && A(p, j) == 0) ++p;
        if (p == A.rows()) continue;
        swap_rows(A, r, p);
        Rat inv = 1 / A(r, j);
        for (std::size_t k = j; k < A.cols(); ++k) A(r, k) *= inv;
        for (std::size_t i = 0; i < A.rows(); ++i) {
            if (i == r || A(i, j) == 0) continue;
            Rat f = A(i, j);
            for (std::size_t k = j; k < A.cols(); ++k) A(i, k) -= f * A(r, k);
        }
        pivots.push_back(j);
        ++r;
    }
    return pivots;
}

std::size_t rank(const RatMatrix& A) {
    RatMatrix B = A;
    return rref(B).size();
}

std::size_t rank(const IntMatrix& A) { return hermite_normal_form(A).rank; }

Rat determinant(const RatMatrix& A) {
    if (A.rows() != A.cols()) throw DomainError("dimension_mismatch", "determinant of non-square matrix");
    RatMatrix B = A;
    Rat det = 1;
    const std::size_t n = B.rows();
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t p = j;
        while (p < n && B(p, j) == 0) ++p;
        if (p == n) return 0;
        if (p != j) {
            swap_rows(B, p, j);
            det = -det;
        }
        det *= B(j, j);
        for (std::size_t i = j + 1; i < n; ++i) {
            if (B(i, j) == 0) continue;
            Rat f = B(i, j) / B(j, j);
            for (std::size_t k = j; k < n; ++k) B(i, k) -= f * B(j, k);
        }
    }
    return det;
}

Int determinant(const IntMatrix& A) {
    Rat d = determinant(to_rat(A));
    return d.get_num();
}

std::optional<RatMatrix> rational_inverse(const RatMatrix& A) {
    if (A.rows() != A.cols()) return std::nullopt;
    const std::size_t n = A.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

IntMatrix unimodular_inverse(const IntMatrix& A) {
    if (A.rows() != A.cols())
        throw DomainError("not_unimodular", "matrix is not square, so its columns are not a basis");
    Int d = determinant(A);
    if (d != 1 && d != -1)
        throw DomainError("not_unimodular", "determinant " + d.get_str() + " is not +-1");
    auto inv = rational_inverse(to_rat(A));
    IntMatrix out(A.rows(), A.cols());
    for (std::size_t i = 0; i < A.rows(); ++i)
        for (std::size_t j = 0; j < A.cols(); ++j) out(i, j) = (*inv)(i, j).get_num();
    return out;
}

std::optional<RatVec> solve_linear(const RatMatrix& A, const RatVec& b) {
    if (b.size() != A.rows()) throw DomainError("dimension_mismatch", "solve_linear right-hand side");
    RatMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
    RatVec x(A.cols(), Rat(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, A.cols());
    return x;
}

// ---------------------------------------------------------------------------
// Dense two-phase simplex over Q.

namespace {

class Simplex {
public:
    Simplex(const RatMatrix& A, const RatVec& b) : m_(A.rows()), n_(A.cols()) {
        // columns: n originals, then m artificials, then rhs
        T_ = RatMatrix(m_, n_ + m_ + 1);
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            Rat sign = b[i] < 0 ? Rat(-1) : Rat(1);
            for (std::size_t j = 0; j < n_; ++j) T_(i, j) = sign * A(i, j);
            T_(i, n_ + i) = 1;
            T_(i, n_ + m_) = sign * b[i];
            basis_[i] = n_ + i;
        }
        active_.assign(n_ + m_, true);
    }

    LpResult run(const RatVec& c) {
        RatVec phase1(n_ + m_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) phase1[n_ + i] = -1;
        if (!optimise(phase1)) return {LpStatus::Unbounded, {}, 0};  // cannot happen in phase 1
        if (objective(phase1) < 0) return {LpStatus::Infeasible, {}, 0};
        drive_out_artificials();
        for (std::size_t i = 0; i < m_; ++i) active_[n_ + i] = false;
        RatVec cost(n_ + m_, Rat(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
        LpResult res;
        if (!optimise(cost)) {
            res.status = LpStatus::Unbounded;
            return res;
        }
        res.status = LpStatus::Optimal;
        res.x.assign(n_, Rat(0));
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            std::size_t r = rows_[i];
            if (basis_[r] < n_) res.x[basis_[r]] = T_(r, n_ + m_);
        }
        res.value = objective(cost);
        return res;
    }

private:
    Rat objective(const RatVec& c) const {
        Rat v = 0;
        for (std::size_t r : rows_) v += c[basis_[r]] * T_(r, n_ + m_);
        return v;
    }

    void pivot(std::size_t r, std::size_t col) {
        const std::size_t W = T_.cols();
        Rat inv = 1 / T_(r, col);
        for (std::size_t k = 0; k < W; ++k) T_(r, k) *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || T_(i, col) == 0) continue;
            Rat f = T_(i, col);
            for (std::size_t k = 0; k < W; ++k) T_(i, k) -= f * T_(r, k);
        }
        basis_[r] = col;
    }

    // Returns false when unbounded.
    bool optimise(const RatVec& c) {
        if (rows_.empty()) {
            for (std::size_t i = 0; i < m_; ++i) rows_.push_back(i);
        }
        const std::size_t rhs = n_ + m_;
        for (;;) {
            std::size_t enter = SIZE_MAX;
            for (std::size_t j = 0; j < n_ + m_ && enter == SIZE_MAX; ++j) {
                if (!active_[j]) continue;
                bool basic = false;
                for (std::size_t r : rows_) basic = basic || basis_[r] == j;
                if (basic) continue;
                Rat red = c[j];
                for (std::size_t r : rows_) red -= c[basis_[r]] * T_(r, j);
                if (red > 0) enter = j;
            }
            if (enter == SIZE_MAX) return true;
            std::size_t leave = SIZE_MAX;
            Rat best;
            for (std::size_t r : rows_) {
                if (T_(r, enter) <= 0) continue;
                Rat ratio = T_(r, rhs) / T_(r, enter);
                if (leave == SIZE_MAX || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
                    leave = r;
                    best = ratio;
                }
            }
            if (leave == SIZE_MAX) return false;
            pivot(leave, enter);
        }
    }

    void drive_out_artificials() {
        std::vector<std::size_t> kept;
        for (std::size_t r : rows_) {
            if (basis_[r] < n_) {
                kept.push_back(r);
                continue;
            }
            std::size_t col = SIZE_MAX;
            for (std::size_t j = 0; j < n_ && col == SIZE_MAX; ++j)
                if (T_(r, j) != 0) col = j;
            if (col == SIZE_MAX) continue;  // redundant constraint
            pivot(r, col);
            kept.push_back(r);
        }
        // Redundant rows stay in the tableau but no longer take part.
        for (std::size_t r : rows_)
            if (std::find(kept.begin(), kept.end(), r) == kept.end()) {
                for (std::size_t k = 0; k < T_.cols(); ++k) T_(r, k) = 0;
            }
        rows_ = kept;
    }

    std::size_t m_, n_;
    RatMatrix T_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> rows_;
    std::vector<bool> active_;
};

}  // namespace

LpResult lp_maximize(const RatMatrix& A, const RatVec& b, const RatVec& c) {
    if (b.size() != A.rows() || c.size() != A.cols())
        throw DomainError("dimension_mismatch", "linear program shape");
    Simplex s(A, b);
    return s.run(c);
}

std::optional<RatVec> positive_combination(const std::vector<RatVec>& gens, const RatVec& target, bool strict) {
    const std::size_t d = target.size();
    for (const auto& g : gens)
        if (g.size() != d) throw DomainError("dimension_mismatch", "positive_combination generator length");
    const std::size_t k = gens.size();
    if (k == 0) {
        if (is_zero(target)) return RatVec{};
        return std::nullopt;
    }
    if (!strict) {
        RatMatrix A(d, k);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < k; ++j) A(i, j) = gens[j][i];
        auto res = lp_maximize(A, target, RatVec(k, Rat(0)));
        if (res.status != LpStatus::Optimal) return std::nullopt;
        return res.x;
    }
    // variables: lambda (k), s, slack (k), tau
    const std::size_t nv = 2 * k + 2;
    const std::size_t s_idx = k, slack0 = k + 1, tau = 2 * k + 1;
    RatMatrix A(d + k + 1, nv);
    RatVec b(d + k + 1, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < k; ++j) A(i, j) = gens[j][i];
        b[i] = target[i];
    }
    for (std::size_t j = 0; j < k; ++j) {
        A(d + j, j) = 1;
        A(d + j, s_idx) = -1;
        A(d + j, slack0 + j) = -1;
    }
    A(d + k, s_idx) = 1;
    A(d + k, tau) = 1;
    b[d + k] = 1;
    RatVec c(nv, Rat(0));
    c[s_idx] = 1;
    auto res = lp_maximize(A, b, c);
    if (res.status != LpStatus::Optimal || res.value <= 0) return std::nullopt;
    return RatVec(res.x.begin(), res.x.begin() + static_cast<long>(k));
}

std::optional<std::vector<RatVec>> convex_selection(const std::vector<std::vector<RatVec>>& groups,
                                                    const RatVec& target) {
    const std::size_t d = target.size();
    std::size_t nv = 0;
    for (const auto& g : groups) nv += g.size();
    RatMatrix A(d + groups.size(), nv);
    RatVec b(d + groups.size(), Rat(0));
    for (std::size_t i = 0; i < d; ++i) b[i] = target[i];
    std::size_t col = 0;
    for (std::size_t gi = 0; gi < groups.size(); ++gi) {
        b[d + gi] = 1;
        for (const auto& p : groups[gi]) {
            if (p.size() != d) throw DomainError("dimension_mismatch", "convex_selection point length");
            for (std::size_t i = 0; i < d; ++i) A(i, col) = p[i];
            A(d + gi, col) = 1;
            ++col;
        }
    }
    auto res = lp_maximize(A, b, RatVec(nv, Rat(0)));
    if (res.status != LpStatus::Optimal) return std::nullopt;
    std::vector<RatVec> out;
    col = 0;
    for (const auto& g : groups) {
        RatVec p(d, Rat(0));
        for (const auto& q : g) {
            p = add(p, scale(q, res.x[col]));
            ++col;
        }
        out.push_back(p);
    }
    return out;
}

}  // namespace tmir
