#include "toricmirror/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace tmir {

std::vector<std::string> default_var_names(std::size_t n) {
    static const char* base[] = {"x", "y", "z", "w"};
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(n <= 4 ? base[i] : "x" + std::to_string(i + 1));
    return out;
}

Laurent::Laurent(std::size_t nvars) : nvars_(nvars), vars_(default_var_names(nvars)) {}

Laurent::Laurent(std::vector<std::string> vars) : nvars_(vars.size()), vars_(std::move(vars)) {}

void Laurent::set_vars(std::vector<std::string> v) {
    if (v.size() != nvars_) throw DomainError("dimension_mismatch", "variable name count");
    vars_ = std::move(v);
}

Laurent Laurent::monomial(std::size_t nvars, const IntVec& e, const Int& c) {
    Laurent f(nvars);
    f.add_term(e, c);
    return f;
}

Int Laurent::coeff(const IntVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Int(0) : it->second;
}

void Laurent::add_term(const IntVec& e, const Int& c) {
    if (e.size() != nvars_) throw DomainError("dimension_mismatch", "exponent length");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Laurent::check(const Laurent& o) const {
    if (nvars_ != o.nvars_) throw DomainError("dimension_mismatch", "polynomials in different numbers of variables");
}

Laurent Laurent::operator+(const Laurent& o) const {
    check(o);
    Laurent r(*this);
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + o * Int(-1); }

Laurent Laurent::operator*(const Laurent& o) const {
    check(o);
    Laurent r(*this);
    r.terms_.clear();
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(add(e1, e2), c1 * c2);
    return r;
}

Laurent Laurent::operator*(const Int& k) const {
    Laurent r(*this);
    r.terms_.clear();
    for (const auto& [e, c] : terms_) r.add_term(e, c * k);
    return r;
}

std::string Laurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            mono << (any ? "*" : "") << vars_[i];
            if (e[i] != 1) mono << "^" << (e[i] < 0 ? "(" + e[i].get_str() + ")" : e[i].get_str());
            any = true;
        }
        Int a = abs(c);
        os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
        if (!any)
            os << a.get_str();
        else if (a == 1)
            os << mono.str();
        else
            os << a.get_str() << "*" << mono.str();
        first = false;
    }
    return os.str();
}

Laurent pow(const Laurent& f, unsigned k) {
    Laurent r = Laurent::monomial(f.nvars(), IntVec(f.nvars(), Int(0)));
    r.set_vars(f.vars());
    Laurent base = f;
    while (k) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k) base = base * base;
    }
    return r;
}

Laurent without_constant(const Laurent& f) {
    Laurent g(f.vars());
    for (const auto& [e, c] : f.terms())
        if (!is_zero(e)) g.add_term(e, c);
    return g;
}

Polytope newton_polytope(const Laurent& f) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "the zero polynomial has no Newton polytope");
    std::vector<IntVec> pts;
    for (const auto& kv : f.terms()) pts.push_back(kv.first);
    return convex_hull(pts, f.nvars());
}

std::vector<Int> classical_period(const Laurent& f, unsigned d_max) {
    if (f.is_zero()) throw DomainError("zero_polynomial", "classical period of the zero polynomial");
    const std::size_t n = f.nvars();
    // Per-coordinate reach of a single factor, widened to include 0 so that
    // the admissible box grows monotonically with the number of steps left.
    IntVec lo(n, Int(0)), hi(n, Int(0));
    for (const auto& kv : f.terms())
        for (std::size_t i = 0; i < n; ++i) {
            lo[i] = std::min(lo[i], kv.first[i]);
            hi[i] = std::max(hi[i], kv.first[i]);
        }
    std::vector<Int> out{Int(1)};
    std::map<IntVec, Int> cur{{IntVec(n, Int(0)), Int(1)}};
    for (unsigned d = 1; d <= d_max; ++d) {
        const Int left = d_max - d;
        std::map<IntVec, Int> next;
        for (const auto& [e, c] : cur)
            for (const auto& [g, k] : f.terms()) {
                IntVec s = add(e, g);
                bool ok = true;
                for (std::size_t i = 0; i < n && ok; ++i) ok = s[i] >= -left * hi[i] && s[i] <= -left * lo[i];
                if (!ok) continue;
                Int& slot = next[s];
                slot += c * k;
            }
        for (auto it = next.begin(); it != next.end();) it = it->second == 0 ? next.erase(it) : std::next(it);
        auto z = next.find(IntVec(n, Int(0)));
        out.push_back(z == next.end() ? Int(0) : z->second);
        cur = std::move(next);
    }
    return out;
}

Laurent monomial_substitution(const Laurent& f, const IntMatrix& U, const IntVec& shift) {
    if (U.rows() != f.nvars() || U.cols() != f.nvars() || shift.size() != f.nvars())
        throw DomainError("dimension_mismatch", "substitution matrix shape");
    Int d = determinant(U);
    if (d != 1 && d != -1) throw DomainError("not_unimodular", "substitution matrix is not unimodular");
    Laurent g(f.vars());
    for (const auto& [e, c] : f.terms()) g.add_term(add(U * e, shift), c);
    return g;
}

std::optional<Laurent> exact_divide(const Laurent& g, const Laurent& q) {
    if (q.is_zero()) throw DomainError("division_by_zero", "division by the zero polynomial");
    Laurent quot(g.vars());
    if (g.is_zero()) return quot;
    const std::size_t n = g.nvars();
    // Any quotient has exponents inside this box.
    IntVec lo(n), hi(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int gmin = g.terms().begin()->first[i], gmax = gmin, qmin = q.terms().begin()->first[i], qmax = qmin;
        for (const auto& kv : g.terms()) gmin = std::min(gmin, kv.first[i]), gmax = std::max(gmax, kv.first[i]);
        for (const auto& kv : q.terms()) qmin = std::min(qmin, kv.first[i]), qmax = std::max(qmax, kv.first[i]);
        lo[i] = gmin - qmin;
        hi[i] = gmax - qmax;
    }
    const auto& lead_q = *q.terms().rbegin();
    Laurent rem = g;
    while (!rem.is_zero()) {
        const auto& lead_r = *rem.terms().rbegin();
        IntVec e = sub(lead_r.first, lead_q.first);
        for (std::size_t i = 0; i < n; ++i)
            if (e[i] < lo[i] || e[i] > hi[i]) return std::nullopt;
        if (lead_r.second % lead_q.second != 0) return std::nullopt;
        Int c = lead_r.second / lead_q.second;
        quot.add_term(e, c);
        rem = rem - Laurent::monomial(n, e, c) * q;
    }
    return quot;
}

Laurent algebraic_mutation(const Laurent& f, const IntVec& w, const Laurent& factor) {
    if (w.size() != f.nvars() || factor.nvars() != f.nvars())
        throw DomainError("dimension_mismatch", "mutation data dimension");
    for (const auto& kv : factor.terms())
        if (dot(w, kv.first) != 0) throw DomainError("bad_factor", "mutation factor is not supported on w-perp");
    std::map<Int, Laurent> levels;
    for (const auto& [e, c] : f.terms()) {
        Int h = dot(w, e);
        auto it = levels.try_emplace(h, Laurent(f.vars())).first;
        it->second.add_term(e, c);
    }
    Laurent out(f.vars());
    for (const auto& [h, part] : levels) {
        if (h >= 0) {
            out = out + part * pow(factor, static_cast<unsigned>(h.get_ui()));
        } else {
            Int k = -h;
            auto q = exact_divide(part, pow(factor, static_cast<unsigned>(k.get_ui())));
            if (!q)
                throw DomainError("not_divisible",
                                  "level " + h.get_str() + " is not divisible by factor^" + k.get_str());
            out = out + *q;
        }
    }
    return out;
}

}  // namespace tmir
