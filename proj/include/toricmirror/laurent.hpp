#pragma once

#include "toricmirror/polyhedra.hpp"

#include <map>
#include <string>
#include <vector>

namespace tmir {

// Sparse Laurent polynomial with integer coefficients. Zero coefficients are
// never stored.
class Laurent {
public:
    Laurent() = default;
    explicit Laurent(std::size_t nvars);
    Laurent(std::vector<std::string> vars);

    static Laurent monomial(std::size_t nvars, const IntVec& e, const Int& c = 1);

    std::size_t nvars() const { return nvars_; }
    const std::vector<std::string>& vars() const { return vars_; }
    void set_vars(std::vector<std::string> v);
    const std::map<IntVec, Int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Int coeff(const IntVec& e) const;
    Int constant_term() const { return coeff(IntVec(nvars_, Int(0))); }

    void add_term(const IntVec& e, const Int& c);

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator*(const Int& k) const;
    bool operator==(const Laurent& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    std::string to_string() const;

private:
    void check(const Laurent& o) const;
    std::size_t nvars_ = 0;
    std::vector<std::string> vars_;
    std::map<IntVec, Int> terms_;
};

std::vector<std::string> default_var_names(std::size_t n);
Laurent pow(const Laurent& f, unsigned k);
Laurent without_constant(const Laurent& f);

Polytope newton_polytope(const Laurent& f);

// c_d = constant term of f^d for d = 0..d_max. Intermediate powers are pruned
// to exponents that can still return to the origin.
std::vector<Int> classical_period(const Laurent& f, unsigned d_max);

// Exponent map e -> U e + shift, U unimodular.
Laurent monomial_substitution(const Laurent& f, const IntMatrix& U, const IntVec& shift);

// Exact quotient g / q when q divides g in the Laurent ring, else absent.
std::optional<Laurent> exact_divide(const Laurent& g, const Laurent& q);

// Multiply the level-h part (h = <w, e>) by factor^h; for h < 0 the part must
// be divisible by factor^|h|.
Laurent algebraic_mutation(const Laurent& f, const IntVec& w, const Laurent& factor);

}  // namespace tmir
