#include "toricmirror/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace tmir::io {

namespace {

[[noreturn]] void bad(const std::string& detail) { throw DomainError("malformed_input", detail); }

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

const json& section(const json& j, const std::string& key) {
    return j.is_object() && j.contains(key) ? j.at(key) : j;
}

// ---- scalars ----------------------------------------------------------------

json to_json(const Int& v) {
    if (v.fits_slong_p()) return json(static_cast<long long>(v.get_si()));
    return json(v.get_str());
}

json to_json(const Rat& v) {
    if (v.get_den() == 1) return to_json(Int(v.get_num()));
    return json(v.get_str());
}

json to_json(const IntVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_json(x));
    return a;
}

json to_json(const IntMatrix& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
    return a;
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        Int v;
        if (v.set_str(j.get<std::string>(), 10) != 0) bad("not an integer: " + j.get<std::string>());
        return v;
    }
    bad("expected an integer, got " + j.dump());
}

Rat rat_from_json(const json& j) {
    if (j.is_number_integer()) return Rat(int_from_json(j));
    if (j.is_string()) {
        Rat v;
        if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0) bad("not a rational: " + j.get<std::string>());
        v.canonicalize();
        return v;
    }
    bad("expected a rational, got " + j.dump());
}

IntVec intvec_from_json(const json& j) {
    if (!j.is_array()) bad("expected an integer array, got " + j.dump());
    IntVec v;
    for (const auto& x : j) v.push_back(int_from_json(x));
    return v;
}

RatVec ratvec_from_json(const json& j) {
    if (!j.is_array()) bad("expected a rational array, got " + j.dump());
    RatVec v;
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

std::vector<IntVec> intvecs_from_json(const json& j) {
    if (!j.is_array()) bad("expected an array of integer vectors");
    std::vector<IntVec> out;
    for (const auto& x : j) out.push_back(intvec_from_json(x));
    return out;
}

IntMatrix intmatrix_from_json(const json& j) { return IntMatrix::from_rows(intvecs_from_json(j)); }

// ---- GIT data and partitions -----------------------------------------------

GitData git_from_json(const json& j) {
    GitData gd;
    if (j.contains("characters")) {
        gd.characters = intvecs_from_json(j.at("characters"));
        if (gd.characters.empty()) bad("no characters");
        gd.r = gd.characters.front().size();
    } else {
        IntMatrix W = intmatrix_from_json(need(j, "weights"));
        gd.r = W.rows();
        gd.characters = W.col_list();
    }
    if (j.contains("omega")) {
        gd.omega = intvec_from_json(j.at("omega"));
    } else {
        gd.omega = IntVec(gd.r, Int(0));
        for (const auto& d : gd.characters) gd.omega = add(gd.omega, d);
    }
    check_git_data(gd);
    return gd;
}

json to_json(const GitData& gd) {
    json j;
    j["weights"] = to_json(gd.weight_matrix());
    j["omega"] = to_json(gd.omega);
    return j;
}

namespace {

std::size_t index_from_json(const json& j) {
    Int v = int_from_json(j);
    if (v < 1 || !v.fits_ulong_p()) bad("indices are 1-based, got " + v.get_str());
    return v.get_ui() - 1;
}

std::vector<std::size_t> indices_from_json(const json& j) {
    if (!j.is_array()) bad("expected an index array");
    std::vector<std::size_t> out;
    for (const auto& x : j) out.push_back(index_from_json(x));
    return out;
}

json indices_to_json(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(i + 1);
    return a;
}

}  // namespace

ConvexPartition partition_from_json(const json& j) {
    ConvexPartition p;
    p.B = indices_from_json(need(j, "B"));
    for (const auto& s : need(j, "S")) p.S.push_back(indices_from_json(s));
    if (j.contains("U")) p.U = indices_from_json(j.at("U"));
    if (j.contains("choices")) p.choices = indices_from_json(j.at("choices"));
    return p;
}

json to_json(const ConvexPartition& p) {
    json j;
    j["B"] = indices_to_json(p.B);
    json s = json::array();
    for (const auto& g : p.S) s.push_back(indices_to_json(g));
    j["S"] = s;
    j["U"] = indices_to_json(p.U);
    j["choices"] = indices_to_json(resolved_choices(p));
    return j;
}

// ---- fans and polyhedra -------------------------------------------------------

Fan fan_from_json(const json& j) {
    Fan F;
    F.rays = intvecs_from_json(need(j, "rays"));
    F.dim = j.contains("dim") ? int_from_json(j.at("dim")).get_ui() : (F.rays.empty() ? 0 : F.rays.front().size());
    for (const auto& r : F.rays)
        if (r.size() != F.dim) bad("ray of wrong length in fan");
    for (const auto& c : need(j, "max_cones")) {
        std::vector<std::size_t> cone;
        for (const auto& x : c) {
            Int v = int_from_json(x);
            if (v < 0 || v >= static_cast<long>(F.rays.size())) bad("cone index out of range");
            cone.push_back(v.get_ui());
        }
        std::sort(cone.begin(), cone.end());
        F.max_cones.push_back(cone);
    }
    return F;
}

json to_json(const Fan& F) {
    json j;
    j["dim"] = F.dim;
    json rays = json::array();
    for (const auto& r : F.rays) rays.push_back(to_json(r));
    j["rays"] = rays;
    j["max_cones"] = F.max_cones;
    return j;
}

Polytope polytope_from_json(const json& j, std::size_t ambient_dim_hint) {
    const json& v = j.is_array() ? j : need(j, "vertices");
    std::vector<RatVec> pts;
    for (const auto& p : v) pts.push_back(ratvec_from_json(p));
    std::size_t d = pts.empty() ? ambient_dim_hint : pts.front().size();
    if (j.is_object() && j.contains("ambient_dim")) d = int_from_json(j.at("ambient_dim")).get_ui();
    for (const auto& p : pts)
        if (p.size() != d) bad("vertex of wrong length in polytope");
    return convex_hull(pts, d);
}

json to_json(const Polytope& P) {
    json j;
    j["ambient_dim"] = P.ambient_dim;
    j["dim"] = P.dim();
    json v = json::array();
    for (const auto& x : P.vertices) v.push_back(to_json(x));
    j["vertices"] = v;
    json f = json::array();
    for (const auto& h : P.facets) f.push_back({{"normal", to_json(h.normal)}, {"offset", to_json(h.offset)}});
    j["facets"] = f;
    return j;
}

json to_json(const Cone& C) {
    json j;
    j["ambient_dim"] = C.ambient_dim;
    json rays = json::array(), lin = json::array();
    for (const auto& r : C.rays) rays.push_back(to_json(r));
    for (const auto& r : C.lineality) lin.push_back(to_json(r));
    j["rays"] = rays;
    j["lineality"] = lin;
    return j;
}

// ---- scaffoldings -------------------------------------------------------------

Scaffolding scaffolding_from_json(const json& j) {
    Scaffolding S;
    S.shape = fan_from_json(need(j, "shape"));
    S.u = j.contains("u") ? int_from_json(j.at("u")).get_ui() : 0;
    for (const auto& s : need(j, "struts")) {
        Strut t;
        t.coeffs = intvec_from_json(need(s, "coeffs"));
        t.chi = s.contains("chi") ? intvec_from_json(s.at("chi")) : IntVec(S.u, Int(0));
        if (t.coeffs.size() != S.shape.rays.size()) bad("strut coefficient count differs from the shape's ray count");
        if (t.chi.size() != S.u) bad("strut translation has the wrong length");
        S.struts.push_back(t);
    }
    if (S.struts.empty()) bad("scaffolding without struts");
    S.target = j.contains("target") ? polytope_from_json(j.at("target"), S.dim()) : struts_hull(S);
    if (S.target.ambient_dim != S.dim()) bad("target polytope lives in the wrong dimension");
    return S;
}

json to_json(const Scaffolding& S) {
    json j;
    j["shape"] = to_json(S.shape);
    j["u"] = S.u;
    json st = json::array();
    for (const auto& s : S.struts) st.push_back({{"coeffs", to_json(s.coeffs)}, {"chi", to_json(s.chi)}});
    j["struts"] = st;
    json v = json::array();
    for (const auto& x : S.target.vertices) v.push_back(to_json(x));
    j["target"] = {{"vertices", v}};
    return j;
}

// ---- Laurent polynomials ------------------------------------------------------

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& vars) : s_(s), vars_(vars) {}

    Laurent run() {
        Laurent f = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& what) {
        bad("cannot parse polynomial \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    Laurent mono(const IntVec& e, const Int& c) {
        Laurent f(vars_);
        f.add_term(e, c);
        return f;
    }
    Laurent constant(const Int& c) { return mono(IntVec(vars_.size(), Int(0)), c); }

    Laurent expr() {
        Laurent f = term();
        for (char c = peek(); c == '+' || c == '-'; c = peek()) {
            ++pos_;
            Laurent g = term();
            f = c == '+' ? f + g : f - g;
        }
        return f;
    }
    Laurent term() {
        Laurent f = unary();
        for (;;) {
            char c = peek();
            if (c == '*' || c == '/') {
                ++pos_;
                Laurent g = unary();
                f = c == '*' ? f * g : divide(f, g);
            } else if (c == '(' || std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
                f = f * unary();
            } else {
                return f;
            }
        }
    }
    Laurent unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return unary() * Int(-1);
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }
    Laurent power() {
        Laurent f = atom();
        if (peek() != '^') return f;
        ++pos_;
        bool paren = peek() == '(';
        if (paren) ++pos_;
        bool negative = false;
        if (peek() == '-') negative = true, ++pos_;
        Int k = number();
        if (paren) {
            if (peek() != ')') fail("expected ')'");
            ++pos_;
        }
        if (!k.fits_uint_p()) fail("exponent too large");
        Laurent p = pow(f, static_cast<unsigned>(k.get_ui()));
        return negative ? divide(constant(1), p) : p;
    }
    Int number() {
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Int(s_.substr(start, pos_ - start));
    }
    Laurent atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Laurent f = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return constant(number());
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            auto it = std::find(vars_.begin(), vars_.end(), name);
            if (it == vars_.end()) fail("unknown variable " + name);
            return mono(unit_vector(vars_.size(), it - vars_.begin()), Int(1));
        }
        fail("expected a term");
    }
    Laurent divide(const Laurent& f, const Laurent& g) {
        if (g.is_zero()) throw DomainError("division_by_zero", "division by zero in \"" + s_ + "\"");
        auto q = exact_divide(f, g);
        if (!q) throw DomainError("not_divisible", "\"" + s_ + "\" is not a Laurent polynomial");
        return *q;
    }

    const std::string& s_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

// Identifiers in order of first appearance, with x, y, z, w ranked first.
std::vector<std::string> infer_vars(const std::string& s) {
    std::set<std::string> names;
    for (std::size_t i = 0; i < s.size();) {
        if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
            std::size_t start = i;
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            names.insert(s.substr(start, i - start));
        } else {
            ++i;
        }
    }
    std::vector<std::string> out;
    for (const char* v : {"x", "y", "z", "w"})
        if (names.erase(v)) out.push_back(v);
    out.insert(out.end(), names.begin(), names.end());
    return out;
}

}  // namespace

Laurent parse_laurent(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).run();
}

Laurent laurent_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        return parse_laurent(s, infer_vars(s));
    }
    std::vector<std::string> vars;
    if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("expr")) {
        const std::string s = j.at("expr").get<std::string>();
        return parse_laurent(s, vars.empty() ? infer_vars(s) : vars);
    }
    const json& terms = need(j, "terms");
    std::size_t n = vars.size();
    if (n == 0 && !terms.empty()) n = need(terms.front(), "exp").size();
    Laurent f = vars.empty() ? Laurent(n) : Laurent(vars);
    for (const auto& t : terms) f.add_term(intvec_from_json(need(t, "exp")), int_from_json(need(t, "coeff")));
    return f;
}

json to_json(const Laurent& f) {
    json j;
    j["vars"] = f.vars();
    json t = json::array();
    for (const auto& [e, c] : f.terms()) t.push_back({{"exp", to_json(e)}, {"coeff", to_json(c)}});
    j["terms"] = t;
    j["string"] = f.to_string();
    return j;
}

// ---- reports and results --------------------------------------------------------

json to_json(const Report& r) {
    json j;
    j["ok"] = r.ok();
    json c = json::array();
    for (const auto& x : r.checks) c.push_back({{"name", x.name}, {"ok", x.ok}, {"detail", x.detail}});
    j["checks"] = c;
    return j;
}

json to_json(const Binomial& b) { return {{"positive", to_json(b.positive)}, {"negative", to_json(b.negative)}}; }

json to_json(const InversionResult& inv) {
    json j;
    j["matrix"] = to_json(inv.matrix);
    j["omega"] = to_json(inv.omega);
    j["row_struts"] = indices_to_json(inv.row_struts);
    j["basis_struts"] = indices_to_json(inv.basis_struts);
    json rays = json::array();
    for (const auto& r : inv.rays) rays.push_back(to_json(r));
    j["rays"] = rays;
    j["partition"] = inv.recovered_partition ? to_json(*inv.recovered_partition) : json(nullptr);
    return j;
}

MutationData mutation_from_json(const json& j, std::size_t ambient_dim) {
    MutationData m;
    m.weight = intvec_from_json(need(j, "w"));
    if (m.weight.size() != ambient_dim) bad("weight vector has the wrong length");
    m.factor = polytope_from_json(need(j, "factor"), ambient_dim);
    return m;
}

}  // namespace tmir::io
