#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "dres/dres.hpp"

namespace dres::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kInternal = 3 };

using nlohmann::json;

struct Options {
    bool json = false;
    bool quiet = false;
    bool pretty = false;
};

namespace detail {

inline json coeffs(const Poly& p) { return coefficient_strings(p); }

inline json ratfun_json(const RatFun& f) { return json{{"num", coeffs(f.num())}, {"den", coeffs(f.den())}}; }

class Printer {
public:
    Printer(std::ostream& out, const Options& opt) : out_(out), opt_(opt) {}

    std::string poly(const Poly& p) const {
        if (opt_.pretty) return to_string(p);
        std::string s = "[";
        for (const auto& c : p.coeffs()) s += (s.size() > 1 ? " " : "") + c.get_str();
        return s + "]";
    }

    std::string ratfun(const RatFun& f) const {
        if (opt_.pretty) return to_string(f);
        return poly(f.num()) + " / " + poly(f.den());
    }

    void line(const std::string& s) const {
        if (!opt_.quiet) out_ << s << '\n';
    }

    void emit(const json& j) const {
        if (!opt_.quiet) out_ << j.dump() << '\n';
    }

    bool json_mode() const { return opt_.json; }

private:
    std::ostream& out_;
    const Options& opt_;
};

inline std::vector<RatFun> parse_all(const std::vector<std::string>& exprs) {
    std::vector<RatFun> out;
    out.reserve(exprs.size());
    for (const auto& e : exprs) out.push_back(parse(e));
    return out;
}

inline RatFun proper(const RatFun& f) { return proper_part(f).proper; }

inline std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

template <class V>
json vectors_json(const std::vector<V>& vs) {
    json arr = json::array();
    for (const auto& v : vs) {
        json row = json::array();
        for (const auto& c : v) row.push_back(c.get_str());
        arr.push_back(std::move(row));
    }
    return arr;
}

template <class V>
std::string vector_text(const V& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].get_str();
    return s + ")";
}

inline void print_pairs(const Printer& pr, const DresOutput& res) {
    if (pr.json_mode()) {
        json pairs = json::array();
        for (std::size_t k = 1; k <= res.order(); ++k)
            pairs.push_back({{"k", k}, {"B", coeffs(res[k].B)}, {"D", coeffs(res[k].D)}});
        pr.emit({{"pairs", pairs}});
        return;
    }
    for (std::size_t k = 1; k <= res.order(); ++k)
        pr.line("k=" + std::to_string(k) + " B=" + pr.poly(res[k].B) + " D=" + pr.poly(res[k].D));
}

inline int cmd_dres(const Printer& pr, const std::string& expr, bool per_order) {
    const RatFun f = proper(parse(expr));
    print_pairs(pr, per_order ? discrete_residues(f) : discrete_residues_coordinated(f));
    return kOk;
}

inline int cmd_dres_multi(const Printer& pr, const std::vector<std::string>& exprs) {
    std::vector<RatFun> fs;
    for (const auto& f : parse_all(exprs)) fs.push_back(proper(f));
    const auto res = discrete_residues_multi(fs);
    if (pr.json_mode()) {
        json d = json::array();
        for (const auto& row : res.D) {
            json r = json::array();
            for (const auto& p : row) r.push_back(coeffs(p));
            d.push_back(std::move(r));
        }
        pr.emit({{"B", coeffs(res.B)}, {"D", d}});
        return kOk;
    }
    pr.line("B=" + pr.poly(res.B));
    for (std::size_t i = 0; i < res.D.size(); ++i)
        for (std::size_t k = 0; k < res.D[i].size(); ++k)
            pr.line("i=" + std::to_string(i + 1) + " k=" + std::to_string(k + 1) + " D=" + pr.poly(res.D[i][k]));
    return kOk;
}

inline int cmd_reduce(const Printer& pr, const std::string& expr, bool certificate) {
    const RatFun f = proper(parse(expr));
    const auto red = simple_reduction(f, certificate);
    if (pr.json_mode()) {
        json j{{"reduced", ratfun_json(red.reduced)},
               {"shift_set", red.parts.shift_set},
               {"initial_roots", coeffs(red.parts.initial_roots)}};
        if (red.certificate) j["certificate"] = ratfun_json(*red.certificate);
        pr.emit(j);
        return kOk;
    }
    pr.line("reduced " + pr.ratfun(red.reduced));
    if (red.certificate) pr.line("certificate " + pr.ratfun(*red.certificate));
    return kOk;
}

inline int cmd_hermite(const Printer& pr, const std::string& expr) {
    const RatFun f = proper(parse(expr));
    const auto layers = f.is_zero() ? HermiteLayers{} : hermite_list(f);
    if (pr.json_mode()) {
        json arr = json::array();
        for (std::size_t k = 1; k <= layers.order(); ++k) {
            json l = ratfun_json(layers[k]);
            l["k"] = k;
            arr.push_back(std::move(l));
        }
        pr.emit({{"layers", arr}});
        return kOk;
    }
    for (std::size_t k = 1; k <= layers.order(); ++k) pr.line("k=" + std::to_string(k) + " " + pr.ratfun(layers[k]));
    return kOk;
}

inline int cmd_shift_set(const Printer& pr, const std::string& expr) {
    const RatFun b = parse(expr);
    if (!b.is_polynomial()) throw PreconditionError("shift-set needs a polynomial");
    const auto s = shift_set(b.num());
    if (pr.json_mode())
        pr.emit({{"shift_set", s.shifts}});
    else
        pr.line(join(s.shifts));
    return kOk;
}

inline int cmd_summable(const Printer& pr, const std::string& expr, bool certificate) {
    const auto res = is_summable(parse(expr), certificate);
    if (pr.json_mode()) {
        json j{{"summable", res.summable}};
        if (res.certificate) j["certificate"] = ratfun_json(*res.certificate);
        pr.emit(j);
        return kOk;
    }
    pr.line(res.summable ? "summable" : "not summable");
    if (res.certificate) pr.line("certificate " + pr.ratfun(*res.certificate));
    return kOk;
}

/// V(f) with polynomial parts stripped; a function whose proper part is
/// zero leaves its coordinate unconstrained.
inline VSpaceBasis vspace_stripped(const std::vector<RatFun>& fs) {
    std::vector<RatFun> nonzero;
    std::vector<std::size_t> where;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        RatFun p = proper(fs[i]);
        if (!p.is_zero()) {
            nonzero.push_back(std::move(p));
            where.push_back(i);
        }
    }
    Matrix<Rat> conditions(0, fs.size());
    if (!nonzero.empty()) {
        const auto sub = residue_condition_matrix(discrete_residues_multi(nonzero));
        conditions = Matrix<Rat>(sub.rows(), fs.size());
        for (std::size_t r = 0; r < sub.rows(); ++r)
            for (std::size_t c = 0; c < sub.cols(); ++c) conditions(r, where[c]) = sub(r, c);
    }
    return {nullspace(conditions)};
}

inline int cmd_vspace(const Printer& pr, const std::vector<std::string>& exprs) {
    const auto basis = vspace_stripped(parse_all(exprs));
    if (pr.json_mode()) {
        pr.emit({{"basis", vectors_json(basis.vectors)}});
        return kOk;
    }
    pr.line("dimension " + std::to_string(basis.dimension()));
    for (const auto& v : basis.vectors) pr.line(vector_text(v));
    return kOk;
}

inline int cmd_mult_relations(const Printer& pr, const std::vector<std::string>& exprs) {
    const auto lat = multiplicative_relations(parse_all(exprs));
    if (pr.json_mode()) {
        json gammas = json::array();
        for (const auto& g : lat.gammas) gammas.push_back(g.get_str());
        pr.emit({{"tilde_basis", vectors_json(lat.tilde_basis)}, {"gammas", gammas}, {"basis", vectors_json(lat.basis)}});
        return kOk;
    }
    pr.line("summable exponents (rank " + std::to_string(lat.tilde_basis.size()) + ")");
    for (std::size_t j = 0; j < lat.tilde_basis.size(); ++j)
        pr.line(vector_text(lat.tilde_basis[j]) + " gamma=" + lat.gammas[j].get_str());
    pr.line("relations (rank " + std::to_string(lat.basis.size()) + ")");
    for (const auto& e : lat.basis) pr.line(vector_text(e));
    return kOk;
}

inline int cmd_oracle(const Printer& pr, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw PreconditionError("cannot open spec file '" + path + "'");
    const auto spec = testkit::parse_orbit_spec(in);
    const RatFun f = testkit::build_from_spec(spec);
    const auto table = testkit::dres_by_definition(spec);
    std::string why;
    const auto got = f.is_zero() ? DresOutput{} : discrete_residues_coordinated(f);
    const bool ok = testkit::matches_oracle(got, spec, &why);
    if (pr.json_mode()) {
        json rows = json::array();
        for (const auto& e : table)
            rows.push_back({{"representative", e.representative.get_str()}, {"k", e.k}, {"value", e.value.get_str()}});
        json j{{"function", ratfun_json(f)}, {"oracle", rows}, {"matches", ok}};
        if (!ok) j["mismatch"] = why;
        pr.emit(j);
    } else {
        pr.line("f " + pr.ratfun(f));
        for (const auto& e : table)
            pr.line("orbit " + e.representative.get_str() + " k=" + std::to_string(e.k) + " dres=" + e.value.get_str());
        pr.line(ok ? "match" : "mismatch: " + why);
    }
    return ok ? kOk : kInternal;
}

}  // namespace detail

/// Entry point of the `dres` command-line tool.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Discrete residues and rational summability over Q(x)", "dres"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_flag("--json", opt.json, "Emit JSON");
    app.add_flag("--quiet", opt.quiet, "Suppress normal output");
    app.add_flag("--pretty", opt.pretty, "Render polynomials as expressions");

    std::string expr, path;
    std::vector<std::string> exprs;
    bool per_order = false, certificate = false;

    auto* dres = app.add_subcommand("dres", "Discrete residues (B_k, D_k) of one function");
    dres->add_option("expr", expr)->required();
    dres->add_flag("--per-order", per_order, "Reduce every order independently");

    auto* dres_multi = app.add_subcommand("dres-multi", "Compatible discrete residues of several functions");
    dres_multi->add_option("exprs", exprs)->required();

    auto* reduce = app.add_subcommand("reduce", "Reduced form of a simple-pole function");
    reduce->add_option("expr", expr)->required();
    reduce->add_flag("--certificate", certificate, "Also print g with f = reduced + delta(g)");

    auto* hermite = app.add_subcommand("hermite", "Simple-pole layers from iterated Hermite reduction");
    hermite->add_option("expr", expr)->required();

    auto* shift = app.add_subcommand("shift-set", "Shift set of a polynomial");
    shift->add_option("poly", expr)->required();

    auto* summable = app.add_subcommand("summable", "Decide rational summability");
    summable->add_option("expr", expr)->required();
    summable->add_flag("--certificate", certificate, "Also print g with f = delta(g)");

    auto* vspace_cmd = app.add_subcommand("vspace", "Basis of {v : sum v_i f_i summable}");
    vspace_cmd->add_option("exprs", exprs)->required();
    vspace_cmd->alias("galois-unipotent");

    auto* relations = app.add_subcommand("mult-relations", "Multiplicative relation lattice of diagonal systems");
    relations->add_option("exprs", exprs)->required();

    auto* oracle = app.add_subcommand("oracle", "Check discrete residues against a partial-fraction spec file");
    oracle->add_option("specfile", path)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    const detail::Printer pr(out, opt);
    try {
        if (*dres) return detail::cmd_dres(pr, expr, per_order);
        if (*dres_multi) return detail::cmd_dres_multi(pr, exprs);
        if (*reduce) return detail::cmd_reduce(pr, expr, certificate);
        if (*hermite) return detail::cmd_hermite(pr, expr);
        if (*shift) return detail::cmd_shift_set(pr, expr);
        if (*summable) return detail::cmd_summable(pr, expr, certificate);
        if (*vspace_cmd) return detail::cmd_vspace(pr, exprs);
        if (*relations) return detail::cmd_mult_relations(pr, exprs);
        if (*oracle) return detail::cmd_oracle(pr, path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const ScaleLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kPrecondition;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
    return kUsage;
}

}  // namespace dres::cli
