#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "../diagrams.hpp"
#include "../formulas.hpp"
#include "../gf.hpp"
#include "../paths.hpp"
#include "../weyl.hpp"
#include "expression.hpp"
#include "format.hpp"

namespace weylkit::cli {

enum ExitCode { Ok = 0, Usage = 1, Refused = 2, Disagreement = 3 };

enum class QMode { Off, Numeric, Symbolic };

struct CommandConfig {
    std::string subcommand;
    std::string expression;  // EXPR, FAMILY or SPEC
    std::vector<std::string> args;
    unsigned power = 1;
    unsigned order = 8;
    std::optional<unsigned> depth;
    QMode q_mode = QMode::Off;
    std::string q_value;
    Format format = Format::Table;
    std::vector<std::string> oracles{"rewrite", "transfer"};
    unsigned max_size = 6;
    unsigned max_word_len = 64;
    unsigned size = 2;
    // series parameters
    std::string u = "1", v = "1", alpha = "1", beta = "1";
    unsigned r = 2;
    std::string phi, rho, a;
};

struct UsageError : Error {
    using Error::Error;
};

struct OracleDisagreement : Error {
    using Error::Error;
};

inline CommandConfig parse_args(std::vector<std::string> argv) {
    CommandConfig cfg;
    CLI::App app{"weylkit: normal ordering in the Weyl algebra"};
    app.require_subcommand(1, 1);
    std::string format = "table";
    std::string q;
    bool q_symbolic = false;
    std::string oracles;

    auto add_format = [&](CLI::App* s) {
        s->add_option("--format", format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    };
    auto add_q = [&](CLI::App* s) {
        auto* qo = s->add_option("--q", q, "numeric deformation value");
        auto* qs = s->add_flag("--q-symbolic", q_symbolic, "symbolic deformation q");
        qo->excludes(qs);
        qs->excludes(qo);
    };

    auto* no = app.add_subcommand("normal-order", "normal form of EXPR^N");
    no->add_option("expr", cfg.expression)->required();
    no->add_option("--power", cfg.power);
    add_q(no);
    add_format(no);

    auto* ct = app.add_subcommand("ct", "constant term of EXPR^N");
    ct->add_option("expr", cfg.expression)->required();
    ct->add_option("--power", cfg.power)->required();
    add_q(ct);
    add_format(ct);

    auto* en = app.add_subcommand("exp-normal", "normal forms of EXPR^n for n <= N");
    en->add_option("expr", cfg.expression)->required();
    en->add_option("--order", cfg.order)->required();
    add_q(en);
    add_format(en);

    auto* se = app.add_subcommand("series", "closed-form generating function");
    se->add_option("family", cfg.expression)->required();
    se->add_option("--order", cfg.order)->required();
    se->add_option("--u", cfg.u);
    se->add_option("--v", cfg.v);
    se->add_option("--alpha", cfg.alpha);
    se->add_option("--beta", cfg.beta);
    se->add_option("--r", cfg.r);
    se->add_option("--phi", cfg.phi, "comma-separated coefficients, lowest degree first");
    se->add_option("--rho", cfg.rho);
    se->add_option("--a", cfg.a);
    add_format(se);

    auto* cf = app.add_subcommand("cf", "continued-fraction expansion");
    cf->add_option("spec", cfg.expression, "hermite, fermatR, q-hermite, q-fermat2")->required();
    cf->add_option("--order", cfg.order)->required();
    cf->add_option("--depth", cfg.depth);
    add_q(cf);
    add_format(cf);

    auto* nu = app.add_subcommand("numbers", "closed-form number families");
    nu->add_option("family", cfg.expression)->required();
    nu->add_option("args", cfg.args);
    add_format(nu);

    auto* oc = app.add_subcommand("oracle-compare", "cross-check EXPR^N through independent routes");
    oc->add_option("expr", cfg.expression)->required();
    oc->add_option("--power", cfg.power)->required();
    oc->add_option("--oracles", oracles, "comma list of rewrite,transfer,enumerate,rook,paths");
    oc->add_option("--max-size", cfg.max_size);
    oc->add_option("--max-word-len", cfg.max_word_len);

    auto* dd = app.add_subcommand("dump-diagrams", "list labelled diagrams of size N");
    dd->add_option("expr", cfg.expression)->required();
    dd->add_option("--size", cfg.size)->required();
    dd->add_option("--max-size", cfg.max_size);

    std::reverse(argv.begin(), argv.end());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
    if (q_symbolic) cfg.q_mode = QMode::Symbolic;
    if (!q.empty()) {
        cfg.q_mode = QMode::Numeric;
        cfg.q_value = q;
    }
    if (!oracles.empty()) {
        cfg.oracles.clear();
        std::stringstream ss(oracles);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) cfg.oracles.push_back(item);
    }
    return cfg;
}

namespace detail {

struct Context {
    RingPtr ring;
    Coefficient q = 1;
    std::size_t modes = 1;
};

inline Context make_context(const std::set<std::string>& symbols, const CommandConfig& cfg) {
    std::set<std::string> names = symbols;
    if (cfg.q_mode == QMode::Symbolic) names.insert("q");
    Context ctx;
    if (!names.empty()) ctx.ring = Ring::make(std::vector<std::string>(names.begin(), names.end()));
    if (cfg.q_mode == QMode::Symbolic) ctx.q = Coefficient::parameter(ctx.ring, "q");
    if (cfg.q_mode == QMode::Numeric) {
        ExprPtr qe = parse_expression(cfg.q_value);
        if (!symbols_of(*qe).empty()) throw UsageError("--q expects a rational number");
        ctx.q = to_coefficient(*qe, nullptr);
        if (ctx.q.is_zero()) throw UsageError("--q must be nonzero");
    }
    return ctx;
}

inline std::vector<Coefficient> parse_list(const std::string& text, const RingPtr& ring) {
    std::vector<Coefficient> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(to_coefficient(*parse_expression(item), ring));
    return out;
}

inline void write_scalar(std::ostream& out, const std::string& family, const std::vector<std::string>& args, const std::string& value, Format f) {
    if (f == Format::Json) {
        Json j;
        j["family"] = family;
        j["args"] = args;
        j["value"] = value;
        out << j.dump(2) << "\n";
    } else if (f == Format::Csv) {
        out << "family,args,value\n" << family << "," << csv_quote([&] {
            std::string s;
            for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
            return s;
        }()) << "," << csv_quote(value) << "\n";
    } else {
        out << value << "\n";
    }
}

inline void write_series(std::ostream& out, const TruncatedSeries& s, bool egf, Format f) {
    if (f == Format::Json) {
        Json j;
        j["order"] = s.order();
        Json c = Json::array(), e = Json::array();
        for (std::size_t n = 0; n <= s.order(); ++n) {
            c.push_back(s[n].to_string());
            if (egf) e.push_back(s.egf(n).to_string());
        }
        j["coefficients"] = c;
        if (egf) j["egf"] = e;
        out << j.dump(2) << "\n";
        return;
    }
    if (f == Format::Csv) out << (egf ? "n,coeff,egf\n" : "n,coeff\n");
    for (std::size_t n = 0; n <= s.order(); ++n) {
        if (f == Format::Csv) {
            out << n << "," << csv_quote(s[n].to_string());
            if (egf) out << "," << csv_quote(s.egf(n).to_string());
        } else {
            out << n << "  " << s[n].to_string();
            if (egf) out << "  " << s.egf(n).to_string();
        }
        out << "\n";
    }
}

inline unsigned arg(const CommandConfig& cfg, std::size_t i) {
    if (i >= cfg.args.size()) throw UsageError("numbers " + cfg.expression + ": missing argument " + std::to_string(i + 1));
    try {
        long v = std::stol(cfg.args[i]);
        if (v < 0) throw UsageError("numbers: arguments must be nonnegative");
        return static_cast<unsigned>(v);
    } catch (const std::logic_error&) {
        throw UsageError("numbers: bad integer '" + cfg.args[i] + "'");
    }
}

inline std::string numbers_value(const CommandConfig& cfg) {
    const std::string& f = cfg.expression;
    auto need = [&](std::size_t k) {
        if (cfg.args.size() != k) throw UsageError("numbers " + f + " takes " + std::to_string(k) + " arguments");
    };
    if (f == "stirling2") return need(2), stirling2(arg(cfg, 0), arg(cfg, 1)).get_str();
    if (f == "stirling1") return need(2), stirling1(arg(cfg, 0), arg(cfg, 1)).get_str();
    if (f == "bell") return need(1), bell(arg(cfg, 0)).get_str();
    if (f == "bell22") return need(1), gen_bell_22(arg(cfg, 0)).get_str();
    if (f == "stirling-rs") return need(4), gen_stirling_rs(arg(cfg, 0), arg(cfg, 1), arg(cfg, 2), arg(cfg, 3)).get_str();
    if (f == "lah") return need(3), lah_gamma(arg(cfg, 0), arg(cfg, 1), arg(cfg, 2)).to_string();
    if (f == "scherk") return need(3), scherk_c(arg(cfg, 0), arg(cfg, 1), arg(cfg, 2)).get_str();
    if (f == "duchon") return need(1), duchon(arg(cfg, 0)).get_str();
    if (f == "matrix") {
        need(1);
        auto m = matrix_counts(arg(cfg, 0));
        return m.plus_minus.get_str() + " " + m.plus.get_str();
    }
    if (f == "ehrenfest") return need(4), ehrenfest_prob(arg(cfg, 0), arg(cfg, 1), arg(cfg, 2), arg(cfg, 3)).get_str();
    if (f == "coupon") return need(3), coupon_collector(arg(cfg, 0), arg(cfg, 1), arg(cfg, 2)).get_str();
    if (f == "coupon-expected") return need(2), coupon_expected(arg(cfg, 0), arg(cfg, 1)).get_str();
    if (f == "touchard") {
        need(1);
        RingPtr ring = Ring::make({"q"});
        return touchard_riordan(arg(cfg, 0), Coefficient::parameter(ring, "q")).to_string();
    }
    if (f == "involution") {
        need(3);
        RingPtr ring = Ring::make({"alpha", "beta"});
        return involution_coeff(arg(cfg, 0), arg(cfg, 1), arg(cfg, 2), Coefficient::parameter(ring, "alpha"), Coefficient::parameter(ring, "beta"))
            .to_string();
    }
    throw UsageError("unknown number family: " + f);
}

inline NormalForm operator_normal_form(const Expr& e, const Context& ctx) {
    return to_normal_form(e, ctx.ring, ctx.modes, ctx.q);
}

inline void require_plain(const NormalForm& h, const std::string& what) {
    if (h.modes() != 1) throw UsageError(what + " needs a single-mode expression");
    if (h.is_deformed()) throw UsageError(what + " needs the undeformed relation");
    if (!constant_term(h).is_zero()) throw UsageError(what + " needs an expression without constant term");
}

inline CoefficientMap paths_oracle(const GateBasis& basis, unsigned n) {
    StepSet steps;
    for (const auto& g : basis.gates()) {
        Coefficient w = g.w;
        unsigned s = g.s;
        steps.push_back({static_cast<int>(g.r) - static_cast<int>(g.s), [w, s](unsigned k) { return w * Coefficient(falling(Integer(k), s)); }});
    }
    CoefficientMap out;
    auto prof = lattice_profile(steps, n);
    for (unsigned a = 0; a < prof.size(); ++a)
        if (!prof[a].is_zero()) out[{a, 0u}] = prof[a];
    return out;
}

inline std::string key_str(std::pair<unsigned, unsigned> k) { return "(" + std::to_string(k.first) + "," + std::to_string(k.second) + ")"; }

inline int compare_results(const std::vector<std::pair<std::string, CoefficientMap>>& results, std::ostream& out);

inline int oracle_compare(const CommandConfig& cfg, std::ostream& out) {
    ExprPtr e = parse_expression(cfg.expression);
    CommandConfig plain = cfg;
    plain.q_mode = QMode::Off;
    Context ctx = make_context(symbols_of(*e), plain);
    ctx.modes = modes_of(*e);
    NormalForm h = operator_normal_form(*e, ctx);
    require_plain(h, "oracle-compare");
    GateBasis basis = GateBasis::from_normal_form(h);
    EnumerationBounds bounds;
    bounds.max_size = cfg.max_size;
    if (cfg.oracles.empty()) throw UsageError("no oracles selected");

    std::vector<std::pair<std::string, CoefficientMap>> results;
    for (const auto& name : cfg.oracles) {
        CoefficientMap m;
        if (name == "rewrite") {
            OperatorPolynomial p = to_operator(*e, ctx.ring, ctx.modes, ctx.q);
            std::size_t len = p.degree() * cfg.power;
            if (len > cfg.max_word_len)
                throw BoundExceeded("rewrite oracle: word length " + std::to_string(len) + " exceeds --max-word-len " + std::to_string(cfg.max_word_len));
            double words = std::pow(static_cast<double>(p.terms().size()), cfg.power);
            if (words > 2e6) throw BoundExceeded("rewrite oracle: expansion has too many words");
            m = to_coefficient_map(normal_order(p.pow(cfg.power)));
        } else if (name == "transfer") {
            m = transfer_coefficients(basis, cfg.power);
        } else if (name == "enumerate") {
            m = diagram_totals(basis, cfg.power, bounds);
        } else if (name == "rook") {
            m = rook_coefficients(basis, cfg.power, bounds);
        } else if (name == "paths") {
            m = paths_oracle(basis, cfg.power);
        } else {
            throw UsageError("unknown oracle: " + name);
        }
        results.emplace_back(name, std::move(m));
    }
    return compare_results(results, out);
}

// first entry is the reference; stops at the first differing coefficient
inline int compare_results(const std::vector<std::pair<std::string, CoefficientMap>>& results, std::ostream& out) {
    const auto& [ref_name, ref] = results.front();
    out << ref_name << ": reference, " << ref.size() << " terms\n";
    for (std::size_t i = 1; i < results.size(); ++i) {
        const auto& [name, m] = results[i];
        bool partial = name == "paths";
        std::set<std::pair<unsigned, unsigned>> keys;
        for (const auto& [k, c] : ref)
            if (!partial || k.second == 0) keys.insert(k);
        for (const auto& [k, c] : m) keys.insert(k);
        for (const auto& k : keys) {
            auto rit = ref.find(k);
            auto mit = m.find(k);
            Coefficient rc = rit == ref.end() ? Coefficient() : rit->second;
            Coefficient mc = mit == m.end() ? Coefficient() : mit->second;
            if (rc != mc) {
                out << name << ": differs at " << key_str(k) << ": " << ref_name << " " << rc.to_string() << ", " << name << " " << mc.to_string()
                    << "\n";
                return Disagreement;
            }
        }
        out << name << ": agrees" << (partial ? " (coefficients with b = 0)" : "") << "\n";
    }
    return Ok;
}

inline int dump_diagrams(const CommandConfig& cfg, std::ostream& out) {
    ExprPtr e = parse_expression(cfg.expression);
    CommandConfig plain = cfg;
    plain.q_mode = QMode::Off;
    Context ctx = make_context(symbols_of(*e), plain);
    ctx.modes = modes_of(*e);
    NormalForm h = operator_normal_form(*e, ctx);
    require_plain(h, "dump-diagrams");
    GateBasis basis = GateBasis::from_normal_form(h);
    EnumerationBounds bounds;
    bounds.max_size = cfg.max_size;
    std::size_t index = 0;
    for_each_diagram(
        basis, cfg.size,
        [&](const LabelledDiagram& d) {
            ScanEncoding enc = scan_encode(d);
            out << "# diagram " << ++index << " outputs=" << d.free_outputs() << " inputs=" << d.free_inputs() << " contour=" << enc.contour
                << " rooks=";
            for (std::size_t i = 0; i < enc.rooks.size(); ++i) out << (i ? "," : "") << enc.rooks[i];
            out << "\n" << serialize_diagram(d) << "\n";
        },
        bounds);
    out << "# total " << index << "\n";
    return Ok;
}

inline std::optional<JFractionSpec> cf_spec(const std::string& name, std::size_t depth, const Coefficient& q, std::vector<QLinearFactor>& qf) {
    if (name == "hermite") return hermite_spec(depth);
    if (name.rfind("fermat", 0) == 0 && name.size() > 6) {
        unsigned r = static_cast<unsigned>(std::stoul(name.substr(6)));
        if (r < 1) throw UsageError("fermat order must be >= 1");
        return fermat_spec(r, depth);
    }
    if (name == "q-hermite") qf = {{1, 0}};
    else if (name == "q-fermat2") qf = {{2, -1}, {2, 0}};
    else throw UsageError("unknown continued fraction: " + name);
    (void)q;
    return std::nullopt;
}

}  // namespace detail

inline int run(const CommandConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        const std::string& sub = cfg.subcommand;
        if (sub == "normal-order" || sub == "ct" || sub == "exp-normal") {
            ExprPtr e = parse_expression(cfg.expression);
            detail::Context ctx = detail::make_context(symbols_of(*e), cfg);
            ctx.modes = modes_of(*e);
            NormalForm h = detail::operator_normal_form(*e, ctx);
            if (sub == "normal-order") {
                write_normal_form(out, power_normal_order(h, cfg.power), cfg.format);
            } else if (sub == "ct") {
                std::string v = constant_term(power_normal_order(h, cfg.power)).to_string();
                detail::write_scalar(out, "ct", {cfg.expression, std::to_string(cfg.power)}, v, cfg.format);
            } else {
                auto seq = exp_normal_order(h, cfg.order);
                if (cfg.format == Format::Json) {
                    Json arr = Json::array();
                    for (std::size_t n = 0; n < seq.size(); ++n) {
                        Json j;
                        j["n"] = n;
                        j["form"] = to_json(seq[n]);
                        arr.push_back(std::move(j));
                    }
                    out << arr.dump(2) << "\n";
                } else if (cfg.format == Format::Csv) {
                    out << csv_header(h.modes(), true) << "\n";
                    for (std::size_t n = 0; n < seq.size(); ++n) write_csv_rows(out, seq[n], std::to_string(n) + ",");
                } else {
                    for (std::size_t n = 0; n < seq.size(); ++n) {
                        out << "n = " << n << "\n";
                        write_table(out, seq[n]);
                    }
                }
            }
            return Ok;
        }
        if (sub == "series") {
            std::set<std::string> names;
            for (const auto* text : {&cfg.u, &cfg.v, &cfg.alpha, &cfg.beta, &cfg.phi, &cfg.rho, &cfg.a}) {
                if (text->empty()) continue;
                std::stringstream ss(*text);
                std::string item;
                while (std::getline(ss, item, ','))
                    for (const auto& s : symbols_of(*parse_expression(item))) names.insert(s);
            }
            RingPtr ring = names.empty() ? nullptr : Ring::make(std::vector<std::string>(names.begin(), names.end()));
            GfParams p;
            p.u = to_coefficient(*parse_expression(cfg.u), ring);
            p.v = to_coefficient(*parse_expression(cfg.v), ring);
            p.alpha = to_coefficient(*parse_expression(cfg.alpha), ring);
            p.beta = to_coefficient(*parse_expression(cfg.beta), ring);
            p.r = cfg.r;
            p.phi = PolynomialSpec(detail::parse_list(cfg.phi, ring));
            p.rho = PolynomialSpec(detail::parse_list(cfg.rho, ring));
            p.a = PolynomialSpec(detail::parse_list(cfg.a, ring));
            auto& fams = gf_families();
            if (std::find(fams.begin(), fams.end(), cfg.expression) == fams.end()) throw UsageError("unknown series family: " + cfg.expression);
            detail::write_series(out, closed_gf(cfg.expression, p, cfg.order), true, cfg.format);
            return Ok;
        }
        if (sub == "cf") {
            std::size_t depth = cfg.depth ? *cfg.depth : cfg.order / 2 + 1;
            detail::Context ctx = detail::make_context({}, cfg);
            Coefficient q = ctx.q;
            if (cfg.q_mode == QMode::Off) q = Coefficient::parameter(Ring::make({"q"}), "q");
            std::vector<QLinearFactor> qf;
            auto spec = detail::cf_spec(cfg.expression, depth, q, qf);
            TruncatedSeries s = spec ? jfraction_expand(*spec, cfg.order) : q_jfraction_expand(qf, q, depth, cfg.order);
            detail::write_series(out, s, false, cfg.format);
            return Ok;
        }
        if (sub == "numbers") {
            detail::write_scalar(out, cfg.expression, cfg.args, detail::numbers_value(cfg), cfg.format);
            return Ok;
        }
        if (sub == "oracle-compare") return detail::oracle_compare(cfg, out);
        if (sub == "dump-diagrams") return detail::dump_diagrams(cfg, out);
        err << "unknown subcommand " << sub << "\n";
        return Usage;
    } catch (const BoundExceeded& e) {
        err << "refused: " << e.what() << "\n";
        return Refused;
    } catch (const OutOfRange& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return Usage;
    }
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    try {
        cfg = parse_args(args);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return Usage;
    }
    return run(cfg, out, err);
}

}  // namespace weylkit::cli
