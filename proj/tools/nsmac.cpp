// Command-line front end: compute and render polynomials, bases and
// pairings, and run the acceptance suites.

#include <CLI11.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>

#include "nsmac/serialize.hpp"
#include "nsmac/verify.hpp"

using namespace nsmac;
using nlohmann::json;

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitLimit = 3;
constexpr int kExitSentinel = 4;

struct Job {
    std::string system;
    std::string weight;
    std::string spec = "exact";
    std::string format = "text";
    std::string cache_dir;
    std::string mode = "independent";
    std::string kernel = "t";
    std::string with;
    int64_t D = 6;
    bool tilde = false;
    bool normalized = false;
    bool conjecture = false;
    std::vector<std::string> suites;
    std::vector<std::string> systems;
    int radius = 2;
    int relation_radius = 3;
    bool progress = false;
};

// "1,-2", "1 -2" or "[1,-2]"
Weight parse_weight(const std::string& text, int rank) {
    std::string s = text;
    for (char& c : s)
        if (c == ',' || c == '[' || c == ']') c = ' ';
    std::istringstream in(s);
    Weight w;
    std::string tok;
    while (in >> tok) {
        size_t pos = 0;
        int64_t v = 0;
        try {
            v = std::stoll(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos != tok.size()) throw std::invalid_argument("weight coordinate '" + tok + "' is not an integer");
        w.push_back(v);
    }
    if (static_cast<int>(w.size()) != rank)
        throw std::invalid_argument("weight " + text + " has " + std::to_string(w.size()) + " coordinates, rank is " +
                                    std::to_string(rank));
    return w;
}

std::string poly_line(const GroupAlgebraElement& f, const RenderContext& ctx) {
    return f.is_zero() ? "0" : f.str(ctx);
}

void print_json(std::ostream& out, const json& j) { out << j.dump(1) << "\n"; }

int cmd_info(const Job& job, std::ostream& out) {
    RootSystemData R = build_root_system(job.system);
    if (job.format == "json") {
        print_json(out, to_json(R));
        return 0;
    }
    out << "system: " << R.name() << "\n";
    out << "rank: " << R.rank << "\n";
    out << "simply laced: " << (R.simply_laced() ? "yes" : "no") << "\n";
    out << "cartan:";
    for (const auto& row : R.cartan) out << " " << render_weight(row);
    out << "\n";
    out << "positive roots (" << R.positive_roots.size() << "):";
    for (const auto& b : R.positive_roots) out << " " << render_weight(b);
    out << "\n";
    out << "theta: " << render_weight(R.theta) << " = " << render_weight(R.theta_weight) << " in weights\n";
    out << "minuscule:";
    for (const auto& m : R.minuscule) out << " " << render_weight(m);
    out << "\n";
    out << "m*: " << R.m_star << "\n";
    return 0;
}

GroupAlgebraElement exact_or_cached(const MacdonaldEngine& M, const Job& job, const Weight& l, Spec s) {
    if (job.cache_dir.empty()) return M.E(l, s);
    if (auto rec = load_cached(job.cache_dir, M.system().name(), l, s)) return rec->poly;
    CacheRecord rec = make_record(M, l, s);
    store_cached(job.cache_dir, rec);
    return rec.poly;
}

int cmd_E(const Job& job, std::ostream& out) {
    RootSystemData R = build_root_system(job.system);
    MacdonaldEngine M(R);
    Weight l = parse_weight(job.weight, R.rank);
    Spec s = parse_spec(job.spec);
    if (job.tilde && job.normalized) throw std::invalid_argument("--tilde and --normalized are exclusive");
    if (job.normalized && s != Spec::exact) throw std::invalid_argument("--normalized needs --spec exact");
    GroupAlgebraElement f;
    std::string variant = "E";
    if (job.tilde) {
        f = M.E_tilde(l, s);
        variant = "E_tilde";
    } else if (job.normalized) {
        f = M.compute_E(l).normalized();
        variant = "e_lambda E";
    } else {
        f = exact_or_cached(M, job, l, s);
    }
    if (job.format == "json") {
        if (variant == "E") {
            CacheRecord rec = s == Spec::exact ? make_record(M, l, s) : CacheRecord{R.name(), l, s, f, {}, {}, {}};
            out << dump_record(rec);
        } else {
            print_json(out, json{{"schema", kSchemaVersion},
                                 {"system", R.name()},
                                 {"weight", l},
                                 {"spec", spec_name(s)},
                                 {"variant", variant},
                                 {"poly", to_json(f)}});
        }
        return 0;
    }
    out << poly_line(f, R.render_context()) << "\n";
    return 0;
}

int cmd_P(const Job& job, std::ostream& out) {
    RootSystemData R = build_root_system(job.system);
    MacdonaldEngine M(R);
    Weight l = parse_weight(job.weight, R.rank);
    Spec s = parse_spec(job.spec);
    if (job.normalized && s != Spec::exact) throw std::invalid_argument("--normalized needs --spec exact");
    GroupAlgebraElement f = job.normalized ? M.compute_P_normalized(l) : specialize(M.compute_P(l), s);
    if (job.format == "json") {
        print_json(out, json{{"schema", kSchemaVersion},
                             {"system", R.name()},
                             {"weight", l},
                             {"spec", spec_name(s)},
                             {"variant", job.normalized ? "e_lambda P" : "P"},
                             {"poly", to_json(f)}});
        return 0;
    }
    out << poly_line(f, R.render_context()) << "\n";
    return 0;
}

int cmd_spec(const Job& job, std::ostream& out) {
    RootSystemData R = build_root_system(job.system);
    MacdonaldEngine M(R);
    Weight l = parse_weight(job.weight, R.rank);
    const Spec all[] = {Spec::exact, Spec::qinf, Spec::q0, Spec::tinf, Spec::t0, Spec::inf_inf, Spec::zero_zero};
    json rows = json::array();
    for (Spec s : all) {
        std::string name = spec_name(s);
        try {
            GroupAlgebraElement f = job.tilde ? M.E_tilde(l, s) : M.E(l, s);
            if (job.format == "json")
                rows.push_back(json{{"spec", name}, {"poly", to_json(f)}});
            else
                out << name << std::string(10 - name.size(), ' ') << poly_line(f, R.render_context()) << "\n";
        } catch (const PoleAtLimit& e) {
            if (job.format == "json")
                rows.push_back(json{{"spec", name}, {"error", "pole at limit"}});
            else
                out << name << std::string(10 - name.size(), ' ') << "pole at limit\n";
        }
    }
    if (job.format == "json")
        print_json(out, json{{"schema", kSchemaVersion},
                             {"system", R.name()},
                             {"weight", l},
                             {"variant", job.tilde ? "E_tilde" : "E"},
                             {"rows", rows}});
    return 0;
}

int cmd_kl(const Job& job, std::ostream& out) {
    RootSystemData R = build_root_system(job.system);
    MacdonaldEngine M(R);
    ParameterMode mode;
    if (job.mode == "independent")
        mode = ParameterMode::independent;
    else if (job.mode == "equal")
        mode = ParameterMode::equal;
    else
        throw std::invalid_argument("unknown mode '" + job.mode + "'");
    KLEngine K(M, mode);
    Weight l = parse_weight(job.weight, R.rank);
    RenderContext ctx = R.render_context();

    struct Row {
        Weight mu;
        ParamPoly pstar, p;
        mpz_class at_one;
        bool nonnegative;
    };
    std::vector<Row> rows;
    if (job.conjecture) {
        for (const auto& r : K.conjecture_report(l).rows) rows.push_back({r.mu, r.pstar, r.p, r.p_at_one, r.nonnegative});
    } else {
        for (const auto& [mu, kl] : K.canonical_basis(l).coefficients) {
            if (kl.pstar.is_zero()) continue;
            bool nonneg = std::all_of(kl.p.terms().begin(), kl.p.terms().end(),
                                      [](const ParamTerm& t) { return t.c >= 0; });
            rows.push_back({mu, kl.pstar, kl.p, kl.p.sum_coefficients(), nonneg});
        }
    }

    if (job.format == "json") {
        json jr = json::array();
        for (const auto& r : rows) {
            json x{{"mu", r.mu},
                   {"pstar", to_json(r.pstar)},
                   {"p", to_json(r.p)},
                   {"pstar_text", render_poly(r.pstar, ctx)},
                   {"p_text", render_poly(r.p, ctx)},
                   {"p_at_one", r.at_one.get_str()}};
            if (job.conjecture) x["nonnegative"] = r.nonnegative;
            jr.push_back(std::move(x));
        }
        json j{{"schema", kSchemaVersion}, {"system", R.name()}, {"lambda", l}, {"mode", job.mode}, {"rows", jr}};
        if (job.conjecture) j["status"] = ConjectureReport::marker;
        print_json(out, j);
        return 0;
    }
    std::vector<std::vector<std::string>> table{{"mu", "P*", "P", "P(1)"}};
    if (job.conjecture) table[0].push_back("nonnegative");
    for (const auto& r : rows) {
        table.push_back({render_weight(r.mu), render_poly(r.pstar, ctx), render_poly(r.p, ctx), r.at_one.get_str()});
        if (job.conjecture) table.back().push_back(r.nonnegative ? "yes" : "no");
    }
    std::vector<size_t> width(table[0].size(), 0);
    for (const auto& row : table)
        for (size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    for (const auto& row : table) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
    if (job.conjecture) out << "status: " << ConjectureReport::marker << "\n";
    return 0;
}

int cmd_pair(const Job& job, std::ostream& out) {
    RootSystemData R = build_root_system(job.system);
    MacdonaldEngine M(R);
    Weight l = parse_weight(job.weight, R.rank);
    Weight mu = parse_weight(job.with.empty() ? job.weight : job.with, R.rank);
    RenderContext ctx = R.render_context();
    json j{{"schema", kSchemaVersion}, {"system", R.name()}, {"lambda", l}, {"mu", mu}, {"kernel", job.kernel}};
    std::string text;
    if (job.kernel == "t") {
        CoeffFraction v = M.degenerate_pairing_t(M.E_tilde(l, Spec::qinf), M.E_tilde(mu, Spec::qinf));
        j["value"] = to_json(v);
        text = v.str(ctx);
    } else if (job.kernel == "q") {
        ParamPoly v = M.cherednik_pairing(M.E(l), M.E(mu), job.D);
        j["value"] = to_json(v);
        j["truncation"] = job.D;
        text = render_poly(v, ctx) + "  (mod " + render_monomial({-(job.D + 1), 0, 0}, ctx) + ")";
    } else {
        throw std::invalid_argument("unknown kernel '" + job.kernel + "'");
    }
    if (job.format == "json")
        print_json(out, j);
    else
        out << text << "\n";
    return 0;
}

int cmd_verify(const Job& job, std::ostream& out) {
    std::vector<std::string> suites = job.suites;
    if (suites.empty() || (suites.size() == 1 && suites[0] == "all")) suites = suite_names();
    for (const auto& s : suites)
        if (std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
            throw std::invalid_argument("unknown suite '" + s + "'");
    SuiteOptions opt;
    opt.radius = job.radius;
    opt.relation_radius = job.relation_radius;
    opt.truncation = job.D;
    if (job.progress) opt.log = [](const std::string& s) { std::cerr << "running " << s << "\n"; };
    std::vector<std::string> systems = job.systems;
    if (!job.system.empty()) systems.insert(systems.begin(), job.system);
    for (const auto& s : systems) build_root_system(s);  // reject bad names before any work

    Workbench wb;
    bool all_ok = true;
    json jr = json::array();
    for (const auto& s : suites) {
        SuiteResult r = run_suite(wb, s, systems.empty() ? default_systems(s) : systems, opt);
        all_ok = all_ok && r.ok();
        if (job.format == "json") {
            json sys = json::array();
            for (const auto& t : r.systems)
                sys.push_back(json{{"system", t.system},
                                   {"passed", t.passed},
                                   {"failed", t.failed},
                                   {"failures", t.failures},
                                   {"notes", t.notes}});
            jr.push_back(json{{"criterion", r.criterion}, {"suite", r.name}, {"ok", r.ok()}, {"systems", sys}});
            continue;
        }
        for (const auto& t : r.systems) {
            out << r.name << " " << t.system << ": " << t.passed << " passed, " << t.failed << " failed\n";
            for (const auto& f : t.failures) out << "  FAIL " << f << "\n";
            for (const auto& n : t.notes) out << "  note: " << n << "\n";
        }
        out << r.name << ": " << (r.ok() ? "PASS" : "FAIL") << " (" << r.passed() << " passed, " << r.failed()
            << " failed)\n";
    }
    if (job.format == "json") print_json(out, json{{"schema", kSchemaVersion}, {"radius", job.radius}, {"suites", jr}});
    return all_ok ? 0 : kExitSentinel;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonsymmetric Macdonald polynomials and parabolic Kazhdan-Lusztig bases"};
    app.require_subcommand(1);
    Job job;
    const std::vector<std::string> formats{"text", "json"};

    auto common = [&](CLI::App* c, bool weight) {
        c->add_option("--system", job.system, "root system, e.g. A2, G2")->required();
        if (weight) c->add_option("--weight", job.weight, "weight in fundamental-weight coordinates, e.g. 1,-2")->required();
        c->add_option("--format", job.format, "output format")->check(CLI::IsMember(formats));
    };

    CLI::App* info = app.add_subcommand("info", "root system data");
    common(info, false);

    CLI::App* e = app.add_subcommand("E", "nonsymmetric Macdonald polynomial");
    common(e, true);
    e->add_option("--spec", job.spec, "exact|qinf|q0|tinf|t0|inf_inf|zero_zero");
    e->add_flag("--tilde", job.tilde, "xi(ring-w)^{-1} E instead of E");
    e->add_flag("--normalized", job.normalized, "e_lambda E");
    e->add_option("--cache-dir", job.cache_dir, "read and write cached polynomials here");

    CLI::App* p = app.add_subcommand("P", "symmetric Macdonald polynomial (anti-dominant weight)");
    common(p, true);
    p->add_option("--spec", job.spec, "exact|qinf|q0|tinf|t0|inf_inf|zero_zero");
    p->add_flag("--normalized", job.normalized, "e_lambda P");

    CLI::App* sp = app.add_subcommand("spec", "all specializations of E");
    common(sp, true);
    sp->add_flag("--tilde", job.tilde, "specialize xi(ring-w)^{-1} E instead");

    CLI::App* kl = app.add_subcommand("kl", "parabolic Kazhdan-Lusztig polynomials below a weight");
    common(kl, true);
    kl->add_option("--mode", job.mode, "independent|equal (t_s = t_l)");
    kl->add_flag("--conjecture", job.conjecture, "report P(1) and coefficient signs");

    CLI::App* pr = app.add_subcommand("pair", "scalar products of two polynomials");
    common(pr, true);
    pr->add_option("--with", job.with, "second weight (default: --weight)");
    pr->add_option("--kernel", job.kernel, "t: degenerate pairing of E-tilde(inf,t); q: truncated q-pairing of E");
    pr->add_option("-D,--truncation", job.D, "keep q exponents >= -D/m*");

    CLI::App* v = app.add_subcommand("verify", "acceptance suites");
    v->add_option("--system", job.system, "restrict to one root system");
    v->add_option("--systems", job.systems, "restrict to several root systems");
    v->add_option("--suite", job.suites, "suite name or 'all'");
    v->add_option("--radius", job.radius, "weight box |coords| <= radius")->check(CLI::Range(0, 4));
    v->add_option("--relation-radius", job.relation_radius, "monomial box for the relation suite")->check(CLI::Range(0, 4));
    v->add_option("-D,--truncation", job.D, "q-pairing truncation");
    v->add_option("--format", job.format, "output format")->check(CLI::IsMember(formats));
    v->add_flag("--progress", job.progress, "print suite progress on stderr");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        int rc = app.exit(err);
        return rc == 0 ? 0 : kExitInvalid;
    }

    try {
        if (info->parsed()) return cmd_info(job, std::cout);
        if (e->parsed()) return cmd_E(job, std::cout);
        if (p->parsed()) return cmd_P(job, std::cout);
        if (sp->parsed()) return cmd_spec(job, std::cout);
        if (kl->parsed()) return cmd_kl(job, std::cout);
        if (pr->parsed()) return cmd_pair(job, std::cout);
        if (v->parsed()) return cmd_verify(job, std::cout);
    } catch (const PoleAtLimit& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitLimit;
    } catch (const TruncationTooSmall& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitLimit;
    } catch (const InternalSentinel& err) {
        std::cerr << "internal error: a computed object contradicts a proven identity\n  " << err.what()
                  << "\n  please report the command line above\n";
        return kExitSentinel;
    } catch (const RecursionFailure& err) {
        std::cerr << "error: " << err.what() << "\n  (independent t_s, t_l admit no degree-bounded solution here;"
                  << " try --mode equal)\n";
        return kExitSentinel;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInvalid;
    } catch (const std::out_of_range& err) {
        std::cerr << "error: " << err.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return kExitInvalid;
}
