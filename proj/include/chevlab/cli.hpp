#pragma once

#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "suite.hpp"

namespace chevlab {

enum class OutputFormat { json, tsv, human };

struct RunConfig {
    std::vector<std::string> claims;
    std::vector<std::string> phis;
    std::string ring;
    std::string ideal_i;
    std::string ideal_j;
    std::string suite = "default";
    std::string suite_file;
    std::size_t budget = default_budget;
    std::size_t ambient_budget = 1'000'000;
    bool deep = false;
    std::string cache_dir;
    OutputFormat format = OutputFormat::json;
    unsigned jobs = 1;
    bool strict = false;
    bool millis = true;
};

/// Thrown for configurations that cannot be run; maps to exit code 2.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The cases selected by a configuration.
inline std::vector<CaseSpec> select_cases(const RunConfig& cfg)
{
    if (cfg.budget < 1000)
        throw ConfigError("budget must be at least 1000");
    std::vector<Claim> claims;
    for (const auto& s : cfg.claims) {
        try {
            claims.push_back(parse_claim(s));
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    std::vector<RootKind> phis;
    for (const auto& s : cfg.phis) {
        auto k = parse_root_kind(s);
        if (!k)
            throw ConfigError("unknown root system '" + s + "'");
        phis.push_back(*k);
    }

    std::vector<CaseSpec> cases;
    if (!cfg.ring.empty()) {
        if (claims.empty() || phis.empty())
            throw ConfigError("--ring needs --claim and --phi");
        for (Claim c : claims)
            for (RootKind k : phis)
                cases.push_back({c, k, cfg.ring, cfg.ideal_i, cfg.ideal_j});
    } else {
        std::vector<CaseSpec> all;
        if (!cfg.suite_file.empty()) {
            try {
                all = load_suite(cfg.suite_file);
            } catch (const std::exception& e) {
                throw ConfigError(e.what());
            }
        } else if (cfg.suite == "default" || cfg.suite == "all") {
            all = default_suite();
        } else if (cfg.suite != "deep") {
            throw ConfigError("unknown suite '" + cfg.suite + "'");
        }
        if (cfg.deep || cfg.suite == "deep" || cfg.suite == "all") {
            const auto d = deep_suite();
            all.insert(all.end(), d.begin(), d.end());
        }
        auto wanted = [](const auto& list, auto v) {
            return list.empty() || std::find(list.begin(), list.end(), v) != list.end();
        };
        for (const auto& c : all)
            if (wanted(claims, c.claim) && wanted(phis, c.phi))
                cases.push_back(c);
    }
    for (const auto& c : cases) {
        try {
            Session::validate(c);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
    }
    return cases;
}

namespace detail {

inline std::string size_or_blank(const VerdictReport& r, const char* name)
{
    auto v = r.size(name);
    return v ? std::to_string(*v) : std::string{};
}

inline std::string ideal_text(const std::string& s) { return s.empty() ? "-" : "(" + s + ")"; }

inline void write_human(std::ostream& out, const VerdictReport& r)
{
    out << r.claim << "  " << r.phi << " over " << r.ring;
    if (!r.i.empty())
        out << "  I=" << ideal_text(r.i);
    if (!r.j.empty())
        out << "  J=" << ideal_text(r.j);
    out << "  : " << to_string(r.verdict);
    if (r.exploratory)
        out << " (exploratory, observed " << r.details.value("observed", std::string{"?"}) << ")";
    out << "\n";
    if (!r.reason.empty())
        out << "    reason: " << r.reason << "\n";
    for (const auto& [k, v] : r.sizes)
        out << "    |" << k << "| = " << v << "\n";
    if (r.details.contains("chain")) {
        const auto& chain = r.details["chain"];
        const auto sizes = [&](const std::string& name) -> std::string {
            static const std::vector<std::pair<std::string, std::string>> known = {
                {"E(R,IJ)", "E_IJ"}, {"[E(I),E(J)]", "D"}, {"[E(R,I),E(R,J)]", "M"}, {"[G(R,I),G(R,J)]", "GG"}};
            for (const auto& [label, key] : known)
                if (label == name)
                    if (auto v = r.size(key))
                        return "  (" + std::to_string(*v) + ")";
            return {};
        };
        out << "    " << chain[0]["sub"].get<std::string>() << sizes(chain[0]["sub"]) << "\n";
        for (const auto& link : chain) {
            out << "      <=   " << link["status"].get<std::string>() << ", " << link["method"].get<std::string>();
            if (!link["asserted"].get<bool>())
                out << ", not asserted";
            out << "\n";
            out << "    " << link["super"].get<std::string>() << sizes(link["super"]) << "\n";
        }
    }
    if (r.witness)
        out << "    witness: " << r.witness->description << " " << ordered_json(r.witness->matrix).dump() << "\n";
}

}  // namespace detail

inline void write_reports(std::ostream& out, const std::vector<VerdictReport>& reports, OutputFormat fmt,
                          bool with_millis)
{
    switch (fmt) {
    case OutputFormat::json:
        for (const auto& r : reports)
            out << r.to_json(with_millis).dump() << "\n";
        break;
    case OutputFormat::tsv:
        out << "claim\tphi\tring\ti\tj\tverdict\tsize_M\tsize_EIJ\tmillis\n";
        for (const auto& r : reports)
            out << r.claim << '\t' << r.phi << '\t' << r.ring << '\t' << r.i << '\t' << r.j << '\t'
                << to_string(r.verdict) << '\t' << detail::size_or_blank(r, "M") << '\t'
                << detail::size_or_blank(r, "E_IJ") << '\t' << (with_millis ? std::to_string(r.millis) : "")
                << "\n";
        break;
    case OutputFormat::human:
        for (const auto& r : reports)
            detail::write_human(out, r);
        break;
    }
}

/// 0 when nothing fails; skipped counts as failure under --strict, except
/// exploratory runs whose hypotheses do not hold.
inline int exit_code(const std::vector<VerdictReport>& reports, bool strict)
{
    for (const auto& r : reports) {
        if (r.verdict == Verdict::fails)
            return 1;
        if (strict && r.verdict == Verdict::skipped && !r.exploratory)
            return 1;
    }
    return 0;
}

inline int run(const RunConfig& cfg, std::ostream& out)
{
    const auto cases = select_cases(cfg);
    SessionOptions opts{cfg.budget, cfg.ambient_budget, cfg.cache_dir};
    Session session(opts);
    const auto reports = session.run_all(cases, cfg.jobs);
    write_reports(out, reports, cfg.format, cfg.millis);
    return exit_code(reports, cfg.strict);
}

namespace detail {

template <std::size_t N>
int print_gens(std::ostream& out, RootKind phi, const RingPtr& ring, const std::string& set, const std::string& is,
               const std::string& js)
{
    const auto rep = std::make_shared<const Representation<N>>(roots_of(phi), ring);
    const auto I = is.empty() ? IdealHandle::unit(ring) : IdealHandle::parse(ring, is);
    const auto J = js.empty() ? IdealHandle::unit(ring) : IdealHandle::parse(ring, js);
    GeneratorList<N> g;
    if (set == "E")
        g = generator_set_E(*rep, I);
    else if (set == "U")
        g = generator_set_U(*rep, I);
    else if (set == "Z")
        g = generator_set_Z(*rep, I);
    else if (set == "X")
        g = generator_set_X(*rep, I, J);
    else if (set == "Y")
        g = generator_set_Y(*rep, I, J);
    else if (set == "torus")
        g = generator_set_torus(*rep);
    else
        throw ConfigError("unknown generator set '" + set + "'");
    ordered_json o;
    o["set"] = set;
    o["phi"] = to_string(phi);
    o["ring"] = ring->name();
    o["count"] = g.size();
    ordered_json items = ordered_json::array();
    for (const auto& e : g.items()) {
        ordered_json labels = ordered_json::array();
        for (const auto& p : e.labels) {
            std::vector<int> params(p.params.begin(), p.params.end());
            labels.push_back({{"family", p.family}, {"root", rep->system().format(p.root)}, {"params", params}});
        }
        items.push_back({{"matrix", rep->arith().to_rows(e.m)}, {"labels", labels}});
    }
    o["elements"] = items;
    out << o.dump() << "\n";
    return 0;
}

template <std::size_t N>
int print_relations(std::ostream& out, RootKind phi, const RingPtr& ring)
{
    const Representation<N> rep(roots_of(phi), ring);
    const auto r = validate_relations(rep);
    out << r.to_json(false).dump() << "\n";
    return r.verdict == Verdict::holds ? 0 : 1;
}

template <std::size_t N>
int check_cache_file(std::ostream& out, RootKind phi, const RingPtr& ring, const std::string& path)
{
    const auto rep = std::make_shared<const Representation<N>>(roots_of(phi), ring);
    const auto s = load_members(rep, path);
    out << ordered_json{{"file", path}, {"members", s.size()}}.dump() << "\n";
    return 0;
}

inline RootKind kind_or_throw(const std::string& s)
{
    auto k = parse_root_kind(s);
    if (!k)
        throw ConfigError("unknown root system '" + s + "'");
    return *k;
}

template <class F>
int with_dim(RootKind phi, F&& f)
{
    switch (dim_of(phi)) {
    case 3: return f(std::integral_constant<std::size_t, 3>{});
    case 4: return f(std::integral_constant<std::size_t, 4>{});
    default: return f(std::integral_constant<std::size_t, 7>{});
    }
}

}  // namespace detail

inline int print_constants(std::ostream& out, RootKind phi)
{
    const auto sys = roots_of(phi);
    out << "alpha\tbeta\ti\tj\tN\n";
    for (std::size_t a = 0; a < sys->size(); ++a)
        for (std::size_t b = 0; b < sys->size(); ++b) {
            if (a == b || sys->negative_of(a) == b)
                continue;
            for (const auto& t : sys->commutator_terms(a, b))
                out << sys->format(a) << '\t' << sys->format(b) << '\t' << t.i << '\t' << t.j << '\t' << t.constant
                    << "\n";
        }
    return 0;
}

inline int print_ideals(std::ostream& out, const RingPtr& ring)
{
    ordered_json o;
    o["ring"] = ring->name();
    o["size"] = ring->size();
    ordered_json list = ordered_json::array();
    for (const auto& I : ideals_of(ring))
        list.push_back({{"ideal", I.label()}, {"size", I.size()}});
    o["ideals"] = list;
    ordered_json maxl = ordered_json::array();
    for (const auto& m : maximal_ideals(ring))
        maxl.push_back(m.label());
    o["maximal"] = maxl;
    o["hypotheses"] = to_json(hypotheses_of(ring));
    out << o.dump() << "\n";
    return 0;
}

/// Entry point of the chevlab tool. Exit codes: 0 success, 1 a case
/// failed, 2 invalid invocation.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Elementary Chevalley groups over finite rings: exhaustive verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("CHEVLAB_CACHE"))
        cfg.cache_dir = env;
    std::string format = "json";
    bool no_millis = false;
    auto* verify = app.add_subcommand("verify", "run verification cases");
    verify->add_option("--claim", cfg.claims, "claim filter (T1 T2 T3 T4 L2 L3 L5 COR1 COR2 T5 STRICTNESS L7 IDENTITIES)");
    verify->add_option("--phi", cfg.phis, "root system filter (A2 A3 C2 G2)");
    verify->add_option("--ring", cfg.ring, "ring, e.g. Z/8 or F3[t]/t2; selects a single case");
    verify->add_option("--ideal-i", cfg.ideal_i, "generator of I");
    verify->add_option("--ideal-j", cfg.ideal_j, "generator of J");
    verify->add_option("--suite", cfg.suite, "default, deep or all");
    verify->add_option("--suite-file", cfg.suite_file, "JSON case table");
    verify->add_flag("--deep", cfg.deep, "include the deep cases");
    verify->add_option("--budget", cfg.budget, "maximum subgroup size");
    verify->add_option("--ambient-budget", cfg.ambient_budget, "maximum size of an enumerated ambient group");
    verify->add_option("--cache-dir", cfg.cache_dir, "directory for cached member sets");
    verify->add_option("--format", format, "json, tsv or human");
    verify->add_option("--jobs", cfg.jobs, "parallel cases");
    verify->add_flag("--strict", cfg.strict, "treat skipped cases as failures");
    verify->add_flag("--no-millis", no_millis, "omit timings");

    std::string phi_s, ring_s, set_s, i_s, j_s, file_s;
    auto* relations = app.add_subcommand("relations", "check (R1) and (R2) exhaustively");
    relations->add_option("--phi", phi_s)->required();
    relations->add_option("--ring", ring_s)->required();
    auto* constants = app.add_subcommand("constants", "structure constants as TSV");
    constants->add_option("--phi", phi_s)->required();
    auto* gens = app.add_subcommand("gens", "dump a generator set");
    gens->add_option("--set", set_s, "E, U, Z, X, Y or torus")->required();
    gens->add_option("--phi", phi_s)->required();
    gens->add_option("--ring", ring_s)->required();
    gens->add_option("--ideal-i", i_s);
    gens->add_option("--ideal-j", j_s);
    auto* ideals = app.add_subcommand("ideals", "ideal lattice and side conditions");
    ideals->add_option("--ring", ring_s)->required();
    auto* cache = app.add_subcommand("cache-check", "load a cached member set");
    cache->add_option("--file", file_s)->required();
    cache->add_option("--phi", phi_s)->required();
    cache->add_option("--ring", ring_s)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*verify) {
            if (format == "json")
                cfg.format = OutputFormat::json;
            else if (format == "tsv")
                cfg.format = OutputFormat::tsv;
            else if (format == "human")
                cfg.format = OutputFormat::human;
            else
                throw ConfigError("unknown format '" + format + "'");
            cfg.millis = !no_millis;
            return run(cfg, out);
        }
        if (*constants)
            return print_constants(out, detail::kind_or_throw(phi_s));
        const auto phi = *relations || *gens || *cache ? detail::kind_or_throw(phi_s) : RootKind::A2;
        RingPtr ring;
        try {
            ring = FiniteRing::parse(ring_s);
        } catch (const std::invalid_argument& e) {
            throw ConfigError(e.what());
        }
        if (*ideals)
            return print_ideals(out, ring);
        if (*relations)
            return detail::with_dim(phi, [&](auto n) { return detail::print_relations<decltype(n)::value>(out, phi, ring); });
        if (*gens)
            return detail::with_dim(
                phi, [&](auto n) { return detail::print_gens<decltype(n)::value>(out, phi, ring, set_s, i_s, j_s); });
        if (*cache)
            return detail::with_dim(
                phi, [&](auto n) { return detail::check_cache_file<decltype(n)::value>(out, phi, ring, file_s); });
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CorruptCache& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace chevlab
