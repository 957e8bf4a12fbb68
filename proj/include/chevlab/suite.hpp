#pragma once

#include <atomic>
#include <fstream>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "theorems.hpp"

namespace chevlab {

/// One row of a case table.
struct CaseSpec {
    Claim claim;
    RootKind phi;
    std::string ring;
    std::string i;
    std::string j;
    bool degenerate = false;
};

inline ordered_json to_json(const CaseSpec& c)
{
    return {{"claim", to_string(c.claim)}, {"phi", to_string(c.phi)}, {"ring", c.ring},
            {"i", c.i},                    {"j", c.j},                  {"degenerate", c.degenerate}};
}

inline CaseSpec case_from_json(const ordered_json& o)
{
    CaseSpec c{parse_claim(o.at("claim").get<std::string>()), RootKind::A2, o.at("ring").get<std::string>(),
               o.value("i", std::string{}), o.value("j", std::string{}), o.value("degenerate", false)};
    const auto phi = parse_root_kind(o.at("phi").get<std::string>());
    if (!phi)
        throw std::invalid_argument("unknown root system '" + o.at("phi").get<std::string>() + "'");
    c.phi = *phi;
    return c;
}

/// Reads a JSON array of {claim, phi, ring, i, j} objects.
inline std::vector<CaseSpec> load_suite(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw std::invalid_argument("cannot read suite file " + path);
    const auto doc = ordered_json::parse(f);
    if (!doc.is_array())
        throw std::invalid_argument("suite file must hold a JSON array");
    std::vector<CaseSpec> out;
    for (const auto& o : doc)
        out.push_back(case_from_json(o));
    return out;
}

/// Built-in cases: at least three non-degenerate rows and one degenerate row per claim.
inline std::vector<CaseSpec> default_suite()
{
    using enum Claim;
    constexpr auto A2 = RootKind::A2, A3 = RootKind::A3, C2 = RootKind::C2, G2 = RootKind::G2;
    std::vector<CaseSpec> s = {
        {T1, A2, "Z/4", "2", ""},     {T1, A2, "Z/8", "2", ""},     {T1, A2, "Z/8", "4", ""},
        {T1, A2, "Z/9", "3", ""},     {T1, C2, "Z/9", "3", ""},     {T1, A3, "Z/4", "2", ""},
        {T1, G2, "Z/4", "2", ""},     {T1, A2, "Z/8", "0", "", true}, {T1, A2, "Z/4", "1", "", true},
    };
    const std::vector<CaseSpec> mixed_rows = {
        {T2, A2, "Z/8", "2", "2"},   {T2, A2, "Z/16", "2", "2"},  {T2, A2, "Z/16", "2", "4"},
        {T2, C2, "Z/27", "3", "3"},  {T2, C2, "Z/27", "3", "9"},  {T2, A3, "Z/4", "2", "2"},
        {T2, A2, "Z/4", "2", "2", true}, {T2, A2, "F3[t]/t2", "t", "t", true},
    };
    for (Claim c : {T2, T3, T4, Cor1, Cor2})
        for (auto row : mixed_rows) {
            row.claim = c;
            s.push_back(row);
        }
    s.push_back({T4, C2, "Z/4", "2", "2"});
    const std::vector<CaseSpec> rest = {
        {L2, A2, "Z/4", "2", ""},    {L2, A2, "Z/8", "2", ""},    {L2, A2, "Z/8", "4", ""},
        {L2, C2, "Z/9", "3", ""},    {L2, A2, "Z/8", "0", "", true},
        {L3, A2, "Z/8", "2", "4"},   {L3, A2, "Z/8", "2", "2"},   {L3, A2, "Z/9", "3", "3"},
        {L3, C2, "Z/9", "3", "3"},   {L3, A2, "Z/8", "2", "1"},   {L3, A2, "Z/8", "0", "2", true},
        {L5, A2, "Z/8", "2", ""},    {L5, A2, "Z/9", "3", ""},    {L5, C2, "Z/9", "3", ""},
        {L5, G2, "Z/4", "2", ""},    {L5, A3, "Z/4", "2", ""},    {L5, A2, "Z/8", "0", "", true},
        {T5, A2, "Z/4", "2", "2"},   {T5, A2, "Z/6", "2", "3"},   {T5, A2, "Z/4", "2", "1"},
        {T5, C2, "Z/3", "1", "1"},   {T5, A2, "Z/4", "0", "2", true},
        {Strictness, A2, "Z/6", "2", "3"},  {Strictness, A2, "Z/12", "3", "4"},
        {Strictness, A2, "Z/12", "2", "3"}, {Strictness, A2, "Z/15", "3", "5"},
        {Strictness, A2, "Z/8", "2", "2"},  {Strictness, A2, "Z/8", "0", "2", true},
        {L7, A2, "Z/8", "", ""},     {L7, C2, "Z/8", "", ""},     {L7, G2, "Z/8", "", ""},
        {L7, A3, "Z/2", "", "", true},
        {Identities, A2, "Z/8", "", ""}, {Identities, C2, "Z/9", "", ""}, {Identities, G2, "Z/4", "", ""},
        {Identities, A3, "Z/4", "", ""}, {Identities, A2, "Z/2", "", "", true},
    };
    s.insert(s.end(), rest.begin(), rest.end());
    return s;
}

/// Cases too expensive for the default run: G2 over Z/27.
inline std::vector<CaseSpec> deep_suite()
{
    std::vector<CaseSpec> s;
    for (Claim c : {Claim::T2, Claim::T3, Claim::T4, Claim::Cor1, Claim::Cor2})
        s.push_back({c, RootKind::G2, "Z/27", "3", "3"});
    return s;
}

struct SessionOptions {
    std::size_t budget = default_budget;
    std::size_t ambient_budget = 1'000'000;
    std::string cache_dir;
};

/// Runs cases, sharing one workspace per (root system, ring).
class Session {
public:
    explicit Session(SessionOptions opts = {}) : opts_(std::move(opts)) {}

    VerdictReport run(const CaseSpec& c)
    {
        switch (dim_of(c.phi)) {
        case 3: return run_in(workspace<3>(c), c);
        case 4: return run_in(workspace<4>(c), c);
        case 7: return run_in(workspace<7>(c), c);
        }
        throw std::logic_error("Session: unsupported dimension");
    }

    /// Reports in case order; `jobs` worker threads.
    std::vector<VerdictReport> run_all(const std::vector<CaseSpec>& cases, unsigned jobs = 1)
    {
        for (const auto& c : cases)
            validate(c);
        std::vector<VerdictReport> out(cases.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t k; (k = next.fetch_add(1)) < cases.size();)
                out[k] = run(cases[k]);
        };
        jobs = std::max(1u, jobs);
        if (jobs == 1) {
            worker();
            return out;
        }
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t)
            pool.emplace_back(worker);
        for (auto& t : pool)
            t.join();
        return out;
    }

    /// Parses ring and ideals; invalid_argument on bad input.
    static void validate(const CaseSpec& c)
    {
        const auto ring = FiniteRing::parse(c.ring);
        const int arity = claim_arity(c.claim);
        if (arity >= 1)
            IdealHandle::parse(ring, c.i);
        if (arity >= 2)
            IdealHandle::parse(ring, c.j);
    }

private:
    template <std::size_t N>
    using WsPtr = std::shared_ptr<Workspace<N>>;
    using AnyWs = std::variant<WsPtr<3>, WsPtr<4>, WsPtr<7>>;

    template <std::size_t N>
    WsPtr<N> workspace(const CaseSpec& c)
    {
        const auto ring = FiniteRing::parse(c.ring);
        const std::string key = std::string(to_string(c.phi)) + " " + ring->name();
        std::lock_guard lock(mutex_);
        if (auto it = spaces_.find(key); it != spaces_.end())
            return std::get<WsPtr<N>>(it->second);
        auto rep = std::make_shared<const Representation<N>>(roots_of(c.phi), ring);
        auto ws = std::make_shared<Workspace<N>>(rep, opts_.budget, opts_.cache_dir, opts_.ambient_budget);
        spaces_.emplace(key, ws);
        return ws;
    }

    template <std::size_t N>
    VerdictReport run_in(const WsPtr<N>& ws, const CaseSpec& c)
    {
        const auto& ring = ws->ring();
        const int arity = claim_arity(c.claim);
        const auto I = arity >= 1 ? IdealHandle::parse(ring, c.i) : ws->zero();
        const auto J = arity >= 2 ? IdealHandle::parse(ring, c.j) : ws->zero();
        return run_claim(*ws, c.claim, I, J);
    }

    SessionOptions opts_;
    std::mutex mutex_;
    std::map<std::string, AnyWs> spaces_;
};

}  // namespace chevlab
