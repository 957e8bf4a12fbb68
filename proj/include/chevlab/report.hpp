#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace chevlab {

using ordered_json = nlohmann::ordered_json;

enum class Verdict { holds, fails, skipped };

inline const char* to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::skipped: return "skipped";
    }
    return "?";
}

/// A matrix that separates two sets, plus what it was supposed to satisfy.
struct Witness {
    std::string description;
    std::vector<std::vector<int>> matrix;
};

/// Outcome of one verification. A fails verdict always carries a witness.
struct VerdictReport {
    std::string claim;
    std::string phi;
    std::string ring;
    std::string i;
    std::string j;
    Verdict verdict = Verdict::skipped;
    bool exploratory = false;
    std::string reason;
    std::vector<std::pair<std::string, std::uint64_t>> sizes;
    ordered_json details = ordered_json::object();
    std::optional<Witness> witness;
    std::int64_t millis = 0;

    void set_size(const std::string& name, std::uint64_t v)
    {
        for (auto& [k, old] : sizes)
            if (k == name) {
                old = v;
                return;
            }
        sizes.emplace_back(name, v);
    }

    std::optional<std::uint64_t> size(const std::string& name) const
    {
        for (const auto& [k, v] : sizes)
            if (k == name)
                return v;
        return std::nullopt;
    }

    void fail(std::string description, std::vector<std::vector<int>> matrix)
    {
        verdict = Verdict::fails;
        witness = Witness{std::move(description), std::move(matrix)};
    }

    ordered_json to_json(bool with_millis = true) const
    {
        ordered_json o;
        o["claim"] = claim;
        o["phi"] = phi;
        o["ring"] = ring;
        o["i"] = i;
        o["j"] = j;
        o["verdict"] = to_string(verdict);
        if (exploratory)
            o["exploratory"] = true;
        if (!reason.empty())
            o["reason"] = reason;
        ordered_json s = ordered_json::object();
        for (const auto& [k, v] : sizes)
            s[k] = v;
        o["sizes"] = s;
        if (!details.empty())
            o["details"] = details;
        if (witness) {
            o["witness"] = {{"description", witness->description}, {"matrix", witness->matrix}};
        }
        if (with_millis)
            o["millis"] = millis;
        return o;
    }
};

}  // namespace chevlab
