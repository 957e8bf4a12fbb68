#pragma once

#include <cctype>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "engine.hpp"

namespace chevlab {

/// Subgroups of one Chevalley group E(phi, R), computed on demand and shared
/// between verifications. Each key is computed at most once per workspace;
/// with a cache directory, member sets also persist between runs.
template <std::size_t N>
class Workspace {
public:
    using SetPtr = std::shared_ptr<const SubgroupSet<N>>;

    explicit Workspace(RepPtr<N> rep, std::size_t budget = default_budget, std::string cache_dir = {},
                       std::size_t ambient_budget = 1'000'000)
        : rep_(std::move(rep)), budget_(budget), ambient_budget_(ambient_budget), cache_dir_(std::move(cache_dir))
    {
        elementary_ = generator_set_E(*rep_, unit()).matrices();
    }

    const Representation<N>& rep() const { return *rep_; }
    const RepPtr<N>& rep_ptr() const { return rep_; }
    const RingPtr& ring() const { return rep_->ring(); }
    std::size_t budget() const { return budget_; }
    std::size_t ambient_budget() const { return ambient_budget_; }
    IdealHandle unit() const { return IdealHandle::unit(ring()); }
    IdealHandle zero() const { return IdealHandle::zero(ring()); }

    /// x_a(s) for every root a and every s in R.
    const std::vector<Mat<N>>& elementary_gens() const { return elementary_; }
    std::vector<Mat<N>> x_gens(const IdealHandle& I) const { return generator_set_E(*rep_, I).matrices(); }
    std::vector<Mat<N>> z_gens(const IdealHandle& I) const { return generator_set_Z(*rep_, I).matrices(); }

    SetPtr get(const std::string& key, const std::function<SubgroupSet<N>()>& make)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = sets_.find(key); it != sets_.end())
                return it->second;
        }
        SetPtr s;
        const std::string path = cache_path(key);
        if (!path.empty() && std::filesystem::exists(path)) {
            try {
                s = std::make_shared<const SubgroupSet<N>>(load_members(rep_, path, key));
            } catch (const CorruptCache&) {
                s.reset();
            }
        }
        if (!s) {
            s = std::make_shared<const SubgroupSet<N>>(make());
            if (!path.empty())
                dump_members(*s, path);
        }
        std::lock_guard lock(mutex_);
        return sets_.emplace(key, s).first->second;
    }

    /// E(phi, R, I): normal closure of {x_a(s) : s in I} under E(phi, R).
    SetPtr relative(const IdealHandle& I)
    {
        return get("Erel_" + tag(I), [&] {
            return normal_closure(rep_, x_gens(I), elementary_, budget_, "E(R," + I.label() + ")");
        });
    }

    /// <z_a(s, t) : s in I, t in R>.
    SetPtr z_closure(const IdealHandle& I)
    {
        return get("Z_" + tag(I), [&] { return closure(rep_, z_gens(I), budget_, "<Z(" + I.label() + ")>"); });
    }

    /// E(phi, I) = <x_a(s) : s in I>.
    SetPtr plain(const IdealHandle& I)
    {
        return get("E_" + tag(I), [&] { return closure(rep_, x_gens(I), budget_, "E(" + I.label() + ")"); });
    }

    /// [E(phi, R, I), E(phi, R, J)], from the z-generators of both factors.
    SetPtr mixed(const IdealHandle& I, const IdealHandle& J)
    {
        return get("M_" + tag(I) + "_" + tag(J), [&] {
            const auto zi = z_gens(I);
            const auto zj = z_gens(J);
            return commutator_subgroup(rep_, zi, zj, concat(zi, zj), budget_,
                                       "[E(R," + I.label() + "),E(R," + J.label() + ")]");
        });
    }

    /// <X(I, J)> normalised by E(phi, R).
    SetPtr x_normal(const IdealHandle& I, const IdealHandle& J)
    {
        return get("X_" + tag(I) + "_" + tag(J), [&] {
            return normal_closure(rep_, generator_set_X(*rep_, I, J).matrices(), elementary_, budget_,
                                  "<X>^E");
        });
    }

    /// <Y(I, J)>.
    SetPtr y_closure(const IdealHandle& I, const IdealHandle& J)
    {
        return get("Y_" + tag(I) + "_" + tag(J), [&] {
            return closure(rep_, generator_set_Y(*rep_, I, J).matrices(), budget_, "<Y>");
        });
    }

    /// [E(phi, I), E(phi, J)].
    SetPtr plain_mixed(const IdealHandle& I, const IdealHandle& J)
    {
        return get("D_" + tag(I) + "_" + tag(J), [&] {
            const auto xi = x_gens(I);
            const auto xj = x_gens(J);
            return commutator_subgroup(rep_, xi, xj, concat(xi, xj), budget_,
                                       "[E(" + I.label() + "),E(" + J.label() + ")]");
        });
    }

    /// G(phi, R) = <x_a(s), h_a(u)>, or null when larger than the ambient budget.
    SetPtr ambient()
    {
        {
            std::lock_guard lock(mutex_);
            if (ambient_too_large_)
                return nullptr;
        }
        try {
            return get("G", [&] {
                return closure(rep_, concat(elementary_, generator_set_torus(*rep_).matrices()), ambient_budget_,
                               "G(R)");
            });
        } catch (const BudgetExceeded&) {
            std::lock_guard lock(mutex_);
            ambient_too_large_ = true;
            return nullptr;
        }
    }

    /// E(phi, R), or null when larger than the ambient budget.
    SetPtr elementary()
    {
        try {
            return get("Eabs", [&] { return closure(rep_, elementary_, ambient_budget_, "E(R)"); });
        } catch (const BudgetExceeded&) {
            return nullptr;
        }
    }

private:
    static std::string tag(const IdealHandle& I)
    {
        std::ostringstream os;
        os << std::hex << I.mask();
        return os.str();
    }

    std::string cache_path(const std::string& key) const
    {
        if (cache_dir_.empty())
            return {};
        std::string name = std::string(to_string(rep_->system().kind())) + "_" + rep_->ring()->name() + "_" + key;
        for (auto& c : name)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                c = '-';
        std::filesystem::create_directories(cache_dir_);
        return (std::filesystem::path(cache_dir_) / (name + ".chvl")).string();
    }

    RepPtr<N> rep_;
    std::size_t budget_;
    std::size_t ambient_budget_;
    std::string cache_dir_;
    std::vector<Mat<N>> elementary_;
    std::mutex mutex_;
    std::map<std::string, SetPtr> sets_;
    bool ambient_too_large_ = false;
};

}  // namespace chevlab
