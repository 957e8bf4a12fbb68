#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "matrix.hpp"

namespace chevlab {

/// Insertion-ordered hash set of matrices: a flat element array plus an
/// open-addressing index of 32-bit slots (0 = empty, k+1 = element k).
template <std::size_t N>
class MemberSet {
public:
    MemberSet() { rehash(64); }

    std::size_t size() const { return elems_.size(); }
    const Mat<N>& operator[](std::size_t k) const { return elems_[k]; }
    const std::vector<Mat<N>>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    std::optional<std::size_t> find(const Mat<N>& m) const
    {
        std::size_t pos = static_cast<std::size_t>(m.hash()) & mask_;
        for (;;) {
            const std::uint32_t s = slots_[pos];
            if (s == 0)
                return std::nullopt;
            if (elems_[s - 1] == m)
                return s - 1;
            pos = (pos + 1) & mask_;
        }
    }

    bool contains(const Mat<N>& m) const { return find(m).has_value(); }

    bool insert(const Mat<N>& m)
    {
        if (2 * (elems_.size() + 1) > slots_.size())
            rehash(slots_.size() * 2);
        std::size_t pos = static_cast<std::size_t>(m.hash()) & mask_;
        for (;;) {
            const std::uint32_t s = slots_[pos];
            if (s == 0)
                break;
            if (elems_[s - 1] == m)
                return false;
            pos = (pos + 1) & mask_;
        }
        elems_.push_back(m);
        slots_[pos] = static_cast<std::uint32_t>(elems_.size());
        return true;
    }

    void reserve(std::size_t n)
    {
        elems_.reserve(n);
        std::size_t cap = slots_.size();
        while (cap < 2 * n)
            cap *= 2;
        if (cap != slots_.size())
            rehash(cap);
    }

private:
    void rehash(std::size_t cap)
    {
        slots_.assign(cap, 0);
        mask_ = cap - 1;
        for (std::size_t k = 0; k < elems_.size(); ++k) {
            std::size_t pos = static_cast<std::size_t>(elems_[k].hash()) & mask_;
            while (slots_[pos] != 0)
                pos = (pos + 1) & mask_;
            slots_[pos] = static_cast<std::uint32_t>(k + 1);
        }
    }

    std::vector<Mat<N>> elems_;
    std::vector<std::uint32_t> slots_;
    std::size_t mask_ = 0;
};

}  // namespace chevlab
