#pragma once

// Frozen integer root-vector matrices for the representations used
// throughout: SL_{l+1} for A_l, Sp_4 for C2 and the 7-dimensional
// representation of G2. x_a(t) = exp(t * E_a). Structure constants and
// all relation checks are derived from these matrices.

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "int_matrix.hpp"
#include "kinds.hpp"

namespace chevlab {

inline constexpr int rep_data_version = 1;

using Coords = std::array<int, 3>;

namespace detail {

struct Entry {
    int row;  // 1-based
    int col;
    int value;
};

struct RootMatrixData {
    Coords coords;
    std::vector<Entry> entries;
};

// Sp_4 preserving the form with J(1,4) = J(2,3) = 1, J(3,2) = J(4,1) = -1.
// Basis weights e1, e2, -e2, -e1; a1 = e1 - e2 (short), a2 = 2 e2 (long).
inline const std::vector<RootMatrixData>& c2_data()
{
    static const std::vector<RootMatrixData> d{
        {{1, 0, 0}, {{1, 2, 1}, {3, 4, -1}}},
        {{0, 1, 0}, {{2, 3, 1}}},
        {{1, 1, 0}, {{1, 3, 1}, {2, 4, 1}}},
        {{2, 1, 0}, {{1, 4, 1}}},
        {{-1, 0, 0}, {{2, 1, 1}, {4, 3, -1}}},
        {{0, -1, 0}, {{3, 2, 1}}},
        {{-1, -1, 0}, {{3, 1, 1}, {4, 2, 1}}},
        {{-2, -1, 0}, {{4, 1, 1}}},
    };
    return d;
}

// G2, a1 short, a2 long. Basis weights
// 2a1+a2, a1+a2, a1, 0, -a1, -a1-a2, -2a1-a2.
inline const std::vector<RootMatrixData>& g2_data()
{
    static const std::vector<RootMatrixData> d{
        {{1, 0, 0}, {{1, 2, 1}, {3, 4, 1}, {4, 5, 2}, {6, 7, 1}}},
        {{0, 1, 0}, {{2, 3, 1}, {5, 6, 1}}},
        {{1, 1, 0}, {{1, 3, 1}, {2, 4, -1}, {4, 6, 2}, {5, 7, -1}}},
        {{2, 1, 0}, {{1, 4, -1}, {2, 5, 1}, {3, 6, 1}, {4, 7, -2}}},
        {{3, 1, 0}, {{1, 5, 1}, {3, 7, -1}}},
        {{3, 2, 0}, {{1, 6, -1}, {2, 7, -1}}},
        {{-1, 0, 0}, {{2, 1, 1}, {4, 3, 2}, {5, 4, 1}, {7, 6, 1}}},
        {{0, -1, 0}, {{3, 2, 1}, {6, 5, 1}}},
        {{-1, -1, 0}, {{3, 1, 1}, {4, 2, -2}, {6, 4, 1}, {7, 5, -1}}},
        {{-2, -1, 0}, {{4, 1, -2}, {5, 2, 1}, {6, 3, 1}, {7, 4, -1}}},
        {{-3, -1, 0}, {{5, 1, 1}, {7, 3, -1}}},
        {{-3, -2, 0}, {{6, 1, -1}, {7, 2, -1}}},
    };
    return d;
}

inline IntMatrix from_entries(int dim, const std::vector<Entry>& es)
{
    IntMatrix m(static_cast<std::size_t>(dim));
    for (const auto& e : es)
        m(static_cast<std::size_t>(e.row - 1), static_cast<std::size_t>(e.col - 1)) = e.value;
    return m;
}

}  // namespace detail

// Nilpotent matrix E_a for the root with the given coordinates in the
// basis of simple roots.
inline IntMatrix root_vector_matrix(RootKind kind, const Coords& c)
{
    const int dim = dim_of(kind);
    switch (kind) {
    case RootKind::A2:
    case RootKind::A3: {
        // e_i - e_j = a_i + ... + a_{j-1}; E_ij for i < j, E_ji for the negative.
        const int l = rank_of(kind);
        int first = -1, last = -1, sign = 0;
        for (int k = 0; k < l; ++k) {
            if (c[k] == 0)
                continue;
            if (c[k] != 1 && c[k] != -1)
                throw std::domain_error("root_vector_matrix: not a root of A_l");
            if (sign != 0 && c[k] != sign)
                throw std::domain_error("root_vector_matrix: not a root of A_l");
            sign = c[k];
            if (first < 0)
                first = k;
            else if (k != last + 1)
                throw std::domain_error("root_vector_matrix: not a root of A_l");
            last = k;
        }
        if (sign == 0)
            throw std::domain_error("root_vector_matrix: zero vector");
        IntMatrix m(static_cast<std::size_t>(dim));
        const auto i = static_cast<std::size_t>(first);
        const auto j = static_cast<std::size_t>(last + 1);
        if (sign > 0)
            m(i, j) = 1;
        else
            m(j, i) = 1;
        return m;
    }
    case RootKind::C2:
    case RootKind::G2: {
        const auto& data = kind == RootKind::C2 ? detail::c2_data() : detail::g2_data();
        for (const auto& d : data)
            if (d.coords == c)
                return detail::from_entries(dim, d.entries);
        throw std::domain_error("root_vector_matrix: not a root");
    }
    }
    throw std::logic_error("root_vector_matrix: bad kind");
}

}  // namespace chevlab
