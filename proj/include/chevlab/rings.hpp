#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace chevlab {

using Elem = std::uint8_t;

/// Finite commutative ring with 1 and at most 64 elements. Elements are the
/// residues 0..size-1. For Z/n the residue is the element itself; for
/// F_p[t]/(t^2) the element a + b t is stored as a + p b.
class FiniteRing {
public:
    enum class Kind { Zmod, Dual };

    static std::shared_ptr<const FiniteRing> zmod(int n)
    {
        if (n < 1 || n > 64)
            throw std::domain_error("Z/n: n must lie in 1..64");
        return std::shared_ptr<const FiniteRing>(new FiniteRing(Kind::Zmod, n, 0));
    }

    static std::shared_ptr<const FiniteRing> dual(int p)
    {
        if (p < 2 || p > 7 || !is_prime(p))
            throw std::domain_error("F_p[t]/(t^2): p must be a prime <= 7");
        return std::shared_ptr<const FiniteRing>(new FiniteRing(Kind::Dual, p * p, p));
    }

    /// "Z/8", "Z8", "F3[t]/t2", "F3[t]/(t^2)".
    static std::shared_ptr<const FiniteRing> parse(const std::string& s)
    {
        auto digits = [](const std::string& t) {
            return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
        };
        if (s.rfind("Z/", 0) == 0 && digits(s.substr(2)))
            return zmod(std::stoi(s.substr(2)));
        if (s.size() > 1 && s[0] == 'Z' && digits(s.substr(1)))
            return zmod(std::stoi(s.substr(1)));
        if (s.size() > 1 && s[0] == 'F') {
            auto br = s.find('[');
            if (br != std::string::npos && digits(s.substr(1, br - 1))) {
                auto rest = s.substr(br);
                if (rest == "[t]/t2" || rest == "[t]/(t^2)" || rest == "[t]/(t2)")
                    return dual(std::stoi(s.substr(1, br - 1)));
            }
        }
        throw std::invalid_argument("unrecognised ring '" + s + "'");
    }

    Kind kind() const { return kind_; }
    int size() const { return size_; }
    /// n for Z/n, 0 for the dual numbers.
    int modulus() const { return kind_ == Kind::Zmod ? size_ : 0; }
    int characteristic() const { return kind_ == Kind::Zmod ? size_ : p_; }
    const std::string& name() const { return name_; }

    Elem zero() const { return 0; }
    Elem one() const { return size_ == 1 ? 0 : 1; }
    Elem add(Elem a, Elem b) const { return add_[idx(a, b)]; }
    Elem mul(Elem a, Elem b) const { return mul_[idx(a, b)]; }
    Elem neg(Elem a) const { return neg_[a]; }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }

    Elem from_int(long long k) const
    {
        const long long c = characteristic();
        long long r = k % c;
        if (r < 0)
            r += c;
        return static_cast<Elem>(r);  // k * 1 has no t-component
    }

    Elem pow(Elem a, int k) const
    {
        Elem r = one();
        for (int i = 0; i < k; ++i)
            r = mul(r, a);
        return r;
    }

    std::optional<Elem> inverse(Elem a) const
    {
        if (inv_[a] == no_inverse)
            return std::nullopt;
        return inv_[a];
    }
    bool is_unit(Elem a) const { return inv_[a] != no_inverse; }

    std::vector<Elem> elements() const
    {
        std::vector<Elem> v(static_cast<std::size_t>(size_));
        std::iota(v.begin(), v.end(), Elem{0});
        return v;
    }

    std::vector<Elem> units() const
    {
        std::vector<Elem> v;
        for (int a = 0; a < size_; ++a)
            if (is_unit(static_cast<Elem>(a)))
                v.push_back(static_cast<Elem>(a));
        return v;
    }

    std::string format(Elem a) const
    {
        if (kind_ == Kind::Zmod)
            return std::to_string(a);
        const int x = a % p_, y = a / p_;
        if (y == 0)
            return std::to_string(x);
        std::string t = (y == 1 ? std::string("t") : std::to_string(y) + "t");
        return x == 0 ? t : std::to_string(x) + "+" + t;
    }

    /// Inverse of format(); also accepts negative integers for Z/n.
    Elem parse_element(const std::string& s) const
    {
        try {
            if (kind_ == Kind::Zmod) {
                std::size_t used = 0;
                const long long v = std::stoll(s, &used);
                if (used != s.size())
                    throw std::invalid_argument(s);
                return from_int(v);
            }
            for (int a = 0; a < size_; ++a)
                if (format(static_cast<Elem>(a)) == s)
                    return static_cast<Elem>(a);
        } catch (const std::logic_error&) {
        }
        throw std::invalid_argument("'" + s + "' is not an element of " + name_);
    }

    /// Bitmask of the principal ideal aR.
    std::uint64_t principal_mask(Elem a) const { return principal_[a]; }

    /// Smallest ideal containing both ideals (given as element masks).
    std::uint64_t ideal_join(std::uint64_t x, std::uint64_t y) const
    {
        std::uint64_t m = x | y | 1u;
        for (;;) {
            std::uint64_t next = m;
            for (int a = 0; a < size_; ++a) {
                if (!(m >> a & 1u))
                    continue;
                for (int b = 0; b < size_; ++b)
                    if (m >> b & 1u)
                        next |= std::uint64_t{1} << add(static_cast<Elem>(a), static_cast<Elem>(b));
            }
            if (next == m)
                return m;
            m = next;
        }
    }

    friend bool operator==(const FiniteRing& a, const FiniteRing& b)
    {
        return a.kind_ == b.kind_ && a.size_ == b.size_;
    }

private:
    static constexpr Elem no_inverse = 0xff;

    static bool is_prime(int p)
    {
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                return false;
        return p >= 2;
    }

    FiniteRing(Kind kind, int size, int p) : kind_(kind), size_(size), p_(p)
    {
        const auto n = static_cast<std::size_t>(size);
        add_.resize(n * n);
        mul_.resize(n * n);
        neg_.resize(n);
        inv_.assign(n, no_inverse);
        for (int a = 0; a < size; ++a)
            for (int b = 0; b < size; ++b) {
                int s, m;
                if (kind == Kind::Zmod) {
                    s = (a + b) % size;
                    m = (a * b) % size;
                } else {
                    const int a0 = a % p, a1 = a / p, b0 = b % p, b1 = b / p;
                    s = (a0 + b0) % p + p * ((a1 + b1) % p);
                    m = (a0 * b0) % p + p * ((a0 * b1 + a1 * b0) % p);
                }
                add_[idx(a, b)] = static_cast<Elem>(s);
                mul_[idx(a, b)] = static_cast<Elem>(m);
            }
        for (int a = 0; a < size; ++a) {
            for (int b = 0; b < size; ++b) {
                if (add_[idx(a, b)] == 0)
                    neg_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
                if (mul_[idx(a, b)] == one())
                    inv_[static_cast<std::size_t>(a)] = static_cast<Elem>(b);
            }
        }
        principal_.resize(n);
        for (int a = 0; a < size; ++a) {
            std::uint64_t m = 0;
            for (int r = 0; r < size; ++r)
                m |= std::uint64_t{1} << mul_[idx(a, r)];
            principal_[static_cast<std::size_t>(a)] = m;
        }
        if (kind == Kind::Zmod)
            name_ = "Z/" + std::to_string(size);
        else
            name_ = "F" + std::to_string(p) + "[t]/t2";
    }

    std::size_t idx(int a, int b) const
    {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + static_cast<std::size_t>(b);
    }

    Kind kind_;
    int size_;
    int p_;
    std::string name_;
    std::vector<Elem> add_, mul_, neg_, inv_;
    std::vector<std::uint64_t> principal_;
};

using RingPtr = std::shared_ptr<const FiniteRing>;

/// An ideal, stored as the bitmask of its elements.
class IdealHandle {
public:
    IdealHandle(RingPtr ring, std::uint64_t mask) : ring_(std::move(ring)), mask_(mask | 1u) {}

    static IdealHandle principal(RingPtr ring, Elem a)
    {
        auto m = ring->principal_mask(a);
        return IdealHandle(std::move(ring), m);
    }
    static IdealHandle zero(RingPtr ring) { return IdealHandle(std::move(ring), 1u); }
    static IdealHandle unit(RingPtr ring)
    {
        auto m = ring->principal_mask(ring->one());
        return IdealHandle(std::move(ring), m);
    }

    /// "2" -> (2); for dual numbers also "t", "0", "1".
    static IdealHandle parse(RingPtr ring, const std::string& s)
    {
        std::string t = s;
        if (t.size() >= 2 && t.front() == '(' && t.back() == ')')
            t = t.substr(1, t.size() - 2);
        return principal(ring, ring->parse_element(t));
    }

    const RingPtr& ring() const { return ring_; }
    std::uint64_t mask() const { return mask_; }
    bool contains(Elem a) const { return mask_ >> a & 1u; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool is_zero() const { return mask_ == 1u; }
    bool is_unit() const { return contains(ring_->one()) && ring_->size() > 0 && size() == static_cast<std::size_t>(ring_->size()); }

    std::vector<Elem> elements() const
    {
        std::vector<Elem> v;
        for (int a = 0; a < ring_->size(); ++a)
            if (contains(static_cast<Elem>(a)))
                v.push_back(static_cast<Elem>(a));
        return v;
    }

    /// Canonical generator: the smallest element generating the ideal
    /// (for Z/n this is the divisor d with I = dZ/n, with d = n for (0)).
    std::optional<Elem> generator() const
    {
        for (int a = 0; a < ring_->size(); ++a)
            if (ring_->principal_mask(static_cast<Elem>(a)) == mask_)
                return static_cast<Elem>(a);
        return std::nullopt;
    }

    /// For Z/n: the divisor d of n with I = (d); n for the zero ideal.
    int divisor() const
    {
        if (ring_->kind() != FiniteRing::Kind::Zmod)
            throw std::domain_error("divisor: only defined for Z/n");
        if (is_zero())
            return ring_->size();
        return static_cast<int>(*generator());
    }

    std::string label() const
    {
        if (is_zero())
            return "0";
        if (auto g = generator())
            return ring_->format(*g);
        std::ostringstream os;
        os << "mask:" << std::hex << mask_;
        return os.str();
    }

    bool subset_of(const IdealHandle& o) const { return (mask_ & ~o.mask_) == 0; }

    friend bool operator==(const IdealHandle& a, const IdealHandle& b)
    {
        return *a.ring_ == *b.ring_ && a.mask_ == b.mask_;
    }

private:
    RingPtr ring_;
    std::uint64_t mask_;
};

namespace detail {
inline void require_same_ring(const IdealHandle& a, const IdealHandle& b)
{
    if (!(*a.ring() == *b.ring()))
        throw std::domain_error("ideals belong to different rings");
}
}  // namespace detail

inline IdealHandle ideal_sum(const IdealHandle& a, const IdealHandle& b)
{
    detail::require_same_ring(a, b);
    return IdealHandle(a.ring(), a.ring()->ideal_join(a.mask(), b.mask()));
}

inline IdealHandle ideal_product(const IdealHandle& a, const IdealHandle& b)
{
    detail::require_same_ring(a, b);
    const auto& r = *a.ring();
    std::uint64_t m = 1u;
    for (Elem x : a.elements())
        for (Elem y : b.elements())
            m = r.ideal_join(m, r.principal_mask(r.mul(x, y)));
    return IdealHandle(a.ring(), m);
}

inline IdealHandle ideal_intersection(const IdealHandle& a, const IdealHandle& b)
{
    detail::require_same_ring(a, b);
    return IdealHandle(a.ring(), a.mask() & b.mask());
}

/// All ideals, ordered by size and then by mask. Every ideal of a finite
/// ring is a finite sum of principal ideals.
inline std::vector<IdealHandle> ideals_of(const RingPtr& ring)
{
    std::vector<std::uint64_t> masks;
    for (int a = 0; a < ring->size(); ++a) {
        auto m = ring->principal_mask(static_cast<Elem>(a));
        if (std::find(masks.begin(), masks.end(), m) == masks.end())
            masks.push_back(m);
    }
    for (std::size_t i = 0; i < masks.size(); ++i)
        for (std::size_t j = 0; j < i; ++j) {
            auto m = ring->ideal_join(masks[i], masks[j]);
            if (std::find(masks.begin(), masks.end(), m) == masks.end())
                masks.push_back(m);
        }
    std::sort(masks.begin(), masks.end(), [](std::uint64_t x, std::uint64_t y) {
        if (std::popcount(x) != std::popcount(y))
            return std::popcount(x) < std::popcount(y);
        return x < y;
    });
    std::vector<IdealHandle> out;
    for (auto m : masks)
        out.emplace_back(ring, m);
    return out;
}

inline std::vector<IdealHandle> maximal_ideals(const RingPtr& ring)
{
    auto all = ideals_of(ring);
    std::vector<IdealHandle> out;
    for (const auto& m : all) {
        if (m.is_unit())
            continue;
        bool maximal = true;
        for (const auto& o : all)
            if (!o.is_unit() && !(o == m) && m.subset_of(o))
                maximal = false;
        if (maximal)
            out.push_back(m);
    }
    return out;
}

inline bool has_F2_residue_field(const RingPtr& ring)
{
    for (const auto& m : maximal_ideals(ring))
        if (static_cast<std::size_t>(ring->size()) == 2 * m.size())
            return true;
    return false;
}

/// Every theta lies in theta^2 R + 2 theta R.
inline bool theta_condition(const RingPtr& ring)
{
    const auto& r = *ring;
    const Elem two = r.from_int(2);
    for (Elem th : r.elements()) {
        const auto m = r.ideal_join(r.principal_mask(r.mul(th, th)), r.principal_mask(r.mul(two, th)));
        if (!(m >> th & 1u))
            return false;
    }
    return true;
}

inline bool two_is_unit(const RingPtr& ring) { return ring->is_unit(ring->from_int(2)); }

/// Reduction R -> R/I. map[a] is the image of a.
struct QuotientMap {
    RingPtr quotient;
    std::vector<Elem> map;

    Elem operator()(Elem a) const { return map[a]; }
};

/// The quotient ring R/I. Every quotient of the supported rings is again
/// of the form Z/m (m = 1 gives the zero ring) or R itself (I = 0), so the
/// quotient is recognised from the additive order of 1.
inline QuotientMap quotient_map(const RingPtr& ring, const IdealHandle& ideal)
{
    if (!(*ideal.ring() == *ring))
        throw std::domain_error("quotient_map: ideal of a different ring");
    const auto& r = *ring;
    if (ideal.is_zero())
        return {ring, r.elements()};
    // Coset of a = {a + i : i in I}; label by the smallest representative.
    std::vector<int> coset_min(static_cast<std::size_t>(r.size()));
    for (Elem a : r.elements()) {
        int best = a;
        for (Elem i : ideal.elements())
            best = std::min<int>(best, r.add(a, i));
        coset_min[a] = best;
    }
    std::vector<int> reps(coset_min.begin(), coset_min.end());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    const int m = static_cast<int>(reps.size());
    // Additive order of the coset of 1.
    int order = 1;
    Elem acc = r.one();
    while (coset_min[acc] != coset_min[0]) {
        acc = r.add(acc, r.one());
        ++order;
    }
    if (order != m)
        throw std::domain_error("quotient_map: quotient is not cyclic; unsupported");
    auto q = FiniteRing::zmod(m);
    QuotientMap out{q, std::vector<Elem>(static_cast<std::size_t>(r.size()))};
    // k * 1 maps to k.
    Elem k1 = 0;
    for (int k = 0; k < m; ++k) {
        for (Elem a : r.elements())
            if (coset_min[a] == coset_min[k1])
                out.map[a] = static_cast<Elem>(k);
        k1 = r.add(k1, r.one());
    }
    return out;
}

}  // namespace chevlab
