#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

namespace indep {

// Finite subset of a structure's universe {0, ..., 63}, one bit per point.
class PointSet {
public:
    constexpr PointSet() = default;
    constexpr explicit PointSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr PointSet single(int i) { return PointSet(std::uint64_t{1} << i); }
    static constexpr PointSet first(int n)
    {
        return PointSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static PointSet of(const std::vector<int>& points)
    {
        PointSet s;
        for (int p : points) s.insert(p);
        return s;
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
    constexpr void insert(int i) { bits_ |= std::uint64_t{1} << i; }
    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }

    constexpr PointSet operator|(PointSet o) const { return PointSet(bits_ | o.bits_); }
    constexpr PointSet operator&(PointSet o) const { return PointSet(bits_ & o.bits_); }
    constexpr PointSet minus(PointSet o) const { return PointSet(bits_ & ~o.bits_); }
    constexpr bool operator==(const PointSet&) const = default;
    constexpr auto operator<=>(const PointSet&) const = default;

    std::vector<int> points() const
    {
        std::vector<int> out;
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::uint64_t b = bits_; b; b &= b - 1) f(std::countr_zero(b));
    }

private:
    std::uint64_t bits_ = 0;
};

// All subsets of `universe` with at most `max_size` elements, ordered by size then
// lexicographically by sorted point list.
std::vector<PointSet> subsets_by_size(PointSet universe, int max_size);

// All subsets of `s` (including the empty set and `s` itself), in increasing bit order.
std::vector<PointSet> all_subsets(PointSet s);

}  // namespace indep
