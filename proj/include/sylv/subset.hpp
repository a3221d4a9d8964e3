#ifndef SYLV_SUBSET_HPP
#define SYLV_SUBSET_HPP

#include <bit>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace sylv {

/// A subset of the index range [0, universe) of some ordered tuple, as a
/// bitmask (bit i selects element i).
class SubsetSelector {
   public:
    static constexpr std::size_t kMaxUniverse = 63;

    SubsetSelector(std::uint64_t mask, std::size_t universe) : mask_(mask), universe_(universe) {
        if (universe > kMaxUniverse) throw std::invalid_argument("subset universe too large");
        if (universe < 64 && (mask >> universe) != 0) throw std::invalid_argument("subset mask exceeds universe");
    }

    std::uint64_t mask() const { return mask_; }
    std::size_t universe() const { return universe_; }
    std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    bool contains(std::size_t i) const { return (mask_ >> i) & 1U; }

    SubsetSelector complement() const {
        const std::uint64_t full = universe_ == 64 ? ~0ULL : ((1ULL << universe_) - 1);
        return SubsetSelector(full & ~mask_, universe_);
    }

    /// Elements of `tuple` selected by this subset, in index order.
    template <class T>
    std::vector<T> pick(std::span<const T> tuple) const {
        std::vector<T> out;
        out.reserve(size());
        for (std::size_t i = 0; i < tuple.size(); ++i)
            if (contains(i)) out.push_back(tuple[i]);
        return out;
    }

    friend bool operator==(const SubsetSelector&, const SubsetSelector&) = default;

   private:
    std::uint64_t mask_;
    std::size_t universe_;
};

/// Calls fn(SubsetSelector) for every k-subset of [0, n) in increasing
/// bitmask order (Gosper's hack). Does nothing when k > n.
template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (n > SubsetSelector::kMaxUniverse) throw std::invalid_argument("subset universe too large");
    if (k > n) return;
    if (k == 0) {
        fn(SubsetSelector(0, n));
        return;
    }
    const std::uint64_t limit = 1ULL << n;
    std::uint64_t s = (1ULL << k) - 1;
    while (s < limit) {
        fn(SubsetSelector(s, n));
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
}

inline std::vector<SubsetSelector> subsets(std::size_t n, std::size_t k) {
    std::vector<SubsetSelector> out;
    for_each_subset(n, k, [&](SubsetSelector s) { out.push_back(s); });
    return out;
}

}  // namespace sylv

#endif  // SYLV_SUBSET_HPP
