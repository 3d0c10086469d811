#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace secretary::detail {

// Binary indexed tree over counts, 0-based interface.
class FenwickTree {
public:
    explicit FenwickTree(std::size_t size) : tree_(size + 1, 0) {}

    // Tree with every slot holding `value`, built in linear time.
    static FenwickTree filled(std::size_t size, std::int64_t value)
    {
        FenwickTree t(size);
        for (std::size_t i = 1; i <= size; ++i) {
            t.tree_[i] += value;
            const std::size_t parent = i + (i & (~i + 1));
            if (parent <= size)
                t.tree_[parent] += t.tree_[i];
        }
        return t;
    }

    std::size_t size() const { return tree_.size() - 1; }

    void add(std::size_t index, std::int64_t delta)
    {
        for (std::size_t i = index + 1; i < tree_.size(); i += i & (~i + 1))
            tree_[i] += delta;
    }

    // Sum of slots [0, index).
    std::int64_t prefix_sum(std::size_t index) const
    {
        std::int64_t s = 0;
        for (std::size_t i = index; i > 0; i -= i & (~i + 1))
            s += tree_[i];
        return s;
    }

    // Smallest index whose inclusive prefix sum exceeds k, for nonnegative
    // slot values. With 0/1 slots this is the position of the k-th (0-based)
    // occupied slot.
    std::size_t find_kth(std::int64_t k) const
    {
        std::size_t pos = 0;
        const std::size_t n = size();
        for (std::size_t step = std::bit_floor(n == 0 ? std::size_t{1} : n); step > 0; step >>= 1) {
            const std::size_t next = pos + step;
            if (next <= n && tree_[next] <= k) {
                pos = next;
                k -= tree_[next];
            }
        }
        return pos;
    }

private:
    std::vector<std::int64_t> tree_;
};

}  // namespace secretary::detail
