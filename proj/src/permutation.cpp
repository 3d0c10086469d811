#include "secretary/permutation.hpp"

#include <numeric>

#include "secretary/detail/fenwick.hpp"
#include "secretary/error.hpp"

namespace secretary {

bool is_permutation_of_1_to_n(std::span<const int> ranks)
{
    std::vector<bool> seen(ranks.size() + 1, false);
    for (const int r : ranks) {
        if (r < 1 || static_cast<std::size_t>(r) > ranks.size() || seen[r])
            return false;
        seen[r] = true;
    }
    return true;
}

Permutation::Permutation(std::vector<int> ranks) : ranks_(std::move(ranks))
{
    if (ranks_.empty())
        throw DomainError("permutation must have at least one entry");
    if (!is_permutation_of_1_to_n(ranks_))
        throw DomainError("entries are not a bijection on {1..n}");
}

Permutation Permutation::identity(std::size_t n)
{
    if (n == 0)
        throw DomainError("permutation must have at least one entry");
    std::vector<int> r(n);
    std::iota(r.begin(), r.end(), 1);
    return Permutation(Unchecked{}, std::move(r));
}

std::string Permutation::to_string() const
{
    std::string s;
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
        if (i)
            s += ' ';
        s += std::to_string(ranks_[i]);
    }
    return s;
}

Permutation permutation_from_trusted(std::vector<int> ranks)
{
    return Permutation(Permutation::Unchecked{}, std::move(ranks));
}

std::uint64_t inversion_count(const Permutation& p)
{
    // Scan left to right; each entry inverts with every earlier, larger entry.
    const std::size_t n = p.size();
    detail::FenwickTree seen(n);
    std::uint64_t count = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto v = static_cast<std::size_t>(p[i]);
        count += i - static_cast<std::uint64_t>(seen.prefix_sum(v));
        seen.add(v - 1, 1);
    }
    return count;
}

Permutation inverse(const Permutation& p)
{
    std::vector<int> inv(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        inv[p[i] - 1] = static_cast<int>(i + 1);
    return Permutation(Permutation::Unchecked{}, std::move(inv));
}

Permutation reverse(const Permutation& p)
{
    return Permutation(Permutation::Unchecked{}, std::vector<int>(p.ranks_.rbegin(), p.ranks_.rend()));
}

}  // namespace secretary
