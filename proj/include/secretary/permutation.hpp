#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace secretary {

// Arrival order of ranks: entry j (0-based) is the rank of the (j+1)-th
// arriving item. Ranks run 1..n with n the best item.
class Permutation {
public:
    // Throws DomainError unless `ranks` is a bijection on {1..n}.
    explicit Permutation(std::vector<int> ranks);
    Permutation(std::initializer_list<int> ranks) : Permutation(std::vector<int>(ranks)) {}

    static Permutation identity(std::size_t n);

    std::size_t size() const { return ranks_.size(); }
    std::span<const int> ranks() const { return ranks_; }
    int operator[](std::size_t i) const { return ranks_[i]; }

    // Space-separated ranks, e.g. "3 2 1 4".
    std::string to_string() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(Unchecked, std::vector<int> ranks) : ranks_(std::move(ranks)) {}
    friend Permutation inverse(const Permutation&);
    friend Permutation reverse(const Permutation&);
    friend Permutation permutation_from_trusted(std::vector<int>);

    std::vector<int> ranks_;
};

bool is_permutation_of_1_to_n(std::span<const int> ranks);

// Number of pairs i < j with p_i > p_j, in O(n log n).
std::uint64_t inversion_count(const Permutation& p);

Permutation inverse(const Permutation& p);

// p_n ... p_1.
Permutation reverse(const Permutation& p);

// Skips validation; for callers that construct bijections by design.
Permutation permutation_from_trusted(std::vector<int> ranks);

}  // namespace secretary
