#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace hdt {

/// Orthogonal Vectors input: X of m and Y of n binary vectors, dimension d.
struct OvInstance {
    std::vector<std::vector<std::uint8_t>> x;
    std::vector<std::vector<std::uint8_t>> y;

    std::size_t m() const { return x.size(); }
    std::size_t n() const { return y.size(); }
    std::size_t d() const { return x.empty() ? 0 : x.front().size(); }

    /// m, n, d >= 1, all entries in {0,1}, uniform dimension.
    void validate() const;
};

/// Conv3SUM input: sequence of positive integers, all in [1, max_value].
struct Conv3SumInstance {
    std::vector<long long> x;
    long long max_value = 1;

    std::size_t n() const { return x.size(); }
    void validate() const;

    /// max_value := max of the sequence.
    static Conv3SumInstance from_sequence(std::vector<long long> xs);
};

/// 3SUM input: three equal-size sets of positive integers.
struct ThreeSumInstance {
    std::vector<long long> x;
    std::vector<long long> y;
    std::vector<long long> z;

    void validate() const;
};

struct OvAnswer {
    bool positive = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (i into X, j into Y)
};

/// Exhaustive O(m n d) scan; lexicographically first witness.
OvAnswer ov_brute(const OvInstance& inst);

struct ThreeSumAnswer {
    bool positive = false;
    std::optional<std::array<std::size_t, 3>> witness;  // indices into X, Y, Z
};

/// O(n^2 log n) with a sorted lookup into Z.
ThreeSumAnswer threesum_brute(const ThreeSumInstance& inst);

struct Conv3SumAnswer {
    bool positive = false;
    std::optional<std::pair<std::size_t, std::size_t>> witness;  // (i, j)
};

/// Exhaustive O(n^2) scan over i, j >= 0 with i + j <= n-1 (i = j and
/// zero indices allowed); lexicographically first witness.
Conv3SumAnswer conv3sum_brute(const Conv3SumInstance& inst);

}  // namespace hdt
