#pragma once

#include <compare>
#include <string>
#include <vector>

namespace sigmatau {

struct Frobenius {
    std::vector<int> arms; // α_i = λ_i - i, strictly decreasing
    std::vector<int> legs; // β_j = λ'_j - j, strictly decreasing
    auto operator<=>(const Frobenius&) const = default;
};

class Partition {
public:
    Partition() = default;
    // Parts must be positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);
    static Partition from_frobenius(const Frobenius& f);
    // (α | β) = (α+1, 1^β)
    static Partition hook(int arm, int leg);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return int(parts_.size()); }
    int rank() const;
    Partition transpose() const;
    Frobenius frobenius() const;
    bool is_self_conjugate() const { return transpose() == *this; }

    std::string to_string() const; // "(3,2,1)", "()" for the empty partition

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// All partitions of W, in reverse lexicographic order ((W) first).
std::vector<Partition> enumerate_partitions(int W);
// Partitions of W with rank exactly 2, built as (2+m, 2+n, 2^k, 1^l).
std::vector<Partition> enumerate_rank2(int W);
std::vector<Partition> enumerate_rank(int W, int r);
// One representative per {λ, λ'} pair, the lexicographically larger one.
std::vector<Partition> transpose_representatives(const std::vector<Partition>& ps);

} // namespace sigmatau
