#include "sigmatau/partition.hpp"
#include "sigmatau/errors.hpp"

#include <algorithm>
#include <functional>

namespace sigmatau {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw Error("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_frobenius(const Frobenius& f)
{
    const int r = int(f.arms.size());
    if (int(f.legs.size()) != r)
        throw Error("Frobenius arms and legs differ in length");
    for (int i = 0; i < r; ++i) {
        if (f.arms[i] < 0 || f.legs[i] < 0 || (i > 0 && (f.arms[i] >= f.arms[i - 1] || f.legs[i] >= f.legs[i - 1])))
            throw Error("Frobenius coordinates must be non-negative and strictly decreasing");
    }
    std::vector<int> parts;
    for (int i = 1; i <= r; ++i)
        parts.push_back(f.arms[i - 1] + i);
    // rows below the diagonal block: count columns j <= r with λ'_j >= i
    int maxrow = r == 0 ? 0 : f.legs[0] + 1;
    for (int i = r + 1; i <= maxrow; ++i) {
        int cnt = 0;
        for (int j = 1; j <= r; ++j)
            if (f.legs[j - 1] + j >= i)
                ++cnt;
        if (cnt > 0)
            parts.push_back(cnt);
    }
    return Partition(std::move(parts));
}

Partition Partition::hook(int arm, int leg)
{
    return from_frobenius({{arm}, {leg}});
}

int Partition::weight() const
{
    int w = 0;
    for (int p : parts_)
        w += p;
    return w;
}

int Partition::rank() const
{
    int r = 0;
    while (r < length() && parts_[r] >= r + 1)
        ++r;
    return r;
}

Partition Partition::transpose() const
{
    std::vector<int> t;
    if (!parts_.empty()) {
        for (int j = 1; j <= parts_[0]; ++j) {
            int cnt = 0;
            for (int p : parts_)
                if (p >= j)
                    ++cnt;
            t.push_back(cnt);
        }
    }
    return Partition(std::move(t));
}

Frobenius Partition::frobenius() const
{
    Frobenius f;
    Partition t = transpose();
    for (int i = 0; i < rank(); ++i) {
        f.arms.push_back(parts_[i] - i - 1);
        f.legs.push_back(t.parts_[i] - i - 1);
    }
    return f;
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i)
        s += (i ? "," : "") + std::to_string(parts_[i]);
    return s + ")";
}

std::vector<Partition> enumerate_partitions(int W)
{
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int mx) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, mx); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    if (W >= 0)
        rec(W, W);
    return out;
}

std::vector<Partition> enumerate_rank2(int W)
{
    std::vector<Partition> out;
    for (int m = 0; m + 4 <= W; ++m)
        for (int n = 0; n <= m && m + n + 4 <= W; ++n)
            for (int k = 0; m + n + 2 * k + 4 <= W; ++k) {
                int l = W - (m + n + 2 * k + 4);
                std::vector<int> parts{2 + m, 2 + n};
                parts.insert(parts.end(), k, 2);
                parts.insert(parts.end(), l, 1);
                out.emplace_back(std::move(parts));
            }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

std::vector<Partition> enumerate_rank(int W, int r)
{
    std::vector<Partition> out;
    for (auto& p : enumerate_partitions(W))
        if (p.rank() == r)
            out.push_back(std::move(p));
    return out;
}

std::vector<Partition> transpose_representatives(const std::vector<Partition>& ps)
{
    std::vector<Partition> out;
    for (const auto& p : ps)
        if (p >= p.transpose())
            out.push_back(p);
    return out;
}

} // namespace sigmatau
