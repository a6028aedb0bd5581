#pragma once

// Integer partitions in multiplicity form J = [j_1, j_2, ...].

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace modeq {

/// Default weight above which partition enumeration is refused.
inline constexpr unsigned default_enumeration_threshold = 30;

class Partition {
public:
    struct Part {
        unsigned size;
        unsigned multiplicity;
        friend bool operator==(const Part&, const Part&) = default;
    };

    Partition() = default;

    /// Parts given as (k, j_k) pairs; zero multiplicities are dropped and
    /// duplicates of the same k are merged.
    explicit Partition(std::vector<Part> parts)
    {
        for (const auto& p : parts) add(p.size, p.multiplicity);
    }

    /// Adds `count` copies of the part k.
    void add(unsigned k, unsigned count = 1)
    {
        if (k == 0) throw std::invalid_argument("partition parts must be positive");
        if (count == 0) return;
        auto it = parts_.begin();
        while (it != parts_.end() && it->size > k) ++it;
        if (it != parts_.end() && it->size == k)
            it->multiplicity += count;
        else
            parts_.insert(it, Part{k, count});
    }

    /// Stored parts, largest first; every multiplicity is positive.
    const std::vector<Part>& parts() const noexcept { return parts_; }

    unsigned multiplicity(unsigned k) const noexcept
    {
        for (const auto& p : parts_)
            if (p.size == k) return p.multiplicity;
        return 0;
    }

    bool empty() const noexcept { return parts_.empty(); }

    /// w(J) = sum of k * j_k.
    unsigned weight() const noexcept
    {
        unsigned w = 0;
        for (const auto& p : parts_) w += p.size * p.multiplicity;
        return w;
    }

    /// |J| = sum of j_k.
    unsigned norm() const noexcept { return odd_count() + even_count(); }

    unsigned odd_count() const noexcept
    {
        unsigned c = 0;
        for (const auto& p : parts_)
            if (p.size % 2 == 1) c += p.multiplicity;
        return c;
    }

    unsigned even_count() const noexcept
    {
        unsigned c = 0;
        for (const auto& p : parts_)
            if (p.size % 2 == 0) c += p.multiplicity;
        return c;
    }

    std::string to_string() const
    {
        std::string s = "{";
        for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
            if (s.size() > 1) s += ", ";
            s += "j_" + std::to_string(it->size) + "=" + std::to_string(it->multiplicity);
        }
        return s + "}";
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<Part> parts_;
};

namespace detail {

// Visits partitions of `remaining` with parts <= max_part, largest part
// first, higher multiplicities of a part before lower ones.
inline void visit_partitions(unsigned remaining, unsigned max_part, bool odd_only, Partition& current,
                             std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (unsigned k = std::min(max_part, remaining); k >= 1; --k) {
        if (odd_only && k % 2 == 0) continue;
        for (unsigned j = remaining / k; j >= 1; --j) {
            Partition next = current;
            next.add(k, j);
            visit_partitions(remaining - k * j, k - 1, odd_only, next, out);
        }
    }
}

} // namespace detail

/// J[N]: all partitions of weight N, each once, in a fixed order.
inline std::vector<Partition> enumerate(unsigned weight)
{
    std::vector<Partition> out;
    Partition start;
    detail::visit_partitions(weight, weight, false, start, out);
    return out;
}

/// Partitions of weight N using only odd parts.
inline std::vector<Partition> enumerate_odd(unsigned weight)
{
    std::vector<Partition> out;
    Partition start;
    detail::visit_partitions(weight, weight, true, start, out);
    return out;
}

} // namespace modeq
