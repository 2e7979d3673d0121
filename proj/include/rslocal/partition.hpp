#pragma once

#include <string>
#include <vector>

namespace rslocal {

/// Weakly decreasing tuple of non-negative integers. Trailing zeros are
/// stripped on construction, so equality after stripping is plain equality.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are weakly decreasing.
    explicit Partition(std::vector<unsigned> parts);

    const std::vector<unsigned>& parts() const { return parts_; }
    unsigned weight() const;
    std::size_t length() const { return parts_.size(); }
    /// 1-based part access; 0 beyond the length.
    unsigned part(std::size_t i) const { return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0; }
    bool empty() const { return parts_.empty(); }

    bool operator==(const Partition&) const = default;

    std::string to_string() const;  // "(3,1)" / "()"

private:
    std::vector<unsigned> parts_;
};

/// All partitions with weight <= max_weight and length <= max_length, each
/// once, ordered by weight ascending and lexicographically decreasing within
/// a weight: (), (1), (2), (1,1), (3), (2,1), (1,1,1), ...
/// The order is part of the external contract (reports are byte-stable).
std::vector<Partition> partitions_upto(unsigned max_weight, unsigned max_length);

}  // namespace rslocal
