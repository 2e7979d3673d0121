#include "rslocal/partition.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rslocal {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i - 1] < parts_[i])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

unsigned Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ",";
        out << parts_[i];
    }
    out << ")";
    return out.str();
}

namespace {

void emit(unsigned remaining, unsigned cap, unsigned slots,
          std::vector<unsigned>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    if (slots == 0) return;
    for (unsigned first = std::min(remaining, cap); first >= 1; --first) {
        acc.push_back(first);
        emit(remaining - first, first, slots - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_upto(unsigned max_weight, unsigned max_length) {
    std::vector<Partition> out;
    std::vector<unsigned> acc;
    for (unsigned w = 0; w <= max_weight; ++w)
        emit(w, w, max_length, acc, out);
    return out;
}

}  // namespace rslocal
