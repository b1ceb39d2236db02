#include "cycdes/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace cycdes {

namespace {

std::string join_parts(const std::vector<int>& parts) {
    if (parts.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts[i]);
    }
    return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw DomainError("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::hook(int n, int k) {
    if (n < 1 || k < 0 || k > n - 1) throw DomainError("hook requires 0 <= k <= n-1");
    std::vector<int> p;
    p.push_back(n - k);
    p.insert(p.end(), static_cast<std::size_t>(k), 1);
    return Partition(std::move(p));
}

bool Partition::is_hook() const {
    if (parts_.empty()) return false;
    return parts_.size() == 1 || parts_[1] == 1;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.rows() > rows()) return false;
    for (int i = 0; i < inner.rows(); ++i)
        if (inner.parts_[i] > parts_[i]) return false;
    return true;
}

std::string Partition::str() const { return join_parts(parts_); }

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainError("composition parts must be positive");
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Composition::sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

std::string Composition::str() const { return join_parts(parts_); }

CyclicComposition::CyclicComposition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
        if (p <= 0) throw DomainError("cyclic composition parts must be positive");
    if (parts_.empty()) throw DomainError("cyclic composition must be nonempty");
    // comparison representative: lexicographically smallest rotation
    canonical_ = parts_;
    std::vector<int> rot = parts_;
    for (std::size_t s = 1; s < parts_.size(); ++s) {
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        if (rot < canonical_) canonical_ = rot;
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition CyclicComposition::sorted() const {
    std::vector<int> p = parts_;
    std::sort(p.begin(), p.end(), std::greater<int>());
    return Partition(std::move(p));
}

std::string CyclicComposition::str() const { return join_parts(parts_); }

}  // namespace cycdes
