#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cycdes/errors.hpp"

namespace cycdes {

// Integer partition: weakly decreasing positive parts.  The empty partition is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // The hook (n-k, 1^k) for 0 <= k <= n-1.
    static Partition hook(int n, int k);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }          // number of cells
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const { return i < rows() ? parts_[i] : 0; }  // 0-based, 0 beyond end

    bool is_hook() const;                        // (n-k, 1^k); the empty partition is not
    bool contains(const Partition& inner) const; // componentwise

    auto operator<=>(const Partition&) const = default;  // lexicographic on parts

    std::string str() const;                     // "3,2,1" ("-" for empty)

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Composition: ordered positive parts.
class Composition {
public:
    Composition() = default;
    explicit Composition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    Partition sorted() const;                    // parts rearranged decreasingly

    auto operator<=>(const Composition&) const = default;

    std::string str() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// Composition considered up to cyclic rotation.  Parts are kept in the order
// they were produced; equality and ordering go through the lexicographically
// smallest rotation.
class CyclicComposition {
public:
    CyclicComposition() = default;
    explicit CyclicComposition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }          // as constructed
    const std::vector<int>& canonical() const { return canonical_; }  // smallest rotation
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }

    Partition sorted() const;

    bool operator==(const CyclicComposition& o) const { return canonical_ == o.canonical_; }
    auto operator<=>(const CyclicComposition& o) const { return canonical_ <=> o.canonical_; }

    std::string str() const;

private:
    std::vector<int> parts_;
    std::vector<int> canonical_;
    int size_ = 0;
};

}  // namespace cycdes
