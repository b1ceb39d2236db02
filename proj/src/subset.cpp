#include "cycdes/subset.hpp"

namespace cycdes {

Subset::Subset(int n, std::uint32_t mask) : n_(n), mask_(mask) {
    if (n < 0) throw DomainError("subset ambient size must be nonnegative");
    if (n > kMaxSubsetN) throw ResourceError("subset ambient size exceeds the dense-table limit of 16");
    if (n < 32 && (mask >> n) != 0) throw DomainError("subset mask has bits outside [n]");
}

Subset Subset::of(int n, std::initializer_list<int> elems) {
    return from_elements(n, std::vector<int>(elems));
}

Subset Subset::from_elements(int n, const std::vector<int>& elems) {
    Subset s(n, 0);
    for (int e : elems) {
        if (e < 1 || e > n) throw DomainError("subset element out of range");
        s.mask_ |= 1u << (e - 1);
    }
    return s;
}

Subset Subset::with(int i) const {
    if (i < 1 || i > n_) throw DomainError("subset element out of range");
    return Subset(n_, mask_ | (1u << (i - 1)));
}

Subset Subset::without(int i) const {
    if (i < 1 || i > n_) throw DomainError("subset element out of range");
    return Subset(n_, mask_ & ~(1u << (i - 1)));
}

Subset Subset::rotated(int k) const {
    if (n_ == 0) return *this;
    int shift = ((k % n_) + n_) % n_;
    std::uint32_t all = full(n_).mask_;
    std::uint32_t m = ((mask_ << shift) | (mask_ >> (n_ - shift))) & all;
    if (shift == 0) m = mask_;
    return Subset(n_, m);
}

Subset Subset::negated() const {
    Subset s(n_, 0);
    for (int j = 1; j <= n_; ++j)
        if (contains(j)) {
            int img = n_ - j;
            if (img == 0) img = n_;
            s.mask_ |= 1u << (img - 1);
        }
    return s;
}

std::vector<int> Subset::elements() const {
    std::vector<int> out;
    for (int i = 1; i <= n_; ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

bool Subset::lex_less(const Subset& a, const Subset& b) {
    return a.elements() < b.elements();
}

std::string Subset::str() const {
    std::string s = "{";
    bool first = true;
    for (int e : elements()) {
        if (!first) s += ',';
        s += std::to_string(e);
        first = false;
    }
    return s + "}";
}

Composition comp_of_subset(int n, const Subset& j_set) {
    if (n < 1) throw DomainError("composition size must be positive");
    if (j_set.n() != n) throw DomainError("subset ambient size mismatch");
    if (j_set.contains(n)) throw DomainError("comp_of_subset requires a subset of [n-1]");
    std::vector<int> parts;
    int prev = 0;
    for (int j : j_set.elements()) {
        parts.push_back(j - prev);
        prev = j;
    }
    parts.push_back(n - prev);
    return Composition(std::move(parts));
}

CyclicComposition ccomp_of_subset(int n, const Subset& j_set) {
    if (n < 1) throw DomainError("composition size must be positive");
    if (j_set.n() != n) throw DomainError("subset ambient size mismatch");
    if (j_set.is_empty()) throw DomainError("ccomp_of_subset requires a nonempty subset");
    std::vector<int> el = j_set.elements();
    std::vector<int> parts;
    for (std::size_t i = 0; i + 1 < el.size(); ++i) parts.push_back(el[i + 1] - el[i]);
    parts.push_back(el.front() + n - el.back());
    return CyclicComposition(std::move(parts));
}

}  // namespace cycdes
