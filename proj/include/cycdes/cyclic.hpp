#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cycdes/schur.hpp"
#include "cycdes/skew.hpp"
#include "cycdes/subset.hpp"
#include "cycdes/tableaux.hpp"

namespace cycdes {

struct ValidationReport {
    bool ok = true;
    std::string detail;  // first violation, empty when ok
};

// Dense table J |-> m(J) over all subsets of [n], indexed by bitmask.
class FiberTable {
public:
    explicit FiberTable(int n);

    int n() const { return n_; }
    std::int64_t at(const Subset& j) const;
    std::int64_t at_mask(std::uint32_t mask) const { return m_[mask]; }
    void set(const Subset& j, std::int64_t v);
    void set_mask(std::uint32_t mask, std::int64_t v) { m_[mask] = v; }
    const std::vector<std::int64_t>& values() const { return m_; }

    // (a) nonnegative with m(empty) = m(full) = 0; (b) rotation invariant;
    // (c) m(J) + m(J + {n}) equals the descent fiber of J.
    ValidationReport validate(const std::vector<std::int64_t>& des_fibers) const;

    bool operator==(const FiberTable&) const = default;

private:
    int n_;
    std::vector<std::int64_t> m_;
};

// Descent fiber sizes #Des^{-1}(J) over subsets of [n-1], dense over 2^n masks
// (bit n-1 never set), from direct tableau enumeration.
std::vector<std::int64_t> des_fiber_counts(const SkewShape& shape,
                                           std::int64_t limit = kDefaultSytLimit);

// Alternating-sum route: m(J) from the descent fibers of the shape.
FiberTable fiber_table_formula(const SkewShape& shape, std::int64_t limit = kDefaultSytLimit);
// Same, from precomputed descent fibers.
FiberTable fiber_table_from_des(int n, const std::vector<std::int64_t>& des_fibers);

// Inner-product route: m(J) as the pairing of the skew Schur function with the
// signed cyclic-composition sum of J.  OpenMP-parallel over subsets, with a
// serial reference implementation kept for testing.
FiberTable fiber_table_inner(const DegreeContext& ctx, const SkewShape& shape);
FiberTable fiber_table_inner_serial(const DegreeContext& ctx, const SkewShape& shape);

// Standard tableaux with an explicit cyclic descent map: tableaux in canonical
// order, a cyclic descent set per tableau, and the rotation companion p as a
// permutation of tableau indices.
class CyclicExtension {
public:
    CyclicExtension(SkewShape shape, std::vector<StandardTableau> tableaux,
                    std::vector<Subset> cdes, std::vector<int> p);

    const SkewShape& shape() const { return shape_; }
    int n() const { return shape_.size(); }
    const std::vector<StandardTableau>& tableaux() const { return tableaux_; }
    const std::vector<Subset>& cdes() const { return cdes_; }
    const std::vector<int>& p() const { return p_; }  // 0-based images

    FiberTable fiber_counts() const;

private:
    SkewShape shape_;
    std::vector<StandardTableau> tableaux_;
    std::vector<Subset> cdes_;
    std::vector<int> p_;
};

// Throws NotExtendable when the shape is a connected ribbon (no cyclic descent
// map exists there); returns normally otherwise.
void require_extendable(const SkewShape& shape);

// Deterministic construction: per descent fiber the first m(J) tableaux keep J,
// the rest receive J + {n}; p stitches rotation orbits together fiber by fiber.
// Throws NotExtendable on connected ribbons.
CyclicExtension build_extension(const SkewShape& shape, std::int64_t limit = kDefaultSytLimit);

// Axiom check: extension property, equivariance, non-Escher, p bijective.
ValidationReport validate_extension(const CyclicExtension& ext);

// Pairing of the signed cyclic-composition sum of J with a non-hook Schur
// function; hooks are rejected as a domain error.
std::int64_t gw_invariant(const DegreeContext& ctx, const Subset& j_set, const Partition& nu);

}  // namespace cycdes
