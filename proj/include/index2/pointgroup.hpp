#pragma once

#include "index2/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace index2 {

/// The three full Platonic symmetry groups, including improper elements.
enum class GroupKind { Tetrahedral, Octahedral, Icosahedral };

const char* name(GroupKind k);
std::size_t expectedOrder(GroupKind k);  // 24, 48, 120

/// A finite subgroup of O(3) with exact matrix entries. Elements are stored
/// in a deterministic order; rotations() indexes the det = +1 subset.
class PointGroup {
public:
    /// Generates the group by closure from exact seed matrices and checks
    /// every element is orthogonal. Throws if the closure exceeds the known
    /// order for the kind.
    static const PointGroup& get(GroupKind kind);

    GroupKind kind() const { return kind_; }
    const std::vector<Mat3>& elements() const { return elements_; }
    const std::vector<std::size_t>& rotations() const { return rotations_; }
    std::size_t order() const { return elements_.size(); }
    std::size_t rotationOrder() const { return rotations_.size(); }

    bool contains(const Mat3& g) const;

    /// De-duplicated exact orbit of a point under a set of isometries.
    static std::vector<Vec3> orbit(const Vec3& p, std::span<const Mat3> group);

private:
    explicit PointGroup(GroupKind kind);

    GroupKind kind_;
    std::vector<Mat3> elements_;
    std::vector<std::size_t> rotations_;
};

}  // namespace index2
