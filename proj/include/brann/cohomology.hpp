#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "brann/cochain.hpp"
#include "brann/conditions.hpp"
#include "brann/zmod.hpp"

namespace brann {

struct Limits {
    int max_coordinates = 512;
    std::uint64_t brute_bound = std::uint64_t{1} << 16;
    int workers = 1;
};

/// One free integer coordinate of a cochain: the generator-`generator`
/// coordinate of an entry that normalization leaves free.
struct Coordinate {
    Component component;
    std::array<int, 3> args;
    int arity;
    int generator;
};

/// The free coordinates of cochains of one degree/variant, ordered by
/// component, then arguments lexicographically, then module generator.
class CochainLayout {
public:
    CochainLayout(ModulePtr module, int degree, Variant variant);

    int size() const noexcept { return static_cast<int>(coords_.size()); }
    int degree() const noexcept { return degree_; }
    Variant variant() const noexcept { return variant_; }
    const ModulePtr& module_ptr() const noexcept { return module_; }
    const std::vector<Coordinate>& coordinates() const noexcept { return coords_; }
    /// Order of coordinate j's cyclic group.
    std::int64_t modulus(int j) const { return moduli_[j]; }
    const Vec& moduli() const noexcept { return moduli_; }
    /// Exponent of M (1 for M = 0).
    std::int64_t exponent() const noexcept { return exponent_; }
    /// Number of cochains, i.e. the product of the moduli.
    BigInt cochain_count() const;

    /// First coordinate of an entry, or -1 when the entry is pinned.
    int base(Component c, std::span<const int> args) const;

    Vec to_vector(const Cochain& c) const;
    Cochain to_cochain(const Vec& v) const;
    Vec reduce(Vec v) const;

private:
    ModulePtr module_;
    int degree_;
    Variant variant_;
    std::vector<Coordinate> coords_;
    Vec moduli_;
    std::int64_t exponent_;
    std::vector<std::vector<int>> base_; // per component slot, per flat entry
};

/// The cocycle conditions as congruences mod the exponent N of M: row i.y ≡ 0.
struct LinearSystem {
    CochainLayout layout;
    std::int64_t modulus;
    /// Sparse rows: (coordinate, coefficient) pairs, coefficients in [1, N).
    std::vector<std::vector<std::pair<int, std::int64_t>>> rows;
};

LinearSystem assemble_linear_system(ModulePtr module, int degree, Variant variant,
                                    const Limits& limits = {});

struct SubgroupPresentation {
    int ambient = 0;       // coordinate count of the ambient cochain group
    std::vector<Vec> generators;
    BigInt order = 1;
    Vec invariant_factors; // empty when not computed
};

/// H^i = Z^i / B^i with explicit representatives and a coordinate map.
class CohomologyGroup {
public:
    CohomologyGroup(ModulePtr module, int degree, Variant variant, const Limits& limits = {});

    int degree() const noexcept { return layout_.degree(); }
    Variant variant() const noexcept { return layout_.variant(); }
    const CochainLayout& layout() const noexcept { return layout_; }
    const ModulePtr& module_ptr() const noexcept { return layout_.module_ptr(); }

    const Vec& invariant_factors() const noexcept { return factors_; }
    BigInt order() const;
    const std::vector<Cochain>& representatives() const noexcept { return reps_; }

    const SubgroupPresentation& cocycles() const noexcept { return z_; }
    const SubgroupPresentation& coboundaries() const noexcept { return b_; }

    bool is_cocycle(const Cochain& c) const;
    bool is_coboundary(const Cochain& c) const;

    /// Class coordinates of a cocycle, entry k reduced mod invariant_factors()[k].
    Vec coordinates(const Cochain& cocycle) const;

    /// The representative with the given class coordinates.
    Cochain representative_of(const Vec& class_coords) const;

    /// Canonical (lexicographically smallest) cochain in c + B.
    Cochain canonical(const Cochain& c) const;

    /// A cochain g of degree-1 with ∂g = c, if one exists (degree >= 2).
    std::optional<Cochain> preimage(const Cochain& c) const;

private:
    Vec kernel_coords(const Vec& y) const;

    CochainLayout layout_;
    std::optional<CochainLayout> lower_;
    std::int64_t n_ = 1;
    SmithForm kernel_;   // of the condition rows
    Vec scale_;          // N / kernel diag
    SmithForm quotient_; // of the relation matrix in kernel coordinates
    std::vector<int> positions_; // quotient diag positions with a nontrivial factor
    Vec factors_;
    Lattice boundary_{0, 1};
    std::optional<SmithForm> coboundary_map_;
    SubgroupPresentation z_, b_;
    std::vector<Cochain> reps_;
};

SubgroupPresentation cocycle_group(ModulePtr module, int degree, Variant variant,
                                   const Limits& limits = {});
SubgroupPresentation coboundary_group(ModulePtr module, int degree, Variant variant,
                                      const Limits& limits = {});
CohomologyGroup cohomology_group(ModulePtr module, int degree, Variant variant,
                                 const Limits& limits = {});

struct CohomologousResult {
    bool cohomologous = false;
    std::optional<Cochain> witness; // g with c1 - c2 = ∂g (none in degree 1)
    Vec class_coordinates;          // of c1 - c2
};

/// Throws PreconditionError unless both are cocycles of the degree/variant.
CohomologousResult is_cohomologous(const Cochain& c1, const Cochain& c2, Variant variant,
                                   const Limits& limits = {});
CohomologousResult is_cohomologous(const CohomologyGroup& group, const Cochain& c1,
                                   const Cochain& c2);

} // namespace brann
