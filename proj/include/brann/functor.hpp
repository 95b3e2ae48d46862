#pragma once

#include <optional>
#include <string>
#include <vector>

#include "brann/anncat.hpp"
#include "brann/cohomology.hpp"

namespace brann {

/// M' as an R-module through p.
ModulePtr functor_module(const HomPair& pair);

/// (p^* c)(x, ...) = c(p(x), ...): a cochain over (R', M') becomes one over (R, M'_p).
Cochain pullback(const RingHom& p, const Cochain& c, const ModulePtr& target);
/// (q_* c)(x, ...) = q(c(x, ...)): a cochain over (R, M) becomes one over (R, M'_p).
Cochain pushforward(const HomPair& pair, const Cochain& c, const ModulePtr& target);

/// A braided Ann-functor of type (p, q) with g = (μ, ν) over (R, M'_p).
struct BrAnnFunctorData {
    HomPair pair;
    Cochain g;
};

struct Obstruction {
    Cochain k;                 // p^*(h',β') − q_*(h,β)
    Vec class_coordinates;     // in H^3_ab(R, M'_p)
    Vec invariant_factors;

    bool vanishes() const;
};

Obstruction obstruction(const TypeRMCategory& source, const TypeRMCategory& target,
                        const HomPair& pair, const Limits& limits = {});

struct ComponentFailure {
    Component component;
    std::vector<int> witness; // first failing arguments
    int lhs = 0;              // (∂g) entry
    int rhs = 0;              // k entry
    std::size_t count = 0;
};

struct FunctorDiagramFailure {
    std::string id;
    std::vector<int> objects;
    Morphism lhs;
    Morphism rhs;
};

struct FunctorReport {
    std::vector<ComponentFailure> components;  // ξ, η, α, λ, ρ, β order
    std::vector<FunctorDiagramFailure> diagrams;

    bool components_ok() const noexcept { return components.empty(); }
    bool diagrams_ok() const noexcept { return diagrams.empty(); }
    bool ok() const noexcept { return components_ok() && diagrams_ok(); }
    bool fails(Component c) const;
    /// True when every component except ρ holds.
    bool all_but_rho_ok() const;
};

/// Checks ∂g = p^*(h',β') − q_*(h,β) componentwise and, independently, the
/// functor compatibility diagrams evaluated in the target category.
FunctorReport check_functor(const BrAnnFunctorData& f, const TypeRMCategory& source,
                            const TypeRMCategory& target);

struct FunctorClass {
    Vec coordinates; // H^2_ab(R, M'_p) coordinates of g − g_0
    BrAnnFunctorData representative;
};

struct FunctorClassification {
    Obstruction obstruction;
    Vec h2_invariant_factors;
    std::vector<FunctorClass> classes; // empty when obstructed
    bool brute_force = false;
};

struct Realization {
    Obstruction obstruction;
    std::optional<BrAnnFunctorData> functor;
};

Realization realize_functor(const TypeRMCategory& source, const TypeRMCategory& target,
                            const HomPair& pair, const Limits& limits = {});

/// Homotopy classes of braided Ann-functors of type (p, q).
FunctorClassification classify_functors(const TypeRMCategory& source,
                                        const TypeRMCategory& target, const HomPair& pair,
                                        const Limits& limits = {});

/// Aut(F) as Z^1_ab(R, M'_p).
SubgroupPresentation aut_functor(const BrAnnFunctorData& f, const Limits& limits = {});

/// f2 ∘ f1 with g = q2_*(g1) + p1^*(g2).
BrAnnFunctorData compose_functors(const BrAnnFunctorData& f2, const BrAnnFunctorData& f1);

BrAnnFunctorData identity_functor(const TypeRMCategory& cat);

/// The structure (ξ, η, α, λ, ρ; β) = (0, 0, α, 0, 0; 0).
Cochain harrison_embed(const ModulePtr& module, const Table& alpha);
CocycleReport harrison_is_cocycle(const ModulePtr& module, const Table& alpha);

/// Every α accepted by harrison_is_cocycle (brute force under limits.brute_bound).
std::vector<Table> harrison_cocycles(const ModulePtr& module, const Limits& limits = {});

struct CategoryEntry {
    Vec coordinates;
    TypeRMCategory category;
};

struct CategoryClassification {
    CohomologyGroup group;
    std::vector<CategoryEntry> entries; // one per class, coordinate order

    /// Index of the entry equivalent to the structure.
    std::size_t locate(const Cochain& structure) const;
};

/// Pairwise non-equivalent braided Ann-categories of type (R, M), one per
/// class of H^3_ab(R, M).
CategoryClassification classify_categories(const ModulePtr& module, const Limits& limits = {});

/// Every coordinate vector of a group with the given invariant factors, in
/// lexicographic order.
std::vector<Vec> enumerate_coordinates(const Vec& factors);

} // namespace brann
