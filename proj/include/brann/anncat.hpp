#pragma once

#include <memory>
#include <string>
#include <vector>

#include "brann/cochain.hpp"

namespace brann {

/// A morphism (x, a) : x -> x.
struct Morphism {
    int object = 0;
    int value = 0;
    friend bool operator==(const Morphism&, const Morphism&) = default;
};

/// (x, a) ∘ (x, b) = (x, a + b).
Morphism mor_compose(const FiniteModule& m, Morphism f, Morphism g);
/// (x, a) ⊕ (y, b) = (x + y, a + b).
Morphism mor_plus(const FiniteModule& m, Morphism f, Morphism g);
/// (x, a) ⊗ (y, b) = (xy, x.b + y.a).
Morphism mor_times(const FiniteModule& m, Morphism f, Morphism g);

/// A formal object: a word in variables, 0, 1, ⊕ and ⊗.
class ObjectExpr {
public:
    enum class Kind { var, zero, one, plus, times };

    static ObjectExpr var(int index);
    static ObjectExpr zero();
    static ObjectExpr one();
    friend ObjectExpr operator+(const ObjectExpr& a, const ObjectExpr& b);
    friend ObjectExpr operator*(const ObjectExpr& a, const ObjectExpr& b);

    Kind kind() const noexcept { return kind_; }
    int evaluate(const FiniteCommutativeRing& ring, std::span<const int> objects) const;
    std::string str() const;

    friend bool operator==(const ObjectExpr& a, const ObjectExpr& b);

private:
    Kind kind_ = Kind::zero;
    int index_ = 0;
    std::shared_ptr<const ObjectExpr> lhs_, rhs_;
};

enum class Constraint {
    aplus, // X⊕(Y⊕Z) -> (X⊕Y)⊕Z   ξ(x,y,z)
    cplus, // X⊕Y -> Y⊕X           η(x,y)
    a,     // X(YZ) -> (XY)Z        α(x,y,z)
    c,     // XY -> YX              β(x,y)
    L,     // A(X⊕Y) -> AX⊕AY       λ(a,x,y)
    R,     // (X⊕Y)A -> XA⊕YA       ρ(x,y,a)
    gplus, // 0⊕X -> X              strict
    dplus, // X⊕0 -> X              strict
    l,     // 1X -> X               strict
    r,     // X1 -> X               strict
};

std::string_view constraint_name(Constraint c);

struct PathExpression;

/// One arrow of a composite: a constraint instance (possibly inverted), an
/// identity, or the ⊕/⊗ of two sub-paths (whiskering is ⊕/⊗ with an identity).
struct Step {
    enum class Kind { constraint, identity, plus, times };

    Kind kind = Kind::identity;
    Constraint constraint = Constraint::aplus;
    bool inverse = false;
    std::vector<ObjectExpr> objects; // constraint arguments, or the identity's object
    std::vector<PathExpression> operands;
};

struct PathExpression {
    std::vector<Step> steps;
};

// Builders.
Step step(Constraint c, std::vector<ObjectExpr> objects);
Step step_inv(Constraint c, std::vector<ObjectExpr> objects);
Step id_step(ObjectExpr object);
Step plus_step(PathExpression left, PathExpression right);
Step times_step(PathExpression left, PathExpression right);
PathExpression path(std::vector<Step> steps);
PathExpression id_path(ObjectExpr object);
PathExpression inverse(const PathExpression& p);

/// A braided Ann-category of type (R, M) given by an abelian 3-cochain.
class TypeRMCategory {
public:
    /// Requires the structure to be an abelian 3-cocycle.
    static TypeRMCategory make(const Cochain& structure);
    /// Accepts any degree-3 abelian cochain; for feeding non-cocycles to the verifier.
    static TypeRMCategory unchecked(const Cochain& structure);

    const Cochain& structure() const noexcept { return structure_; }
    const FiniteModule& module() const { return structure_.module(); }
    const FiniteCommutativeRing& ring() const { return structure_.ring(); }

private:
    TypeRMCategory() = default;
    Cochain structure_;
};

struct EvaluatedPath {
    Morphism morphism;
    ObjectExpr source;
    ObjectExpr target;
};

/// Composite of the steps; throws PathError when a step's source is not the
/// previous step's target.
EvaluatedPath evaluate_path_typed(const TypeRMCategory& cat, const PathExpression& p,
                                  std::span<const int> objects);
Morphism evaluate_path(const TypeRMCategory& cat, const PathExpression& p,
                       std::span<const int> objects = {});

struct Diagram {
    std::string id;
    int arity = 0;
    PathExpression lhs;
    PathExpression rhs;
};

/// Every coherence diagram of a braided Ann-category with strict units.
const std::vector<Diagram>& diagram_catalog();

struct DiagramFailure {
    std::string id;
    std::vector<int> objects;
    Morphism lhs;
    Morphism rhs;
};

struct AxiomReport {
    std::vector<DiagramFailure> failures; // diagram order, then lexicographic objects
    std::size_t checked = 0;

    bool ok() const noexcept { return failures.empty(); }
    std::vector<std::string> failing_diagrams() const;
};

AxiomReport verify_axioms(const TypeRMCategory& cat, int workers = 1);

/// x -> β(x,x) as a table R -> M.
Table trace_of(const TypeRMCategory& cat);
/// β(x,y) + β(y,x) = 0 for all x, y.
bool is_symmetric(const TypeRMCategory& cat);

} // namespace brann
