#include "brann/anncat.hpp"

#include <algorithm>

#include "brann/conditions.hpp"
#include "brann/error.hpp"
#include "brann/parallel.hpp"

namespace brann {

Morphism mor_compose(const FiniteModule& m, Morphism f, Morphism g) {
    if (f.object != g.object)
        throw CompositionError("cannot compose morphisms of objects " + std::to_string(f.object) +
                               " and " + std::to_string(g.object));
    return {f.object, m.add(f.value, g.value)};
}

Morphism mor_plus(const FiniteModule& m, Morphism f, Morphism g) {
    return {m.ring().add(f.object, g.object), m.add(f.value, g.value)};
}

Morphism mor_times(const FiniteModule& m, Morphism f, Morphism g) {
    return {m.ring().mul(f.object, g.object),
            m.add(m.act(f.object, g.value), m.act(g.object, f.value))};
}

// ---------------------------------------------------------------------------

ObjectExpr ObjectExpr::var(int index) {
    ObjectExpr e;
    e.kind_ = Kind::var;
    e.index_ = index;
    return e;
}

ObjectExpr ObjectExpr::zero() { return {}; }

ObjectExpr ObjectExpr::one() {
    ObjectExpr e;
    e.kind_ = Kind::one;
    return e;
}

ObjectExpr operator+(const ObjectExpr& a, const ObjectExpr& b) {
    ObjectExpr e;
    e.kind_ = ObjectExpr::Kind::plus;
    e.lhs_ = std::make_shared<const ObjectExpr>(a);
    e.rhs_ = std::make_shared<const ObjectExpr>(b);
    return e;
}

ObjectExpr operator*(const ObjectExpr& a, const ObjectExpr& b) {
    ObjectExpr e;
    e.kind_ = ObjectExpr::Kind::times;
    e.lhs_ = std::make_shared<const ObjectExpr>(a);
    e.rhs_ = std::make_shared<const ObjectExpr>(b);
    return e;
}

bool operator==(const ObjectExpr& a, const ObjectExpr& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
    case ObjectExpr::Kind::var: return a.index_ == b.index_;
    case ObjectExpr::Kind::zero:
    case ObjectExpr::Kind::one: return true;
    default: return *a.lhs_ == *b.lhs_ && *a.rhs_ == *b.rhs_;
    }
}

int ObjectExpr::evaluate(const FiniteCommutativeRing& ring, std::span<const int> objects) const {
    switch (kind_) {
    case Kind::var:
        if (index_ >= static_cast<int>(objects.size()))
            throw ShapeError("object variable " + std::to_string(index_) + " is not bound");
        return objects[index_];
    case Kind::zero: return ring.zero();
    case Kind::one: return ring.one();
    case Kind::plus: return ring.add(lhs_->evaluate(ring, objects), rhs_->evaluate(ring, objects));
    case Kind::times: return ring.mul(lhs_->evaluate(ring, objects), rhs_->evaluate(ring, objects));
    }
    return 0;
}

std::string ObjectExpr::str() const {
    static const char* names = "XYZTUVW";
    switch (kind_) {
    case Kind::var: return index_ < 7 ? std::string(1, names[index_]) : "V" + std::to_string(index_);
    case Kind::zero: return "0";
    case Kind::one: return "1";
    case Kind::plus: return "(" + lhs_->str() + "+" + rhs_->str() + ")";
    case Kind::times: return "(" + lhs_->str() + rhs_->str() + ")";
    }
    return "?";
}

std::string_view constraint_name(Constraint c) {
    switch (c) {
    case Constraint::aplus: return "a+";
    case Constraint::cplus: return "c+";
    case Constraint::a: return "a";
    case Constraint::c: return "c";
    case Constraint::L: return "L";
    case Constraint::R: return "R";
    case Constraint::gplus: return "g";
    case Constraint::dplus: return "d";
    case Constraint::l: return "l";
    case Constraint::r: return "r";
    }
    return "?";
}

Step step(Constraint c, std::vector<ObjectExpr> objects) {
    Step s;
    s.kind = Step::Kind::constraint;
    s.constraint = c;
    s.objects = std::move(objects);
    return s;
}

Step step_inv(Constraint c, std::vector<ObjectExpr> objects) {
    Step s = step(c, std::move(objects));
    s.inverse = true;
    return s;
}

Step id_step(ObjectExpr object) {
    Step s;
    s.kind = Step::Kind::identity;
    s.objects = {std::move(object)};
    return s;
}

Step plus_step(PathExpression left, PathExpression right) {
    Step s;
    s.kind = Step::Kind::plus;
    s.operands = {std::move(left), std::move(right)};
    return s;
}

Step times_step(PathExpression left, PathExpression right) {
    Step s;
    s.kind = Step::Kind::times;
    s.operands = {std::move(left), std::move(right)};
    return s;
}

PathExpression path(std::vector<Step> steps) { return {std::move(steps)}; }
PathExpression id_path(ObjectExpr object) { return path({id_step(std::move(object))}); }

PathExpression inverse(const PathExpression& p) {
    PathExpression out;
    for (auto it = p.steps.rbegin(); it != p.steps.rend(); ++it) {
        Step s = *it;
        if (s.kind == Step::Kind::constraint) s.inverse = !s.inverse;
        for (auto& op : s.operands) op = inverse(op);
        out.steps.push_back(std::move(s));
    }
    return out;
}

// ---------------------------------------------------------------------------

TypeRMCategory TypeRMCategory::make(const Cochain& structure) {
    TypeRMCategory cat = unchecked(structure);
    auto report = is_cocycle(cat.structure_, 3, Variant::ab);
    if (!report.ok()) {
        const auto& v = report.violations.front();
        throw PreconditionError("structure is not an abelian 3-cocycle: " + v.id + " fails at " +
                                format_tuple(v.witness));
    }
    return cat;
}

TypeRMCategory TypeRMCategory::unchecked(const Cochain& structure) {
    if (structure.degree() != 3 || !structure.has(Component::beta))
        throw ShapeError("a structure is a degree-3 abelian cochain");
    TypeRMCategory cat;
    cat.structure_ = structure;
    return cat;
}

namespace {

struct Typed {
    ObjectExpr source, target;
    Component component;
    bool strict;
};

Typed constraint_type(Constraint c, const std::vector<ObjectExpr>& o) {
    auto need = [&](std::size_t n) {
        if (o.size() != n)
            throw ShapeError("constraint " + std::string(constraint_name(c)) + " takes " +
                             std::to_string(n) + " objects");
    };
    switch (c) {
    case Constraint::aplus:
        need(3);
        return {o[0] + (o[1] + o[2]), (o[0] + o[1]) + o[2], Component::xi, false};
    case Constraint::cplus: need(2); return {o[0] + o[1], o[1] + o[0], Component::eta, false};
    case Constraint::a:
        need(3);
        return {o[0] * (o[1] * o[2]), (o[0] * o[1]) * o[2], Component::alpha, false};
    case Constraint::c: need(2); return {o[0] * o[1], o[1] * o[0], Component::beta, false};
    case Constraint::L:
        need(3);
        return {o[0] * (o[1] + o[2]), o[0] * o[1] + o[0] * o[2], Component::lambda, false};
    case Constraint::R:
        need(3);
        return {(o[0] + o[1]) * o[2], o[0] * o[2] + o[1] * o[2], Component::rho, false};
    case Constraint::gplus: need(1); return {ObjectExpr::zero() + o[0], o[0], Component::t, true};
    case Constraint::dplus: need(1); return {o[0] + ObjectExpr::zero(), o[0], Component::t, true};
    case Constraint::l: need(1); return {ObjectExpr::one() * o[0], o[0], Component::t, true};
    case Constraint::r: need(1); return {o[0] * ObjectExpr::one(), o[0], Component::t, true};
    }
    throw ShapeError("unknown constraint");
}

EvaluatedPath evaluate_step(const TypeRMCategory& cat, const Step& s, std::span<const int> objs) {
    const auto& ring = cat.ring();
    const auto& m = cat.module();
    switch (s.kind) {
    case Step::Kind::identity: {
        if (s.objects.size() != 1) throw ShapeError("identity takes one object");
        return {{s.objects[0].evaluate(ring, objs), m.zero()}, s.objects[0], s.objects[0]};
    }
    case Step::Kind::constraint: {
        Typed t = constraint_type(s.constraint, s.objects);
        int value = m.zero();
        if (!t.strict) {
            std::vector<int> args;
            for (const auto& o : s.objects) args.push_back(o.evaluate(ring, objs));
            value = cat.structure()[t.component].at(args);
        }
        int object = t.source.evaluate(ring, objs);
        if (s.inverse) return {{object, m.neg(value)}, t.target, t.source};
        return {{object, value}, t.source, t.target};
    }
    case Step::Kind::plus:
    case Step::Kind::times: {
        if (s.operands.size() != 2) throw ShapeError("⊕/⊗ steps take two sub-paths");
        auto f = evaluate_path_typed(cat, s.operands[0], objs);
        auto g = evaluate_path_typed(cat, s.operands[1], objs);
        if (s.kind == Step::Kind::plus)
            return {mor_plus(m, f.morphism, g.morphism), f.source + g.source, f.target + g.target};
        return {mor_times(m, f.morphism, g.morphism), f.source * g.source, f.target * g.target};
    }
    }
    throw ShapeError("unknown step");
}

} // namespace

EvaluatedPath evaluate_path_typed(const TypeRMCategory& cat, const PathExpression& p,
                                  std::span<const int> objects) {
    if (p.steps.empty()) throw PathError(0, "empty path");
    EvaluatedPath acc;
    for (std::size_t i = 0; i < p.steps.size(); ++i) {
        EvaluatedPath e;
        try {
            e = evaluate_step(cat, p.steps[i], objects);
        } catch (const PathError& err) {
            throw PathError(i, std::string("inside sub-path: ") + err.what());
        }
        if (i == 0) {
            acc = e;
            continue;
        }
        if (!(e.source == acc.target))
            throw PathError(i, "starts at " + e.source.str() + " but the path is at " +
                                   acc.target.str());
        acc.morphism = mor_compose(cat.module(), acc.morphism, e.morphism);
        acc.target = e.target;
    }
    return acc;
}

Morphism evaluate_path(const TypeRMCategory& cat, const PathExpression& p,
                       std::span<const int> objects) {
    return evaluate_path_typed(cat, p, objects).morphism;
}

// ---------------------------------------------------------------------------

namespace {

using C = Constraint;

std::vector<Diagram> build_catalog() {
    const ObjectExpr X = ObjectExpr::var(0), Y = ObjectExpr::var(1), Z = ObjectExpr::var(2),
                     T = ObjectExpr::var(3);
    const ObjectExpr O = ObjectExpr::zero();
    auto P = [](std::vector<Step> s) { return path(std::move(s)); };
    auto I = [](ObjectExpr e) { return id_path(std::move(e)); };
    auto one = [](Step s) { return path({std::move(s)}); };
    std::vector<Diagram> d;

    // Symmetric categorical group (⊕, a+, c+), strict unit 0.
    d.push_back({"plus-pentagon", 4,
                 P({step(C::aplus, {X, Y, Z + T}), step(C::aplus, {X + Y, Z, T})}),
                 P({plus_step(I(X), one(step(C::aplus, {Y, Z, T}))),
                    step(C::aplus, {X, Y + Z, T}),
                    plus_step(one(step(C::aplus, {X, Y, Z})), I(T))})});
    d.push_back({"plus-hexagon", 3,
                 P({plus_step(I(X), one(step(C::cplus, {Y, Z}))), step(C::aplus, {X, Z, Y}),
                    plus_step(one(step(C::cplus, {X, Z})), I(Y))}),
                 P({step(C::aplus, {X, Y, Z}), step(C::cplus, {X + Y, Z}),
                    step(C::aplus, {Z, X, Y})})});
    d.push_back({"plus-symmetry", 2, P({step(C::cplus, {X, Y}), step(C::cplus, {Y, X})}),
                 I(X + Y)});
    d.push_back({"plus-triangle", 2,
                 P({step(C::aplus, {X, O, Y}), plus_step(one(step(C::dplus, {X})), I(Y))}),
                 P({plus_step(I(X), one(step(C::gplus, {Y})))})});

    // Monoidal category (⊗, a), strict unit 1.
    d.push_back({"times-pentagon", 4,
                 P({step(C::a, {X, Y, Z * T}), step(C::a, {X * Y, Z, T})}),
                 P({times_step(I(X), one(step(C::a, {Y, Z, T}))), step(C::a, {X, Y * Z, T}),
                    times_step(one(step(C::a, {X, Y, Z})), I(T))})});
    d.push_back({"times-triangle", 2,
                 P({step(C::a, {X, ObjectExpr::one(), Y}),
                    times_step(one(step(C::r, {X})), I(Y))}),
                 P({times_step(I(X), one(step(C::l, {Y})))})});

    // L^A and R^A are ⊕-functors compatible with a+ and c+ (A is the last variable).
    const ObjectExpr& A3 = T; // in 3-variable diagrams A is the variable after X, Y, Z
    d.push_back({"L-aplus", 4,
                 P({times_step(I(A3), one(step(C::aplus, {X, Y, Z}))),
                    step(C::L, {A3, X + Y, Z}),
                    plus_step(one(step(C::L, {A3, X, Y})), I(A3 * Z))}),
                 P({step(C::L, {A3, X, Y + Z}), plus_step(I(A3 * X), one(step(C::L, {A3, Y, Z}))),
                    step(C::aplus, {A3 * X, A3 * Y, A3 * Z})})});
    d.push_back({"L-cplus", 3,
                 P({step(C::L, {Z, X, Y}), step(C::cplus, {Z * X, Z * Y})}),
                 P({times_step(I(Z), one(step(C::cplus, {X, Y}))), step(C::L, {Z, Y, X})})});
    d.push_back({"R-aplus", 4,
                 P({times_step(one(step(C::aplus, {X, Y, Z})), I(A3)),
                    step(C::R, {X + Y, Z, A3}),
                    plus_step(one(step(C::R, {X, Y, A3})), I(Z * A3))}),
                 P({step(C::R, {X, Y + Z, A3}), plus_step(I(X * A3), one(step(C::R, {Y, Z, A3}))),
                    step(C::aplus, {X * A3, Y * A3, Z * A3})})});
    d.push_back({"R-cplus", 3,
                 P({step(C::R, {X, Y, Z}), step(C::cplus, {X * Z, Y * Z})}),
                 P({times_step(one(step(C::cplus, {X, Y})), I(Z)), step(C::R, {Y, X, Z})})});

    // Distributivity against associativity: objects (A, B, X, Y) = (X, Y, Z, T).
    {
        const ObjectExpr &A = X, &B = Y, &U = Z, &V = T;
        d.push_back({"distributivity-left-assoc", 4,
                     P({step(C::a, {A, B, U + V}), step(C::L, {A * B, U, V})}),
                     P({times_step(I(A), one(step(C::L, {B, U, V}))),
                        step(C::L, {A, B * U, B * V}),
                        plus_step(one(step(C::a, {A, B, U})), one(step(C::a, {A, B, V})))})});
        // (X⊕Y)(BA): objects (X, Y, B, A).
        d.push_back({"distributivity-right-assoc", 4,
                     P({step(C::a, {X + Y, Z, T}), times_step(one(step(C::R, {X, Y, Z})), I(T)),
                        step(C::R, {X * Z, Y * Z, T})}),
                     P({step(C::R, {X, Y, Z * T}),
                        plus_step(one(step(C::a, {X, Z, T})), one(step(C::a, {Y, Z, T})))})});
        // A((X⊕Y)B): objects (A, X, Y, B).
        d.push_back({"distributivity-middle-assoc", 4,
                     P({step(C::a, {X, Y + Z, T}), times_step(one(step(C::L, {X, Y, Z})), I(T)),
                        step(C::R, {X * Y, X * Z, T})}),
                     P({times_step(I(X), one(step(C::R, {Y, Z, T}))),
                        step(C::L, {X, Y * T, Z * T}),
                        plus_step(one(step(C::a, {X, Y, T})), one(step(C::a, {X, Z, T})))})});
        // (A⊕B)(X⊕Y) with v_{U,V,Z,T}: (U⊕V)⊕(Z⊕T) -> (U⊕Z)⊕(V⊕T).
        const ObjectExpr u = A * U, v = B * U, z = A * V, t = B * V;
        PathExpression shuffle =
            P({step(C::aplus, {u + v, z, t}),
               plus_step(P({step_inv(C::aplus, {u, v, z})}), I(t)),
               plus_step(P({plus_step(I(u), P({step_inv(C::cplus, {z, v})}))}), I(t)),
               plus_step(P({step(C::aplus, {u, z, v})}), I(t)),
               step_inv(C::aplus, {u + z, v, t})});
        PathExpression via_left = P({step(C::L, {A + B, U, V}),
                                     plus_step(one(step(C::R, {A, B, U})), one(step(C::R, {A, B, V})))});
        via_left.steps.insert(via_left.steps.end(), shuffle.steps.begin(), shuffle.steps.end());
        d.push_back({"distributivity-square", 4, via_left,
                     P({step(C::R, {A, B, U + V}),
                        plus_step(one(step(C::L, {A, U, V})), one(step(C::L, {B, U, V})))})});
    }

    // Strict unit of ⊗ against distributivity.
    d.push_back({"unit-left-distributivity", 2,
                 P({step(C::L, {ObjectExpr::one(), X, Y}),
                    plus_step(one(step(C::l, {X})), one(step(C::l, {Y})))}),
                 P({step(C::l, {X + Y})})});
    d.push_back({"unit-right-distributivity", 2,
                 P({step(C::R, {X, Y, ObjectExpr::one()}),
                    plus_step(one(step(C::r, {X})), one(step(C::r, {Y})))}),
                 P({step(C::r, {X + Y})})});

    // Braiding hexagons for (⊗, a, c).
    d.push_back({"B1", 3,
                 P({times_step(one(step(C::c, {X, Y})), I(Z)), step_inv(C::a, {Y, X, Z}),
                    times_step(I(Y), one(step(C::c, {X, Z})))}),
                 P({step_inv(C::a, {X, Y, Z}), step(C::c, {X, Y * Z}), step_inv(C::a, {Y, Z, X})})});
    d.push_back({"B2", 3,
                 P({times_step(I(X), one(step(C::c, {Y, Z}))), step(C::a, {X, Z, Y}),
                    times_step(one(step(C::c, {X, Z})), I(Y))}),
                 P({step(C::a, {X, Y, Z}), step(C::c, {X * Y, Z}), step(C::a, {Z, X, Y})})});

    // Braiding against distributivity: A(X⊕Y) with objects (A, X, Y).
    d.push_back({"braiding-distributivity", 3,
                 P({step(C::L, {X, Y, Z}), plus_step(one(step(C::c, {X, Y})), one(step(C::c, {X, Z})))}),
                 P({step(C::c, {X, Y + Z}), step(C::R, {Y, Z, X})})});
    d.push_back({"c00", 0, P({step(C::c, {O, O})}), I(O * O)});
    return d;
}

} // namespace

const std::vector<Diagram>& diagram_catalog() {
    static const std::vector<Diagram> catalog = build_catalog();
    return catalog;
}

std::vector<std::string> AxiomReport::failing_diagrams() const {
    std::vector<std::string> out;
    for (const auto& f : failures)
        if (out.empty() || out.back() != f.id) out.push_back(f.id);
    return out;
}

AxiomReport verify_axioms(const TypeRMCategory& cat, int workers) {
    const auto& catalog = diagram_catalog();
    const int n = cat.ring().size();
    std::vector<std::vector<DiagramFailure>> found(catalog.size());
    std::vector<std::size_t> counts(catalog.size(), 0);
    parallel_for(catalog.size(), workers, [&](std::size_t k) {
        const Diagram& dg = catalog[k];
        std::vector<int> objs(dg.arity, 0);
        while (true) {
            auto l = evaluate_path_typed(cat, dg.lhs, objs);
            auto r = evaluate_path_typed(cat, dg.rhs, objs);
            if (!(l.source == r.source) || !(l.target == r.target))
                throw Error("internal: diagram " + dg.id + " has mismatched ends");
            ++counts[k];
            if (!(l.morphism == r.morphism)) found[k].push_back({dg.id, objs, l.morphism, r.morphism});
            int i = dg.arity - 1;
            while (i >= 0 && ++objs[i] == n) objs[i--] = 0;
            if (i < 0) break;
        }
    });
    AxiomReport report;
    for (std::size_t k = 0; k < catalog.size(); ++k) {
        report.checked += counts[k];
        for (auto& f : found[k]) report.failures.push_back(std::move(f));
    }
    return report;
}

Table trace_of(const TypeRMCategory& cat) {
    const Table& beta = cat.structure()[Component::beta];
    Table out(cat.ring().size(), 1);
    for (int x = 0; x < cat.ring().size(); ++x) out(x) = beta(x, x);
    return out;
}

bool is_symmetric(const TypeRMCategory& cat) {
    const Table& beta = cat.structure()[Component::beta];
    const auto& m = cat.module();
    for (int x = 0; x < cat.ring().size(); ++x)
        for (int y = 0; y < cat.ring().size(); ++y)
            if (m.add(beta(x, y), beta(y, x)) != m.zero()) return false;
    return true;
}

} // namespace brann
