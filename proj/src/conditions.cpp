#include "brann/conditions.hpp"

#include <algorithm>

#include "brann/error.hpp"
#include "brann/parallel.hpp"

namespace brann {

const std::vector<std::string_view>& condition_ids(int degree, Variant variant) {
    static const std::vector<std::string_view> d1{"S18", "S19"};
    static const std::vector<std::string_view> d2m{"S13", "S14", "S15", "S16", "S17"};
    static const std::vector<std::string_view> d2a{"S13", "S14", "S15", "S16", "S17", "nu-sym"};
    static const std::vector<std::string_view> d3m{"S1", "S2", "S3", "S4",  "S5",  "S6",
                                                   "S7", "S8", "S9", "S10", "S11", "S12"};
    static const std::vector<std::string_view> d3a{"S1", "S2",  "S3",  "S4",  "S5",
                                                   "S6", "S7",  "S8",  "S9",  "S10",
                                                   "S11", "S12", "S20", "S21", "S22"};
    static const std::vector<std::string_view> d3s{"S1",  "S2",  "S3",  "S4",  "S5",  "S6",
                                                   "S7",  "S8",  "S9",  "S10", "S11", "S12",
                                                   "S20", "S21", "S22", "S21b"};
    switch (degree) {
    case 1: return d1;
    case 2: return variant == Variant::macl ? d2m : d2a;
    case 3: return variant == Variant::macl ? d3m : variant == Variant::ab ? d3a : d3s;
    default: throw ShapeError("degree must be 1, 2 or 3");
    }
}

int condition_arity(std::string_view id) {
    static const std::vector<std::string_view> four{"S1", "S6", "S7",  "S8",
                                                    "S9", "S10", "S11", "S12"};
    static const std::vector<std::string_view> two{"S3", "S21b", "S14", "S18", "S19", "nu-sym"};
    if (std::find(four.begin(), four.end(), id) != four.end()) return 4;
    if (std::find(two.begin(), two.end(), id) != two.end()) return 2;
    return 3;
}

namespace {

using C = Component;

Term T(int sign, C c, int a, int b) { return {sign, -1, c, {a, b, 0}, 2}; }
Term T(int sign, C c, int a, int b, int d) { return {sign, -1, c, {a, b, d}, 3}; }
Term S(int sign, int s, C c, int a, int b) { return {sign, s, c, {a, b, 0}, 2}; }
Term S(int sign, int s, C c, int a, int b, int d) { return {sign, s, c, {a, b, d}, 3}; }

} // namespace

ConditionInstance condition_instance(const FiniteCommutativeRing& r, std::string_view id,
                                     std::span<const int> w) {
    ConditionInstance ci;
    const int arity = condition_arity(id);
    if (static_cast<int>(w.size()) != arity)
        throw ShapeError("condition " + std::string(id) + " takes " + std::to_string(arity) +
                         " arguments");
    ci.arity = arity;
    std::copy(w.begin(), w.end(), ci.witness.begin());
    const int x = w[0], y = w[1];
    const int z = arity > 2 ? w[2] : 0;
    const int t = arity > 3 ? w[3] : 0;
    auto A = [&](int u, int v) { return r.add(u, v); };
    auto M = [&](int u, int v) { return r.mul(u, v); };
    auto& L = ci.lhs;
    auto& R = ci.rhs;

    // Degree 1 and 2: the coboundary image of the component vanishes.
    static const std::vector<std::pair<std::string_view, C>> images{
        {"S18", C::mu},    {"S19", C::nu},     {"S13", C::xi},  {"S14", C::eta},
        {"S15", C::alpha}, {"S16", C::lambda}, {"S17", C::rho}, {"nu-sym", C::beta}};
    for (const auto& [label, comp] : images)
        if (label == id) {
            ci.id = label;
            L = coboundary_terms(r, comp, w);
            return ci;
        }

    if (id == "S1") {
        ci.id = "S1";
        L = {T(1, C::xi, y, z, t), T(-1, C::xi, A(x, y), z, t), T(1, C::xi, x, A(y, z), t),
             T(-1, C::xi, x, y, A(z, t)), T(1, C::xi, x, y, z)};
    } else if (id == "S2") {
        ci.id = "S2";
        L = {T(1, C::xi, x, y, z), T(-1, C::xi, x, z, y), T(1, C::xi, z, x, y),
             T(1, C::eta, A(x, y), z), T(-1, C::eta, x, z), T(-1, C::eta, y, z)};
    } else if (id == "S3") {
        ci.id = "S3";
        L = {T(1, C::eta, x, y), T(1, C::eta, y, x)};
    } else if (id == "S4") {
        ci.id = "S4";
        L = {S(1, x, C::eta, y, z), T(-1, C::eta, M(x, y), M(x, z))};
        R = {T(1, C::lambda, x, y, z), T(-1, C::lambda, x, z, y)};
    } else if (id == "S5") {
        ci.id = "S5";
        L = {S(1, z, C::eta, x, y), T(-1, C::eta, M(x, z), M(y, z))};
        R = {T(1, C::rho, x, y, z), T(-1, C::rho, y, x, z)};
    } else if (id == "S6") {
        ci.id = "S6";
        L = {S(1, x, C::xi, y, z, t), T(-1, C::xi, M(x, y), M(x, z), M(x, t))};
        R = {T(1, C::lambda, x, z, t), T(-1, C::lambda, x, A(y, z), t),
             T(1, C::lambda, x, y, A(z, t)), T(-1, C::lambda, x, y, z)};
    } else if (id == "S7") {
        ci.id = "S7";
        L = {S(1, t, C::xi, x, y, z), T(-1, C::xi, M(x, t), M(y, t), M(z, t))};
        R = {T(1, C::rho, y, z, t), T(-1, C::rho, A(x, y), z, t), T(1, C::rho, x, A(y, z), t),
             T(-1, C::rho, x, y, t)};
    } else if (id == "S8") {
        ci.id = "S8";
        const int xz = M(x, z), xt = M(x, t), yz = M(y, z), yt = M(y, t);
        L = {T(1, C::rho, x, y, A(z, t)), T(-1, C::rho, x, y, z), T(-1, C::rho, x, y, t),
             T(1, C::lambda, x, z, t),    T(1, C::lambda, y, z, t), T(-1, C::lambda, A(x, y), z, t)};
        R = {T(-1, C::xi, A(xz, xt), yz, yt), T(1, C::xi, xz, xt, yz), T(-1, C::eta, xt, yz),
             T(1, C::xi, A(xz, yz), xt, yt), T(-1, C::xi, xz, yz, xt)};
    } else if (id == "S9") {
        ci.id = "S9";
        L = {T(1, C::alpha, x, y, A(z, t)), T(-1, C::alpha, x, y, z), T(-1, C::alpha, x, y, t)};
        R = {S(1, x, C::lambda, y, z, t), T(1, C::lambda, x, M(y, z), M(y, t)),
             T(-1, C::lambda, M(x, y), z, t)};
    } else if (id == "S10") {
        ci.id = "S10";
        L = {T(1, C::alpha, x, A(y, z), t), T(-1, C::alpha, x, y, t), T(-1, C::alpha, x, z, t)};
        R = {S(1, x, C::rho, y, z, t), T(-1, C::rho, M(x, y), M(x, z), t),
             T(1, C::lambda, x, M(y, t), M(z, t)), S(-1, t, C::lambda, x, y, z)};
    } else if (id == "S11") {
        ci.id = "S11";
        L = {T(1, C::alpha, A(x, y), z, t), T(-1, C::alpha, x, z, t), T(-1, C::alpha, y, z, t)};
        R = {S(-1, t, C::rho, x, y, z), T(-1, C::rho, M(x, z), M(y, z), t),
             T(1, C::rho, x, y, M(z, t))};
    } else if (id == "S12") {
        ci.id = "S12";
        L = {S(1, x, C::alpha, y, z, t), T(-1, C::alpha, M(x, y), z, t),
             T(1, C::alpha, x, M(y, z), t), T(-1, C::alpha, x, y, M(z, t)),
             S(1, t, C::alpha, x, y, z)};
    } else if (id == "S20") {
        ci.id = "S20";
        L = {T(1, C::alpha, x, y, z), T(-1, C::alpha, x, z, y), T(1, C::alpha, z, x, y),
             S(-1, x, C::beta, y, z), T(1, C::beta, M(x, y), z), S(-1, y, C::beta, x, z)};
    } else if (id == "S21") {
        ci.id = "S21";
        L = {T(1, C::alpha, x, y, z), T(-1, C::alpha, y, x, z), T(1, C::alpha, y, z, x),
             S(1, y, C::beta, x, z), T(-1, C::beta, x, M(y, z)), S(1, z, C::beta, x, y)};
    } else if (id == "S22") {
        ci.id = "S22";
        L = {T(1, C::beta, x, y), T(-1, C::beta, x, A(y, z)), T(1, C::beta, x, z)};
        R = {T(1, C::rho, y, z, x), T(-1, C::lambda, x, y, z)};
    } else if (id == "S21b") {
        ci.id = "S21b";
        L = {T(1, C::beta, x, y), T(1, C::beta, y, x)};
    } else {
        throw ShapeError("unknown condition id '" + std::string(id) + "'");
    }
    return ci;
}

void for_each_instance(const FiniteCommutativeRing& ring, std::string_view id,
                       const std::function<void(const ConditionInstance&)>& fn) {
    const int arity = condition_arity(id);
    const int n = ring.size();
    std::vector<int> w(arity, 0);
    while (true) {
        fn(condition_instance(ring, id, w));
        int i = arity - 1;
        while (i >= 0 && ++w[i] == n) w[i--] = 0;
        if (i < 0) break;
    }
}

bool CocycleReport::violates(std::string_view id) const {
    return std::any_of(violations.begin(), violations.end(),
                       [&](const Violation& v) { return v.id == id; });
}

CocycleReport is_cocycle(const Cochain& c, int degree, Variant variant, int workers) {
    if (c.degree() != degree)
        throw ShapeError("cochain has degree " + std::to_string(c.degree()) + ", expected " +
                         std::to_string(degree));
    if (degree == 3 && variant != Variant::macl && !c.has(Component::beta))
        throw ShapeError("abelian conditions need a beta component");
    c.check_normalized();

    const auto& ids = condition_ids(degree, variant);
    std::vector<Violation> found(ids.size());
    std::vector<std::size_t> counted(ids.size(), 0);
    parallel_for(ids.size(), workers, [&](std::size_t k) {
        Violation& v = found[k];
        v.id = std::string(ids[k]);
        for_each_instance(c.ring(), ids[k], [&](const ConditionInstance& ci) {
            ++counted[k];
            int lhs = evaluate_terms(c, ci.lhs);
            int rhs = evaluate_terms(c, ci.rhs);
            if (lhs == rhs) return;
            if (v.count++ == 0) {
                v.witness = ci.witness_tuple();
                v.lhs = lhs;
                v.rhs = rhs;
            }
        });
    });
    CocycleReport report;
    for (std::size_t k = 0; k < ids.size(); ++k) {
        report.instances += counted[k];
        if (found[k].count) report.violations.push_back(std::move(found[k]));
    }
    return report;
}

CocycleReport is_cocycle(const Cochain& c, Variant variant, int workers) {
    return is_cocycle(c, c.degree(), variant, workers);
}

bool satisfies_conditions(const Cochain& c, int degree, Variant variant) {
    if (c.degree() != degree) throw ShapeError("cochain degree does not match");
    c.check_normalized();
    const int n = c.ring().size();
    std::vector<std::string_view> ids = condition_ids(degree, variant);
    std::stable_sort(ids.begin(), ids.end(), [](std::string_view a, std::string_view b) {
        return condition_arity(a) < condition_arity(b);
    });
    for (std::string_view id : ids) {
        const int arity = condition_arity(id);
        std::vector<int> w(arity, 0);
        while (true) {
            ConditionInstance ci = condition_instance(c.ring(), id, w);
            if (evaluate_terms(c, ci.lhs) != evaluate_terms(c, ci.rhs)) return false;
            int i = arity - 1;
            while (i >= 0 && ++w[i] == n) w[i--] = 0;
            if (i < 0) break;
        }
    }
    return true;
}

} // namespace brann
