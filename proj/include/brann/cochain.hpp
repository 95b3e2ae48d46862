#pragma once

#include <array>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "brann/ring.hpp"
#include "brann/table.hpp"

namespace brann {

enum class Variant { macl, ab, sym };

std::string_view variant_name(Variant v);
Variant parse_variant(std::string_view name);

enum class Component { t, mu, nu, xi, eta, alpha, lambda, rho, beta };

std::string_view component_name(Component c);
int component_arity(Component c);

/// Components carried by a cochain of the given degree; only degree-3
/// cochains depend on the variant (macl has no beta).
const std::vector<Component>& components_of(int degree, Variant variant);

/// True if normalization forces the entry to be zero.
bool pinned(const FiniteCommutativeRing& ring, Component c, std::span<const int> args);

using ModulePtr = std::shared_ptr<const FiniteModule>;

/// A normalized cochain of degree 1, 2 or 3 over (R, M): one table per component.
class Cochain {
public:
    Cochain() = default;
    static Cochain zero(ModulePtr module, int degree, Variant variant = Variant::ab);

    int degree() const noexcept { return degree_; }
    Variant variant() const noexcept { return variant_; }
    const ModulePtr& module_ptr() const noexcept { return module_; }
    const FiniteModule& module() const { return *module_; }
    const FiniteCommutativeRing& ring() const { return module_->ring(); }
    const std::vector<Component>& components() const { return components_of(degree_, variant_); }
    bool has(Component c) const;

    Table& operator[](Component c);
    const Table& operator[](Component c) const;

    int value(Component c, std::span<const int> args) const { return (*this)[c].at(args); }

    /// Throws NormalizationError for the first pinned entry (component order,
    /// then lexicographic arguments) that is nonzero.
    void check_normalized() const;
    bool is_normalized() const;

    /// Same degree, component set and ambient (R, M).
    bool same_shape(const Cochain& other) const;

    /// The same tables re-tagged with another variant (degree 3 adds or drops beta).
    Cochain with_variant(Variant v) const;

    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.degree_ == b.degree_ && a.components() == b.components() &&
               *a.module_ == *b.module_ && a.tables_ == b.tables_;
    }

private:
    std::size_t slot(Component c) const;

    ModulePtr module_;
    int degree_ = 0;
    Variant variant_ = Variant::ab;
    std::vector<Table> tables_;
};

/// sa * a + sb * b entrywise.
Cochain combine(const Cochain& a, const Cochain& b, int sa, int sb);
Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);

/// A signed, optionally scaled reference to one cochain entry:
/// sign * scalar . c(args), with scalar < 0 meaning no ring factor.
struct Term {
    int sign = 1;
    int scalar = -1;
    Component component = Component::t;
    std::array<int, 3> args{};
    int arity = 0;

    std::span<const int> arguments() const { return {args.data(), static_cast<std::size_t>(arity)}; }
};

int evaluate_terms(const Cochain& c, const std::vector<Term>& terms);

/// Terms of (∂c)_target(args) in entries of c, where c has degree one less
/// than target's degree. Drives both the coboundary maps and the degree-1/2
/// cocycle conditions.
std::vector<Term> coboundary_terms(const FiniteCommutativeRing& ring, Component target,
                                   std::span<const int> args);

/// (μ,ν) = ∂t.
Cochain coboundary1(const Cochain& t);
/// h = ∂(μ,ν) without β.
Cochain coboundary2_macl(const Cochain& g);
/// (∂(μ,ν), β) with β(x,y) = ν(x,y) − ν(y,x).
Cochain coboundary2_ab(const Cochain& g);
/// Dispatches on degree; degree 2 honours the variant of the result.
Cochain coboundary(const Cochain& c, Variant variant = Variant::ab);

} // namespace brann
