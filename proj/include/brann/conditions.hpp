#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "brann/cochain.hpp"

namespace brann {

/// One instance of a cocycle condition: lhs = rhs as sums of cochain entries.
struct ConditionInstance {
    std::string_view id;
    std::array<int, 4> witness{};
    int arity = 0;
    std::vector<Term> lhs;
    std::vector<Term> rhs;

    std::vector<int> witness_tuple() const { return {witness.begin(), witness.begin() + arity}; }
};

/// Condition labels checked at a degree/variant, in report order.
///   degree 1: S18 S19 (both images of ∂t vanish)
///   degree 2: S13..S17 (∂g = 0), plus nu-sym for ab/sym
///   degree 3: S1..S12, plus S20 S21 S22 for ab, plus S21b for sym
const std::vector<std::string_view>& condition_ids(int degree, Variant variant);

/// Number of ring variables the condition ranges over.
int condition_arity(std::string_view id);

ConditionInstance condition_instance(const FiniteCommutativeRing& ring, std::string_view id,
                                     std::span<const int> witness);

/// Visits every instance of `id` in lexicographic witness order.
void for_each_instance(const FiniteCommutativeRing& ring, std::string_view id,
                       const std::function<void(const ConditionInstance&)>& fn);

struct Violation {
    std::string id;
    std::vector<int> witness; // first failing tuple
    int lhs = 0;
    int rhs = 0;
    std::size_t count = 0; // number of failing tuples
};

struct CocycleReport {
    std::vector<Violation> violations; // ordered as condition_ids
    std::size_t instances = 0;

    bool ok() const noexcept { return violations.empty(); }
    bool violates(std::string_view id) const;
};

/// Checks every condition of the degree/variant. Throws NormalizationError
/// before any condition is evaluated if c is not normalized.
CocycleReport is_cocycle(const Cochain& c, int degree, Variant variant, int workers = 1);
CocycleReport is_cocycle(const Cochain& c, Variant variant, int workers = 1);

/// is_cocycle(...).ok() that stops at the first failing instance.
bool satisfies_conditions(const Cochain& c, int degree, Variant variant);

} // namespace brann
