#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "brann/table.hpp"

namespace brann {

using Matrix2D = std::vector<std::vector<int>>;

/// Finite commutative ring with unit, given by explicit operation tables.
/// Every axiom is checked exhaustively when the ring is built.
class FiniteCommutativeRing {
public:
    /// Throws AxiomError naming the first violated axiom and its witness.
    static FiniteCommutativeRing from_tables(const Matrix2D& add, const Matrix2D& mul, int zero,
                                             int one);

    int size() const noexcept { return size_; }
    int zero() const noexcept { return zero_; }
    int one() const noexcept { return one_; }

    int add(int x, int y) const { return add_(x, y); }
    int mul(int x, int y) const { return mul_(x, y); }
    int neg(int x) const { return neg_[x]; }
    int sub(int x, int y) const { return add_(x, neg_[y]); }

    const Table& add_table() const noexcept { return add_; }
    const Table& mul_table() const noexcept { return mul_; }
    const std::vector<int>& neg_table() const noexcept { return neg_; }

    friend bool operator==(const FiniteCommutativeRing&, const FiniteCommutativeRing&) = default;

private:
    friend class FiniteModule;
    FiniteCommutativeRing() = default;

    int size_ = 0;
    int zero_ = 0;
    int one_ = 0;
    Table add_;
    Table mul_;
    std::vector<int> neg_;
};

/// Z/n with the usual representatives 0..n-1.
FiniteCommutativeRing make_cyclic_ring(int n);

/// Componentwise product; the pair (i, j) is flattened to i * b.size() + j.
FiniteCommutativeRing make_product_ring(const FiniteCommutativeRing& a,
                                        const FiniteCommutativeRing& b);

/// Finite module over a commutative ring. The additive group is
/// Z/d1 + ... + Z/dk with d1 | d2 | ... | dk; an element's index is the
/// mixed-radix number of its coordinates, first coordinate least significant.
/// A single action table serves as both the left and the right action.
class FiniteModule {
public:
    static FiniteModule make(const FiniteCommutativeRing& ring, std::vector<int> factors,
                             const Matrix2D& action);

    const FiniteCommutativeRing& ring() const noexcept { return ring_; }
    int size() const noexcept { return size_; }
    const std::vector<int>& factors() const noexcept { return factors_; }
    int generator_count() const noexcept { return static_cast<int>(factors_.size()); }
    int exponent() const noexcept { return factors_.empty() ? 1 : factors_.back(); }

    int zero() const noexcept { return 0; }
    int add(int a, int b) const { return add_(a, b); }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add_(a, neg_[b]); }
    /// r . a
    int act(int r, int a) const { return action_[static_cast<std::size_t>(r) * size_ + a]; }
    /// k * a for an integer k (any sign).
    int multiple(std::int64_t k, int a) const;

    std::vector<int> coordinates(int a) const;
    int element(const std::vector<std::int64_t>& coords) const;
    int generator(int i) const;

    /// Integer matrix of a -> r.a on generator coordinates: column j holds the
    /// coordinates of r . g_j.
    const std::vector<std::vector<std::int64_t>>& action_matrix(int r) const {
        return action_matrices_[r];
    }

    const std::vector<int>& action_data() const noexcept { return action_; }
    Matrix2D action_rows() const;

    friend bool operator==(const FiniteModule&, const FiniteModule&) = default;

private:
    FiniteModule() = default;

    FiniteCommutativeRing ring_;
    std::vector<int> factors_;
    int size_ = 1;
    Table add_;
    std::vector<int> neg_;
    std::vector<int> action_;
    std::vector<std::vector<std::vector<std::int64_t>>> action_matrices_;
};

/// The ring as a module over itself. Finds an invariant-factor basis of (R,+)
/// and re-indexes elements accordingly.
FiniteModule make_regular_module(const FiniteCommutativeRing& ring);

/// M = 0.
FiniteModule make_trivial_module(const FiniteCommutativeRing& ring);

struct ValidationReport {
    bool ok = true;
    std::string axiom;
    std::vector<int> witness;

    static ValidationReport pass() { return {}; }
    static ValidationReport fail(std::string axiom, std::vector<int> witness) {
        return {false, std::move(axiom), std::move(witness)};
    }
};

struct RingHom {
    FiniteCommutativeRing source;
    FiniteCommutativeRing target;
    std::vector<int> map;

    int operator()(int x) const { return map[x]; }
};

/// (p, q) with p a ring map and q : M -> M' additive and q(x a) = p(x) q(a).
struct HomPair {
    RingHom p;
    FiniteModule source_module;
    FiniteModule target_module;
    std::vector<int> q;
};

ValidationReport check_ring_hom(const RingHom& hom);
ValidationReport check_hom_pair(const HomPair& pair);

RingHom identity_hom(const FiniteCommutativeRing& ring);
HomPair identity_pair(const FiniteModule& module);

/// M' viewed as an R-module through p : R -> R'  (s . a' = p(s) a').
FiniteModule pulled_back_module(const FiniteModule& target, const RingHom& p);

/// Every ring homomorphism source -> target (exhaustive search; desk scale only).
std::vector<RingHom> all_ring_homs(const FiniteCommutativeRing& source,
                                   const FiniteCommutativeRing& target);

/// Every valid pair (p, q) between the two modules.
std::vector<HomPair> all_hom_pairs(const FiniteModule& source, const FiniteModule& target);

} // namespace brann
