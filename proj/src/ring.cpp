#include "brann/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "brann/error.hpp"

namespace brann {
namespace {

Table square_table(const Matrix2D& rows, int n, const char* what) {
    if (static_cast<int>(rows.size()) != n)
        throw ShapeError(std::string(what) + " table must have " + std::to_string(n) + " rows");
    Table t(n, 2);
    for (int x = 0; x < n; ++x) {
        if (static_cast<int>(rows[x].size()) != n)
            throw ShapeError(std::string(what) + " table row " + std::to_string(x) +
                             " must have " + std::to_string(n) + " entries");
        for (int y = 0; y < n; ++y) {
            int v = rows[x][y];
            if (v < 0 || v >= n)
                throw ShapeError(std::string(what) + " table entry out of range at (" +
                                 std::to_string(x) + "," + std::to_string(y) + ")");
            t(x, y) = v;
        }
    }
    return t;
}

std::int64_t floor_mod(std::int64_t a, std::int64_t m) {
    std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

} // namespace

FiniteCommutativeRing FiniteCommutativeRing::from_tables(const Matrix2D& add, const Matrix2D& mul,
                                                         int zero, int one) {
    const int n = static_cast<int>(add.size());
    if (n < 1) throw InvalidSizeError("ring must have at least one element");
    FiniteCommutativeRing r;
    r.size_ = n;
    r.add_ = square_table(add, n, "add");
    r.mul_ = square_table(mul, n, "mul");
    if (zero < 0 || zero >= n || one < 0 || one >= n)
        throw ShapeError("zero/one index out of range");
    r.zero_ = zero;
    r.one_ = one;
    if (n > 1 && zero == one) throw AxiomError("zero-ne-one", {zero, one});

    const Table& A = r.add_;
    const Table& M = r.mul_;
    for (int x = 0; x < n; ++x)
        if (A(zero, x) != x) throw AxiomError("additive-identity", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (A(x, y) != A(y, x)) throw AxiomError("additive-commutativity", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (A(A(x, y), z) != A(x, A(y, z)))
                    throw AxiomError("additive-associativity", {x, y, z});
    r.neg_.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y)
            if (A(x, y) == zero) {
                r.neg_[x] = y;
                break;
            }
        if (r.neg_[x] < 0) throw AxiomError("additive-inverse", {x});
    }
    for (int x = 0; x < n; ++x)
        if (M(one, x) != x) throw AxiomError("multiplicative-identity", {x});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (M(x, y) != M(y, x)) throw AxiomError("multiplicative-commutativity", {x, y});
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (M(M(x, y), z) != M(x, M(y, z)))
                    throw AxiomError("multiplicative-associativity", {x, y, z});
                if (M(x, A(y, z)) != A(M(x, y), M(x, z)))
                    throw AxiomError("distributivity", {x, y, z});
            }
    return r;
}

FiniteCommutativeRing make_cyclic_ring(int n) {
    if (n < 1) throw InvalidSizeError("cyclic ring needs n >= 1, got " + std::to_string(n));
    Matrix2D add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            add[x][y] = (x + y) % n;
            mul[x][y] = static_cast<int>((static_cast<std::int64_t>(x) * y) % n);
        }
    return FiniteCommutativeRing::from_tables(add, mul, 0, 1 % n);
}

FiniteCommutativeRing make_product_ring(const FiniteCommutativeRing& a,
                                        const FiniteCommutativeRing& b) {
    const int na = a.size(), nb = b.size(), n = na * nb;
    Matrix2D add(n, std::vector<int>(n)), mul(n, std::vector<int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
            add[i][j] = a.add(ia, ja) * nb + b.add(ib, jb);
            mul[i][j] = a.mul(ia, ja) * nb + b.mul(ib, jb);
        }
    return FiniteCommutativeRing::from_tables(add, mul, a.zero() * nb + b.zero(),
                                              a.one() * nb + b.one());
}

// ---------------------------------------------------------------------------
// FiniteModule

FiniteModule FiniteModule::make(const FiniteCommutativeRing& ring, std::vector<int> factors,
                                const Matrix2D& action) {
    FiniteModule m;
    m.ring_ = ring;
    std::int64_t size = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i] < 2)
            throw InvalidSizeError("invariant factors must be >= 2 (factor " + std::to_string(i) +
                                   " is " + std::to_string(factors[i]) + ")");
        if (i > 0 && factors[i] % factors[i - 1] != 0)
            throw InvalidSizeError("invariant factors must form a divisibility chain");
        size *= factors[i];
        if (size > (1 << 20)) throw InvalidSizeError("module too large");
    }
    m.factors_ = std::move(factors);
    m.size_ = static_cast<int>(size);
    const int n = m.size_, nr = ring.size();

    m.add_ = Table(n, 2);
    m.neg_.resize(n);
    for (int a = 0; a < n; ++a) {
        auto ca = m.coordinates(a);
        std::vector<std::int64_t> cn(ca.size());
        for (std::size_t i = 0; i < ca.size(); ++i) cn[i] = -ca[i];
        m.neg_[a] = m.element(cn);
        for (int b = 0; b < n; ++b) {
            auto cb = m.coordinates(b);
            std::vector<std::int64_t> cs(ca.size());
            for (std::size_t i = 0; i < ca.size(); ++i) cs[i] = ca[i] + cb[i];
            m.add_(a, b) = m.element(cs);
        }
    }

    if (static_cast<int>(action.size()) != nr)
        throw ShapeError("action table must have one row per ring element (" +
                         std::to_string(nr) + ")");
    m.action_.resize(static_cast<std::size_t>(nr) * n);
    for (int r = 0; r < nr; ++r) {
        if (static_cast<int>(action[r].size()) != n)
            throw ShapeError("action row " + std::to_string(r) + " must have " +
                             std::to_string(n) + " entries");
        for (int a = 0; a < n; ++a) {
            int v = action[r][a];
            if (v < 0 || v >= n)
                throw ShapeError("action entry out of range at (" + std::to_string(r) + "," +
                                 std::to_string(a) + ")");
            m.action_[static_cast<std::size_t>(r) * n + a] = v;
        }
    }

    for (int a = 0; a < n; ++a)
        if (m.act(ring.one(), a) != a) throw AxiomError("action-unital", {ring.one(), a});
    for (int r = 0; r < nr; ++r)
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                if (m.act(r, m.add(a, b)) != m.add(m.act(r, a), m.act(r, b)))
                    throw AxiomError("action-additive-in-module", {r, a, b});
    for (int r = 0; r < nr; ++r)
        for (int s = 0; s < nr; ++s)
            for (int a = 0; a < n; ++a) {
                if (m.act(ring.add(r, s), a) != m.add(m.act(r, a), m.act(s, a)))
                    throw AxiomError("action-additive-in-ring", {r, s, a});
                if (m.act(ring.mul(r, s), a) != m.act(r, m.act(s, a)))
                    throw AxiomError("action-multiplicative", {r, s, a});
            }

    const int k = m.generator_count();
    m.action_matrices_.resize(nr);
    for (int r = 0; r < nr; ++r) {
        auto& mat = m.action_matrices_[r];
        mat.assign(k, std::vector<std::int64_t>(k, 0));
        for (int j = 0; j < k; ++j) {
            auto c = m.coordinates(m.act(r, m.generator(j)));
            for (int i = 0; i < k; ++i) mat[i][j] = c[i];
        }
    }
    return m;
}

int FiniteModule::multiple(std::int64_t k, int a) const {
    auto c = coordinates(a);
    std::vector<std::int64_t> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        out[i] = floor_mod(k % factors_[i], factors_[i]) * c[i];
    return element(out);
}

std::vector<int> FiniteModule::coordinates(int a) const {
    std::vector<int> c(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        c[i] = a % factors_[i];
        a /= factors_[i];
    }
    return c;
}

int FiniteModule::element(const std::vector<std::int64_t>& coords) const {
    if (coords.size() != factors_.size()) throw ShapeError("coordinate vector length mismatch");
    std::int64_t idx = 0;
    for (std::size_t i = factors_.size(); i-- > 0;)
        idx = idx * factors_[i] + floor_mod(coords[i], factors_[i]);
    return static_cast<int>(idx);
}

int FiniteModule::generator(int i) const {
    std::vector<std::int64_t> c(factors_.size(), 0);
    c[i] = 1;
    return element(c);
}

Matrix2D FiniteModule::action_rows() const {
    Matrix2D rows(ring_.size(), std::vector<int>(size_));
    for (int r = 0; r < ring_.size(); ++r)
        for (int a = 0; a < size_; ++a) rows[r][a] = act(r, a);
    return rows;
}

// ---------------------------------------------------------------------------

namespace {

int additive_order(const FiniteCommutativeRing& ring, int x) {
    int k = 1;
    for (int acc = x; acc != ring.zero(); acc = ring.add(acc, x)) ++k;
    return k;
}

std::vector<int> prime_factors(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p)
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Invariant factors of (R,+), ascending, computed from the sizes of the p^k-torsion subgroups.
std::vector<int> additive_invariant_factors(const FiniteCommutativeRing& ring) {
    const int n = ring.size();
    std::vector<std::vector<int>> exponents; // per prime: cyclic-factor exponents, descending
    for (int p : prime_factors(n)) {
        std::vector<int> at_least; // at_least[k-1] = #factors with exponent >= k
        std::int64_t prev = 1;
        for (std::int64_t pk = p;; pk *= p) {
            std::int64_t count = 0;
            for (int x = 0; x < n; ++x)
                if (pk % additive_order(ring, x) == 0) ++count;
            if (count == prev) break;
            int r = 0;
            for (std::int64_t q = count / prev; q > 1; q /= p) ++r;
            at_least.push_back(r);
            prev = count;
        }
        std::vector<int> ex(at_least.empty() ? 0 : at_least[0], 0);
        for (int r : at_least)
            for (int i = 0; i < r; ++i) ++ex[i];
        std::vector<int> powers;
        for (int e : ex) {
            int v = 1;
            for (int i = 0; i < e; ++i) v *= p;
            powers.push_back(v);
        }
        exponents.push_back(powers);
    }
    std::size_t k = 0;
    for (auto& e : exponents) k = std::max(k, e.size());
    std::vector<int> desc(k, 1);
    for (auto& e : exponents)
        for (std::size_t i = 0; i < e.size(); ++i) desc[i] *= e[i];
    std::reverse(desc.begin(), desc.end());
    return desc;
}

} // namespace

FiniteModule make_regular_module(const FiniteCommutativeRing& ring) {
    const int n = ring.size();
    const std::vector<int> factors = additive_invariant_factors(ring);
    const int k = static_cast<int>(factors.size());

    // Backtracking search for generators g_{k-1}, ..., g_0 of orders factors[i]
    // whose cyclic subgroups are independent.
    std::vector<int> gens(k, ring.zero());
    std::function<bool(int, const std::vector<char>&, int)> search =
        [&](int i, const std::vector<char>& span, int span_size) -> bool {
        if (i < 0) return span_size == n;
        for (int g = 0; g < n; ++g) {
            if (additive_order(ring, g) != factors[i]) continue;
            bool independent = true;
            for (int j = 1, m = g; j < factors[i]; ++j, m = ring.add(m, g))
                if (span[m]) {
                    independent = false;
                    break;
                }
            if (!independent) continue;
            std::vector<char> next(n, 0);
            for (int s = 0; s < n; ++s) {
                if (!span[s]) continue;
                for (int j = 0, m = s; j < factors[i]; ++j, m = ring.add(m, g)) next[m] = 1;
            }
            gens[i] = g;
            if (search(i - 1, next, span_size * factors[i])) return true;
        }
        return false;
    };
    std::vector<char> start(n, 0);
    start[ring.zero()] = 1;
    if (!search(k - 1, start, 1)) throw Error("no invariant-factor basis found for (R,+)");

    int msize = 1;
    for (int d : factors) msize *= d;
    std::vector<int> to_ring(msize), to_module(n);
    for (int idx = 0; idx < msize; ++idx) {
        int rest = idx, e = ring.zero();
        for (int i = 0; i < k; ++i) {
            int c = rest % factors[i];
            rest /= factors[i];
            for (int j = 0; j < c; ++j) e = ring.add(e, gens[i]);
        }
        to_ring[idx] = e;
        to_module[e] = idx;
    }
    Matrix2D action(n, std::vector<int>(msize));
    for (int r = 0; r < n; ++r)
        for (int a = 0; a < msize; ++a) action[r][a] = to_module[ring.mul(r, to_ring[a])];
    return FiniteModule::make(ring, factors, action);
}

FiniteModule make_trivial_module(const FiniteCommutativeRing& ring) {
    return FiniteModule::make(ring, {}, Matrix2D(ring.size(), std::vector<int>(1, 0)));
}

// ---------------------------------------------------------------------------
// Homomorphisms

ValidationReport check_ring_hom(const RingHom& hom) {
    const auto& s = hom.source;
    const auto& t = hom.target;
    if (static_cast<int>(hom.map.size()) != s.size())
        throw ShapeError("ring map must have one entry per source element");
    for (int v : hom.map)
        if (v < 0 || v >= t.size()) throw ShapeError("ring map value out of range");
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (hom(s.add(x, y)) != t.add(hom(x), hom(y)))
                return ValidationReport::fail("p-additive", {x, y});
    for (int x = 0; x < s.size(); ++x)
        for (int y = 0; y < s.size(); ++y)
            if (hom(s.mul(x, y)) != t.mul(hom(x), hom(y)))
                return ValidationReport::fail("p-multiplicative", {x, y});
    if (hom(s.zero()) != t.zero()) return ValidationReport::fail("p-zero", {s.zero()});
    if (hom(s.one()) != t.one()) return ValidationReport::fail("p-one", {s.one()});
    return ValidationReport::pass();
}

ValidationReport check_hom_pair(const HomPair& pair) {
    const auto& M = pair.source_module;
    const auto& N = pair.target_module;
    if (!(M.ring() == pair.p.source) || !(N.ring() == pair.p.target))
        throw ShapeError("modules are not over the rings joined by p");
    if (static_cast<int>(pair.q.size()) != M.size())
        throw ShapeError("q must have one entry per source module element");
    for (int v : pair.q)
        if (v < 0 || v >= N.size()) throw ShapeError("q value out of range");
    if (auto r = check_ring_hom(pair.p); !r.ok) return r;
    const auto& q = pair.q;
    for (int a = 0; a < M.size(); ++a)
        for (int b = 0; b < M.size(); ++b)
            if (q[M.add(a, b)] != N.add(q[a], q[b])) return ValidationReport::fail("q-additive", {a, b});
    if (q[M.zero()] != N.zero()) return ValidationReport::fail("q-zero", {M.zero()});
    for (int x = 0; x < M.ring().size(); ++x)
        for (int a = 0; a < M.size(); ++a)
            if (q[M.act(x, a)] != N.act(pair.p(x), q[a]))
                return ValidationReport::fail("q-compatible", {x, a});
    return ValidationReport::pass();
}

RingHom identity_hom(const FiniteCommutativeRing& ring) {
    std::vector<int> map(ring.size());
    std::iota(map.begin(), map.end(), 0);
    return {ring, ring, map};
}

HomPair identity_pair(const FiniteModule& module) {
    std::vector<int> q(module.size());
    std::iota(q.begin(), q.end(), 0);
    return {identity_hom(module.ring()), module, module, q};
}

FiniteModule pulled_back_module(const FiniteModule& target, const RingHom& p) {
    if (!(target.ring() == p.target)) throw ShapeError("module is not over the target of p");
    Matrix2D action(p.source.size(), std::vector<int>(target.size()));
    for (int s = 0; s < p.source.size(); ++s)
        for (int a = 0; a < target.size(); ++a) action[s][a] = target.act(p(s), a);
    return FiniteModule::make(p.source, target.factors(), action);
}

std::vector<RingHom> all_ring_homs(const FiniteCommutativeRing& source,
                                   const FiniteCommutativeRing& target) {
    std::vector<RingHom> out;
    const int ns = source.size(), nt = target.size();
    std::vector<int> map(ns, 0);
    while (true) {
        RingHom h{source, target, map};
        if (check_ring_hom(h).ok) out.push_back(h);
        int i = ns - 1;
        while (i >= 0 && ++map[i] == nt) map[i--] = 0;
        if (i < 0) break;
    }
    return out;
}

std::vector<HomPair> all_hom_pairs(const FiniteModule& source, const FiniteModule& target) {
    std::vector<HomPair> out;
    const int k = source.generator_count();
    for (const auto& p : all_ring_homs(source.ring(), target.ring())) {
        // q is fixed by the images of the generators.
        std::vector<int> images(k, 0);
        while (true) {
            std::vector<int> q(source.size());
            for (int a = 0; a < source.size(); ++a) {
                auto c = source.coordinates(a);
                int v = target.zero();
                for (int i = 0; i < k; ++i) v = target.add(v, target.multiple(c[i], images[i]));
                q[a] = v;
            }
            HomPair pair{p, source, target, q};
            if (check_hom_pair(pair).ok) out.push_back(pair);
            int i = k - 1;
            while (i >= 0 && ++images[i] == target.size()) images[i--] = 0;
            if (i < 0) break;
        }
    }
    return out;
}

} // namespace brann
