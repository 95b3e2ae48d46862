#include "brann/cohomology.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "brann/error.hpp"
#include "brann/parallel.hpp"

namespace brann {

CochainLayout::CochainLayout(ModulePtr module, int degree, Variant variant)
    : module_(std::move(module)), degree_(degree), variant_(variant),
      exponent_(module_->exponent()) {
    const auto& ring = module_->ring();
    const int k = module_->generator_count();
    for (Component c : components_of(degree, variant)) {
        Table shape(ring.size(), component_arity(c));
        std::vector<int> bases(shape.entries(), -1);
        for (std::size_t f = 0; f < shape.entries(); ++f) {
            auto args = shape.arguments(f);
            if (pinned(ring, c, args) || k == 0) continue;
            bases[f] = static_cast<int>(coords_.size());
            for (int g = 0; g < k; ++g) {
                Coordinate co{c, {0, 0, 0}, static_cast<int>(args.size()), g};
                std::copy(args.begin(), args.end(), co.args.begin());
                coords_.push_back(co);
                moduli_.push_back(module_->factors()[g]);
            }
        }
        base_.push_back(std::move(bases));
    }
}

BigInt CochainLayout::cochain_count() const {
    BigInt out = 1;
    for (auto d : moduli_) out *= d;
    return out;
}

int CochainLayout::base(Component c, std::span<const int> args) const {
    const auto& cs = components_of(degree_, variant_);
    std::size_t slot = std::find(cs.begin(), cs.end(), c) - cs.begin();
    if (slot == cs.size()) return -1;
    std::size_t flat = 0;
    for (int a : args) flat = flat * module_->ring().size() + static_cast<std::size_t>(a);
    return base_[slot][flat];
}

Vec CochainLayout::to_vector(const Cochain& c) const {
    const auto& cs = components_of(degree_, variant_);
    Vec v(coords_.size(), 0);
    for (std::size_t s = 0; s < cs.size(); ++s) {
        const Table& tab = c[cs[s]];
        for (std::size_t f = 0; f < tab.entries(); ++f) {
            int b = base_[s][f];
            if (b < 0) continue;
            auto co = module_->coordinates(tab.data()[f]);
            for (std::size_t g = 0; g < co.size(); ++g) v[b + g] = co[g];
        }
    }
    return v;
}

Cochain CochainLayout::to_cochain(const Vec& v) const {
    if (static_cast<int>(v.size()) != size()) throw ShapeError("coordinate vector length mismatch");
    const auto& cs = components_of(degree_, variant_);
    Cochain out = Cochain::zero(module_, degree_, variant_);
    const int k = module_->generator_count();
    for (std::size_t s = 0; s < cs.size(); ++s) {
        Table& tab = out[cs[s]];
        for (std::size_t f = 0; f < tab.entries(); ++f) {
            int b = base_[s][f];
            if (b < 0) continue;
            tab.data()[f] = module_->element(Vec(v.begin() + b, v.begin() + b + k));
        }
    }
    return out;
}

Vec CochainLayout::reduce(Vec v) const {
    for (std::size_t j = 0; j < v.size(); ++j) v[j] = floor_mod(v[j], moduli_[j]);
    return v;
}

// ---------------------------------------------------------------------------

namespace {

void guard(const CochainLayout& layout, const Limits& limits) {
    if (layout.size() > limits.max_coordinates)
        throw InstanceTooLargeError("degree-" + std::to_string(layout.degree()) + " cochains have " +
                                    std::to_string(layout.size()) +
                                    " free coordinates (limit " +
                                    std::to_string(limits.max_coordinates) + ")");
}

Variant lower_variant(Variant v) { return v; }

} // namespace

LinearSystem assemble_linear_system(ModulePtr module, int degree, Variant variant,
                                    const Limits& limits) {
    LinearSystem sys{CochainLayout(module, degree, variant), module->exponent(), {}};
    guard(sys.layout, limits);
    const FiniteModule& m = *module;
    const std::int64_t n = sys.modulus;
    const int k = m.generator_count();
    const auto& ids = condition_ids(degree, variant);
    using Row = std::vector<std::pair<int, std::int64_t>>;
    std::vector<std::vector<Row>> per_id(ids.size());
    parallel_for(ids.size(), limits.workers, [&](std::size_t idx) {
        std::set<Row> seen;
        for_each_instance(m.ring(), ids[idx], [&](const ConditionInstance& ci) {
            for (int i = 0; i < k; ++i) {
                const std::int64_t lift = n / m.factors()[i];
                std::map<int, std::int64_t> acc;
                auto add_terms = [&](const std::vector<Term>& terms, int side) {
                    for (const Term& t : terms) {
                        int b = sys.layout.base(t.component, t.arguments());
                        if (b < 0) continue;
                        for (int g = 0; g < k; ++g) {
                            std::int64_t coef =
                                t.scalar < 0 ? (i == g ? 1 : 0) : m.action_matrix(t.scalar)[i][g];
                            if (coef == 0) continue;
                            acc[b + g] += side * t.sign * coef * lift;
                        }
                    }
                };
                add_terms(ci.lhs, 1);
                add_terms(ci.rhs, -1);
                Row row;
                for (auto [col, v] : acc) {
                    std::int64_t r = floor_mod(v, n);
                    if (r) row.emplace_back(col, r);
                }
                if (!row.empty() && seen.insert(row).second) per_id[idx].push_back(std::move(row));
            }
        });
    });
    std::set<Row> seen;
    for (auto& rows : per_id)
        for (auto& row : rows)
            if (seen.insert(row).second) sys.rows.push_back(std::move(row));
    return sys;
}

// ---------------------------------------------------------------------------

CohomologyGroup::CohomologyGroup(ModulePtr module, int degree, Variant variant,
                                 const Limits& limits)
    : layout_(module, degree, variant) {
    guard(layout_, limits);
    n_ = layout_.exponent();
    const int dim = layout_.size();
    const std::int64_t N = n_;

    // Cocycles: y with every condition row ≡ 0 mod N.
    LinearSystem sys = assemble_linear_system(module, degree, variant, limits);
    Lattice rowspace(dim, N);
    for (const auto& row : sys.rows) {
        Vec v(dim, 0);
        for (auto [c, x] : row) v[c] = x;
        rowspace.insert(std::move(v));
    }
    kernel_ = smith_mod(rowspace.rows(), dim, N);
    scale_.resize(dim);
    for (int i = 0; i < dim; ++i) scale_[i] = N / kernel_.diag[i];

    // Coboundaries.
    std::vector<Vec> images;
    if (degree >= 2) {
        lower_.emplace(module, degree - 1, lower_variant(variant));
        guard(*lower_, limits);
        const int low = lower_->size();
        images.resize(low);
        parallel_for(static_cast<std::size_t>(low), limits.workers, [&](std::size_t j) {
            Vec unit(low, 0);
            unit[j] = 1;
            images[j] = layout_.to_vector(coboundary(lower_->to_cochain(unit), variant));
        });
        Mat phi(dim, Vec(low, 0));
        for (int j = 0; j < low; ++j)
            for (int i = 0; i < dim; ++i)
                phi[i][j] = images[j][i] * (N / layout_.modulus(i)) % N;
        coboundary_map_ = smith_mod(std::move(phi), low, N, true);
    }
    boundary_ = Lattice(dim, N);
    for (int j = 0; j < dim; ++j) {
        Vec v(dim, 0);
        v[j] = layout_.modulus(j);
        boundary_.insert(std::move(v));
    }
    for (const auto& img : images) boundary_.insert(img);

    // Relations in kernel coordinates.
    Mat zrel;
    for (int j = 0; j < dim; ++j) {
        Vec v(dim, 0);
        v[j] = layout_.modulus(j);
        zrel.push_back(kernel_coords(v));
    }
    for (int i = 0; i < dim; ++i) {
        Vec v(dim, 0);
        v[i] = kernel_.diag[i] % N;
        zrel.push_back(std::move(v));
    }
    Mat hrel = zrel;
    for (const auto& img : images) hrel.push_back(kernel_coords(img));

    SmithForm zsnf = smith_mod(zrel, dim, N);
    quotient_ = smith_mod(std::move(hrel), dim, N);
    for (int i = 0; i < dim; ++i)
        if (quotient_.diag[i] > 1) {
            positions_.push_back(i);
            factors_.push_back(quotient_.diag[i]);
        }

    z_.ambient = dim;
    for (auto d : zsnf.diag) {
        if (d > 1) z_.invariant_factors.push_back(d);
        z_.order *= d;
    }
    for (int i = 0; i < dim; ++i) {
        if (kernel_.diag[i] == 1) continue;
        Vec y(dim, 0);
        for (int j = 0; j < dim; ++j) y[j] = kernel_.V[j][i] * scale_[i] % N;
        y = layout_.reduce(std::move(y));
        if (std::any_of(y.begin(), y.end(), [](auto x) { return x != 0; }))
            z_.generators.push_back(std::move(y));
    }

    b_.ambient = dim;
    BigInt total = layout_.cochain_count();
    b_.order = total / boundary_.index();
    for (const auto& row : boundary_.rows()) {
        Vec y = layout_.reduce(row);
        if (std::any_of(y.begin(), y.end(), [](auto x) { return x != 0; }))
            b_.generators.push_back(std::move(y));
    }

    if (z_.order != b_.order * order())
        throw Error("internal: |Z| != |B| |H| for degree " + std::to_string(degree));

    for (std::size_t k = 0; k < positions_.size(); ++k) {
        Vec coords(positions_.size(), 0);
        coords[k] = 1;
        reps_.push_back(representative_of(coords));
    }
}

BigInt CohomologyGroup::order() const {
    BigInt out = 1;
    for (auto f : factors_) out *= f;
    return out;
}

Vec CohomologyGroup::kernel_coords(const Vec& y) const {
    const int dim = layout_.size();
    Vec u = mat_vec_mod(kernel_.Vinv, y, n_);
    Vec c(dim, 0);
    for (int i = 0; i < dim; ++i) {
        if (u[i] % scale_[i] != 0) throw PreconditionError("cochain is not a cocycle");
        c[i] = (u[i] / scale_[i]) % kernel_.diag[i];
    }
    return c;
}

bool CohomologyGroup::is_cocycle(const Cochain& c) const {
    c.check_normalized();
    Vec u = mat_vec_mod(kernel_.Vinv, layout_.to_vector(c), n_);
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] % scale_[i] != 0) return false;
    return true;
}

bool CohomologyGroup::is_coboundary(const Cochain& c) const {
    c.check_normalized();
    return boundary_.contains(layout_.to_vector(c));
}

Vec CohomologyGroup::coordinates(const Cochain& cocycle) const {
    cocycle.check_normalized();
    Vec c = kernel_coords(layout_.to_vector(cocycle));
    Vec w = vec_mat_mod(c, quotient_.V, n_);
    Vec out(positions_.size());
    for (std::size_t k = 0; k < positions_.size(); ++k) out[k] = w[positions_[k]] % factors_[k];
    return out;
}

Cochain CohomologyGroup::representative_of(const Vec& class_coords) const {
    if (class_coords.size() != positions_.size()) throw ShapeError("class coordinate length mismatch");
    const int dim = layout_.size();
    Vec c(dim, 0);
    for (std::size_t k = 0; k < positions_.size(); ++k) {
        const Vec& row = quotient_.Vinv[positions_[k]];
        for (int i = 0; i < dim; ++i) c[i] = (c[i] + floor_mod(class_coords[k], n_) * row[i]) % n_;
    }
    for (int i = 0; i < dim; ++i) c[i] = c[i] * scale_[i] % n_;
    Vec y = layout_.reduce(mat_vec_mod(kernel_.V, c, n_));
    return layout_.to_cochain(boundary_.reduce(std::move(y)));
}

Cochain CohomologyGroup::canonical(const Cochain& c) const {
    return layout_.to_cochain(boundary_.reduce(layout_.to_vector(c)));
}

std::optional<Cochain> CohomologyGroup::preimage(const Cochain& c) const {
    if (!lower_) return std::nullopt;
    Vec y = layout_.to_vector(c);
    for (std::size_t j = 0; j < y.size(); ++j) y[j] = y[j] * (n_ / layout_.modulus(j)) % n_;
    Vec z;
    if (!solve_mod(*coboundary_map_, y, z)) return std::nullopt;
    Cochain g = lower_->to_cochain(lower_->reduce(std::move(z)));
    if (!(layout_.to_vector(coboundary(g, variant())) == layout_.to_vector(c)))
        throw Error("internal: coboundary solve produced a wrong preimage");
    return g;
}

// ---------------------------------------------------------------------------

SubgroupPresentation cocycle_group(ModulePtr module, int degree, Variant variant,
                                   const Limits& limits) {
    return CohomologyGroup(std::move(module), degree, variant, limits).cocycles();
}

SubgroupPresentation coboundary_group(ModulePtr module, int degree, Variant variant,
                                      const Limits& limits) {
    return CohomologyGroup(std::move(module), degree, variant, limits).coboundaries();
}

CohomologyGroup cohomology_group(ModulePtr module, int degree, Variant variant,
                                 const Limits& limits) {
    return CohomologyGroup(std::move(module), degree, variant, limits);
}

CohomologousResult is_cohomologous(const CohomologyGroup& group, const Cochain& c1,
                                   const Cochain& c2) {
    for (const Cochain* c : {&c1, &c2}) {
        if (c->degree() != group.degree() || !c->same_shape(Cochain::zero(group.module_ptr(), group.degree(), group.variant())))
            throw PreconditionError("cochain does not match the cohomology group's degree/variant");
        if (!brann::is_cocycle(*c, group.degree(), group.variant()).ok())
            throw PreconditionError("is_cohomologous needs cocycles");
    }
    CohomologousResult r;
    Cochain diff = c1 - c2;
    r.class_coordinates = group.coordinates(diff);
    r.cohomologous = std::all_of(r.class_coordinates.begin(), r.class_coordinates.end(),
                                 [](auto x) { return x == 0; });
    if (r.cohomologous && group.degree() >= 2) {
        r.witness = group.preimage(diff);
        if (!r.witness) throw Error("internal: trivial class without a preimage");
    }
    return r;
}

CohomologousResult is_cohomologous(const Cochain& c1, const Cochain& c2, Variant variant,
                                   const Limits& limits) {
    CohomologyGroup group(c1.module_ptr(), c1.degree(), variant, limits);
    return is_cohomologous(group, c1, c2);
}

} // namespace brann
