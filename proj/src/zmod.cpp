#include "brann/zmod.hpp"

#include <numeric>
#include <utility>

#include "brann/error.hpp"

namespace brann {

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        std::int64_t q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

std::int64_t floor_mod(std::int64_t a, std::int64_t n) {
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

void check_modulus(std::int64_t n) {
    if (n <= 0 || n > kMaxModulus)
        throw OverflowError("modulus " + std::to_string(n) + " outside the exact range");
}

namespace {

// u * a + v * b reduced mod n; all inputs are residues or small cofactors.
inline std::int64_t lin(std::int64_t u, std::int64_t a, std::int64_t v, std::int64_t b,
                        std::int64_t n) {
    std::int64_t x = floor_mod(u, n), y = floor_mod(v, n);
    return (x * a + y * b) % n;
}

void row_combine(Vec& p, Vec& q, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d,
                 std::int64_t n) {
    // (p, q) <- (a p + b q, c p + d q)
    for (std::size_t k = 0; k < p.size(); ++k) {
        std::int64_t x = p[k], y = q[k];
        p[k] = lin(a, x, b, y, n);
        q[k] = lin(c, x, d, y, n);
    }
}

std::int64_t unit_inverse(std::int64_t w, std::int64_t n) {
    auto e = ext_gcd(floor_mod(w, n), n);
    if (e.g != 1) throw Error("internal: not a unit");
    return floor_mod(e.s, n);
}

} // namespace

// ---------------------------------------------------------------------------

Lattice::Lattice(int dim, std::int64_t modulus) : dim_(dim), modulus_(modulus) {
    check_modulus(modulus);
    rows_.assign(dim, Vec(dim, 0));
    for (int k = 0; k < dim; ++k) rows_[k][k] = modulus == 1 ? 1 : modulus;
}

void Lattice::insert(Vec v) {
    const std::int64_t n = modulus_;
    if (static_cast<int>(v.size()) != dim_) throw ShapeError("lattice vector has wrong length");
    for (auto& x : v) x = floor_mod(x, n);
    for (int k = 0; k < dim_; ++k) {
        if (v[k] == 0) continue;
        Vec& h = rows_[k];
        const std::int64_t p = h[k];
        if (v[k] % p == 0) {
            const std::int64_t q = v[k] / p;
            for (int j = k; j < dim_; ++j) v[j] = floor_mod(v[j] - q * h[j], n);
            continue;
        }
        auto e = ext_gcd(p, v[k]);
        row_combine(h, v, e.s, e.t, -(v[k] / e.g), p / e.g, n);
        if (h[k] == 0) h[k] = n;
        v[k] = 0;
    }
}

Vec Lattice::reduce(Vec v) const {
    const std::int64_t n = modulus_;
    for (auto& x : v) x = floor_mod(x, n);
    for (int k = 0; k < dim_; ++k) {
        const Vec& h = rows_[k];
        const std::int64_t q = v[k] / h[k];
        if (q == 0) continue;
        for (int j = k; j < dim_; ++j) v[j] = floor_mod(v[j] - q * h[j], n);
    }
    return v;
}

bool Lattice::contains(const Vec& v) const {
    for (auto x : reduce(v))
        if (x != 0) return false;
    return true;
}

BigInt Lattice::index() const {
    BigInt out = 1;
    for (int k = 0; k < dim_; ++k) out *= rows_[k][k];
    return out;
}

// ---------------------------------------------------------------------------

namespace {

struct SmithState {
    Mat a;
    int rows, cols;
    std::int64_t n;
    bool track_rows;
    Mat U, V, Vinv;

    void row_op(int i, int j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        row_combine(a[i], a[j], p, q, r, s, n);
        if (track_rows) row_combine(U[i], U[j], p, q, r, s, n);
    }
    void row_scale(int i, std::int64_t w) {
        for (auto& x : a[i]) x = lin(w, x, 0, 0, n);
        if (track_rows)
            for (auto& x : U[i]) x = lin(w, x, 0, 0, n);
    }
    void row_swap(int i, int j) {
        std::swap(a[i], a[j]);
        if (track_rows) std::swap(U[i], U[j]);
    }
    // (col_i, col_j) <- (p col_i + r col_j, q col_i + s col_j), i.e. right-multiply by
    // E = [[p, q], [r, s]] on (i, j); det E = 1.
    void col_op(int i, int j, std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t s) {
        for (auto& row : a) {
            std::int64_t x = row[i], y = row[j];
            row[i] = lin(p, x, r, y, n);
            row[j] = lin(q, x, s, y, n);
        }
        for (auto& row : V) {
            std::int64_t x = row[i], y = row[j];
            row[i] = lin(p, x, r, y, n);
            row[j] = lin(q, x, s, y, n);
        }
        // E^-1 = [[s, -q], [-r, p]] applied on the left of Vinv.
        row_combine(Vinv[i], Vinv[j], s, -q, -r, p, n);
    }
    void col_swap(int i, int j) {
        for (auto& row : a) std::swap(row[i], row[j]);
        for (auto& row : V) std::swap(row[i], row[j]);
        std::swap(Vinv[i], Vinv[j]);
    }
};

std::int64_t associate_size(std::int64_t x, std::int64_t n) {
    return x == 0 ? n : std::gcd(x, n);
}

} // namespace

SmithForm smith_mod(Mat a, int cols, std::int64_t modulus, bool track_rows) {
    check_modulus(modulus);
    SmithState st;
    st.n = modulus;
    st.rows = static_cast<int>(a.size());
    st.cols = cols;
    st.track_rows = track_rows;
    for (auto& row : a) {
        if (static_cast<int>(row.size()) != cols) throw ShapeError("ragged matrix");
        for (auto& x : row) x = floor_mod(x, modulus);
    }
    st.a = std::move(a);
    auto identity = [&](int k) {
        Mat m(k, Vec(k, 0));
        for (int i = 0; i < k; ++i) m[i][i] = 1 % modulus;
        return m;
    };
    if (track_rows) st.U = identity(st.rows);
    st.V = identity(cols);
    st.Vinv = identity(cols);
    const std::int64_t n = modulus;
    const int lim = std::min(st.rows, cols);

    int t = 0;
    for (; t < lim; ++t) {
        // Pivot: entry with the smallest associate in the trailing block.
        int bi = -1, bj = -1;
        std::int64_t best = n;
        for (int i = t; i < st.rows && best > 1; ++i)
            for (int j = t; j < cols; ++j) {
                std::int64_t x = st.a[i][j];
                if (x == 0) continue;
                std::int64_t g = std::gcd(x, n);
                if (bi < 0 || g < best) {
                    best = g;
                    bi = i;
                    bj = j;
                    if (g == 1) break;
                }
            }
        if (bi < 0) break;
        if (bi != t) st.row_swap(bi, t);
        if (bj != t) st.col_swap(bj, t);
        while (true) {
            for (int i = t + 1; i < st.rows; ++i) {
                std::int64_t b = st.a[i][t];
                if (b == 0) continue;
                std::int64_t p = st.a[t][t];
                if (p != 0 && b % p == 0) {
                    st.row_op(t, i, 1, 0, -(b / p), 1);
                } else {
                    auto e = ext_gcd(p, b);
                    st.row_op(t, i, e.s, e.t, -(b / e.g), p / e.g);
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                std::int64_t b = st.a[t][j];
                if (b == 0) continue;
                std::int64_t p = st.a[t][t];
                if (p != 0 && b % p == 0) {
                    st.col_op(t, j, 1, -(b / p), 0, 1);
                } else {
                    auto e = ext_gcd(p, b);
                    st.col_op(t, j, e.s, -(b / e.g), e.t, p / e.g);
                }
            }
            bool clean = true;
            for (int i = t + 1; i < st.rows; ++i)
                if (st.a[i][t] != 0) clean = false;
            if (clean) break;
        }
        // Normalize the pivot to a divisor of N with a unit row scaling.
        std::int64_t p = st.a[t][t];
        if (p != 0) {
            std::int64_t g = std::gcd(p, n), np = n / g;
            std::int64_t w = np == 1 ? 1 : unit_inverse(p / g, np);
            while (std::gcd(w, n) != 1) w += np;
            st.row_scale(t, w);
        }
    }

    Vec d(cols, n);
    for (int i = 0; i < lim; ++i) d[i] = associate_size(st.a[i][i], n);

    // Enforce d_i | d_j for i < j.
    for (int i = 0; i < lim; ++i)
        for (int j = i + 1; j < lim; ++j) {
            std::int64_t x = d[i], y = d[j];
            if (y % x == 0) continue;
            // Diagonal entries are x, y (as residues; N reads as 0).
            std::int64_t ax = x % n, ay = y % n;
            st.row_op(i, j, 1, 1, 0, 1);
            auto e = ext_gcd(ax, ay);
            st.col_op(i, j, e.s, -(ay / e.g), e.t, ax / e.g);
            std::int64_t ub = floor_mod(e.t, n) * ay % n;
            st.row_op(i, j, 1, 0, -(ub / e.g), 1);
            d[i] = associate_size(st.a[i][i], n);
            d[j] = associate_size(st.a[j][j], n);
        }

    SmithForm out;
    out.modulus = n;
    out.diag = std::move(d);
    out.U = std::move(st.U);
    out.V = std::move(st.V);
    out.Vinv = std::move(st.Vinv);
    return out;
}

bool solve_mod(const SmithForm& snf, const Vec& b, Vec& z) {
    const std::int64_t n = snf.modulus;
    if (snf.U.empty() && !b.empty()) throw Error("internal: solve needs tracked rows");
    Vec ub = mat_vec_mod(snf.U, b, n);
    const std::size_t cols = snf.diag.size();
    Vec w(cols, 0);
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i >= cols) {
            if (ub[i] != 0) return false;
            continue;
        }
        const std::int64_t d = snf.diag[i];
        if (d == n) {
            if (ub[i] != 0) return false;
            continue;
        }
        if (ub[i] % d != 0) return false;
        // diag entry is exactly d here (pivot normalized), so d * w ≡ ub.
        w[i] = ub[i] / d;
    }
    z = mat_vec_mod(snf.V, w, n);
    return true;
}

Vec mat_vec_mod(const Mat& m, const Vec& v, std::int64_t n) {
    Vec out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] && v[j]) acc = (acc + m[i][j] * floor_mod(v[j], n)) % n;
        out[i] = acc;
    }
    return out;
}

Vec vec_mat_mod(const Vec& v, const Mat& m, std::int64_t n) {
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    Vec out(cols, 0);
    for (std::size_t i = 0; i < v.size(); ++i) {
        std::int64_t x = floor_mod(v[i], n);
        if (!x) continue;
        for (std::size_t j = 0; j < cols; ++j) out[j] = (out[j] + x * m[i][j]) % n;
    }
    return out;
}

} // namespace brann
