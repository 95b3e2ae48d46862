#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace brann {

using BigInt = boost::multiprecision::cpp_int;
using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;

struct ExtGcd {
    std::int64_t g, s, t; // s*a + t*b = g >= 0
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b);
std::int64_t floor_mod(std::int64_t a, std::int64_t n);

/// Largest modulus the exact routines accept; products of two residues must fit in 63 bits
/// with room for accumulation.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 24;

/// Throws OverflowError if n is outside (0, kMaxModulus].
void check_modulus(std::int64_t n);

/// A lattice L with N.Z^n ⊆ L ⊆ Z^n kept in Hermite normal form: row k has its
/// pivot at column k, zeros before it, and the pivot divides N. Entries are
/// stored reduced mod N.
class Lattice {
public:
    Lattice(int dim, std::int64_t modulus);

    int dim() const noexcept { return dim_; }
    std::int64_t modulus() const noexcept { return modulus_; }

    void insert(Vec v);
    bool contains(const Vec& v) const;

    /// Unique representative of v + L with 0 <= v_k < pivot_k; it is the
    /// lexicographically smallest nonnegative representative.
    Vec reduce(Vec v) const;

    std::int64_t pivot(int k) const { return rows_[k][k]; }
    const Mat& rows() const noexcept { return rows_; }

    /// |Z^n / L|.
    BigInt index() const;

private:
    int dim_;
    std::int64_t modulus_;
    Mat rows_;
};

/// Diagonalization U.A.V = diag(d) of an r x n matrix over Z/N by unimodular
/// row and column operations. d has n entries, each a divisor of N, with
/// d_0 | d_1 | ...; an entry equal to N stands for the zero relation.
/// V and its inverse are tracked; U only on request.
struct SmithForm {
    std::int64_t modulus = 1;
    Vec diag;
    Mat U;    // r x r, empty unless requested
    Mat V;    // n x n
    Mat Vinv; // n x n
};

SmithForm smith_mod(Mat a, int cols, std::int64_t modulus, bool track_rows = false);

/// One solution z of A.z ≡ b (mod N) from a SmithForm computed with rows
/// tracked, or nothing.
bool solve_mod(const SmithForm& snf, const Vec& b, Vec& z);

Vec mat_vec_mod(const Mat& m, const Vec& v, std::int64_t n);
Vec vec_mat_mod(const Vec& v, const Mat& m, std::int64_t n);

} // namespace brann
