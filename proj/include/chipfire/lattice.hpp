#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "chipfire/graph.hpp"

namespace chipfire {

using BigInt = boost::multiprecision::cpp_int;

/// Laplacian of a digraph: L(u,v) = -outdeg(v) if u = v, else m(v,u).
/// Column v is the chip movement caused by firing v, so every column sums to
/// zero and degree is preserved by x -> x + Lz.
class LaplacianMatrix {
public:
    explicit LaplacianMatrix(const MultiDigraph& g);

    int size() const { return n_; }
    long long at(int row, int col) const { return entries_[static_cast<size_t>(row) * n_ + col]; }
    /// Effect of firing v, as a vector.
    ChipDistribution column(int v) const;

private:
    int n_;
    std::vector<long long> entries_;
};

/// Integer column span of the Laplacian, reduced to a column Hermite basis.
///
/// For strongly connected input the basis has rank n-1 with pivot i on row i
/// (a pivot on the last row would give a basis vector with nonzero coordinate
/// sum, impossible inside the degree-zero lattice). Consequences used
/// throughout: membership is a back-substitution with exact divisions, the
/// canonical representative of a class is the unique coset element whose
/// first n-1 coordinates lie in [0, pivot_i), and the classes of any fixed
/// degree are exactly that fundamental box.
class LaplacianLattice {
public:
    /// Throws RankDeficientError when rank < n-1 (non-strongly-connected
    /// input slipped through).
    explicit LaplacianLattice(const LaplacianMatrix& laplacian);

    int size() const { return n_; }

    /// Invariant factors of the first n-1 rows of L (Smith normal form).
    const std::vector<BigInt>& invariant_factors() const { return invariants_; }

    /// Number of equivalence classes at any fixed degree (Pic^0 order);
    /// equals both the invariant-factor product and the Hermite pivot
    /// product, which the constructor cross-asserts.
    const BigInt& class_count() const { return class_count_; }
    long long class_count_i64() const;

    /// w in Im(L)?
    bool contains(const ChipDistribution& w) const;

    /// Same degree and difference in Im(L)?
    bool equivalent(const ChipDistribution& x, const ChipDistribution& y) const;

    /// Unique class representative: idempotent, degree-preserving, equal for
    /// all members of a class.
    ChipDistribution canonical_rep(const ChipDistribution& x) const;

    /// One canonical representative per class, all of the given degree.
    /// Throws SizeLimitExceededError when class_count exceeds max_classes.
    std::vector<ChipDistribution> enumerate_classes(long long degree,
                                                    long long max_classes = 1'000'000) const;

private:
    int n_;
    std::vector<std::vector<BigInt>> basis_;  // n-1 columns; basis_[i][i] > 0 is the pivot of column i
    std::vector<BigInt> invariants_;
    BigInt class_count_;
};

}  // namespace chipfire
