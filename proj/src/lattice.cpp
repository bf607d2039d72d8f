#include "chipfire/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <limits>

namespace chipfire {

namespace {

// floor division for cpp_int (default division truncates toward zero)
BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Smith normal form invariant factors of an r x c matrix (destructive).
std::vector<BigInt> smith_invariants(std::vector<std::vector<BigInt>> a) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    std::vector<BigInt> out;
    int k = 0;
    while (k < rows && k < cols) {
        // locate smallest nonzero entry in the trailing submatrix
        int pr = -1, pc = -1;
        for (int i = k; i < rows; ++i)
            for (int j = k; j < cols; ++j)
                if (a[i][j] != 0 && (pr < 0 || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(a[k], a[pr]);
        for (int i = k; i < rows; ++i) std::swap(a[i][k], a[i][pc]);

        bool again = true;
        while (again) {
            again = false;
            for (int i = k + 1; i < rows; ++i) {
                if (a[i][k] == 0) continue;
                BigInt q = floor_div(a[i][k], a[k][k]);
                for (int j = k; j < cols; ++j) a[i][j] -= q * a[k][j];
                if (a[i][k] != 0) {  // remainder smaller than pivot: swap up and retry
                    std::swap(a[k], a[i]);
                    again = true;
                }
            }
            for (int j = k + 1; j < cols; ++j) {
                if (a[k][j] == 0) continue;
                BigInt q = floor_div(a[k][j], a[k][k]);
                for (int i = k; i < rows; ++i) a[i][j] -= q * a[i][k];
                if (a[k][j] != 0) {
                    for (int i = k; i < rows; ++i) std::swap(a[i][k], a[i][j]);
                    again = true;
                }
            }
        }
        // divisibility fix-up: pivot must divide the rest of the submatrix
        bool fixed = false;
        for (int i = k + 1; i < rows && !fixed; ++i)
            for (int j = k + 1; j < cols && !fixed; ++j)
                if (a[i][j] % a[k][k] != 0) {
                    for (int jj = k; jj < cols; ++jj) a[k][jj] += a[i][jj];
                    fixed = true;
                }
        if (fixed) continue;  // redo this k
        if (a[k][k] < 0) a[k][k] = -a[k][k];
        out.push_back(a[k][k]);
        ++k;
    }
    return out;
}

}  // namespace

LaplacianMatrix::LaplacianMatrix(const MultiDigraph& g)
    : n_(g.vertex_count()), entries_(static_cast<size_t>(n_) * n_, 0) {
    for (int row = 0; row < n_; ++row)
        for (int col = 0; col < n_; ++col)
            entries_[static_cast<size_t>(row) * n_ + col] =
                row == col ? -static_cast<long long>(g.outdeg(col)) : g.multiplicity(col, row);
}

ChipDistribution LaplacianMatrix::column(int v) const {
    std::vector<long long> col(n_);
    for (int row = 0; row < n_; ++row) col[row] = at(row, v);
    return ChipDistribution(std::move(col));
}

LaplacianLattice::LaplacianLattice(const LaplacianMatrix& laplacian) : n_(laplacian.size()) {
    // column Hermite form by integer column operations
    std::vector<std::vector<BigInt>> cols(n_, std::vector<BigInt>(n_));
    for (int j = 0; j < n_; ++j)
        for (int i = 0; i < n_; ++i) cols[j][i] = laplacian.at(i, j);

    int next = 0;  // columns [0, next) hold already-placed pivots
    std::vector<int> pivot_rows;
    for (int row = 0; row < n_ && next < n_; ++row) {
        while (true) {
            int best = -1;
            for (int j = next; j < n_; ++j)
                if (cols[j][row] != 0 && (best < 0 || abs(cols[j][row]) < abs(cols[best][row]))) best = j;
            if (best < 0) break;  // no pivot in this row
            bool lone = true;
            for (int j = next; j < n_; ++j)
                if (j != best && cols[j][row] != 0) {
                    BigInt q = floor_div(cols[j][row], cols[best][row]);
                    for (int i = 0; i < n_; ++i) cols[j][i] -= q * cols[best][i];
                    if (cols[j][row] != 0) lone = false;
                }
            if (!lone) continue;
            std::swap(cols[next], cols[best]);
            if (cols[next][row] < 0)
                for (int i = 0; i < n_; ++i) cols[next][i] = -cols[next][i];
            for (int j = 0; j < next; ++j) {  // normalize earlier columns on this row into [0, pivot)
                BigInt q = floor_div(cols[j][row], cols[next][row]);
                if (q != 0)
                    for (int i = 0; i < n_; ++i) cols[j][i] -= q * cols[next][i];
            }
            pivot_rows.push_back(row);
            ++next;
            break;
        }
    }

    if (next != n_ - 1)
        throw RankDeficientError("Laplacian image has rank " + std::to_string(next) +
                                 ", expected n-1; graph is not strongly connected");
    for (int i = 0; i < n_ - 1; ++i)
        if (pivot_rows[i] != i)
            throw RankDeficientError("unexpected Hermite pivot placement");
    basis_.assign(cols.begin(), cols.begin() + (n_ - 1));

    // Smith invariants of the first n-1 rows of L
    std::vector<std::vector<BigInt>> top(n_ - 1, std::vector<BigInt>(n_));
    for (int i = 0; i + 1 < n_; ++i)
        for (int j = 0; j < n_; ++j) top[i][j] = laplacian.at(i, j);
    invariants_ = smith_invariants(std::move(top));

    class_count_ = 1;
    for (const BigInt& d : invariants_) class_count_ *= d;
    BigInt pivot_product = 1;
    for (int i = 0; i + 1 < n_; ++i) pivot_product *= basis_[i][i];
    if (static_cast<int>(invariants_.size()) != n_ - 1 || class_count_ != pivot_product)
        throw RankDeficientError("Smith and Hermite class counts disagree");
}

long long LaplacianLattice::class_count_i64() const {
    if (class_count_ > std::numeric_limits<long long>::max())
        throw OverflowError("class count exceeds 64-bit range");
    return static_cast<long long>(class_count_);
}

bool LaplacianLattice::contains(const ChipDistribution& w) const {
    if (w.size() != n_) throw DimensionMismatchError("distribution length differs from lattice rank");
    std::vector<BigInt> r(w.values().begin(), w.values().end());
    for (int i = 0; i + 1 < n_; ++i) {
        if (r[i] % basis_[i][i] != 0) return false;
        BigInt q = r[i] / basis_[i][i];
        if (q != 0)
            for (int k = 0; k < n_; ++k) r[k] -= q * basis_[i][k];
    }
    return r[n_ - 1] == 0;
}

bool LaplacianLattice::equivalent(const ChipDistribution& x, const ChipDistribution& y) const {
    if (x.size() != y.size()) throw DimensionMismatchError("distributions have different lengths");
    return contains(x - y);
}

ChipDistribution LaplacianLattice::canonical_rep(const ChipDistribution& x) const {
    if (x.size() != n_) throw DimensionMismatchError("distribution length differs from lattice rank");
    std::vector<BigInt> r(x.values().begin(), x.values().end());
    for (int i = 0; i + 1 < n_; ++i) {
        BigInt q = floor_div(r[i], basis_[i][i]);
        if (q != 0)
            for (int k = 0; k < n_; ++k) r[k] -= q * basis_[i][k];
    }
    std::vector<long long> out(n_);
    for (int i = 0; i < n_; ++i) {
        if (r[i] > std::numeric_limits<long long>::max() || r[i] < std::numeric_limits<long long>::min())
            throw OverflowError("canonical representative exceeds 64-bit range");
        out[i] = static_cast<long long>(r[i]);
    }
    return ChipDistribution(std::move(out));
}

std::vector<ChipDistribution> LaplacianLattice::enumerate_classes(long long degree,
                                                                  long long max_classes) const {
    if (class_count_ > max_classes)
        throw SizeLimitExceededError("class count " + class_count_.str() + " exceeds limit " +
                                     std::to_string(max_classes));
    std::vector<ChipDistribution> out;
    out.reserve(static_cast<size_t>(class_count_i64()));
    std::vector<long long> rep(n_, 0);
    // odometer over the fundamental box, last coordinate carries the degree
    while (true) {
        long long sum = 0;
        for (int i = 0; i + 1 < n_; ++i) sum = checked_add(sum, rep[i]);
        rep[n_ - 1] = checked_sub(degree, sum);
        out.push_back(ChipDistribution(rep));
        int i = 0;
        for (; i + 1 < n_; ++i) {
            if (BigInt(rep[i] + 1) < basis_[i][i]) {
                ++rep[i];
                break;
            }
            rep[i] = 0;
        }
        if (i + 1 >= n_) break;
    }
    assert(BigInt(static_cast<long long>(out.size())) == class_count_);
    return out;
}

}  // namespace chipfire
