// sparse.hpp -- sparse Hermitian operator in a fixed Fock basis; the common
// currency between the Hamiltonian builders and every solver.
#pragma once

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include <algorithm>
#include <string>
#include <vector>

#include "fluxed/util.hpp"

namespace fluxed {

struct SparseOperator {
    std::int64_t dim = 0;
    Eigen::SparseMatrix<cplx> mat;   // compressed, no explicit zeros, no duplicates
    bool hermitian = false;

    std::size_t nnz() const { return static_cast<std::size_t>(mat.nonZeros()); }

    Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(mat); }

    Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return mat * v; }

    // max |H - H^dag| over entries; 0.0 exactly for pair-built operators
    double hermiticity_defect() const {
        Eigen::SparseMatrix<cplx> d = mat - Eigen::SparseMatrix<cplx>(mat.adjoint());
        double m = 0.0;
        for (int k = 0; k < d.outerSize(); ++k)
            for (Eigen::SparseMatrix<cplx>::InnerIterator it(d, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
        return m;
    }

    double max_abs_entry() const {
        double m = 0.0;
        for (int k = 0; k < mat.outerSize(); ++k)
            for (Eigen::SparseMatrix<cplx>::InnerIterator it(mat, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
        return m;
    }

    // max-entry |A - B|
    double max_abs_diff(const SparseOperator& o) const {
        Eigen::SparseMatrix<cplx> d = mat - o.mat;
        double m = 0.0;
        for (int k = 0; k < d.outerSize(); ++k)
            for (Eigen::SparseMatrix<cplx>::InnerIterator it(d, k); it; ++it)
                m = std::max(m, std::abs(it.value()));
        return m;
    }
};

// Accumulates (row, col, value) entries; Hermitian terms are inserted as exact
// conjugate pairs so the built operator satisfies H == H^dag entrywise.
class OperatorBuilder {
  public:
    explicit OperatorBuilder(std::int64_t dim) : dim_(dim) {}

    void add(std::int64_t r, std::int64_t c, cplx v) {
        entries_.push_back({r, c, v});
    }

    // v * |r><c| + conj(v) * |c><r|
    void add_hermitian_pair(std::int64_t r, std::int64_t c, cplx v) {
        entries_.push_back({r, c, v});
        entries_.push_back({c, r, std::conj(v)});
    }

    void add_diagonal(std::int64_t r, double v) { entries_.push_back({r, r, cplx(v, 0.0)}); }

    SparseOperator build(bool hermitian = true) {
        // stable sort keeps mirrored pairs in identical relative order, so the
        // per-cell accumulation of (r,c) and (c,r) stays exactly conjugate.
        std::stable_sort(entries_.begin(), entries_.end(),
                         [](const E& a, const E& b) {
                             return a.c != b.c ? a.c < b.c : a.r < b.r;
                         });
        std::vector<Eigen::Triplet<cplx>> trip;
        trip.reserve(entries_.size());
        std::size_t p = 0;
        while (p < entries_.size()) {
            std::size_t q = p;
            cplx acc = 0.0;
            while (q < entries_.size() && entries_[q].r == entries_[p].r && entries_[q].c == entries_[p].c) {
                acc += entries_[q].v;
                ++q;
            }
            if (acc != cplx(0.0, 0.0))
                trip.emplace_back(static_cast<int>(entries_[p].r), static_cast<int>(entries_[p].c), acc);
            p = q;
        }
        SparseOperator op;
        op.dim = dim_;
        op.hermitian = hermitian;
        op.mat.resize(static_cast<int>(dim_), static_cast<int>(dim_));
        op.mat.setFromTriplets(trip.begin(), trip.end());
        op.mat.makeCompressed();
        return op;
    }

  private:
    struct E { std::int64_t r, c; cplx v; };
    std::int64_t dim_;
    std::vector<E> entries_;
};

SparseOperator operator+(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator-(const SparseOperator& a, const SparseOperator& b);
SparseOperator operator*(cplx s, const SparseOperator& a);

// (1/s) * (A*B - B*A); Hermitian when B == A^dag and s real
SparseOperator scaled_commutator(const SparseOperator& a, const SparseOperator& b, double s);

// coordinate text format: "row col re im" per line, 0-indexed
void export_coordinate_file(const SparseOperator& op, const std::string& path);

}  // namespace fluxed
