#pragma once

#include <cstdint>
#include <vector>

#include "toricode/field.hpp"
#include "toricode/lattice.hpp"

namespace toricode {

// Values of the monomials t1^m1 t2^m2, m in P ∩ Z^2, at every point of the
// torus (F_q*)^2. Rows follow torus_points order (generator powers, first
// coordinate major); columns follow lattice_points order ((y, x) lex).
class EvaluationTable {
  public:
    const FieldSpec& field() const { return field_; }
    const std::vector<LatticePoint>& monomials() const { return monomials_; }
    int dimension() const { return static_cast<int>(monomials_.size()); }
    std::int64_t block_length() const { return rows_; }

    const std::vector<std::uint16_t>& column(int c) const { return columns_[c]; }
    int value(std::int64_t row, int col) const { return columns_[col][row]; }

  private:
    friend EvaluationTable build_table(const LatticePolygon& p, const FieldSpec& f);

    FieldSpec field_;
    std::vector<LatticePoint> monomials_;
    std::int64_t rows_ = 0;
    std::vector<std::vector<std::uint16_t>> columns_;
};

// Throws OutsideSquareError unless P fits inside [0, q-2]^2.
EvaluationTable build_table(const LatticePolygon& p, const FieldSpec& f);

// Number of torus points where the polynomial with the given coefficients
// (aligned with the table columns) vanishes. Rejects the zero vector.
std::int64_t count_zeros(const EvaluationTable& t, const std::vector<int>& coeffs);

struct SparseTerm {
    LatticePoint exponent;
    int coeff = 0;  // element code
};
using SparsePoly = std::vector<SparseTerm>;

// Expands a product of sparse bivariate polynomials into table coordinates.
// Throws std::domain_error when the support escapes P ∩ Z^2.
std::vector<int> expand_product(const EvaluationTable& t, const std::vector<SparsePoly>& factors);

struct SearchLimits {
    // Refuse when (number of scale classes) * (torus points) exceeds this,
    // unless force is set. Even with force the class count must stay below
    // 2^62.
    std::uint64_t max_class_rows = 2'000'000'000ULL;
    int workers = 1;
    bool force = false;
};

struct DistanceResult {
    std::int64_t q = 0;
    int n = 0;
    std::int64_t block_length = 0;
    std::int64_t min_distance = 0;
    std::int64_t max_zeros = 0;
    std::vector<int> witness;  // attaining coefficient vector, first nonzero entry 1
    std::int64_t elapsed_ms = 0;
    int worker_count = 1;
};

// Exact minimum distance by exhaustive search over one representative per
// scalar-multiple class (first nonzero coefficient fixed to 1). Zero counts
// are maintained incrementally under single-coefficient steps; the class
// space is split into contiguous ranges across workers and merged by
// (max_zeros, lexicographically least witness), so the result does not
// depend on the worker count. Throws BudgetExceededError per SearchLimits.
DistanceResult min_distance(const EvaluationTable& t, const SearchLimits& limits = {});

}  // namespace toricode
