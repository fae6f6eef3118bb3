#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "genustool/rational.hpp"

namespace genustool {

// Dense matrix over the exact rationals. No floating point anywhere.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

    static RationalMatrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    BigRational& at(size_t r, size_t c) { return entries_[r * cols_ + c]; }
    const BigRational& at(size_t r, size_t c) const { return entries_[r * cols_ + c]; }

    bool is_square() const { return rows_ == cols_; }
    bool is_identity() const;

    RationalMatrix operator*(const RationalMatrix& rhs) const;
    RationalMatrix operator+(const RationalMatrix& rhs) const;
    RationalMatrix operator-(const RationalMatrix& rhs) const;

    bool operator==(const RationalMatrix& rhs) const = default;

    RationalMatrix pow(unsigned long long k) const;
    BigRational trace() const;

    // Rank via fraction-free (Bareiss) elimination on the denominator-cleared
    // integer matrix; exact, no intermediate rationals.
    size_t rank() const;
    size_t kernel_dimension() const { return cols() - rank(); }
    BigRational determinant() const;

    std::string to_string() const;

private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<BigRational> entries_;
};

}  // namespace genustool
