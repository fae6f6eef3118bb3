#include "genustool/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace genustool {

namespace {

// Clears denominators row by row; row scaling by positive integers preserves
// rank and determinant sign bookkeeping is handled by the callers.
std::vector<std::vector<BigInt>> integer_rows(const RationalMatrix& m, std::vector<BigInt>* row_scales) {
    std::vector<std::vector<BigInt>> out(m.rows(), std::vector<BigInt>(m.cols()));
    for (size_t r = 0; r < m.rows(); ++r) {
        BigInt l(1);
        for (size_t c = 0; c < m.cols(); ++c) l = BigInt::lcm(l, m.at(r, c).den());
        for (size_t c = 0; c < m.cols(); ++c) {
            const BigRational& v = m.at(r, c);
            out[r][c] = v.num() * BigInt::divexact(l, v.den());
        }
        if (row_scales) row_scales->push_back(l);
    }
    return out;
}

// Bareiss fraction-free elimination. Returns rank; if det is non-null the
// matrix must be square and *det receives the determinant of the integer
// matrix (0 when rank-deficient).
size_t bareiss_rank(std::vector<std::vector<BigInt>> a, BigInt* det) {
    const size_t rows = a.size();
    const size_t cols = rows ? a[0].size() : 0;
    BigInt prev(1);
    int det_sign = 1;
    size_t rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t pivot = rank;
        while (pivot < rows && a[pivot][col].is_zero()) ++pivot;
        if (pivot == rows) {
            if (det) {
                *det = BigInt(0);
                return rank;
            }
            continue;
        }
        if (pivot != rank) {
            std::swap(a[pivot], a[rank]);
            det_sign = -det_sign;
        }
        const BigInt& p = a[rank][col];
        for (size_t r = rank + 1; r < rows; ++r) {
            for (size_t c = col + 1; c < cols; ++c) {
                a[r][c] = BigInt::divexact(a[r][c] * p - a[r][col] * a[rank][c], prev);
            }
            a[r][col] = BigInt(0);
        }
        prev = p;
        ++rank;
    }
    if (det) {
        // full rank: last pivot of the Bareiss scheme is the determinant
        *det = rank == rows ? (det_sign < 0 ? -prev : prev) : BigInt(0);
    }
    return rank;
}

}  // namespace

RationalMatrix RationalMatrix::identity(size_t n) {
    RationalMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = BigRational(1);
    return m;
}

bool RationalMatrix::is_identity() const {
    if (!is_square()) return false;
    for (size_t r = 0; r < rows_; ++r)
        for (size_t c = 0; c < cols_; ++c)
            if (at(r, c) != (r == c ? BigRational(1) : BigRational(0))) return false;
    return true;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("RationalMatrix: dimension mismatch in product");
    RationalMatrix out(rows_, rhs.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t k = 0; k < cols_; ++k) {
            const BigRational& v = at(r, k);
            if (v.is_zero()) continue;
            for (size_t c = 0; c < rhs.cols_; ++c) out.at(r, c) += v * rhs.at(k, c);
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: dimension mismatch in sum");
    RationalMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] + rhs.entries_[i];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("RationalMatrix: dimension mismatch in difference");
    RationalMatrix out(rows_, cols_);
    for (size_t i = 0; i < entries_.size(); ++i) out.entries_[i] = entries_[i] - rhs.entries_[i];
    return out;
}

RationalMatrix RationalMatrix::pow(unsigned long long k) const {
    if (!is_square()) throw std::invalid_argument("RationalMatrix: pow requires a square matrix");
    RationalMatrix out = identity(rows_);
    RationalMatrix sq = *this;
    while (k) {
        if (k & 1) out = out * sq;
        k >>= 1;
        if (k) sq = sq * sq;
    }
    return out;
}

BigRational RationalMatrix::trace() const {
    if (!is_square()) throw std::invalid_argument("RationalMatrix: trace requires a square matrix");
    BigRational t;
    for (size_t i = 0; i < rows_; ++i) t += at(i, i);
    return t;
}

size_t RationalMatrix::rank() const {
    if (rows_ == 0 || cols_ == 0) return 0;
    return bareiss_rank(integer_rows(*this, nullptr), nullptr);
}

BigRational RationalMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("RationalMatrix: determinant requires a square matrix");
    if (rows_ == 0) return BigRational(1);
    std::vector<BigInt> scales;
    BigInt det;
    bareiss_rank(integer_rows(*this, &scales), &det);
    BigRational out{det};
    for (const BigInt& s : scales) out /= BigRational(s);
    return out;
}

std::string RationalMatrix::to_string() const {
    std::ostringstream os;
    for (size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (size_t c = 0; c < cols_; ++c) {
            if (c) os << " ";
            os << at(r, c);
        }
        os << "]";
        if (r + 1 < rows_) os << "\n";
    }
    return os.str();
}

}  // namespace genustool
