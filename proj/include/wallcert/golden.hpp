#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wallcert {

/// Exact element of Q(sqrt 5) written in the basis {1, phi} with
/// phi = (1 + sqrt 5)/2, so phi^2 = phi + 1. Components are
/// arbitrary-precision rationals in canonical (reduced) form; two values
/// are equal iff their components are equal.
class Golden {
public:
    Golden() : p_(0), q_(0) {}
    Golden(long v) : p_(v), q_(0) {}  // integers embed as v + 0*phi
    Golden(mpq_class p, mpq_class q) : p_(std::move(p)), q_(std::move(q)) {
        p_.canonicalize();
        q_.canonicalize();
    }

    static Golden phi() { return Golden(0, 1); }
    static Golden rational(long num, long den);

    const mpq_class& unit_part() const { return p_; }
    const mpq_class& phi_part() const { return q_; }

    bool is_zero() const { return sgn(p_) == 0 && sgn(q_) == 0; }
    bool is_one() const { return p_ == 1 && sgn(q_) == 0; }
    /// True iff the value lies in Z[phi], i.e. both components are integers.
    bool is_integral() const;

    /// Galois conjugate: tau(p + q*phi) = (p + q) - q*phi.
    Golden conj() const { return Golden(p_ + q_, -q_); }

    /// Multiplicative inverse; throws on zero.
    Golden inverse() const;

    /// Exact sign of the real number p + q*(1+sqrt5)/2, in {-1, 0, +1}.
    int sign() const;

    /// Non-authoritative float rendering, for reports only.
    double to_double() const;

    /// Human rendering like "1 - 2*phi" or "-1/2 + 3/4*phi".
    std::string str() const;

    friend Golden operator+(const Golden& a, const Golden& b) {
        return Golden(a.p_ + b.p_, a.q_ + b.q_);
    }
    friend Golden operator-(const Golden& a, const Golden& b) {
        return Golden(a.p_ - b.p_, a.q_ - b.q_);
    }
    friend Golden operator-(const Golden& a) { return Golden(-a.p_, -a.q_); }
    friend Golden operator*(const Golden& a, const Golden& b) {
        // (p1 + q1 phi)(p2 + q2 phi) with phi^2 = phi + 1
        return Golden(a.p_ * b.p_ + a.q_ * b.q_,
                      a.p_ * b.q_ + a.q_ * b.p_ + a.q_ * b.q_);
    }
    friend Golden operator/(const Golden& a, const Golden& b) {
        return a * b.inverse();
    }
    Golden& operator+=(const Golden& o) { p_ += o.p_; q_ += o.q_; return *this; }
    Golden& operator-=(const Golden& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
    Golden& operator*=(const Golden& o) { *this = *this * o; return *this; }

    friend bool operator==(const Golden& a, const Golden& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Golden& a, const Golden& b) { return !(a == b); }
    friend bool operator<(const Golden& a, const Golden& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Golden& a, const Golden& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Golden& a, const Golden& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Golden& a, const Golden& b) { return (a - b).sign() >= 0; }

private:
    mpq_class p_, q_;
};

/// Fixed-length vector of Golden scalars.
class GoldenVector {
public:
    GoldenVector() = default;
    explicit GoldenVector(std::size_t dim) : c_(dim) {}
    GoldenVector(std::initializer_list<Golden> init) : c_(init) {}

    std::size_t size() const { return c_.size(); }
    Golden& operator[](std::size_t i) { return c_[i]; }
    const Golden& operator[](std::size_t i) const { return c_[i]; }

    friend bool operator==(const GoldenVector& a, const GoldenVector& b) {
        return a.c_ == b.c_;
    }
    friend bool operator!=(const GoldenVector& a, const GoldenVector& b) {
        return !(a == b);
    }
    friend GoldenVector operator+(const GoldenVector& a, const GoldenVector& b);
    friend GoldenVector operator-(const GoldenVector& a, const GoldenVector& b);
    GoldenVector scaled(const Golden& s) const;
    bool is_integral() const;

private:
    std::vector<Golden> c_;
};

/// Dense rows x cols matrix of Golden scalars with exact linear algebra.
/// Matrices at play are tiny (at most 17x17), so plain Gaussian
/// elimination over the field is used throughout.
class GoldenMatrix {
public:
    GoldenMatrix() : rows_(0), cols_(0) {}
    GoldenMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static GoldenMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Golden& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Golden& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const GoldenMatrix& x, const GoldenMatrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const GoldenMatrix& x, const GoldenMatrix& y) {
        return !(x == y);
    }

    GoldenMatrix transpose() const;
    friend GoldenMatrix operator*(const GoldenMatrix& x, const GoldenMatrix& y);
    friend GoldenMatrix operator-(const GoldenMatrix& x, const GoldenMatrix& y);
    GoldenVector apply(const GoldenVector& v) const;

    Golden determinant() const;          // square only
    GoldenMatrix inverse() const;        // throws on singular
    /// Determinants of the leading k x k blocks, k = 1..n.
    std::vector<Golden> leading_principal_minors() const;
    bool is_integral() const;

private:
    std::size_t rows_, cols_;
    std::vector<Golden> a_;
};

/// x^T B y computed densely; the sparse fast path lives with LorentzForm.
Golden dot_with_form(const GoldenVector& x, const GoldenMatrix& B, const GoldenVector& y);

}  // namespace wallcert
