#include "wallcert/golden.hpp"

#include <cmath>
#include <sstream>

namespace wallcert {

Golden Golden::rational(long num, long den) {
    if (den == 0) throw std::domain_error("Golden::rational: zero denominator");
    return Golden(mpq_class(num, den), 0);
}

bool Golden::is_integral() const {
    return p_.get_den() == 1 && q_.get_den() == 1;
}

Golden Golden::inverse() const {
    if (is_zero()) throw std::domain_error("Golden::inverse: division by zero");
    // a * tau(a) = p^2 + p q - q^2 is rational and nonzero for a != 0.
    mpq_class norm = p_ * p_ + p_ * q_ - q_ * q_;
    Golden t = conj();
    return Golden(t.p_ / norm, t.q_ / norm);
}

int Golden::sign() const {
    // value = (u + v*sqrt5)/2 with u = 2p + q, v = q.
    mpq_class u = 2 * p_ + q_;
    const mpq_class& v = q_;
    int su = sgn(u), sv = sgn(v);
    if (sv == 0) return su;
    if (su == 0) return sv;
    if (su == sv) return su;
    // Opposite signs: compare u^2 against 5 v^2. Equality would force
    // sqrt5 rational, so it cannot occur for nonzero u, v.
    mpq_class u2 = u * u, v2 = 5 * v * v;
    int cmp_sq = cmp(u2, v2);
    if (su > 0) return cmp_sq > 0 ? 1 : -1;
    return cmp_sq < 0 ? 1 : -1;
}

double Golden::to_double() const {
    static const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;
    return p_.get_d() + q_.get_d() * kPhi;
}

namespace {
std::string q_str(const mpq_class& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}
}  // namespace

std::string Golden::str() const {
    if (sgn(q_) == 0) return q_str(p_);
    std::string phi_term;
    if (q_ == 1)
        phi_term = "phi";
    else if (q_ == -1)
        phi_term = "-phi";
    else
        phi_term = q_str(q_) + "*phi";
    if (sgn(p_) == 0) return phi_term;
    if (sgn(q_) > 0) return q_str(p_) + " + " + (q_ == 1 ? "phi" : q_str(q_) + "*phi");
    mpq_class mq = -q_;
    return q_str(p_) + " - " + (mq == 1 ? "phi" : q_str(mq) + "*phi");
}

GoldenVector operator+(const GoldenVector& a, const GoldenVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("GoldenVector: length mismatch");
    GoldenVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

GoldenVector operator-(const GoldenVector& a, const GoldenVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("GoldenVector: length mismatch");
    GoldenVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

GoldenVector GoldenVector::scaled(const Golden& s) const {
    GoldenVector r(size());
    for (std::size_t i = 0; i < size(); ++i) r[i] = c_[i] * s;
    return r;
}

bool GoldenVector::is_integral() const {
    for (const auto& x : c_)
        if (!x.is_integral()) return false;
    return true;
}

GoldenMatrix GoldenMatrix::identity(std::size_t n) {
    GoldenMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Golden(1);
    return m;
}

GoldenMatrix GoldenMatrix::transpose() const {
    GoldenMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

GoldenMatrix operator*(const GoldenMatrix& x, const GoldenMatrix& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("GoldenMatrix: dimension mismatch");
    GoldenMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t k = 0; k < x.cols_; ++k) {
            const Golden& xik = x.at(i, k);
            if (xik.is_zero()) continue;
            for (std::size_t j = 0; j < y.cols_; ++j)
                r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

GoldenMatrix operator-(const GoldenMatrix& x, const GoldenMatrix& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_)
        throw std::invalid_argument("GoldenMatrix: dimension mismatch");
    GoldenMatrix r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
}

GoldenVector GoldenMatrix::apply(const GoldenVector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("GoldenMatrix::apply: dimension mismatch");
    GoldenVector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Golden s;
        for (std::size_t j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Golden GoldenMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("determinant: not square");
    const std::size_t n = rows_;
    GoldenMatrix w = *this;
    Golden det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col).is_zero()) ++piv;
        if (piv == n) return Golden(0);
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(w.at(piv, j), w.at(col, j));
            det = -det;
        }
        det *= w.at(col, col);
        Golden inv = w.at(col, col).inverse();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (w.at(i, col).is_zero()) continue;
            Golden f = w.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j) w.at(i, j) -= f * w.at(col, j);
        }
    }
    return det;
}

GoldenMatrix GoldenMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse: not square");
    const std::size_t n = rows_;
    GoldenMatrix w = *this;
    GoldenMatrix inv = identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && w.at(piv, col).is_zero()) ++piv;
        if (piv == n) throw std::domain_error("GoldenMatrix::inverse: singular matrix");
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w.at(piv, j), w.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        Golden s = w.at(col, col).inverse();
        for (std::size_t j = 0; j < n; ++j) {
            w.at(col, j) *= s;
            inv.at(col, j) *= s;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || w.at(i, col).is_zero()) continue;
            Golden f = w.at(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                w.at(i, j) -= f * w.at(col, j);
                inv.at(i, j) -= f * inv.at(col, j);
            }
        }
    }
    return inv;
}

std::vector<Golden> GoldenMatrix::leading_principal_minors() const {
    if (rows_ != cols_) throw std::invalid_argument("minors: not square");
    std::vector<Golden> out;
    out.reserve(rows_);
    for (std::size_t k = 1; k <= rows_; ++k) {
        GoldenMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub.at(i, j) = at(i, j);
        out.push_back(sub.determinant());
    }
    return out;
}

bool GoldenMatrix::is_integral() const {
    for (const auto& x : a_)
        if (!x.is_integral()) return false;
    return true;
}

Golden dot_with_form(const GoldenVector& x, const GoldenMatrix& B, const GoldenVector& y) {
    if (x.size() != B.rows() || y.size() != B.cols())
        throw std::invalid_argument("dot_with_form: dimension mismatch");
    Golden s;
    for (std::size_t i = 0; i < B.rows(); ++i) {
        if (x[i].is_zero()) continue;
        Golden row;
        for (std::size_t j = 0; j < B.cols(); ++j) {
            if (y[j].is_zero()) continue;
            row += B.at(i, j) * y[j];
        }
        s += x[i] * row;
    }
    return s;
}

}  // namespace wallcert
