#include "dhall/ffla.hpp"

#include <sstream>

#include "dhall/errors.hpp"

namespace dhall {

namespace {

inline Fp mulmod(Fp a, Fp b, Fp p) {
    return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p);
}

void check_prime(Fp p) {
    if (p < 2) throw InputError("field characteristic must be a prime >= 2");
    for (Fp d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
        if (p % d == 0) throw InputError("field characteristic " + std::to_string(p) + " is not prime");
}

}  // namespace

Fp fp_inv(Fp a, Fp p) {
    if (a % p == 0) throw InputError("inverting zero in F_p");
    // Fermat: a^(p-2)
    std::uint64_t result = 1, base = a % p;
    std::uint64_t e = p - 2;
    while (e) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<Fp>(result);
}

FpMatrix::FpMatrix(std::size_t rows, std::size_t cols, Fp p)
    : rows_(rows), cols_(cols), p_(p), data_(rows * cols, 0) {
    check_prime(p);
}

FpMatrix FpMatrix::identity(std::size_t n, Fp p) {
    FpMatrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

FpMatrix FpMatrix::from_rows(const std::vector<FpVec>& rows, std::size_t cols, Fp p) {
    FpMatrix m(rows.size(), cols, p);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c] % p;
    }
    return m;
}

FpMatrix FpMatrix::from_columns(const std::vector<FpVec>& cols, std::size_t rows, Fp p) {
    FpMatrix m(rows, cols.size(), p);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw DimensionMismatch("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r] % p;
    }
    return m;
}

void FpMatrix::set(std::size_t r, std::size_t c, long long v) {
    long long m = v % static_cast<long long>(p_);
    if (m < 0) m += p_;
    data_[r * cols_ + c] = static_cast<Fp>(m);
}

FpVec FpMatrix::row(std::size_t r) const {
    return FpVec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

FpVec FpMatrix::column(std::size_t c) const {
    FpVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
    if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
    if (p_ != o.p_) throw ContextMismatch("matrix product over different fields");
    FpMatrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            Fp a = (*this)(i, k);
            if (!a) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) {
                Fp b = o(k, j);
                if (b) r.at(i, j) = (r(i, j) + mulmod(a, b, p_)) % p_;
            }
        }
    }
    return r;
}

FpVec FpMatrix::operator*(const FpVec& v) const {
    if (v.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    FpVec out(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t k = 0; k < cols_; ++k) acc = (acc + static_cast<std::uint64_t>((*this)(i, k)) * v[k]) % p_;
        out[i] = static_cast<Fp>(acc);
    }
    return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
    FpMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
    FpMatrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + p_ - o.data_[i]) % p_;
    return r;
}

FpMatrix FpMatrix::scaled(Fp c) const {
    FpMatrix r = *this;
    for (auto& x : r.data_) x = mulmod(x, c % p_, p_);
    return r;
}

FpMatrix FpMatrix::transpose() const {
    FpMatrix r(cols_, rows_, p_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = (*this)(i, j);
    return r;
}

bool FpMatrix::is_zero() const {
    for (auto x : data_)
        if (x) return false;
    return true;
}

bool FpMatrix::operator==(const FpMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_ && data_ == o.data_;
}

std::string FpMatrix::to_string() const {
    std::ostringstream out;
    out << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    }
    out << "]";
    return out.str();
}

Rref rref(const FpMatrix& m) {
    Rref out{m, {}};
    FpMatrix& a = out.reduced;
    const Fp p = m.prime();
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && a(piv, col) == 0) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Fp inv = fp_inv(a(row, col), p);
        for (std::size_t j = 0; j < a.cols(); ++j) a.at(row, j) = mulmod(a(row, j), inv, p);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || a(i, col) == 0) continue;
            Fp f = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j)
                a.at(i, j) = (a(i, j) + p - mulmod(f, a(row, j), p)) % p;
        }
        out.pivots.push_back(col);
        ++row;
    }
    return out;
}

std::size_t rank(const FpMatrix& m) { return rref(m).pivots.size(); }

bool is_invertible(const FpMatrix& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

std::optional<FpMatrix> inverse(const FpMatrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    FpMatrix aug(n, 2 * n, m.prime());
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m(i, j);
        aug.at(i, n + i) = 1;
    }
    Rref r = rref(aug);
    if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] != n - 1)) return std::nullopt;
    FpMatrix inv(n, n, m.prime());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = r.reduced(i, n + j);
    return inv;
}

std::vector<FpVec> kernel_basis(const FpMatrix& m) {
    Rref r = rref(m);
    const Fp p = m.prime();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<FpVec> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        FpVec v(m.cols(), 0);
        v[free] = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) {
            Fp x = r.reduced(i, free);
            if (x) v[r.pivots[i]] = (p - x) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<FpVec> solve(const FpMatrix& m, const FpVec& b) {
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
    FpMatrix aug(m.rows(), m.cols() + 1, m.prime());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m(i, j);
        aug.at(i, m.cols()) = b[i] % m.prime();
    }
    Rref r = rref(aug);
    FpVec x(m.cols(), 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
        if (r.pivots[i] == m.cols()) return std::nullopt;
        x[r.pivots[i]] = r.reduced(i, m.cols());
    }
    return x;
}

std::vector<FpVec> row_space_basis(const std::vector<FpVec>& vectors, std::size_t len, Fp p) {
    if (vectors.empty()) return {};
    Rref r = rref(FpMatrix::from_rows(vectors, len, p));
    std::vector<FpVec> out;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) out.push_back(r.reduced.row(i));
    return out;
}

std::vector<std::size_t> extend_basis(const std::vector<FpVec>& base, const std::vector<FpVec>& extra,
                                      std::size_t len, Fp p) {
    // Incremental echelon form keyed by pivot position.
    std::vector<FpVec> echelon;
    std::vector<std::size_t> pivots;
    auto reduce = [&](FpVec v) {
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            Fp c = v[pivots[i]];
            if (c) vec_axpy(v, (p - c) % p, echelon[i], p);
        }
        return v;
    };
    auto insert = [&](const FpVec& v0) {
        FpVec v = reduce(v0);
        std::size_t piv = 0;
        while (piv < len && v[piv] == 0) ++piv;
        if (piv == len) return false;
        v = vec_scale(v, fp_inv(v[piv], p), p);
        for (std::size_t i = 0; i < echelon.size(); ++i) {
            Fp c = echelon[i][piv];
            if (c) vec_axpy(echelon[i], (p - c) % p, v, p);
        }
        echelon.push_back(std::move(v));
        pivots.push_back(piv);
        return true;
    };
    for (const auto& b : base) insert(b);
    std::vector<std::size_t> chosen;
    for (std::size_t i = 0; i < extra.size(); ++i)
        if (insert(extra[i])) chosen.push_back(i);
    return chosen;
}

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (total > cap / base) throw CapExceeded("enumeration of " + std::to_string(base) + "^" +
                                                  std::to_string(exp) + " elements exceeds cap " +
                                                  std::to_string(cap));
        total *= base;
    }
    if (total > cap) throw CapExceeded("enumeration exceeds cap " + std::to_string(cap));
    return total;
}

bool search_coefficients(std::size_t k, Fp p, std::uint64_t cap,
                         const std::function<bool(const FpVec&)>& found) {
    checked_power(p, k, cap);
    FpVec c(k, 0);
    while (true) {
        if (found(c)) return true;
        std::size_t i = k;
        while (true) {
            if (i == 0) return false;
            --i;
            if (++c[i] < p) break;
            c[i] = 0;
        }
    }
}

void enumerate_coefficients(std::size_t k, Fp p, std::uint64_t cap,
                            const std::function<void(const FpVec&)>& visit) {
    search_coefficients(k, p, cap, [&](const FpVec& c) {
        visit(c);
        return false;
    });
}

void enumerate_space(const std::vector<FpVec>& basis, std::size_t len, Fp p, std::uint64_t cap,
                     const std::function<void(const FpVec&)>& visit) {
    enumerate_coefficients(basis.size(), p, cap, [&](const FpVec& c) {
        FpVec v(len, 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (c[i]) vec_axpy(v, c[i], basis[i], p);
        visit(v);
    });
}

FpVec vec_add(const FpVec& a, const FpVec& b, Fp p) {
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

FpVec vec_scale(const FpVec& a, Fp c, Fp p) {
    FpVec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(a[i], c, p);
    return r;
}

void vec_axpy(FpVec& y, Fp c, const FpVec& x, Fp p) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] + mulmod(c, x[i], p)) % p;
}

bool vec_is_zero(const FpVec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

}  // namespace dhall
