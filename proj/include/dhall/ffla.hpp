#pragma once

// Dense linear algebra over a prime field F_p.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dhall {

using Fp = std::uint32_t;
using FpVec = std::vector<Fp>;

constexpr std::uint64_t kDefaultEnumerationCap = 1ULL << 20;

Fp fp_inv(Fp a, Fp p);

class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(std::size_t rows, std::size_t cols, Fp p);
    static FpMatrix identity(std::size_t n, Fp p);
    static FpMatrix from_rows(const std::vector<FpVec>& rows, std::size_t cols, Fp p);
    static FpMatrix from_columns(const std::vector<FpVec>& cols, std::size_t rows, Fp p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Fp prime() const { return p_; }

    Fp operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Fp& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, long long v);
    const std::vector<Fp>& raw() const { return data_; }

    FpVec row(std::size_t r) const;
    FpVec column(std::size_t c) const;

    FpMatrix operator*(const FpMatrix& o) const;
    FpVec operator*(const FpVec& v) const;
    FpMatrix operator+(const FpMatrix& o) const;
    FpMatrix operator-(const FpMatrix& o) const;
    FpMatrix scaled(Fp c) const;
    FpMatrix transpose() const;

    bool is_zero() const;
    bool operator==(const FpMatrix& o) const;
    bool operator!=(const FpMatrix& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Fp p_ = 2;
    std::vector<Fp> data_;
};

struct Rref {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;  // pivot column of each non-zero row
};

Rref rref(const FpMatrix& m);
std::size_t rank(const FpMatrix& m);
bool is_invertible(const FpMatrix& m);
std::optional<FpMatrix> inverse(const FpMatrix& m);

// Basis of the null space {x : m x = 0}, one vector per free column.
std::vector<FpVec> kernel_basis(const FpMatrix& m);

// Some x with m x = b, or nothing.
std::optional<FpVec> solve(const FpMatrix& m, const FpVec& b);

// Rows of a basis of span(vectors), in reduced echelon form.
std::vector<FpVec> row_space_basis(const std::vector<FpVec>& vectors, std::size_t len, Fp p);

// Vectors from `extra` (in order) that extend `base` to a basis of the joint
// span; returns their indices.
std::vector<std::size_t> extend_basis(const std::vector<FpVec>& base, const std::vector<FpVec>& extra,
                                      std::size_t len, Fp p);

// Visit every coefficient tuple (c_1..c_k) in F_p^k in lexicographic order
// (c_1 most significant). Throws CapExceeded when p^k exceeds cap.
void enumerate_coefficients(std::size_t k, Fp p, std::uint64_t cap,
                            const std::function<void(const FpVec&)>& visit);

// Same order; stops as soon as `found` returns true and reports whether it did.
bool search_coefficients(std::size_t k, Fp p, std::uint64_t cap,
                         const std::function<bool(const FpVec&)>& found);

// Visit every vector of span(basis) as sum c_i b_i, coefficients in lexicographic order.
void enumerate_space(const std::vector<FpVec>& basis, std::size_t len, Fp p, std::uint64_t cap,
                     const std::function<void(const FpVec&)>& visit);

std::uint64_t checked_power(std::uint64_t base, std::size_t exp, std::uint64_t cap);

FpVec vec_add(const FpVec& a, const FpVec& b, Fp p);
FpVec vec_scale(const FpVec& a, Fp c, Fp p);
void vec_axpy(FpVec& y, Fp c, const FpVec& x, Fp p);  // y += c x
bool vec_is_zero(const FpVec& v);

}  // namespace dhall
