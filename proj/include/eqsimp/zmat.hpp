#pragma once
// Dense integer matrices with arbitrary-precision entries, Smith normal form
// with full transform tracking, and the solve/kernel helpers built on it.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "eqsimp/config.hpp"

namespace eqsimp {

using ZVec = std::vector<mpz_class>;

class ZMat {
public:
    ZMat() : rows_(0), cols_(0) {}
    ZMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static ZMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    bool is_zero() const;
    ZMat transpose() const;
    ZMat operator*(const ZMat& o) const;
    ZMat operator+(const ZMat& o) const;
    ZMat operator-(const ZMat& o) const;
    bool operator==(const ZMat& o) const = default;
    ZVec apply(const ZVec& x) const;  // this * x
    ZMat col(int j) const;
    void set_col(int j, const ZVec& v);
    std::string str() const;

    // glue columns side by side
    static ZMat hcat(const ZMat& a, const ZMat& b);

private:
    int rows_, cols_;
    std::vector<mpz_class> a_;
};

struct SmithForm {
    // a == u * d * v with u, v unimodular and d diagonal, nonnegative,
    // each diagonal entry dividing the next.
    ZMat u, d, v;
    ZMat u_inv, v_inv;
    ZVec diag;   // length min(rows, cols)
    int rank = 0;  // nonzero entries of diag
};

SmithForm smith_normal_form(const ZMat& a);

// One solution x of a x = b over the integers, or nullopt.
std::optional<ZVec> solve_linear(const SmithForm& s, const ZVec& b);

// Columns form a basis of the integer kernel {x : a x = 0}.
ZMat kernel_basis(const SmithForm& s);

// Columns form a basis of the column span lattice of a.
ZMat image_basis(const SmithForm& s);

}  // namespace eqsimp
