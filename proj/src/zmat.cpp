#include "eqsimp/zmat.hpp"

#include <sstream>

namespace eqsimp {

ZMat ZMat::identity(int n) {
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

bool ZMat::is_zero() const {
    for (const auto& x : a_)
        if (x != 0) return false;
    return true;
}

ZMat ZMat::transpose() const {
    ZMat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

ZMat ZMat::operator*(const ZMat& o) const {
    if (cols_ != o.rows_) throw invariant_violation("ZMat multiply: shape mismatch");
    ZMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const mpz_class& x = at(i, k);
            if (x == 0) continue;
            for (int j = 0; j < o.cols_; ++j)
                if (o.at(k, j) != 0) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

ZMat ZMat::operator+(const ZMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_violation("ZMat add: shape mismatch");
    ZMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
}

ZMat ZMat::operator-(const ZMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw invariant_violation("ZMat sub: shape mismatch");
    ZMat r(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
    return r;
}

ZVec ZMat::apply(const ZVec& x) const {
    if (static_cast<int>(x.size()) != cols_) throw invariant_violation("ZMat apply: size mismatch");
    ZVec r(rows_, 0);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != 0 && x[j] != 0) r[i] += at(i, j) * x[j];
    return r;
}

ZMat ZMat::col(int j) const {
    ZMat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c.at(i, 0) = at(i, j);
    return c;
}

void ZMat::set_col(int j, const ZVec& v) {
    for (int i = 0; i < rows_; ++i) at(i, j) = v[i];
}

ZMat ZMat::hcat(const ZMat& a, const ZMat& b) {
    if (a.rows() != b.rows()) throw invariant_violation("ZMat hcat: row mismatch");
    ZMat r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

std::string ZMat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        os << (i ? "\n[" : "[");
        for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    return os.str();
}

namespace {

struct SnfWork {
    ZMat d, u, u_inv, v, v_inv;

    // row ops on d, mirrored so that  a == u * d * v  stays true
    void row_swap(int i, int j) {
        for (int c = 0; c < d.cols(); ++c) std::swap(d.at(i, c), d.at(j, c));
        for (int c = 0; c < u.rows(); ++c) std::swap(u.at(c, i), u.at(c, j));
        for (int c = 0; c < u_inv.cols(); ++c) std::swap(u_inv.at(i, c), u_inv.at(j, c));
    }
    void row_negate(int i) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) = -d.at(i, c);
        for (int c = 0; c < u.rows(); ++c) u.at(c, i) = -u.at(c, i);
        for (int c = 0; c < u_inv.cols(); ++c) u_inv.at(i, c) = -u_inv.at(i, c);
    }
    // row i += k * row j
    void row_add(int i, int j, const mpz_class& k) {
        for (int c = 0; c < d.cols(); ++c) d.at(i, c) += k * d.at(j, c);
        for (int c = 0; c < u.rows(); ++c) u.at(c, j) -= k * u.at(c, i);
        for (int c = 0; c < u_inv.cols(); ++c) u_inv.at(i, c) += k * u_inv.at(j, c);
    }
    void col_swap(int i, int j) {
        for (int r = 0; r < d.rows(); ++r) std::swap(d.at(r, i), d.at(r, j));
        for (int r = 0; r < v.cols(); ++r) std::swap(v.at(i, r), v.at(j, r));
        for (int r = 0; r < v_inv.rows(); ++r) std::swap(v_inv.at(r, i), v_inv.at(r, j));
    }
    // col i += k * col j
    void col_add(int i, int j, const mpz_class& k) {
        for (int r = 0; r < d.rows(); ++r) d.at(r, i) += k * d.at(r, j);
        for (int r = 0; r < v.cols(); ++r) v.at(j, r) -= k * v.at(i, r);
        for (int r = 0; r < v_inv.rows(); ++r) v_inv.at(r, i) += k * v_inv.at(r, j);
    }
};

}  // namespace

SmithForm smith_normal_form(const ZMat& a) {
    const int r = a.rows(), c = a.cols();
    SnfWork w{a, ZMat::identity(r), ZMat::identity(r), ZMat::identity(c), ZMat::identity(c)};
    const int t_max = std::min(r, c);

    for (int t = 0; t < t_max; ++t) {
        // pick the nonzero entry of smallest magnitude in the trailing block
        int pi = -1, pj = -1;
        mpz_class best;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j) {
                const mpz_class& x = w.d.at(i, j);
                if (x == 0) continue;
                mpz_class ax = abs(x);
                if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
            }
        if (pi < 0) break;
        if (pi != t) w.row_swap(t, pi);
        if (pj != t) w.col_swap(t, pj);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = t + 1; i < r; ++i) {
                if (w.d.at(i, t) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(i, t).get_mpz_t(), w.d.at(t, t).get_mpz_t());
                w.row_add(i, t, -q);
                if (w.d.at(i, t) != 0) {  // remainder became new, smaller pivot
                    w.row_swap(t, i);
                    clean = false;
                }
            }
            for (int j = t + 1; j < c; ++j) {
                if (w.d.at(t, j) == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), w.d.at(t, j).get_mpz_t(), w.d.at(t, t).get_mpz_t());
                w.col_add(j, t, -q);
                if (w.d.at(t, j) != 0) {
                    w.col_swap(t, j);
                    clean = false;
                }
            }
        }
        if (w.d.at(t, t) < 0) w.row_negate(t);
    }

    // enforce the divisibility chain
    bool stable = false;
    while (!stable) {
        stable = true;
        for (int t = 0; t + 1 < t_max; ++t) {
            const mpz_class &x = w.d.at(t, t), &y = w.d.at(t + 1, t + 1);
            if (x == 0 || y == 0 || y % x == 0) continue;
            stable = false;
            // fold d[t+1] into column t, then re-clear the 2x2 block
            w.col_add(t, t + 1, 1);
            while (true) {
                if (w.d.at(t + 1, t) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), w.d.at(t + 1, t).get_mpz_t(), w.d.at(t, t).get_mpz_t());
                    w.row_add(t + 1, t, -q);
                    if (w.d.at(t + 1, t) != 0) { w.row_swap(t, t + 1); continue; }
                }
                if (w.d.at(t, t + 1) != 0) {
                    mpz_class q;
                    mpz_fdiv_q(q.get_mpz_t(), w.d.at(t, t + 1).get_mpz_t(), w.d.at(t, t).get_mpz_t());
                    w.col_add(t + 1, t, -q);
                    if (w.d.at(t, t + 1) != 0) { w.col_swap(t, t + 1); continue; }
                }
                break;
            }
            if (w.d.at(t, t) < 0) w.row_negate(t);
            if (w.d.at(t + 1, t + 1) < 0) w.row_negate(t + 1);
        }
    }

    SmithForm out;
    out.u = std::move(w.u);
    out.u_inv = std::move(w.u_inv);
    out.v = std::move(w.v);
    out.v_inv = std::move(w.v_inv);
    out.diag.resize(t_max);
    for (int t = 0; t < t_max; ++t) out.diag[t] = w.d.at(t, t);
    out.rank = 0;
    for (int t = 0; t < t_max; ++t)
        if (out.diag[t] != 0) ++out.rank;
    out.d = std::move(w.d);
    return out;
}

std::optional<ZVec> solve_linear(const SmithForm& s, const ZVec& b) {
    const int r = s.d.rows(), c = s.d.cols();
    if (static_cast<int>(b.size()) != r) throw invariant_violation("solve_linear: size mismatch");
    ZVec cb = s.u_inv.apply(b);
    ZVec y(c, 0);
    for (int i = 0; i < r; ++i) {
        const mpz_class& di = i < static_cast<int>(s.diag.size()) ? s.diag[i] : mpz_class(0);
        if (di != 0) {
            if (cb[i] % di != 0) return std::nullopt;
            y[i] = cb[i] / di;
        } else if (cb[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v_inv.apply(y);
}

ZMat kernel_basis(const SmithForm& s) {
    const int c = s.d.cols();
    const int k = c - s.rank;
    ZMat out(c, k);
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < c; ++i) out.at(i, j) = s.v_inv.at(i, s.rank + j);
    return out;
}

ZMat image_basis(const SmithForm& s) {
    const int r = s.d.rows();
    ZMat out(r, s.rank);
    for (int j = 0; j < s.rank; ++j)
        for (int i = 0; i < r; ++i) out.at(i, j) = s.u.at(i, j) * s.diag[j];
    return out;
}

}  // namespace eqsimp
