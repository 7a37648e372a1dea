#include "eqsimp/abelian.hpp"

#include <sstream>

namespace eqsimp {

ZVec FinGenAb::reduce(ZVec v) const {
    if (static_cast<int>(v.size()) != coords())
        throw invariant_violation("FinGenAb::reduce: coordinate count mismatch");
    for (size_t i = 0; i < torsion.size(); ++i) {
        mpz_class r;
        mpz_fdiv_r(r.get_mpz_t(), v[i].get_mpz_t(), torsion[i].get_mpz_t());
        v[i] = r;
    }
    return v;
}

ZVec FinGenAb::add(const ZVec& a, const ZVec& b) const {
    ZVec r(coords());
    for (int i = 0; i < coords(); ++i) r[i] = a[i] + b[i];
    return reduce(std::move(r));
}

ZVec FinGenAb::neg(const ZVec& a) const {
    ZVec r(coords());
    for (int i = 0; i < coords(); ++i) r[i] = -a[i];
    return reduce(std::move(r));
}

ZVec FinGenAb::scale(const mpz_class& k, const ZVec& a) const {
    ZVec r(coords());
    for (int i = 0; i < coords(); ++i) r[i] = k * a[i];
    return reduce(std::move(r));
}

bool FinGenAb::is_zero_elem(const ZVec& v) const {
    for (const auto& x : reduce(v))
        if (x != 0) return false;
    return true;
}

mpz_class FinGenAb::order() const {
    if (rank > 0) throw invalid_input("FinGenAb::order: group is infinite");
    mpz_class n = 1;
    for (const auto& d : torsion) n *= d;
    return n;
}

std::vector<ZVec> FinGenAb::elements(std::int64_t budget) const {
    if (rank > 0) throw invalid_input("FinGenAb::elements: group is infinite");
    mpz_class n = order();
    if (n > budget) throw cap_exceeded("enum_budget", "FinGenAb::elements: order exceeds budget");
    std::vector<ZVec> out;
    ZVec cur(coords(), 0);
    const int k = coords();
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0) {
            cur[i] += 1;
            if (cur[i] < torsion[i]) break;
            cur[i] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return out;
}

std::string FinGenAb::str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& d : torsion) {
        os << (first ? "" : " + ") << "Z/" << d.get_str();
        first = false;
    }
    if (rank > 0) {
        os << (first ? "" : " + ") << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

Subquotient::Subquotient(int ambient_dim, const ZMat& numerator, const ZMat& denominator) {
    ambient_ = ambient_dim;
    if (numerator.rows() != ambient_dim || denominator.rows() != ambient_dim)
        throw invalid_input("Subquotient: generator rows must match ambient dimension");
    SmithForm num_snf = smith_normal_form(numerator);
    basis_ = image_basis(num_snf);
    basis_snf_ = smith_normal_form(basis_);
    const int m = basis_.cols();

    // denominator generators in basis coordinates
    ZMat rel(m, denominator.cols());
    for (int j = 0; j < denominator.cols(); ++j) {
        ZVec col(ambient_dim);
        for (int i = 0; i < ambient_dim; ++i) col[i] = denominator.at(i, j);
        auto x = solve_linear(basis_snf_, col);
        if (!x) throw invalid_input("Subquotient: denominator not contained in numerator span");
        for (int i = 0; i < m; ++i) rel.at(i, j) = (*x)[i];
    }
    rel_snf_ = smith_normal_form(rel);
    rel_diag_.assign(m, 0);
    for (size_t i = 0; i < rel_snf_.diag.size(); ++i) rel_diag_[i] = rel_snf_.diag[i];

    for (int i = 0; i < m; ++i)
        if (rel_diag_[i] > 1) {
            coord_pos_.push_back(i);
            group_.torsion.push_back(rel_diag_[i]);
        }
    for (int i = 0; i < m; ++i)
        if (rel_diag_[i] == 0) coord_pos_.push_back(i);
    group_.rank = 0;
    for (int i = 0; i < m; ++i)
        if (rel_diag_[i] == 0) ++group_.rank;
}

bool Subquotient::contains(const ZVec& ambient) const {
    return static_cast<bool>(solve_linear(basis_snf_, ambient));
}

ZVec Subquotient::project(const ZVec& ambient) const {
    auto x = solve_linear(basis_snf_, ambient);
    if (!x) throw invalid_input("Subquotient::project: element outside the subgroup");
    ZVec c = rel_snf_.u_inv.apply(*x);
    ZVec out;
    out.reserve(coord_pos_.size());
    for (int p : coord_pos_) out.push_back(c[p]);
    return group_.reduce(std::move(out));
}

ZVec Subquotient::lift(const ZVec& coords) const {
    if (static_cast<int>(coords.size()) != group_.coords())
        throw invalid_input("Subquotient::lift: coordinate count mismatch");
    const int m = basis_.cols();
    ZVec c(m, 0);
    for (size_t i = 0; i < coord_pos_.size(); ++i) c[coord_pos_[i]] = coords[i];
    ZVec x = rel_snf_.u.apply(c);
    return basis_.apply(x);
}

Subquotient cokernel(const ZMat& rel) {
    return Subquotient(rel.rows(), ZMat::identity(rel.rows()), rel);
}

GModule::GModule(FiniteGroup g, FinGenAb m, std::vector<ZMat> action)
    : g_(std::move(g)), m_(std::move(m)), act_(std::move(action)) {
    if (static_cast<int>(act_.size()) != g_.order())
        throw invalid_input("GModule: one matrix per group element required");
    const int c = m_.coords();
    for (const auto& a : act_)
        if (a.rows() != c || a.cols() != c)
            throw invalid_input("GModule: action matrix shape mismatch");
    // torsion respected: a * (d_i e_i) must vanish in the group
    for (const auto& a : act_)
        for (size_t i = 0; i < m_.torsion.size(); ++i) {
            ZVec v(c, 0);
            v[i] = m_.torsion[i];
            if (!m_.is_zero_elem(a.apply(v)))
                throw invalid_input("GModule: action does not respect torsion");
        }
    if (!same_module_map(m_, m_, act_[g_.identity()], ZMat::identity(c)))
        throw invalid_input("GModule: identity must act as identity");
    for (int x = 0; x < g_.order(); ++x)
        for (int y = 0; y < g_.order(); ++y)
            if (!same_module_map(m_, m_, act_[g_.op(x, y)], act_[x] * act_[y]))
                throw invalid_input("GModule: action law fails");
}

GModule GModule::trivial(const FiniteGroup& g, FinGenAb m) {
    return GModule(g, m, std::vector<ZMat>(g.order(), ZMat::identity(m.coords())));
}

GModule GModule::sign(const FiniteGroup& g, const std::vector<int>& signs) {
    FinGenAb m;
    m.rank = 1;
    std::vector<ZMat> act;
    for (int s : signs) {
        ZMat a(1, 1);
        a.at(0, 0) = s;
        act.push_back(a);
    }
    return GModule(g, m, std::move(act));
}

GModule GModule::cyclic_with_units(const FiniteGroup& g, const mpz_class& n,
                                   const std::vector<mpz_class>& units) {
    FinGenAb m;
    m.torsion = {n};
    std::vector<ZMat> act;
    for (const auto& u : units) {
        ZMat a(1, 1);
        a.at(0, 0) = u;
        act.push_back(a);
    }
    return GModule(g, m, std::move(act));
}

bool same_module_map(const FinGenAb& src, const FinGenAb& dst, const ZMat& a, const ZMat& b) {
    if (a.rows() != dst.coords() || b.rows() != dst.coords() ||
        a.cols() != src.coords() || b.cols() != src.coords())
        return false;
    // compare on the standard generators of src
    for (int j = 0; j < src.coords(); ++j) {
        ZVec va(dst.coords()), vb(dst.coords());
        for (int i = 0; i < dst.coords(); ++i) {
            va[i] = a.at(i, j);
            vb[i] = b.at(i, j);
        }
        ZVec diff(dst.coords());
        for (int i = 0; i < dst.coords(); ++i) diff[i] = va[i] - vb[i];
        if (!dst.is_zero_elem(diff)) return false;
    }
    return true;
}

}  // namespace eqsimp
