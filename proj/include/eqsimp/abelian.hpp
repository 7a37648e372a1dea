#pragma once
// Finitely generated abelian groups in invariant-factor coordinates, the
// subquotient constructor that turns lattice data into such groups, and
// G-modules (abelian groups with a group acting by matrices).

#include <gmpxx.h>

#include <vector>

#include "eqsimp/group.hpp"
#include "eqsimp/zmat.hpp"

namespace eqsimp {

// Z/d1 + ... + Z/dk + Z^rank with 1 < d1 | d2 | ... | dk.
// Element vectors have the torsion coordinates first, then the free ones.
struct FinGenAb {
    int rank = 0;
    ZVec torsion;

    int coords() const { return rank + static_cast<int>(torsion.size()); }
    ZVec reduce(ZVec v) const;              // canonical representative
    ZVec add(const ZVec& a, const ZVec& b) const;
    ZVec neg(const ZVec& a) const;
    ZVec scale(const mpz_class& k, const ZVec& a) const;
    ZVec zero() const { return ZVec(coords(), 0); }
    bool is_zero_elem(const ZVec& v) const;
    bool finite() const { return rank == 0; }
    mpz_class order() const;                // throws when infinite
    // All elements, lexicographic; finite groups only.
    std::vector<ZVec> elements(std::int64_t budget) const;
    bool same_shape(const FinGenAb& o) const { return rank == o.rank && torsion == o.torsion; }
    std::string str() const;
};

// L/M where L is spanned by the numerator columns inside Z^n and M by the
// denominator columns (must lie in L).  Provides coordinates both ways.
class Subquotient {
public:
    Subquotient() = default;
    // numerator: n x p (p generators of L); denominator: n x q, im ⊆ L.
    Subquotient(int ambient_dim, const ZMat& numerator, const ZMat& denominator);

    const FinGenAb& group() const { return group_; }
    bool contains(const ZVec& ambient) const;       // membership in L
    ZVec project(const ZVec& ambient) const;        // class of an element of L
    ZVec lift(const ZVec& coords) const;            // representative in Z^n
    int ambient_dim() const { return ambient_; }

private:
    int ambient_ = 0;
    FinGenAb group_;
    ZMat basis_;           // n x m basis of L
    SmithForm basis_snf_;  // for membership / coordinates in L
    SmithForm rel_snf_;    // SNF of relations in basis coordinates (m x q)
    ZVec rel_diag_;        // padded to length m
    std::vector<int> coord_pos_;  // positions in 0..m-1 kept as group coordinates
};

// The quotient Z^n / (columns of rel): convenience wrapper.
Subquotient cokernel(const ZMat& rel);

// A finite-group action on a FinGenAb by integer matrices in its coordinates.
class GModule {
public:
    GModule() = default;
    GModule(FiniteGroup g, FinGenAb m, std::vector<ZMat> action);

    const FiniteGroup& glen() const { return g_; }
    const FinGenAb& mod() const { return m_; }
    const ZMat& matrix(int g) const { return act_[g]; }
    ZVec act(int g, const ZVec& v) const { return m_.reduce(act_[g].apply(v)); }

    static GModule trivial(const FiniteGroup& g, FinGenAb m);
    // Z with the sign action given per group element (+1/-1).
    static GModule sign(const FiniteGroup& g, const std::vector<int>& signs);
    // Z/n with g acting as multiplication by units[g].
    static GModule cyclic_with_units(const FiniteGroup& g, const mpz_class& n,
                                     const std::vector<mpz_class>& units);

private:
    FiniteGroup g_;
    FinGenAb m_;
    std::vector<ZMat> act_;
};

// matrices equal as maps on the group (entries congruent w.r.t. torsion)
bool same_module_map(const FinGenAb& src, const FinGenAb& dst, const ZMat& a, const ZMat& b);

}  // namespace eqsimp
