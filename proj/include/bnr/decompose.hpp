#pragma once

// Normal-form decomposition of a reduced Bar-Natan complex: a single free
// tower h^0 q^s F2[H] plus torsion pieces [h^(a-1) q^(b-2m) --H^m--> h^a q^b],
// extracted by graded Smith reduction (every entry is a monomial, so pivoting
// on a minimal H-power clears rows and columns with invertible operations).
// Spectral-sequence pages, the survives-H predicate, the torus-knot closed
// form and the chain-level Kuenneth product are derived from it.

#include "bnr/complex.hpp"
#include "bnr/errors.hpp"

#include <array>
#include <map>
#include <vector>

namespace bnr {

struct torsion_piece {
    int a; // homological grading of the generator
    int b; // quantum grading of the generator (even)
    int m; // H-torsion order, m >= 1
    friend bool operator==(const torsion_piece& x, const torsion_piece& y) {
        return x.a == y.a && x.b == y.b && x.m == y.m;
    }
    friend bool operator<(const torsion_piece& x, const torsion_piece& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.m < y.m;
    }
};

struct bn_decomposition {
    int s = 0;                         // tower sits at (0, s)
    std::vector<torsion_piece> torsion; // sorted
    friend bool operator==(const bn_decomposition& x, const bn_decomposition& y) {
        return x.s == y.s && x.torsion == y.torsion;
    }
};

struct ss_page {
    int r;
    std::map<std::pair<int, int>, int> ranks; // (h,q) -> rank, zero omitted
};

// Graded Smith reduction. Throws not_a_knot_complex if the free part does not
// consist of exactly one generator in homological degree 0.
bn_decomposition decompose(const bigraded_complex& c);

inline int s_invariant(const bn_decomposition& d) { return d.s; }

// rank_r(h,q) = [ (h,q)==(0,s) ] + #{i: m_i>=r, (a_i,b_i)=(h,q)}
//                                + #{i: m_i>=r, (a_i-1,b_i-2m_i)=(h,q)}
ss_page page(const bn_decomposition& d, int r);

// True iff every nonzero element of homology in bigrading (h,q) has nonzero
// H-multiple; throws empty_bigrading if the bigraded piece vanishes.
bool survives_h(const bn_decomposition& d, int h, int q);

// bnr(-T(2,k)) for odd k >= 3: tower s = 1-k and one F2[H]/H piece at
// (i, -k+2i+1) for each even i in [-k,-2]. (The printed closed form sums over
// all i in [-k,-2], but that contradicts dim khr(-T(2,k)) = k; the even-i
// form is the one the cube oracle confirms.)
bn_decomposition torus_knot_bn(int k);

// Eq-(1)-shaped complex realizing a decomposition; decompose() is a left
// inverse of this.
bigraded_complex normal_form_complex(const bn_decomposition& d);

// chain-level Kuenneth: tensor the normal forms and re-decompose
bn_decomposition tensor_decompositions(const bn_decomposition& x, const bn_decomposition& y);

std::string decomposition_to_json(const bn_decomposition& d);
bn_decomposition decomposition_from_json(const std::string& text);

} // namespace bnr
