#pragma once

// The rank-2 Frobenius algebra A = F2[H][X] / (X^2 = HX) underlying the
// Bar-Natan deformation. Basis {1, X}; an element is a pair of F2[H]
// coefficients. Structure maps and an exhaustive identity checker over
// truncations F2[H]/H^N.

#include "bnr/ring.hpp"

#include <array>
#include <string>
#include <vector>

namespace bnr {

// element a*1 + b*X
struct alg_elt {
    hpoly a, b;
    friend bool operator==(const alg_elt& x, const alg_elt& y) {
        return x.a == y.a && x.b == y.b;
    }
};

inline alg_elt alg_one() { return {hpoly::one(), {}}; }
inline alg_elt alg_x() { return {{}, hpoly::one()}; }

// m(1,1)=1, m(1,X)=m(X,1)=X, m(X,X)=H X
inline alg_elt alg_mul(const alg_elt& x, const alg_elt& y) {
    alg_elt r;
    r.a = x.a * y.a;
    r.b = x.a * y.b + x.b * y.a + hshift(x.b * y.b, 1);
    return r;
}

// element of A (x) A: coefficients of 1x1, 1xX, Xx1, XxX
struct alg_elt2 {
    std::array<hpoly, 4> c;
    friend bool operator==(const alg_elt2& x, const alg_elt2& y) { return x.c == y.c; }
};

// Delta(1) = 1xX + Xx1 + H 1x1 ; Delta(X) = XxX
inline alg_elt2 alg_comul(const alg_elt& x) {
    alg_elt2 r;
    r.c[0] = hshift(x.a, 1);
    r.c[1] = x.a;
    r.c[2] = x.a;
    r.c[3] = x.b;
    return r;
}

// counit: eps(1)=0, eps(X)=1
inline hpoly alg_counit(const alg_elt& x) { return x.b; }

// m applied to a two-tensor
inline alg_elt alg_mul2(const alg_elt2& t) {
    alg_elt r;
    r.a = t.c[0];
    r.b = t.c[1] + t.c[2] + hshift(t.c[3], 1);
    return r;
}

struct frobenius_report {
    bool ok = true;
    std::vector<std::string> violations;
};

// Exhaustively checks the Frobenius axioms and the genus-one identity
// m.Delta = H.id on all basis elements with coefficients in F2[H]/H^N.
frobenius_report verify_frobenius(int trunc_order);

} // namespace bnr
