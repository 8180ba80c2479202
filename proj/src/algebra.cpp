#include "bnr/algebra.hpp"

namespace bnr {

namespace {

hpoly tr(const hpoly& p, int n) { return truncated(p, n); }

alg_elt tr(const alg_elt& x, int n) { return {tr(x.a, n), tr(x.b, n)}; }

// all elements of A with coefficients mod H^N would be 4^N pairs; identities
// are F2[H]-bilinear, so checking on the basis {1, X} suffices and we phrase
// every axiom on basis inputs, truncating intermediates mod H^N.
const alg_elt basis[2] = {{hpoly::one(), {}}, {{}, hpoly::one()}};

// multiply a two-tensor by an element on the left/right leg
alg_elt2 mul_leg(const alg_elt2& t, const alg_elt& x, int leg) {
    // tensor basis order: 1x1, 1xX, Xx1, XxX
    alg_elt2 r;
    if (leg == 0) {
        // (x . a) (x) b
        alg_elt l0 = alg_mul(x, {t.c[0], t.c[2]}); // column b = 1
        alg_elt l1 = alg_mul(x, {t.c[1], t.c[3]}); // column b = X
        r.c[0] = l0.a;
        r.c[2] = l0.b;
        r.c[1] = l1.a;
        r.c[3] = l1.b;
    } else {
        alg_elt l0 = alg_mul(x, {t.c[0], t.c[1]});
        alg_elt l1 = alg_mul(x, {t.c[2], t.c[3]});
        r.c[0] = l0.a;
        r.c[1] = l0.b;
        r.c[2] = l1.a;
        r.c[3] = l1.b;
    }
    return r;
}

} // namespace

frobenius_report verify_frobenius(int trunc_order) {
    frobenius_report rep;
    const int N = trunc_order;
    auto fail = [&](const std::string& what) {
        rep.ok = false;
        rep.violations.push_back(what);
    };
    if (N < 2) {
        fail("truncation order must be >= 2");
        return rep;
    }

    // unit and counit laws
    for (int i = 0; i < 2; ++i) {
        if (tr(alg_mul(alg_one(), basis[i]), N) != tr(basis[i], N)) fail("unit law");
        // (eps (x) id) Delta = id
        alg_elt2 d = alg_comul(basis[i]);
        alg_elt left = {d.c[2], d.c[3]}; // eps kills the 1-leg, keeps X-leg coefficient
        if (tr(left, N) != tr(basis[i], N)) fail("counit law (left)");
        alg_elt right = {d.c[1], d.c[3]};
        if (tr(right, N) != tr(basis[i], N)) fail("counit law (right)");
    }

    // associativity and commutativity
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            if (tr(alg_mul(basis[i], basis[j]), N) != tr(alg_mul(basis[j], basis[i]), N))
                fail("commutativity");
            for (int k = 0; k < 2; ++k) {
                alg_elt l = alg_mul(alg_mul(basis[i], basis[j]), basis[k]);
                alg_elt r = alg_mul(basis[i], alg_mul(basis[j], basis[k]));
                if (tr(l, N) != tr(r, N)) fail("associativity");
            }
        }

    // coassociativity via (Delta (x) id) Delta = (id (x) Delta) Delta,
    // compared as coefficient triples
    for (int i = 0; i < 2; ++i) {
        // expand Delta(x) = sum c_ab a(x)b over basis, then apply Delta per leg
        alg_elt2 d = alg_comul(basis[i]);
        // left: Delta on first leg -> coefficients of (a,b,c)
        hpoly l[2][2][2], r[2][2][2];
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                const hpoly& c_ab = d.c[a * 2 + b];
                if (c_ab.is_zero()) continue;
                alg_elt2 da = alg_comul(basis[a]);
                for (int u = 0; u < 2; ++u)
                    for (int v = 0; v < 2; ++v)
                        l[u][v][b] = l[u][v][b] + c_ab * da.c[u * 2 + v];
                alg_elt2 db = alg_comul(basis[b]);
                for (int u = 0; u < 2; ++u)
                    for (int v = 0; v < 2; ++v)
                        r[a][u][v] = r[a][u][v] + c_ab * db.c[u * 2 + v];
            }
        for (int u = 0; u < 2; ++u)
            for (int v = 0; v < 2; ++v)
                for (int w = 0; w < 2; ++w)
                    if (tr(l[u][v][w], N) != tr(r[u][v][w], N)) fail("coassociativity");
    }

    // Frobenius relation: (m (x) id)(id (x) Delta) = Delta . m = (id (x) m)(Delta (x) id)
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            alg_elt2 mid = alg_comul(alg_mul(basis[i], basis[j]));
            // (id (x) m)(Delta(x) (x) y)
            alg_elt2 dx = alg_comul(basis[i]);
            alg_elt2 lhs{};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const hpoly& c_ab = dx.c[a * 2 + b];
                    if (c_ab.is_zero()) continue;
                    alg_elt m2 = alg_mul(basis[b], basis[j]);
                    // a (x) m2
                    lhs.c[a * 2 + 0] = lhs.c[a * 2 + 0] + c_ab * m2.a;
                    lhs.c[a * 2 + 1] = lhs.c[a * 2 + 1] + c_ab * m2.b;
                }
            // (m (x) id)(x (x) Delta(y))
            alg_elt2 dy = alg_comul(basis[j]);
            alg_elt2 rhs{};
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    const hpoly& c_ab = dy.c[a * 2 + b];
                    if (c_ab.is_zero()) continue;
                    alg_elt m2 = alg_mul(basis[i], basis[a]);
                    rhs.c[0 * 2 + b] = rhs.c[0 * 2 + b] + c_ab * m2.a;
                    rhs.c[1 * 2 + b] = rhs.c[1 * 2 + b] + c_ab * m2.b;
                }
            for (int k = 0; k < 4; ++k) {
                if (tr(lhs.c[k], N) != tr(mid.c[k], N)) fail("frobenius relation (left)");
                if (tr(rhs.c[k], N) != tr(mid.c[k], N)) fail("frobenius relation (right)");
            }
        }

    // genus-one operator: m . Delta = H . id
    for (int i = 0; i < 2; ++i) {
        alg_elt g = alg_mul2(alg_comul(basis[i]));
        alg_elt h{hshift(basis[i].a, 1), hshift(basis[i].b, 1)};
        if (tr(g, N) != tr(h, N)) fail("m.Delta != H.id");
    }

    return rep;
}

} // namespace bnr
