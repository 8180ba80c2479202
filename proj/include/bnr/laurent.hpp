#pragma once

// Exact matrix algebra over the Laurent ring Z[t,1/t] with the bar involution
// t -> 1/t: congruence transforms Q -> P^T Q bar(P), hyperbolic-pair
// cancellation, and entrywise form comparison. Coefficients are arbitrary-
// precision integers; nothing here is floating point.

#include "bnr/errors.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <string>
#include <vector>

namespace bnr {

using bigint = boost::multiprecision::cpp_int;

struct laurent_poly {
    std::map<int, bigint> coeffs; // exponent -> coefficient, no zeros stored

    void set(int e, bigint c) {
        if (c == 0) coeffs.erase(e);
        else coeffs[e] = std::move(c);
    }
    bool is_zero() const { return coeffs.empty(); }
    // units of Z[t,1/t] are +-t^k
    bool is_unit() const {
        if (coeffs.size() != 1) return false;
        const bigint& c = coeffs.begin()->second;
        return c == 1 || c == -1;
    }
    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        return a.coeffs == b.coeffs;
    }
};

laurent_poly lp_add(const laurent_poly& a, const laurent_poly& b);
laurent_poly lp_mul(const laurent_poly& a, const laurent_poly& b);
laurent_poly bar(const laurent_poly& p); // t -> 1/t
std::string lp_to_string(const laurent_poly& p);

struct laurent_matrix {
    int n = 0;
    std::vector<laurent_poly> a; // row-major n*n
    std::vector<std::string> labels;

    laurent_poly& at(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    const laurent_poly& at(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
    friend bool operator==(const laurent_matrix& x, const laurent_matrix& y) {
        return x.n == y.n && x.a == y.a;
    }
};

laurent_matrix lm_mul(const laurent_matrix& x, const laurent_matrix& y);
laurent_matrix lm_transpose(const laurent_matrix& x);
laurent_matrix lm_bar(const laurent_matrix& x);
laurent_poly lm_det(const laurent_matrix& x);
bool is_bar_hermitian(const laurent_matrix& x);

// P^T Q bar(P); throws non_invertible_basis_change unless det P is a unit
laurent_matrix congruence(const laurent_matrix& q, const laurent_matrix& p);

// Remove dual pairs (i,j): requires entry(i,j) a unit and rows/columns i
// pairing trivially with every retained index; returns the complementary
// submatrix. Throws not_dual_pair on violation. Indices are 0-based.
laurent_matrix cancel_hyperbolic_pairs(const laurent_matrix& q,
                                       const std::vector<std::pair<int, int>>& pairs);

inline bool forms_equal(const laurent_matrix& x, const laurent_matrix& y) { return x == y; }

// JSON: {"labels":[...],"entries":[[{"-1":1,"0":-2,"1":1},...],...]}
laurent_matrix lm_from_json(const std::string& text);
std::string lm_to_json(const laurent_matrix& m);

} // namespace bnr
