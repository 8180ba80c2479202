#include "bnr/laurent.hpp"

#include <nlohmann/json.hpp>

#include <set>

namespace bnr {

laurent_poly lp_add(const laurent_poly& a, const laurent_poly& b) {
    laurent_poly r = a;
    for (const auto& [e, c] : b.coeffs) {
        auto it = r.coeffs.find(e);
        if (it == r.coeffs.end()) {
            r.coeffs[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) r.coeffs.erase(it);
        }
    }
    return r;
}

laurent_poly lp_mul(const laurent_poly& a, const laurent_poly& b) {
    laurent_poly r;
    for (const auto& [ea, ca] : a.coeffs)
        for (const auto& [eb, cb] : b.coeffs) {
            bigint& c = r.coeffs[ea + eb];
            c += ca * cb;
        }
    for (auto it = r.coeffs.begin(); it != r.coeffs.end();)
        it = (it->second == 0) ? r.coeffs.erase(it) : std::next(it);
    return r;
}

laurent_poly bar(const laurent_poly& p) {
    laurent_poly r;
    for (const auto& [e, c] : p.coeffs) r.coeffs[-e] = c;
    return r;
}

std::string lp_to_string(const laurent_poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [e, c] : p.coeffs) {
        std::string term;
        bigint ac = c < 0 ? -c : c;
        if (ac != 1 || e == 0) term += ac.str();
        if (e == 1) term += term.empty() ? "t" : "*t";
        else if (e == -1) term += term.empty() ? "t^-1" : "*t^-1";
        else if (e != 0) term += (term.empty() ? "t^" : "*t^") + std::to_string(e);
        if (s.empty()) s = (c < 0 ? "-" : "") + term;
        else s += (c < 0 ? " - " : " + ") + term;
    }
    return s;
}

laurent_matrix lm_mul(const laurent_matrix& x, const laurent_matrix& y) {
    laurent_matrix r;
    r.n = x.n;
    r.a.resize(static_cast<std::size_t>(r.n) * r.n);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) {
            laurent_poly acc;
            for (int k = 0; k < r.n; ++k) acc = lp_add(acc, lp_mul(x.at(i, k), y.at(k, j)));
            r.at(i, j) = std::move(acc);
        }
    return r;
}

laurent_matrix lm_transpose(const laurent_matrix& x) {
    laurent_matrix r;
    r.n = x.n;
    r.a.resize(x.a.size());
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r.at(i, j) = x.at(j, i);
    return r;
}

laurent_matrix lm_bar(const laurent_matrix& x) {
    laurent_matrix r = x;
    for (auto& p : r.a) p = bar(p);
    return r;
}

laurent_poly lm_det(const laurent_matrix& x) {
    // cofactor expansion; the matrices here are small (<= 6x6)
    if (x.n == 0) {
        laurent_poly one;
        one.set(0, 1);
        return one;
    }
    if (x.n == 1) return x.at(0, 0);
    laurent_poly det;
    for (int j = 0; j < x.n; ++j) {
        if (x.at(0, j).is_zero()) continue;
        laurent_matrix minor;
        minor.n = x.n - 1;
        minor.a.resize(static_cast<std::size_t>(minor.n) * minor.n);
        for (int i = 1; i < x.n; ++i) {
            int jj = 0;
            for (int k = 0; k < x.n; ++k) {
                if (k == j) continue;
                minor.at(i - 1, jj++) = x.at(i, k);
            }
        }
        laurent_poly term = lp_mul(x.at(0, j), lm_det(minor));
        if (j % 2) {
            laurent_poly neg;
            neg.set(0, -1);
            term = lp_mul(term, neg);
        }
        det = lp_add(det, term);
    }
    return det;
}

bool is_bar_hermitian(const laurent_matrix& x) {
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            if (!(x.at(j, i) == bar(x.at(i, j)))) return false;
    return true;
}

laurent_matrix congruence(const laurent_matrix& q, const laurent_matrix& p) {
    if (q.n != p.n) throw non_invertible_basis_change("dimension mismatch");
    if (!lm_det(p).is_unit())
        throw non_invertible_basis_change("det P = " + lp_to_string(lm_det(p)) +
                                          " is not a unit of Z[t,1/t]");
    laurent_matrix r = lm_mul(lm_mul(lm_transpose(p), q), lm_bar(p));
    r.labels = q.labels;
    return r;
}

laurent_matrix cancel_hyperbolic_pairs(const laurent_matrix& q,
                                       const std::vector<std::pair<int, int>>& pairs) {
    std::set<int> removed;
    for (const auto& [i, j] : pairs) {
        removed.insert(i);
        removed.insert(j);
    }
    std::vector<int> kept;
    for (int i = 0; i < q.n; ++i)
        if (!removed.count(i)) kept.push_back(i);
    for (const auto& [i, j] : pairs) {
        if (i < 0 || i >= q.n || j < 0 || j >= q.n)
            throw not_dual_pair("index out of range");
        if (!q.at(i, j).is_unit())
            throw not_dual_pair("pairing (" + std::to_string(i) + "," + std::to_string(j) +
                                ") = " + lp_to_string(q.at(i, j)) + " is not a unit");
        for (int k : kept) {
            if (!q.at(i, k).is_zero() || !q.at(k, i).is_zero())
                throw not_dual_pair("surgered class " + std::to_string(i) +
                                    " pairs nontrivially with retained class " +
                                    std::to_string(k));
        }
    }
    laurent_matrix r;
    r.n = static_cast<int>(kept.size());
    r.a.resize(static_cast<std::size_t>(r.n) * r.n);
    for (int i = 0; i < r.n; ++i)
        for (int j = 0; j < r.n; ++j) r.at(i, j) = q.at(kept[i], kept[j]);
    for (int i : kept)
        if (!q.labels.empty()) r.labels.push_back(q.labels[i]);
    return r;
}

laurent_matrix lm_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    laurent_matrix m;
    const auto& rows = j.at("entries");
    m.n = static_cast<int>(rows.size());
    m.a.resize(static_cast<std::size_t>(m.n) * m.n);
    for (int i = 0; i < m.n; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<int>(row.size()) != m.n) throw input_error("matrix is not square");
        for (int k = 0; k < m.n; ++k) {
            laurent_poly p;
            for (auto it = row.at(k).begin(); it != row.at(k).end(); ++it) {
                bigint c = it.value().is_string()
                               ? bigint(it.value().get<std::string>())
                               : bigint(it.value().get<long long>());
                p.set(std::stoi(it.key()), std::move(c));
            }
            m.at(i, k) = std::move(p);
        }
    }
    if (j.contains("labels"))
        for (const auto& s : j["labels"]) m.labels.push_back(s.get<std::string>());
    return m;
}

std::string lm_to_json(const laurent_matrix& m) {
    nlohmann::json j;
    if (!m.labels.empty()) j["labels"] = m.labels;
    auto& rows = j["entries"] = nlohmann::json::array();
    for (int i = 0; i < m.n; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < m.n; ++k) {
            nlohmann::json cell = nlohmann::json::object();
            for (const auto& [e, c] : m.at(i, k).coeffs) {
                if (c >= std::numeric_limits<long long>::min() &&
                    c <= std::numeric_limits<long long>::max())
                    cell[std::to_string(e)] = c.convert_to<long long>();
                else
                    cell[std::to_string(e)] = c.str();
            }
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return j.dump();
}

} // namespace bnr
