#pragma once

// Finitely generated free bigraded complexes over F2[H]. The differential has
// bidegree (1,0) once H is given bidegree (0,-2), so every matrix entry from a
// generator at (h,q) to one at (h+1,q') is a monomial H^((q'-q)/2); entries
// are stored as explicit powers and validated against the gradings.

#include "bnr/ring.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace bnr {

struct gen_grading {
    std::int32_t h;
    std::int32_t q;
    friend bool operator==(const gen_grading& a, const gen_grading& b) {
        return a.h == b.h && a.q == b.q;
    }
};

struct diff_entry {
    std::uint32_t src;
    std::uint32_t tgt;
    std::int32_t power; // H^power
};

struct bigraded_complex {
    std::vector<gen_grading> gens;
    std::vector<diff_entry> entries; // char 2: presence = coefficient 1

    std::size_t rank() const { return gens.size(); }
    void sort_entries();
    friend bool operator==(const bigraded_complex& a, const bigraded_complex& b);
};

struct complex_report {
    bool ok = true;
    std::vector<std::string> violations;
};

// d.d = 0 and homogeneity: power == (q_tgt - q_src)/2 >= 0, h_tgt == h_src + 1.
complex_report verify_complex(const bigraded_complex& c);

// JSON (de)serialization: {"gens":[[h,q],...],"diff":[[src,tgt,power],...]}
std::string complex_to_json(const bigraded_complex& c);
bigraded_complex complex_from_json(const std::string& text);

// tensor product over F2[H] (char-2 Leibniz differential, gradings add)
bigraded_complex tensor(const bigraded_complex& a, const bigraded_complex& b);

} // namespace bnr
