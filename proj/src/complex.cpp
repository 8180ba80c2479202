#include "bnr/complex.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>

namespace bnr {

void bigraded_complex::sort_entries() {
    std::sort(entries.begin(), entries.end(), [](const diff_entry& a, const diff_entry& b) {
        if (a.src != b.src) return a.src < b.src;
        return a.tgt < b.tgt;
    });
}

bool operator==(const bigraded_complex& a, const bigraded_complex& b) {
    if (!(a.gens.size() == b.gens.size())) return false;
    for (std::size_t i = 0; i < a.gens.size(); ++i)
        if (!(a.gens[i] == b.gens[i])) return false;
    auto ea = a.entries, eb = b.entries;
    auto cmp = [](const diff_entry& x, const diff_entry& y) {
        return std::tie(x.src, x.tgt, x.power) < std::tie(y.src, y.tgt, y.power);
    };
    std::sort(ea.begin(), ea.end(), cmp);
    std::sort(eb.begin(), eb.end(), cmp);
    if (ea.size() != eb.size()) return false;
    for (std::size_t i = 0; i < ea.size(); ++i)
        if (std::tie(ea[i].src, ea[i].tgt, ea[i].power) !=
            std::tie(eb[i].src, eb[i].tgt, eb[i].power))
            return false;
    return true;
}

complex_report verify_complex(const bigraded_complex& c) {
    complex_report rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        rep.violations.push_back(s);
    };
    for (const auto& e : c.entries) {
        if (e.src >= c.rank() || e.tgt >= c.rank()) {
            fail("entry out of range");
            continue;
        }
        const auto& gs = c.gens[e.src];
        const auto& gt = c.gens[e.tgt];
        if (gt.h != gs.h + 1)
            fail("entry " + std::to_string(e.src) + "->" + std::to_string(e.tgt) +
                 ": homological degree not +1");
        int dq = gt.q - gs.q;
        if (dq < 0 || dq % 2 || e.power != dq / 2)
            fail("entry " + std::to_string(e.src) + "->" + std::to_string(e.tgt) +
                 ": H-power " + std::to_string(e.power) + " vs q-drop " + std::to_string(dq));
    }
    // d^2 = 0 over F2[H]: compose presence-entries, powers add; equal (src,tgt)
    // pairs must cancel mod 2 (homogeneity forces equal powers)
    std::vector<std::vector<std::uint32_t>> out(c.rank());
    for (const auto& e : c.entries) {
        if (e.src < c.rank() && e.tgt < c.rank()) out[e.src].push_back(e.tgt);
    }
    std::map<std::pair<std::uint32_t, std::uint32_t>, int> acc;
    for (std::uint32_t s = 0; s < c.rank(); ++s)
        for (auto m : out[s])
            for (auto t : out[m]) acc[{s, t}] ^= 1;
    for (const auto& [k, v] : acc)
        if (v)
            fail("d^2 != 0 at " + std::to_string(k.first) + "->" + std::to_string(k.second));
    return rep;
}

std::string complex_to_json(const bigraded_complex& c) {
    nlohmann::json j;
    auto& gens = j["gens"] = nlohmann::json::array();
    for (const auto& g : c.gens) gens.push_back({g.h, g.q});
    auto sorted = c;
    sorted.sort_entries();
    auto& diff = j["diff"] = nlohmann::json::array();
    for (const auto& e : sorted.entries) diff.push_back({e.src, e.tgt, e.power});
    return j.dump();
}

bigraded_complex complex_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    bigraded_complex c;
    for (const auto& g : j.at("gens"))
        c.gens.push_back({g.at(0).get<std::int32_t>(), g.at(1).get<std::int32_t>()});
    for (const auto& e : j.at("diff"))
        c.entries.push_back({e.at(0).get<std::uint32_t>(), e.at(1).get<std::uint32_t>(),
                             e.at(2).get<std::int32_t>()});
    return c;
}

bigraded_complex tensor(const bigraded_complex& a, const bigraded_complex& b) {
    bigraded_complex r;
    const auto na = a.rank(), nb = b.rank();
    r.gens.reserve(na * nb);
    auto id = [&](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>(i * nb + j); };
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            r.gens.push_back({a.gens[i].h + b.gens[j].h, a.gens[i].q + b.gens[j].q});
    for (const auto& e : a.entries)
        for (std::size_t j = 0; j < nb; ++j)
            r.entries.push_back({id(e.src, j), id(e.tgt, j), e.power});
    for (const auto& e : b.entries)
        for (std::size_t i = 0; i < na; ++i)
            r.entries.push_back({id(i, e.src), id(i, e.tgt), e.power});
    return r;
}

} // namespace bnr
