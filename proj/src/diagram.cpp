#include "bnr/diagram.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace bnr {

// DT conventions, fixed by reproducing the published spectral-sequence tables:
// a positive entry means the even-numbered passage is the over-strand, and the
// realized embedding is used as constructed (no global reflection).
namespace {
constexpr bool kEvenOverWhenPositive = true;
constexpr bool kReflectEmbedding = false;
} // namespace

int crossing_data::sign() const {
    // s = +1 iff the rotation is (in1,in2,out1,out2) up to cycle
    int k1 = pos_of(P_IN1);
    int s = (ccw[(k1 + 1) % 4] == P_IN2) ? +1 : -1;
    return over == 1 ? s : -s;
}

int planar_diagram::n_plus() const {
    int c = 0;
    for (const auto& x : crossings) c += x.sign() > 0;
    return c;
}

int planar_diagram::n_minus() const {
    int c = 0;
    for (const auto& x : crossings) c += x.sign() < 0;
    return c;
}

int planar_diagram::next_edge(int e) const {
    edge_end h = edges[e].head;
    edge_end want{h.c, out_of(h.p)};
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (edges[i].tail == want) return static_cast<int>(i);
    throw input_error("dangling edge " + std::to_string(e));
}

int planar_diagram::num_components() const {
    std::vector<char> seen(edges.size(), 0);
    int comps = free_loops;
    for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
        if (seen[e0]) continue;
        ++comps;
        int e = static_cast<int>(e0);
        while (!seen[e]) {
            seen[e] = 1;
            e = next_edge(e);
        }
    }
    return comps;
}

void planar_diagram::validate() const {
    // every port is the endpoint of exactly one edge end
    std::vector<int> cnt(crossings.size() * 4, 0);
    for (const auto& e : edges) {
        if (e.tail.c < 0 || e.tail.c >= n() || e.head.c < 0 || e.head.c >= n())
            throw input_error("edge endpoint out of range");
        if (is_in_port(e.tail.p) || !is_in_port(e.head.p))
            throw input_error("edge orientation does not match port roles");
        ++cnt[e.tail.c * 4 + e.tail.p];
        ++cnt[e.head.c * 4 + e.head.p];
    }
    for (std::size_t i = 0; i < cnt.size(); ++i)
        if (!crossings.empty() && cnt[i] != 1)
            throw input_error("port " + std::to_string(i) + " has " + std::to_string(cnt[i]) +
                              " incident edge ends");
    for (const auto& x : crossings) {
        std::array<int, 4> have{0, 0, 0, 0};
        for (auto p : x.ccw) ++have[p];
        if (have != std::array<int, 4>{1, 1, 1, 1})
            throw input_error("rotation is not a permutation of the four ports");
        if ((x.pos_of(P_IN1) + 2) % 4 != x.pos_of(P_OUT1) ||
            (x.pos_of(P_IN2) + 2) % 4 != x.pos_of(P_OUT2))
            throw input_error("strands do not pass straight through a crossing");
        if (x.over != 1 && x.over != 2) throw input_error("over flag must be 1 or 2");
    }
    if (edges.empty() && free_loops == 0) throw input_error("empty diagram");
    if (basepoint_edge >= 0) {
        if (basepoint_edge >= static_cast<int>(edges.size()))
            throw input_error("basepoint edge out of range");
    } else if (basepoint_loop < 0 || basepoint_loop >= free_loops) {
        throw input_error("no basepoint");
    }
    // planarity: faces of the rotation system, Euler characteristic 2
    if (!crossings.empty()) {
        // dart = edge id * 2 + dir (0: tail->head)
        auto head_of = [&](int dart) -> edge_end {
            return dart & 1 ? edges[dart >> 1].tail : edges[dart >> 1].head;
        };
        std::vector<int> at_port(crossings.size() * 4, -1); // dart leaving this port
        for (std::size_t i = 0; i < edges.size(); ++i) {
            at_port[edges[i].tail.c * 4 + edges[i].tail.p] = static_cast<int>(2 * i);
            at_port[edges[i].head.c * 4 + edges[i].head.p] = static_cast<int>(2 * i + 1);
        }
        std::vector<char> seen(edges.size() * 2, 0);
        int faces = 0;
        for (std::size_t d0 = 0; d0 < seen.size(); ++d0) {
            if (seen[d0]) continue;
            ++faces;
            int d = static_cast<int>(d0);
            while (!seen[d]) {
                seen[d] = 1;
                edge_end h = head_of(d);
                const auto& x = crossings[h.c];
                int k = x.pos_of(h.p);
                d = at_port[h.c * 4 + x.ccw[(k + 1) % 4]];
            }
        }
        int v = n(), e = static_cast<int>(edges.size());
        if (v - e + faces != 2)
            throw input_error("rotation system is not planar (Euler " +
                              std::to_string(v - e + faces) + ")");
    }
}

planar_diagram unknot_diagram() {
    planar_diagram d;
    d.free_loops = 1;
    d.basepoint_edge = -1;
    d.basepoint_loop = 0;
    return d;
}

// --- DT parsing ---

dt_code parse_dt(const std::string& text) {
    dt_code code;
    std::string tok;
    auto flush = [&] {
        if (tok.empty()) return;
        std::size_t pos = 0;
        int v;
        try {
            v = std::stoi(tok, &pos);
        } catch (const std::exception&) {
            throw input_error("bad DT token '" + tok + "'");
        }
        if (pos != tok.size()) throw input_error("bad DT token '" + tok + "'");
        code.entries.push_back(v);
        tok.clear();
    };
    for (char ch : text) {
        if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
        else tok += ch;
    }
    flush();
    const int n = code.n();
    std::set<int> seen;
    for (int v : code.entries) {
        if (v == 0 || v % 2) throw odd_label("DT entry " + std::to_string(v) + " is not even and nonzero");
        if (!seen.insert(std::abs(v)).second)
            throw duplicate_label("DT label " + std::to_string(std::abs(v)) + " repeated");
    }
    for (int v : code.entries)
        if (std::abs(v) > 2 * n)
            throw input_error("DT label " + std::to_string(v) + " out of range for " +
                              std::to_string(n) + " crossings");
    return code;
}

std::string render_dt(const dt_code& code) {
    std::string s;
    for (std::size_t i = 0; i < code.entries.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(code.entries[i]);
    }
    return s;
}

// --- DT realization ---
//
// Incremental face-based insertion: walk the knot; pending crossings are marks
// on the drawn curve; a second visit anchors a crossing, which must lie on the
// boundary of the face containing the floating chain. Each anchoring picks a
// side (at most two planar choices), searched depth-first. Faces are retraced
// from scratch per query; n <= a few hundred keeps this cheap.

namespace {

// port encoding inside realization: crossing*4 + port ; START = -1
constexpr int START = -1;

std::array<std::uint8_t, 4> rot_of(int s) {
    if (s > 0) return {P_IN1, P_IN2, P_OUT1, P_OUT2};
    return {P_IN1, P_OUT2, P_OUT1, P_IN2};
}

struct rz_seg {
    int from, to;           // port codes or START
    std::vector<int> marks; // pending crossings sitting on this segment
};

struct rz_state {
    std::vector<rz_seg> segs;
    std::vector<char> alive;
    std::vector<std::array<std::uint8_t, 4>> rot; // per crossing; valid once anchored
    std::vector<char> anchored;
    std::vector<int> mark_at; // -2 unseen, -1 on chain, else segment id
    std::vector<int> chain;
    int exit = START;

    explicit rz_state(int n)
        : rot(n), anchored(n, 0), mark_at(n, -2) {}

    int add_seg(int from, int to, std::vector<int> marks) {
        int sid = static_cast<int>(segs.size());
        for (int m : marks) mark_at[m] = sid;
        segs.push_back({from, to, std::move(marks)});
        alive.push_back(1);
        return sid;
    }
};

struct face_info {
    std::map<std::pair<int, int>, int> dart_face; // (seg,dir) -> face
    std::map<int, int> corner_face;               // reserved port (or START) -> face
    int faces = 0;
};

face_info trace_faces(const rz_state& st) {
    face_info fi;
    // port -> (seg, leaves-as-dir): dir +1 means traversal from->to
    std::map<int, std::pair<int, int>> at_port;
    std::vector<std::pair<int, int>> start_darts;
    for (std::size_t s = 0; s < st.segs.size(); ++s) {
        if (!st.alive[s]) continue;
        const auto& sg = st.segs[s];
        if (sg.from != START) at_port[sg.from] = {static_cast<int>(s), +1};
        if (sg.to != START) at_port[sg.to] = {static_cast<int>(s), -1};
        if (sg.from == START) start_darts.push_back({static_cast<int>(s), +1});
        if (sg.to == START) start_darts.push_back({static_cast<int>(s), -1});
    }
    auto next_dart = [&](std::pair<int, int> d, int face) -> std::pair<int, int> {
        const auto& sg = st.segs[d.first];
        int head = d.second > 0 ? sg.to : sg.from;
        if (head == START) {
            if (start_darts.size() == 1) {
                fi.corner_face[START] = face;
                return d.second > 0 ? std::make_pair(d.first, -1) : std::make_pair(d.first, +1);
            }
            // degree 2 after closure: pass through
            for (auto x : start_darts)
                if (x.first != d.first) return x;
            return {d.first, -d.second};
        }
        int c = head / 4;
        const auto& order = st.rot[c];
        int k = 0;
        while (order[k] != head % 4) ++k;
        for (int step = 1; step <= 4; ++step) {
            int port = c * 4 + order[(k + step) % 4];
            auto it = at_port.find(port);
            if (it != at_port.end()) return it->second;
            fi.corner_face[port] = face;
        }
        throw std::logic_error("isolated vertex in face trace");
    };
    std::vector<std::pair<int, int>> darts;
    for (std::size_t s = 0; s < st.segs.size(); ++s) {
        if (!st.alive[s]) continue;
        darts.push_back({static_cast<int>(s), +1});
        darts.push_back({static_cast<int>(s), -1});
    }
    for (auto d0 : darts) {
        if (fi.dart_face.count(d0)) continue;
        int face = fi.faces++;
        auto d = d0;
        while (!fi.dart_face.count(d)) {
            fi.dart_face[d] = face;
            d = next_dart(d, face);
        }
    }
    return fi;
}

int floating_face(const rz_state& st, const face_info& fi) {
    if (st.exit == START) {
        auto it = fi.corner_face.find(START);
        if (it != fi.corner_face.end()) return it->second;
        // degree-1 start: face of its dart
        for (std::size_t s = 0; s < st.segs.size(); ++s) {
            if (!st.alive[s]) continue;
            if (st.segs[s].from == START) return fi.dart_face.at({static_cast<int>(s), +1});
            if (st.segs[s].to == START) return fi.dart_face.at({static_cast<int>(s), -1});
        }
        return 0;
    }
    return fi.corner_face.at(st.exit);
}

struct realizer {
    const std::vector<int>& pairing; // visit t -> crossing
    std::vector<char> second;
    int n;
    rz_state result{0};
    bool found = false;
    long nodes = 0, max_nodes = 4'000'000;

    explicit realizer(const std::vector<int>& p) : pairing(p) {
        n = static_cast<int>(p.size()) / 2;
        second.assign(p.size(), 0);
        std::vector<char> seen(n, 0);
        for (std::size_t t = 0; t < p.size(); ++t) {
            second[t] = seen[p[t]];
            seen[p[t]] = 1;
        }
    }

    void anchor_self(rz_state& st, int c, int s) const {
        auto it = std::find(st.chain.begin(), st.chain.end(), c);
        std::vector<int> prefix(st.chain.begin(), it);
        std::vector<int> loop(it + 1, st.chain.end());
        st.rot[c] = rot_of(s);
        st.anchored[c] = 1;
        st.mark_at[c] = -2;
        st.add_seg(st.exit, c * 4 + P_IN1, std::move(prefix));
        st.add_seg(c * 4 + P_OUT1, c * 4 + P_IN2, std::move(loop));
        st.exit = c * 4 + P_OUT2;
        st.chain.clear();
    }

    void anchor_onto(rz_state& st, int c, int s) const {
        int sid = st.mark_at[c];
        auto marks = st.segs[sid].marks;
        auto it = std::find(marks.begin(), marks.end(), c);
        std::vector<int> m1(marks.begin(), it), m2(it + 1, marks.end());
        int from = st.segs[sid].from, to = st.segs[sid].to;
        st.alive[sid] = 0;
        st.rot[c] = rot_of(s);
        st.anchored[c] = 1;
        st.mark_at[c] = -2;
        st.add_seg(from, c * 4 + P_IN1, std::move(m1));
        st.add_seg(c * 4 + P_OUT1, to, std::move(m2));
        st.add_seg(st.exit, c * 4 + P_IN2, st.chain);
        st.chain.clear();
        st.exit = c * 4 + P_OUT2;
    }

    void dfs(rz_state& st, std::size_t t) {
        if (found || ++nodes > max_nodes) return;
        if (t == pairing.size()) {
            if (!st.chain.empty()) return;
            if (st.exit == START) { // 0 crossings
                result = st;
                found = true;
                return;
            }
            auto fi = trace_faces(st);
            int f = floating_face(st, fi);
            int fa = -1, s0 = -1;
            for (std::size_t s = 0; s < st.segs.size(); ++s) {
                if (!st.alive[s]) continue;
                if (st.segs[s].from == START) {
                    fa = fi.dart_face.at({static_cast<int>(s), +1});
                    s0 = static_cast<int>(s);
                }
                if (st.segs[s].to == START) {
                    fa = fi.dart_face.at({static_cast<int>(s), -1});
                    s0 = static_cast<int>(s);
                }
            }
            if (fa != f) return;
            rz_state st2 = st;
            // dissolve the start marker: reroute the closing arc to the
            // start segment's far end
            int b0 = st2.segs[s0].from == START ? st2.segs[s0].to : st2.segs[s0].from;
            st2.alive[s0] = 0;
            st2.add_seg(st2.exit, b0, {});
            result = std::move(st2);
            found = true;
            return;
        }
        int c = pairing[t];
        if (!second[t]) {
            st.chain.push_back(c);
            st.mark_at[c] = -1;
            dfs(st, t + 1);
            st.chain.pop_back();
            st.mark_at[c] = -2;
            return;
        }
        if (st.mark_at[c] == -1) {
            bool first_anchor = std::none_of(st.anchored.begin(), st.anchored.end(),
                                             [](char a) { return a != 0; });
            for (int s : first_anchor ? std::vector<int>{+1} : std::vector<int>{+1, -1}) {
                rz_state st2 = st;
                anchor_self(st2, c, s);
                dfs(st2, t + 1);
                if (found) return;
            }
        } else {
            int sid = st.mark_at[c];
            auto fi = trace_faces(st);
            int f = floating_face(st, fi);
            // face of dart (sid,+1) is the one on the right of from->to;
            // entering from that side crosses passage 1 left-to-right: s=+1
            for (auto [dir, s] : {std::pair{+1, +1}, std::pair{-1, -1}}) {
                if (fi.dart_face.at({sid, dir}) != f) continue;
                rz_state st2 = st;
                anchor_onto(st2, c, s);
                dfs(st2, t + 1);
                if (found) return;
            }
        }
    }
};

} // namespace

planar_diagram dt_to_diagram(const dt_code& code, std::optional<int> basepoint) {
    const int n = code.n();
    // validate label set: absolute values exactly {2,4,...,2n}
    {
        std::set<int> have;
        for (int v : code.entries) have.insert(std::abs(v));
        for (int k = 1; k <= n; ++k)
            if (!have.count(2 * k))
                throw input_error("DT labels must cover {2,...," + std::to_string(2 * n) + "}");
    }
    if (n == 0) {
        planar_diagram d = unknot_diagram();
        return d;
    }
    // visit sequence: time 2i holds crossing i (odd label 2i+1), |a_i|-1 its partner
    std::vector<int> pairing(2 * n, -1);
    for (int i = 0; i < n; ++i) {
        pairing[2 * i] = i;
        int te = std::abs(code.entries[i]) - 1;
        if (pairing[te] != -1) throw non_realizable("DT label collision");
        pairing[te] = i;
    }
    for (int v : pairing)
        if (v < 0) throw non_realizable("DT pairing incomplete");

    realizer rz(pairing);
    rz_state st0(n);
    rz.dfs(st0, 0);
    if (!rz.found) throw non_realizable("DT code admits no planar embedding");
    rz_state& st = rz.result;

    planar_diagram d;
    d.crossings.resize(n);
    std::vector<int> first_time(n, -1);
    for (int t = 0; t < 2 * n; ++t)
        if (first_time[pairing[t]] < 0) first_time[pairing[t]] = t;
    for (int c = 0; c < n; ++c) {
        d.crossings[c].ccw = st.rot[c];
        if (kReflectEmbedding) std::reverse(d.crossings[c].ccw.begin(), d.crossings[c].ccw.end());
        // over/under from the sign of the entry at this crossing
        int entry = code.entries[c];
        int te = std::abs(entry) - 1;
        int even_passage = (te == first_time[c]) ? 1 : 2;
        bool even_over = (entry > 0) == kEvenOverWhenPositive;
        d.crossings[c].over = even_over ? even_passage : 3 - even_passage;
    }
    // edges in walk order: edge t from visit t's out to visit t+1's in
    d.edges.resize(2 * n);
    for (int t = 0; t < 2 * n; ++t) {
        int c0 = pairing[t];
        std::uint8_t out = (t == first_time[c0]) ? P_OUT1 : P_OUT2;
        int t1 = (t + 1) % (2 * n);
        int c1 = pairing[t1];
        std::uint8_t in = (t1 == first_time[c1]) ? P_IN1 : P_IN2;
        d.edges[t] = {{c0, out}, {c1, in}};
    }
    d.basepoint_edge = basepoint.value_or(0);
    if (d.basepoint_edge < 0 || d.basepoint_edge >= 2 * n)
        throw input_error("basepoint edge out of range");
    d.validate();
    return d;
}

dt_code diagram_to_dt(const planar_diagram& d) {
    if (d.free_loops || d.num_components() != 1)
        throw multi_component("DT codes encode one-component diagrams");
    const int n = d.n();
    dt_code code;
    if (n == 0) return code;
    // walk from the basepoint edge; record label time per (crossing, passage)
    std::vector<std::array<int, 2>> label(n, {0, 0}); // per crossing: labels of passage hit 1st/2nd
    std::vector<std::array<std::uint8_t, 2>> pass(n, {0, 0});
    std::vector<int> hits(n, 0);
    int e = d.basepoint_edge;
    for (int t = 1; t <= 2 * n; ++t) {
        edge_end h = d.edges[e].head;
        int slot = hits[h.c]++;
        label[h.c][slot] = t;
        pass[h.c][slot] = (h.p == P_IN1) ? 1 : 2;
        e = d.next_edge(e);
    }
    // DT requires odd/even pairing at each crossing; true for any classical knot walk
    std::vector<int> entry_of_odd((2 * n + 1) / 2 + 1, 0);
    for (int c = 0; c < n; ++c) {
        int l0 = label[c][0], l1 = label[c][1];
        int odd = l0 % 2 ? l0 : l1;
        int even = l0 % 2 ? l1 : l0;
        if (odd % 2 == 0) throw input_error("walk does not alternate odd/even at a crossing");
        std::uint8_t even_passage = (l0 % 2) ? pass[c][1] : pass[c][0];
        bool even_over = d.crossings[c].over == even_passage;
        int v = (even_over == kEvenOverWhenPositive) ? even : -even;
        entry_of_odd[(odd + 1) / 2] = v;
    }
    for (int i = 1; i <= n; ++i) code.entries.push_back(entry_of_odd[i]);
    return code;
}

// --- PD JSON ---

planar_diagram pd_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    planar_diagram d;
    const auto& cr = j.at("crossings");
    int n = static_cast<int>(cr.size());
    d.crossings.resize(n);
    // tuples: edges CCW from the incoming under edge; reconstruct orientation:
    // under passage enters at tuple slot 0, exits at slot 2. The over passage
    // occupies slots 1,3; its direction is pinned by requiring every edge id
    // to appear exactly once as a head and once as a tail.
    std::map<int, std::vector<std::pair<int, int>>> occur; // edge -> [(crossing, slot)]
    std::vector<std::array<int, 4>> tuple(n);
    std::vector<int> claimed_sign(n, 0);
    for (int c = 0; c < n; ++c) {
        const auto& row = cr.at(c);
        if (row.size() != 5) throw input_error("crossing tuple must be [e1,e2,e3,e4,sign]");
        for (int k = 0; k < 4; ++k) {
            tuple[c][k] = row.at(k).get<int>();
            occur[tuple[c][k]].push_back({c, k});
        }
        std::string sg = row.at(4).get<std::string>();
        claimed_sign[c] = sg == "+" ? +1 : -1;
    }
    for (const auto& [e, occ] : occur)
        if (occ.size() != 2)
            throw input_error("edge " + std::to_string(e) + " appears " +
                              std::to_string(occ.size()) + " times (want 2)");
    // orientation: propagate along passages. state per (c,slot): in/out unknown.
    // under: slot0 = in, slot2 = out. over: slot1/slot3 one in one out.
    // 2-coloring: for each crossing, choose over_in in {1,3}; constraint: each
    // edge has one in-end and one out-end.
    std::vector<int> over_in(n, 0);
    std::map<std::pair<int, int>, int> io; // (c,slot) -> +1 in / -1 out
    for (int c = 0; c < n; ++c) {
        io[{c, 0}] = +1;
        io[{c, 2}] = -1;
    }
    // propagate via union constraints
    bool progress = true;
    auto other_end = [&](int c, int k) {
        const auto& occ = occur[tuple[c][k]];
        return occ[0] == std::make_pair(c, k) ? occ[1] : occ[0];
    };
    while (progress) {
        progress = false;
        for (int c = 0; c < n; ++c)
            for (int k : {0, 1, 2, 3}) {
                auto it = io.find({c, k});
                if (it == io.end()) continue;
                auto [c2, k2] = other_end(c, k);
                auto want = -it->second;
                auto jt = io.find({c2, k2});
                if (jt == io.end()) {
                    io[{c2, k2}] = want;
                    // at c2: slots 1,3 belong to the over passage: fix its partner
                    if (k2 == 1 || k2 == 3) {
                        io[{c2, k2 == 1 ? 3 : 1}] = -want;
                    }
                    progress = true;
                } else if (jt->second != want) {
                    throw input_error("edge orientations inconsistent around edge " +
                                      std::to_string(tuple[c][k]));
                }
            }
        // seed any untouched over passage deterministically
        if (!progress) {
            for (int c = 0; c < n && !progress; ++c)
                if (!io.count({c, 1})) {
                    io[{c, 1}] = +1;
                    io[{c, 3}] = -1;
                    progress = true;
                }
        }
        if (static_cast<int>(io.size()) == 4 * n) break;
    }
    // build crossings: under passage = passage 1 iff the under-in edge id is
    // the first time we meet the passage... passage numbering is a walk
    // artifact; PD input has no walk, so set passage 1 = under, 2 = over.
    for (int c = 0; c < n; ++c) {
        auto& x = d.crossings[c];
        x.over = 2;
        std::array<std::uint8_t, 4> ports{};
        ports[0] = P_IN1;  // under in
        ports[2] = P_OUT1; // under out
        if (io.at({c, 1}) > 0) {
            ports[1] = P_IN2;
            ports[3] = P_OUT2;
        } else {
            ports[1] = P_OUT2;
            ports[3] = P_IN2;
        }
        x.ccw = ports;
    }
    // edges with ids = pd edge labels, oriented tail(out) -> head(in)
    std::map<int, edge_data> emap;
    for (int c = 0; c < n; ++c)
        for (int k = 0; k < 4; ++k) {
            std::uint8_t port = d.crossings[c].ccw[k];
            int e = tuple[c][k];
            if (io.at({c, k}) > 0) emap[e].head = {c, port};
            else emap[e].tail = {c, port};
        }
    // re-index edges densely but remember external ids for the basepoint
    std::map<int, int> eid;
    for (const auto& [e, ed] : emap) {
        eid[e] = static_cast<int>(d.edges.size());
        d.edges.push_back(ed);
    }
    int bp = j.value("basepoint", emap.empty() ? 0 : emap.begin()->first);
    if (!eid.count(bp)) throw input_error("basepoint edge id not present");
    d.basepoint_edge = eid[bp];
    // validate claimed signs
    for (int c = 0; c < n; ++c)
        if (d.crossings[c].sign() != claimed_sign[c])
            throw input_error("crossing " + std::to_string(c) +
                              " sign mark disagrees with the embedding");
    d.validate();
    return d;
}

std::string pd_to_json(const planar_diagram& d) {
    nlohmann::json j;
    auto& cr = j["crossings"] = nlohmann::json::array();
    // edge at each (c,port)
    std::map<std::pair<int, int>, int> edge_at;
    for (std::size_t e = 0; e < d.edges.size(); ++e) {
        edge_at[{d.edges[e].tail.c, d.edges[e].tail.p}] = static_cast<int>(e);
        edge_at[{d.edges[e].head.c, d.edges[e].head.p}] = static_cast<int>(e);
    }
    for (int c = 0; c < d.n(); ++c) {
        const auto& x = d.crossings[c];
        std::uint8_t under_in = x.over == 1 ? P_IN2 : P_IN1;
        int k0 = x.pos_of(under_in);
        nlohmann::json row = nlohmann::json::array();
        for (int s = 0; s < 4; ++s) row.push_back(edge_at.at({c, x.ccw[(k0 + s) % 4]}));
        row.push_back(x.sign() > 0 ? "+" : "-");
        cr.push_back(row);
    }
    j["basepoint"] = d.basepoint_edge;
    if (d.free_loops) j["free_loops"] = d.free_loops;
    return j.dump();
}

// --- transforms ---

planar_diagram mirror(const planar_diagram& d) {
    planar_diagram m = d;
    for (auto& x : m.crossings) x.over = 3 - x.over;
    return m;
}

planar_diagram connected_sum(const planar_diagram& d1, const planar_diagram& d2) {
    if (d1.num_components() != 1 || d2.num_components() != 1)
        throw multi_component("connected sum requires knots");
    if (d1.free_loops || d2.free_loops)
        throw multi_component("connected sum requires crossing diagrams on both sides");
    // cut the highest-id non-basepoint edge on each side and splice
    auto pick = [](const planar_diagram& d) {
        for (int e = static_cast<int>(d.edges.size()) - 1; e >= 0; --e)
            if (e != d.basepoint_edge) return e;
        throw input_error("no spliceable edge");
    };
    int e1 = pick(d1), e2 = pick(d2);
    planar_diagram r = d1;
    int off = d1.n();
    for (const auto& x : d2.crossings) r.crossings.push_back(x);
    int ebase = static_cast<int>(r.edges.size());
    for (const auto& e : d2.edges) {
        edge_data ne = e;
        ne.tail.c += off;
        ne.head.c += off;
        r.edges.push_back(ne);
    }
    // splice: e1: a->b, e2': c->d  ==>  a->d and c->b
    edge_data& E1 = r.edges[e1];
    edge_data& E2 = r.edges[ebase + e2];
    std::swap(E1.head, E2.head);
    r.basepoint_edge = d1.basepoint_edge;
    r.validate();
    return r;
}

} // namespace bnr
