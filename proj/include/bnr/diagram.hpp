#pragma once

// Knot/link diagram model and codecs (DT, PD), mirroring and connected sum.
//
// A crossing carries two strand passages: passage 1 is the one traversed
// first when the diagram came from a walk; each passage has an in and an out
// port. The planar embedding is the CCW rotation of the four ports. Edges are
// oriented curve segments between ports; edge ids are stable handles used by
// the CLI and by movie files.

#include "bnr/errors.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bnr {

enum : std::uint8_t { P_IN1 = 0, P_OUT1 = 1, P_IN2 = 2, P_OUT2 = 3 };

inline bool is_in_port(std::uint8_t p) { return p == P_IN1 || p == P_IN2; }
inline std::uint8_t out_of(std::uint8_t in) { return in == P_IN1 ? P_OUT1 : P_OUT2; }
inline std::uint8_t in_of(std::uint8_t out) { return out == P_OUT1 ? P_IN1 : P_IN2; }

struct crossing_data {
    std::array<std::uint8_t, 4> ccw; // rotation: ccw[k] = port at CCW position k
    int over;                        // 1 or 2: which passage crosses on top

    int pos_of(std::uint8_t port) const {
        for (int k = 0; k < 4; ++k)
            if (ccw[k] == port) return k;
        return -1;
    }
    // +1 or -1 from rotation + over/under (orientation of (d_over, d_under))
    int sign() const;
};

struct edge_end {
    std::int32_t c;
    std::uint8_t p;
    friend bool operator==(const edge_end& a, const edge_end& b) {
        return a.c == b.c && a.p == b.p;
    }
};

struct edge_data {
    edge_end tail; // an out-port
    edge_end head; // an in-port
};

struct planar_diagram {
    std::vector<crossing_data> crossings;
    std::vector<edge_data> edges;
    int free_loops = 0;       // crossingless unknot components
    int basepoint_edge = 0;   // -1 when the basepoint sits on a free loop
    int basepoint_loop = -1;

    int n() const { return static_cast<int>(crossings.size()); }
    int n_plus() const;
    int n_minus() const;
    int writhe() const { return n_plus() - n_minus(); }
    int num_components() const;

    // next edge along the knot after crossing through `head` of edge e
    int next_edge(int e) const;

    void validate() const; // invariants incl. planarity; throws input_error
};

planar_diagram unknot_diagram();

// --- DT codec ---

struct dt_code {
    std::vector<int> entries;
    int n() const { return static_cast<int>(entries.size()); }
};

// whitespace- and/or comma-separated signed even integers (multi-row allowed)
dt_code parse_dt(const std::string& text);
std::string render_dt(const dt_code& code);

// Planar realization (face-based insertion with backtracking). Deterministic;
// throws non_realizable when no planar embedding exists. basepoint: edge id,
// default edge 0 (the edge leaving the first visit of the first crossing).
planar_diagram dt_to_diagram(const dt_code& code, std::optional<int> basepoint = std::nullopt);

// DT code of a knot diagram (one component, no free loops), walk starting at
// the tail of the basepoint edge
dt_code diagram_to_dt(const planar_diagram& d);

// --- PD codec (JSON) ---
// {"crossings":[[e1,e2,e3,e4,"+"],...],"basepoint":e}
// each tuple lists edge ids CCW starting at the incoming under-strand edge
planar_diagram pd_from_json(const std::string& text);
std::string pd_to_json(const planar_diagram& d);

// --- transforms ---

// over/under swapped at every crossing (rotation kept): the mirror diagram
planar_diagram mirror(const planar_diagram& d);

// connected sum of knots; basepoint inherited from d1; throws multi_component
planar_diagram connected_sum(const planar_diagram& d1, const planar_diagram& d2);

} // namespace bnr
