#pragma once

#include "r3d/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace r3d {

using Triple = std::array<std::uint32_t, 3>;

/// Exact 3-cover instance: elements 0..universe_size-1 and a list of 3-element subsets.
struct X3CInstance {
    std::size_t universe_size = 0;
    std::vector<Triple> triples;
    std::vector<std::size_t> planted_cover;  // filled by the generator, empty otherwise

    std::size_t q() const { return universe_size / 3; }
    /// Throws std::invalid_argument if the universe is not a multiple of 3 or a triple is malformed.
    void validate() const;
};

/// Gadget role of an output vertex.
///
/// For the split reduction `copy` and `group` are unused and `index` is the
/// element / triple / gadget position. For the dominating-set reduction:
/// kCopyA uses (copy, index = source vertex); kCopyB uses (copy, group, index);
/// kConnector / kSpine / kLeaf use (copy, group).
struct Role {
    enum class Kind : std::uint8_t {
        kElement,    // x
        kTriple,     // c
        kCopyA,      // a (split) or u_i (DS)
        kCopyB,      // b (split) or v_i^j (DS)
        kGuardB,     // y (split): attached to triples of B
        kGuardA,     // z (split): attached to triples of A
        kConnector,  // x_i^j (DS)
        kSpine,      // y_i^j (DS)
        kLeaf,       // z_i^j (DS)
    };
    Kind kind = Kind::kElement;
    std::uint32_t copy = 0;   // 1..3 for DS roles
    std::uint32_t group = 0;  // 1..k for DS roles
    std::uint32_t index = 0;
    bool padding = false;

    std::string tag() const;
    static Role parse_tag(const std::string& tag);
    friend bool operator==(const Role&, const Role&) = default;
};

struct SplitReduction {
    Graph graph;
    std::vector<Role> roles;
    std::size_t q_original = 0;
    std::size_t q_effective = 0;  // even
    std::size_t triples_original = 0;
    std::size_t triples_effective = 0;
    long long target = 0;  // 7 q_effective

    // Vertex id ranges, in this order: X, C, A, B, Y, Z.
    Vertex element_vertex(std::size_t i) const;
    Vertex triple_vertex(std::size_t j) const;
    Vertex a_vertex(std::size_t i) const;
    Vertex b_vertex(std::size_t i) const;
    Vertex y_vertex(std::size_t i) const;
    Vertex z_vertex(std::size_t i) const;

    std::vector<Triple> triples;  // effective (padded) collection
};

SplitReduction x3c_to_split(const X3CInstance& inst);

class WitnessError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Forward map: label 1 on A, B and the chosen triples, 0 elsewhere.
/// `cover` indexes the original triples; the padding triple is added automatically.
/// Throws WitnessError naming an uncovered or doubly covered element.
Labeling x3c_witness_to_labeling(const SplitReduction& red, const std::vector<std::size_t>& cover);

struct CoverExtraction {
    std::optional<std::vector<std::size_t>> cover;  // original triple indices, padding stripped
    std::string failure;                            // structural condition that failed, if any
};

/// Reads the cover off the triples labeled >= 1. Throws WitnessError if `f` is invalid or
/// heavier than the target.
CoverExtraction extract_cover_from_labeling(const SplitReduction& red, const Labeling& f);

bool is_split_partition(const Graph& g, const std::vector<Vertex>& clique, const std::vector<Vertex>& independent);

/// The clique side (A, B, C) and independent side (X, Y, Z) of a split reduction.
std::pair<std::vector<Vertex>, std::vector<Vertex>> split_sides(const SplitReduction& red);

struct DSReduction {
    Graph graph;
    std::vector<Role> roles;
    std::size_t source_order = 0;     // after padding
    std::size_t source_original = 0;  // before padding
    std::size_t k_original = 0;
    std::size_t k_effective = 0;      // multiple of 3
    long long target = 0;             // 12 k_effective

    Vertex copy_vertex(std::size_t copy, Vertex u) const;                      // copy in 1..3
    Vertex b_copy_vertex(std::size_t copy, std::size_t group, Vertex v) const; // group in 1..k
    Vertex connector(std::size_t copy, std::size_t group) const;
    Vertex spine(std::size_t copy, std::size_t group) const;
    Vertex leaf(std::size_t copy, std::size_t group) const;
};

/// Builds the W[2]-hardness instance. k is rounded up to a multiple of 3 by adding isolated
/// source vertices.
DSReduction ds_to_r3d(const Graph& source, std::size_t k);

/// Label 1 on all copies of S (plus padding vertices) and on every spine vertex, 2 on every
/// connector, 0 elsewhere. Throws WitnessError if S does not dominate the source or is too big.
Labeling ds_witness_to_labeling(const DSReduction& red, const std::vector<Vertex>& dominating_set);

struct DominatingSetExtraction {
    std::optional<std::vector<Vertex>> set;  // original source vertices, padding stripped
    std::string failure;
};

/// Projects {u : f(u in first copy) >= 1}. Throws WitnessError if `f` is invalid or too heavy.
DominatingSetExtraction extract_ds_from_labeling(const DSReduction& red, const Labeling& f);

}  // namespace r3d
