#pragma once

#include "r3d/block_structure.hpp"
#include "r3d/ext_weight.hpp"
#include "r3d/graph.hpp"

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace r3d {

// Rooted partial solutions.
//
// A partial graph H is rooted at u; every vertex of H other than u has its
// whole neighbourhood inside H. A labeling of H belongs to exactly one state:
// the root's label together with the label sum of N_H(u), capped where the
// root's demand is met. Non-root vertices must satisfy the domination
// condition inside H (counting the root's label).
//
//   kZero..kThree   root labeled 0..3 and already dominated inside H
//   kZeroSeesTwo    root 0, neighbour sum exactly 2 (one more unit needed)
//   kZeroSeesOne    root 0, neighbour sum exactly 1
//   kZeroSeesNone   root 0, every neighbour labeled 0
//   kOneSeesOne     root 1, neighbour sum exactly 1
//   kOneSeesNone    root 1, every neighbour labeled 0
enum class RootState : std::uint8_t {
    kZero = 0,
    kOne = 1,
    kTwo = 2,
    kThree = 3,
    kZeroSeesTwo = 4,
    kZeroSeesOne = 5,
    kZeroSeesNone = 6,
    kOneSeesOne = 7,
    kOneSeesNone = 8,
};

inline constexpr std::size_t kStateCount = 9;

constexpr std::size_t index(RootState s) { return static_cast<std::size_t>(s); }
constexpr RootState state_at(std::size_t i) { return static_cast<RootState>(i); }

/// Label the root carries in a state.
constexpr Label root_label(RootState s) {
    constexpr std::array<Label, kStateCount> labels{0, 1, 2, 3, 0, 0, 0, 1, 1};
    return labels[index(s)];
}

/// Units the root still needs from outside H.
constexpr int missing_units(RootState s) {
    constexpr std::array<int, kStateCount> missing{0, 0, 0, 0, 1, 2, 3, 1, 2};
    return missing[index(s)];
}

/// Smallest total label sum of a block clique under which a child in state s ends up dominated:
/// its own label plus what it still misses (the clique sum includes the child itself).
constexpr int clique_sum_needed(RootState s) { return root_label(s) + missing_units(s); }

/// State reached by a root with the given label and neighbour sum inside H.
constexpr RootState classify_root(Label label, int neighbor_sum) {
    switch (label) {
        case 0:
            if (neighbor_sum >= 3) return RootState::kZero;
            if (neighbor_sum == 2) return RootState::kZeroSeesTwo;
            if (neighbor_sum == 1) return RootState::kZeroSeesOne;
            return RootState::kZeroSeesNone;
        case 1:
            if (neighbor_sum >= 2) return RootState::kOne;
            if (neighbor_sum == 1) return RootState::kOneSeesOne;
            return RootState::kOneSeesNone;
        case 2: return RootState::kTwo;
        default: return RootState::kThree;
    }
}

/// Bit set over the nine states.
class StateSet {
public:
    constexpr StateSet() = default;
    constexpr StateSet(std::initializer_list<RootState> states) {
        for (RootState s : states) bits_ |= static_cast<std::uint16_t>(1u << index(s));
    }
    static constexpr StateSet all() { return StateSet(0x1FF); }

    constexpr bool contains(RootState s) const { return (bits_ >> index(s)) & 1u; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr bool operator==(const StateSet&) const = default;

private:
    constexpr explicit StateSet(std::uint16_t bits) : bits_(bits) {}
    std::uint16_t bits_ = 0;
};

/// Minimum weight per state for one rooted partial graph.
struct StateVector {
    std::array<ExtWeight, kStateCount> weights{};

    ExtWeight& operator[](RootState s) { return weights[index(s)]; }
    ExtWeight operator[](RootState s) const { return weights[index(s)]; }

    /// Minimum over `set`, with the first state attaining it (empty if all infeasible).
    ExtWeight min_over(StateSet set) const;
    std::optional<RootState> argmin_over(StateSet set) const;

    /// Optimum of H taken as a standalone graph: best of the four dominated states.
    ExtWeight standalone_optimum() const;

    friend bool operator==(const StateVector&, const StateVector&) = default;
};

/// Single vertex: labels 2 and 3 are complete, 0 and 1 leave the root with no neighbours.
StateVector leaf_state();

namespace state_sets {
inline constexpr StateSet kDominatedZero{RootState::kZero};
inline constexpr StateSet kZeroNeedsAtMostOne{RootState::kZero, RootState::kZeroSeesTwo};
inline constexpr StateSet kZeroNeedsAtMostTwo{RootState::kZero, RootState::kZeroSeesTwo, RootState::kZeroSeesOne};
inline constexpr StateSet kAnyZero{RootState::kZero, RootState::kZeroSeesTwo, RootState::kZeroSeesOne,
                                   RootState::kZeroSeesNone};
inline constexpr StateSet kDominatedOne{RootState::kOne};
inline constexpr StateSet kOneNeedsAtMostOne{RootState::kOne, RootState::kOneSeesOne};
inline constexpr StateSet kAnyOne{RootState::kOne, RootState::kOneSeesOne, RootState::kOneSeesNone};
inline constexpr StateSet kTwo{RootState::kTwo};
inline constexpr StateSet kThree{RootState::kThree};
inline constexpr StateSet kTwoOrThree{RootState::kTwo, RootState::kThree};
inline constexpr StateSet kPositive{RootState::kOne, RootState::kTwo, RootState::kThree, RootState::kOneSeesOne,
                                    RootState::kOneSeesNone};
inline constexpr StateSet kAll = StateSet::all();
}  // namespace state_sets

/// How the non-root members of a block (the children) are labeled in one recurrence term.
///
/// Uniform patterns put every child in its cheapest state of one set. The other
/// patterns single out one to three children ("picks") and put the rest in the
/// cheapest state of the rest set.
enum class Pattern : std::uint8_t {
    kSilentUnderZero,     // all children dominated zeros
    kSilentUnderOne,      // all zeros, each may lack one unit (supplied by a 1-root)
    kSilentUnderTwo,      // all zeros, each may lack up to two units
    kAnyUnderThree,       // anything
    kOneUnitUnderZero,    // exactly one unit: a dominated 1-child, zeros lacking <= 1
    kOneUnitUnderOne,     // exactly one unit under a 1-root
    kSomeUnitsUnderTwo,   // at least one unit under a 2-root
    kTwoUnitsFromOne,     // exactly two units from one 2-child
    kTwoUnitsFromTwo,     // exactly two units from two 1-children
    kTwoPlusFromOne,      // at least two units, one child labeled 2 or 3
    kTwoPlusFromTwo,      // at least two units, two 1-children
    kThreePlusFromOne,    // one child labeled 3
    kThreePlusFromTwo,    // a 2-child and another positive child
    kThreePlusFromThree,  // three 1-children
};

inline constexpr std::size_t kPatternCount = 14;

struct PatternShape {
    std::size_t pick_count;
    std::array<StateSet, 3> picks;
    StateSet rest;
    bool symmetric;  // picks are interchangeable (unordered enumeration)
};

PatternShape pattern_shape(Pattern p);

/// Best child assignment for one pattern: its weight and the picked child positions.
struct Selection {
    ExtWeight weight;
    std::array<std::int32_t, 3> picks{-1, -1, -1};
};

enum class TripleStrategy { kEnumerate, kSmallestThree };

/// Every child-side minimum a block composition needs.
struct Aggregates {
    std::array<Selection, kPatternCount> by_pattern;

    const Selection& operator[](Pattern p) const { return by_pattern[static_cast<std::size_t>(p)]; }
    Selection& operator[](Pattern p) { return by_pattern[static_cast<std::size_t>(p)]; }
};

Aggregates compute_aggregates(std::span<const StateVector> children,
                              TripleStrategy triples = TripleStrategy::kEnumerate);

/// Evaluates one pattern directly; used by compute_aggregates and by tests.
Selection evaluate_pattern(Pattern p, std::span<const StateVector> children,
                           TripleStrategy triples = TripleStrategy::kEnumerate);

/// One recurrence term: the root side's state in H1 plus a children pattern.
struct Candidate {
    ExtWeight weight;
    RootState base_state = RootState::kZero;
    Pattern pattern = Pattern::kSilentUnderZero;
    Selection selection;
};

/// The recurrence terms, one function per case. Each returns the best term of its
/// case (infeasible weight when the case admits no labeling).
namespace recurrence {
// root 0, dominated
Candidate zero_silent_children(const StateVector& base, const Aggregates& agg);
Candidate zero_one_unit(const StateVector& base, const Aggregates& agg);
Candidate zero_two_units(const StateVector& base, const Aggregates& agg);
Candidate zero_three_units(const StateVector& base, const Aggregates& agg);
// root 1, dominated
Candidate one_silent_children(const StateVector& base, const Aggregates& agg);
Candidate one_one_unit(const StateVector& base, const Aggregates& agg);
Candidate one_two_units(const StateVector& base, const Aggregates& agg);
// root 2 and 3
Candidate two_silent_children(const StateVector& base, const Aggregates& agg);
Candidate two_some_units(const StateVector& base, const Aggregates& agg);
Candidate three_any_children(const StateVector& base, const Aggregates& agg);
// root 0 with neighbour sum exactly 2
Candidate zero_sees_two_silent(const StateVector& base, const Aggregates& agg);
Candidate zero_sees_two_one_unit(const StateVector& base, const Aggregates& agg);
Candidate zero_sees_two_two_units(const StateVector& base, const Aggregates& agg);
// root 0 with neighbour sum exactly 1
Candidate zero_sees_one_silent(const StateVector& base, const Aggregates& agg);
Candidate zero_sees_one_one_unit(const StateVector& base, const Aggregates& agg);
// root 0 with silent neighbourhood
Candidate zero_sees_none_silent(const StateVector& base, const Aggregates& agg);
// root 1 with neighbour sum exactly 1, or 0
Candidate one_sees_one_silent(const StateVector& base, const Aggregates& agg);
Candidate one_sees_one_one_unit(const StateVector& base, const Aggregates& agg);
Candidate one_sees_none_silent(const StateVector& base, const Aggregates& agg);
}  // namespace recurrence

struct Composition {
    StateVector states;
    std::array<Candidate, kStateCount> choice;  // winning term per state
};

/// Joins a rooted graph (`base`, whose root becomes the root of the result) with
/// one or more rooted children by making all roots a clique.
Composition compose_block(const StateVector& base, std::span<const StateVector> children,
                          TripleStrategy triples = TripleStrategy::kEnumerate);

/// Child state for every child under the winning term (picked children take their
/// pick-set minimum, the rest their rest-set minimum).
std::vector<RootState> expand_children(const Candidate& c, std::span<const StateVector> children);

class NotBlockGraphError : public std::invalid_argument {
public:
    NotBlockGraphError(std::size_t block, std::vector<Vertex> members);
    std::size_t block() const { return block_; }
    const std::vector<Vertex>& members() const { return members_; }

private:
    std::size_t block_;
    std::vector<Vertex> members_;
};

/// Node of a DP run: either a single vertex or a block composition rooted at `root`.
struct DpNode {
    Vertex root = 0;
    std::optional<std::size_t> base;     // node holding the root's earlier partial graph
    std::vector<std::size_t> children;   // nodes of the other block members
    StateVector states;
    std::array<Candidate, kStateCount> choice;
};

struct DpOptions {
    TripleStrategy triples = TripleStrategy::kEnumerate;
    std::optional<std::uint64_t> order_seed;  // shuffles end-block tie breaking
};

struct BlockDpRun {
    std::size_t vertex_count = 0;
    std::vector<DpNode> nodes;
    std::vector<std::size_t> component_roots;  // final node of each connected component
};

/// Runs the block-graph DP. Throws NotBlockGraphError if some block is not a clique.
BlockDpRun run_block_dp(const Graph& g, const DpOptions& options = {});

/// Vertices of the rooted partial graph a node stands for, sorted.
std::vector<Vertex> node_vertices(const BlockDpRun& run, std::size_t node);

/// Recomputes the weight of `state` at `node` from its recorded choice.
ExtWeight replay_choice(const BlockDpRun& run, std::size_t node, RootState state);

/// Follows the recorded choices from the best standalone state of each component.
Labeling reconstruct_labeling(const BlockDpRun& run);

/// Labeling of one node's partial graph realizing `state` (indexed by global vertex id;
/// vertices outside the node are left at 0).
Labeling reconstruct_state(const BlockDpRun& run, std::size_t node, RootState state);

struct BlockDpResult {
    long long weight = 0;
    Labeling witness;
};

BlockDpResult solve_block_graph(const Graph& g, const DpOptions& options = {});

}  // namespace r3d
