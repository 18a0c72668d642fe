#include "r3d/block_dp.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

namespace r3d {

ExtWeight StateVector::min_over(StateSet set) const {
    ExtWeight best;
    for (std::size_t i = 0; i < kStateCount; ++i) {
        if (set.contains(state_at(i))) best = min(best, weights[i]);
    }
    return best;
}

std::optional<RootState> StateVector::argmin_over(StateSet set) const {
    std::optional<RootState> arg;
    ExtWeight best;
    for (std::size_t i = 0; i < kStateCount; ++i) {
        if (set.contains(state_at(i)) && weights[i] < best) {
            best = weights[i];
            arg = state_at(i);
        }
    }
    return arg;
}

ExtWeight StateVector::standalone_optimum() const {
    return min_over({RootState::kZero, RootState::kOne, RootState::kTwo, RootState::kThree});
}

StateVector leaf_state() {
    StateVector s;
    s[RootState::kTwo] = ExtWeight(2);
    s[RootState::kThree] = ExtWeight(3);
    s[RootState::kZeroSeesNone] = ExtWeight(0);
    s[RootState::kOneSeesNone] = ExtWeight(1);
    return s;
}

PatternShape pattern_shape(Pattern p) {
    using namespace state_sets;
    const StateSet one_or_short{RootState::kOne, RootState::kOneSeesOne};
    switch (p) {
        case Pattern::kSilentUnderZero: return {0, {}, kDominatedZero, true};
        case Pattern::kSilentUnderOne: return {0, {}, kZeroNeedsAtMostOne, true};
        case Pattern::kSilentUnderTwo: return {0, {}, kZeroNeedsAtMostTwo, true};
        case Pattern::kAnyUnderThree: return {0, {}, kAll, true};
        case Pattern::kOneUnitUnderZero: return {1, {kDominatedOne}, kZeroNeedsAtMostOne, true};
        case Pattern::kOneUnitUnderOne: return {1, {one_or_short}, kZeroNeedsAtMostTwo, true};
        case Pattern::kSomeUnitsUnderTwo: return {1, {kPositive}, kAll, true};
        case Pattern::kTwoUnitsFromOne: return {1, {kTwo}, kZeroNeedsAtMostTwo, true};
        case Pattern::kTwoUnitsFromTwo: return {2, {one_or_short, one_or_short}, kZeroNeedsAtMostTwo, true};
        case Pattern::kTwoPlusFromOne: return {1, {kTwoOrThree}, kAll, true};
        case Pattern::kTwoPlusFromTwo: return {2, {kAnyOne, kAnyOne}, kAll, true};
        case Pattern::kThreePlusFromOne: return {1, {kThree}, kAll, true};
        case Pattern::kThreePlusFromTwo: return {2, {kTwo, kPositive}, kAll, false};
        case Pattern::kThreePlusFromThree: return {3, {kAnyOne, kAnyOne, kAnyOne}, kAll, true};
    }
    throw std::logic_error("unknown pattern");
}

namespace {

// Weights split into a finite part and an infeasible flag so that one child can be
// taken out of a running sum in O(1).
struct Split {
    std::int64_t finite = 0;
    bool infeasible = false;
};

Split split(ExtWeight w) { return w.is_finite() ? Split{w.value(), false} : Split{0, true}; }

Selection evaluate_triples_by_enumeration(const std::vector<Split>& rest, const std::vector<Split>& pick,
                                          std::int64_t rest_total, std::size_t rest_infeasible) {
    Selection best;
    const std::size_t k = rest.size();
    std::int64_t best_value = 0;
    bool found = false;
    for (std::size_t a = 0; a < k; ++a) {
        if (pick[a].infeasible) continue;
        for (std::size_t b = a + 1; b < k; ++b) {
            if (pick[b].infeasible) continue;
            const std::int64_t ab = pick[a].finite + pick[b].finite - rest[a].finite - rest[b].finite;
            const std::size_t ab_inf = rest[a].infeasible + rest[b].infeasible;
            for (std::size_t c = b + 1; c < k; ++c) {
                if (pick[c].infeasible) continue;
                if (rest_infeasible != ab_inf + rest[c].infeasible) continue;
                const std::int64_t value = ab + pick[c].finite - rest[c].finite;
                if (!found || value < best_value) {
                    found = true;
                    best_value = value;
                    best.picks = {static_cast<std::int32_t>(a), static_cast<std::int32_t>(b),
                                  static_cast<std::int32_t>(c)};
                }
            }
        }
    }
    if (found) best.weight = ExtWeight(rest_total + best_value);
    return best;
}

// Picking child i instead of leaving it in the rest changes the sum by pick[i] - rest[i];
// children whose rest value is infeasible must be picked.
Selection evaluate_triples_by_smallest(const std::vector<Split>& rest, const std::vector<Split>& pick,
                                       std::int64_t rest_total) {
    Selection best;
    std::vector<std::int32_t> forced;
    std::vector<std::pair<std::int64_t, std::int32_t>> optional;
    for (std::size_t i = 0; i < rest.size(); ++i) {
        const auto idx = static_cast<std::int32_t>(i);
        if (rest[i].infeasible) {
            if (pick[i].infeasible) return best;
            forced.push_back(idx);
        } else if (!pick[i].infeasible) {
            optional.emplace_back(pick[i].finite - rest[i].finite, idx);
        }
    }
    if (forced.size() > 3 || forced.size() + optional.size() < 3) return best;
    const std::size_t needed = 3 - forced.size();
    std::partial_sort(optional.begin(), optional.begin() + static_cast<std::ptrdiff_t>(needed), optional.end());
    std::int64_t value = rest_total;
    std::vector<std::int32_t> chosen = forced;
    for (std::int32_t i : forced) value += pick[i].finite;
    for (std::size_t j = 0; j < needed; ++j) {
        value += optional[j].first;
        chosen.push_back(optional[j].second);
    }
    std::sort(chosen.begin(), chosen.end());
    best.weight = ExtWeight(value);
    best.picks = {chosen[0], chosen[1], chosen[2]};
    return best;
}

}  // namespace

Selection evaluate_pattern(Pattern p, std::span<const StateVector> children, TripleStrategy triples) {
    const PatternShape shape = pattern_shape(p);
    const std::size_t k = children.size();

    std::vector<Split> rest(k);
    std::int64_t rest_total = 0;
    std::size_t rest_infeasible = 0;
    for (std::size_t i = 0; i < k; ++i) {
        rest[i] = split(children[i].min_over(shape.rest));
        rest_total += rest[i].finite;
        rest_infeasible += rest[i].infeasible;
    }
    std::array<std::vector<Split>, 3> pick;
    for (std::size_t j = 0; j < shape.pick_count; ++j) {
        pick[j].resize(k);
        for (std::size_t i = 0; i < k; ++i) pick[j][i] = split(children[i].min_over(shape.picks[j]));
    }

    Selection best;
    auto offer = [&](std::int64_t value, std::array<std::int32_t, 3> picks) {
        const ExtWeight w(value);
        if (w < best.weight) {
            best.weight = w;
            best.picks = picks;
        }
    };

    switch (shape.pick_count) {
        case 0:
            if (rest_infeasible == 0) best.weight = ExtWeight(rest_total);
            break;
        case 1:
            for (std::size_t a = 0; a < k; ++a) {
                if (pick[0][a].infeasible || rest_infeasible != std::size_t{rest[a].infeasible}) continue;
                offer(rest_total - rest[a].finite + pick[0][a].finite, {static_cast<std::int32_t>(a), -1, -1});
            }
            break;
        case 2:
            for (std::size_t a = 0; a < k; ++a) {
                if (pick[0][a].infeasible) continue;
                for (std::size_t b = shape.symmetric ? a + 1 : 0; b < k; ++b) {
                    if (b == a || pick[1][b].infeasible) continue;
                    if (rest_infeasible != std::size_t{rest[a].infeasible} + rest[b].infeasible) continue;
                    offer(rest_total - rest[a].finite - rest[b].finite + pick[0][a].finite + pick[1][b].finite,
                          {static_cast<std::int32_t>(a), static_cast<std::int32_t>(b), -1});
                }
            }
            break;
        case 3:
            if (!shape.symmetric) throw std::logic_error("three-pick patterns are symmetric");
            best = triples == TripleStrategy::kSmallestThree
                       ? evaluate_triples_by_smallest(rest, pick[0], rest_total)
                       : evaluate_triples_by_enumeration(rest, pick[0], rest_total, rest_infeasible);
            break;
        default: throw std::logic_error("unsupported pick count");
    }
    return best;
}

Aggregates compute_aggregates(std::span<const StateVector> children, TripleStrategy triples) {
    Aggregates agg;
    for (std::size_t p = 0; p < kPatternCount; ++p) {
        agg.by_pattern[p] = evaluate_pattern(static_cast<Pattern>(p), children, triples);
    }
    return agg;
}

namespace recurrence {

namespace {

Candidate best_term(const StateVector& base, StateSet base_states, const Aggregates& agg,
                    std::initializer_list<Pattern> patterns) {
    Candidate best;
    const auto base_state = base.argmin_over(base_states);
    if (!base_state) return best;
    for (Pattern p : patterns) {
        const ExtWeight w = base[*base_state] + agg[p].weight;
        if (w < best.weight) best = {w, *base_state, p, agg[p]};
    }
    return best;
}

}  // namespace

using namespace state_sets;
using enum Pattern;

Candidate zero_silent_children(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kDominatedZero, agg, {kSilentUnderZero});
}
Candidate zero_one_unit(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kZeroNeedsAtMostOne, agg, {kOneUnitUnderZero});
}
Candidate zero_two_units(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kZeroNeedsAtMostTwo, agg, {kTwoUnitsFromOne, kTwoUnitsFromTwo});
}
Candidate zero_three_units(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kAnyZero, agg, {kThreePlusFromOne, kThreePlusFromTwo, kThreePlusFromThree});
}

Candidate one_silent_children(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kDominatedOne, agg, {kSilentUnderOne});
}
Candidate one_one_unit(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kOne, RootState::kOneSeesOne}, agg, {kOneUnitUnderOne});
}
Candidate one_two_units(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kAnyOne, agg, {kTwoPlusFromOne, kTwoPlusFromTwo});
}

Candidate two_silent_children(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kTwo, agg, {kSilentUnderTwo});
}
Candidate two_some_units(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kTwo, agg, {kSomeUnitsUnderTwo});
}
Candidate three_any_children(const StateVector& base, const Aggregates& agg) {
    return best_term(base, kThree, agg, {kAnyUnderThree});
}

Candidate zero_sees_two_silent(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kZeroSeesTwo}, agg, {kSilentUnderZero});
}
Candidate zero_sees_two_one_unit(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kZeroSeesOne}, agg, {kOneUnitUnderZero});
}
Candidate zero_sees_two_two_units(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kZeroSeesNone}, agg, {kTwoUnitsFromOne, kTwoUnitsFromTwo});
}

Candidate zero_sees_one_silent(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kZeroSeesOne}, agg, {kSilentUnderZero});
}
Candidate zero_sees_one_one_unit(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kZeroSeesNone}, agg, {kOneUnitUnderZero});
}

Candidate zero_sees_none_silent(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kZeroSeesNone}, agg, {kSilentUnderZero});
}

Candidate one_sees_one_silent(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kOneSeesOne}, agg, {kSilentUnderOne});
}
Candidate one_sees_one_one_unit(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kOneSeesNone}, agg, {kOneUnitUnderOne});
}
Candidate one_sees_none_silent(const StateVector& base, const Aggregates& agg) {
    return best_term(base, {RootState::kOneSeesNone}, agg, {kSilentUnderOne});
}

}  // namespace recurrence

Composition compose_block(const StateVector& base, std::span<const StateVector> children,
                          TripleStrategy triples) {
    if (children.empty()) throw std::invalid_argument("compose_block needs at least one child");
    const Aggregates agg = compute_aggregates(children, triples);

    using Term = Candidate (*)(const StateVector&, const Aggregates&);
    using namespace recurrence;
    struct Row {
        RootState state;
        std::initializer_list<Term> terms;
    };
    const std::array<Row, kStateCount> rows{{
        {RootState::kZero, {zero_silent_children, zero_one_unit, zero_two_units, zero_three_units}},
        {RootState::kOne, {one_silent_children, one_one_unit, one_two_units}},
        {RootState::kTwo, {two_silent_children, two_some_units}},
        {RootState::kThree, {three_any_children}},
        {RootState::kZeroSeesTwo, {zero_sees_two_silent, zero_sees_two_one_unit, zero_sees_two_two_units}},
        {RootState::kZeroSeesOne, {zero_sees_one_silent, zero_sees_one_one_unit}},
        {RootState::kZeroSeesNone, {zero_sees_none_silent}},
        {RootState::kOneSeesOne, {one_sees_one_silent, one_sees_one_one_unit}},
        {RootState::kOneSeesNone, {one_sees_none_silent}},
    }};

    Composition out;
    for (const Row& row : rows) {
        Candidate best;
        for (Term term : row.terms) {
            Candidate c = term(base, agg);
            if (c.weight < best.weight) best = c;
        }
        out.states[row.state] = best.weight;
        out.choice[index(row.state)] = best;
    }
    return out;
}

std::vector<RootState> expand_children(const Candidate& c, std::span<const StateVector> children) {
    if (c.weight.is_infeasible()) throw std::logic_error("expanding an infeasible candidate");
    const PatternShape shape = pattern_shape(c.pattern);
    std::vector<RootState> out(children.size());
    for (std::size_t i = 0; i < children.size(); ++i) {
        StateSet set = shape.rest;
        for (std::size_t j = 0; j < shape.pick_count; ++j) {
            if (c.selection.picks[j] == static_cast<std::int32_t>(i)) set = shape.picks[j];
        }
        const auto s = children[i].argmin_over(set);
        if (!s) throw std::logic_error("recorded choice selects an infeasible child state");
        out[i] = *s;
    }
    return out;
}

NotBlockGraphError::NotBlockGraphError(std::size_t block, std::vector<Vertex> members)
    : std::invalid_argument([&] {
          std::string msg = "not a block graph: block " + std::to_string(block) + " {";
          for (std::size_t i = 0; i < members.size(); ++i) {
              msg += (i ? ", " : "") + std::to_string(members[i]);
          }
          return msg + "} does not induce a clique";
      }()),
      block_(block),
      members_(std::move(members)) {}

BlockDpRun run_block_dp(const Graph& g, const DpOptions& options) {
    const BlockDecomposition dec = decompose(g);
    if (auto bad = find_non_clique_block(g, dec)) throw NotBlockGraphError(*bad, dec.blocks[*bad]);
    const CutTree tree = build_cut_tree(dec);

    BlockDpRun run;
    run.vertex_count = g.order();
    run.nodes.reserve(g.order() + dec.blocks.size());
    std::vector<std::size_t> current(g.order());
    for (Vertex v = 0; v < g.order(); ++v) {
        DpNode leaf;
        leaf.root = v;
        leaf.states = leaf_state();
        run.nodes.push_back(std::move(leaf));
        current[v] = v;
    }

    std::vector<StateVector> child_states;
    for (const EndBlockStep& step : end_block_order(tree, options.order_seed)) {
        const auto& members = dec.blocks[step.block];
        const Vertex root = step.anchor.value_or(members.front());
        if (members.size() == 1) {
            run.component_roots.push_back(current[root]);
            continue;
        }
        DpNode node;
        node.root = root;
        node.base = current[root];
        child_states.clear();
        for (Vertex v : members) {
            if (v == root) continue;
            node.children.push_back(current[v]);
            child_states.push_back(run.nodes[current[v]].states);
        }
        Composition comp = compose_block(run.nodes[current[root]].states, child_states, options.triples);
        node.states = comp.states;
        node.choice = comp.choice;
        run.nodes.push_back(std::move(node));
        current[root] = run.nodes.size() - 1;
        if (!step.anchor) run.component_roots.push_back(current[root]);
    }
    return run;
}

std::vector<Vertex> node_vertices(const BlockDpRun& run, std::size_t node) {
    std::vector<Vertex> out;
    std::vector<std::size_t> stack{node};
    while (!stack.empty()) {
        const DpNode& x = run.nodes.at(stack.back());
        stack.pop_back();
        if (!x.base) {
            out.push_back(x.root);
            continue;
        }
        stack.push_back(*x.base);
        stack.insert(stack.end(), x.children.begin(), x.children.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<StateVector> child_vectors(const BlockDpRun& run, const DpNode& node) {
    std::vector<StateVector> out;
    out.reserve(node.children.size());
    for (std::size_t c : node.children) out.push_back(run.nodes[c].states);
    return out;
}

void assign_labels(const BlockDpRun& run, std::size_t node, RootState state, std::vector<Label>& labels) {
    std::vector<std::pair<std::size_t, RootState>> stack{{node, state}};
    while (!stack.empty()) {
        auto [id, s] = stack.back();
        stack.pop_back();
        const DpNode& x = run.nodes.at(id);
        if (x.states[s].is_infeasible()) throw std::logic_error("reconstruction reached an infeasible state");
        if (!x.base) {
            labels[x.root] = root_label(s);
            continue;
        }
        const Candidate& c = x.choice[index(s)];
        stack.emplace_back(*x.base, c.base_state);
        const auto kids = child_vectors(run, x);
        const auto kid_states = expand_children(c, kids);
        for (std::size_t i = 0; i < x.children.size(); ++i) stack.emplace_back(x.children[i], kid_states[i]);
    }
}

}  // namespace

ExtWeight replay_choice(const BlockDpRun& run, std::size_t node, RootState state) {
    const DpNode& x = run.nodes.at(node);
    if (!x.base) return x.states[state];
    const Candidate& c = x.choice[index(state)];
    if (c.weight.is_infeasible()) return ExtWeight::infeasible();
    const auto kids = child_vectors(run, x);
    ExtWeight total = run.nodes[*x.base].states[c.base_state];
    const auto kid_states = expand_children(c, kids);
    for (std::size_t i = 0; i < kids.size(); ++i) total += kids[i][kid_states[i]];
    return total;
}

Labeling reconstruct_state(const BlockDpRun& run, std::size_t node, RootState state) {
    std::vector<Label> labels(run.vertex_count, 0);
    assign_labels(run, node, state, labels);
    return Labeling(std::move(labels));
}

Labeling reconstruct_labeling(const BlockDpRun& run) {
    std::vector<Label> labels(run.vertex_count, 0);
    const StateSet dominated{RootState::kZero, RootState::kOne, RootState::kTwo, RootState::kThree};
    for (std::size_t node : run.component_roots) {
        const auto best = run.nodes[node].states.argmin_over(dominated);
        if (!best) throw std::logic_error("component without a feasible dominated state");
        assign_labels(run, node, *best, labels);
    }
    return Labeling(std::move(labels));
}

BlockDpResult solve_block_graph(const Graph& g, const DpOptions& options) {
    const BlockDpRun run = run_block_dp(g, options);
    BlockDpResult result;
    for (std::size_t node : run.component_roots) {
        result.weight += run.nodes[node].states.standalone_optimum().value();
    }
    result.witness = reconstruct_labeling(run);
    if (labeling_weight(result.witness) != result.weight || !is_roman3_dominating(g, result.witness)) {
        throw std::logic_error("block DP witness disagrees with its reported weight");
    }
    return result;
}

}  // namespace r3d
