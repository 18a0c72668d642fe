#include "r3d/reductions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace r3d {

void X3CInstance::validate() const {
    if (universe_size % 3 != 0) {
        throw std::invalid_argument("universe size " + std::to_string(universe_size) + " is not a multiple of 3");
    }
    for (std::size_t j = 0; j < triples.size(); ++j) {
        const Triple& t = triples[j];
        for (std::uint32_t e : t) {
            if (e >= universe_size) {
                throw std::invalid_argument("triple " + std::to_string(j) + " references element " +
                                            std::to_string(e) + " outside the universe");
            }
        }
        if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2]) {
            throw std::invalid_argument("triple " + std::to_string(j) + " repeats an element");
        }
    }
    for (std::size_t j : planted_cover) {
        if (j >= triples.size()) throw std::invalid_argument("planted cover index out of range");
    }
}

namespace {

struct KindName {
    Role::Kind kind;
    const char* name;
    int fields;  // numeric fields after the name
};

constexpr std::array<KindName, 11> kKindNames{{
    {Role::Kind::kElement, "x", 1},
    {Role::Kind::kTriple, "c", 1},
    {Role::Kind::kCopyA, "a", 1},
    {Role::Kind::kCopyB, "b", 1},
    {Role::Kind::kGuardB, "y", 1},
    {Role::Kind::kGuardA, "z", 1},
    {Role::Kind::kCopyA, "copy", 2},
    {Role::Kind::kCopyB, "bcopy", 3},
    {Role::Kind::kConnector, "conn", 2},
    {Role::Kind::kSpine, "spine", 2},
    {Role::Kind::kLeaf, "leaf", 2},
}};

}  // namespace

std::string Role::tag() const {
    std::ostringstream os;
    const bool ds = copy != 0;
    switch (kind) {
        case Kind::kElement: os << "x:" << index; break;
        case Kind::kTriple: os << "c:" << index; break;
        case Kind::kCopyA:
            if (ds) os << "copy:" << copy << ':' << index;
            else os << "a:" << index;
            break;
        case Kind::kCopyB:
            if (ds) os << "bcopy:" << copy << ':' << group << ':' << index;
            else os << "b:" << index;
            break;
        case Kind::kGuardB: os << "y:" << index; break;
        case Kind::kGuardA: os << "z:" << index; break;
        case Kind::kConnector: os << "conn:" << copy << ':' << group; break;
        case Kind::kSpine: os << "spine:" << copy << ':' << group; break;
        case Kind::kLeaf: os << "leaf:" << copy << ':' << group; break;
    }
    if (padding) os << ":pad";
    return os.str();
}

Role Role::parse_tag(const std::string& tag) {
    std::vector<std::string> parts;
    std::stringstream ss(tag);
    for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
    Role role;
    if (!parts.empty() && parts.back() == "pad") {
        role.padding = true;
        parts.pop_back();
    }
    if (parts.empty()) throw std::invalid_argument("empty role tag");
    const auto it = std::find_if(kKindNames.begin(), kKindNames.end(),
                                 [&](const KindName& k) { return parts[0] == k.name; });
    if (it == kKindNames.end()) throw std::invalid_argument("unknown role tag '" + tag + "'");
    if (static_cast<int>(parts.size()) != it->fields + 1) {
        throw std::invalid_argument("role tag '" + tag + "' has the wrong number of fields");
    }
    std::vector<std::uint32_t> nums;
    for (std::size_t i = 1; i < parts.size(); ++i) {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(parts[i], &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != parts[i].size() || parts[i].empty()) {
            throw std::invalid_argument("role tag '" + tag + "' has a non-numeric field");
        }
        nums.push_back(static_cast<std::uint32_t>(value));
    }
    role.kind = it->kind;
    switch (it->fields) {
        case 1: role.index = nums[0]; break;
        case 2:
            role.copy = nums[0];
            if (role.kind == Kind::kCopyA) role.index = nums[1];
            else role.group = nums[1];
            break;
        case 3:
            role.copy = nums[0];
            role.group = nums[1];
            role.index = nums[2];
            break;
    }
    if (it->fields >= 2 && role.copy == 0) throw std::invalid_argument("role tag '" + tag + "' has copy 0");
    return role;
}

// ---------------------------------------------------------------------------
// Exact 3-cover to split graph

Vertex SplitReduction::element_vertex(std::size_t i) const { return static_cast<Vertex>(i); }
Vertex SplitReduction::triple_vertex(std::size_t j) const { return static_cast<Vertex>(3 * q_effective + j); }
Vertex SplitReduction::a_vertex(std::size_t i) const {
    return static_cast<Vertex>(3 * q_effective + triples_effective + i);
}
Vertex SplitReduction::b_vertex(std::size_t i) const {
    return static_cast<Vertex>(6 * q_effective + triples_effective + i);
}
Vertex SplitReduction::y_vertex(std::size_t i) const {
    return static_cast<Vertex>(9 * q_effective + triples_effective + i);
}
Vertex SplitReduction::z_vertex(std::size_t i) const {
    return static_cast<Vertex>(19 * q_effective + triples_effective + i);
}

namespace {

// The 20 three-subsets of {0..5} in lexicographic order.
std::vector<std::array<std::uint32_t, 3>> six_choose_three() {
    std::vector<std::array<std::uint32_t, 3>> out;
    for (std::uint32_t a = 0; a < 6; ++a)
        for (std::uint32_t b = a + 1; b < 6; ++b)
            for (std::uint32_t c = b + 1; c < 6; ++c) out.push_back({a, b, c});
    return out;
}

void require(bool condition, const std::string& what) {
    if (!condition) throw std::logic_error("reduction builder invariant violated: " + what);
}

}  // namespace

SplitReduction x3c_to_split(const X3CInstance& inst) {
    inst.validate();
    SplitReduction red;
    red.q_original = inst.q();
    red.triples_original = inst.triples.size();
    red.triples = inst.triples;
    std::size_t universe = inst.universe_size;
    const bool pad = red.q_original % 2 == 1;
    if (pad) {
        const auto base = static_cast<std::uint32_t>(universe);
        red.triples.push_back({base, base + 1, base + 2});
        universe += 3;
    }
    const std::size_t q = universe / 3;
    red.q_effective = q;
    red.triples_effective = red.triples.size();
    red.target = 7 * static_cast<long long>(q);

    const std::size_t t = red.triples_effective;
    const std::size_t n = 3 * q + t + 3 * q + 3 * q + 10 * q + 10 * q;
    red.roles.resize(n);
    for (std::size_t i = 0; i < 3 * q; ++i) {
        const bool dummy = i >= inst.universe_size;
        const auto idx = static_cast<std::uint32_t>(i);
        red.roles[red.element_vertex(i)] = {Role::Kind::kElement, 0, 0, idx, dummy};
        red.roles[red.a_vertex(i)] = {Role::Kind::kCopyA, 0, 0, idx, dummy};
        red.roles[red.b_vertex(i)] = {Role::Kind::kCopyB, 0, 0, idx, dummy};
    }
    for (std::size_t j = 0; j < t; ++j) {
        red.roles[red.triple_vertex(j)] = {Role::Kind::kTriple, 0, 0, static_cast<std::uint32_t>(j),
                                           j >= red.triples_original};
    }
    for (std::size_t i = 0; i < 10 * q; ++i) {
        red.roles[red.y_vertex(i)] = {Role::Kind::kGuardB, 0, 0, static_cast<std::uint32_t>(i), false};
        red.roles[red.z_vertex(i)] = {Role::Kind::kGuardA, 0, 0, static_cast<std::uint32_t>(i), false};
    }

    std::vector<Edge> edges;
    for (std::size_t j = 0; j < t; ++j) {
        for (std::uint32_t e : red.triples[j]) edges.emplace_back(red.element_vertex(e), red.triple_vertex(j));
    }
    for (std::size_t i = 0; i < 3 * q; ++i) {
        edges.emplace_back(red.element_vertex(i), red.a_vertex(i));
        edges.emplace_back(red.element_vertex(i), red.b_vertex(i));
    }
    // Six consecutive A (resp. B) vertices per group, twenty consecutive Z (resp. Y) guards,
    // one guard per three-subset of the group.
    const auto subsets = six_choose_three();
    for (std::size_t group = 0; group < q / 2; ++group) {
        for (std::size_t s = 0; s < subsets.size(); ++s) {
            for (std::uint32_t member : subsets[s]) {
                edges.emplace_back(red.z_vertex(20 * group + s), red.a_vertex(6 * group + member));
                edges.emplace_back(red.y_vertex(20 * group + s), red.b_vertex(6 * group + member));
            }
        }
    }
    std::vector<Vertex> clique;
    for (std::size_t j = 0; j < t; ++j) clique.push_back(red.triple_vertex(j));
    for (std::size_t i = 0; i < 3 * q; ++i) {
        clique.push_back(red.a_vertex(i));
        clique.push_back(red.b_vertex(i));
    }
    for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) edges.emplace_back(clique[i], clique[j]);
    }
    red.graph = Graph(n, edges);

    std::vector<std::size_t> incidence(3 * q, 0);
    for (const Triple& tr : red.triples) {
        for (std::uint32_t e : tr) ++incidence[e];
    }
    for (std::size_t i = 0; i < 10 * q; ++i) {
        require(red.graph.degree(red.z_vertex(i)) == 3, "guard degree 3");
        require(red.graph.degree(red.y_vertex(i)) == 3, "guard degree 3");
    }
    for (std::size_t i = 0; i < 3 * q; ++i) {
        require(red.graph.degree(red.element_vertex(i)) == 2 + incidence[i], "element degree");
        std::size_t guards = 0;
        for (Vertex w : red.graph.neighbors(red.a_vertex(i))) {
            guards += red.roles[w].kind == Role::Kind::kGuardA ? 1 : 0;
        }
        require(guards == 10, "ten guards per A vertex");
    }
    return red;
}

std::pair<std::vector<Vertex>, std::vector<Vertex>> split_sides(const SplitReduction& red) {
    std::vector<Vertex> clique, independent;
    for (Vertex v = 0; v < red.graph.order(); ++v) {
        switch (red.roles[v].kind) {
            case Role::Kind::kTriple:
            case Role::Kind::kCopyA:
            case Role::Kind::kCopyB: clique.push_back(v); break;
            default: independent.push_back(v);
        }
    }
    return {clique, independent};
}

bool is_split_partition(const Graph& g, const std::vector<Vertex>& clique, const std::vector<Vertex>& independent) {
    if (clique.size() + independent.size() != g.order()) return false;
    std::vector<char> side(g.order(), 0);
    for (Vertex v : clique) side.at(v) |= 1;
    for (Vertex v : independent) side.at(v) |= 2;
    if (std::any_of(side.begin(), side.end(), [](char s) { return s != 1 && s != 2; })) return false;
    for (Vertex v : clique) {
        std::size_t inside = 0;
        for (Vertex w : g.neighbors(v)) inside += side[w] == 1 ? 1 : 0;
        if (inside + 1 != clique.size()) return false;
    }
    for (Vertex v : independent) {
        for (Vertex w : g.neighbors(v)) {
            if (side[w] == 2) return false;
        }
    }
    return true;
}

namespace {

std::string describe_cover_defects(const std::vector<int>& hits, std::size_t original_universe) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t e = 0; e < hits.size(); ++e) {
        if (hits[e] == 1) continue;
        os << (first ? "" : "; ") << "element " << e << (e >= original_universe ? " (padding)" : "")
           << (hits[e] == 0 ? " uncovered" : " covered " + std::to_string(hits[e]) + " times");
        first = false;
    }
    return os.str();
}

std::vector<int> element_hits(const SplitReduction& red, const std::vector<std::size_t>& chosen) {
    std::vector<int> hits(3 * red.q_effective, 0);
    for (std::size_t j : chosen) {
        for (std::uint32_t e : red.triples[j]) ++hits[e];
    }
    return hits;
}

void require_valid_and_light(const Graph& g, const Labeling& f, long long target) {
    if (f.size() != g.order()) {
        throw WitnessError("labeling has " + std::to_string(f.size()) + " entries, reduction has " +
                           std::to_string(g.order()) + " vertices");
    }
    const VerificationReport report = verify_labeling(g, f);
    if (!report.valid) {
        throw WitnessError("labeling is not Roman {3}-dominating (first violation at vertex " +
                           std::to_string(report.violations.front().vertex) + ")");
    }
    if (labeling_weight(f) > target) {
        throw WitnessError("labeling weight " + std::to_string(labeling_weight(f)) + " exceeds target " +
                           std::to_string(target));
    }
}

}  // namespace

Labeling x3c_witness_to_labeling(const SplitReduction& red, const std::vector<std::size_t>& cover) {
    std::vector<std::size_t> chosen;
    for (std::size_t j : cover) {
        if (j >= red.triples_original) {
            throw WitnessError("cover index " + std::to_string(j) + " is not a triple of the instance");
        }
        chosen.push_back(j);
    }
    for (std::size_t j = red.triples_original; j < red.triples_effective; ++j) chosen.push_back(j);

    const auto hits = element_hits(red, chosen);
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
        throw WitnessError("not an exact cover: " + describe_cover_defects(hits, 3 * red.q_original));
    }

    Labeling f(red.graph.order(), 0);
    for (std::size_t i = 0; i < 3 * red.q_effective; ++i) {
        f.set(red.a_vertex(i), 1);
        f.set(red.b_vertex(i), 1);
    }
    for (std::size_t j : chosen) f.set(red.triple_vertex(j), 1);
    return f;
}

CoverExtraction extract_cover_from_labeling(const SplitReduction& red, const Labeling& f) {
    require_valid_and_light(red.graph, f, red.target);
    CoverExtraction out;
    for (std::size_t i = 0; i < 3 * red.q_effective; ++i) {
        for (Vertex v : {red.a_vertex(i), red.b_vertex(i)}) {
            if (f[v] != 1) {
                out.failure = "vertex " + std::to_string(v) + " (" + red.roles[v].tag() + ") is labeled " +
                              std::to_string(f[v]) + ", not 1";
                return out;
            }
        }
    }
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < red.triples_effective; ++j) {
        if (f[red.triple_vertex(j)] >= 1) chosen.push_back(j);
    }
    const auto hits = element_hits(red, chosen);
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
        out.failure = "positively labeled triples are not an exact cover: " +
                      describe_cover_defects(hits, 3 * red.q_original);
        return out;
    }
    std::vector<std::size_t> original;
    for (std::size_t j : chosen) {
        if (j < red.triples_original) original.push_back(j);
    }
    out.cover = std::move(original);
    return out;
}

// ---------------------------------------------------------------------------
// Dominating set to Roman {3}-domination

Vertex DSReduction::copy_vertex(std::size_t copy, Vertex u) const {
    return static_cast<Vertex>((copy - 1) * source_order + u);
}
Vertex DSReduction::b_copy_vertex(std::size_t copy, std::size_t group, Vertex v) const {
    return static_cast<Vertex>(3 * source_order + ((copy - 1) * k_effective + (group - 1)) * source_order + v);
}
Vertex DSReduction::connector(std::size_t copy, std::size_t group) const {
    return static_cast<Vertex>(3 * source_order + 3 * k_effective * source_order +
                               3 * ((copy - 1) * k_effective + (group - 1)));
}
Vertex DSReduction::spine(std::size_t copy, std::size_t group) const { return connector(copy, group) + 1; }
Vertex DSReduction::leaf(std::size_t copy, std::size_t group) const { return connector(copy, group) + 2; }

DSReduction ds_to_r3d(const Graph& source, std::size_t k) {
    if (k == 0) throw std::invalid_argument("k must be at least 1");
    DSReduction red;
    red.k_original = k;
    red.k_effective = (k + 2) / 3 * 3;
    red.source_original = source.order();
    red.source_order = source.order() + (red.k_effective - k);
    red.target = 12 * static_cast<long long>(red.k_effective);

    const std::size_t n = red.source_order;
    const std::size_t kk = red.k_effective;
    const std::size_t total = 3 * n + 3 * kk * n + 9 * kk;
    red.roles.resize(total);
    for (std::uint32_t i = 1; i <= 3; ++i) {
        for (Vertex u = 0; u < n; ++u) {
            red.roles[red.copy_vertex(i, u)] = {Role::Kind::kCopyA, i, 0, u, u >= red.source_original};
        }
        for (std::uint32_t j = 1; j <= kk; ++j) {
            for (Vertex v = 0; v < n; ++v) {
                red.roles[red.b_copy_vertex(i, j, v)] = {Role::Kind::kCopyB, i, j, v, v >= red.source_original};
            }
            red.roles[red.connector(i, j)] = {Role::Kind::kConnector, i, j, 0, false};
            red.roles[red.spine(i, j)] = {Role::Kind::kSpine, i, j, 0, false};
            red.roles[red.leaf(i, j)] = {Role::Kind::kLeaf, i, j, 0, false};
        }
    }

    std::vector<Edge> edges;
    const auto& source_edges = source.edges();
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t i2 = 1; i2 <= 3; ++i2) {
            for (auto [u, v] : source_edges) {
                edges.emplace_back(red.copy_vertex(i, u), red.copy_vertex(i2, v));
                edges.emplace_back(red.copy_vertex(i, v), red.copy_vertex(i2, u));
            }
            if (i < i2) {
                for (Vertex u = 0; u < n; ++u) edges.emplace_back(red.copy_vertex(i, u), red.copy_vertex(i2, u));
            }
        }
        for (std::size_t j = 1; j <= kk; ++j) {
            edges.emplace_back(red.connector(i, j), red.spine(i, j));
            for (Vertex v = 0; v < n; ++v) {
                edges.emplace_back(red.connector(i, j), red.b_copy_vertex(i, j, v));
                edges.emplace_back(red.copy_vertex(i, v), red.b_copy_vertex(i, j, v));
            }
            for (auto [u, v] : source_edges) {
                edges.emplace_back(red.copy_vertex(i, u), red.b_copy_vertex(i, j, v));
                edges.emplace_back(red.copy_vertex(i, v), red.b_copy_vertex(i, j, u));
            }
        }
        for (std::size_t g = 0; g < kk / 3; ++g) {
            for (std::size_t a = 1; a <= 3; ++a) {
                for (std::size_t b = 1; b <= 3; ++b) edges.emplace_back(red.spine(i, 3 * g + a), red.leaf(i, 3 * g + b));
            }
        }
    }
    red.graph = Graph(total, edges);

    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= kk; ++j) {
            require(red.graph.degree(red.connector(i, j)) == n + 1, "connector degree n+1");
            require(red.graph.degree(red.leaf(i, j)) == 3, "leaf degree 3");
        }
    }
    return red;
}

Labeling ds_witness_to_labeling(const DSReduction& red, const std::vector<Vertex>& dominating_set) {
    std::set<Vertex> chosen(dominating_set.begin(), dominating_set.end());
    for (Vertex u : chosen) {
        if (u >= red.source_original) {
            throw WitnessError("vertex " + std::to_string(u) + " is not a vertex of the source graph");
        }
    }
    if (chosen.size() > red.k_original) {
        throw WitnessError("dominating set has " + std::to_string(chosen.size()) + " vertices, more than k = " +
                           std::to_string(red.k_original));
    }
    for (Vertex u = static_cast<Vertex>(red.source_original); u < red.source_order; ++u) chosen.insert(u);

    // Rebuild the padded source from the first copy.
    std::vector<char> dominated(red.source_order, 0);
    for (Vertex u : chosen) {
        dominated[u] = 1;
        for (Vertex w : red.graph.neighbors(red.copy_vertex(1, u))) {
            const Role& r = red.roles[w];
            if (r.kind == Role::Kind::kCopyA && r.copy == 1) dominated[r.index] = 1;
        }
    }
    for (Vertex u = 0; u < red.source_order; ++u) {
        if (!dominated[u]) throw WitnessError("vertex " + std::to_string(u) + " is not dominated");
    }

    Labeling f(red.graph.order(), 0);
    for (Vertex u : chosen) {
        for (std::size_t i = 1; i <= 3; ++i) f.set(red.copy_vertex(i, u), 1);
    }
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= red.k_effective; ++j) {
            f.set(red.connector(i, j), 2);
            f.set(red.spine(i, j), 1);
        }
    }
    return f;
}

DominatingSetExtraction extract_ds_from_labeling(const DSReduction& red, const Labeling& f) {
    require_valid_and_light(red.graph, f, red.target);
    DominatingSetExtraction out;
    std::vector<Vertex> projected;
    for (Vertex u = 0; u < red.source_order; ++u) {
        if (f[red.copy_vertex(1, u)] >= 1) projected.push_back(u);
    }
    std::vector<char> dominated(red.source_order, 0);
    for (Vertex u : projected) {
        dominated[u] = 1;
        for (Vertex w : red.graph.neighbors(red.copy_vertex(1, u))) {
            const Role& r = red.roles[w];
            if (r.kind == Role::Kind::kCopyA && r.copy == 1) dominated[r.index] = 1;
        }
    }
    for (Vertex u = 0; u < red.source_order; ++u) {
        if (!dominated[u]) {
            out.failure = "source vertex " + std::to_string(u) +
                          " is not dominated by the positively labeled vertices of the first copy";
            return out;
        }
    }
    if (projected.size() > red.k_effective) {
        out.failure = "projected set has " + std::to_string(projected.size()) + " vertices, more than k = " +
                      std::to_string(red.k_effective);
        return out;
    }
    std::vector<Vertex> original;
    for (Vertex u : projected) {
        if (u < red.source_original) original.push_back(u);
    }
    out.set = std::move(original);
    return out;
}

}  // namespace r3d
