#include "r3d/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace r3d {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    for (std::string tok; ss >> tok;) out.push_back(tok);
    return out;
}

std::uint64_t parse_uint(const std::string& tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    const char* end = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(tok.data(), end, value);
    if (ec != std::errc{} || ptr != end) {
        throw ParseError(line, std::string("expected ") + what + ", got '" + tok + "'");
    }
    return value;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        ++number_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return true;
    }
    std::size_t number() const { return number_; }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

bool is_blank(const std::string& line) {
    return std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); });
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return in;
}

}  // namespace

GraphFile parse_graph_file(std::istream& in) {
    LineReader reader(in);
    std::string line;
    std::vector<std::string> header;
    while (header.empty()) {
        if (!reader.next(line)) throw ParseError(reader.number() + 1, "missing header 'n m'");
        if (!is_blank(line) && line[0] != '#') header = split_ws(line);
    }
    if (header.size() != 2) throw ParseError(reader.number(), "header must be 'n m'");
    const std::size_t n = parse_uint(header[0], reader.number(), "vertex count");
    const std::size_t m = parse_uint(header[1], reader.number(), "edge count");

    std::vector<Edge> edges;
    GraphFile file;
    std::vector<char> has_role(n, 0);
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const auto tok = split_ws(line);
        if (line[0] == '#') {
            if (tok.size() >= 2 && tok[0] == "#" && tok[1] == "role") {
                if (tok.size() != 4) throw ParseError(reader.number(), "role line must be '# role <vertex> <tag>'");
                const std::size_t v = parse_uint(tok[2], reader.number(), "vertex id");
                if (v >= n) throw ParseError(reader.number(), "role vertex " + tok[2] + " out of range");
                if (has_role[v]) throw ParseError(reader.number(), "duplicate role for vertex " + tok[2]);
                has_role[v] = 1;
                file.roles.emplace_back(static_cast<Vertex>(v), tok[3]);
            }
            continue;
        }
        if (!file.roles.empty()) throw ParseError(reader.number(), "edge line after role section");
        if (tok.size() != 2) throw ParseError(reader.number(), "edge line must be 'u v'");
        const std::size_t u = parse_uint(tok[0], reader.number(), "vertex id");
        const std::size_t v = parse_uint(tok[1], reader.number(), "vertex id");
        if (u >= n || v >= n) throw ParseError(reader.number(), "edge endpoint out of range");
        if (u == v) throw ParseError(reader.number(), "self-loop at vertex " + tok[0]);
        edges.emplace_back(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v)));
        if (edges.size() > m) throw ParseError(reader.number(), "more than " + std::to_string(m) + " edges");
    }
    if (edges.size() != m) {
        throw ParseError(reader.number(), "expected " + std::to_string(m) + " edges, found " +
                                              std::to_string(edges.size()));
    }
    file.graph = Graph(n, edges);
    if (file.graph.size() != m) throw ParseError(reader.number(), "duplicate edges");
    std::sort(file.roles.begin(), file.roles.end());
    return file;
}

GraphFile read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return parse_graph_file(in);
}

void write_graph_file(std::ostream& out, const GraphFile& file) {
    out << file.graph.order() << ' ' << file.graph.size() << '\n';
    for (auto [u, v] : file.graph.edges()) out << u << ' ' << v << '\n';
    for (const auto& [v, tag] : file.roles) out << "# role " << v << ' ' << tag << '\n';
}

std::string format_graph_file(const GraphFile& file) {
    std::ostringstream os;
    write_graph_file(os, file);
    return os.str();
}

std::vector<std::pair<Vertex, std::string>> role_section(const std::vector<Role>& roles) {
    std::vector<std::pair<Vertex, std::string>> out;
    out.reserve(roles.size());
    for (std::size_t v = 0; v < roles.size(); ++v) out.emplace_back(static_cast<Vertex>(v), roles[v].tag());
    return out;
}

Labeling parse_labeling_file(std::istream& in) {
    LineReader reader(in);
    std::string line;
    std::vector<Label> labels;
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const auto tok = split_ws(line);
        if (tok.size() != 1) throw ParseError(reader.number(), "expected one label per line");
        const auto x = parse_uint(tok[0], reader.number(), "label");
        if (x > kMaxLabel) throw ParseError(reader.number(), "label " + tok[0] + " outside 0..3");
        labels.push_back(static_cast<Label>(x));
    }
    return Labeling(std::move(labels));
}

Labeling read_labeling_file(const std::string& path) {
    auto in = open_input(path);
    return parse_labeling_file(in);
}

void write_labeling_file(std::ostream& out, const Labeling& f) {
    for (Label x : f.values()) out << static_cast<int>(x) << '\n';
}

X3CInstance parse_x3c_file(std::istream& in) {
    LineReader reader(in);
    std::string line;
    std::vector<std::string> header;
    while (header.empty()) {
        if (!reader.next(line)) throw ParseError(reader.number() + 1, "missing header 'x3c <universe> <t>'");
        if (!is_blank(line) && line[0] != '#') header = split_ws(line);
    }
    if (header.size() != 3 || header[0] != "x3c") throw ParseError(reader.number(), "header must be 'x3c <universe> <t>'");
    X3CInstance inst;
    inst.universe_size = parse_uint(header[1], reader.number(), "universe size");
    if (inst.universe_size % 3 != 0) throw ParseError(reader.number(), "universe size is not a multiple of 3");
    const std::size_t t = parse_uint(header[2], reader.number(), "triple count");
    while (reader.next(line)) {
        if (is_blank(line)) continue;
        const auto tok = split_ws(line);
        if (line[0] == '#') {
            if (tok.size() >= 2 && tok[0] == "#" && tok[1] == "planted") {
                for (std::size_t i = 2; i < tok.size(); ++i) {
                    const auto j = parse_uint(tok[i], reader.number(), "triple index");
                    if (j >= t) throw ParseError(reader.number(), "planted index " + tok[i] + " out of range");
                    inst.planted_cover.push_back(j);
                }
            }
            continue;
        }
        if (tok.size() != 3) throw ParseError(reader.number(), "triple line must be 'a b c'");
        Triple tr{};
        for (std::size_t i = 0; i < 3; ++i) {
            const auto e = parse_uint(tok[i], reader.number(), "element");
            if (e >= inst.universe_size) throw ParseError(reader.number(), "element " + tok[i] + " out of range");
            tr[i] = static_cast<std::uint32_t>(e);
        }
        if (tr[0] == tr[1] || tr[0] == tr[2] || tr[1] == tr[2]) {
            throw ParseError(reader.number(), "triple repeats an element");
        }
        inst.triples.push_back(tr);
        if (inst.triples.size() > t) throw ParseError(reader.number(), "more than " + std::to_string(t) + " triples");
    }
    if (inst.triples.size() != t) {
        throw ParseError(reader.number(), "expected " + std::to_string(t) + " triples, found " +
                                              std::to_string(inst.triples.size()));
    }
    return inst;
}

X3CInstance read_x3c_file(const std::string& path) {
    auto in = open_input(path);
    return parse_x3c_file(in);
}

void write_x3c_file(std::ostream& out, const X3CInstance& inst) {
    out << "x3c " << inst.universe_size << ' ' << inst.triples.size() << '\n';
    for (const Triple& tr : inst.triples) out << tr[0] << ' ' << tr[1] << ' ' << tr[2] << '\n';
    if (!inst.planted_cover.empty()) {
        out << "# planted";
        for (std::size_t j : inst.planted_cover) out << ' ' << j;
        out << '\n';
    }
}

std::string format_bench_row(const BenchRecord& r) {
    std::ostringstream os;
    os << r.algo << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << std::fixed << std::setprecision(3)
       << r.wall_ms << ',' << r.weight;
    return os.str();
}

}  // namespace r3d
