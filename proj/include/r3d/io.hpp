#pragma once

#include "r3d/graph.hpp"
#include "r3d/reductions.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace r3d {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Graph file: "n m", then m lines "u v" with u < v in sorted order, then optional
/// "# role <vertex> <tag>" lines. Other lines starting with '#' are comments.
struct GraphFile {
    Graph graph;
    std::vector<std::pair<Vertex, std::string>> roles;  // sorted by vertex

    friend bool operator==(const GraphFile&, const GraphFile&) = default;
};

GraphFile parse_graph_file(std::istream& in);
GraphFile read_graph_file(const std::string& path);
void write_graph_file(std::ostream& out, const GraphFile& file);
std::string format_graph_file(const GraphFile& file);

/// Role section of a reduction output.
std::vector<std::pair<Vertex, std::string>> role_section(const std::vector<Role>& roles);

/// Labeling file: one label in 0..3 per line, in vertex order.
Labeling parse_labeling_file(std::istream& in);
Labeling read_labeling_file(const std::string& path);
void write_labeling_file(std::ostream& out, const Labeling& f);

/// Exact 3-cover file: "x3c <universe> <t>", then t lines "a b c", then optional
/// "# planted j1 j2 ...".
X3CInstance parse_x3c_file(std::istream& in);
X3CInstance read_x3c_file(const std::string& path);
void write_x3c_file(std::ostream& out, const X3CInstance& inst);

struct BenchRecord {
    std::string algo;
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t seed = 0;
    double wall_ms = 0.0;
    long long weight = 0;
};

inline constexpr const char* kBenchHeader = "algo,n,m,seed,wall_ms,weight";

std::string format_bench_row(const BenchRecord& r);

}  // namespace r3d
