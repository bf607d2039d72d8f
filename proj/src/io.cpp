#include "chipfire/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace chipfire {

namespace {

std::string strip(std::string line) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    auto last = line.find_last_not_of(" \t\r");
    return line.substr(first, last - first + 1);
}

long long parse_int(std::string_view tok, int line_no, const char* what) {
    long long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(std::string("expected integer ") + what + ", got '" + std::string(tok) + "'", line_no);
    return value;
}

}  // namespace

MultiDigraph parse_graph(std::istream& in) {
    std::string line;
    int line_no = 0;
    bool undirected = false;
    long long n = -1;
    std::vector<Arc> arcs;

    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip(line);
        if (body.empty()) continue;
        std::istringstream toks(body);
        if (n < 0) {
            std::string kind, count;
            toks >> kind >> count;
            std::string extra;
            if (toks >> extra) throw ParseError("trailing tokens after header", line_no);
            if (kind == "digraph")
                undirected = false;
            else if (kind == "undirected")
                undirected = true;
            else
                throw ParseError("header must start with 'digraph' or 'undirected'", line_no);
            n = parse_int(count, line_no, "vertex count");
            if (n <= 0 || n > 1'000'000) throw ParseError("vertex count out of range", line_no);
            continue;
        }
        std::string us, vs, ks, extra;
        toks >> us >> vs;
        if (vs.empty()) throw ParseError("arc line needs at least 'u v'", line_no);
        long long k = 1;
        if (toks >> ks) k = parse_int(ks, line_no, "multiplicity");
        if (toks >> extra) throw ParseError("trailing tokens after arc line", line_no);
        long long u = parse_int(us, line_no, "tail vertex");
        long long v = parse_int(vs, line_no, "head vertex");
        if (u < 0 || u >= n || v < 0 || v >= n) throw ParseError("vertex index out of range", line_no);
        if (u == v) throw ParseError("loop arcs are not allowed", line_no);
        if (k <= 0 || k > 1'000'000) throw ParseError("multiplicity out of range", line_no);
        arcs.push_back({static_cast<int>(u), static_cast<int>(v), static_cast<int>(k)});
    }
    if (n < 0) throw ParseError("missing graph header", line_no);
    return undirected ? MultiDigraph::undirected(static_cast<int>(n), arcs)
                      : MultiDigraph(static_cast<int>(n), arcs);
}

MultiDigraph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

MultiDigraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file '" + path + "'", 0);
    return parse_graph(in);
}

std::string format_graph(const MultiDigraph& g) {
    std::ostringstream out;
    if (g.undirected_edge_count()) {
        out << "undirected " << g.vertex_count() << "\n";
        for (const Arc& a : g.arcs())
            if (a.from < a.to) {
                out << a.from << " " << a.to;
                if (a.count != 1) out << " " << a.count;
                out << "\n";
            }
    } else {
        out << "digraph " << g.vertex_count() << "\n";
        for (const Arc& a : g.arcs()) {
            out << a.from << " " << a.to;
            if (a.count != 1) out << " " << a.count;
            out << "\n";
        }
    }
    return out.str();
}

std::string format_arc_lines(const ArcSubset& t) {
    std::ostringstream out;
    for (const Arc& a : t.arcs()) {
        out << a.from << " " << a.to;
        if (a.count != 1) out << " " << a.count;
        out << "\n";
    }
    return out.str();
}

ChipDistribution parse_distribution(std::string_view csv, int expected_n) {
    std::vector<long long> values;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string_view tok = csv.substr(pos, comma == std::string_view::npos ? csv.npos : comma - pos);
        // allow surrounding spaces
        while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
        while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
        values.push_back(parse_int(tok, 0, "chip count"));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    if (expected_n >= 0 && static_cast<int>(values.size()) != expected_n)
        throw DimensionMismatchError("distribution has " + std::to_string(values.size()) +
                                     " entries, graph has " + std::to_string(expected_n) + " vertices");
    return ChipDistribution(std::move(values));
}

}  // namespace chipfire
