#include "sec/instance.hpp"

#include "sec/errors.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace sec {

bool operator==(const Instance& a, const Instance& b) {
    const auto rot = [](const Instance& x) {
        return x.embedding ? x.embedding->rotation : std::vector<std::vector<VertexId>>{};
    };
    return a.graph == b.graph && a.embedding.has_value() == b.embedding.has_value() &&
           rot(a) == rot(b) && a.lists == b.lists && a.planar == b.planar &&
           a.declared_max_degree == b.declared_max_degree && a.delta_cap == b.delta_cap;
}

namespace {

struct Token {
    std::string_view text;
    std::size_t column = 0; // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        const auto start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back({line.substr(start, i - start), start + 1});
        }
    }
    return out;
}

class LineReader {
public:
    LineReader(std::size_t line, std::vector<Token> tokens)
        : line_(line), tokens_(std::move(tokens)) {}

    std::size_t line() const { return line_; }
    std::size_t size() const { return tokens_.size(); }
    const Token& at(std::size_t i) const { return tokens_.at(i); }

    [[noreturn]] void fail(std::size_t i, const std::string& msg) const {
        const auto col = i < tokens_.size() ? tokens_[i].column
                                            : (tokens_.empty() ? 1
                                                               : tokens_.back().column +
                                                                     tokens_.back().text.size());
        throw ParseError(line_, col, msg);
    }

    std::uint64_t number(std::size_t i, std::uint64_t max = UINT32_MAX) const {
        if (i >= tokens_.size()) {
            fail(i, "expected a non-negative integer");
        }
        const auto t = tokens_[i].text;
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc{} || ptr != t.data() + t.size()) {
            fail(i, "expected a non-negative integer, got '" + std::string(t) + "'");
        }
        if (value > max) {
            fail(i, "value " + std::string(t) + " is too large");
        }
        return value;
    }

    void expect_colon(std::size_t i) const {
        if (i >= tokens_.size() || tokens_[i].text != ":") {
            fail(i, "expected ':'");
        }
    }

    void expect_end(std::size_t i) const {
        if (i < tokens_.size()) {
            fail(i, "unexpected token '" + std::string(tokens_[i].text) + "'");
        }
    }

private:
    std::size_t line_;
    std::vector<Token> tokens_;
};

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        const auto end = nl == std::string_view::npos ? text.size() : nl;
        ++line_no;
        auto tokens = tokenize(text.substr(pos, end - pos));
        if (!tokens.empty()) {
            fn(LineReader(line_no, std::move(tokens)));
        }
        if (nl == std::string_view::npos) {
            break;
        }
        pos = nl + 1;
    }
}

struct PendingList {
    std::size_t line;
    std::size_t column;
    VertexId u, v;
    std::vector<Color> colors;
};

ColorLists resolve_lists(const Graph& g, std::vector<PendingList> lists) {
    std::vector<std::optional<std::vector<Color>>> per_edge(g.edge_count());
    for (auto& pl : lists) {
        const auto e = pl.u < g.vertex_count() && pl.v < g.vertex_count()
                           ? g.find_edge(pl.u, pl.v)
                           : std::nullopt;
        if (!e) {
            throw ParseError(pl.line, pl.column,
                             "list for unknown edge " + std::to_string(pl.u) + " " +
                                 std::to_string(pl.v));
        }
        if (per_edge[*e]) {
            throw ParseError(pl.line, pl.column,
                             "list for edge " + std::to_string(pl.u) + " " +
                                 std::to_string(pl.v) + " given twice");
        }
        per_edge[*e] = std::move(pl.colors);
    }
    std::vector<std::vector<Color>> all;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!per_edge[e]) {
            throw InputError("edge " + std::to_string(g.edge(e).u) + " " +
                             std::to_string(g.edge(e).v) + " has no color list");
        }
        all.push_back(std::move(*per_edge[e]));
    }
    return ColorLists(std::move(all));
}

PendingList read_list(const LineReader& r) {
    PendingList pl{r.line(), r.at(0).column, static_cast<VertexId>(r.number(1)),
                   static_cast<VertexId>(r.number(2)), {}};
    r.expect_colon(3);
    for (std::size_t i = 4; i < r.size(); ++i) {
        pl.colors.push_back(static_cast<Color>(r.number(i)));
    }
    return pl;
}

} // namespace

Instance parse_instance(std::string_view text) {
    std::optional<std::uint64_t> vertex_count;
    std::vector<VertexPair> pairs;
    std::vector<std::pair<std::size_t, std::size_t>> pair_pos;
    std::map<VertexId, std::vector<VertexId>> rotation;
    std::vector<PendingList> lists;
    Instance inst;

    for_each_line(text, [&](const LineReader& r) {
        const auto kind = r.at(0).text;
        if (kind == "v") {
            if (vertex_count) {
                r.fail(0, "vertex count given twice");
            }
            vertex_count = r.number(1);
            r.expect_end(2);
        } else if (kind == "e") {
            const auto u = static_cast<VertexId>(r.number(1));
            const auto v = static_cast<VertexId>(r.number(2));
            r.expect_end(3);
            if (u == v) {
                r.fail(1, "self-loop at vertex " + std::to_string(u));
            }
            const VertexPair p{std::min(u, v), std::max(u, v)};
            if (std::find(pairs.begin(), pairs.end(), p) != pairs.end()) {
                r.fail(1, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            }
            pairs.push_back(p);
            pair_pos.emplace_back(r.line(), r.at(1).column);
        } else if (kind == "r") {
            const auto u = static_cast<VertexId>(r.number(1));
            r.expect_colon(2);
            if (rotation.count(u) != 0) {
                r.fail(1, "rotation for vertex " + std::to_string(u) + " given twice");
            }
            std::vector<VertexId> order;
            for (std::size_t i = 3; i < r.size(); ++i) {
                order.push_back(static_cast<VertexId>(r.number(i)));
            }
            rotation[u] = std::move(order);
        } else if (kind == "l") {
            lists.push_back(read_list(r));
        } else if (kind == "p") {
            if (r.size() < 2) {
                r.fail(1, "expected a property name");
            }
            const auto name = r.at(1).text;
            if (name == "planar") {
                inst.planar = true;
                r.expect_end(2);
            } else if (name == "maxdeg") {
                inst.declared_max_degree = static_cast<std::uint32_t>(r.number(2));
                r.expect_end(3);
            } else if (name == "delta_cap") {
                inst.delta_cap = static_cast<std::uint32_t>(r.number(2));
                r.expect_end(3);
            } else {
                r.fail(1, "unknown property '" + std::string(name) + "'");
            }
        } else {
            r.fail(0, "unknown record '" + std::string(kind) + "'");
        }
    });

    std::uint64_t n = 0;
    for (const auto& [u, v] : pairs) {
        n = std::max<std::uint64_t>(n, std::uint64_t{v} + 1);
    }
    if (vertex_count) {
        for (std::size_t i = 0; i < pairs.size(); ++i) {
            if (pairs[i].second >= *vertex_count) {
                throw ParseError(pair_pos[i].first, pair_pos[i].second,
                                 "edge endpoint " + std::to_string(pairs[i].second) +
                                     " is outside 0.." + std::to_string(*vertex_count) + "-1");
            }
        }
        n = *vertex_count;
    }
    inst.graph = Graph::from_dense(static_cast<std::size_t>(n), pairs);
    const auto& g = inst.graph;

    if (inst.declared_max_degree && *inst.declared_max_degree != g.max_degree()) {
        throw InputError("declared max degree " + std::to_string(*inst.declared_max_degree) +
                         " but the graph has max degree " + std::to_string(g.max_degree()));
    }
    if (inst.delta_cap && *inst.delta_cap < g.max_degree()) {
        throw InputError("declared delta_cap " + std::to_string(*inst.delta_cap) +
                         " is below the max degree " + std::to_string(g.max_degree()));
    }

    if (!rotation.empty()) {
        std::vector<std::vector<VertexId>> rot(g.vertex_count());
        for (auto& [u, order] : rotation) {
            if (u >= g.vertex_count()) {
                throw InputError("rotation for unknown vertex " + std::to_string(u));
            }
            rot[u] = std::move(order);
        }
        inst.embedding = trace_faces(g, std::move(rot));
    }

    if (!lists.empty()) {
        inst.lists = resolve_lists(g, std::move(lists));
    }
    return inst;
}

std::string serialize_instance(const Instance& inst) {
    const auto& g = inst.graph;
    std::ostringstream os;
    os << "v " << g.vertex_count() << '\n';
    if (inst.planar) {
        os << "p planar\n";
    }
    if (inst.declared_max_degree) {
        os << "p maxdeg " << *inst.declared_max_degree << '\n';
    }
    if (inst.delta_cap) {
        os << "p delta_cap " << *inst.delta_cap << '\n';
    }
    for (const auto& e : g.edges()) {
        os << "e " << e.u << ' ' << e.v << '\n';
    }
    if (inst.embedding) {
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            os << "r " << v << " :";
            for (auto u : inst.embedding->rotation[v]) {
                os << ' ' << u;
            }
            os << '\n';
        }
    }
    if (inst.lists) {
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            os << "l " << g.edge(e).u << ' ' << g.edge(e).v << " :";
            for (auto c : inst.lists->of(e)) {
                os << ' ' << c;
            }
            os << '\n';
        }
    }
    return os.str();
}

ColorLists parse_lists(std::string_view text, const Graph& g) {
    std::vector<PendingList> lists;
    for_each_line(text, [&](const LineReader& r) {
        if (r.at(0).text != "l") {
            r.fail(0, "expected an 'l U V : C1 C2 ...' record");
        }
        lists.push_back(read_list(r));
    });
    return resolve_lists(g, std::move(lists));
}

ColoringFile parse_coloring(std::string_view text, const Graph& g) {
    ColoringFile out;
    out.coloring = PartialColoring(g.edge_count());
    for_each_line(text, [&](const LineReader& r) {
        if (r.at(0).text != "c") {
            r.fail(0, "expected a 'c U V COLOR' record");
        }
        const auto u = r.number(1);
        const auto v = r.number(2);
        const auto color = static_cast<Color>(r.number(3));
        r.expect_end(4);
        std::optional<EdgeId> e;
        if (u < g.vertex_count() && v < g.vertex_count() && u != v) {
            e = g.find_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        }
        if (!e) {
            e = static_cast<EdgeId>(g.edge_count() + out.unknown.size());
            out.unknown.emplace_back(u, v);
        } else if (out.coloring.colored(*e)) {
            r.fail(1, "edge " + std::to_string(u) + " " + std::to_string(v) + " colored twice");
        }
        out.coloring.assign(*e, color);
    });
    return out;
}

std::string serialize_coloring(const Graph& g, const PartialColoring& c) {
    std::ostringstream os;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (const auto color = c.get(e)) {
            os << "c " << g.label(g.edge(e).u) << ' ' << g.label(g.edge(e).v) << ' ' << *color
               << '\n';
        }
    }
    return os.str();
}

} // namespace sec
