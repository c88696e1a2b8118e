#include "core/io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace bmst {

namespace {

std::vector<std::string> tokenize(std::string_view line) {
    std::vector<std::string> tokens;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) tokens.emplace_back(line.substr(start, i - start));
    }
    return tokens;
}

// Strict integer parse; rejects trailing junk, so rational inputs fail here.
bool parse_int(const std::string& token, std::int64_t& out) {
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    return ec == std::errc{} && ptr == end;
}

template <typename T>
Result<T> line_error(int line_no, const std::string& what) {
    return Result<T>::failure(Status::ParseError, "line " + std::to_string(line_no) + ": " + what);
}

struct LineReader {
    std::string_view text;
    size_t pos = 0;
    int line_no = 0;

    // Returns the next non-empty line with comments stripped, or false at end.
    bool next(std::vector<std::string>& tokens) {
        while (pos < text.size()) {
            size_t nl = text.find('\n', pos);
            std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
            pos = nl == std::string_view::npos ? text.size() : nl + 1;
            ++line_no;
            if (size_t hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            tokens = tokenize(line);
            if (!tokens.empty()) return true;
        }
        return false;
    }
};

}  // namespace

Result<BmstInstance> parse_instance(std::string_view text) {
    using R = Result<BmstInstance>;
    LineReader reader{text};
    std::vector<std::string> tok;

    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "bmst" || tok[1] != "1")
        return line_error<BmstInstance>(reader.line_no == 0 ? 1 : reader.line_no, "expected header 'bmst 1'");
    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "vertices")
        return line_error<BmstInstance>(reader.line_no, "expected 'vertices <n>'");
    std::int64_t n = 0;
    if (!parse_int(tok[1], n) || n < 1)
        return line_error<BmstInstance>(reader.line_no, "bad vertex count");

    struct RawEdge {
        std::int64_t id, u, v, c, d;
        Owner owner;
    };
    std::vector<RawEdge> raw;
    std::vector<std::int64_t> pref_ids;
    bool saw_pref = false;

    while (reader.next(tok)) {
        if (tok[0] == "edge") {
            if (tok.size() != 7) return line_error<BmstInstance>(reader.line_no, "expected 'edge <id> <u> <v> <L|F> <c> <d>'");
            RawEdge e{};
            if (!parse_int(tok[1], e.id) || !parse_int(tok[2], e.u) || !parse_int(tok[3], e.v) ||
                !parse_int(tok[5], e.c) || !parse_int(tok[6], e.d))
                return line_error<BmstInstance>(reader.line_no, "bad edge field (integers required)");
            if (tok[4] == "L")
                e.owner = Owner::Leader;
            else if (tok[4] == "F")
                e.owner = Owner::Follower;
            else
                return line_error<BmstInstance>(reader.line_no, "owner must be L or F");
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                return line_error<BmstInstance>(reader.line_no, "edge endpoint out of range");
            if (e.u == e.v) return line_error<BmstInstance>(reader.line_no, "loop edge");
            if (e.c < 0 || e.d < 0) return line_error<BmstInstance>(reader.line_no, "negative cost");
            raw.push_back(e);
        } else if (tok[0] == "pref") {
            if (saw_pref) return line_error<BmstInstance>(reader.line_no, "duplicate pref line");
            saw_pref = true;
            for (size_t i = 1; i < tok.size(); ++i) {
                std::int64_t id;
                if (!parse_int(tok[i], id)) return line_error<BmstInstance>(reader.line_no, "bad pref entry");
                pref_ids.push_back(id);
            }
        } else {
            return line_error<BmstInstance>(reader.line_no, "unknown directive '" + tok[0] + "'");
        }
    }

    const auto m = static_cast<std::int64_t>(raw.size());
    std::vector<Edge> edges(static_cast<size_t>(m));
    std::vector<Owner> owner(static_cast<size_t>(m), Owner::Leader);
    std::vector<Cost> c(static_cast<size_t>(m), 0), d(static_cast<size_t>(m), 0);
    std::vector<bool> present(static_cast<size_t>(m), false);
    for (const RawEdge& e : raw) {
        if (e.id < 0 || e.id >= m) return R::failure(Status::ParseError, "edge ids must be dense 0.." + std::to_string(m - 1));
        if (present[static_cast<size_t>(e.id)]) return R::failure(Status::ParseError, "duplicate edge id " + std::to_string(e.id));
        present[static_cast<size_t>(e.id)] = true;
        edges[static_cast<size_t>(e.id)] = {static_cast<VertexId>(e.u), static_cast<VertexId>(e.v)};
        owner[static_cast<size_t>(e.id)] = e.owner;
        c[static_cast<size_t>(e.id)] = e.c;
        d[static_cast<size_t>(e.id)] = e.d;
    }

    BmstInstance inst;
    inst.graph = Multigraph(static_cast<int>(n), std::move(edges));
    inst.owner = std::move(owner);
    inst.leader_cost = std::move(c);
    inst.follower_cost = std::move(d);
    if (saw_pref) {
        for (std::int64_t id : pref_ids) {
            if (id < 0 || id >= m) return R::failure(Status::ParseError, "pref references unknown edge " + std::to_string(id));
            inst.pref.push_back(static_cast<EdgeId>(id));
        }
    } else {
        inst.pref = default_pref(inst.graph, inst.owner, inst.leader_cost, inst.follower_cost);
    }

    if (auto err = validate(inst)) return R::failure(Status::InvalidInstance, *err);
    return R::success(std::move(inst));
}

std::string write_instance(const BmstInstance& inst) {
    std::ostringstream out;
    out << "bmst 1\n";
    out << "vertices " << inst.vertex_count() << "\n";
    for (EdgeId e = 0; e < inst.edge_count(); ++e) {
        out << "edge " << e << ' ' << inst.graph.edge(e).u << ' ' << inst.graph.edge(e).v << ' '
            << (inst.is_leader(e) ? 'L' : 'F') << ' ' << inst.c(e) << ' ' << inst.d(e) << "\n";
    }
    out << "pref";
    for (EdgeId e : inst.pref) out << ' ' << e;
    out << "\n";
    return out.str();
}

Result<SteinerInput> parse_steiner_input(std::string_view text) {
    using R = Result<SteinerInput>;
    LineReader reader{text};
    std::vector<std::string> tok;

    if (!reader.next(tok) || tok.size() != 2 || tok[0] != "vertices")
        return line_error<SteinerInput>(reader.line_no == 0 ? 1 : reader.line_no, "expected 'vertices <n>'");
    std::int64_t n = 0;
    if (!parse_int(tok[1], n) || n < 1) return line_error<SteinerInput>(reader.line_no, "bad vertex count");

    std::vector<Edge> edges;
    std::vector<Cost> lengths;
    std::vector<std::int64_t> class_labels;
    std::vector<std::vector<VertexId>> classes;
    std::set<std::int64_t> used_vertices;

    while (reader.next(tok)) {
        if (tok[0] == "edge") {
            if (tok.size() != 4) return line_error<SteinerInput>(reader.line_no, "expected 'edge <u> <v> <length>'");
            std::int64_t u, v, len;
            if (!parse_int(tok[1], u) || !parse_int(tok[2], v) || !parse_int(tok[3], len))
                return line_error<SteinerInput>(reader.line_no, "bad edge field (integers required)");
            if (u < 0 || u >= n || v < 0 || v >= n) return line_error<SteinerInput>(reader.line_no, "edge endpoint out of range");
            if (u == v) return line_error<SteinerInput>(reader.line_no, "loop edge");
            if (len < 0) return line_error<SteinerInput>(reader.line_no, "negative length");
            edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
            lengths.push_back(len);
        } else if (tok[0] == "terminals") {
            if (tok.size() < 3) return line_error<SteinerInput>(reader.line_no, "expected 'terminals <class> <v> ...'");
            std::int64_t label;
            if (!parse_int(tok[1], label)) return line_error<SteinerInput>(reader.line_no, "bad class label");
            size_t idx;
            auto it = std::find(class_labels.begin(), class_labels.end(), label);
            if (it == class_labels.end()) {
                class_labels.push_back(label);
                classes.emplace_back();
                idx = classes.size() - 1;
            } else {
                idx = static_cast<size_t>(it - class_labels.begin());
            }
            for (size_t i = 2; i < tok.size(); ++i) {
                std::int64_t v;
                if (!parse_int(tok[i], v)) return line_error<SteinerInput>(reader.line_no, "bad terminal");
                if (v < 0 || v >= n) return line_error<SteinerInput>(reader.line_no, "terminal out of range");
                if (!used_vertices.insert(v).second)
                    return line_error<SteinerInput>(reader.line_no, "terminal " + std::to_string(v) + " listed twice");
                classes[idx].push_back(static_cast<VertexId>(v));
            }
        } else {
            return line_error<SteinerInput>(reader.line_no, "unknown directive '" + tok[0] + "'");
        }
    }
    for (const auto& cls : classes)
        if (cls.empty()) return R::failure(Status::ParseError, "empty terminal class");

    SteinerInput input;
    input.graph = Multigraph(static_cast<int>(n), std::move(edges));
    input.length = std::move(lengths);
    input.terminal_sets = std::move(classes);
    return R::success(std::move(input));
}

Result<SolutionFile> parse_solution(std::string_view text) {
    LineReader reader{text};
    std::vector<std::string> tok;
    SolutionFile sol;
    while (reader.next(tok)) {
        std::vector<EdgeId>* target = nullptr;
        if (tok[0] == "leader")
            target = &sol.leader;
        else if (tok[0] == "follower")
            target = &sol.follower;
        else
            return line_error<SolutionFile>(reader.line_no, "expected 'leader ...' or 'follower ...'");
        for (size_t i = 1; i < tok.size(); ++i) {
            std::int64_t id;
            if (!parse_int(tok[i], id) || id < 0) return line_error<SolutionFile>(reader.line_no, "bad edge id");
            target->push_back(static_cast<EdgeId>(id));
        }
    }
    return Result<SolutionFile>::success(std::move(sol));
}

std::string write_solution(const std::vector<EdgeId>& leader, const std::vector<EdgeId>& follower) {
    std::ostringstream out;
    out << "leader";
    for (EdgeId e : leader) out << ' ' << e;
    out << "\nfollower";
    for (EdgeId e : follower) out << ' ' << e;
    out << "\n";
    return out.str();
}

}  // namespace bmst
