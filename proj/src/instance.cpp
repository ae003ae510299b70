#include "gfactor/instance.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace gfactor {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream is(line);
    std::string t;
    while (is >> t) {
        if (t[0] == '#') break;  // comment runs to end of line
        toks.push_back(t);
    }
    return toks;
}

i64 parse_i64(const std::string& tok, int line, const char* what) {
    i64 v = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || p != tok.data() + tok.size())
        throw ParseError(line, std::string(what) + " expects an integer, got '" + tok + "'");
    return v;
}

int parse_int(const std::string& tok, int line, const char* what) {
    i64 v = parse_i64(tok, line, what);
    if (v < INT32_MIN || v > INT32_MAX) throw ParseError(line, std::string(what) + " out of range");
    return int(v);
}

/* Reads lines, dropping comments and blanks, tracking the line number. */
struct LineReader {
    std::istream& in;
    int line = 0;

    std::optional<std::vector<std::string>> next() {
        std::string raw;
        while (std::getline(in, raw)) {
            ++line;
            std::vector<std::string> toks = tokenize(raw);
            if (!toks.empty()) return toks;
        }
        return std::nullopt;
    }
};

}  // namespace

Instance parse_instance(std::istream& in) {
    LineReader rd{in};
    auto need = [&](const char* what) {
        std::optional<std::vector<std::string>> t = rd.next();
        if (!t) throw ParseError(rd.line + 1, std::string("unexpected end of input, expected ") + what);
        return *t;
    };

    std::vector<std::string> toks = need("the header 'gfactor 1'");
    if (toks.size() != 2 || toks[0] != "gfactor" || toks[1] != "1")
        throw ParseError(rd.line, "expected the header 'gfactor 1'");

    toks = need("'vertices <n>'");
    if (toks.size() != 2 || toks[0] != "vertices")
        throw ParseError(rd.line, "expected 'vertices <n>'");
    Instance inst;
    inst.vertices = parse_int(toks[1], rd.line, "vertex count");
    if (inst.vertices < 1) throw ParseError(rd.line, "vertex count must be at least 1");

    std::optional<std::vector<std::string>> cur = rd.next();
    if (cur && !cur->empty() && (*cur)[0] == "names") {
        if (int(cur->size()) != inst.vertices + 1)
            throw ParseError(rd.line, "names expects exactly one token per vertex");
        inst.names.assign(cur->begin() + 1, cur->end());
        cur = rd.next();
    }

    while (cur && !cur->empty() && (*cur)[0] == "edge") {
        if (cur->size() != 4) throw ParseError(rd.line, "expected 'edge <u> <v> <w>'");
        GraphEdge e;
        e.u = parse_int((*cur)[1], rd.line, "edge endpoint");
        e.v = parse_int((*cur)[2], rd.line, "edge endpoint");
        e.w = parse_i64((*cur)[3], rd.line, "edge weight");
        if (e.u < 0 || e.u >= inst.vertices || e.v < 0 || e.v >= inst.vertices)
            throw ParseError(rd.line, "edge endpoint out of range");
        if (e.w > INT32_MAX || e.w < INT32_MIN)
            throw ParseError(rd.line, "edge weight exceeds 32 bits");
        inst.edges.push_back(e);
        cur = rd.next();
    }

    for (int v = 0; v < inst.vertices; ++v) {
        if (!cur) throw ParseError(rd.line + 1, "missing 'bset " + std::to_string(v) + " : ...'");
        const std::vector<std::string>& t = *cur;
        if (t.size() < 4 || t[0] != "bset" || t[2] != ":")
            throw ParseError(rd.line, "expected 'bset " + std::to_string(v) + " : <elements>'");
        if (parse_int(t[1], rd.line, "bset vertex") != v)
            throw ParseError(rd.line, "bset lines must cover vertices 0.." +
                                          std::to_string(inst.vertices - 1) + " in order, expected " +
                                          std::to_string(v));
        std::vector<i64> elems;
        for (size_t i = 3; i < t.size(); ++i) elems.push_back(parse_i64(t[i], rd.line, "bset element"));
        try {
            inst.bsets.emplace_back(std::move(elems));
        } catch (const std::invalid_argument& e) {
            throw ParseError(rd.line, e.what());
        }
        cur = rd.next();
    }

    if (cur && !cur->empty() && (*cur)[0] == "objective") {
        if (cur->size() != 2) throw ParseError(rd.line, "expected 'objective cardinality|weighted'");
        if ((*cur)[1] == "cardinality")
            inst.objective = Objective::cardinality;
        else if ((*cur)[1] == "weighted")
            inst.objective = Objective::weighted;
        else
            throw ParseError(rd.line, "unknown objective '" + (*cur)[1] + "'");
        cur = rd.next();
    }

    if (cur && !cur->empty() && (*cur)[0] == "initial") {
        if (cur->size() < 2 || (*cur)[1] != ":")
            throw ParseError(rd.line, "expected 'initial : <edge ids>'");
        Factor f;
        for (size_t i = 2; i < cur->size(); ++i) {
            int id = parse_int((*cur)[i], rd.line, "initial edge id");
            if (id < 0 || id >= int(inst.edges.size()))
                throw ParseError(rd.line, "initial edge id " + std::to_string(id) + " out of range");
            if (!f.empty() && id <= f.back())
                throw ParseError(rd.line, "initial edge ids must be strictly increasing");
            f.push_back(id);
        }
        /* The declared start is validated here, not trusted. */
        IntVec d(size_t(inst.vertices), 0);
        for (int id : f) {
            ++d[size_t(inst.edges[size_t(id)].u)];
            ++d[size_t(inst.edges[size_t(id)].v)];
        }
        for (int v = 0; v < inst.vertices; ++v)
            if (!inst.bsets[size_t(v)].contains(d[size_t(v)]))
                throw ParseError(rd.line, "initial factor gives vertex " + std::to_string(v) +
                                              " degree " + std::to_string(d[size_t(v)]) +
                                              ", not in its B set");
        inst.initial = std::move(f);
        cur = rd.next();
    }

    if (cur) throw ParseError(rd.line, "unexpected line starting with '" + (*cur)[0] + "'");
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    std::istringstream is(text);
    return parse_instance(is);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open instance file '" + path + "'");
    return parse_instance(in);
}

std::string emit_instance(const Instance& inst) {
    if (int(inst.bsets.size()) != inst.vertices)
        throw std::invalid_argument("emit_instance: one degree set per vertex required");
    if (!inst.names.empty() && int(inst.names.size()) != inst.vertices)
        throw std::invalid_argument("emit_instance: one name per vertex required");
    for (const std::string& nm : inst.names)
        if (nm.empty() || nm.find_first_of(" \t#") != std::string::npos)
            throw std::invalid_argument("emit_instance: names must be single plain tokens");

    std::ostringstream os;
    os << "gfactor 1\n";
    os << "vertices " << inst.vertices << "\n";
    if (!inst.names.empty()) {
        os << "names";
        for (const std::string& nm : inst.names) os << ' ' << nm;
        os << "\n";
    }
    for (const GraphEdge& e : inst.edges) os << "edge " << e.u << ' ' << e.v << ' ' << e.w << "\n";
    for (int v = 0; v < inst.vertices; ++v) {
        os << "bset " << v << " :";
        for (i64 a : inst.bsets[size_t(v)].elems()) os << ' ' << a;
        os << "\n";
    }
    if (inst.objective)
        os << "objective " << (*inst.objective == Objective::weighted ? "weighted" : "cardinality")
           << "\n";
    if (inst.initial) {
        os << "initial :";
        for (int id : *inst.initial) os << ' ' << id;
        os << "\n";
    }
    return os.str();
}

MultiGraph instance_graph(const Instance& inst) { return MultiGraph(inst.vertices, inst.edges); }

}  // namespace gfactor
