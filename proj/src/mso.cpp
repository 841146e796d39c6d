#include "cplan/mso.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "cplan/gadgets.hpp"

namespace cplan {

namespace {

Formula pred(std::string name, std::vector<std::string> args) {
    Formula f;
    f.kind = Formula::Kind::Pred;
    f.pred = std::move(name);
    f.args = std::move(args);
    return f;
}

void render_label(std::ostringstream& out, const SetLabel& l) {
    out << "(set " << l.name << (l.is_edge_set ? " edges" : " vertices");
    if (l.is_edge_set)
        for (auto [u, v] : l.edges) out << " (" << u << " " << v << ")";
    else
        for (VertexId v : l.vertices) out << " " << v;
    out << ")\n";
}

void render_formula(std::ostringstream& out, const Formula& f, int depth) {
    const std::string pad(2 * static_cast<size_t>(depth), ' ');
    switch (f.kind) {
    case Formula::Kind::Exists:
        out << pad << "(exists-subset " << f.var << " " << f.domain << "\n";
        render_formula(out, f.children.at(0), depth + 1);
        out << ")";
        break;
    case Formula::Kind::And:
        out << pad << "(and";
        for (const Formula& c : f.children) {
            out << "\n";
            render_formula(out, c, depth + 1);
        }
        out << ")";
        break;
    case Formula::Kind::Pred:
        out << pad << "(" << f.pred;
        for (const std::string& a : f.args) out << " " << a;
        out << ")";
        break;
    }
}

std::string render(const std::vector<SetLabel>& labels, const Formula& formula) {
    std::ostringstream out;
    for (const SetLabel& l : labels) render_label(out, l);
    out << "(formula\n";
    render_formula(out, formula, 1);
    out << ")\n";
    return out.str();
}

// Minimal s-expression reader for the emitted format.
struct Sexpr {
    bool is_atom = false;
    std::string atom;
    std::vector<Sexpr> items;
};

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> toks;
    std::string cur;
    for (char ch : text) {
        if (ch == '(' || ch == ')') {
            if (!cur.empty()) toks.push_back(std::exchange(cur, {}));
            toks.push_back(std::string(1, ch));
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) toks.push_back(std::exchange(cur, {}));
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) toks.push_back(cur);
    return toks;
}

Sexpr read_sexpr(const std::vector<std::string>& toks, size_t& at) {
    if (at >= toks.size()) fail(ErrorCode::SchemaError, "unexpected end of formula text");
    if (toks[at] == "(") {
        Sexpr list;
        ++at;
        while (at < toks.size() && toks[at] != ")") list.items.push_back(read_sexpr(toks, at));
        if (at >= toks.size()) fail(ErrorCode::SchemaError, "unbalanced parenthesis");
        ++at;
        return list;
    }
    if (toks[at] == ")") fail(ErrorCode::SchemaError, "stray closing parenthesis");
    Sexpr a;
    a.is_atom = true;
    a.atom = toks[at++];
    return a;
}

const std::string& head(const Sexpr& s) {
    if (s.is_atom || s.items.empty() || !s.items[0].is_atom)
        fail(ErrorCode::SchemaError, "expected a named form");
    return s.items[0].atom;
}

VertexId parse_id(const Sexpr& s) {
    if (!s.is_atom) fail(ErrorCode::SchemaError, "expected a vertex id");
    return static_cast<VertexId>(std::stoi(s.atom));
}

Formula parse_formula(const Sexpr& s) {
    const std::string& h = head(s);
    Formula f;
    if (h == "exists-subset") {
        if (s.items.size() != 4 || !s.items[1].is_atom || !s.items[2].is_atom)
            fail(ErrorCode::SchemaError, "exists-subset needs a variable, a domain and a body");
        f.kind = Formula::Kind::Exists;
        f.var = s.items[1].atom;
        f.domain = s.items[2].atom;
        f.children.push_back(parse_formula(s.items[3]));
    } else if (h == "and") {
        f.kind = Formula::Kind::And;
        for (size_t i = 1; i < s.items.size(); ++i) f.children.push_back(parse_formula(s.items[i]));
    } else {
        f.kind = Formula::Kind::Pred;
        f.pred = h;
        for (size_t i = 1; i < s.items.size(); ++i) {
            if (!s.items[i].is_atom) fail(ErrorCode::SchemaError, "predicate arguments are names");
            f.args.push_back(s.items[i].atom);
        }
    }
    return f;
}

bool chords_cross(const CandidateEdge& x, const CandidateEdge& y) {
    const int a = std::min(x.pos_u, x.pos_v), b = std::max(x.pos_u, x.pos_v);
    const int c = std::min(y.pos_u, y.pos_v), d = std::max(y.pos_u, y.pos_v);
    return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

using EdgeSet = std::vector<std::pair<VertexId, VertexId>>;

struct Evaluator {
    const FormulaInstance& fi;
    int cap;
    std::map<std::pair<VertexId, VertexId>, std::vector<CandidateEdge>> hosts;
    std::map<std::string, EdgeSet> env; // bound set variables

    explicit Evaluator(const FormulaInstance& inst, int limit) : fi(inst), cap(limit) {
        for (const CandidateEdge& c : candidate_saturating_edges(fi.base))
            hosts[std::minmax(c.u, c.v)].push_back(c);
    }

    const SetLabel& label(const std::string& name) const {
        for (const SetLabel& l : fi.labels)
            if (l.name == name) return l;
        fail(ErrorCode::BadParams, "formula references undeclared set " + name);
    }

    const EdgeSet& edge_set(const std::string& name) const {
        if (auto it = env.find(name); it != env.end()) return it->second;
        const SetLabel& l = label(name);
        if (!l.is_edge_set) fail(ErrorCode::BadParams, name + " is not an edge set");
        return l.edges;
    }

    // Assigns each chosen chord to one offering face so that no two assigned
    // chords cross; depth-first over the per-chord host lists.
    bool realizable(const EdgeSet& chosen) const {
        std::vector<const std::vector<CandidateEdge>*> options;
        for (auto [u, v] : chosen) {
            auto it = hosts.find(std::minmax(u, v));
            if (it == hosts.end()) return false;
            options.push_back(&it->second);
        }
        std::vector<const CandidateEdge*> picked;
        const auto dfs = [&](auto&& self, size_t at) -> bool {
            if (at == options.size()) return true;
            for (const CandidateEdge& c : *options[at]) {
                bool ok = true;
                for (const CandidateEdge* p : picked)
                    if (p->face == c.face && chords_cross(*p, c)) ok = false;
                if (!ok) continue;
                picked.push_back(&c);
                if (self(self, at + 1)) return true;
                picked.pop_back();
            }
            return false;
        };
        return dfs(dfs, 0);
    }

    bool connected(const std::vector<VertexId>& verts, const EdgeSet& base,
                   const EdgeSet& extra) const {
        if (verts.size() <= 1) return true;
        std::map<VertexId, std::vector<VertexId>> adj;
        const auto add = [&](const EdgeSet& es) {
            for (auto [u, v] : es)
                if (std::binary_search(verts.begin(), verts.end(), u) &&
                    std::binary_search(verts.begin(), verts.end(), v)) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
        };
        add(base);
        add(extra);
        std::vector<VertexId> stack{verts[0]};
        std::map<VertexId, bool> seen{{verts[0], true}};
        while (!stack.empty()) {
            const VertexId v = stack.back();
            stack.pop_back();
            for (VertexId w : adj[v])
                if (!std::exchange(seen[w], true)) stack.push_back(w);
        }
        return std::all_of(verts.begin(), verts.end(), [&](VertexId v) { return seen[v]; });
    }

    bool eval(const Formula& f) {
        switch (f.kind) {
        case Formula::Kind::Exists: {
            const EdgeSet domain = edge_set(f.domain);
            if (static_cast<int>(domain.size()) > cap)
                fail(ErrorCode::TooLarge, "existential domain exceeds the enumeration cap");
            for (unsigned long mask = 0; mask < (1ul << domain.size()); ++mask) {
                EdgeSet subset;
                for (size_t i = 0; i < domain.size(); ++i)
                    if (mask >> i & 1) subset.push_back(domain[i]);
                env[f.var] = std::move(subset);
                const bool ok = eval(f.children.at(0));
                env.erase(f.var);
                if (ok) return true;
            }
            return false;
        }
        case Formula::Kind::And:
            return std::all_of(f.children.begin(), f.children.end(),
                               [&](const Formula& c) { return eval(c); });
        case Formula::Kind::Pred:
            if (f.pred == "planar") {
                if (f.args.size() != 2) fail(ErrorCode::BadParams, "planar takes two edge sets");
                return realizable(edge_set(f.args[1]));
            }
            if (f.pred == "connected") {
                if (f.args.size() != 3)
                    fail(ErrorCode::BadParams, "connected takes a vertex set and two edge sets");
                return connected(label(f.args[0]).vertices, edge_set(f.args[1]),
                                 edge_set(f.args[2]));
            }
            fail(ErrorCode::BadParams, "unknown predicate " + f.pred);
        }
        fail(ErrorCode::BadParams, "malformed formula node");
    }
};

} // namespace

FormulaInstance emit_mso2(const CGraph& cg, bool strict) {
    if (strict && !is_three_connected(cg.graph))
        fail(ErrorCode::NotThreeConnected,
             "the embedding is not forced; apply make_three_connected first");
    FormulaInstance fi{cg, build_diamond(cg), {}, {}};
    SetLabel base{"E_G", true, fi.graph.base_edges, {}};
    SetLabel star{"E*", true, {}, {}};
    for (const auto& se : fi.graph.star_edges) star.edges.emplace_back(se.u, se.v);
    fi.labels = {std::move(base), std::move(star)};

    Formula conj;
    conj.kind = Formula::Kind::And;
    conj.children.push_back(pred("planar", {"E_G", "E+"}));
    const ClusterComponents cc = cluster_components(cg);
    int next = 0;
    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
        if (cc.components[mu].size() <= 1) continue;
        SetLabel vi{"V" + std::to_string(++next), false, {}, cg.cluster_vertices(mu)};
        conj.children.push_back(pred("connected", {vi.name, "E_G", "E+"}));
        fi.labels.push_back(std::move(vi));
    }

    Formula ex;
    ex.kind = Formula::Kind::Exists;
    ex.var = "E+";
    ex.domain = "E*";
    ex.children.push_back(std::move(conj));
    fi.formula = std::move(ex);
    return fi;
}

std::string render_mso(const FormulaInstance& fi) { return render(fi.labels, fi.formula); }

std::string render_mso(const ParsedMso& pm) { return render(pm.labels, pm.formula); }

ParsedMso parse_mso(const std::string& text) {
    const std::vector<std::string> toks = tokenize(text);
    ParsedMso pm;
    bool have_formula = false;
    size_t at = 0;
    while (at < toks.size()) {
        const Sexpr form = read_sexpr(toks, at);
        const std::string& h = head(form);
        if (h == "set") {
            if (form.items.size() < 3 || !form.items[1].is_atom || !form.items[2].is_atom)
                fail(ErrorCode::SchemaError, "set needs a name and a kind");
            SetLabel l;
            l.name = form.items[1].atom;
            l.is_edge_set = form.items[2].atom == "edges";
            if (!l.is_edge_set && form.items[2].atom != "vertices")
                fail(ErrorCode::SchemaError, "set kind must be edges or vertices");
            for (size_t i = 3; i < form.items.size(); ++i) {
                if (l.is_edge_set) {
                    const Sexpr& e = form.items[i];
                    if (e.is_atom || e.items.size() != 2)
                        fail(ErrorCode::SchemaError, "edge entries are id pairs");
                    l.edges.emplace_back(parse_id(e.items[0]), parse_id(e.items[1]));
                } else {
                    l.vertices.push_back(parse_id(form.items[i]));
                }
            }
            pm.labels.push_back(std::move(l));
        } else if (h == "formula") {
            if (form.items.size() != 2) fail(ErrorCode::SchemaError, "formula wraps one body");
            pm.formula = parse_formula(form.items[1]);
            have_formula = true;
        } else {
            fail(ErrorCode::SchemaError, "unknown top-level form " + h);
        }
    }
    if (!have_formula) fail(ErrorCode::SchemaError, "missing (formula ...) form");
    return pm;
}

bool naive_model_check(const FormulaInstance& fi, int cap) {
    Evaluator ev(fi, cap);
    return ev.eval(fi.formula);
}

} // namespace cplan
