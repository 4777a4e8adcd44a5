#include "dexact/io.hpp"

#include "dexact/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace dexact {

Interval parse_interval(const std::string& text)
{
    std::string digits;
    for (char c : text)
        digits += std::isdigit(static_cast<unsigned char>(c)) ? c : ' ';
    std::istringstream in(digits);
    int lo = 0, hi = 0;
    std::string rest;
    if (!(in >> lo))
        throw QuiverError("cannot read an interval from '" + text + "'");
    if (!(in >> hi))
        hi = lo; // a single vertex names the simple module
    if (in >> rest)
        throw QuiverError("too many numbers in interval '" + text + "'");
    if (lo > hi)
        throw QuiverError("interval '" + text + "' has lo > hi");
    return Interval{lo, hi};
}

ModuleSum parse_module(const std::string& text)
{
    std::vector<Interval> parts;
    std::string token;
    auto flush = [&] {
        if (token.find_first_of("0123456789") != std::string::npos)
            parts.push_back(parse_interval(token));
        token.clear();
    };
    for (char c : text) {
        if (c == '+' || c == ';' || c == ' ')
            flush();
        else
            token += c;
    }
    flush();
    if (parts.empty())
        throw QuiverError("empty module '" + text + "'");
    return ModuleSum(std::move(parts));
}

Json to_json(const TypeAQuiver& q) { return Json{{"n", q.n()}, {"orientation", q.orientation()}}; }

Json to_json(const Interval& m) { return Json::array({m.lo, m.hi}); }

Json to_json(const ModuleSum& m)
{
    Json out = Json::array();
    for (const auto& s : m.summands())
        out.push_back(to_json(s));
    return out;
}

Json to_json(const SesClass& s)
{
    return Json{{"sub", to_json(s.sub)}, {"middle", to_json(s.middle)}, {"quot", to_json(s.quot)},
                {"kind", ses_kind_name(s.kind)}};
}

Json to_json(const PairClass& c)
{
    Json out{{"class", pair_class_name(c)}};
    if (auto* r = std::get_if<RectangularNonDegenerate>(&c)) {
        out["e1"] = to_json(r->e1);
        out["e2"] = to_json(r->e2);
    } else if (auto* l = std::get_if<LowerDeleted>(&c)) {
        out["e"] = to_json(l->e);
    } else if (auto* u = std::get_if<UpperDeleted>(&c)) {
        out["e"] = to_json(u->e);
    }
    return out;
}

Json to_json(const ResolutionE& r)
{
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back(Json{{"sub", to_json(s.sub)}, {"middle", to_json(s.middle)}, {"quot", to_json(s.quot)},
                             {"augmented", s.augmented}});
    return Json{{"target", to_json(r.target)}, {"length", r.length}, {"steps", steps}};
}

namespace {

Json interval_list(const std::vector<Interval>& v)
{
    Json out = Json::array();
    for (const auto& m : v)
        out.push_back(to_json(m));
    return out;
}

std::string node_id(const Interval& m) { return "m" + std::to_string(m.lo) + "_" + std::to_string(m.hi); }

std::string quote(const std::string& s)
{
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace

Json to_json(const AuslanderReport& r)
{
    Json resolutions = Json::array();
    for (const auto& res : r.resolutions)
        if (res.length > 0)
            resolutions.push_back(to_json(res));
    Json witnesses = Json::array();
    for (const auto& w : r.dominant.witnesses) {
        Json j{{"projective", to_json(w.projective)}, {"trivial", w.trivial}, {"ok", w.ok}};
        if (w.ses)
            j["ses"] = to_json(*w.ses);
        witnesses.push_back(j);
    }
    return Json{{"method", r.method},
                {"relative_projectives", interval_list(r.relative_projectives)},
                {"relative_injectives", interval_list(r.relative_injectives)},
                {"relative_proj_injectives", interval_list(r.relative_proj_injectives)},
                {"global_dim", r.global_dim},
                {"dominant_dim_ok", r.dominant_dim_ok},
                {"is_0_auslander", r.is_0_auslander},
                {"resolutions", resolutions},
                {"dominant_witnesses", witnesses}};
}

Json to_json(const CriterionResult& r)
{
    return Json{{"id", r.id},         {"title", r.title},   {"passed", r.passed},          {"skipped", r.skipped},
                {"cases", r.cases},   {"detail", r.detail}, {"seconds", r.seconds}};
}

Json to_json(const ExampleReport& r)
{
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"example", r.example}, {"passed", r.passed()}, {"checks", checks}};
}

Json grid_json(const ArGrid& g)
{
    const auto& q = g.quiver();
    Json modules = Json::array();
    for (const auto& m : g.modules()) {
        auto p = g.position(m);
        auto t = g.tau(m);
        modules.push_back(Json{{"interval", to_json(m)},
                               {"name", display_name(q, m)},
                               {"x", p.x},
                               {"y", p.y},
                               {"projective", is_projective(q, m)},
                               {"injective", is_injective(q, m)},
                               {"tau", t ? to_json(*t) : Json()}});
    }
    Json arrows = Json::array();
    for (const auto& [a, b] : g.arrows())
        arrows.push_back(Json::array({to_json(a), to_json(b)}));
    Json rows = Json::array();
    for (int y = 1; y <= g.n(); ++y)
        rows.push_back(interval_list(g.row(y)));
    return Json{{"quiver", to_json(q)}, {"width", g.width()}, {"modules", modules}, {"arrows", arrows}, {"rows", rows}};
}

Json mar_json(const ConflictGraph& g, const std::vector<ModuleSum>& mars)
{
    Json list = Json::array();
    for (const auto& m : mars)
        list.push_back(to_json(m));
    const int n = g.grid().n();
    const bool sizes = std::all_of(mars.begin(), mars.end(),
                                   [&](const ModuleSum& m) { return static_cast<int>(m.size()) == 2 * n - 1; });
    Json edges = Json::array();
    for (const auto& [a, b] : g.edges())
        edges.push_back(Json::array({to_json(a), to_json(b)}));
    return Json{{"quiver", to_json(g.grid().quiver())},
                {"count", mars.size()},
                {"summands_each", 2 * n - 1},
                {"all_sizes_ok", sizes},
                {"conflict_edges", edges},
                {"modules", list}};
}

Json poset_json(const MarPoset& p)
{
    Json elements = Json::array();
    for (const auto& m : p.elements)
        elements.push_back(to_json(m));
    Json covers = Json::array();
    for (const auto& c : p.hasse_edges)
        covers.push_back(Json{{"lower", c.lower},
                              {"upper", c.upper},
                              {"removed", to_json(c.removed)},
                              {"added", to_json(c.added)},
                              {"exchange", to_json(c.exchange)}});
    Json out{{"elements", elements},
             {"covers", covers},
             {"minimum", p.minimum},
             {"maximum", p.maximum},
             {"acyclic", p.acyclic},
             {"is_lattice", p.is_lattice},
             {"covers_are_minimal", p.covers_are_minimal},
             {"minimum_has_projectives", p.minimum_has_projectives},
             {"maximum_has_injectives", p.maximum_has_injectives}};
    if (p.lattice_failure)
        out["lattice_failure"] = Json::array({p.lattice_failure->first, p.lattice_failure->second});
    return out;
}

Json flip_graph_json(const FlipGraph& f)
{
    Json tris = Json::array();
    for (const auto& t : f.triangulations) {
        Json d = Json::array();
        for (const auto& [i, j] : t.diagonals)
            d.push_back(Json::array({i, j}));
        tris.push_back(d);
    }
    Json edges = Json::array();
    for (int u = 0; u < f.graph.size(); ++u)
        for (int w : f.graph.adj[u])
            if (u < w)
                edges.push_back(Json::array({u, w}));
    return Json{{"polygon", f.m}, {"triangulations", tris}, {"flips", edges}};
}

std::string grid_dot(const ArGrid& g)
{
    const auto& q = g.quiver();
    std::ostringstream out;
    out << "digraph ar_quiver {\n  label=" << quote("AR quiver of " + q.orientation()) << ";\n"
        << "  node [shape=box, fontsize=10];\n";
    for (const auto& m : g.modules()) {
        auto p = g.position(m);
        out << "  " << node_id(m) << " [label=" << quote(display_name(q, m) + "\\n" + m.str()) << ", pos=\""
            << p.x * 72 << "," << p.y * 72 << "!\"";
        if (g.in_boundary_rows(m))
            out << ", style=filled, fillcolor=lightblue";
        out << "];\n";
    }
    for (const auto& [a, b] : g.arrows())
        out << "  " << node_id(a) << " -> " << node_id(b) << ";\n";
    for (const auto& m : g.modules())
        if (auto t = g.tau(m))
            out << "  " << node_id(m) << " -> " << node_id(*t) << " [style=dashed, constraint=false];\n";
    out << "}\n";
    return out.str();
}

std::string hasse_dot(const MarPoset& p)
{
    std::ostringstream out;
    out << "digraph mar_poset {\n  rankdir=BT;\n  node [shape=box, fontsize=9];\n";
    for (std::size_t k = 0; k < p.elements.size(); ++k) {
        out << "  t" << k << " [label=" << quote(p.elements[k].str());
        if (static_cast<int>(k) == p.minimum || static_cast<int>(k) == p.maximum)
            out << ", style=bold";
        out << "];\n";
    }
    for (const auto& c : p.hasse_edges)
        out << "  t" << c.lower << " -> t" << c.upper << " [label=" << quote(c.removed.str() + " -> " + c.added.str())
            << "];\n";
    out << "}\n";
    return out.str();
}

std::string flip_graph_dot(const FlipGraph& f)
{
    std::ostringstream out;
    out << "graph flips {\n  node [shape=box, fontsize=9];\n";
    for (std::size_t k = 0; k < f.triangulations.size(); ++k) {
        std::string label;
        for (const auto& [i, j] : f.triangulations[k].diagonals)
            label += (label.empty() ? "" : " ") + std::to_string(i) + "-" + std::to_string(j);
        out << "  d" << k << " [label=" << quote(label) << "];\n";
    }
    for (int u = 0; u < f.graph.size(); ++u)
        for (int w : f.graph.adj[u])
            if (u < w)
                out << "  d" << u << " -- d" << w << ";\n";
    out << "}\n";
    return out.str();
}

std::string ses_text(const SesClass& s)
{
    return "0 -> " + s.sub.str() + " -> " + s.middle.str() + " -> " + s.quot.str() + " -> 0 (" + ses_kind_name(s.kind)
           + ")";
}

std::string grid_text(const ArGrid& g)
{
    std::size_t cell = 0;
    for (const auto& m : g.modules())
        cell = std::max(cell, m.str().size());
    cell += 1;
    std::ostringstream out;
    for (int y = g.n(); y >= 1; --y) {
        std::string line;
        for (int x = 0; x < g.width(); ++x) {
            auto m = g.at(x, y);
            std::string s = m ? m->str() : "";
            s.resize(cell, ' ');
            line += s;
        }
        while (!line.empty() && line.back() == ' ')
            line.pop_back();
        out << line << "\n";
    }
    return out.str();
}

} // namespace dexact
