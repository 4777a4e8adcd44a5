#include "dexact/graph_iso.hpp"

#include <algorithm>
#include <map>

namespace dexact {

void Graph::add_edge(int a, int b)
{
    if (a == b || has_edge(a, b))
        return;
    adj[a].push_back(b);
    adj[b].push_back(a);
}

bool Graph::has_edge(int a, int b) const { return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end(); }

std::size_t Graph::edge_count() const
{
    std::size_t d = 0;
    for (const auto& l : adj)
        d += l.size();
    return d / 2;
}

void Graph::normalize()
{
    for (auto& l : adj)
        std::sort(l.begin(), l.end());
}

bool is_isomorphism(const Graph& a, const Graph& b, const std::vector<int>& phi)
{
    if (a.size() != b.size() || static_cast<int>(phi.size()) != a.size() || a.edge_count() != b.edge_count())
        return false;
    std::vector<bool> hit(b.size(), false);
    for (int v : phi) {
        if (v < 0 || v >= b.size() || hit[v])
            return false;
        hit[v] = true;
    }
    for (int u = 0; u < a.size(); ++u)
        for (int w : a.adj[u])
            if (!b.has_edge(phi[u], phi[w]))
                return false;
    return true;
}

namespace {

// Colours live on the disjoint union: vertices [0, na) are a, [na, na + nb) are b.
struct Union {
    const Graph& a;
    const Graph& b;
    int na;

    int size() const { return na + b.size(); }
    const std::vector<int>& neighbours(int v, std::vector<int>& scratch) const
    {
        if (v < na)
            return a.adj[v];
        scratch.clear();
        for (int w : b.adj[v - na])
            scratch.push_back(w + na);
        return scratch;
    }
};

/// Refine to the coarsest equitable colouring; false if the two sides disagree.
bool refine(const Union& u, std::vector<int>& colour)
{
    std::vector<int> scratch;
    int classes = 0;
    while (true) {
        std::map<std::pair<int, std::vector<int>>, int> ids;
        std::vector<int> next(u.size());
        for (int v = 0; v < u.size(); ++v) {
            std::vector<int> sig;
            for (int w : u.neighbours(v, scratch))
                sig.push_back(colour[w]);
            std::sort(sig.begin(), sig.end());
            auto key = std::make_pair(colour[v], std::move(sig));
            auto it = ids.find(key);
            if (it == ids.end())
                it = ids.emplace(std::move(key), static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        // ids are assigned in first-seen order; make them canonical by sorting keys
        std::vector<int> rank(ids.size());
        int r = 0;
        for (const auto& [key, id] : ids)
            rank[id] = r++;
        for (auto& c : next)
            c = rank[c];
        colour = std::move(next);
        std::vector<int> count_a(ids.size(), 0), count_b(ids.size(), 0);
        for (int v = 0; v < u.size(); ++v)
            (v < u.na ? count_a : count_b)[colour[v]]++;
        if (count_a != count_b)
            return false;
        if (static_cast<int>(ids.size()) == classes)
            return true;
        classes = static_cast<int>(ids.size());
    }
}

bool search(const Union& u, std::vector<int> colour, std::vector<int>& phi)
{
    if (!refine(u, colour))
        return false;
    // smallest non-singleton class
    std::map<int, int> size;
    for (int v = 0; v < u.na; ++v)
        size[colour[v]]++;
    int target = -1, best = 0;
    for (const auto& [c, s] : size)
        if (s > 1 && (target < 0 || s < best)) {
            target = c;
            best = s;
        }
    if (target < 0) {
        std::map<int, int> in_b;
        for (int v = u.na; v < u.size(); ++v)
            in_b[colour[v]] = v - u.na;
        phi.assign(u.na, -1);
        for (int v = 0; v < u.na; ++v)
            phi[v] = in_b[colour[v]];
        return is_isomorphism(u.a, u.b, phi);
    }
    int pick = -1;
    for (int v = 0; v < u.na && pick < 0; ++v)
        if (colour[v] == target)
            pick = v;
    const int fresh = *std::max_element(colour.begin(), colour.end()) + 1;
    for (int w = u.na; w < u.size(); ++w) {
        if (colour[w] != target)
            continue;
        auto trial = colour;
        trial[pick] = fresh;
        trial[w] = fresh;
        if (search(u, std::move(trial), phi))
            return true;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b)
{
    if (a.size() != b.size() || a.edge_count() != b.edge_count())
        return std::nullopt;
    if (a.size() == 0)
        return std::vector<int>{};
    Union u{a, b, a.size()};
    std::vector<int> colour(u.size(), 0);
    std::vector<int> phi;
    if (search(u, std::move(colour), phi))
        return phi;
    return std::nullopt;
}

} // namespace dexact
