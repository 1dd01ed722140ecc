#include "specnet/network.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace specnet {

std::optional<SheetPair> compose(const SheetPair& a, const SheetPair& b) {
    if (a.j == b.i && a.i != b.j) return SheetPair{a.i, b.j};
    return std::nullopt;
}

const char* to_string(VertexKind k) {
    switch (k) {
        case VertexKind::initial: return "initial";
        case VertexKind::interaction_creation: return "interaction_creation";
        case VertexKind::interaction_hexavalent: return "interaction_hexavalent";
        case VertexKind::non_interaction: return "non_interaction";
        case VertexKind::inconsistent: return "inconsistent";
    }
    return "?";
}

VertexKind vertex_kind_from_string(const std::string& s) {
    for (auto k : {VertexKind::initial, VertexKind::interaction_creation, VertexKind::interaction_hexavalent,
                   VertexKind::non_interaction, VertexKind::inconsistent})
        if (s == to_string(k)) return k;
    throw NetworkError("unknown vertex kind '" + s + "'");
}

const char* to_string(EndKind k) {
    switch (k) {
        case EndKind::vertex: return "vertex";
        case EndKind::chord: return "chord";
        case EndKind::asymptote: return "asymptote";
        case EndKind::cutoff: return "cutoff";
    }
    return "?";
}

namespace {

bool same_multiset(std::vector<SheetPair> a, std::vector<SheetPair> b) {
    auto key = [](const SheetPair& p) { return std::pair{p.i, p.j}; };
    auto less = [&](const SheetPair& x, const SheetPair& y) { return key(x) < key(y); };
    std::sort(a.begin(), a.end(), less);
    std::sort(b.begin(), b.end(), less);
    return a == b;
}

std::optional<SheetPair> compose_either(const SheetPair& a, const SheetPair& b) {
    if (auto c = compose(a, b)) return c;
    return compose(b, a);
}

}  // namespace

VertexKind classify_vertex(const std::vector<Stub>& stubs) {
    if (stubs.size() < 2 || stubs.size() > 6) throw NetworkError("vertex with " + std::to_string(stubs.size()) + " stubs");
    std::vector<SheetPair> in, out;
    for (const auto& s : stubs) {
        if (!s.label.valid()) throw NetworkError("stub with invalid label " + s.label.to_string());
        (s.incoming ? in : out).push_back(s.label);
    }
    auto unordered = [](const SheetPair& p) { return std::minmax(p.i, p.j); };
    if (in.empty() && out.size() == 3) {
        if (unordered(out[0]) == unordered(out[1]) && unordered(out[1]) == unordered(out[2]))
            return VertexKind::initial;
    }
    if (in.size() == 2 && out.size() == 3) {
        if (auto c = compose_either(in[0], in[1]))
            if (same_multiset(out, {in[0], in[1], *c})) return VertexKind::interaction_creation;
    }
    if (in.size() == 3 && out.size() == 3 && same_multiset(in, out)) return VertexKind::interaction_hexavalent;
    if (in.size() == 2 && out.size() == 2 && same_multiset(in, out)) {
        if (compose_either(in[0], in[1])) return VertexKind::inconsistent;
        return VertexKind::non_interaction;
    }
    std::string desc;
    for (const auto& s : stubs) desc += (s.incoming ? " in" : " out") + s.label.to_string();
    throw NetworkError("no local model matches stubs" + desc);
}

SolitonClass Wall::class_at(double param) const {
    if (!start_class) throw NetworkError("wall " + std::to_string(id) + " carries no soliton class");
    SolitonClass c = *start_class;
    for (const auto& f : cut_factors)
        if (f.param < param) c = c * f.factor;
    return c;
}

int SpectralNetwork::add_vertex(NetworkVertex v) {
    v.id = static_cast<int>(vertices.size());
    vertices.push_back(std::move(v));
    return vertices.back().id;
}

int SpectralNetwork::add_wall(Wall w) {
    w.id = static_cast<int>(walls.size());
    walls.push_back(std::move(w));
    return walls.back().id;
}

std::vector<int> SpectralNetwork::vertices_of_kind(VertexKind k) const {
    std::vector<int> r;
    for (const auto& v : vertices)
        if (v.kind == k) r.push_back(v.id);
    return r;
}

std::vector<Stub> SpectralNetwork::stubs(int v) const {
    std::vector<Stub> s;
    for (int w : vertex(v).incoming) s.push_back({wall(w).end_label, true});
    for (int w : vertex(v).outgoing) s.push_back({wall(w).label, false});
    return s;
}

int SpectralNetwork::continuation(int v, int incoming_wall) const {
    int f = wall(incoming_wall).flowline;
    for (int w : vertex(v).outgoing)
        if (wall(w).flowline == f) return w;
    return -1;
}

namespace {

bool same_point(const Eigen::Vector2d& a, const Eigen::Vector2d& b) { return a == b; }

bool same_wall(const Wall& a, const Wall& b) {
    if (a.id != b.id || !(a.label == b.label) || !(a.end_label == b.end_label) || a.source != b.source || a.source_chord != b.source_chord ||
        a.end.kind != b.end.kind || a.end.vertex != b.end.vertex || a.end.name != b.end.name ||
        a.flowline != b.flowline || a.stage != b.stage || a.mass != b.mass || a.route.size() != b.route.size() ||
        a.start_class != b.start_class || a.cut_factors.size() != b.cut_factors.size() || a.charges != b.charges ||
        a.root_i != b.root_i || a.root_j != b.root_j)
        return false;
    for (std::size_t k = 0; k < a.route.size(); ++k)
        if (!same_point(a.route[k], b.route[k])) return false;
    for (std::size_t k = 0; k < a.cut_factors.size(); ++k)
        if (a.cut_factors[k].param != b.cut_factors[k].param || !(a.cut_factors[k].factor == b.cut_factors[k].factor))
            return false;
    return true;
}

}  // namespace

bool operator==(const SpectralNetwork& a, const SpectralNetwork& b) {
    if (a.origin != b.origin || a.vertices.size() != b.vertices.size() || a.walls.size() != b.walls.size() ||
        a.variables != b.variables || a.cutoff != b.cutoff)
        return false;
    for (std::size_t k = 0; k < a.vertices.size(); ++k) {
        const auto &x = a.vertices[k], &y = b.vertices[k];
        if (x.id != y.id || x.kind != y.kind || !same_point(x.position, y.position) || x.incoming != y.incoming ||
            x.outgoing != y.outgoing || x.created != y.created || x.twist != y.twist || x.anchor != y.anchor ||
            x.stage != y.stage)
            return false;
    }
    for (std::size_t k = 0; k < a.walls.size(); ++k)
        if (!same_wall(a.walls[k], b.walls[k])) return false;
    return true;
}

std::vector<std::string> network_violations(const SpectralNetwork& net) {
    std::vector<std::string> out;
    auto bad = [&](const std::string& s) { out.push_back(s); };
    int nv = static_cast<int>(net.vertices.size()), nw = static_cast<int>(net.walls.size());
    for (const auto& w : net.walls) {
        std::string tag = "wall " + std::to_string(w.id) + ": ";
        if (!w.label.valid() || !w.end_label.valid()) bad(tag + "invalid label");
        if (w.mass < 0) bad(tag + "negative mass");
        if (w.source == -1 && !w.source_chord.empty()) {
        } else if (w.source < 0 || w.source >= nv) {
            bad(tag + "dangling source");
            continue;
        } else {
            const auto& src = net.vertex(w.source).outgoing;
            if (std::find(src.begin(), src.end(), w.id) == src.end()) bad(tag + "source does not list it");
        }
        if (w.end.kind == EndKind::vertex) {
            if (w.end.vertex < 0 || w.end.vertex >= nv) bad(tag + "dangling target");
            else {
                const auto& in = net.vertex(w.end.vertex).incoming;
                if (std::find(in.begin(), in.end(), w.id) == in.end()) bad(tag + "target does not list it");
            }
        }
    }
    for (const auto& v : net.vertices) {
        std::string tag = "vertex " + std::to_string(v.id) + ": ";
        bool dangling = false;
        for (int w : v.incoming) dangling |= w < 0 || w >= nw;
        for (int w : v.outgoing) dangling |= w < 0 || w >= nw;
        if (dangling) {
            bad(tag + "dangling wall id");
            continue;
        }
        VertexKind k;
        try {
            k = classify_vertex(net.stubs(v.id));
        } catch (const NetworkError& e) {
            bad(tag + e.what());
            continue;
        }
        if (k != v.kind) bad(tag + "stored kind " + to_string(v.kind) + " but local model is " + to_string(k));
        if (v.kind == VertexKind::interaction_creation) {
            if (v.created < 0) bad(tag + "creation joint without created wall");
            else {
                auto c = compose_either(net.wall(v.incoming[0]).end_label, net.wall(v.incoming[1]).end_label);
                if (!c || !(*c == net.wall(v.created).label)) bad(tag + "created label does not compose");
            }
            for (int w : v.incoming)
                if (net.continuation(v.id, w) < 0) bad(tag + "incoming flowline does not continue");
        }
        if (v.kind == VertexKind::non_interaction || v.kind == VertexKind::inconsistent)
            for (int w : v.incoming)
                if (net.continuation(v.id, w) < 0) bad(tag + "incoming flowline does not continue");
    }
    return out;
}

std::vector<int> flow_order(const SpectralNetwork& net) {
    std::size_t n = net.walls.size();
    std::vector<std::vector<int>> next(n);
    std::vector<int> indeg(n, 0);
    for (const auto& w : net.walls) {
        if (w.end.kind != EndKind::vertex) continue;
        const auto& v = net.vertex(w.end.vertex);
        for (int o : v.outgoing) {
            const Wall& ow = net.wall(o);
            if (ow.flowline == w.flowline || o == v.created) {
                next[static_cast<std::size_t>(w.id)].push_back(o);
                ++indeg[static_cast<std::size_t>(o)];
            }
        }
    }
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (!indeg[i]) ready.push(static_cast<int>(i));
    std::vector<int> order;
    while (!ready.empty()) {
        int w = ready.top();
        ready.pop();
        order.push_back(w);
        for (int o : next[static_cast<std::size_t>(w)])
            if (!--indeg[static_cast<std::size_t>(o)]) ready.push(o);
    }
    if (order.size() != n) throw NetworkError("network has a directed flow cycle");
    return order;
}

bool is_flow_acyclic(const SpectralNetwork& net) {
    try {
        flow_order(net);
        return true;
    } catch (const NetworkError&) {
        return false;
    }
}

bool is_creative(const SpectralNetwork& net) {
    for (const auto& v : net.vertices)
        if (v.kind == VertexKind::interaction_hexavalent || v.kind == VertexKind::inconsistent) return false;
    return true;
}

SpectralNetwork energy_truncate(const SpectralNetwork& net, double E) {
    SpectralNetwork out;
    out.origin = net.origin;
    out.variables = net.variables;
    out.cutoff = std::min(net.cutoff, E);
    out.warnings = net.warnings;
    std::vector<int> wmap(net.walls.size(), -1), vmap(net.vertices.size(), -1);
    for (const auto& w : net.walls)
        if (w.mass <= E) wmap[static_cast<std::size_t>(w.id)] = 0;
    for (const auto& v : net.vertices) {
        bool keep = false;
        for (int w : v.incoming) keep |= wmap[static_cast<std::size_t>(w)] >= 0;
        for (int w : v.outgoing) keep |= wmap[static_cast<std::size_t>(w)] >= 0;
        if (keep) vmap[static_cast<std::size_t>(v.id)] = static_cast<int>(out.vertices.size()), out.vertices.push_back(v);
    }
    int next = 0;
    for (auto& m : wmap)
        if (m >= 0) m = next++;
    auto remap = [&](std::vector<int>& ids) {
        std::vector<int> r;
        for (int w : ids)
            if (wmap[static_cast<std::size_t>(w)] >= 0) r.push_back(wmap[static_cast<std::size_t>(w)]);
        ids = r;
    };
    for (auto& v : out.vertices) {
        v.id = vmap[static_cast<std::size_t>(v.id)];
        remap(v.incoming);
        remap(v.outgoing);
        if (v.created >= 0) v.created = wmap[static_cast<std::size_t>(v.created)];
        if (v.kind == VertexKind::interaction_creation && v.created < 0) v.kind = VertexKind::inconsistent;
    }
    for (const auto& w : net.walls) {
        if (wmap[static_cast<std::size_t>(w.id)] < 0) continue;
        Wall c = w;
        c.id = wmap[static_cast<std::size_t>(w.id)];
        if (w.source >= 0) c.source = vmap[static_cast<std::size_t>(w.source)];
        if (c.end.kind == EndKind::vertex) {
            c.end.vertex = vmap[static_cast<std::size_t>(w.end.vertex)];
            if (c.end.vertex < 0) c.end = WallEnd{EndKind::cutoff, -1, ""};
        }
        out.walls.push_back(std::move(c));
    }
    return out;
}

namespace {

int find_vertex(const SpectralNetwork& net, int key, bool by_anchor) {
    if (!by_anchor) return key;
    for (const auto& v : net.vertices)
        if (v.anchor == key) return v.id;
    return -1;
}

}  // namespace

SpectralNetwork consistent_extension(SpectralNetwork net, const WallSeeder& seeder, const GappedGuard& guard) {
    double previous_min = -std::numeric_limits<double>::infinity();
    for (int round = 1;; ++round) {
        auto pending = net.vertices_of_kind(VertexKind::inconsistent);
        if (pending.empty()) return net;
        if (round > guard.max_rounds)
            throw GappedGuardViolation("consistent extension exceeded " + std::to_string(guard.max_rounds) + " rounds");
        // Seeders may renumber vertices; anchors, when present, are stable keys.
        bool by_anchor = std::all_of(pending.begin(), pending.end(), [&](int v) { return net.vertex(v).anchor >= 0; });
        std::vector<int> keys;
        for (int v : pending) keys.push_back(by_anchor ? net.vertex(v).anchor : v);
        std::set<int> old_walls;
        for (const auto& v : net.vertices)
            if (v.created >= 0) old_walls.insert(by_anchor ? v.anchor : v.id);
        for (int key : keys) {
            int v = find_vertex(net, key, by_anchor);
            if (v < 0 || net.vertex(v).kind != VertexKind::inconsistent) continue;
            try {
                seeder(net, v, round);
            } catch (const std::exception& e) {
                throw NetworkError("wall seeder failed at vertex " + std::to_string(v) + ": " + e.what());
            }
            v = find_vertex(net, key, by_anchor);
            if (v < 0 || net.vertex(v).kind == VertexKind::inconsistent)
                throw NetworkError("wall seeder left vertex " + std::to_string(key) + " inconsistent");
        }
        double round_min = std::numeric_limits<double>::infinity();
        for (const auto& v : net.vertices)
            if (v.created >= 0 && !old_walls.count(by_anchor ? v.anchor : v.id))
                round_min = std::min(round_min, net.wall(v.created).mass);
        if (round > guard.free_rounds && !(round_min > previous_min + guard.min_growth))
            throw GappedGuardViolation("round " + std::to_string(round) + " did not raise the minimal birth mass");
        previous_min = round_min;
    }
}

SpectralNetwork suppress_non_interaction(const SpectralNetwork& net) {
    auto passes = [&](int v) { return v >= 0 && net.vertex(v).kind == VertexKind::non_interaction; };
    SpectralNetwork out;
    out.origin = net.origin;
    out.variables = net.variables;
    out.cutoff = net.cutoff;
    out.warnings = net.warnings;
    std::vector<int> vmap(net.vertices.size(), -1);
    for (const auto& v : net.vertices)
        if (!passes(v.id)) {
            NetworkVertex c = v;
            c.incoming.clear();
            c.outgoing.clear();
            c.created = -1;
            vmap[static_cast<std::size_t>(v.id)] = out.add_vertex(c);
        }
    std::vector<int> wmap(net.walls.size(), -1);
    for (const auto& w : net.walls) {
        if (passes(w.source)) continue;
        Wall m = w;
        const Wall* cur = &w;
        std::vector<int> chain{w.id};
        while (cur->end.kind == EndKind::vertex && passes(cur->end.vertex)) {
            int nxt = net.continuation(cur->end.vertex, cur->id);
            if (nxt < 0) throw NetworkError("non-interaction vertex without continuation");
            cur = &net.wall(nxt);
            chain.push_back(cur->id);
            m.route.insert(m.route.end(), cur->route.begin() + (cur->route.empty() ? 0 : 1), cur->route.end());
            m.charges.insert(m.charges.end(), cur->charges.begin() + (cur->charges.empty() ? 0 : 1), cur->charges.end());
            m.root_i.insert(m.root_i.end(), cur->root_i.begin() + (cur->root_i.empty() ? 0 : 1), cur->root_i.end());
            m.root_j.insert(m.root_j.end(), cur->root_j.begin() + (cur->root_j.empty() ? 0 : 1), cur->root_j.end());
        }
        if (chain.size() > 1) {
            // cut factor positions are per-segment fractions; re-spread them evenly
            m.cut_factors.clear();
            double n = static_cast<double>(chain.size());
            for (std::size_t k = 0; k < chain.size(); ++k)
                for (auto f : net.wall(chain[k]).cut_factors) {
                    f.param = (static_cast<double>(k) + std::clamp(f.param, 0.0, 1.0)) / n;
                    m.cut_factors.push_back(f);
                }
        }
        m.end = cur->end;
        m.end_label = cur->end_label;
        if (w.source >= 0) m.source = vmap[static_cast<std::size_t>(w.source)];
        int id = out.add_wall(m);
        for (int c : chain) wmap[static_cast<std::size_t>(c)] = id;
    }
    for (auto& w : out.walls) {
        if (w.source >= 0) out.vertex(w.source).outgoing.push_back(w.id);
        if (w.end.kind == EndKind::vertex) {
            w.end.vertex = vmap[static_cast<std::size_t>(w.end.vertex)];
            out.vertex(w.end.vertex).incoming.push_back(w.id);
        }
    }
    for (const auto& v : net.vertices)
        if (!passes(v.id) && v.created >= 0)
            out.vertex(vmap[static_cast<std::size_t>(v.id)]).created = wmap[static_cast<std::size_t>(v.created)];
    return out;
}

namespace {

struct IsoSearch {
    const SpectralNetwork& a;
    const SpectralNetwork& b;
    std::vector<int> vm, wm, wused;

    bool wall_compatible(int x, int y) const {
        const Wall& p = a.wall(x);
        const Wall& q = b.wall(y);
        if ((p.source < 0) != (q.source < 0)) return false;
        if (p.source >= 0 && vm[static_cast<std::size_t>(p.source)] != q.source) return false;
        bool pv = p.end.kind == EndKind::vertex, qv = q.end.kind == EndKind::vertex;
        if (pv != qv) return false;
        if (pv && vm[static_cast<std::size_t>(p.end.vertex)] != q.end.vertex) return false;
        if (p.source < 0) return true;
        const auto& ps = a.vertex(p.source);
        const auto& qs = b.vertex(q.source);
        if ((ps.created == x) != (qs.created == y)) return false;
        return true;
    }

    // With the vertex map fixed, walls are matched greedily per source and
    // then checked for continuation consistency by backtracking.
    bool match_walls(std::size_t k) {
        if (k == a.walls.size()) return continuations_ok();
        for (std::size_t y = 0; y < b.walls.size(); ++y) {
            if (wused[y] || !wall_compatible(static_cast<int>(k), static_cast<int>(y))) continue;
            wm[k] = static_cast<int>(y);
            wused[y] = 1;
            if (match_walls(k + 1)) return true;
            wused[y] = 0;
        }
        return false;
    }

    bool continuations_ok() const {
        for (const auto& v : a.vertices)
            for (int w : v.incoming) {
                int ca = a.continuation(v.id, w);
                int cb = b.continuation(vm[static_cast<std::size_t>(v.id)], wm[static_cast<std::size_t>(w)]);
                if ((ca < 0) != (cb < 0)) return false;
                if (ca >= 0 && wm[static_cast<std::size_t>(ca)] != cb) return false;
            }
        return true;
    }

    bool match_vertices(std::size_t k, std::vector<int>& vused) {
        if (k == a.vertices.size()) return match_walls(0);
        const auto& v = a.vertices[k];
        for (std::size_t y = 0; y < b.vertices.size(); ++y) {
            const auto& u = b.vertices[y];
            if (vused[y] || u.kind != v.kind || u.incoming.size() != v.incoming.size() ||
                u.outgoing.size() != v.outgoing.size())
                continue;
            vm[k] = static_cast<int>(y);
            vused[y] = 1;
            if (match_vertices(k + 1, vused)) return true;
            vused[y] = 0;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const SpectralNetwork& a, const SpectralNetwork& b) {
    if (a.vertices.size() != b.vertices.size() || a.walls.size() != b.walls.size()) return false;
    IsoSearch s{a, b, std::vector<int>(a.vertices.size(), -1), std::vector<int>(a.walls.size(), -1),
                std::vector<int>(b.walls.size(), 0)};
    std::vector<int> vused(b.vertices.size(), 0);
    return s.match_vertices(0, vused);
}

}  // namespace specnet
