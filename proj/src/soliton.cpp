#include "specnet/soliton.hpp"

#include <functional>

namespace specnet {

std::vector<int> D4Tree::leaves() const {
    std::vector<int> r;
    for (const auto& n : nodes)
        if (n.children.empty()) r.push_back(n.wall);
    return r;
}

namespace {

using Subtree = std::vector<D4Tree::Node>; // node 0 is the subtree root

// Shifts the node indices of `t` by `offset`.
Subtree shifted(Subtree t, int offset) {
    for (auto& n : t)
        for (auto& c : n.children) c += offset;
    return t;
}

class TreeSearch {
public:
    explicit TreeSearch(const SpectralNetwork& net) : net_(net) {}

    std::vector<Subtree> options(int wall) {
        if (auto it = memo_.find(wall); it != memo_.end()) return it->second;
        const Wall& w = net_.wall(wall);
        std::vector<Subtree> out;
        auto leaf = [&] { out.push_back({D4Tree::Node{wall, {}, 0}}); };
        auto chain = [&](int in) {
            for (auto& sub : options(in)) {
                Subtree t{D4Tree::Node{wall, {1}, 0}};
                auto s = shifted(sub, 1);
                t.insert(t.end(), s.begin(), s.end());
                out.push_back(std::move(t));
            }
        };
        auto pair = [&](int p1, int p2, int twist) {
            auto o1 = options(p1), o2 = options(p2);
            for (const auto& a : o1)
                for (const auto& b : o2) {
                    int n1 = static_cast<int>(a.size());
                    Subtree t{D4Tree::Node{wall, {1, 1 + n1}, twist}};
                    auto sa = shifted(a, 1), sb = shifted(b, 1 + n1);
                    t.insert(t.end(), sa.begin(), sa.end());
                    t.insert(t.end(), sb.begin(), sb.end());
                    out.push_back(std::move(t));
                }
        };
        if (w.source < 0) {
            leaf();
        } else {
            const NetworkVertex& v = net_.vertex(w.source);
            switch (v.kind) {
                case VertexKind::initial: leaf(); break;
                case VertexKind::interaction_creation:
                    if (v.created == wall) pair(v.incoming.at(0), v.incoming.at(1), v.twist);
                    else chain(same_label_incoming(v, w));
                    break;
                case VertexKind::interaction_hexavalent: {
                    for (std::size_t a = 0; a < v.incoming.size(); ++a)
                        for (std::size_t b = 0; b < v.incoming.size(); ++b) {
                            if (a == b) continue;
                            auto c = compose(net_.wall(v.incoming[a]).end_label, net_.wall(v.incoming[b]).end_label);
                            if (c && *c == w.label) pair(v.incoming[a], v.incoming[b], v.twist);
                        }
                    chain(same_label_incoming(v, w));
                    break;
                }
                case VertexKind::non_interaction:
                case VertexKind::inconsistent: chain(same_label_incoming(v, w)); break;
            }
        }
        memo_[wall] = out;
        return out;
    }

private:
    int same_label_incoming(const NetworkVertex& v, const Wall& w) const {
        for (int in : v.incoming)
            if (net_.wall(in).flowline == w.flowline && w.flowline >= 0) return in;
        for (int in : v.incoming)
            if (net_.wall(in).end_label == w.label) return in;
        throw SolitonError("vertex " + std::to_string(v.id) + " has no incoming wall continuing wall " +
                           std::to_string(w.id));
    }

    const SpectralNetwork& net_;
    std::map<int, std::vector<Subtree>> memo_;
};

SolitonClass cuts_before(const Wall& w, double param) {
    SolitonClass c;
    for (const auto& f : w.cut_factors)
        if (f.param < param) c = c * f.factor;
    return c;
}

BpsTable::Key key_of(const SolitonClass& c) { return {c.exps.exponents(), c.sign}; }

}  // namespace

std::vector<D4Tree> extract_d4_trees(const SpectralNetwork& net, int wall, double param) {
    if (!is_flow_acyclic(net)) throw SolitonError("network is not flow-acyclic");
    if (wall < 0 || wall >= static_cast<int>(net.walls.size())) throw SolitonError("no wall " + std::to_string(wall));
    TreeSearch s(net);
    std::vector<D4Tree> out;
    for (auto& nodes : s.options(wall)) {
        D4Tree t;
        t.nodes = std::move(nodes);
        t.root_wall = wall;
        t.root_param = param;
        out.push_back(std::move(t));
    }
    return out;
}

SolitonClass soliton_class(const SpectralNetwork& net, const D4Tree& tree) {
    if (tree.nodes.empty()) return {};
    std::function<SolitonClass(int, double)> at_end = [&](int node, double param) {
        const auto& n = tree.nodes[static_cast<std::size_t>(node)];
        const Wall& w = net.wall(n.wall);
        SolitonClass start;
        if (n.children.empty()) {
            if (!w.start_class) throw SolitonError("tree leaf wall " + std::to_string(w.id) + " carries no class");
            start = *w.start_class;
        } else {
            for (int c : n.children) start = start * at_end(c, 2.0);
            if (n.twist) start = start * SolitonClass{Monomial{}, 1, 1};
        }
        return start * cuts_before(w, param);
    };
    return at_end(0, tree.root_param);
}

long long BpsTable::mu(int wall, const SolitonClass& cls) const {
    auto it = table_.find(wall);
    if (it == table_.end()) return 0;
    auto e = it->second.find(key_of(cls));
    if (e == it->second.end()) return 0;
    return cls.h ? -e->second : e->second;
}

void BpsTable::add(int wall, const SolitonClass& cls, long long m) {
    auto& t = table_[wall];
    auto k = key_of(cls);
    long long& slot = t[k];
    slot += cls.h ? -m : m;
    if (slot == 0) t.erase(k);
}

std::vector<std::pair<SolitonClass, long long>> BpsTable::entries(int wall) const {
    std::vector<std::pair<SolitonClass, long long>> r;
    auto it = table_.find(wall);
    if (it == table_.end()) return r;
    for (const auto& [k, m] : it->second) r.push_back({SolitonClass{Monomial(k.first), k.second, 0}, m});
    return r;
}

std::vector<std::pair<SolitonClass, long long>> BpsTable::entries_at(const Wall& w, double param) const {
    SolitonClass f = cuts_before(w, param);
    auto r = entries(w.id);
    for (auto& [c, m] : r) {
        c = c * f;
        if (c.h) {
            c.h = 0;
            m = -m;
        }
    }
    return r;
}

std::vector<int> BpsTable::walls() const {
    std::vector<int> r;
    for (const auto& [w, t] : table_)
        if (!t.empty()) r.push_back(w);
    return r;
}

BpsTable bps_indices(const SpectralNetwork& net) {
    if (!net.vertices_of_kind(VertexKind::inconsistent).empty())
        throw SolitonError("BPS indices are undefined at inconsistent vertices");
    BpsTable t;
    auto carry = [&](int from, int to) {
        for (const auto& [c, m] : t.entries_at(net.wall(from), 2.0)) t.add(to, c, m);
    };
    for (int id : flow_order(net)) {
        const Wall& w = net.wall(id);
        if (w.source < 0) {
            if (!w.start_class) throw SolitonError("boundary wall " + std::to_string(id) + " carries no class");
            t.add(id, *w.start_class, 1);
            continue;
        }
        const NetworkVertex& v = net.vertex(w.source);
        if (v.kind == VertexKind::initial) {
            if (!w.start_class) throw SolitonError("initial wall " + std::to_string(id) + " carries no class");
            t.add(id, *w.start_class, 1);
            continue;
        }
        for (int in : v.incoming)
            if (net.wall(in).flowline == w.flowline && w.flowline >= 0) carry(in, id);
        bool creates = v.created == id || (v.kind == VertexKind::interaction_hexavalent);
        if (!creates) continue;
        for (std::size_t a = 0; a < v.incoming.size(); ++a)
            for (std::size_t b = 0; b < v.incoming.size(); ++b) {
                if (a == b) continue;
                const Wall& wa = net.wall(v.incoming[a]);
                const Wall& wb = net.wall(v.incoming[b]);
                auto c = compose(wa.end_label, wb.end_label);
                if (!c || !(*c == w.label)) continue;
                for (const auto& [ca, ma] : t.entries_at(wa, 2.0))
                    for (const auto& [cb, mb] : t.entries_at(wb, 2.0)) {
                        SolitonClass cls = ca * cb;
                        if (v.twist) cls = cls * SolitonClass{Monomial{}, 1, 1};
                        t.add(id, cls, ma * mb);
                    }
            }
    }
    return t;
}

BpsTable bps_by_enumeration(const SpectralNetwork& net) {
    BpsTable t;
    for (const auto& w : net.walls)
        for (const auto& tree : extract_d4_trees(net, w.id, 0.0)) t.add(w.id, soliton_class(net, tree), 1);
    return t;
}

LaurentPoly chord_value(const SpectralNetwork& net, const BpsTable& table, const std::string& chord) {
    LaurentPoly sum;
    for (const auto& w : net.walls) {
        if (w.end.kind != EndKind::chord || w.end.name != chord) continue;
        for (const auto& [c, m] : table.entries_at(w, 2.0)) sum = sum + LaurentPoly::term(c.exps, static_cast<int>(m) * c.sign);
    }
    return sum;
}

}  // namespace specnet
