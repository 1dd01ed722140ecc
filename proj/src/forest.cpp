#include "specnet/forest.hpp"

#include <algorithm>
#include <set>

namespace specnet {

int TransportAtlas::below(int k, int i) const {
    const AtlasCut& c = cuts.at(static_cast<std::size_t>(k));
    int p = c.position;
    switch (c.kind) {
        case MoveKind::trivalent:
            if (i <= p) return i;
            return i == p + 1 ? -1 : i - 1;
        case MoveKind::hexavalent: return (i == p + 1 || i == p + 2) ? -1 : i;
        case MoveKind::tetravalent: return i == p + 1 ? -1 : i;
    }
    return -1;
}

int TransportAtlas::above(int k, int i) const {
    const AtlasCut& c = cuts.at(static_cast<std::size_t>(k));
    int p = c.position;
    switch (c.kind) {
        case MoveKind::trivalent: return i <= p ? i : i + 1;
        case MoveKind::hexavalent: return (i == p + 1 || i == p + 2) ? -1 : i;
        case MoveKind::tetravalent: return i == p + 1 ? -1 : i;
    }
    return -1;
}

namespace {

SheetPair natural(int n, int g) {
    int r = letter_row(n, g);
    return {r + 1, r + 2};
}

SheetPair swap_rows(SheetPair l, int r) {
    auto s = [r](int x) { return x == r + 1 ? r + 2 : (x == r + 2 ? r + 1 : x); };
    return {s(l.i), s(l.j)};
}

// A label read in the frame left of letter `from`, seen from the frame left of
// letter `to` (to <= from).
SheetPair reframe(const BraidWord& word, int from, int to, SheetPair l) {
    for (int t = from - 1; t >= to; --t) l = swap_rows(l, letter_row(word.strands, word.letters[static_cast<std::size_t>(t)]));
    return l;
}

std::optional<SheetPair> compose_either(const SheetPair& a, const SheetPair& b) {
    if (auto c = compose(a, b)) return c;
    return compose(b, a);
}

std::string chord_at(const BentWeave& bw, int q) {
    int L = static_cast<int>(bw.weave.top().size());
    if (q < L) return bw.chords.beta_chords.at(static_cast<std::size_t>(q));
    return bw.chords.delta_chords.at(static_cast<std::size_t>(q - L));
}

const SolitonClass kH{Monomial{}, 1, 1};

struct RawPiece {
    int flow;
    std::size_t index;
    int row_i, row_j;
};

struct Segment {
    int flow;
    std::size_t start, end;
};

constexpr double kOff = 0.12;

class Sweep {
public:
    Sweep(const BentWeave& bw, const GappedGuard& guard) : bw_(bw), w_(bw.weave), n_(bw.weave.strands()), guard_(guard) {}

    Forest run();

private:
    using Flowline = Forest::Flowline;
    using Joint = Forest::Joint;

    const BentWeave& bw_;
    const Weave& w_;
    int n_;
    GappedGuard guard_;
    Forest f_;
    std::vector<SolitonClass> cur_;
    std::vector<int> depth_;
    std::vector<std::vector<std::vector<RawPiece>>> strip_pieces_;
    std::vector<std::vector<std::vector<RawPiece>>> cut_pieces_;
    std::vector<std::vector<std::vector<SolitonClass>>> cut_diag_;

    double x(int k, int q) const { return WeaveLayout::letter_x(bw_, k, q); }

    int flow(char branch, int vertex, int stage, SheetPair label, SolitonClass cls, int mass, Eigen::Vector2d at, int depth) {
        Flowline fl;
        fl.id = static_cast<int>(f_.flowlines.size());
        fl.branch = branch;
        fl.vertex = vertex;
        fl.stage = stage;
        fl.mass = mass;
        fl.label = label;
        fl.birth_class = cls;
        fl.route.push_back(at);
        f_.flowlines.push_back(fl);
        cur_.push_back(cls);
        depth_.push_back(depth);
        if (depth > guard_.max_rounds)
            throw GappedGuardViolation("forest construction exceeded " + std::to_string(guard_.max_rounds) + " rounds");
        return fl.id;
    }

    std::size_t point(int fl, Eigen::Vector2d p) {
        auto& r = f_.flowlines[static_cast<std::size_t>(fl)].route;
        r.push_back(p);
        return r.size() - 1;
    }

    void cut(int fl, const SolitonClass& factor, Eigen::Vector2d p) {
        if (factor == SolitonClass{}) {
            point(fl, p);
            return;
        }
        Flowline::Event e;
        e.cut = true;
        e.factor = factor;
        e.index = point(fl, p);
        f_.flowlines[static_cast<std::size_t>(fl)].events.push_back(e);
        cur_[static_cast<std::size_t>(fl)] = cur_[static_cast<std::size_t>(fl)] * factor;
    }

    void visit(int fl, int joint, SheetPair label, Eigen::Vector2d p) {
        Flowline::Event e;
        e.vertex = joint;
        e.label = label;
        e.index = point(fl, p);
        f_.flowlines[static_cast<std::size_t>(fl)].events.push_back(e);
    }

    int joint(bool initial, int move, Eigen::Vector2d pos, std::vector<int> parents, int twist) {
        Joint j;
        j.id = static_cast<int>(f_.joints.size());
        j.initial = initial;
        j.move = move;
        j.position = pos;
        j.parents = std::move(parents);
        j.twist = twist;
        f_.joints.push_back(j);
        return j.id;
    }

    // A joint of two flowlines producing a third.
    int create(int move, Eigen::Vector2d pos, int p1, SheetPair l1, int p2, SheetPair l2, SheetPair child_label,
               int twist) {
        int j = joint(false, move, pos, {p1, p2}, twist);
        visit(p1, j, l1, pos);
        visit(p2, j, l2, pos);
        const Flowline& a = f_.flowlines[static_cast<std::size_t>(p1)];
        const Flowline& b = f_.flowlines[static_cast<std::size_t>(p2)];
        SolitonClass cls = cur_[static_cast<std::size_t>(p1)] * cur_[static_cast<std::size_t>(p2)];
        if (twist) cls = cls * kH;
        int c = flow('j', j, std::max(a.stage, b.stage), child_label, cls, a.mass + b.mass, pos,
                     std::max(depth_[static_cast<std::size_t>(p1)], depth_[static_cast<std::size_t>(p2)]) + 1);
        f_.joints[static_cast<std::size_t>(j)].children.push_back(c);
        return c;
    }

    void record_strip(int k, const std::vector<std::vector<int>>& edges) {
        auto& s = strip_pieces_[static_cast<std::size_t>(k)];
        s.assign(edges.size(), {});
        BraidWord word = bw_.strip(k);
        for (std::size_t q = 0; q < edges.size(); ++q) {
            int r = letter_row(n_, word.letters[q]);
            for (int fl : edges[q]) {
                std::size_t idx = point(fl, {x(k, static_cast<int>(q)) - kOff, WeaveLayout::strip_bottom(w_, k)});
                s[q].push_back({fl, idx, r, r + 1});
            }
        }
    }

    void hexavalent(int k, std::vector<std::vector<int>>& edges, int& stage);
    void trivalent(int k, std::vector<std::vector<int>>& edges, int stage);
    void normalize(int raw_count);
    void build_atlas();
};

void Sweep::hexavalent(int k, std::vector<std::vector<int>>& edges, int& stage) {
    (void)stage;
    int p = w_.moves()[static_cast<std::size_t>(k)].position;
    BraidWord upper = bw_.strip(k), lower = bw_.strip(k + 1);
    auto P = static_cast<std::size_t>(p);
    Eigen::Vector2d vp = WeaveLayout::vertex(bw_, k);
    int sgn = letter_row(n_, upper.letters[P]) > letter_row(n_, upper.letters[P + 1]) ? 1 : -1;
    SheetPair la = natural(n_, lower.letters[P]);
    SheetPair lc = reframe(lower, p + 2, p, natural(n_, lower.letters[P + 2]));
    SheetPair lchild = reframe(upper, p + 1, p, natural(n_, upper.letters[P + 1]));
    auto composed = compose_either(la, lc);
    if (!composed || !(*composed == lchild))
        throw ForestError("hexavalent vertex " + std::to_string(k + 1) + ": outer edge labels do not compose");
    std::vector<int> A = edges[P], B = edges[P + 1], C = edges[P + 2];
    for (int b : B) point(b, vp);
    std::vector<int> born;
    int t = 0;
    for (int a : A)
        for (int c : C) {
            Eigen::Vector2d at = vp + Eigen::Vector2d(0, 0.03 * t++);
            born.push_back(create(k, at, a, la, c, lc, lchild, sgn < 0 ? 1 : 0));
        }
    B.insert(B.end(), born.begin(), born.end());
    edges[P] = C;
    edges[P + 1] = B;
    edges[P + 2] = A;
}

void Sweep::trivalent(int k, std::vector<std::vector<int>>& edges, int stage) {
    int p = w_.moves()[static_cast<std::size_t>(k)].position;
    auto P = static_cast<std::size_t>(p);
    BraidWord upper = bw_.strip(k);
    int r = letter_row(n_, upper.letters[P]);
    int v = stage - 1;
    Eigen::Vector2d vp = WeaveLayout::vertex(bw_, k);
    double y = WeaveLayout::move_y(k);

    int jv = joint(true, k, vp, {}, 0);
    SolitonClass uinv{Monomial::variable(static_cast<std::size_t>(v), -1), 1, 0};
    SolitonClass u{Monomial::variable(static_cast<std::size_t>(v), 1), 1, 0};
    SheetPair nat{r + 1, r + 2};
    int fa = flow('a', jv, stage, nat, uinv * kH, 1, vp, 0);
    int fb = flow('b', jv, stage, {r + 2, r + 1}, u, 1, vp, 0);
    int fc = flow('c', jv, stage, nat, uinv * kH, 1, vp, 0);
    f_.joints[static_cast<std::size_t>(jv)].children = {fa, fb, fc};
    for (int fl : edges[P]) point(fl, vp);

    std::vector<std::vector<int>> up(static_cast<std::size_t>(bw_.strip_size(k)));
    for (int q = 0; q < p; ++q) up[static_cast<std::size_t>(q)] = edges[static_cast<std::size_t>(q)];
    up[P] = edges[P];
    up[P].push_back(fa);
    up[P + 1] = {fb};

    std::vector<SolitonClass> D(static_cast<std::size_t>(n_));
    D[static_cast<std::size_t>(r)] = uinv;
    D[static_cast<std::size_t>(r + 1)] = u * kH;
    std::map<std::pair<int, int>, std::vector<int>> N;
    N[{r, r + 1}] = {fc};

    int L = static_cast<int>(upper.size());
    auto& cw = cut_pieces_[static_cast<std::size_t>(k)];
    auto& cd = cut_diag_[static_cast<std::size_t>(k)];
    cw.assign(static_cast<std::size_t>(L + 1), {});
    cd.assign(static_cast<std::size_t>(L + 1), {});
    auto record = [&](int interval) {
        auto& pieces = cw[static_cast<std::size_t>(interval)];
        for (const auto& [ij, fls] : N)
            for (int fl : fls)
                pieces.push_back({fl, f_.flowlines[static_cast<std::size_t>(fl)].route.size() - 1, ij.first, ij.second});
        cd[static_cast<std::size_t>(interval)] = D;
    };
    record(p + 2);

    auto xline = [&](int q) { return (x(k, q) + x(k + 1, q - 1)) / 2; };
    for (int q = p + 2; q < L; ++q) {
        int m = letter_row(n_, upper.letters[static_cast<std::size_t>(q)]);
        double xl = xline(q);
        auto Dm = D[static_cast<std::size_t>(m)], Dm1 = D[static_cast<std::size_t>(m + 1)];
        SolitonClass factor = Dm * Dm1.inverse();
        std::vector<int> xs = edges[static_cast<std::size_t>(q - 1)];
        for (int fl : xs) cut(fl, factor, {xl - kOff, y});
        std::vector<int> absorbed;
        if (auto it = N.find({m, m + 1}); it != N.end()) {
            absorbed = it->second;
            N.erase(it);
        }
        for (int fl : absorbed) point(fl, {xl, y});
        std::vector<int> xp = xs;
        xp.insert(xp.end(), absorbed.begin(), absorbed.end());

        auto NN = N;
        int t = 0;
        auto at = [&]() { return Eigen::Vector2d(xl - kOff, y + 0.03 * ++t); };
        SheetPair lx{m + 1, m + 2};
        for (int i = 0; i < m; ++i) {
            auto it = N.find({i, m});
            if (it == N.end()) continue;
            for (int nu : it->second)
                for (int xi : xs)
                    NN[{i, m + 1}].push_back(create(k, at(), nu, {i + 1, m + 1}, xi, lx, {i + 1, m + 2}, 0));
        }
        for (int j = m + 2; j < n_; ++j) {
            auto it = N.find({m + 1, j});
            if (it == N.end()) continue;
            for (int nu : it->second)
                for (int xi : xp)
                    NN[{m, j}].push_back(create(k, at(), xi, lx, nu, {m + 2, j + 1}, {m + 1, j + 1}, 1));
        }
        auto sw = [m](int a) { return a == m ? m + 1 : (a == m + 1 ? m : a); };
        N.clear();
        for (auto& [ij, fls] : NN)
            if (!fls.empty()) {
                auto& dst = N[{sw(ij.first), sw(ij.second)}];
                dst.insert(dst.end(), fls.begin(), fls.end());
            }
        std::swap(D[static_cast<std::size_t>(m)], D[static_cast<std::size_t>(m + 1)]);
        double xnext = q + 1 < L ? xline(q + 1) : xl + 1;
        for (auto& [ij, fls] : N)
            for (int fl : fls) point(fl, {(xl + xnext) / 2, y + 0.06});
        record(q + 1);
        up[static_cast<std::size_t>(q)] = xp;
    }
    if (!N.empty())
        throw ForestError("trivalent vertex " + std::to_string(k + 1) +
                          ": c-branch reaches right boundary without matching edge");
    edges = up;
}

void Sweep::normalize(int raw_count) {
    auto gens = f_.generators;
    int R = static_cast<int>(gens.size());
    // raw index v belongs to the vertex of scan order v
    std::vector<int> gen_of_raw(static_cast<std::size_t>(R));
    for (int g = 0; g < R; ++g) gen_of_raw[static_cast<std::size_t>(gens[static_cast<std::size_t>(g)].scan_index)] = g;

    std::vector<std::vector<long long>> E(static_cast<std::size_t>(R), std::vector<long long>(static_cast<std::size_t>(R), 0));
    std::vector<int> eps(static_cast<std::size_t>(R), 1);
    for (const auto& j : f_.joints) {
        if (!j.initial) continue;
        const Flowline& b = f_.flowlines[static_cast<std::size_t>(j.children[1])];
        int v = b.stage - 1;
        const SolitonClass& cls = cur_[static_cast<std::size_t>(b.id)];
        for (int t = 0; t < R; ++t) E[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] = cls.exps[static_cast<std::size_t>(t)];
        eps[static_cast<std::size_t>(v)] = cls.folded_sign();
    }
    for (int v = 0; v < R; ++v)
        for (int t = 0; t <= v; ++t)
            if (E[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] != (t == v ? 1 : 0))
                throw ForestError("cycle classes of the b-branches are not unitriangular");
    std::vector<std::vector<long long>> F(static_cast<std::size_t>(R), std::vector<long long>(static_cast<std::size_t>(R), 0));
    for (int v = R - 1; v >= 0; --v)
        for (int w = 0; w < R; ++w) {
            long long s = v == w ? 1 : 0;
            for (int t = v + 1; t < R; ++t) s -= E[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] * F[static_cast<std::size_t>(t)][static_cast<std::size_t>(w)];
            F[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] = s;
        }

    int L0 = static_cast<int>(w_.top().size());
    bool cob = !bw_.bent();
    int width = 0;
    for (const auto& g : gens) width = std::max(width, g.index);
    std::vector<std::string> names;
    for (int i = 0; i < width; ++i) names.push_back("s" + std::to_string(i + 1));
    ChordLabeling bottom;
    if (cob) {
        bottom = label_chords(w_.bottom(), BraidWord{n_, {}}, w_.reading);
        names.resize(static_cast<std::size_t>(L0));
        for (int i = width; i < L0; ++i) names[static_cast<std::size_t>(i)] = "s" + std::to_string(i + 1);
        for (const auto& c : bottom.beta_chords) names.push_back(c);
    }
    f_.network.variables = names;

    auto convert = [&](const SolitonClass& c) {
        std::vector<int> out(names.size(), 0);
        int sign = c.sign;
        for (int w = 0; w < R; ++w) {
            long long e = 0;
            for (int v = 0; v < R; ++v) e += c.exps[static_cast<std::size_t>(v)] * F[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)];
            const auto& g = gens[static_cast<std::size_t>(gen_of_raw[static_cast<std::size_t>(w)])];
            out[static_cast<std::size_t>(g.index - 1)] += static_cast<int>(e);
            if ((e & 1) && eps[static_cast<std::size_t>(w)] < 0) sign = -sign;
        }
        for (int q = R; q < raw_count; ++q) out[static_cast<std::size_t>(L0 + q - R)] += c.exps[static_cast<std::size_t>(q)];
        return SolitonClass{Monomial(out), sign, c.h};
    };
    for (auto& fl : f_.flowlines) {
        fl.birth_class = convert(fl.birth_class);
        for (auto& e : fl.events)
            if (e.cut) e.factor = convert(e.factor);
    }
    for (auto& c : cut_diag_)
        for (auto& d : c)
            for (auto& s : d) s = convert(s);
}

}  // namespace

namespace detail {

struct Materialized {
    SpectralNetwork net;
    std::vector<std::vector<int>> segments;
    std::vector<Segment> spans;
};

}  // namespace detail

namespace {

detail::Materialized materialize(const Forest& f, const std::vector<char>& present, const VariableNames& names) {
    detail::Materialized out;
    SpectralNetwork& net = out.net;
    net.origin = "weave";
    net.variables = names;
    std::vector<int> jmap(f.joints.size(), -1);
    auto on = [&](int fl) { return present[static_cast<std::size_t>(fl)] != 0; };
    for (const auto& j : f.joints) {
        bool here = j.initial ? on(j.children.front())
                              : std::all_of(j.parents.begin(), j.parents.end(), on);
        if (!here) continue;
        NetworkVertex v;
        v.position = j.position;
        v.anchor = j.id;
        v.twist = j.twist;
        const auto& first = f.flowlines[static_cast<std::size_t>(j.children.front())];
        v.stage = first.stage;
        v.kind = j.initial ? VertexKind::initial
                 : on(j.children.front()) ? VertexKind::interaction_creation
                                           : VertexKind::inconsistent;
        jmap[static_cast<std::size_t>(j.id)] = net.add_vertex(v);
    }
    out.segments.assign(f.flowlines.size(), {});
    for (const auto& fl : f.flowlines) {
        if (!on(fl.id)) continue;
        std::size_t start = 0;
        int src = fl.vertex >= 0 ? jmap[static_cast<std::size_t>(fl.vertex)] : -1;
        SheetPair label = fl.label;
        SolitonClass cls = fl.birth_class;
        auto emit = [&](std::size_t end, WallEnd target, SheetPair end_label) {
            Wall w;
            w.label = label;
            w.end_label = end_label;
            w.source = src;
            if (src < 0) w.source_chord = fl.source_chord;
            w.end = target;
            w.flowline = fl.id;
            w.stage = fl.stage;
            w.mass = fl.mass;
            w.route.assign(fl.route.begin() + static_cast<std::ptrdiff_t>(start),
                           fl.route.begin() + static_cast<std::ptrdiff_t>(end) + 1);
            w.start_class = cls;
            double len = static_cast<double>(end - start);
            for (const auto& e : fl.events)
                if (e.cut && e.index > start && e.index <= end) {
                    w.cut_factors.push_back({static_cast<double>(e.index - start) / len, e.factor});
                    cls = cls * e.factor;
                }
            int id = net.add_wall(w);
            out.segments[static_cast<std::size_t>(fl.id)].push_back(id);
            out.spans.push_back({fl.id, start, end});
            return id;
        };
        for (const auto& e : fl.events) {
            if (e.cut) continue;
            int v = jmap[static_cast<std::size_t>(e.vertex)];
            if (v < 0) continue;
            emit(e.index, WallEnd{EndKind::vertex, v, ""}, e.label);
            start = e.index;
            src = v;
            label = e.label;
        }
        emit(fl.route.size() - 1, WallEnd{EndKind::chord, -1, fl.chord}, fl.end_label);
    }
    for (const auto& w : net.walls) {
        if (w.source >= 0) net.vertex(w.source).outgoing.push_back(w.id);
        if (w.end.kind == EndKind::vertex) net.vertex(w.end.vertex).incoming.push_back(w.id);
    }
    for (const auto& j : f.joints) {
        int v = jmap[static_cast<std::size_t>(j.id)];
        if (v < 0 || j.initial || !on(j.children.front())) continue;
        net.vertex(v).created = out.segments[static_cast<std::size_t>(j.children.front())].front();
    }
    return out;
}

std::vector<char> present_in(const Forest& f, const SpectralNetwork& net) {
    std::vector<char> on(f.flowlines.size(), 0);
    for (const auto& w : net.walls) on[static_cast<std::size_t>(w.flowline)] = 1;
    return on;
}

}  // namespace

Forest Sweep::run() {
    f_.weave = bw_;
    f_.generators = cycle_generators(bw_);
    int M = w_.move_count();
    strip_pieces_.assign(static_cast<std::size_t>(M + 1), {});
    cut_pieces_.assign(static_cast<std::size_t>(M), {});
    cut_diag_.assign(static_cast<std::size_t>(M), {});
    int R = static_cast<int>(w_.trivalent_moves().size());
    int raw_count = R;

    std::vector<std::vector<int>> edges(static_cast<std::size_t>(bw_.strip_size(M)));
    if (!bw_.bent()) {
        BraidWord bottom = w_.bottom();
        ChordLabeling names = label_chords(bottom, BraidWord{n_, {}}, w_.reading);
        for (int q = 0; q < static_cast<int>(bottom.size()); ++q) {
            Eigen::Vector2d at{x(M, q) - kOff, WeaveLayout::strip_bottom(w_, M) - 0.3};
            int fl = flow('y', -1, 0, natural(n_, bottom.letters[static_cast<std::size_t>(q)]),
                          {Monomial::variable(static_cast<std::size_t>(R + q)), 1, 0}, 1, at, 0);
            f_.flowlines[static_cast<std::size_t>(fl)].source_chord = names.beta_chords[static_cast<std::size_t>(q)];
            edges[static_cast<std::size_t>(q)].push_back(fl);
        }
        raw_count = R + static_cast<int>(bottom.size());
    }
    record_strip(M, edges);

    int stage = 0;
    for (int k = M - 1; k >= 0; --k) {
        const WeaveMove& mv = w_.moves()[static_cast<std::size_t>(k)];
        for (std::size_t q = 0; q < edges.size(); ++q)
            for (int fl : edges[q]) point(fl, {x(k + 1, static_cast<int>(q)) - kOff, WeaveLayout::strip_top(k + 1)});
        switch (mv.kind) {
            case MoveKind::tetravalent: {
                std::vector<std::vector<int>> up(edges.size());
                for (std::size_t q = 0; q < edges.size(); ++q) up[static_cast<std::size_t>(w_.up(k, static_cast<int>(q)))] = edges[q];
                edges = up;
                break;
            }
            case MoveKind::hexavalent: hexavalent(k, edges, stage); break;
            case MoveKind::trivalent: trivalent(k, edges, ++stage); break;
        }
        record_strip(k, edges);
    }

    BraidWord top = bw_.boundary();
    for (std::size_t q = 0; q < edges.size(); ++q)
        for (int fl : edges[q]) {
            auto& f = f_.flowlines[static_cast<std::size_t>(fl)];
            point(fl, {x(0, static_cast<int>(q)) - kOff, 0.3});
            f.chord = chord_at(bw_, static_cast<int>(q));
            f.end_label = natural(n_, top.letters[q]);
        }

    normalize(raw_count);

    std::vector<char> all(f_.flowlines.size(), 1);
    auto m = materialize(f_, all, f_.network.variables);
    f_.network = m.net;
    f_.segments = m.segments;

    // Atlas: route points become (wall, param) pairs.
    auto locate = [&](int fl, std::size_t idx) {
        const auto& segs = m.segments[static_cast<std::size_t>(fl)];
        for (int w : segs) {
            const auto& s = m.spans[static_cast<std::size_t>(w)];
            if (idx >= s.start && (idx < s.end || (idx == s.end && w == segs.back())))
                return std::pair{w, s.end == s.start ? 0.0 : static_cast<double>(idx - s.start) / static_cast<double>(s.end - s.start)};
        }
        throw ForestError("atlas point outside every wall segment");
    };
    auto convert = [&](const RawPiece& p) {
        auto [w, param] = locate(p.flow, p.index);
        return AtlasPiece{w, param, p.row_i, p.row_j};
    };
    TransportAtlas& A = f_.atlas;
    A.strands = n_;
    A.marked_sign = -1;
    for (int k = 0; k <= M; ++k) {
        AtlasStrip s;
        s.word = bw_.strip(k);
        for (const auto& pieces : strip_pieces_[static_cast<std::size_t>(k)]) {
            s.edge.emplace_back();
            for (const auto& p : pieces) s.edge.back().push_back(convert(p));
        }
        A.strips.push_back(s);
    }
    for (int k = 0; k < M; ++k) {
        AtlasCut c;
        c.kind = w_.moves()[static_cast<std::size_t>(k)].kind;
        c.position = w_.moves()[static_cast<std::size_t>(k)].position;
        for (const auto& pieces : cut_pieces_[static_cast<std::size_t>(k)]) {
            c.walls.emplace_back();
            for (const auto& p : pieces) c.walls.back().push_back(convert(p));
        }
        c.diag = cut_diag_[static_cast<std::size_t>(k)];
        A.cuts.push_back(c);
    }
    return f_;
}

std::array<FlowlineSeed, 3> seed_flowlines(const BentWeave& w, int move) {
    const auto& mv = w.weave.moves().at(static_cast<std::size_t>(move));
    if (mv.kind != MoveKind::trivalent) throw ForestError("flowlines start only at trivalent vertices");
    int p = mv.position;
    int r = letter_row(w.weave.strands(), w.strip(move).letters[static_cast<std::size_t>(p)]);
    return {FlowlineSeed{move, 'a', move, p, {r + 1, r + 2}}, FlowlineSeed{move, 'b', move, p + 1, {r + 2, r + 1}},
            FlowlineSeed{move, 'c', move, p + 2, {r + 1, r + 2}}};
}

Wall propagate(const BentWeave& bw, const FlowlineSeed& seed) {
    const Weave& w = bw.weave;
    int n = w.strands();
    Wall out;
    out.label = seed.label;
    int k = seed.strip, q = seed.letter;
    if (k < 0 || k > w.move_count()) throw ForestError("seed strip out of range");
    BraidWord word = bw.strip(k);
    double y = k < w.move_count() ? WeaveLayout::move_y(k) : WeaveLayout::strip_bottom(w, k);
    if (seed.branch == 'c') {
        int a = seed.label.i - 1, b = seed.label.j - 1;
        out.route.push_back({WeaveLayout::letter_x(bw, k, std::max(q - 1, 0)) + 0.5, y});
        for (;; ++q) {
            if (q >= static_cast<int>(word.size()))
                throw ForestError("c-branch reaches right boundary without matching edge");
            int m = letter_row(n, word.letters[static_cast<std::size_t>(q)]);
            out.route.push_back({WeaveLayout::letter_x(bw, k, q) - kOff, y});
            if (a == m && b == m + 1) break;
            auto sw = [m](int s) { return s == m ? m + 1 : (s == m + 1 ? m : s); };
            a = sw(a);
            b = sw(b);
        }
    } else {
        if (q < 0 || q >= static_cast<int>(word.size())) throw ForestError("seed letter out of range");
        out.route.push_back({WeaveLayout::letter_x(bw, k, q) - kOff, y});
    }
    for (int j = k - 1; j >= 0; --j) {
        q = w.up(j, q);
        out.route.push_back({WeaveLayout::letter_x(bw, j, q) - kOff, WeaveLayout::strip_bottom(w, j)});
    }
    out.route.push_back({WeaveLayout::letter_x(bw, 0, q) - kOff, 0.3});
    out.end = WallEnd{EndKind::chord, -1, chord_at(bw, q)};
    out.end_label = natural(n, bw.boundary().letters[static_cast<std::size_t>(q)]);
    return out;
}

Forest build_forest(const BentWeave& w, const GappedGuard& guard) {
    Sweep s(w, guard);
    return s.run();
}

SpectralNetwork forest_prespectral(const Forest& f, int stage) {
    std::vector<char> on(f.flowlines.size(), 0);
    for (const auto& fl : f.flowlines)
        on[static_cast<std::size_t>(fl.id)] =
            fl.stage < stage || (fl.stage == stage && (fl.branch == 'a' || fl.branch == 'b' || fl.branch == 'c'));
    return materialize(f, on, f.network.variables).net;
}

WallSeeder forest_seeder(const Forest& f) {
    return [&f](SpectralNetwork& net, int vertex, int) {
        int j = net.vertex(vertex).anchor;
        if (j < 0 || j >= static_cast<int>(f.joints.size())) throw ForestError("vertex is not a forest joint");
        auto on = present_in(f, net);
        for (int c : f.joints[static_cast<std::size_t>(j)].children) on[static_cast<std::size_t>(c)] = 1;
        net = materialize(f, on, f.network.variables).net;
    };
}

SpectralNetwork forest_stage(const Forest& f, int stage) {
    return consistent_extension(forest_prespectral(f, stage), forest_seeder(f));
}

}  // namespace specnet
