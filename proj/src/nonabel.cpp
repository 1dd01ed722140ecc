#include "specnet/nonabel.hpp"

#include <algorithm>
#include <queue>

namespace specnet {

LocalSystemRank1<LaurentPoly> universal_local_system(std::size_t nvars) {
    LocalSystemRank1<LaurentPoly> V;
    for (std::size_t i = 0; i < nvars; ++i) V.values.push_back(LaurentPoly::variable(static_cast<int>(i)));
    return V;
}

LocalSystemRank1<Rational> random_local_system(std::size_t nvars, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(1, 9), den(1, 9), sgn(0, 1);
    LocalSystemRank1<Rational> V;
    for (std::size_t i = 0; i < nvars; ++i) V.values.push_back(Rational(num(rng) * (sgn(rng) ? 1 : -1)) / Rational(den(rng)));
    return V;
}

std::vector<Step> parse_steps(const std::string& text) {
    std::vector<Step> s;
    for (char c : text) {
        switch (c) {
            case 'L': s.push_back(Step::left); break;
            case 'R': s.push_back(Step::right); break;
            case 'U': s.push_back(Step::up); break;
            case 'D': s.push_back(Step::down); break;
            case ' ': break;
            default: throw TransportError(std::string("unknown step '") + c + "'");
        }
    }
    return s;
}

namespace {

PathSegment free_segment(std::vector<Crossing> c) { return PathSegment{false, std::move(c)}; }

PathSegment short_segment(const AtlasPiece& p, int direction) {
    Crossing c;
    c.kind = Crossing::Kind::wall;
    c.wall = p.wall;
    c.direction = direction;
    c.row_i = p.row_i;
    c.row_j = p.row_j;
    c.param = p.param;
    return PathSegment{true, {c}};
}

Crossing swap_of(const TransportAtlas& a, int k, int q) {
    Crossing c;
    c.kind = Crossing::Kind::sheet_swap;
    int r = letter_row(a.strands, a.strips[static_cast<std::size_t>(k)].word.letters[static_cast<std::size_t>(q)]);
    c.row_i = r;
    c.row_j = r + 1;
    return c;
}

bool has_cut(const AtlasCut& c, int i) {
    return c.kind == MoveKind::trivalent && i < static_cast<int>(c.diag.size()) && !c.diag[static_cast<std::size_t>(i)].empty();
}

std::vector<AtlasPiece> cut_pieces(const AtlasCut& c, int i) {
    auto pieces = c.walls[static_cast<std::size_t>(i)];
    std::stable_sort(pieces.begin(), pieces.end(), [](const AtlasPiece& x, const AtlasPiece& y) { return x.row_i > y.row_i; });
    return pieces;
}

std::optional<Cell> neighbor(const TransportAtlas& a, Cell c, Step s) {
    int M = static_cast<int>(a.strips.size()) - 1;
    switch (s) {
        case Step::left:
            if (c.interval == 0) return std::nullopt;
            return Cell{c.strip, c.interval - 1};
        case Step::right:
            if (c.interval + 1 >= a.intervals(c.strip)) return std::nullopt;
            return Cell{c.strip, c.interval + 1};
        case Step::down: {
            if (c.strip >= M) return std::nullopt;
            int b = a.below(c.strip, c.interval);
            if (b < 0) return std::nullopt;
            return Cell{c.strip + 1, b};
        }
        case Step::up: {
            if (c.strip == 0) return std::nullopt;
            int b = a.above(c.strip - 1, c.interval);
            if (b < 0) return std::nullopt;
            return Cell{c.strip - 1, b};
        }
    }
    return std::nullopt;
}

}  // namespace

NetworkPath atlas_path(const TransportAtlas& a, Cell start, const std::vector<Step>& steps) {
    NetworkPath path;
    path.start = start;
    Cell c = start;
    for (Step s : steps) {
        auto nxt = neighbor(a, c, s);
        if (!nxt) throw TransportError("step leaves the atlas at cell (" + std::to_string(c.strip) + "," + std::to_string(c.interval) + ")");
        const auto& strip = a.strips[static_cast<std::size_t>(c.strip)];
        switch (s) {
            case Step::right: {
                int q = c.interval;
                for (const auto& p : strip.edge[static_cast<std::size_t>(q)]) path.segments.push_back(short_segment(p, 1));
                path.segments.push_back(free_segment({swap_of(a, c.strip, q)}));
                break;
            }
            case Step::left: {
                int q = c.interval - 1;
                path.segments.push_back(free_segment({swap_of(a, c.strip, q)}));
                const auto& e = strip.edge[static_cast<std::size_t>(q)];
                for (auto it = e.rbegin(); it != e.rend(); ++it) path.segments.push_back(short_segment(*it, -1));
                break;
            }
            case Step::down: {
                const AtlasCut& cut = a.cuts[static_cast<std::size_t>(c.strip)];
                if (has_cut(cut, c.interval)) {
                    for (const auto& p : cut_pieces(cut, c.interval)) path.segments.push_back(short_segment(p, 1));
                    Crossing d;
                    d.kind = Crossing::Kind::dual_cut;
                    d.diag = cut.diag[static_cast<std::size_t>(c.interval)];
                    path.segments.push_back(free_segment({d}));
                }
                break;
            }
            case Step::up: {
                const AtlasCut& cut = a.cuts[static_cast<std::size_t>(c.strip - 1)];
                if (has_cut(cut, nxt->interval)) {
                    Crossing d;
                    d.kind = Crossing::Kind::dual_cut;
                    d.direction = -1;
                    d.diag = cut.diag[static_cast<std::size_t>(nxt->interval)];
                    path.segments.push_back(free_segment({d}));
                    auto pieces = cut_pieces(cut, nxt->interval);
                    for (auto it = pieces.rbegin(); it != pieces.rend(); ++it) path.segments.push_back(short_segment(*it, -1));
                }
                break;
            }
        }
        c = *nxt;
    }
    path.end = c;
    return path;
}

std::vector<NetworkPath> branch_point_loops(const TransportAtlas& a) {
    std::vector<NetworkPath> r;
    for (int k = 0; k < static_cast<int>(a.cuts.size()); ++k) {
        const auto& c = a.cuts[static_cast<std::size_t>(k)];
        if (c.kind != MoveKind::trivalent) continue;
        r.push_back(atlas_path(a, {k, c.position}, parse_steps("RRDLU")));
    }
    return r;
}

std::vector<NetworkPath> joint_loops(const TransportAtlas& a) {
    std::vector<NetworkPath> r;
    for (int k = 0; k < static_cast<int>(a.cuts.size()); ++k) {
        const auto& c = a.cuts[static_cast<std::size_t>(k)];
        int p = c.position;
        switch (c.kind) {
            case MoveKind::trivalent:
                for (int q = p + 2; q + 1 < a.intervals(k); ++q) r.push_back(atlas_path(a, {k, q}, parse_steps("RDLU")));
                break;
            case MoveKind::hexavalent: r.push_back(atlas_path(a, {k, p}, parse_steps("RRRDLLLU"))); break;
            case MoveKind::tetravalent: r.push_back(atlas_path(a, {k, p}, parse_steps("RRDLLU"))); break;
        }
    }
    return r;
}

std::vector<std::pair<NetworkPath, NetworkPath>> homotopic_pairs(const TransportAtlas& a, int count,
                                                                 std::mt19937_64& rng) {
    std::vector<Cell> cells;
    for (int k = 0; k < static_cast<int>(a.strips.size()); ++k)
        for (int i = 0; i < a.intervals(k); ++i) cells.push_back({k, i});
    auto shortest = [&](Cell from, Cell to) {
        std::map<std::pair<int, int>, std::pair<Cell, Step>> prev;
        std::queue<Cell> q;
        q.push(from);
        prev[{from.strip, from.interval}] = {from, Step::left};
        while (!q.empty()) {
            Cell c = q.front();
            q.pop();
            if (c == to) break;
            for (Step s : {Step::right, Step::down, Step::left, Step::up}) {
                auto n = neighbor(a, c, s);
                if (!n || prev.count({n->strip, n->interval})) continue;
                prev[{n->strip, n->interval}] = {c, s};
                q.push(*n);
            }
        }
        std::vector<Step> steps;
        for (Cell c = to; !(c == from);) {
            auto [p, s] = prev.at({c.strip, c.interval});
            steps.push_back(s);
            c = p;
        }
        std::reverse(steps.begin(), steps.end());
        return steps;
    };
    std::vector<std::pair<NetworkPath, NetworkPath>> out;
    std::uniform_int_distribution<std::size_t> pick(0, cells.size() - 1);
    std::uniform_int_distribution<int> len(4, 40), dir(0, 3);
    const Step all[4] = {Step::left, Step::right, Step::up, Step::down};
    while (static_cast<int>(out.size()) < count) {
        Cell start = cells[pick(rng)];
        std::vector<Step> walk;
        Cell c = start;
        int L = len(rng);
        for (int t = 0; t < L; ++t) {
            Step s = all[dir(rng)];
            if (auto n = neighbor(a, c, s)) {
                walk.push_back(s);
                c = *n;
            }
        }
        out.emplace_back(atlas_path(a, start, walk), atlas_path(a, start, shortest(start, c)));
    }
    return out;
}

Augmentation augmentation(const Forest& f) {
    const TransportAtlas& a = f.atlas;
    const SpectralNetwork& net = f.network;
    int n = a.strands;
    if (!f.weave.bent()) throw TransportError("augmentation needs a filling weave; use the chord map for cobordisms");
    auto V = universal_local_system(net.variables.size());
    Augmentation out;
    out.variables = net.variables;
    out.chords = f.weave.chords.all();
    const auto& top = a.strips.front();
    int L0 = static_cast<int>(f.weave.weave.top().size());
    for (int q = 0; q < static_cast<int>(top.word.size()); ++q) {
        Matrix<LaurentPoly> H = transport_path(atlas_path(a, {0, q}, {Step::right}), V, net, n);
        int r = letter_row(n, top.word.letters[static_cast<std::size_t>(q)]);
        // H = (I + x E_{r,r+1}) * P, and P swaps columns r, r+1
        LaurentPoly x = H(r, r);
        std::string chord = q < L0 ? f.weave.chords.beta_chords[static_cast<std::size_t>(q)]
                                   : f.weave.chords.delta_chords[static_cast<std::size_t>(q - L0)];
        out.values[chord] = x;
    }
    std::vector<Step> down(a.strips.size() - 1, Step::down);
    Cell right{0, a.intervals(0) - 1};
    Matrix<LaurentPoly> D = transport_path(atlas_path(a, right, down), V, net, n);
    for (int k = 1; k <= n; ++k) out.values["t" + std::to_string(k)] = LaurentPoly(a.marked_sign) * D(n - k, n - k);
    return out;
}

Augmentation chord_map(const Forest& f) {
    Augmentation out;
    out.variables = f.network.variables;
    out.chords = f.weave.chords.all();
    out.chords.erase(std::remove_if(out.chords.begin(), out.chords.end(), [](const std::string& c) { return c[0] == 't'; }),
                     out.chords.end());
    BpsTable table = bps_indices(f.network);
    for (const auto& c : out.chords) out.values[c] = chord_value(f.network, table, c);
    return out;
}

}  // namespace specnet
