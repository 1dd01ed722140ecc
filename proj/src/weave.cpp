#include "specnet/weave.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace specnet {

const char* to_string(MoveKind k) {
    switch (k) {
        case MoveKind::trivalent: return "trivalent";
        case MoveKind::hexavalent: return "hexavalent";
        case MoveKind::tetravalent: return "tetravalent";
    }
    return "?";
}

namespace {

int width(MoveKind k) {
    switch (k) {
        case MoveKind::trivalent: return 2;
        case MoveKind::hexavalent: return 3;
        case MoveKind::tetravalent: return 2;
    }
    return 0;
}

BraidWord apply_move(const BraidWord& up, const WeaveMove& m, int index) {
    int p = m.position;
    if (p < 0 || p + width(m.kind) > static_cast<int>(up.size()))
        throw WeaveError("move " + std::to_string(index + 1) + " (" + to_string(m.kind) + " at " +
                         std::to_string(p + 1) + "): position out of range for a slice of length " +
                         std::to_string(up.size()));
    BraidWord low = up;
    auto& L = low.letters;
    auto P = static_cast<std::size_t>(p);
    switch (m.kind) {
        case MoveKind::trivalent: L.erase(L.begin() + p + 1); break;
        case MoveKind::hexavalent: {
            int a = up.letters[P], b = up.letters[P + 1];
            L[P] = b;
            L[P + 1] = a;
            L[P + 2] = b;
            break;
        }
        case MoveKind::tetravalent: std::swap(L[P], L[P + 1]); break;
    }
    return low;
}

}  // namespace

Weave::Weave(BraidWord top, std::vector<WeaveMove> moves) : moves_(std::move(moves)) {
    slices_.push_back(std::move(top));
    for (std::size_t k = 0; k < moves_.size(); ++k)
        slices_.push_back(apply_move(slices_.back(), moves_[k], static_cast<int>(k)));
}

std::vector<int> Weave::trivalent_moves() const {
    std::vector<int> r;
    for (int k = 0; k < move_count(); ++k)
        if (moves_[static_cast<std::size_t>(k)].kind == MoveKind::trivalent) r.push_back(k);
    return r;
}

Passage Weave::down(int k, int q) const {
    const WeaveMove& m = moves_.at(static_cast<std::size_t>(k));
    int p = m.position;
    switch (m.kind) {
        case MoveKind::trivalent:
            if (q < p) return {Passage::straight, q};
            if (q == p) return {Passage::merge_left, p};
            if (q == p + 1) return {Passage::merge_right, p};
            return {Passage::straight, q - 1};
        case MoveKind::hexavalent:
            if (q >= p && q <= p + 2) return {Passage::straight, 2 * p + 2 - q};
            return {Passage::straight, q};
        case MoveKind::tetravalent:
            if (q == p) return {Passage::straight, p + 1};
            if (q == p + 1) return {Passage::straight, p};
            return {Passage::straight, q};
    }
    return {};
}

int Weave::up(int k, int q) const {
    const WeaveMove& m = moves_.at(static_cast<std::size_t>(k));
    int p = m.position;
    switch (m.kind) {
        case MoveKind::trivalent: return q <= p ? q : q + 1;
        case MoveKind::hexavalent: return (q >= p && q <= p + 2) ? 2 * p + 2 - q : q;
        case MoveKind::tetravalent: return q == p ? p + 1 : (q == p + 1 ? p : q);
    }
    return q;
}

int Weave::up_right(int k, int q) const {
    const WeaveMove& m = moves_.at(static_cast<std::size_t>(k));
    if (m.kind == MoveKind::trivalent && q == m.position) return q + 1;
    return up(k, q);
}

std::vector<std::string> validate_weave(const Weave& w) {
    std::vector<std::string> v;
    for (int k = 0; k < w.move_count(); ++k) {
        const WeaveMove& m = w.moves()[static_cast<std::size_t>(k)];
        const auto& L = w.slice(k).letters;
        auto P = static_cast<std::size_t>(m.position);
        std::string where = "move " + std::to_string(k + 1) + " at " + std::to_string(m.position + 1) + ": ";
        switch (m.kind) {
            case MoveKind::trivalent:
                if (L[P] != L[P + 1]) v.push_back(where + "trivalent requires equal letters");
                break;
            case MoveKind::hexavalent:
                if (L[P] != L[P + 2] || std::abs(L[P] - L[P + 1]) != 1)
                    v.push_back(where + "hexavalent requires letters i j i with |i-j| = 1");
                break;
            case MoveKind::tetravalent:
                if (std::abs(L[P] - L[P + 1]) < 2)
                    v.push_back(where + "tetravalent requires letters i k with |i-k| > 1");
                break;
        }
    }
    if (v.empty() && !is_reduced(w.bottom())) v.push_back("bottom slice is not a reduced word");
    if (v.empty() && demazure_product(w.top()) != permutation_of(w.bottom()))
        v.push_back("bottom slice does not represent the Demazure product of the top");
    return v;
}

namespace {

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

Weave parse_weave(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line, name, top_text;
    int strands = 0, lineno = 0;
    WeaveMode mode = WeaveMode::filling;
    ChordReading reading = ChordReading::right_to_left;
    std::vector<WeaveMove> moves;
    auto fail = [&](const std::string& what) -> WeaveError {
        return WeaveError("weave line " + std::to_string(lineno) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        line = trim(line);
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        std::string rest;
        std::getline(ls, rest);
        rest = trim(rest);
        if (key == "name") {
            name = rest;
        } else if (key == "strands") {
            try {
                strands = std::stoi(rest);
            } catch (const std::exception&) {
                throw fail("bad strand count");
            }
        } else if (key == "top") {
            top_text = rest;
        } else if (key == "mode") {
            if (rest == "filling") mode = WeaveMode::filling;
            else if (rest == "cobordism") mode = WeaveMode::cobordism;
            else throw fail("mode must be filling or cobordism");
        } else if (key == "reading") {
            if (rest == "right-to-left") reading = ChordReading::right_to_left;
            else if (rest == "left-to-right") reading = ChordReading::left_to_right;
            else throw fail("reading must be right-to-left or left-to-right");
        } else if (key == "trivalent" || key == "hexavalent" || key == "tetravalent") {
            WeaveMove m;
            m.kind = key == "trivalent" ? MoveKind::trivalent
                     : key == "hexavalent" ? MoveKind::hexavalent
                                           : MoveKind::tetravalent;
            try {
                std::size_t used = 0;
                m.position = std::stoi(rest, &used) - 1;
                if (trim(rest.substr(used)) != "") throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw fail("move needs a single 1-based position");
            }
            moves.push_back(m);
        } else {
            throw fail("unknown directive '" + key + "'");
        }
    }
    if (top_text.empty()) throw WeaveError("weave has no 'top' line");
    BraidWord top;
    try {
        if (top_text.find(':') != std::string::npos) top = parse_braid(top_text);
        else {
            if (strands < 1) throw WeaveError("weave needs 'strands' before a bare top word");
            top = parse_braid(std::to_string(strands) + ": " + top_text);
        }
    } catch (const BraidError& e) {
        throw WeaveError(std::string("weave top word: ") + e.what());
    }
    if (strands && strands != top.strands) throw WeaveError("strand count disagrees with top word");
    Weave w(top, moves);
    w.name = name;
    w.mode = mode;
    w.reading = reading;
    auto v = validate_weave(w);
    if (!v.empty()) {
        std::string msg = "invalid weave";
        for (const auto& s : v) msg += "; " + s;
        throw WeaveError(msg);
    }
    return w;
}

Weave load_weave(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw WeaveError("cannot open weave file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    Weave w = parse_weave(ss.str());
    if (w.name.empty()) {
        auto slash = path.find_last_of('/');
        std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
        w.name = base.substr(0, base.find('.'));
    }
    return w;
}

std::string format_weave(const Weave& w) {
    std::ostringstream os;
    if (!w.name.empty()) os << "name " << w.name << '\n';
    os << "top " << w.top().to_string() << '\n';
    if (w.mode == WeaveMode::cobordism) os << "mode cobordism\n";
    if (w.reading == ChordReading::left_to_right) os << "reading left-to-right\n";
    for (const auto& m : w.moves()) os << to_string(m.kind) << ' ' << m.position + 1 << '\n';
    return os.str();
}

BraidWord BentWeave::boundary() const { return bent() ? concat(weave.top(), delta) : weave.top(); }

BraidWord BentWeave::strip(int k) const {
    return bent() ? concat(weave.slice(k), delta) : weave.slice(k);
}

BentWeave bend_weave(const Weave& w) {
    auto v = validate_weave(w);
    if (!v.empty()) throw WeaveError("cannot bend an invalid weave: " + v.front());
    if (!permutation_of(w.bottom()).is_involution())
        throw WeaveError("cannot bend: the bottom permutation is not an involution");
    BentWeave b{w, w.bottom(), {}};
    b.weave.mode = WeaveMode::filling;
    b.chords = label_chords(w.top(), b.delta, w.reading);
    return b;
}

BentWeave cobordism_weave(const Weave& w) {
    auto v = validate_weave(w);
    if (!v.empty()) throw WeaveError("invalid weave: " + v.front());
    BentWeave b{w, BraidWord{w.strands(), {}}, {}};
    b.weave.mode = WeaveMode::cobordism;
    b.chords = label_chords(w.top(), b.delta, w.reading);
    return b;
}

std::vector<CycleGenerator> cycle_generators(const BentWeave& bw) {
    const Weave& w = bw.weave;
    std::vector<CycleGenerator> gens;
    auto tri = w.trivalent_moves();
    for (int k : tri) {
        int q = w.moves()[static_cast<std::size_t>(k)].position + 1;
        for (int j = k - 1; j >= 0; --j) q = w.up(j, q);
        CycleGenerator g;
        g.move = k;
        g.chord_position = q;
        g.index = bw.chords.beta_number(q);
        g.scan_index = static_cast<int>(std::count_if(tri.begin(), tri.end(), [&](int o) { return o > k; }));
        gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(), [](const auto& a, const auto& b) { return a.index < b.index; });
    return gens;
}

double WeaveLayout::letter_x(const BentWeave& w, int k, int q) {
    int L = static_cast<int>(w.weave.slice(k).size());
    if (q < L) return q - (L - 1) / 2.0;
    return right_edge(w) + 0.8 + (q - L);
}

double WeaveLayout::right_edge(const BentWeave& w) {
    std::size_t W = 0;
    for (const auto& s : w.weave.slices()) W = std::max(W, s.size());
    return (static_cast<double>(W) - 1) / 2.0 + 0.5;
}

Eigen::Vector2d WeaveLayout::vertex(const BentWeave& w, int k) {
    const WeaveMove& m = w.weave.moves().at(static_cast<std::size_t>(k));
    int span = m.kind == MoveKind::hexavalent ? 3 : 2;
    double x = 0;
    for (int i = 0; i < span; ++i) x += letter_x(w, k, m.position + i);
    return {x / span, move_y(k)};
}

}  // namespace specnet
