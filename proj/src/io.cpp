#include "specnet/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

namespace specnet {

namespace {

ojson pair_json(const SheetPair& p) { return ojson::array({p.i, p.j}); }
SheetPair pair_from(const nlohmann::json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

ojson class_json(const SolitonClass& c) {
    return ojson{{"exps", c.exps.exponents()}, {"sign", c.sign}, {"h", c.h}};
}
SolitonClass class_from(const nlohmann::json& j) {
    return {Monomial(j.at("exps").get<std::vector<int>>()), j.at("sign").get<int>(), j.at("h").get<int>()};
}

ojson complex_list(const std::vector<cplx>& v) {
    ojson a = ojson::array();
    for (auto z : v) a.push_back(ojson::array({z.real(), z.imag()}));
    return a;
}
std::vector<cplx> complex_list_from(const nlohmann::json& j) {
    std::vector<cplx> v;
    for (const auto& e : j) v.emplace_back(e.at(0).get<double>(), e.at(1).get<double>());
    return v;
}

EndKind end_kind_from(const std::string& s) {
    for (auto k : {EndKind::vertex, EndKind::chord, EndKind::asymptote, EndKind::cutoff})
        if (s == to_string(k)) return k;
    throw IoError("unknown wall end kind '" + s + "'");
}

// z.., w.., t.., with numeric suffixes compared as numbers (z2 before z10).
bool chord_less(const std::string& a, const std::string& b) {
    auto rank = [](char c) { return c == 'z' ? 0 : c == 'w' ? 1 : c == 't' ? 2 : 3; };
    if (rank(a[0]) != rank(b[0])) return rank(a[0]) < rank(b[0]);
    auto num = [](const std::string& s) {
        std::size_t k = s.find_first_of("0123456789");
        return k == std::string::npos ? 0L : std::stol(s.substr(k));
    };
    if (num(a) != num(b)) return num(a) < num(b);
    return a < b;
}

}  // namespace

ojson network_to_json(const SpectralNetwork& net) {
    ojson j;
    j["schema"] = kNetworkSchema;
    j["origin"] = net.origin;
    j["cutoff"] = std::isfinite(net.cutoff) ? ojson(net.cutoff) : ojson(nullptr);
    j["variables"] = net.variables;
    j["warnings"] = net.warnings;
    ojson vs = ojson::array();
    for (const auto& v : net.vertices) {
        vs.push_back(ojson{{"id", v.id},
                           {"kind", to_string(v.kind)},
                           {"position", ojson::array({v.position.x(), v.position.y()})},
                           {"incoming", v.incoming},
                           {"outgoing", v.outgoing},
                           {"created", v.created},
                           {"twist", v.twist},
                           {"anchor", v.anchor},
                           {"stage", v.stage}});
    }
    j["vertices"] = vs;
    ojson ws = ojson::array();
    for (const auto& w : net.walls) {
        ojson o{{"id", w.id},
                {"label", pair_json(w.label)},
                {"end_label", pair_json(w.end_label)},
                {"source", w.source},
                {"source_chord", w.source_chord},
                {"end", ojson{{"kind", to_string(w.end.kind)}, {"vertex", w.end.vertex}, {"name", w.end.name}}},
                {"flowline", w.flowline},
                {"stage", w.stage},
                {"mass", w.mass}};
        ojson route = ojson::array();
        for (const auto& p : w.route) route.push_back(ojson::array({p.x(), p.y()}));
        o["route"] = route;
        o["start_class"] = w.start_class ? class_json(*w.start_class) : ojson(nullptr);
        ojson cuts = ojson::array();
        for (const auto& c : w.cut_factors) cuts.push_back(ojson{{"param", c.param}, {"factor", class_json(c.factor)}});
        o["cut_factors"] = cuts;
        o["charges"] = complex_list(w.charges);
        o["root_i"] = complex_list(w.root_i);
        o["root_j"] = complex_list(w.root_j);
        ws.push_back(o);
    }
    j["walls"] = ws;
    return j;
}

SpectralNetwork network_from_json(const nlohmann::json& j) {
    if (j.value("schema", "") != kNetworkSchema) throw IoError(std::string("expected schema ") + kNetworkSchema);
    try {
        SpectralNetwork net;
        net.origin = j.at("origin").get<std::string>();
        net.cutoff = j.at("cutoff").is_null() ? std::numeric_limits<double>::infinity() : j.at("cutoff").get<double>();
        net.variables = j.at("variables").get<VariableNames>();
        net.warnings = j.at("warnings").get<std::vector<std::string>>();
        for (const auto& o : j.at("vertices")) {
            NetworkVertex v;
            v.kind = vertex_kind_from_string(o.at("kind").get<std::string>());
            v.position = {o.at("position").at(0).get<double>(), o.at("position").at(1).get<double>()};
            v.incoming = o.at("incoming").get<std::vector<int>>();
            v.outgoing = o.at("outgoing").get<std::vector<int>>();
            v.created = o.at("created").get<int>();
            v.twist = o.at("twist").get<int>();
            v.anchor = o.at("anchor").get<int>();
            v.stage = o.at("stage").get<int>();
            if (net.add_vertex(v) != o.at("id").get<int>()) throw IoError("vertex ids must be 0, 1, 2, ...");
        }
        for (const auto& o : j.at("walls")) {
            Wall w;
            w.label = pair_from(o.at("label"));
            w.end_label = pair_from(o.at("end_label"));
            w.source = o.at("source").get<int>();
            w.source_chord = o.at("source_chord").get<std::string>();
            const auto& e = o.at("end");
            w.end = {end_kind_from(e.at("kind").get<std::string>()), e.at("vertex").get<int>(), e.at("name").get<std::string>()};
            w.flowline = o.at("flowline").get<int>();
            w.stage = o.at("stage").get<int>();
            w.mass = o.at("mass").get<double>();
            for (const auto& p : o.at("route")) w.route.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
            if (!o.at("start_class").is_null()) w.start_class = class_from(o.at("start_class"));
            for (const auto& c : o.at("cut_factors")) w.cut_factors.push_back({c.at("param").get<double>(), class_from(c.at("factor"))});
            w.charges = complex_list_from(o.at("charges"));
            w.root_i = complex_list_from(o.at("root_i"));
            w.root_j = complex_list_from(o.at("root_j"));
            if (net.add_wall(std::move(w)) != o.at("id").get<int>()) throw IoError("wall ids must be 0, 1, 2, ...");
        }
        return net;
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("malformed network document: ") + e.what());
    }
}

ojson augmentation_to_json(const Augmentation& a, const std::string& weave_name) {
    ojson j;
    j["weave"] = weave_name;
    j["variables"] = a.variables;
    ojson values = ojson::object();
    auto chords = a.chords;
    std::stable_sort(chords.begin(), chords.end(), chord_less);
    for (const auto& c : chords) {
        auto it = a.values.find(c);
        if (it != a.values.end()) values[c] = it->second.to_string(a.variables);
    }
    j["augmentation"] = values;
    return j;
}

std::vector<std::pair<std::string, LaurentPoly>> read_augmentation(const nlohmann::json& j) {
    VariableNames names;
    if (j.contains("variables")) names = j.at("variables").get<VariableNames>();
    if (!j.contains("augmentation") || !j.at("augmentation").is_object()) throw IoError("document has no augmentation table");
    std::vector<std::pair<std::string, LaurentPoly>> out;
    for (const auto& [chord, v] : j.at("augmentation").items()) {
        try {
            out.emplace_back(chord, parse_laurent(v.get<std::string>(), names));
        } catch (const std::exception& e) {
            throw IoError("chord " + chord + ": " + e.what());
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return chord_less(x.first, y.first); });
    return out;
}

std::optional<std::string> first_difference(const nlohmann::json& computed, const nlohmann::json& fixture) {
    auto a = read_augmentation(computed), b = read_augmentation(fixture);
    std::map<std::string, LaurentPoly> am(a.begin(), a.end()), bm(b.begin(), b.end());
    std::vector<std::string> chords;
    for (const auto& [c, v] : a) chords.push_back(c);
    for (const auto& [c, v] : b)
        if (!am.count(c)) chords.push_back(c);
    std::stable_sort(chords.begin(), chords.end(), chord_less);
    for (const auto& c : chords) {
        // a chord missing from a table is zero there
        LaurentPoly x = am.count(c) ? am.at(c) : LaurentPoly(), y = bm.count(c) ? bm.at(c) : LaurentPoly();
        if (x != y) return c;
    }
    return std::nullopt;
}

ojson bps_to_json(const SpectralNetwork& net, const BpsTable& table) {
    ojson walls = ojson::array();
    for (const auto& w : net.walls) {
        ojson entries = ojson::array();
        for (const auto& [c, m] : table.entries(w.id))
            entries.push_back(ojson{{"class", c.value().to_string(net.variables)}, {"mu", m}});
        walls.push_back(ojson{{"wall", w.id}, {"label", pair_json(w.label)}, {"indices", entries}});
    }
    return ojson{{"variables", net.variables}, {"walls", walls}};
}

ojson wkb_to_json(const WkbNetwork& w) {
    ojson j;
    j["curve"] = w.curve.to_string();
    j["theta"] = w.config.theta;
    j["mass"] = w.config.mass;
    j["radius"] = w.config.radius;
    j["branch_points"] = complex_list(w.branch_points);
    ojson walls = ojson::array();
    for (std::size_t k = 0; k < w.walls.size(); ++k) {
        const auto& t = w.walls[k];
        walls.push_back(ojson{{"id", k},
                              {"primary", t.seed.branch >= 0},
                              {"end", to_string(t.end)},
                              {"asymptote", t.asymptote},
                              {"z", complex_list(t.z)},
                              {"charge", complex_list(t.charge)}});
    }
    j["traced_walls"] = walls;
    ojson joints = ojson::array();
    for (const auto& jt : w.joints)
        joints.push_back(ojson{{"walls", ojson::array({jt.wall_a, jt.wall_b})},
                               {"z", ojson::array({jt.z.real(), jt.z.imag()})},
                               {"composable", jt.composable},
                               {"child", jt.child},
                               {"mass", jt.t_a + jt.t_b}});
    j["joints"] = joints;
    j["joints_above_cutoff"] = w.joints_above_cutoff;
    j["network"] = network_to_json(w.network);
    return j;
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    if (s == "-0.000") s = "0.000";
    return s;
}

std::string hue_color(const SheetPair& p) {
    int a = std::min(p.i, p.j), b = std::max(p.i, p.j);
    int hue = ((a - 1) * 7 + (b - 1) * 3) * 53 % 360;
    return "hsl(" + std::to_string(hue) + ",70%,40%)";
}

}  // namespace

std::string export_svg(const SpectralNetwork& net, const SvgStyle& st) {
    double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
    auto extend = [&](const Eigen::Vector2d& p) {
        x0 = std::min(x0, p.x());
        x1 = std::max(x1, p.x());
        y0 = std::min(y0, p.y());
        y1 = std::max(y1, p.y());
    };
    for (const auto& w : net.walls) {
        if (w.route.empty()) throw IoError("wall " + std::to_string(w.id) + " has no layout route");
        for (const auto& p : w.route) extend(p);
    }
    for (const auto& v : net.vertices) extend(v.position);
    if (!std::isfinite(x0)) x0 = y0 = -1, x1 = y1 = 1;
    double span = std::max({x1 - x0, y1 - y0, 1e-9});
    double scale = std::min(st.width, st.height) - 2 * st.margin;
    scale /= span;
    auto X = [&](double x) { return fmt(st.margin + (x - x0) * scale); };
    auto Y = [&](double y) { return fmt(st.height - st.margin - (y - y0) * scale); };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(st.width) << "\" height=\"" << fmt(st.height)
       << "\" viewBox=\"0 0 " << fmt(st.width) << ' ' << fmt(st.height) << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // axes through the origin when it is in view, else along the frame
    double ax = (x0 <= 0 && 0 <= x1) ? 0 : x0, ay = (y0 <= 0 && 0 <= y1) ? 0 : y0;
    os << "<g stroke=\"#bbb\" stroke-width=\"0.5\">\n";
    os << "<line x1=\"" << X(x0) << "\" y1=\"" << Y(ay) << "\" x2=\"" << X(x0 + span) << "\" y2=\"" << Y(ay) << "\"/>\n";
    os << "<line x1=\"" << X(ax) << "\" y1=\"" << Y(y0) << "\" x2=\"" << X(ax) << "\" y2=\"" << Y(y0 + span) << "\"/>\n";
    os << "</g>\n";
    os << "<g fill=\"none\" stroke-width=\"1.5\">\n";
    for (const auto& w : net.walls) {
        os << "<path id=\"wall" << w.id << "\" stroke=\"" << hue_color(w.label) << "\" d=\"";
        for (std::size_t k = 0; k < w.route.size(); ++k)
            os << (k ? " L" : "M") << X(w.route[k].x()) << ',' << Y(w.route[k].y());
        os << "\"/>\n";
    }
    os << "</g>\n<g>\n";
    for (const auto& v : net.vertices) {
        std::string x = X(v.position.x()), y = Y(v.position.y());
        double px = st.margin + (v.position.x() - x0) * scale, py = st.height - st.margin - (v.position.y() - y0) * scale;
        switch (v.kind) {
            case VertexKind::initial:
                os << "<polygon fill=\"none\" stroke=\"black\" points=\"" << fmt(px) << ',' << fmt(py - 5) << ' '
                   << fmt(px - 4.5) << ',' << fmt(py + 3) << ' ' << fmt(px + 4.5) << ',' << fmt(py + 3) << "\"/>\n";
                break;
            case VertexKind::interaction_creation:
            case VertexKind::interaction_hexavalent:
                os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
                break;
            case VertexKind::non_interaction:
                os << "<rect x=\"" << fmt(px - 2) << "\" y=\"" << fmt(py - 2) << "\" width=\"4\" height=\"4\" fill=\"#888\"/>\n";
                break;
            case VertexKind::inconsistent:
                os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"none\" stroke=\"red\"/>\n";
                break;
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

nlohmann::json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw IoError(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
}

}  // namespace specnet
