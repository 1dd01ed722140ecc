#include "specnet/wkb.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace specnet {

namespace {

constexpr double kPi = std::numbers::pi;

cplx unit(double phi) { return std::polar(1.0, phi); }

// Newton on P(z, .) from w.
cplx refine_root(const SpectralCurve& c, cplx z, cplx w) {
    auto f = c.fiber(z);
    for (int it = 0; it < 40; ++it) {
        cplx p = 0, dp = 0;
        for (auto k = f.size(); k-- > 0;) {
            dp = dp * w + p;
            p = p * w + f[k];
        }
        if (std::abs(dp) == 0) break;
        cplx step = p / dp;
        w -= step;
        if (std::abs(step) <= 1e-15 * (1 + std::abs(w))) break;
    }
    return w;
}

// The pair (li, lj) continued from z0 to z; nullopt when the continuation is
// not trustworthy (roots moved too far relative to their separation).
std::optional<std::pair<cplx, cplx>> continue_pair(const SpectralCurve& c, cplx z, cplx li, cplx lj) {
    cplx a = refine_root(c, z, li), b = refine_root(c, z, lj);
    double sep = std::abs(li - lj);
    if (std::abs(a - li) > 0.25 * sep || std::abs(b - lj) > 0.25 * sep) return std::nullopt;
    if (std::abs(a - b) < 1e-12 * (1 + std::abs(a))) return std::nullopt;
    return std::pair{a, b};
}

// Gauss-Legendre on the chord from z0 to z1 of (li - lj) dz.
constexpr double kGaussX[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563, 0.8611363115940526};
constexpr double kGaussW[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461, 0.3478548451374538};

std::optional<cplx> chord_integral(const SpectralCurve& c, cplx z0, cplx z1, cplx li, cplx lj) {
    cplx sum = 0;
    cplx a = li, b = lj;
    for (int k = 0; k < 4; ++k) {
        cplx z = z0 + (z1 - z0) * (0.5 * (kGaussX[k] + 1));
        auto p = continue_pair(c, z, a, b);
        if (!p) return std::nullopt;
        std::tie(a, b) = *p;
        sum += kGaussW[k] * (a - b);
    }
    return sum * 0.5 * (z1 - z0);
}

struct Point {
    cplx z, charge, li, lj;
};

// Solves Z(z) = target from point p, starting at guess.
std::optional<Point> solve_charge(const SpectralCurve& c, const Point& p, cplx target, cplx guess) {
    cplx z = guess;
    for (int it = 0; it < 12; ++it) {
        auto q = chord_integral(c, p.z, z, p.li, p.lj);
        if (!q) return std::nullopt;
        auto ends = continue_pair(c, z, p.li, p.lj);
        if (!ends) return std::nullopt;
        cplx F = p.charge + *q - target;
        if (std::abs(F) <= 1e-13 * (1 + std::abs(target))) return Point{z, p.charge + *q, ends->first, ends->second};
        z -= F / (ends->first - ends->second);
    }
    return std::nullopt;
}

// Advance along the wall to |Z| = t.
std::optional<Point> advance(const SpectralCurve& c, const Point& p, double t, double theta) {
    cplx e = unit(theta);
    double h = t - std::abs(p.charge);
    cplx k1 = e / (p.li - p.lj);
    auto mid = continue_pair(c, p.z + 0.5 * h * k1, p.li, p.lj);
    if (!mid) return std::nullopt;
    cplx guess = p.z + h * e / (mid->first - mid->second);
    return solve_charge(c, p, e * t, guess);
}

std::string ray_id(double phi) {
    phi = std::remainder(phi, 2 * kPi);
    if (phi <= -kPi + 1e-9) phi += 2 * kPi;
    char buf[32];
    std::snprintf(buf, sizeof buf, "ray%+.4f", phi);
    return buf;
}

}  // namespace

std::vector<WallSeed> initial_rays(const SpectralCurve& c, cplx b, double theta, double r0) {
    // the double root at b
    auto roots = sheets_at(c, b);
    std::size_t ia = 0, ib = 1;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < roots.size(); ++i)
        for (std::size_t j = i + 1; j < roots.size(); ++j)
            if (std::abs(roots[i] - roots[j]) < best) {
                best = std::abs(roots[i] - roots[j]);
                ia = i;
                ib = j;
            }
    cplx w0 = 0.5 * (roots[ia] + roots[ib]);
    // (w - w0)^2 = -2 P_z / P_ww (z - b), so lambda_i - lambda_j = k (z - b)^{1/2}
    cplx k = 2.0 * std::sqrt(-2.0 * c.dz(b, w0) / c.dww(b, w0));
    std::vector<WallSeed> out;
    for (int m = 0; m < 3; ++m) {
        double phi = (2.0 / 3.0) * (theta - std::arg(k) + m * kPi);
        cplx z0 = b + r0 * unit(phi);
        auto s = sheets_at(c, z0);
        std::sort(s.begin(), s.end(), [&](cplx x, cplx y) { return std::abs(x - w0) < std::abs(y - w0); });
        cplx li = s[0], lj = s[1];
        if ((std::conj(unit(theta)) * (li - lj) * (z0 - b)).real() < 0) std::swap(li, lj);
        double t0 = std::abs((2.0 / 3.0) * (li - lj) * (z0 - b));
        out.push_back(WallSeed{z0, li, lj, unit(theta) * t0, -1, m});
    }
    return out;
}

double anti_stokes_direction(const SpectralCurve& c, cplx z, cplx d, double theta) {
    double p = c.growth();
    cplx coeff = d / std::pow(z, p) / (p + 1);
    double base = (theta - std::arg(coeff)) / (p + 1);
    double period = 2 * kPi / (p + 1);
    double m = std::round((std::arg(z) - base) / period);
    return base + m * period;
}

TracedWall trace_wall(const SpectralCurve& c, const WallSeed& seed, const WkbConfig& cfg,
                      const std::vector<cplx>& branch_points) {
    double hmax = cfg.step > 0 ? cfg.step : 1e-3 * cfg.mass;
    TracedWall w;
    w.seed = seed;
    Point p{seed.z, seed.charge, seed.li, seed.lj};
    auto push = [&](const Point& q) {
        w.z.push_back(q.z);
        w.charge.push_back(q.charge);
        w.li.push_back(q.li);
        w.lj.push_back(q.lj);
    };
    push(p);
    double t = std::abs(p.charge);
    bool left_source = seed.branch < 0;
    cplx source = seed.branch >= 0 ? branch_points.at(static_cast<std::size_t>(seed.branch)) : seed.z;
    double h = std::min(hmax, std::max(0.5 * t, 1e-12));
    for (int guard = 0; guard < 10'000'000; ++guard) {
        if (t >= cfg.mass) {
            w.end = EndKind::cutoff;
            return w;
        }
        double tn = std::min(cfg.mass, t + h);
        auto q = advance(c, p, tn, cfg.theta);
        if (!q) {
            h *= 0.5;
            if (h < 1e-14 * (1 + t)) throw WkbError("step-size underflow while tracing a wall");
            continue;
        }
        if (std::abs(q->z) >= cfg.radius) {
            // land on the circle |z| = R
            double lo = t, hi = tn;
            Point at = *q;
            for (int it = 0; it < 80 && hi - lo > 1e-13 * (1 + hi); ++it) {
                double mid = 0.5 * (lo + hi);
                auto m = advance(c, p, mid, cfg.theta);
                if (!m) throw WkbError("lost the roots while landing on the domain bound");
                if (std::abs(m->z) >= cfg.radius) {
                    hi = mid;
                    at = *m;
                } else {
                    lo = mid;
                }
            }
            push(at);
            w.end = EndKind::asymptote;
            w.asymptote = ray_id(anti_stokes_direction(c, at.z, at.li - at.lj, cfg.theta));
            return w;
        }
        double hit_tol = 1e-6 * (1 + std::abs(q->z));
        for (std::size_t b = 0; b < branch_points.size(); ++b) {
            cplx bp = branch_points[b];
            if (!left_source && static_cast<int>(b) == seed.branch) continue;
            // distance from bp to the step's chord
            cplx d = q->z - p.z;
            double s = std::abs(d) > 0 ? std::clamp(((bp - p.z) * std::conj(d)).real() / std::norm(d), 0.0, 1.0) : 0.0;
            if (std::abs(p.z + s * d - bp) < hit_tol)
                throw NonGenericPhase("wall runs into the branch point near z = " + std::to_string(bp.real()) + "+" +
                                      std::to_string(bp.imag()) + "i; try theta + 1e-3");
        }
        if (!left_source && std::abs(q->z - source) > 1e-3) left_source = true;
        p = *q;
        t = tn;
        push(p);
        h = std::min(hmax, std::max(h * 2, 0.5 * t));
    }
    throw WkbError("wall tracing did not terminate");
}

namespace {

struct Frame {
    std::vector<cplx> roots; // sorted
    int index_of(cplx w) const {
        int best = 0;
        for (std::size_t k = 0; k < roots.size(); ++k)
            if (std::abs(roots[k] - w) < std::abs(roots[static_cast<std::size_t>(best)] - w)) best = static_cast<int>(k);
        double scale = 1 + std::abs(w);
        if (std::abs(roots[static_cast<std::size_t>(best)] - w) > 1e-8 * scale)
            throw WkbError("tracked root does not match a sheet at the frame point");
        return best + 1;
    }
    SheetPair pair(cplx a, cplx b) const { return {index_of(a), index_of(b)}; }
};

Frame frame_at(const SpectralCurve& c, cplx z) {
    Frame f{sheets_at(c, z)};
    std::sort(f.roots.begin(), f.roots.end(), [](cplx a, cplx b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return f;
}

// Position on a wall where |Z| = t, refined from the nearest sample below.
Point point_at(const SpectralCurve& c, const TracedWall& w, double t, double theta) {
    std::size_t k = 0;
    while (k + 1 < w.z.size() && w.mass_at(k + 1) <= t) ++k;
    Point p{w.z[k], w.charge[k], w.li[k], w.lj[k]};
    if (std::abs(t - w.mass_at(k)) == 0) return p;
    auto q = advance(c, p, t, theta);
    if (!q) throw WkbError("could not evaluate a wall at an intermediate charge");
    return *q;
}

struct Box {
    double x0, x1, y0, y1;
    bool meets(const Box& o) const { return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1; }
};

Box box_of(const std::vector<cplx>& z, std::size_t from, std::size_t to) {
    Box b{z[from].real(), z[from].real(), z[from].imag(), z[from].imag()};
    for (std::size_t k = from; k <= to; ++k) {
        b.x0 = std::min(b.x0, z[k].real());
        b.x1 = std::max(b.x1, z[k].real());
        b.y0 = std::min(b.y0, z[k].imag());
        b.y1 = std::max(b.y1, z[k].imag());
    }
    return b;
}

double cross(cplx a, cplx b) { return a.real() * b.imag() - a.imag() * b.real(); }

struct Candidate {
    std::size_t sa, sb;
    double ua, ub;
};

// Segment intersections between two polylines, chunked bounding-box sweep.
std::vector<Candidate> polyline_crossings(const std::vector<cplx>& A, const std::vector<cplx>& B) {
    constexpr std::size_t kChunk = 32;
    std::vector<Candidate> out;
    if (A.size() < 2 || B.size() < 2) return out;
    for (std::size_t ca = 0; ca + 1 < A.size(); ca += kChunk) {
        std::size_t ea = std::min(ca + kChunk, A.size() - 1);
        Box ba = box_of(A, ca, ea);
        for (std::size_t cb = 0; cb + 1 < B.size(); cb += kChunk) {
            std::size_t eb = std::min(cb + kChunk, B.size() - 1);
            if (!ba.meets(box_of(B, cb, eb))) continue;
            for (std::size_t i = ca; i < ea; ++i)
                for (std::size_t j = cb; j < eb; ++j) {
                    cplx a = A[i], da = A[i + 1] - A[i], b = B[j], db = B[j + 1] - B[j];
                    double den = cross(da, db);
                    if (den == 0) continue;
                    double u = cross(b - a, db) / den, v = cross(b - a, da) / den;
                    if (u < 0 || u >= 1 || v < 0 || v >= 1) continue;
                    out.push_back({i, j, u, v});
                }
        }
    }
    return out;
}

class Builder {
public:
    Builder(const SpectralCurve& c, const WkbConfig& cfg) {
        out_.curve = c;
        out_.config = cfg;
        for (const auto& b : branch_points(c)) out_.branch_points.push_back(b.z);
    }

    WkbNetwork run() {
        int nb = static_cast<int>(out_.branch_points.size());
        for (int b = 0; b < nb; ++b)
            for (auto s : initial_rays(out_.curve, out_.branch_points[static_cast<std::size_t>(b)], out_.config.theta,
                                       out_.config.seed_radius)) {
                s.branch = b;
                add_wall(trace_wall(out_.curve, s, out_.config, out_.branch_points), 0);
            }
        auto seeder = [this](SpectralNetwork& net, int v, int round) {
            int j = net.vertex(v).anchor - static_cast<int>(out_.branch_points.size());
            seed_joint(j, round);
            net = materialize();
        };
        out_.network = consistent_extension(materialize(), seeder, out_.config.guard);
        return std::move(out_);
    }

private:
    void add_wall(TracedWall w, int round) {
        int id = static_cast<int>(out_.walls.size());
        out_.walls.push_back(std::move(w));
        rounds_.push_back(round);
        for (int other = 0; other < id; ++other) find_joints(other, id, round);
    }

    void seed_joint(int j, int round) {
        WkbJoint& jt = out_.joints.at(static_cast<std::size_t>(j));
        if (!jt.composable || jt.child >= 0) throw WkbError("joint " + std::to_string(j) + " needs no new wall");
        const WkbJoint snapshot = jt;
        Point a = point_at(out_.curve, out_.walls[static_cast<std::size_t>(snapshot.wall_a)], snapshot.t_a, out_.config.theta);
        Point b = point_at(out_.curve, out_.walls[static_cast<std::size_t>(snapshot.wall_b)], snapshot.t_b, out_.config.theta);
        // (ij) then (jk): the new wall runs on (ik)
        WallSeed s{snapshot.z, a.li, b.lj, snapshot.charge_a + snapshot.charge_b, -1, -1};
        out_.joints[static_cast<std::size_t>(j)].child = static_cast<int>(out_.walls.size());
        add_wall(trace_wall(out_.curve, s, out_.config, out_.branch_points), round);
    }

    bool is_parent(int parent, int child) const {
        for (const auto& j : out_.joints)
            if (j.child == child && (j.wall_a == parent || j.wall_b == parent)) return true;
        return false;
    }

    void find_joints(int ia, int ib, int round) {
        const auto& c = out_.curve;
        double theta = out_.config.theta;
        const TracedWall& A = out_.walls[static_cast<std::size_t>(ia)];
        const TracedWall& B = out_.walls[static_cast<std::size_t>(ib)];
        for (const auto& cand : polyline_crossings(A.z, B.z)) {
            double ta = A.mass_at(cand.sa) + cand.ua * (A.mass_at(cand.sa + 1) - A.mass_at(cand.sa));
            double tb = B.mass_at(cand.sb) + cand.ub * (B.mass_at(cand.sb + 1) - B.mass_at(cand.sb));
            // Newton in (ta, tb) on z_A(ta) = z_B(tb)
            Point pa, pb;
            for (int it = 0;; ++it) {
                pa = point_at(c, A, ta, theta);
                pb = point_at(c, B, tb, theta);
                cplx G = pa.z - pb.z;
                if (std::abs(G) <= 1e-12 * (1 + std::abs(pa.z))) break;
                if (it >= 30) throw WkbError("joint refinement did not converge");
                cplx da = unit(theta) / (pa.li - pa.lj), db = -unit(theta) / (pb.li - pb.lj);
                double det = cross(da, db);
                if (det == 0) throw NonGenericPhase("tangential wall crossing; try theta + 1e-3");
                // solve da * x + db * y = -G over the reals
                double x = cross(-G, db) / det, y = cross(da, -G) / det;
                ta += x;
                tb += y;
            }
            cplx z = pa.z;
            // crossings at a wall's own birth point are the joint that created it
            double eps = 1e-7 * (1 + std::abs(z));
            bool at_start_a = std::abs(z - A.z.front()) < eps, at_start_b = std::abs(z - B.z.front()) < eps;
            if ((at_start_a && is_parent(ib, ia)) || (at_start_b && is_parent(ia, ib))) continue;
            if (at_start_a && at_start_b) continue;
            if (ta + tb >= out_.config.mass) {
                ++out_.joints_above_cutoff;
                continue;
            }
            for (const auto& j : out_.joints)
                if (std::abs(j.z - z) < 1e-9 * (1 + std::abs(z)))
                    throw NonGenericPhase("three walls meet near one point; try theta + 1e-3");
            Frame f = frame_at(c, z);
            SheetPair la = f.pair(pa.li, pa.lj), lb = f.pair(pb.li, pb.lj);
            WkbJoint j;
            j.z = z;
            j.round = round;
            if (compose(la, lb)) {
                j.wall_a = ia, j.wall_b = ib, j.t_a = ta, j.t_b = tb, j.charge_a = pa.charge, j.charge_b = pb.charge;
                j.composable = true;
            } else if (compose(lb, la)) {
                j.wall_a = ib, j.wall_b = ia, j.t_a = tb, j.t_b = ta, j.charge_a = pb.charge, j.charge_b = pa.charge;
                j.composable = true;
            } else {
                j.wall_a = ia, j.wall_b = ib, j.t_a = ta, j.t_b = tb, j.charge_a = pa.charge, j.charge_b = pb.charge;
            }
            out_.joints.push_back(j);
        }
    }

    struct Event {
        double t;
        int vertex;
        cplx z;
        Frame frame;
    };

    SpectralNetwork materialize() const {
        const auto& c = out_.curve;
        SpectralNetwork net;
        net.origin = "wkb";
        net.cutoff = out_.config.mass;
        int nb = static_cast<int>(out_.branch_points.size());
        int nw = static_cast<int>(out_.walls.size());
        for (int k = 0; k < nb * 3; ++k) net.variables.push_back("r" + std::to_string(k + 1));

        std::vector<Frame> branch_frames;
        for (int b = 0; b < nb; ++b) {
            NetworkVertex v;
            v.kind = VertexKind::initial;
            cplx z = out_.branch_points[static_cast<std::size_t>(b)];
            v.position = {z.real(), z.imag()};
            v.anchor = b;
            net.add_vertex(v);
        }
        std::vector<std::vector<Event>> events(static_cast<std::size_t>(nw));
        std::vector<int> born_at(static_cast<std::size_t>(nw), -1);
        for (int j = 0; j < static_cast<int>(out_.joints.size()); ++j) {
            const auto& jt = out_.joints[static_cast<std::size_t>(j)];
            NetworkVertex v;
            v.kind = !jt.composable ? VertexKind::non_interaction
                                    : (jt.child >= 0 ? VertexKind::interaction_creation : VertexKind::inconsistent);
            v.position = {jt.z.real(), jt.z.imag()};
            v.anchor = nb + j;
            v.stage = jt.round;
            int id = net.add_vertex(v);
            Frame f = frame_at(c, jt.z);
            events[static_cast<std::size_t>(jt.wall_a)].push_back({jt.t_a, id, jt.z, f});
            events[static_cast<std::size_t>(jt.wall_b)].push_back({jt.t_b, id, jt.z, f});
            if (jt.child >= 0) born_at[static_cast<std::size_t>(jt.child)] = id;
        }

        for (int wi = 0; wi < nw; ++wi) {
            const TracedWall& tw = out_.walls[static_cast<std::size_t>(wi)];
            auto& ev = events[static_cast<std::size_t>(wi)];
            std::sort(ev.begin(), ev.end(), [](const Event& x, const Event& y) { return x.t < y.t; });
            SolitonClass cls = class_of(wi);
            int source = tw.seed.branch >= 0 ? tw.seed.branch : born_at[static_cast<std::size_t>(wi)];
            Frame source_frame = tw.seed.branch >= 0 ? Frame{} : frame_at(c, tw.seed.z);
            Point start{tw.z.front(), tw.charge.front(), tw.li.front(), tw.lj.front()};
            std::size_t k = 0; // next sample index to copy
            for (std::size_t e = 0; e <= ev.size(); ++e) {
                Wall w;
                w.flowline = wi;
                w.stage = rounds_[static_cast<std::size_t>(wi)];
                w.start_class = cls;
                w.source = source;
                w.mass = std::abs(start.charge);
                auto add_point = [&](const Point& p) {
                    w.route.push_back({p.z.real(), p.z.imag()});
                    w.charges.push_back(p.charge);
                    w.root_i.push_back(p.li);
                    w.root_j.push_back(p.lj);
                };
                add_point(start);
                double t_end = e < ev.size() ? ev[e].t : std::numeric_limits<double>::infinity();
                while (k < tw.z.size() && tw.mass_at(k) <= w.mass) ++k;
                while (k < tw.z.size() && tw.mass_at(k) < t_end) {
                    add_point(Point{tw.z[k], tw.charge[k], tw.li[k], tw.lj[k]});
                    ++k;
                }
                Point end;
                if (e < ev.size()) {
                    end = point_at(c, tw, ev[e].t, out_.config.theta);
                    add_point(end);
                    w.end = {EndKind::vertex, ev[e].vertex, ""};
                    w.end_label = ev[e].frame.pair(end.li, end.lj);
                } else {
                    end = Point{tw.z.back(), tw.charge.back(), tw.li.back(), tw.lj.back()};
                    w.end = {tw.end, -1, tw.asymptote};
                    w.end_label = frame_at(c, end.z).pair(end.li, end.lj);
                }
                if (e == 0) {
                    // the colliding pair at a branch point has no order; alternate it between rays
                    if (tw.seed.branch >= 0) w.label = tw.seed.ray == 1 ? SheetPair{2, 1} : SheetPair{1, 2};
                    else w.label = source_frame.pair(start.li, start.lj);
                } else {
                    w.label = ev[e - 1].frame.pair(start.li, start.lj);
                }
                int id = net.add_wall(std::move(w));
                if (source >= 0) net.vertex(source).outgoing.push_back(id);
                if (e < ev.size()) net.vertex(ev[e].vertex).incoming.push_back(id);
                if (e == 0 && tw.seed.branch < 0) net.vertex(source).created = id;
                if (e < ev.size()) {
                    source = ev[e].vertex;
                    start = end;
                }
            }
        }
        order_stubs(net);
        return net;
    }

    // Incoming walls ordered so that the first composes with the second;
    // outgoing continuations before the created wall.
    void order_stubs(SpectralNetwork& net) const {
        for (auto& v : net.vertices) {
            if (v.kind == VertexKind::initial || v.incoming.size() != 2) continue;
            int a = v.incoming[0], b = v.incoming[1];
            if (!compose(net.wall(a).end_label, net.wall(b).end_label) && compose(net.wall(b).end_label, net.wall(a).end_label))
                std::swap(v.incoming[0], v.incoming[1]);
            std::vector<int> outs;
            for (int in : v.incoming)
                for (int o : v.outgoing)
                    if (net.wall(o).flowline == net.wall(in).flowline) outs.push_back(o);
            if (v.created >= 0) outs.push_back(v.created);
            if (outs.size() == v.outgoing.size()) v.outgoing = outs;
        }
    }

    SolitonClass class_of(int wi) const {
        const TracedWall& tw = out_.walls[static_cast<std::size_t>(wi)];
        if (tw.seed.branch >= 0) {
            std::vector<int> e(out_.branch_points.size() * 3, 0);
            e[static_cast<std::size_t>(tw.seed.branch * 3 + tw.seed.ray)] = 1;
            return SolitonClass{Monomial(e), 1, 0};
        }
        for (const auto& j : out_.joints)
            if (j.child == wi) return class_of(j.wall_a) * class_of(j.wall_b);
        throw WkbError("wall " + std::to_string(wi) + " has no recorded origin");
    }

    WkbNetwork out_;
    std::vector<int> rounds_;
};

}  // namespace

WkbNetwork build_wkb(const SpectralCurve& c, const WkbConfig& cfg) {
    if (!(cfg.mass > 0) || !std::isfinite(cfg.mass)) throw WkbError("mass cutoff must be positive and finite");
    if (!(cfg.radius > 0) || !std::isfinite(cfg.radius)) throw WkbError("domain bound must be positive and finite");
    return Builder(c, cfg).run();
}

SpectralNetwork build_wkb_network(const SpectralCurve& c, double theta, double mass, double radius) {
    WkbConfig cfg;
    cfg.theta = theta;
    cfg.mass = mass;
    cfg.radius = radius;
    return build_wkb(c, cfg).network;
}

}  // namespace specnet
