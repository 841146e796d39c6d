#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "cplan/toolkit.hpp"

namespace cplan {

namespace {

constexpr double kSize = 500.0, kRadius = 210.0, kCenter = 250.0;

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#59a14f", "#e15759",
                          "#b07aa1", "#76b7b2", "#edc948", "#9c755f"};

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x + 0.0); // normalize -0
    return buf;
}

struct Point {
    double x = 0, y = 0;
};

// Barycentric placement: the reference face is pinned to a regular polygon,
// every other vertex is the average of its neighbors. Solved by Gaussian
// elimination; unique because the interior system is diagonally dominant.
std::vector<Point> layout(const EmbeddedGraph& g) {
    const int nb = g.id_bound();
    std::vector<Point> pos(nb);
    std::vector<VertexId> pinned_walk;
    if (const auto f = g.outer_face()) {
        pinned_walk = g.face_walk(*f);
    } else {
        FaceId best = 0;
        for (FaceId f = 1; f < g.faces().count(); ++f)
            if (g.faces().lengths[f] > g.faces().lengths[best]) best = f;
        pinned_walk = g.face_walk(best);
    }
    std::vector<bool> pinned(nb, false);
    for (size_t i = 0; i < pinned_walk.size(); ++i) {
        const double a = 2.0 * M_PI * static_cast<double>(i) /
                         static_cast<double>(pinned_walk.size());
        pos[pinned_walk[i]] = {kCenter + kRadius * std::sin(a), kCenter - kRadius * std::cos(a)};
        pinned[pinned_walk[i]] = true;
    }

    std::vector<VertexId> free;
    std::vector<int> index(nb, -1);
    for (VertexId v : g.vertices())
        if (!pinned[v]) {
            index[v] = static_cast<int>(free.size());
            free.push_back(v);
        }
    const int m = static_cast<int>(free.size());
    if (m == 0) return pos;

    std::vector<std::vector<double>> a(m, std::vector<double>(m + 2, 0.0));
    for (int i = 0; i < m; ++i) {
        const VertexId v = free[i];
        a[i][i] = static_cast<double>(g.degree(v));
        for (VertexId w : g.rotation(v)) {
            if (pinned[w]) {
                a[i][m] += pos[w].x;
                a[i][m + 1] += pos[w].y;
            } else {
                a[i][index[w]] -= 1.0;
            }
        }
    }
    for (int col = 0; col < m; ++col) {
        int piv = col;
        for (int r = col + 1; r < m; ++r)
            if (std::fabs(a[r][col]) > std::fabs(a[piv][col])) piv = r;
        std::swap(a[col], a[piv]);
        for (int r = 0; r < m; ++r) {
            if (r == col || a[r][col] == 0.0) continue;
            const double factor = a[r][col] / a[col][col];
            for (int c = col; c < m + 2; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    for (int i = 0; i < m; ++i) pos[free[i]] = {a[i][m] / a[i][i], a[i][m + 1] / a[i][i]};
    return pos;
}

// Andrew's monotone chain; returns the hull in drawing order.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
        return p.x != q.x ? p.x < q.x : p.y < q.y;
    });
    const auto cross = [](const Point& o, const Point& p, const Point& q) {
        return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x);
    };
    std::vector<Point> hull(2 * pts.size());
    size_t k = 0;
    for (size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    for (size_t i = pts.size() - 1, lo = k + 1; i-- > 0;) {
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k > 1 ? k - 1 : k);
    return hull;
}

} // namespace

std::string render_svg(const CGraph& cg, const Witness* w) {
    const EmbeddedGraph& g = cg.graph;
    const std::vector<Point> pos = layout(g);
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\""
        << kSize << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";

    for (ClusterId mu = 0; mu < cg.cluster_count; ++mu) {
        std::vector<Point> pts;
        for (VertexId v : cg.cluster_vertices(mu)) pts.push_back(pos[v]);
        if (pts.empty()) continue;
        const char* color = kPalette[mu % (sizeof kPalette / sizeof *kPalette)];
        if (pts.size() <= 2) {
            // Degenerate hull: a capsule around the one or two members.
            for (const Point& p : pts)
                out << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
                    << "\" r=\"14\" fill=\"" << color << "\" fill-opacity=\"0.2\"/>\n";
        } else {
            out << "  <polygon points=\"";
            for (const Point& p : convex_hull(pts)) out << num(p.x) << "," << num(p.y) << " ";
            out << "\" fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"" << color
                << "\" stroke-opacity=\"0.5\"/>\n";
        }
    }

    for (VertexId u : g.vertices())
        for (VertexId v : g.rotation(u))
            if (u < v)
                out << "  <line x1=\"" << num(pos[u].x) << "\" y1=\"" << num(pos[u].y)
                    << "\" x2=\"" << num(pos[v].x) << "\" y2=\"" << num(pos[v].y)
                    << "\" stroke=\"#333\" stroke-width=\"1.2\"/>\n";

    if (w) {
        for (const CandidateEdge& c : w->added.chosen) {
            if (c.u >= g.id_bound() || c.v >= g.id_bound() || !g.present(c.u) || !g.present(c.v))
                continue; // chord of a transformed basis, not drawable here
            out << "  <line x1=\"" << num(pos[c.u].x) << "\" y1=\"" << num(pos[c.u].y)
                << "\" x2=\"" << num(pos[c.v].x) << "\" y2=\"" << num(pos[c.v].y)
                << "\" stroke=\"#d62728\" stroke-width=\"1.4\" stroke-dasharray=\"6 4\"/>\n";
        }
    }

    for (VertexId v : g.vertices()) {
        out << "  <circle cx=\"" << num(pos[v].x) << "\" cy=\"" << num(pos[v].y)
            << "\" r=\"4\" fill=\"#fff\" stroke=\"#000\"/>\n";
        out << "  <text x=\"" << num(pos[v].x + 6) << "\" y=\"" << num(pos[v].y - 6)
            << "\" font-size=\"10\" font-family=\"monospace\">" << v << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace cplan
