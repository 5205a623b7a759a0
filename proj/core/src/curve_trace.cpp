#include "ginter/curve_trace.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <unordered_map>

namespace ginter {

namespace {

struct FieldExtract {
  CurveKind kind;
  double (*get)(Complex);
};

constexpr FieldExtract kFields[2] = {
    {CurveKind::re, [](Complex v) { return v.real(); }},
    {CurveKind::im, [](Complex v) { return v.imag(); }},
};

// Edge identifiers: horizontal edge (ix,iy)->(ix+1,iy) and vertical edge
// (ix,iy)->(ix,iy+1), keyed by their lower-left lattice point.
int64_t h_edge(int64_t ix, int64_t iy, int64_t stride) { return (iy * stride + ix) * 2; }
int64_t v_edge(int64_t ix, int64_t iy, int64_t stride) { return (iy * stride + ix) * 2 + 1; }

struct FieldTracer {
  int res;
  double x0, y0, dx, dy;
  std::unordered_map<int64_t, std::array<double, 2>> cross_pt;
  std::vector<std::pair<int64_t, int64_t>> segments;

  void add_crossing(int64_t key, double va, double vb, double ax, double ay, bool horizontal) {
    if (cross_pt.count(key)) return;
    const double t = va / (va - vb);
    cross_pt[key] = horizontal ? std::array<double, 2>{ax + t * dx, ay}
                               : std::array<double, 2>{ax, ay + t * dy};
  }

  // Corner values: bl, br, tr, tl of cell (ix, iy); center = field at center.
  void cell(int ix, int iy, double bl, double br, double tr, double tl, double center) {
    const bool sbl = bl >= 0.0, sbr = br >= 0.0, str_ = tr >= 0.0, stl = tl >= 0.0;
    const int config = sbl | (sbr << 1) | (str_ << 2) | (stl << 3);
    if (config == 0 || config == 15) return;

    const int64_t stride = res + 1;
    const double cx = x0 + ix * dx;
    const double cy = y0 + iy * dy;
    int64_t edge_key[4];  // bottom, right, top, left
    bool crossed[4];
    crossed[0] = sbl != sbr;
    crossed[1] = sbr != str_;
    crossed[2] = stl != str_;
    crossed[3] = sbl != stl;
    edge_key[0] = h_edge(ix, iy, stride);
    edge_key[1] = v_edge(ix + 1, iy, stride);
    edge_key[2] = h_edge(ix, iy + 1, stride);
    edge_key[3] = v_edge(ix, iy, stride);
    if (crossed[0]) add_crossing(edge_key[0], bl, br, cx, cy, true);
    if (crossed[1]) add_crossing(edge_key[1], br, tr, cx + dx, cy, false);
    if (crossed[2]) add_crossing(edge_key[2], tl, tr, cx, cy + dy, true);
    if (crossed[3]) add_crossing(edge_key[3], bl, tl, cx, cy, false);

    int ce[4];
    int nc = 0;
    for (int e = 0; e < 4; ++e) {
      if (crossed[e]) ce[nc++] = e;
    }
    if (nc == 2) {
      segments.emplace_back(edge_key[ce[0]], edge_key[ce[1]]);
    } else if (nc == 4) {
      // Saddle: the center sample decides which corners the curve separates.
      if ((center >= 0.0) == sbl) {
        segments.emplace_back(edge_key[0], edge_key[1]);  // bottom-right
        segments.emplace_back(edge_key[2], edge_key[3]);  // top-left
      } else {
        segments.emplace_back(edge_key[0], edge_key[3]);  // bottom-left
        segments.emplace_back(edge_key[1], edge_key[2]);  // right-top
      }
    }
  }

  std::vector<Polyline> stitch(CurveKind kind) const {
    std::unordered_map<int64_t, std::vector<int>> adj;
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
      adj[segments[s].first].push_back(s);
      adj[segments[s].second].push_back(s);
    }
    std::vector<bool> visited(segments.size(), false);
    std::vector<Polyline> out;

    auto walk = [&](int start_seg, int64_t start_edge) {
      Polyline line{kind, {}};
      line.points.push_back(cross_pt.at(start_edge));
      int seg = start_seg;
      int64_t edge = start_edge;
      while (true) {
        visited[static_cast<size_t>(seg)] = true;
        edge = (segments[static_cast<size_t>(seg)].first == edge)
                   ? segments[static_cast<size_t>(seg)].second
                   : segments[static_cast<size_t>(seg)].first;
        line.points.push_back(cross_pt.at(edge));
        int next = -1;
        for (int cand : adj.at(edge)) {
          if (!visited[static_cast<size_t>(cand)]) {
            next = cand;
            break;
          }
        }
        if (next < 0) break;
        seg = next;
      }
      out.push_back(std::move(line));
    };

    // Open chains first (endpoints of degree 1), then closed loops.
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
      if (visited[static_cast<size_t>(s)]) continue;
      const int64_t a = segments[static_cast<size_t>(s)].first;
      const int64_t b = segments[static_cast<size_t>(s)].second;
      if (adj.at(a).size() == 1) {
        walk(s, a);
      } else if (adj.at(b).size() == 1) {
        walk(s, b);
      }
    }
    for (int s = 0; s < static_cast<int>(segments.size()); ++s) {
      if (!visited[static_cast<size_t>(s)]) walk(s, segments[static_cast<size_t>(s)].first);
    }
    return out;
  }
};

}  // namespace

CurveSet trace(const ComplexPoly& f, std::array<double, 4> bbox, int resolution) {
  if (resolution < 16) throw std::domain_error("trace: resolution must be >= 16");
  if (resolution > 8192) throw std::domain_error("trace: resolution must be <= 8192");
  const auto [x_min, x_max, y_min, y_max] = bbox;
  if (!(x_min < x_max && y_min < y_max)) throw std::domain_error("trace: degenerate bbox");

  CurveSet cs;
  cs.bbox = bbox;
  cs.resolution = resolution;

  const double dx = (x_max - x_min) / resolution;
  const double dy = (y_max - y_min) / resolution;

  FieldTracer tracer[2];
  for (auto& t : tracer) {
    t.res = resolution;
    t.x0 = x_min;
    t.y0 = y_min;
    t.dx = dx;
    t.dy = dy;
  }

  auto eval_row = [&](int iy) {
    std::vector<Complex> row(static_cast<size_t>(resolution) + 1);
    const double y = y_min + iy * dy;
    for (int ix = 0; ix <= resolution; ++ix) {
      row[static_cast<size_t>(ix)] = eval(f, Complex(x_min + ix * dx, y));
    }
    return row;
  };

  std::vector<Complex> row_lo = eval_row(0);
  for (int iy = 0; iy < resolution; ++iy) {
    std::vector<Complex> row_hi = eval_row(iy + 1);
    for (int ix = 0; ix < resolution; ++ix) {
      const Complex bl = row_lo[static_cast<size_t>(ix)];
      const Complex br = row_lo[static_cast<size_t>(ix) + 1];
      const Complex tl = row_hi[static_cast<size_t>(ix)];
      const Complex tr = row_hi[static_cast<size_t>(ix) + 1];
      Complex center{0.0};
      bool center_known = false;
      for (int fi = 0; fi < 2; ++fi) {
        const auto get = kFields[fi].get;
        const double vbl = get(bl), vbr = get(br), vtr = get(tr), vtl = get(tl);
        const bool sbl = vbl >= 0.0;
        const int config = sbl | ((vbr >= 0.0) << 1) | ((vtr >= 0.0) << 2) | ((vtl >= 0.0) << 3);
        if ((config == 5 || config == 10) && !center_known) {
          center = eval(f, Complex(x_min + (ix + 0.5) * dx, y_min + (iy + 0.5) * dy));
          center_known = true;
        }
        tracer[fi].cell(ix, iy, vbl, vbr, vtr, vtl, get(center));
      }
    }
    row_lo = std::move(row_hi);
  }

  for (int fi = 0; fi < 2; ++fi) {
    auto lines = tracer[fi].stitch(kFields[fi].kind);
    for (auto& l : lines) cs.curves.push_back(std::move(l));
  }
  return cs;
}

namespace {

double cross2(double ax, double ay, double bx, double by) { return ax * by - ay * bx; }

}  // namespace

std::vector<std::array<double, 2>> curve_intersections(const CurveSet& cs, double tol) {
  const double dx = (cs.bbox[1] - cs.bbox[0]) / cs.resolution;
  const double dy = (cs.bbox[3] - cs.bbox[2]) / cs.resolution;

  struct Seg {
    std::array<double, 2> a, b;
  };
  auto cell_of = [&](const Seg& s) {
    const double mx = 0.5 * (s.a[0] + s.b[0]);
    const double my = 0.5 * (s.a[1] + s.b[1]);
    const int cx = std::clamp(static_cast<int>((mx - cs.bbox[0]) / dx), 0, cs.resolution - 1);
    const int cy = std::clamp(static_cast<int>((my - cs.bbox[2]) / dy), 0, cs.resolution - 1);
    return static_cast<int64_t>(cy) * cs.resolution + cx;
  };

  std::unordered_map<int64_t, std::vector<Seg>> re_cells;
  std::vector<std::pair<int64_t, Seg>> im_segs;
  bool has_re = false, has_im = false;
  for (const Polyline& pl : cs.curves) {
    for (size_t i = 0; i + 1 < pl.points.size(); ++i) {
      Seg s{pl.points[i], pl.points[i + 1]};
      if (pl.kind == CurveKind::re) {
        has_re = true;
        re_cells[cell_of(s)].push_back(s);
      } else {
        has_im = true;
        im_segs.emplace_back(cell_of(s), s);
      }
    }
  }
  if (!has_re || !has_im) return {};

  std::vector<std::array<double, 2>> points;
  for (const auto& [cell, q] : im_segs) {
    auto it = re_cells.find(cell);
    if (it == re_cells.end()) continue;
    for (const Seg& p : it->second) {
      const double d1x = p.b[0] - p.a[0], d1y = p.b[1] - p.a[1];
      const double d2x = q.b[0] - q.a[0], d2y = q.b[1] - q.a[1];
      const double denom = cross2(d1x, d1y, d2x, d2y);
      const double scale = (std::abs(d1x) + std::abs(d1y)) * (std::abs(d2x) + std::abs(d2y));
      if (std::abs(denom) <= 1e-14 * scale) continue;  // parallel
      const double wx = q.a[0] - p.a[0], wy = q.a[1] - p.a[1];
      const double t = cross2(wx, wy, d2x, d2y) / denom;
      const double u = cross2(wx, wy, d1x, d1y) / denom;
      if (t < -1e-12 || t > 1.0 + 1e-12 || u < -1e-12 || u > 1.0 + 1e-12) continue;
      points.push_back({p.a[0] + t * d1x, p.a[1] + t * d1y});
    }
  }

  // Deduplicate within tol, keeping first occurrences in sorted order.
  std::sort(points.begin(), points.end());
  std::vector<std::array<double, 2>> out;
  for (const auto& pt : points) {
    bool dup = false;
    for (auto it = out.rbegin(); it != out.rend(); ++it) {
      if (std::hypot(pt[0] - (*it)[0], pt[1] - (*it)[1]) <= tol) {
        dup = true;
        break;
      }
      if (pt[0] - (*it)[0] > tol) break;  // sorted by x: no closer matches behind
    }
    if (!dup) out.push_back(pt);
  }
  return out;
}

}  // namespace ginter
