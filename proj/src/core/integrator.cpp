#include "core/integrator.hpp"

#include "core/gauss_legendre.hpp"

#include <cmath>
#include <list>
#include <mutex>
#include <unordered_map>

namespace curveft {

namespace {

// Flattened tensor-product geometry of one chart: node positions and the
// product weight (GL weight * area element * 1/m * window).
struct ChartGeometry {
  int d = 0;
  std::int64_t count = 0;
  std::vector<double> pos;  // count * d
  std::vector<double> w;    // count
  std::size_t bytes() const { return (pos.size() + w.size()) * sizeof(double) + 64; }
};

struct GeoKey {
  std::uint64_t chart_id = 0;
  std::uint64_t window_id = 0;
  std::array<int, 3> nodes{0, 0, 0};
  bool operator==(const GeoKey& o) const {
    return chart_id == o.chart_id && window_id == o.window_id && nodes == o.nodes;
  }
};

struct GeoKeyHash {
  std::size_t operator()(const GeoKey& k) const {
    std::size_t h = std::hash<std::uint64_t>{}(k.chart_id * 1000003u + k.window_id);
    for (int n : k.nodes) h = h * 1099511628211ull + static_cast<std::size_t>(n + 7);
    return h;
  }
};

class GeometryCache {
 public:
  static GeometryCache& instance() {
    static GeometryCache cache;
    return cache;
  }

  std::shared_ptr<const ChartGeometry> get(const GeoKey& key,
                                           const std::function<ChartGeometry()>& build) {
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) {
        lru_.splice(lru_.begin(), lru_, it->second.lru_it);
        return it->second.geo;
      }
    }
    auto geo = std::make_shared<const ChartGeometry>(build());
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it != map_.end()) return it->second.geo;
    lru_.push_front(key);
    map_[key] = Entry{geo, lru_.begin()};
    bytes_ += geo->bytes();
    while (bytes_ > budget_ && map_.size() > 1) {
      GeoKey victim = lru_.back();
      lru_.pop_back();
      auto vit = map_.find(victim);
      bytes_ -= vit->second.geo->bytes();
      map_.erase(vit);
    }
    return geo;
  }

  void set_budget(std::size_t b) {
    std::lock_guard<std::mutex> lock(mutex_);
    budget_ = b;
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.clear();
    lru_.clear();
    bytes_ = 0;
  }

 private:
  struct Entry {
    std::shared_ptr<const ChartGeometry> geo;
    std::list<GeoKey>::iterator lru_it;
  };
  std::mutex mutex_;
  std::unordered_map<GeoKey, Entry, GeoKeyHash> map_;
  std::list<GeoKey> lru_;
  std::size_t bytes_ = 0;
  std::size_t budget_ = std::size_t(256) * 1024 * 1024;
};

ChartGeometry build_geometry(const Surface& surface, int chart_index, const Window* window,
                             const Box& box, const std::vector<int>& nodes) {
  const Chart& chart = surface.chart(chart_index);
  const int m = chart.param_dim();
  const int d = chart.ambient_dim();
  ChartGeometry geo;
  geo.d = d;
  std::int64_t count = 1;
  for (int a = 0; a < m; ++a) count *= nodes[a];
  geo.count = count;
  geo.pos.resize(count * d);
  geo.w.resize(count);

  std::vector<const GaussLegendreRule*> rules(m);
  for (int a = 0; a < m; ++a) rules[a] = &gauss_legendre(nodes[a]);

  const double mweight = surface.multiplicity_weight(chart_index);
  std::vector<int> idx(m, 0);
  Vec u(m);
  for (std::int64_t flat = 0; flat < count; ++flat) {
    double gl_w = mweight;
    for (int a = 0; a < m; ++a) {
      double half = 0.5 * box.width(a);
      u[a] = box.lo[a] + half * (1.0 + rules[a]->nodes[idx[a]]);
      gl_w *= half * rules[a]->weights[idx[a]];
    }
    Vec p = chart.position(u);
    double w = gl_w * chart.area_element(u);
    if (window) w *= window->value(u);
    for (int c = 0; c < d; ++c) geo.pos[flat * d + c] = p[c];
    geo.w[flat] = w;

    int a = 0;
    while (a < m && ++idx[a] == nodes[a]) idx[a++] = 0;
  }
  return geo;
}

std::shared_ptr<const ChartGeometry> geometry_for(const Surface& surface, int chart_index,
                                                  const Window* window, const Box& box,
                                                  const std::vector<int>& nodes) {
  GeoKey key;
  key.chart_id = surface.chart(chart_index).id();
  // Windowed and plain geometry differ; the effective box is a deterministic
  // function of (chart, window), so (window id, nodes) identifies it.
  key.window_id = window ? window->id() : 0;
  for (std::size_t a = 0; a < nodes.size(); ++a) key.nodes[a] = nodes[a];
  return GeometryCache::instance().get(
      key, [&]() { return build_geometry(surface, chart_index, window, box, nodes); });
}

double mass_of(const ChartGeometry& geo) {
  Kahan acc;
  for (std::int64_t i = 0; i < geo.count; ++i) acc.add(geo.w[i]);
  return acc.value();
}

Complex ft_of(const ChartGeometry& geo, const Vec& xi) {
  Kahan re, im;
  const int d = geo.d;
  const double* pos = geo.pos.data();
  const double* w = geo.w.data();
  for (std::int64_t i = 0; i < geo.count; ++i) {
    double dot = 0.0;
    for (int c = 0; c < d; ++c) dot += pos[i * d + c] * xi[c];
    double phase = -kTwoPi * dot;
    re.add(w[i] * std::cos(phase));
    im.add(w[i] * std::sin(phase));
  }
  return Complex(re.value(), im.value());
}

// Effective integration box; false when the chart does not carry the window.
bool effective_box(const Surface& surface, int chart_index, const Window* window, Box* out) {
  const Chart& chart = surface.chart(chart_index);
  if (!window) {
    *out = chart.domain();
    return true;
  }
  if (window->chart_index() != chart_index) return false;
  return window->support().intersect(chart.domain(), out);
}

std::vector<int> node_rule(const Chart& chart, const Box& box, double xi_norm,
                           const QuadOptions& opts) {
  std::vector<int> nodes(chart.param_dim());
  std::int64_t total = 1;
  for (int a = 0; a < chart.param_dim(); ++a) {
    double speed = std::max(1.0, chart.lipschitz(a));
    double want = opts.nyquist_factor * (1.0 + xi_norm) * box.width(a) * speed;
    int n = std::max(opts.min_nodes_per_axis, static_cast<int>(std::ceil(want)));
    n = ladder_round_up(n);
    if (n > opts.max_nodes_per_axis)
      fail(ErrorCode::Budget, "quadrature: node rule exceeds max_nodes_per_axis for chart '" +
                                  chart.label() + "'");
    nodes[a] = n;
    total *= n;
    if (total > opts.max_nodes_total)
      fail(ErrorCode::Budget, "quadrature: total node budget exceeded for chart '" +
                                  chart.label() + "'");
  }
  return nodes;
}

std::vector<int> coarser(const std::vector<int>& nodes) {
  std::vector<int> out(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) out[a] = ladder_previous(nodes[a]);
  return out;
}

std::vector<int> finer(const std::vector<int>& nodes, const QuadOptions& opts) {
  std::vector<int> out(nodes.size());
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    int n = ladder_round_up(nodes[a] + 1);
    if (n > opts.max_nodes_per_axis)
      fail(ErrorCode::Quadrature, "quadrature: cannot refine further (node cap reached)");
    out[a] = n;
  }
  return out;
}

}  // namespace

std::vector<int> nodes_for_chart(const Chart& chart, const Box& box, double xi_norm,
                                 const QuadOptions& opts) {
  return node_rule(chart, box, xi_norm, opts);
}

MassResult total_mass(const Surface& surface, const Window* window, const QuadOptions& opts) {
  MassResult out;
  for (int i = 0; i < surface.chart_count(); ++i) {
    Box box;
    if (!effective_box(surface, i, window, &box)) continue;
    std::vector<int> nodes = node_rule(surface.chart(i), box, 0.0, opts);
    double value = 0.0, err = std::numeric_limits<double>::infinity();
    std::int64_t used = 0;
    for (int ref = 0; ref <= opts.max_refinements; ++ref) {
      auto fine = geometry_for(surface, i, window, box, nodes);
      auto coarse = geometry_for(surface, i, window, box, coarser(nodes));
      value = mass_of(*fine);
      err = std::abs(value - mass_of(*coarse));
      used = fine->count;
      if (err <= opts.fail_tol * std::max(1.0, std::abs(value))) break;
      if (ref == opts.max_refinements)
        fail(ErrorCode::Quadrature, "total_mass: quadrature did not settle for chart " +
                                        std::to_string(i));
      nodes = finer(nodes, opts);
    }
    out.value += value;
    out.est_error += err;
    out.node_count += used;
  }
  return out;
}

FourierSample ft_point(const Surface& surface, const Window* window, const Vec& xi,
                       const QuadOptions& opts) {
  if (xi.size() != surface.ambient_dim())
    fail(ErrorCode::InvalidArgument, "ft_point: frequency dimension mismatch");
  FourierSample out;
  out.xi = xi;
  const double q = xi.norm();
  for (int i = 0; i < surface.chart_count(); ++i) {
    Box box;
    if (!effective_box(surface, i, window, &box)) continue;
    std::vector<int> nodes = node_rule(surface.chart(i), box, q, opts);
    Complex value;
    double err = std::numeric_limits<double>::infinity();
    std::int64_t used = 0;
    for (int ref = 0; ref <= opts.max_refinements; ++ref) {
      auto fine = geometry_for(surface, i, window, box, nodes);
      auto coarse = geometry_for(surface, i, window, box, coarser(nodes));
      value = ft_of(*fine, xi);
      err = std::abs(value - ft_of(*coarse, xi));
      used = fine->count;
      if (err <= opts.fail_tol) break;
      if (ref == opts.max_refinements)
        fail(ErrorCode::Quadrature,
             "ft_point: quadrature error estimate " + format_double(err) +
                 " above tolerance at |xi| = " + format_double(q));
      nodes = finer(nodes, opts);
    }
    out.value += value;
    out.est_error += err;
    out.node_count += used;
  }
  return out;
}

FourierSample ft_point_with_nodes(const Surface& surface, const Window* window, const Vec& xi,
                                  const std::vector<std::vector<int>>& per_chart_nodes) {
  FourierSample out;
  out.xi = xi;
  for (int i = 0; i < surface.chart_count(); ++i) {
    Box box;
    if (!effective_box(surface, i, window, &box)) continue;
    auto geo = geometry_for(surface, i, window, box, per_chart_nodes.at(i));
    out.value += ft_of(*geo, xi);
    out.node_count += geo->count;
  }
  return out;
}

void set_geometry_cache_budget(std::size_t bytes) {
  GeometryCache::instance().set_budget(bytes);
}

void clear_geometry_cache() { GeometryCache::instance().clear(); }

}  // namespace curveft
