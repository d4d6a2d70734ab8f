#include "snc/finders.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "snc/neighborhoods.hpp"
#include "snc/random_models.hpp"

namespace snc {

std::string_view to_string(FinderKind kind) noexcept {
  switch (kind) {
    case FinderKind::typical: return "typical";
    case FinderKind::min_outdegree: return "mindeg";
    case FinderKind::bijumbled: return "bijumbled";
  }
  return "unknown";
}

FinderKind parse_finder_kind(std::string_view text) {
  if (text == "typical") return FinderKind::typical;
  if (text == "mindeg" || text == "min_outdegree") return FinderKind::min_outdegree;
  if (text == "bijumbled") return FinderKind::bijumbled;
  throw std::invalid_argument("unknown finder '" + std::string(text) + "'");
}

namespace {

void require_density(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("p must lie in (0,1)");
}

void finish(const Orientation& d, FinderTrace& trace, Vertex w) {
  trace.w = w;
  trace.sets.emplace("X", first_neighborhood(d, w));
  trace.sets.emplace("Y", second_neighborhood(d, w));
  const auto x = trace.sets.at("X").size();
  const auto y = trace.sets.at("Y").size();
  trace.scalars["|X|"] = static_cast<double>(x);
  trace.scalars["|Y|"] = static_cast<double>(y);
  trace.verdict = y >= x;
}

}  // namespace

FinderTrace finder_typical(const Orientation& d, double p, double alpha) {
  require_density(p);
  if (!(alpha > 0.0 && alpha < 0.25)) throw std::invalid_argument("alpha must lie in (0, 1/4)");
  const std::size_t n = d.order();

  FinderTrace trace;
  trace.kind = FinderKind::typical;
  trace.regime["p_at_most_quarter_minus_alpha"] = p <= 0.25 - alpha;

  const double raw = (1.0 - alpha) * static_cast<double>(n) * p / 2.0;
  const std::size_t threshold = ceil_count(raw);
  trace.scalars["threshold"] = static_cast<double>(threshold);

  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if (d.out_degree(v) < threshold) s.insert(v);
  const VertexSet t = s.complement();
  trace.sets.emplace("S", s);
  trace.sets.emplace("T", t);
  if (t.empty()) {
    trace.regime_failure = true;
    return trace;
  }

  std::size_t arcs_in_t = 0;
  std::size_t best = 0;
  Vertex w = *t.first();
  t.for_each([&](Vertex v) {
    const std::size_t deg = popcount_and(d.out_row(v), t.words());
    arcs_in_t += deg;
    if (deg > best) {
      best = deg;
      w = v;
    }
  });
  const double average = static_cast<double>(arcs_in_t) / static_cast<double>(t.size());
  trace.scalars["e(T)"] = static_cast<double>(arcs_in_t);
  trace.scalars["deg_T(w)"] = static_cast<double>(best);
  trace.scalars["e(T)/|T|"] = average;
  trace.regime["averaging_bound"] = static_cast<double>(best) >= average;

  finish(d, trace, w);
  trace.sets.emplace("N", trace.sets.at("X") & t);
  return trace;
}

FinderTrace finder_min_outdegree(const Orientation& d) {
  FinderTrace trace;
  trace.kind = FinderKind::min_outdegree;
  const std::size_t n = d.order();
  if (n == 0) {
    trace.regime_failure = true;
    return trace;
  }
  Vertex w = 0;
  for (Vertex v = 1; v < n; ++v)
    if (d.out_degree(v) < d.out_degree(w)) w = v;
  trace.scalars["min_outdegree"] = static_cast<double>(d.out_degree(w));
  trace.regime["locally_cornering"] = is_locally_cornering(d);
  finish(d, trace, w);
  return trace;
}

FinderTrace finder_bijumbled(const Orientation& d, double p, double eps) {
  require_density(p);
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("eps must lie in (0,1)");
  const std::size_t n = d.order();
  const Graph& g = d.base();
  const double nd = static_cast<double>(n);
  const double root = std::sqrt(eps);

  FinderTrace trace;
  trace.kind = FinderKind::bijumbled;
  trace.regime["eps_below_1_over_225"] = eps < 1.0 / 225.0;
  trace.regime["p_below_1_minus_15_sqrt_eps"] = p < 1.0 - 15.0 * root;

  const double codeg_cut = (1.0 - eps) * nd * p * p;
  const std::size_t bad1_cut = ceil_count(root * nd);
  const std::size_t bad2_cut = ceil_count(2.0 * root * nd * p);
  trace.scalars["codegree_cut"] = codeg_cut;
  trace.scalars["bad1_cut"] = static_cast<double>(bad1_cut);
  trace.scalars["bad2_cut"] = static_cast<double>(bad2_cut);

  std::vector<std::size_t> b_size(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (static_cast<double>(popcount_and(g.row(u), g.row(v))) <= codeg_cut) {
        ++b_size[u];
        ++b_size[v];
      }
  VertexSet bad1(n);
  VertexSet bad2(n);
  std::size_t max_b = 0;
  for (Vertex u = 0; u < n; ++u) {
    max_b = std::max(max_b, b_size[u]);
    if (b_size[u] >= bad1_cut) bad1.insert(u);
    if (d.out_degree(u) < bad2_cut) bad2.insert(u);
  }
  trace.scalars["max|B(u)|"] = static_cast<double>(max_b);
  const VertexSet u_set = (bad1 | bad2).complement();
  trace.sets.emplace("bad1", bad1);
  trace.sets.emplace("bad2", bad2);
  trace.sets.emplace("U", u_set);
  if (u_set.empty()) {
    trace.regime_failure = true;
    return trace;
  }

  Vertex w = *u_set.first();
  std::size_t best = popcount_and(d.out_row(w), u_set.words());
  u_set.for_each([&](Vertex v) {
    const std::size_t deg = popcount_and(d.out_row(v), u_set.words());
    if (deg < best) {
      best = deg;
      w = v;
    }
  });
  trace.scalars["deg_U(w)"] = static_cast<double>(best);
  trace.regime["w_outdegree_below_half_minus_sqrt_eps_n"] = static_cast<double>(d.out_degree(w)) < nd / 2.0 - root * nd;

  const double lambda = 1.0 - 2.0 * root;
  trace.scalars["lambda"] = lambda;
  finish(d, trace, w);
  trace.scalars["|reach2(w)|"] = static_cast<double>((two_step_reach(d, w) - VertexSet(n, {w})).size());
  trace.regime["w_is_lambda_king"] = lambda > 0.0 && lambda_king_check(d, w, lambda);
  trace.regime["w_is_lambda_king_two_step"] =
      lambda > 0.0 && lambda_king_check(d, w, lambda, KingReach::any_two_step_path);
  return trace;
}

bool lambda_king_check(const Orientation& d, Vertex v, double lambda, KingReach reach) {
  const std::size_t n = d.order();
  if (v >= n) throw std::invalid_argument("vertex out of range");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw std::invalid_argument("lambda must lie in (0,1]");
  std::size_t count = 0;
  if (reach == KingReach::exact_distance_two) {
    count = second_neighborhood(d, v).size();
  } else {
    VertexSet r = two_step_reach(d, v);
    r.erase(v);
    count = r.size();
  }
  return static_cast<double>(count) >= lambda * static_cast<double>(n);
}

bool length2_cover_check(const Orientation& d) {
  const std::size_t n = d.order();
  for (Vertex u = 0; u < n; ++u) {
    VertexSet covered = two_step_reach(d, u);
    covered |= first_neighborhood(d, u);
    covered.insert(u);
    if (covered.size() != n) return false;
  }
  return true;
}

}  // namespace snc
