#include "snc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace snc {

namespace {

void check_order(std::size_t n) {
  if (n > kMaxVertices)
    throw std::invalid_argument("order " + std::to_string(n) + " exceeds kMaxVertices (" +
                                std::to_string(kMaxVertices) + ")");
}

std::string pair_text(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

BitMatrix::BitMatrix(std::size_t n) : n_(n), stride_(words_for(n)), data_(n * words_for(n), 0) {
  check_order(n);
}

// ---------------------------------------------------------------- Graph

Graph::Graph(std::size_t n) : adj_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  *this = std::move(b).build();
}

Graph Graph::complete(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge_unchecked(u, v);
  return std::move(b).build();
}

Graph Graph::cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u) b.add_edge(u, static_cast<Vertex>((u + 1) % n));
  return std::move(b).build();
}

Graph Graph::path(std::size_t n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return std::move(b).build();
}

Graph Graph::star(std::size_t leaves) {
  GraphBuilder b(leaves + 1);
  for (Vertex v = 1; v <= leaves; ++v) b.add_edge(0, v);
  return std::move(b).build();
}

Graph Graph::complete_bipartite(std::size_t a, std::size_t b_size) {
  GraphBuilder b(a + b_size);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = static_cast<Vertex>(a); v < a + b_size; ++v) b.add_edge_unchecked(u, v);
  return std::move(b).build();
}

Graph Graph::wheel(std::size_t rim) {
  if (rim < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
  GraphBuilder b(rim + 1);
  for (Vertex i = 1; i <= rim; ++i) {
    b.add_edge(0, i);
    b.add_edge(i, static_cast<Vertex>(i % rim + 1));
  }
  return std::move(b).build();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < order(); ++u) {
    for_each_bit(row(u), [&](Vertex v) {
      if (v > u) out.emplace_back(u, v);
    });
  }
  return out;
}

GraphBuilder::GraphBuilder(std::size_t n) : adj_(n) {}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  const auto n = order();
  if (u >= n || v >= n) throw std::invalid_argument("edge " + pair_text(u, v) + " out of range");
  if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
  if (adj_.test(u, v)) throw std::invalid_argument("duplicate edge " + pair_text(u, v));
  add_edge_unchecked(u, v);
}

Graph GraphBuilder::build() && {
  Graph g;
  g.adj_ = std::move(adj_);
  g.m_ = m_;
  return g;
}

// ---------------------------------------------------------------- Orientation

Orientation::Orientation(std::shared_ptr<const Graph> base) {
  *this = OrientationBuilder(std::move(base)).build();
}

Orientation::Orientation(std::size_t n, std::span<const Edge> arcs) {
  GraphBuilder gb(n);
  for (const auto& [u, v] : arcs) {
    if (u < n && v < n && u != v && gb.has_edge(u, v))
      throw std::invalid_argument("arc " + pair_text(u, v) + " repeats an existing edge");
    gb.add_edge(u, v);
  }
  OrientationBuilder ob(std::make_shared<const Graph>(std::move(gb).build()));
  for (const auto& [u, v] : arcs) ob.orient(u, v);
  *this = ob.build();
}

Orientation Orientation::transitive_tournament(std::size_t n) {
  return Orientation(std::make_shared<const Graph>(Graph::complete(n)));
}

Orientation Orientation::directed_cycle(std::size_t n) {
  OrientationBuilder b(std::make_shared<const Graph>(Graph::cycle(n)));
  for (Vertex u = 0; u < n; ++u) b.orient(u, static_cast<Vertex>((u + 1) % n));
  return b.build();
}

Orientation Orientation::rotational_tournament(std::size_t n) {
  if (n % 2 == 0) throw std::invalid_argument("rotational tournament needs odd order");
  OrientationBuilder b(std::make_shared<const Graph>(Graph::complete(n)));
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t k = 1; k <= (n - 1) / 2; ++k) b.orient(u, static_cast<Vertex>((u + k) % n));
  return b.build();
}

std::vector<std::size_t> Orientation::out_degrees() const {
  std::vector<std::size_t> d(order());
  for (Vertex u = 0; u < order(); ++u) d[u] = out_degree(u);
  return d;
}

std::size_t Orientation::min_out_degree() const {
  std::size_t best = 0;
  for (Vertex u = 0; u < order(); ++u) {
    const auto d = out_degree(u);
    if (u == 0 || d < best) best = d;
  }
  return best;
}

std::vector<Edge> Orientation::arcs() const {
  std::vector<Edge> out;
  out.reserve(base().edge_count());
  for (const auto& [u, v] : base().edges()) out.push_back(has_arc(u, v) ? Edge{u, v} : Edge{v, u});
  return out;
}

OrientationBuilder::OrientationBuilder(std::shared_ptr<const Graph> base)
    : base_(std::move(base)), out_(base_->order()) {
  for (Vertex u = 0; u < base_->order(); ++u) {
    auto src = base_->row(u);
    auto dst = out_.row(u);
    // keep only neighbours above u
    for (std::size_t i = 0; i < src.size(); ++i) {
      const std::size_t lo = i * kWordBits;
      Word mask;
      if (lo > u) {
        mask = ~Word{0};
      } else if (u - lo >= kWordBits - 1) {
        mask = 0;
      } else {
        mask = ~((Word{1} << (u - lo + 1)) - 1);
      }
      dst[i] = src[i] & mask;
    }
  }
}

OrientationBuilder::OrientationBuilder(const Orientation& from) : base_(from.base_), out_(from.out_) {}

void OrientationBuilder::orient(Vertex u, Vertex v) {
  if (u >= base_->order() || v >= base_->order() || !base_->adjacent(u, v))
    throw std::invalid_argument("no edge " + pair_text(u, v) + " to orient");
  out_.set(u, v);
  out_.reset(v, u);
}

void OrientationBuilder::reverse(Vertex u, Vertex v) {
  if (u >= base_->order() || v >= base_->order() || !out_.test(u, v))
    throw std::invalid_argument("no arc " + pair_text(u, v) + " to reverse");
  out_.reset(u, v);
  out_.set(v, u);
}

Orientation OrientationBuilder::build() const {
  Orientation o;
  o.base_ = base_;
  o.out_ = out_;
  return o;
}

}  // namespace snc
