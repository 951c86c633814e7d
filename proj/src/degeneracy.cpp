#include "peanuts/degeneracy.hpp"

#include <cassert>

namespace peanuts {

namespace {

// Indexed binary min-heap over (residual degree, vertex id). Degrees only
// decrease during peeling, so updates sift up.
class DegreeHeap {
public:
  explicit DegreeHeap(const std::vector<std::uint32_t>& degree) : degree_(degree) {
    const std::size_t n = degree.size();
    heap_.resize(n);
    slot_.assign(n, kRemoved);
    for (std::size_t v = 0; v < n; ++v) heap_[v] = static_cast<Vertex>(v);
    for (std::size_t i = 0; i < n; ++i) slot_[heap_[i]] = i;
    for (std::size_t i = n / 2; i-- > 0;) sift_down(i);
  }

  bool empty() const { return heap_.empty(); }

  Vertex pop_min() {
    Vertex v = heap_.front();
    slot_[v] = kRemoved;
    Vertex last = heap_.back();
    heap_.pop_back();
    if (!heap_.empty()) {
      heap_[0] = last;
      slot_[last] = 0;
      sift_down(0);
    }
    return v;
  }

  void decreased(Vertex v) { sift_up(slot_[v]); }
  bool contains(Vertex v) const { return slot_[v] != kRemoved; }

private:
  static constexpr std::size_t kRemoved = static_cast<std::size_t>(-1);

  bool less(Vertex a, Vertex b) const {
    if (degree_[a] != degree_[b]) return degree_[a] < degree_[b];
    return a < b;
  }

  void sift_up(std::size_t i) {
    Vertex v = heap_[i];
    while (i > 0) {
      std::size_t parent = (i - 1) / 2;
      if (!less(v, heap_[parent])) break;
      heap_[i] = heap_[parent];
      slot_[heap_[i]] = i;
      i = parent;
    }
    heap_[i] = v;
    slot_[v] = i;
  }

  void sift_down(std::size_t i) {
    Vertex v = heap_[i];
    const std::size_t n = heap_.size();
    while (true) {
      std::size_t child = 2 * i + 1;
      if (child >= n) break;
      if (child + 1 < n && less(heap_[child + 1], heap_[child])) ++child;
      if (!less(heap_[child], v)) break;
      heap_[i] = heap_[child];
      slot_[heap_[i]] = i;
      i = child;
    }
    heap_[i] = v;
    slot_[v] = i;
  }

  const std::vector<std::uint32_t>& degree_;
  std::vector<Vertex> heap_;
  std::vector<std::size_t> slot_;
};

} // namespace

DegeneracyInfo degeneracy_order(const Graph& g) {
  const Vertex n = g.num_vertices();
  DegeneracyInfo info;
  info.position.resize(n);
  info.out_degree.resize(n);
  if (n == 0) return info;

  std::vector<std::uint32_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

  DegreeHeap heap(degree);
  for (Vertex step = 0; step < n; ++step) {
    Vertex v = heap.pop_min();
    info.position[v] = step;
    info.out_degree[v] = degree[v];
    info.degeneracy = std::max(info.degeneracy, degree[v]);
    for (Vertex u : g.neighbors(v)) {
      if (heap.contains(u)) {
        --degree[u];
        heap.decreased(u);
      }
    }
  }
  return info;
}

VertexList out_neighbors(const Graph& g, const DegeneracyInfo& info, Vertex v) {
  VertexList result;
  result.reserve(info.out_degree[v]);
  const Vertex pos = info.position[v];
  for (Vertex u : g.neighbors(v))
    if (info.position[u] > pos) result.push_back(u);
  assert(result.size() == info.out_degree[v]);
  return result;
}

} // namespace peanuts
