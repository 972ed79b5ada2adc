#include "genus/preprocess.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <stdexcept>

namespace genus {

namespace {

int find_in(const std::vector<int>& list, int x) {
  auto it = std::find(list.begin(), list.end(), x);
  assert(it != list.end());
  return static_cast<int>(it - list.begin());
}

void erase_value(std::vector<int>& list, int x) {
  list.erase(list.begin() + find_in(list, x));
}

}  // namespace

Reduction reduce_graph(const Graph& g) {
  Reduction red;
  if (g.n < 3) {
    red.reduced = g;
    red.kept.resize(g.n);
    for (int v = 0; v < g.n; ++v) red.kept[v] = v;
    return red;
  }

  std::vector<std::vector<int>> adj = g.adj;
  std::vector<char> alive(g.n, 1);
  int alive_count = g.n;

  std::deque<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) <= 2) queue.push_back(v);

  auto degree = [&](int v) { return static_cast<int>(adj[v].size()); };
  auto has = [&](int u, int v) {
    return std::find(adj[u].begin(), adj[u].end(), v) != adj[u].end();
  };

  while (!queue.empty() && alive_count > 1) {
    int v = queue.front();
    queue.pop_front();
    if (!alive[v] || degree(v) >= 3) continue;
    assert(degree(v) >= 1);  // reductions keep the graph connected

    if (degree(v) == 1) {
      int a = adj[v][0];
      red.steps.push_back({ReductionStep::Kind::DeleteLeaf, v, a, -1, -1});
      erase_value(adj[a], v);
      adj[v].clear();
      alive[v] = 0;
      --alive_count;
      if (degree(a) <= 2) queue.push_back(a);
      continue;
    }

    int a = adj[v][0], b = adj[v][1];
    assert(a != b);  // no loops in a simple graph
    int suppress_index = static_cast<int>(red.steps.size());
    red.steps.push_back({ReductionStep::Kind::Suppress, v, a, b, -1});
    erase_value(adj[a], v);
    erase_value(adj[b], v);
    adj[v].clear();
    alive[v] = 0;
    --alive_count;
    if (has(a, b)) {
      red.steps.push_back(
          {ReductionStep::Kind::DropParallel, v, a, b, suppress_index});
      if (degree(a) <= 2) queue.push_back(a);
      if (degree(b) <= 2) queue.push_back(b);
    } else {
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
  }

  red.kept.reserve(alive_count);
  for (int v = 0; v < g.n; ++v)
    if (alive[v]) red.kept.push_back(v);
  std::vector<int> new_id(g.n, -1);
  for (size_t i = 0; i < red.kept.size(); ++i) new_id[red.kept[i]] = static_cast<int>(i);

  std::vector<std::pair<int, int>> edges;
  for (int v : red.kept)
    for (int w : adj[v])
      if (v < w) edges.emplace_back(new_id[v], new_id[w]);
  red.reduced = Graph::from_edges(alive_count, std::move(edges));
  assert(red.reduced.n == 1 || red.reduced.min_degree() >= 3);
  return red;
}

RotationSystem restore_rotation(const Graph& original, const Reduction& red,
                                const RotationSystem& reduced_rot) {
  validate_rotation(red.reduced, reduced_rot);
  if (static_cast<int>(red.kept.size()) != red.reduced.n)
    throw std::invalid_argument("reduction log does not match its graph");

  // cyclic neighbor lists in original ids; filled in as vertices reappear
  std::vector<std::vector<int>> orders(original.n);
  auto reduced_orders = neighbor_orders(red.reduced, reduced_rot);
  for (int i = 0; i < red.reduced.n; ++i) {
    orders[red.kept[i]].reserve(reduced_orders[i].size());
    for (int w : reduced_orders[i]) orders[red.kept[i]].push_back(red.kept[w]);
  }

  std::vector<char> consumed(red.steps.size(), 0);
  for (int i = static_cast<int>(red.steps.size()) - 1; i >= 0; --i) {
    if (consumed[i]) continue;
    const ReductionStep& st = red.steps[i];
    switch (st.kind) {
      case ReductionStep::Kind::DeleteLeaf: {
        // any corner of the neighbor works; pin the one after its list head
        orders[st.v] = {st.a};
        auto& at_a = orders[st.a];
        at_a.insert(at_a.empty() ? at_a.begin() : at_a.begin() + 1, st.v);
        break;
      }
      case ReductionStep::Kind::Suppress: {
        // subdivide the edge a-b that replaced v
        orders[st.v] = {st.a, st.b};
        orders[st.a][find_in(orders[st.a], st.b)] = st.v;
        orders[st.b][find_in(orders[st.b], st.a)] = st.v;
        break;
      }
      case ReductionStep::Kind::DropParallel: {
        // the path a-v-b lies alongside the surviving edge a-b, forming a
        // genus-0 bigon; the cause suppression is fully undone here
        consumed[st.cause] = 1;
        orders[st.v] = {st.a, st.b};
        auto& at_a = orders[st.a];
        at_a.insert(at_a.begin() + find_in(at_a, st.b) + 1, st.v);
        auto& at_b = orders[st.b];
        at_b.insert(at_b.begin() + find_in(at_b, st.a), st.v);
        break;
      }
    }
  }
  return rotation_from_orders(original, orders);
}

}  // namespace genus
