#include "genus/search.hpp"

#include <cassert>
#include <chrono>
#include <deque>
#include <stdexcept>

#include "genus/bounds.hpp"
#include "genus/faces.hpp"
#include "genus/preprocess.hpp"
#include "genus/search_engine.hpp"

namespace genus {
namespace {

using Clock = std::chrono::steady_clock;
using Deadline = std::optional<Clock::time_point>;

Deadline make_deadline(const SearchOptions& opt) {
  if (!opt.time_limit_seconds) return std::nullopt;
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                            std::chrono::duration<double>(*opt.time_limit_seconds));
}

EngineOptions engine_options(const SearchOptions& opt, const Deadline& deadline) {
  EngineOptions eo;
  eo.lemma_filter = opt.lemma_filter;
  eo.near_root_fraction = opt.near_root_fraction;
  eo.deadline = deadline;
  return eo;
}

// from Euler's formula with at least one face
int max_possible_genus(const Graph& g) {
  return g.m >= g.n ? (g.m - g.n + 1) / 2 : 0;
}

void require_connected(const Graph& g) {
  if (!g.is_connected())
    throw std::invalid_argument("genus is defined here for connected graphs only");
}

RotationSystem unrelabel_rotation(const Graph& relabeled,
                                  const std::vector<int>& new_to_old,
                                  const Graph& target, const RotationSystem& rot) {
  auto orders = neighbor_orders(relabeled, rot);
  std::vector<std::vector<int>> out(target.n);
  for (int v = 0; v < relabeled.n; ++v) {
    auto& dst = out[new_to_old[v]];
    dst.reserve(orders[v].size());
    for (int w : orders[v]) dst.push_back(new_to_old[w]);
  }
  return rotation_from_orders(target, out);
}

template <class VSet>
GenusResult deepen(const Graph& g, int lb, const SearchOptions& opt,
                   const Deadline& deadline) {
  GenusResult res;
  res.lower_bound = lb;
  int cap = max_possible_genus(g);
  for (int target = lb; target <= cap; ++target) {
    SearchEngine<VSet> engine(g, engine_options(opt, deadline));
    EngineResult r = engine.run(EngineMode::Decide, target);
    res.nodes += r.nodes;
    if (r.timed_out) {
      res.timed_out = true;
      return res;
    }
    if (r.found) {
      res.genus = target;
      return res;
    }
  }
  assert(false && "some rotation system must reach the Euler cap");
  return res;
}

GenusResult compute_genus_impl(const Graph& g, const SearchOptions& opt,
                               const Deadline& deadline) {
  Graph work = g;
  if (opt.preprocess) work = reduce_graph(g).reduced;
  GenusResult res;
  if (work.m == 0 || work.max_degree() < 3) {
    res.genus = 0;
    return res;
  }
  if (opt.bfs_relabel) work = bfs_relabel(work).first;
  int lb = genus_lower_bound(work, opt.nontrivial_bounds).genus_lb;
  if (work.n <= 64) return deepen<VertexSet64>(work, lb, opt, deadline);
  return deepen<VertexSet128>(work, lb, opt, deadline);
}

template <class VSet>
EngineResult run_one(const Graph& g, const SearchOptions& opt,
                     const Deadline& deadline, EngineMode mode, int target,
                     const std::function<void(const RotationSystem&)>& emit = {}) {
  SearchEngine<VSet> engine(g, engine_options(opt, deadline));
  return engine.run(mode, target, emit);
}

EngineResult run_one_dispatch(
    const Graph& g, const SearchOptions& opt, const Deadline& deadline,
    EngineMode mode, int target,
    const std::function<void(const RotationSystem&)>& emit = {}) {
  if (g.n <= 64) return run_one<VertexSet64>(g, opt, deadline, mode, target, emit);
  return run_one<VertexSet128>(g, opt, deadline, mode, target, emit);
}

int rotation_genus(const Graph& g, const RotationSystem& rot) {
  if (g.n <= 64) return euler_genus(g.n, g.m, trace_faces<VertexSet64>(g, rot).count());
  return euler_genus(g.n, g.m, trace_faces<VertexSet128>(g, rot).count());
}

}  // namespace

std::pair<Graph, std::vector<int>> bfs_relabel(const Graph& g) {
  std::vector<int> order;
  order.reserve(g.n);
  std::vector<char> seen(g.n, 0);
  std::deque<int> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    order.push_back(v);
    for (int w : g.adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        queue.push_back(w);
      }
  }
  assert(static_cast<int>(order.size()) == g.n);
  std::vector<int> new_id(g.n);
  for (int i = 0; i < g.n; ++i) new_id[order[i]] = i;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.m);
  for (auto [a, b] : g.edges) edges.push_back({new_id[a], new_id[b]});
  return {Graph::from_edges(g.n, edges), order};
}

GenusResult compute_genus(const Graph& g, const SearchOptions& opt) {
  require_connected(g);
  return compute_genus_impl(g, opt, make_deadline(opt));
}

DecideResult genus_at_most(const Graph& g, int bound, const SearchOptions& opt) {
  require_connected(g);
  DecideResult res;
  if (bound < 0) return res;
  Deadline deadline = make_deadline(opt);
  Graph work = g;
  if (opt.preprocess) work = reduce_graph(g).reduced;
  if (work.m == 0 || work.max_degree() < 3) {
    res.at_most = true;  // genus zero
    return res;
  }
  if (bound >= max_possible_genus(work)) {
    res.at_most = true;
    return res;
  }
  if (opt.bfs_relabel) work = bfs_relabel(work).first;
  if (genus_lower_bound(work, opt.nontrivial_bounds).genus_lb > bound) return res;
  EngineResult r = run_one_dispatch(work, opt, deadline, EngineMode::Decide, bound);
  res.timed_out = r.timed_out;
  res.at_most = r.found;
  res.nodes = r.nodes;
  return res;
}

EmbeddingResult find_embedding(const Graph& g, std::optional<int> target,
                               const SearchOptions& opt) {
  require_connected(g);
  EmbeddingResult res;
  Deadline deadline = make_deadline(opt);

  // with an explicit target the full rotation space must stay reachable, so
  // the degree-1/2 reduction is skipped; the minimum-genus default keeps it
  SearchOptions eff = opt;
  int goal;
  if (target) {
    if (*target < 0) return res;
    eff.preprocess = false;
    goal = *target;
  } else {
    GenusResult gr = compute_genus_impl(g, opt, deadline);
    res.nodes += gr.nodes;
    if (gr.timed_out) {
      res.timed_out = true;
      return res;
    }
    goal = gr.genus;
  }

  Reduction red;
  Graph work = g;
  if (eff.preprocess) {
    red = reduce_graph(g);
    work = red.reduced;
  }
  if (work.m == 0 || work.max_degree() < 3) {
    if (goal == 0) {
      RotationSystem rot = natural_rotation(work);
      res.rotation = eff.preprocess ? restore_rotation(g, red, rot) : rot;
      res.found = true;
      res.genus = 0;
    }
    return res;
  }
  if (goal > max_possible_genus(work)) return res;
  std::pair<Graph, std::vector<int>> relab =
      eff.bfs_relabel
          ? bfs_relabel(work)
          : std::pair<Graph, std::vector<int>>{work, [&] {
              std::vector<int> ident(work.n);
              for (int i = 0; i < work.n; ++i) ident[i] = i;
              return ident;
            }()};
  if (genus_lower_bound(relab.first, eff.nontrivial_bounds).genus_lb > goal)
    return res;
  EngineResult r =
      run_one_dispatch(relab.first, eff, deadline, EngineMode::FirstExact, goal);
  res.nodes += r.nodes;
  res.timed_out = r.timed_out;
  if (!r.found) return res;
  RotationSystem rot = unrelabel_rotation(relab.first, relab.second, work, r.rotation);
  res.rotation = eff.preprocess ? restore_rotation(g, red, rot) : rot;
  res.found = true;
  res.genus = goal;
  assert(rotation_genus(g, res.rotation) == goal);
  return res;
}

CountResult enumerate_embeddings(
    const Graph& g, int target,
    const std::function<void(const RotationSystem&)>& emit,
    const SearchOptions& opt) {
  require_connected(g);
  CountResult res;
  if (target < 0) return res;
  Deadline deadline = make_deadline(opt);
  if (g.m == 0 || g.max_degree() < 3) {
    // a path or cycle carries exactly one rotation system, its own mirror
    res.completions = 1;
    if (target == 0) {
      res.count = 1;
      if (emit) emit(natural_rotation(g));
    }
    return res;
  }
  // every rotation of the whole graph must be visited, so no reduction here
  std::pair<Graph, std::vector<int>> relab =
      opt.bfs_relabel ? bfs_relabel(g) : std::pair<Graph, std::vector<int>>{};
  const Graph& work = opt.bfs_relabel ? relab.first : g;
  if (genus_lower_bound(work, opt.nontrivial_bounds).genus_lb > target) return res;
  std::function<void(const RotationSystem&)> emit_work;
  if (emit) {
    if (opt.bfs_relabel)
      emit_work = [&](const RotationSystem& rot) {
        emit(unrelabel_rotation(relab.first, relab.second, g, rot));
      };
    else
      emit_work = emit;
  }
  EngineResult r = run_one_dispatch(work, opt, deadline, EngineMode::CountExact,
                                    target, emit_work);
  res.timed_out = r.timed_out;
  res.count = r.exact_count;
  res.completions = r.total_completions;
  res.nodes = r.nodes;
  return res;
}

}  // namespace genus
