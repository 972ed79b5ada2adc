#pragma once

#include <algorithm>
#include <cassert>
#include <chrono>
#include <climits>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "genus/bitset.hpp"
#include "genus/graph.hpp"
#include "genus/rotation.hpp"

namespace genus {

struct EngineOptions {
  bool lemma_filter = true;
  // Nodes with at most fraction * (non-tree edge count) edges embedded count
  // as near-root and use the expensive edge selection; negative disables it.
  double near_root_fraction = 0.5;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  bool record_critical_trace = false;
};

enum class EngineMode {
  Decide,      // succeed on the first completion (genus <= budget)
  FirstExact,  // stop at the first completion of genus exactly the target
  CountExact,  // count (and emit) all completions of genus exactly the target
};

struct EngineResult {
  bool timed_out = false;
  bool found = false;
  std::uint64_t exact_count = 0;       // completions with genus == target
  std::uint64_t total_completions = 0; // completions with genus <= target
  std::uint64_t nodes = 0;
  RotationSystem rotation;             // FirstExact only
};

// Backtracking over rotation systems.  The constructor embeds the initial
// subgraph (a tree of three root paths, fixing the orientation) and sorts the
// remaining edges; run() owns the recursion.  One instance per search.
template <class VSet>
class SearchEngine {
 public:
  SearchEngine(const Graph& g, const EngineOptions& opt)
      : g_(g), opt_(opt) {
    assert(g.n <= VSet::capacity());
    assert(g.max_degree() >= 3);  // paths and cycles are handled upstream
    next_.assign(g.directed_edges(), -1);
    face_of_.assign(g.directed_edges(), -1);
    first_out_.assign(g.n, -1);
    edge_mask_.resize(g.m);
    for (int k = 0; k < g.m; ++k) {
      edge_mask_[k].add(g.edges[k].first);
      edge_mask_[k].add(g.edges[k].second);
    }
    build_initial();
    build_agenda();
    angles_u_.resize(agenda_size_ + 1);
    angles_v_.resize(agenda_size_ + 1);
  }

  EngineResult run(EngineMode mode, int target,
                   const std::function<void(const RotationSystem&)>& emit = {}) {
    mode_ = mode;
    target_ = target;
    max_genus_ = target;
    emit_ = emit;
    stop_ = false;
    EngineResult res;
    if (target < 0) return res;
    recurse();
    res.timed_out = timed_out_;
    res.found = found_;
    res.exact_count = exact_count_;
    res.total_completions = total_completions_;
    res.nodes = nodes_;
    res.rotation = std::move(captured_);
    return res;
  }

  // --- observation points used by the test suites ---------------------------

  // static insertion order of the non-tree edges
  const std::vector<int>& agenda() const { return agenda_; }
  // per recursion node: the critical edge found, or -1
  const std::vector<int>& critical_trace() const { return critical_trace_; }
  int root() const { return root_; }
  int face_count() const { return face_count_; }
  int genus_now() const { return genus_now_; }

  // first remaining agenda edge whose endpoints share no face, or -1
  int find_critical_edge() const {
    for (int i = lnext_[agenda_size_]; i != agenda_size_; i = lnext_[i]) {
      int e = agenda_[i];
      VSet mask = edge_mask_[e];
      if (!embedded_.contains_all(mask)) continue;
      if (opt_.lemma_filter && lemma_valid_ &&
          !(mask.intersects(lemma_a_) && mask.intersects(lemma_b_)))
        continue;  // cannot have become critical since the last subdivision
      if (!fits_some_face(mask)) return e;
    }
    return -1;
  }

  // number of faces whose vertex set covers both endpoints
  int count_embeddable_faces(int e) const {
    assert(embedded_.contains_all(edge_mask_[e]));
    int c = 0;
    for (int f = face_head_; f != -1; f = face_next_[f])
      if (face_[f].vset.contains_all(edge_mask_[e])) ++c;
    return c;
  }

 private:
  struct FaceRec {
    VSet vset;
    int len = 0;
    int rep = -1;  // one directed edge on the face
  };

  // --- faces ----------------------------------------------------------------

  int succ(int e) const { return next_[e ^ 1]; }

  int face_alloc() {
    if (!free_faces_.empty()) {
      int id = free_faces_.back();
      free_faces_.pop_back();
      return id;
    }
    int id = static_cast<int>(face_.size());
    face_.push_back({});
    face_prev_.push_back(-1);
    face_next_.push_back(-1);
    return id;
  }

  void face_attach_front(int id) {
    face_prev_[id] = -1;
    face_next_[id] = face_head_;
    if (face_head_ != -1) face_prev_[face_head_] = id;
    face_head_ = id;
    ++face_count_;
  }

  // unlink, keeping the node's own pointers for the matching relink
  void face_detach(int id) {
    if (face_prev_[id] != -1)
      face_next_[face_prev_[id]] = face_next_[id];
    else
      face_head_ = face_next_[id];
    if (face_next_[id] != -1) face_prev_[face_next_[id]] = face_prev_[id];
    --face_count_;
  }

  void face_relink(int id) {
    if (face_prev_[id] != -1)
      face_next_[face_prev_[id]] = id;
    else
      face_head_ = id;
    if (face_next_[id] != -1) face_prev_[face_next_[id]] = id;
    ++face_count_;
  }

  void rebuild_face(int id, int start) {
    FaceRec& fr = face_[id];
    fr.vset = VSet();
    fr.len = 0;
    fr.rep = start;
    int e = start;
    do {
      face_of_[e] = id;
      fr.vset.add(g_.tails[e]);
      ++fr.len;
      e = succ(e);
    } while (e != start);
  }

  // after next_ was restored, point the face's edges back at it
  void reclaim_face(int id) {
    int start = face_[id].rep;
    int e = start;
    do {
      face_of_[e] = id;
      e = succ(e);
    } while (e != start);
  }

  bool fits_some_face(VSet mask) const {
    for (int f = face_head_; f != -1; f = face_next_[f])
      if (face_[f].vset.contains_all(mask)) return true;
    return false;
  }

  void check_euler() const {
    assert(2 * genus_now_ == 2 + m_emb_ - n_emb_ - face_count_);
  }

  // --- insertions -----------------------------------------------------------

  struct SplitFrame {
    int f, c1, c2;
  };
  struct MergeFrame {
    int fu, fv, c;
  };

  SplitFrame apply_split(int guv, int du, int dv) {
    int gvu = guv ^ 1;
    int f = face_of_[du ^ 1];
    assert(f == face_of_[dv ^ 1]);
    next_[guv] = next_[du];
    next_[du] = guv;
    next_[gvu] = next_[dv];
    next_[dv] = gvu;
    ++m_emb_;
    face_detach(f);
    int c1 = face_alloc();
    face_attach_front(c1);
    rebuild_face(c1, guv);
    // the chord separates the face: neither the reverse edge (still
    // unassigned) nor v's corner (still holding the old id) landed in c1
    assert(face_of_[gvu] == -1);
    assert(face_of_[dv ^ 1] == f);
    int c2 = face_alloc();
    face_attach_front(c2);
    rebuild_face(c2, gvu);
    assert(face_[c1].len + face_[c2].len == face_[f].len + 2);
    lemma_a_ = face_[c1].vset.and_not(face_[c2].vset);
    lemma_b_ = face_[c2].vset.and_not(face_[c1].vset);
    lemma_valid_ = true;
    check_euler();
    return {f, c1, c2};
  }

  void undo_split(const SplitFrame& fr, int guv, int du, int dv) {
    int gvu = guv ^ 1;
    next_[du] = next_[guv];
    next_[dv] = next_[gvu];
    next_[guv] = next_[gvu] = -1;
    face_of_[guv] = face_of_[gvu] = -1;
    --m_emb_;
    face_detach(fr.c2);
    free_faces_.push_back(fr.c2);
    face_detach(fr.c1);
    free_faces_.push_back(fr.c1);
    face_relink(fr.f);
    reclaim_face(fr.f);
  }

  MergeFrame apply_merge(int guv, int du, int dv, bool critical_insert) {
    int gvu = guv ^ 1;
    int fu = face_of_[du ^ 1];
    int fv = face_of_[dv ^ 1];
    assert(fu != fv);
    next_[guv] = next_[du];
    next_[du] = guv;
    next_[gvu] = next_[dv];
    next_[dv] = gvu;
    ++m_emb_;
    face_detach(fu);
    face_detach(fv);
    int c = face_alloc();
    face_attach_front(c);
    rebuild_face(c, guv);
    assert(face_[c].len == face_[fu].len + face_[fv].len + 2);
    ++genus_now_;
    if (!critical_insert) lemma_valid_ = false;
    check_euler();
    return {fu, fv, c};
  }

  void undo_merge(const MergeFrame& fr, int guv, int du, int dv) {
    int gvu = guv ^ 1;
    next_[du] = next_[guv];
    next_[dv] = next_[gvu];
    next_[guv] = next_[gvu] = -1;
    face_of_[guv] = face_of_[gvu] = -1;
    --m_emb_;
    face_detach(fr.c);
    free_faces_.push_back(fr.c);
    face_relink(fr.fv);
    face_relink(fr.fu);
    reclaim_face(fr.fv);
    reclaim_face(fr.fu);
    --genus_now_;
  }

  int apply_leaf(int guv, int du) {
    int gvu = guv ^ 1;
    int v = g_.heads[guv];
    assert(!embedded_.contains(v));
    next_[guv] = next_[du];
    next_[du] = guv;
    next_[gvu] = gvu;
    first_out_[v] = gvu;
    embedded_.add(v);
    ++n_emb_;
    ++m_emb_;
    int f = face_of_[du ^ 1];
    face_of_[guv] = face_of_[gvu] = f;
    face_[f].len += 2;
    face_[f].vset.add(v);
    lemma_valid_ = false;
    check_euler();
    return f;
  }

  void undo_leaf(int f, int guv, int du) {
    int gvu = guv ^ 1;
    int v = g_.heads[guv];
    face_[f].len -= 2;
    face_[f].vset.remove(v);  // v has no other edge, so no other occurrence
    face_of_[guv] = face_of_[gvu] = -1;
    next_[du] = next_[guv];
    next_[guv] = next_[gvu] = -1;
    first_out_[v] = -1;
    embedded_.remove(v);
    --n_emb_;
    --m_emb_;
  }

  // --- initial subgraph and agenda ------------------------------------------

  void build_initial() {
    root_ = -1;
    for (int v = 0; v < g_.n; ++v)
      if (g_.degree(v) >= 3 && (root_ < 0 || g_.degree(v) < g_.degree(root_)))
        root_ = v;
    assert(root_ >= 0);

    // first edge: root to its smallest neighbor, bounding one face
    int n0 = g_.adj[root_][0];
    int e0 = g_.out_edges[root_][0];
    next_[e0] = e0;
    next_[e0 ^ 1] = e0 ^ 1;
    first_out_[root_] = e0;
    first_out_[n0] = e0 ^ 1;
    embedded_.add(root_);
    embedded_.add(n0);
    n_emb_ = 2;
    m_emb_ = 1;
    int f = face_alloc();
    face_attach_front(f);
    rebuild_face(f, e0);
    assert(face_[f].len == 2);

    // second and third root edge; their clockwise order n0, n1, n2 is the
    // orientation convention that rules out mirror images
    int n1 = g_.adj[root_][1];
    apply_leaf(g_.out_edges[root_][1], e0);
    int n2 = g_.adj[root_][2];
    apply_leaf(g_.out_edges[root_][2], g_.directed_between(root_, n1));

    // extend each root edge to a greedy path over unreached vertices
    for (int start : {n0, n1, n2}) {
      int cur = start;
      for (;;) {
        int nxt = -1;
        for (int w : g_.adj[cur])
          if (!embedded_.contains(w)) {
            nxt = w;
            break;
          }
        if (nxt < 0) break;
        apply_leaf(g_.directed_between(cur, nxt), first_out_[cur]);
        cur = nxt;
      }
    }
    assert(face_count_ == 1 && genus_now_ == 0 && m_emb_ == n_emb_ - 1);
    lemma_valid_ = false;
  }

  void build_agenda() {
    std::vector<char> in_tree(g_.m, 0);
    for (int e = 0; e < g_.directed_edges(); e += 2)
      if (next_[e] != -1) in_tree[e / 2] = 1;
    agenda_size_ = g_.m - m_emb_;

    // simulate the insertion order: smallest product of subgraph degrees
    // first, degree sum breaking ties among edges reaching a new vertex,
    // then position in the edge list
    std::vector<int> deg_s(g_.n, 0);
    VSet vs = embedded_;
    for (int k = 0; k < g_.m; ++k)
      if (in_tree[k]) {
        ++deg_s[g_.edges[k].first];
        ++deg_s[g_.edges[k].second];
      }
    std::vector<int> left;
    for (int k = 0; k < g_.m; ++k)
      if (!in_tree[k]) left.push_back(k);

    agenda_.reserve(agenda_size_);
    while (!left.empty()) {
      int best = -1;
      long best_p = LONG_MAX, best_s = LONG_MAX;
      for (int k : left) {
        auto [x, y] = g_.edges[k];
        if (!vs.contains(x) && !vs.contains(y)) continue;
        long p = static_cast<long>(deg_s[x]) * deg_s[y];
        long s = p == 0 ? deg_s[x] + deg_s[y] : LONG_MAX;
        if (p < best_p || (p == best_p && p == 0 && s < best_s)) {
          best = k;
          best_p = p;
          best_s = s;
        }
      }
      assert(best >= 0);  // the graph is connected
      agenda_.push_back(best);
      left.erase(std::find(left.begin(), left.end(), best));
      vs.add(g_.edges[best].first);
      vs.add(g_.edges[best].second);
      ++deg_s[g_.edges[best].first];
      ++deg_s[g_.edges[best].second];
    }
    assert(static_cast<int>(agenda_.size()) == agenda_size_);

    apos_.assign(g_.m, -1);
    for (int i = 0; i < agenda_size_; ++i) apos_[agenda_[i]] = i;
    lprev_.resize(agenda_size_ + 1);
    lnext_.resize(agenda_size_ + 1);
    for (int i = 0; i <= agenda_size_; ++i) {
      lnext_[i] = (i + 1) % (agenda_size_ + 1);
      lprev_[i] = (i + agenda_size_) % (agenda_size_ + 1);
    }
    remaining_ = agenda_size_;
    near_root_limit_ =
        opt_.near_root_fraction < 0
            ? -1
            : static_cast<int>(opt_.near_root_fraction * agenda_size_ + 1e-9);
  }

  void agenda_unlink(int i) {
    lnext_[lprev_[i]] = lnext_[i];
    lprev_[lnext_[i]] = lprev_[i];
    --remaining_;
  }

  void agenda_relink(int i) {
    lnext_[lprev_[i]] = i;
    lprev_[lnext_[i]] = i;
    ++remaining_;
  }

  int head_edge() const { return agenda_[lnext_[agenda_size_]]; }

  int depth() const { return agenda_size_ - remaining_; }

  // remaining edge with both endpoints embedded and fewest usable faces
  int best_chord() const {
    int best = -1, best_c = INT_MAX;
    for (int i = lnext_[agenda_size_]; i != agenda_size_; i = lnext_[i]) {
      int e = agenda_[i];
      if (!embedded_.contains_all(edge_mask_[e])) continue;
      int c = count_embeddable_faces(e);
      if (c < best_c) {
        best = e;
        best_c = c;
        if (c == 1) break;  // nothing beats a forced placement
      }
    }
    return best;
  }

  // --- recursion ------------------------------------------------------------

  void handle_completion() {
    assert(m_emb_ == g_.m && n_emb_ == g_.n);
    ++total_completions_;
    switch (mode_) {
      case EngineMode::Decide:
        found_ = true;
        stop_ = true;
        break;
      case EngineMode::FirstExact:
        if (genus_now_ == target_) {
          captured_.next = next_;
          found_ = true;
          stop_ = true;
        }
        break;
      case EngineMode::CountExact:
        if (genus_now_ == target_) {
          ++exact_count_;
          found_ = true;
          if (emit_) {
            RotationSystem rot;
            rot.next = next_;
            emit_(rot);
          }
        }
        break;
    }
  }

  void recurse() {
    ++nodes_;
    if (opt_.deadline && (nodes_ & 4095) == 0 &&
        std::chrono::steady_clock::now() > *opt_.deadline) {
      timed_out_ = true;
      stop_ = true;
      return;
    }
    if (remaining_ == 0) {
      handle_completion();
      return;
    }

    int critical = face_count_ >= 2 ? find_critical_edge() : -1;
    if (opt_.record_critical_trace) critical_trace_.push_back(critical);
    int chosen;
    if (critical >= 0) {
      if (genus_now_ == max_genus_) return;  // forced merge would overshoot
      chosen = critical;
    } else if (depth() <= near_root_limit_ && genus_now_ < max_genus_) {
      chosen = best_chord();
      if (chosen < 0) chosen = head_edge();
    } else {
      chosen = head_edge();
    }
    branch(chosen, chosen == critical);
  }

  void branch(int e, bool critical_insert) {
    agenda_unlink(apos_[e]);
    auto [u, v] = g_.edges[e];
    int guv = 2 * e;
    if (!embedded_.contains(u)) {
      std::swap(u, v);
      guv ^= 1;
    }
    assert(embedded_.contains(u));

    bool saved_valid = lemma_valid_;
    VSet saved_a = lemma_a_, saved_b = lemma_b_;

    int level = depth();
    std::vector<int>& au = angles_u_[level];
    au.clear();
    for (int d = first_out_[u];;) {
      au.push_back(d);
      d = next_[d];
      if (d == first_out_[u]) break;
    }

    if (embedded_.contains(v)) {
      std::vector<int>& av = angles_v_[level];
      av.clear();
      for (int d = first_out_[v];;) {
        av.push_back(d);
        d = next_[d];
        if (d == first_out_[v]) break;
      }
      for (int du : au) {
        for (int dv : av) {
          if (face_of_[du ^ 1] == face_of_[dv ^ 1]) {
            SplitFrame fr = apply_split(guv, du, dv);
            recurse();
            undo_split(fr, guv, du, dv);
          } else if (genus_now_ < max_genus_) {
            MergeFrame fr = apply_merge(guv, du, dv, critical_insert);
            recurse();
            undo_merge(fr, guv, du, dv);
          } else {
            continue;
          }
          lemma_valid_ = saved_valid;
          lemma_a_ = saved_a;
          lemma_b_ = saved_b;
          if (stop_) break;
        }
        if (stop_) break;
      }
    } else {
      assert(!critical_insert);
      for (int du : au) {
        int f = apply_leaf(guv, du);
        recurse();
        undo_leaf(f, guv, du);
        lemma_valid_ = saved_valid;
        lemma_a_ = saved_a;
        lemma_b_ = saved_b;
        if (stop_) break;
      }
    }
    agenda_relink(apos_[e]);
  }

  // --- state ----------------------------------------------------------------

  const Graph& g_;
  EngineOptions opt_;

  std::vector<int> next_;
  std::vector<int> face_of_;
  std::vector<int> first_out_;
  std::vector<VSet> edge_mask_;
  VSet embedded_;
  int n_emb_ = 0, m_emb_ = 0;

  std::vector<FaceRec> face_;
  std::vector<int> face_prev_, face_next_;
  std::vector<int> free_faces_;
  int face_head_ = -1;
  int face_count_ = 0;
  int genus_now_ = 0;

  bool lemma_valid_ = false;
  VSet lemma_a_, lemma_b_;

  int root_ = -1;
  std::vector<int> agenda_;
  std::vector<int> apos_;
  std::vector<int> lprev_, lnext_;
  int agenda_size_ = 0;
  int remaining_ = 0;
  int near_root_limit_ = -1;

  std::vector<std::vector<int>> angles_u_, angles_v_;

  EngineMode mode_ = EngineMode::Decide;
  int target_ = 0;
  int max_genus_ = 0;
  std::function<void(const RotationSystem&)> emit_;
  bool stop_ = false;
  bool found_ = false;
  bool timed_out_ = false;
  std::uint64_t exact_count_ = 0;
  std::uint64_t total_completions_ = 0;
  std::uint64_t nodes_ = 0;
  RotationSystem captured_;
  std::vector<int> critical_trace_;
};

}  // namespace genus
