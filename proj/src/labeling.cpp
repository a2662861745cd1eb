#include "topfan/errors.hpp"
#include "topfan/linalg.hpp"
#include "topfan/realizability.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

namespace topfan {

namespace {

using i128 = __int128;

std::int64_t det_small(std::vector<std::vector<std::int64_t>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  std::vector<std::vector<i128>> m(n, std::vector<i128>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
  i128 prev = 1;
  int sgn = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sgn = -sgn;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return static_cast<std::int64_t>(sgn * m[n - 1][n - 1]);
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// gcd of maximal minors of the rows, int64
std::int64_t minor_gcd_small(const std::vector<const ZVec*>& rows, int n) {
  const int k = static_cast<int>(rows.size());
  std::vector<int> cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  std::int64_t g = 0;
  while (true) {
    std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) sub[i][j] = (*rows[i])[cols[j]];
    g = gcd64(g, det_small(sub));
    if (g == 1) return 1;
    int i = k;
    while (i > 0 && cols[i - 1] == n - k + i - 1) --i;
    if (i == 0) return g;
    ++cols[i - 1];
    for (int j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

struct Completing {
  std::size_t facet;
  int pos;                      // position of the new vertex in the ordered facet
  std::vector<Vertex> ordered;  // the ordered facet
  std::vector<int> targets;
};

struct Plan {
  int n = 0;
  int bound = 0;
  LabelingMode mode = LabelingMode::Unimodular;
  std::vector<std::pair<Vertex, ZVec>> pinned;
  std::vector<Vertex> order;
  std::vector<std::vector<Completing>> completing;   // per step
  std::vector<std::vector<std::size_t>> partial;     // per step: facets touched but not complete
  std::vector<Simplex> ordered_facets;
  std::vector<int> position;                          // vertex -> step (-1 pinned)
  std::vector<std::int64_t> values;                   // 0, 1, -1, 2, -2, ...
};

struct Worker {
  const Plan& plan;
  std::atomic<bool>& stop;
  std::atomic<long long>& nodes;
  long long node_limit;
  std::vector<ZVec> v;
  bool exhausted_budget = false;

  // cofactor vector c with det(ordered facet, x at pos) = c . x
  ZVec cofactors(const Completing& c) const {
    const int n = plan.n;
    ZVec out(n);
    std::vector<std::vector<std::int64_t>> minor(n - 1, std::vector<std::int64_t>(n - 1));
    for (int row = 0; row < n; ++row) {
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == row) continue;
        for (int col = 0, cc = 0; col < n; ++col) {
          if (col == c.pos) continue;
          minor[rr][cc++] = v[c.ordered[col] - 1][r];
        }
        ++rr;
      }
      std::int64_t d = det_small(minor);
      out[row] = ((row + c.pos) % 2 == 0) ? d : -d;
    }
    return out;
  }

  bool partial_ok(std::size_t step, Vertex x) const {
    if (gcd_of(v[x - 1]) != 1) return false;
    for (auto fi : plan.partial[step]) {
      std::vector<const ZVec*> rows;
      for (auto w : plan.ordered_facets[fi])
        if (w == x || plan.position[w] < 0 || plan.position[w] < static_cast<int>(step)) rows.push_back(&v[w - 1]);
      if (rows.size() >= 2 && minor_gcd_small(rows, plan.n) != 1) return false;
    }
    return true;
  }

  // enumerate x coordinate-wise under the linear constraints
  bool enumerate(std::size_t step, const std::vector<ZVec>& coef, const std::vector<const std::vector<int>*>& targets,
                 ZVec& x, int coord, std::vector<std::int64_t>& partial_sums) {
    const int n = plan.n;
    const std::int64_t k = plan.bound;
    if (coord == n) {
      if (std::all_of(x.begin(), x.end(), [](std::int64_t t) { return t == 0; })) return false;
      for (std::size_t c = 0; c < coef.size(); ++c)
        if (std::find(targets[c]->begin(), targets[c]->end(), partial_sums[c]) == targets[c]->end()) return false;
      Vertex vx = plan.order[step];
      v[vx - 1] = x;
      if (!partial_ok(step, vx)) return false;
      return descend(step + 1);
    }
    for (std::int64_t val : plan.values) {
      if (stop.load(std::memory_order_relaxed)) return false;
      bool ok = true;
      for (std::size_t c = 0; c < coef.size() && ok; ++c) {
        std::int64_t s = partial_sums[c] + coef[c][coord] * val;
        std::int64_t rest = 0;
        for (int t = coord + 1; t < n; ++t) rest += (coef[c][t] < 0 ? -coef[c][t] : coef[c][t]) * k;
        bool reach = false;
        for (int target : *targets[c])
          if ((target - s <= rest) && (s - target <= rest)) reach = true;
        ok = reach;
      }
      if (!ok) continue;
      x[coord] = val;
      for (std::size_t c = 0; c < coef.size(); ++c) partial_sums[c] += coef[c][coord] * val;
      bool found = enumerate(step, coef, targets, x, coord + 1, partial_sums);
      for (std::size_t c = 0; c < coef.size(); ++c) partial_sums[c] -= coef[c][coord] * val;
      if (found) return true;
    }
    return false;
  }

  bool descend(std::size_t step) {
    if (stop.load(std::memory_order_relaxed)) return false;
    long long count = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (node_limit >= 0 && count > node_limit) {
      exhausted_budget = true;
      stop.store(true);
      return false;
    }
    if (step == plan.order.size()) return true;
    std::vector<ZVec> coef;
    std::vector<const std::vector<int>*> targets;
    for (const auto& c : plan.completing[step]) {
      coef.push_back(cofactors(c));
      targets.push_back(&c.targets);
    }
    ZVec x(plan.n, 0);
    std::vector<std::int64_t> sums(coef.size(), 0);
    return enumerate(step, coef, targets, x, 0, sums);
  }
};

int thread_count(const SearchOptions& opt) {
  if (opt.deterministic) return 1;
  int t = opt.threads;
  if (t <= 0) {
    t = static_cast<int>(std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TOPFAN_THREADS")) {
      int cap = std::atoi(env);
      if (cap > 0) t = std::min(t > 0 ? t : cap, cap);
    }
  }
  return std::max(1, t);
}

std::vector<Vertex> greedy_order(const std::vector<Simplex>& facets, int m, const std::vector<bool>& pinned) {
  std::vector<bool> done = pinned;
  std::vector<Vertex> order;
  const int unpinned = static_cast<int>(std::count(pinned.begin() + 1, pinned.end(), false));
  for (int step = 0; step < unpinned; ++step) {
    Vertex best = 0;
    std::pair<int, int> best_score{-1, -1};
    for (Vertex x = 1; x <= m; ++x) {
      if (done[x]) continue;
      int completes = 0, touches = 0;
      for (const auto& f : facets) {
        if (std::find(f.begin(), f.end(), x) == f.end()) continue;
        int assigned = 0;
        for (auto w : f)
          if (w != x && done[w]) ++assigned;
        if (assigned == static_cast<int>(f.size()) - 1) ++completes;
        touches += assigned;
      }
      std::pair<int, int> score{completes, touches};
      if (score > best_score) {
        best_score = score;
        best = x;
      }
    }
    done[best] = true;
    order.push_back(best);
  }
  return order;
}

}  // namespace

bool verify_labeling(const std::vector<Simplex>& ordered_facets, const std::vector<ZVec>& v, LabelingMode mode,
                     const std::vector<int>& signs) {
  for (std::size_t i = 0; i < ordered_facets.size(); ++i) {
    const auto& f = ordered_facets[i];
    const std::size_t n = f.size();
    QMatrix cols(n, QVec(n));
    for (std::size_t c = 0; c < n; ++c) {
      if (static_cast<std::size_t>(f[c]) > v.size() || v[f[c] - 1].size() != n) return false;
      for (std::size_t r = 0; r < n; ++r) cols[r][c] = v[f[c] - 1][r];
    }
    if (mode == LabelingMode::Mod2) {
      // determinant odd
      Rational d = determinant(cols);
      if (numerator(d) % 2 == 0) return false;
      continue;
    }
    Rational d = determinant(cols);
    if (d != 1 && d != -1) return false;
    if (mode == LabelingMode::ToricSign && (i >= signs.size() || d != signs[i])) return false;
  }
  return true;
}

LabelingOutcome search_labeling(const LabelingProblem& problem, const SearchOptions& options) {
  LabelingOutcome out;
  out.bound = problem.bound;
  if (problem.bound < 1) throw BadParameters("bound must be at least 1");
  const auto& k = problem.complex;
  const int m = k.vertex_count();
  const int n = problem.n > 0 ? problem.n : k.dim() + 1;
  std::vector<Simplex> facets = problem.ordered_facets.empty() ? k.facets() : problem.ordered_facets;
  for (const auto& f : facets) {
    if (static_cast<int>(f.size()) != n) throw BadParameters("labeling needs facets of size n");
    if (!k.is_facet(f)) throw BadParameters("ordered facet is not a facet of the complex");
  }
  std::size_t norm = 0;
  if (problem.normalization_facet) {
    norm = *problem.normalization_facet;
    if (norm >= facets.size()) throw NotAFacet("normalization facet out of range");
  } else {
    for (std::size_t i = 1; i < facets.size(); ++i)
      if (make_simplex(facets[i]) < make_simplex(facets[norm])) norm = i;
  }

  if (problem.mode == LabelingMode::Mod2) {
    auto r = mod2_obstruction(k, n, options.node_limit);
    out.nodes = r.nodes;
    out.clique = r.clique;
    if (r.status == Mod2Result::Status::Feasible) {
      out.status = LabelingStatus::Sat;
      out.classes = r.classes;
      for (auto c : r.classes) {
        ZVec vec(n);
        for (int b = 0; b < n; ++b) vec[b] = (c >> b) & 1;
        out.v.push_back(vec);
      }
    } else if (r.status == Mod2Result::Status::Infeasible) {
      out.status = LabelingStatus::Infeasible;
      out.certificate = r.pigeonhole ? "pigeonhole-clique" : "mod2-exhausted";
    }
    return out;
  }

  std::vector<int> signs;
  if (problem.mode == LabelingMode::ToricSign) {
    if (!problem.signs.empty()) {
      signs = problem.signs;
      if (signs.size() != facets.size()) throw BadParameters("sign table size differs from facet count");
      // a reflection flips every sign; pin the normalization facet to +1
      if (signs[norm] < 0)
        for (auto& s : signs) s = -s;
    } else {
      auto st = derive_sign_table(m, facets, norm, 1);
      if (!st.table) {
        out.status = LabelingStatus::Infeasible;
        out.certificate = "sign-contradiction";
        out.cycle = st.contradiction_cycle;
        return out;
      }
      signs = st.table->signs;
    }
    out.signs = signs;
  }
  if (options.use_certificates && n < 31 && m >= (1 << n)) {
    auto clique = max_clique(one_skeleton(k), static_cast<std::size_t>(1) << n);
    if (clique.size() >= (static_cast<std::size_t>(1) << n)) {
      out.status = LabelingStatus::Infeasible;
      out.certificate = "pigeonhole-clique";
      out.clique = clique;
      return out;
    }
  }

  Plan plan;
  plan.n = n;
  plan.bound = problem.bound;
  plan.mode = problem.mode;
  plan.ordered_facets = facets;
  std::vector<bool> pinned(m + 1, false);
  for (int p = 0; p < n; ++p) {
    ZVec e(n, 0);
    e[p] = 1;
    plan.pinned.emplace_back(facets[norm][p], e);
    pinned[facets[norm][p]] = true;
  }
  if (options.vertex_order.empty()) {
    plan.order = greedy_order(facets, m, pinned);
  } else {
    plan.order = options.vertex_order;
    std::vector<bool> seen = pinned;
    for (auto x : plan.order) {
      if (x < 1 || x > m || seen[x]) throw BadParameters("vertex order must list each unpinned vertex once");
      seen[x] = true;
    }
    if (std::count(seen.begin() + 1, seen.end(), false)) throw BadParameters("vertex order misses a vertex");
  }
  plan.position.assign(m + 1, -1);
  for (std::size_t s = 0; s < plan.order.size(); ++s) plan.position[plan.order[s]] = static_cast<int>(s);
  plan.completing.resize(plan.order.size());
  plan.partial.resize(plan.order.size());
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    const auto& f = facets[fi];
    int last = -1;
    for (auto w : f) last = std::max(last, plan.position[w]);
    if (last < 0) continue;  // the normalization facet
    Vertex x = plan.order[last];
    Completing c;
    c.facet = fi;
    c.ordered = f;
    c.pos = static_cast<int>(std::find(f.begin(), f.end(), x) - f.begin());
    c.targets = problem.mode == LabelingMode::ToricSign ? std::vector<int>{signs[fi]} : std::vector<int>{1, -1};
    plan.completing[last].push_back(std::move(c));
    for (auto w : f) {
      int s = plan.position[w];
      if (s >= 0 && s != last) plan.partial[s].push_back(fi);
    }
  }
  plan.values.push_back(0);
  for (std::int64_t t = 1; t <= problem.bound; ++t) {
    plan.values.push_back(t);
    plan.values.push_back(-t);
  }

  std::atomic<bool> stop{false};
  std::atomic<long long> nodes{0};
  std::vector<ZVec> base(m, ZVec(n, 0));
  for (const auto& [x, e] : plan.pinned) base[x - 1] = e;

  std::vector<ZVec> solution;
  bool budget = false;
  const int threads = thread_count(options);
  if (threads <= 1 || plan.order.empty()) {
    Worker w{plan, stop, nodes, options.node_limit, base};
    if (w.descend(0)) solution = w.v;
    budget = w.exhausted_budget;
  } else {
    // split on the first vertex's candidates
    std::vector<ZVec> firsts;
    {
      ZVec x(n);
      std::function<void(int)> gen = [&](int coord) {
        if (coord == n) {
          firsts.push_back(x);
          return;
        }
        for (std::int64_t val = -problem.bound; val <= problem.bound; ++val) {
          x[coord] = val;
          gen(coord + 1);
        }
      };
      gen(0);
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        Worker w{plan, stop, nodes, options.node_limit, base};
        while (!stop.load()) {
          std::size_t i = next.fetch_add(1);
          if (i >= firsts.size()) break;
          const ZVec& x = firsts[i];
          bool ok = std::any_of(x.begin(), x.end(), [](std::int64_t t2) { return t2 != 0; });
          for (const auto& c : plan.completing[0]) {
            if (!ok) break;
            ZVec co = w.cofactors(c);
            std::int64_t d = 0;
            for (int q = 0; q < n; ++q) d += co[q] * x[q];
            ok = std::find(c.targets.begin(), c.targets.end(), d) != c.targets.end();
          }
          if (!ok) continue;
          w.v[plan.order[0] - 1] = x;
          if (!w.partial_ok(0, plan.order[0])) continue;
          if (w.descend(1)) {
            std::lock_guard<std::mutex> lock(mu);
            if (solution.empty()) solution = w.v;
            stop.store(true);
          }
        }
        if (w.exhausted_budget) {
          std::lock_guard<std::mutex> lock(mu);
          budget = true;
        }
      });
    for (auto& th : pool) th.join();
  }
  out.nodes = nodes.load();
  if (!solution.empty()) {
    out.status = LabelingStatus::Sat;
    out.v = solution;
    for (const auto& f : facets) {
      std::vector<std::vector<std::int64_t>> cols(n, std::vector<std::int64_t>(n));
      for (int c = 0; c < n; ++c)
        for (int r = 0; r < n; ++r) cols[r][c] = solution[f[c] - 1][r];
      out.facet_dets.push_back(det_small(cols));
    }
    if (!verify_labeling(facets, solution, problem.mode, signs))
      throw Error("internal: search produced a labeling that fails verification");
  } else {
    out.status = budget ? LabelingStatus::Unknown : LabelingStatus::Unsat;
  }
  return out;
}

}  // namespace topfan
