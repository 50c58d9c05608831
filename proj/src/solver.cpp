#include "pstr/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "cover_search.hpp"

namespace pstr {
namespace {

using detail::bit;
using detail::Mask;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kChunkSize = 2048;

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

// rank-th k-subset of {0..n-1} in lexicographic order.
void unrank_combination(int n, int k, std::uint64_t rank, std::vector<int>& out) {
  out.resize(static_cast<std::size_t>(k));
  int next = 0;
  for (int i = 0; i < k; ++i) {
    for (int x = next;; ++x) {
      const std::uint64_t below = binom(n - x - 1, k - i - 1);
      if (rank < below) {
        out[i] = x;
        next = x + 1;
        break;
      }
      rank -= below;
    }
  }
}

bool next_combination(int n, std::vector<int>& c) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

struct Found {
  int weight = std::numeric_limits<int>::max();
  Mask zeros = 0;
  Mask defenders = 0;
  bool valid() const { return weight != std::numeric_limits<int>::max(); }
};

class ZeroSetSearch {
 public:
  ZeroSetSearch(const Graph& g, int p, const SolverConfig& cfg)
      : n_(g.order()), p_(p), cfg_(cfg), start_(Clock::now()) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
    }
  }

  SolveResult run() {
    SolveResult result;
    // Empty zero-set: all ones.
    Found best{n_, 0, 0};
    bool stopped = false;
    for (int k = n_ - 1; k >= 1 && !stopped; --k) {
      const int class_floor = n_ - k + ceil_div(k, p_);
      if (class_floor >= best.weight) {
        // Floors only grow as k shrinks.
        for (int j = k; j >= 1; --j) pruned_ += binom(n_, j);
        break;
      }
      Found f = search_class(k, best.weight, class_floor, stopped);
      if (f.valid() && f.weight < best.weight) best = f;
    }
    result.value = best.weight;
    result.optimal = !stopped;
    result.witness = labels_for(best);
    result.stats.subsets_examined = examined_;
    result.stats.pruned = pruned_;
    result.stats.elapsed = Clock::now() - start_;
    return result;
  }

 private:
  // One size class, split into fixed chunks. Chunk results merge by (weight,
  // chunk index), which reproduces the sequential first-optimum.
  Found search_class(int k, int incumbent, int class_floor, bool& stopped) {
    const std::uint64_t total = binom(n_, k);
    const std::uint64_t chunks = (total + kChunkSize - 1) / kChunkSize;
    std::vector<Found> per_chunk(static_cast<std::size_t>(chunks));
    std::atomic<std::uint64_t> next_chunk{0};
    std::atomic<int> class_best{incumbent};
    std::atomic<std::uint64_t> floor_chunk{std::numeric_limits<std::uint64_t>::max()};

    auto worker = [&] {
      Scratch scratch;
      std::vector<int> comb;
      std::uint64_t examined = 0;
      std::uint64_t pruned = 0;
      for (;;) {
        const std::uint64_t c = next_chunk.fetch_add(1);
        if (c >= chunks) break;
        const std::uint64_t first = c * kChunkSize;
        const std::uint64_t count = std::min(kChunkSize, total - first);
        if (c > floor_chunk.load() || stop_.load()) {
          pruned += count;
          continue;
        }
        Found local;
        unrank_combination(n_, k, first, comb);
        for (std::uint64_t i = 0; i < count; ++i) {
          if (i > 0) next_combination(n_, comb);
          if ((i & 255) == 0 && out_of_time()) break;
          if (c > floor_chunk.load()) {
            pruned += count - i;
            break;
          }
          // Strictly better than earlier results; ties allowed against
          // other chunks of this class since they may come later.
          const int max_weight =
              std::min({incumbent - 1, local.weight - 1, class_best.load()});
          if (max_weight < class_floor) {
            pruned += count - i;
            break;
          }
          Mask zeros = 0;
          for (int v : comb) zeros |= bit(v);
          ++examined;
          if (evaluate(zeros, k, max_weight, scratch, local)) {
            int seen = class_best.load();
            while (local.weight < seen && !class_best.compare_exchange_weak(seen, local.weight)) {
            }
            if (local.weight == class_floor) {
              std::uint64_t fc = floor_chunk.load();
              while (c < fc && !floor_chunk.compare_exchange_weak(fc, c)) {
              }
              pruned += count - i - 1;
              break;
            }
          }
        }
        per_chunk[c] = local;
      }
      std::lock_guard lock(stats_mutex_);
      examined_ += examined;
      pruned_ += pruned;
    };

    const int workers = std::max(1, cfg_.worker_count);
    if (workers == 1 || chunks == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      const int spawn = static_cast<int>(std::min<std::uint64_t>(workers, chunks));
      for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
    }
    if (stop_.load()) stopped = true;

    Found best;
    for (const Found& f : per_chunk) {
      if (f.valid() && f.weight < best.weight) best = f;
    }
    return best;
  }

  struct Scratch {
    detail::MaskCover problem;
    std::vector<Vertex> candidate_vertex;
  };

  // Completes `zeros` optimally within max_weight; updates `local` on success.
  bool evaluate(Mask zeros, int k, int max_weight, Scratch& scratch, Found& local) {
    for (Mask z = zeros; z; z &= z - 1) {
      if ((adj_[std::countr_zero(z)] & ~zeros) == 0) return false;
    }
    const int base = n_ - k;
    auto& problem = scratch.problem;
    auto& candidate_vertex = scratch.candidate_vertex;
    problem.elements = zeros;
    problem.covers.clear();
    problem.costs.clear();
    candidate_vertex.clear();
    for (Vertex v = 0; v < n_; ++v) {
      if (zeros & bit(v)) continue;
      const Mask hit = adj_[v] & zeros;
      if (!hit) continue;
      problem.covers.push_back(hit);
      problem.costs.push_back(ceil_div(std::popcount(hit), p_));
      candidate_vertex.push_back(v);
    }
    detail::CoverSearch search(problem);
    const auto found = search.run(max_weight - base + 1);
    if (!found.found) return false;
    Mask defenders = 0;
    for (Mask c = found.chosen; c; c &= c - 1) {
      defenders |= bit(candidate_vertex[std::countr_zero(c)]);
    }
    local = Found{base + found.cost, zeros, defenders};
    return true;
  }

  LabelFunction labels_for(const Found& f) const {
    std::vector<int> labels(static_cast<std::size_t>(n_), 1);
    for (Vertex v = 0; v < n_; ++v) {
      if (f.zeros & bit(v)) {
        labels[v] = 0;
      } else if (f.defenders & bit(v)) {
        labels[v] = 1 + ceil_div(std::popcount(adj_[v] & f.zeros), p_);
      }
    }
    return LabelFunction(std::move(labels));
  }

  bool out_of_time() {
    if (!cfg_.time_limit) return false;
    if (Clock::now() - start_ > *cfg_.time_limit) stop_.store(true);
    return stop_.load();
  }

  int n_;
  int p_;
  SolverConfig cfg_;
  Clock::time_point start_;
  std::vector<Mask> adj_;
  std::atomic<bool> stop_{false};
  std::mutex stats_mutex_;
  std::uint64_t examined_ = 0;
  std::uint64_t pruned_ = 0;
};

void require_solvable(const Graph& g, int p, int max_order) {
  if (p < 1) throw std::invalid_argument("p must be >= 1");
  if (g.order() < 1) throw std::invalid_argument("graph must have at least one vertex");
  if (g.order() > max_order) {
    throw std::invalid_argument("graph too large for this solver (n=" + std::to_string(g.order()) +
                                ", limit " + std::to_string(max_order) + ")");
  }
}

class NaiveSearch {
 public:
  NaiveSearch(const Graph& g, int p)
      : g_(g), p_(p), top_(max_label(g.max_degree(), p)),
        labels_(static_cast<std::size_t>(g.order()), 0) {}

  SolveResult run() {
    best_weight_ = g_.order();
    best_ = LabelFunction::constant(g_.order(), 1);
    dfs(0, 0);
    SolveResult r;
    r.value = best_weight_;
    r.witness = best_;
    r.optimal = true;
    r.stats.subsets_examined = leaves_;
    return r;
  }

 private:
  void dfs(int v, int weight) {
    if (weight >= best_weight_) return;
    if (v == g_.order()) {
      ++leaves_;
      LabelFunction f(labels_);
      if (validate(g_, p_, f).valid) {
        best_weight_ = weight;
        best_ = std::move(f);
      }
      return;
    }
    for (int label = 0; label <= top_; ++label) {
      labels_[v] = label;
      dfs(v + 1, weight + label);
    }
    labels_[v] = 0;
  }

  const Graph& g_;
  int p_;
  int top_;
  std::vector<int> labels_;
  int best_weight_ = 0;
  LabelFunction best_;
  std::uint64_t leaves_ = 0;
};

class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : n_(g.order()), closed_(static_cast<std::size_t>(n_)) {
    for (Vertex v = 0; v < n_; ++v) {
      closed_[v] = bit(v);
      for (Vertex w : g.neighbors(v)) closed_[v] |= bit(w);
    }
    max_closed_ = g.max_degree() + 1;
  }

  SolveResult run() {
    best_count_ = n_;
    best_set_ = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
    dfs(best_set_, 0, 0);
    std::vector<int> labels(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v) labels[v] = (best_set_ & bit(v)) ? 1 : 0;
    SolveResult r;
    r.value = best_count_;
    r.witness = LabelFunction(std::move(labels));
    r.optimal = true;
    r.stats.subsets_examined = nodes_;
    return r;
  }

 private:
  void dfs(Mask undominated, Mask chosen, int count) {
    ++nodes_;
    if (!undominated) {
      if (count < best_count_) {
        best_count_ = count;
        best_set_ = chosen;
      }
      return;
    }
    if (count + ceil_div(std::popcount(undominated), max_closed_) >= best_count_) return;
    int pick = -1;
    int pick_options = 65;
    for (Mask u = undominated; u; u &= u - 1) {
      const int v = std::countr_zero(u);
      const int options = std::popcount(closed_[v]);
      if (options < pick_options) {
        pick_options = options;
        pick = v;
      }
    }
    for (Mask o = closed_[pick]; o; o &= o - 1) {
      const int w = std::countr_zero(o);
      dfs(undominated & ~closed_[w], chosen | bit(w), count + 1);
    }
  }

  int n_;
  std::vector<Mask> closed_;
  int max_closed_ = 1;
  int best_count_ = 0;
  Mask best_set_ = 0;
  std::uint64_t nodes_ = 0;
};

}  // namespace

SolveResult solve_exact(const Graph& g, int p, const SolverConfig& cfg) {
  require_solvable(g, p, kMaxExactOrder);
  if (cfg.worker_count < 1) throw std::invalid_argument("worker_count must be >= 1");
  ZeroSetSearch search(g, p, cfg);
  return search.run();
}

SolveResult solve_naive(const Graph& g, int p) {
  require_solvable(g, p, kMaxNaiveOrder);
  const auto start = Clock::now();
  NaiveSearch search(g, p);
  SolveResult r = search.run();
  r.stats.elapsed = Clock::now() - start;
  return r;
}

SolveResult solve(const Graph& g, int p, const SolverConfig& cfg) {
  return cfg.algorithm == Algorithm::naive ? solve_naive(g, p) : solve_exact(g, p, cfg);
}

SolveResult domination_number(const Graph& g) {
  require_solvable(g, 1, kMaxExactOrder);
  const auto start = Clock::now();
  DominationSearch search(g);
  SolveResult r = search.run();
  r.stats.elapsed = Clock::now() - start;
  return r;
}

SolveResult roman_domination_number(const Graph& g, const SolverConfig& cfg) {
  return solve_exact(g, std::max(1, g.max_degree()), cfg);
}

}  // namespace pstr
