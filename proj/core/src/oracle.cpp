#include "ldal/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "ldal/bounds.hpp"
#include "ldal/error.hpp"

namespace ldal {

std::string status_name(OracleStatus s) {
  switch (s) {
    case OracleStatus::Exact: return "exact";
    case OracleStatus::Bracket: return "bracket";
    case OracleStatus::NoLabeling: return "no-labeling";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Plan {
  int n = 0;
  std::vector<Vertex> order;                     // position -> vertex
  std::vector<std::vector<Vertex>> finalize;     // weights that become final at a position
  std::vector<std::vector<Vertex>> check;        // earlier-final neighbours to compare against
  std::vector<std::vector<std::pair<Vertex, Vertex>>> less_at;  // f(a) < f(b), checked at a position
  Vertex pin_vertex = -1;
  Label pin_label = 0;
  int isolated = 0;
  Weight max_weight = 0;
};

// Greedy static order: next vertex completes as many neighbourhoods as possible.
std::vector<Vertex> search_order(const Graph& g) {
  const int n = g.order();
  std::vector<char> placed(n, 0);
  std::vector<int> missing(n);
  for (Vertex v = 0; v < n; ++v) missing[v] = g.degree(v);
  std::vector<Vertex> out;
  for (int step = 0; step < n; ++step) {
    Vertex pick = -1;
    int pick_gain = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      int gain = 0;
      for (Vertex u : g.neighbors(v)) gain += missing[u] == 1;
      if (gain > pick_gain || (gain == pick_gain && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_gain = gain;
      }
    }
    placed[pick] = 1;
    for (Vertex u : g.neighbors(pick)) --missing[u];
    out.push_back(pick);
  }
  return out;
}

bool is_cycle_graph(const Graph& g) { return g.order() >= 3 && g.is_regular() && g.min_degree() == 2 && is_connected(g); }

bool is_path_graph(const Graph& g) {
  return g.order() >= 2 && g.max_degree() <= 2 && static_cast<int>(g.size()) == g.order() - 1 && is_connected(g);
}

Plan make_plan(const Graph& g, bool symmetry) {
  Plan p;
  p.n = g.order();
  p.order = search_order(g);
  std::vector<int> pos(p.n);
  for (int d = 0; d < p.n; ++d) pos[p.order[d]] = d;
  std::vector<int> fin(p.n, -1);
  p.finalize.assign(p.n, {});
  for (Vertex v = 0; v < p.n; ++v) {
    if (g.degree(v) == 0) {
      ++p.isolated;
      continue;
    }
    for (Vertex u : g.neighbors(v)) fin[v] = std::max(fin[v], pos[u]);
    p.finalize[fin[v]].push_back(v);
  }
  p.check.assign(p.n, {});
  for (Vertex v = 0; v < p.n; ++v)
    for (Vertex u : g.neighbors(v))
      if (fin[u] < fin[v] || (fin[u] == fin[v] && u < v)) p.check[v].push_back(u);
  p.less_at.assign(p.n, {});
  if (symmetry && is_cycle_graph(g)) {
    auto seq = cycle_order(g);
    p.pin_vertex = seq[0];
    p.pin_label = 1;
    Vertex a = seq[1], b = seq.back();
    p.less_at[std::max(pos[a], pos[b])].push_back({a, b});
  } else if (symmetry && is_path_graph(g)) {
    auto seq = path_order(g);
    Vertex a = seq.front(), b = seq.back();
    p.less_at[std::max(pos[a], pos[b])].push_back({a, b});
  }
  p.max_weight = static_cast<Weight>(p.n) * (p.n + 1) / 2;
  return p;
}

struct Shared {
  const Graph& g;
  const Plan& plan;
  const SearchBudget& budget;
  int lb;
  Clock::time_point start;
  std::vector<std::pair<Label, Label>> tasks;
  std::atomic<std::size_t> next_task{0};
  std::atomic<std::uint64_t> best;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::mutex witness_mutex;
  std::vector<Label> witness;

  Shared(const Graph& graph, const Plan& pl, const SearchBudget& b, int lower)
      : g(graph), plan(pl), budget(b), lb(lower), start(Clock::now()), best(~std::uint64_t{0}) {}
};

class Worker {
 public:
  explicit Worker(Shared& s)
      : s_(s), p_(s.plan), label_(p_.n, 0), weight_(p_.n, 0), count_(p_.max_weight + 1, 0) {
    if (p_.isolated) {
      count_[0] = p_.isolated;
      distinct_ = 1;
    }
  }

  void run() {
    for (;;) {
      std::size_t t = s_.next_task.fetch_add(1);
      if (t >= s_.tasks.size() || s_.stop.load(std::memory_order_relaxed)) break;
      task_ = t;
      if (pruned()) continue;
      auto [l0, l1] = s_.tasks[t];
      if (push(0, l0)) {
        if (p_.n == 1) {
          leaf();
        } else {
          if (push(1, l1) && !pruned()) descend(2);
          pop(1);
        }
      }
      pop(0);
    }
    flush();
  }

 private:
  std::uint64_t key(std::size_t colors) const { return (static_cast<std::uint64_t>(colors) << 32) | task_; }

  bool pruned() const {
    std::size_t lower = std::max<std::size_t>(distinct_, s_.lb);
    return key(lower) >= s_.best.load(std::memory_order_relaxed);
  }

  bool push(int d, Label l) {
    const Vertex v = p_.order[d];
    label_[v] = l;
    used_ |= std::uint64_t{1} << (l - 1);
    for (Vertex y : s_.g.neighbors(v)) weight_[y] += l;
    for (Vertex u : p_.finalize[d])
      if (count_[weight_[u]]++ == 0) ++distinct_;
    for (auto [a, b] : p_.less_at[d])
      if (label_[a] > label_[b]) return false;
    for (Vertex u : p_.finalize[d])
      for (Vertex y : p_.check[u])
        if (weight_[y] == weight_[u]) return false;
    return true;
  }

  void pop(int d) {
    const Vertex v = p_.order[d];
    for (Vertex u : p_.finalize[d])
      if (--count_[weight_[u]] == 0) --distinct_;
    for (Vertex y : s_.g.neighbors(v)) weight_[y] -= label_[v];
    used_ &= ~(std::uint64_t{1} << (label_[v] - 1));
    label_[v] = 0;
  }

  void leaf() {
    std::uint64_t k = key(distinct_);
    if (k >= s_.best.load()) return;
    std::lock_guard lock(s_.witness_mutex);
    if (k < s_.best.load()) {
      s_.best.store(k);
      s_.witness = label_;
    }
  }

  void descend(int d) {
    if (++local_nodes_ >= 4096) flush();
    if (s_.stop.load(std::memory_order_relaxed)) return;
    if (d == p_.n) {
      leaf();
      return;
    }
    const Vertex v = p_.order[d];
    for (Label l = 1; l <= p_.n; ++l) {
      if (used_ & (std::uint64_t{1} << (l - 1))) continue;
      if (v == p_.pin_vertex ? l != p_.pin_label : l == p_.pin_label) continue;
      if (push(d, l) && !pruned()) descend(d + 1);
      pop(d);
    }
  }

  void flush() {
    std::uint64_t total = s_.nodes.fetch_add(local_nodes_) + local_nodes_;
    local_nodes_ = 0;
    if (s_.budget.max_nodes && total >= s_.budget.max_nodes) s_.stop = true;
    if (s_.budget.time_limit.count() > 0 && Clock::now() - s_.start >= s_.budget.time_limit) s_.stop = true;
  }

  Shared& s_;
  const Plan& p_;
  std::vector<Label> label_;
  std::vector<Weight> weight_;
  std::vector<int> count_;
  std::size_t distinct_ = 0;
  std::uint64_t used_ = 0;
  std::uint64_t local_nodes_ = 0;
  std::size_t task_ = 0;
};

}  // namespace

OracleResult chi_ld_exact(const Graph& g, const SearchBudget& budget) {
  const int n = g.order();
  if (n > budget.max_order || n > 64)
    throw CapExceededError("order " + std::to_string(n) + " exceeds oracle cap " +
                           std::to_string(std::min(budget.max_order, 64)));
  OracleResult result;
  if (n == 0) {
    result.status = OracleStatus::Exact;
    result.witness = Labeling();
    return result;
  }

  const Plan plan = make_plan(g, budget.symmetry);
  const int lb = budget.symdiff_bound ? chi_exact(forced_distinct_graph(g)) : chi_exact(g);
  Shared shared(g, plan, budget, lb);

  for (Label a = 1; a <= n; ++a) {
    const Vertex v0 = plan.order[0];
    if (v0 == plan.pin_vertex ? a != plan.pin_label : a == plan.pin_label) continue;
    if (n == 1) {
      shared.tasks.push_back({a, 0});
      continue;
    }
    const Vertex v1 = plan.order[1];
    for (Label b = 1; b <= n; ++b) {
      if (b == a) continue;
      if (v1 == plan.pin_vertex ? b != plan.pin_label : b == plan.pin_label) continue;
      shared.tasks.push_back({a, b});
    }
  }

  unsigned threads = budget.threads ? budget.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(shared.tasks.size())));
  std::vector<std::thread> pool;
  std::vector<Worker> workers;
  workers.reserve(threads);
  for (unsigned i = 0; i < threads; ++i) workers.emplace_back(shared);
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back([&workers, i] { workers[i].run(); });
  workers[0].run();
  for (auto& t : pool) t.join();

  result.stats.nodes = shared.nodes.load();
  result.stats.millis = std::chrono::duration<double, std::milli>(Clock::now() - shared.start).count();
  result.stats.threads = threads;

  const bool found = !shared.witness.empty();
  result.lower = lb;
  if (found) {
    result.upper = static_cast<int>(shared.best.load() >> 32);
    result.witness = Labeling(shared.witness);
  }
  if (shared.stop.load()) {
    result.status = OracleStatus::Bracket;
    if (found && result.upper == lb) result.status = OracleStatus::Exact;
  } else {
    result.status = found ? OracleStatus::Exact : OracleStatus::NoLabeling;
    if (found) result.lower = result.upper;
  }
  return result;
}

bool min_colors_witness_check(const OracleResult& result, const Graph& g) {
  if (result.status == OracleStatus::NoLabeling) return true;
  if (!result.witness) {
    if (result.status == OracleStatus::Bracket && result.upper == 0) return true;
    throw SelfCheckError("oracle result has no witness");
  }
  auto v = is_ldal(g, *result.witness);
  if (!v.valid || static_cast<int>(v.colors) != result.upper)
    throw SelfCheckError("oracle witness gives " + std::to_string(v.colors) + " colours, reported " +
                         std::to_string(result.upper));
  return true;
}

}  // namespace ldal
