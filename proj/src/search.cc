// Copyright 2026 The lexrwa Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "lexrwa/solver.h"
#include "paths.h"
#include "problem.h"

namespace lexrwa {
namespace {

using internal::Choice;
using internal::DemandSpec;
using internal::Graph;
using internal::kInfiniteCost;
using internal::kUnreachable;
using internal::Mask;
using internal::MutableMask;
using internal::Problem;

using Clock = std::chrono::steady_clock;

// Nodes between two checks of the clock and the node limit.
constexpr int64_t kCheckInterval = 256;

// Subproblems handed out per worker thread in parallel mode.
constexpr size_t kSubproblemsPerThread = 8;

int64_t CeilDiv(int64_t a, int64_t b) { return (a + b - 1) / b; }

// Floor-safe ceiling for possibly negative numerators.
int64_t CeilDivSigned(int64_t a, int64_t b) {
  return a >= 0 ? CeilDiv(a, b) : -((-a) / b);
}

// Integer link prices for the capacity relaxation. A route costs
// sum(q + lambda[e]) over its links; since every (link, channel) slot holds
// at most one route, q * usage >= sum of cheapest route prices minus
// sum(lambda[e] * free slots of e) for any non-negative lambda.
struct Multipliers {
  int64_t q = 1;
  std::vector<int64_t> lambda;
  int64_t lambda_total = 0;
  // Cheapest priced route of each demand on the empty network, and its links.
  std::vector<int64_t> base_cost;
  std::vector<uint64_t> base_links;
};

// Quantum of the integer prices.
constexpr int64_t kPriceScale = 64;
constexpr int kPriceIterations = 300;
constexpr int kFeasibilityIterations = 200;

Multipliers MakeMultipliers(const Problem& p, std::vector<int64_t> lambda) {
  const Graph& g = p.graph;
  Multipliers m;
  m.q = kPriceScale;
  m.lambda = std::move(lambda);
  m.lambda.resize(g.num_links, 0);
  std::vector<int64_t> weight(g.num_links);
  for (int e = 0; e < g.num_links; ++e) {
    m.lambda_total += m.lambda[e];
    weight[e] = m.q + m.lambda[e];
  }
  const std::vector<uint64_t> none(g.words, 0);
  std::vector<uint64_t> used;
  m.base_cost.resize(p.demands.size());
  m.base_links.assign(p.demands.size() * g.words, 0);
  for (size_t j = 0; j < p.demands.size(); ++j) {
    const DemandSpec& d = p.demands[j];
    m.base_cost[j] = internal::MinCostRoute(g, none, d.src, d.dst,
                                            d.is_protected ? 2 : 1, weight,
                                            &used);
    if (m.base_cost[j] < internal::kInfiniteRouteCost) {
      std::copy(used.begin(), used.end(), m.base_links.begin() + j * g.words);
    }
  }
  return m;
}

// Lower bound on the usage of any assignment into `channels` empty
// channels, or nullopt when the prices prove that no such assignment exists.
std::optional<int64_t> PricedUsageBound(const Problem& p, const Multipliers& m,
                                        int channels) {
  int64_t sum = 0;
  for (int64_t c : m.base_cost) {
    if (c >= internal::kInfiniteRouteCost) return std::nullopt;
    sum += c;
  }
  const int64_t bound = CeilDivSigned(sum - channels * m.lambda_total, m.q);
  if (bound > static_cast<int64_t>(channels) * p.graph.num_links) {
    return std::nullopt;
  }
  return bound;
}

// Subgradient ascent on the prices for `channels` empty channels, aiming at
// the usage `target`. Returns the best integer prices seen.
std::vector<int64_t> SubgradientPrices(const Problem& p, int channels,
                                       int64_t target, int iterations) {
  const Graph& g = p.graph;
  std::vector<double> lambda(g.num_links, 0.0);
  std::vector<int64_t> rounded(g.num_links, 0);
  std::vector<int64_t> best_prices = rounded;
  double best = -1e300;
  double theta = 1.0;
  int stall = 0;
  std::vector<int64_t> weight(g.num_links);
  std::vector<uint64_t> used;
  const std::vector<uint64_t> none(g.words, 0);
  std::vector<double> grad(g.num_links);
  for (int it = 0; it < iterations && theta > 1e-3; ++it) {
    int64_t total = 0;
    for (int e = 0; e < g.num_links; ++e) {
      rounded[e] = std::llround(lambda[e] * kPriceScale);
      weight[e] = kPriceScale + rounded[e];
      total += rounded[e];
      grad[e] = -channels;
    }
    int64_t sum = 0;
    for (const DemandSpec& d : p.demands) {
      sum += internal::MinCostRoute(g, none, d.src, d.dst,
                                    d.is_protected ? 2 : 1, weight, &used);
      for (int e = 0; e < g.num_links; ++e) {
        if (internal::TestBit(used, e)) grad[e] += 1;
      }
    }
    const double value =
        static_cast<double>(sum - channels * total) / kPriceScale;
    if (value > best + 1e-9) {
      best = value;
      best_prices = rounded;
      stall = 0;
    } else if (++stall >= 10) {
      theta /= 2;
      stall = 0;
    }
    double norm = 0;
    for (int e = 0; e < g.num_links; ++e) {
      // Projected direction: a price already at zero cannot drop further.
      if (lambda[e] <= 0 && grad[e] < 0) grad[e] = 0;
      norm += grad[e] * grad[e];
    }
    if (norm == 0) break;
    const double gap = std::max(1.0, static_cast<double>(target) - value);
    const double step = theta * gap / norm;
    for (int e = 0; e < g.num_links; ++e) {
      lambda[e] = std::max(0.0, lambda[e] + step * grad[e]);
    }
  }
  return best_prices;
}

// Best solution found so far, shared by all workers.
class Incumbent {
 public:
  int64_t cost() const { return cost_.load(std::memory_order_relaxed); }

  void Offer(int64_t cost, const std::vector<Choice>& choices) {
    std::lock_guard<std::mutex> lock(mu_);
    if (cost < cost_.load(std::memory_order_relaxed)) {
      choices_ = choices;
      cost_.store(cost, std::memory_order_relaxed);
    }
  }

  bool found() const { return cost() < kInfiniteCost; }
  const std::vector<Choice>& choices() const { return choices_; }

 private:
  std::atomic<int64_t> cost_{kInfiniteCost};
  std::mutex mu_;
  std::vector<Choice> choices_;
};

struct SearchControl {
  Clock::time_point deadline;
  std::optional<int64_t> node_limit;
  std::atomic<int64_t> nodes{0};
  std::atomic<bool> stopped{false};
};

// Greedy assignment in the given demand order. Each demand takes its
// cheapest route in the first channel that can hold it, or with
// `best_fit`, the cheapest route over all channels opened so far (a new
// channel only when none can). Empty if some demand does not fit.
std::vector<Choice> Greedy(const Problem& p, const std::vector<int>& order,
                           std::span<const int64_t> weight, bool best_fit) {
  const Graph& g = p.graph;
  std::vector<uint64_t> occupied(
      static_cast<size_t>(p.num_channels) * g.words, 0);
  std::vector<Choice> choices(p.demands.size());
  std::vector<uint64_t> used;
  std::vector<uint64_t> best_used;
  int open = 0;
  for (int j : order) {
    const DemandSpec& d = p.demands[j];
    int best_channel = -1;
    int64_t best_cost = internal::kInfiniteRouteCost;
    const int limit = std::min(open + 1, p.num_channels);
    for (int c = 0; c < limit; ++c) {
      if (best_fit && c == open && best_channel >= 0) break;
      const Mask occ = Mask(occupied).subspan(c * g.words, g.words);
      const int64_t cost = internal::MinCostRoute(
          g, occ, d.src, d.dst, d.is_protected ? 2 : 1, weight, &used);
      if (cost < best_cost) {
        best_cost = cost;
        best_channel = c;
        best_used.swap(used);
        if (!best_fit) break;
      }
    }
    if (best_channel < 0) return {};
    std::vector<std::vector<int>> paths =
        internal::SplitRoute(g, best_used, d.src, d.dst);
    Choice& choice = choices[j];
    choice.channel = best_channel;
    choice.working = std::move(paths[0]);
    if (d.is_protected) choice.protection = std::move(paths[1]);
    MutableMask occ =
        MutableMask(occupied).subspan(best_channel * g.words, g.words);
    for (int w = 0; w < g.words; ++w) occ[w] |= best_used[w];
    open = std::max(open, best_channel + 1);
  }
  return choices;
}

// Demand orders tried by the greedy start heuristic.
constexpr int kGreedyStarts = 64;

// Deterministic multi-start greedy: branching order, longest routes first,
// then seeded shuffles, each with unit and priced link costs under first
// fit and best fit.
void GreedyStarts(const Problem& p, const Multipliers& prices,
                  Incumbent& incumbent) {
  const int n = static_cast<int>(p.demands.size());
  std::vector<int64_t> priced(p.graph.num_links);
  for (int e = 0; e < p.graph.num_links; ++e) {
    priced[e] = prices.q + prices.lambda[e];
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(0x5eed);
  for (int start = 0; start < kGreedyStarts; ++start) {
    if (start == 1) {
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return p.demands[a].base_length > p.demands[b].base_length;
      });
    } else if (start > 1) {
      std::shuffle(order.begin(), order.end(), rng);
    }
    for (bool use_prices : {false, true}) {
      for (bool best_fit : {false, true}) {
        std::vector<Choice> choices =
            Greedy(p, order, use_prices ? std::span<const int64_t>(priced)
                                        : std::span<const int64_t>(),
                   best_fit);
        if (!choices.empty()) {
          incumbent.Offer(internal::CostOf(p, choices), choices);
        }
      }
    }
  }
}

// Depth-first search state for one worker. Positions index demands in
// branching order; position i is decided before i + 1.
class Searcher {
 public:
  Searcher(const Problem& p, const Multipliers& prices, Incumbent& incumbent,
           SearchControl& control)
      : p_(p),
        prices_(prices),
        incumbent_(incumbent),
        control_(control),
        words_(p.graph.words),
        num_demands_(static_cast<int>(p.demands.size())),
        occupied_(static_cast<size_t>(p.num_channels) * words_, 0),
        route_length_(static_cast<size_t>(num_demands_) * p.num_channels,
                      kUnreachable),
        route_links_(route_length_.size() * words_, 0),
        priced_cost_(route_length_.size(), internal::kInfiniteRouteCost),
        priced_links_(route_links_.size(), 0),
        frames_(num_demands_),
        choices_(num_demands_),
        need_out_(p.graph.num_nodes),
        need_in_(p.graph.num_nodes),
        suffix_base_(num_demands_ + 1, 0) {
    for (int i = num_demands_ - 1; i >= 0; --i) {
      suffix_base_[i] = suffix_base_[i + 1] + p.demands[i].base_length;
    }
    weight_.resize(p.graph.num_links);
    for (int e = 0; e < p.graph.num_links; ++e) {
      weight_[e] = prices.q + prices.lambda[e];
    }
  }

  ~Searcher() { Flush(); }

  // Fixes the decision at `pos` and updates the residual route cache of the
  // later positions for the affected channel.
  void Apply(int pos, const Choice& choice) {
    const int c = choice.channel;
    Frame& f = frames_[pos];
    f.old_cost = cost_;
    f.old_free_price = free_price_;
    f.opened = c == open_;
    MutableMask occ = Occupied(c);
    f.added.assign(words_, 0);
    for (int e : choice.working) internal::SetBit(f.added, e);
    for (int e : choice.protection) internal::SetBit(f.added, e);
    for (int w = 0; w < words_; ++w) occ[w] |= f.added[w];
    cost_ += (f.opened ? p_.channel_weight : 0) +
             p_.usage_weight * choice.length();
    if (f.opened) {
      ++open_;
      free_price_ += prices_.lambda_total;
    }
    for (int w = 0; w < words_; ++w) {
      for (uint64_t bits = f.added[w]; bits != 0; bits &= bits - 1) {
        free_price_ -= prices_.lambda[w * 64 + std::countr_zero(bits)];
      }
    }
    choices_[pos] = choice;

    const int later = num_demands_ - pos - 1;
    f.saved_length.resize(later);
    f.saved_links.resize(static_cast<size_t>(later) * words_);
    f.saved_priced.resize(later);
    f.saved_priced_links.resize(static_cast<size_t>(later) * words_);
    for (int j = pos + 1; j < num_demands_; ++j) {
      const int k = j - pos - 1;
      int& len = RouteLength(j, c);
      MutableMask links = RouteLinks(j, c);
      f.saved_length[k] = len;
      std::copy(links.begin(), links.end(),
                f.saved_links.begin() + static_cast<ptrdiff_t>(k) * words_);
      if (f.opened) {
        len = p_.demands[j].base_length;
        std::copy(p_.demands[j].base_links.begin(),
                  p_.demands[j].base_links.end(), links.begin());
      }
      if (len < kUnreachable && internal::Intersects(links, f.added)) {
        Recompute(j, c);
      }

      int64_t& priced = PricedCost(j, c);
      MutableMask plinks = PricedLinks(j, c);
      f.saved_priced[k] = priced;
      std::copy(plinks.begin(), plinks.end(),
                f.saved_priced_links.begin() +
                    static_cast<ptrdiff_t>(k) * words_);
      if (f.opened) {
        priced = prices_.base_cost[j];
        const auto base = prices_.base_links.begin() +
                          static_cast<ptrdiff_t>(j) * words_;
        std::copy(base, base + words_, plinks.begin());
      }
      if (priced < internal::kInfiniteRouteCost &&
          internal::Intersects(plinks, f.added)) {
        RecomputePriced(j, c);
      }
    }
  }

  void Undo(int pos) {
    const int c = choices_[pos].channel;
    Frame& f = frames_[pos];
    MutableMask occ = Occupied(c);
    for (int w = 0; w < words_; ++w) occ[w] &= ~f.added[w];
    cost_ = f.old_cost;
    free_price_ = f.old_free_price;
    if (f.opened) --open_;
    for (int j = pos + 1; j < num_demands_; ++j) {
      const int k = j - pos - 1;
      RouteLength(j, c) = f.saved_length[k];
      MutableMask links = RouteLinks(j, c);
      std::copy(f.saved_links.begin() + static_cast<ptrdiff_t>(k) * words_,
                f.saved_links.begin() + static_cast<ptrdiff_t>(k + 1) * words_,
                links.begin());
      PricedCost(j, c) = f.saved_priced[k];
      MutableMask plinks = PricedLinks(j, c);
      std::copy(
          f.saved_priced_links.begin() + static_cast<ptrdiff_t>(k) * words_,
          f.saved_priced_links.begin() + static_cast<ptrdiff_t>(k + 1) * words_,
          plinks.begin());
    }
  }

  // Lower bound on the cost of any completion of the first `next` decisions.
  int64_t LowerBound(int next) {
    if (next == num_demands_) return cost_;
    const Graph& g = p_.graph;
    std::fill(need_out_.begin(), need_out_.end(), 0);
    std::fill(need_in_.begin(), need_in_.end(), 0);

    // Completion A: everything fits into the open channels.
    bool fits = p_.min_channels <= open_;
    int64_t open_usage = 0;
    // Priced route sums: open channels only, and open or fresh channels.
    int64_t open_priced = 0;
    int64_t any_priced = 0;
    for (int j = next; j < num_demands_; ++j) {
      const DemandSpec& d = p_.demands[j];
      const int units = d.is_protected ? 2 : 1;
      need_out_[d.src] += units;
      need_in_[d.dst] += units;
      int best = kUnreachable;
      int64_t best_priced = internal::kInfiniteRouteCost;
      for (int c = 0; c < open_; ++c) {
        best = std::min(best, RouteLength(j, c));
        best_priced = std::min(best_priced, PricedCost(j, c));
      }
      if (best >= kUnreachable) {
        fits = false;
      } else {
        open_usage += best;
        open_priced += best_priced;
      }
      any_priced += std::min(best_priced, prices_.base_cost[j]);
    }
    const int64_t base_usage = suffix_base_[next];
    int64_t free_links = 0;
    for (int c = 0; c < open_; ++c) {
      free_links += g.num_links - internal::PopCount(Occupied(c));
    }
    if (fits) {
      open_usage = std::max(
          open_usage, CeilDivSigned(open_priced - free_price_, prices_.q));
      if (open_usage > free_links) fits = false;
    }

    // Completion B: at least one more channel.
    int64_t extra = std::max(1, p_.min_channels - open_);
    extra = std::max(extra, CeilDiv(base_usage - free_links, g.num_links));
    for (int v = 0; v < g.num_nodes; ++v) {
      if (need_out_[v] > 0) {
        const int64_t free_out = FreePorts(p_.OutMask(v));
        if (need_out_[v] > free_out) {
          fits = false;
          extra = std::max(extra,
                           CeilDiv(need_out_[v] - free_out, p_.out_degree[v]));
        }
      }
      if (need_in_[v] > 0) {
        const int64_t free_in = FreePorts(p_.InMask(v));
        if (need_in_[v] > free_in) {
          fits = false;
          extra = std::max(extra,
                           CeilDiv(need_in_[v] - free_in, p_.in_degree[v]));
        }
      }
    }
    const int64_t bound_a =
        fits ? cost_ + p_.usage_weight * open_usage : kInfiniteCost;
    int64_t bound_b = kInfiniteCost;
    for (int64_t m = extra; open_ + m <= p_.num_channels; ++m) {
      const int64_t usage = std::max(
          base_usage,
          CeilDivSigned(any_priced - free_price_ - m * prices_.lambda_total,
                        prices_.q));
      if (usage > free_links + m * g.num_links) continue;
      bound_b = std::min(bound_b, cost_ + p_.channel_weight * m +
                                      p_.usage_weight * usage);
      // Later m only add channel cost once usage stops dropping.
      if (usage == base_usage) break;
    }
    return std::min(bound_a, bound_b);
  }

  // Calls visit(choice) for the children of `pos` in branching order until
  // it returns false or no remaining child can beat the incumbent.
  template <typename Visit>
  void ForEachChild(int pos, Visit&& visit) {
    const DemandSpec& d = p_.demands[pos];
    const Graph& g = p_.graph;
    const int max_length =
        d.is_protected ? std::min(2 * (g.num_nodes - 1), g.num_links)
                       : g.num_nodes - 1;

    struct Bucket {
      int64_t increment;
      int channel;
      int length;
    };
    std::vector<Bucket> buckets;
    for (int c = 0; c < open_; ++c) {
      for (int len = RouteLength(pos, c); len <= max_length; ++len) {
        buckets.push_back({p_.usage_weight * len, c, len});
      }
    }
    if (open_ < p_.num_channels) {
      for (int len = d.base_length; len <= max_length; ++len) {
        buckets.push_back(
            {p_.channel_weight + p_.usage_weight * len, open_, len});
      }
    }
    std::sort(buckets.begin(), buckets.end(),
              [](const Bucket& a, const Bucket& b) {
                return std::tie(a.increment, a.length, a.channel) <
                       std::tie(b.increment, b.length, b.channel);
              });

    const int64_t rest = p_.usage_weight * suffix_base_[pos + 1];
    // Distances to the target per channel, computed on first use.
    std::vector<std::vector<int>> dist(open_ + 1);
    std::vector<int> dist2;
    std::vector<uint64_t> blocked2(words_);
    for (const Bucket& b : buckets) {
      auto hopeless = [&] {
        return control_.stopped.load(std::memory_order_relaxed) ||
               cost_ + b.increment + rest >= incumbent_.cost();
      };
      if (hopeless()) return;
      const Mask occ = Occupied(b.channel);
      std::vector<int>& to_dst = dist[b.channel];
      if (to_dst.empty()) internal::DistancesTo(g, occ, d.dst, &to_dst);
      if (to_dst[d.src] > b.length) continue;
      Choice choice{b.channel, {}, {}};
      bool go_on = true;
      if (!d.is_protected) {
        internal::ForEachPathOfLength(
            g, occ, d.src, d.dst, b.length, to_dst,
            [&](const std::vector<int>& path) {
              choice.working = path;
              go_on = visit(choice) && !hopeless();
              return go_on;
            });
      } else {
        // Working path first, strictly before the protection path in
        // (length, link sequence) order: swapping the two gives the same
        // occupancy, so only one orientation is explored.
        for (int a = 1; go_on && 2 * a <= b.length; ++a) {
          internal::ForEachPathOfLength(
              g, occ, d.src, d.dst, a, to_dst,
              [&](const std::vector<int>& working) {
                std::copy(occ.begin(), occ.end(), blocked2.begin());
                for (int e : working) internal::SetBit(blocked2, e);
                internal::DistancesTo(g, blocked2, d.dst, &dist2);
                internal::ForEachPathOfLength(
                    g, blocked2, d.src, d.dst, b.length - a, dist2,
                    [&](const std::vector<int>& backup) {
                      if (2 * a == b.length && !(working < backup)) {
                        return true;
                      }
                      choice.working = working;
                      choice.protection = backup;
                      go_on = visit(choice) && !hopeless();
                      return go_on;
                    });
                return go_on;
              });
        }
      }
      if (!go_on) return;
    }
  }

  void Dfs(int pos) {
    ForEachChild(pos, [&](const Choice& choice) {
      if (!CountNode()) return false;
      Apply(pos, choice);
      if (LowerBound(pos + 1) < incumbent_.cost()) {
        if (pos + 1 == num_demands_) {
          incumbent_.Offer(cost_, choices_);
        } else {
          Dfs(pos + 1);
        }
      }
      Undo(pos);
      return !control_.stopped.load(std::memory_order_relaxed);
    });
  }

  int64_t cost() const { return cost_; }
  const std::vector<Choice>& choices() const { return choices_; }

  void Flush() {
    control_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed);
    pending_nodes_ = 0;
  }

 private:
  struct Frame {
    int64_t old_cost = 0;
    int64_t old_free_price = 0;
    bool opened = false;
    std::vector<uint64_t> added;
    std::vector<int> saved_length;
    std::vector<uint64_t> saved_links;
    std::vector<int64_t> saved_priced;
    std::vector<uint64_t> saved_priced_links;
  };

  MutableMask Occupied(int c) {
    return MutableMask(occupied_).subspan(static_cast<size_t>(c) * words_,
                                          words_);
  }
  int& RouteLength(int j, int c) {
    return route_length_[static_cast<size_t>(j) * p_.num_channels + c];
  }
  MutableMask RouteLinks(int j, int c) {
    return MutableMask(route_links_)
        .subspan((static_cast<size_t>(j) * p_.num_channels + c) * words_,
                 words_);
  }

  int64_t& PricedCost(int j, int c) {
    return priced_cost_[static_cast<size_t>(j) * p_.num_channels + c];
  }
  MutableMask PricedLinks(int j, int c) {
    return MutableMask(priced_links_)
        .subspan((static_cast<size_t>(j) * p_.num_channels + c) * words_,
                 words_);
  }

  void RecomputePriced(int j, int c) {
    const DemandSpec& d = p_.demands[j];
    int64_t& priced = PricedCost(j, c);
    priced = internal::MinCostRoute(p_.graph, Occupied(c), d.src, d.dst,
                                    d.is_protected ? 2 : 1, weight_,
                                    &scratch_links_);
    if (priced < internal::kInfiniteRouteCost) {
      MutableMask links = PricedLinks(j, c);
      std::copy(scratch_links_.begin(), scratch_links_.end(), links.begin());
    }
  }

  // Free (link, channel) slots among `links` over the open channels.
  int64_t FreePorts(Mask links) {
    int64_t free = 0;
    for (int c = 0; c < open_; ++c) {
      const Mask occ = Occupied(c);
      for (int w = 0; w < words_; ++w) {
        free += std::popcount(links[w] & ~occ[w]);
      }
    }
    return free;
  }

  void Recompute(int j, int c) {
    const DemandSpec& d = p_.demands[j];
    const Mask occ = Occupied(c);
    MutableMask links = RouteLinks(j, c);
    int& len = RouteLength(j, c);
    if (d.is_protected) {
      len = internal::DisjointPairLength(p_.graph, occ, d.src, d.dst,
                                         &scratch_links_);
      if (len < kUnreachable) {
        std::copy(scratch_links_.begin(), scratch_links_.end(), links.begin());
      }
      return;
    }
    std::optional<std::vector<int>> path =
        internal::ShortestPath(p_.graph, occ, d.src, d.dst);
    if (!path) {
      len = kUnreachable;
      return;
    }
    len = static_cast<int>(path->size());
    std::fill(links.begin(), links.end(), 0);
    for (int e : *path) internal::SetBit(links, e);
  }

  bool CountNode() {
    if (++pending_nodes_ < kCheckInterval) {
      return !control_.stopped.load(std::memory_order_relaxed);
    }
    const int64_t total =
        control_.nodes.fetch_add(pending_nodes_, std::memory_order_relaxed) +
        pending_nodes_;
    pending_nodes_ = 0;
    if (Clock::now() >= control_.deadline ||
        (control_.node_limit && total >= *control_.node_limit)) {
      control_.stopped.store(true, std::memory_order_relaxed);
    }
    return !control_.stopped.load(std::memory_order_relaxed);
  }

  const Problem& p_;
  const Multipliers& prices_;
  Incumbent& incumbent_;
  SearchControl& control_;
  const int words_;
  const int num_demands_;

  std::vector<uint64_t> occupied_;
  int open_ = 0;
  int64_t cost_ = 0;
  // Shortest free route length per (position, open channel) and its links.
  std::vector<int> route_length_;
  std::vector<uint64_t> route_links_;
  // Same for the priced route cost.
  std::vector<int64_t> priced_cost_;
  std::vector<uint64_t> priced_links_;
  std::vector<int64_t> weight_;
  // Sum of prices over the free slots of the open channels.
  int64_t free_price_ = 0;
  std::vector<Frame> frames_;
  std::vector<Choice> choices_;

  std::vector<int64_t> need_out_;
  std::vector<int64_t> need_in_;
  std::vector<int64_t> suffix_base_;
  std::vector<uint64_t> scratch_links_;
  int64_t pending_nodes_ = 0;
};

// Expands the tree breadth-first until there are enough open subproblems for
// the workers, then lets each worker run a depth-first search below them.
void SolveParallel(const Problem& p, const Multipliers& prices, int threads,
                   Incumbent& incumbent, SearchControl& control) {
  const int num_demands = static_cast<int>(p.demands.size());
  std::vector<std::vector<Choice>> frontier = {{}};
  int depth = 0;
  {
    Searcher expander(p, prices, incumbent, control);
    while (depth < num_demands && !frontier.empty() &&
           frontier.size() < kSubproblemsPerThread * threads &&
           !control.stopped.load()) {
      std::vector<std::vector<Choice>> next;
      for (const std::vector<Choice>& prefix : frontier) {
        for (int i = 0; i < depth; ++i) expander.Apply(i, prefix[i]);
        if (expander.LowerBound(depth) < incumbent.cost()) {
          expander.ForEachChild(depth, [&](const Choice& choice) {
            expander.Apply(depth, choice);
            if (expander.LowerBound(depth + 1) < incumbent.cost()) {
              if (depth + 1 == num_demands) {
                incumbent.Offer(expander.cost(), expander.choices());
              } else {
                std::vector<Choice> child = prefix;
                child.push_back(choice);
                next.push_back(std::move(child));
              }
            }
            expander.Undo(depth);
            return true;
          });
        }
        for (int i = depth - 1; i >= 0; --i) expander.Undo(i);
      }
      frontier = std::move(next);
      ++depth;
    }
  }
  if (depth == num_demands) return;

  std::atomic<size_t> next_job{0};
  auto work = [&] {
    Searcher searcher(p, prices, incumbent, control);
    for (size_t job = next_job++; job < frontier.size(); job = next_job++) {
      if (control.stopped.load(std::memory_order_relaxed)) break;
      const std::vector<Choice>& prefix = frontier[job];
      for (int i = 0; i < depth; ++i) searcher.Apply(i, prefix[i]);
      if (searcher.LowerBound(depth) < incumbent.cost()) searcher.Dfs(depth);
      for (int i = depth - 1; i >= 0; --i) searcher.Undo(i);
    }
  };
  std::vector<std::thread> workers;
  for (int i = 0; i < threads; ++i) workers.emplace_back(work);
  for (std::thread& w : workers) w.join();
}

}  // namespace

absl::StatusOr<RwaSolution> SolveExact(const NetworkTopology& t,
                                       const TrafficMatrix& m,
                                       const DesignConfig& cfg,
                                       const SolverOptions& opts) {
  if (opts.time_limit.count() <= 0) {
    return absl::InvalidArgumentError("time limit must be positive");
  }
  if (opts.thread_count <= 0) {
    return absl::InvalidArgumentError("thread count must be positive");
  }
  const Clock::time_point start = Clock::now();
  absl::StatusOr<Problem> problem = internal::BuildProblem(t, m, cfg);
  if (!problem.ok()) return problem.status();
  Problem& p = *problem;

  auto finish = [&](RwaSolution s, int64_t nodes) {
    s.stats.nodes = nodes;
    s.stats.seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return s;
  };
  if (p.infeasible) {
    return finish(internal::MakeSolution(p, {}, SolveStatus::kInfeasible), 0);
  }

  Incumbent incumbent;
  if (opts.warm_start) {
    std::vector<Choice> greedy = internal::FirstFit(p);
    if (greedy.size() == p.demands.size()) {
      incumbent.Offer(internal::CostOf(p, greedy), greedy);
    }
  }

  // Channel and usage totals of the incumbent.
  auto incumbent_channels = [&] {
    return incumbent.found() ? internal::MakeSolution(p, incumbent.choices(),
                                                      SolveStatus::kFeasible)
                                   .wavelength_count
                             : p.num_channels;
  };
  auto incumbent_usage = [&] {
    int64_t usage = 0;
    if (incumbent.found()) {
      for (const Choice& c : incumbent.choices()) usage += c.length();
    } else {
      for (const DemandSpec& d : p.demands) usage += d.base_length;
    }
    return usage;
  };

  // Raise the channel bound while the priced relaxation rules counts out.
  const int first_top = incumbent_channels();
  while (!p.demands.empty() && p.min_channels < first_top) {
    const int k = std::max(p.min_channels, 1);
    const Multipliers probe = MakeMultipliers(
        p, SubgradientPrices(p, k, int64_t{k} * p.graph.num_links + 1,
                             kFeasibilityIterations));
    if (PricedUsageBound(p, probe, k).has_value()) break;
    p.min_channels = k + 1;
  }
  if (p.min_channels > p.num_channels) {
    return finish(internal::MakeSolution(p, {}, SolveStatus::kInfeasible), 0);
  }

  // Prices steer the greedy starts towards the fewest channels first, then
  // get re-aimed at the best solution found.
  auto aimed_prices = [&] {
    if (p.demands.empty()) return MakeMultipliers(p, {});
    const int top = incumbent_channels();
    const int aim = p.usage_weight == 0 ? std::max(p.min_channels, top - 1)
                                        : std::max(p.min_channels, top);
    return MakeMultipliers(p, SubgradientPrices(p, std::max(aim, 1),
                                                incumbent_usage(),
                                                kPriceIterations));
  };
  Multipliers prices = aimed_prices();
  if (opts.warm_start) {
    GreedyStarts(p, prices, incumbent);
    prices = aimed_prices();
  }

  SearchControl control;
  control.deadline =
      start + std::chrono::duration_cast<Clock::duration>(opts.time_limit);
  control.node_limit = opts.node_limit;

  if (p.demands.empty()) {
    incumbent.Offer(0, {});
  } else if (opts.thread_count == 1) {
    Searcher searcher(p, prices, incumbent, control);
    if (searcher.LowerBound(0) < incumbent.cost()) searcher.Dfs(0);
  } else {
    SolveParallel(p, prices, opts.thread_count, incumbent, control);
  }

  const bool complete = !control.stopped.load();
  const int64_t nodes = control.nodes.load();
  if (!incumbent.found()) {
    return finish(
        internal::MakeSolution(p, {}, complete ? SolveStatus::kInfeasible
                                               : SolveStatus::kTimeout),
        nodes);
  }
  return finish(internal::MakeSolution(p, incumbent.choices(),
                                       complete ? SolveStatus::kOptimal
                                                : SolveStatus::kFeasible),
                nodes);
}

}  // namespace lexrwa
