#include <algorithm>
#include <string>
#include <unordered_map>

#include "ajc/errors.hpp"
#include "ajc/jones.hpp"

namespace ajc {

namespace {

// Union-find over the few nodes touched by one crossing.
struct Dsu {
  std::vector<int> p;
  explicit Dsu(std::size_t n) : p(n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (p[static_cast<std::size_t>(x)] != x) x = p[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(p[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int a, int b) { p[static_cast<std::size_t>(find(a))] = find(b); }
};

// Orders crossings so that each next one shares as many edges as possible with the frontier.
std::vector<std::size_t> processing_order(const std::vector<std::array<int, 4>>& xs) {
  std::unordered_map<int, std::vector<std::size_t>> at;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (int e : xs[i]) at[e].push_back(i);
  std::vector<char> done(xs.size(), 0);
  std::unordered_map<int, int> open;  // edge -> ends processed
  std::vector<int> score(xs.size(), 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < xs.size(); ++step) {
    std::size_t best = xs.size();
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (done[i]) continue;
      if (best == xs.size() || score[i] > score[best]) best = i;
    }
    done[best] = 1;
    order.push_back(best);
    for (int e : xs[best]) {
      if (++open[e] == 1)
        for (std::size_t j : at[e])
          if (!done[j]) ++score[j];
    }
  }
  return order;
}

}  // namespace

LaurentT kauffman_bracket(const std::vector<std::array<int, 4>>& xs, const BracketOptions& opt) {
  if (xs.empty()) return LaurentT(1);
  const LaurentT delta = LaurentT::from_terms({{2, Int(-1)}, {-2, Int(-1)}});
  std::vector<LaurentT> delta_pow{LaurentT(1)};
  auto dpow = [&](int k) -> const LaurentT& {
    while (static_cast<int>(delta_pow.size()) <= k) delta_pow.push_back(delta_pow.back() * delta);
    return delta_pow[static_cast<std::size_t>(k)];
  };

  std::vector<int> frontier;            // edge ids with exactly one processed end
  std::unordered_map<int, int> where;   // edge id -> frontier index
  // state: partner index for each frontier slot, encoded as bytes
  std::unordered_map<std::string, LaurentT> states;
  states.emplace(std::string(), LaurentT(1));

  static const int kArcs[2][4] = {{1, 0, 3, 2}, {3, 2, 1, 0}};  // A: (0,1)(2,3); B: (0,3)(1,2)
  static const int kWeight[2] = {1, -1};

  for (std::size_t ci : processing_order(xs)) {
    const auto& x = xs[ci];
    // classify ports
    int closing_pos[4];
    int twin[4];
    for (int s = 0; s < 4; ++s) {
      auto it = where.find(x[s]);
      closing_pos[s] = it == where.end() ? -1 : it->second;
      twin[s] = -1;
      for (int u = 0; u < 4; ++u)
        if (u != s && x[u] == x[s]) twin[s] = u;
      if (closing_pos[s] >= 0 && twin[s] >= 0) throw InvalidInput("bracket: edge with three ends");
    }
    // new frontier: survivors in order, then new edges
    std::vector<int> old_to_new(frontier.size(), -1);
    std::vector<int> next_frontier;
    std::vector<char> closing(frontier.size(), 0);
    for (int s = 0; s < 4; ++s)
      if (closing_pos[s] >= 0) closing[static_cast<std::size_t>(closing_pos[s])] = 1;
    for (std::size_t f = 0; f < frontier.size(); ++f)
      if (!closing[f]) {
        old_to_new[f] = static_cast<int>(next_frontier.size());
        next_frontier.push_back(frontier[f]);
      }
    int slot_new[4];
    for (int s = 0; s < 4; ++s) {
      slot_new[s] = -1;
      if (closing_pos[s] < 0 && twin[s] < 0) {
        slot_new[s] = static_cast<int>(next_frontier.size());
        next_frontier.push_back(x[s]);
      }
    }
    if (next_frontier.size() > 250) throw ResourceLimit("bracket: frontier too wide");

    std::unordered_map<std::string, LaurentT> next_states;
    next_states.reserve(states.size() * 2);
    for (const auto& [key, coeff] : states) {
      for (int smoothing = 0; smoothing < 2; ++smoothing) {
        // nodes: 0..3 slots, then old frontier positions touched by closing edges
        std::vector<int> touched;
        for (int s = 0; s < 4; ++s)
          if (closing_pos[s] >= 0) {
            int f = closing_pos[s];
            int g = static_cast<unsigned char>(key[static_cast<std::size_t>(f)]);
            touched.push_back(f);
            touched.push_back(g);
          }
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        auto node_of = [&](int f) {
          return 4 + static_cast<int>(std::lower_bound(touched.begin(), touched.end(), f) - touched.begin());
        };
        Dsu dsu(4 + touched.size());
        for (int s = 0; s < 4; ++s) {
          dsu.unite(s, kArcs[smoothing][s]);
          if (twin[s] >= 0) dsu.unite(s, twin[s]);
          if (closing_pos[s] >= 0) dsu.unite(s, node_of(closing_pos[s]));
        }
        for (int f : touched) dsu.unite(node_of(f), node_of(static_cast<unsigned char>(key[static_cast<std::size_t>(f)])));

        std::string nk(next_frontier.size(), '\0');
        for (std::size_t f = 0; f < frontier.size(); ++f)
          if (!closing[f]) {
            int g = static_cast<unsigned char>(key[f]);
            if (!closing[static_cast<std::size_t>(g)])
              nk[static_cast<std::size_t>(old_to_new[f])] = static_cast<char>(old_to_new[static_cast<std::size_t>(g)]);
          }
        // terminals per component
        std::vector<std::pair<int, int>> terminal;  // (root, new index)
        for (int f : touched)
          if (!closing[static_cast<std::size_t>(f)]) terminal.emplace_back(dsu.find(node_of(f)), old_to_new[static_cast<std::size_t>(f)]);
        for (int s = 0; s < 4; ++s)
          if (slot_new[s] >= 0) terminal.emplace_back(dsu.find(s), slot_new[s]);
        std::sort(terminal.begin(), terminal.end());
        for (std::size_t i = 0; i + 1 < terminal.size(); i += 2) {
          nk[static_cast<std::size_t>(terminal[i].second)] = static_cast<char>(terminal[i + 1].second);
          nk[static_cast<std::size_t>(terminal[i + 1].second)] = static_cast<char>(terminal[i].second);
        }
        // loops: components with no terminal
        std::vector<int> roots;
        for (int v = 0; v < 4 + static_cast<int>(touched.size()); ++v) roots.push_back(dsu.find(v));
        std::sort(roots.begin(), roots.end());
        roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
        int loops = 0;
        for (int r : roots) {
          bool has = false;
          for (const auto& t : terminal)
            if (t.first == r) has = true;
          if (!has) ++loops;
        }
        LaurentT w = coeff.shifted(kWeight[smoothing]);
        if (loops) w = w * dpow(loops);
        auto [it, inserted] = next_states.try_emplace(nk, w);
        if (!inserted) {
          it->second += w;
        }
      }
    }
    for (auto it = next_states.begin(); it != next_states.end();) {
      if (it->second.is_zero())
        it = next_states.erase(it);
      else
        ++it;
    }
    if (next_states.size() > opt.max_states)
      throw ResourceLimit("bracket: " + std::to_string(next_states.size()) + " planar states exceed the budget");
    states = std::move(next_states);
    frontier = std::move(next_frontier);
    where.clear();
    for (std::size_t f = 0; f < frontier.size(); ++f) where[frontier[f]] = static_cast<int>(f);
  }
  if (!frontier.empty()) throw InvalidInput("bracket: diagram has unmatched edges");
  auto it = states.find(std::string());
  return it == states.end() ? LaurentT() : it->second;
}

std::vector<std::array<int, 4>> blackboard_parallel(const KnotDiagram& d, int j) {
  const auto& pd = d.crossings();
  std::vector<std::array<int, 4>> out;
  if (j <= 0) return out;
  const int edges = static_cast<int>(2 * pd.size());
  std::vector<int> seen(static_cast<std::size_t>(edges + 1), 0);
  int next_id = edges * j;
  auto ext = [&](int label, int pos, bool first) {
    int s = first ? pos : j - 1 - pos;
    return (label - 1) * j + s;
  };
  for (const auto& x : pd) {
    bool first[4];
    for (int s = 0; s < 4; ++s) first[s] = seen[static_cast<std::size_t>(x[s])]++ == 0;
    // internal edges: vertical v[x][y] joins rows y and y+1 in column x; horizontal h[x][y]
    // joins columns x and x+1 in row y
    std::vector<int> v(static_cast<std::size_t>(j * j)), h(static_cast<std::size_t>(j * j));
    for (auto& e : v) e = next_id++;
    for (auto& e : h) e = next_id++;
    auto V = [&](int cx, int cy) { return v[static_cast<std::size_t>(cx * j + cy)]; };
    auto H = [&](int cx, int cy) { return h[static_cast<std::size_t>(cx * j + cy)]; };
    for (int cx = 0; cx < j; ++cx)
      for (int cy = 0; cy < j; ++cy) {
        int south = cy == 0 ? ext(x[0], cx, first[0]) : V(cx, cy - 1);
        int north = cy == j - 1 ? ext(x[2], j - 1 - cx, first[2]) : V(cx, cy);
        int east = cx == j - 1 ? ext(x[1], cy, first[1]) : H(cx, cy);
        int west = cx == 0 ? ext(x[3], j - 1 - cy, first[3]) : H(cx - 1, cy);
        out.push_back({south, east, north, west});
      }
  }
  return out;
}

LaurentT jones_bracket_oracle(const KnotDiagram& d, long n, const BracketOptions& opt) {
  if (n < 1) throw InvalidInput("jones_bracket_oracle: color must be >= 1");
  if (d.crossings().size() > 8 || n > 5) throw ResourceLimit("jones_bracket_oracle: limited to 8 crossings and n <= 5");
  if (n == 1) return LaurentT(1);
  const int k = static_cast<int>(n - 1);
  // Chebyshev S_k(z): S_0 = 1, S_1 = z, S_{i+1} = z S_i - S_{i-1}
  std::vector<std::vector<long>> cheb{{1}, {0, 1}};
  for (int i = 1; i < k; ++i) {
    std::vector<long> nx(static_cast<std::size_t>(i + 2), 0);
    for (std::size_t a = 0; a < cheb[static_cast<std::size_t>(i)].size(); ++a) nx[a + 1] += cheb[static_cast<std::size_t>(i)][a];
    for (std::size_t a = 0; a < cheb[static_cast<std::size_t>(i - 1)].size(); ++a) nx[a] -= cheb[static_cast<std::size_t>(i - 1)][a];
    cheb.push_back(std::move(nx));
  }
  const auto& s = cheb[static_cast<std::size_t>(k)];
  const LaurentT delta = LaurentT::from_terms({{2, Int(-1)}, {-2, Int(-1)}});
  LaurentT sum;
  for (int i = 0; i <= k; ++i) {
    if (s[static_cast<std::size_t>(i)] == 0) continue;
    LaurentT b = d.crossings().empty() ? delta.pow(static_cast<unsigned>(i)) : kauffman_bracket(blackboard_parallel(d, i), opt);
    sum += b.scaled(s[static_cast<std::size_t>(i)]);
  }
  // undo the blackboard framing: the twist eigenvalue on f_k is (-1)^k t^{k^2 + 2k}
  const int w = d.writhe();
  const long tw = (static_cast<long>(k) * k + 2L * k) * (-w);
  Int sign = ((k * (1 + (w < 0 ? -w : w))) % 2 == 0) ? 1 : -1;
  return sum.shifted(static_cast<int>(tw)).scaled(sign);
}

}  // namespace ajc
