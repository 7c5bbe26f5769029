#include <algorithm>
#include <map>

#include "ajc/errors.hpp"
#include "ajc/jones.hpp"

namespace ajc {

namespace {

int successor(int label, int edges) { return label % edges + 1; }

}  // namespace

KnotDiagram KnotDiagram::from_pd(std::vector<Crossing> pd) {
  KnotDiagram d;
  if (pd.empty()) return d;
  const int edges = static_cast<int>(2 * pd.size());
  std::map<int, int> count;
  for (const auto& x : pd)
    for (int v : x) {
      if (v < 1 || v > edges) throw InvalidInput("PD code: label " + std::to_string(v) + " outside 1.." + std::to_string(edges));
      ++count[v];
    }
  for (int v = 1; v <= edges; ++v)
    if (count[v] != 2) throw InvalidInput("PD code: label " + std::to_string(v) + " must occur exactly twice");

  // Each label is the incoming strand at exactly one crossing; under-strands fix most of them.
  std::vector<int> incoming(static_cast<std::size_t>(edges + 1), 0);
  for (const auto& x : pd) {
    if (x[2] != successor(x[0], edges)) throw InvalidInput("PD code: under-strand must run a -> a+1");
    ++incoming[static_cast<std::size_t>(x[0])];
  }
  std::vector<int> signs;
  for (const auto& x : pd) {
    bool d_to_b = x[1] == successor(x[3], edges);
    bool b_to_d = x[3] == successor(x[1], edges);
    if (!d_to_b && !b_to_d) throw InvalidInput("PD code: over-strand labels must be consecutive");
    if (d_to_b && b_to_d) {
      // two-edge diagram: the over-strand enters on the label that is not yet incoming
      d_to_b = incoming[static_cast<std::size_t>(x[3])] == 0;
    }
    ++incoming[static_cast<std::size_t>(d_to_b ? x[3] : x[1])];
    signs.push_back(d_to_b ? 1 : -1);
  }
  for (int v = 1; v <= edges; ++v)
    if (incoming[static_cast<std::size_t>(v)] != 1) throw InvalidInput("PD code: inconsistent orientation");
  d.pd_ = std::move(pd);
  d.signs_ = std::move(signs);
  return d;
}

int KnotDiagram::writhe() const {
  int w = 0;
  for (int s : signs_) w += s;
  return w;
}

int KnotDiagram::positive_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), 1));
}

int KnotDiagram::negative_count() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

KnotDiagram KnotDiagram::mirror() const {
  std::vector<Crossing> pd;
  for (std::size_t i = 0; i < pd_.size(); ++i) {
    const auto& x = pd_[i];
    // the old over-strand becomes the under-strand; start from its incoming end
    if (signs_[i] > 0)
      pd.push_back({x[3], x[0], x[1], x[2]});
    else
      pd.push_back({x[1], x[2], x[3], x[0]});
  }
  return from_pd(std::move(pd));
}

}  // namespace ajc
