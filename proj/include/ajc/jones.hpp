#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "ajc/laurent.hpp"

namespace ajc {

// Planar diagram code of a knot. Each crossing X[a,b,c,d] lists its edge labels counterclockwise,
// starting from the incoming under-strand a; the under-strand runs a -> c. Labels are 1..2c and
// increase along the orientation.
class KnotDiagram {
 public:
  using Crossing = std::array<int, 4>;

  KnotDiagram() = default;  // zero-crossing unknot
  static KnotDiagram from_pd(std::vector<Crossing> pd);

  const std::vector<Crossing>& crossings() const { return pd_; }
  const std::vector<int>& signs() const { return signs_; }
  int writhe() const;
  int positive_count() const;
  int negative_count() const;
  // Mirror image: every crossing changes sign.
  KnotDiagram mirror() const;

 private:
  std::vector<Crossing> pd_;
  std::vector<int> signs_;
};

struct BracketOptions {
  std::size_t max_states = 400000;
};

// Kauffman bracket (A = t, loop value -t^2 - t^{-2}, empty diagram 1) of the planar diagram whose
// crossings are given as counterclockwise port lists with ports 0, 2 on the under-strand.
LaurentT kauffman_bracket(const std::vector<std::array<int, 4>>& crossings, const BracketOptions& opt = {});
// The j-strand blackboard parallel of the diagram, as port lists for kauffman_bracket.
std::vector<std::array<int, 4>> blackboard_parallel(const KnotDiagram& d, int j);

// Colored Jones polynomial through the Jones-Wenzl idempotent on the cabled diagram, framing 0.
LaurentT jones_bracket_oracle(const KnotDiagram& d, long n, const BracketOptions& opt = {});

// Closed forms. Torus knots T(p, q) with p, q > 0 are right-handed.
LaurentT jones_unknot(long n);
LaurentT jones_torus(int p, int q, long n);
// Twist knots in the Masbaum parametrization: m = 1 right-handed trefoil, m = -1 figure-8,
// m = 0 unknot, m = 2 and m = -2 the knots 5_2 and 6_1 up to mirror image.
LaurentT jones_twist(int m, long n);

// Colored Jones sequence with a thread-safe cache. Knot sequences obey J(0) = 0 and
// J(-n) = -J(n); derived sequences such as the odd part are evaluated directly at every n.
class JonesSeq {
 public:
  using Exact = std::function<LaurentT(long)>;
  // Values modulo p at t = tau for colors 0..n_max.
  using ModRange = std::function<std::vector<std::uint64_t>(long n_max, std::uint64_t tau, std::uint64_t p)>;

  JonesSeq() = default;
  JonesSeq(std::string label, Exact exact, ModRange modular, bool knot_symmetry);

  LaurentT operator()(long n) const;
  std::vector<std::uint64_t> eval_mod(long n_max, std::uint64_t tau, std::uint64_t p) const;
  bool has_modular() const { return impl_ && static_cast<bool>(impl_->modular); }
  bool knot_symmetry() const { return impl_->symmetric; }
  const std::string& label() const { return impl_->label; }
  std::size_t cached() const;

 private:
  struct Impl {
    std::string label;
    Exact exact;
    ModRange modular;
    bool symmetric = true;
    mutable std::shared_mutex mu;
    mutable std::map<long, LaurentT> cache;
  };
  std::shared_ptr<Impl> impl_;
};

JonesSeq unknot_seq();
JonesSeq torus_seq(int p, int q);
JonesSeq twist_seq(int m);
JonesSeq oracle_seq(const KnotDiagram& d, std::string label);
// t -> t^{-1}.
JonesSeq mirror_seq(const JonesSeq& j);
// Colored Jones of the (r, 2)-cable, r odd.
JonesSeq cable_jones(const JonesSeq& j, int r);
// n -> J(2n + 1).
JonesSeq odd_part(const JonesSeq& j);

}  // namespace ajc
