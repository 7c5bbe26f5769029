#include <algorithm>
#include <map>

#include "ajc/errors.hpp"
#include "ajc/linalg.hpp"
#include "ajc/modp.hpp"
#include "guess_internal.hpp"

namespace ajc::detail {

namespace {

using modp::u64;

struct Kernel {
  std::size_t dim = 0;
  std::vector<u64> v;
};

class System {
 public:
  System(const JonesSeq& j, long n_lo, long n_hi, int d, int h) : j_(j), n_lo_(n_lo), n_hi_(n_hi), d_(d), h_(h) {}

  std::size_t cols(int jcount) const { return static_cast<std::size_t>(jcount * (d_ + 1)); }

  // Columns are indexed jj * (d + 1) + k for the term M^{jj h} L^k.
  Kernel kernel_at(u64 tau, u64 p, int jcount) const {
    const auto vals = j_.eval_mod(n_hi_, tau, p);
    const std::size_t ncols = cols(jcount);
    const long nrows = n_hi_ - d_ - n_lo_ + 1;
    linalg::ModMatrix m(static_cast<std::size_t>(nrows), ncols, p);
    for (long r = 0; r < nrows; ++r) {
      const long n = n_lo_ + r;
      const u64 step = modp::pow(tau, 2L * n * h_, p);
      u64 pj = 1;
      u64* row = m.row(static_cast<std::size_t>(r));
      for (int jj = 0; jj < jcount; ++jj) {
        for (int k = 0; k <= d_; ++k)
          row[static_cast<std::size_t>(jj * (d_ + 1) + k)] = modp::mul(pj, vals[static_cast<std::size_t>(n + k)], p);
        pj = modp::mul(pj, step, p);
      }
    }
    Kernel out;
    auto ker = linalg::kernel(std::move(m), 1, &out.dim);
    if (!ker.empty()) out.v = std::move(ker[0]);
    return out;
  }

 private:
  JonesSeq j_;
  long n_lo_, n_hi_;
  int d_, h_;
};

// Evaluates a polynomial given by coefficients at s.
u64 peval(const modp::Poly& a, u64 s, u64 p) { return modp::eval(a, s, p); }

struct PrimeImage {
  // For every column, coefficients in s (index = exponent after removing the common power).
  std::vector<modp::Poly> coeffs;
};

std::optional<PrimeImage> image_mod_p(const System& sys, const Lattice& lat, int d, int jcount, std::size_t ref_col,
                                      u64 p, modp::Rng& rng, int max_points) {
  const std::size_t ncols = sys.cols(jcount);
  std::vector<u64> ss;
  std::vector<std::vector<u64>> ys(ncols);
  std::map<u64, bool> seen;
  auto add_point = [&]() -> bool {
    for (int attempt = 0; attempt < 20; ++attempt) {
      const u64 tau = 2 + rng.below(p - 3);
      const u64 s = modp::pow(tau, lat.g, p);
      if (seen.count(s)) continue;
      Kernel ker = sys.kernel_at(tau, p, jcount);
      if (ker.dim != 1 || ker.v[ref_col] == 0) continue;
      seen[s] = true;
      const u64 iv = modp::inv(ker.v[ref_col], p);
      const int k_ref = static_cast<int>(ref_col % static_cast<std::size_t>(d + 1));
      for (std::size_t c = 0; c < ncols; ++c) {
        const int k = static_cast<int>(c % static_cast<std::size_t>(d + 1));
        u64 y = modp::mul(ker.v[c], iv, p);
        y = modp::mul(y, modp::pow(tau, -(lat.rho(k) - lat.rho(k_ref)), p), p);
        ys[c].push_back(y);
      }
      ss.push_back(s);
      return true;
    }
    return false;
  };

  constexpr int kCheck = 3;
  for (int npts = 8;; npts *= 2) {
    if (npts > max_points)
      throw ResourceLimit("recurrence guess: t-dependence needs more than " + std::to_string(max_points) +
                          " specializations; raise the t-degree cap");
    while (static_cast<int>(ss.size()) < npts + kCheck)
      if (!add_point()) return std::nullopt;
    std::vector<u64> xs(ss.begin(), ss.begin() + npts);
    const modp::Poly vanish = modp::vanishing(xs, p);
    std::vector<modp::Poly> nums(ncols), dens(ncols);
    bool ok = true;
    for (std::size_t c = 0; c < ncols && ok; ++c) {
      std::vector<u64> yv(ys[c].begin(), ys[c].begin() + npts);
      modp::Poly f = modp::interpolate(xs, yv, p);
      if (!modp::rational_reconstruct_mq(f, vanish, nums[c], dens[c], p)) {
        ok = false;
        break;
      }
      for (int e = 0; e < kCheck && ok; ++e) {
        const std::size_t idx = static_cast<std::size_t>(npts + e);
        const u64 dv = peval(dens[c], ss[idx], p);
        ok = dv != 0 && modp::mul(peval(nums[c], ss[idx], p), modp::inv(dv, p), p) == ys[c][idx];
      }
    }
    if (!ok) continue;
    // Common denominator, then drop the common power of s.
    modp::Poly common{1};
    for (const auto& den : dens) {
      modp::Poly g = modp::gcd(common, den, p);
      modp::Poly q, r;
      modp::divmod(den, g, q, r, p);
      common = modp::mul(common, q, p);
    }
    PrimeImage img;
    img.coeffs.resize(ncols);
    std::size_t low = SIZE_MAX;
    for (std::size_t c = 0; c < ncols; ++c) {
      if (nums[c].empty()) continue;
      modp::Poly q, r;
      modp::divmod(common, dens[c], q, r, p);
      img.coeffs[c] = modp::mul(nums[c], q, p);
      for (std::size_t e = 0; e < img.coeffs[c].size(); ++e)
        if (img.coeffs[c][e]) {
          low = std::min(low, e);
          break;
        }
    }
    for (auto& cf : img.coeffs)
      if (!cf.empty()) cf.erase(cf.begin(), cf.begin() + static_cast<long>(low));
    // Scale so the top coefficient of the reference column is 1.
    const u64 iv = modp::inv(img.coeffs[ref_col].back(), p);
    for (auto& cf : img.coeffs) cf = modp::scale(cf, iv, p);
    return img;
  }
}

bool same_shape(const PrimeImage& a, const PrimeImage& b) {
  if (a.coeffs.size() != b.coeffs.size()) return false;
  for (std::size_t c = 0; c < a.coeffs.size(); ++c)
    if (a.coeffs[c].size() != b.coeffs[c].size()) return false;
  return true;
}

}  // namespace

std::optional<TorusOp> guess_special(const JonesSeq& j, long n_lo, long n_hi, const Lattice& lat, int d, int deg_m,
                                     int deg_t, std::uint64_t seed) {
  if (n_lo < 0) throw InvalidInput("recurrence guess: modular evaluation needs nonnegative colors");
  const int h = lat.h();
  const int jfull = deg_m / h + 1;
  System sys(j, n_lo, n_hi, d, h);
  const long nrows = n_hi - d - n_lo + 1;
  if (nrows < static_cast<long>(sys.cols(jfull)) + 8)
    throw InsufficientData("recurrence guess: " + std::to_string(nrows) + " colors for " +
                           std::to_string(sys.cols(jfull)) + " unknowns; supply at least " +
                           std::to_string(sys.cols(jfull) + 8 + static_cast<std::size_t>(d)) + " colors");
  modp::Rng rng(seed);
  const u64 p0 = modp::kPrimes[0];
  Kernel full = sys.kernel_at(2 + rng.below(p0 - 3), p0, jfull);
  // The kernel modulo p contains the reduction of every integer solution.
  if (full.dim == 0) return std::nullopt;
  // The kernel is spanned by M-shifts of the minimal operator, so its dimension gives the M-span.
  const int jmin = jfull - static_cast<int>(full.dim) + 1;
  if (jmin < 1) return std::nullopt;
  Kernel one = sys.kernel_at(2 + rng.below(p0 - 3), p0, jmin);
  if (one.dim == 0) return std::nullopt;
  std::size_t ref_col = 0;
  for (std::size_t c = 0; c < one.v.size(); ++c)
    if (one.v[c]) ref_col = c;

  const int max_points = std::max(64, 4 * deg_t / lat.g + 16);
  std::vector<PrimeImage> images;
  std::vector<u64> primes;
  for (u64 p : modp::kPrimes) {
    auto img = image_mod_p(sys, lat, d, jmin, ref_col, p, rng, max_points);
    if (!img) continue;
    if (!images.empty() && !same_shape(images[0], *img)) continue;
    images.push_back(std::move(*img));
    primes.push_back(p);
    // CRT and rational reconstruction of every coefficient.
    mpz_class mod = 1;
    for (u64 q : primes) mod *= mpz_class(static_cast<unsigned long>(q));
    bool ok = true;
    std::vector<std::vector<Rat>> rat(images[0].coeffs.size());
    Int den_lcm = 1;
    for (std::size_t c = 0; c < rat.size() && ok; ++c) {
      rat[c].resize(images[0].coeffs[c].size());
      for (std::size_t e = 0; e < rat[c].size() && ok; ++e) {
        mpz_class x = 0, m = 1;
        for (std::size_t a = 0; a < primes.size(); ++a) {
          mpz_class pa(static_cast<unsigned long>(primes[a])), ra(static_cast<unsigned long>(images[a].coeffs[c][e]));
          // x <- x + m * ((ra - x) / m mod pa)
          mpz_class diff = (ra - x) % pa;
          if (diff < 0) diff += pa;
          mpz_class minv;
          mpz_class mm = m % pa;
          mpz_invert(minv.get_mpz_t(), mm.get_mpz_t(), pa.get_mpz_t());
          x += m * ((diff * minv) % pa);
          m *= pa;
        }
        ok = modp::rational_reconstruct(x, mod, rat[c][e]);
        if (ok) den_lcm = lcm(den_lcm, Int(rat[c][e].get_den()));
      }
    }
    if (!ok) continue;
    TorusOp op;
    for (std::size_t c = 0; c < rat.size(); ++c) {
      const int k = static_cast<int>(c % static_cast<std::size_t>(d + 1));
      const int jj = static_cast<int>(c / static_cast<std::size_t>(d + 1));
      PolyTM coef;
      for (std::size_t e = 0; e < rat[c].size(); ++e) {
        Rat v = rat[c][e] * den_lcm;
        if (v != 0) coef.add_term(lat.rho(k) + lat.g * static_cast<int>(e), jj * h, v.get_num());
      }
      op.add_term(coef, k);
    }
    if (op.is_zero()) continue;
    if (verify_mod(op, j, n_lo, n_hi, seed ^ 0x9E3779B97F4A7C15ULL)) return op;
  }
  throw ResourceLimit("recurrence guess: an annihilator exists modulo p but no integer operator was recovered");
}

}  // namespace ajc::detail
