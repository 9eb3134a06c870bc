#include "logquiver/brute_force.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace logquiver {

namespace {

using Vec = std::vector<int>;
using Basis = std::vector<Vec>;

struct ArrowBlock {
  size_t from, to;
  int rows, cols;  // rows = d_to, cols = d_from
};

bool is_small_prime(long p) {
  if (p < 2 || p > 97) return false;
  for (long k = 2; k * k <= p; ++k)
    if (p % k == 0) return false;
  return true;
}

/// Reduces v against an echelon basis; true if v lies in its span.
bool in_span(Vec v, const Basis& basis, long p) {
  for (const Vec& row : basis) {
    size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    const long f = v[pivot];
    if (f == 0) continue;
    for (size_t c = 0; c < v.size(); ++c) v[c] = static_cast<int>(((v[c] - f * row[c]) % p + p) % p);
  }
  for (int x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

std::vector<Basis> subspaces(int n, int e, long p) {
  std::vector<Basis> out;
  if (e < 0 || e > n) return out;
  std::vector<int> pivots;
  std::function<void(int)> choose = [&](int start) {
    if (static_cast<int>(pivots.size()) == e) {
      // free positions: row r, column c > pivots[r], c not a pivot
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < e; ++r)
        for (int c = pivots[r] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(r, c);
      std::vector<int> vals(free.size(), 0);
      while (true) {
        Basis b(e, Vec(n, 0));
        for (int r = 0; r < e; ++r) b[r][pivots[r]] = 1;
        for (size_t i = 0; i < free.size(); ++i) b[free[i].first][free[i].second] = vals[i];
        out.push_back(std::move(b));
        size_t i = 0;
        while (i < vals.size() && vals[i] == p - 1) vals[i++] = 0;
        if (i == vals.size()) break;
        ++vals[i];
      }
      return;
    }
    for (int c = start; c < n; ++c) {
      pivots.push_back(c);
      choose(c + 1);
      pivots.pop_back();
    }
  };
  choose(0);
  return out;
}

bool brute_force_feasible(const Quiver& q, const DimensionVector& d, long p) {
  long entries = 0;
  for (size_t i = 0; i < q.vertex_count; ++i)
    for (size_t j = 0; j < q.vertex_count; ++j) entries += q.arrows[i][j] * d.entries[i] * d.entries[j];
  long reps = 1;
  for (long k = 0; k < entries; ++k) {
    reps *= p;
    if (reps > kBruteForceGuard) return false;
  }
  return true;
}

BruteForceCount brute_force_semistable_count(const Quiver& q, const DimensionVector& d, const Stability& theta,
                                             long p) {
  if (!is_small_prime(p)) throw std::invalid_argument("brute force needs a prime below 100");
  if (!d.valid() || d.entries.size() != q.vertex_count) throw std::invalid_argument("bad dimension vector");
  const size_t n = q.vertex_count;

  std::vector<ArrowBlock> blocks;
  long entries = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (int a = 0; a < q.arrows[i][j]; ++a) {
        blocks.push_back({i, j, static_cast<int>(d.entries[j]), static_cast<int>(d.entries[i])});
        entries += d.entries[i] * d.entries[j];
      }
  if (!brute_force_feasible(q, d, p)) throw std::invalid_argument("brute force guard exceeded");
  long reps = 1;
  for (long k = 0; k < entries; ++k) reps *= p;

  // Subdimension vectors that could destabilize, with their subspace lists.
  struct Candidate {
    std::vector<long> e;
    bool strict;  // slope strictly above that of d (breaks semistability)
    std::vector<std::vector<Basis>> spaces;
  };
  std::vector<Candidate> candidates;
  const Rational mu = d.total() > 0 ? theta.slope(d.entries) : Rational(0);
  std::vector<long> e(n, 0);
  while (true) {
    size_t i = 0;
    while (i < n && e[i] == d.entries[i]) e[i++] = 0;
    if (i == n) break;
    ++e[i];
    if (e == d.entries) continue;
    const Rational me = theta.slope(e);
    if (me < mu) continue;
    Candidate c{e, me > mu, {}};
    for (size_t v = 0; v < n; ++v)
      c.spaces.push_back(subspaces(static_cast<int>(d.entries[v]), static_cast<int>(e[v]), p));
    candidates.push_back(std::move(c));
  }

  std::vector<int> values(entries, 0);
  auto matrix_entry = [&](size_t block, int r, int c, size_t offset) { return values[offset + r * blocks[block].cols + c]; };
  std::vector<size_t> offsets;
  {
    size_t off = 0;
    for (const ArrowBlock& b : blocks) {
      offsets.push_back(off);
      off += static_cast<size_t>(b.rows) * b.cols;
    }
  }

  auto has_subrep = [&](const Candidate& c) {
    std::vector<size_t> choice(n, 0);
    while (true) {
      bool invariant = true;
      for (size_t b = 0; b < blocks.size() && invariant; ++b) {
        const ArrowBlock& blk = blocks[b];
        const Basis& src = c.spaces[blk.from][choice[blk.from]];
        const Basis& dst = c.spaces[blk.to][choice[blk.to]];
        for (const Vec& u : src) {
          Vec img(blk.rows, 0);
          for (int r = 0; r < blk.rows; ++r) {
            long s = 0;
            for (int col = 0; col < blk.cols; ++col) s += static_cast<long>(matrix_entry(b, r, col, offsets[b])) * u[col];
            img[r] = static_cast<int>(s % p);
          }
          if (!in_span(img, dst, p)) {
            invariant = false;
            break;
          }
        }
      }
      if (invariant) return true;
      size_t v = 0;
      while (v < n && choice[v] + 1 == c.spaces[v].size()) choice[v++] = 0;
      if (v == n) return false;
      ++choice[v];
    }
  };

  long semistable = 0, stable = 0;
  while (true) {
    bool ss = true, st = true;
    for (const Candidate& c : candidates) {
      if (!c.strict && !st) continue;
      if (has_subrep(c)) {
        st = false;
        if (c.strict) {
          ss = false;
          break;
        }
      }
    }
    semistable += ss;
    stable += st;
    size_t k = 0;
    while (k < values.size() && values[k] == p - 1) values[k++] = 0;
    if (k == values.size()) break;
    ++values[k];
  }

  Rational group = 1;
  for (long di : d.entries) group *= gl_order(static_cast<int>(di)).evaluate(Rational(p));
  BruteForceCount out;
  out.representations = reps;
  out.semistable = Rational(semistable) / group;
  out.stable_orbits = Rational(stable) * (p - 1) / group;
  out.semistable.canonicalize();
  out.stable_orbits.canonicalize();
  return out;
}

}  // namespace logquiver
