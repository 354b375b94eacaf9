#pragma once
// Independent reference implementations used to cross-check the library.
// None of these call into ringgrp beyond converting its value types.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ringgrp/abelianization.hpp"
#include "ringgrp/rotations.hpp"
#include "ringgrp/words.hpp"

namespace oracle {

// Words as signed symbols: +k is generator k-1, -k its inverse.
using Symbols = std::vector<int>;

inline Symbols free_reduce(const Symbols& w) {
  Symbols out;
  for (int s : w) {
    if (!out.empty() && out.back() == -s)
      out.pop_back();
    else
      out.push_back(s);
  }
  return out;
}

inline Symbols inverse(const Symbols& w) {
  Symbols out(w.rbegin(), w.rend());
  for (int& s : out) s = -s;
  return out;
}

inline Symbols concat(Symbols a, const Symbols& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

inline Symbols to_symbols(const ringgrp::Word& w, const std::vector<ringgrp::Generator>& gens) {
  Symbols out;
  for (const auto& l : w.letters()) {
    int k = static_cast<int>(std::find(gens.begin(), gens.end(), l.gen) - gens.begin()) + 1;
    long e = l.exp.convert_to<long>();
    for (long i = 0; i < std::labs(e); ++i) out.push_back(e > 0 ? k : -k);
  }
  return out;
}

inline ringgrp::Word to_word(const Symbols& w, const std::vector<ringgrp::Generator>& gens) {
  std::vector<ringgrp::Letter> ls;
  for (int s : w) ls.push_back({gens[static_cast<std::size_t>(std::abs(s) - 1)], s > 0 ? 1 : -1});
  return ringgrp::Word(std::move(ls));
}

// ---------------------------------------------------------------------------
// Endomorphisms of F_n as lists of generator images.

struct FreeEndo {
  std::vector<Symbols> images;

  static FreeEndo identity(int n) {
    FreeEndo f;
    for (int i = 1; i <= n; ++i) f.images.push_back({i});
    return f;
  }

  Symbols apply(const Symbols& w) const {
    Symbols out;
    for (int s : w) {
      const Symbols& img = images[static_cast<std::size_t>(std::abs(s) - 1)];
      out = concat(out, s > 0 ? img : inverse(img));
    }
    return free_reduce(out);
  }

  // (*this) ∘ inner
  FreeEndo after(const FreeEndo& inner) const {
    FreeEndo f;
    for (const auto& img : inner.images) f.images.push_back(apply(img));
    return f;
  }

  bool operator==(const FreeEndo&) const = default;
};

// sigma_i, rho_i, tau_i on x_1..x_n (1-based i), written out directly.
inline FreeEndo sigma(int i, int n, bool inverse_map = false) {
  FreeEndo f = FreeEndo::identity(n);
  int a = i, b = i + 1;
  if (!inverse_map) {
    f.images[a - 1] = {b};
    f.images[b - 1] = {-b, a, b};
  } else {
    f.images[a - 1] = {a, b, -a};
    f.images[b - 1] = {a};
  }
  return f;
}

inline FreeEndo rho(int i, int n) {
  FreeEndo f = FreeEndo::identity(n);
  std::swap(f.images[i - 1], f.images[i]);
  return f;
}

inline FreeEndo tau(int i, int n) {
  FreeEndo f = FreeEndo::identity(n);
  f.images[i - 1] = {-i};
  return f;
}

// ---------------------------------------------------------------------------
// Unit quaternions with integer components, enough for {±1, ±i, ±j, ±k}.

struct IQuat {
  int w = 1, x = 0, y = 0, z = 0;
  IQuat operator*(const IQuat& q) const {
    return {w * q.w - x * q.x - y * q.y - z * q.z, w * q.x + x * q.w + y * q.z - z * q.y,
            w * q.y - x * q.z + y * q.w + z * q.x, w * q.z + x * q.y - y * q.x + z * q.w};
  }
  IQuat conj() const { return {w, -x, -y, -z}; }
  bool operator==(const IQuat&) const = default;
  auto operator<=>(const IQuat&) const = default;
};

inline const IQuat kI{0, 1, 0, 0};
inline const IQuat kJ{0, 0, 1, 0};

template <class T, class Mul>
std::vector<T> closure(const std::vector<T>& gens, const T& one, Mul mul) {
  std::vector<T> elems{one};
  for (std::size_t k = 0; k < elems.size(); ++k)
    for (const auto& g : gens) {
      T h = mul(elems[k], g);
      if (std::find(elems.begin(), elems.end(), h) == elems.end()) elems.push_back(h);
    }
  return elems;
}

template <class T, class Mul>
std::size_t element_order(const T& g, const T& one, Mul mul) {
  T p = g;
  std::size_t k = 1;
  while (!(p == one)) {
    p = mul(p, g);
    ++k;
  }
  return k;
}

// ---------------------------------------------------------------------------
// Abelian invariants by determinantal divisors: d_k = gcd of all k×k minors.

using ringgrp::Integer;

inline Integer det_exact(std::vector<std::vector<Integer>> a) {
  const std::size_t n = a.size();
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

inline void combinations(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                         std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    combinations(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  combinations(n, k, 0, cur, out);
  return out;
}

inline ringgrp::AbelianInvariants determinantal_invariants(const ringgrp::IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    Integer g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<Integer>> minor(k, std::vector<Integer>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) minor[i][j] = m(rs[i], cs[j]);
        g = boost::multiprecision::gcd(g, abs(det_exact(minor)));
        if (g == 1) break;
      }
    if (g == 0) break;
    d.push_back(g);
  }
  ringgrp::AbelianInvariants inv;
  const std::size_t rank = d.size() - 1;
  inv.free_rank = cols - rank;
  for (std::size_t k = 1; k <= rank; ++k) {
    Integer f = d[k] / d[k - 1];
    if (f != 1) inv.torsion.push_back(f);
  }
  return inv;
}

// ---------------------------------------------------------------------------
// Word problem in A = Z^2 * Z = <a, b, c | [a, b]> via the free-product normal
// form: alternating blocks (p, q) ∈ Z^2 for a^p b^q and c^k.

struct FreeProductA {
  // kind 0: (p, q) block; kind 1: c^k block
  std::vector<std::pair<int, std::array<long, 2>>> blocks;
  bool operator==(const FreeProductA&) const = default;
};

inline FreeProductA reduce_in_A(const ringgrp::Word& w) {
  FreeProductA out;
  for (const auto& l : w.letters()) {
    const std::string& n = l.gen.name();
    long e = l.exp.convert_to<long>();
    int kind = n == "c" ? 1 : 0;
    std::array<long, 2> v{0, 0};
    if (n == "a") v[0] = e;
    if (n == "b") v[1] = e;
    if (n == "c") v[0] = e;
    if (!out.blocks.empty() && out.blocks.back().first == kind) {
      out.blocks.back().second[0] += v[0];
      out.blocks.back().second[1] += v[1];
    } else {
      out.blocks.push_back({kind, v});
    }
    while (!out.blocks.empty() && out.blocks.back().second == std::array<long, 2>{0, 0}) {
      out.blocks.pop_back();
      // removing an empty block may make two blocks of the same kind adjacent
      if (out.blocks.size() >= 2 && out.blocks[out.blocks.size() - 2].first == out.blocks.back().first) {
        auto last = out.blocks.back();
        out.blocks.pop_back();
        out.blocks.back().second[0] += last.second[0];
        out.blocks.back().second[1] += last.second[1];
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shuffle closure: every word reachable from w by swapping adjacent letters on
// commuting generators and cancelling adjacent inverse pairs.

inline std::set<Symbols> shuffle_closure(const Symbols& w, const std::vector<std::pair<int, int>>& commuting) {
  auto commute = [&](int s, int t) {
    int a = std::abs(s), b = std::abs(t);
    return std::find(commuting.begin(), commuting.end(), std::pair{std::min(a, b), std::max(a, b)}) !=
           commuting.end();
  };
  std::set<Symbols> seen{w};
  std::queue<Symbols> todo;
  todo.push(w);
  while (!todo.empty()) {
    Symbols cur = todo.front();
    todo.pop();
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      Symbols next;
      if (cur[i] == -cur[i + 1]) {
        next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i), next.begin() + static_cast<std::ptrdiff_t>(i) + 2);
      } else if (std::abs(cur[i]) != std::abs(cur[i + 1]) && commute(cur[i], cur[i + 1])) {
        next = cur;
        std::swap(next[i], next[i + 1]);
      } else {
        continue;
      }
      if (seen.insert(next).second) todo.push(next);
    }
  }
  return seen;
}

// ---------------------------------------------------------------------------
// Geometry

inline double point_circle_distance(const ringgrp::Vec3& p, const ringgrp::Ring& r) {
  ringgrp::Vec3 n = r.normal.normalized();
  ringgrp::Vec3 d = p - r.center;
  double h = d.dot(n);
  double rho = (d - h * n).norm();
  return std::sqrt(h * h + (rho - r.radius) * (rho - r.radius));
}

inline double dense_ring_distance(const ringgrp::Ring& a, const ringgrp::Ring& b, int samples) {
  double best = 1e300;
  for (int k = 0; k < samples; ++k) {
    double t = 2 * M_PI * k / samples;
    best = std::min(best, point_circle_distance(a.point(t), b));
  }
  return best;
}

}  // namespace oracle
