// Copyright 2026 The cyclepack Authors
// SPDX-License-Identifier: Apache-2.0

#include "cyclepack/exact.hpp"

#include <atomic>
#include <bit>
#include <cstdint>
#include <thread>

namespace cyclepack {

namespace {

using Int128 = __int128;

struct Overflow {};

inline void add_into(std::int64_t& a, std::int64_t b) {
  if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline void add_into(Int128& a, Int128 b) {
  if (__builtin_add_overflow(a, b, &a)) throw Overflow{};
}
inline void add_into(BigInt& a, const BigInt& b) { a += b; }

inline std::int64_t times(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline Int128 times(Int128 a, Int128 b) {
  Int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
  return r;
}
inline BigInt times(const BigInt& a, const BigInt& b) { return a * b; }

BigInt to_big(std::int64_t x) { return BigInt(x); }
BigInt to_big(const BigInt& x) { return x; }
BigInt to_big(Int128 x) {
  bool neg = x < 0;
  unsigned __int128 m = neg ? -static_cast<unsigned __int128>(x)
                            : static_cast<unsigned __int128>(x);
  BigInt r = BigInt(static_cast<std::uint64_t>(m >> 64));
  r <<= 64;
  r += BigInt(static_cast<std::uint64_t>(m));
  return neg ? BigInt(-r) : r;
}

struct Compact {
  int n = 0;
  std::vector<VertexId> ids;
  std::vector<std::uint64_t> nbr;
};

Compact compact(const MultiGraph& gs) {
  if (!gs.is_simple()) {
    throw std::invalid_argument("walk counting needs a simple graph");
  }
  Compact c;
  c.ids = gs.vertices();
  c.n = static_cast<int>(c.ids.size());
  if (c.n > 62) {
    throw std::invalid_argument("inclusion-exclusion limited to 62 vertices");
  }
  std::vector<int> local(static_cast<std::size_t>(gs.capacity()), -1);
  for (int i = 0; i < c.n; ++i) local[c.ids[i]] = i;
  c.nbr.assign(c.n, 0);
  for (int i = 0; i < c.n; ++i) {
    for (auto [w, m] : gs.adjacency(c.ids[i])) {
      c.nbr[i] |= std::uint64_t{1} << local[w];
    }
  }
  return c;
}

// Per-subset walk-count tables. q(i, ell) after run() holds the number of
// i-tuples of closed walks (length >= 3) with ell vertex occurrences in
// the subgraph induced by `active`.
template <class Int>
class WalkTables {
 public:
  WalkTables(const Compact& c, int kmax) : c_(c), kmax_(kmax) {
    q_.assign(static_cast<std::size_t>(kmax + 1) * (c.n + 1), Int(0));
    splice_.assign(q_.size(), Int(0));
  }

  const Int& q(int i, int ell) const { return q_[i * (c_.n + 1) + ell]; }

  void run(std::uint64_t active) {
    std::fill(q_.begin(), q_.end(), Int(0));
    std::fill(splice_.begin(), splice_.end(), Int(0));
    act_.clear();
    std::vector<int> local(c_.n, -1);
    for (int v = 0; v < c_.n; ++v) {
      if ((active >> v) & 1u) {
        local[v] = static_cast<int>(act_.size());
        act_.push_back(v);
      }
    }
    na_ = static_cast<int>(act_.size());
    if (na_ == 0) return;
    std::vector<std::uint64_t> lm(na_, 0);
    nb_.assign(na_, {});
    for (int a = 0; a < na_; ++a) {
      std::uint64_t m = c_.nbr[act_[a]] & active;
      while (m) {
        int w = std::countr_zero(m);
        m &= m - 1;
        nb_[a].push_back(local[w]);
        lm[a] |= std::uint64_t{1} << local[w];
      }
    }
    // common[w * na + p]: number of vertices adjacent to both w and p
    common_.assign(static_cast<std::size_t>(na_) * na_, 0);
    std::int64_t degree_sum = 0;
    for (int w = 0; w < na_; ++w) {
      for (int p = 0; p < na_; ++p) {
        common_[w * na_ + p] = std::popcount(lm[w] & lm[p]);
      }
      degree_sum += common_[w * na_ + w];
    }
    const Int deg_total(degree_sum);
    const std::size_t block = static_cast<std::size_t>(na_) * na_;
    cur_.assign(block * kmax_, Int(0));
    nxt_.assign(block * kmax_, Int(0));
    for (int v = 0; v < na_; ++v) cur_[v * na_ + v] = Int(1);

    const int n = c_.n;
    for (int j = 1; j <= n - 1; ++j) {
      if (j >= 2) {
        for (int i = 1; i <= kmax_; ++i) {
          Int* dst = &nxt_[(i - 1) * block];
          const Int* src = &cur_[(i - 1) * block];
          if (j < 3 * (i - 1) + 1) continue;  // no room for i walks yet
          for (int v = 0; v < na_; ++v) {
            const Int* row = src + v * na_;
            Int* out = dst + v * na_;
            for (int u = 0; u < na_; ++u) {
              Int acc(0);
              for (int w : nb_[u]) add_into(acc, row[w]);
              out[u] = acc;
            }
          }
          if (i >= 2 && j >= 3) {
            const Int& s = splice_at(i - 1, j - 2);
            for (int v = 0; v < na_; ++v) add_into(dst[v * na_ + v], s);
          }
        }
        std::swap(cur_, nxt_);
      }
      for (int i = 1; i <= kmax_; ++i) {
        if (j < 3 * (i - 1) + 1) continue;
        const Int* m = &cur_[(i - 1) * block];
        Int s(0);
        for (int p = 0; p < na_; ++p) {
          for (int w = 0; w < na_; ++w) {
            int cw = common_[w * na_ + p];
            if (cw) add_into(s, times(m[p * na_ + w], Int(cw)));
          }
        }
        // walks opened at this step and closed at once are not closed walks
        Int start(0);
        if (i == 1) {
          start = Int(j == 1 ? 1 : 0);
        } else if (j >= 3) {
          start = splice_at(i - 1, j - 2);
        }
        add_into(s, Int(-times(start, deg_total)));
        splice_at(i, j) = s;
        q_[i * (n + 1) + j + 1] = s;
      }
    }
  }

 private:
  Int& splice_at(int i, int j) { return splice_[i * (c_.n + 1) + j]; }

  const Compact& c_;
  int kmax_;
  int na_ = 0;
  std::vector<int> act_;
  std::vector<std::vector<int>> nb_;
  std::vector<int> common_;
  std::vector<Int> cur_, nxt_, q_, splice_;
};

std::vector<std::vector<std::int64_t>> binomials(int n) {
  std::vector<std::vector<std::int64_t>> c(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (int a = 0; a <= n; ++a) {
    c[a][0] = 1;
    for (int b = 1; b <= a; ++b) c[a][b] = c[a - 1][b - 1] + c[a - 1][b];
  }
  return c;
}

template <class Int>
std::vector<BigInt> signed_sums(const Compact& c, int kmax, int threads) {
  const int n = c.n;
  const auto binom = binomials(n);
  const std::uint64_t full = n == 64 ? ~0ull : ((std::uint64_t{1} << n) - 1);
  const std::uint64_t count = full + 1;
  threads = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::uint64_t>(count, 64))));

  std::vector<std::vector<Int>> partial(threads, std::vector<Int>(kmax + 1, Int(0)));
  std::atomic<bool> overflow{false};
  auto work = [&](int t) {
    WalkTables<Int> tables(c, kmax);
    std::uint64_t lo = count * t / threads, hi = count * (t + 1) / threads;
    try {
      for (std::uint64_t f = lo; f < hi && !overflow.load(); ++f) {
        int removed = std::popcount(f);
        tables.run(full & ~f);
        for (int k = 1; k <= kmax; ++k) {
          Int term(0);
          for (int ell = 2 * k; ell <= n; ++ell) {
            if (n - ell > n - removed) continue;
            std::int64_t b = binom[n - removed][n - ell];
            if (b == 0) continue;
            add_into(term, times(tables.q(k, ell), Int(b)));
          }
          add_into(partial[t][k], (removed % 2) ? Int(-term) : term);
        }
      }
    } catch (const Overflow&) {
      overflow = true;
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  if (overflow) throw Overflow{};
  std::vector<BigInt> out(kmax + 1, BigInt(0));
  for (int t = 0; t < threads; ++t) {
    for (int k = 1; k <= kmax; ++k) out[k] += to_big(partial[t][k]);
  }
  return out;
}

int thread_count(const IeOptions& opt) {
  if (opt.threads > 0) return opt.threads;
  unsigned h = std::thread::hardware_concurrency();
  return h == 0 ? 1 : static_cast<int>(h);
}

bool decide_simple(const MultiGraph& gs, int k, const IeOptions& opt) {
  return ie_signed_sums(gs, k, opt)[k] > 0;
}

}  // namespace

Simplified simplify_for_dp(const MultiGraph& g) {
  TracedGraph tg(g);
  for (const EdgeEntry& e : g.edges()) {
    int limit = e.u == e.v ? 1 : 2;
    if (e.multiplicity > limit) tg.clamp(e.u, e.v, limit);
  }
  for (const EdgeEntry& e : tg.graph.edges()) {
    if (e.u == e.v) {
      tg.subdivide(e.u, e.u, 2);
    } else if (e.multiplicity == 2) {
      tg.subdivide(e.u, e.v, 1);
    }
  }
  return {std::move(tg.graph), std::move(tg.trace)};
}

BigInt count_Q(const MultiGraph& gs, const VertexSet& f, int k, int ell) {
  Compact c = compact(gs);
  if (k < 1 || ell < 2 * k || ell > c.n) {
    throw std::invalid_argument("count_Q: need 2k <= ell <= |V|");
  }
  std::uint64_t active = 0;
  for (int i = 0; i < c.n; ++i) {
    if (!f.count(c.ids[i])) active |= std::uint64_t{1} << i;
  }
  WalkTables<BigInt> tables(c, k);
  tables.run(active);
  return tables.q(k, ell);
}

std::vector<BigInt> ie_signed_sums(const MultiGraph& gs, int kmax,
                                   const IeOptions& opt) {
  if (kmax < 1) throw std::invalid_argument("k must be >= 1");
  Compact c = compact(gs);
  int threads = thread_count(opt);
  try {
    return signed_sums<std::int64_t>(c, kmax, threads);
  } catch (const Overflow&) {
  }
  try {
    return signed_sums<Int128>(c, kmax, threads);
  } catch (const Overflow&) {
  }
  return signed_sums<BigInt>(c, kmax, threads);
}

BigInt ie_signed_sum(const MultiGraph& g, int k, const IeOptions& opt) {
  return ie_signed_sums(simplify_for_dp(g).graph, k, opt)[k];
}

bool ie_decide(const MultiGraph& g, int k, const IeOptions& opt) {
  return ie_signed_sum(g, k, opt) > 0;
}

std::optional<Packing> ie_search(const MultiGraph& g, int k,
                                 const IeOptions& opt) {
  if (k < 1) throw std::invalid_argument("k must be >= 1");
  Simplified s = simplify_for_dp(g);
  MultiGraph h = s.graph;
  if (!decide_simple(h, k, opt)) return std::nullopt;

  for (VertexId v : h.vertices()) {
    MultiGraph t = h;
    t.remove_vertex(v);
    if (decide_simple(t, k, opt)) h = std::move(t);
  }
  for (const EdgeEntry& e : h.edges()) {
    MultiGraph t = h;
    t.remove_edge(e.u, e.v);
    for (VertexId x : {e.u, e.v}) {
      if (t.degree(x) == 0) t.remove_vertex(x);
    }
    if (decide_simple(t, k, opt)) h = std::move(t);
  }

  Packing p;
  std::set<VertexId> seen;
  for (VertexId v : h.vertices()) {
    if (h.degree(v) == 0 || seen.count(v)) continue;
    Cycle c;
    VertexId prev = -1, cur = v;
    while (!seen.count(cur)) {
      if (h.degree(cur) != 2) {
        throw std::logic_error("ie_search: minimal graph is not a union of cycles");
      }
      seen.insert(cur);
      c.push_back(cur);
      VertexId next = -1;
      for (auto [w, m] : h.adjacency(cur)) {
        if (w != prev) {
          next = w;
          break;
        }
      }
      prev = cur;
      cur = next;
    }
    p.push_back(c);
  }
  Packing lifted = s.trace.lift(p);
  if (!verify_packing(g, lifted, k)) {
    throw std::logic_error("ie_search: lifted packing failed verification");
  }
  return lifted;
}

}  // namespace cyclepack
