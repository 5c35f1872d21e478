#include "matchlab/hypergraph.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>

#include "matchlab/errors.hpp"

namespace matchlab {

namespace {

std::vector<int> set_vertices(VertexSet s) { return s.vertices(); }

// Uniform draw from [0, bound) by rejection; the sequence is a pure
// function of the engine state.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t threshold = (~bound + 1) % bound;  // 2^64 mod bound
  for (;;) {
    const std::uint64_t draw = rng();
    if (draw >= threshold) return draw % bound;
  }
}

}  // namespace

std::vector<int> VertexSet::vertices() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  std::uint64_t b = bits;
  while (b != 0) {
    out.push_back(std::countr_zero(b));
    b &= b - 1;
  }
  return out;
}

VertexSet VertexSet::of(std::initializer_list<int> vertices) {
  VertexSet s;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxVertices) {
      throw std::invalid_argument("vertex label out of [0, 64)");
    }
    s = s.with(v);
  }
  return s;
}

Hypergraph::Hypergraph(int n, int k) : n_(n), k_(k) {
  if (k < 2 || k > kMaxVertices) {
    throw std::invalid_argument("uniformity k must be in [2, 64]");
  }
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("vertex count n must be in [0, 64]");
  }
  rank_count_ = (k <= n) ? binom_u64(n, k) : 0;
  if (rank_count_ > kMaxEdgeRanks) {
    throw SizeCapError("C(n,k) exceeds the storage cap of 10^7");
  }
  words_.assign((rank_count_ + 63) / 64, 0);
}

Hypergraph Hypergraph::complete(int n, int k) {
  Hypergraph h(n, k);
  for (std::uint64_t w = 0; w < h.words_.size(); ++w) h.words_[w] = ~0ull;
  const int tail = static_cast<int>(h.rank_count_ % 64);
  if (!h.words_.empty() && tail != 0) {
    h.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return h;
}

Hypergraph Hypergraph::random(int n, int k, const Rational& edge_probability,
                              std::uint64_t seed) {
  if (edge_probability < 0 || edge_probability > 1) {
    throw std::invalid_argument("edge probability outside [0, 1]");
  }
  const BigInt num_big = numerator(edge_probability);
  const BigInt den_big = denominator(edge_probability);
  if (den_big >= (BigInt(1) << 63)) {
    throw std::invalid_argument("edge probability denominator too large");
  }
  const auto num = num_big.convert_to<std::uint64_t>();
  const auto den = den_big.convert_to<std::uint64_t>();
  Hypergraph h(n, k);
  std::mt19937_64 rng(seed);
  for (std::uint64_t rank = 0; rank < h.rank_count_; ++rank) {
    if (uniform_below(rng, den) < num) h.insert_rank(rank);
  }
  return h;
}

std::uint64_t Hypergraph::edge_count() const {
  std::uint64_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

bool Hypergraph::contains_rank(std::uint64_t rank) const {
  if (rank >= rank_count_) throw std::out_of_range("edge rank out of range");
  return (words_[rank >> 6] >> (rank & 63)) & 1u;
}

bool Hypergraph::contains(VertexSet edge) const {
  if (edge.size() != k_ || !VertexSet::full(n_).contains_all(edge)) {
    throw std::invalid_argument("not a k-subset of the vertex set");
  }
  return contains_rank(rank_colex(edge, k_));
}

void Hypergraph::insert(VertexSet edge) {
  if (edge.size() != k_ || !VertexSet::full(n_).contains_all(edge)) {
    throw std::invalid_argument("not a k-subset of the vertex set");
  }
  insert_rank(rank_colex(edge, k_));
}

void Hypergraph::insert_rank(std::uint64_t rank) {
  if (rank >= rank_count_) throw std::out_of_range("edge rank out of range");
  words_[rank >> 6] |= std::uint64_t{1} << (rank & 63);
}

void Hypergraph::erase_rank(std::uint64_t rank) {
  if (rank >= rank_count_) throw std::out_of_range("edge rank out of range");
  words_[rank >> 6] &= ~(std::uint64_t{1} << (rank & 63));
}

void Hypergraph::toggle_rank(std::uint64_t rank) {
  if (rank >= rank_count_) throw std::out_of_range("edge rank out of range");
  words_[rank >> 6] ^= std::uint64_t{1} << (rank & 63);
}

std::vector<std::uint64_t> Hypergraph::edge_ranks() const {
  std::vector<std::uint64_t> ranks;
  ranks.reserve(edge_count());
  for (std::uint64_t w = 0; w < words_.size(); ++w) {
    std::uint64_t word = words_[w];
    while (word != 0) {
      ranks.push_back((w << 6) + std::countr_zero(word));
      word &= word - 1;
    }
  }
  return ranks;
}

std::vector<VertexSet> Hypergraph::edges() const {
  std::vector<VertexSet> out;
  out.reserve(edge_count());
  for (std::uint64_t rank : edge_ranks()) {
    out.push_back(unrank_colex(rank, k_, n_));
  }
  return out;
}

namespace {

// Counts edges containing s by whichever route examines fewer candidates:
// scanning the edge list or enumerating the (k - |s|)-extensions of s.
std::uint64_t count_superset_edges(const Hypergraph& h,
                                   const std::vector<VertexSet>& edge_masks,
                                   VertexSet s) {
  const int free_slots = h.k() - s.size();
  const std::uint64_t extensions =
      binom_u64(h.n() - s.size(), free_slots);
  std::uint64_t count = 0;
  if (edge_masks.size() <= extensions) {
    for (VertexSet e : edge_masks) {
      if (e.contains_all(s)) ++count;
    }
    return count;
  }
  const std::vector<int> free =
      set_vertices(VertexSet::full(h.n()) - s);
  for_each_subset(static_cast<int>(free.size()), free_slots,
                  [&](VertexSet pick, std::uint64_t) {
                    VertexSet e = s;
                    for (int i : pick.vertices()) e = e.with(free[i]);
                    if (h.contains_rank(rank_colex(e, h.k()))) ++count;
                  });
  return count;
}

}  // namespace

BigInt degree_of_set(const Hypergraph& h, VertexSet s) {
  if (s.size() > h.k()) {
    throw std::invalid_argument("degree_of_set: |S| exceeds k");
  }
  if (!VertexSet::full(h.n()).contains_all(s)) {
    throw std::invalid_argument("degree_of_set: S not within vertex set");
  }
  return BigInt(count_superset_edges(h, h.edges(), s));
}

MinDegree min_ell_degree(const Hypergraph& h, int ell) {
  if (ell < 0 || ell >= h.k()) {
    throw std::invalid_argument("min_ell_degree: ell outside [0, k-1]");
  }
  if (ell == 0) return {BigInt(h.edge_count()), VertexSet{}};
  const std::vector<VertexSet> edge_masks = h.edges();
  bool have = false;
  std::uint64_t best = 0;
  VertexSet witness;
  for_each_subset(h.n(), ell, [&](VertexSet s, std::uint64_t) {
    const std::uint64_t d = count_superset_edges(h, edge_masks, s);
    if (!have || d < best) {
      have = true;
      best = d;
      witness = s;
    }
  });
  if (!have) throw std::invalid_argument("min_ell_degree: ell exceeds n");
  return {BigInt(best), witness};
}

std::vector<VertexSet> neighborhood(const Hypergraph& h, int v) {
  if (v < 0 || v >= h.n()) {
    throw std::invalid_argument("neighborhood: vertex out of range");
  }
  std::vector<VertexSet> out;
  for (VertexSet e : h.edges()) {
    if (e.contains(v)) out.push_back(e.without(v));
  }
  std::sort(out.begin(), out.end(),
            [](VertexSet a, VertexSet b) { return a.bits < b.bits; });
  return out;
}

BigInt non_neighbor_count(const Hypergraph& h, int v) {
  return binom(h.n() - 1, h.k() - 1) -
         degree_of_set(h, VertexSet{}.with(v));
}

Hypergraph complement(const Hypergraph& h) {
  Hypergraph out(h.n(), h.k());
  for (std::size_t w = 0; w < h.words_.size(); ++w) {
    out.words_[w] = ~h.words_[w];
  }
  const int tail = static_cast<int>(out.rank_count_ % 64);
  if (!out.words_.empty() && tail != 0) {
    out.words_.back() &= (std::uint64_t{1} << tail) - 1;
  }
  return out;
}

Hypergraph induced(const Hypergraph& h, VertexSet x) {
  if (!VertexSet::full(h.n()).contains_all(x)) {
    throw std::invalid_argument("induced: X not within vertex set");
  }
  Hypergraph out(x.size(), h.k());
  if (x.size() < h.k()) return out;
  const std::vector<int> labels = x.vertices();
  for_each_subset(x.size(), h.k(), [&](VertexSet pick, std::uint64_t rank) {
    VertexSet e;
    for (int i : pick.vertices()) e = e.with(labels[i]);
    if (h.contains_rank(rank_colex(e, h.k()))) out.insert_rank(rank);
  });
  return out;
}

BigInt symmetric_difference(const Hypergraph& a, const Hypergraph& b) {
  if (a.n() != b.n() || a.k() != b.k()) {
    throw std::invalid_argument("symmetric_difference: mismatched n or k");
  }
  std::uint64_t total = 0;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    total += std::popcount(a.words_[w] ^ b.words_[w]);
  }
  return BigInt(total);
}

}  // namespace matchlab
