#include "tnncells/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace tnncells {
namespace {

std::vector<int> make_cartan(DiagramType type, int rank) {
  auto bonded = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    if (type == DiagramType::A) return j == i + 1;
    // D_n in the usual numbering: a chain 1-2-...-(n-2) with both n-1 and n
    // attached to n-2; for D_4 the branch node is 2.
    if (j <= rank - 2) return j == i + 1;
    return i == rank - 2;
  };
  std::vector<int> cartan(std::size_t(rank) * rank, 0);
  for (int i = 1; i <= rank; ++i)
    for (int j = 1; j <= rank; ++j) {
      int& a = cartan[std::size_t(i - 1) * rank + (j - 1)];
      if (i == j)
        a = 2;
      else
        a = bonded(i, j) ? -1 : 0;
    }
  return cartan;
}

std::size_t expected_order(DiagramType type, int rank) {
  if (type == DiagramType::A) {
    std::size_t f = 1;
    for (int k = 2; k <= rank + 1; ++k) f *= std::size_t(k);
    return f;
  }
  // D_n: 2^(n-1) * n!
  std::size_t f = 1;
  for (int k = 2; k <= rank; ++k) f *= std::size_t(k);
  return (std::size_t(1) << (rank - 1)) * f;
}

std::size_t expected_positive_roots(DiagramType type, int rank) {
  if (type == DiagramType::A) return std::size_t(rank) * (rank + 1) / 2;
  return std::size_t(rank) * (rank - 1);
}

}  // namespace

std::string diagram_name(DiagramType type, int rank) {
  return std::string(1, char(type)) + std::to_string(rank);
}

void require_same_group(WeylElement a, WeylElement b) {
  if (&a.group() != &b.group())
    throw validation_error("elements belong to different group contexts");
}

std::shared_ptr<const WeylGroup> WeylGroup::make(DiagramType type, int rank) {
  switch (type) {
    case DiagramType::A:
      if (rank < 1 || rank > 5)
        throw validation_error("type A supports ranks 1 through 5");
      break;
    case DiagramType::D:
      if (rank != 4) throw validation_error("type D supports rank 4 only");
      break;
    case DiagramType::E:
      throw validation_error("type E exceeds the supported size cap");
    default:
      throw validation_error("unknown diagram type");
  }
  auto g = std::shared_ptr<WeylGroup>(new WeylGroup());
  g->build(type, rank);
  return g;
}

void WeylGroup::build(DiagramType type, int rank) {
  type_ = type;
  rank_ = rank;
  cartan_ = make_cartan(type, rank);
  const std::size_t n = std::size_t(rank);

  // Reflection representation on simple-root coordinates: s_i is the identity
  // except in row i, where (s_i)_{ij} = delta_ij - cartan_ij.
  std::vector<std::vector<int>> gen(n);
  for (std::size_t i = 0; i < n; ++i) {
    gen[i].assign(n * n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        gen[i][r * n + c] = (r == c ? 1 : 0) - (r == i ? cartan_[r * n + c] : 0);
  }

  auto mat_mul = [n](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(n * n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        int ark = a[r * n + k];
        if (ark == 0) continue;
        for (std::size_t c = 0; c < n; ++c) out[r * n + c] += ark * b[k * n + c];
      }
    return out;
  };
  auto mat_apply = [n](const std::vector<int>& m, const std::vector<int>& v) {
    std::vector<int> out(n, 0);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) out[r] += m[r * n + c] * v[c];
    return out;
  };

  // Positive roots: closure of the simple roots under the simple reflections,
  // keeping vectors with nonnegative coordinates.
  {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<int> e(n, 0);
      e[i] = 1;
      seen.insert(e);
      queue.push_back(e);
    }
    while (!queue.empty()) {
      auto r = queue.back();
      queue.pop_back();
      for (std::size_t i = 0; i < n; ++i) {
        auto img = mat_apply(gen[i], r);
        bool positive = std::all_of(img.begin(), img.end(), [](int c) { return c >= 0; });
        if (positive && seen.insert(img).second) queue.push_back(img);
      }
    }
    pos_roots_.assign(seen.begin(), seen.end());
    std::sort(pos_roots_.begin(), pos_roots_.end(), [](const auto& a, const auto& b) {
      int ha = std::accumulate(a.begin(), a.end(), 0);
      int hb = std::accumulate(b.begin(), b.end(), 0);
      return std::tie(ha, a) < std::tie(hb, b);
    });
    if (pos_roots_.size() != expected_positive_roots(type, rank))
      throw verification_error("positive root closure has unexpected size");
  }

  // Enumerate the group by right multiplication.
  std::map<std::vector<int>, std::uint32_t> index_of;
  std::vector<std::vector<int>> mats;
  {
    std::vector<int> id(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
    index_of.emplace(id, 0);
    mats.push_back(id);
    for (std::size_t head = 0; head < mats.size(); ++head) {
      auto m = mats[head];  // copy: mats may reallocate
      for (std::size_t i = 0; i < n; ++i) {
        auto prod = mat_mul(m, gen[i]);
        if (index_of.emplace(prod, std::uint32_t(mats.size())).second)
          mats.push_back(std::move(prod));
      }
    }
  }
  const std::size_t count = mats.size();
  if (count != expected_order(type, rank))
    throw verification_error("group enumeration has unexpected size");

  auto length_of = [&](const std::vector<int>& m) {
    int len = 0;
    for (const auto& r : pos_roots_) {
      auto img = mat_apply(m, r);
      for (int c : img) {
        if (c < 0) {
          ++len;
          break;
        }
        if (c > 0) break;
      }
    }
    return len;
  };

  std::vector<int> plen(count);
  for (std::size_t x = 0; x < count; ++x) plen[x] = length_of(mats[x]);

  std::vector<std::uint32_t> prmul(count * n), plmul(count * n);
  for (std::size_t x = 0; x < count; ++x)
    for (std::size_t i = 0; i < n; ++i) {
      prmul[x * n + i] = index_of.at(mat_mul(mats[x], gen[i]));
      plmul[x * n + i] = index_of.at(mat_mul(gen[i], mats[x]));
    }

  // Canonical word: repeatedly strip the smallest left descent.  This yields
  // the lexicographically least reduced word.
  std::vector<std::vector<int>> pword(count);
  for (std::size_t x = 0; x < count; ++x) {
    std::vector<int> w;
    std::uint32_t cur = std::uint32_t(x);
    while (plen[cur] > 0) {
      for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t down = plmul[cur * n + i];
        if (plen[down] < plen[cur]) {
          w.push_back(int(i) + 1);
          cur = down;
          break;
        }
      }
    }
    pword[x] = std::move(w);
  }

  // Final element order: by (length, canonical word).
  std::vector<std::uint32_t> by_order(count);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::sort(by_order.begin(), by_order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::tie(plen[a], pword[a]) < std::tie(plen[b], pword[b]);
  });
  std::vector<std::uint32_t> rank_of(count);
  for (std::size_t k = 0; k < count; ++k) rank_of[by_order[k]] = std::uint32_t(k);

  size_ = count;
  words_.resize(count);
  lengths_.resize(count);
  mats_.resize(count);
  rmul_.resize(count * n);
  lmul_.resize(count * n);
  for (std::size_t k = 0; k < count; ++k) {
    std::uint32_t p = by_order[k];
    words_[k] = std::move(pword[p]);
    lengths_[k] = plen[p];
    mats_[k] = std::move(mats[p]);
    for (std::size_t i = 0; i < n; ++i) {
      rmul_[k * n + i] = rank_of[prmul[p * n + i]];
      lmul_[k * n + i] = rank_of[plmul[p * n + i]];
    }
  }

  ldesc_.assign(count, 0);
  rdesc_.assign(count, 0);
  supp_.assign(count, 0);
  inv_.assign(count, 0);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      if (lengths_[lmul_[x * n + i]] < lengths_[x]) ldesc_[x] |= 1u << i;
      if (lengths_[rmul_[x * n + i]] < lengths_[x]) rdesc_[x] |= 1u << i;
    }
    std::uint32_t inv = 0;
    for (auto it = words_[x].rbegin(); it != words_[x].rend(); ++it)
      inv = rmul_[inv * n + (*it - 1)];
    inv_[x] = inv;
    for (int letter : words_[x]) supp_[x] |= 1u << (letter - 1);
  }

  // Bruhat order, one bitset row per element, built in length order via the
  // standard descent recursion.
  bru_stride_ = (count + 63) / 64;
  bruhat_.assign(count * bru_stride_, 0);
  bruhat_[0] |= 1u;  // e <= e
  for (std::size_t w = 1; w < count; ++w) {
    int i = words_[w].front();  // smallest left descent
    std::size_t wp = lmul_[w * n + (i - 1)];
    for (std::size_t v = 0; v < count; ++v) {
      std::size_t sv = lmul_[v * n + (i - 1)];
      std::size_t vp = lengths_[sv] < lengths_[v] ? sv : v;
      if ((bruhat_[wp * bru_stride_ + (vp >> 6)] >> (vp & 63)) & 1u)
        bruhat_[w * bru_stride_ + (v >> 6)] |= std::uint64_t(1) << (v & 63);
    }
  }

  if (lengths_.back() != int(pos_roots_.size()) ||
      std::count(lengths_.begin(), lengths_.end(), lengths_.back()) != 1)
    throw verification_error("longest element sanity check failed");
}

WeylElement WeylGroup::generator(int i) const {
  if (i < 1 || i > rank_) throw validation_error("generator index out of range");
  return WeylElement(this, rmul_[/*identity*/ 0 * rank_ + std::size_t(i) - 1]);
}

WeylElement WeylGroup::element(std::size_t idx) const {
  if (idx >= size_) throw validation_error("element index out of range");
  return WeylElement(this, std::uint32_t(idx));
}

WeylElement WeylGroup::from_word(std::span<const int> word) const {
  std::size_t cur = 0;
  for (int letter : word) {
    if (letter < 1 || letter > rank_)
      throw validation_error("word letter out of range");
    cur = rmul_[cur * rank_ + (letter - 1)];
  }
  return WeylElement(this, std::uint32_t(cur));
}

WeylElement WeylGroup::longest(IndexSet H) const {
  check_subset(H);
  std::size_t cur = 0;
  for (;;) {
    bool moved = false;
    for (int i : H.to_vector()) {
      std::size_t up = rmul_[cur * rank_ + (i - 1)];
      if (lengths_[up] > lengths_[cur]) {
        cur = up;
        moved = true;
        break;
      }
    }
    if (!moved) return WeylElement(this, std::uint32_t(cur));
  }
}

std::size_t WeylGroup::mul(std::size_t a, std::size_t b) const {
  std::size_t cur = a;
  for (int letter : words_[b]) cur = rmul_[cur * rank_ + (letter - 1)];
  return cur;
}

WeylElement hecke_star(int i, WeylElement w) {
  const WeylGroup& g = w.group();
  if (i < 1 || i > g.rank()) throw validation_error("generator index out of range");
  std::size_t sw = g.left_mul(i, w.index());
  return g.element(g.length(sw) > g.length(w.index()) ? sw : w.index());
}

WeylElement hecke_circ(int i, WeylElement v) {
  const WeylGroup& g = v.group();
  if (i < 1 || i > g.rank()) throw validation_error("generator index out of range");
  std::size_t sv = g.left_mul(i, v.index());
  return g.element(g.length(sv) < g.length(v.index()) ? sv : v.index());
}

WeylElement hecke_star(WeylElement u, WeylElement w) {
  require_same_group(u, w);
  const auto& word = u.word();
  WeylElement cur = w;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = hecke_star(*it, cur);
  return cur;
}

WeylElement hecke_circ(WeylElement u, WeylElement v) {
  require_same_group(u, v);
  const auto& word = u.word();
  WeylElement cur = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) cur = hecke_circ(*it, cur);
  return cur;
}

CosetFactorization coset_factorize(WeylElement w, IndexSet H) {
  const WeylGroup& g = w.group();
  g.check_subset(H);
  std::size_t rep = w.index(), tail = 0;
  for (;;) {
    bool moved = false;
    for (int i : H.to_vector()) {
      std::size_t down = g.right_mul(rep, i);
      if (g.length(down) < g.length(rep)) {
        rep = down;
        tail = g.left_mul(i, tail);
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return CosetFactorization{g.element(rep), g.element(tail)};
}

std::pair<WeylElement, WeylElement> w0_dual(WeylElement v, WeylElement w) {
  if (!bruhat_leq(v, w))
    throw validation_error("w0_dual requires a Bruhat-comparable pair");
  const WeylGroup& g = v.group();
  std::size_t w0 = g.order() - 1;
  return {g.element(g.mul(w.index(), w0)), g.element(g.mul(v.index(), w0))};
}

}  // namespace tnncells
