#include "fcx/heap.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "fcx/errors.hpp"

namespace fcx {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

} // namespace

Heap Heap::of_word(const CoxeterGraph& g, Word w) {
  for (Gen s : w)
    if (s >= g.rank())
      throw InvalidHeap("letter outside the generator set");
  Heap h;
  h.word_ = std::move(w);
  h.rebuild_rows(g);
  return h;
}

void Heap::rebuild_rows(const CoxeterGraph& g) {
  const std::size_t n = word_.size();
  const std::size_t k = stride();
  down_.assign(n * k, 0);
  up_.assign(n * k, 0);

  // Only the nearest related element of each label matters: earlier ones of
  // the same label already lie below it.
  std::vector<std::size_t> nearest(g.rank(), kNone);
  for (std::size_t j = 0; j < n; ++j) {
    std::uint64_t* row = &down_[j * k];
    row[j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t s = 0; s < g.rank(); ++s) {
      const std::size_t i = nearest[s];
      if (i == kNone || !g.related(static_cast<Gen>(s), word_[j]))
        continue;
      const std::uint64_t* src = &down_[i * k];
      for (std::size_t w = 0; w < k; ++w)
        row[w] |= src[w];
    }
    nearest[word_[j]] = j;
  }

  std::fill(nearest.begin(), nearest.end(), kNone);
  for (std::size_t j = n; j-- > 0;) {
    std::uint64_t* row = &up_[j * k];
    row[j / 64] |= std::uint64_t{1} << (j % 64);
    for (std::size_t s = 0; s < g.rank(); ++s) {
      const std::size_t i = nearest[s];
      if (i == kNone || !g.related(static_cast<Gen>(s), word_[j]))
        continue;
      const std::uint64_t* src = &up_[i * k];
      for (std::size_t w = 0; w < k; ++w)
        row[w] |= src[w];
    }
    nearest[word_[j]] = j;
  }
}

Heap Heap::from_covers(const CoxeterGraph& g, const std::vector<Gen>& labels,
                       const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
  const std::size_t n = labels.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<std::size_t> indeg(n, 0);
  for (auto [a, b] : covers) {
    if (a >= n || b >= n || a == b)
      throw InvalidHeap("covering relation refers to a missing element");
    succ[a].push_back(b);
    ++indeg[b];
  }
  // Kahn's algorithm, always taking the smallest ready element.
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indeg[i] == 0)
      ready.insert(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const std::size_t i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(i);
    for (std::size_t j : succ[i])
      if (--indeg[j] == 0)
        ready.insert(j);
  }
  if (order.size() != n)
    throw InvalidHeap("covering relations contain a cycle");

  Word w;
  std::vector<std::size_t> position(n);
  for (std::size_t p = 0; p < n; ++p) {
    w.push_back(labels[order[p]]);
    position[order[p]] = p;
  }
  Heap h = of_word(g, std::move(w));

  std::set<std::pair<std::size_t, std::size_t>> given;
  for (auto [a, b] : covers)
    given.insert({position[a], position[b]});
  const auto actual = h.covers();
  if (std::set<std::pair<std::size_t, std::size_t>>(actual.begin(), actual.end()) != given)
    throw InvalidHeap("poset is not the heap of any word over this graph");
  return h;
}

std::size_t Heap::interval_size(std::size_t a, std::size_t b) const {
  const std::size_t k = stride();
  std::size_t total = 0;
  for (std::size_t w = 0; w < k; ++w)
    total += static_cast<std::size_t>(std::popcount(up_[a * k + w] & down_[b * k + w]));
  return total;
}

std::vector<std::size_t> Heap::interval(std::size_t a, std::size_t b) const {
  std::vector<std::size_t> out;
  for (std::size_t u = a; u <= b && u < size(); ++u)
    if (leq(a, u) && leq(u, b))
      out.push_back(u);
  return out;
}

bool Heap::covers(std::size_t lower, std::size_t upper) const {
  return lower != upper && leq(lower, upper) && interval_size(lower, upper) == 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Heap::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t j = 0; j < size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (covers(i, j))
        out.emplace_back(i, j);
  return out;
}

bool Heap::is_maximal(std::size_t i) const {
  const std::size_t k = stride();
  std::size_t total = 0;
  for (std::size_t w = 0; w < k; ++w)
    total += static_cast<std::size_t>(std::popcount(up_[i * k + w]));
  return total == 1;
}

bool Heap::is_minimal(std::size_t i) const {
  const std::size_t k = stride();
  std::size_t total = 0;
  for (std::size_t w = 0; w < k; ++w)
    total += static_cast<std::size_t>(std::popcount(down_[i * k + w]));
  return total == 1;
}

std::vector<std::size_t> Heap::elements_with(std::span<const Gen> labels) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i)
    if (std::find(labels.begin(), labels.end(), word_[i]) != labels.end())
      out.push_back(i);
  return out;
}

std::size_t Heap::count(Gen s) const {
  return static_cast<std::size_t>(std::count(word_.begin(), word_.end(), s));
}

Heap Heap::appended(const CoxeterGraph& g, Gen s) const {
  Word w = word_;
  w.push_back(s);
  return of_word(g, std::move(w));
}

Heap Heap::restricted(const CoxeterGraph& g, std::span<const std::size_t> elems) const {
  std::vector<std::size_t> sorted(elems.begin(), elems.end());
  std::sort(sorted.begin(), sorted.end());
  Word w;
  for (std::size_t i : sorted)
    w.push_back(word_[i]);
  return of_word(g, std::move(w));
}

Word canonical_word(const Heap& h) {
  // The Cartier-Foata layer of an element is the length of the longest chain
  // ending at it, so peeling minimal elements is the same as sorting by
  // (layer, label).
  const std::size_t n = h.size();
  std::vector<std::size_t> layer(n, 0);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (layer[i] + 1 > layer[j] && h.covers(i, j))
        layer[j] = layer[i] + 1;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (layer[a] != layer[b])
      return layer[a] < layer[b];
    return h.label(a) < h.label(b);
  });
  Word out;
  out.reserve(n);
  for (std::size_t i : idx)
    out.push_back(h.label(i));
  return out;
}

bool is_isomorphic(const Heap& a, const Heap& b) {
  return a.size() == b.size() && canonical_word(a) == canonical_word(b);
}

namespace {

void extend(const Heap& h, std::vector<bool>& used, Word& prefix,
            LinearExtensions& out, std::size_t cap) {
  if (out.truncated)
    return;
  if (prefix.size() == h.size()) {
    if (out.words.size() == cap) {
      out.truncated = true;
      return;
    }
    out.words.push_back(prefix);
    return;
  }
  std::vector<std::size_t> avail;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (used[i])
      continue;
    bool ok = true;
    for (std::size_t j = 0; j < i && ok; ++j)
      if (!used[j] && h.less(j, i))
        ok = false;
    if (ok)
      avail.push_back(i);
  }
  std::sort(avail.begin(), avail.end(),
            [&](std::size_t a, std::size_t b) { return h.label(a) < h.label(b); });
  for (std::size_t i : avail) {
    used[i] = true;
    prefix.push_back(h.label(i));
    extend(h, used, prefix, out, cap);
    prefix.pop_back();
    used[i] = false;
  }
}

} // namespace

LinearExtensions linear_extensions(const Heap& h, std::size_t cap) {
  LinearExtensions out;
  if (cap == 0)
    throw std::invalid_argument("linear_extensions: cap must be positive");
  std::vector<bool> used(h.size(), false);
  Word prefix;
  extend(h, used, prefix, out, cap);
  return out;
}

Heap dual(const CoxeterGraph& g, const Heap& h) {
  Word w(h.witness().rbegin(), h.witness().rend());
  return Heap::of_word(g, std::move(w));
}

bool is_fc(const CoxeterGraph& g, const Heap& h) {
  for (Gen s = 0; s < g.rank(); ++s) {
    const auto chain = h.elements_with(s);
    for (std::size_t a = 0; a + 1 < chain.size(); ++a)
      if (h.interval_size(chain[a], chain[a + 1]) == 2)
        return false;
  }
  for (Gen s = 0; s < g.rank(); ++s) {
    for (Gen t = s + 1; t < g.rank(); ++t) {
      const Bond m = g.bond(s, t);
      if (m < 3 || m == kInfinity)
        continue;
      const Gen pair[2] = {s, t};
      const auto chain = h.elements_with(pair);
      const std::size_t len = static_cast<std::size_t>(m);
      // Walk maximal alternating runs; a convex alternating chain must be a
      // window of consecutive elements of H_{s,t}.
      std::size_t run_start = 0;
      for (std::size_t i = 0; i < chain.size(); ++i) {
        if (i > 0 && h.label(chain[i]) == h.label(chain[i - 1]))
          run_start = i;
        if (i + 1 >= run_start + len) {
          const std::size_t first = chain[i + 1 - len];
          if (h.interval_size(first, chain[i]) == len)
            return false;
        }
      }
    }
  }
  return true;
}

bool is_alternating(const CoxeterGraph& g, const Heap& h) {
  for (Gen s = 0; s < g.rank(); ++s) {
    for (Gen t = s + 1; t < g.rank(); ++t) {
      if (!g.adjacent(s, t))
        continue;
      const Gen pair[2] = {s, t};
      const auto chain = h.elements_with(pair);
      for (std::size_t i = 1; i < chain.size(); ++i)
        if (h.label(chain[i]) == h.label(chain[i - 1]))
          return false;
    }
  }
  return true;
}

Word chain_word(const Heap& h, std::span<const Gen> labels) {
  const auto chain = h.elements_with(labels);
  Word out;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0 && !h.less(chain[i - 1], chain[i]))
      throw NotAChain("elements with the requested labels are not totally ordered");
    out.push_back(h.label(chain[i]));
  }
  return out;
}

nlohmann::json heap_to_json(const CoxeterGraph& g, const Heap& h) {
  nlohmann::json labels = nlohmann::json::array();
  for (Gen s : h.witness())
    labels.push_back(g.name(s));
  nlohmann::json covers = nlohmann::json::array();
  for (auto [a, b] : h.covers())
    covers.push_back({a, b});
  return {{"labels", labels}, {"covers", covers}};
}

Heap heap_from_json(const CoxeterGraph& g, const nlohmann::json& j) {
  try {
    std::vector<Gen> labels;
    for (const auto& name : j.at("labels"))
      labels.push_back(g.index_of(name.get<std::string>()));
    std::vector<std::pair<std::size_t, std::size_t>> covers;
    for (const auto& c : j.at("covers"))
      covers.emplace_back(c.at(0).get<std::size_t>(), c.at(1).get<std::size_t>());
    return Heap::from_covers(g, labels, covers);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed heap JSON: ") + e.what());
  }
}

} // namespace fcx
