#include "fcx/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>

namespace fcx {

namespace {

using Layer = std::vector<Word>;

void extend_range(const CoxeterGraph& g, const Layer& layer, std::size_t begin,
                  std::size_t end, Layer& out) {
  std::vector<bool> top(g.rank());
  for (std::size_t i = begin; i < end; ++i) {
    const Heap h = Heap::of_word(g, layer[i]);
    std::fill(top.begin(), top.end(), false);
    for (std::size_t e = 0; e < h.size(); ++e)
      if (h.is_maximal(e))
        top[h.label(e)] = true;
    for (Gen s = 0; s < g.rank(); ++s) {
      // A maximal s-element means s is a right descent: w·s would be shorter.
      if (top[s])
        continue;
      const Heap ext = h.appended(g, s);
      if (is_fc(g, ext))
        out.push_back(canonical_word(ext));
    }
  }
}

Layer next_layer(const CoxeterGraph& g, const Layer& layer, unsigned threads) {
  Layer out;
  const std::size_t workers = std::min<std::size_t>(threads, layer.size() / 64 + 1);
  if (workers <= 1) {
    extend_range(g, layer, 0, layer.size(), out);
  } else {
    std::vector<Layer> parts(workers);
    std::vector<std::thread> pool;
    const std::size_t chunk = (layer.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t b = std::min(layer.size(), w * chunk);
      const std::size_t e = std::min(layer.size(), b + chunk);
      pool.emplace_back([&, w, b, e] { extend_range(g, layer, b, e, parts[w]); });
    }
    for (auto& t : pool)
      t.join();
    for (auto& p : parts)
      out.insert(out.end(), std::make_move_iterator(p.begin()),
                 std::make_move_iterator(p.end()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Runs the layered construction, handing each finished layer to visit.
// Returns true if some layer came out empty.
template <class Visit>
bool run_layers(const CoxeterGraph& g, int max_len, Visit&& visit) {
  if (max_len < 0)
    throw std::invalid_argument("max_len must be nonnegative");
  const unsigned threads = oracle_threads();
  Layer layer{Word{}};
  for (int len = 0;; ++len) {
    visit(len, layer);
    if (len == max_len)
      return false;
    layer = next_layer(g, layer, threads);
    if (layer.empty())
      return true;
  }
}

} // namespace

unsigned oracle_threads() {
  if (const char* env = std::getenv("FCX_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0)
      return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

GrowthRecord enumerate_fc(const CoxeterGraph& g, int max_len) {
  GrowthRecord rec;
  rec.spec = g.type() ? g.type()->to_string() : "custom";
  rec.max_len = max_len;
  rec.counts.assign(static_cast<std::size_t>(std::max(max_len, 0)) + 1, 0);
  rec.complete = run_layers(g, max_len, [&](int len, const Layer& layer) {
    rec.counts[static_cast<std::size_t>(len)] = layer.size();
  });
  return rec;
}

void for_each_fc(const CoxeterGraph& g, int max_len,
                 const std::function<void(const FcElement&)>& visit) {
  run_layers(g, max_len, [&](int len, const Layer& layer) {
    for (const Word& w : layer)
      visit(FcElement{len, w, Heap::of_word(g, w)});
  });
}

std::vector<FcElement> fc_elements(const CoxeterGraph& g, int max_len) {
  std::vector<FcElement> out;
  for_each_fc(g, max_len, [&](const FcElement& e) { out.push_back(e); });
  return out;
}

} // namespace fcx
