#include "eulerk/hom.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "eulerk/error.hpp"

namespace eulerk {

bool GroupHom::is_injective() const {
  std::vector<char> seen(target.order(), 0);
  for (int v : images) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

std::vector<int> greedy_generators(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> sub = {0};
  while (static_cast<int>(sub.size()) < g.order()) {
    int next = -1;
    for (int x = 1; x < g.order(); ++x) {
      if (!std::binary_search(sub.begin(), sub.end(), x)) {
        next = x;
        break;
      }
    }
    gens.push_back(next);
    sub = closure(g, gens);
  }
  return gens;
}

namespace {

// Extends the partial map to the subgroup generated by its domain and
// checks the homomorphism property there. Returns false on conflict.
// In injective mode also rejects any repeated image.
bool propagate(const FiniteGroup& g, const FiniteGroup& h,
               std::vector<int>& img, bool injective) {
  std::vector<int> known;
  known.reserve(g.order());
  std::vector<int> preimage;
  if (injective) preimage.assign(h.order(), -1);
  for (int a = 0; a < g.order(); ++a) {
    if (img[a] < 0) continue;
    if (injective) {
      if (preimage[img[a]] >= 0) return false;
      preimage[img[a]] = a;
    }
    known.push_back(a);
  }
  for (size_t k = 0; k < known.size(); ++k) {
    for (size_t l = 0; l <= k; ++l) {
      const int pairs[2][2] = {{known[k], known[l]}, {known[l], known[k]}};
      for (const auto& pr : pairs) {
        int c = g.mul(pr[0], pr[1]);
        int v = h.mul(img[pr[0]], img[pr[1]]);
        if (img[c] < 0) {
          if (injective) {
            if (preimage[v] >= 0) return false;
            preimage[v] = c;
          }
          img[c] = v;
          known.push_back(c);
        } else if (img[c] != v) {
          return false;
        }
      }
    }
  }
  return true;
}

struct HomSearch {
  const FiniteGroup& g;
  const FiniteGroup& h;
  std::vector<int> gens;
  std::vector<std::vector<int>> candidates;
  bool injective = false;
  long long max_results = -1;  // -1: unbounded
  std::vector<std::vector<int>> results;

  void run(size_t level, const std::vector<int>& img) {
    if (max_results >= 0 &&
        static_cast<long long>(results.size()) >= max_results) {
      return;
    }
    if (level == gens.size()) {
      results.push_back(img);
      return;
    }
    for (int v : candidates[level]) {
      std::vector<int> next = img;
      next[gens[level]] = v;
      if (propagate(g, h, next, injective)) run(level + 1, next);
      if (max_results >= 0 &&
          static_cast<long long>(results.size()) >= max_results) {
        return;
      }
    }
  }
};

std::vector<std::vector<int>> search_hom_images(const FiniteGroup& g,
                                                const FiniteGroup& h,
                                                const Limits& limits,
                                                bool injective,
                                                long long max_results = -1) {
  if (g.order() > limits.max_hom_order || h.order() > limits.max_hom_order) {
    throw LimitError("hom enumeration order cap " +
                     std::to_string(limits.max_hom_order) + " exceeded by (" +
                     std::to_string(g.order()) + ", " +
                     std::to_string(h.order()) + ")");
  }
  if (injective && h.order() < g.order()) return {};

  HomSearch search{g, h, greedy_generators(g), {}, injective, max_results, {}};
  long long projected = 1;
  for (int gen : search.gens) {
    const int gen_order = g.element_order(gen);
    std::vector<int> cands;
    for (int v = 0; v < h.order(); ++v) {
      const int vo = h.element_order(v);
      if (injective ? vo == gen_order : gen_order % vo == 0) {
        cands.push_back(v);
      }
    }
    projected *= static_cast<long long>(cands.size());
    if (projected > limits.max_hom_search) {
      throw LimitError("projected hom search space exceeds " +
                       std::to_string(limits.max_hom_search));
    }
    search.candidates.push_back(std::move(cands));
  }

  std::vector<int> img(g.order(), -1);
  img[0] = 0;
  search.run(0, img);
  std::sort(search.results.begin(), search.results.end());
  return search.results;
}

// Minimal image vector over conjugation by all target elements.
std::vector<int> conjugation_canonical(const FiniteGroup& h,
                                       const std::vector<int>& images) {
  std::vector<int> best = images;
  std::vector<int> cur(images.size());
  for (int t = 0; t < h.order(); ++t) {
    const int ti = h.inv(t);
    for (size_t a = 0; a < images.size(); ++a) {
      cur[a] = h.mul(h.mul(t, images[a]), ti);
    }
    if (cur < best) best = cur;
  }
  return best;
}

long long count_conjugation_orbits(const FiniteGroup& h,
                                   const std::vector<std::vector<int>>& homs) {
  std::set<std::vector<int>> canon;
  for (const auto& images : homs) {
    canon.insert(conjugation_canonical(h, images));
  }
  return static_cast<long long>(canon.size());
}

struct CountCache {
  std::mutex mutex;
  std::map<std::string, long long> entries;
};

long long cached_count(const char* tag, const FiniteGroup& g,
                       const FiniteGroup& h, const Limits& limits,
                       bool injective) {
  static CountCache cache;
  const std::string key = tag + g.table_key() + "|" + h.table_key();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return it->second;
  }
  long long value =
      count_conjugation_orbits(h, search_hom_images(g, h, limits, injective));
  std::lock_guard<std::mutex> lock(cache.mutex);
  cache.entries.emplace(key, value);
  return value;
}

}  // namespace

std::vector<GroupHom> enumerate_homs(const FiniteGroup& source,
                                     const FiniteGroup& target,
                                     const Limits& limits) {
  std::vector<GroupHom> out;
  for (auto& images : search_hom_images(source, target, limits, false)) {
    out.push_back(GroupHom{source, target, std::move(images)});
  }
  return out;
}

long long rep_count(const FiniteGroup& source, const FiniteGroup& target,
                    const Limits& limits) {
  return cached_count("R", source, target, limits, false);
}

long long mono_rep_count(const FiniteGroup& source, const FiniteGroup& target,
                         const Limits& limits) {
  return cached_count("M", source, target, limits, true);
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h,
                   const Limits& limits) {
  if (g.order() != h.order()) return false;
  if (g.table_key() == h.table_key()) return true;
  if (g.element_orders() != h.element_orders()) return false;
  if (g.is_abelian() != h.is_abelian()) return false;
  Limits iso_limits = limits;
  iso_limits.max_hom_order = std::max(limits.max_hom_order, limits.max_order);
  return !search_hom_images(g, h, iso_limits, true, 1).empty();
}

}  // namespace eulerk
