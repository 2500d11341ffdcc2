#include "eulerk/group.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "eulerk/error.hpp"

namespace eulerk {

FiniteGroup FiniteGroup::from_table(std::vector<int> table, std::string name) {
  size_t n = static_cast<size_t>(std::lround(std::sqrt(double(table.size()))));
  if (n == 0 || n * n != table.size()) {
    throw InvalidInputError("Cayley table is not square: " +
                            std::to_string(table.size()) + " entries");
  }
  FiniteGroup g;
  g.order_ = static_cast<int>(n);
  g.table_ = std::move(table);
  g.name_ = std::move(name);

  const int order = g.order_;
  for (int v : g.table_) {
    if (v < 0 || v >= order) {
      throw InvalidInputError("table entry out of range in group '" + g.name_ +
                              "'");
    }
  }
  for (int a = 0; a < order; ++a) {
    if (g.mul(0, a) != a || g.mul(a, 0) != a) {
      throw InvalidInputError("element 0 is not an identity in group '" +
                              g.name_ + "'");
    }
  }
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      for (int c = 0; c < order; ++c) {
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) {
          throw InvalidInputError("associativity fails in group '" + g.name_ +
                                  "'");
        }
      }
    }
  }
  g.inv_.assign(order, -1);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      if (g.mul(a, b) == 0 && g.mul(b, a) == 0) {
        g.inv_[a] = b;
        break;
      }
    }
    if (g.inv_[a] < 0) {
      throw InvalidInputError("element without inverse in group '" + g.name_ +
                              "'");
    }
  }
  return g;
}

int FiniteGroup::element_order(int a) const {
  int ord = 1;
  int x = a;
  while (x != 0) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a) {
    for (int b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a)) return false;
    }
  }
  return true;
}

std::vector<int> FiniteGroup::element_orders() const {
  std::vector<int> out(order_);
  for (int a = 0; a < order_; ++a) out[a] = element_order(a);
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup g = *this;
  g.name_ = std::move(name);
  return g;
}

std::string FiniteGroup::table_key() const {
  std::string key;
  key.reserve(table_.size() + 4);
  key.push_back(static_cast<char>(order_ & 0xff));
  key.push_back(static_cast<char>((order_ >> 8) & 0xff));
  for (int v : table_) {
    key.push_back(static_cast<char>(v & 0xff));
    if (order_ > 256) key.push_back(static_cast<char>((v >> 8) & 0xff));
  }
  return key;
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h,
                           const std::string& name) {
  const int n = g.order(), m = h.order();
  std::vector<int> table(static_cast<size_t>(n) * m * n * m);
  const int order = n * m;
  for (int a1 = 0; a1 < n; ++a1) {
    for (int a2 = 0; a2 < m; ++a2) {
      for (int b1 = 0; b1 < n; ++b1) {
        for (int b2 = 0; b2 < m; ++b2) {
          int a = a1 * m + a2, b = b1 * m + b2;
          table[static_cast<size_t>(a) * order + b] =
              g.mul(a1, b1) * m + h.mul(a2, b2);
        }
      }
    }
  }
  return FiniteGroup::from_table(std::move(table), name);
}

std::vector<int> closure(const FiniteGroup& g, const std::vector<int>& seed) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> elems;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      elems.push_back(x);
    }
  };
  add(0);
  for (int s : seed) add(s);
  for (size_t i = 0; i < elems.size(); ++i) {
    for (size_t j = 0; j < elems.size(); ++j) {
      add(g.mul(elems[i], elems[j]));
      add(g.mul(elems[j], elems[i]));
    }
  }
  std::sort(elems.begin(), elems.end());
  return elems;
}

namespace {

struct SubgroupCache {
  std::mutex mutex;
  std::map<std::string, std::shared_ptr<const std::vector<std::vector<int>>>>
      entries;
};

SubgroupCache& subgroup_cache() {
  static SubgroupCache cache;
  return cache;
}

std::vector<std::vector<int>> compute_all_subgroups(const FiniteGroup& g) {
  std::vector<std::vector<int>> found = {{0}};
  std::vector<std::vector<int>> work = {{0}};
  auto known = [&](const std::vector<int>& s) {
    return std::find(found.begin(), found.end(), s) != found.end();
  };
  while (!work.empty()) {
    std::vector<int> s = std::move(work.back());
    work.pop_back();
    for (int x = 1; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), x)) continue;
      std::vector<int> seed = s;
      seed.push_back(x);
      std::vector<int> t = closure(g, seed);
      if (!known(t)) {
        found.push_back(t);
        work.push_back(std::move(t));
      }
    }
  }
  std::sort(found.begin(), found.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return found;
}

}  // namespace

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
  auto& cache = subgroup_cache();
  const std::string key = g.table_key();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.entries.find(key);
    if (it != cache.entries.end()) return *it->second;
  }
  auto result = std::make_shared<const std::vector<std::vector<int>>>(
      compute_all_subgroups(g));
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.entries.emplace(key, result);
  (void)inserted;
  return *it->second;
}

FiniteGroup subgroup_group(const FiniteGroup& g,
                           const std::vector<int>& elements,
                           const std::string& name) {
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < elements.size(); ++i) pos[elements[i]] = int(i);
  const int k = static_cast<int>(elements.size());
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      int p = g.mul(elements[i], elements[j]);
      if (pos[p] < 0) {
        throw InvalidInputError("element set is not closed under product");
      }
      table[static_cast<size_t>(i) * k + j] = pos[p];
    }
  }
  return FiniteGroup::from_table(std::move(table), name);
}

bool is_normal_subgroup(const FiniteGroup& g,
                        const std::vector<int>& elements) {
  std::vector<char> in(g.order(), 0);
  for (int x : elements) in[x] = 1;
  if (elements.empty() || !in[0]) return false;
  for (int x : elements) {
    for (int y : elements) {
      if (!in[g.mul(x, y)]) return false;
    }
  }
  for (int a = 0; a < g.order(); ++a) {
    for (int x : elements) {
      if (!in[g.mul(g.mul(a, x), g.inv(a))]) return false;
    }
  }
  return true;
}

std::vector<NormalSubgroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<NormalSubgroup> out;
  for (const auto& s : all_subgroups(g)) {
    if (is_normal_subgroup(g, s)) out.push_back(NormalSubgroup{g, s});
  }
  return out;
}

FiniteGroup quotient(const FiniteGroup& g, const NormalSubgroup& n) {
  if (n.parent.table_key() != g.table_key() ||
      !is_normal_subgroup(g, n.elements)) {
    throw InvalidInputError("not a normal subgroup of '" + g.name() + "'");
  }
  // coset representative = minimal element of the coset
  std::vector<int> rep(g.order());
  for (int a = 0; a < g.order(); ++a) {
    int best = a;
    for (int x : n.elements) best = std::min(best, g.mul(a, x));
    rep[a] = best;
  }
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (rep[a] == a) reps.push_back(a);
  }
  std::vector<int> index(g.order(), -1);
  for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = int(i);
  const int k = static_cast<int>(reps.size());
  std::vector<int> table(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      table[static_cast<size_t>(i) * k + j] = index[rep[g.mul(reps[i], reps[j])]];
    }
  }
  std::string nm = g.name() + "/#" + std::to_string(n.elements.size());
  return FiniteGroup::from_table(std::move(table), nm);
}

std::map<int, int> factorize(int n) {
  std::map<int, int> out;
  for (int p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

namespace {

SylowDecomposition compute_sylow_decomposition(const FiniteGroup& g);

}  // namespace

SylowDecomposition sylow_decomposition(const FiniteGroup& g) {
  static std::mutex mutex;
  static std::map<std::string, SylowDecomposition> cache;
  const std::string key = g.table_key();
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SylowDecomposition value = compute_sylow_decomposition(g);
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = cache.emplace(key, std::move(value));
  (void)inserted;
  return it->second;
}

namespace {

SylowDecomposition compute_sylow_decomposition(const FiniteGroup& g) {
  SylowDecomposition out;
  if (g.order() == 1) return out;
  const auto factors = factorize(g.order());
  const auto subs = all_subgroups(g);
  for (const auto& [p, e] : factors) {
    int target = 1;
    for (int i = 0; i < e; ++i) target *= p;
    const std::vector<int>* chosen = nullptr;
    for (const auto& s : subs) {
      if (static_cast<int>(s.size()) == target) {
        chosen = &s;
        break;
      }
    }
    // a Sylow subgroup always exists; the scan cannot miss it
    out.sylow.emplace(
        p, subgroup_group(g, *chosen,
                          "Syl" + std::to_string(p) + "(" + g.name() + ")"));
    if (!is_normal_subgroup(g, *chosen)) out.nilpotent = false;
  }
  return out;
}

}  // namespace

}  // namespace eulerk
