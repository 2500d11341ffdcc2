#include "eulerk/canonical.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "eulerk/catalog.hpp"
#include "eulerk/error.hpp"
#include "eulerk/hom.hpp"

namespace eulerk {

namespace {

// ---------------------------------------------------------------------
// Minimal-table search.
//
// Entries are compared in expanding-corner order: for k = 1, 2, ... the
// L-shaped block (i,k), (k,i) for i < k and then (k,k). Row-major order
// would compare all of row 1 first, and on 2-groups that row does not
// discriminate between relabelings at all, so the tie frontier explodes
// combinatorially; the corner order checks every product among the first
// k labels before label k+1 exists, which keeps the frontier at the size
// of a partial-automorphism family.
//
// A frontier of partial relabelings is maintained. At each entry every
// candidate either already knows the value or must choose lazily: an
// unplaced label branches over all unplaced elements, and a product seen
// for the first time is forced to take the smallest unused label (any
// larger choice could only increase the current entry). Candidates whose
// entry exceeds the minimum are discarded; the survivors all induce the
// same full table, which is the minimum over all relabelings fixing the
// identity. Elementary abelian groups, whose automorphism groups are
// huge, take a closed-form path instead.
// ---------------------------------------------------------------------

struct Labeling {
  std::vector<int> to_old;  // label -> original element, -1 unassigned
  std::vector<int> to_new;  // original element -> label, -1 unassigned

  bool operator<(const Labeling& rhs) const { return to_old < rhs.to_old; }
};

int smallest_unused_label(const Labeling& lab) {
  for (size_t i = 0; i < lab.to_old.size(); ++i) {
    if (lab.to_old[i] < 0) return static_cast<int>(i);
  }
  return -1;
}

void assign(Labeling& lab, int label, int orig) {
  lab.to_old[label] = orig;
  lab.to_new[orig] = label;
}

// All extensions of `lab` that give `label` some original element.
std::vector<Labeling> branch_label(const Labeling& lab, int label) {
  std::vector<Labeling> out;
  for (size_t orig = 0; orig < lab.to_new.size(); ++orig) {
    if (lab.to_new[orig] < 0) {
      Labeling next = lab;
      assign(next, label, static_cast<int>(orig));
      out.push_back(std::move(next));
    }
  }
  return out;
}

constexpr size_t kFrontierCap = 1'000'000;

std::vector<int> minimal_table_search(const FiniteGroup& g) {
  const int n = g.order();
  Labeling init;
  init.to_old.assign(n, -1);
  init.to_new.assign(n, -1);
  assign(init, 0, 0);

  std::vector<Labeling> frontier = {init};

  auto ensure_placed = [&](int need) {
    bool missing = false;
    for (const auto& lab : frontier) {
      if (lab.to_old[need] < 0) {
        missing = true;
        break;
      }
    }
    if (!missing) return;
    std::vector<Labeling> expanded;
    for (const auto& lab : frontier) {
      if (lab.to_old[need] >= 0) {
        expanded.push_back(lab);
      } else {
        for (auto& b : branch_label(lab, need)) {
          expanded.push_back(std::move(b));
        }
      }
    }
    frontier = std::move(expanded);
    if (frontier.size() > kFrontierCap) {
      throw LimitError("canonical table search too large for group '" +
                       g.name() + "'");
    }
  };

  // Frontier members are pairwise distinct by construction: every branch
  // point writes a different original into the branched label, and all
  // other assignments are forced.
  auto process_entry = [&](int i, int j) {
    int best = n;  // larger than any label
    std::vector<Labeling> keep;
    for (auto& lab : frontier) {
      const int p = g.mul(lab.to_old[i], lab.to_old[j]);
      const bool fresh = lab.to_new[p] < 0;
      const int value = fresh ? smallest_unused_label(lab) : lab.to_new[p];
      if (value > best) continue;
      if (value < best) {
        best = value;
        keep.clear();
      }
      Labeling next = std::move(lab);
      if (fresh) assign(next, value, p);
      keep.push_back(std::move(next));
    }
    frontier = std::move(keep);
  };

  for (int k = 1; k < n; ++k) {
    ensure_placed(k);
    for (int i = 1; i < k; ++i) {
      process_entry(i, k);
      process_entry(k, i);
    }
    process_entry(k, k);
  }

  // every survivor induces the same table; read it off the first
  const Labeling& win = frontier.front();
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      table[static_cast<size_t>(i) * n + j] =
          win.to_new[g.mul(win.to_old[i], win.to_old[j])];
    }
  }
  return table;
}

// Prime-power cyclic factors of an abelian group, primes ascending and
// exponents descending within a prime. Derived from the p^k-torsion
// counts: with m_k = log_p #{x : x^(p^k) = e}, the number of factors of
// exponent at least k is m_k - m_(k-1), and the partition of exponents is
// its conjugate.
std::vector<int> abelian_primary_factors(const FiniteGroup& g) {
  std::vector<int> factors;
  for (const auto& [p, total_exp] : factorize(g.order())) {
    std::vector<int> parts_ge;  // parts_ge[k-1] = #factors with exponent >= k
    int prev_m = 0;
    long long pk = 1;
    while (true) {
      pk *= p;
      int count = 0;
      for (int a = 0; a < g.order(); ++a) {
        // x^(p^k) == e iff the order of x divides p^k
        long long o = g.element_order(a);
        if (pk % o == 0) ++count;
      }
      int m = 0;
      while (count > 1) {
        count /= p;
        ++m;
      }
      if (m == prev_m) break;
      parts_ge.push_back(m - prev_m);
      prev_m = m;
      if (prev_m >= total_exp) break;
    }
    const int num_factors = parts_ge.empty() ? 0 : parts_ge[0];
    for (int i = 1; i <= num_factors; ++i) {
      int exponent = 0;
      for (int part : parts_ge) {
        if (part >= i) ++exponent;
      }
      int f = 1;
      for (int e = 0; e < exponent; ++e) f *= p;
      factors.push_back(f);
    }
  }
  return factors;
}

// Digit-addition table over the given mixed radix: element a has digits
// d_i = (a / stride_i) % f_i and products add digitwise.
std::vector<int> digit_addition_table(const std::vector<int>& factors) {
  int n = 1;
  for (int f : factors) n *= f;
  std::vector<int> table(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      int value = 0, stride = 1, x = a, y = b;
      for (int f : factors) {
        value += ((x + y) % f) * stride;
        x /= f;
        y /= f;
        stride *= f;
      }
      table[static_cast<size_t>(a) * n + b] = value;
    }
  }
  return table;
}

struct KeyCache {
  std::mutex mutex;
  std::map<std::string, std::vector<int>> tables;
};

}  // namespace

std::vector<int> canonical_table(const FiniteGroup& g) {
  static KeyCache cache;
  const std::string key = g.table_key();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.tables.find(key);
    if (it != cache.tables.end()) return it->second;
  }
  std::vector<int> table;
  if (g.is_abelian()) {
    table = digit_addition_table(abelian_primary_factors(g));
  } else {
    table = minimal_table_search(g);
  }
  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.tables.emplace(key, std::move(table));
  (void)inserted;
  return it->second;
}

std::string canonical_key(const FiniteGroup& g) {
  const auto table = canonical_table(g);
  std::string key;
  key.reserve(table.size() + 4);
  const int n = g.order();
  key.push_back(static_cast<char>((n >> 24) & 0xff));
  key.push_back(static_cast<char>((n >> 16) & 0xff));
  key.push_back(static_cast<char>((n >> 8) & 0xff));
  key.push_back(static_cast<char>(n & 0xff));
  for (int v : table) {
    if (n > 256) key.push_back(static_cast<char>((v >> 8) & 0xff));
    key.push_back(static_cast<char>(v & 0xff));
  }
  return key;
}

namespace {

// Candidate catalog specs of a given order: pure cyclic products first
// (fewest factors, then lex), then products involving dihedral/quaternion
// and symmetric atoms. The first spec whose group lands in a new
// isomorphism class names that class.
std::vector<std::string> candidate_specs(int order) {
  std::vector<std::string> atoms_cyclic, atoms_other;
  for (int k = 2; k <= order; ++k) {
    if (order % k == 0) atoms_cyclic.push_back("C" + std::to_string(k));
  }
  for (int k = 2; 2 * k <= order; ++k) {
    if (order % (2 * k) == 0) atoms_other.push_back("D" + std::to_string(k));
  }
  if (order % 8 == 0) atoms_other.push_back("Q8");
  if (order % 6 == 0) atoms_other.push_back("S3");
  if (order % 24 == 0) atoms_other.push_back("S4");

  auto atom_order = [](const std::string& a) {
    if (a == "Q8") return 8;
    if (a == "S3") return 6;
    if (a == "S4") return 24;
    int n = std::stoi(a.substr(1));
    return a[0] == 'D' ? 2 * n : n;
  };

  std::vector<std::string> all_atoms = atoms_cyclic;
  all_atoms.insert(all_atoms.end(), atoms_other.begin(), atoms_other.end());

  std::vector<std::vector<std::string>> combos;
  std::vector<std::string> current;
  // multisets of atoms with product == order, nonincreasing atom position
  auto rec = [&](auto&& self, size_t start, int remaining) -> void {
    if (remaining == 1) {
      if (!current.empty()) combos.push_back(current);
      return;
    }
    for (size_t i = start; i < all_atoms.size(); ++i) {
      const int ao = atom_order(all_atoms[i]);
      if (remaining % ao != 0) continue;
      current.push_back(all_atoms[i]);
      self(self, i, remaining / ao);
      current.pop_back();
    }
  };
  rec(rec, 0, order);

  std::vector<std::pair<std::vector<std::string>, std::string>> ranked;
  for (auto& combo : combos) {
    bool cyclic_only = true;
    for (const auto& a : combo) {
      if (a[0] != 'C') cyclic_only = false;
    }
    // larger factors first reads better: C4xC2, not C2xC4
    std::vector<std::string> sorted = combo;
    std::sort(sorted.begin(), sorted.end(),
              [&](const std::string& a, const std::string& b) {
                if (atom_order(a) != atom_order(b)) {
                  return atom_order(a) > atom_order(b);
                }
                return a < b;
              });
    std::string spec = sorted[0];
    for (size_t i = 1; i < sorted.size(); ++i) spec += "x" + sorted[i];
    std::vector<std::string> rank;
    rank.push_back(cyclic_only ? "0" : "1");
    rank.push_back(std::string(1, static_cast<char>('0' + sorted.size())));
    rank.push_back(spec);
    ranked.emplace_back(std::move(rank), std::move(spec));
  }
  std::sort(ranked.begin(), ranked.end());
  ranked.erase(std::unique(ranked.begin(), ranked.end(),
                           [](const auto& a, const auto& b) {
                             return a.second == b.second;
                           }),
               ranked.end());
  std::vector<std::string> out;
  for (auto& [rank, spec] : ranked) out.push_back(spec);
  return out;
}

struct NameCache {
  std::mutex mutex;
  std::map<std::string, std::string> names;  // canonical key -> spec
};

NameCache& name_cache() {
  static NameCache cache;
  return cache;
}

}  // namespace

std::string canonical_name(const FiniteGroup& g) {
  const std::string key = canonical_key(g);
  auto& cache = name_cache();
  {
    std::lock_guard<std::mutex> lock(cache.mutex);
    auto it = cache.names.find(key);
    if (it != cache.names.end()) return it->second;
  }

  std::string name;
  if (g.order() == 1) {
    name = "C1";
  } else {
    Limits limits;
    limits.max_order = std::max(limits.max_order, g.order());
    for (const auto& spec : candidate_specs(g.order())) {
      if (is_isomorphic(build_catalog_group(spec, limits), g, limits)) {
        name = spec;
        break;
      }
    }
  }
  if (name.empty()) {
    // not expressible in the catalog grammar; fall back to a parseable
    // table literal of the canonical table
    const auto table = canonical_table(g);
    name = "table:[";
    for (size_t i = 0; i < table.size(); ++i) {
      if (i) name += ",";
      name += std::to_string(table[i]);
    }
    name += "]";
  }

  std::lock_guard<std::mutex> lock(cache.mutex);
  auto [it, inserted] = cache.names.emplace(key, std::move(name));
  (void)inserted;
  return it->second;
}

}  // namespace eulerk
