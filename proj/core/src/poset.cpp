#include "eulerk/poset.hpp"

#include <algorithm>

#include "eulerk/error.hpp"

namespace eulerk {

QuotientPoset::QuotientPoset(FiniteGroup base,
                             std::vector<NormalSubgroup> kernels)
    : base_(std::move(base)), kernels_(std::move(kernels)) {
  std::sort(kernels_.begin(), kernels_.end(),
            [](const NormalSubgroup& a, const NormalSubgroup& b) {
              if (a.elements.size() != b.elements.size()) {
                return a.elements.size() < b.elements.size();
              }
              return a.elements < b.elements;
            });
  const int n = size();
  leq_.assign(n, std::vector<char>(n, 0));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      // s <= t iff kernel(s) contains kernel(t)
      leq_[s][t] = std::includes(kernels_[s].elements.begin(),
                                 kernels_[s].elements.end(),
                                 kernels_[t].elements.begin(),
                                 kernels_[t].elements.end())
                       ? 1
                       : 0;
    }
  }
  top_ = 0;
  bottom_ = n - 1;
}

FiniteGroup QuotientPoset::quotient_at(int node) const {
  return quotient(base_, kernels_[node]);
}

QuotientPoset quotient_poset(const FiniteGroup& g) {
  return QuotientPoset(g, normal_subgroups(g));
}

MobiusSplitter all_weight_on_unique_representative() {
  return [](int, int, long long mu_bar, int multiplicity) {
    return std::vector<long long>(static_cast<size_t>(multiplicity), mu_bar);
  };
}

MobiusData mobius(const QuotientPoset& poset) {
  return mobius(poset, all_weight_on_unique_representative());
}

MobiusData mobius(const QuotientPoset& poset, const MobiusSplitter& split) {
  const int n = poset.size();
  MobiusData data;
  data.mu.assign(n, std::vector<long long>(n, 0));
  for (int t = 0; t < n; ++t) {
    data.mu[t][t] = 1;
    // nodes below t have larger kernels, hence larger indices
    for (int s = t + 1; s < n; ++s) {
      if (!poset.leq(s, t)) continue;
      long long sum = 0;
      for (int r = t; r < s; ++r) {
        if (poset.leq(s, r) && poset.leq(r, t)) sum += data.mu[t][r];
      }
      const long long mu_bar = -sum;
      auto weights = split(t, s, mu_bar, 1);
      if (weights.size() != 1) {
        throw InvalidInputError(
            "Mobius splitter must return one weight per representative");
      }
      long long total = 0;
      for (long long w : weights) total += w;
      if (total != mu_bar) {
        throw InvalidInputError("Mobius splitter weights must sum to mu");
      }
      data.mu[t][s] = weights[0];
    }
  }
  return data;
}

std::vector<Rat> invert(const QuotientPoset& poset, const MobiusData& data,
                        const std::vector<Rat>& f) {
  if (static_cast<int>(f.size()) != poset.size()) {
    throw InvalidInputError("invert: value vector size does not match poset");
  }
  std::vector<Rat> g(f.size());
  for (int t = 0; t < poset.size(); ++t) {
    Rat sum;
    for (int s = 0; s < poset.size(); ++s) {
      if (poset.leq(s, t) && data.mu[t][s] != 0) {
        sum += Rat(data.mu[t][s]) * f[s];
      }
    }
    g[t] = sum;
  }
  return g;
}

int restriction_multiplicity(const QuotientPoset& poset, int t, int s) {
  const FiniteGroup& base = poset.base();
  const auto& kt = poset.kernel(t).elements;

  // projection onto base / kernel(t), labeling cosets by minimal element
  std::vector<int> rep(base.order());
  for (int a = 0; a < base.order(); ++a) {
    int best = a;
    for (int x : kt) best = std::min(best, base.mul(a, x));
    rep[a] = best;
  }
  std::vector<int> reps;
  for (int a = 0; a < base.order(); ++a) {
    if (rep[a] == a) reps.push_back(a);
  }
  std::vector<int> index(base.order(), -1);
  for (size_t i = 0; i < reps.size(); ++i) index[reps[i]] = int(i);

  FiniteGroup q = poset.quotient_at(t);
  int count = 0;
  for (const auto& m : normal_subgroups(q)) {
    std::vector<char> in(q.order(), 0);
    for (int x : m.elements) in[x] = 1;
    std::vector<int> preimage;
    for (int a = 0; a < base.order(); ++a) {
      if (in[index[rep[a]]]) preimage.push_back(a);
    }
    if (preimage == poset.kernel(s).elements) ++count;
  }
  return count;
}

}  // namespace eulerk
