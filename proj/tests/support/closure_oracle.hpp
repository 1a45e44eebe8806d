#pragma once

// Test-side fixed-point closure, independent of the library's enumeration
// code paths: worklist processed in a shuffled order so that any accidental
// order dependence in the expected counts would surface.

#include <algorithm>
#include <cstddef>
#include <random>
#include <set>
#include <vector>

template <class T, class Gens, class Apply>
std::set<T> closure_oracle(const std::vector<T>& seeds, const Gens& generators, Apply apply,
                           unsigned shuffle_seed) {
  std::mt19937 rng(shuffle_seed);
  std::set<T> seen(seeds.begin(), seeds.end());
  std::vector<T> work(seen.begin(), seen.end());
  std::shuffle(work.begin(), work.end(), rng);
  while (!work.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, work.size() - 1);
    std::swap(work[pick(rng)], work.back());
    const T t = work.back();
    work.pop_back();
    for (const auto& g : generators) {
      T u = apply(t, g);
      if (seen.insert(u).second) work.push_back(std::move(u));
    }
  }
  return seen;
}
