#include "hibi/census.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace hibi {

namespace {

// iterated refinement: color by (old color, colors strictly below, colors
// strictly above) until the partition stops splitting
std::vector<int> refine_colors(const Poset& p) {
  const int n = p.size();
  std::vector<int> color(n, 0);
  int classes = 1;
  for (int round = 0; round <= n; ++round) {
    std::vector<std::vector<int>> key(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> below, above;
      for (int u = 0; u < n; ++u) {
        if (p.less(u, v)) below.push_back(color[u]);
        if (p.less(v, u)) above.push_back(color[u]);
      }
      std::sort(below.begin(), below.end());
      std::sort(above.begin(), above.end());
      key[v].push_back(color[v]);
      key[v].push_back(-1);
      key[v].insert(key[v].end(), below.begin(), below.end());
      key[v].push_back(-2);
      key[v].insert(key[v].end(), above.begin(), above.end());
    }
    std::map<std::vector<int>, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(key[v], 0);
    int next = 0;
    for (auto& kv : ids) kv.second = next++;
    for (int v = 0; v < n; ++v) color[v] = ids.at(key[v]);
    if (next == classes) break;
    classes = next;
  }
  return color;
}

}  // namespace

std::string canonical_form(const Poset& p) {
  const int n = p.size();
  if (n == 0) return "";
  if (n > 16)
    throw std::invalid_argument("canonical_form supports up to 16 elements");
  std::vector<int> color = refine_colors(p);

  // vertices grouped by color; isomorphisms permute within classes only
  std::vector<std::vector<int>> classes;
  {
    int nc = *std::max_element(color.begin(), color.end()) + 1;
    classes.resize(nc);
    for (int v = 0; v < n; ++v) classes[color[v]].push_back(v);
  }

  std::string best;
  std::vector<int> arr;
  arr.reserve(n);
  std::string enc(static_cast<size_t>(n) * n, '0');
  auto emit = [&]() {
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        enc[static_cast<size_t>(i) * n + j] = p.less(arr[i], arr[j]) ? '1' : '0';
    if (best.empty() || enc < best) best = enc;
  };
  auto rec = [&](auto&& self, size_t ci) -> void {
    if (ci == classes.size()) {
      emit();
      return;
    }
    std::vector<int>& cls = classes[ci];
    std::sort(cls.begin(), cls.end());
    do {
      size_t mark = arr.size();
      arr.insert(arr.end(), cls.begin(), cls.end());
      self(self, ci + 1);
      arr.resize(mark);
    } while (std::next_permutation(cls.begin(), cls.end()));
  };
  rec(rec, 0);
  return std::to_string(n) + ":" + best;
}

std::vector<Poset> poset_census(int n, int max_width) {
  if (n < 1 || n > 10)
    throw std::invalid_argument("poset_census supports 1 <= n <= 10");

  auto make_name = [](int i) { return "p" + std::to_string(i); };

  std::map<std::string, Poset> cur;
  {
    Poset single({make_name(0)}, {});
    cur.emplace(canonical_form(single), std::move(single));
  }
  for (int m = 2; m <= n; ++m) {
    std::map<std::string, Poset> next;
    for (const auto& [key, q] : cur) {
      const int mm = q.size();
      // a new maximal element may sit above any down-set of q; every poset
      // on m elements arises this way from the removal of a maximal element
      for (std::uint32_t mask = 0; mask < (1u << mm); ++mask) {
        bool downset = true;
        for (int b = 0; b < mm && downset; ++b) {
          if (!((mask >> b) & 1)) continue;
          for (int a = 0; a < mm && downset; ++a)
            if (q.less(a, b) && !((mask >> a) & 1)) downset = false;
        }
        if (!downset) continue;
        std::vector<std::string> names;
        for (int i = 0; i < m; ++i) names.push_back(make_name(i));
        std::vector<std::pair<int, int>> rels;
        for (int a = 0; a < mm; ++a)
          for (int b = 0; b < mm; ++b)
            if (q.less(a, b)) rels.emplace_back(a, b);
        for (int a = 0; a < mm; ++a)
          if ((mask >> a) & 1) rels.emplace_back(a, m - 1);
        Poset cand(std::move(names), rels);
        if (max_width > 0 && max_antichain_size(cand) > max_width) continue;
        std::string ck = canonical_form(cand);
        next.emplace(std::move(ck), std::move(cand));
      }
    }
    cur = std::move(next);
  }
  std::vector<Poset> out;
  out.reserve(cur.size());
  for (auto& [key, q] : cur) out.push_back(std::move(q));
  return out;
}

}  // namespace hibi
