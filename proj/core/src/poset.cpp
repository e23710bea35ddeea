#include "hibi/poset.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hibi {

int DescentSet::size() const { return std::popcount(mask_); }

std::vector<int> DescentSet::members() const {
  std::vector<int> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

std::string DescentSet::str() const {
  std::string s = "{";
  bool first = true;
  for (int i : members()) {
    if (!first) s += ",";
    s += std::to_string(i);
    first = false;
  }
  return s + "}";
}

bool operator<(DescentSet a, DescentSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  std::uint64_t d = a.mask_ ^ b.mask_;
  if (d == 0) return false;
  // first differing member decides; with equal cardinality this is the
  // lexicographic order on sorted member lists
  std::uint64_t low = d & (~d + 1);
  return (a.mask_ & low) != 0;
}

Poset::Poset(std::vector<std::string> names,
             const std::vector<std::pair<int, int>>& relations)
    : n_(static_cast<int>(names.size())),
      names_(std::move(names)),
      less_(static_cast<size_t>(n_) * n_, 0) {
  for (auto [a, b] : relations) {
    assert(0 <= a && a < n_ && 0 <= b && b < n_);
    if (a == b) throw CycleError("cycle: element '" + names_[a] + "' below itself");
    less_[static_cast<size_t>(a) * n_ + b] = 1;
  }
  for (int k = 0; k < n_; ++k)
    for (int i = 0; i < n_; ++i)
      if (less(i, k))
        for (int j = 0; j < n_; ++j)
          if (less(k, j)) less_[static_cast<size_t>(i) * n_ + j] = 1;
  for (int a = 0; a < n_; ++a) {
    if (less(a, a))
      throw CycleError("cycle through element '" + names_[a] + "'");
    for (int b = a + 1; b < n_; ++b)
      if (less(a, b) && less(b, a))
        throw CycleError("cycle: '" + names_[a] + "' and '" + names_[b] +
                         "' are below each other");
  }
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      if (!less(a, b)) continue;
      bool cover = true;
      for (int c = 0; c < n_ && cover; ++c) cover = !(less(a, c) && less(c, b));
      if (cover) covers_.push_back({a, b});
    }
  std::sort(covers_.begin(), covers_.end());
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    bool minimal = true;
    for (int a = 0; a < n_ && minimal; ++a) minimal = !less(a, v);
    if (minimal) out.push_back(v);
  }
  return out;
}

bool Poset::is_chain() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (!comparable(a, b)) return false;
  return true;
}

bool Poset::is_antichain() const {
  for (int a = 0; a < n_; ++a)
    for (int b = a + 1; b < n_; ++b)
      if (comparable(a, b)) return false;
  return true;
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

Poset parse_poset(const std::string& text) {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::unordered_set<std::string> declared;
  std::vector<std::pair<int, int>> rels;

  auto intern = [&](const std::string& nm) {
    auto it = index.find(nm);
    if (it != index.end()) return it->second;
    index.emplace(nm, static_cast<int>(names.size()));
    names.push_back(nm);
    return static_cast<int>(names.size()) - 1;
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    size_t pos = 0;
    while (pos <= line.size()) {
      size_t semi = line.find(';', pos);
      std::string stmt = trim(line.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos));
      pos = (semi == std::string::npos) ? line.size() + 1 : semi + 1;
      if (stmt.empty()) continue;
      size_t lt = stmt.find('<');
      if (lt == std::string::npos) {
        if (!valid_name(stmt))
          throw ParseError("line " + std::to_string(lineno) + ": bad element name '" + stmt + "'");
        if (!declared.insert(stmt).second)
          throw ParseError("line " + std::to_string(lineno) + ": duplicate element name '" + stmt + "'");
        intern(stmt);
      } else {
        std::string lhs = trim(stmt.substr(0, lt));
        std::string rhs = trim(stmt.substr(lt + 1));
        if (!valid_name(lhs) || !valid_name(rhs))
          throw ParseError("line " + std::to_string(lineno) + ": bad relation '" + stmt + "'");
        // sequence the interning: names register in first-mention order
        int a = intern(lhs);
        int b = intern(rhs);
        rels.emplace_back(a, b);
      }
    }
  }
  if (names.empty()) throw ParseError("no elements declared");
  return Poset(std::move(names), rels);
}

std::uint64_t for_each_linear_extension(
    const Poset& p, const std::function<bool(std::span<const int>)>& visit) {
  const int n = p.size();
  std::uint64_t count = 0;
  if (n == 0) {
    ++count;
    visit(std::span<const int>());
    return count;
  }
  std::vector<std::vector<int>> up(n);
  std::vector<int> indeg(n, 0);
  for (auto [a, b] : p.covers()) {
    up[a].push_back(b);
    ++indeg[b];
  }
  std::vector<int> seq;
  seq.reserve(n);
  std::vector<char> placed(n, 0);
  bool stop = false;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == n) {
      ++count;
      if (!visit(std::span<const int>(seq.data(), seq.size()))) stop = true;
      return;
    }
    for (int v = 0; v < n && !stop; ++v) {
      if (placed[v] || indeg[v] != 0) continue;
      placed[v] = 1;
      seq.push_back(v);
      for (int u : up[v]) --indeg[u];
      self(self);
      for (int u : up[v]) ++indeg[u];
      seq.pop_back();
      placed[v] = 0;
    }
  };
  rec(rec);
  return count;
}

std::vector<std::vector<int>> linear_extensions(const Poset& p, const Budget& budget) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(p, [&](std::span<const int> ext) {
    if (static_cast<std::uint64_t>(out.size()) >= budget.max_extensions)
      throw CapError("linear extension cap exceeded (" +
                     std::to_string(budget.max_extensions) + ")");
    out.emplace_back(ext.begin(), ext.end());
    return true;
  });
  return out;
}

std::vector<int> canonical_extension(const Poset& p) {
  const int n = p.size();
  std::vector<int> indeg(n, 0);
  std::vector<std::vector<int>> up(n);
  for (auto [a, b] : p.covers()) {
    up[a].push_back(b);
    ++indeg[b];
  }
  std::vector<char> placed(n, 0);
  std::vector<int> seq;
  seq.reserve(n);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!placed[v] && indeg[v] == 0) {
        pick = v;
        break;
      }
    assert(pick >= 0);
    placed[pick] = 1;
    seq.push_back(pick);
    for (int u : up[pick]) --indeg[u];
  }
  return seq;
}

NaturalLabeling canonical_labeling(const Poset& p) {
  std::vector<int> ext = canonical_extension(p);
  NaturalLabeling lab;
  lab.label.assign(p.size(), 0);
  for (int t = 0; t < static_cast<int>(ext.size()); ++t) lab.label[ext[t]] = t + 1;
  return lab;
}

std::vector<NaturalLabeling> natural_labelings_sample(const Poset& p, int k) {
  if (k < 1) throw std::invalid_argument("natural_labelings_sample: k must be >= 1");
  std::vector<NaturalLabeling> out;
  for_each_linear_extension(p, [&](std::span<const int> ext) {
    NaturalLabeling lab;
    lab.label.assign(p.size(), 0);
    for (int t = 0; t < static_cast<int>(ext.size()); ++t) lab.label[ext[t]] = t + 1;
    out.push_back(std::move(lab));
    return static_cast<int>(out.size()) < k;
  });
  return out;
}

DescentSet descent_set(std::span<const int> extension, const NaturalLabeling& lab) {
  const int n = static_cast<int>(extension.size());
  if (n > 64)
    throw std::invalid_argument("descent_set: extensions longer than 64 unsupported");
  assert(lab.label.size() == extension.size());
  DescentSet d;
  for (int i = 1; i < n; ++i)
    if (lab.label[extension[i - 1]] > lab.label[extension[i]]) d.add(i);
  return d;
}

namespace {

// names of a, then names of b with '_' appended until free
std::vector<std::string> merged_names(const Poset& a, const Poset& b) {
  std::vector<std::string> names = a.names();
  std::unordered_set<std::string> used(names.begin(), names.end());
  for (const std::string& nb : b.names()) {
    std::string cand = nb;
    while (used.count(cand)) cand += '_';
    used.insert(cand);
    names.push_back(cand);
  }
  return names;
}

std::vector<std::pair<int, int>> union_relations(const Poset& a, const Poset& b) {
  std::vector<std::pair<int, int>> rels;
  for (auto [x, y] : a.covers()) rels.emplace_back(x, y);
  for (auto [x, y] : b.covers()) rels.emplace_back(a.size() + x, a.size() + y);
  return rels;
}

}  // namespace

Poset disjoint_union(const Poset& a, const Poset& b) {
  return Poset(merged_names(a, b), union_relations(a, b));
}

Poset ordinal_sum(const Poset& a, const Poset& b) {
  std::vector<std::pair<int, int>> rels = union_relations(a, b);
  std::vector<int> maxa, minb;
  for (int v = 0; v < a.size(); ++v) {
    bool maximal = true;
    for (int u = 0; u < a.size(); ++u)
      if (a.less(v, u)) maximal = false;
    if (maximal) maxa.push_back(v);
  }
  for (int v : b.minimal_elements()) minb.push_back(a.size() + v);
  for (int x : maxa)
    for (int y : minb) rels.emplace_back(x, y);
  return Poset(merged_names(a, b), rels);
}

Poset chain_poset(int n, const std::string& prefix) {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> rels;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  for (int i = 0; i + 1 < n; ++i) rels.emplace_back(i, i + 1);
  return Poset(std::move(names), rels);
}

Poset antichain_poset(int n, const std::string& prefix) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return Poset(std::move(names), {});
}

std::string to_input_text(const Poset& p) {
  std::string out;
  for (int v = 0; v < p.size(); ++v) {
    out += p.name(v);
    out += '\n';
  }
  for (auto [a, b] : p.covers()) {
    out += p.name(a);
    out += '<';
    out += p.name(b);
    out += '\n';
  }
  return out;
}

AntichainResult max_antichain(const Poset& p) {
  const int n = p.size();
  if (n == 0) return {};
  if (n > 64)
    throw std::invalid_argument("max_antichain supports up to 64 elements");
  std::vector<std::uint64_t> incomp(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && !p.comparable(a, b)) incomp[a] |= std::uint64_t{1} << b;

  int best = 0;
  std::uint64_t bestset = 0;
  // max clique in the incomparability graph; ascending branch order makes the
  // first maximum found (hence the witness) deterministic
  auto rec = [&](auto&& self, std::uint64_t clique, std::uint64_t cand, int sz) -> void {
    if (cand == 0) {
      if (sz > best) {
        best = sz;
        bestset = clique;
      }
      return;
    }
    while (cand != 0) {
      if (sz + std::popcount(cand) <= best) return;
      std::uint64_t vbit = cand & (~cand + 1);
      int v = std::countr_zero(cand);
      cand ^= vbit;
      self(self, clique | vbit, cand & incomp[v], sz + 1);
    }
  };
  std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  rec(rec, 0, full, 0);

  AntichainResult r;
  r.size = best;
  for (std::uint64_t m = bestset; m != 0; m &= m - 1)
    r.witness.push_back(std::countr_zero(m));
  return r;
}

int max_antichain_size(const Poset& p) { return max_antichain(p).size; }

}  // namespace hibi
