#include "oracles.hpp"

#include <algorithm>
#include <set>

using namespace qbool;

namespace oracle {

std::size_t dense_rank(std::vector<std::vector<int>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

std::vector<BitVector> atoms(const stone::BooleanRing& r) {
  std::vector<BitVector> out;
  const auto all = r.elements();
  for (const auto& x : all) {
    if (x.none()) continue;
    bool atom = true;
    for (const auto& y : all) {
      auto p = r.mul(x, y);
      if (p.any() && p != x) {
        atom = false;
        break;
      }
    }
    if (atom) out.push_back(x);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::size_t> poincare(std::size_t rank, std::size_t n) {
  std::vector<std::size_t> s(n + 1, 0);
  s[0] = 1;
  for (std::size_t k = 0; k < rank; ++k) {
    std::vector<std::size_t> t(n + 1, 0);  // s * (1 + t + t^2 + ...)
    for (std::size_t i = 0; i <= n; ++i)
      for (std::size_t j = 0; i + j <= n; ++j) t[i + j] += s[i];
    s = t;
  }
  return s;
}

bool is_hom(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Elem>& map) {
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return false;
  return true;
}

std::size_t homs_to_f2(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::size_t count = 0;
  for (std::uint64_t f = 0; f < (std::uint64_t{1} << n); ++f) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a)
      for (Elem b = 0; b < n && ok; ++b)
        ok = (((f >> g.mul(a, b)) ^ (f >> a) ^ (f >> b)) & 1) == 0;
    count += ok;
  }
  return count;
}

std::vector<std::uint64_t> topology(std::size_t n, const std::vector<std::uint64_t>& opens) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  std::set<std::uint64_t> t(opens.begin(), opens.end());
  t.insert(0);
  t.insert(full);
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::uint64_t> cur(t.begin(), t.end());
    for (auto a : cur)
      for (auto b : cur) grew |= t.insert(a | b).second | t.insert(a & b).second;
  }
  return {t.begin(), t.end()};
}

std::vector<std::uint64_t> clopen_atoms(std::size_t n, const std::vector<std::uint64_t>& opens) {
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  auto t = topology(n, opens);
  std::set<std::uint64_t> ts(t.begin(), t.end());
  std::vector<std::uint64_t> clopen;
  for (auto s : t)
    if (s && ts.count(full & ~s)) clopen.push_back(s);
  std::vector<std::uint64_t> out;
  for (auto s : clopen) {
    bool minimal = true;
    for (auto u : clopen)
      if (u != s && (u & s) == u) minimal = false;
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Elem>> exhaustive_lift(const embed::EmbeddingProblem& e) {
  const auto& g = *e.G();
  const auto& b = *e.B();
  const std::size_t n = g.order();
  std::vector<std::vector<Elem>> fibres(n);
  for (Elem x = 0; x < b.order(); ++x)
    for (Elem y = 0; y < n; ++y)
      if (e.alpha(x) == e.phi(y)) fibres[y].push_back(x);
  // normalized: s(1) = 1
  fibres[0] = {0};
  std::vector<std::size_t> choice(n, 0);
  std::vector<Elem> s(n);
  while (true) {
    for (Elem y = 0; y < n; ++y) s[y] = fibres[y][choice[y]];
    if (is_hom(g, b, s)) return s;
    std::size_t k = 0;
    while (k < n && ++choice[k] == fibres[k].size()) choice[k++] = 0;
    if (k == n) return std::nullopt;
  }
}

}  // namespace oracle
