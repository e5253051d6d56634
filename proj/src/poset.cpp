#include "cubehull/poset.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "cubehull/hullnum.hpp"

namespace cubehull {

std::vector<std::pair<int, int>> Poset::incomparable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (incomparable(a, b)) out.emplace_back(a, b);
  return out;
}

Poset make_poset(int n, const std::vector<std::pair<int, int>>& less_than) {
  if (n <= 0) throw Error(ErrorKind::input, "poset must have at least one element");
  if (n > kMaxPosetElements)
    throw Error(ErrorKind::bound, "poset exceeds the element cap of " +
                                      std::to_string(kMaxPosetElements));
  Poset p;
  p.n = n;
  p.leq_.assign(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) p.leq_[i][i] = true;
  for (auto [a, b] : less_than) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorKind::input, "element id out of range");
    if (a == b) throw Error(ErrorKind::input, "relation " + std::to_string(a) + " < itself");
    p.leq_[a][b] = true;
  }
  // Warshall closure
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.leq_[i][k])
        for (int j = 0; j < n; ++j)
          if (p.leq_[k][j]) p.leq_[i][j] = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq_[i][j] && p.leq_[j][i])
        throw Error(ErrorKind::input, "cycle through elements " + std::to_string(i) + " and " +
                                          std::to_string(j));
  return p;
}

Poset parse_poset(std::istream& in) {
  std::string line;
  int lineno = 0;
  long n = -1;
  std::vector<std::pair<int, int>> rels;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n)) {
        std::string tok;
        std::istringstream probe(line);
        if (!(probe >> tok))
          continue;
        throw Error(ErrorKind::input,
                    "parse error at line " + std::to_string(lineno) + ": expected element count");
      }
      continue;
    }
    long a, b;
    if (!(ls >> a)) continue;
    if (!(ls >> b))
      throw Error(ErrorKind::input,
                  "parse error at line " + std::to_string(lineno) + ": expected \"u v\"");
    rels.emplace_back(int(a), int(b));
  }
  if (n < 0) throw Error(ErrorKind::input, "empty input: missing element count");
  return make_poset(int(n), rels);
}

Poset parse_poset(const std::string& text) {
  std::istringstream in(text);
  return parse_poset(in);
}

namespace {

void extend(const Poset& p, std::vector<int>& prefix, std::vector<bool>& placed,
            std::vector<std::vector<int>>& out) {
  if (int(prefix.size()) == p.n) {
    if (long(out.size()) >= kMaxLinearExtensions)
      throw Error(ErrorKind::bound, "linear extension count exceeds the cap");
    out.push_back(prefix);
    return;
  }
  for (int x = 0; x < p.n; ++x) {
    if (placed[x]) continue;
    bool minimal = true;
    for (int y = 0; y < p.n; ++y)
      if (!placed[y] && y != x && p.leq(y, x)) {
        minimal = false;
        break;
      }
    if (!minimal) continue;
    placed[x] = true;
    prefix.push_back(x);
    extend(p, prefix, placed, out);
    prefix.pop_back();
    placed[x] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> linear_extensions(const Poset& p) {
  std::vector<std::vector<int>> out;
  std::vector<int> prefix;
  std::vector<bool> placed(p.n, false);
  extend(p, prefix, placed, out);
  return out;
}

LinearExtensionGraph linext_graph(const Poset& p) {
  LinearExtensionGraph leg;
  auto exts = linear_extensions(p);
  std::map<std::vector<int>, int> id_of;
  for (std::size_t i = 0; i < exts.size(); ++i) id_of[exts[i]] = int(i);

  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < exts.size(); ++i) {
    for (int k = 0; k + 1 < p.n; ++k) {
      int x = exts[i][k], y = exts[i][k + 1];
      if (!p.incomparable(x, y)) continue;
      auto swapped = exts[i];
      std::swap(swapped[k], swapped[k + 1]);
      int j = id_of.at(swapped);
      if (int(i) < j) edges.emplace_back(int(i), j);
    }
  }
  leg.graph = make_graph(int(exts.size()), edges);
  leg.perm_of = std::move(exts);
  leg.dist = all_pairs_distances(leg.graph);

  auto rec = recognize(leg.graph, leg.dist);
  if (!rec.accepted())
    throw Error(ErrorKind::property,
                "linear extension graph failed recognition: " + rec.rejection->describe());
  leg.cuts = std::move(rec.cuts);

  for (auto& cut : leg.cuts.cuts) {
    auto [a, b] = leg.graph.edges[cut.edge_ids.front()];
    int k = 0;
    while (leg.perm_of[a][k] == leg.perm_of[b][k]) ++k;
    int x = leg.perm_of[a][k], y = leg.perm_of[b][k];
    leg.pair_of_cut.emplace_back(std::min(x, y), std::max(x, y));
  }

  // spot check: distance equals the number of discordant element pairs
  int nv = leg.graph.n;
  int stride = std::max(1, nv / 16);
  for (int a = 0; a < nv; a += stride)
    for (int b = a + 1; b < nv; b += stride) {
      std::vector<int> posa(p.n), posb(p.n);
      for (int k = 0; k < p.n; ++k) {
        posa[leg.perm_of[a][k]] = k;
        posb[leg.perm_of[b][k]] = k;
      }
      int discordant = 0;
      for (int x = 0; x < p.n; ++x)
        for (int y = x + 1; y < p.n; ++y)
          if ((posa[x] < posa[y]) != (posb[x] < posb[y])) ++discordant;
      if (leg.dist[a][b] != discordant)
        throw Error(ErrorKind::property,
                    "linear extension graph distance does not match discordant pair count");
    }
  return leg;
}

namespace {

bool is_extension(const Poset& p, const std::vector<int>& perm) {
  if (int(perm.size()) != p.n) return false;
  std::vector<int> pos(p.n, -1);
  for (int k = 0; k < int(perm.size()); ++k) {
    if (perm[k] < 0 || perm[k] >= p.n || pos[perm[k]] >= 0) return false;
    pos[perm[k]] = k;
  }
  for (int a = 0; a < p.n; ++a)
    for (int b = 0; b < p.n; ++b)
      if (a != b && p.leq(a, b) && pos[a] > pos[b]) return false;
  return true;
}

}  // namespace

bool is_realizer(const Poset& p, const std::vector<std::vector<int>>& exts) {
  for (auto& e : exts)
    if (!is_extension(p, e))
      throw Error(ErrorKind::input, "permutation is not a linear extension of the poset");
  std::vector<std::vector<int>> pos(exts.size(), std::vector<int>(p.n));
  for (std::size_t i = 0; i < exts.size(); ++i)
    for (int k = 0; k < p.n; ++k) pos[i][exts[i][k]] = k;
  for (auto [x, y] : p.incomparable_pairs()) {
    bool xy = false, yx = false;
    for (std::size_t i = 0; i < exts.size(); ++i)
      (pos[i][x] < pos[i][y] ? xy : yx) = true;
    if (!(xy && yx)) return false;
  }
  return true;
}

namespace {

bool realizer_of_size(const Poset& p, const std::vector<std::vector<int>>& exts, int k,
                      std::size_t start, std::vector<int>& chosen,
                      std::vector<int>* out) {
  if (k == 0) {
    std::vector<std::vector<int>> sel;
    for (int i : chosen) sel.push_back(exts[i]);
    if (is_realizer(p, sel)) {
      if (out) *out = chosen;
      return true;
    }
    return false;
  }
  for (std::size_t i = start; i + k <= exts.size(); ++i) {
    chosen.push_back(int(i));
    if (realizer_of_size(p, exts, k - 1, i + 1, chosen, out)) {
      chosen.pop_back();
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

}  // namespace

int dimension_bruteforce(const Poset& p) {
  auto exts = linear_extensions(p);
  for (int k = 1; k <= int(exts.size()); ++k) {
    std::vector<int> chosen;
    if (realizer_of_size(p, exts, k, 0, chosen, nullptr)) return k;
  }
  throw Error(ErrorKind::property, "internal: no realizer found");  // unreachable
}

DimensionResult dimension_via_hull(const Poset& p) {
  auto leg = linext_graph(p);
  auto sol = hull_number_exact(leg.graph, leg.cuts);
  DimensionResult res;
  res.dimension = sol.size;
  for (int v = sol.witness.first(); v >= 0; v = sol.witness.next(v))
    res.realizer.push_back(leg.perm_of[v]);
  // dim <= width and width! <= #extensions, so dim! <= #extensions
  long fact = 1;
  for (int k = 2; k <= res.dimension; ++k) fact *= k;
  if (fact > long(leg.perm_of.size()))
    throw Error(ErrorKind::property,
                "dimension factorial exceeds the number of extensions");
  if (!is_realizer(p, res.realizer))
    throw Error(ErrorKind::property, "internal: hull-set witness is not a realizer");
  return res;
}

int width(const Poset& p) {
  // minimum chain cover via bipartite matching (Kuhn's augmenting paths)
  std::vector<int> match_right(p.n, -1);
  std::vector<char> seen;
  // left a can be followed by right b when a < b
  std::function<bool(int)> try_kuhn = [&](int a) -> bool {
    for (int b = 0; b < p.n; ++b) {
      if (a == b || !p.leq(a, b) || seen[b]) continue;
      seen[b] = 1;
      if (match_right[b] < 0 || try_kuhn(match_right[b])) {
        match_right[b] = a;
        return true;
      }
    }
    return false;
  };
  int matching = 0;
  for (int a = 0; a < p.n; ++a) {
    seen.assign(p.n, 0);
    if (try_kuhn(a)) ++matching;
  }
  return p.n - matching;
}

}  // namespace cubehull
