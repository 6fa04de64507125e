#include "cca/colour_auts.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace cca
{

namespace
{

constexpr Vertex unset = std::numeric_limits<Vertex>::max();

struct SpanningTree
{
  std::vector<Vertex> order;    ///< breadth-first from vertex 0
  std::vector<Vertex> parent;   ///< parent[v] for v != 0
  std::vector<std::size_t> via; ///< v = s_via[v] * parent[v]
};

/// Breadth-first tree using only the connection-set positions in `allowed`.
SpanningTree spanning_tree(ColouredCayleyGraph const &graph, std::vector<std::size_t> const &allowed)
{
  std::size_t const n = graph.vertex_count();
  SpanningTree tree;
  tree.parent.assign(n, unset);
  tree.via.assign(n, 0);
  std::vector<bool> seen(n, false);
  tree.order.push_back(0);
  seen[0] = true;
  for (std::size_t pos = 0; pos < tree.order.size(); ++pos) {
    Vertex v = tree.order[pos];
    for (std::size_t k : allowed) {
      Vertex w = graph.left_multiply(k, v);
      if (seen[w])
        continue;
      seen[w] = true;
      tree.parent[w] = v;
      tree.via[w] = k;
      tree.order.push_back(w);
    }
  }
  return tree;
}

std::vector<std::size_t> all_positions(ColouredCayleyGraph const &graph)
{
  std::vector<std::size_t> result(graph.valency());
  std::iota(result.begin(), result.end(), std::size_t{0});
  return result;
}

void require_connected(ColouredCayleyGraph const &graph)
{
  if (!graph.is_connected())
    throw InvalidArgument("Cayley graph is disconnected: S does not generate G");
}

/**
 * Individualisation-refinement search for colour-preserving maps. Colour
 * refinement runs on two copies of the graph (source vertices 0..n-1, target
 * vertices n..2n-1) with canonical colour names, so a partial map v -> w is
 * tested by giving v and w the same fresh colour and comparing cell sizes.
 */
class StabilizerSearch
{
public:
  explicit StabilizerSearch(ColouredCayleyGraph const &graph)
  : _graph(graph),
    _tree(spanning_tree(graph, all_positions(graph))),
    _base(graph.vertex_count(), 0)
  {}

  SpanningTree const &tree() const { return _tree; }

  /// True when the committed colouring forces v to be fixed.
  bool fixed(Vertex v) const { return _cell_size[_base[v]] == 1; }

  /// Commits v -> v.
  void fix(Vertex v)
  {
    if (!_cell_size.empty() && fixed(v))
      return;
    _base[v] = *std::max_element(_base.begin(), _base.end()) + 1;
    refine(_base);
    _cell_size.assign(_base.size(), 0);
    for (auto c : _base)
      ++_cell_size[c];
  }

  /// The other image available to the vertex at tree position pos, if any.
  std::optional<Vertex> alternative(std::size_t pos) const
  {
    Vertex v = _tree.order[pos];
    Vertex parent = _tree.parent[v];
    for (std::size_t m : _graph.colour_class(_graph.colour_of(_tree.via[v]))) {
      Vertex w = _graph.left_multiply(m, parent);
      if (w != v)
        return w;
    }
    return std::nullopt;
  }

  /// A map extending the committed colouring with v -> image, if one exists.
  std::optional<VertexMap> find_moving(Vertex v, Vertex image)
  {
    if (_base[v] != _base[image])
      return std::nullopt;
    auto colour = doubled();
    std::uint32_t fresh = static_cast<std::uint32_t>(_base.size());
    colour[v] = fresh;
    colour[_base.size() + image] = fresh;
    _stop_at_first = true;
    _found.clear();
    search(std::move(colour));
    if (_found.empty())
      return std::nullopt;
    return std::move(_found.front());
  }

  /// Every map extending the committed colouring.
  std::vector<VertexMap> enumerate()
  {
    _stop_at_first = false;
    _found.clear();
    search(doubled());
    return std::move(_found);
  }

private:
  ColouredCayleyGraph const &_graph;
  SpanningTree _tree;
  std::vector<std::uint32_t> _base;
  std::vector<std::uint32_t> _cell_size;
  std::vector<VertexMap> _found;
  bool _stop_at_first = false;

  std::vector<std::uint32_t> doubled() const
  {
    std::vector<std::uint32_t> colour(_base);
    colour.insert(colour.end(), _base.begin(), _base.end());
    return colour;
  }

  /**
   * Refines to the coarsest equitable colouring, renaming colours to
   * 0..k-1 by sorted signature. colour.size() is n or 2n; vertex i lives in
   * copy i / n. Returns k.
   */
  std::uint32_t refine(std::vector<std::uint32_t> &colour) const
  {
    std::size_t const n = _graph.vertex_count();
    std::size_t const m = colour.size();
    std::size_t const width = _graph.valency() + 1;
    std::vector<std::uint64_t> sig(m * width);
    std::vector<std::uint64_t> hash(m);
    std::vector<std::uint32_t> idx(m);
    std::size_t cells = 0;
    for (;;) {
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t *row = &sig[i * width];
        row[0] = colour[i];
        std::size_t offset = i / n * n;
        for (std::size_t k = 0; k < _graph.valency(); ++k) {
          Vertex w = _graph.left_multiply(k, static_cast<Vertex>(i - offset));
          row[k + 1] = (std::uint64_t{_graph.colour_of(k)} << 32) | colour[offset + w];
        }
        std::sort(row + 1, row + width);
      }
      for (std::size_t i = 0; i < m; ++i) {
        std::uint64_t h = 0x9e3779b97f4a7c15u;
        for (std::size_t k = 0; k < width; ++k)
          h = (h ^ sig[i * width + k]) * 0x100000001b3u;
        hash[i] = h;
      }
      std::iota(idx.begin(), idx.end(), std::uint32_t{0});
      auto less = [&](std::uint32_t a, std::uint32_t b) {
        if (hash[a] != hash[b])
          return hash[a] < hash[b];
        return std::lexicographical_compare(&sig[a * width], &sig[a * width] + width, &sig[b * width],
                                            &sig[b * width] + width);
      };
      std::sort(idx.begin(), idx.end(), less);
      std::uint32_t rank = 0;
      for (std::size_t j = 0; j < m; ++j) {
        if (j > 0 && less(idx[j - 1], idx[j]))
          ++rank;
        colour[idx[j]] = rank;
      }
      if (rank + 1 == cells)
        return rank + 1;
      cells = rank + 1;
    }
  }

  /// Every edge from v to an assigned vertex keeps its colour under v -> image.
  bool consistent(VertexMap const &alpha, Vertex v, Vertex image) const
  {
    for (std::size_t k = 0; k < _graph.valency(); ++k) {
      Vertex w_image = alpha[_graph.left_multiply(k, v)];
      if (w_image == unset)
        continue;
      auto cls = _graph.colour_class(_graph.colour_of(k));
      bool ok = std::any_of(cls.begin(), cls.end(),
                            [&](std::size_t m) { return _graph.left_multiply(m, image) == w_image; });
      if (!ok)
        return false;
    }
    return true;
  }

  /**
   * Extends the singleton cells along the spanning tree, taking the first
   * image in the right cell that keeps the assigned edges. Cheap, and usually enough to find a
   * map when one exists; nullopt says nothing about existence.
   */
  std::optional<VertexMap> greedy_completion(std::vector<std::uint32_t> const &colour, std::uint32_t cells) const
  {
    std::size_t const n = _graph.vertex_count();
    std::vector<std::size_t> size(cells, 0);
    std::vector<Vertex> target_of(cells, unset);
    for (std::size_t i = 0; i < n; ++i) {
      ++size[colour[i]];
      target_of[colour[n + i]] = static_cast<Vertex>(i);
    }
    VertexMap alpha(n, unset);
    std::vector<bool> used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
      if (size[colour[i]] == 1) {
        alpha[i] = target_of[colour[i]];
        used[alpha[i]] = true;
      }
    }
    for (std::size_t pos = 1; pos < _tree.order.size(); ++pos) {
      Vertex v = _tree.order[pos];
      if (alpha[v] != unset)
        continue;
      Vertex parent_image = alpha[_tree.parent[v]];
      for (std::size_t m : _graph.colour_class(_graph.colour_of(_tree.via[v]))) {
        Vertex w = _graph.left_multiply(m, parent_image);
        if (!used[w] && colour[n + w] == colour[v] && consistent(alpha, v, w)) {
          alpha[v] = w;
          used[w] = true;
          break;
        }
      }
      if (alpha[v] == unset)
        return std::nullopt;
    }
    if (!_graph.is_colour_preserving(alpha))
      return std::nullopt;
    return alpha;
  }

  /// Returns true when the search should stop.
  bool search(std::vector<std::uint32_t> colour)
  {
    std::size_t const n = _graph.vertex_count();
    std::uint32_t cells = refine(colour);
    std::vector<std::size_t> source(cells, 0), target(cells, 0);
    for (std::size_t i = 0; i < n; ++i) {
      ++source[colour[i]];
      ++target[colour[n + i]];
    }
    if (source != target)
      return false;

    std::uint32_t best = cells;
    for (std::uint32_t c = 0; c < cells; ++c)
      if (source[c] > 1 && (best == cells || source[c] < source[best]))
        best = c;
    if (best == cells) {
      std::vector<Vertex> target_of(cells);
      for (std::size_t i = 0; i < n; ++i)
        target_of[colour[n + i]] = static_cast<Vertex>(i);
      VertexMap alpha(n);
      for (std::size_t i = 0; i < n; ++i)
        alpha[i] = target_of[colour[i]];
      if (!_graph.is_colour_preserving(alpha))
        return false;
      _found.push_back(std::move(alpha));
      return _stop_at_first;
    }

    if (_stop_at_first) {
      if (auto alpha = greedy_completion(colour, cells)) {
        _found.push_back(std::move(*alpha));
        return true;
      }
    }

    std::size_t x = 0;
    while (colour[x] != best)
      ++x;
    for (std::size_t y = 0; y < n; ++y) {
      if (colour[n + y] != best)
        continue;
      auto next = colour;
      next[x] = cells;
      next[n + y] = cells;
      if (search(std::move(next)))
        return true;
    }
    return false;
  }
};

bool is_identity_map(VertexMap const &m)
{
  for (Vertex v = 0; v < m.size(); ++v)
    if (m[v] != v)
      return false;
  return true;
}

void identity_first(std::vector<VertexMap> &maps)
{
  auto it = std::find_if(maps.begin(), maps.end(), is_identity_map);
  if (it != maps.end())
    std::rotate(maps.begin(), it, it + 1);
}

std::uint64_t checked_power_of_two(unsigned log2, char const *what)
{
  if (log2 >= 64)
    throw LimitExceeded(std::string(what) + " 2^" + std::to_string(log2) + " does not fit in 64 bits");
  return std::uint64_t{1} << log2;
}

bool all_automorphisms(ColouredCayleyGraph const &graph, std::vector<VertexMap> const &maps)
{
  return std::all_of(maps.begin(), maps.end(),
                     [&](VertexMap const &m) { return is_group_automorphism(graph, m); });
}

} // namespace

std::uint64_t VertexStabilizer::order() const
{
  return checked_power_of_two(log2_order, "stabilizer order");
}

VertexStabilizer stab1(ColouredCayleyGraph const &graph, std::uint64_t enumeration_cap)
{
  require_connected(graph);
  StabilizerSearch search(graph);
  search.fix(0);

  std::optional<std::vector<VertexMap>> elements;
  auto const &order = search.tree().order;
  VertexStabilizer result;
  for (std::size_t pos = 1; pos < order.size(); ++pos) {
    Vertex v = order[pos];
    if (search.fixed(v))
      continue;
    auto other = search.alternative(pos);
    if (other) {
      if (auto moving = search.find_moving(v, *other)) {
        result.base.push_back(v);
        result.generators.push_back(std::move(*moving));
      }
    }
    search.fix(v);
  }
  result.log2_order = static_cast<unsigned>(result.generators.size());

  if (result.log2_order < 64 && result.order() <= enumeration_cap) {
    StabilizerSearch full(graph);
    full.fix(0);
    auto all = full.enumerate();
    if (all.size() != result.order())
      throw Error("stabilizer enumeration found " + std::to_string(all.size()) +
                  " elements but the chain has order " + std::to_string(result.order()));
    identity_first(all);
    result.elements = std::move(all);
  }
  return result;
}

std::vector<VertexMap> stab1_oracle(ColouredCayleyGraph const &graph)
{
  std::size_t const n = graph.vertex_count();
  if (n > 8)
    throw LimitExceeded("stab1_oracle is limited to groups of order <= 8");
  VertexMap map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  std::vector<VertexMap> result;
  do {
    if (graph.is_colour_preserving(map))
      result.push_back(map);
  } while (std::next_permutation(map.begin() + 1, map.end()));
  return result;
}

bool is_group_automorphism(ColouredCayleyGraph const &graph, VertexMap const &map)
{
  if (map.size() != graph.vertex_count() || map[0] != 0)
    return false;
  for (std::size_t k = 0; k < graph.valency(); ++k) {
    Vertex s_image = map[graph.s_vertex(k)];
    auto pos = graph.s_position(s_image);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      Vertex expected = pos ? graph.left_multiply(*pos, map[v]) : graph.multiply(s_image, map[v]);
      if (map[graph.left_multiply(k, v)] != expected)
        return false;
    }
  }
  return true;
}

std::vector<VertexMap> aut_pm1(ColouredCayleyGraph const &graph)
{
  require_connected(graph);

  // colour classes whose representatives generate G, chosen greedily
  std::vector<std::size_t> generating_classes;
  {
    std::vector<Permutation> gens;
    PermutationGroup sub = PermutationGroup::trivial(graph.group().degree());
    for (std::size_t c = 0; c < graph.colour_count() && sub.order() < graph.vertex_count(); ++c) {
      auto const &rep = graph.connection_set()[graph.colour_class(c)[0]];
      if (sub.contains(rep))
        continue;
      gens.push_back(rep);
      sub = PermutationGroup(graph.group().degree(), gens);
      generating_classes.push_back(c);
    }
  }
  std::vector<std::size_t> allowed;
  for (std::size_t c : generating_classes)
    for (std::size_t k : graph.colour_class(c))
      allowed.push_back(k);
  std::sort(allowed.begin(), allowed.end());
  SpanningTree tree = spanning_tree(graph, allowed);

  std::vector<std::size_t> flippable;
  for (std::size_t c : generating_classes)
    if (graph.colour_class(c).size() == 2)
      flippable.push_back(c);

  std::size_t const n = graph.vertex_count();
  std::vector<VertexMap> result;
  std::vector<std::size_t> image_of(graph.valency());
  for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << flippable.size()); ++signs) {
    std::iota(image_of.begin(), image_of.end(), std::size_t{0});
    for (std::size_t b = 0; b < flippable.size(); ++b) {
      if ((signs >> b) & 1u)
        for (std::size_t k : graph.colour_class(flippable[b]))
          image_of[k] = graph.s_inverse(k);
    }

    VertexMap phi(n, unset);
    phi[0] = 0;
    for (std::size_t pos = 1; pos < tree.order.size(); ++pos) {
      Vertex v = tree.order[pos];
      phi[v] = graph.left_multiply(image_of[tree.via[v]], phi[tree.parent[v]]);
    }

    std::vector<bool> hit(n, false);
    bool ok = true;
    for (Vertex v = 0; v < n && ok; ++v) {
      ok = !hit[phi[v]];
      hit[phi[v]] = true;
    }
    // every s must go to s or s^-1, and the map must be a homomorphism
    for (std::size_t k = 0; k < graph.valency() && ok; ++k) {
      Vertex img = phi[graph.s_vertex(k)];
      if (img == graph.s_vertex(k))
        image_of[k] = k;
      else if (img == graph.s_vertex(graph.s_inverse(k)))
        image_of[k] = graph.s_inverse(k);
      else
        ok = false;
      for (Vertex v = 0; v < n && ok; ++v)
        ok = phi[graph.left_multiply(k, v)] == graph.left_multiply(image_of[k], phi[v]);
    }
    if (ok)
      result.push_back(std::move(phi));
  }
  return result;
}

std::vector<VertexMap> aut_pm1(PermutationGroup const &group, std::span<Permutation const> s,
                               Limits const &limits)
{
  return aut_pm1(ColouredCayleyGraph::build(group, s, limits));
}

std::uint64_t CCAVerdict::stab1_order() const
{
  return checked_power_of_two(stab1_log2, "stabilizer order");
}

std::uint64_t CCAVerdict::autc_order() const
{
  std::uint64_t stab = stab1_order();
  if (stab > std::numeric_limits<std::uint64_t>::max() / std::max<std::uint64_t>(group_order, 1))
    throw LimitExceeded("|Aut_c| does not fit in 64 bits");
  return group_order * stab;
}

CCAVerdict is_cca_graph(ColouredCayleyGraph const &graph)
{
  CCAVerdict verdict;
  auto stab = stab1(graph, 0);
  verdict.group_order = graph.vertex_count();
  verdict.stab1_log2 = stab.log2_order;
  for (auto const &alpha : stab.generators) {
    if (!is_group_automorphism(graph, alpha)) {
      verdict.witness = alpha;
      break;
    }
  }
  verdict.is_cca = !verdict.witness;

  auto pm1 = aut_pm1(graph);
  verdict.aut_pm1_order = pm1.size();
  for (auto const &phi : pm1)
    if (!graph.is_colour_preserving(phi))
      throw Error("an element of Aut_{+-1} is not colour-preserving");
  bool orders_match = stab.log2_order < 64 && pm1.size() == stab.order();
  if (orders_match != verdict.is_cca)
    throw Error("|Aut_{+-1}| = " + std::to_string(pm1.size()) + " and |stab1| = 2^" +
                std::to_string(stab.log2_order) + " contradict the CCA test on the strong generators");
  return verdict;
}

nlohmann::ordered_json to_json(CCAVerdict const &verdict)
{
  nlohmann::ordered_json j;
  j["stab1_log2"] = verdict.stab1_log2;
  if (verdict.stab1_log2 < 64 - std::bit_width(verdict.group_order)) {
    j["stab1_order"] = verdict.stab1_order();
    j["autc_order"] = verdict.autc_order();
  }
  j["aut_pm1_order"] = verdict.aut_pm1_order;
  j["is_cca"] = verdict.is_cca;
  if (verdict.witness)
    j["witness_alpha"] = *verdict.witness;
  return j;
}

char const *to_string(GroupVerdict v)
{
  switch (v) {
  case GroupVerdict::cca:
    return "CCA";
  case GroupVerdict::non_cca:
    return "non-CCA";
  case GroupVerdict::unknown:
    break;
  }
  return "unknown";
}

namespace
{

struct BlockResult
{
  std::uint64_t checked = 0;
  std::uint64_t connected = 0;
  std::optional<std::uint64_t> witness;
};

class SubsetScanner
{
public:
  explicit SubsetScanner(ColouredCayleyGraph const &full) : _full(full) {}

  /// Connection-set positions selected by a mask of colour classes.
  std::vector<std::size_t> positions(std::uint64_t mask) const
  {
    std::vector<std::size_t> result;
    for (std::size_t c = 0; c < _full.colour_count(); ++c)
      if ((mask >> c) & 1u)
        for (std::size_t k : _full.colour_class(c))
          result.push_back(k);
    return result;
  }

  bool connected(std::vector<std::size_t> const &pos) const
  {
    std::size_t const n = _full.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{0};
    seen[0] = true;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      for (std::size_t k : pos) {
        Vertex w = _full.left_multiply(k, queue[i]);
        if (!seen[w]) {
          seen[w] = true;
          queue.push_back(w);
        }
      }
    }
    return queue.size() == n;
  }

  BlockResult scan(std::uint64_t first, std::uint64_t last) const
  {
    BlockResult r;
    for (std::uint64_t mask = first; mask < last; ++mask) {
      ++r.checked;
      auto pos = positions(mask);
      if (!connected(pos))
        continue;
      ++r.connected;
      auto graph = _full.restrict_to(pos);
      if (!all_automorphisms(graph, stab1(graph, 0).generators)) {
        r.witness = mask;
        break;
      }
    }
    return r;
  }

private:
  ColouredCayleyGraph const &_full;
};

} // namespace

GroupCCAResult is_cca_group_exhaustive(PermutationGroup const &group,
                                       ExhaustiveOptions const &options)
{
  auto elements = group.elements(options.limits.graph);
  std::vector<Permutation> nontrivial(elements.begin() + 1, elements.end());
  auto full = ColouredCayleyGraph::build(group, nontrivial, options.limits);
  SubsetScanner scanner(full);

  GroupCCAResult result;
  std::size_t const k = full.colour_count();
  if (k >= 63)
    throw LimitExceeded("too many inverse-pair classes for exhaustive search");
  result.candidate_sets = std::uint64_t{1} << k;
  std::uint64_t const total = std::min(result.candidate_sets, options.budget);

  std::uint64_t const block = 512;
  std::uint64_t const block_count = (total + block - 1) / block;
  std::vector<BlockResult> blocks(block_count);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
  std::mutex error_mutex;
  std::exception_ptr error;

  auto worker = [&] {
    try {
      for (;;) {
        std::uint64_t b = next.fetch_add(1);
        if (b >= block_count || b * block > best.load())
          return;
        BlockResult r = scanner.scan(b * block, std::min(total, (b + 1) * block));
        if (r.witness) {
          std::uint64_t cur = best.load();
          while (*r.witness < cur && !best.compare_exchange_weak(cur, *r.witness)) {
          }
        }
        blocks[b] = r;
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error)
        error = std::current_exception();
    }
  };

  unsigned const threads = std::max(1u, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }
  if (error)
    std::rethrow_exception(error);

  // merge in mask order; blocks after the first witness are ignored
  for (auto const &r : blocks) {
    result.sets_checked += r.checked;
    result.connected_sets += r.connected;
    if (r.witness) {
      auto pos = scanner.positions(*r.witness);
      auto graph = full.restrict_to(pos);
      result.verdict = GroupVerdict::non_cca;
      result.witness_s = std::vector<Permutation>(graph.connection_set().begin(),
                                                  graph.connection_set().end());
      result.witness_verdict = is_cca_graph(graph);
      return result;
    }
  }
  result.verdict = total == result.candidate_sets ? GroupVerdict::cca : GroupVerdict::unknown;
  return result;
}

} // namespace cca
