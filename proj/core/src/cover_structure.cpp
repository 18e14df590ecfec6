#include "wog/cover_structure.hpp"

#include <algorithm>
#include <map>

#include "wog/covers.hpp"
#include "wog/error.hpp"
#include "wog/linear_quotients.hpp"
#include "wog/polarization.hpp"

namespace wog {

namespace {

struct Pair {
  VertexId x, y;
  std::vector<VertexSet> xcopy;  // bit of x_{i,j} at index j - 1
  std::vector<VertexSet> ycopy;
};

std::vector<std::uint32_t> copies_in(const std::vector<VertexSet>& bits, VertexSet c) {
  std::vector<std::uint32_t> out;
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (c & bits[j]) out.push_back(static_cast<std::uint32_t>(j + 1));
  return out;
}

}  // namespace

CoverStructureReport check_cover_structure(const WeightedOrientedGraph& d, std::size_t cap) {
  auto matching = find_leaf_perfect_matching(underlying_graph(d));
  if (!matching) throw InputError("graph has no leaf perfect matching");
  const auto violations = tail_weight_violations(d, *matching);
  if (violations.size() == 1) {
    auto it = std::find(matching->pairs.begin(), matching->pairs.end(), violations.front());
    std::rotate(matching->pairs.begin(), it, it + 1);
  }
  const bool cm = violations.empty();
  const bool single = violations.size() == 1;

  const auto pol = polarize(edge_ideal(d));
  const auto h = hypergraph_of(pol.ideal());
  const auto covers = minimal_vertex_covers(h, cap);
  const auto names = pol.ideal().variables();
  const std::size_t r = matching->pairs.size();

  std::vector<Pair> pairs;
  VertexSet first_copies = 0;
  for (const auto& [x, y] : matching->pairs) {
    Pair p{x, y, {}, {}};
    for (std::uint32_t j = 1; j <= pol.copies(x); ++j) p.xcopy.push_back(singleton(*pol.index_of(x, j)));
    for (std::uint32_t j = 1; j <= pol.copies(y); ++j) p.ycopy.push_back(singleton(*pol.index_of(y, j)));
    first_copies |= p.xcopy.front();
    pairs.push_back(std::move(p));
  }

  CoverStructureReport report;
  report.covers = covers.size();
  auto fail = [&](const std::string& what, VertexSet c) {
    report.violations.push_back(what + " at " + render_set(c, names));
  };
  auto expect = [&](bool ok, const std::string& what, VertexSet c) {
    ++report.checks;
    if (!ok) fail(what, c);
  };
  auto minimal = [&](VertexSet c) { return is_minimal_vertex_cover(h, c); };

  std::map<std::pair<VertexSet, VertexSet>, VertexSet> first_by_rest;
  VertexSet later_x = 0, all_y = 0;
  for (const auto& p : pairs) {
    for (std::size_t j = 1; j < p.xcopy.size(); ++j) later_x |= p.xcopy[j];
    for (auto b : p.ycopy) all_y |= b;
  }

  for (auto c : covers) {
    const auto size = static_cast<std::size_t>(set_size(c));
    for (std::size_t i = 0; i < r; ++i) {
      const auto& p = pairs[i];
      const auto xs = copies_in(p.xcopy, c);
      const auto ys = copies_in(p.ycopy, c);
      const bool has_first = !xs.empty() && xs.front() == 1;
      const std::size_t later = xs.size() - (has_first ? 1 : 0);
      const std::string at = " for pair " + d.name(p.x) + "/" + d.name(p.y);

      expect(!xs.empty() || !ys.empty(), "pair untouched" + at, c);
      if (!has_first) expect(later <= 1 && ys.size() <= 1, "several copies of one side" + at, c);

      for (auto j : ys)
        if (j >= 2) expect(minimal((c & ~p.ycopy[j - 1]) | p.ycopy[j - 2]), "y copy move-down" + at, c);
      for (auto j : xs)
        if (j >= 3) expect(minimal((c & ~p.xcopy[j - 1]) | p.xcopy[j - 2]), "x copy move-down" + at, c);

      if (cm) {
        if (!has_first) expect((later == 1) != (ys.size() == 1), "later x copy and y copy both or neither" + at, c);
        for (auto j : xs)
          if (j == 2) expect(minimal((c & ~p.xcopy[1]) | p.xcopy[0]), "x copy move-down" + at, c);
        for (auto k : ys)
          for (std::size_t j = 0; j < p.xcopy.size(); ++j)
            expect(minimal((c & ~p.ycopy[k - 1]) | p.xcopy[j]), "y to x swap" + at, c);
      }
      if (single && i != 0 && !has_first)
        expect((later == 1) != (ys.size() == 1), "later x copy and y copy both or neither" + at, c);
    }

    if (cm) {
      expect(size == r, "cover size differs from pair count", c);
      const auto key = std::make_pair(c & later_x, c & all_y);
      auto [it, inserted] = first_by_rest.emplace(key, c & first_copies);
      expect(inserted || it->second == (c & first_copies), "first copies not determined by the rest", c);
    }

    if (single) {
      const auto& p1 = pairs[0];
      bool open_edge_into_first = false;
      for (std::size_t s = 1; s < r; ++s)
        if (d.has_edge(pairs[s].x, p1.x) && !(c & p1.xcopy[0]) && !(c & pairs[s].xcopy[0]))
          open_edge_into_first = true;
      expect(size == r || size == r + 1, "cover size outside r, r+1", c);
      expect((size == r + 1) == open_edge_into_first, "size r+1 not matched by an open edge into x_1", c);
      if (size == r + 1) {
        const auto xs = copies_in(p1.xcopy, c);
        const bool later = std::any_of(xs.begin(), xs.end(), [](auto j) { return j >= 2; });
        expect(later && !copies_in(p1.ycopy, c).empty(), "size r+1 cover lacks x_1 and y_1 copies", c);
      }
    }
  }
  return report;
}

}  // namespace wog
