#pragma once
//
// Backtracking enumeration of simplicial maps between finite truncated
// simplicial sets.
//
// Simplices of the source are visited in dimension order.  A degenerate
// simplex has its image forced by any degeneracy that hits it; all such
// representations must agree.  A nondegenerate simplex ranges over target
// simplices whose faces match the images already chosen for its own faces.
// Every emitted assignment therefore commutes with all face and degeneracy
// maps inside the source truncation.
//

#include <cstddef>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "simpdisc/error.hpp"
#include "simpdisc/sset.hpp"

namespace simpdisc {

struct SearchLimits {
  /// Stop after this many solutions.
  std::size_t max_results = std::numeric_limits<std::size_t>::max();
  /// Candidate placements tried before giving up with BoundExceeded.
  std::size_t node_budget = 50'000'000;
};

/// Restricts the image of a source simplex.  Returning false prunes.
using ImageFilter = std::function<bool(int dim, int idx, int image)>;

using Assignment = std::vector<std::vector<int>>;

namespace detail {

class MapSearch {
 public:
  MapSearch(const SimplicialSet& src, const SimplicialSet& dst, const ImageFilter& allow,
            SearchLimits limits)
      : src_(src), dst_(dst), allow_(allow), limits_(limits) {
    if (dst.trunc_dim() < src.trunc_dim())
      throw InputError("map search: target truncated below source");
    const int top = src.trunc_dim();
    a_.resize(static_cast<std::size_t>(top) + 1);
    preimages_.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 0; n <= top; ++n) {
      a_[static_cast<std::size_t>(n)].assign(src.count(n), -1);
      preimages_[static_cast<std::size_t>(n)].resize(src.count(n));
      for (int x = 0; x < static_cast<int>(src.count(n)); ++x) order_.push_back({n, x});
    }
    for (int n = 0; n < top; ++n)
      for (int y = 0; y < static_cast<int>(src.count(n)); ++y)
        for (int i = 0; i <= n; ++i)
          preimages_[static_cast<std::size_t>(n) + 1][static_cast<std::size_t>(src.degeneracy(n, y, i))]
              .push_back({i, y});
    by_faces_.resize(static_cast<std::size_t>(top) + 1);
    for (int n = 1; n <= top; ++n)
      for (int c = 0; c < static_cast<int>(dst.count(n)); ++c) {
        std::vector<int> key;
        for (int i = 0; i <= n; ++i) key.push_back(dst.face(n, c, i));
        by_faces_[static_cast<std::size_t>(n)][key].push_back(c);
      }
    for (int c = 0; c < static_cast<int>(dst.count(0)); ++c) vertices_.push_back(c);
  }

  template <class Visitor>
  std::size_t run(Visitor&& visit) {
    found_ = 0;
    stop_ = false;
    step(0, visit);
    return found_;
  }

 private:
  template <class Visitor>
  void step(std::size_t pos, Visitor& visit) {
    if (stop_) return;
    if (pos == order_.size()) {
      ++found_;
      if (!visit(static_cast<const Assignment&>(a_)) || found_ >= limits_.max_results) stop_ = true;
      return;
    }
    const auto [n, x] = order_[pos];
    auto& slot = a_[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
    const auto& pre = preimages_[static_cast<std::size_t>(n)][static_cast<std::size_t>(x)];
    if (!pre.empty()) {
      const auto [i0, y0] = pre.front();
      const int img = dst_.degeneracy(n - 1, a_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(y0)], i0);
      for (const auto& [i, y] : pre)
        if (dst_.degeneracy(n - 1, a_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(y)], i) != img)
          return;
      if (!try_place(n, x, img)) return;
      slot = img;
      step(pos + 1, visit);
      slot = -1;
      return;
    }
    const std::vector<int>* cands = &vertices_;
    if (n >= 1) {
      std::vector<int> key;
      for (int i = 0; i <= n; ++i)
        key.push_back(a_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(src_.face(n, x, i))]);
      auto it = by_faces_[static_cast<std::size_t>(n)].find(key);
      if (it == by_faces_[static_cast<std::size_t>(n)].end()) return;
      cands = &it->second;
    }
    for (int c : *cands) {
      if (stop_) return;
      if (!try_place(n, x, c)) continue;
      slot = c;
      step(pos + 1, visit);
      slot = -1;
    }
  }

  bool try_place(int n, int x, int img) {
    if (++nodes_ > limits_.node_budget)
      throw BoundExceeded("map search: node budget of " + std::to_string(limits_.node_budget) +
                          " exceeded");
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        if (dst_.face(n, img, i) !=
            a_[static_cast<std::size_t>(n) - 1][static_cast<std::size_t>(src_.face(n, x, i))])
          return false;
    return !allow_ || allow_(n, x, img);
  }

  const SimplicialSet& src_;
  const SimplicialSet& dst_;
  const ImageFilter& allow_;
  SearchLimits limits_;
  Assignment a_;
  std::vector<std::pair<int, int>> order_;
  std::vector<std::vector<std::vector<std::pair<int, int>>>> preimages_;
  std::vector<std::map<std::vector<int>, std::vector<int>>> by_faces_;
  std::vector<int> vertices_;
  std::size_t nodes_ = 0;
  std::size_t found_ = 0;
  bool stop_ = false;
};

}  // namespace detail

/// Calls `visit(assignment)` for every simplicial map src -> dst admitted by
/// `allow`.  The visitor returns false to stop early.  Returns the number of
/// maps visited.
template <class Visitor>
std::size_t for_each_map(const SimplicialSet& src, const SimplicialSet& dst, const ImageFilter& allow,
                         Visitor&& visit, SearchLimits limits = {}) {
  detail::MapSearch search(src, dst, allow, limits);
  return search.run(visit);
}

inline std::size_t count_maps(const SimplicialSet& src, const SimplicialSet& dst,
                              const ImageFilter& allow = {}, SearchLimits limits = {}) {
  return for_each_map(src, dst, allow, [](const Assignment&) { return true; }, limits);
}

inline std::vector<SimplicialMap> all_maps(const SSetPtr& src, const SSetPtr& dst,
                                           const ImageFilter& allow = {}, SearchLimits limits = {}) {
  std::vector<SimplicialMap> out;
  for_each_map(*src, *dst, allow, [&](const Assignment& a) {
    out.emplace_back(src, dst, a);
    return true;
  }, limits);
  return out;
}

/// Extends an assignment given on nondegenerate simplices to the unique
/// simplicial map it determines.  `images[n]` maps nondegenerate n-simplex
/// indices of `src` to target indices.  Throws InputError if the data is
/// not compatible with faces.
inline SimplicialMap extend_from_nondegenerate(const SSetPtr& src, const SSetPtr& dst,
                                               const std::vector<std::map<int, int>>& images) {
  ImageFilter allow = [&](int n, int x, int img) {
    if (src->is_degenerate(n, x)) return true;
    if (static_cast<std::size_t>(n) >= images.size()) return false;
    auto it = images[static_cast<std::size_t>(n)].find(x);
    return it != images[static_cast<std::size_t>(n)].end() && it->second == img;
  };
  auto maps = all_maps(src, dst, allow, {.max_results = 1});
  if (maps.empty())
    throw InputError("map data does not define a simplicial map (missing or face-incompatible images)");
  return maps.front();
}

}  // namespace simpdisc
