#include "cooc/filters.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

#include "cooc/errors.hpp"
#include "cooc/matching.hpp"
#include "cooc/utf8.hpp"

namespace cooc {

Mrbd Mrbd::make(const std::vector<std::pair<std::string, std::string>>& entries,
                bool fold_case) {
  Mrbd dict;
  for (const auto& [w1, w2] : entries) {
    std::string k1 = fold_case ? utf8::fold_string(w1) : w1;
    std::string k2 = fold_case ? utf8::fold_string(w2) : w2;
    dict.keys_.insert(k1 + "\t" + k2);
  }
  return dict;
}

bool Mrbd::contains(std::string_view type1, std::string_view type2) const {
  std::string key;
  key.reserve(type1.size() + type2.size() + 1);
  key.append(type1);
  key.push_back('\t');
  key.append(type2);
  return keys_.count(key) > 0;
}

CognateRule make_cognate_rule(double lcsr_threshold, std::size_t min_length) {
  if (!(lcsr_threshold >= 0.0 && lcsr_threshold <= 1.0)) {
    throw CoocError(Errc::bad_config, "LCSR threshold must be in [0,1]");
  }
  return CognateRule{lcsr_threshold, min_length};
}

double lcsr(std::string_view w1, std::string_view w2) {
  const std::u32string a = utf8::decode(w1);
  const std::u32string b = utf8::decode(w2);
  if (a.empty() || b.empty()) return 0.0;

  std::vector<std::uint32_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return static_cast<double>(prev[b.size()]) /
         static_cast<double>(std::max(a.size(), b.size()));
}

FilterSet& FilterSet::add(Filter f) {
  for (const Filter& existing : steps_) {
    if (existing.index() == f.index()) {
      throw CoocError(Errc::duplicate_filter,
                      "each filter kind may appear at most once");
    }
  }
  steps_.push_back(std::move(f));
  return *this;
}

std::vector<Edge> apply_pos(std::span<const Edge> edges,
                            const TokenizedHalf& half1,
                            const TokenizedHalf& half2,
                            const PosCompat& compat) {
  if (!half1.has_pos() || !half2.has_pos()) {
    throw CoocError(Errc::missing_tags,
                    "POS filter requires tags on both halves");
  }
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    if (compat.compatible(*half1.pos_tag(e.first), *half2.pos_tag(e.second))) {
      out.push_back(e);
    }
  }
  return out;
}

namespace {

// Shared exclusive-candidacy machinery; the predicate decides membership in
// the high-confidence subgraph by type pair.
FilterOutcome apply_exclusive_impl(
    std::span<const Edge> edges, const TokenizedHalf& half1,
    const TokenizedHalf& half2,
    const std::function<bool(std::string_view, std::string_view)>& predicate) {
  // Memoized per type pair: many edges share the same pair.
  std::unordered_map<std::uint64_t, bool> memo;
  auto satisfied = [&](const Edge& e) {
    const TypeId t1 = half1.token(e.first).type;
    const TypeId t2 = half2.token(e.second).type;
    const std::uint64_t key = (static_cast<std::uint64_t>(t1) << 32) | t2;
    auto it = memo.find(key);
    if (it == memo.end()) {
      it = memo.emplace(key, predicate(half1.type_name(t1), half2.type_name(t2)))
               .first;
    }
    return it->second;
  };

  std::vector<Edge> subgraph;
  for (const Edge& e : edges) {
    if (satisfied(e)) subgraph.push_back(e);
  }

  FilterOutcome out;
  if (subgraph.empty()) {
    out.residual.assign(edges.begin(), edges.end());
    return out;
  }

  // Compact the subgraph's endpoints; local ids ascend with token indices,
  // so ordered_matching's augmenting order is lowest-token-index order.
  std::vector<std::uint32_t> left, right;
  for (const Edge& e : subgraph) {
    left.push_back(e.first);
    right.push_back(e.second);
  }
  std::sort(left.begin(), left.end());
  left.erase(std::unique(left.begin(), left.end()), left.end());
  std::sort(right.begin(), right.end());
  right.erase(std::unique(right.begin(), right.end()), right.end());

  auto local = [](const std::vector<std::uint32_t>& ids, std::uint32_t v) {
    return static_cast<std::uint32_t>(
        std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
  };

  std::vector<Edge> local_edges;
  local_edges.reserve(subgraph.size());
  for (const Edge& e : subgraph) {
    local_edges.emplace_back(local(left, e.first), local(right, e.second));
  }

  const Matching m = ordered_matching(left.size(), right.size(), local_edges);

  std::vector<char> matched1(half1.size(), 0), matched2(half2.size(), 0);
  for (std::size_t l = 0; l < left.size(); ++l) {
    if (m.pair_left[l] >= 0) {
      const std::uint32_t tok1 = left[l];
      const std::uint32_t tok2 = right[static_cast<std::size_t>(m.pair_left[l])];
      out.consumed.emplace_back(tok1, tok2);
      matched1[tok1] = 1;
      matched2[tok2] = 1;
    }
  }

  for (const Edge& e : edges) {
    if (!matched1[e.first] && !matched2[e.second]) out.residual.push_back(e);
  }
  return out;
}

}  // namespace

FilterOutcome apply_exclusive(std::span<const Edge> edges,
                              const TokenizedHalf& half1,
                              const TokenizedHalf& half2, const Mrbd& mrbd) {
  return apply_exclusive_impl(edges, half1, half2,
                              [&](std::string_view a, std::string_view b) {
                                return mrbd.contains(a, b);
                              });
}

FilterOutcome apply_exclusive(std::span<const Edge> edges,
                              const TokenizedHalf& half1,
                              const TokenizedHalf& half2,
                              const CognateRule& rule) {
  return apply_exclusive_impl(
      edges, half1, half2, [&](std::string_view a, std::string_view b) {
        return utf8::count(a) >= rule.min_length &&
               utf8::count(b) >= rule.min_length &&
               lcsr(a, b) >= rule.lcsr_threshold;
      });
}

FilterOutcome apply_filter_set(std::vector<Edge> edges,
                               const TokenizedHalf& half1,
                               const TokenizedHalf& half2,
                               const FilterSet& filters) {
  FilterOutcome out;
  out.residual = std::move(edges);
  for (const Filter& step : filters.steps()) {
    std::visit(
        [&](const auto& f) {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, PosCompat>) {
            out.residual = apply_pos(out.residual, half1, half2, f);
          } else {
            FilterOutcome step_out =
                apply_exclusive(out.residual, half1, half2, f);
            out.consumed.insert(out.consumed.end(), step_out.consumed.begin(),
                                step_out.consumed.end());
            out.residual = std::move(step_out.residual);
          }
        },
        step);
  }
  return out;
}

}  // namespace cooc
