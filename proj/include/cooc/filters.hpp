#pragma once

#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <variant>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/model.hpp"

namespace cooc {

// POS compatibility: identity on tags, optionally extended with extra
// directional (side-1 tag, side-2 tag) pairs. Non-exclusive: it only
// removes edges, it never consumes tokens.
struct PosCompat {
  std::set<std::pair<std::string, std::string>> extra;

  bool compatible(std::string_view tag1, std::string_view tag2) const {
    return tag1 == tag2 ||
           extra.count({std::string(tag1), std::string(tag2)}) > 0;
  }
};

// Machine-readable bilingual dictionary. Entries are folded with the same
// case setting as tokenization so lookup matches type identity.
class Mrbd {
 public:
  static Mrbd make(const std::vector<std::pair<std::string, std::string>>& entries,
                   bool fold_case);

  bool contains(std::string_view type1, std::string_view type2) const;
  std::size_t size() const noexcept { return keys_.size(); }

 private:
  std::unordered_set<std::string> keys_;  // "type1\ttype2"
};

// Cognate criterion: both words at least min_length code points long and
// LCSR at least the threshold. The 0.58/4 defaults are the conventional
// bitext-literature values; both are configurable.
struct CognateRule {
  double lcsr_threshold = 0.58;
  std::size_t min_length = 4;
};

CognateRule make_cognate_rule(double lcsr_threshold, std::size_t min_length);

// Longest-common-subsequence ratio: LCS length over the longer word's
// length, in code points. 0 when either word is empty.
double lcsr(std::string_view w1, std::string_view w2);

using Filter = std::variant<PosCompat, Mrbd, CognateRule>;

// Ordered filter pipeline; each filter kind may appear at most once.
// Order matters and is the caller's choice: e.g. an MRBD pair with
// incompatible POS tags is consumed under mrbd-then-pos but eliminated
// under pos-then-mrbd.
class FilterSet {
 public:
  FilterSet& add(Filter f);  // throws CoocError(duplicate_filter)

  bool empty() const noexcept { return steps_.empty(); }
  const std::vector<Filter>& steps() const noexcept { return steps_; }

 private:
  std::vector<Filter> steps_;
};

struct FilterOutcome {
  // High-confidence links whose tokens were consumed; each still counts,
  // contributing 1 to its own type pair.
  std::vector<Edge> consumed;
  std::vector<Edge> residual;
};

// Keeps exactly the edges whose endpoint tags are compatible.
// Throws CoocError(missing_tags) when either half lacks tags.
std::vector<Edge> apply_pos(std::span<const Edge> edges,
                            const TokenizedHalf& half1,
                            const TokenizedHalf& half2,
                            const PosCompat& compat);

// Exclusive candidacy: a maximum matching over the subgraph of edges whose
// type pair satisfies the predicate is consumed, and every other edge
// touching a consumed token is dropped:
//   residual = { e : neither endpoint of e is matched }.
// The matching is computed in lowest-token-index augmenting order, so the
// consumed link set is deterministic even when maximum matchings are not
// unique.
FilterOutcome apply_exclusive(std::span<const Edge> edges,
                              const TokenizedHalf& half1,
                              const TokenizedHalf& half2, const Mrbd& mrbd);
FilterOutcome apply_exclusive(std::span<const Edge> edges,
                              const TokenizedHalf& half1,
                              const TokenizedHalf& half2,
                              const CognateRule& rule);

// Runs the pipeline in list order; consumed links accumulate across
// exclusive filters.
FilterOutcome apply_filter_set(std::vector<Edge> edges,
                               const TokenizedHalf& half1,
                               const TokenizedHalf& half2,
                               const FilterSet& filters);

}  // namespace cooc
