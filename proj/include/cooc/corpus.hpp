#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cooc/geometry.hpp"

namespace cooc {

using TypeId = std::uint32_t;

// One word token. Spans are code-point offsets into the source text; the
// type table lives on the owning TokenizedHalf.
struct Token {
  TypeId type = 0;
  std::size_t begin = 0;  // code points, half-open [begin,end)
  std::size_t end = 0;
  std::uint32_t index = 0;    // position in its half
  std::uint32_t segment = 0;  // line number

  friend bool operator==(const Token&, const Token&) = default;
};

// One half of a bitext: tokens with spans, segment (line) structure, an
// interned word-type table, and optional POS tags. Immutable after load.
class TokenizedHalf {
 public:
  TokenizedHalf() = default;

  // Splits on ASCII whitespace; '\n' additionally ends a segment. A final
  // trailing newline terminates the last segment rather than opening an
  // empty one; empty input has zero segments. If fold_case, the type id is
  // the case-folded form while spans still index the original text.
  static TokenizedHalf tokenize(std::string_view text, bool fold_case = false);

  struct PretokRecord {
    std::string token;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::optional<std::uint32_t> segment;  // absent -> segment 0
  };

  // Same contract as tokenize but trusting caller-supplied boundaries.
  // total_length defaults to the last span end; segment_count to the last
  // segment index + 1 (0 when empty).
  //
  // Throws CoocError: bad_input (begin >= end), overlapping_spans,
  // non_monotonic_spans (decreasing span or segment order),
  // segment_out_of_range (record segment >= explicit segment_count). All
  // carry the offending record index.
  static TokenizedHalf from_records(
      const std::vector<PretokRecord>& records, bool fold_case = false,
      std::optional<std::size_t> total_length = std::nullopt,
      std::optional<std::uint32_t> segment_count = std::nullopt);

  std::size_t size() const noexcept { return tokens_.size(); }
  bool empty() const noexcept { return tokens_.empty(); }
  const Token& token(std::size_t i) const { return tokens_.at(i); }
  const std::vector<Token>& tokens() const noexcept { return tokens_; }

  std::uint32_t segment_count() const noexcept { return segment_count_; }
  // Token index range [first,last) of a segment.
  std::pair<std::uint32_t, std::uint32_t> segment_tokens(std::uint32_t seg) const;

  std::size_t char_length() const noexcept { return char_length_; }
  double length(AxisUnits units) const {
    return units == AxisUnits::characters ? static_cast<double>(char_length_)
                                          : static_cast<double>(tokens_.size());
  }

  // Token coordinate on this half's axis: the span midpoint in character
  // units, index + 0.5 in token units.
  double coordinate(std::size_t i, AxisUnits units) const {
    const Token& t = tokens_.at(i);
    return units == AxisUnits::characters
               ? (static_cast<double>(t.begin) + static_cast<double>(t.end)) / 2.0
               : static_cast<double>(t.index) + 0.5;
  }

  TypeId type_count() const noexcept { return static_cast<TypeId>(types_.size()); }
  const std::string& type_name(TypeId id) const { return types_.at(id); }
  // Type id of an exact (already folded, if applicable) surface form.
  std::optional<TypeId> find_type(std::string_view surface) const;

  bool has_pos() const noexcept { return !pos_tags_.empty() || tokens_.empty(); }
  std::optional<std::string_view> pos_tag(std::size_t i) const {
    if (pos_tags_.empty()) return std::nullopt;
    return std::string_view(pos_tags_.at(i));
  }

  // Returns a copy carrying these tags, token-parallel.
  // Throws CoocError(length_mismatch) unless tags.size() == size().
  TokenizedHalf with_pos(std::vector<std::string> tags) const;

  bool fold_case() const noexcept { return fold_case_; }

  friend bool operator==(const TokenizedHalf& a, const TokenizedHalf& b) {
    return a.tokens_ == b.tokens_ && a.types_ == b.types_ &&
           a.pos_tags_ == b.pos_tags_ && a.segment_count_ == b.segment_count_ &&
           a.char_length_ == b.char_length_ && a.fold_case_ == b.fold_case_;
  }

 private:
  TypeId intern(std::string_view surface);
  void finish(std::optional<std::size_t> total_length,
              std::optional<std::uint32_t> segment_count);

  std::vector<Token> tokens_;
  std::vector<std::string> types_;
  std::unordered_map<std::string, TypeId> type_ids_;
  std::vector<std::string> pos_tags_;  // empty or token-parallel
  std::vector<std::pair<std::uint32_t, std::uint32_t>> segment_ranges_;
  std::uint32_t segment_count_ = 0;
  std::size_t char_length_ = 0;
  bool fold_case_ = false;
};

// One alignment block: a group of side-1 segments asserted to translate a
// group of side-2 segments. Segment lists are sorted, contiguous runs.
struct AlignBlock {
  std::vector<std::uint32_t> side1;
  std::vector<std::uint32_t> side2;
};

// Validated monotonic block structure over the two halves' segments.
// Segments outside every block are unaligned: their tokens co-occur with
// nothing under the boundary model.
class SegmentAlignment {
 public:
  SegmentAlignment() = default;

  // Throws CoocError: empty_block_side, segment_out_of_range,
  // overlapping_blocks (a segment in two blocks), non_monotonic_blocks
  // (later block starts before an earlier one ends, on either side). All
  // carry the offending block's input index.
  static SegmentAlignment load(std::vector<AlignBlock> blocks,
                               const TokenizedHalf& half1,
                               const TokenizedHalf& half2);

  std::size_t block_count() const noexcept { return blocks_.size(); }
  const AlignBlock& block(std::size_t i) const { return blocks_.at(i); }
  const std::vector<AlignBlock>& blocks() const noexcept { return blocks_; }

  // Block id containing a segment, or -1 if unaligned / out of range.
  std::int32_t block_of_side1(std::uint32_t seg) const {
    return seg < block_of_1_.size() ? block_of_1_[seg] : -1;
  }
  std::int32_t block_of_side2(std::uint32_t seg) const {
    return seg < block_of_2_.size() ? block_of_2_[seg] : -1;
  }

 private:
  std::vector<AlignBlock> blocks_;
  std::vector<std::int32_t> block_of_1_;
  std::vector<std::int32_t> block_of_2_;
};

// Per-block occurrence frequencies of one type pair: e = occurrences of u
// in the block's side-1 segments, f = occurrences of v in its side-2
// segments.
struct SegmentPairStats {
  std::uint64_t e = 0;
  std::uint64_t f = 0;
};

}  // namespace cooc
