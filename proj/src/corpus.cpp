#include "cooc/corpus.hpp"

#include <algorithm>

#include "cooc/errors.hpp"
#include "cooc/utf8.hpp"

namespace cooc {

TypeId TokenizedHalf::intern(std::string_view surface) {
  std::string key = fold_case_ ? utf8::fold_string(surface) : std::string(surface);
  auto it = type_ids_.find(key);
  if (it != type_ids_.end()) return it->second;
  const TypeId id = static_cast<TypeId>(types_.size());
  types_.push_back(key);
  type_ids_.emplace(std::move(key), id);
  return id;
}

std::optional<TypeId> TokenizedHalf::find_type(std::string_view surface) const {
  auto it = type_ids_.find(std::string(surface));
  if (it == type_ids_.end()) return std::nullopt;
  return it->second;
}

void TokenizedHalf::finish(std::optional<std::size_t> total_length,
                           std::optional<std::uint32_t> segment_count) {
  if (segment_count) {
    segment_count_ = *segment_count;
  } else {
    segment_count_ = tokens_.empty() ? 0 : tokens_.back().segment + 1;
  }
  if (total_length) {
    char_length_ = *total_length;
  } else if (!tokens_.empty()) {
    char_length_ = std::max(char_length_, tokens_.back().end);
  }

  segment_ranges_.assign(segment_count_, {0, 0});
  std::uint32_t i = 0;
  for (std::uint32_t seg = 0; seg < segment_count_; ++seg) {
    const std::uint32_t first = i;
    while (i < tokens_.size() && tokens_[i].segment == seg) ++i;
    segment_ranges_[seg] = {first, i};
  }
}

std::pair<std::uint32_t, std::uint32_t> TokenizedHalf::segment_tokens(
    std::uint32_t seg) const {
  if (seg >= segment_ranges_.size()) {
    throw CoocError(Errc::segment_out_of_range,
                    "segment " + std::to_string(seg) + " out of range");
  }
  return segment_ranges_[seg];
}

TokenizedHalf TokenizedHalf::tokenize(std::string_view text, bool fold_case) {
  TokenizedHalf half;
  half.fold_case_ = fold_case;

  const std::u32string cps = utf8::decode(text);
  half.char_length_ = cps.size();

  std::uint32_t segment = 0;
  std::size_t i = 0;
  while (i < cps.size()) {
    const char32_t c = cps[i];
    if (c == U'\n') {
      ++segment;
      ++i;
      continue;
    }
    if (utf8::is_space(c)) {
      ++i;
      continue;
    }
    const std::size_t begin = i;
    while (i < cps.size() && !utf8::is_space(cps[i])) ++i;
    Token tok;
    tok.begin = begin;
    tok.end = i;
    tok.index = static_cast<std::uint32_t>(half.tokens_.size());
    tok.segment = segment;
    tok.type = half.intern(utf8::encode(
        std::u32string_view(cps.data() + begin, i - begin)));
    half.tokens_.push_back(tok);
  }

  // Line count: a trailing newline closes the last segment instead of
  // opening an empty one; empty input has none.
  std::uint32_t segments = 0;
  if (!cps.empty()) {
    segments = segment + (cps.back() == U'\n' ? 0 : 1);
  }
  half.finish(cps.size(), segments);
  return half;
}

TokenizedHalf TokenizedHalf::from_records(
    const std::vector<PretokRecord>& records, bool fold_case,
    std::optional<std::size_t> total_length,
    std::optional<std::uint32_t> segment_count) {
  TokenizedHalf half;
  half.fold_case_ = fold_case;

  for (std::size_t i = 0; i < records.size(); ++i) {
    const PretokRecord& r = records[i];
    if (r.begin >= r.end) {
      throw CoocError(Errc::bad_input,
                      "token span must satisfy start < end", i);
    }
    const std::uint32_t seg = r.segment.value_or(0);
    if (!half.tokens_.empty()) {
      const Token& prev = half.tokens_.back();
      if (r.begin < prev.begin) {
        throw CoocError(Errc::non_monotonic_spans,
                        "token spans must be increasing", i);
      }
      if (r.begin < prev.end) {
        throw CoocError(Errc::overlapping_spans,
                        "token span overlaps its predecessor", i);
      }
      if (seg < prev.segment) {
        throw CoocError(Errc::non_monotonic_spans,
                        "segment indices must be nondecreasing", i);
      }
    }
    if (segment_count && seg >= *segment_count) {
      throw CoocError(Errc::segment_out_of_range,
                      "token segment " + std::to_string(seg) +
                          " >= segment count " + std::to_string(*segment_count),
                      i);
    }
    Token tok;
    tok.begin = r.begin;
    tok.end = r.end;
    tok.index = static_cast<std::uint32_t>(half.tokens_.size());
    tok.segment = seg;
    tok.type = half.intern(r.token);
    half.tokens_.push_back(tok);
  }

  if (total_length && !half.tokens_.empty() &&
      half.tokens_.back().end > *total_length) {
    throw CoocError(Errc::bad_input, "total length shorter than last span");
  }
  half.finish(total_length, segment_count);
  return half;
}

TokenizedHalf TokenizedHalf::with_pos(std::vector<std::string> tags) const {
  if (tags.size() != tokens_.size()) {
    throw CoocError(Errc::length_mismatch,
                    "got " + std::to_string(tags.size()) + " tags for " +
                        std::to_string(tokens_.size()) + " tokens");
  }
  TokenizedHalf out = *this;
  out.pos_tags_ = std::move(tags);
  return out;
}

SegmentAlignment SegmentAlignment::load(std::vector<AlignBlock> blocks,
                                        const TokenizedHalf& half1,
                                        const TokenizedHalf& half2) {
  SegmentAlignment out;
  out.block_of_1_.assign(half1.segment_count(), -1);
  out.block_of_2_.assign(half2.segment_count(), -1);

  auto check_side = [&](std::vector<std::uint32_t>& segs, std::uint32_t limit,
                        std::vector<std::int32_t>& owner, std::size_t block_idx,
                        const char* side) {
    if (segs.empty()) {
      throw CoocError(Errc::empty_block_side,
                      std::string("block has no ") + side + " segments",
                      block_idx);
    }
    std::sort(segs.begin(), segs.end());
    segs.erase(std::unique(segs.begin(), segs.end()), segs.end());
    if (segs.back() - segs.front() + 1 != segs.size()) {
      throw CoocError(Errc::bad_input,
                      std::string(side) + " segments are not a contiguous run",
                      block_idx);
    }
    for (std::uint32_t s : segs) {
      if (s >= limit) {
        throw CoocError(Errc::segment_out_of_range,
                        std::string(side) + " segment " + std::to_string(s) +
                            " out of range (have " + std::to_string(limit) + ")",
                        block_idx);
      }
      if (owner[s] >= 0) {
        throw CoocError(Errc::overlapping_blocks,
                        std::string(side) + " segment " + std::to_string(s) +
                            " appears in more than one block",
                        block_idx);
      }
      owner[s] = static_cast<std::int32_t>(block_idx);
    }
  };

  for (std::size_t b = 0; b < blocks.size(); ++b) {
    check_side(blocks[b].side1, half1.segment_count(), out.block_of_1_, b, "side-1");
    check_side(blocks[b].side2, half2.segment_count(), out.block_of_2_, b, "side-2");
    if (b > 0) {
      const AlignBlock& prev = blocks[b - 1];
      if (blocks[b].side1.front() < prev.side1.back() ||
          blocks[b].side2.front() < prev.side2.back()) {
        throw CoocError(Errc::non_monotonic_blocks,
                        "block is not after its predecessor on both sides", b);
      }
    }
  }
  out.blocks_ = std::move(blocks);
  return out;
}

}  // namespace cooc
