#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "cooc/corpus.hpp"
#include "cooc/counting.hpp"
#include "cooc/filters.hpp"
#include "cooc/geometry.hpp"

namespace cooc::io {

// Whole-file read; throws CoocError(bad_input) when unreadable.
std::string read_file(const std::filesystem::path& path);

// read_file + tokenize, reporting malformed UTF-8 as ParseError with the
// offending line.
TokenizedHalf load_text_file(const std::filesystem::path& path, bool fold_case);

// Writes via a temporary file in the same directory, renamed into place on
// success, so no partial output is left behind on failure.
void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content);

// Anchor file: one `x<TAB>y` pair of nonnegative integers (axis units) per
// line; `#` lines are comments; blank lines are skipped. Validation
// failures are reported as ParseError with the offending line.
BitextMap load_map_file(const std::filesystem::path& path, BitextSpace space);

// Pretokenized file: `token<TAB>start<TAB>end[<TAB>segment]` per line.
// `#` lines are skipped; a `# length=N segments=M` header (written by
// serialize_pretokenized) restores trailing-whitespace length and trailing
// empty segments.
TokenizedHalf load_pretokenized_file(const std::filesystem::path& path,
                                     bool fold_case);
TokenizedHalf parse_pretokenized(std::string_view text, bool fold_case,
                                 const std::string& file_label = "<string>");
std::string serialize_pretokenized(const TokenizedHalf& half);

// Alignment file: one block per line, `i,j,...<TAB>k,l,...` with 0-based
// segment indices. An empty side is written `-` and rejected: both sides
// must be nonempty.
SegmentAlignment load_alignment_file(const std::filesystem::path& path,
                                     const TokenizedHalf& half1,
                                     const TokenizedHalf& half2);

// POS file: whitespace-separated tags, one line per segment, token-parallel
// to the half. Returns the flat token-parallel tag list.
std::vector<std::string> load_pos_file(const std::filesystem::path& path,
                                       const TokenizedHalf& half);

// MRBD file: `word1<TAB>word2` per line; `#` lines are comments.
Mrbd load_mrbd_file(const std::filesystem::path& path, bool fold_case);

// POS compatibility file: `tag1<TAB>tag2` per line. An absent file means
// identity compatibility; this loader only handles present files.
PosCompat load_pos_compat_file(const std::filesystem::path& path);

// Output table: `u<TAB>v<TAB>count` per line in table order.
std::string format_table_tsv(const CoocTable& table);

}  // namespace cooc::io
