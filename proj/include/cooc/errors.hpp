#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace cooc {

// Every recoverable failure in the library carries one of these kinds so
// callers (the CLI in particular) can map it to an exit class without
// string-matching messages.
enum class Errc {
  // geometry
  non_monotonic_map,
  out_of_bounds,
  // corpus
  overlapping_spans,
  non_monotonic_spans,
  overlapping_blocks,
  non_monotonic_blocks,
  segment_out_of_range,
  empty_block_side,
  length_mismatch,
  invalid_utf8,
  // filters
  missing_tags,
  duplicate_filter,
  // oracle
  too_large,
  isolated_vertex,
  // generic
  bad_input,
  bad_config,
};

const char* errc_name(Errc kind);

class CoocError : public std::runtime_error {
 public:
  CoocError(Errc kind, std::string msg,
            std::optional<std::size_t> input_index = std::nullopt)
      : std::runtime_error(std::move(msg)),
        kind_(kind),
        input_index_(input_index) {}

  Errc kind() const noexcept { return kind_; }

  // 0-based position of the offending record in the caller's input
  // sequence, when the failure is attributable to one record. File loaders
  // use it to report line numbers.
  const std::optional<std::size_t>& input_index() const noexcept {
    return input_index_;
  }

 private:
  Errc kind_;
  std::optional<std::size_t> input_index_;
};

// A CoocError pinned to a file location. line is 1-based.
class ParseError : public CoocError {
 public:
  ParseError(Errc kind, std::string file, std::size_t line, std::string msg)
      : CoocError(kind, file + ":" + std::to_string(line) + ": " + msg),
        file_(std::move(file)),
        line_(line) {}

  const std::string& file() const noexcept { return file_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

}  // namespace cooc
