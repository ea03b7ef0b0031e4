#include "cooc/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cooc/errors.hpp"

namespace cooc::io {

namespace {

struct Line {
  std::string text;
  std::size_t number = 0;  // 1-based
};

std::vector<Line> split_lines(std::string_view content) {
  std::vector<Line> lines;
  std::size_t start = 0;
  std::size_t number = 1;
  while (start <= content.size()) {
    if (start == content.size()) {
      break;
    }
    std::size_t end = content.find('\n', start);
    if (end == std::string_view::npos) end = content.size();
    std::string text(content.substr(start, end - start));
    if (!text.empty() && text.back() == '\r') text.pop_back();
    lines.push_back({std::move(text), number});
    ++number;
    start = end + 1;
  }
  return lines;
}

bool is_comment_or_blank(const std::string& s) {
  return s.empty() || s[0] == '#';
}

std::vector<std::string> split_tabs(const std::string& s) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = s.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(s.substr(start));
      break;
    }
    fields.push_back(s.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

std::uint64_t parse_uint(const std::string& field, const std::string& file,
                         std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw ParseError(Errc::bad_input, file, line,
                     std::string("expected a nonnegative integer ") + what +
                         ", got \"" + field + "\"");
  }
  return value;
}

// Rethrows a record-attributable core error as a ParseError carrying the
// record's source line.
template <typename Fn>
auto with_line_context(const std::string& file,
                       const std::vector<std::size_t>& record_lines, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const CoocError& e) {
    if (e.input_index() && *e.input_index() < record_lines.size()) {
      throw ParseError(e.kind(), file, record_lines[*e.input_index()],
                       e.what());
    }
    throw;
  }
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw CoocError(Errc::bad_input, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) {
    throw CoocError(Errc::bad_input, "read failure on " + path.string());
  }
  return std::move(buf).str();
}

TokenizedHalf load_text_file(const std::filesystem::path& path, bool fold_case) {
  const std::string content = read_file(path);
  try {
    return TokenizedHalf::tokenize(content, fold_case);
  } catch (const CoocError& e) {
    if (e.kind() == Errc::invalid_utf8 && e.input_index()) {
      const std::size_t byte_pos = std::min(*e.input_index(), content.size());
      const std::size_t line =
          1 + static_cast<std::size_t>(
                  std::count(content.begin(), content.begin() + byte_pos, '\n'));
      throw ParseError(e.kind(), path.string(), line, e.what());
    }
    throw;
  }
}

void write_file_atomic(const std::filesystem::path& path,
                       std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw CoocError(Errc::bad_input, "cannot write " + tmp.string());
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw CoocError(Errc::bad_input, "write failure on " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw CoocError(Errc::bad_input,
                    "cannot rename " + tmp.string() + ": " + ec.message());
  }
}

BitextMap load_map_file(const std::filesystem::path& path, BitextSpace space) {
  const std::string file = path.string();
  std::vector<AnchorPoint> anchors;
  std::vector<std::size_t> record_lines;
  for (const Line& line : split_lines(read_file(path))) {
    if (is_comment_or_blank(line.text)) continue;
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2) {
      throw ParseError(Errc::bad_input, file, line.number,
                       "expected `x<TAB>y`, got " +
                           std::to_string(fields.size()) + " fields");
    }
    AnchorPoint a;
    a.x = static_cast<double>(parse_uint(fields[0], file, line.number, "x"));
    a.y = static_cast<double>(parse_uint(fields[1], file, line.number, "y"));
    anchors.push_back(a);
    record_lines.push_back(line.number);
  }
  return with_line_context(file, record_lines, [&] {
    return BitextMap::load(std::move(anchors), space);
  });
}

TokenizedHalf parse_pretokenized(std::string_view text, bool fold_case,
                                 const std::string& file_label) {
  std::vector<TokenizedHalf::PretokRecord> records;
  std::vector<std::size_t> record_lines;
  std::optional<std::size_t> total_length;
  std::optional<std::uint32_t> segment_count;

  for (const Line& line : split_lines(text)) {
    if (line.text.empty()) continue;
    if (line.text[0] == '#') {
      std::istringstream hdr(line.text.substr(1));
      std::string kv;
      while (hdr >> kv) {
        const std::size_t eq = kv.find('=');
        if (eq == std::string::npos) continue;
        const std::string key = kv.substr(0, eq);
        const std::string val = kv.substr(eq + 1);
        if (key == "length") {
          total_length = parse_uint(val, file_label, line.number, "length");
        } else if (key == "segments") {
          segment_count = static_cast<std::uint32_t>(
              parse_uint(val, file_label, line.number, "segments"));
        }
      }
      continue;
    }
    const auto fields = split_tabs(line.text);
    if (fields.size() != 3 && fields.size() != 4) {
      throw ParseError(Errc::bad_input, file_label, line.number,
                       "expected `token<TAB>start<TAB>end[<TAB>segment]`");
    }
    TokenizedHalf::PretokRecord r;
    r.token = fields[0];
    r.begin = parse_uint(fields[1], file_label, line.number, "start");
    r.end = parse_uint(fields[2], file_label, line.number, "end");
    if (fields.size() == 4) {
      r.segment = static_cast<std::uint32_t>(
          parse_uint(fields[3], file_label, line.number, "segment"));
    }
    records.push_back(std::move(r));
    record_lines.push_back(line.number);
  }
  return with_line_context(file_label, record_lines, [&] {
    return TokenizedHalf::from_records(records, fold_case, total_length,
                                       segment_count);
  });
}

TokenizedHalf load_pretokenized_file(const std::filesystem::path& path,
                                     bool fold_case) {
  return parse_pretokenized(read_file(path), fold_case, path.string());
}

std::string serialize_pretokenized(const TokenizedHalf& half) {
  std::string out = "# length=" + std::to_string(half.char_length()) +
                    " segments=" + std::to_string(half.segment_count()) + "\n";
  for (const Token& t : half.tokens()) {
    out += half.type_name(t.type);
    out += '\t';
    out += std::to_string(t.begin);
    out += '\t';
    out += std::to_string(t.end);
    out += '\t';
    out += std::to_string(t.segment);
    out += '\n';
  }
  return out;
}

SegmentAlignment load_alignment_file(const std::filesystem::path& path,
                                     const TokenizedHalf& half1,
                                     const TokenizedHalf& half2) {
  const std::string file = path.string();
  std::vector<AlignBlock> blocks;
  std::vector<std::size_t> record_lines;

  auto parse_side = [&](const std::string& field, std::size_t line_no)
      -> std::vector<std::uint32_t> {
    if (field == "-") {
      throw ParseError(Errc::empty_block_side, file, line_no,
                       "both sides of a block must be nonempty");
    }
    std::vector<std::uint32_t> segs;
    std::size_t start = 0;
    while (start <= field.size()) {
      std::size_t comma = field.find(',', start);
      if (comma == std::string::npos) comma = field.size();
      segs.push_back(static_cast<std::uint32_t>(parse_uint(
          field.substr(start, comma - start), file, line_no, "segment index")));
      start = comma + 1;
      if (start == field.size() + 1) break;
    }
    return segs;
  };

  for (const Line& line : split_lines(read_file(path))) {
    if (is_comment_or_blank(line.text)) continue;
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2) {
      throw ParseError(Errc::bad_input, file, line.number,
                       "expected `i,j,...<TAB>k,l,...`");
    }
    AlignBlock block;
    block.side1 = parse_side(fields[0], line.number);
    block.side2 = parse_side(fields[1], line.number);
    blocks.push_back(std::move(block));
    record_lines.push_back(line.number);
  }
  return with_line_context(file, record_lines, [&] {
    return SegmentAlignment::load(std::move(blocks), half1, half2);
  });
}

std::vector<std::string> load_pos_file(const std::filesystem::path& path,
                                       const TokenizedHalf& half) {
  const std::string file = path.string();
  const auto lines = split_lines(read_file(path));
  if (lines.size() != half.segment_count()) {
    throw ParseError(Errc::length_mismatch, file, lines.size(),
                     "POS file has " + std::to_string(lines.size()) +
                         " lines for " + std::to_string(half.segment_count()) +
                         " segments");
  }
  std::vector<std::string> tags;
  tags.reserve(half.size());
  for (std::uint32_t seg = 0; seg < half.segment_count(); ++seg) {
    const auto [first, last] = half.segment_tokens(seg);
    std::istringstream in(lines[seg].text);
    std::string tag;
    std::size_t n = 0;
    while (in >> tag) {
      tags.push_back(tag);
      ++n;
    }
    if (n != last - first) {
      throw ParseError(Errc::length_mismatch, file, lines[seg].number,
                       "segment has " + std::to_string(last - first) +
                           " tokens but " + std::to_string(n) + " tags");
    }
  }
  return tags;
}

Mrbd load_mrbd_file(const std::filesystem::path& path, bool fold_case) {
  const std::string file = path.string();
  std::vector<std::pair<std::string, std::string>> entries;
  for (const Line& line : split_lines(read_file(path))) {
    if (is_comment_or_blank(line.text)) continue;
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(Errc::bad_input, file, line.number,
                       "expected `word1<TAB>word2`");
    }
    entries.emplace_back(fields[0], fields[1]);
  }
  return Mrbd::make(entries, fold_case);
}

PosCompat load_pos_compat_file(const std::filesystem::path& path) {
  const std::string file = path.string();
  PosCompat compat;
  for (const Line& line : split_lines(read_file(path))) {
    if (is_comment_or_blank(line.text)) continue;
    const auto fields = split_tabs(line.text);
    if (fields.size() != 2 || fields[0].empty() || fields[1].empty()) {
      throw ParseError(Errc::bad_input, file, line.number,
                       "expected `tag1<TAB>tag2`");
    }
    compat.extra.insert({fields[0], fields[1]});
  }
  return compat;
}

std::string format_table_tsv(const CoocTable& table) {
  std::string out;
  for (const CoocEntry& e : table.entries()) {
    out += e.u;
    out += '\t';
    out += e.v;
    out += '\t';
    out += std::to_string(e.count);
    out += '\n';
  }
  return out;
}

}  // namespace cooc::io
