// Python bindings for the cooc core: corpus ingestion, bitext maps, the
// three co-occurrence models, matching/cover counting, filters, and the
// brute-force reference implementations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cooc/corpus.hpp"
#include "cooc/counting.hpp"
#include "cooc/errors.hpp"
#include "cooc/filters.hpp"
#include "cooc/geometry.hpp"
#include "cooc/io.hpp"
#include "cooc/model.hpp"
#include "cooc/oracle.hpp"

namespace py = pybind11;
using namespace cooc;

namespace {

std::vector<AnchorPoint> to_anchors(const std::vector<std::pair<double, double>>& pts) {
  std::vector<AnchorPoint> anchors;
  anchors.reserve(pts.size());
  for (const auto& [x, y] : pts) anchors.push_back({x, y});
  return anchors;
}

CountingAssumption assumption_from(const std::string& name) {
  if (name == "naive") return CountingAssumption::naive;
  if (name == "at-most-one" || name == "at_most_one") return CountingAssumption::at_most_one;
  if (name == "at-least-one" || name == "at_least_one") return CountingAssumption::at_least_one;
  throw CoocError(Errc::bad_config, "unknown counting assumption: " + name);
}

std::vector<std::tuple<std::string, std::string, std::uint64_t>> table_rows(
    const CoocTable& t) {
  std::vector<std::tuple<std::string, std::string, std::uint64_t>> rows;
  rows.reserve(t.size());
  for (const CoocEntry& e : t.entries()) rows.emplace_back(e.u, e.v, e.count);
  return rows;
}

}  // namespace

PYBIND11_MODULE(_cooc, m) {
  m.doc() = "Word-type co-occurrence counting for bitexts";

  py::register_exception<CoocError>(m, "Error");

  py::enum_<AxisUnits>(m, "AxisUnits")
      .value("characters", AxisUnits::characters)
      .value("tokens", AxisUnits::tokens);

  py::class_<BitextSpace>(m, "BitextSpace")
      .def(py::init([](double width, double height, AxisUnits units) {
             return BitextSpace{width, height, units};
           }),
           py::arg("width"), py::arg("height"),
           py::arg("units") = AxisUnits::characters)
      .def_readonly("width", &BitextSpace::width)
      .def_readonly("height", &BitextSpace::height)
      .def_readonly("units", &BitextSpace::units);

  py::class_<BitextMap>(m, "BitextMap")
      .def_static(
          "load",
          [](const std::vector<std::pair<double, double>>& anchors, BitextSpace space) {
            return BitextMap::load(to_anchors(anchors), space);
          },
          py::arg("anchors"), py::arg("space"))
      .def_property_readonly("anchors",
                             [](const BitextMap& map) {
                               std::vector<std::pair<double, double>> out;
                               for (const AnchorPoint& a : map.anchors())
                                 out.emplace_back(a.x, a.y);
                               return out;
                             })
      .def_property_readonly("space", &BitextMap::space)
      .def(
          "distance",
          [](const BitextMap& map, double x, double y) {
            return map.distance({x, y});
          },
          py::arg("x"), py::arg("y"));

  py::class_<Token>(m, "Token")
      .def_readonly("type", &Token::type)
      .def_readonly("begin", &Token::begin)
      .def_readonly("end", &Token::end)
      .def_readonly("index", &Token::index)
      .def_readonly("segment", &Token::segment);

  py::class_<TokenizedHalf>(m, "TokenizedHalf")
      .def_static("tokenize", &TokenizedHalf::tokenize, py::arg("text"),
                  py::arg("fold_case") = false)
      .def_static(
          "from_records",
          [](const std::vector<std::tuple<std::string, std::size_t, std::size_t,
                                          std::optional<std::uint32_t>>>& recs,
             bool fold_case, std::optional<std::size_t> total_length,
             std::optional<std::uint32_t> segment_count) {
            std::vector<TokenizedHalf::PretokRecord> records;
            records.reserve(recs.size());
            for (const auto& [tok, b, e, seg] : recs) {
              records.push_back({tok, b, e, seg});
            }
            return TokenizedHalf::from_records(records, fold_case, total_length,
                                               segment_count);
          },
          py::arg("records"), py::arg("fold_case") = false,
          py::arg("total_length") = std::nullopt,
          py::arg("segment_count") = std::nullopt)
      .def("__len__", &TokenizedHalf::size)
      .def("token", &TokenizedHalf::token, py::arg("i"),
           py::return_value_policy::copy)
      .def_property_readonly("segment_count", &TokenizedHalf::segment_count)
      .def_property_readonly("char_length", &TokenizedHalf::char_length)
      .def("type_name", &TokenizedHalf::type_name, py::arg("type_id"))
      .def("pos_tag",
           [](const TokenizedHalf& h, std::size_t i) -> std::optional<std::string> {
             auto tag = h.pos_tag(i);
             if (!tag) return std::nullopt;
             return std::string(*tag);
           })
      .def("with_pos", &TokenizedHalf::with_pos, py::arg("tags"));

  py::class_<AlignBlock>(m, "AlignBlock")
      .def(py::init([](std::vector<std::uint32_t> s1, std::vector<std::uint32_t> s2) {
             return AlignBlock{std::move(s1), std::move(s2)};
           }),
           py::arg("side1"), py::arg("side2"))
      .def_readonly("side1", &AlignBlock::side1)
      .def_readonly("side2", &AlignBlock::side2);

  py::class_<SegmentAlignment>(m, "SegmentAlignment")
      .def_static(
          "load",
          [](const std::vector<std::pair<std::vector<std::uint32_t>,
                                         std::vector<std::uint32_t>>>& blocks,
             const TokenizedHalf& h1, const TokenizedHalf& h2) {
            std::vector<AlignBlock> bs;
            bs.reserve(blocks.size());
            for (const auto& [s1, s2] : blocks) bs.push_back({s1, s2});
            return SegmentAlignment::load(std::move(bs), h1, h2);
          },
          py::arg("blocks"), py::arg("half1"), py::arg("half2"))
      .def_property_readonly("block_count", &SegmentAlignment::block_count)
      .def("block_of_side1", &SegmentAlignment::block_of_side1)
      .def("block_of_side2", &SegmentAlignment::block_of_side2);

  py::class_<DistanceModel>(m, "DistanceModel")
      .def(py::init(&make_distance_model), py::arg("map"), py::arg("delta"))
      .def_readonly("delta", &DistanceModel::delta);

  py::class_<BoundaryModel>(m, "BoundaryModel")
      .def(py::init([](SegmentAlignment alignment) {
             return BoundaryModel{std::move(alignment)};
           }),
           py::arg("alignment"));

  py::class_<CombinedModel>(m, "CombinedModel")
      .def(py::init([](DistanceModel d, BoundaryModel b) {
             return CombinedModel{std::move(d), std::move(b)};
           }),
           py::arg("distance"), py::arg("boundary"));

  m.def("co_occurs", &co_occurs, py::arg("model"), py::arg("s"), py::arg("t"));
  m.def("candidate_edges", &candidate_edges, py::arg("model"), py::arg("half1"),
        py::arg("half2"));

  py::class_<CoocGraph>(m, "CoocGraph")
      .def_static("make", &CoocGraph::make, py::arg("n_left"), py::arg("n_right"),
                  py::arg("edges"))
      .def_readonly("left_tokens", &CoocGraph::left_tokens)
      .def_readonly("right_tokens", &CoocGraph::right_tokens)
      .def_readonly("edges", &CoocGraph::edges);

  m.def("max_matching", &max_matching);
  m.def("min_edge_cover", &min_edge_cover);
  m.def("min_vertex_cover", &min_vertex_cover);
  m.def(
      "count_segment_pair",
      [](std::uint64_t e, std::uint64_t f, const std::string& assumption) {
        return count_segment_pair({e, f}, assumption_from(assumption));
      },
      py::arg("e"), py::arg("f"), py::arg("assumption"));

  py::class_<PosCompat>(m, "PosCompat")
      .def(py::init([](const std::vector<std::pair<std::string, std::string>>& extra) {
             PosCompat c;
             for (const auto& p : extra) c.extra.insert(p);
             return c;
           }),
           py::arg("extra") = std::vector<std::pair<std::string, std::string>>{})
      .def("compatible", &PosCompat::compatible);

  py::class_<Mrbd>(m, "Mrbd")
      .def_static("make", &Mrbd::make, py::arg("entries"), py::arg("fold_case") = false)
      .def("contains", &Mrbd::contains)
      .def("__len__", &Mrbd::size);

  py::class_<CognateRule>(m, "CognateRule")
      .def(py::init(&make_cognate_rule), py::arg("lcsr_threshold") = 0.58,
           py::arg("min_length") = 4)
      .def_readonly("lcsr_threshold", &CognateRule::lcsr_threshold)
      .def_readonly("min_length", &CognateRule::min_length);

  m.def("lcsr", &lcsr, py::arg("w1"), py::arg("w2"));

  py::class_<FilterSet>(m, "FilterSet")
      .def(py::init<>())
      .def("add_pos", [](FilterSet& fs, PosCompat c) -> FilterSet& { return fs.add(std::move(c)); },
           py::return_value_policy::reference_internal)
      .def("add_mrbd", [](FilterSet& fs, Mrbd d) -> FilterSet& { return fs.add(std::move(d)); },
           py::return_value_policy::reference_internal)
      .def("add_cognate", [](FilterSet& fs, CognateRule r) -> FilterSet& { return fs.add(r); },
           py::return_value_policy::reference_internal);

  m.def(
      "apply_filter_set",
      [](std::vector<Edge> edges, const TokenizedHalf& h1, const TokenizedHalf& h2,
         const FilterSet& filters) {
        FilterOutcome out = apply_filter_set(std::move(edges), h1, h2, filters);
        return std::make_pair(out.consumed, out.residual);
      },
      py::arg("edges"), py::arg("half1"), py::arg("half2"), py::arg("filters"));

  py::class_<CoocTable>(m, "CoocTable")
      .def("__len__", &CoocTable::size)
      .def("lookup", &CoocTable::lookup, py::arg("u"), py::arg("v"))
      .def_property_readonly("entries", &table_rows)
      .def("__eq__", [](const CoocTable& a, const CoocTable& b) { return a == b; });

  m.def(
      "count_all",
      [](const CoocModel& model, const TokenizedHalf& h1, const TokenizedHalf& h2,
         const std::string& assumption, const FilterSet& filters) {
        return count_all(model, h1, h2, assumption_from(assumption), filters);
      },
      py::arg("model"), py::arg("half1"), py::arg("half2"), py::arg("assumption"),
      py::arg("filters") = FilterSet());
  m.def(
      "count_all_graph",
      [](const CoocModel& model, const TokenizedHalf& h1, const TokenizedHalf& h2,
         const std::string& assumption, const FilterSet& filters) {
        return count_all_graph(model, h1, h2, assumption_from(assumption), filters);
      },
      py::arg("model"), py::arg("half1"), py::arg("half2"), py::arg("assumption"),
      py::arg("filters") = FilterSet());
  m.def(
      "count_blocks",
      [](const SegmentAlignment& alignment, const TokenizedHalf& h1,
         const TokenizedHalf& h2, const std::string& assumption) {
        return count_blocks(alignment, h1, h2, assumption_from(assumption));
      },
      py::arg("alignment"), py::arg("half1"), py::arg("half2"), py::arg("assumption"));

  m.def("format_table_tsv", &io::format_table_tsv);

  auto oracle_mod = m.def_submodule("oracle", "Brute-force reference implementations");
  oracle_mod.def("brute_matching", &oracle::brute_matching);
  oracle_mod.def("brute_edge_cover", &oracle::brute_edge_cover);
  oracle_mod.def("brute_vertex_cover", &oracle::brute_vertex_cover);
  oracle_mod.def("brute_candidate_edges", &oracle::brute_candidate_edges);
  oracle_mod.def(
      "brute_count_all",
      [](const CoocModel& model, const TokenizedHalf& h1, const TokenizedHalf& h2,
         const std::string& assumption, const FilterSet& filters) {
        return oracle::brute_count_all(model, h1, h2, assumption_from(assumption),
                                       filters);
      },
      py::arg("model"), py::arg("half1"), py::arg("half2"), py::arg("assumption"),
      py::arg("filters") = FilterSet());
}
