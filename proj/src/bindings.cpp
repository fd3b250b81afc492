#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "egkit/eg.hpp"
#include "egkit/jdt.hpp"
#include "egkit/networks.hpp"
#include "egkit/permutation.hpp"
#include "egkit/tableau.hpp"
#include "egkit/vexillary.hpp"
#include "egkit/wordposet.hpp"

namespace py = pybind11;

namespace {

using Rows = std::vector<std::vector<int>>;

egkit::Permutation perm(const std::vector<int>& one_line) {
  return egkit::Permutation(one_line);
}

Rows rows_of(const egkit::Tableau& t) { return t.to_rows(); }

py::object big_to_int(const egkit::BigInt& value) {
  return py::module_::import("builtins").attr("int")(py::str(value.str()));
}

std::vector<std::pair<int, int>> cells_to_pairs(const egkit::CellSet& cells) {
  std::vector<std::pair<int, int>> out;
  out.reserve(cells.size());
  for (const auto& c : cells) out.emplace_back(c.row, c.col);
  return out;
}

}  // namespace

PYBIND11_MODULE(_egkit, m) {
  m.doc() = "Edelman-Greene insertion, sorting networks, and word posets";

  m.def(
      "compose_word",
      [](const egkit::Word& w, int n) { return egkit::compose_word(w, n).one_line(); },
      py::arg("word"), py::arg("n"), "Apply the word's adjacent transpositions to the identity");
  m.def(
      "inversions",
      [](const std::vector<int>& s) { return egkit::inversions(perm(s)); },
      py::arg("permutation"));
  m.def(
      "inversion_count",
      [](const std::vector<int>& s) { return egkit::inversion_count(perm(s)); },
      py::arg("permutation"));
  m.def("is_reduced", &egkit::is_reduced, py::arg("word"), py::arg("n"));
  m.def(
      "weak_bruhat_leq",
      [](const std::vector<int>& a, const std::vector<int>& b) {
        return egkit::weak_bruhat_leq(perm(a), perm(b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "rothe_diagram",
      [](const std::vector<int>& s) { return cells_to_pairs(egkit::rothe_diagram(perm(s))); },
      py::arg("permutation"));
  m.def(
      "diagram_shape",
      [](const std::vector<int>& s) {
        return egkit::top_left_component(egkit::rothe_diagram(perm(s)));
      },
      py::arg("permutation"), "Shape of the top-left connected diagram component");
  m.def(
      "lehmer_code", [](const std::vector<int>& s) { return egkit::lehmer_code(perm(s)); },
      py::arg("permutation"));
  m.def(
      "nw_rank",
      [](const std::vector<int>& s, int i, int j) { return egkit::nw_rank(perm(s), i, j); },
      py::arg("permutation"), py::arg("i"), py::arg("j"));
  m.def(
      "contains_pattern",
      [](const std::vector<int>& s, const std::vector<int>& p) {
        return egkit::contains_pattern(perm(s), p);
      },
      py::arg("permutation"), py::arg("pattern"));
  m.def(
      "is_vexillary", [](const std::vector<int>& s) { return egkit::is_vexillary(perm(s)); },
      py::arg("permutation"));

  m.def(
      "eg_map",
      [](const egkit::Word& w) {
        egkit::EgPair pair = egkit::eg_map(w);
        return py::make_tuple(rows_of(pair.p), rows_of(pair.q));
      },
      py::arg("word"), "Insertion and recording tableaux as row lists");
  m.def(
      "eg_inverse",
      [](const Rows& rows) { return egkit::eg_inverse(egkit::Tableau::from_rows(rows)); },
      py::arg("q_rows"));
  m.def(
      "evacuation",
      [](const Rows& rows) { return rows_of(egkit::evacuation(egkit::Tableau::from_rows(rows))); },
      py::arg("rows"));
  m.def(
      "frozen_shape",
      [](const Rows& rows) { return egkit::frozen_region(egkit::Tableau::from_rows(rows)); },
      py::arg("p_rows"));
  m.def(
      "is_frozen",
      [](const Rows& rows) { return egkit::is_frozen(egkit::Tableau::from_rows(rows)); },
      py::arg("p_rows"));
  m.def(
      "reading_word",
      [](const Rows& rows) { return egkit::reading_word(egkit::Tableau::from_rows(rows)); },
      py::arg("rows"));
  m.def(
      "column_word",
      [](const Rows& rows) { return egkit::column_word(egkit::Tableau::from_rows(rows)); },
      py::arg("rows"));
  m.def(
      "right_slide_total",
      [](const Rows& rows) { return egkit::right_slide_total(egkit::Tableau::from_rows(rows)); },
      py::arg("q_rows"));
  m.def(
      "vexillary_tableau",
      [](const std::vector<int>& s) { return rows_of(egkit::vexillary_tableau(perm(s))); },
      py::arg("permutation"));

  m.def("enumerate_networks", &egkit::enumerate_networks, py::arg("n"), py::arg("max_n") = 7);
  m.def("enumerate_networks_avoiding", &egkit::enumerate_networks_avoiding, py::arg("n"),
        py::arg("pattern"), py::arg("max_n") = 7);
  m.def(
      "enumerate_reduced_words",
      [](const std::vector<int>& s, long long cap) {
        return egkit::enumerate_reduced_words(perm(s), cap);
      },
      py::arg("permutation"), py::arg("cap") = -1);
  m.def(
      "count_syt", [](const egkit::Partition& shape) { return big_to_int(egkit::count_syt(shape)); },
      py::arg("shape"));
  m.def(
      "count_132_networks", [](int n) { return big_to_int(egkit::count_132_formula(n)); },
      py::arg("n"));
  m.def("random_network", &egkit::random_network, py::arg("n"), py::arg("seed"));
  m.def(
      "random_syt",
      [](const egkit::Partition& shape, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        return rows_of(egkit::random_syt(shape, rng));
      },
      py::arg("shape"), py::arg("seed"));
  m.def(
      "eta_table",
      [](int n, bool long_run) { return egkit::eta_table(n, long_run).counts; },
      py::arg("n"), py::arg("long_run") = false);
  m.def(
      "enumerate_fiber",
      [](const Rows& rows, int cap) {
        return egkit::enumerate_fiber(egkit::Tableau::from_rows(rows), cap);
      },
      py::arg("q_rows"), py::arg("cell_cap") = 12,
      "Words with this recording tableau and a frozen insertion tableau");
  m.def(
      "poset_summary",
      [](const Rows& rows, int cap) {
        egkit::WordPoset poset = egkit::build_poset(egkit::Tableau::from_rows(rows), cap);
        py::dict out;
        out["elements"] = poset.elements;
        out["covers"] = poset.covers;
        out["bottom"] = poset.elements[poset.bottom];
        out["top"] = poset.elements[poset.top];
        out["height"] = egkit::interval_height(poset, poset.elements[poset.bottom],
                                               poset.elements[poset.top]);
        out["maximal_count"] = poset.maximal_elements.size();
        return out;
      },
      py::arg("q_rows"), py::arg("cell_cap") = 12);
  m.def("wiring_svg", &egkit::wiring_diagram_svg, py::arg("word"), py::arg("n"));
  m.def(
      "frozen_boundary_points",
      [](const egkit::Word& w, int n, double t) {
        egkit::FrozenTrace trace = egkit::frozen_evolution(w, n);
        std::vector<std::pair<double, double>> out;
        for (const auto& p : egkit::scaled_frozen_boundary(trace, t)) {
          out.emplace_back(p.x, p.y);
        }
        return out;
      },
      py::arg("word"), py::arg("n"), py::arg("t"));
  m.def(
      "conjecture_arc",
      [](double t, int points) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : egkit::conjecture_boundary(t, points)) out.emplace_back(p.x, p.y);
        return out;
      },
      py::arg("t"), py::arg("points"));
  m.def(
      "boundary_deviation",
      [](const egkit::Word& w, int n, double t) {
        egkit::FrozenTrace trace = egkit::frozen_evolution(w, n);
        return egkit::boundary_deviation(trace, t);
      },
      py::arg("word"), py::arg("n"), py::arg("t"));

  m.attr("__version__") = "1.0.0";
}
