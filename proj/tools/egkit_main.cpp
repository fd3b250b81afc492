#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "egkit/eg.hpp"
#include "egkit/io.hpp"
#include "egkit/jdt.hpp"
#include "egkit/networks.hpp"
#include "egkit/permutation.hpp"
#include "egkit/tableau.hpp"
#include "egkit/verify.hpp"
#include "egkit/vexillary.hpp"
#include "egkit/wordposet.hpp"

namespace {

using egkit::Json;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw std::invalid_argument("cannot open file: " + out_path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
  }
}

int word_n(const egkit::Word& w, int requested) {
  if (requested > 0) return requested;
  int max_letter = 0;
  for (int x : w) max_letter = std::max(max_letter, x);
  return max_letter + 1;
}

int run(int argc, char** argv) {
  CLI::App app{"Edelman-Greene insertion, sorting networks, and word posets"};
  app.require_subcommand(1);
  int exit_code = 0;

  // ---- eg ----------------------------------------------------------------
  auto* eg_cmd = app.add_subcommand("eg", "Insert a word; print P, Q, and the frozen shape");
  struct {
    std::string word;
    int n = 0;
    bool trace = false;
    bool text = false;
    std::string out;
  } eg_opt;
  eg_cmd->add_option("word", eg_opt.word, "word to insert")->required();
  eg_cmd->add_option("--n", eg_opt.n, "permutation size (default: max letter + 1)");
  eg_cmd->add_flag("--trace", eg_opt.trace, "emit the step-by-step insertion states");
  eg_cmd->add_flag("--text", eg_opt.text, "text grids instead of JSON");
  eg_cmd->add_option("--out", eg_opt.out, "output path");
  eg_cmd->callback([&] {
    egkit::Word w = egkit::parse_word(eg_opt.word);
    int n = word_n(w, eg_opt.n);
    if (eg_opt.trace) {
      auto steps = egkit::insertion_trace(w);
      if (eg_opt.text) {
        std::ostringstream out;
        for (size_t k = 0; k < steps.size(); ++k) {
          out << "step " << k + 1 << " (letter " << w[k] << ")\n"
              << egkit::tableau_to_grid(steps[k].p);
          out << "frozen:";
          for (int part : steps[k].frozen) out << ' ' << part;
          out << "\n\n";
        }
        write_output(out.str(), eg_opt.out);
      } else {
        Json j;
        j["word"] = w;
        j["steps"] = Json::array();
        for (const auto& step : steps) {
          j["steps"].push_back(Json{{"p", egkit::tableau_to_json(step.p)},
                                    {"frozen", egkit::partition_to_json(step.frozen)}});
        }
        write_output(dump(j), eg_opt.out);
      }
      return;
    }
    egkit::EgPair pair = egkit::eg_map(w);
    egkit::Partition frozen = egkit::frozen_region(pair.p);
    bool reduced = egkit::is_reduced(w, n);
    if (eg_opt.text) {
      std::ostringstream out;
      out << "P:\n" << egkit::tableau_to_grid(pair.p);
      out << "Q:\n" << egkit::tableau_to_grid(pair.q);
      out << "frozen:";
      for (int part : frozen) out << ' ' << part;
      out << "\nreduced: " << (reduced ? "true" : "false") << "\n";
      write_output(out.str(), eg_opt.out);
    } else {
      Json j{{"word", w},
             {"n", n},
             {"p", egkit::tableau_to_json(pair.p)},
             {"q", egkit::tableau_to_json(pair.q)},
             {"frozen_shape", egkit::partition_to_json(frozen)},
             {"is_frozen", frozen == pair.p.shape()},
             {"reduced", reduced}};
      write_output(dump(j), eg_opt.out);
    }
  });

  // ---- eg-inverse ---------------------------------------------------------
  auto* inv_cmd = app.add_subcommand("eg-inverse", "Recover the word of a staircase tableau");
  struct {
    std::string file;
    bool json = false;
    std::string out;
  } inv_opt;
  inv_cmd->add_option("tableau", inv_opt.file, "tableau JSON file (- for stdin)")->required();
  inv_cmd->add_flag("--json", inv_opt.json, "JSON output");
  inv_cmd->add_option("--out", inv_opt.out, "output path");
  inv_cmd->callback([&] {
    egkit::Tableau q = egkit::tableau_from_json(parse_json(read_all(inv_opt.file)));
    egkit::Word w = egkit::eg_inverse(q);
    if (inv_opt.json) {
      write_output(dump(Json{{"word", w}}), inv_opt.out);
    } else {
      write_output(egkit::word_to_string(w) + "\n", inv_opt.out);
    }
  });

  // ---- promote ------------------------------------------------------------
  auto* promote_cmd = app.add_subcommand("promote", "Apply one elementary promotion");
  struct {
    std::string file;
    bool text = false;
    std::string out;
  } promote_opt;
  promote_cmd->add_option("tableau", promote_opt.file, "tableau JSON file (- for stdin)")
      ->required();
  promote_cmd->add_flag("--text", promote_opt.text, "text grid instead of JSON");
  promote_cmd->add_option("--out", promote_opt.out, "output path");
  promote_cmd->callback([&] {
    egkit::PartialTableau t =
        egkit::partial_tableau_from_json(parse_json(read_all(promote_opt.file)));
    egkit::PromoteResult result = egkit::promote(t);
    if (promote_opt.text) {
      write_output(egkit::partial_tableau_to_grid(result.tableau), promote_opt.out);
    } else {
      Json j{{"tableau", egkit::partial_tableau_to_json(result.tableau)},
             {"start", Json::array({result.start.row, result.start.col})},
             {"cleared", Json::array({result.cleared.row, result.cleared.col})},
             {"right_slides", result.right_slides},
             {"down_slides", result.down_slides}};
      write_output(dump(j), promote_opt.out);
    }
  });

  // ---- evacuate -----------------------------------------------------------
  auto* evac_cmd = app.add_subcommand("evacuate", "Schuetzenberger evacuation of a tableau");
  struct {
    std::string file;
    bool text = false;
    std::string out;
  } evac_opt;
  evac_cmd->add_option("tableau", evac_opt.file, "tableau JSON file (- for stdin)")->required();
  evac_cmd->add_flag("--text", evac_opt.text, "text grid instead of JSON");
  evac_cmd->add_option("--out", evac_opt.out, "output path");
  evac_cmd->callback([&] {
    egkit::Tableau t = egkit::tableau_from_json(parse_json(read_all(evac_opt.file)));
    egkit::Tableau s = egkit::evacuation(t);
    if (evac_opt.text) {
      write_output(egkit::tableau_to_grid(s), evac_opt.out);
    } else {
      write_output(dump(egkit::tableau_to_json(s)), evac_opt.out);
    }
  });

  // ---- diagram ------------------------------------------------------------
  auto* diagram_cmd = app.add_subcommand("diagram", "Rothe diagram and top-left component");
  struct {
    std::string perm;
    bool text = false;
    std::string out;
  } diagram_opt;
  diagram_cmd->add_option("permutation", diagram_opt.perm, "one-line notation")->required();
  diagram_cmd->add_flag("--text", diagram_opt.text, "text grid instead of JSON");
  diagram_cmd->add_option("--out", diagram_opt.out, "output path");
  diagram_cmd->callback([&] {
    egkit::Permutation s = egkit::parse_permutation(diagram_opt.perm);
    egkit::CellSet cells = egkit::rothe_diagram(s);
    egkit::Partition shape = egkit::top_left_component(cells);
    if (diagram_opt.text) {
      std::ostringstream out;
      out << egkit::cellset_to_grid(cells, s.size(), s.size());
      out << "top-left shape:";
      for (int part : shape) out << ' ' << part;
      out << "\ninversions: " << egkit::inversion_count(s) << "\n";
      write_output(out.str(), diagram_opt.out);
    } else {
      Json j{{"permutation", s.one_line()},
             {"cells", egkit::cellset_to_json(cells)},
             {"top_left_shape", egkit::partition_to_json(shape)},
             {"lehmer_code", egkit::lehmer_code(s)},
             {"inversions", egkit::inversion_count(s)}};
      write_output(dump(j), diagram_opt.out);
    }
  });

  // ---- vex ----------------------------------------------------------------
  auto* vex_cmd = app.add_subcommand("vex", "Vexillary tableau construction and verification");
  struct {
    std::string perm;
    bool text = false;
    long long cap = 200000;
    std::string out;
  } vex_opt;
  vex_cmd->add_option("permutation", vex_opt.perm, "one-line notation")->required();
  vex_cmd->add_flag("--text", vex_opt.text, "text grids instead of JSON");
  vex_cmd->add_option("--cap", vex_opt.cap, "maximum number of reduced words to check");
  vex_cmd->add_option("--out", vex_opt.out, "output path");
  vex_cmd->callback([&] {
    egkit::Permutation s = egkit::parse_permutation(vex_opt.perm);
    if (!egkit::is_vexillary(s)) {
      if (vex_opt.text) {
        write_output("not vexillary\n", vex_opt.out);
      } else {
        write_output(dump(Json{{"permutation", s.one_line()}, {"vexillary", false}}), vex_opt.out);
      }
      return;
    }
    egkit::ColumnStacks stacks = egkit::column_stacks(s);
    egkit::Tableau t = egkit::vexillary_tableau(s);
    egkit::CellSet diagram = egkit::rothe_diagram(s);
    egkit::Report report = egkit::verify_vexillary_correspondence(s, vex_opt.cap);
    if (!report.ok()) exit_code = 1;
    if (vex_opt.text) {
      std::ostringstream out;
      out << "column stacks (col: height):";
      for (int x = 1; x <= stacks.columns(); ++x) {
        if (stacks.height(x) > 0) out << ' ' << x << ':' << stacks.height(x);
      }
      out << "\nT:\n" << egkit::tableau_to_grid(t);
      out << "diagram:\n" << egkit::cellset_to_grid(diagram, s.size(), s.size());
      out << "verdict: " << (report.ok() ? "pass" : "fail") << "\n";
      write_output(out.str(), vex_opt.out);
    } else {
      Json t0 = Json::array();
      for (const auto& [cell, value] : stacks.cells()) {
        t0.push_back(Json::array({cell.row, cell.col, value}));
      }
      Json j{{"permutation", s.one_line()},
             {"vexillary", true},
             {"column_stacks", t0},
             {"t", egkit::tableau_to_json(t)},
             {"diagram", egkit::cellset_to_json(diagram)},
             {"checked_words", report.checks},
             {"verdict", report.ok() ? "pass" : "fail"}};
      if (!report.notes.empty()) j["notes"] = report.notes;
      write_output(dump(j), vex_opt.out);
    }
  });

  // ---- enumerate ----------------------------------------------------------
  auto* enum_cmd = app.add_subcommand("enumerate", "List sorting networks lexicographically");
  struct {
    int n = 0;
    std::string avoid;
    int cap = 7;
    std::string out;
  } enum_opt;
  enum_cmd->add_option("--n", enum_opt.n, "network size")->required();
  enum_cmd->add_option("--avoid", enum_opt.avoid, "keep prefix pattern-avoiding networks")
      ->check(CLI::IsMember({"132", "213"}));
  enum_cmd->add_option("--cap", enum_opt.cap, "largest n allowed for full enumeration");
  enum_cmd->add_option("--out", enum_opt.out, "output path");
  enum_cmd->callback([&] {
    std::vector<egkit::Word> words;
    if (enum_opt.avoid.empty()) {
      words = egkit::enumerate_networks(enum_opt.n, enum_opt.cap);
    } else {
      std::vector<int> pattern = enum_opt.avoid == "132" ? std::vector<int>{1, 3, 2}
                                                         : std::vector<int>{2, 1, 3};
      words = egkit::enumerate_networks_avoiding(enum_opt.n, pattern, enum_opt.cap);
    }
    std::ostringstream out;
    for (const egkit::Word& w : words) out << egkit::word_to_string(w) << "\n";
    out << "count " << words.size() << "\n";
    write_output(out.str(), enum_opt.out);
  });

  // ---- sample -------------------------------------------------------------
  auto* sample_cmd =
      app.add_subcommand("sample", "Random network: frozen boundary vs the conjectured arc");
  struct {
    int n = 0;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double t = 0.5;
    std::string csv;
    std::string svg;
    int arc_points = 0;
  } sample_opt;
  sample_cmd->add_option("--n", sample_opt.n, "network size")->required();
  sample_cmd->add_option("--seed", sample_opt.seed, "sampler seed")->required();
  sample_cmd->add_option("--t", sample_opt.t, "time in (0, 1)")->required();
  sample_cmd->add_option("--csv", sample_opt.csv, "CSV output path (default stdout)");
  sample_cmd->add_option("--svg", sample_opt.svg, "also write an overlay figure");
  sample_cmd->add_option("--arc-points", sample_opt.arc_points, "arc sample count (default 10n)");
  sample_cmd->callback([&] {
    egkit::Word w = egkit::random_network(sample_opt.n, sample_opt.seed);
    egkit::FrozenTrace trace = egkit::frozen_evolution(w, sample_opt.n);
    auto boundary = egkit::scaled_frozen_boundary(trace, sample_opt.t);
    int arc_count = sample_opt.arc_points > 1 ? sample_opt.arc_points : 10 * sample_opt.n;
    auto arc = egkit::conjecture_boundary(sample_opt.t, arc_count);
    std::ostringstream csv;
    csv << "kind,x,y\n";
    csv.precision(10);
    for (const auto& p : boundary) csv << "boundary," << p.x << ',' << p.y << "\n";
    for (const auto& p : arc) csv << "arc," << p.x << ',' << p.y << "\n";
    write_output(csv.str(), sample_opt.csv);
    if (!sample_opt.svg.empty()) {
      const int size = 640;
      const double margin = 40;
      auto sx = [&](double x) { return margin + (x + 1.0) / 2.0 * (size - 2 * margin); };
      auto sy = [&](double y) { return margin + (1.0 - y) / 2.0 * (size - 2 * margin); };
      std::ostringstream svg;
      svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
          << "\">\n";
      svg << "  <rect x=\"" << sx(-1) << "\" y=\"" << sy(1) << "\" width=\"" << sx(1) - sx(-1)
          << "\" height=\"" << sy(-1) - sy(1)
          << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
      for (const auto& p : boundary) {
        svg << "  <circle cx=\"" << sx(p.x) << "\" cy=\"" << sy(p.y)
            << "\" r=\"2\" fill=\"#1f77b4\"/>\n";
      }
      svg << "  <polyline fill=\"none\" stroke=\"#d62728\" stroke-width=\"2\" points=\"";
      for (size_t i = 0; i < arc.size(); ++i) {
        if (i) svg << ' ';
        svg << sx(arc[i].x) << ',' << sy(arc[i].y);
      }
      svg << "\"/>\n</svg>\n";
      write_output(svg.str(), sample_opt.svg);
    }
  });

  // ---- wiring -------------------------------------------------------------
  auto* wiring_cmd = app.add_subcommand("wiring", "Wiring diagram of a word");
  struct {
    std::string word;
    int n = 0;
    std::string svg;
  } wiring_opt;
  wiring_cmd->add_option("word", wiring_opt.word, "word to draw")->required();
  wiring_cmd->add_option("--n", wiring_opt.n, "wire count (default: max letter + 1)");
  wiring_cmd->add_option("--svg", wiring_opt.svg, "output path (default stdout)");
  wiring_cmd->callback([&] {
    egkit::Word w = egkit::parse_word(wiring_opt.word);
    int n = word_n(w, wiring_opt.n);
    write_output(egkit::wiring_diagram_svg(w, n), wiring_opt.svg);
  });

  // ---- poset --------------------------------------------------------------
  auto* poset_cmd = app.add_subcommand("poset", "Word poset of a recording tableau");
  struct {
    std::string file;
    std::string dot;
    int cap = 12;
    std::string out;
  } poset_opt;
  poset_cmd->add_option("tableau", poset_opt.file, "tableau JSON file (- for stdin)")->required();
  poset_cmd->add_option("--dot", poset_opt.dot, "write the cover relations as DOT");
  poset_cmd->add_option("--cap", poset_opt.cap, "cell-count cap for enumeration");
  poset_cmd->add_option("--out", poset_opt.out, "output path");
  poset_cmd->callback([&] {
    egkit::Tableau q = egkit::tableau_from_json(parse_json(read_all(poset_opt.file)));
    egkit::WordPoset poset = egkit::build_poset(q, poset_opt.cap);
    egkit::Report height_report = egkit::check_height_formula(poset);
    const egkit::Word& bottom = poset.elements[poset.bottom];
    const egkit::Word& top = poset.elements[poset.top];
    int height = egkit::interval_height(poset, bottom, top);
    long long gap = 0;
    for (size_t i = 0; i < top.size(); ++i) gap += top[i] - bottom[i];
    Json j;
    j["elements"] = Json::array();
    for (const egkit::Word& w : poset.elements) j["elements"].push_back(egkit::word_to_string(w));
    j["covers"] = Json::array();
    for (const auto& [u, v] : poset.covers) j["covers"].push_back(Json::array({u, v}));
    j["bottom"] = egkit::word_to_string(bottom);
    j["top"] = egkit::word_to_string(top);
    j["height"] = height;
    j["gap_sum"] = gap;
    j["maximal_count"] = poset.maximal_elements.size();
    j["verdict"] = height_report.ok() ? "holds" : "counterexample";
    write_output(dump(j), poset_opt.out);
    if (!poset_opt.dot.empty()) {
      std::ostringstream dot;
      dot << "digraph poset {\n  rankdir=BT;\n";
      for (const auto& [u, v] : poset.covers) {
        dot << "  \"" << egkit::word_to_string(poset.elements[u]) << "\" -> \""
            << egkit::word_to_string(poset.elements[v]) << "\";\n";
      }
      dot << "}\n";
      write_output(dot.str(), poset_opt.dot);
    }
  });

  // ---- eta ----------------------------------------------------------------
  auto* eta_cmd = app.add_subcommand("eta", "Interval-height histogram over staircase tableaux");
  struct {
    int n = 0;
    bool long_run = false;
    bool json = false;
    std::string out;
  } eta_opt;
  eta_cmd->add_option("--n", eta_opt.n, "staircase size")->required();
  eta_cmd->add_flag("--long-run", eta_opt.long_run, "allow the expensive n=6 run");
  eta_cmd->add_flag("--json", eta_opt.json, "JSON output");
  eta_cmd->add_option("--out", eta_opt.out, "output path");
  eta_cmd->callback([&] {
    egkit::EtaTable table = egkit::eta_table(eta_opt.n, eta_opt.long_run);
    if (eta_opt.json) {
      write_output(dump(Json{{"n", table.n}, {"eta", table.counts}}), eta_opt.out);
    } else {
      std::ostringstream out;
      for (size_t i = 0; i < table.counts.size(); ++i) {
        if (i) out << ',';
        out << table.counts[i];
      }
      out << "\n";
      write_output(out.str(), eta_opt.out);
    }
  });

  // ---- verify -------------------------------------------------------------
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance suite");
  struct {
    std::string level = "desk";
    bool json = false;
    int threads = 0;
  } verify_opt;
  verify_cmd->add_option("--level", verify_opt.level, "desk (full) or quick")
      ->check(CLI::IsMember({"desk", "quick"}));
  verify_cmd->add_flag("--json", verify_opt.json, "JSON report");
  verify_cmd->add_option("--threads", verify_opt.threads, "worker threads (default EGKIT_THREADS)");
  verify_cmd->callback([&] {
    egkit::VerifyOptions options;
    options.quick = verify_opt.level == "quick";
    options.threads = verify_opt.threads;
    auto results = egkit::run_acceptance(options);
    bool all_passed = true;
    if (verify_opt.json) {
      Json j = Json::array();
      for (const auto& r : results) {
        all_passed &= r.passed;
        j.push_back(Json{{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"seconds", r.seconds},
                         {"detail", r.detail}});
      }
      std::cout << dump(j);
    } else {
      for (const auto& r : results) {
        all_passed &= r.passed;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << ". " << r.name << " ("
             << r.seconds << "s): " << r.detail;
        std::cout << line.str() << "\n";
      }
      std::cout << (all_passed ? "all criteria passed" : "ACCEPTANCE FAILURES PRESENT") << "\n";
    }
    if (!all_passed) exit_code = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
