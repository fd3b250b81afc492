#include "egkit/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "egkit/eg.hpp"
#include "egkit/jdt.hpp"
#include "egkit/networks.hpp"
#include "egkit/permutation.hpp"
#include "egkit/stats.hpp"
#include "egkit/tableau.hpp"
#include "egkit/vexillary.hpp"
#include "egkit/wordposet.hpp"

namespace egkit {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Failures {
  long long count = 0;
  std::ostringstream detail;

  void note(const std::string& msg) {
    if (count < 8) detail << (count ? "; " : "") << msg;
    ++count;
  }
  void absorb(const Report& report, const char* label) {
    if (!report.ok()) {
      note(std::string(label) + " (" + std::to_string(report.failure_count) + " failures)");
    }
  }
};

std::string one_line_brief(const Permutation& s) {
  std::ostringstream out;
  for (int i = 1; i <= s.size(); ++i) {
    if (i > 1) out << ' ';
    out << s(i);
  }
  return out.str();
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  std::vector<Permutation> out;
  do {
    out.emplace_back(line);
  } while (std::next_permutation(line.begin(), line.end()));
  return out;
}

CriterionResult worked_example(const VerifyOptions&) {
  CriterionResult result{1, "worked-example fidelity", false, 0, ""};
  Failures failures;
  Tableau expected_p = Tableau::from_rows({{1, 2, 3}, {2, 3}, {3}});
  Tableau expected_q = Tableau::from_rows({{1, 4, 5}, {2, 6}, {3}});
  Tableau expected_s = Tableau::from_rows({{1, 2, 6}, {3, 5}, {4}});
  Word word{3, 2, 1, 2, 3, 2};
  double best = 1e9;
  for (int attempt = 0; attempt < 3; ++attempt) {
    auto start = Clock::now();
    EgPair pair = eg_map(word);
    Word back = eg_inverse(expected_q);
    Tableau evac = evacuation(expected_q);
    best = std::min(best, seconds_since(start));
    if (!(pair.p == expected_p)) failures.note("insertion tableau mismatch");
    if (!(pair.q == expected_q)) failures.note("recording tableau mismatch");
    if (back != word) failures.note("inverse word mismatch");
    if (!(evac == expected_s)) failures.note("evacuation mismatch");
    if (failures.count) break;
  }
  if (best >= 1e-3) failures.note("runtime above 1 ms");
  std::ostringstream detail;
  detail << "best run " << best * 1e6 << " us";
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str() : detail.str();
  return result;
}

CriterionResult bijection_counts(const VerifyOptions&) {
  CriterionResult result{2, "staircase bijection counts and round trips", false, 0, ""};
  Failures failures;
  const long long expected[] = {2, 16, 768};
  for (int n = 3; n <= 5; ++n) {
    auto networks = enumerate_networks(n);
    long long want = expected[n - 3];
    if (static_cast<long long>(networks.size()) != want) {
      failures.note("network count mismatch at n=" + std::to_string(n));
    }
    if (count_syt(staircase(n)) != want) {
      failures.note("tableau count mismatch at n=" + std::to_string(n));
    }
  }
  long long round_trips = 0;
  for (const Word& w : enumerate_networks(5)) {
    if (eg_inverse(eg_map(w).q) != w) failures.note("inverse(map) misses a network");
    ++round_trips;
  }
  for (const Tableau& q : enumerate_syt(staircase(5))) {
    if (!(eg_map(eg_inverse(q)).q == q)) failures.note("map(inverse) misses a tableau");
    ++round_trips;
  }
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str()
                                 : std::to_string(round_trips) + " round trips exact";
  return result;
}

CriterionResult eta_reproduction(const VerifyOptions& options, std::optional<EtaTable>& eta4,
                                 std::optional<EtaTable>& eta5) {
  CriterionResult result{3, "interval-height table reproduction", false, 0, ""};
  Failures failures;
  auto check = [&](int n, const std::vector<long long>& want) {
    EtaTable table = eta_table(n);
    if (table.counts != want) failures.note("eta row mismatch at n=" + std::to_string(n));
    if (n == 4) eta4 = std::move(table);
    if (n == 5) eta5 = std::move(table);
  };
  check(3, {1, 1});
  check(4, {2, 2, 8, 2, 2});
  if (!options.quick) {
    check(5, {12, 14, 38, 108, 142, 140, 142, 108, 38, 14, 12});
  }
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str()
                                 : (options.quick ? "rows n=3,4 exact (quick)" : "rows n=3,4,5 exact");
  return result;
}

CriterionResult closed_formula(const VerifyOptions& options, const std::optional<EtaTable>& eta4,
                               const std::optional<EtaTable>& eta5) {
  CriterionResult result{4, "132-avoiding network count formula", false, 0, ""};
  Failures failures;
  const long long expected[] = {1, 2, 12, 286};
  for (int n = 3; n <= 6; ++n) {
    long long want = expected[n - 3];
    if (count_132_formula(n) != want) {
      failures.note("formula value mismatch at n=" + std::to_string(n));
    }
    auto networks = enumerate_networks_avoiding(n, {1, 3, 2});
    if (static_cast<long long>(networks.size()) != want) {
      failures.note("pruned enumeration mismatch at n=" + std::to_string(n));
    }
  }
  // The zero-height tableaux are exactly the 132-avoiding networks.
  EtaTable eta3 = eta_table(3);
  if (eta3.counts[0] != 1) failures.note("eta_{3,0} is not the network count");
  if (eta4 && eta4->counts[0] != 2) failures.note("eta_{4,0} is not the network count");
  if (!options.quick && eta5 && eta5->counts[0] != 12) {
    failures.note("eta_{5,0} is not the network count");
  }
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str() : "counts 1, 2, 12, 286 exact";
  return result;
}

CriterionResult frozen_diagram_suite(const VerifyOptions&) {
  CriterionResult result{5, "frozen region equals the diagram component on every prefix", false, 0,
                         ""};
  Failures failures;
  long long words = 0;
  for (const Permutation& s : all_permutations(5)) {
    for_each_reduced_word(s, [&](const Word& w) {
      ++words;
      Report r = verify_frozen_equals_diagram(w, 5);
      failures.absorb(r, "prefix mismatch");
      return failures.count == 0;
    });
    if (failures.count) break;
  }
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str()
                                 : std::to_string(words) + " reduced words, all prefixes match";
  return result;
}

CriterionResult symmetry_suite(const VerifyOptions&) {
  CriterionResult result{6, "reversal and complement symmetries", false, 0, ""};
  Failures failures;
  long long words = 0;
  for (const Permutation& s : all_permutations(4)) {
    for_each_reduced_word(s, [&](const Word& w) {
      ++words;
      failures.absorb(verify_symmetries(w, 4), "symmetry failure in S4");
      return failures.count == 0;
    });
    if (failures.count) break;
  }
  for (const Word& w : enumerate_networks(5)) {
    ++words;
    failures.absorb(verify_symmetries(w, 5), "symmetry failure on a network");
    if (failures.count) break;
  }
  result.passed = failures.count == 0;
  result.detail =
      failures.count ? failures.detail.str() : std::to_string(words) + " words, zero violations";
  return result;
}

CriterionResult vexillary_suite(const VerifyOptions& options) {
  CriterionResult result{7, "vexillary tableau-diagram correspondence", false, 0, ""};
  Failures failures;

  Permutation example({8, 1, 3, 9, 7, 5, 2, 4, 6});
  Tableau expected = Tableau::from_rows(
      {{1, 3, 4, 5, 6}, {2, 5, 6, 7}, {3, 6, 7}, {4, 7, 8}, {5, 8}, {6}, {7}});
  if (!(vexillary_tableau(example) == expected)) failures.note("worked tableau mismatch");
  if (!(tableau_to_diagram(expected) == rothe_diagram(example))) {
    failures.note("worked diagram mismatch");
  }
  failures.absorb(verify_vexillary_correspondence(example), "worked example");

  int n = options.quick ? 5 : 6;
  long long vexillary_count = 0;
  for (const Permutation& s : all_permutations(n)) {
    if (!is_vexillary(s)) continue;
    ++vexillary_count;
    failures.absorb(verify_vexillary_correspondence(s), "correspondence failure");
    if (failures.count) break;
  }
  // The insertion tableau is constant across the reduced words of a
  // vexillary permutation.
  for (const Permutation& s : all_permutations(5)) {
    if (!is_vexillary(s)) continue;
    std::optional<Tableau> first;
    for_each_reduced_word(s, [&](const Word& w) {
      Tableau p = eg_map(w).p;
      if (!first) {
        first = std::move(p);
      } else if (!(p == *first)) {
        failures.note("insertion tableau varies for " + one_line_brief(s));
        return false;
      }
      return true;
    });
    if (failures.count) break;
  }
  result.passed = failures.count == 0;
  result.detail = failures.count
                      ? failures.detail.str()
                      : std::to_string(vexillary_count) + " vexillary permutations verified";
  return result;
}

CriterionResult word_poset_suite(const VerifyOptions& options, const std::optional<EtaTable>& eta4,
                                 const std::optional<EtaTable>& eta5) {
  CriterionResult result{8, "word poset propositions and height conjecture checks", false, 0, ""};
  Failures failures;
  int max_n = options.quick ? 4 : 5;
  long long posets = 0;
  for (int n = 3; n <= max_n; ++n) {
    auto fibers = staircase_fiber_sweep(n);
    for (const Tableau& q : enumerate_syt(staircase(n), n * (n - 1) / 2)) {
      auto it = fibers.find(q.entries());
      if (it == fibers.end()) {
        failures.note("missing fiber at n=" + std::to_string(n));
        continue;
      }
      WordPoset poset = build_poset_from_elements(q, std::move(it->second));
      ++posets;
      failures.absorb(check_descents(poset), "descents");
      failures.absorb(check_minimal(poset), "minimal element");
      failures.absorb(check_height_formula(poset), "height formula");
      if (failures.count) break;
    }
    if (failures.count) break;
  }
  if (failures.count == 0 && eta4) {
    failures.absorb(check_eta_consequences(4, &*eta4), "consequences n=4");
  }
  if (failures.count == 0 && !options.quick && eta5) {
    failures.absorb(check_eta_consequences(5, &*eta5), "consequences n=5");
  }
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str()
                                 : std::to_string(posets) + " posets, zero counterexamples";
  return result;
}

CriterionResult frozen_boundary_experiment(const VerifyOptions& options) {
  CriterionResult result{9, "frozen boundary against the conjectured arc", false, 0, ""};
  Failures failures;
  const double times[3] = {0.25, 0.5, 0.75};
  const double tolerance = 0.08;
  int seeds = options.quick ? 8 : 50;
  std::vector<int> sizes = options.quick ? std::vector<int>{200} : std::vector<int>{200, 400};

  std::vector<std::vector<std::array<double, 3>>> deviations(sizes.size());
  int threads = options.threads > 0 ? options.threads : default_thread_count();
  for (size_t ni = 0; ni < sizes.size(); ++ni) {
    deviations[ni].assign(seeds, {});
    std::atomic<int> next{0};
    auto worker = [&]() {
      for (int k; (k = next.fetch_add(1)) < seeds;) {
        Word w = random_network(sizes[ni], static_cast<std::uint64_t>(k + 1));
        FrozenTrace trace = frozen_evolution(w, sizes[ni]);
        for (int ti = 0; ti < 3; ++ti) {
          deviations[ni][k][ti] = boundary_deviation(trace, times[ti]);
        }
      }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < std::max(1, threads); ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(4);
  for (int ti = 0; ti < 3; ++ti) {
    std::vector<double> means(sizes.size(), 0.0);
    for (size_t ni = 0; ni < sizes.size(); ++ni) {
      for (int k = 0; k < seeds; ++k) means[ni] += deviations[ni][k][ti];
      means[ni] /= seeds;
    }
    detail << (ti ? ", " : "") << "t=" << times[ti] << ":";
    for (size_t ni = 0; ni < sizes.size(); ++ni) {
      detail << " n" << sizes[ni] << "=" << means[ni];
    }
    if (means[0] > tolerance) {
      failures.note("mean deviation above tolerance at t=" + std::to_string(times[ti]));
    }
    if (sizes.size() > 1 && means[1] > means[0]) {
      failures.note("mean deviation grew when doubling n at t=" + std::to_string(times[ti]));
    }
  }
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str() + " [" + detail.str() + "]"
                                 : detail.str();
  return result;
}

CriterionResult sampling_chi_square(const VerifyOptions& options) {
  CriterionResult result{10, "uniform network sampling chi-square", false, 0, ""};
  Failures failures;
  auto networks = enumerate_networks(4);
  std::map<Word, int> index;
  for (size_t i = 0; i < networks.size(); ++i) index[networks[i]] = static_cast<int>(i);
  int samples = options.quick ? 20000 : 100000;
  std::vector<long long> counts(networks.size(), 0);
  NetworkSampler sampler(4, kChiSquareSeed);
  for (int k = 0; k < samples; ++k) {
    auto it = index.find(sampler.next());
    if (it == index.end()) {
      failures.note("sampler produced a non-network");
      break;
    }
    counts[it->second]++;
  }
  double expected = static_cast<double>(samples) / networks.size();
  double stat = 0;
  for (long long c : counts) {
    double diff = c - expected;
    stat += diff * diff / expected;
  }
  double p = chi_square_pvalue(stat, static_cast<int>(networks.size()) - 1);
  if (p <= 0.001) failures.note("chi-square p-value too small");
  std::ostringstream detail;
  detail << "chi2=" << stat << ", p=" << p << ", seed=" << kChiSquareSeed;
  result.passed = failures.count == 0;
  result.detail = failures.count ? failures.detail.str() + " [" + detail.str() + "]"
                                 : detail.str();
  return result;
}

std::vector<Partition> partitions_of_at_most(int max_cells) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    out.push_back(cur);
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      cur.push_back(part);
      self(self, remaining - part, part);
      cur.pop_back();
    }
  };
  rec(rec, max_cells, max_cells);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

CriterionResult alphabet_bound_soundness(const VerifyOptions& options) {
  CriterionResult result{11, "fiber alphabet bound soundness", false, 0, ""};
  Failures failures;
  int max_cells = options.quick ? 5 : 7;
  long long tableaux = 0;
  for (const Partition& shape : partitions_of_at_most(max_cells)) {
    if (shape.empty()) continue;
    int bound = fiber_alphabet_bound(shape);
    for (const Tableau& q : enumerate_syt(shape, max_cells)) {
      ++tableaux;
      auto with_bound = enumerate_fiber(q, max_cells, bound);
      auto with_slack = enumerate_fiber(q, max_cells, bound + 1);
      if (with_bound != with_slack) {
        failures.note("fiber changed when widening the alphabet");
        break;
      }
    }
    if (failures.count) break;
  }
  result.passed = failures.count == 0;
  result.detail = failures.count
                      ? failures.detail.str()
                      : std::to_string(tableaux) + " tableaux, fibers agree at B and B+1";
  return result;
}

}  // namespace

int default_thread_count() {
  if (const char* env = std::getenv("EGKIT_THREADS")) {
    int value = std::atoi(env);
    if (value >= 1) return std::min(value, 64);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::vector<CriterionResult> run_acceptance(const VerifyOptions& options) {
  std::vector<CriterionResult> results;
  std::optional<EtaTable> eta4;
  std::optional<EtaTable> eta5;
  auto timed = [&](auto&& fn) {
    auto start = Clock::now();
    CriterionResult r = fn();
    r.seconds = seconds_since(start);
    results.push_back(std::move(r));
  };
  timed([&] { return worked_example(options); });
  timed([&] { return bijection_counts(options); });
  timed([&] { return eta_reproduction(options, eta4, eta5); });
  timed([&] { return closed_formula(options, eta4, eta5); });
  timed([&] { return frozen_diagram_suite(options); });
  timed([&] { return symmetry_suite(options); });
  timed([&] { return vexillary_suite(options); });
  timed([&] { return word_poset_suite(options, eta4, eta5); });
  timed([&] { return frozen_boundary_experiment(options); });
  timed([&] { return sampling_chi_square(options); });
  timed([&] { return alphabet_bound_soundness(options); });
  return results;
}

}  // namespace egkit
