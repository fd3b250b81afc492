#include "egkit/networks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "egkit/eg.hpp"
#include "egkit/jdt.hpp"

namespace egkit {

namespace {

long long network_length(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

void require_network(const Word& w, int n) {
  if (static_cast<long long>(w.size()) != network_length(n) ||
      !(compose_word(w, n) == Permutation::reversal(n))) {
    throw std::invalid_argument("word is not a sorting network of [n]");
  }
}

}  // namespace

std::vector<Word> enumerate_reduced_words(const Permutation& s, long long cap) {
  std::vector<Word> out;
  for_each_reduced_word(s, [&](const Word& w) {
    out.push_back(w);
    return cap < 0 || static_cast<long long>(out.size()) < cap;
  });
  return out;
}

std::vector<Word> enumerate_networks(int n, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > max_n) throw std::invalid_argument("full enumeration cap exceeded");
  return enumerate_reduced_words(Permutation::reversal(n));
}

std::vector<Word> enumerate_networks_avoiding(int n, const std::vector<int>& pattern, int max_n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > max_n) throw std::invalid_argument("full enumeration cap exceeded");
  std::vector<Word> out;
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  long long target = network_length(n);
  Word prefix;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<long long>(prefix.size()) == target) {
      out.push_back(prefix);
      return;
    }
    for (int i = 1; i < n; ++i) {
      if (line[i - 1] < line[i]) {
        std::swap(line[i - 1], line[i]);
        if (avoids_pattern(Permutation(line), pattern)) {
          prefix.push_back(i);
          self(self);
          prefix.pop_back();
        }
        std::swap(line[i - 1], line[i]);
      }
    }
  };
  rec(rec);
  return out;
}

BigInt count_132_formula(int n) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  BigInt numer = 1;
  for (long long k = 2; k <= network_length(n); ++k) numer *= k;
  for (int k = 2; k <= n - 2; ++k) {
    for (int j = 2; j <= k; ++j) numer *= j;
  }
  BigInt denom = 1;
  for (int k = 1; k <= n - 1; ++k) {
    for (int j = 2; j <= 2 * k - 1; ++j) denom *= j;
  }
  detail::require(numer % denom == 0, "network count formula must divide evenly");
  return numer / denom;
}

NetworkFacts characterize_network(const Word& w, int n) {
  require_network(w, n);
  NetworkFacts facts;
  facts.prefixes_avoid_132 = true;
  facts.prefixes_avoid_213 = true;
  std::vector<int> line(n);
  for (int i = 0; i < n; ++i) line[i] = i + 1;
  for (int letter : w) {
    std::swap(line[letter - 1], line[letter]);
    Permutation prefix(line);
    if (!avoids_132(prefix)) facts.prefixes_avoid_132 = false;
    if (!avoids_213(prefix)) facts.prefixes_avoid_213 = false;
    if (!facts.prefixes_avoid_132 && !facts.prefixes_avoid_213) break;
  }
  Tableau q = eg_map(w).q;
  facts.q_shifted = is_shifted_staircase(q);
  facts.q_antidiagonal = is_antidiagonal_increasing(q);
  facts.lattice_word = is_lattice_word(w, staircase(n));
  facts.equals_column_word = w == column_word(q);
  facts.complement_lattice_word = is_lattice_word(complement_word(w, n), staircase(n));
  return facts;
}

Report characterize_network_report(const Word& w, int n) {
  Report report;
  report.name = "sorting network characterizations";
  NetworkFacts f = characterize_network(w, n);
  ++report.checks;
  if (f.q_shifted != f.prefixes_avoid_132 || f.lattice_word != f.prefixes_avoid_132 ||
      f.equals_column_word != f.prefixes_avoid_132) {
    report.fail("the four 132 criteria disagree");
  }
  ++report.checks;
  if (f.q_antidiagonal != f.prefixes_avoid_213 || f.complement_lattice_word != f.prefixes_avoid_213) {
    report.fail("the three 213 criteria disagree");
  }
  return report;
}

Tableau random_syt(const Partition& shape, std::mt19937_64& rng) {
  validate_partition(shape);
  std::vector<int> row_len(shape.begin(), shape.end());
  Partition conj = conjugate_partition(shape);
  std::vector<int> col_len(conj.begin(), conj.end());
  long long remaining = partition_cells(shape);
  std::vector<std::vector<int>> grid(shape.size());
  for (size_t i = 0; i < shape.size(); ++i) grid[i].assign(shape[i], 0);
  for (long long k = remaining; k >= 1; --k) {
    // Uniform cell of the current diagram, then hook-walk to a corner.
    auto pick = static_cast<long long>(detail::uniform_below(rng, remaining));
    int i = 0;
    while (pick >= row_len[i]) pick -= row_len[i++];
    int j = static_cast<int>(pick);  // 0-based column
    while (true) {
      int arm = row_len[i] - (j + 1);
      int leg = col_len[j] - (i + 1);
      if (arm + leg == 0) break;
      auto h = static_cast<int>(detail::uniform_below(rng, arm + leg));
      if (h < arm) {
        j += 1 + h;
      } else {
        i += 1 + (h - arm);
      }
    }
    grid[i][j] = static_cast<int>(k);
    row_len[i]--;
    col_len[j]--;
    --remaining;
  }
  Tableau out = Tableau::from_rows(grid);
  detail::require(out.is_standard(), "hook walk must produce a standard tableau");
  return out;
}

Word NetworkSampler::next() {
  Tableau q = random_syt(staircase(n_), rng_);
  return eg_inverse(q);
}

Word random_network(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("n must be >= 2");
  return NetworkSampler(n, seed).next();
}

Partition FrozenTrace::shape_at(int step) const {
  Partition out;
  for (const auto& row : freeze_step) {
    auto it = std::upper_bound(row.begin(), row.end(), step);
    int len = static_cast<int>(it - row.begin());
    if (len == 0) break;
    out.push_back(len);
  }
  detail::require(is_partition(out) || out.empty(), "frozen shapes must be Young diagrams");
  return out;
}

FrozenTrace frozen_evolution(const Word& w, int n) {
  require_network(w, n);
  FrozenTrace trace;
  trace.n = n;
  trace.length = static_cast<int>(w.size());
  trace.freeze_step.resize(n - 1);
  for (int i = 0; i < n - 1; ++i) trace.freeze_step[i].assign(n - 1 - i, 0);
  InsertionState state;
  std::vector<int> frozen_len(n - 1, 0);
  for (int k = 1; k <= static_cast<int>(w.size()); ++k) {
    state.insert(w[k - 1]);
    const auto& p = state.p_rows();
    for (size_t i = 0; i < p.size(); ++i) {
      int limit = i == 0 ? n : frozen_len[i - 1];
      int& len = frozen_len[i];
      while (len < limit && len < static_cast<int>(p[i].size()) &&
             p[i][len] == static_cast<int>(i) + len + 1) {
        trace.freeze_step[i][len] = k;
        ++len;
      }
    }
  }
  for (int i = 0; i < n - 1; ++i) {
    detail::require(frozen_len[i] == n - 1 - i, "a sorting network must end frozen");
  }
  return trace;
}

namespace {
void require_time(double t) {
  if (!(t > 0.0 && t < 1.0)) throw std::invalid_argument("t must lie in (0, 1)");
}
}  // namespace

std::vector<PointXY> scaled_frozen_region(const FrozenTrace& trace, double t) {
  require_time(t);
  int step = static_cast<int>(std::floor(t * trace.length));
  Partition shape = trace.shape_at(step);
  std::vector<PointXY> out;
  for (size_t i = 1; i <= shape.size(); ++i) {
    for (int j = 1; j <= shape[i - 1]; ++j) {
      out.push_back({2.0 * j / trace.n - 1.0, 1.0 - 2.0 * static_cast<double>(i) / trace.n});
    }
  }
  return out;
}

std::vector<PointXY> scaled_frozen_boundary(const FrozenTrace& trace, double t) {
  require_time(t);
  int step = static_cast<int>(std::floor(t * trace.length));
  Partition shape = trace.shape_at(step);
  std::vector<PointXY> out;
  for (size_t i = 1; i <= shape.size(); ++i) {
    for (int j = 1; j <= shape[i - 1]; ++j) {
      bool east_outside = j == shape[i - 1];
      bool south_outside = i == shape.size() || shape[i] < j;
      if (east_outside || south_outside) {
        out.push_back({2.0 * j / trace.n - 1.0, 1.0 - 2.0 * static_cast<double>(i) / trace.n});
      }
    }
  }
  return out;
}

std::vector<PointXY> conjecture_boundary(double t, int num_points) {
  require_time(t);
  if (num_points < 2) throw std::invalid_argument("need at least two samples");
  const double pi = std::acos(-1.0);
  double c = std::cos(pi * t);
  double s = std::sin(pi * t);
  // Principal axes u = (x+y)/sqrt(2), v = (x-y)/sqrt(2) turn the quadric into
  // u^2 (1+c) + v^2 (1-c) = s^2.
  double au = s / std::sqrt(1.0 + c);
  double av = s / std::sqrt(1.0 - c);
  auto angle_of = [&](double x, double y) {
    double u = (x + y) / std::sqrt(2.0);
    double v = (x - y) / std::sqrt(2.0);
    return std::atan2(v / av, u / au);
  };
  auto point_at = [&](double theta) {
    double u = au * std::cos(theta);
    double v = av * std::sin(theta);
    return PointXY{(u + v) / std::sqrt(2.0), (u - v) / std::sqrt(2.0)};
  };
  double theta_a = angle_of(-1.0, c);  // arc endpoint on x = -1
  double theta_b = angle_of(-c, 1.0);  // arc endpoint on y = 1
  double delta = theta_b - theta_a;
  while (delta <= -pi) delta += 2.0 * pi;
  while (delta > pi) delta -= 2.0 * pi;
  PointXY mid = point_at(theta_a + delta / 2.0);
  if (!(mid.x <= -c + 1e-9 && mid.y >= c - 1e-9)) {
    // Take the complementary arc.
    delta = delta > 0 ? delta - 2.0 * pi : delta + 2.0 * pi;
  }
  std::vector<PointXY> out;
  out.reserve(num_points);
  for (int k = 0; k < num_points; ++k) {
    double theta = theta_a + delta * k / (num_points - 1);
    out.push_back(point_at(theta));
  }
  return out;
}

double boundary_deviation(const FrozenTrace& trace, double t, int arc_points) {
  require_time(t);
  if (arc_points <= 1) arc_points = 10 * trace.n;
  std::vector<PointXY> boundary = scaled_frozen_boundary(trace, t);
  if (boundary.empty()) return 0.0;
  std::vector<PointXY> arc = conjecture_boundary(t, arc_points);
  double worst = 0.0;
  for (const PointXY& b : boundary) {
    double best = std::numeric_limits<double>::max();
    for (const PointXY& a : arc) {
      double dx = b.x - a.x;
      double dy = b.y - a.y;
      best = std::min(best, dx * dx + dy * dy);
    }
    worst = std::max(worst, best);
  }
  return std::sqrt(worst);
}

std::string wiring_diagram_svg(const Word& w, int n) {
  validate_word(w);
  for (int letter : w) {
    if (letter >= n) throw std::invalid_argument("word letter must be <= n - 1");
  }
  const int margin = 20;
  const int dx = 36;
  const int dy = 28;
  int m = static_cast<int>(w.size());
  int width = 2 * margin + std::max(1, m) * dx;
  int height = 2 * margin + (n - 1) * dy;
  static const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                                   "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                                   "#bcbd22", "#17becf"};
  // wire_at[p] = wire currently running in position p (0-based).
  std::vector<int> wire_at(n);
  for (int p = 0; p < n; ++p) wire_at[p] = p;
  std::vector<std::vector<int>> track(n);  // wire -> position per time step
  for (int p = 0; p < n; ++p) track[p].push_back(p);
  for (int k = 0; k < m; ++k) {
    std::swap(wire_at[w[k] - 1], wire_at[w[k]]);
    for (int p = 0; p < n; ++p) track[wire_at[p]].push_back(p);
  }
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  for (int wire = 0; wire < n; ++wire) {
    svg << "  <polyline fill=\"none\" stroke=\"" << kPalette[wire % 10]
        << "\" stroke-width=\"2\" points=\"";
    for (int k = 0; k <= m; ++k) {
      if (k) svg << ' ';
      svg << margin + k * dx << ',' << margin + track[wire][k] * dy;
    }
    svg << "\"/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace egkit
