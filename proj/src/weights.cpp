// Copyright 2026 The qconc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "weights.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <json.hpp>

namespace qconc {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw_domain("weight must be finite");
  if (x == 0.0) return 0;
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  long long m = static_cast<long long>(std::ldexp(mant, 53));
  exp -= 53;
  Rational r(m);
  if (exp >= 0)
    r *= Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), exp));
  else
    r /= Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), -exp));
  return r;
}

void WeightScheme::add(const Partition& p, const Rational& w) {
  if (n == 0) n = p.n;
  if (p.n != n) throw_domain("weight scheme mixes partitions of different N");
  if (w < 0) throw_domain("weights must be nonnegative");
  for (auto& [q, wq] : entries)
    if (q == p) {
      wq = w;
      return;
    }
  entries.emplace_back(p, w);
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

namespace {

Rational pow2_exact(int e) {
  if (e >= 0) return Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), e));
  return Rational(1) / Rational(boost::multiprecision::pow(boost::multiprecision::cpp_int(2), -e));
}

}  // namespace

SlackReport verify_weights(int n, const WeightScheme& scheme) {
  if (n < 2 || n > 16) throw_domain("verify_weights: N must be in 2..16");
  if (scheme.n != 0 && scheme.n != n)
    throw_domain("verify_weights: scheme is over N=" + std::to_string(scheme.n) +
                 ", requested N=" + std::to_string(n));

  const SubsetMask full = (SubsetMask{1} << n) - 1;
  const Rational target = pow2_exact(2 - n);

  std::vector<Rational> cover(size_t{1} << n, Rational(0));
  for (const auto& [p, w] : scheme.entries) {
    if (p.n != n) throw_domain("verify_weights: partition over wrong N: " + p.to_string());
    if (w < 0) throw_domain("verify_weights: negative weight on " + p.to_string());
    const Rational coef = w * pow2_exact(2 - p.num_blocks());
    for (SubsetMask a : realized_subsets(p)) cover[a] += coef;
  }

  SlackReport report;
  report.n = n;
  report.valid = true;
  report.tight = true;
  bool first = true;
  for (SubsetMask a = 1; a < full; ++a) {
    Rational slack = target - cover[a];
    if (slack != 0) report.tight = false;
    if (slack < 0) report.valid = false;
    if (first || slack < report.min_slack) {
      report.min_slack = slack;
      report.worst_subset = a;
      first = false;
    }
    report.slacks.emplace_back(a, std::move(slack));
  }
  return report;
}

namespace {

// Dense exact-rational simplex for: maximize c.x s.t. A.x <= b, x >= 0,
// with b >= 0 (slack basis is feasible). Bland's rule, so it terminates.
struct Simplex {
  int rows, cols;  // constraints, structural variables
  std::vector<std::vector<Rational>> t;  // rows x (cols + rows + 1) tableau
  std::vector<int> basis;
  std::vector<Rational> obj;  // reduced objective row, size cols + rows + 1

  Simplex(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
          const std::vector<Rational>& c)
      : rows(static_cast<int>(a.size())), cols(static_cast<int>(c.size())) {
    t.assign(static_cast<size_t>(rows), std::vector<Rational>(static_cast<size_t>(cols + rows + 1), Rational(0)));
    basis.resize(static_cast<size_t>(rows));
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) t[i][j] = a[static_cast<size_t>(i)][static_cast<size_t>(j)];
      t[i][static_cast<size_t>(cols + i)] = 1;
      t[i][static_cast<size_t>(cols + rows)] = b[static_cast<size_t>(i)];
      basis[static_cast<size_t>(i)] = cols + i;
    }
    obj.assign(static_cast<size_t>(cols + rows + 1), Rational(0));
    for (int j = 0; j < cols; ++j) obj[static_cast<size_t>(j)] = c[static_cast<size_t>(j)];
  }

  std::vector<Rational> solve() {
    for (;;) {
      int pivot_col = -1;
      for (int j = 0; j < cols + rows; ++j)
        if (obj[static_cast<size_t>(j)] > 0) {
          pivot_col = j;
          break;
        }
      if (pivot_col < 0) break;

      int pivot_row = -1;
      Rational best_ratio = 0;
      for (int i = 0; i < rows; ++i) {
        const Rational& aij = t[static_cast<size_t>(i)][static_cast<size_t>(pivot_col)];
        if (aij <= 0) continue;
        Rational ratio = t[static_cast<size_t>(i)].back() / aij;
        if (pivot_row < 0 || ratio < best_ratio ||
            (ratio == best_ratio &&
             basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(pivot_row)])) {
          pivot_row = i;
          best_ratio = ratio;
        }
      }
      if (pivot_row < 0) throw_domain("weight optimization is unbounded");

      pivot(pivot_row, pivot_col);
    }
    std::vector<Rational> x(static_cast<size_t>(cols), Rational(0));
    for (int i = 0; i < rows; ++i)
      if (basis[static_cast<size_t>(i)] < cols)
        x[static_cast<size_t>(basis[static_cast<size_t>(i)])] = t[static_cast<size_t>(i)].back();
    return x;
  }

  void pivot(int pr, int pc) {
    auto& prow = t[static_cast<size_t>(pr)];
    const Rational p = prow[static_cast<size_t>(pc)];
    for (auto& v : prow) v /= p;
    for (int i = 0; i < rows; ++i) {
      if (i == pr) continue;
      auto& row = t[static_cast<size_t>(i)];
      const Rational f = row[static_cast<size_t>(pc)];
      if (f == 0) continue;
      for (size_t j = 0; j < row.size(); ++j) row[j] -= f * prow[j];
    }
    const Rational g = obj[static_cast<size_t>(pc)];
    if (g != 0)
      for (size_t j = 0; j < obj.size(); ++j) obj[j] -= g * prow[j];
    basis[static_cast<size_t>(pr)] = pc;
  }
};

std::vector<Partition> canonical_family(int n, const std::vector<Partition>& family) {
  std::vector<Partition> fam;
  for (const Partition& p : family) {
    if (p.n != n) throw_domain("compose_weights: partition over wrong N: " + p.to_string());
    if (std::find(fam.begin(), fam.end(), p) == fam.end()) fam.push_back(p);
  }
  std::sort(fam.begin(), fam.end());
  return fam;
}

}  // namespace

ComposeResult compose_weights(int n, const std::vector<Partition>& family,
                              ComposeObjective objective) {
  if (n < 2 || n > 16) throw_domain("compose_weights: N must be in 2..16");
  if (family.empty()) throw_domain("compose_weights: family must be nonempty");

  const std::vector<Partition> fam = canonical_family(n, family);
  std::vector<std::vector<SubsetMask>> realized(fam.size());
  bool any_realizes = false;
  for (size_t i = 0; i < fam.size(); ++i) {
    realized[i] = realized_subsets(fam[i]);
    any_realizes = any_realizes || !realized[i].empty();
  }

  ComposeResult result;
  result.scheme.n = n;
  if (!any_realizes) {
    // Nothing is constrained and nothing contributes: all weights zero.
    for (const Partition& p : fam) result.scheme.add(p, 0);
    result.profile_uniform = true;
    return result;
  }

  const Rational target = pow2_exact(2 - n);
  const SubsetMask full = (SubsetMask{1} << n) - 1;

  auto run_max_uniform = [&]() -> WeightScheme {
    // Group by size profile; assign finer partitions (more blocks) first.
    std::vector<std::vector<int>> profiles;
    for (const Partition& p : fam) {
      auto prof = p.size_profile();
      if (std::find(profiles.begin(), profiles.end(), prof) == profiles.end())
        profiles.push_back(prof);
    }
    std::sort(profiles.begin(), profiles.end(), [](const auto& a, const auto& b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });

    std::vector<Rational> cover(size_t{1} << n, Rational(0));
    WeightScheme scheme;
    scheme.n = n;
    for (const auto& prof : profiles) {
      // Largest u with cover(a) + u * group_coef(a) <= target for all a.
      std::vector<Rational> group_coef(size_t{1} << n, Rational(0));
      std::vector<size_t> members;
      for (size_t i = 0; i < fam.size(); ++i)
        if (fam[i].size_profile() == prof) {
          members.push_back(i);
          const Rational coef = pow2_exact(2 - fam[i].num_blocks());
          for (SubsetMask a : realized[i]) group_coef[a] += coef;
        }
      bool bounded = false;
      Rational u = 0;
      for (SubsetMask a = 1; a < full; ++a) {
        if (group_coef[a] == 0) continue;
        Rational cap = (target - cover[a]) / group_coef[a];
        if (!bounded || cap < u) {
          u = cap;
          bounded = true;
        }
      }
      if (!bounded) u = 0;  // group realizes nothing
      if (u < 0) u = 0;
      for (size_t i : members) {
        scheme.add(fam[i], u);
        if (u != 0) {
          const Rational coef = u * pow2_exact(2 - fam[i].num_blocks());
          for (SubsetMask a : realized[i]) cover[a] += coef;
        }
      }
    }
    return scheme;
  };

  auto scheme_total = [](const WeightScheme& s) {
    Rational total = 0;
    for (const auto& [p, w] : s.entries) total += w;
    return total;
  };

  const WeightScheme uniform_scheme = run_max_uniform();
  const Rational uniform_total = scheme_total(uniform_scheme);

  if (objective == ComposeObjective::max_uniform) {
    result.scheme = uniform_scheme;
    result.total_weight = uniform_total;
    result.profile_uniform = true;
    return result;
  }

  // max_total: exact LP over per-partition weights. Variables in canonical
  // family order; partitions realizing nothing are pinned to zero.
  std::vector<size_t> vars;
  for (size_t i = 0; i < fam.size(); ++i)
    if (!realized[i].empty()) vars.push_back(i);

  std::vector<std::vector<Rational>> a;
  std::vector<Rational> b;
  for (SubsetMask s = 1; s < full; ++s) {
    std::vector<Rational> row(vars.size(), Rational(0));
    bool nonzero = false;
    for (size_t v = 0; v < vars.size(); ++v) {
      const size_t i = vars[v];
      if (std::binary_search(realized[i].begin(), realized[i].end(), s)) {
        row[v] = pow2_exact(2 - fam[i].num_blocks());
        nonzero = true;
      }
    }
    if (nonzero) {
      a.push_back(std::move(row));
      b.push_back(target);
    }
  }
  std::vector<Rational> c(vars.size(), Rational(1));
  Simplex lp(a, b, c);
  const std::vector<Rational> x = lp.solve();

  for (size_t i = 0; i < fam.size(); ++i) result.scheme.add(fam[i], 0);
  Rational total = 0;
  for (size_t v = 0; v < vars.size(); ++v) {
    result.scheme.add(fam[vars[v]], x[v]);
    total += x[v];
  }
  result.total_weight = total;
  result.profile_uniform = uniform_total == total;
  return result;
}

WeightScheme four_party_theorem_scheme() {
  WeightScheme s;
  s.n = 4;
  for (const Partition& p : enumerate_partitions(4, 3)) s.add(p, Rational(1) / 6);
  for (const Partition& p : enumerate_partitions(4, 2))
    if (p.size_profile() == std::vector<int>{2, 2}) s.add(p, Rational(1) / 12);
  return s;
}

WeightScheme four_party_bipartition_scheme() {
  WeightScheme s;
  s.n = 4;
  for (const Partition& p : enumerate_partitions(4, 2)) s.add(p, Rational(1) / 4);
  return s;
}

namespace {

Rational weight_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer())
      throw_io("scheme weight arrays must be [numerator, denominator] integers");
    const long long num = j[0].get<long long>();
    const long long den = j[1].get<long long>();
    if (den == 0) throw_io("scheme weight has zero denominator");
    return Rational(num) / Rational(den);
  }
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number_float()) return rational_from_double(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const size_t slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
      return Rational(boost::multiprecision::cpp_int(s.substr(0, slash))) /
             Rational(boost::multiprecision::cpp_int(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw_io("scheme weight string '" + s + "' is not a valid fraction");
    }
  }
  throw_io("scheme weight must be [num,den], an integer, a number or a \"num/den\" string");
}

}  // namespace

WeightScheme scheme_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw_io(std::string("scheme JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("weights"))
    throw_io("scheme JSON must be an object with fields \"n\" and \"weights\"");
  if (!j["n"].is_number_integer()) throw_io("scheme field \"n\" must be an integer");
  const int n = j["n"].get<int>();
  if (!j["weights"].is_object()) throw_io("scheme field \"weights\" must be an object");

  WeightScheme scheme;
  scheme.n = n;
  for (const auto& [key, value] : j["weights"].items()) {
    Partition p = parse_partition(key, n);
    Rational w = weight_from_json(value);
    if (w < 0) throw_io("scheme weight for " + key + " is negative");
    scheme.add(p, w);
  }
  return scheme;
}

std::string scheme_to_json(const WeightScheme& scheme) {
  nlohmann::ordered_json weights = nlohmann::ordered_json::object();
  const boost::multiprecision::cpp_int ll_max = std::numeric_limits<long long>::max();
  for (const auto& [p, w] : scheme.entries) {
    if (boost::multiprecision::abs(numerator(w)) <= ll_max && denominator(w) <= ll_max)
      weights[p.to_string()] = nlohmann::ordered_json::array(
          {numerator(w).convert_to<long long>(), denominator(w).convert_to<long long>()});
    else
      weights[p.to_string()] = to_fraction_string(w);
  }
  nlohmann::ordered_json j;
  j["n"] = scheme.n;
  j["weights"] = weights;
  return j.dump();
}

std::string slack_report_to_json(const SlackReport& report) {
  nlohmann::ordered_json slacks = nlohmann::ordered_json::object();
  for (const auto& [mask, slack] : report.slacks) {
    nlohmann::ordered_json entry;
    entry["exact"] = to_fraction_string(slack);
    entry["decimal"] = to_double(slack);
    slacks[mask_to_string(mask)] = entry;
  }
  nlohmann::ordered_json j;
  j["n"] = report.n;
  j["valid"] = report.valid;
  j["tight"] = report.tight;
  j["min_slack"] = to_fraction_string(report.min_slack);
  j["worst_subset"] = mask_to_string(report.worst_subset);
  j["slacks"] = slacks;
  return j.dump();
}

}  // namespace qconc
