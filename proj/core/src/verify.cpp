#include "e6kkr/verify.hpp"

#include <chrono>
#include <iomanip>
#include <map>
#include <ostream>
#include <set>

#include "e6kkr/energy.hpp"
#include "e6kkr/parallel.hpp"
#include "e6kkr/rigged.hpp"

namespace e6kkr {

StepCounters& StepCounters::operator+=(const StepCounters& other) {
  steps += other.steps;
  tied_steps += other.tied_steps;
  statistic += other.statistic;
  table += other.table;
  tie += other.tie;
  image += other.image;
  monotone += other.monotone;
  return *this;
}

DeltaResult checked_delta(const RiggedConfiguration& rc, StepCounters& counters) {
  ++counters.steps;
  std::vector<DeltaResult> branches = delta_all_branches(rc);
  if (branches.size() > 1) ++counters.tied_steps;
  DeltaResult result = std::move(branches.front());
  for (std::size_t k = 1; k < branches.size(); ++k) {
    if (branches[k].b != result.b || branches[k].rc != result.rc) {
      ++counters.tie;
      break;
    }
  }

  const DeltaRecord& record = result.record;
  int previous = 1;
  for (const Selection& s : record.selections) {
    if (s.length < previous) {
      ++counters.monotone;
      break;
    }
    previous = s.length;
  }

  if (!is_valid_rc(result.rc) || result.rc.weight() != rc.weight() - wt(result.b)) ++counters.image;

  if (cc(rc) - cc(result.rc) != -record.first_column_before) ++counters.statistic;
  if (rc.length >= 2) {
    const Vertex left = gamma(result.rc);
    if (local_H(left, result.b) != record.first_column_after - record.first_column_before) {
      ++counters.statistic;
    }
  }

  const VacancyTable before(rc.shape(), rc.length);
  const VacancyTable after(result.rc.shape(), result.rc.length);
  const VacancyChangeProfile predicted = vacancy_change_oracle(record);
  const int top = std::max(before.max_part(), after.max_part()) + 2;
  bool tables_agree = predicted.ordered;
  for (Node a = 1; a <= kRank && tables_agree; ++a) {
    for (int i = 1; i <= top; ++i) {
      const int actual = after.at(a, i) - before.at(a, i);
      if (predicted.at(a, i) != actual || vacancy_change_closed_form(record, a, i) != actual) {
        tables_agree = false;
        break;
      }
    }
  }
  if (!tables_agree) ++counters.table;
  return result;
}

Path checked_phi(const RiggedConfiguration& rc, StepCounters& counters) {
  Path path(static_cast<std::size_t>(std::max(rc.length, 0)));
  RiggedConfiguration current = rc;
  for (std::size_t k = path.size(); k > 0; --k) {
    DeltaResult step = checked_delta(current, counters);
    path[k - 1] = step.b;
    current = std::move(step.rc);
  }
  return path;
}

RiggedConfiguration checked_phi_inv(const Path& path, StepCounters& counters) {
  RiggedConfiguration rc = empty_rc(0);
  for (Vertex b : path) {
    std::vector<DeltaInvTrace> branches = delta_inv_all_branches(rc, b);
    for (std::size_t k = 1; k < branches.size(); ++k) {
      if (branches[k].rc != branches.front().rc) {
        ++counters.tie;
        break;
      }
    }
    const auto& lengths = branches.front().lengths;
    for (std::size_t k = 1; k < lengths.size(); ++k) {
      if (lengths[k] > lengths[k - 1]) {
        ++counters.monotone;
        break;
      }
    }
    rc = std::move(branches.front().rc);
  }
  return rc;
}

std::size_t CaseReport::failures() const {
  return (equal ? 0 : 1) + roundtrip + statistic + table + tie + image + vacancy + fermionic;
}

std::size_t VerifyReport::failing_cases() const {
  std::size_t n = 0;
  for (const CaseReport& c : cases) n += c.failures() > 0 ? 1 : 0;
  return n;
}

std::vector<Weight> candidate_weights(int length) {
  // Dominant weights below L*Lambda_1 are weights of B^{(x)L}, whose
  // coordinates lie in [-L, L].
  std::vector<Weight> out;
  if (length < 0) return out;
  std::array<int, kRank> coords{};
  auto visit = [&](auto& self, std::size_t k) -> void {
    if (k == coords.size()) {
      Weight w(coords);
      if (solve_config_sizes(w, length)) out.push_back(w);
      return;
    }
    for (int v = 0; v <= length; ++v) {
      coords[k] = v;
      self(self, k + 1);
    }
  };
  visit(visit, 0);
  return out;
}

CaseReport verify_case(const Weight& lambda, int length, const std::vector<Path>& paths,
                       const VerifyOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  CaseReport report;
  report.lambda = lambda;
  report.length = length;
  report.paths = paths.size();
  report.x = one_dim_sum(paths);

  const std::vector<Configuration> configs = enumerate_configs(lambda, length);
  report.configs = configs.size();
  for (const Configuration& nu : configs) {
    if (!vacancy_identities_hold(nu, length)) ++report.vacancy;
  }

  const std::vector<RiggedConfiguration> rcs = enumerate_rcs(lambda, length);
  report.rcs = rcs.size();
  for (const RiggedConfiguration& rc : rcs) report.m.add_term(cc(rc), 1);
  if (fermionic_M_binomial(lambda, length) != report.m) report.fermionic = 1;
  report.equal = report.x == report.m;

  const bool exhaustive = length <= options.exhaustive_bijection_length;
  const std::size_t stride = exhaustive ? 1 : std::max<std::size_t>(options.sample_stride, 1);

  StepCounters steps;
  std::set<Path> images;
  for (std::size_t k = 0; k < rcs.size(); k += stride) {
    const RiggedConfiguration& rc = rcs[k];
    ++report.bijection_checked;
    const Path path = checked_phi(rc, steps);
    if (!is_classically_restricted(path, lambda)) ++report.image;
    if (!images.insert(path).second) ++report.image;
    if (cc(rc) != energy_D(path)) ++report.statistic;
    try {
      if (checked_phi_inv(path, steps) != rc) ++report.roundtrip;
    } catch (const InvalidPairError&) {
      ++report.roundtrip;
    }
  }
  for (std::size_t k = 0; k < paths.size(); k += stride) {
    try {
      if (phi(phi_inv(paths[k])) != paths[k]) ++report.roundtrip;
    } catch (const InvalidPairError&) {
      ++report.roundtrip;
    }
  }
  if (exhaustive && images.size() != paths.size()) ++report.image;

  report.statistic += steps.statistic;
  report.table += steps.table;
  report.tie += steps.tie;
  report.image += steps.image + steps.monotone;

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

VerifyReport run_verification(const VerifyOptions& options) {
  struct Job {
    Weight lambda;
    int length;
    const std::vector<Path>* paths;
  };
  static const std::vector<Path> kNoPaths;

  std::vector<std::map<Weight, std::vector<Path>>> hw_by_length;
  std::vector<Job> jobs;
  for (int length = 0; length <= options.max_length; ++length) {
    hw_by_length.push_back(enumerate_all_hw(length, options.jobs));
  }
  for (int length = 0; length <= options.max_length; ++length) {
    const auto& hw = hw_by_length[static_cast<std::size_t>(length)];
    std::set<Weight> weights;
    for (const Weight& w : candidate_weights(length)) weights.insert(w);
    for (const auto& [w, paths] : hw) weights.insert(w);
    for (const Weight& w : weights) {
      auto it = hw.find(w);
      jobs.push_back({w, length, it == hw.end() ? &kNoPaths : &it->second});
    }
  }

  VerifyReport report;
  report.cases.resize(jobs.size());
  parallel_for(jobs.size(), options.jobs, [&](std::size_t k) {
    report.cases[k] = verify_case(jobs[k].lambda, jobs[k].length, *jobs[k].paths, options);
  });
  return report;
}

void write_report(std::ostream& out, const VerifyReport& report, bool with_timing) {
  for (const CaseReport& c : report.cases) {
    out << "L=" << c.length << " weight=" << c.lambda.to_string() << " paths=" << c.paths
        << " rcs=" << c.rcs << " configs=" << c.configs << " equal=" << (c.equal ? "yes" : "no")
        << " X=" << c.x.to_string();
    if (!c.equal) out << " M=" << c.m.to_string();
    out << " checked=" << c.bijection_checked << " roundtrip=" << c.roundtrip
        << " statistic=" << c.statistic << " table=" << c.table << " tie=" << c.tie
        << " image=" << c.image << " vacancy=" << c.vacancy << " fermionic=" << c.fermionic;
    if (with_timing) out << " seconds=" << std::fixed << std::setprecision(3) << c.seconds;
    out << '\n';
  }
  out << "RESULT " << (report.ok() ? "pass" : "fail") << " cases=" << report.cases.size()
      << " failures=" << report.failing_cases() << '\n';
}

}  // namespace e6kkr
