#include "collapse/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <thread>

#include "collapse/words.hpp"

namespace collapse {

std::vector<Transformation> all_maps(int n) {
  if (n < 1 || n > 8) throw Error("state count " + std::to_string(n) + " outside 1..8");
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) total *= static_cast<std::size_t>(n);
  std::vector<Transformation> out;
  out.reserve(total);
  std::vector<int> images(static_cast<std::size_t>(n), 0);
  for (std::size_t c = 0; c < total; ++c) {
    out.emplace_back(std::span<const int>(images));
    for (int i = n - 1; i >= 0; --i) {
      if (++images[static_cast<std::size_t>(i)] < n) break;
      images[static_cast<std::size_t>(i)] = 0;
    }
  }
  return out;
}

void enumerate_automata(int n, const EnumFilter& filter, const std::function<void(const Automaton&)>& visit,
                        Shard shard) {
  if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count) throw Error("invalid shard");
  const std::vector<Transformation> maps = all_maps(n);
  const auto keep = [](const std::optional<LetterType>& want, const Transformation& t) {
    return !want || classify_letter(t).type == *want;
  };
  std::vector<const Transformation*> bs;
  for (const auto& t : maps) {
    if (keep(filter.b_type, t)) bs.push_back(&t);
  }
  for (std::size_t i = static_cast<std::size_t>(shard.index); i < maps.size(); i += static_cast<std::size_t>(shard.count)) {
    if (!keep(filter.a_type, maps[i])) continue;
    for (const Transformation* b : bs) visit(Automaton(maps[i], *b));
  }
}

std::vector<std::string> SweepReport::unfired_branches() const {
  std::vector<std::string> out;
  for (const std::string& id : all_branches()) {
    if (!branch_counts.count(id)) out.push_back(id);
  }
  return out;
}

std::uint64_t SweepReport::proper_count(const std::string& family) const {
  const auto it = verdicts.find(family);
  return it == verdicts.end() ? 0 : it->second[static_cast<std::size_t>(Verdict::Proper)];
}

namespace {

using Clock = std::chrono::steady_clock;

bool automaton_less(const Automaton& x, const Automaton& y) {
  const auto xa = x.a.images(), ya = y.a.images();
  if (xa != ya) return xa < ya;
  return x.b.images() < y.b.images();
}

void note_failure(SweepReport& r, Finding f, std::uint64_t weight) {
  r.failure_count += weight;
  r.failures.push_back(std::move(f));
  if (r.failures.size() > 4 * kMaxListedFailures) {
    std::sort(r.failures.begin(), r.failures.end(),
              [](const Finding& x, const Finding& y) { return automaton_less(x.automaton, y.automaton); });
    r.failures.resize(kMaxListedFailures);
  }
}

void merge_into(SweepReport& dst, SweepReport&& src) {
  dst.examined += src.examined;
  dst.compressible += src.compressible;
  for (const auto& [k, v] : src.verdicts) {
    auto& d = dst.verdicts[k];
    for (std::size_t i = 0; i < 3; ++i) d[i] += v[i];
  }
  for (const auto& [k, v] : src.branch_counts) dst.branch_counts[k] += v;
  for (const auto& [k, v] : src.counters) dst.counters[k] += v;
  dst.failure_count += src.failure_count;
  dst.menu_failures += src.menu_failures;
  for (auto& f : src.failures) dst.failures.push_back(std::move(f));
}

void finish(SweepReport& r) {
  std::sort(r.failures.begin(), r.failures.end(),
            [](const Finding& x, const Finding& y) { return automaton_less(x.automaton, y.automaton); });
  if (r.failures.size() > kMaxListedFailures) r.failures.resize(kMaxListedFailures);
}

// Runs `body(shard, partial)` on opt.threads shards and merges the partials.
void run_sharded(SweepReport& report, int threads, const std::function<void(Shard, SweepReport&)>& body) {
  const int count = std::max(1, threads);
  std::vector<SweepReport> partial(static_cast<std::size_t>(count));
  if (count == 1) {
    body(Shard{0, 1}, partial[0]);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < count; ++s) {
      pool.emplace_back([&, s] { body(Shard{s, count}, partial[static_cast<std::size_t>(s)]); });
    }
    for (auto& t : pool) t.join();
  }
  for (auto& p : partial) merge_into(report, std::move(p));
  finish(report);
}

// ---- families ---------------------------------------------------------------

struct FamilySpec {
  std::string label;
  LetterType low;
  LetterType high;
};

std::optional<LetterType> type_from_code(char c) {
  switch (c) {
    case '1': return LetterType::Type1;
    case '2': return LetterType::Type2;
    case '3': return LetterType::Type3;
    case '4': return LetterType::Type4;
    case 'p': return LetterType::Permutation;
    default: return std::nullopt;
  }
}

int rank(LetterType t) {
  switch (t) {
    case LetterType::Heavy: return 0;
    case LetterType::Type1: return 1;
    case LetterType::Type2: return 2;
    case LetterType::Type3: return 3;
    case LetterType::Type4: return 4;
    case LetterType::Permutation: return 5;
  }
  return 0;
}

FamilySpec parse_family(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '(' && c != ')') s += c;
  }
  const auto bad = [&] { return Error("unknown family '" + text + "'; expected e.g. (3,p) or (1,4)"); };
  if (s.size() != 3 || s[1] != ',') throw bad();
  auto x = type_from_code(s[0]), y = type_from_code(s[2]);
  if (!x || !y) throw bad();
  if (rank(*y) < rank(*x)) std::swap(x, y);
  FamilySpec f{"", *x, *y};
  const auto code = [](LetterType t) { return t == LetterType::Permutation ? std::string("p") : to_string(t); };
  f.label = "(" + code(f.low) + "," + code(f.high) + ")";
  if (std::find(family_labels().begin(), family_labels().end(), f.label) == family_labels().end()) throw bad();
  return f;
}

// Canonical witness of a letter type and the number of witness placements.
std::array<int, 4> canonical_witness(LetterType t) {
  switch (t) {
    case LetterType::Type1: return {0, 1, 2, -1};
    case LetterType::Type2: return {0, 1, 2, 3};
    case LetterType::Type3: return {0, 1, -1, -1};
    case LetterType::Type4: return {0, 1, 2, -1};
    default: return {-1, -1, -1, -1};
  }
}

std::uint64_t placements(LetterType t, int n) {
  const std::uint64_t m = static_cast<std::uint64_t>(n);
  switch (t) {
    case LetterType::Type1: return m * (m - 1) / 2 * (m - 2);
    case LetterType::Type2: return m * (m - 1) * (m - 2) * (m - 3) / 2;
    case LetterType::Type3: return m * (m - 1);
    case LetterType::Type4: return m * (m - 1) * (m - 2);
    default: return 1;
  }
}

void check_one(SweepReport& r, const Automaton& A, std::uint64_t weight) {
  const FamilyVerdict fv = characterize(A);
  const Verdict oracle = is_proper(A, 3);
  r.examined += weight;
  if (oracle != Verdict::NotCompressible) r.compressible += weight;
  r.verdicts[fv.family.label()][static_cast<std::size_t>(oracle)] += weight;
  r.branch_counts[fv.matched_branch] += weight;
  if (fv.verdict != oracle) {
    note_failure(r, Finding{A, to_string(oracle), to_string(fv.verdict), fv.matched_branch}, weight);
    return;
  }
  if (oracle == Verdict::Proper) {
    const bool covered = std::any_of(fv.word_menu.begin(), fv.word_menu.end(),
                                     [&](const Word& w) { return deficiency(A, w) >= 3; });
    if (!covered) {
      r.menu_failures += weight;
      note_failure(r, Finding{A, "a menu word 3-compresses", "no menu word does", fv.matched_branch}, 0);
    }
  }
}

}  // namespace

const std::vector<std::string>& family_labels() {
  static const std::vector<std::string> labels = {
      "(1,p)", "(2,p)", "(3,p)", "(4,p)", "(1,1)", "(1,2)", "(2,2)", "(1,4)",
      "(2,4)", "(1,3)", "(2,3)", "(3,3)", "(3,4)", "(4,4)", "(p,p)",
  };
  return labels;
}

SweepReport verify_characterization(int n, const std::vector<std::string>& families, const SweepOptions& opt) {
  const auto t0 = Clock::now();
  SweepReport report;
  report.kind = "characterization";
  report.n = n;
  const std::vector<Transformation> maps = all_maps(n);

  if (families.empty()) {
    run_sharded(report, opt.threads, [&](Shard s, SweepReport& part) {
      for (std::size_t i = static_cast<std::size_t>(s.index); i < maps.size(); i += static_cast<std::size_t>(s.count)) {
        for (const auto& b : maps) check_one(part, Automaton(maps[i], b), 1);
      }
    });
    report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return report;
  }

  std::map<LetterType, std::vector<const Transformation*>> by_type;
  std::map<LetterType, std::vector<const Transformation*>> canonical;
  for (const auto& t : maps) {
    const LetterClass c = classify_letter(t);
    by_type[c.type].push_back(&t);
    if (c.witness == canonical_witness(c.type)) canonical[c.type].push_back(&t);
  }

  // One job per ordered letter-type pair; a job's a-maps are sharded.
  struct Job {
    const std::vector<const Transformation*>* as;
    const std::vector<const Transformation*>* bs;
    std::uint64_t weight;
  };
  std::vector<Job> jobs;
  for (const std::string& text : families) {
    const FamilySpec f = parse_family(text);
    report.families.push_back(f.label);
    const bool mixed = f.low != f.high;
    if (opt.reduce && f.low != LetterType::Permutation) {
      jobs.push_back({&canonical[f.low], &by_type[f.high], placements(f.low, n) * (mixed ? 2u : 1u)});
      report.reduced = true;
    } else {
      jobs.push_back({&by_type[f.low], &by_type[f.high], 1});
      if (mixed) jobs.push_back({&by_type[f.high], &by_type[f.low], 1});
    }
  }

  run_sharded(report, opt.threads, [&](Shard s, SweepReport& part) {
    for (const Job& job : jobs) {
      for (std::size_t i = static_cast<std::size_t>(s.index); i < job.as->size(); i += static_cast<std::size_t>(s.count)) {
        for (const Transformation* b : *job.bs) check_one(part, Automaton(*(*job.as)[i], *b), job.weight);
      }
    }
  });
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

SweepReport verify_word(const Word& w, int n, int k, const SweepOptions& opt) {
  if (k < 1 || k >= n) throw Error("threshold " + std::to_string(k) + " must satisfy 1 <= k < n = " + std::to_string(n));
  const auto t0 = Clock::now();
  SweepReport report;
  report.kind = "word";
  report.n = n;
  report.k = k;
  report.word = w.str();
  const std::vector<Transformation> maps = all_maps(n);
  run_sharded(report, opt.threads, [&](Shard s, SweepReport& part) {
    for (std::size_t i = static_cast<std::size_t>(s.index); i < maps.size(); i += static_cast<std::size_t>(s.count)) {
      for (const auto& b : maps) {
        const Automaton A(maps[i], b);
        ++part.examined;
        if (shortest_compressing_length(A, k) < 0) continue;
        ++part.compressible;
        const int d = deficiency(A, w);
        if (d < k) note_failure(part, Finding{A, "deficiency >= " + std::to_string(k), "deficiency " + std::to_string(d), ""}, 1);
      }
    }
  });
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

SweepReport pair_sweep(const Word& s, int n, const SweepOptions& opt) {
  const auto t0 = Clock::now();
  SweepReport report;
  report.kind = "pair";
  report.n = n;
  report.word = s.str();
  const Word ds = dual(s);
  const std::vector<Transformation> maps = all_maps(n);
  run_sharded(report, opt.threads, [&](Shard sh, SweepReport& part) {
    for (std::size_t i = static_cast<std::size_t>(sh.index); i < maps.size(); i += static_cast<std::size_t>(sh.count)) {
      for (const auto& b : maps) {
        const Automaton A(maps[i], b);
        ++part.examined;
        if (shortest_compressing_length(A, 3) < 0) continue;
        ++part.compressible;
        const bool by_s = deficiency(A, s) >= 3;
        const bool by_dual = deficiency(A, ds) >= 3;
        if (by_s && by_dual) ++part.counters["by_both"];
        else if (by_s) ++part.counters["by_word_only"];
        else if (by_dual) ++part.counters["by_dual_only"];
        else note_failure(part, Finding{A, "compressed by the word or its dual", "neither", ""}, 1);
      }
    }
  });
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

SweepReport five_state_pair_sweep(const SweepOptions& opt) { return pair_sweep(words::kS32, 5, opt); }

Automaton s32_counterexample() { return Automaton(Transformation{0, 3, 4, 2, 1}, Transformation{3, 0, 0, 1, 4}); }

}  // namespace collapse
