#include <gtest/gtest.h>

#include "support.hpp"

using namespace wlpkit;
using namespace wlpkit::testing;

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s;
}

void expect_same(const ExperimentReport& a, const ExperimentReport& b) {
  EXPECT_EQ(a.passes, b.passes);
  EXPECT_EQ(a.failures, b.failures);
  EXPECT_EQ(a.coverage, b.coverage);
  EXPECT_EQ(a.notes, b.notes);
  EXPECT_EQ(a.expectation_met, b.expectation_met);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const TrialRecord& x = a.records[i];
    const TrialRecord& y = b.records[i];
    EXPECT_EQ(x.index, i);
    EXPECT_EQ(x.seed, y.seed);
    EXPECT_EQ(x.hilbert, y.hilbert);
    EXPECT_EQ(x.strategy, y.strategy);
    EXPECT_EQ(x.has_wlp, y.has_wlp);
    EXPECT_EQ(x.passed, y.passed);
    EXPECT_EQ(x.note, y.note);
    EXPECT_EQ(x.dual_generators, y.dual_generators);
  }
}

}  // namespace

TEST(Catalog, NamesAreUniqueAndFindable) {
  std::set<std::string> names;
  for (const auto& rec : catalog()) {
    EXPECT_TRUE(names.insert(rec.name).second) << rec.name;
    EXPECT_EQ(&find_example(rec.name), &rec);
  }
  EXPECT_GE(names.size(), 11U);
  try {
    (void)find_example("no-such-example");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::unknown_example);
  }
}

TEST(Catalog, EveryRecordReproduces) {
  for (const auto& rec : catalog()) {
    const ExampleResult res = run_record(rec);
    EXPECT_TRUE(res.passed) << rec.name;
    for (const auto& d : res.diffs) ADD_FAILURE() << rec.name << ": " << d.field << " expected " << d.expected << " got " << d.computed;
    for (const auto& c : res.checks) EXPECT_TRUE(c.passed) << rec.name << ": " << c.name << " " << c.detail;
  }
}

TEST(Catalog, HilbertFunctionsOfNamedRecords) {
  EXPECT_EQ(build_algebra(find_example("cubes-xyz")).hilbert(), (HilbertSeq{1, 3, 6, 6, 3}));
  EXPECT_EQ(build_algebra(find_example("type2-socle4")).hilbert(), (HilbertSeq{1, 3, 6, 6, 2}));
  EXPECT_EQ(build_algebra(find_example("codim4-type2")).hilbert(), (HilbertSeq{1, 4, 7, 7, 2}));
  EXPECT_EQ(build_algebra(find_example("codim3-type4")).hilbert(), (HilbertSeq{1, 3, 6, 8, 10, 10, 7, 4}));
  EXPECT_EQ(build_algebra(find_example("ci-squares-qq")).hilbert(), (HilbertSeq{1, 3, 3, 1}));
  for (int r = 4; r <= 7; ++r) EXPECT_EQ(build_algebra(find_example("socle2-r" + std::to_string(r))).hilbert(), (HilbertSeq{1, r, r}));
}

TEST(Catalog, CorruptedRecordReportsDiff) {
  ExampleRecord rec = find_example("cubes-xyz");
  rec.hilbert = HilbertSeq{1, 3, 6, 6, 4};
  rec.wlp.achieved_rank = 6;
  const ExampleResult res = run_record(rec);
  EXPECT_FALSE(res.passed);
  ASSERT_EQ(res.diffs.size(), 2U);
  EXPECT_EQ(res.diffs[0].field, "hilbert");
  EXPECT_EQ(res.diffs[0].expected, "(1,3,6,6,4)");
  EXPECT_EQ(res.diffs[0].computed, "(1,3,6,6,3)");
  EXPECT_EQ(res.diffs[1].field, "achieved_rank");
  EXPECT_EQ(res.diffs[1].computed, "5");
}

TEST(Catalog, FiniteFieldRecordIsExhaustive) {
  const ExampleResult res = run_example("ci-squares-gf2");
  EXPECT_TRUE(res.passed);
  EXPECT_EQ(res.wlp.sampling.mode, "exhaustive");
  EXPECT_EQ(res.wlp.sampling.num_forms, 7U);
  EXPECT_FALSE(res.wlp.has_property);
}

TEST(Catalog, ResultsDoNotDependOnSeed) {
  for (const char* name : {"cubes-xyz", "type2-socle4", "socle2-r5"}) {
    SamplingOptions other;
    other.seed = 987654321;
    const ExampleResult a = run_example(name);
    const ExampleResult b = run_example(name, other);
    EXPECT_TRUE(b.passed) << name;
    EXPECT_EQ(a.wlp.failing_degrees, b.wlp.failing_degrees) << name;
  }
}

TEST(ParallelMap, KeepsIndexOrderAndPropagatesErrors) {
  const std::function<std::size_t(std::size_t)> square = [](std::size_t i) { return i * i; };
  const auto serial = parallel_map<std::size_t>(37, 1, square);
  const auto threaded = parallel_map<std::size_t>(37, 4, square);
  EXPECT_EQ(serial, threaded);
  EXPECT_EQ(threaded[6], 36U);
  const std::function<int(std::size_t)> boom = [](std::size_t i) -> int {
    if (i == 5) throw Error(Errc::invalid_argument, "boom");
    return 0;
  };
  EXPECT_THROW((void)parallel_map<int>(10, 3, boom), Error);
}

TEST(Experiments, InitialDegreeTwoIsDeterministicAcrossThreads) {
  const ExperimentReport a = experiment_init_deg2(8, 6, kSuiteSeed, 1);
  const ExperimentReport b = experiment_init_deg2(8, 6, kSuiteSeed, 4);
  const ExperimentReport c = experiment_init_deg2(8, 6, kSuiteSeed, 1);
  expect_same(a, b);
  expect_same(a, c);
  EXPECT_EQ(a.failures, 0U);
  EXPECT_TRUE(a.expectation_met);
  for (const auto& t : a.records) {
    EXPECT_TRUE(t.hypothesis_ok) << t.hilbert;
    EXPECT_EQ(t.seed, kSuiteSeed + t.index);
  }
  EXPECT_THROW((void)experiment_init_deg2(0, 6, kSuiteSeed), Error);
  EXPECT_THROW((void)experiment_init_deg2(4, 11, kSuiteSeed), Error);
}

TEST(Experiments, SmallSRecordsHypotheses) {
  const ExperimentReport rep = experiment_small_s(3, kSuiteSeed, 1);
  EXPECT_EQ(rep.trials, 3U);
  EXPECT_EQ(rep.failures, 0U);
  for (const auto& t : rep.records) {
    EXPECT_GE(t.s, 3);
    const HilbertSeq h = algebra_from_dual(build_dual(parse_ring(t.ring), join(t.dual_generators), Pairing::contraction)).hilbert();
    EXPECT_EQ(h.to_string(), t.hilbert);
    if (t.hypothesis_ok) {
      EXPECT_LE(h[t.s], 3 * t.s - 1);
      EXPECT_TRUE(t.has_wlp);
    }
  }
}

TEST(Experiments, SocleBoundsSharpRecordsFail) {
  const ExperimentReport rep = experiment_socle_bounds(kSuiteSeed, 1, 1);
  std::size_t sharp = 0;
  for (const auto& t : rep.records) {
    if (t.suite != "c") continue;
    ++sharp;
    EXPECT_FALSE(t.has_wlp) << t.strategy;
    EXPECT_TRUE(t.passed) << t.strategy;
  }
  EXPECT_EQ(sharp, 7U);
  EXPECT_TRUE(rep.expectation_met);
  EXPECT_EQ(rep.failures, 0U);
  EXPECT_NE(std::find(rep.notes.begin(), rep.notes.end(), "b: (1,3,1,2) never produced"), rep.notes.end());
}

TEST(Experiments, ProbeDumpsRebuildTheSameAlgebra) {
  const ExperimentReport rep = probe_open_question(6, 4, kSuiteSeed, 2);
  EXPECT_TRUE(rep.expectation_met);
  ASSERT_FALSE(rep.notes.empty());
  EXPECT_EQ(rep.notes.back().rfind("shape (1,3,n,...,n,3,1) with WLP: SLP holds in ", 0), 0U);
  for (const auto& t : rep.records) {
    ASSERT_EQ(t.dual_generators.size(), 1U);
    const Ring ring = parse_ring(t.ring);
    const QuotientAlgebra A = algebra_from_dual(build_dual(ring, join(t.dual_generators), Pairing::contraction));
    EXPECT_EQ(A.hilbert().to_string(), t.hilbert);
    EXPECT_EQ(wlp_check(A, [&] {
                LefschetzOptions o;
                o.sampling.seed = t.seed;
                return o;
              }()).has_property,
              t.has_wlp);
    if (t.has_wlp) {
      EXPECT_EQ(t.note.rfind("slp ", 0), 0U) << t.hilbert;
    }
  }
}

TEST(Experiments, CounterexampleIsTheFirstFailingDump) {
  std::vector<TrialRecord> records(3);
  for (std::size_t i = 0; i < 3; ++i) {
    records[i].index = i;
    records[i].hilbert = "(1,3,1)";
    records[i].ring = "QQ[y1,y2,y3]";
    records[i].dual_generators = {"y" + std::to_string(i + 1) + "^2"};
  }
  records[1].passed = false;
  records[2].passed = false;
  const ExperimentReport rep = detail::aggregate("fixture", 3, 0, records);
  EXPECT_EQ(rep.failures, 2U);
  EXPECT_FALSE(rep.expectation_met);
  ASSERT_TRUE(rep.first_counterexample.has_value());
  EXPECT_EQ(rep.first_counterexample->trial, 1U);
  EXPECT_EQ(rep.first_counterexample->dual_generators, (std::vector<std::string>{"y2^2"}));
  EXPECT_EQ(rep.coverage.at("(1,3,1)"), 3U);
}
