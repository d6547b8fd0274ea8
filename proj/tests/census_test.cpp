#include <doctest.h>

#include <cstdlib>
#include <set>
#include <stdexcept>
#include <string>

#include "gallai/canonical.hpp"
#include "gallai/census.hpp"
#include "gallai/reduction.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using namespace gallai;
using testutil::make;

TEST_CASE("counts on three vertices, three colors, single edges") {
  auto result = enumerate_census(3, testutil::abc(), 1);
  const auto& r = result.record;
  CHECK(r.total_labeled == 27);
  CHECK(r.gallai_labeled == 21);  // 27 minus the 6 rainbow labelings
  CHECK(r.reduced_labeled == 0);  // single-color triangles always collapse
  CHECK(r.reduced_maximal_labeled == 0);
  CHECK(r.total_iso == 3);
  CHECK(r.gallai_iso == 2);
  CHECK(r.reduced_iso == 0);
  CHECK(r.reduced_maximal_iso == 0);
  CHECK(result.reduced_maximal_representatives.empty());
}

TEST_CASE("degenerate censuses") {
  auto one = enumerate_census(1, Palette::letters(1), 1);
  CHECK(one.record.total_labeled == 1);
  CHECK(one.record.gallai_labeled == 1);
  CHECK(one.record.reduced_labeled == 1);
  CHECK(one.record.reduced_maximal_labeled == 1);
  CHECK(one.record.reduced_maximal_iso == 1);
  CHECK(one.reduced_maximal_representatives.size() == 1);

  // K2 on one color: a single labeling, never reduced.
  auto two = enumerate_census(2, Palette::letters(1), 2);
  CHECK(two.record.total_labeled == 1);
  CHECK(two.record.gallai_labeled == 1);
  CHECK(two.record.reduced_labeled == 0);
  CHECK(two.record.total_iso == 1);
}

TEST_CASE("census counts agree with the unpruned oracle") {
  auto palette = Palette::letters(2);
  std::uint64_t total = 0, gallai = 0;
  std::set<std::string> total_codes, gallai_codes;
  oracle::enumerate_colorings(3, palette, 2, [&](const ColoredMultigraph& g) {
    ++total;
    total_codes.insert(oracle::canonical_brute(g));
    if (!oracle::has_rainbow(g)) {
      ++gallai;
      gallai_codes.insert(oracle::canonical_brute(g));
    }
  });

  auto result = enumerate_census(3, palette, 2);
  CHECK(result.record.total_labeled == total);
  CHECK(result.record.gallai_labeled == gallai);
  CHECK(result.record.total_iso == total_codes.size());
  CHECK(result.record.gallai_iso == gallai_codes.size());
}

TEST_CASE("representatives are canonical, distinct and well formed") {
  auto result = enumerate_census(4, testutil::abc(), 2);
  const auto& reps = result.reduced_maximal_representatives;
  CHECK(reps.size() == result.record.reduced_maximal_iso);
  std::set<CanonicalCode> codes;
  for (const auto& g : reps) {
    CHECK(is_gallai(g));
    CHECK(is_reduced(g));
    CHECK(is_maximal(g));
    CHECK(canonical_relabel(g) == g);
    codes.insert(canonical_form(g));
  }
  CHECK(codes.size() == reps.size());
}

TEST_CASE("search bounds gate the census and come from the environment") {
  CHECK_THROWS_AS(enumerate_census(6, testutil::abc(), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_census(3, Palette::letters(5), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_census(0, testutil::abc(), 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_census(3, testutil::abc(), 0),
                  std::invalid_argument);

  ::unsetenv("GALLAI_MAX_SEARCH");
  auto fallback = bounds_from_env();
  CHECK(fallback.max_vertices == 5);
  CHECK(fallback.max_colors == 4);

  ::setenv("GALLAI_MAX_SEARCH", "6,5", 1);
  auto widened = bounds_from_env();
  CHECK(widened.max_vertices == 6);
  CHECK(widened.max_colors == 5);

  ::setenv("GALLAI_MAX_SEARCH", "nonsense", 1);
  CHECK_THROWS_AS(bounds_from_env(), std::invalid_argument);
  ::setenv("GALLAI_MAX_SEARCH", "4", 1);
  CHECK_THROWS_AS(bounds_from_env(), std::invalid_argument);
  ::unsetenv("GALLAI_MAX_SEARCH");
}

TEST_CASE("completeness holds at the smallest interesting size") {
  auto report = completeness_check(2, Palette::letters(2));
  CHECK(report.passed);
  CHECK(report.missing.empty());
  CHECK(report.reduced_maximal_classes > 0);
}

TEST_CASE("roundtrip reports preconditions instead of failing") {
  auto rainbow = make(3, testutil::abc(),
                      {{0, 1, {0}}, {0, 2, {1}}, {1, 2, {2}}});
  CHECK(roundtrip_check(rainbow).detail ==
        "precondition: graph has a rainbow triangle");

  auto k2 = make(2, testutil::abc(), {{0, 1, {0}}});
  CHECK(roundtrip_check(k2).detail == "precondition: graph has an isolated pair");

  CHECK(roundtrip_check(testutil::g3()).detail ==
        "precondition: graph is not maximal");
}

TEST_CASE("roundtrip rebuilds maximal graphs exactly") {
  auto ab_triangle = make(3, testutil::abc(),
                          {{0, 1, {0, 1}}, {0, 2, {0, 1}}, {1, 2, {0, 1}}});
  auto r = roundtrip_check(ab_triangle);
  CHECK(r.passed);
  CHECK(r.detail.empty());

  auto wide = make(4, testutil::abc(),
                   {{0, 1, {0, 1}}, {0, 2, {0, 1}}, {1, 2, {0, 1}},
                    {0, 3, {2}}, {1, 3, {2}}, {2, 3, {2}}});
  CHECK(roundtrip_check(wide).passed);
}
