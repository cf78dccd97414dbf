#include <gtest/gtest.h>

#include <set>
#include <utility>

#include "mixedweak/errors.hpp"
#include "mixedweak/interval_family.hpp"

using namespace mixedweak;

TEST(IntervalFamily, AllEnumeratesEveryInterval) {
  IntervalFamily fam = IntervalFamily::all(5);
  EXPECT_EQ(fam.size(), 15u);
  auto intervals = fam.materialize();
  EXPECT_EQ(intervals.size(), fam.size());
  std::set<std::pair<std::size_t, std::size_t>> seen(intervals.begin(),
                                                     intervals.end());
  EXPECT_EQ(seen.size(), 15u);
  for (auto [i, j] : seen) {
    EXPECT_LE(i, j);
    EXPECT_LT(j, 5u);
  }
}

TEST(IntervalFamily, DyadicLengths) {
  IntervalFamily fam = IntervalFamily::dyadic(8);
  // lengths 1,2,4,8 at 8,7,5,1 positions
  EXPECT_EQ(fam.size(), 8u + 7u + 5u + 1u);
  for (auto [i, j] : fam.materialize()) {
    const std::size_t len = j - i + 1;
    EXPECT_TRUE(len == 1 || len == 2 || len == 4 || len == 8);
  }
}

TEST(IntervalFamily, DyadicNonPowerCellCount) {
  IntervalFamily fam = IntervalFamily::dyadic(5);
  // lengths 1,2,4 at 5,4,2 positions
  EXPECT_EQ(fam.size(), 11u);
}

TEST(IntervalFamily, WindowedCapsLength) {
  IntervalFamily fam = IntervalFamily::windowed(6, 2);
  EXPECT_EQ(fam.size(), 6u + 5u);
  for (auto [i, j] : fam.materialize()) EXPECT_LE(j - i + 1, 2u);
  EXPECT_THROW(IntervalFamily::windowed(6, 0), ValidationError);
}

TEST(IntervalFamily, WindowedLongerThanGridEqualsAll) {
  IntervalFamily w = IntervalFamily::windowed(4, 10);
  IntervalFamily a = IntervalFamily::all(4);
  EXPECT_EQ(w.materialize().size(), a.materialize().size());
}

TEST(IntervalFamily, DeterministicOrder) {
  IntervalFamily fam = IntervalFamily::dyadic(16);
  EXPECT_EQ(fam.materialize(), fam.materialize());
}

TEST(IntervalFamily, Names) {
  EXPECT_EQ(IntervalFamily::all(4).name(), "all");
  EXPECT_EQ(IntervalFamily::dyadic(4).name(), "dyadic");
  EXPECT_EQ(IntervalFamily::windowed(4, 3).name(), "windowed:3");
}

TEST(IntervalFamily, Parse) {
  EXPECT_EQ(parse_family("all", 8).kind(), FamilyKind::All);
  EXPECT_EQ(parse_family("dyadic", 8).kind(), FamilyKind::Dyadic);
  IntervalFamily w = parse_family("windowed:3", 8);
  EXPECT_EQ(w.kind(), FamilyKind::Windowed);
  EXPECT_EQ(w.max_len(), 3u);
  EXPECT_THROW(parse_family("bogus", 8), ValidationError);
  EXPECT_THROW(parse_family("windowed:x", 8), ValidationError);
}
