#include <gtest/gtest.h>

#include <random>
#include <set>

#include "kcube/bitset.hpp"

using kcube::Bitset;

TEST(Bitset, Basics) {
  Bitset b(130);
  EXPECT_TRUE(b.none());
  b.set(0);
  b.set(64);
  b.set(129);
  EXPECT_EQ(b.count(), 3u);
  EXPECT_EQ(b.next(), 0u);
  EXPECT_EQ(b.next(1), 64u);
  EXPECT_EQ(b.next(65), 129u);
  EXPECT_EQ(b.next(130), Bitset::npos);
  b.reset(64);
  EXPECT_FALSE(b.test(64));
  EXPECT_EQ(Bitset::full(130).count(), 130u);
  EXPECT_EQ(Bitset::full(64).count(), 64u);
}

TEST(Bitset, AgreesWithStdSet) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, 200)(rng);
    Bitset a(size), b(size);
    std::set<std::size_t> sa, sb;
    for (std::size_t i = 0; i < size; ++i) {
      if (rng() % 3 == 0) a.set(i), sa.insert(i);
      if (rng() % 2 == 0) b.set(i), sb.insert(i);
    }
    std::vector<std::size_t> got;
    (a & b).for_each([&](std::size_t i) { got.push_back(i); });
    std::vector<std::size_t> want;
    for (auto i : sa)
      if (sb.count(i)) want.push_back(i);
    EXPECT_EQ(got, want);
    EXPECT_EQ(a.intersects(b), !want.empty());
    EXPECT_EQ((a & b).subset_of(a), true);

    const std::size_t cut = std::uniform_int_distribution<std::size_t>(0, size - 1)(rng);
    Bitset c = a;
    c.reset_through(cut);
    std::vector<std::size_t> tail, want_tail;
    c.for_each([&](std::size_t i) { tail.push_back(i); });
    for (auto i : sa)
      if (i > cut) want_tail.push_back(i);
    EXPECT_EQ(tail, want_tail);
  }
}

TEST(Bitset, EqualityAndHash) {
  Bitset a(70), b(70);
  a.set(69);
  b.set(69);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
  b.set(3);
  EXPECT_NE(a, b);
}
