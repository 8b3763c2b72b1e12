#include <gtest/gtest.h>

#include "support.hpp"

using namespace eqav;
using namespace eqav::testing;

TEST(Minimize, Examples) {
  EXPECT_EQ(cons({"|1 2|3|", "|1 2|3|4|"}).elements(), rels({"|1 2|3|"}));
  EXPECT_EQ(cons({"|1 2 3|", "|1 3|2|"}).elements().size(), 2u);
  EXPECT_TRUE(cons({}).empty());
  EXPECT_FALSE(cons({}).max_length().has_value());
  EXPECT_EQ(cons({"|1 2 3|", "|1|2|"}).max_length(), 3u);
}

TEST(Minimize, NonConsecutiveIsomorphsCollapse) {
  const auto b = noncons({"|1 3|2|", "|1 2|3|", "|1|2 3|"});
  ASSERT_EQ(b.elements().size(), 1u);
  EXPECT_EQ(class_sizes(b.elements()[0]).sizes, (std::vector<int>{2, 1}));
}

TEST(Avoids, Examples) {
  EXPECT_FALSE(avoids(rel("|1|2 3|4|"), cons({"|1 2|3|"})));
  EXPECT_TRUE(avoids(rel("|1 3|2|"), cons({"|1 2|3|"})));
  EXPECT_TRUE(avoids(rel("|1 3|2|"), cons({})));
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate(cons({}), 4).size(), 15u);
  EXPECT_EQ(enumerate(cons({"|1 2|3|"}), 3), rels({"|1 2 3|", "|1 3|2|", "|1|2 3|", "|1|2|3|"}));
  EXPECT_TRUE(enumerate(cons({"|1|"}), 2).empty());
  EXPECT_TRUE(enumerate(noncons({"|1|"}), 2).empty());
}

TEST(Enumerate, BellNumbersForEmptyBasis) {
  const std::size_t bell[] = {1, 2, 5, 15, 52, 203, 877};
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(enumerate(cons({}), n).size(), bell[n - 1]);
}

TEST(Enumerate, ExtensionMatchesFullFilter) {
  for (unsigned mask = 0; mask < 256; mask += 7) {
    const Basis b = minimize(subset(mask), OrderKind::Consecutive);
    for (std::size_t n = 1; n <= 7; ++n) {
      std::vector<EqRel> filtered;
      for (const auto& r : all_relations(n)) {
        if (avoids(r, b)) filtered.push_back(r);
      }
      ASSERT_EQ(enumerate(b, n), filtered) << "mask " << mask << " n " << n;
    }
  }
}

TEST(Enumerate, NonConsecutiveRepresentatives) {
  for (unsigned mask = 0; mask < 256; mask += 5) {
    const Basis b = minimize(subset(mask), OrderKind::NonConsecutive);
    for (std::size_t n = 1; n <= 7; ++n) {
      std::set<std::vector<int>> shapes;
      for (const auto& r : all_relations(n)) {
        if (avoids(r, b)) shapes.insert(class_sizes(r).sizes);
      }
      std::set<std::vector<int>> got;
      for (const auto& r : enumerate(b, n)) got.insert(class_sizes(r).sizes);
      ASSERT_EQ(got, shapes);
    }
  }
}

TEST(Avoidance, MinimizePreservesClassAndDownwardClosure) {
  std::vector<EqRel> probe;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (auto& r : all_relations(n)) probe.push_back(r);
  }
  for (auto order : {OrderKind::Consecutive, OrderKind::NonConsecutive}) {
    for (unsigned mask = 0; mask < 256; mask += 11) {
      const auto raw = subset(mask);
      const Basis b = minimize(raw, order);
      for (std::size_t i = 0; i < b.elements().size(); ++i) {
        for (std::size_t j = 0; j < b.elements().size(); ++j) {
          if (i != j) {
            ASSERT_FALSE(embeds(b.elements()[i], b.elements()[j], order));
          }
        }
      }
      for (const auto& r : probe) {
        const bool raw_avoids = std::none_of(raw.begin(), raw.end(), [&](const EqRel& e) { return embeds(e, r, order); });
        ASSERT_EQ(avoids(r, b), raw_avoids);
      }
    }
  }
  const Basis b = cons({"|1 2|3|", "|1|2|3|"});
  for (const auto& r : probe) {
    if (!avoids(r, b) || r.size() > 5) continue;
    for (const auto& s : probe) {
      if (s.size() <= r.size() && embeds_cons(s, r)) {
        ASSERT_TRUE(avoids(s, b));
      }
    }
  }
}

TEST(BasisFile, ParsesCommentsAndBothNotations) {
  const auto rs = parse_basis_text("# header\n\n|1 2|3|\n  1 2 1  \n", "mem");
  EXPECT_EQ(rs, rels({"|1 2|3|", "|1 3|2|"}));
}

TEST(BasisFile, ErrorNamesSourceLineAndToken) {
  try {
    parse_basis_text("|1 2|\n\n|1 3|oops|\n", "basis.txt");
    FAIL();
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("basis.txt:3"), std::string::npos) << msg;
    EXPECT_NE(msg.find("oops"), std::string::npos) << msg;
  }
}

TEST(Order, Parsing) {
  EXPECT_EQ(parse_order("cons"), OrderKind::Consecutive);
  EXPECT_EQ(parse_order("noncons"), OrderKind::NonConsecutive);
  EXPECT_THROW(parse_order("sideways"), ParseError);
}
