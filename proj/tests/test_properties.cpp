#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "mapforge/corpus.hpp"
#include "mapforge/properties.hpp"

using namespace mapforge;

TEST(Corpus, DefaultIsLargeAndDeterministic) {
  auto spec = default_corpus_spec();
  auto a = build_corpus(spec);
  auto b = build_corpus(spec);
  EXPECT_GE(a.size(), 50u);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].map, b[i].map);
    EXPECT_LE(a[i].map.size(), spec.max_flags);
  }
}

TEST(Corpus, RegistryNamesAreUnique) {
  std::set<std::string> names;
  for (const auto& p : registered_properties()) {
    EXPECT_TRUE(names.insert(p.name).second) << p.name;
    EXPECT_EQ(find_property(p.name), &p);
  }
  EXPECT_EQ(find_property("no-such-property"), nullptr);
  for (const char* required : {"dubgp", "medial-table", "saturation", "oracle-agreement", "roundtrip"}) {
    EXPECT_NE(find_property(required), nullptr) << required;
  }
}

TEST(Corpus, EveryPropertyPasses) {
  auto corpus = build_corpus(default_corpus_spec());
  std::vector<const Property*> props;
  for (const auto& p : registered_properties()) props.push_back(&p);
  auto reports = run_properties(corpus, props, default_corpus_spec().seed, std::max(1u, std::thread::hardware_concurrency()));
  ASSERT_EQ(reports.size(), props.size());
  for (const auto& r : reports) {
    EXPECT_EQ(r.failed, 0u) << r.property;
    EXPECT_EQ(r.passed + r.failed, corpus.size()) << r.property;
    for (const auto& [i, msg] : r.failures) ADD_FAILURE() << r.property << " on " << corpus[i].name << ": " << msg;
  }
}

TEST(Corpus, ReportOrderIgnoresThreadCount) {
  auto spec = default_corpus_spec();
  spec.random_maps = 4;
  spec.max_flags = 96;
  auto corpus = build_corpus(spec);
  std::vector<const Property*> props = {find_property("partition"), find_property("complement")};
  auto one = run_properties(corpus, props, 3, 1);
  auto many = run_properties(corpus, props, 3, 4);
  ASSERT_EQ(one.size(), many.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].property, many[i].property);
    EXPECT_EQ(one[i].passed, many[i].passed);
  }
}
