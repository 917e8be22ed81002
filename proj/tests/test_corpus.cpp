#include "doctest.h"

#include "mfc/corpus.hpp"
#include "mfc/errors.hpp"
#include "support.hpp"

using mfc::BylineEntry;
using mfc::Corpus;
using mfc::Publication;
using mfc::Role;

TEST_CASE("corpus validation") {
  CHECK_NOTHROW(testsupport::example_corpus());

  SUBCASE("empty byline") {
    Publication bad{"p9", {}};
    CHECK_THROWS_AS(Corpus({bad}), mfc::ValidationError);
  }
  SUBCASE("duplicate publication id") {
    const auto p = testsupport::make_publication("p1", {{"a", "X"}});
    const auto q = testsupport::make_publication("p1", {{"b", "Y"}});
    CHECK_THROWS_AS(Corpus({p, q}), mfc::ValidationError);
  }
  SUBCASE("duplicate author within a byline") {
    const auto p = testsupport::make_publication("p1", {{"a", "X"}, {"a", "X"}});
    CHECK_THROWS_WITH_AS(Corpus({p}),
                         "publication 'p1': author 'a' appears twice in the byline",
                         mfc::ValidationError);
  }
  SUBCASE("empty ids") {
    CHECK_THROWS_AS(Corpus({testsupport::make_publication("", {{"a", "X"}})}),
                    mfc::ValidationError);
    CHECK_THROWS_AS(Corpus({testsupport::make_publication("p1", {{"", "X"}})}),
                    mfc::ValidationError);
    CHECK_THROWS_AS(Corpus({testsupport::make_publication("p1", {{"a", ""}})}),
                    mfc::ValidationError);
  }
}

TEST_CASE("corpus is canonically ordered and queryable") {
  std::vector<Publication> publications;
  publications.push_back(testsupport::make_publication("pb", {{"a2", "X"}}));
  publications.push_back(testsupport::make_publication("pa", {{"a1", "Y"}}));
  const Corpus corpus(std::move(publications));
  CHECK(corpus.publications()[0].id == "pa");
  CHECK(corpus.publications()[1].id == "pb");
  CHECK(corpus.has_institute("X"));
  CHECK_FALSE(corpus.has_institute("Z"));
  CHECK(corpus.authors() == std::vector<std::string>{"a1", "a2"});
  CHECK(corpus.institutes() == std::vector<std::string>{"X", "Y"});
}

TEST_CASE("mention and institute counts") {
  const auto corpus = testsupport::example_corpus();
  const auto& p1 = corpus.publications()[0];
  const auto& p3 = corpus.publications()[2];
  CHECK(mention_count(p1, "S") == 2);
  CHECK(mention_count(p1, "I1") == 1);
  CHECK(mention_count(p1, "nowhere") == 0);
  CHECK(institute_count(p1) == 2);
  CHECK(institute_count(p3) == 3);
}

TEST_CASE("positional role derivation") {
  const auto corpus = testsupport::example_corpus();
  const auto& p1 = corpus.publications()[0];  // 3 authors
  CHECK(effective_role(p1, 0) == Role::first);
  CHECK(effective_role(p1, 1) == Role::second);
  CHECK(effective_role(p1, 2) == Role::corresponding);

  const auto& p2 = corpus.publications()[1];  // 2 authors: no "second"
  CHECK(effective_role(p2, 0) == Role::first);
  CHECK(effective_role(p2, 1) == Role::corresponding);

  const auto& p3 = corpus.publications()[2];  // 5 authors
  CHECK(effective_role(p3, 0) == Role::first);
  CHECK(effective_role(p3, 1) == Role::second);
  CHECK(effective_role(p3, 2) == Role::middle);
  CHECK(effective_role(p3, 3) == Role::middle);
  CHECK(effective_role(p3, 4) == Role::corresponding);

  const auto single = testsupport::make_publication("s", {{"a", "X"}});
  CHECK(effective_role(single, 0) == Role::first);
}

TEST_CASE("explicit role tags override positions") {
  Publication publication = testsupport::make_publication("p", {{"a", "X"}, {"b", "Y"}});
  publication.byline[0].role = Role::middle;
  CHECK(effective_role(publication, 0) == Role::middle);
  CHECK(effective_role(publication, 1) == Role::corresponding);
}

TEST_CASE("role names round-trip") {
  for (const Role role :
       {Role::first, Role::second, Role::middle, Role::corresponding})
    CHECK(mfc::role_from_name(mfc::role_name(role)) == role);
  CHECK_FALSE(mfc::role_from_name("boss").has_value());
}

TEST_CASE("replication scales every participation by the same factor") {
  const auto publication =
      testsupport::make_publication("p", {{"a1", "S"}, {"a2", "T"}, {"a3", "T"},
                                          {"a4", "U"}});
  const auto tripled = mfc::replicate(publication, 3);
  CHECK(tripled.byline.size() == 12);
  CHECK(mention_count(tripled, "S") == 3);
  CHECK(mention_count(tripled, "T") == 6);
  CHECK(institute_count(tripled) == 3);
  CHECK_NOTHROW(Corpus({tripled}));  // fresh author ids stay unique

  CHECK(mfc::replicate(publication, 1) == publication);
  CHECK_THROWS_AS(mfc::replicate(publication, 0), std::domain_error);
}
