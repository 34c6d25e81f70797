#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_util.hpp"
#include "treealg/forest.hpp"

using namespace treealg;
using namespace treealg::test;

TEST_CASE("forest grammar round trips") {
    CHECK(render_forest(F("1"), plain()) == "1");
    CHECK(render_forest(F("*[* *]"), plain()) == "*[* *]");
    CHECK(render_forest(F("* *[*]"), plain()) == "* *[*]");
    CHECK(F("1").empty());
    CHECK(F("*[*]").weight() == 2);

    DecorationSet abcd({"a", "b", "c", "d"});
    Forest fig2 = parse_forest("a[b[c d]]", abcd);
    CHECK(fig2.weight() == 4);
    CHECK(render_forest(fig2, abcd) == "a[b[c d]]");
    CHECK(fig2.trees()[0].decoration() == 0);
    CHECK(fig2.trees()[0].children()[0].decoration() == 1);

    // "a[1]" denotes a leaf; it re-renders canonically
    CHECK(render_forest(parse_forest("a[1]", abcd), abcd) == "a");

    CHECK_THROWS_AS(F("*["), parse_error);
    CHECK_THROWS_AS(F("* "), parse_error);
    CHECK_THROWS_AS(parse_forest("x", abcd), parse_error);
    CHECK_THROWS_AS(DecorationSet({"a", "a"}), std::invalid_argument);
}

TEST_CASE("weight and structural maps") {
    CHECK(F("1").weight() == 0);
    CHECK(F("*[* *]").weight() == 3);

    CHECK(bplus(F("1"), 0) == T("*"));
    CHECK(bplus(F("* *"), 0) == T("*[* *]"));
    CHECK(bplus(F("*[*]"), 0) == T("*[*[*]]"));
    CHECK(bminus(T("*")) == F("1"));
    CHECK(bminus(T("*[* *]")) == F("* *"));
    CHECK(bminus(T("*[*[*]]")) == F("*[*]"));

    CHECK(gamma(F("* *[*]"), 0) == std::nullopt);
    CHECK(gamma(F("*[*] *"), 0) == F("*[*]"));
    CHECK(gamma(F("*"), 0) == F("1"));
    CHECK(gamma(F("1"), 0) == std::nullopt);
    DecorationSet ab({"a", "b"});
    CHECK(gamma(parse_forest("a b", ab), 0) == std::nullopt);  // trailing vertex is b
    CHECK(gamma(parse_forest("a b", ab), 1) == parse_forest("a", ab));
}

TEST_CASE("enumeration in the canonical ascending order") {
    auto fs2 = enumerate_forests(2, plain());
    REQUIRE(fs2.size() == 2);
    CHECK(fs2[0] == F("* *"));
    CHECK(fs2[1] == F("*[*]"));

    auto fs3 = enumerate_forests(3, plain());
    REQUIRE(fs3.size() == 5);
    const char* expected3[] = {"* * *", "*[*] *", "* *[*]", "*[* *]", "*[*[*]]"};
    for (std::size_t i = 0; i < 5; ++i) CHECK(fs3[i] == F(expected3[i]));

    auto fs4 = enumerate_forests(4, plain());
    REQUIRE(fs4.size() == 14);
    const char* expected4[] = {"* * * *",  "*[*] * *",  "* *[*] *",  "*[* *] *", "*[*[*]] *",
                               "* * *[*]", "*[*] *[*]", "* *[* *]",  "* *[*[*]]", "*[* * *]",
                               "*[*[*] *]", "*[* *[*]]", "*[*[* *]]", "*[*[*[*]]]"};
    for (std::size_t i = 0; i < 14; ++i) CHECK(fs4[i] == F(expected4[i]));

    auto ts3 = enumerate_trees(3, plain());
    REQUIRE(ts3.size() == 2);
    CHECK(ts3[0] == T("*[* *]"));
    CHECK(ts3[1] == T("*[*[*]]"));
    CHECK(enumerate_trees(4, plain()).size() == 5);
    CHECK(enumerate_forests(0, plain()).size() == 1);

    DecorationSet ab({"a", "b"});
    auto ts1 = enumerate_trees(1, ab);
    REQUIRE(ts1.size() == 2);
    CHECK(ts1[0] == parse_forest("a", ab).trees()[0]);
    CHECK(ts1[1] == parse_forest("b", ab).trees()[0]);

    CHECK_THROWS_AS(enumerate_forests(25, plain()), resource_limit_error);
}

TEST_CASE("five-clause order") {
    CHECK(compare_forests(F("* *"), F("*[*]")) == Ordering::LT);
    CHECK(compare_forests(F("*[*]"), F("*[*]")) == Ordering::EQ);
    CHECK(compare_forests(F("* * *"), F("*[*]")) == Ordering::GT);  // weight first
    CHECK(compare_forests(F("*[*] *"), F("* *[*]")) == Ordering::LT);
    CHECK(compare_forests(F("* *[*]"), F("*[* *]")) == Ordering::LT);

    DecorationSet ab({"a", "b"});
    auto G = [&](const char* s) { return parse_forest(s, ab); };
    CHECK(compare_forests(G("b a"), G("a b")) == Ordering::LT);
    CHECK(compare_forests(G("a[a]"), G("a[b]")) == Ordering::LT);
    CHECK(compare_forests(G("a[b]"), G("b[a]")) == Ordering::LT);

    // decorated weight-2 row: a a < b a < a b < b b < a[a] < a[b] < b[a] < b[b]
    auto fs = enumerate_forests(2, ab);
    const char* expected[] = {"a a", "b a", "a b", "b b", "a[a]", "a[b]", "b[a]", "b[b]"};
    REQUIRE(fs.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) CHECK(fs[i] == G(expected[i]));
}

TEST_CASE("vertex orders on the worked six-vertex forest") {
    Forest f = F("*[*[*] *] *[*]");  // vertices s1..s6 in preorder
    auto v = [](int i) { return VertexRef{i - 1}; };

    CHECK(ge_haut(f, v(6), v(5)));
    CHECK_FALSE(ge_haut(f, v(6), v(4)));
    CHECK_FALSE(ge_haut(f, v(5), v(4)));
    CHECK(ge_haut(f, v(4), v(1)));
    CHECK(ge_haut(f, v(3), v(2)));
    CHECK(ge_haut(f, v(3), v(1)));
    CHECK(ge_haut(f, v(2), v(1)));
    CHECK(ge_haut(f, v(1), v(1)));

    CHECK(ge_gauche(f, v(4), v(6)));
    CHECK_FALSE(ge_gauche(f, v(5), v(6)));
    CHECK(ge_gauche(f, v(3), v(6)));
    CHECK(ge_gauche(f, v(1), v(6)));
    CHECK(ge_gauche(f, v(2), v(4)));
    CHECK(ge_gauche(f, v(3), v(4)));
    CHECK_FALSE(ge_gauche(f, v(1), v(4)));
    CHECK_FALSE(ge_gauche(f, v(2), v(3)));
    CHECK(ge_gauche(f, v(2), v(2)));

    CHECK_THROWS_AS(ge_haut(f, VertexRef{6}, v(1)), std::invalid_argument);

    auto order = tot_order(f);
    for (int i = 0; i < 6; ++i) CHECK(order[static_cast<std::size_t>(i)].index == i);
    CHECK(tot_order(F("*")).size() == 1);
    auto two = tot_order(F("* *"));
    CHECK(two[0].index == 0);
    CHECK(two[1].index == 1);
}

TEST_CASE("total vertex order equals preorder up to weight 6") {
    for (int n = 1; n <= 6; ++n)
        for (const Forest& f : enumerate_forests(n, plain())) {
            auto order = tot_order(f);
            for (int i = 0; i < n; ++i) REQUIRE(order[static_cast<std::size_t>(i)].index == i);
        }
}

TEST_CASE("mirror") {
    CHECK(mirror(F("*")) == F("*"));
    CHECK(mirror(F("*[*]")) == F("* *"));
    CHECK(mirror(F("*[* *]")) == F("*[*] *"));
    CHECK(mirror(F("1")) == F("1"));
    for (int n = 1; n <= 5; ++n)
        for (const Forest& f : enumerate_forests(n, plain())) {
            CHECK(mirror(mirror(f)) == f);
            CHECK(mirror(f).weight() == f.weight());
        }
    DecorationSet ab({"a", "b"});
    for (int n = 1; n <= 3; ++n)
        for (const Forest& f : enumerate_forests(n, ab)) CHECK(mirror(mirror(f)) == f);
}
