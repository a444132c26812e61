#include "h2n/words.hpp"

#include "helpers.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace h2n;

TEST_CASE("free reduction") {
    CHECK(reduce({1, -1}).empty());
    CHECK(reduce({1, 2, -2, -1}).empty());
    CHECK(reduce({1, 2, -2, 3}) == Word{{1, 3}});
    CHECK_THROWS_AS(reduce({0}), invariant_error);
}

TEST_CASE("enumeration counts for genus 2") {
    Presentation pres{2};
    CHECK(enumerate_reduced(pres, 1).size() == 8);
    const auto words = enumerate_reduced(pres, 2);
    CHECK(words.size() == 64);
    for (const Word& w : words) {
        for (int i = 0; i + 1 < w.size(); ++i)
            CHECK(w.letters[static_cast<size_t>(i)] != -w.letters[static_cast<size_t>(i) + 1]);
    }
    CHECK_THROWS_AS(enumerate_reduced(pres, 0), invariant_error);
    CHECK_THROWS_AS(enumerate_reduced(pres, 12, 1000), invariant_error);
}

TEST_CASE("conjugacy representatives") {
    Presentation pres{2};
    CHECK(conjugacy_reps(pres, 1).size() == 8);

    const auto reps = conjugacy_reps(pres, 2);
    int found = 0;
    for (const Word& w : reps)
        if (w == Word{{1, 2}} || w == Word{{2, 1}}) ++found;
    CHECK(found == 1);  // a1 b1 and b1 a1 share one representative

    for (const Word& w : reps) {
        CHECK(cyclically_reduced(w));
        CHECK(min_rotation(w) == w);
        CHECK(!w.empty());  // a1 a1^-1 style words never appear
    }

    // inversion dedup halves the generator count
    ConjugacyOptions opts;
    opts.dedup_inversion = true;
    CHECK(conjugacy_reps(pres, 1, opts).size() == 4);
}

TEST_CASE("relator of the presentation") {
    Presentation pres{2};
    const Word rel = pres.relator();
    CHECK(rel.size() == 8);
    CHECK(rel == Word{{1, 2, -1, -2, 3, 4, -3, -4}});
    CHECK(Presentation{3}.relator().size() == 12);
}

TEST_CASE("evaluate is a q-exact homomorphism") {
    QForm q{2};
    auto g = h2n::testing::rng(23);
    std::vector<Mat> gens;
    for (int i = 0; i < 4; ++i) gens.push_back(h2n::testing::random_so0(g, q));

    CHECK(evaluate(q, gens, Word{}).isIdentity(1e-15));

    const Word w = reduce({1, 2, -3, 4, 1});
    const Mat m = evaluate(q, gens, w) * evaluate(q, gens, inverse(w));
    CHECK((m - Mat::Identity(q.dim(), q.dim())).cwiseAbs().maxCoeff() < 1e-12);

    const Word u = reduce({2, -1, 3});
    const Mat lhs = evaluate(q, gens, concat(w, u));
    const Mat rhs = evaluate(q, gens, w) * evaluate(q, gens, u);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
}

TEST_CASE("word names round-trip") {
    Presentation pres{2};
    const Word w = reduce({1, -2, 3, 4, -1});
    CHECK(pres.word_name(w) == "a1.b1'.a2.b2.a1'");
    CHECK(pres.parse_word(pres.word_name(w)) == w);
    CHECK(pres.word_name(Word{}) == "e");
}

TEST_CASE("essentially intersecting registry") {
    Presentation pres{2};
    CHECK(essentially_intersecting(pres, Word{{1}}, Word{{2}}));
    CHECK(essentially_intersecting(pres, Word{{3}}, Word{{4}}));
    CHECK(!essentially_intersecting(pres, Word{{1}}, Word{{3}}));
    CHECK(!essentially_intersecting(pres, Word{{1}}, Word{{1}}));
    CHECK(!essentially_intersecting(pres, Word{{1, 2}}, Word{{2}}));
}
