#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "moodflow/scoring.hpp"

using namespace moodflow;

namespace {

// all six dimensions populated; tests overwrite entries as needed
Lexicon make_lexicon() {
    std::istringstream in(
        "@stemmed\n"
        "[tension]\nanxiou\ntens\nnervou\n"
        "[depression]\nsad\nhopeless\nunhappi\n"
        "[anger]\nfuriou\nannoi\nangri\n"
        "[vigour]\nliveli\nenerget\ncheer\n"
        "[fatigue]\nweari\nexhaust\nfatigu\n"
        "[confusion]\nconfus\nbewild\nuncertain\n");
    return parse_lexicon(in, "test");
}

TermSet terms_of(std::initializer_list<const char*> words) {
    TermSet t;
    for (const char* w : words) t.terms.emplace_back(w);
    t.source_token_count = static_cast<std::uint32_t>(t.terms.size());
    return t;
}

double norm6(const MoodVector& v) {
    double s = 0;
    for (int i = 0; i < kNumDimensions; ++i)
        s += v.component(i) * v.component(i);
    return std::sqrt(s);
}

} // namespace

TEST_SUITE("scoring") {

TEST_CASE("components count distinct matched stems per dimension") {
    const Lexicon lex = make_lexicon();

    MoodVector v = score(terms_of({"anxiou", "tens"}), lex);
    CHECK(v.component(0) == 2.0);
    for (int i = 1; i < kNumDimensions; ++i) CHECK(v.component(i) == 0.0);

    // repeated stems count once
    v = score(terms_of({"sad", "sad", "sad"}), lex);
    CHECK(v.component(1) == 1.0);

    // non-lexicon terms contribute nothing
    v = score(terms_of({"tabl", "chair"}), lex);
    for (int i = 0; i < kNumDimensions; ++i) CHECK(v.component(i) == 0.0);
    CHECK(v.kind == VectorKind::RawCounts);
}

TEST_CASE("a stem shared by dimensions scores in each") {
    Lexicon lex = make_lexicon();
    lex.entries[0]["restless"] = {};
    lex.entries[4]["restless"] = {};
    lex.rebuild_stem_sets();

    const MoodVector v = score(terms_of({"restless"}), lex);
    CHECK(v.component(0) == 1.0);
    CHECK(v.component(4) == 1.0);
    CHECK(v.component(1) == 0.0);
}

TEST_CASE("unit normalization scales by the euclidean norm") {
    MoodVector raw;
    raw.component(0) = 3.0;
    raw.component(1) = 4.0;
    const auto unit = unit_normalize(raw);
    REQUIRE(unit.has_value());
    CHECK(unit->component(0) == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(unit->component(1) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(unit->kind == VectorKind::Unit);

    MoodVector zero;
    CHECK_FALSE(unit_normalize(zero).has_value());
}

TEST_CASE("scored vectors have unit norm") {
    const Lexicon lex = make_lexicon();
    RawMessage msg;
    msg.timestamp_text = "2008-08-01T10:00:00Z";
    msg.day = *Date::parse("2008-08-01");
    msg.text = "I feel sad, weary and confused";
    const auto scored =
        score_message(msg, StopwordList::builtin(), lex);
    REQUIRE(scored.has_value());
    CHECK(norm6(scored->vector) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(scored->match_count == 3);
    CHECK(scored->day == msg.day);
    const double c = 1.0 / std::sqrt(3.0);
    CHECK(scored->vector.component(1) == doctest::Approx(c).epsilon(1e-12));
    CHECK(scored->vector.component(4) == doctest::Approx(c).epsilon(1e-12));
    CHECK(scored->vector.component(5) == doctest::Approx(c).epsilon(1e-12));
    CHECK(scored->vector.component(0) == 0.0);
}

TEST_CASE("score_message outcomes: rejected, zero, retained") {
    const Lexicon lex = make_lexicon();
    const StopwordList& sw = StopwordList::builtin();
    RawMessage msg;
    msg.day = *Date::parse("2008-08-01");

    msg.text = "nice weather today"; // no retention pattern
    CHECK_FALSE(score_message(msg, sw, lex).has_value());

    msg.text = "I feel like pizza"; // candidate, no lexicon match
    CHECK_FALSE(score_message(msg, sw, lex).has_value());

    msg.text = "I feel anxious about http://example.com"; // link kills it
    CHECK_FALSE(score_message(msg, sw, lex).has_value());

    msg.text = "I feel anxious";
    CHECK(score_message(msg, sw, lex).has_value());

    // lexicon matching is stem-to-stem: inflected forms hit too
    msg.text = "im exhausted and bewildered";
    const auto scored = score_message(msg, sw, lex);
    REQUIRE(scored.has_value());
    CHECK(scored->match_count == 2);
    CHECK(scored->vector.component(4) > 0.0);
    CHECK(scored->vector.component(5) > 0.0);
}

TEST_CASE("randomized scoring against a brute-force oracle") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> n_stems(1, 30);
    std::uniform_int_distribution<int> n_terms(0, 25);
    std::uniform_int_distribution<int> dim_of(0, kNumDimensions - 1);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    for (int iter = 0; iter < 1000; ++iter) {
        // random lexicon over a tiny stem universe (forces collisions)
        Lexicon lex;
        const int universe = n_stems(rng);
        for (int s = 0; s < universe; ++s) {
            const std::string stem = "s" + std::to_string(s);
            lex.entries[dim_of(rng)][stem] = {};
            if (coin(rng) < 0.3) lex.entries[dim_of(rng)][stem] = {};
        }
        for (int d = 0; d < kNumDimensions; ++d)
            lex.entries[d]["pad" + std::to_string(d)] = {};
        lex.rebuild_stem_sets();

        // random term multiset over the same universe plus noise
        TermSet terms;
        const int len = n_terms(rng);
        for (int i = 0; i < len; ++i) {
            if (coin(rng) < 0.2)
                terms.terms.push_back("noise" + std::to_string(i % 4));
            else
                terms.terms.push_back(
                    "s" + std::to_string(std::uniform_int_distribution<int>(
                              0, universe - 1)(rng)));
        }

        const MoodVector got = score(terms, lex);

        // oracle: distinct terms, double loop over dimensions
        const std::set<std::string> distinct(terms.terms.begin(),
                                             terms.terms.end());
        double expect[kNumDimensions] = {};
        for (int d = 0; d < kNumDimensions; ++d)
            for (const auto& t : distinct)
                if (lex.entries[d].count(t)) expect[d] += 1.0;

        for (int d = 0; d < kNumDimensions; ++d) {
            CAPTURE(iter);
            CHECK(got.component(d) == expect[d]);
        }

        // permutation invariance
        TermSet shuffled = terms;
        std::shuffle(shuffled.terms.begin(), shuffled.terms.end(), rng);
        const MoodVector got2 = score(shuffled, lex);
        for (int d = 0; d < kNumDimensions; ++d)
            CHECK(got2.component(d) == got.component(d));

        // monotonicity: adding any term never lowers a component
        TermSet extended = terms;
        extended.terms.push_back("s0");
        const MoodVector got3 = score(extended, lex);
        for (int d = 0; d < kNumDimensions; ++d)
            CHECK(got3.component(d) >= got.component(d));
    }
}

} // TEST_SUITE
