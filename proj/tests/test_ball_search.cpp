#include <doctest.h>

#include "fockalg/ball_search.hpp"
#include "fockalg/diagnostics.hpp"

using namespace fockalg;

TEST_CASE("ball search: word splits classify at distance zero") {
  const Word w{1, 2};
  const Complex lambda = std::polar(1.0, 0.4);
  const WordSplit a = classify_word_factorization(FreeSeries::monomial(2, Word{1}, lambda),
                                                  FreeSeries::monomial(2, Word{2}, std::conj(lambda)), w);
  CHECK(a.left == Word{1});
  CHECK(a.right == Word{2});
  CHECK(a.distance < 1e-12);
  CHECK(std::abs(a.lambda - lambda) < 1e-12);

  const WordSplit b = classify_word_factorization(FreeSeries::scalar(2, 1.0), FreeSeries::monomial(2, w), w);
  CHECK(b.left == Word{});
  CHECK(b.distance < 1e-12);

  // (L1 + L2)/sqrt2 is far from every split
  FreeSeries mix(2);
  mix.add(Word{1}, 1.0 / std::sqrt(2.0));
  mix.add(Word{2}, 1.0 / std::sqrt(2.0));
  CHECK(classify_word_factorization(mix, mix, w).distance > 0.5);
}

TEST_CASE("ball search: residuals and projection") {
  const Word w{1, 2};
  CHECK(factorization_residual(FreeSeries::monomial(2, Word{1}), FreeSeries::monomial(2, Word{2}), w, 4) < 1e-14);
  CHECK(factorization_residual(FreeSeries::monomial(2, Word{2}), FreeSeries::monomial(2, Word{1}), w, 4) ==
        doctest::Approx(std::sqrt(2.0)));
  FreeSeries big(2);
  big.add(Word{}, 2.0);
  big.add(Word{1}, 1.0);
  const FreeSeries p = project_to_unit_ball(big, 4);
  CHECK(op_norm(series_to_op(p, 2, 4)) == doctest::Approx(1.0));
  CHECK(max_coeff_distance(project_to_unit_ball(FreeSeries::monomial(2, Word{1}), 4),
                           FreeSeries::monomial(2, Word{1})) == 0.0);
}

TEST_CASE("ball search: results do not depend on the thread count") {
  BallSearchOptions opt;
  opt.restarts = 3;
  opt.seed = 99;
  opt.max_iterations = 200;
  opt.threads = 1;
  const auto one = search_ball_factorizations(Word{1, 2}, 2, opt);
  opt.threads = 3;
  const auto three = search_ball_factorizations(Word{1, 2}, 2, opt);
  REQUIRE(one.size() == 3);
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].residual == three[i].residual);
    CHECK(max_coeff_distance(one[i].b, three[i].b) == 0.0);
    CHECK(one[i].b_norm <= 1.0 + 1e-12);
    CHECK(one[i].c_norm <= 1.0 + 1e-12);
    if (one[i].split) CHECK(one[i].split->distance < 1e-3);
  }
}

TEST_CASE("ball search: argument checks") {
  BallSearchOptions opt;
  opt.level = 3;
  CHECK_THROWS_AS(search_ball_factorizations(Word{1, 2}, 2, opt), std::invalid_argument);
  opt.level = 4;
  CHECK_THROWS_AS(search_ball_factorizations(Word{3}, 2, opt), std::invalid_argument);
  CHECK_THROWS_AS(search_ball_factorizations(Word{1, 1, 1, 1, 1}, 2, opt), std::invalid_argument);
}
