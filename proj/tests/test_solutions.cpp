#include "doctest.h"
#include "vpvxy/errors.hpp"
#include "vpvxy/solutions.hpp"

using namespace vpvxy;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

SolutionTuple tuple(Rational x, Rational y, Rational v, Rational w) {
  return SolutionTuple::manual(x, y, v, w);
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("euler_solution") {
  CHECK(euler_solution(1).x == q(2));
  CHECK(euler_solution(1).y == q(4));
  CHECK(euler_solution(2).x == q(9, 4));
  CHECK(euler_solution(2).y == q(27, 8));
  CHECK(euler_solution(3).x == q(64, 27));
  CHECK(euler_solution(3).y == q(256, 81));
  CHECK_THROWS_AS(euler_solution(0), Error);
}

TEST_CASE("euler solutions satisfy x^y = y^x for n <= 50") {
  for (long n = 1; n <= 50; ++n) {
    const EulerPair s = euler_solution(n);
    CAPTURE(n);
    CHECK(verify_power_equation(s.x, s.y));
  }
}

TEST_CASE("verify_power_equation") {
  CHECK(verify_power_equation(q(2), q(4)));
  CHECK(verify_power_equation(q(7, 3), q(7, 3)));
  CHECK_FALSE(verify_power_equation(q(2), q(3)));
  CHECK_FALSE(verify_power_equation(q(4), q(16)));
  CHECK(kind_of([] { verify_power_equation(q(0), q(1)); }) == ErrorKind::NonPositiveInput);
}

TEST_CASE("general_solution examples") {
  const SolutionTuple t = general_solution(q(3), q(2), q(1));
  CHECK(t.rational_values() == std::array{q(2, 3), q(2), q(4, 3), q(2, 3)});

  CHECK(general_solution(q(4), q(2), q(2)).rational_values() ==
        std::array{q(4), q(16), q(8), q(8)});

  // x = (2^2 2^2 / 1)^(-1/2) = 1/4
  const SolutionTuple u = general_solution(q(1), q(2), q(2));
  CHECK(u.rational_values() == std::array{q(1, 4), q(1, 4), q(1, 2), q(1, 2)});
  CHECK(verify_equation(u));
}

TEST_CASE("general_solution errors") {
  CHECK(kind_of([] { general_solution(q(0), q(1), q(2)); }) == ErrorKind::DegenerateParameters);
  CHECK(kind_of([] { general_solution(q(2), q(1), q(2)); }) == ErrorKind::DegenerateParameters);
  CHECK(kind_of([] { general_solution(q(3), q(-1), q(2)); }) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of([] { general_solution(q(3), q(1), q(0)); }) == ErrorKind::NonPositiveParameter);
  CHECK(kind_of([] { general_solution(q(-1), q(1), q(2)); }) == ErrorKind::NonPositiveParameter);
}

TEST_CASE("general_solution with irrational x") {
  // (3,1,1): x = (1/3)^(1/2)
  const SolutionTuple t = general_solution(q(3), q(1), q(1));
  CHECK_FALSE(t.is_rational());
  CHECK(t.x.to_string() == "3^(-1/2)");
  CHECK(t.y.to_string() == "3^(1/2)");
  CHECK(kind_of([&] { verify_equation(t); }) == ErrorKind::NonRationalTuple);
  CHECK(numeric_verify_equation(t, 256).holds);

  // (1,2,3): x = 72^(-1/3)
  const SolutionTuple u = general_solution(q(1), q(2), q(3));
  CHECK(u.x.to_string() == "2^(-1) * 3^(-2/3)");
  CHECK(numeric_verify_equation(u, 256).holds);
  CHECK(numeric_verify_equation(u, 64).holds);
}

TEST_CASE("rational_family table rows") {
  struct Row {
    long b, c;
    std::array<Rational, 4> values;
  };
  const Row rows[] = {
      {1, 1, {q(1, 2), q(1), q(1, 2), q(1, 2)}},
      {2, 1, {q(2, 3), q(2), q(4, 3), q(2, 3)}},
      {3, 1, {q(3, 4), q(3), q(9, 4), q(3, 4)}},
      {4, 1, {q(4, 5), q(4), q(16, 5), q(4, 5)}},
      {1, 2, {q(2, 3), q(2), q(2, 3), q(4, 3)}},
      {2, 2, {q(4), q(16), q(8), q(8)}},
      {3, 2, {q(72, 5), q(72), q(216, 5), q(144, 5)}},
      {6, 2, {q(288), q(2304), q(1728), q(576)}},
      {1, 3, {q(3, 4), q(3), q(3, 4), q(9, 4)}},
      {3, 3, {q(243, 2), q(729), q(729, 2), q(729, 2)}},
      {6, 3, {q(17496), q(157464), q(104976), q(52488)}},
      {2, 4, {q(128, 3), q(256), q(256, 3), q(512, 3)}},
      {5, 3, {q(30375, 8), q(30375), q(151875, 8), q(91125, 8)}},
  };
  for (const Row& row : rows) {
    CAPTURE(row.b);
    CAPTURE(row.c);
    const SolutionTuple t = rational_family(row.b, row.c);
    CHECK(t.rational_values() == row.values);
    CHECK(verify_equation(t));
  }
  CHECK(kind_of([] { rational_family(0, 2); }) == ErrorKind::NonPositiveParameter);
}

TEST_CASE("family invariants for 1 <= b, c <= 8") {
  for (long b = 1; b <= 8; ++b) {
    for (long c = 1; c <= 8; ++c) {
      CAPTURE(b);
      CAPTURE(c);
      const SolutionTuple t = rational_family(b, c);
      const auto [x, y, v, w] = t.rational_values();
      CHECK(verify_equation(t));
      CHECK(y == Rational(b + c) * x);
      CHECK(v == Rational(b) * x);
      CHECK(w == Rational(c) * x);
      // consistency of the a = b + c specialisation with the general family
      const SolutionTuple g = general_solution(q(b + c), q(b), q(c));
      CHECK(g.rational_values() == t.rational_values());
    }
  }
}

TEST_CASE("verify_equation worked examples") {
  CHECK(verify_equation(tuple(q(1, 3), q(1, 6), q(1, 2), q(4, 3))));
  CHECK(verify_equation(tuple(q(1, 2), q(1, 3), q(1, 2), q(4, 3))));
  CHECK(verify_equation(tuple(q(1, 2), q(1, 3), q(1, 3), q(1, 6))));
  CHECK(verify_equation(tuple(q(4), q(3, 2), q(1), q(81, 2))));
  CHECK(verify_equation(tuple(q(1, 2), q(1, 2), q(1, 2), q(1))));
  CHECK_FALSE(verify_equation(tuple(q(2), q(3), q(2), q(4))));
}

TEST_CASE("verify_equation symmetries") {
  const std::array<std::array<Rational, 4>, 4> cases = {{
      {q(1, 3), q(1, 6), q(1, 2), q(4, 3)},
      {q(2), q(3), q(2), q(4)},
      {q(288), q(2304), q(1728), q(576)},
      {q(5, 7), q(2), q(3, 11), q(1, 2)},
  }};
  for (const auto& [x, y, v, w] : cases) {
    const bool base = verify_equation(tuple(x, y, v, w));
    CHECK(verify_equation(tuple(y, x, v, w)) == base);
    CHECK(verify_equation(tuple(x, y, w, v)) == base);
    CHECK(verify_equation(tuple(v, w, x, y)) == base);
  }
}

TEST_CASE("numeric_verify_equation") {
  const auto check = numeric_verify_equation(tuple(q(1, 3), q(1, 6), q(1, 2), q(4, 3)), 128);
  CHECK(check.holds);
  CHECK(check.residual.contains_zero());

  CHECK(numeric_verify_equation(rational_family(6, 3), 256).holds);

  const auto bad = numeric_verify_equation(tuple(q(2), q(3), q(2), q(4)), 128);
  CHECK_FALSE(bad.holds);
  CHECK_FALSE(bad.residual.contains_zero());
  // 3 ln 2 + 2 ln 3 - (4 ln 2 + 2 ln 4) = 2 ln 3 - 5 ln 2 ~ -1.2685
  CHECK(bad.residual.hi.to_double() == doctest::Approx(-1.2685).epsilon(1e-3));
}

TEST_CASE("classify_triviality") {
  auto verdict = [](const SolutionTuple& t) { return classify_triviality(t); };
  auto v1 = verdict(tuple(q(1, 3), q(1, 6), q(1, 2), q(4, 3)));
  CHECK(v1.kind == Triviality::Nontrivial);
  CHECK(v1.reason == TrivialityReason::None);

  auto v2 = verdict(tuple(q(72), q(1), q(2), q(3)));
  CHECK(v2.kind == Triviality::Trivial);
  CHECK(v2.reason == TrivialityReason::ContainsOne);
  CHECK(verify_equation(tuple(q(72), q(1), q(2), q(3))));

  auto v3 = verdict(tuple(q(2), q(4), q(4), q(2)));
  CHECK(v3.kind == Triviality::Trivial);
  CHECK(v3.reason == TrivialityReason::MultisetEqual);

  // The ambivalent cases both land on contains-one.
  CHECK(verdict(tuple(q(1, 2), q(1, 2), q(1, 2), q(1))).reason == TrivialityReason::ContainsOne);
  CHECK(verdict(tuple(q(4), q(3, 2), q(1), q(81, 2))).reason == TrivialityReason::ContainsOne);
  CHECK(verdict(rational_family(1, 1)).reason == TrivialityReason::ContainsOne);
}

TEST_CASE("search_integer_solutions") {
  auto params = [](const std::vector<SolutionTuple>& found) {
    std::vector<std::pair<long, long>> out;
    for (const auto& t : found) {
      const auto& f = std::get<FamilySource>(t.provenance);
      out.emplace_back(f.b, f.c);
    }
    return out;
  };
  CHECK(params(search_integer_solutions(2, 2)) == std::vector<std::pair<long, long>>{{2, 2}});
  CHECK(search_integer_solutions(1, 1).empty());
  CHECK(params(search_integer_solutions(6, 3)) ==
        std::vector<std::pair<long, long>>{{2, 2}, {6, 2}, {6, 3}});

  const auto found = search_integer_solutions(12, 12);
  for (const auto& t : found) {
    CHECK(t.is_integral());
    CHECK(verify_equation(t));
  }
  // Brute-force divisibility oracle on machine integers where b^c c^b fits.
  std::size_t expected = 0;
  for (long b = 1; b <= 12; ++b) {
    for (long c = 1; c <= 12; ++c) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), b, c);
      BigInt r;
      mpz_ui_pow_ui(r.get_mpz_t(), c, b);
      if (BigInt(p * r) % (b + c) == 0) ++expected;
    }
  }
  CHECK(found.size() == expected);
}
