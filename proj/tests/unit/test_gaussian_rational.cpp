#include "spinorb/gaussian_rational.hpp"

#include <doctest.h>

#include <stdexcept>

using spinorb::GaussianRational;

TEST_CASE("parts are stored reduced with positive denominators") {
  const GaussianRational z = GaussianRational::from_parts(4, -6, 3, 9);
  CHECK(z.re() == mpq_class(-2, 3));
  CHECK(z.im() == mpq_class(1, 3));
  CHECK(z.to_strings() == std::array<std::string, 4>{"-2", "3", "1", "3"});
  CHECK_THROWS_AS(GaussianRational::from_parts(1, 0, 0, 1), std::invalid_argument);
}

TEST_CASE("field arithmetic") {
  const GaussianRational i = GaussianRational::i();
  CHECK(i * i == GaussianRational(-1));
  const GaussianRational z(mpq_class(1, 2), mpq_class(-3, 4));
  CHECK(z * (GaussianRational(1) / z) == GaussianRational(1));
  CHECK(z * z.conj() == GaussianRational(z.norm()));
  CHECK((z - z).is_zero());
  CHECK_THROWS(GaussianRational(1) / GaussianRational());
}

TEST_CASE("string forms") {
  CHECK(GaussianRational(mpq_class(3, 2)).to_string() == "3/2");
  CHECK((-GaussianRational::i()).to_string() == "-i");
  CHECK(GaussianRational(1, 2).to_string() == "1+2i");
  const auto parts = GaussianRational(mpq_class(-7, 5), mpq_class(1, 9)).to_strings();
  CHECK(GaussianRational::from_strings(parts) == GaussianRational(mpq_class(-7, 5), mpq_class(1, 9)));
  CHECK_THROWS(GaussianRational::from_strings({"1", "x", "0", "1"}));
}

TEST_CASE("exact square roots") {
  GaussianRational root;
  REQUIRE(spinorb::exact_sqrt(GaussianRational(-1), root));
  CHECK(root == GaussianRational::i());
  REQUIRE(spinorb::exact_sqrt(GaussianRational(mpq_class(9, 4)), root));
  CHECK(root == GaussianRational(mpq_class(3, 2)));
  REQUIRE(spinorb::exact_sqrt(GaussianRational(0, 2), root));
  CHECK(root == GaussianRational(1, 1));
  CHECK_FALSE(spinorb::exact_sqrt(GaussianRational(2), root));
  mpq_class q;
  CHECK(spinorb::exact_sqrt(mpq_class(16, 25), q));
  CHECK(q == mpq_class(4, 5));
}
