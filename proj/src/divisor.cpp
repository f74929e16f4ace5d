#include "bisp/divisor.hpp"

#include <algorithm>
#include <stdexcept>

namespace bisp {

CuspDivisor::CuspDivisor(std::vector<Cusp> cusps) : cusps_(std::move(cusps)) {
  for (std::size_t i = 0; i < cusps_.size(); ++i)
    for (std::size_t j = i + 1; j < cusps_.size(); ++j)
      if (cusps_[i].lambda == cusps_[j].lambda)
        throw std::invalid_argument("duplicate lambda " + cusps_[i].lambda.str());
}

Poly CuspDivisor::q() const {
  std::vector<Rational> roots;
  for (const auto& c : cusps_) roots.push_back(c.lambda);
  return Poly::from_roots(roots);
}

Rational CuspDivisor::vandermonde() const {
  Rational v(1);
  for (std::size_t i = 0; i < cusps_.size(); ++i)
    for (std::size_t j = i + 1; j < cusps_.size(); ++j) v *= cusps_[i].lambda - cusps_[j].lambda;
  return v;
}

CuspDivisor CuspDivisor::canonical() const {
  CuspDivisor c = *this;
  std::sort(c.cusps_.begin(), c.cusps_.end());
  return c;
}

}  // namespace bisp
