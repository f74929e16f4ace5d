#include "bisp/vacuum.hpp"

#include <stdexcept>

namespace bisp {

AiryVacuum::AiryVacuum(int r, std::vector<Rational> a) : r_(r), a_(std::move(a)) {
  if (r < 2) throw std::invalid_argument("AiryVacuum: order r must be at least 2");
  if (static_cast<int>(a_.size()) != r - 2)
    throw std::invalid_argument("AiryVacuum: expected " + std::to_string(r - 2) + " constants a_1..a_{r-2}, got " +
                                std::to_string(a_.size()));
}

Rational AiryVacuum::a_coeff(int i) const {
  if (i < 1 || i > r_ - 2) return {};
  return a_[static_cast<std::size_t>(i - 1)];
}

WeylOp AiryVacuum::as_weyl() const {
  WeylOp l = WeylOp::d(r_) - WeylOp::x();
  for (int i = 1; i <= r_ - 2; ++i) l.add_term(0, i, -a_coeff(i));
  return l;
}

WeylOp flat(const WeylOp& t, const AiryVacuum& l0) {
  const WeylOp l = l0.as_weyl();
  std::vector<WeylOp> powers{WeylOp(1)};
  WeylOp out;
  for (const auto& [k, c] : t.terms()) {
    auto [i, j] = k;
    while (static_cast<int>(powers.size()) <= i) powers.push_back(powers.back() * l);
    out += (WeylOp::d(j) * powers[static_cast<std::size_t>(i)]) * c;
  }
  return out;
}

}  // namespace bisp
