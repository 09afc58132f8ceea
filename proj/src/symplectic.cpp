#include "weilmod/symplectic.hpp"

namespace weilmod {

std::vector<SympMat<FqBase>> sp2_elements(const FqBase& F) {
  std::vector<SympMat<FqBase>> out;
  auto el = F.elements();
  for (auto& a : el)
    for (auto& b : el)
      for (auto& c : el)
        for (auto& d : el)
          if (a * d - b * c == F.one()) {
            auto g = zeros(F, 2, 2);
            g(0, 0) = a;
            g(0, 1) = b;
            g(1, 0) = c;
            g(1, 1) = d;
            out.push_back(g);
          }
  return out;
}

SympMat<FqBase> random_symplectic(const FqBase& F, int m, Rng& rng) {
  return random_symplectic(F, m, rng, [&] { return F.random(rng); });
}

SympMat<QpBase> random_symplectic(const QpBase& F, int m, Rng& rng, int vmax, long long height) {
  return random_symplectic(F, m, rng, [&]() -> Rational {
    if (rng.uniform(0, 3) == 0) return 0;
    return F.random(rng, vmax, height);
  });
}

}  // namespace weilmod
