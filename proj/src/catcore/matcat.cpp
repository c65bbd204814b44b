#include "pyracat/catcore/matcat.hpp"

namespace pyracat {

std::vector<Matrix> MatCat::hom_basis(Object from, Object to) const {
  std::vector<Matrix> basis;
  basis.reserve(from * to);
  for (std::size_t r = 0; r < to; ++r)
    for (std::size_t c = 0; c < from; ++c) {
      Matrix e(to, from);
      e(r, c) = 1;
      basis.push_back(std::move(e));
    }
  return basis;
}

DirectSum<MatCat::Object> MatCat::direct_sum(std::span<const Object> objects) const {
  DirectSum<Object> out{0, {}, {}};
  for (auto x : objects) out.object += x;
  std::size_t offset = 0;
  for (auto x : objects) {
    Matrix inj(out.object, x);
    for (std::size_t i = 0; i < x; ++i) inj(offset + i, i) = 1;
    out.projections.push_back(inj.transpose());
    out.injections.push_back(std::move(inj));
    offset += x;
  }
  return out;
}

}  // namespace pyracat
