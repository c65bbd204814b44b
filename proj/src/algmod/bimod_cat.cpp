#include "pyracat/algmod/bimod_cat.hpp"

#include <functional>

namespace pyracat {

namespace {

void mix(std::size_t& h, std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); }

void mix_matrix(std::size_t& h, const Matrix& m) {
  mix(h, m.rows());
  mix(h, m.cols());
  for (const auto& x : m.data()) {
    mix(h, static_cast<std::size_t>(mpz_get_si(x.get_num_mpz_t())));
    mix(h, static_cast<std::size_t>(mpz_get_si(x.get_den_mpz_t())));
  }
}

template <class Value>
class ContentCache {
 public:
  template <class Make>
  Value get(const std::vector<const Bimodule*>& key, Make&& make) {
    std::size_t h = 0;
    for (const auto* b : key) mix(h, bimodule_hash(*b));
    {
      std::lock_guard lock(mutex_);
      if (auto found = find(h, key)) return *found;
    }
    Value v = make();
    std::lock_guard lock(mutex_);
    if (auto found = find(h, key)) return *found;
    std::vector<Bimodule> stored;
    for (const auto* b : key) stored.push_back(*b);
    buckets_[h].push_back({std::move(stored), v});
    return v;
  }

 private:
  struct Entry {
    std::vector<Bimodule> key;
    Value value;
  };
  const Value* find(std::size_t h, const std::vector<const Bimodule*>& key) const {
    auto it = buckets_.find(h);
    if (it == buckets_.end()) return nullptr;
    for (const auto& e : it->second) {
      bool same = e.key.size() == key.size();
      for (std::size_t i = 0; same && i < key.size(); ++i) same = e.key[i] == *key[i];
      if (same) return &e.value;
    }
    return nullptr;
  }
  std::mutex mutex_;
  std::unordered_map<std::size_t, std::vector<Entry>> buckets_;
};

}  // namespace

std::size_t bimodule_hash(const Bimodule& m) {
  std::size_t h = m.dim;
  for (const auto& l : m.left) mix_matrix(h, l);
  for (const auto& r : m.right) mix_matrix(h, r);
  return h;
}

struct BimodCat::Cache {
  ContentCache<std::shared_ptr<const std::vector<Matrix>>> homs;
  ContentCache<std::shared_ptr<const Matrix>> gens;
  ContentCache<std::shared_ptr<const TensorOverA>> tensors;
};

BimodCat::BimodCat(Algebra a) : algebra_(std::move(a)), cache_(std::make_shared<Cache>()) {}

std::vector<Matrix> BimodCat::hom_basis(const Object& from, const Object& to) const {
  if (from.dim == 0 || to.dim == 0) return {};
  return *cache_->homs.get({&from, &to}, [&] {
    return std::make_shared<const std::vector<Matrix>>(hom_bimodules(from, to));
  });
}

DirectSum<BimodCat::Object> BimodCat::direct_sum(std::span<const Object> objects) const {
  if (objects.size() == 1)
    return {objects[0], {Matrix::identity(objects[0].dim)}, {Matrix::identity(objects[0].dim)}};
  DirectSum<Object> out;
  out.object.dim = 0;
  for (const auto& x : objects) out.object.dim += x.dim;
  for (std::size_t k = 0; k < algebra_.dim(); ++k) {
    std::vector<Matrix> ls, rs;
    for (const auto& x : objects) {
      ls.push_back(x.left[k]);
      rs.push_back(x.right[k]);
    }
    out.object.left.push_back(block_diagonal(ls));
    out.object.right.push_back(block_diagonal(rs));
  }
  std::size_t offset = 0;
  for (const auto& x : objects) {
    Matrix inj(out.object.dim, x.dim);
    for (std::size_t i = 0; i < x.dim; ++i) inj(offset + i, i) = 1;
    out.projections.push_back(inj.transpose());
    out.injections.push_back(std::move(inj));
    offset += x.dim;
  }
  return out;
}

Matrix BimodCat::generators(const Object& x) const {
  return *cache_->gens.get({&x}, [&] { return std::make_shared<const Matrix>(bimodule_generators(algebra_, x)); });
}

std::shared_ptr<const TensorOverA> BimodCat::tensor_data(const Object& x, const Object& y) const {
  return cache_->tensors.get({&x, &y}, [&] { return std::make_shared<const TensorOverA>(tensor_over_a_data(x, y)); });
}

BimodCat::Object BimodCat::tensor_objects(const Object& x, const Object& y) const {
  return tensor_data(x, y)->product;
}

Matrix BimodCat::tensor_morphisms(const Matrix& f, const Object& fs, const Object& ft, const Matrix& g,
                                  const Object& gs, const Object& gt) const {
  return tensor_over_a_morphisms(*tensor_data(fs, gs), *tensor_data(ft, gt), f, g);
}

}  // namespace pyracat
