#include "pyracat/verify/da_instance.hpp"

#include <stdexcept>

#include "pyracat/cells/table.hpp"
#include "pyracat/pyramid/complex.hpp"

namespace pyracat {

namespace {

IndexVector degree_index(std::size_t k) { return IndexVector{-static_cast<std::int64_t>(k)}; }

Bimodule power(const BimodCat& cat, const Bimodule& x, std::size_t d) {
  const std::vector<Bimodule> parts(d, x);
  return cat.direct_sum(std::span<const Bimodule>(parts)).object;
}

/// d copies of Q with the summed augmentation onto embed(G^d).
struct Power {
  BimodPyramid sum;
  BimodMap augmentation;
};

Power power_with_augmentation(const BimodCat& cat, const BimodMap& aug, std::size_t d) {
  const auto top = direct_sum(cat, std::vector<BimodPyramid>(d, *aug.source));
  const auto bottom = direct_sum(cat, std::vector<BimodPyramid>(d, *aug.target));
  BimodMap total = zero_map(top.sum, bottom.sum);
  for (std::size_t i = 0; i < d; ++i)
    total = add_morphisms(total, compose(bottom.injections[i], compose(aug, top.projections[i])));
  return {top.sum, total};
}

ProductCheck check_product(const BimodCat& cat, std::string lhs, std::string rhs, const BimodMap& aug_s,
                           const BimodMap& aug_t, const std::optional<Matrix>& phi) {
  ProductCheck out;
  out.lhs = std::move(lhs);
  out.rhs = std::move(rhs);
  if (!phi) {
    out.problem = "no isomorphism of degree-0 homology";
    return out;
  }
  const auto f = lift_augmentation(cat, aug_s, aug_t, *phi);
  if (!f || !is_morphism(cat, *f)) {
    out.problem = "augmentation does not lift";
    return out;
  }
  out.lifted = true;
  const auto w = is_homotopy_equivalence(cat, *f);
  if (!w) {
    out.problem = "no homotopy inverse";
    return out;
  }
  out.equivalent = true;
  out.revalidated = check_homotopy_equivalence(cat, *f, *w);
  out.witness_sizes = {w->inverse.entries.size(), w->source_homotopy.entries.size(),
                       w->target_homotopy.entries.size()};
  if (!out.revalidated) out.problem = "witness failed substitution";
  return out;
}

}  // namespace

DAInstance build_instance(const Algebra& a, std::size_t length) {
  DAInstance inst;
  auto cat = std::make_shared<const BimodCat>(a);
  inst.cat = cat;
  inst.length = length;
  inst.copies = aggregate_multiplicity(build_table(cartan_matrix(a), Flavor::DA));
  inst.f = bimodule_f(a);
  inst.g = bimodule_g(a);
  inst.resolution = projective_resolution(a, inst.g, length);
  if (!inst.resolution.exact) throw std::runtime_error("projective resolution failed its exactness check");
  inst.terminated = inst.resolution.terminated;

  inst.f_pyr = embed_object(*cat, inst.f);
  BimodPyramid q;
  q.width = 1;
  for (std::size_t k = 0; k < inst.resolution.terms.size(); ++k)
    q.cells.emplace(degree_index(k), inst.resolution.terms[k]);
  for (std::size_t k = 1; k < inst.resolution.terms.size(); ++k)
    q.diffs.emplace(std::pair{degree_index(k), 1}, inst.resolution.differentials[k - 1]);
  inst.q_pyr = normalize(*cat, std::move(q));
  inst.q_axiom_violations = check_axioms(*cat, inst.q_pyr).size();
  inst.q_augmentation =
      make_map(inst.q_pyr, embed_object(*cat, inst.g), {{{IndexVector{}, IndexVector{}}, inst.resolution.augmentation}});

  const std::size_t d = inst.copies;
  inst.iso_fg = find_isomorphism(cat->tensor_objects(inst.f, inst.g), power(*cat, inst.f, d));
  inst.iso_gf = find_isomorphism(cat->tensor_objects(inst.g, inst.f), power(*cat, inst.g, d));
  inst.iso_gg = find_isomorphism(cat->tensor_objects(inst.g, inst.g), power(*cat, inst.g, d));
  return inst;
}

std::optional<BimodMap> lift_augmentation(const BimodCat& cat, const BimodMap& aug_s, const BimodMap& aug_t,
                                          const Matrix& phi) {
  MapSystem<BimodCat> sys(cat);
  const auto u = sys.add_unknown(aug_s.source, aug_t.source, 0);
  sys.freeze();
  const BlockEntries ds = differential_entries(*aug_s.source);
  const BlockEntries dt = differential_entries(*aug_t.source);
  sys.add_equation(*aug_s.source, {{u, 1, nullptr, &ds}, {u, -1, &dt, nullptr}}, {});
  BlockEntries rhs;
  for (const auto& [key, m] : aug_s.entries) accumulate(rhs, key.first, key.second, phi * m);
  sys.add_equation(*aug_s.source, {{u, 1, &aug_t.entries, nullptr}}, rhs);
  auto sol = sys.solve();
  if (!sol) return std::nullopt;
  return (*sol)[u];
}

DAReport verify_da_table(const DAInstance& inst) {
  const BimodCat& cat = *inst.cat;
  const std::size_t d = inst.copies;
  const std::string ds = std::to_string(d);
  const auto id_f = identity_map(cat, inst.f_pyr);
  const auto& aug_q = inst.q_augmentation;
  const auto q_power = power_with_augmentation(cat, aug_q, d);
  const auto f_power = power_with_augmentation(cat, id_f, d);

  DAReport r;
  r.products.push_back(check_product(cat, "F.Q", "embed(F)^" + ds, tensor_morphisms(cat, id_f, aug_q),
                                     f_power.augmentation, inst.iso_fg));
  r.products.push_back(check_product(cat, "Q.F", "Q^" + ds, tensor_morphisms(cat, aug_q, id_f),
                                     q_power.augmentation, inst.iso_gf));
  r.products.push_back(check_product(cat, "Q.Q", "Q^" + ds, tensor_morphisms(cat, aug_q, aug_q),
                                     q_power.augmentation, inst.iso_gg));
  r.ok = inst.terminated && inst.q_axiom_violations == 0;
  for (const auto& p : r.products) r.ok = r.ok && p.revalidated;
  return r;
}

}  // namespace pyracat
