#include "nilfix/induced.hpp"

#include <stdexcept>

namespace nilfix {

namespace {

// Images of every basis element of degree <= max_degree under the
// endomorphism, computed bottom-up so shared subtrees are expanded once.
std::vector<LieCombination> images_up_to(const FreeLieAlgebra& alg, const IntegerMatrix& a,
                                         int max_degree) {
  const HallBasis& basis = alg.basis();
  const int end = basis.layer_offset(max_degree) + static_cast<int>(basis.layer_size(max_degree));
  std::vector<LieCombination> images(static_cast<std::size_t>(end));
  for (int idx = 0; idx < end; ++idx) {
    const HallElement& el = basis.element(idx);
    if (el.is_leaf())
      images[static_cast<std::size_t>(idx)] = alg.apply_endomorphism(a, idx);
    else
      images[static_cast<std::size_t>(idx)] =
          alg.bracket(images[static_cast<std::size_t>(el.left)],
                      images[static_cast<std::size_t>(el.right)]);
  }
  return images;
}

IntegerMatrix layer_matrix(const HallBasis& basis, const std::vector<LieCombination>& images,
                           int layer) {
  const int offset = basis.layer_offset(layer);
  const std::size_t dim = basis.layer_size(layer);
  IntegerMatrix m(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    const LieCombination& image = images[static_cast<std::size_t>(offset) + j];
    for (const auto& [index, coeff] : image.terms())
      m.at(static_cast<std::size_t>(index - offset), j) = coeff;
  }
  return m;
}

void check_rank(const FreeLieAlgebra& alg, const IntegerMatrix& a) {
  const auto rank = static_cast<std::size_t>(alg.basis().rank());
  if (a.rows() != rank || a.cols() != rank)
    throw std::domain_error("matrix dimensions do not match the basis rank");
}

} // namespace

IntegerMatrix induced_matrix(const FreeLieAlgebra& alg, const IntegerMatrix& a, int layer) {
  check_rank(alg, a);
  if (layer < 1 || layer > alg.basis().degree_bound())
    throw std::domain_error("layer out of range");
  if (layer == 1)
    return a;
  return layer_matrix(alg.basis(), images_up_to(alg, a, layer), layer);
}

LayerDeterminants layer_dets_structural(const FreeLieAlgebra& alg, const IntegerMatrix& a) {
  check_rank(alg, a);
  const HallBasis& basis = alg.basis();
  const int c = basis.degree_bound();
  const auto images = images_up_to(alg, a, c);

  LayerDeterminants out;
  out.r = basis.rank();
  out.c = c;
  out.method = DetMethod::structural;
  for (int i = 1; i <= c; ++i) {
    out.dims.push_back(basis.layer_size(i));
    out.dets.push_back(det_one_minus(i == 1 ? a : layer_matrix(basis, images, i)));
  }
  return out;
}

LayerDeterminants layer_dets_trace(const FreeLieAlgebra& alg, const IntegerMatrix& a) {
  check_rank(alg, a);
  const HallBasis& basis = alg.basis();
  const int c = basis.degree_bound();

  // tr(a^j) for every exponent the character identity will touch.
  std::size_t max_power = 0;
  for (int i = 1; i <= c; ++i)
    max_power = std::max(max_power, basis.layer_size(i) * static_cast<std::size_t>(i));
  std::vector<BigInt> power_traces(max_power + 1);
  IntegerMatrix power = a;
  for (std::size_t j = 1; j <= max_power; ++j) {
    power_traces[j] = power.trace();
    if (j < max_power)
      power = power * a;
  }

  LayerDeterminants out;
  out.r = basis.rank();
  out.c = c;
  out.method = DetMethod::trace;
  for (int i = 1; i <= c; ++i) {
    const std::size_t dim = basis.layer_size(i);
    std::vector<BigRat> sums(dim);
    for (std::size_t k = 1; k <= dim; ++k) {
      BigRat acc = 0;
      for (int d = 1; d <= i; ++d) {
        if (i % d)
          continue;
        const int mu = moebius(d);
        if (mu == 0)
          continue;
        BigInt base = power_traces[k * static_cast<std::size_t>(d)];
        BigInt powed = 1;
        for (int e = 0; e < i / d; ++e)
          powed *= base;
        acc += BigRat(mu) * BigRat(powed);
      }
      sums[k - 1] = acc / BigRat(i);
    }
    IntPolynomial char_poly = char_poly_from_power_sums(sums);
    out.dims.push_back(dim);
    out.dets.push_back(char_poly(BigInt(1)));
  }
  return out;
}

} // namespace nilfix
