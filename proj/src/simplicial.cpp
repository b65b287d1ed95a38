#include "monograd/simplicial.hpp"

#include <algorithm>
#include <bit>
#include <unordered_map>

#include "monograd/errors.hpp"

namespace monograd {

int cardinality(VertexMask w) { return std::popcount(w); }

std::vector<int> vertices_of(VertexMask w) {
  std::vector<int> out;
  while (w) {
    out.push_back(std::countr_zero(w) + 1);
    w &= w - 1;
  }
  return out;
}

VertexMask mask_of(const std::vector<int>& vertices) {
  VertexMask w = 0;
  for (int v : vertices) {
    if (v < 1 || v > kMaxVertices) throw DomainError("vertex label out of range 1..64");
    w |= VertexMask{1} << (v - 1);
  }
  return w;
}

bool face_less(VertexMask a, VertexMask b) {
  const int ca = cardinality(a), cb = cardinality(b);
  if (ca != cb) return ca < cb;
  const VertexMask diff = a ^ b;
  if (!diff) return false;
  return (a & (diff & (~diff + 1))) != 0;
}

SimplicialComplex::SimplicialComplex(int n, std::vector<VertexMask> nonfaces) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw ResourceError("simplicial complexes are limited to 64 vertices");
  const VertexMask full = full_mask();
  for (auto w : nonfaces)
    if (w & ~full) throw DomainError("nonface uses a vertex outside [n]");
  std::sort(nonfaces.begin(), nonfaces.end(), face_less);
  nonfaces.erase(std::unique(nonfaces.begin(), nonfaces.end()), nonfaces.end());
  for (auto w : nonfaces) {
    const bool redundant = std::any_of(nonfaces_.begin(), nonfaces_.end(),
                                       [&](VertexMask k) { return (k & w) == k; });
    if (!redundant) nonfaces_.push_back(w);
  }
  by_vertex_.resize(static_cast<std::size_t>(n));
  for (auto w : nonfaces_)
    for (int v : vertices_of(w)) by_vertex_[static_cast<std::size_t>(v - 1)].push_back(w);
}

VertexMask SimplicialComplex::full_mask() const {
  return n_ == 64 ? ~VertexMask{0} : (VertexMask{1} << n_) - 1;
}

bool SimplicialComplex::is_face(VertexMask w) const {
  return std::none_of(nonfaces_.begin(), nonfaces_.end(), [&](VertexMask k) { return (k & w) == k; });
}

std::vector<std::vector<VertexMask>> SimplicialComplex::faces_by_size(VertexMask within) const {
  std::vector<std::vector<VertexMask>> out;
  if (is_void()) return out;
  within &= full_mask();
  const auto verts = vertices_of(within);
  out.resize(verts.size() + 1);

  // Depth-first over increasing vertex lists yields lexicographic order.
  auto rec = [&](auto&& self, VertexMask face, std::size_t next) -> void {
    out[static_cast<std::size_t>(cardinality(face))].push_back(face);
    for (std::size_t k = next; k < verts.size(); ++k) {
      const int v = verts[k];
      const VertexMask grown = face | (VertexMask{1} << (v - 1));
      const auto& blockers = by_vertex_[static_cast<std::size_t>(v - 1)];
      const bool ok = std::none_of(blockers.begin(), blockers.end(),
                                   [&](VertexMask nf) { return (nf & grown) == nf; });
      if (ok) self(self, grown, k + 1);
    }
  };
  rec(rec, 0, 0);
  while (out.size() > 1 && out.back().empty()) out.pop_back();
  return out;
}

int SimplicialComplex::dimension() const {
  if (is_void()) return -2;
  return static_cast<int>(faces_by_size().size()) - 2;
}

SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  if (ideal.n() > kMaxVertices) throw ResourceError("Stanley-Reisner complexes are limited to 64 vertices");
  std::vector<VertexMask> nonfaces;
  for (const auto& g : ideal.gens()) {
    if (!g.is_squarefree())
      throw DomainError("Stanley-Reisner complex needs a squarefree ideal; offending generator " +
                        g.to_string());
    nonfaces.push_back(mask_of(g.support()));
  }
  return SimplicialComplex(ideal.n(), std::move(nonfaces));
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  std::vector<Monomial> gens;
  for (auto w : complex.minimal_nonfaces()) {
    const auto vs = vertices_of(w);
    gens.push_back(Monomial::squarefree(complex.n(), vs));
  }
  return MonomialIdeal(complex.n(), std::move(gens));
}

namespace {

// Packs the bits of `x` selected by `w` into the low bits, order preserved.
VertexMask compress_bits(VertexMask x, VertexMask w) {
  VertexMask out = 0;
  int pos = 0;
  while (w) {
    const VertexMask low = w & (~w + 1);
    if (x & low) out |= VertexMask{1} << pos;
    ++pos;
    w &= w - 1;
  }
  return out;
}

std::vector<SparseColumn> boundary_columns(const std::vector<VertexMask>& domain,
                                           const std::vector<VertexMask>& codomain) {
  std::unordered_map<VertexMask, std::uint32_t> index;
  index.reserve(codomain.size() * 2);
  for (std::uint32_t i = 0; i < codomain.size(); ++i) index.emplace(codomain[i], i);
  std::vector<SparseColumn> cols;
  cols.reserve(domain.size());
  for (auto face : domain) {
    SparseColumn col;
    int below = 0;
    for (VertexMask rest = face; rest; rest &= rest - 1) {
      const VertexMask p = rest & (~rest + 1);
      col.emplace_back(index.at(face & ~p), (below % 2) ? -1 : 1);
      ++below;
    }
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

SimplicialComplex restrict(const SimplicialComplex& complex, VertexMask w) {
  w &= complex.full_mask();
  const int m = cardinality(w);
  if (complex.is_void()) return SimplicialComplex::void_complex(m);
  std::vector<VertexMask> nonfaces;
  for (auto nf : complex.minimal_nonfaces())
    if ((nf & w) == nf) nonfaces.push_back(compress_bits(nf, w));
  return SimplicialComplex(m, std::move(nonfaces));
}

IntMatrix boundary_matrix(const SimplicialComplex& complex, int s) {
  const auto faces = complex.faces_by_size();
  auto layer = [&](int size) -> const std::vector<VertexMask>* {
    if (size < 0 || static_cast<std::size_t>(size) >= faces.size()) return nullptr;
    return &faces[static_cast<std::size_t>(size)];
  };
  const auto* dom = layer(s + 1);
  const auto* cod = layer(s);
  IntMatrix m(cod ? cod->size() : 0, dom ? dom->size() : 0);
  if (!dom || !cod) return m;
  const auto cols = boundary_columns(*dom, *cod);
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (const auto& [r, v] : cols[c]) m.at(r, c) = v;
  return m;
}

std::vector<std::size_t> reduced_homology(const SimplicialComplex& complex, VertexMask within) {
  within &= complex.full_mask();
  const int w = cardinality(within);
  std::vector<std::size_t> h(static_cast<std::size_t>(w) + 1, 0);
  if (complex.is_void()) return h;
  const auto faces = complex.faces_by_size(within);

  // ranks[s] = rank of ∂_s : C_s -> C_{s-1}, C_s spanned by faces with s+1 vertices.
  std::vector<std::size_t> ranks(faces.size() + 1, 0);
  for (std::size_t size = 1; size < faces.size(); ++size)
    ranks[size - 1] = rank(boundary_columns(faces[size], faces[size - 1]));
  // h[s+1] = dim C_s - rank ∂_s - rank ∂_{s+1}; C_{-1} maps to zero.
  for (std::size_t size = 0; size < faces.size(); ++size) {
    const std::size_t rank_out = size == 0 ? 0 : ranks[size - 1];
    const std::size_t rank_in = ranks[size];
    h[size] = faces[size].size() - rank_out - rank_in;
  }
  return h;
}

std::size_t reduced_homology_dim(const SimplicialComplex& complex, int s) {
  if (s < -1) return 0;
  const auto h = reduced_homology(complex, complex.full_mask());
  const auto idx = static_cast<std::size_t>(s + 1);
  return idx < h.size() ? h[idx] : 0;
}

}  // namespace monograd
