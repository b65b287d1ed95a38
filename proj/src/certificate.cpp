#include "monograd/certificate.hpp"

#include <bit>

#include "monograd/errors.hpp"
#include "monograd/families.hpp"
#include "monograd/gradient.hpp"

namespace monograd {

Chain chain_boundary(const Chain& chain) {
  Chain out;
  for (const auto& [face, coeff] : chain) {
    int below = 0;
    for (VertexMask rest = face; rest; rest &= rest - 1) {
      const VertexMask bit = rest & (~rest + 1);
      const std::int64_t sign = (below % 2) ? -1 : 1;
      auto& slot = out[face & ~bit];
      slot += sign * coeff;
      if (slot == 0) out.erase(face & ~bit);
      ++below;
    }
  }
  return out;
}

CycleCertificate cycle_certificate(int d) {
  if (d < 3) throw DomainError("cycle certificate needs d >= 3");
  const auto ideal = family_overlap_run(d);
  const auto delta = stanley_reisner(gradient(ideal));

  CycleCertificate cert;
  cert.d = d;
  std::vector<int> low, high;
  for (int p = 1; p <= d - 1; ++p) low.push_back(p);
  for (int q = d + 2; q <= 2 * d; ++q) high.push_back(q);
  std::vector<int> wv = low;
  wv.insert(wv.end(), high.begin(), high.end());
  cert.w = mask_of(wv);

  const auto faces = delta.faces_by_size(cert.w);
  const auto top = static_cast<std::size_t>(2 * d - 3);
  cert.no_top_faces = faces.size() <= top || faces[top].empty();
  if (faces.size() > top) cert.offending = faces[top];

  Chain z;
  cert.faces_present = true;
  for (int p : low) {
    for (int q : high) {
      const VertexMask f = cert.w & ~mask_of({p, q});
      if (!delta.is_face(f)) {
        cert.faces_present = false;
        cert.offending.push_back(f);
      }
      z[f] = ((p + q) % 2) ? -1 : 1;
    }
  }
  cert.terms = z.size();
  cert.is_cycle = !z.empty() && chain_boundary(z).empty();
  cert.homology = reduced_homology(delta, cert.w)[static_cast<std::size_t>(2 * d - 4)];
  return cert;
}

}  // namespace monograd
