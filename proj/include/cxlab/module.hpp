#pragma once

// Finitely presented graded modules over a quotient ring, with exact graded
// pieces read off a Groebner basis of the relations.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxlab/gb.hpp"
#include "cxlab/linalg.hpp"
#include "cxlab/ring.hpp"

namespace cxlab {

/// One basis vector of a graded piece: monomial times a generator.
struct PieceEntry {
  std::uint32_t comp;
  Monomial mono;
};

struct FiniteLength {
  bool finite = false;
  long long length = 0;
  /// Largest degree with a nonzero piece, when finite.
  std::optional<int> top_degree;
};

class GradedModule {
 public:
  GradedModule() = default;

  /// Cokernel of the relation columns on generators with the given twists.
  /// Relations are reduced modulo the ring, checked for homogeneity and
  /// pruned of unit entries (unless `prune` is false); generators end up
  /// stably sorted by twist.
  static GradedModule create(RingPtr ring, std::vector<int> twists, std::vector<FreeModuleElement> relations,
                             std::string name = {}, bool prune = true);
  static GradedModule free(RingPtr ring, std::vector<int> twists, std::string name = {});
  static GradedModule residue_field(RingPtr ring);
  /// R/(gens), one generator of degree 0.
  static GradedModule cyclic(RingPtr ring, const std::vector<Polynomial>& gens, std::string name = {});

  bool valid() const { return static_cast<bool>(d_); }
  const RingPtr& ring() const;
  const std::vector<int>& twists() const;
  /// Columns are relations, rows are generators.
  const Matrix& relations() const;
  const std::string& name() const;
  std::size_t num_generators() const { return twists().size(); }
  bool is_free() const { return relations().cols() == 0; }
  bool is_zero() const { return num_generators() == 0; }
  const ModuleGroebnerBasis& groebner_basis() const;

  GradedModule with_name(std::string name) const;
  /// M(s): every generator twist decreases by s, so M(s)_d = M_{d+s}.
  GradedModule twisted(int s) const;

  /// Dimensions of the pieces of degrees lo..hi.
  std::vector<long long> hilbert_function(int lo, int hi) const;
  /// Hilbert numerator over prod(1 - t^{w_i}) as a Laurent polynomial starting at t^{lowest}.
  std::pair<int, std::vector<long long>> hilbert_numerator() const;
  FiniteLength finite_length() const;
  /// Smallest generator twist (0 for the zero module).
  int min_twist() const;
  int max_twist() const;

  /// Basis of the degree-d piece.
  const std::vector<PieceEntry>& piece(int d) const;
  /// Index of a standard monomial times generator inside its piece, or -1.
  long index_of(std::uint32_t comp, const Monomial& m) const;
  /// Normal form of m * e_comp.
  const FreeModuleElement& normal_form_term(std::uint32_t comp, const Monomial& m) const;
  /// Adds scale * coordinates(p * m * e_comp) shifted by `offset` into acc.
  void add_product(Accumulator& acc, std::uint32_t offset, const Polynomial& p, const Monomial& m,
                   std::uint32_t comp, Coeff scale) const;
  /// Coordinates of a homogeneous element of the ambient free module in its piece.
  SparseVec coordinates(const FreeModuleElement& f) const;
  /// Element of the ambient free module for piece coordinates.
  FreeModuleElement element_of(int d, const SparseVec& v) const;

  /// Compact text: `twists 0,1; rels [x, y], [0, x^2]`.
  std::string render() const;

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

/// Module text: `k`, `ring` (or `A`), `free <twists>`, `quotient <polys>`,
/// `twists <list>; rels [col], [col], ...`, or a JSON object with fields
/// twists and relations (list of columns, each a list of polynomial strings).
GradedModule parse_module(const RingPtr& ring, std::string_view text);

GradedModule direct_sum(const GradedModule& a, const GradedModule& b);

}  // namespace cxlab
