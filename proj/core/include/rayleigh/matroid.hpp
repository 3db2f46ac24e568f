#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rayleigh/bits.hpp"

namespace rayleigh {

// A matroid on a labelled ground set of at most 31 elements, stored as the
// explicit family of bases. Basis masks use bit i for the element at ground
// position i and are kept sorted ascending.
struct Matroid {
  std::string name;
  std::vector<std::string> labels;
  int rank = 0;
  std::vector<Subset> bases;

  int size() const { return static_cast<int>(labels.size()); }
  int index_of(std::string_view label) const;  // throws UnknownElement
  Subset mask_of(const std::vector<std::string>& some) const;
  std::vector<std::string> labels_of(Subset s) const;

  bool is_basis(Subset s) const;
  // True when s is contained in some basis.
  bool is_independent(Subset s) const;
  Subset loops() const;    // elements in no basis
  Subset coloops() const;  // elements in every basis
  // Number of bases containing element i.
  long element_weight(int i) const;
};

struct Profile {
  std::string name;
  int size = 0;
  int rank = 0;
  long basis_count = 0;
  std::vector<std::string> loops;
  std::vector<std::string> coloops;
};

// Checks labels are nonempty, whitespace-free, distinct, and at most 31.
void validate_labels(const std::vector<std::string>& labels);

// Validates the basis-exchange axiom over the whole family; throws
// ExchangeAxiomViolation with the offending pair and element.
void validate_exchange(const Matroid& m);

// Builds a matroid from explicit bases given as label lists. Throws
// EmptyFamily, MixedCardinality, UnknownElement or ExchangeAxiomViolation.
Matroid from_bases(std::vector<std::string> labels,
                   const std::vector<std::vector<std::string>>& bases,
                   std::string name = "");

// Mask-level variant used by the other constructors; validation optional
// for families that are bases by construction.
Matroid from_bases_masks(std::vector<std::string> labels,
                         std::vector<Subset> bases, std::string name = "",
                         bool validate = true);

// U_{r,m} with labels "1".."m".
Matroid uniform_matroid(int r, int m);

// Transversal matroid of a set system: independent sets are the partial
// transversals, bases the maximum-size ones.
Matroid from_transversal(std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& sets,
                         std::string name = "");

// Rank-3 matroid of a partial linear space on three-point lines: bases are
// exactly the non-line triples. Lines must intersect pairwise in at most one
// point; with two or more lines, no point may lie on all of them.
Matroid from_lines_rank3(std::vector<std::string> labels,
                         const std::vector<std::vector<std::string>>& lines,
                         std::string name = "");

Matroid dual(const Matroid& m);

// Minor m / contract \ del. The two sets must be disjoint; loops inside the
// contract set act as deletions. Remaining elements keep their labels and
// relative order.
Matroid matroid_minor(const Matroid& m, Subset contract, Subset del);
Matroid matroid_minor(const Matroid& m, const std::vector<std::string>& contract,
                      const std::vector<std::string>& del);

// 2-sum along glue elements gm in m and gq in q; both must be neither loops
// nor coloops in their matroid, and the remaining label sets must not clash.
Matroid two_sum(const Matroid& m, const Matroid& q, const std::string& gm,
                const std::string& gq);

// Replaces element i by mult[i] parallel copies. Copies of an element keep
// its label when mult[i] == 1 and are labelled "<label>.k" otherwise.
Matroid parallel_expand(const Matroid& m, const std::vector<int>& mult);

Profile profile(const Matroid& m);

// Ground-set bijection mapping bases onto bases, as a vector over positions
// of a (value: position in b), or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Matroid& a,
                                                 const Matroid& b);
bool is_isomorphic(const Matroid& a, const Matroid& b);

struct MinorWitness {
  Subset contracted = 0;
  Subset deleted = 0;
  std::vector<int> map;  // minor position -> pattern position
};

// Exhaustive search for a minor isomorphic to pattern, in deterministic
// order over (contract, delete) pairs. Returns the first witness found.
std::optional<MinorWitness> find_minor(const Matroid& m, const Matroid& pattern);
bool has_minor(const Matroid& m, const Matroid& pattern);

}  // namespace rayleigh
