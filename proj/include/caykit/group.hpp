#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "caykit/error.hpp"

namespace caykit {

enum class Family {
  FreeAbelian,      // Z^d, exponent vectors
  Free,             // F_m, freely reduced syllable words
  FiniteCyclic,     // Z_q
  FiniteSymmetric,  // S_q, one-line permutations
  FreeProductZZ3,   // Z * Z_3 = <t, u | u^3>, alternating syllable words
  DirectProduct,
};

struct GroupSpec {
  Family family = Family::FreeAbelian;
  int param = 1;  // dimension / rank / order / symmetric degree
  std::vector<GroupSpec> factors;

  // Declared, not computed: 0/1/2 or -1 for infinitely many ends.
  int declared_ends = 0;
  bool declared_amenable = true;

  static GroupSpec free_abelian(int dim);
  static GroupSpec free(int rank);
  static GroupSpec finite_cyclic(int order);
  static GroupSpec finite_symmetric(int degree);
  static GroupSpec free_product_z_z3();
  static GroupSpec direct_product(std::vector<GroupSpec> factors);
};

// A group element in the family's canonical form. The encoding of `data`
// depends on the family; equality of elements is equality of data.
struct Element {
  std::vector<long long> data;
  auto operator<=>(const Element&) const = default;
};

class Group;

struct GeneratingSet {
  std::vector<Element> gens;  // deduped, identity excluded
  // S together with all inverses, sorted and deduped.
  std::vector<Element> symmetric_closure(const Group& g) const;
};

struct Ball {
  Element center;
  int radius = 0;
  int interior_radius = 0;
  std::vector<Element> elements;  // sorted
  std::vector<int> distance;      // distance[i] = d(center, elements[i])

  int index_of(const Element& e) const;  // -1 if absent
  int size() const { return static_cast<int>(elements.size()); }
  bool is_interior(int i) const { return distance[i] <= interior_radius; }
};

class Group {
 public:
  explicit Group(GroupSpec spec);

  const GroupSpec& spec() const { return spec_; }
  const std::string& name() const { return name_; }

  Element identity() const;
  Element multiply(const Element& a, const Element& b) const;
  Element inverse(const Element& a) const;
  bool is_identity(const Element& a) const;

  int generator_count() const { return static_cast<int>(gen_names_.size()); }
  Element generator(int i) const;
  const std::string& generator_name(int i) const { return gen_names_[i]; }
  GeneratingSet default_generators() const;

  // Words are space-separated generator names; a leading capital letter marks
  // the inverse ("a B a"). "e" or the empty string is the identity.
  Element parse(const std::string& word) const;
  std::string to_string(const Element& e) const;

  void validate(const Element& e) const;  // throws Error on malformed data

  // Direct products only.
  int factor_count() const { return static_cast<int>(factors_.size()); }
  const Group& factor(int i) const;
  std::vector<Element> product_components(const Element& e) const;
  Element product_embed(int factor_index, const Element& part) const;

 private:
  GroupSpec spec_;
  std::string name_;
  std::vector<std::string> gen_names_;
  std::vector<std::unique_ptr<Group>> factors_;

  Element multiply_impl(const Element& a, const Element& b) const;
  friend struct ProductAccess;
};

// Least n with g^{-1} h a product of n symmetric generators, or nullopt if
// the search exhausts max_radius first.
std::optional<int> word_distance(const Group& g, const GeneratingSet& s,
                                 const Element& a, const Element& b,
                                 int max_radius);

// Word length of e over the default generators. Closed-form for the abelian,
// free, cyclic and Z*Z_3 families; breadth-first search otherwise.
long long default_word_norm(const Group& g, const Element& e);

// Breadth-first closure of `center` under S u S^-1 out to `radius`.
// Throws CapExceeded if the ball would exceed `cap` elements.
Ball enumerate_ball(const Group& g, const GeneratingSet& s, int radius,
                    long long cap = 2'000'000,
                    const Element* center = nullptr);

// S u S^2 u ... u S^n with the identity removed (powers of the symmetric
// closure, i.e. the punctured ball of radius n).
GeneratingSet power_generating_set(const Group& g, const GeneratingSet& s,
                                   int n, long long cap = 2'000'000);

}  // namespace caykit
