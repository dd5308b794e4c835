#ifndef TOKGRAPH_PERMUTATION_H_
#define TOKGRAPH_PERMUTATION_H_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tokgraph/graph.h"

namespace tokgraph {

using BigInt = boost::multiprecision::cpp_int;

// A bijection on [0, n) stored as its image array.
class Permutation {
 public:
  Permutation() = default;
  // Throws ParameterError if `image` is not a bijection on [0, size).
  explicit Permutation(std::vector<int> image);
  static Permutation Identity(int n);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator[](int x) const { return image_[x]; }
  std::span<const int> image() const { return image_; }

  bool is_identity() const;
  Permutation inverse() const;
  // (*this * other)(x) = (*this)(other(x)): apply `other` first.
  Permutation operator*(const Permutation& other) const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

  // One-line image array, e.g. "[1,2,0]".
  std::string to_string() const;

 private:
  std::vector<int> image_;
};

bool is_automorphism(const Graph& g, const Permutation& p);

// Group generated by `generators`, with its exact order.
class PermGroup {
 public:
  PermGroup() = default;
  // Computes the order by a Schreier-Sims stabiliser chain over the base
  // 0, 1, ..., degree-1.
  PermGroup(int degree, std::vector<Permutation> generators);

  int degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const BigInt& order() const { return order_; }

  // Membership test by sifting through the stabiliser chain.
  bool contains(const Permutation& p) const;

 private:
  int degree_ = 0;
  std::vector<Permutation> generators_;
  BigInt order_ = 1;
  // transversal_[i][j]: element fixing 0..i-1 and mapping i to j, if any.
  std::vector<std::vector<std::optional<Permutation>>> transversal_;
};

std::string to_decimal(const BigInt& value);
BigInt factorial(int n);

}  // namespace tokgraph

#endif  // TOKGRAPH_PERMUTATION_H_
