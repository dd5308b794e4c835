#include "tokgraph/permutation.h"

#include <functional>

#include "tokgraph/errors.h"

namespace tokgraph {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<char> seen(image_.size(), 0);
  for (int x : image_) {
    if (x < 0 || x >= degree() || seen[x]) throw ParameterError("image", "not a bijection");
    seen[x] = 1;
  }
}

Permutation Permutation::Identity(int n) {
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  Permutation p;
  p.image_ = std::move(image);
  return p;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (image_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.image_.resize(image_.size());
  for (int i = 0; i < degree(); ++i) p.image_[image_[i]] = i;
  return p;
}

Permutation Permutation::operator*(const Permutation& other) const {
  Permutation p;
  p.image_.resize(image_.size());
  for (int i = 0; i < degree(); ++i) p.image_[i] = image_[other.image_[i]];
  return p;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (int i = 0; i < degree(); ++i) {
    if (i) out += ',';
    out += std::to_string(image_[i]);
  }
  return out + "]";
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.order()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p[u], p[v])) return false;
  return true;
}

PermGroup::PermGroup(int degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  for (const auto& g : generators_)
    if (g.degree() != degree) throw ParameterError("generators", "degree mismatch");
  const int n = degree_;
  std::vector<std::vector<Permutation>> level_gens(n);
  transversal_.assign(n, std::vector<std::optional<Permutation>>(n));
  for (int i = 0; i < n; ++i) transversal_[i][i] = Permutation::Identity(n);

  // Incremental Schreier-Sims: `add` inserts an element fixing 0..i-1 into
  // level i unless it already sifts through; `extend` grows the orbit of i
  // and pushes Schreier generators down one level.
  std::function<void(Permutation, int)> add;
  std::function<void(Permutation, int)> extend;
  add = [&](Permutation g, int i) {
    if (i >= n) return;
    {
      Permutation h = g;
      int level = i;
      for (; level < n; ++level) {
        const auto& u = transversal_[level][h[level]];
        if (!u) break;
        h = u->inverse() * h;
      }
      if (level == n) return;  // already a member
    }
    level_gens[i].push_back(g);
    std::vector<Permutation> reps;
    for (int j = 0; j < n; ++j)
      if (transversal_[i][j]) reps.push_back(*transversal_[i][j]);
    for (const auto& u : reps) extend(g * u, i);
  };
  extend = [&](Permutation h, int i) {
    const int j = h[i];
    if (transversal_[i][j]) {
      add(transversal_[i][j]->inverse() * h, i + 1);
      return;
    }
    transversal_[i][j] = h;
    const auto gens = level_gens[i];
    for (const auto& s : gens) extend(s * h, i);
  };
  for (const auto& g : generators_) add(g, 0);

  order_ = 1;
  for (int i = 0; i < n; ++i) {
    int orbit = 0;
    for (int j = 0; j < n; ++j) orbit += transversal_[i][j].has_value();
    order_ *= orbit;
  }
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  Permutation h = p;
  for (int level = 0; level < degree_; ++level) {
    const auto& u = transversal_[level][h[level]];
    if (!u) return false;
    h = u->inverse() * h;
  }
  return true;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace tokgraph
