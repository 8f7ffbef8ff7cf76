#pragma once

#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "uqosp/superalg/element.hpp"

namespace uqosp {

struct MonomialTupleHash {
  std::size_t operator()(const std::vector<Monomial>& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& m : v) h = h * 0x100000001b3ULL ^ MonomialHash()(m);
    return h;
  }
};

/// Element of the n-fold tensor power: sums of x_1 (x) ... (x) x_n.
/// Products follow the super sign rule
/// (a_1 (x) .. (x) a_n)(b_1 (x) .. (x) b_n) = (-1)^{sum_{i>j} |a_i||b_j|} a_1b_1 (x) .. (x) a_nb_n.
class Tensor {
 public:
  using Key = std::vector<Monomial>;
  using Map = std::unordered_map<Key, Scalar, MonomialTupleHash>;

  explicit Tensor(int rank = 2) : rank_(rank) {}
  /// x_1 (x) ... (x) x_n.
  static Tensor pure(const std::vector<Element>& factors);

  int rank() const { return rank_; }
  bool is_zero() const { return t_.empty(); }
  const Map& terms() const { return t_; }
  void add(const Key& k, const Scalar& c);
  void add(const Tensor& o);
  void add_scaled(const Tensor& o, const Scalar& s);

  friend Tensor operator*(const Tensor& a, const Tensor& b);
  friend Tensor operator+(Tensor a, const Tensor& b) {
    a.add(b);
    return a;
  }
  friend Tensor operator-(Tensor a, const Tensor& b) {
    a.add_scaled(b, Scalar(-1));
    return a;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) { return a.rank_ == b.rank_ && a.t_ == b.t_; }

  /// Replaces slot `i` by f(monomial), a linear map into `width` slots
  /// (width 0 contracts the slot into the coefficient; f's slots must then
  /// be given as a rank-0 tensor with a single empty key).
  Tensor map_slot(int i, const std::function<Tensor(const Monomial&)>& f) const;
  /// Applies a linear even map to every slot.
  Tensor map_each(const std::function<Element(const Monomial&)>& f) const;

  std::vector<std::pair<Key, Scalar>> sorted() const;
  std::string to_string() const;

 private:
  int rank_;
  Map t_;
};

}  // namespace uqosp
