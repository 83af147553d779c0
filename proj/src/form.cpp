#include "knotslice/form.hpp"

#include <utility>

#include "knotslice/errors.hpp"
#include "knotslice/exact_linalg.hpp"

namespace knotslice {

IntersectionForm::IntersectionForm(IntMatrix q, int ks) : q_(std::move(q)), ks_(ks & 1) {
  if (q_.rows() != q_.cols()) throw InvalidIntersectionForm("intersection form must be square");
  if (q_ != IntMatrix(q_.transpose()))
    throw InvalidIntersectionForm("intersection form must be symmetric");
  if (q_.rows() > 0 && abs(determinant(q_)) != 1)
    throw InvalidIntersectionForm("intersection form must be unimodular (boundary S^3)");
}

int IntersectionForm::signature() const {
  if (q_.rows() == 0) return 0;
  return knotslice::signature(q_);
}

bool IntersectionForm::is_even() const {
  for (Eigen::Index i = 0; i < q_.rows(); ++i)
    if (!knotslice::is_even(q_(i, i))) return false;
  return true;
}

bool is_characteristic(const IntersectionForm& form, const HomologyClass& x) {
  if (x.size() != form.rank())
    throw DimensionMismatch("class length does not match the form rank");
  const IntVector qx = form.matrix() * x;
  for (Eigen::Index i = 0; i < qx.size(); ++i)
    if (!is_even(Int(qx(i) - form.matrix()(i, i)))) return false;
  return true;
}

Int divisibility(const HomologyClass& x) {
  Int g = 0;
  for (Eigen::Index i = 0; i < x.size(); ++i) g = gcd(g, x(i));
  return g;
}

Int self_intersection(const IntersectionForm& form, const HomologyClass& x) {
  if (x.size() != form.rank())
    throw DimensionMismatch("class length does not match the form rank");
  return (x.transpose() * form.matrix() * x)(0, 0);
}

IntersectionForm connected_sum(const IntersectionForm& a, const IntersectionForm& b) {
  IntMatrix q = IntMatrix::Zero(a.rank() + b.rank(), a.rank() + b.rank());
  q.topLeftCorner(a.rank(), a.rank()) = a.matrix();
  q.bottomRightCorner(b.rank(), b.rank()) = b.matrix();
  return IntersectionForm(std::move(q), a.ks() ^ b.ks());
}

IntersectionForm stabilized(const IntersectionForm& a, long k) {
  if (k < 0) throw Error("stabilization count must be >= 0");
  IntersectionForm result = a;
  for (long i = 0; i < k; ++i) result = connected_sum(result, presets::s2xs2());
  return result;
}

HomologyClass stabilized_class(const HomologyClass& x, long k) {
  if (k < 0) throw Error("stabilization count must be >= 0");
  HomologyClass padded = HomologyClass::Zero(x.size() + 2 * k);
  padded.head(x.size()) = x;
  return padded;
}

std::optional<HomologyClass> find_primitive_ordinary_class(const IntersectionForm& form) {
  const Eigen::Index n = form.rank();
  if (n >= 1 && form.is_even()) {
    HomologyClass e1 = HomologyClass::Zero(n);
    e1(0) = 1;
    return e1;
  }
  if (n >= 2) {
    HomologyClass e1 = HomologyClass::Zero(n), e2 = HomologyClass::Zero(n);
    e1(0) = 1;
    e2(1) = 1;
    for (const HomologyClass& cand : {e1, e2, HomologyClass(e1 + e2)})
      if (!is_characteristic(form, cand)) return cand;
  }
  return std::nullopt;
}

namespace presets {

namespace {

IntMatrix hyperbolic_block() {
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  return h;
}

// E8 Gram matrix, Bourbaki numbering: chain 1-3-4-5-6-7-8 with 2 hung off 4.
IntMatrix e8_block() {
  IntMatrix e = IntMatrix::Zero(8, 8);
  for (int i = 0; i < 8; ++i) e(i, i) = 2;
  const int edges[7][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
  for (const auto& edge : edges) {
    e(edge[0] - 1, edge[1] - 1) = -1;
    e(edge[1] - 1, edge[0] - 1) = -1;
  }
  return e;
}

}  // namespace

IntersectionForm cp2() {
  IntMatrix q(1, 1);
  q << 1;
  return IntersectionForm(std::move(q), 0);
}

IntersectionForm cp2_bar() {
  IntMatrix q(1, 1);
  q << -1;
  return IntersectionForm(std::move(q), 0);
}

IntersectionForm s2xs2() { return IntersectionForm(hyperbolic_block(), 0); }

IntersectionForm k3() {
  IntersectionForm f(IntMatrix(-e8_block()), 0);
  f = connected_sum(f, IntersectionForm(IntMatrix(-e8_block()), 0));
  for (int i = 0; i < 3; ++i) f = connected_sum(f, s2xs2());
  return f;
}

IntersectionForm e8_manifold() { return IntersectionForm(e8_block(), 1); }

const std::vector<std::string>& names() {
  static const std::vector<std::string> list = {"CP2", "CP2bar", "S2xS2", "K3", "E8"};
  return list;
}

std::optional<IntersectionForm> by_name(const std::string& name) {
  if (name == "CP2") return cp2();
  if (name == "CP2bar") return cp2_bar();
  if (name == "S2xS2") return s2xs2();
  if (name == "K3") return k3();
  if (name == "E8") return e8_manifold();
  return std::nullopt;
}

}  // namespace presets

}  // namespace knotslice
