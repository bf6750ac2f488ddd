#include <vector>

#include "doctest.h"
#include "hmdual/duality.hpp"
#include "hmdual/errors.hpp"
#include "hmdual/hypermap.hpp"
#include "hmdual/permutation.hpp"
#include "hmdual/structure.hpp"
#include "hmdual/todd_coxeter.hpp"
#include "oracles.hpp"

using namespace hmdual;

namespace {

Permutation power(const Permutation& p, int e) {
  Permutation r(p.degree());
  for (int i = 0; i < e; ++i) r = r.then(p);
  return r;
}

// (C₆, g, g⁴): the smallest hypermap whose duality group is proper and nontrivial.
OrientedHypermap c6_pair() {
  const Permutation g = Permutation::from_cycles({{1, 2, 3, 4, 5, 6}}, 6);
  return OrientedHypermap(g, power(g, 4));
}

Presentation c6_presentation() {
  const std::vector<std::string> names = {"x", "y"};
  return Presentation(names, {parse_word("x^6", names), parse_word("x^4*y^-1", names)});
}

OrientedHypermap a5_example() {
  return OrientedHypermap(Permutation::from_cycles({{1, 2, 3, 4, 5}}, 5),
                          Permutation::from_cycles({{1, 2, 3}}, 5));
}

Presentation order20_presentation() {
  const std::vector<std::string> names = {"x", "y"};
  return Presentation(names, {parse_word("x^4", names), parse_word("y^4", names),
                              parse_word("x*y*x^-2*y^-2", names)});
}

OrientedHypermap order20_example() {
  const TcResult r = todd_coxeter(order20_presentation(), {});
  return OrientedHypermap(r.generator_images[0], r.generator_images[1]);
}

// Rotation r ↦ r+1 and reflection r ↦ −r on the 2d darts of a dihedral map.
OrientedHypermap dihedral_by_hand(int d) {
  const int n = 2 * d;
  std::vector<int> rot(static_cast<std::size_t>(n));
  std::vector<int> ref(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    rot[static_cast<std::size_t>(i) - 1] = i % n + 1;
    ref[static_cast<std::size_t>(i) - 1] = (n - (i - 1)) % n + 1;
  }
  return OrientedHypermap(Permutation::from_images(rot), Permutation::from_images(ref));
}

}  // namespace

TEST_CASE("named operations are involutory assignments") {
  for (const OperationSpec& op : named_operations()) {
    CHECK(op.involutory);
    CHECK(op.u.substitute({op.u, op.v}) == Word::generator(0));
    CHECK(op.v.substitute({op.u, op.v}) == Word::generator(1));
  }
  const OrientedHypermap h = a5_example();
  CHECK(apply_operation(h, alpha_operation()).x() == alpha_dual(h).x());
  CHECK(apply_operation(h, beta_operation()).x() == beta_dual(h).x());
  CHECK(apply_operation(h, beta_operation()).y() == beta_dual(h).y());
  CHECK(apply_operation(h, mirror_operation()).y() == mirror(h).y());

  const OperationSpec skew =
      OperationSpec::custom("skew", Word::generator(1), Word::generator(0, true));
  CHECK_FALSE(skew.involutory);
}

TEST_CASE("kernel of the mark swap on the order-6 cyclic pair") {
  const OrientedHypermap h = c6_pair();
  const KernelResult kr = operation_kernel(h, alpha_operation());
  CHECK(kr.index == 2);
  CHECK(kr.minimal_normal_certified);
  CHECK(kr.kernel.order() == 2);
  CHECK(kr.kernel.contains(power(h.x(), 3)));
  CHECK(structure_describe(kr.kernel).name == "C2");

  CHECK(duality_index(h) == 2);
  CHECK(duality_coindex(h) == 3);
  CHECK_FALSE(is_self_dual(h));
  CHECK_FALSE(is_extreme(h));

  const OrientedHypermap q = duality_quotient(h, alpha_operation());
  CHECK(q.order() == 3);
  CHECK(q.x() == q.y());
  CHECK(operation_kernel(q, alpha_operation()).index == 1);
}

TEST_CASE("self-dual and extreme cyclic marks") {
  const Permutation g5 = Permutation::from_cycles({{1, 2, 3, 4, 5}}, 5);
  CHECK(duality_index(OrientedHypermap(g5, g5)) == 1);
  CHECK(is_self_dual(OrientedHypermap(g5, g5)));

  const OrientedHypermap extreme(g5, Permutation(5));
  CHECK(duality_index(extreme) == 5);
  CHECK(is_extreme(extreme));
  CHECK(duality_quotient(extreme, alpha_operation()).order() == 1);
}

TEST_CASE("both dualities are extreme on the alternating example") {
  const OrientedHypermap h = a5_example();
  const KernelResult alpha = operation_kernel(h, alpha_operation());
  CHECK(alpha.index == 60);
  CHECK(alpha.kernel.order() == 60);
  CHECK(structure_label(structure_describe(alpha.kernel)) == "nonabelian");
  CHECK(operation_kernel(h, beta_operation()).index == 60);
  CHECK(operation_kernel(h, mirror_operation()).index == 1);
  CHECK(marked_iso(h, mirror(h)));
}

TEST_CASE("order-20 example separates the two dualities") {
  const OrientedHypermap h = order20_example();
  const KernelResult alpha = operation_kernel(h, alpha_operation());
  CHECK(alpha.index == 5);
  CHECK(structure_describe(alpha.kernel).name == "C5");
  CHECK(operation_kernel(h, beta_operation()).index == 1);
  CHECK(marked_iso(h, beta_dual(h)));
  CHECK(duality_quotient(h, alpha_operation()).order() == 4);
}

TEST_CASE("kernels are normal and sized by the pair group") {
  for (const OrientedHypermap& h : {c6_pair(), a5_example(), order20_example()}) {
    for (const OperationSpec& op : named_operations()) {
      const KernelResult kr = operation_kernel(h, op);
      CHECK(h.order() % kr.index == 0);
      for (const auto& k : kr.kernel.generators()) {
        CHECK(h.group().contains(k));
        CHECK(kr.kernel.contains(conjugate(k, h.x())));
        CHECK(kr.kernel.contains(conjugate(k, h.y())));
      }
      const PermGroup pair = parallel_product(h, apply_operation(h, op));
      CHECK(pair.order() == h.order() * kr.index);
      // The stabilizer of either copy has the same order for involutory ops.
      std::vector<int> second;
      for (int i = h.degree() + 1; i <= 2 * h.degree(); ++i) second.push_back(i);
      CHECK(pair.pointwise_stabilizer(second).order() == kr.index);
    }
  }
}

TEST_CASE("assignment images must generate") {
  const OrientedHypermap h = a5_example();
  const OperationSpec collapse =
      OperationSpec::custom("collapse", Word::generator(0), Word());
  CHECK_THROWS_AS(operation_kernel(h, collapse), ImagesDoNotGenerate);

  const OperationSpec identity_op =
      OperationSpec::custom("ident", Word::generator(0), Word::generator(1));
  const KernelResult kr = operation_kernel(h, identity_op);
  CHECK(kr.index == 1);
  CHECK(kr.minimal_normal_certified);
}

TEST_CASE("enumeration route matches the kernel route") {
  const OrientedHypermap c6 = c6_pair();
  CHECK(index_via_presentation(c6_presentation(), alpha_operation()) == 3);
  CHECK(c6.order() / operation_kernel(c6, alpha_operation()).index == 3);

  const OrientedHypermap h20 = order20_example();
  for (const OperationSpec& op : named_operations()) {
    const int coindex = index_via_presentation(order20_presentation(), op);
    CHECK(h20.order() / operation_kernel(h20, op).index ==
          static_cast<std::uint64_t>(coindex));
  }
  CHECK(index_via_presentation(order20_presentation(), alpha_operation()) == 4);
  CHECK(index_via_presentation(order20_presentation(), beta_operation()) == 20);
}

TEST_CASE("exhaustive oracle over small groups") {
  CHECK(bruteforce_minimal_normal(c6_pair(), alpha_operation()) == 2);
  CHECK(bruteforce_minimal_normal(c6_pair(), beta_operation()) ==
        operation_kernel(c6_pair(), beta_operation()).index);

  const OrientedHypermap d12 = dihedral_by_hand(3);
  REQUIRE(d12.order() == 12);
  CHECK(bruteforce_minimal_normal(d12, alpha_operation()) == 3);
  CHECK(operation_kernel(d12, alpha_operation()).index == 3);

  const Permutation g5 = Permutation::from_cycles({{1, 2, 3, 4, 5}}, 5);
  CHECK(bruteforce_minimal_normal(OrientedHypermap(g5, g5), alpha_operation()) == 1);
  CHECK(bruteforce_minimal_normal(OrientedHypermap(g5, Permutation(5)),
                                  alpha_operation()) == 5);

  CHECK_THROWS_AS(bruteforce_minimal_normal(a5_example(), alpha_operation()), TooLarge);
}

TEST_CASE("product with a reversed cover predicts the duality group") {
  const OrientedHypermap k(Permutation::from_cycles({{1, 2, 3, 4}}, 4), Permutation(4));
  const OrientedHypermap h(Permutation::from_cycles({{1, 2}}, 2), Permutation(2));
  const ProductDualityResult r = product_duality_check(k, h);
  CHECK(r.d_order == 2);
  CHECK(r.product.order() == 8);
  CHECK(operation_kernel(r.product, alpha_operation()).index == 2);

  const ProductDualityResult same = product_duality_check(h, h);
  CHECK(same.d_order == 1);

  const OrientedHypermap k6(Permutation::from_cycles({{1, 2, 3, 4, 5, 6}}, 6),
                            Permutation(6));
  const ProductDualityResult r6 = product_duality_check(k6, h);
  CHECK(r6.d_order == 3);
  CHECK(r6.product.order() == 12);
  CHECK(operation_kernel(r6.product, alpha_operation()).index == 3);
  CHECK_FALSE(is_extreme(r6.product));

  const Permutation g3 = Permutation::from_cycles({{1, 2, 3}}, 3);
  CHECK_THROWS_AS(product_duality_check(OrientedHypermap(g3, g3), h),
                  PreconditionFailed);
  const OrientedHypermap k4(Permutation::from_cycles({{1, 2, 3, 4}}, 4), Permutation(4));
  CHECK_THROWS_AS(product_duality_check(k4, OrientedHypermap(g3, g3)),
                  PreconditionFailed);
}

TEST_CASE("full report assembly") {
  const DualityReport r = analyze(a5_example());
  CHECK(r.group_order == 60);
  CHECK(r.type.l == 5);
  CHECK(r.type.m == 3);
  CHECK(r.type.n == 5);
  CHECK(r.euler_characteristic == -16);
  CHECK(r.genus == 9);
  REQUIRE(r.operations.size() == 3);
  CHECK(r.operations.at("alpha").index == 60);
  CHECK(r.operations.at("alpha").extreme);
  CHECK(r.operations.at("beta").index == 60);
  CHECK(r.operations.at("mirror").index == 1);
  CHECK(r.operations.at("mirror").self_dual);
  CHECK(r.operations.at("mirror").kernel_structure.order == 1);

  const DualityReport r20 = analyze(order20_example());
  CHECK(r20.operations.at("alpha").index == 5);
  CHECK(r20.operations.at("alpha").coindex == 4);
  CHECK(r20.operations.at("beta").self_dual);

  AnalyzeOptions only_alpha;
  only_alpha.beta = false;
  only_alpha.mirror = false;
  const DualityReport ra = analyze(c6_pair(), only_alpha);
  CHECK(ra.operations.size() == 1);
  CHECK(ra.operations.count("alpha") == 1);
  CHECK(ra.operations.at("alpha").index == 2);
  CHECK(ra.operations.at("alpha").coindex == 3);
}
