#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "qpde/ansatz.hpp"
#include "qpde/hadamard.hpp"
#include "qpde/qnpu.hpp"

using namespace qpde;
using namespace qpde::test;

namespace {

/// Loads an arbitrary register state through exact rotations: used to probe
/// term circuits with known inputs. Only valid for test purposes.
Circuit state_loader(const std::vector<double>& amps) {
  const int n = static_cast<int>(std::bit_width(amps.size()) - 1);
  // binary-tree of controlled Ry rotations
  Circuit c(n);
  struct Node {
    int level;
    std::size_t prefix;
  };
  // amplitude of subtree = sqrt(sum of squares)
  auto subtree_norm = [&](int level, std::size_t prefix) {
    double s = 0.0;
    const std::size_t block = std::size_t{1} << (n - level);
    for (std::size_t i = prefix * block; i < (prefix + 1) * block; ++i) s += amps[i] * amps[i];
    return std::sqrt(s);
  };
  for (int level = 0; level < n; ++level) {
    const std::size_t prefixes = std::size_t{1} << level;
    for (std::size_t p = 0; p < prefixes; ++p) {
      const double parent = subtree_norm(level, p);
      if (parent < 1e-300) continue;
      const double left = subtree_norm(level + 1, 2 * p);
      double theta = 2.0 * std::acos(std::clamp(left / parent, -1.0, 1.0));
      // sign of the right branch handled by the leaf pass below
      const int target = n - 1 - level;  // most significant first
      GateOp op = GateOp::ry(theta, target);
      for (int b = 0; b < level; ++b) {
        // controls on the already-fixed higher bits; open controls via X-sandwich
        const int wire = n - 1 - b;
        if (((p >> (level - 1 - b)) & 1) == 0) {
          c.push(GateOp::x(wire));
          op.controls.push_back(wire);
        } else {
          op.controls.push_back(wire);
        }
      }
      c.push(op);
      for (int b = level - 1; b >= 0; --b) {
        const int wire = n - 1 - b;
        if (((p >> (level - 1 - b)) & 1) == 0) c.push(GateOp::x(wire));
      }
    }
  }
  // fix signs leaf by leaf with phase pi flips
  Statevector probe(n);
  probe.apply(c);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double got = std::real(probe[i]);
    if (amps[i] * got < 0.0) {
      GateOp flip = GateOp::phase(std::numbers::pi, 0);
      std::vector<int> ctrls;
      for (int b = 1; b < n; ++b)
        if (!((i >> b) & 1)) c.push(GateOp::x(b));
      if ((i & 1) == 0) c.push(GateOp::x(0));
      for (int b = 1; b < n; ++b) flip.controls.push_back(b);
      c.push(flip);
      if ((i & 1) == 0) c.push(GateOp::x(0));
      for (int b = 1; b < n; ++b)
        if (!((i >> b) & 1)) c.push(GateOp::x(b));
      probe.reset();
      probe.apply(c);
    }
  }
  return c;
}

Qnpu identity_qnpu(int n) {
  Qnpu q;
  q.n_data = n;
  q.body = Circuit(n);
  return q;
}

}  // namespace

TEST_CASE("state loader places requested real amplitudes") {
  std::mt19937_64 rng(2);
  for (int n : {2, 3}) {
    const auto target = random_real_state(n, rng);
    const auto c = state_loader(target);
    Statevector sv(n);
    sv.apply(c);
    for (std::size_t i = 0; i < target.size(); ++i)
      CHECK(std::abs(sv[i] - cplx{target[i]}) < 1e-10);
  }
}

TEST_CASE("identity unit returns unity for any trial state") {
  std::mt19937_64 rng(4);
  const AnsatzConfig cfg{2, 1};
  std::uniform_real_distribution<double> dist(0.0, 4 * std::numbers::pi);
  for (int trial = 0; trial < 5; ++trial) {
    TermAssembly a;
    a.ansatz = build_ansatz(cfg, {dist(rng), dist(rng), dist(rng)});
    a.qnpu = identity_qnpu(2);
    CHECK(evaluate_term(a) == Catch::Approx(1.0).margin(1e-12));
  }
}

TEST_CASE("shift unit expectations") {
  // uniform state is the shift eigenvector with eigenvalue one
  TermAssembly a;
  Circuit uniform(2);
  uniform.push(GateOp::h(0));
  uniform.push(GateOp::h(1));
  a.ansatz = uniform;
  a.qnpu = laplace_qnpu(2);
  CHECK(evaluate_term(a) == Catch::Approx(1.0).margin(1e-12));

  // a lone basis state has no overlap with its shift
  TermAssembly b;
  b.ansatz = Circuit(2);
  b.qnpu = laplace_qnpu(2);
  CHECK(evaluate_term(b) == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("term value equals the dense conjugated expectation") {
  std::mt19937_64 rng(8);
  for (int n : {2, 3, 4}) {
    const auto u = random_real_state(n, rng);
    const auto loader = state_loader(u);
    const auto t_deep = transform_tt(n, Variant::Deep);
    const auto tm = circuit_to_matrix(t_deep.body);

    for (bool neumann : {false, true}) {
      const auto qnpu = neumann ? boundary_n_qnpu(n, Variant::Deep)
                                : boundary_dn_qnpu(n, Variant::Deep);
      TermAssembly a;
      a.ansatz = loader;
      a.transform = t_deep;
      a.qnpu = qnpu;
      const double measured = evaluate_term(a);

      const auto conj = tm.dagger() * circuit_to_matrix(qnpu.body) * tm;
      double expected = 0.0;
      for (int r = 0; r < conj.n; ++r)
        for (int c = 0; c < conj.n; ++c) expected += u[r] * std::real(conj(r, c)) * u[c];
      CHECK(measured == Catch::Approx(expected).margin(1e-10));

      const int dim = 1 << n;
      const double boundary = neumann ? u[0] * u[0] + u[dim - 1] * u[dim - 1]
                                      : 2.0 * u[0] * u[dim - 1];
      CHECK(measured == Catch::Approx(boundary).margin(1e-10));
    }
  }
}

TEST_CASE("reversing and explicit-dagger layouts agree") {
  std::mt19937_64 rng(12);
  for (int n : {2, 3, 4}) {
    const auto u = random_real_state(n, rng);
    const auto loader = state_loader(u);
    for (bool neumann : {false, true}) {
      TermAssembly deep;
      deep.ansatz = loader;
      deep.transform = transform_tt(n, Variant::Deep);
      deep.qnpu = neumann ? boundary_n_qnpu(n, Variant::Deep)
                          : boundary_dn_qnpu(n, Variant::Deep);
      deep.layout = Layout::Reversing;

      TermAssembly shallow;
      shallow.ansatz = loader;
      shallow.transform = transform_tt(n, Variant::Shallow);
      shallow.qnpu = neumann ? boundary_n_qnpu(n, Variant::Shallow)
                             : boundary_dn_qnpu(n, Variant::Shallow);
      shallow.layout = Layout::ExplicitDagger;

      CHECK(evaluate_term(deep) == Catch::Approx(evaluate_term(shallow)).margin(1e-10));
    }
  }
}

TEST_CASE("potential unit measures pointwise weights") {
  std::mt19937_64 rng(21);
  for (int n : {2, 3}) {
    const auto u = random_real_state(n, rng);
    const auto p = random_real_state(n, rng);
    TermAssembly a;
    a.ansatz = state_loader(u);
    a.qnpu = potential_qnpu(n, state_loader(p));
    double expected = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) expected += u[k] * u[k] * p[k];
    CHECK(evaluate_term(a) == Catch::Approx(expected).margin(1e-10));
  }

  // lone-sample potential read out by the matching basis state
  TermAssembly a;
  a.ansatz = Circuit(2);
  std::vector<double> delta{1.0, 0.0, 0.0, 0.0};
  a.qnpu = potential_qnpu(2, state_loader(delta));
  CHECK(evaluate_term(a) == Catch::Approx(1.0).margin(1e-12));
}

TEST_CASE("source unit measures the real overlap with a controlled ansatz") {
  std::mt19937_64 rng(33);
  for (int n : {2, 3}) {
    const auto u = random_real_state(n, rng);
    const auto f = random_real_state(n, rng);
    TermAssembly a;
    a.ansatz = state_loader(u);
    a.controlled_ansatz = true;
    a.qnpu = source_qnpu(n, state_loader(f));
    double expected = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) expected += u[k] * f[k];
    CHECK(evaluate_term(a) == Catch::Approx(expected).margin(1e-10));
  }

  // self-overlap of a normalized state
  const std::vector<double> u{0.5, 0.5, 0.5, 0.5};
  TermAssembly self;
  self.ansatz = state_loader(u);
  self.controlled_ansatz = true;
  self.qnpu = source_qnpu(2, state_loader(u));
  CHECK(evaluate_term(self) == Catch::Approx(1.0).margin(1e-10));

  // orthogonal source gives zero overlap
  TermAssembly ortho;
  ortho.ansatz = state_loader({1.0, 0.0, 0.0, 0.0});
  ortho.controlled_ansatz = true;
  ortho.qnpu = source_qnpu(2, state_loader({0.0, 1.0, 0.0, 0.0}));
  CHECK(evaluate_term(ortho) == Catch::Approx(0.0).margin(1e-12));

  // one-sided overlap against the uniform source
  TermAssembly mixed;
  mixed.ansatz = state_loader({1.0, 0.0, 0.0, 0.0});
  mixed.controlled_ansatz = true;
  mixed.qnpu = source_qnpu(2, state_loader({0.5, 0.5, 0.5, 0.5}));
  CHECK(evaluate_term(mixed) == Catch::Approx(0.5).margin(1e-12));
}

TEST_CASE("width mismatches are rejected") {
  TermAssembly a;
  a.ansatz = Circuit(3);
  a.qnpu = identity_qnpu(2);
  CHECK_THROWS(evaluate_term(a));
}
