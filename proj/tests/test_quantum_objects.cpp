#include <cmath>
#include <numbers>
#include <string>

#include "doctest.h"
#include "skewinfo/errors.hpp"
#include "skewinfo/quantum_objects.hpp"
#include "support.hpp"

using namespace skewinfo;
using testing::Rng;

namespace {

Error error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e;
  }
  FAIL("expected an exception");
  return Error(ErrorCode::ValidationError, "");
}

bool message_has(const Error& e, const std::string& needle) {
  return std::string(e.what()).find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("density matrix validation names the violated invariant") {
  const auto ok = ComplexMatrix::from_rows({{0.6, Complex(0.1, 0.2)}, {Complex(0.1, -0.2), 0.4}});
  CHECK(DensityMatrix::from_matrix(ok).dim() == 2);

  const auto trace = ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.4}});
  auto e = error_of([&] { DensityMatrix::from_matrix(trace); });
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(message_has(e, "trace"));

  const auto herm = ComplexMatrix::from_rows({{0.5, 0.3}, {0.0, 0.5}});
  e = error_of([&] { DensityMatrix::from_matrix(herm); });
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(message_has(e, "hermitian"));

  const auto neg = ComplexMatrix::from_rows({{1.2, 0.0}, {0.0, -0.2}});
  e = error_of([&] { DensityMatrix::from_matrix(neg); });
  CHECK(e.code() == ErrorCode::ValidationError);
  CHECK(message_has(e, "positivity"));
}

TEST_CASE("bloch qubit") {
  const auto rho = bloch_qubit(0.0, 0.0, 1.0);
  CHECK(std::abs(rho.matrix()(0, 0) - 1.0) < 1e-15);
  CHECK(rho.min_eigenvalue() == doctest::Approx(0.0).epsilon(1e-12));
  const auto mixed = bloch_qubit(std::sqrt(3.0) / 2, 0.0, 0.0);
  CHECK(mixed.clamped_eigenvalues()[0] == doctest::Approx((1 - std::sqrt(3.0) / 2) / 2).epsilon(1e-12));
  CHECK(error_of([] { bloch_qubit(1.0, 0.1, 0.0); }).code() == ErrorCode::BlochVectorTooLong);
}

TEST_CASE("Gisin state") {
  const auto rho = gisin_state(0.5, std::numbers::pi / 4);
  const auto ev = rho.clamped_eigenvalues();
  REQUIRE(ev.size() == 4);
  CHECK(ev[0] == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(ev[1] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ev[2] == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(ev[3] == doctest::Approx(0.5).epsilon(1e-12));

  // lambda = 1 is the pure state sin|01> - cos|10>.
  const double th = 0.7;
  const auto pure = gisin_state(1.0, th);
  CHECK(std::abs(pure.matrix()(1, 1) - std::sin(th) * std::sin(th)) < 1e-15);
  CHECK(std::abs(pure.matrix()(1, 2) + std::sin(th) * std::cos(th)) < 1e-15);
  CHECK(std::abs(pure.matrix()(0, 0)) < 1e-15);

  // lambda = 0 is the separable diagonal mixture.
  const auto sep = gisin_state(0.0, 1.0);
  CHECK(std::abs(sep.matrix()(0, 0) - 0.5) < 1e-15);
  CHECK(std::abs(sep.matrix()(3, 3) - 0.5) < 1e-15);

  CHECK(error_of([] { gisin_state(1.1, 0.0); }).code() == ErrorCode::ParameterOutOfRange);
  CHECK(error_of([] { gisin_state(0.5, -0.1); }).code() == ErrorCode::ParameterOutOfRange);
  CHECK(error_of([] { gisin_state(0.5, 7.0); }).code() == ErrorCode::ParameterOutOfRange);
}

TEST_CASE("Pauli operators") {
  const auto x = pauli(PauliAxis::x).matrix();
  const auto y = pauli(PauliAxis::y).matrix();
  const auto z = pauli(PauliAxis::z).matrix();
  CHECK(frobenius_distance(x * y, Complex(0, 1) * z) < 1e-15);
  const auto right = lifted_pauli(PauliAxis::y, TensorSide::right).matrix();
  CHECK(frobenius_distance(right, kron(ComplexMatrix::identity(2), y)) == 0.0);
  const auto left = lifted_pauli(PauliAxis::x, TensorSide::left).matrix();
  CHECK(frobenius_distance(left, kron(x, ComplexMatrix::identity(2))) == 0.0);
  CHECK(error_of([] { Observable(ComplexMatrix::from_rows({{0.0, 1.0}, {0.0, 0.0}})); }).code() ==
        ErrorCode::NotHermitian);
}

TEST_CASE("named channels") {
  for (double p : {0.0, 0.3, 0.7, 1.0}) {
    CHECK(bit_flip_channel(p).complete());
    CHECK(phase_flip_channel(p).complete());
    CHECK(amplitude_damping_channel(p).complete());
    CHECK(completeness_defect(bit_flip_channel(p).kraus()) < 1e-12);
  }
  const auto literal = amplitude_damping_channel(0.7, AmplitudeDampingForm::literal);
  // Literally diag(1, sqrt(1-p)) and sqrt(p)|1><1|: trace preserving, but a
  // dephasing rather than a decay.
  CHECK(literal.complete());
  CHECK(std::abs(literal.apply(ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}}))(1, 1) - 1.0) < 1e-15);
  CHECK(literal.name() != amplitude_damping_channel(0.7).name());

  // Amplitude damping sends |1><1| towards |0><0|.
  const auto one = ComplexMatrix::from_rows({{0.0, 0.0}, {0.0, 1.0}});
  const auto out = amplitude_damping_channel(0.7).apply(one);
  CHECK(std::abs(out(0, 0) - 0.7) < 1e-15);
  CHECK(std::abs(out(1, 1) - 0.3) < 1e-15);

  CHECK(error_of([] { bit_flip_channel(1.5); }).code() == ErrorCode::ParameterOutOfRange);
  const auto u = rotation_unitary(std::numbers::pi / 8);
  CHECK(frobenius_distance(u.adjoint() * u, ComplexMatrix::identity(2)) < 1e-15);
  CHECK(unitary_channel(u).kraus_count() == 1);
  CHECK(error_of([] { unitary_channel(ComplexMatrix::identity(2) * Complex(2.0)); }).code() ==
        ErrorCode::NotUnitary);
}

TEST_CASE("channel construction checks") {
  const std::vector<ComplexMatrix> bad = {ComplexMatrix::identity(2) * Complex(0.9)};
  CHECK(error_of([&] { QuantumChannel("bad", bad); }).code() == ErrorCode::CompletenessViolation);
  CHECK_FALSE(QuantumChannel("bad", bad, CompletenessCheck::skip).complete());
  CHECK(error_of([] { QuantumChannel("empty", {}); }).code() == ErrorCode::DimensionMismatch);
  const std::vector<ComplexMatrix> mixed = {ComplexMatrix::identity(2), ComplexMatrix(3)};
  CHECK(error_of([&] { QuantumChannel("mixed", mixed); }).code() == ErrorCode::DimensionMismatch);
}

TEST_CASE("random channels preserve trace and positivity") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t d = 2 + trial % 3;
    const auto ch = testing::random_channel(rng, d, 1 + trial % 4);
    const auto rho = testing::random_state(rng, d);
    const auto out = ch.apply(rho.matrix());
    CHECK(std::abs(out.trace() - 1.0) < 1e-12);
    CHECK_NOTHROW(DensityMatrix::from_matrix(out));
  }
}

TEST_CASE("pad_kraus") {
  const std::vector<QuantumChannel> list = {bit_flip_channel(0.3), unitary_channel(rotation_unitary(0.4)),
                                            amplitude_damping_channel(0.2)};
  const auto padded = pad_kraus(list);
  REQUIRE(padded.size() == 3);
  for (const auto& c : padded) CHECK(c.kraus_count() == 2);
  CHECK(padded[1].kraus()[1].is_zero());
  CHECK(frobenius_distance(padded[1].kraus()[0], list[1].kraus()[0]) == 0.0);
  CHECK(padded[1].complete());

  Rng rng(1);
  const std::vector<QuantumChannel> dims = {bit_flip_channel(0.3), testing::random_channel(rng, 3, 2)};
  CHECK(error_of([&] { pad_kraus(dims); }).code() == ErrorCode::DimensionMismatch);
}

TEST_CASE("partial trace") {
  Rng rng(4);
  const auto a = testing::random_state(rng, 2);
  const auto b = testing::random_state(rng, 3);
  const auto reduced = partial_trace_second(kron(a.matrix(), b.matrix()), 2, 3);
  CHECK(frobenius_distance(reduced, a.matrix()) < 1e-14);
  const auto g = gisin_state(0.4, 1.2);
  const auto r = partial_trace_second(g.matrix(), 2, 2);
  CHECK(std::abs(r.trace() - 1.0) < 1e-14);
}
