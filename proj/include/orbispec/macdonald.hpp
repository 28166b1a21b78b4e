#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "orbispec/explicit_set.hpp"
#include "orbispec/hodge.hpp"
#include "orbispec/lambda_power.hpp"
#include "orbispec/orbifold.hpp"
#include "orbispec/series.hpp"

namespace orbispec {

// ---- reports ---------------------------------------------------------------

struct DegreeVerdict {
  std::size_t degree = 0;
  GroupRingElement lhs;
  GroupRingElement rhs;
  bool equal = false;
};

enum class Verdict { Equal, Mismatch, Unsupported };

struct ComparisonReport {
  std::string theorem;
  std::string fixture;
  std::size_t order = 0;
  std::vector<std::pair<std::string, std::string>> flags;
  std::vector<DegreeVerdict> rows;
  Verdict verdict = Verdict::Equal;
  std::string note;

  /// First degree whose sides differ, 0 if none.
  std::size_t first_mismatch() const;
  /// "# theorem=... fixture=..." header, one "degree, lhs, rhs, equal|MISMATCH"
  /// line per degree and a closing "# verdict: ..." line.
  std::string to_text() const;
};

/// Fills rows and verdict by comparing the two series degree by degree.
ComparisonReport compare_series(std::string theorem, std::string fixture, const TruncatedSeries& lhs,
                                const TruncatedSeries& rhs,
                                std::vector<std::pair<std::string, std::string>> flags = {});

ComparisonReport unsupported_report(std::string theorem, std::string fixture, std::size_t order, std::string reason,
                                    std::vector<std::pair<std::string, std::string>> flags = {});

// ---- symmetric powers ------------------------------------------------------

/// e(S^n V, phi^(n)) by enumerating graded-symmetric monomials in a basis of
/// H^*_c(V): even-degree basis vectors with any exponent, odd-degree ones at
/// most once, each monomial signed by (-1)^(total degree). Independent of the
/// power structure.
EquivariantHD sym_power_pair_oracle(std::span<const MixedHodgeEigenDatum> data, std::size_t n);

ComparisonReport verify_theorem1(const std::string& fixture, std::span<const MixedHodgeEigenDatum> data,
                                 std::size_t order);
/// The reduced identity: both sides of verify_theorem1 pushed to Z[Q/Z x Q].
ComparisonReport verify_corollary1(const std::string& fixture, std::span<const MixedHodgeEigenDatum> data,
                                   std::size_t order);

// ---- wreath powers -----------------------------------------------------------

/// Exponent of (uv) attached to T^{r1...rk}:
///   Literal  r1...rk * d / 2
///   Shifted  (r1...rk - 1) * d / 2
enum class ShiftConvention { Literal, Shifted };

std::string to_string(ShiftConvention s);
ShiftConvention parse_shift(std::string_view text);
Rational shift_exponent(ShiftConvention s, std::size_t level, const Rational& dim);

/// prod over (r1..rk), r1...rk <= N, of (1 - {(0, x, x)} T^{r1...rk})^{-(r2 r3^2 ... rk^{k-1}) e}
/// with x the shift exponent. Works in any ring whose first coordinate is the
/// eigenvalue label and the remaining coordinates are (uv)-type degrees, so the
/// same routine expands the pair and triple corollaries. k = 0 gives (1 - T)^{-e}.
TruncatedSeries rhs_expand_theorem2(const GroupRingElement& e, const Rational& dim, std::size_t k, std::size_t order,
                                    ShiftConvention shift, PowerMode mode);

/// e^(k) of (X^n, G wr S_n, phi^(n)) by materializing the wreath action,
/// fixed sets, centralizers and quotient eigenvalues.
EquivariantHD wreath_lhs_explicit(const ExplicitGSet& x, std::size_t n, std::size_t k);

/// e^(1) of (V^n, G wr S_n, phi^(n)) for a triple of pure dimension d known
/// only through its strata. A wreath class is a multiplicity m_{[h],r} of
/// r-cycles with cycle product in [h]; its fixed locus modulo centralizer is
/// prod S^{m}(V^<h>_beta / C(h)) with age beta + d(r-1)/2 per cycle and
/// phi-hat acting factorwise. Limited to n <= 3.
EquivariantHD wreath_lhs_k1_positive_d(const TripleModel& model, std::size_t node, std::size_t n);

struct ExplicitFixture {
  std::string name;
  ExplicitGSet set;
};

struct NodeFixture {
  std::string name;
  std::shared_ptr<const TripleModel> model;
  std::size_t node = 0;
};

using Theorem2Fixture = std::variant<ExplicitFixture, NodeFixture>;

const std::string& fixture_name(const Theorem2Fixture& f);

/// How the exponent shift is chosen for a theorem 2 run.
enum class ShiftChoice { Literal, Shifted, Audit };

std::string to_string(ShiftChoice s);
ShiftChoice parse_shift_choice(std::string_view text);

/// Theorem 2 and both corollary forms, in that order.
std::vector<ComparisonReport> verify_theorem2(const Theorem2Fixture& fixture, std::size_t k, std::size_t n_max,
                                              ShiftChoice shift, PowerMode mode);

struct AuditResult {
  std::string fixture;
  std::size_t k = 0;
  Rational dim;
  EquivariantHD lhs;          // e^(k) of the degree-1 wreath power, i.e. of the triple itself
  EquivariantHD rhs_literal;  // T^1 coefficient under each convention
  EquivariantHD rhs_shifted;
  bool literal_ok = false;
  bool shifted_ok = false;
  bool supported = true;
  std::string note;

  /// literal, shifted, both or none
  std::string winner() const;
  std::string to_text() const;
};

AuditResult normalization_audit(const Theorem2Fixture& fixture, std::size_t k);

}  // namespace orbispec
