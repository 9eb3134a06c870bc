#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "logquiver/geometry.hpp"
#include "logquiver/series.hpp"

namespace logquiver {

/// Conventions of the scattering engine, fixed by the forced small cases
/// (a single point on P2 gives 1, the two-arrow Kronecker class gives
/// -(q^{1/2} + q^{-1/2}), and the basic two-line example is positive).
struct Calibration {
  /// Incoming monomial for a blow-up on ray m is t_j z^{s m}.
  static constexpr int monomial_sign = -1;
  /// Incoming term carries q^{epsilon/2}.
  static constexpr int incoming_half_power = 0;
  /// Walls are crossed in order of increasing angle (+1) or decreasing angle (-1).
  static constexpr int loop_orientation = 1;
  /// Omega = extraction_sign(ell) * sum_c n_c q^c.
  static int extraction_sign(long ell) { return ell % 2 == 0 ? -1 : 1; }

  static nlohmann::json to_json();
};

enum class WallKind { Incoming, Outgoing };

/// One elementary factor (1 + q^{c_halves/2} t^a z^{k m_w}) raised to n.
struct DilogFactor {
  Exponent a;
  long k = 1;
  int c_halves = 0;
  long n = 0;
  friend bool operator==(const DilogFactor&, const DilogFactor&) = default;
};

struct DilogFactorization {
  Lattice direction;
  std::vector<DilogFactor> factors;
};

/// A line through the origin (incoming) or a half-line from it (outgoing).
///
/// The wall element is stored by its exponent data: for every (a, k) the
/// Laurent polynomial sum_c n_c q^c. Each elementary factor acts on the torus
/// as the quantum dilogarithm of q^c t^a z^{k m}, so crossing multiplies z^{m'}
/// by prod_{i=1}^{|p|} (1 + q^{c + sgn(p)(i - 1/2)} t^a z^{k m})^{sgn(p) n},
/// p = <k m, m'>; at q^{1/2} = 1 this is (1 + t^a z^{k m})^{n p}.
struct Wall {
  using Key = std::pair<Exponent, long>;  // (a, k)

  Lattice direction;  // primitive; monomials are positive multiples of it
  WallKind kind = WallKind::Outgoing;
  std::map<Key, HalfLaurent> exponents;

  DilogFactorization factorization() const;
  /// prod (1 + q^c t^a z^{k m})^n expanded in the given truncation.
  QuantumTorusElement function(const ContextPtr& ctx) const;
};

struct ScatteringDiagram {
  ContextPtr context;
  std::vector<Wall> walls;

  const Wall* outgoing(Lattice direction) const;
};

/// One incoming line per blow-up record of positive dimension, with variable
/// t_j truncated at exponent dim_j and total degree at most cap.
ScatteringDiagram initial_diagram(const ToricModel& model, int cap, bool quantum = true);

/// Diagram from explicit lines: each entry is (monomial direction, exponent
/// bound); line j carries 1 + t_j z^{m_j}. Used for the basic examples.
ScatteringDiagram lines_diagram(const std::vector<std::pair<Lattice, int>>& lines, int cap, bool quantum = true);

/// Image of x under the wall automorphism raised to sign = +-1.
QuantumTorusElement cross_wall(const QuantumTorusElement& x, const Wall& wall, int sign);

/// Image of z^m under the loop product around the origin.
QuantumTorusElement loop_image(const ScatteringDiagram& d, Lattice m, const ContextPtr& ctx);
/// True when the loop product fixes z^{(1,0)} and z^{(0,1)} modulo the truncation.
bool is_consistent(const ScatteringDiagram& d);

/// Adds outgoing rays order by order until the diagram is consistent.
/// Throws ScatteringError if some defect cannot be attributed to a ray.
ScatteringDiagram complete_diagram(ScatteringDiagram d);

/// Greedy normal form of a function 1 + sum c t^a z^{k m}; throws ScatteringError
/// when an exponent would be non-integral or a term is off the direction.
DilogFactorization dilog_factorize(const QuantumTorusElement& f, Lattice direction);
QuantumTorusElement expand_factorization(const DilogFactorization& f, const ContextPtr& ctx);

/// Substitutes q^{1/2} = 1 in every wall.
ScatteringDiagram classical_limit(const ScatteringDiagram& d);

/// Total degree of the target t-exponent; the smallest usable cap.
int required_order(const ToricModel& model);

/// initial_diagram + complete_diagram with cap = max(L, required_order(model)).
ScatteringDiagram scatter_model(const ToricModel& model, std::optional<int> cap = std::nullopt, bool quantum = true);

/// Refined invariant read off the outgoing ray of the completed diagram.
/// Returns 0 for classes with a negative dimension; throws ScatteringError
/// if the cap is below required_order.
HalfLaurent scat_omega(const ScatteringDiagram& completed, const ToricModel& model);

/// hbar_expand(scat_omega, ell, gmax); all zeros for classes with a negative dimension.
std::vector<Rational> gw_block(const ScatteringDiagram& completed, const ToricModel& model, int gmax);

/// {"walls": [{"dir", "kind", "factors": [[a, k, c_halves, n], ...]}], "cap"}
nlohmann::json diagram_to_json(const ScatteringDiagram& d);

}  // namespace logquiver
