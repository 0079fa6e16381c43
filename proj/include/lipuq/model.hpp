#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lipuq/matrix.hpp"
#include "lipuq/space.hpp"

namespace lipuq {

// Scalar Lipschitz profile with profile(0) = 0. Complex arguments go through
// a real/imaginary split for the tanh family (complex tanh has poles) and
// plain complex evaluation for polynomials.
class Profile {
 public:
  enum class Kind { ScaledTanh, PinnedPoly };

  static Profile scaled_tanh(double a, double c);
  // coeffs[k] multiplies t^(k+1); the constant term is structurally zero.
  static Profile pinned_poly(std::vector<double> coeffs);

  Kind kind() const { return kind_; }
  double a() const { return a_; }
  double c() const { return c_; }
  const std::vector<double>& coeffs() const { return coeffs_; }

  Complex eval(Complex z) const;
  double eval_real(double t) const;
  // d(phi)/dt at a real point; used for the radial scaling near zero.
  double slope_at_zero() const;

  // Upper bound on the scalar Lipschitz constant over the disc |z| <= radius.
  double lipschitz_bound(double radius) const;
  // Upper bound for the induced radial map u -> phi(||u||) u / ||u||.
  double radial_lipschitz_bound(double radius) const;

  Profile scaled(double t) const;

  friend bool operator==(const Profile& x, const Profile& y) {
    return x.kind_ == y.kind_ && x.a_ == y.a_ && x.c_ == y.c_ && x.coeffs_ == y.coeffs_;
  }

 private:
  Kind kind_ = Kind::ScaledTanh;
  double a_ = 1.0, c_ = 1.0;
  std::vector<double> coeffs_;
};

// Catalog of Lipschitz maps with A(0) = 0. Every member fixes zero
// structurally, not by runtime correction.
class MapSpec {
 public:
  enum class Kind { Linear, Componentwise, Radial };

  static MapSpec linear(Matrix m);
  static MapSpec componentwise(Profile profile, int dim);
  static MapSpec radial(Profile profile, int dim);

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::Linear; }
  int dim() const { return dim_; }
  const Matrix& matrix() const;
  const Profile& profile() const;

  Vector apply(const Vector& u, const NormSpec& spec) const;

  // Declared Lipschitz bound on the ball of the given radius. Linear maps
  // with p outside {1,2,inf} have no closed form here; see lipnorm.
  double lipschitz_bound(double radius, const NormSpec& spec) const;

  MapSpec scaled(double t) const;
  MapSpec scaled(Complex t) const;  // Linear only

  friend bool operator==(const MapSpec& x, const MapSpec& y) {
    return x.kind_ == y.kind_ && x.dim_ == y.dim_ && x.matrix_ == y.matrix_ &&
           x.profile_ == y.profile_;
  }

 private:
  Kind kind_ = Kind::Linear;
  int dim_ = 0;
  Matrix matrix_;
  Profile profile_;
};

// Members of X^#: scalar Lipschitz functionals with f(0) = 0. A Linear spec
// is the dual pairing u -> scale * sum_i u_i conj(w_i); PostComposed applies
// a scalar profile to that pairing.
class FunctionalSpec {
 public:
  enum class Kind { Linear, PostComposed };

  static FunctionalSpec linear(Vector w);
  static FunctionalSpec post_composed(Vector w, Profile psi);

  Kind kind() const { return kind_; }
  bool is_linear() const { return kind_ == Kind::Linear; }
  int dim() const { return static_cast<int>(w_.size()); }
  const Vector& w() const { return w_; }
  const Profile& psi() const;
  Complex scale() const { return scale_; }
  void set_scale(Complex s) { scale_ = s; }

  Complex eval(const Vector& u) const;

  // Coefficient vector z with f(u) = sum_i u_i conj(z_i); Linear only.
  Vector linear_coefficients() const;

  // Rescale so that the result satisfies f(x) = 1. Throws NotNormalizable
  // when |f(x)| <= eps. Linear stays Linear.
  FunctionalSpec normalized_at(const Vector& x, double eps = 1e-9) const;

  FunctionalSpec negated() const;
  FunctionalSpec scaled_by(Complex t) const;

  double lipschitz_bound(double radius, const NormSpec& spec) const;

  friend bool operator==(const FunctionalSpec& x, const FunctionalSpec& y) {
    return x.kind_ == y.kind_ && x.w_ == y.w_ && x.scale_ == y.scale_ && x.psi_ == y.psi_;
  }

 private:
  Kind kind_ = Kind::Linear;
  Vector w_;
  Complex scale_{1.0, 0.0};
  Profile psi_;
};

// Norm-ball domain with an explicit sample cloud; 0 is always a member.
struct DomainSpec {
  double radius = 1.0;
  std::vector<Vector> cloud;  // cloud[0] is the zero vector

  // Ball membership with a small mixed tolerance.
  bool contains(const Vector& v, const NormSpec& spec) const;
  void validate(const NormSpec& spec) const;
};

enum class Mode { Hilbert, BanachLinear, BanachNonlinear };

std::string mode_name(Mode m);
Mode parse_mode(const std::string& name);

struct Instance {
  int dim = 2;
  NormSpec space = NormSpec::l2();
  DomainSpec M, N;
  MapSpec A, B;
  Vector x;
  FunctionalSpec f;

  // Throws when an invariant fails: f(x) = 1 within 1e-12, A(0) = B(0) = 0,
  // x in both clouds' balls, domains valid.
  void validate() const;
};

Vector eval_map(const MapSpec& a, const Vector& u, const NormSpec& spec);
Complex eval_functional(const FunctionalSpec& f, const Vector& u);
FunctionalSpec normalize_functional(const FunctionalSpec& f, const Vector& x, double eps = 1e-9);

struct GenConfig {
  Mode mode = Mode::Hilbert;
  int dim = 3;
  NormSpec p = NormSpec::l2();
  int cloud_size = 64;
};

// Deterministic function of (seed, cfg). Hilbert: gaussian Hermitian pair,
// unit gaussian state, f the pairing with x, p forced to 2. BanachLinear:
// gaussian matrices and a normalized linear functional. BanachNonlinear:
// catalog nonlinear maps/functionals on a fixed ball.
Instance generate_instance(std::uint64_t seed, const GenConfig& cfg);

// Replayable instance serialization (schema lipuq.instance.v1).
std::string instance_to_json(const Instance& inst);
Instance instance_from_json(const std::string& text);

}  // namespace lipuq
