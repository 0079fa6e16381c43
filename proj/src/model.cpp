#include "lipuq/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "lipuq/json_writer.hpp"
#include "lipuq/rng.hpp"

namespace lipuq {

namespace {

// sup_x |d/dx (tanh(x)/x)| is ~0.3434 (attained near x = 0.92); 0.35 is a
// safe declared constant for the radial tanh bound.
constexpr double kRadialTanhSlopeBound = 0.35;

constexpr double kBallRelTol = 1e-9;
constexpr double kCloudRelTol = 1e-12;

}  // namespace

// ---------------------------------------------------------------------------
// Profile

Profile Profile::scaled_tanh(double a, double c) {
  Profile p;
  p.kind_ = Kind::ScaledTanh;
  p.a_ = a;
  p.c_ = c;
  return p;
}

Profile Profile::pinned_poly(std::vector<double> coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("pinned_poly: needs at least one coefficient");
  Profile p;
  p.kind_ = Kind::PinnedPoly;
  p.a_ = 0.0;
  p.c_ = 0.0;
  p.coeffs_ = std::move(coeffs);
  return p;
}

Complex Profile::eval(Complex z) const {
  if (kind_ == Kind::ScaledTanh) {
    return {a_ * std::tanh(c_ * z.real()), a_ * std::tanh(c_ * z.imag())};
  }
  // Horner with a structurally zero constant term: z * (c1 + z*(c2 + ...)).
  Complex acc{0.0, 0.0};
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + Complex{*it, 0.0};
  return acc * z;
}

double Profile::eval_real(double t) const {
  if (kind_ == Kind::ScaledTanh) return a_ * std::tanh(c_ * t);
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc * t;
}

double Profile::slope_at_zero() const {
  if (kind_ == Kind::ScaledTanh) return a_ * c_;
  return coeffs_.front();
}

double Profile::lipschitz_bound(double radius) const {
  if (kind_ == Kind::ScaledTanh) return std::abs(a_ * c_);
  double bound = 0.0;
  double rpow = 1.0;  // radius^(k-1) for the degree-k term
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    bound += static_cast<double>(k + 1) * std::abs(coeffs_[k]) * rpow;
    rpow *= radius;
  }
  return bound;
}

double Profile::radial_lipschitz_bound(double radius) const {
  if (kind_ == Kind::ScaledTanh) {
    return std::abs(a_) * std::abs(c_) * (1.0 + kRadialTanhSlopeBound * std::abs(c_) * radius);
  }
  // For s(t) = phi(t)/t: sup|s| + r * sup|s'| telescopes to sum_k k |c_k| r^(k-1).
  return lipschitz_bound(radius);
}

Profile Profile::scaled(double t) const {
  Profile p = *this;
  if (kind_ == Kind::ScaledTanh) {
    p.a_ = a_ * t;
  } else {
    for (double& c : p.coeffs_) c *= t;
  }
  return p;
}

// ---------------------------------------------------------------------------
// MapSpec

MapSpec MapSpec::linear(Matrix m) {
  MapSpec s;
  s.kind_ = Kind::Linear;
  s.dim_ = m.dim();
  s.matrix_ = std::move(m);
  return s;
}

MapSpec MapSpec::componentwise(Profile profile, int dim) {
  MapSpec s;
  s.kind_ = Kind::Componentwise;
  s.dim_ = dim;
  s.profile_ = std::move(profile);
  return s;
}

MapSpec MapSpec::radial(Profile profile, int dim) {
  MapSpec s;
  s.kind_ = Kind::Radial;
  s.dim_ = dim;
  s.profile_ = std::move(profile);
  return s;
}

const Matrix& MapSpec::matrix() const {
  if (kind_ != Kind::Linear) throw std::logic_error("MapSpec::matrix: not a linear map");
  return matrix_;
}

const Profile& MapSpec::profile() const {
  if (kind_ == Kind::Linear) throw std::logic_error("MapSpec::profile: linear map has none");
  return profile_;
}

Vector MapSpec::apply(const Vector& u, const NormSpec& spec) const {
  if (static_cast<int>(u.size()) != dim_) throw DimensionMismatch("MapSpec::apply: dimension mismatch");
  switch (kind_) {
    case Kind::Linear:
      return matrix_.apply(u);
    case Kind::Componentwise: {
      Vector r(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) r[i] = profile_.eval(u[i]);
      return r;
    }
    case Kind::Radial: {
      const double t = norm(u, spec);
      if (t == 0.0) return zero_vector(dim_);
      double s;
      if (profile_.kind() == Profile::Kind::PinnedPoly) {
        // phi(t)/t = sum_k c_k t^(k-1), no division needed.
        double acc = 0.0;
        for (auto it = profile_.coeffs().rbegin(); it != profile_.coeffs().rend(); ++it)
          acc = acc * t + *it;
        s = acc;
      } else {
        s = t < 1e-150 ? profile_.slope_at_zero() : profile_.eval_real(t) / t;
      }
      return lipuq::scaled(u, Complex{s, 0.0});
    }
  }
  throw std::logic_error("MapSpec::apply: unreachable");
}

double MapSpec::lipschitz_bound(double radius, const NormSpec& spec) const {
  switch (kind_) {
    case Kind::Linear: {
      // Riesz-Thorin interpolation: ||M||_p <= ||M||_1^(1/p) ||M||_inf^(1-1/p).
      double col = 0.0, row = 0.0;
      const int n = matrix_.dim();
      for (int j = 0; j < n; ++j) {
        double cs = 0.0;
        for (int i = 0; i < n; ++i) cs += std::abs(matrix_.at(i, j));
        col = std::max(col, cs);
      }
      for (int i = 0; i < n; ++i) {
        double rs = 0.0;
        for (int j = 0; j < n; ++j) rs += std::abs(matrix_.at(i, j));
        row = std::max(row, rs);
      }
      if (spec.is_inf()) return row;
      const double ip = 1.0 / spec.p();
      return std::pow(col, ip) * std::pow(row, 1.0 - ip);
    }
    case Kind::Componentwise:
      // Entrywise |u_i| <= ||u||_p for every p >= 1, and the map acts
      // diagonally, so the scalar bound carries over.
      return profile_.lipschitz_bound(radius);
    case Kind::Radial:
      return profile_.radial_lipschitz_bound(radius);
  }
  throw std::logic_error("MapSpec::lipschitz_bound: unreachable");
}

MapSpec MapSpec::scaled(double t) const {
  MapSpec s = *this;
  if (kind_ == Kind::Linear) {
    s.matrix_ = matrix_.scaled(Complex{t, 0.0});
  } else {
    s.profile_ = profile_.scaled(t);
  }
  return s;
}

MapSpec MapSpec::scaled(Complex t) const {
  if (kind_ != Kind::Linear) {
    throw std::invalid_argument("MapSpec::scaled(Complex): only linear maps take complex scales");
  }
  MapSpec s = *this;
  s.matrix_ = matrix_.scaled(t);
  return s;
}

// ---------------------------------------------------------------------------
// FunctionalSpec

FunctionalSpec FunctionalSpec::linear(Vector w) {
  FunctionalSpec f;
  f.kind_ = Kind::Linear;
  f.w_ = std::move(w);
  return f;
}

FunctionalSpec FunctionalSpec::post_composed(Vector w, Profile psi) {
  FunctionalSpec f;
  f.kind_ = Kind::PostComposed;
  f.w_ = std::move(w);
  f.psi_ = std::move(psi);
  return f;
}

const Profile& FunctionalSpec::psi() const {
  if (kind_ != Kind::PostComposed) throw std::logic_error("FunctionalSpec::psi: linear functional");
  return psi_;
}

Complex FunctionalSpec::eval(const Vector& u) const {
  if (u.size() != w_.size()) throw DimensionMismatch("FunctionalSpec::eval: dimension mismatch");
  Complex pairing{0.0, 0.0};
  for (std::size_t i = 0; i < u.size(); ++i) pairing += u[i] * std::conj(w_[i]);
  if (kind_ == Kind::Linear) return scale_ * pairing;
  return scale_ * psi_.eval(pairing);
}

Vector FunctionalSpec::linear_coefficients() const {
  if (kind_ != Kind::Linear) {
    throw std::logic_error("FunctionalSpec::linear_coefficients: not linear");
  }
  return lipuq::scaled(w_, std::conj(scale_));
}

FunctionalSpec FunctionalSpec::normalized_at(const Vector& x, double eps) const {
  const Complex v = eval(x);
  if (std::abs(v) <= eps) {
    throw NotNormalizable("normalize_functional: |f(x)| below threshold");
  }
  FunctionalSpec f = *this;
  f.scale_ = scale_ / v;
  return f;
}

FunctionalSpec FunctionalSpec::negated() const { return scaled_by(Complex{-1.0, 0.0}); }

FunctionalSpec FunctionalSpec::scaled_by(Complex t) const {
  FunctionalSpec f = *this;
  f.scale_ = scale_ * t;
  return f;
}

double FunctionalSpec::lipschitz_bound(double radius, const NormSpec& spec) const {
  const double wq = dual_norm(w_, spec);
  if (kind_ == Kind::Linear) return std::abs(scale_) * wq;
  // |pairing| <= radius * ||w||_q, so psi sees a disc of that radius.
  return std::abs(scale_) * psi_.lipschitz_bound(radius * wq) * wq;
}

// ---------------------------------------------------------------------------
// DomainSpec / Instance

bool DomainSpec::contains(const Vector& v, const NormSpec& spec) const {
  return norm(v, spec) <= radius * (1.0 + kBallRelTol) + kBallRelTol;
}

void DomainSpec::validate(const NormSpec& spec) const {
  if (!(radius > 0.0)) throw std::invalid_argument("DomainSpec: radius must be positive");
  if (cloud.empty()) throw std::invalid_argument("DomainSpec: cloud must contain the zero vector");
  if (norm(cloud.front(), spec) != 0.0) {
    throw std::invalid_argument("DomainSpec: cloud[0] must be the zero vector");
  }
  for (const Vector& c : cloud) {
    if (!all_finite(c)) throw std::invalid_argument("DomainSpec: non-finite cloud point");
    if (norm(c, spec) > radius * (1.0 + kCloudRelTol) + kCloudRelTol) {
      throw std::invalid_argument("DomainSpec: cloud point outside the ball");
    }
  }
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Hilbert: return "hilbert";
    case Mode::BanachLinear: return "banach-linear";
    case Mode::BanachNonlinear: return "banach-nonlinear";
  }
  throw std::logic_error("mode_name: unreachable");
}

Mode parse_mode(const std::string& name) {
  if (name == "hilbert") return Mode::Hilbert;
  if (name == "banach-linear" || name == "linear") return Mode::BanachLinear;
  if (name == "banach-nonlinear" || name == "nonlinear") return Mode::BanachNonlinear;
  throw std::invalid_argument("unknown mode: " + name);
}

void Instance::validate() const {
  if (dim < 1) throw std::invalid_argument("Instance: dim must be >= 1");
  if (static_cast<int>(x.size()) != dim || A.dim() != dim || B.dim() != dim ||
      f.dim() != dim) {
    throw DimensionMismatch("Instance: inconsistent dimensions");
  }
  if (!all_finite(x)) throw std::invalid_argument("Instance: non-finite x");
  M.validate(space);
  N.validate(space);
  if (!M.contains(x, space) || !N.contains(x, space)) {
    throw std::invalid_argument("Instance: x must lie in M and N");
  }
  const Vector zero = zero_vector(dim);
  if (norm(A.apply(zero, space), space) > 1e-15 || norm(B.apply(zero, space), space) > 1e-15) {
    throw std::invalid_argument("Instance: catalog map does not fix zero");
  }
  if (std::abs(f.eval(x) - Complex{1.0, 0.0}) > 1e-12) {
    throw std::invalid_argument("Instance: f(x) != 1");
  }
}

Vector eval_map(const MapSpec& a, const Vector& u, const NormSpec& spec) { return a.apply(u, spec); }

Complex eval_functional(const FunctionalSpec& f, const Vector& u) { return f.eval(u); }

FunctionalSpec normalize_functional(const FunctionalSpec& f, const Vector& x, double eps) {
  return f.normalized_at(x, eps);
}

// ---------------------------------------------------------------------------
// Generation

namespace {

Vector gaussian_vector(Rng& rng, int dim) {
  Vector v(static_cast<std::size_t>(dim));
  for (Complex& z : v) z = rng.complex_gaussian();
  return v;
}

Matrix gaussian_matrix(Rng& rng, int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m.at(i, j) = rng.complex_gaussian();
  return m;
}

Matrix hermitian_part(const Matrix& g) {
  return g.add(g.adjoint()).scaled(Complex{0.5, 0.0});
}

Vector normalized_to(const Vector& v, const NormSpec& spec, double target) {
  const double n = norm(v, spec);
  if (n < 1e-12) throw std::runtime_error("normalized_to: degenerate draw");
  return scaled(v, Complex{target / n, 0.0});
}

// Gaussian direction scaled into the ball; not exactly uniform in the lp
// ball, only a deterministic seeded fill.
Vector ball_point(Rng& rng, int dim, const NormSpec& spec, double radius) {
  for (int guard = 0; guard < 64; ++guard) {
    Vector dir = gaussian_vector(rng, dim);
    const double n = norm(dir, spec);
    if (n < 1e-12) continue;
    const double scale_to = radius * std::pow(rng.uniform(), 1.0 / (2.0 * dim));
    return scaled(dir, Complex{scale_to / n, 0.0});
  }
  throw std::runtime_error("ball_point: repeated degenerate draws");
}

std::vector<Vector> make_cloud(Rng& rng, int dim, const NormSpec& spec, double radius,
                               const Vector& x, int cloud_size) {
  std::vector<Vector> cloud;
  cloud.reserve(static_cast<std::size_t>(cloud_size));
  cloud.push_back(zero_vector(dim));
  cloud.push_back(x);
  for (int i = 2; i < cloud_size; ++i) cloud.push_back(ball_point(rng, dim, spec, radius));
  return cloud;
}

Profile random_profile(Rng& rng, bool tanh_family) {
  if (tanh_family) {
    const double a = rng.uniform(0.5, 1.5);
    const double c = rng.uniform(0.5, 2.0);
    return Profile::scaled_tanh(a, c);
  }
  const int deg = 2 + static_cast<int>(rng.below(2));
  std::vector<double> coeffs(static_cast<std::size_t>(deg));
  for (double& c : coeffs) c = rng.uniform(-0.6, 0.6);
  return Profile::pinned_poly(std::move(coeffs));
}

MapSpec random_nonlinear_map(Rng& rng, int dim) {
  switch (rng.below(4)) {
    case 0: return MapSpec::componentwise(random_profile(rng, true), dim);
    case 1: return MapSpec::componentwise(random_profile(rng, false), dim);
    case 2: return MapSpec::radial(random_profile(rng, true), dim);
    default: return MapSpec::radial(random_profile(rng, false), dim);
  }
}

// Degenerate |f(x)| draws are rejected and redrawn from sub-seeds rather than
// rescaled by huge factors.
constexpr double kGeneratorPairingFloor = 1e-2;
constexpr int kMaxFunctionalAttempts = 64;

FunctionalSpec draw_normalized_functional(std::uint64_t seed, const Vector& x,
                                          const NormSpec& spec, bool allow_nonlinear) {
  for (int attempt = 0; attempt < kMaxFunctionalAttempts; ++attempt) {
    Rng rng(derive_seed(seed, 0xF00D + static_cast<std::uint64_t>(attempt)));
    FunctionalSpec trial = [&] {
      if (!allow_nonlinear) return FunctionalSpec::linear(gaussian_vector(rng, static_cast<int>(x.size())));
      if (rng.below(2) == 0) {
        return FunctionalSpec::linear(gaussian_vector(rng, static_cast<int>(x.size())));
      }
      Vector w = normalized_to(gaussian_vector(rng, static_cast<int>(x.size())),
                               dual_exponent(spec), 1.0);
      Profile psi = rng.below(2) == 0
                        ? Profile::scaled_tanh(1.0, rng.uniform(0.5, 1.5))
                        : Profile::pinned_poly({1.0, rng.uniform(-0.3, 0.3)});
      return FunctionalSpec::post_composed(std::move(w), std::move(psi));
    }();
    if (std::abs(trial.eval(x)) < kGeneratorPairingFloor) continue;
    return trial.normalized_at(x);
  }
  throw NotNormalizable("generate_instance: no usable functional draw");
}

}  // namespace

Instance generate_instance(std::uint64_t seed, const GenConfig& cfg) {
  if (cfg.dim < 2) throw std::invalid_argument("generate_instance: dim must be >= 2");
  if (cfg.cloud_size < 2) throw std::invalid_argument("generate_instance: cloud_size must be >= 2");

  Instance inst;
  inst.dim = cfg.dim;
  inst.space = cfg.mode == Mode::Hilbert ? NormSpec::l2() : cfg.p;

  Rng rng(seed);
  switch (cfg.mode) {
    case Mode::Hilbert: {
      inst.A = MapSpec::linear(hermitian_part(gaussian_matrix(rng, cfg.dim)));
      inst.B = MapSpec::linear(hermitian_part(gaussian_matrix(rng, cfg.dim)));
      inst.x = normalized_to(gaussian_vector(rng, cfg.dim), inst.space, 1.0);
      inst.f = FunctionalSpec::linear(inst.x);
      break;
    }
    case Mode::BanachLinear: {
      inst.A = MapSpec::linear(gaussian_matrix(rng, cfg.dim));
      inst.B = MapSpec::linear(gaussian_matrix(rng, cfg.dim));
      inst.x = normalized_to(gaussian_vector(rng, cfg.dim), inst.space, 1.0);
      inst.f = draw_normalized_functional(seed, inst.x, inst.space, false);
      break;
    }
    case Mode::BanachNonlinear: {
      inst.A = random_nonlinear_map(rng, cfg.dim);
      inst.B = random_nonlinear_map(rng, cfg.dim);
      inst.x = normalized_to(gaussian_vector(rng, cfg.dim), inst.space, 0.5);
      inst.f = draw_normalized_functional(seed, inst.x, inst.space, true);
      break;
    }
  }

  if (cfg.mode == Mode::BanachNonlinear) {
    inst.M.radius = 2.0;
    inst.N.radius = 2.0;
  } else {
    // Everywhere-defined linear maps: size the balls so x, Bx, Ax and the
    // evaluation point y = Bx - f(Bx)x never escape.
    const Vector ax = inst.A.apply(inst.x, inst.space);
    const Vector bx = inst.B.apply(inst.x, inst.space);
    const Vector y = sub(bx, scaled(inst.x, inst.f.eval(bx)));
    inst.M.radius =
        1.02 * std::max({1.0, norm(inst.x, inst.space), norm(bx, inst.space), norm(y, inst.space)});
    inst.N.radius = 1.02 * std::max({1.0, norm(inst.x, inst.space), norm(ax, inst.space)});
  }
  inst.M.cloud = make_cloud(rng, cfg.dim, inst.space, inst.M.radius, inst.x, cfg.cloud_size);
  inst.N.cloud = make_cloud(rng, cfg.dim, inst.space, inst.N.radius, inst.x, cfg.cloud_size);

  inst.validate();
  return inst;
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

void write_profile(JsonWriter& w, const Profile& p) {
  w.begin_object();
  if (p.kind() == Profile::Kind::ScaledTanh) {
    w.key("type").value("scaled_tanh");
    w.key("a").value(p.a());
    w.key("c").value(p.c());
  } else {
    w.key("type").value("pinned_poly");
    w.key("coeffs").begin_array();
    for (double c : p.coeffs()) w.value(c);
    w.end_array();
  }
  w.end_object();
}

void write_map(JsonWriter& w, const MapSpec& m) {
  w.begin_object();
  switch (m.kind()) {
    case MapSpec::Kind::Linear: {
      w.key("kind").value("linear");
      w.key("matrix").begin_array();
      for (int i = 0; i < m.dim(); ++i) {
        w.begin_array();
        for (int j = 0; j < m.dim(); ++j) w.value(m.matrix().at(i, j));
        w.end_array();
      }
      w.end_array();
      break;
    }
    case MapSpec::Kind::Componentwise:
      w.key("kind").value("componentwise");
      w.key("dim").value(m.dim());
      w.key("profile");
      write_profile(w, m.profile());
      break;
    case MapSpec::Kind::Radial:
      w.key("kind").value("radial");
      w.key("dim").value(m.dim());
      w.key("profile");
      write_profile(w, m.profile());
      break;
  }
  w.end_object();
}

void write_functional(JsonWriter& w, const FunctionalSpec& f) {
  w.begin_object();
  w.key("kind").value(f.kind() == FunctionalSpec::Kind::Linear ? "linear" : "post_composed");
  w.key("w").value(f.w());
  w.key("scale").value(f.scale());
  if (f.kind() == FunctionalSpec::Kind::PostComposed) {
    w.key("psi");
    write_profile(w, f.psi());
  }
  w.end_object();
}

void write_domain(JsonWriter& w, const DomainSpec& d) {
  w.begin_object();
  w.key("radius").value(d.radius);
  w.key("cloud").begin_array();
  for (const Vector& c : d.cloud) w.value(c);
  w.end_array();
  w.end_object();
}

using nlohmann::json;

Complex parse_complex(const json& j) {
  if (!j.is_array() || j.size() != 2) throw std::runtime_error("instance JSON: bad complex value");
  return {j[0].get<double>(), j[1].get<double>()};
}

Vector parse_vector(const json& j) {
  Vector v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(parse_complex(e));
  return v;
}

Profile parse_profile(const json& j) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "scaled_tanh") {
    return Profile::scaled_tanh(j.at("a").get<double>(), j.at("c").get<double>());
  }
  if (type == "pinned_poly") {
    std::vector<double> coeffs;
    for (const auto& e : j.at("coeffs")) coeffs.push_back(e.get<double>());
    return Profile::pinned_poly(std::move(coeffs));
  }
  throw std::runtime_error("instance JSON: unknown profile type " + type);
}

MapSpec parse_map(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") {
    const auto& rows = j.at("matrix");
    const int n = static_cast<int>(rows.size());
    Matrix m(n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(rows[i].size()) != n) throw std::runtime_error("instance JSON: non-square matrix");
      for (int jj = 0; jj < n; ++jj) m.at(i, jj) = parse_complex(rows[i][jj]);
    }
    return MapSpec::linear(std::move(m));
  }
  const int dim = j.at("dim").get<int>();
  Profile profile = parse_profile(j.at("profile"));
  if (kind == "componentwise") return MapSpec::componentwise(std::move(profile), dim);
  if (kind == "radial") return MapSpec::radial(std::move(profile), dim);
  throw std::runtime_error("instance JSON: unknown map kind " + kind);
}

FunctionalSpec parse_functional(const json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  Vector w = parse_vector(j.at("w"));
  FunctionalSpec f = kind == "linear"
                         ? FunctionalSpec::linear(std::move(w))
                         : FunctionalSpec::post_composed(std::move(w), parse_profile(j.at("psi")));
  f.set_scale(parse_complex(j.at("scale")));
  return f;
}

DomainSpec parse_domain(const json& j) {
  DomainSpec d;
  d.radius = j.at("radius").get<double>();
  for (const auto& e : j.at("cloud")) d.cloud.push_back(parse_vector(e));
  return d;
}

}  // namespace

void write_norm_spec(JsonWriter& w, const NormSpec& spec) {
  if (spec.is_inf()) {
    w.value("inf");
  } else {
    w.value(spec.p());
  }
}

NormSpec parse_norm_spec(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return NormSpec::linf();
    throw std::runtime_error("instance JSON: bad p value");
  }
  return NormSpec::lp(j.get<double>());
}

void write_instance_body(JsonWriter& w, const Instance& inst) {
  w.begin_object();
  w.key("schema").value("lipuq.instance.v1");
  w.key("dim").value(inst.dim);
  w.key("p");
  write_norm_spec(w, inst.space);
  w.key("x").value(inst.x);
  w.key("f");
  write_functional(w, inst.f);
  w.key("A");
  write_map(w, inst.A);
  w.key("B");
  write_map(w, inst.B);
  w.key("M");
  write_domain(w, inst.M);
  w.key("N");
  write_domain(w, inst.N);
  w.end_object();
}

std::string instance_to_json(const Instance& inst) {
  JsonWriter w;
  write_instance_body(w, inst);
  return w.take();
}

Instance instance_from_parsed_json(const nlohmann::json& j) {
  Instance inst;
  inst.dim = j.at("dim").get<int>();
  inst.space = parse_norm_spec(j.at("p"));
  inst.x = parse_vector(j.at("x"));
  inst.f = parse_functional(j.at("f"));
  inst.A = parse_map(j.at("A"));
  inst.B = parse_map(j.at("B"));
  inst.M = parse_domain(j.at("M"));
  inst.N = parse_domain(j.at("N"));
  inst.validate();
  return inst;
}

Instance instance_from_json(const std::string& text) {
  return instance_from_parsed_json(json::parse(text));
}

}  // namespace lipuq
