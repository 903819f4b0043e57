#include "apollo/apollonius.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace apollo {

const char* to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::Ok: return "ok";
    case SolveStatus::Imaginary: return "imaginary";
    case SolveStatus::NoSolutions: return "no_solutions";
    case SolveStatus::SubDimensional: return "subdimensional";
    case SolveStatus::USingular: return "u_singular";
    case SolveStatus::RankTooLow: return "rank_too_low";
    case SolveStatus::DegenerateNormal: return "degenerate_normal";
  }
  return "?";
}

const char* to_string(SpecialCase s) {
  switch (s) {
    case SpecialCase::Generic: return "generic";
    case SpecialCase::RpZero: return "rp_zero";
    case SpecialCase::PtildeUnit: return "gradient_unit";
    case SpecialCase::PtildeZero: return "gradient_zero";
    case SpecialCase::Imaginary: return "imaginary";
  }
  return "?";
}

const char* to_string(TangencyClass k) {
  switch (k) {
    case TangencyClass::Unclassified: return "unclassified";
    case TangencyClass::Positive: return "positive";
    case TangencyClass::SmallNegative: return "small_negative";
    case TangencyClass::LargeNegative: return "large_negative";
    case TangencyClass::ZeroRadius: return "zero_radius";
  }
  return "?";
}

const char* to_string(RootLabel r) {
  switch (r) {
    case RootLabel::Plus: return "plus";
    case RootLabel::Minus: return "minus";
    case RootLabel::Single: return "single";
  }
  return "?";
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::size_t largest_radius_index(const BallSet& set) {
  std::size_t ref = 0;
  for (std::size_t i = 1; i < set.size(); ++i)
    if (set[i].radius > set[ref].radius) ref = i;
  return ref;
}

SolveOutcome rank_deficient_outcome(const PowerSolution& ps) {
  SolveOutcome out;
  out.status = SolveStatus::SubDimensional;
  out.rankV = ps.rankV;
  return out;
}

void attach_roots(SolveOutcome& out, const QuadraticRoots& qr) {
  out.discriminant = qr.discriminant;
  switch (qr.kind) {
    case RootKind::ComplexPair:
      out.status = SolveStatus::Imaginary;
      out.special_case = SpecialCase::Imaginary;
      break;
    case RootKind::Degenerate:
      out.status = SolveStatus::NoSolutions;
      break;
    default:
      break;
  }
}

// Builds solutions for roots of the gradient quadratic: x = p + r*dir
// (dir is ptilde, or h*a_hat for the incrementation route). When at_p is
// set the centers collapse onto p exactly.
void emit_gradient_solutions(SolveOutcome& out, const QuadraticRoots& qr,
                             const std::vector<double>& p, const std::vector<double>& dir,
                             bool at_p) {
  auto make = [&](double r, RootLabel label) {
    ApolloniusSolution s;
    s.r = r;
    s.root = label;
    s.x = p;
    if (!at_p)
      for (std::size_t j = 0; j < p.size(); ++j) s.x[j] += r * dir[j];
    out.solutions.push_back(std::move(s));
  };
  if (qr.count == 2) {
    make(qr.r0, RootLabel::Plus);  // r0 >= r1
    make(qr.r1, RootLabel::Minus);
  } else if (qr.count == 1) {
    make(qr.r0, RootLabel::Single);
  }
}

// Shared core of Recipes 1 and the signed variant: quadratic
// (|pt|^2 - 1) r^2 - 2 (s_i r_i + v_i.pt) r + rp2 = 0, centers x = p + r*pt.
SolveOutcome solve_from_gradient(const BallSet& set, const std::vector<double>& p,
                                 const std::vector<double>& pt, double rp2,
                                 const std::vector<double>* signed_radii) {
  SolveOutcome out;
  const double scale = set.scale();
  const std::size_t ref = largest_radius_index(set);
  const double r_ref = signed_radii ? (*signed_radii)[ref] : set[ref].radius;

  std::vector<double> v_ref(set.dim());
  for (std::size_t j = 0; j < set.dim(); ++j) v_ref[j] = set[ref].center[j] - p[j];

  const double pt2 = dot(pt, pt);
  double a = pt2 - 1.0;
  const double b = -2.0 * (r_ref + dot(v_ref, pt));
  const double c = rp2;

  bool at_p = false;
  if (std::sqrt(pt2) <= 1e-12) {
    out.special_case = SpecialCase::PtildeZero;  // all radii equal: x sits at p
    at_p = true;
  } else if (std::fabs(pt2 - 1.0) <= 1e-12 * (1.0 + pt2)) {
    out.special_case = SpecialCase::PtildeUnit;  // common supporting hyperplane
    a = 0.0;                                     // genuinely linear
  } else if (std::fabs(rp2) <= 1e-14 * scale * scale) {
    out.special_case = SpecialCase::RpZero;  // all generators meet at a point
  }

  const QuadraticRoots qr = stable_quadratic(a, b, c);
  attach_roots(out, qr);
  emit_gradient_solutions(out, qr, p, pt, at_p);
  return out;
}

}  // namespace

SolveOutcome solve_recipe1(const BallSet& set, const Tolerances& tol) {
  const PowerSolution ps = power_vertex(set, tol);
  if (!ps.full_rank) return rank_deficient_outcome(ps);
  return solve_from_gradient(set, ps.p, ps.ptilde, ps.rp2, nullptr);
}

SolveOutcome solve_recipe2(const BallSet& set, const Tolerances& tol) {
  const PowerSolution ps = power_vertex(set, tol);
  if (!ps.full_rank) return rank_deficient_outcome(ps);
  const std::size_t d = set.dim();
  const double scale = set.scale();

  // power vertex of the unit-incremented copy
  std::vector<Ball> inc = set.balls();
  for (Ball& b : inc) b.radius += 1.0;
  const PowerSolution psi = power_vertex(unchecked_ball_set(std::move(inc), d), tol);
  if (!psi.full_rank) return rank_deficient_outcome(ps);

  const std::size_t ref = largest_radius_index(set);
  const double rp2 = ps.rp2;

  double sep2 = 0.0;
  std::vector<double> a_hat(d);
  for (std::size_t j = 0; j < d; ++j) {
    a_hat[j] = psi.p[j] - ps.p[j];
    sep2 += a_hat[j] * a_hat[j];
  }
  const double sep = std::sqrt(sep2);

  SolveOutcome out;
  if (sep <= 1e-12 * scale) {
    // equal radii: x = p, radii from the gradient-free quadratic
    out.special_case = SpecialCase::PtildeZero;
    const QuadraticRoots qr = stable_quadratic(-1.0, -2.0 * set[ref].radius, rp2);
    attach_roots(out, qr);
    emit_gradient_solutions(out, qr, ps.p, a_hat, /*at_p=*/true);
    return out;
  }
  for (double& v : a_hat) v /= sep;

  // pick the generator pair with the largest radius difference; ties prefer
  // the larger projection on the solution line
  std::size_t bi = 0, bk = 1;
  double best_rik = -1.0, best_proj = -1.0;
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t k = i + 1; k < set.size(); ++k) {
      const double rik = std::fabs(set[i].radius - set[k].radius);
      if (rik == 0.0) continue;
      std::vector<double> xik(d);
      for (std::size_t j = 0; j < d; ++j) xik[j] = set[i].center[j] - set[k].center[j];
      const double proj = std::fabs(dot(xik, a_hat));
      if (rik > best_rik || (rik == best_rik && proj > best_proj)) {
        best_rik = rik;
        best_proj = proj;
        bi = i;
        bk = k;
      }
    }
  if (best_rik < 0.0) {
    // every r_ik vanished yet p' != p within tolerance: treat as equal radii
    out.special_case = SpecialCase::PtildeZero;
    const QuadraticRoots qr = stable_quadratic(-1.0, -2.0 * set[ref].radius, rp2);
    attach_roots(out, qr);
    emit_gradient_solutions(out, qr, ps.p, a_hat, /*at_p=*/true);
    return out;
  }

  std::vector<double> xik(d);
  for (std::size_t j = 0; j < d; ++j) xik[j] = set[bi].center[j] - set[bk].center[j];
  const double h = -(set[bi].radius - set[bk].radius) / dot(xik, a_hat);

  std::vector<double> v_ref(d);
  for (std::size_t j = 0; j < d; ++j) v_ref[j] = set[ref].center[j] - ps.p[j];

  double a = h * h - 1.0;
  const double b = -2.0 * (h * dot(v_ref, a_hat) + set[ref].radius);
  if (std::fabs(a) <= 1e-12 * (1.0 + h * h)) {
    out.special_case = SpecialCase::PtildeUnit;
    a = 0.0;
  } else if (std::fabs(rp2) <= 1e-14 * scale * scale) {
    out.special_case = SpecialCase::RpZero;
  }

  const QuadraticRoots qr = stable_quadratic(a, b, rp2);
  attach_roots(out, qr);
  std::vector<double> dir(d);
  for (std::size_t j = 0; j < d; ++j) dir[j] = h * a_hat[j];
  emit_gradient_solutions(out, qr, ps.p, dir, /*at_p=*/false);
  return out;
}

SolveOutcome solve_recipe3(const BallSet& set, const Tolerances& tol) {
  const PowerSolution ps = power_vertex(set, tol);
  if (!ps.full_rank) return rank_deficient_outcome(ps);
  const std::size_t d = set.dim();
  const double scale = set.scale();

  // lifted difference vectors (x_i - x_{d+1}, r_i - r_{d+1}); the power
  // vertex shift cancels in differences
  std::vector<std::vector<double>> rows(d, std::vector<double>(d + 1));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) rows[i][j] = set[i].center[j] - set[d].center[j];
    rows[i][d] = set[i].radius - set[d].radius;
  }

  std::vector<double> normal = cofactor_normal(rows);
  double nn = std::sqrt(dot(normal, normal));
  SolveOutcome out;
  if (nn == 0.0) {
    out.status = SolveStatus::DegenerateNormal;
    return out;
  }
  for (double& v : normal) v /= nn;
  if (normal[d] < 0.0)
    for (double& v : normal) v = -v;  // sign(r) must track sign(sigma)

  const double nr = normal[d];
  const std::size_t ref = largest_radius_index(set);
  double alpha_dot = set[ref].radius * nr;
  for (std::size_t j = 0; j < d; ++j)
    alpha_dot += (set[ref].center[j] - ps.p[j]) * normal[j];

  double a = 1.0 - 2.0 * nr * nr;
  const double b = -2.0 * alpha_dot;
  const double c = ps.rp2;

  bool at_p = false;
  if (1.0 - nr <= 1e-12) {
    out.special_case = SpecialCase::PtildeZero;  // normal is the lifted axis: equal radii
    at_p = true;
  } else if (std::fabs(a) <= 1e-12 * (1.0 + 2.0 * nr * nr)) {
    out.special_case = SpecialCase::PtildeUnit;
    a = 0.0;
  } else if (std::fabs(c) <= 1e-14 * scale * scale) {
    out.special_case = SpecialCase::RpZero;
  }

  const QuadraticRoots qr = stable_quadratic(a, b, c);
  attach_roots(out, qr);

  auto make = [&](double sigma) {
    ApolloniusSolution s;
    s.r = sigma * nr;
    s.x = ps.p;
    if (!at_p)
      for (std::size_t j = 0; j < d; ++j) s.x[j] += sigma * normal[j];
    return s;
  };
  if (qr.count == 2) {
    ApolloniusSolution s0 = make(qr.r0);
    ApolloniusSolution s1 = make(qr.r1);
    // radius order tracks sigma order since normal[d] >= 0
    if (s1.r > s0.r) std::swap(s0, s1);
    s0.root = RootLabel::Plus;
    s1.root = RootLabel::Minus;
    out.solutions.push_back(std::move(s0));
    out.solutions.push_back(std::move(s1));
  } else if (qr.count == 1) {
    ApolloniusSolution s = make(qr.r0);
    s.root = RootLabel::Single;
    out.solutions.push_back(std::move(s));
  }
  return out;
}

SolveOutcome classify_roots(SolveOutcome outcome, const BallSet& set) {
  if (outcome.solutions.empty()) return outcome;
  double r_max = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i].radius < 0.0)
      throw ClassificationError("classify_roots requires non-negative radii; normalize first");
    r_max = std::max(r_max, set[i].radius);
  }
  for (ApolloniusSolution& s : outcome.solutions) {
    if (s.r > 0.0)
      s.klass = TangencyClass::Positive;
    else if (s.r == 0.0)
      s.klass = TangencyClass::ZeroRadius;
    else
      s.klass = (-s.r > r_max) ? TangencyClass::LargeNegative : TangencyClass::SmallNegative;
    s.diagram_relevant = s.klass != TangencyClass::LargeNegative;
  }
  if (outcome.solutions.size() == 2)
    outcome.pair_pattern = std::string(to_string(outcome.solutions[0].klass)) + "/" +
                           to_string(outcome.solutions[1].klass);
  return outcome;
}

SolveOutcome detect_twin(SolveOutcome outcome) {
  if (outcome.solutions.size() == 2 && outcome.solutions[0].diagram_relevant &&
      outcome.solutions[1].diagram_relevant &&
      outcome.solutions[0].klass != TangencyClass::Unclassified &&
      outcome.solutions[1].klass != TangencyClass::Unclassified) {
    outcome.solutions[0].twin_id = 0;
    outcome.solutions[1].twin_id = 0;
  } else {
    for (ApolloniusSolution& s : outcome.solutions) s.twin_id.reset();
  }
  return outcome;
}

namespace {

void check_signs(const BallSet& set, const SignSet& signs) {
  if (signs.size() != set.size())
    throw std::invalid_argument("sign set must have d+1 entries");
  for (int s : signs.signs)
    if (s != 1 && s != -1) throw std::invalid_argument("sign entries must be +1 or -1");
}

// V plus the shared column t; gradient columns appended by the caller.
void build_system(const BallSet& set, Matrix& v, std::vector<double>& t) {
  const std::size_t d = set.dim();
  const Ball& last = set[d];
  double last_pow = -last.radius * last.radius;
  for (double cj : last.center) last_pow += cj * cj;
  v = Matrix(d, d);
  t.resize(d);
  for (std::size_t i = 0; i < d; ++i) {
    double norm2 = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      v(i, j) = set[i].center[j] - last.center[j];
      norm2 += set[i].center[j] * set[i].center[j];
    }
    t[i] = 0.5 * ((norm2 - set[i].radius * set[i].radius) - last_pow);
  }
}

double rp2_from(const BallSet& set, const std::vector<double>& p) {
  const std::size_t ref = largest_radius_index(set);
  double d2 = 0.0;
  for (std::size_t j = 0; j < set.dim(); ++j) {
    const double e = set[ref].center[j] - p[j];
    d2 += e * e;
  }
  return d2 - set[ref].radius * set[ref].radius;
}

}  // namespace

SolveOutcome solve_signed(const BallSet& set, const SignSet& signs, const Tolerances& tol) {
  check_signs(set, signs);
  const std::size_t d = set.dim();

  Matrix v;
  std::vector<double> t;
  build_system(set, v, t);
  Matrix rhs(d, 2);
  const double s_last = signs[d] * set[d].radius;
  for (std::size_t i = 0; i < d; ++i) {
    rhs(i, 0) = t[i];
    rhs(i, 1) = -(signs[i] * set[i].radius - s_last);
  }
  auto x = solve_linear(v, rhs, tol.singular_rel);
  if (!x) {
    SolveOutcome out;
    out.status = SolveStatus::SubDimensional;
    out.rankV = rank(v, tol.singular_rel);
    return out;
  }
  std::vector<double> p(d), pt(d), sr(set.size());
  for (std::size_t j = 0; j < d; ++j) {
    p[j] = (*x)(j, 0);
    pt[j] = (*x)(j, 1);
  }
  for (std::size_t i = 0; i < set.size(); ++i) sr[i] = signs[i] * set[i].radius;
  return solve_from_gradient(set, p, pt, rp2_from(set, p), &sr);
}

std::vector<std::pair<SignSet, SolveOutcome>> solve_all_sign_sets(const BallSet& set,
                                                                  const Tolerances& tol) {
  const std::size_t d = set.dim();
  if (d > 10) throw std::invalid_argument("sign-set enumeration capped at d <= 10");
  const std::size_t n = set.size();
  const std::size_t count = std::size_t{1} << n;

  Matrix v;
  std::vector<double> t;
  build_system(set, v, t);

  // one factorization, one gradient column per sign set
  Matrix rhs(d, 1 + count);
  for (std::size_t i = 0; i < d; ++i) rhs(i, 0) = t[i];
  for (std::size_t mask = 0; mask < count; ++mask) {
    const double s_last = (mask >> d) & 1 ? -set[d].radius : set[d].radius;
    for (std::size_t i = 0; i < d; ++i) {
      const double s_i = (mask >> i) & 1 ? -set[i].radius : set[i].radius;
      rhs(i, 1 + mask) = -(s_i - s_last);
    }
  }
  auto x = solve_linear(v, rhs, tol.singular_rel);
  if (!x) {
    SolveOutcome out;
    out.status = SolveStatus::SubDimensional;
    out.rankV = rank(v, tol.singular_rel);
    return {{SignSet::all_plus(n), out}};
  }
  std::vector<double> p(d);
  for (std::size_t j = 0; j < d; ++j) p[j] = (*x)(j, 0);
  const double rp2 = rp2_from(set, p);
  const double tol_x = tol.dedupe_rel * set.scale();

  std::vector<std::pair<std::vector<double>, double>> seen;  // (center, |r|)
  std::vector<std::pair<SignSet, SolveOutcome>> result;
  for (std::size_t mask = 0; mask < count; ++mask) {
    SignSet signs;
    signs.signs.resize(n);
    std::vector<double> sr(n);
    for (std::size_t i = 0; i < n; ++i) {
      signs.signs[i] = (mask >> i) & 1 ? -1 : 1;
      sr[i] = signs.signs[i] * set[i].radius;
    }
    std::vector<double> pt(d);
    for (std::size_t j = 0; j < d; ++j) pt[j] = (*x)(j, 1 + mask);

    SolveOutcome out = solve_from_gradient(set, p, pt, rp2, &sr);
    std::vector<ApolloniusSolution> fresh;
    for (ApolloniusSolution& s : out.solutions) {
      bool dup = false;
      for (const auto& [cx, cr] : seen) {
        if (std::fabs(std::fabs(s.r) - cr) > tol_x) continue;
        double dist2 = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
          const double e = s.x[j] - cx[j];
          dist2 += e * e;
        }
        if (dist2 <= tol_x * tol_x) {
          dup = true;
          break;
        }
      }
      if (!dup) {
        seen.emplace_back(s.x, std::fabs(s.r));
        fresh.push_back(std::move(s));
      }
    }
    if (!fresh.empty()) {
      out.solutions = std::move(fresh);
      result.emplace_back(std::move(signs), std::move(out));
    }
  }
  return result;
}

}  // namespace apollo
