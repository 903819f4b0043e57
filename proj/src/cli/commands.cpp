#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "apollo/exactpred.hpp"
#include "apollo/oracle.hpp"
#include "apollo/subdim.hpp"
#include "bench.hpp"
#include "io.hpp"

namespace apollo::cli {

namespace {

Tolerances make_tolerances(const std::optional<double>& flag) {
  Tolerances tol;
  if (flag) {
    tol.residual_rel = *flag;
    tol.dedupe_rel = *flag;
  }
  return tol;
}

BallSet to_ball_set(const GeneratorFile& g) {
  std::vector<Ball> balls;
  balls.reserve(g.balls.size());
  for (const GeneratorEntry& e : g.balls) balls.emplace_back(e.center, e.radius);
  return validate_ball_set(std::move(balls), g.dimension);
}

SignSet parse_signs(const std::string& text, std::size_t want) {
  SignSet s;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t comma = text.find(',', pos);
    std::string tok = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok == "+" || tok == "+1" || tok == "1")
      s.signs.push_back(1);
    else if (tok == "-" || tok == "-1")
      s.signs.push_back(-1);
    else
      throw ValidationError(ValidationCode::DimensionMismatch, "bad sign token '" + tok + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (s.size() != want)
    throw ValidationError(ValidationCode::WrongCount,
                          "expected " + std::to_string(want) + " signs, got " +
                              std::to_string(s.size()));
  return s;
}

std::string json_vector(const std::vector<double>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt17(v[i]);
  }
  return out + "]";
}

// One solution object; residual computed against the caller-chosen frame.
std::string json_solution(const ApolloniusSolution& s, double residual, int indent) {
  const std::string pad(indent, ' ');
  std::string out = pad + "{\n";
  out += pad + "  \"root\": \"" + to_string(s.root) + "\",\n";
  out += pad + "  \"center\": " + json_vector(s.x) + ",\n";
  out += pad + "  \"radius\": " + fmt17(s.r) + ",\n";
  out += pad + "  \"class\": \"" + to_string(s.klass) + "\",\n";
  out += pad + "  \"diagram_relevant\": " + (s.diagram_relevant ? "true" : "false") + ",\n";
  out += pad + "  \"twin_id\": " + (s.twin_id ? std::to_string(*s.twin_id) : "null") + ",\n";
  out += pad + "  \"residual\": " + fmt17(residual) + "\n";
  return out + pad + "}";
}

// Solves one tuple: normalize radii so the root classification applies,
// solve, classify, then map radii back to the caller's frame.
struct TupleResult {
  SolveOutcome outcome;     // radii in the original frame
  double shift = 0.0;
  std::string recipe_used;  // "1".."4"
};

TupleResult solve_tuple(const BallSet& set, const std::string& recipe, const Tolerances& tol) {
  TupleResult res;
  const RadiusShift norm = normalize_radii(set);
  res.shift = norm.shift;

  SolveOutcome out;
  if (recipe == "1") {
    out = solve_recipe1(norm.set, tol);
    res.recipe_used = "1";
  } else if (recipe == "2") {
    out = solve_recipe2(norm.set, tol);
    res.recipe_used = "2";
  } else if (recipe == "3") {
    out = solve_recipe3(norm.set, tol);
    res.recipe_used = "3";
  } else {
    out = dispatch_solve(norm.set, tol);
    res.recipe_used = out.subdimensional ? "4" : "1";
  }
  if (out.status == SolveStatus::SubDimensional && recipe != "auto") {
    // explicit recipe on a singular set: fall through to the rank d-1 solver
    out = solve_subdimensional(norm.set, tol);
    res.recipe_used = "4";
  }
  if (out.ok() && !out.solutions.empty()) {
    out = detect_twin(classify_roots(std::move(out), norm.set));
    for (ApolloniusSolution& s : out.solutions) s.r += res.shift;  // back to input frame
  }
  res.outcome = std::move(out);
  return res;
}

}  // namespace

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const GeneratorFile g = load_generators(opt.input_path);
    const BallSet set = to_ball_set(g);
    const Tolerances tol = make_tolerances(opt.tolerance);
    const double scale = set.scale();

    auto residual_for = [&](const ApolloniusSolution& s, const SignSet* signs) {
      return signs ? oracle::tangency_residual(set, s, *signs).max_abs
                   : oracle::tangency_residual(set, s).max_abs;
    };

    std::string body;
    body += "{\n";
    body += "  \"dimension\": " + std::to_string(set.dim()) + ",\n";

    if (opt.all_signs) {
      const auto all = solve_all_sign_sets(set, tol);
      std::size_t distinct = 0;
      for (const auto& [signs, so] : all) distinct += so.solutions.size();
      body += "  \"mode\": \"all_signs\",\n";
      body += "  \"distinct_solutions\": " + std::to_string(distinct) + ",\n";
      body += "  \"sign_sets\": [\n";
      for (std::size_t k = 0; k < all.size(); ++k) {
        const auto& [signs, so] = all[k];
        body += "    {\n      \"signs\": [";
        for (std::size_t i = 0; i < signs.size(); ++i)
          body += std::string(i ? ", " : "") + std::to_string(signs[i]);
        body += "],\n";
        body += "      \"status\": \"" + std::string(to_string(so.status)) + "\",\n";
        body += "      \"solutions\": [\n";
        for (std::size_t i = 0; i < so.solutions.size(); ++i) {
          body += json_solution(so.solutions[i], residual_for(so.solutions[i], &signs), 8);
          body += i + 1 < so.solutions.size() ? ",\n" : "\n";
        }
        body += "      ]\n    }";
        body += k + 1 < all.size() ? ",\n" : "\n";
      }
      body += "  ]\n}";
      out << body << "\n";
      return kExitOk;
    }

    if (opt.signs) {
      const SignSet signs = parse_signs(*opt.signs, set.size());
      const SolveOutcome so = solve_signed(set, signs, tol);
      body += "  \"signs\": [";
      for (std::size_t i = 0; i < signs.size(); ++i)
        body += std::string(i ? ", " : "") + std::to_string(signs[i]);
      body += "],\n";
      body += "  \"status\": \"" + std::string(to_string(so.status)) + "\",\n";
      body += "  \"special_case\": \"" + std::string(to_string(so.special_case)) + "\",\n";
      body += "  \"discriminant\": " + fmt17(so.discriminant) + ",\n";
      body += "  \"solutions\": [\n";
      for (std::size_t i = 0; i < so.solutions.size(); ++i) {
        body += json_solution(so.solutions[i], residual_for(so.solutions[i], &signs), 4);
        body += i + 1 < so.solutions.size() ? ",\n" : "\n";
      }
      body += "  ]\n}";
      out << body << "\n";
      return kExitOk;
    }

    const TupleResult res = solve_tuple(set, opt.recipe, tol);
    const SolveOutcome& so = res.outcome;
    body += "  \"recipe\": \"" + res.recipe_used + "\",\n";
    body += "  \"status\": \"" + std::string(to_string(so.status)) + "\",\n";
    body += "  \"subdimensional\": " + std::string(so.subdimensional ? "true" : "false") + ",\n";
    body += "  \"special_case\": \"" + std::string(to_string(so.special_case)) + "\",\n";
    body += "  \"discriminant\": " + fmt17(so.discriminant) + ",\n";
    if (so.rankV >= 0) body += "  \"rank\": " + std::to_string(so.rankV) + ",\n";
    if (!so.pair_pattern.empty())
      body += "  \"pair_pattern\": \"" + so.pair_pattern + "\",\n";
    body += "  \"radius_shift\": " + fmt17(res.shift) + ",\n";
    body += "  \"scale\": " + fmt17(scale) + ",\n";
    body += "  \"solutions\": [\n";
    for (std::size_t i = 0; i < so.solutions.size(); ++i) {
      body += json_solution(so.solutions[i], residual_for(so.solutions[i], nullptr), 4);
      body += i + 1 < so.solutions.size() ? ",\n" : "\n";
    }
    body += "  ]\n}";
    out << body << "\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

namespace {

struct VertexRecord {
  std::vector<std::size_t> subset;
  std::vector<std::string> ids;
  RootLabel root = RootLabel::Single;
  std::vector<double> center;
  double radius = 0.0;
  TangencyClass klass = TangencyClass::Unclassified;
  bool twin_candidate = false;
  std::optional<std::uint32_t> twin_id;
  double residual = 0.0;
};

unsigned worker_count() {
  if (const char* env = std::getenv("APOLLO_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

std::uint64_t binomial_guarded(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  std::uint64_t c = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (c > cap) return cap + 1;  // saturate
    c = c * (n - i) / (i + 1);
  }
  return c;
}

std::vector<exact::IntBall> integerize(const std::vector<const GeneratorEntry*>& entries,
                                       int scale_exponent) {
  const double mult = std::pow(10.0, scale_exponent);
  std::vector<exact::IntBall> out;
  out.reserve(entries.size());
  for (const GeneratorEntry* e : entries) {
    exact::IntBall b;
    for (double c : e->center) {
      const double scaled = c * mult;
      const double rounded = std::nearbyint(scaled);
      if (std::fabs(scaled - rounded) > 1e-6 * std::max(1.0, std::fabs(scaled)))
        throw ValidationError(ValidationCode::NonFinite,
                              "coordinate of '" + e->id + "' is not integral at scale 10^" +
                                  std::to_string(scale_exponent));
      b.center.push_back(exact::BigInt(static_cast<long long>(rounded)));
    }
    const double scaled = e->radius * mult;
    const double rounded = std::nearbyint(scaled);
    if (std::fabs(scaled - rounded) > 1e-6 * std::max(1.0, std::fabs(scaled)))
      throw ValidationError(ValidationCode::NonFinite,
                            "radius of '" + e->id + "' is not integral at scale 10^" +
                                std::to_string(scale_exponent));
    b.radius = exact::BigInt(static_cast<long long>(rounded));
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

int cmd_vertices(const VerticesOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const GeneratorFile g = load_generators(opt.input_path);
    const std::size_t d = g.dimension;
    const std::size_t n = g.balls.size();
    const std::size_t tuple = d + 1;
    if (n < tuple)
      throw ValidationError(ValidationCode::WrongCount,
                            "need at least d+1 balls, got " + std::to_string(n));
    const Tolerances tol = make_tolerances(opt.tolerance);

    std::optional<int> scale_exp = opt.scale_exponent ? opt.scale_exponent : g.scale_exponent;
    if (opt.exact && !scale_exp)
      throw ValidationError(ValidationCode::NonFinite,
                            "--exact needs a scale exponent (file field or flag)");

    if (binomial_guarded(n, tuple, opt.max_combinations) > opt.max_combinations) {
      err << "guard: C(" << n << ", " << tuple << ") exceeds --max-combinations ("
          << opt.max_combinations << ")\n";
      return kExitGuard;
    }

    // lexicographic (d+1)-subsets, optionally pruned by pairwise center distance
    std::vector<std::vector<std::size_t>> subsets;
    {
      std::vector<std::size_t> idx(tuple);
      for (std::size_t i = 0; i < tuple; ++i) idx[i] = i;
      auto pair_ok = [&](const std::vector<std::size_t>& s) {
        if (!opt.prune_radius) return true;
        const double lim = *opt.prune_radius;
        for (std::size_t a = 0; a < s.size(); ++a)
          for (std::size_t b = a + 1; b < s.size(); ++b) {
            double d2 = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
              const double e = g.balls[s[a]].center[j] - g.balls[s[b]].center[j];
              d2 += e * e;
            }
            if (d2 > lim * lim) return false;
          }
        return true;
      };
      for (;;) {
        if (pair_ok(idx)) subsets.push_back(idx);
        bool advanced = false;
        std::size_t i = tuple;
        while (i-- > 0) {
          if (idx[i] != i + n - tuple) {
            ++idx[i];
            for (std::size_t j = i + 1; j < tuple; ++j) idx[j] = idx[j - 1] + 1;
            advanced = true;
            break;
          }
        }
        if (!advanced) break;
      }
    }

    std::vector<exact::IntBall> all_int;
    if (opt.exact) {
      std::vector<const GeneratorEntry*> ptrs;
      for (const GeneratorEntry& e : g.balls) ptrs.push_back(&e);
      all_int = integerize(ptrs, *scale_exp);
    }

    // one result slot per subset keeps the merge deterministic under any
    // scheduling
    std::vector<std::vector<VertexRecord>> slots(subsets.size());
    std::atomic<std::size_t> next{0};

    auto work = [&]() {
      for (;;) {
        const std::size_t si = next.fetch_add(1);
        if (si >= subsets.size()) return;
        const std::vector<std::size_t>& sub = subsets[si];

        std::vector<Ball> balls;
        balls.reserve(tuple);
        for (std::size_t bi : sub) balls.emplace_back(g.balls[bi].center, g.balls[bi].radius);
        std::optional<BallSet> maybe_set;
        try {
          maybe_set = validate_ball_set(std::move(balls), d);
        } catch (const ValidationError&) {
          continue;  // concentric pair inside this subset: no vertex problem
        }
        const BallSet& set = *maybe_set;

        std::vector<exact::IntBall> sub_int;
        if (opt.exact)
          for (std::size_t bi : sub) sub_int.push_back(all_int[bi]);

        TupleResult res = [&] {
          if (!opt.exact) return solve_tuple(set, "auto", tol);
          // exact dispatch: |V| = 0 decides the closed form
          std::vector<std::vector<exact::BigInt>> v(d, std::vector<exact::BigInt>(d));
          for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
              v[i][j] = sub_int[i].center[j] - sub_int[d].center[j];
          const int ds = exact::det_sign(v);
          TupleResult r2;
          const RadiusShift norm = normalize_radii(set);
          r2.shift = norm.shift;
          SolveOutcome o =
              ds == 0 ? solve_subdimensional(norm.set, tol) : solve_recipe1(norm.set, tol);
          if (o.ok() && !o.solutions.empty()) {
            o = detect_twin(classify_roots(std::move(o), norm.set));
            for (ApolloniusSolution& s : o.solutions) s.r += r2.shift;
          }
          r2.recipe_used = ds == 0 ? "4" : "1";
          r2.outcome = std::move(o);
          return r2;
        }();
        if (!res.outcome.ok()) continue;

        for (const ApolloniusSolution& sol : res.outcome.solutions) {
          if (!sol.diagram_relevant) continue;
          if (opt.min_radius && sol.r < *opt.min_radius) continue;
          const double resid = oracle::tangency_residual(set, sol).max_abs;
          if (resid > tol.residual_rel * set.scale()) continue;

          // conflict test against every non-member generator
          bool conflict = false;
          for (std::size_t qi = 0; qi < n && !conflict; ++qi) {
            if (std::find(sub.begin(), sub.end(), qi) != sub.end()) continue;
            if (opt.exact) {
              try {
                if (exact::radius_sum_sign(sub_int, sol.root, all_int[qi]) > 0 &&
                    exact::incircle(sub_int, sol.root, all_int[qi]))
                  conflict = true;
              } catch (const exact::ExactError&) {
                conflict = true;  // exact side disagrees the root exists: drop
              }
            } else {
              double dist2 = 0.0;
              for (std::size_t j = 0; j < d; ++j) {
                const double e = g.balls[qi].center[j] - sol.x[j];
                dist2 += e * e;
              }
              const double rsum = g.balls[qi].radius + sol.r;
              if (rsum > 0.0 && dist2 < rsum * rsum) conflict = true;
            }
          }
          if (conflict) continue;

          VertexRecord rec;
          rec.subset = sub;
          for (std::size_t bi : sub) rec.ids.push_back(g.balls[bi].id);
          rec.root = sol.root;
          rec.center = sol.x;
          rec.radius = sol.r;
          rec.klass = sol.klass;
          rec.twin_candidate = sol.twin_id.has_value();
          rec.residual = resid;
          slots[si].push_back(std::move(rec));
        }
      }
    };

    {
      const unsigned nthreads = std::min<std::size_t>(worker_count(), subsets.size() + 1);
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < nthreads; ++t) pool.emplace_back(work);
      work();
      for (std::thread& t : pool) t.join();
    }

    std::vector<VertexRecord> records;
    std::uint32_t twin_counter = 0;
    for (std::vector<VertexRecord>& slot : slots) {
      if (slot.size() == 2 && slot[0].twin_candidate && slot[1].twin_candidate) {
        slot[0].twin_id = twin_counter;
        slot[1].twin_id = twin_counter;
        ++twin_counter;
      }
      for (VertexRecord& r : slot) records.push_back(std::move(r));
    }

    if (opt.format == "csv") {
      out << "generators,root,";
      for (std::size_t j = 0; j < d; ++j) out << "x" << (j + 1) << ",";
      out << "r,class,twin_id,residual\n";
      for (const VertexRecord& r : records) {
        std::string ids;
        for (std::size_t i = 0; i < r.ids.size(); ++i) ids += (i ? "|" : "") + r.ids[i];
        out << ids << "," << to_string(r.root) << ",";
        for (std::size_t j = 0; j < d; ++j) out << fmt17(r.center[j]) << ",";
        out << fmt17(r.radius) << "," << to_string(r.klass) << ","
            << (r.twin_id ? std::to_string(*r.twin_id) : "") << "," << fmt17(r.residual)
            << "\n";
      }
    } else {
      out << "{\n  \"dimension\": " << d << ",\n  \"count\": " << records.size()
          << ",\n  \"vertices\": [\n";
      for (std::size_t i = 0; i < records.size(); ++i) {
        const VertexRecord& r = records[i];
        out << "    {\n      \"generator_ids\": [";
        for (std::size_t k = 0; k < r.ids.size(); ++k)
          out << (k ? ", " : "") << '"' << json_escape(r.ids[k]) << '"';
        out << "],\n";
        out << "      \"root\": \"" << to_string(r.root) << "\",\n";
        out << "      \"center\": " << json_vector(r.center) << ",\n";
        out << "      \"radius\": " << fmt17(r.radius) << ",\n";
        out << "      \"class\": \"" << to_string(r.klass) << "\",\n";
        out << "      \"twin_id\": " << (r.twin_id ? std::to_string(*r.twin_id) : "null")
            << ",\n";
        out << "      \"residual\": " << fmt17(r.residual) << "\n    }"
            << (i + 1 < records.size() ? ",\n" : "\n");
      }
      out << "  ]\n}\n";
    }
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

namespace {

struct Circle {
  double x, y, r;
  int kind;  // 0 generator, 1 positive, 2 negative
};

}  // namespace

int cmd_plot2d(const Plot2dOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const GeneratorFile g = load_generators(opt.input_path);
    if (g.dimension != 2) {
      err << "plot2d supports dimension 2 only (file has d=" << g.dimension << ")\n";
      return kExitUnsupported;
    }

    std::vector<Circle> circles;
    for (const GeneratorEntry& e : g.balls)
      circles.push_back({e.center[0], e.center[1], std::fabs(e.radius), 0});

    if (opt.vertices_path) {
      std::ifstream vin(*opt.vertices_path);
      if (!vin) throw ParseError("cannot open '" + *opt.vertices_path + "'");
      nlohmann::json j;
      try {
        vin >> j;
      } catch (const std::exception& e) {
        throw ParseError(std::string("invalid vertex JSON: ") + e.what());
      }
      for (const auto& rec : j.value("vertices", nlohmann::json::array())) {
        const auto c = rec.at("center").get<std::vector<double>>();
        const double r = rec.at("radius").get<double>();
        circles.push_back({c[0], c[1], std::fabs(r), r >= 0.0 ? 1 : 2});
      }
    } else if (g.balls.size() == g.dimension + 1) {
      // single tuple: render its solutions directly
      const BallSet set = to_ball_set(g);
      const TupleResult res = solve_tuple(set, "auto", Tolerances{});
      for (const ApolloniusSolution& s : res.outcome.solutions)
        circles.push_back({s.x[0], s.x[1], std::fabs(s.r), s.r >= 0.0 ? 1 : 2});
    }

    double lo_x = 0, hi_x = 0, lo_y = 0, hi_y = 0;
    bool first = true;
    for (const Circle& c : circles) {
      const double x0 = c.x - c.r, x1 = c.x + c.r;
      const double y0 = -c.y - c.r, y1 = -c.y + c.r;  // SVG y axis points down
      if (first) {
        lo_x = x0;
        hi_x = x1;
        lo_y = y0;
        hi_y = y1;
        first = false;
      } else {
        lo_x = std::min(lo_x, x0);
        hi_x = std::max(hi_x, x1);
        lo_y = std::min(lo_y, y0);
        hi_y = std::max(hi_y, y1);
      }
    }
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double pad = 0.05 * span;
    lo_x -= pad;
    lo_y -= pad;
    const double w = hi_x + pad - lo_x;
    const double h = hi_y + pad - lo_y;
    const double stroke = 0.004 * std::max(w, h);

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fmt17(lo_x) << " "
        << fmt17(lo_y) << " " << fmt17(w) << " " << fmt17(h) << "\" width=\"800\" height=\""
        << fmt17(800.0 * h / w) << "\">\n";
    for (const Circle& c : circles) {
      out << "  <circle cx=\"" << fmt17(c.x) << "\" cy=\"" << fmt17(-c.y) << "\" r=\""
          << fmt17(c.r) << "\"";
      if (c.kind == 0)
        out << " fill=\"#5b8def\" fill-opacity=\"0.3\" stroke=\"#2c4f9e\"";
      else if (c.kind == 1)
        out << " fill=\"none\" stroke=\"#1b9e4b\"";
      else
        out << " fill=\"none\" stroke=\"#d43a3a\"";
      out << " stroke-width=\"" << fmt17(stroke) << "\"/>\n";
    }
    out << "</svg>\n";
    return kExitOk;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

int cmd_bench(const BenchOptions& opt, std::ostream& out, std::ostream& err) {
  try {
    const BenchReport rep = run_bench(opt.dims, opt.trials);
    out << "d,recipe,ns_per_solve,residual_p50,residual_p99\n";
    for (const BenchRow& row : rep.rows)
      out << row.d << "," << row.recipe << "," << fmt17(row.ns_per_solve) << ","
          << fmt17(row.residual_p50) << "," << fmt17(row.residual_p99) << "\n";
    for (const auto& [recipe, exp] : rep.exponent)
      out << "exponent," << recipe << "," << fmt17(exp) << ",,\n";
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace apollo::cli
