#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "idist/constructions.hpp"
#include "idist/equivalence.hpp"
#include "idist/format.hpp"
#include "idist/monomial.hpp"
#include "idist/spectrum.hpp"

using nlohmann::json;
using namespace idist;

namespace {

enum class OutFormat { Json, Csv, Plain };

struct Common {
  std::string field;
  std::string format = "json";
  int workers = 1;
  std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, Common& c, bool needs_field = true) {
  auto* f = cmd->add_option("--field", c.field,
                            "field spec p^s[:c0,c1,...] (modulus digits)");
  if (needs_field) f->required();
  cmd->add_option("--format", c.format, "json | csv | plain")
      ->check(CLI::IsMember({"json", "csv", "plain"}));
  cmd->add_flag_callback("--csv", [&c] { c.format = "csv"; },
                         "shortcut for --format csv");
  cmd->add_flag_callback("--plain", [&c] { c.format = "plain"; },
                         "shortcut for --format plain");
  cmd->add_option("--workers", c.workers, "parallelism hint (never affects output)");
  cmd->add_option("--seed", c.seed, "seed for all randomized choices");
}

OutFormat out_format(const Common& c) {
  if (c.format == "csv") return OutFormat::Csv;
  if (c.format == "plain") return OutFormat::Plain;
  return OutFormat::Json;
}

void emit_distribution(const IntersectionDistribution& d, const Common& c) {
  switch (out_format(c)) {
    case OutFormat::Json: std::printf("%s\n", to_json(d).c_str()); break;
    case OutFormat::Csv: std::printf("%s", distribution_csv(d).c_str()); break;
    case OutFormat::Plain: {
      const char* sym = d.kind == DistKind::Poly ? "v" : "u";
      for (size_t i = 0; i < d.counts.size(); ++i)
        if (d.counts[i] != 0)
          std::printf("%s_%zu = %lld\n", sym, i, d.counts[i]);
      break;
    }
  }
}

json point_array(const PointSet& S) {
  json arr = json::array();
  for (const auto& P : S.points) arr.push_back(point_string(P));
  return arr;
}

PointSet parse_point_set(const FieldCtxPtr& F, const std::string& text) {
  json arr;
  try {
    arr = json::parse(text);
  } catch (const std::exception& e) {
    fail("ParseError", std::string("bad point array: ") + e.what());
  }
  if (!arr.is_array()) fail("ParseError", "points must be a JSON array");
  std::vector<ProjPoint> pts;
  for (const auto& item : arr)
    pts.push_back(parse_point(F, item.get<std::string>()));
  return PointSet(F, std::move(pts));
}

json bound_json(const BoundValue& b) {
  return {{"value", b.value}, {"rule", bound_rule_name(b.rule)}};
}

json report_json(const BoundReport& r) {
  json j{{"q", r.q},
         {"d", r.d},
         {"lower", bound_json(r.lower)},
         {"upper", bound_json(r.upper)}};
  json cands = json::array();
  for (const auto& b : r.upper_candidates) cands.push_back(bound_json(b));
  j["upper_candidates"] = cands;
  j["exact"] = r.exact ? bound_json(*r.exact) : json(nullptr);
  if (r.brute_degree) j["brute_degree"] = *r.brute_degree;
  if (r.sample_line)
    j["sample_line"] = {{"a", element_string(r.sample_line->first)},
                        {"b", element_string(r.sample_line->second)}};
  return j;
}

ConstructionFamily parse_family(const std::string& name) {
  for (auto f : {ConstructionFamily::TwoLinesExcl,
                 ConstructionFamily::TwoLinesIncl,
                 ConstructionFamily::TwoLinesNucleus,
                 ConstructionFamily::TwoLinesParallelNucleus,
                 ConstructionFamily::TwoLinesTwoPoints})
    if (name == family_name(f)) return f;
  fail("ParseError", "unknown family '" + name + "'");
}

int dispatch(CLI::App& app);

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection distributions of polynomials and (q+1)-sets"};
  app.require_subcommand(1);

  Common c;
  std::string poly_text, points_text, dist_text, family_text;
  int d = 0, t = 0, cc = 0;
  long long trials = 1000000;
  bool verify = false, exhaustive = false, probe_max = false;
  bool quadrangle = true;
  std::string mode;
  std::string ta = "1", tb = "0", tc = "0", td = "0", te = "1";
  int sigma = 0;
  long long gamma = 0;
  bool have_gamma = false;

  auto* dist_cmd = app.add_subcommand("dist", "distribution of a polynomial");
  add_common(dist_cmd, c);
  dist_cmd->add_option("--poly", poly_text)->required();

  auto* set_cmd = app.add_subcommand("set-dist", "distribution of a point set");
  add_common(set_cmd, c);
  set_cmd->add_option("--points", points_text, "JSON array of \"(x:y:z)\"")
      ->required();

  auto* conv_cmd =
      app.add_subcommand("convert", "convert between v- and u-distributions");
  add_common(conv_cmd, c, false);
  conv_cmd->add_option("--dist", dist_text, "distribution JSON document")
      ->required();

  auto* table_cmd =
      app.add_subcommand("degree-table", "degrees of all monomial graph sets");
  add_common(table_cmd, c);

  auto* bounds_cmd =
      app.add_subcommand("bounds", "degree bounds for one monomial");
  add_common(bounds_cmd, c);
  bounds_cmd->add_option("--d", d, "monomial exponent")->required();

  auto* con_cmd = app.add_subcommand("construct", "build a two-line family set");
  add_common(con_cmd, c);
  con_cmd->add_option("--family", family_text)->required();
  con_cmd->add_option("--t", t);
  con_cmd->add_option("--c", cc);
  con_cmd->add_flag("--verify", verify, "recompute and compare the distribution");

  auto* equiv_cmd = app.add_subcommand("equiv", "projective equivalence tools");
  add_common(equiv_cmd, c);
  equiv_cmd->add_option("--poly", poly_text)->required();
  equiv_cmd->add_option("--mode", mode, "transform | swap | inverse-compare")
      ->required()
      ->check(CLI::IsMember({"transform", "swap", "inverse-compare"}));
  equiv_cmd->add_option("--a", ta);
  equiv_cmd->add_option("--b", tb);
  equiv_cmd->add_option("--c", tc);
  equiv_cmd->add_option("--d", td);
  equiv_cmd->add_option("--e", te);
  equiv_cmd->add_option("--sigma", sigma);

  auto* spec_cmd = app.add_subcommand("spectrum", "attainable non-hitting indices");
  add_common(spec_cmd, c);
  spec_cmd->add_option("--trials", trials);
  spec_cmd->add_flag("--exhaustive", exhaustive);
  spec_cmd->add_flag("--probe-max", probe_max);
  spec_cmd->add_flag("--quadrangle,!--no-quadrangle", quadrangle,
                     "force sampled sets through the fundamental quadrangle");

  auto* irr_cmd = app.add_subcommand("irreducible-count",
                                     "monic irreducible cubics by root sum");
  add_common(irr_cmd, c);
  irr_cmd->add_option("--gamma", gamma, "prime-subfield value of the root sum")
      ->each([&have_gamma](const std::string&) { have_gamma = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (dist_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      emit_distribution(poly_distribution(parse_polynomial(F, poly_text),
                                          c.workers),
                        c);
    } else if (set_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      emit_distribution(set_distribution(parse_point_set(F, points_text)), c);
    } else if (conv_cmd->parsed()) {
      emit_distribution(convert(parse_distribution(dist_text)), c);
    } else if (table_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      auto table = degree_table(F, c.workers);
      if (out_format(c) == OutFormat::Json) {
        json arr = json::array();
        for (const auto& row : table) arr.push_back(report_json(row));
        std::printf("%s\n", arr.dump().c_str());
      } else {
        std::printf("d,lower,lower_rule,upper,upper_rule,exact,exact_rule,"
                    "degree,sample_a,sample_b\n");
        for (const auto& row : table)
          std::printf(
              "%d,%lld,%s,%lld,%s,%s,%s,%d,%s,%s\n", row.d, row.lower.value,
              bound_rule_name(row.lower.rule), row.upper.value,
              bound_rule_name(row.upper.rule),
              row.exact ? std::to_string(row.exact->value).c_str() : "",
              row.exact ? bound_rule_name(row.exact->rule) : "",
              *row.brute_degree,
              element_string(row.sample_line->first).c_str(),
              element_string(row.sample_line->second).c_str());
      }
    } else if (bounds_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      BoundReport rep;
      rep.q = F->q();
      rep.d = d;
      rep.lower = lower_bound(F, d);
      rep.upper_candidates = upper_bounds(F, d);
      rep.upper = *std::min_element(
          rep.upper_candidates.begin(), rep.upper_candidates.end(),
          [](const BoundValue& x, const BoundValue& y) {
            return x.value < y.value;
          });
      rep.exact = exact_divisor_cases(F, d);
      std::printf("%s\n", report_json(rep).dump().c_str());
    } else if (con_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      ConstructionSpec spec{parse_family(family_text), F->q(), t, cc, c.seed};
      auto predicted = predicted_distribution(spec);
      auto r = build(F, spec);
      json j{{"family", family_name(spec.family)},
             {"q", spec.q},
             {"t", spec.t},
             {"c", spec.c},
             {"seed", spec.seed},
             {"points", point_array(r.points)},
             {"predicted", json::parse(to_json(predicted))}};
      if (r.poly) j["poly"] = polynomial_string(*r.poly);
      if (verify) {
        auto computed = predicted.kind == DistKind::Set
                            ? set_distribution(r.points)
                            : convert(set_distribution(r.points));
        j["computed"] = json::parse(to_json(computed));
        j["matches"] = computed == predicted;
      }
      std::printf("%s\n", j.dump().c_str());
    } else if (equiv_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      auto f = parse_polynomial(F, poly_text);
      if (mode == "inverse-compare") {
        auto rep = inverse_comparison(f);
        json j{{"equal", rep.equal},
               {"dist_f", json::parse(to_json(rep.dist_f))},
               {"dist_inverse", json::parse(to_json(rep.dist_inverse))}};
        std::printf("%s\n", j.dump().c_str());
      } else {
        Polynomial g;
        if (mode == "swap") {
          g = nucleus_swap(f);
        } else {
          EquivTransform tr{parse_element(F, ta), parse_element(F, tb),
                            parse_element(F, tc), parse_element(F, td),
                            parse_element(F, te), sigma};
          g = transform(f, tr);
        }
        json j{{"input", polynomial_string(f)},
               {"result", polynomial_string(g)},
               {"dist", json::parse(to_json(poly_distribution(g)))}};
        std::printf("%s\n", j.dump().c_str());
      }
    } else if (spec_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      SpectrumResult res =
          exhaustive ? exhaustive_spectrum(F)
                     : random_search(F, trials, c.seed, quadrangle, c.workers);
      json attained = json::array();
      for (const auto& v : res.attained)
        attained.push_back({{"u0", v.u0},
                            {"provenance", provenance_name(v.provenance)},
                            {"witness", point_array(v.witness)}});
      json gaps = json::array();
      long long q = F->q();
      if (q > 7 && 2 * q - 2 <= 3 * q - 10)
        gaps.push_back({2 * q - 2, 3 * q - 10});
      if (q >= 16) gaps.push_back({3 * q - 5, 4 * q - 17});
      json j{{"q", res.q},          {"attained", attained},
             {"trials", res.trials}, {"seed", res.seed},
             {"mean_u0", res.mean_u0}, {"gaps_certified", gaps}};
      if (probe_max) {
        auto reps = find_arc_representatives(F, c.seed);
        auto probe = max_value_probe(F, reps);
        j["probe"] = {{"arcs", probe.arcs},
                      {"extensions_tested", probe.extensions_tested},
                      {"no_u0_34", probe.no_u0_34}};
      }
      std::printf("%s\n", j.dump().c_str());
    } else if (irr_cmd->parsed()) {
      auto F = parse_field_spec(c.field);
      json j{{"q", F->q()}};
      if (have_gamma) {
        j["gamma"] = gamma;
        j["count"] =
            count_irreducible_cubics_fixed_trace(F, F->from_prime(gamma));
      } else {
        json counts = json::object();
        long long total = 0;
        for (auto g : F->elements()) {
          auto n = count_irreducible_cubics_fixed_trace(F, g);
          counts[element_string(g)] = n;
          total += n;
        }
        j["counts"] = counts;
        j["total"] = total;
      }
      std::printf("%s\n", j.dump().c_str());
    }
  } catch (const Error& e) {
    json err{{"error", e.code()}, {"message", e.what()}};
    std::printf("%s\n", err.dump().c_str());
    return e.code() == "ParseError" ? 1 : 2;
  }
  return 0;
}
