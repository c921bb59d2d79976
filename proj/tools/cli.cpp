#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lpq/curves.hpp"
#include "lpq/error.hpp"
#include "lpq/fredholm.hpp"
#include "lpq/intersect.hpp"
#include "lpq/lens.hpp"
#include "lpq/moduli.hpp"
#include "lpq/neckstretch.hpp"
#include "lpq/orbits.hpp"

namespace lpq::cli {

using json = nlohmann::json;

namespace {

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  int code = kExitOk;
};

using Handler = std::function<Outcome()>;

json rational(const Rational& x) { return x.str(); }

std::string sign_str(Sign s) { return s == Sign::Positive ? "+" : "-"; }

std::string core_str(Core c) {
  switch (c) {
    case Core::Gamma0: return "0";
    case Core::GammaInfty: return "inf";
    case Core::Contractible: return "c";
  }
  return "?";
}

Core parse_core(const std::string& s) {
  if (s == "0") return Core::Gamma0;
  if (s == "inf") return Core::GammaInfty;
  if (s == "c") return Core::Contractible;
  throw Error(ErrorKind::InvalidArgument, "core must be one of 0, inf, c; got '" + s + "'");
}

// End syntax: <core><sign>:<k>, e.g. 0+:2, inf+:4, c-:1.
EndDatum parse_end(const std::string& s) {
  static const std::regex re(R"(^(0|inf|c)([+-]):([0-9]+)$)");
  std::smatch m;
  if (!std::regex_match(s, m, re))
    throw Error(ErrorKind::InvalidArgument, "bad end '" + s + "', expected e.g. 0+:2, inf-:3, c-:1");
  const std::int64_t k = std::stoll(m[3].str());
  return {OrbitClass(parse_core(m[1].str()), k), m[2].str() == "+" ? Sign::Positive : Sign::Negative};
}

json end_json(const EndDatum& e) {
  return {{"core", core_str(e.orbit.core)}, {"sign", sign_str(e.sign)}, {"k", e.orbit.multiplicity}};
}

json pants_row(const LensSpace& lens, const PantsComponent& c, bool* all_regular) {
  const IndexReport rep = regularity_report(lens, c);
  if (!rep.regular) *all_regular = false;
  return {{"r", c.r},       {"d_I", c.d_I},         {"k", c.k},
          {"k0", c.k0},     {"kInf", c.kInf},       {"dim", c.dim},
          {"fredholm", rep.fredholm}, {"equivariant", rep.equivariant}, {"regular", rep.regular}};
}

json lift_json(const ActionComparison& cmp) {
  json out = {{"A_plus", rational(cmp.action_plus)},
              {"A_minus", rational(cmp.action_minus)},
              {"K_plus", cmp.lift.Kplus},
              {"K_minus", cmp.lift.Kminus},
              {"monotone", cmp.monotone}};
  out["genus"] = cmp.genus ? json(*cmp.genus) : json(nullptr);
  out["adjunction_defect"] = cmp.adjunction_defect ? json(*cmp.adjunction_defect) : json(nullptr);
  out["embedded"] = cmp.adjunction_defect ? json(*cmp.adjunction_defect == 0) : json(nullptr);
  return out;
}

json section_json(const SectionCheck& s, std::int64_t l) {
  return {{"l", l}, {"exists", s.exists}, {"coefficients", s.coefficients}, {"witness", s.witness}};
}

// Pants data for ends (k0 gamma_0 +, kInf gamma_infty +, k contractible -), or null when the
// multiplicities match no component.
json pants_block(const LensSpace& lens, std::int64_t k0, std::int64_t kInf, std::int64_t k) {
  const std::int64_t p = lens.p();
  const std::int64_t sum = checked_add(k0, kInf);
  const std::int64_t r = floor_mod(sum, p);
  if (r == 0) return nullptr;
  const std::int64_t d_I = (sum - r) / p - k;
  if (d_I < 0) return nullptr;
  const Residue q = lens.q_residue();
  if (!(lens.residue(k0) == lens.residue(r) * q * inv(q - lens.residue(1)))) return nullptr;

  const PantsComponent comp{r, d_I, k, k0, kInf, 4 + 4 * d_I};
  const IndexReport rep = regularity_report(lens, comp);
  const auto same_class = pants_components(lens, d_I, k);
  const auto matches = std::count_if(same_class.begin(), same_class.end(), [&](const PantsComponent& c) {
    return c.r == r && c.d_I == d_I && c.k == k;
  });
  return {{"v", lens.v()},
          {"r", r},
          {"d_I", d_I},
          {"dim", comp.dim},
          {"unique_in_class", matches == 1},
          {"cz_gamma0", cz_gamma_0(lens, k0).integer()},
          {"cz_gamma_infty", cz_gamma_infty(lens, kInf).integer()},
          {"fredholm", rep.fredholm},
          {"equivariant", rep.equivariant},
          {"regular", rep.regular},
          {"lifted_index", lifted_pants_index(lens, k0, kInf, k)},
          {"lifted_expected", 4 * (sum - p * k) + 2 * p + 2}};
}

std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = lo; n <= hi; ++n)
    if (is_prime(n)) out.push_back(n);
  return out;
}

struct Suite {
  std::int64_t checks = 0;
  std::int64_t failures = 0;
  void check(bool ok) {
    ++checks;
    if (!ok) ++failures;
  }
  json to_json() const { return {{"checks", checks}, {"failures", failures}}; }
};

json run_verify(std::int64_t p_max, bool* ok) {
  Suite index, cz, adjunction, theorem, sections;
  const auto primes = primes_between(5, p_max);
  for (std::int64_t p : primes) {
    const PrimeModulus mod(p);
    for (std::int64_t q = 2; q < p - 1; ++q) {
      const LensSpace lens = make_lens(p, q);

      for (const auto& c : pants_components(lens, 2, 3)) {
        index.check(pants_index(lens, c.k0, c.kInf, c.k) == 4 + 4 * c.d_I);
        index.check(lifted_pants_index(lens, c.k0, c.kInf, c.k) == 4 * (c.k0 + c.kInf - p * c.k) + 2 * p + 2);
        index.check(regularity_report(lens, c).regular);

        const ModuliProblem prob = pants_problem(lens, c);
        const ActionComparison cmp = total_action_comparison(prob);
        adjunction.check(cmp.monotone && cmp.adjunction_defect && *cmp.adjunction_defect >= 0 &&
                         *cmp.adjunction_defect % 2 == 0);
        if (local_congruences_hold(prob))
          sections.check(section_existence_check(prob, canonical_section_twist(lens)).exists);
      }
      for (const auto& c : cylinder_components(lens, 2, 3)) index.check(regularity_report(lens, c).regular);

      for (std::int64_t k = 1; k <= 3 * p; ++k) {
        if (k % p == 0) continue;
        cz.check(cz_gamma_infty(lens, k) == cz_rotation(Rational(k * (1 - q), p)));
        cz.check(cz_gamma_0(lens, k) == cz_rotation(Rational(k * (1 - lens.v()), p)));
      }

      for (std::int64_t q2 = 2; q2 < p - 1; ++q2) {
        const LensSpace other = make_lens(p, q2);
        const bool expected = q2 == q || lens.residue(q2) == inv(lens.q_residue());
        theorem.check(verify_theorem(p, q, q2) == expected &&
                      positive_contactomorphism_possible(lens, other) == expected);
      }
    }
    for (std::int64_t n = 1; n <= 3 * p; ++n) {
      const Rational s(n, p);
      cz.check(cz_rotation(-s).doubled_value == -cz_rotation(s).doubled_value);
      cz.check(cz_rotation(s + Rational(1)).doubled_value == cz_rotation(s).doubled_value + 4);
    }
  }
  cz.check(cz_rotation(Rational(1, 2)) == CzIndex::from_integer(1));

  *ok = index.failures + cz.failures + adjunction.failures + theorem.failures + sections.failures == 0;
  return {{"primes", primes},
          {"suites",
           {{"index_identity", index.to_json()},
            {"cz_axioms", cz.to_json()},
            {"adjunction", adjunction.to_json()},
            {"theorem_cross_check", theorem.to_json()},
            {"section_existence", sections.to_json()}}},
          {"passed", *ok}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void render_table(const json& value, const std::string& prefix, std::ostream& out) {
  if (value.is_object()) {
    for (const auto& [key, sub] : value.items())
      render_table(sub, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  const bool row_list = value.is_array() && !value.empty() &&
                        std::all_of(value.begin(), value.end(), [](const json& x) { return x.is_object(); });
  if (!row_list) {
    out << prefix << ": " << scalar_text(value) << "\n";
    return;
  }
  std::vector<std::string> cols;
  for (const auto& [key, _] : value.front().items()) cols.push_back(key);
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  for (const auto& c : cols) width.push_back(c.size());
  for (const auto& row : value) {
    std::vector<std::string> line;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      line.push_back(row.contains(cols[i]) ? scalar_text(row[cols[i]]) : "");
      width[i] = std::max(width[i], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  out << prefix << ":\n";
  auto emit = [&](const std::vector<std::string>& line) {
    out << " ";
    for (std::size_t i = 0; i < line.size(); ++i) out << " " << std::string(width[i] - line[i].size(), ' ') << line[i];
    out << "\n";
  };
  emit(cols);
  for (const auto& line : cells) emit(line);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Moduli of rational curves in symplectizations of lens spaces", "lpq-cli"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "table"}));

  std::string command;
  Handler handler;

  // shared argument slots; each subcommand binds the ones it uses
  std::int64_t p = 0, q = 0, q2 = 0, k = 0, k0p = 0, kInfp = 0, k0m = 0, r = 0, dI = 0;
  std::int64_t Kplus = 0, Kminus = 0, genus = 0, p_max = 0;
  std::optional<std::int64_t> pos_max_di, pos_max_k, opt_max_di, opt_max_k, pos_seed, opt_seed, twist;
  std::optional<double> pos_tol, opt_tol;
  std::string core;
  std::vector<std::string> end_specs;

  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("max_di", pos_max_di, "Largest d_I");
    sub->add_option("max_k", pos_max_k, "Largest k (or number of multiplicities per class)");
    sub->add_option("--max-di", opt_max_di, "Largest d_I");
    sub->add_option("--max-k", opt_max_k, "Largest k");
  };
  auto pick = [](const std::optional<std::int64_t>& a, const std::optional<std::int64_t>& b, std::int64_t dflt,
                 const char* name) {
    if (a && b && *a != *b)
      throw Error(ErrorKind::InvalidArgument, std::string("conflicting values for ") + name);
    const std::int64_t v = b ? *b : a ? *a : dflt;
    if (v < 0) throw Error(ErrorKind::InvalidArgument, std::string(name) + " must be >= 0");
    return v;
  };

  auto* classify = app.add_subcommand("classify", "Classification predicates for L(p,q) and L(p,q2)");
  classify->add_option("p", p)->required();
  classify->add_option("q", q)->required();
  classify->add_option("q2", q2)->required();
  classify->callback([&] {
    command = "classify";
    handler = [&] {
      Outcome o;
      o.inputs = {{"p", p}, {"q", q}, {"q2", q2}};
      const LensSpace a = make_lens(p, q);
      const LensSpace b = make_lens(p, q2);
      o.result["homotopy_equivalent"] = homotopy_equivalent(a, b);
      o.result["diffeomorphic"] = diffeomorphic(a, b);
      o.result["standard_range"] = {{"q", a.standard_range()}, {"q2", b.standard_range()}};
      if (a.standard_range() && b.standard_range())
        o.result["positive_contactomorphism_possible"] = positive_contactomorphism_possible(a, b);
      else
        o.result["positive_contactomorphism_possible"] = "n/a";
      o.result["euler_class_pd"] = {{"q", euler_class_pd(a).value()}, {"q2", euler_class_pd(b).value()}};
      return o;
    };
  });

  auto* pants = app.add_subcommand("pants", "Enumerate pants components with their index check");
  pants->add_option("p", p)->required();
  pants->add_option("q", q)->required();
  add_limits(pants);
  pants->callback([&] {
    command = "pants";
    handler = [&] {
      Outcome o;
      const std::int64_t max_di = pick(pos_max_di, opt_max_di, 1, "max_di");
      const std::int64_t max_k = pick(pos_max_k, opt_max_k, 2, "max_k");
      o.inputs = {{"p", p}, {"q", q}, {"max_di", max_di}, {"max_k", max_k}};
      const LensSpace lens = make_lens(p, q);
      bool all_regular = true;
      json rows = json::array();
      std::set<std::int64_t> rs;
      for (const auto& c : pants_components(lens, max_di, max_k)) {
        rows.push_back(pants_row(lens, c, &all_regular));
        rs.insert(c.r);
      }
      o.result = {{"v", lens.v()}, {"rows", rows}, {"count", rows.size()}, {"r_values", rs.size()},
                  {"all_regular", all_regular}};
      if (!all_regular) o.code = kExitProperty;
      return o;
    };
  });

  auto* cylinders = app.add_subcommand("cylinders", "Enumerate cylinders k0 gamma_0 -> kInf gamma_infty");
  cylinders->add_option("p", p)->required();
  cylinders->add_option("q", q)->required();
  add_limits(cylinders);
  cylinders->callback([&] {
    command = "cylinders";
    handler = [&] {
      Outcome o;
      const std::int64_t max_di = pick(pos_max_di, opt_max_di, 1, "max_di");
      const std::int64_t max_k = pick(pos_max_k, opt_max_k, 2, "max_k");
      o.inputs = {{"p", p}, {"q", q}, {"max_di", max_di}, {"max_k", max_k}};
      const LensSpace lens = make_lens(p, q);
      bool all_regular = true;
      json rows = json::array();
      for (const auto& c : cylinder_components(lens, max_di, max_k)) {
        const IndexReport rep = regularity_report(lens, c);
        all_regular = all_regular && rep.regular;
        rows.push_back({{"r", c.r}, {"d_I", c.d_I}, {"k0", c.k0}, {"kInf", c.kInf}, {"dim", c.dim},
                        {"fredholm", rep.fredholm}, {"equivariant", rep.equivariant}, {"regular", rep.regular}});
      }
      o.result = {{"rows", rows}, {"count", rows.size()}, {"all_regular", all_regular}};
      if (!all_regular) o.code = kExitProperty;
      return o;
    };
  });

  auto* moduli = app.add_subcommand("moduli-check", "Existence conditions for a list of ends such as 0+:2 inf+:4 c-:1");
  moduli->add_option("p", p)->required();
  moduli->add_option("q", q)->required();
  moduli->add_option("ends", end_specs)->required();
  moduli->callback([&] {
    command = "moduli-check";
    handler = [&] {
      Outcome o;
      o.inputs = {{"p", p}, {"q", q}, {"ends", end_specs}};
      const LensSpace lens = make_lens(p, q);
      std::vector<EndDatum> ends;
      for (const auto& s : end_specs) ends.push_back(parse_end(s));
      const ModuliProblem prob(lens, ends);

      json& res = o.result;
      res["ends"] = json::array();
      for (const auto& e : prob.ends()) res["ends"].push_back(end_json(e));
      res["degree"] = degree_condition(prob);
      res["degree_admissible"] = degree_admissible(prob);
      res["homotopy_condition"] = homotopy_condition(prob);
      const bool standard = lens.standard_range();
      bool admissible = degree_admissible(prob) && homotopy_condition(prob);
      if (standard) {
        json ram = json::array();
        for (const auto& rd : ramification_data(prob)) {
          json row = end_json(rd.end);
          row["r_bar"] = rd.r_bar;
          row["m_bar"] = rd.m_bar;
          ram.push_back(row);
        }
        res["ramification"] = ram;
        const bool local = local_congruences_hold(prob);
        res["local_congruences"] = local;
        admissible = admissible && local;
        const std::int64_t l = canonical_section_twist(lens);
        res["section"] = section_json(section_existence_check(prob, l), l);
      } else {
        res["ramification"] = nullptr;
        res["local_congruences"] = nullptr;
        res["section"] = nullptr;
      }
      res["admissible"] = admissible;
      res["action"] = lift_json(total_action_comparison(prob));

      const auto& c = prob.counts();
      const bool pants_shape = standard && prob.ends().size() == 3 && c.n0_plus == 1 && c.ninf_plus == 1 &&
                               c.nc_minus == 1;
      res["pants"] = pants_shape ? pants_block(lens, prob.total(Core::Gamma0, Sign::Positive),
                                               prob.total(Core::GammaInfty, Sign::Positive),
                                               prob.total(Core::Contractible, Sign::Negative))
                                 : json(nullptr);
      return o;
    };
  });

  auto* cz = app.add_subcommand("cz", "Conley-Zehnder index, action and homotopy class of k times an orbit");
  cz->add_option("p", p)->required();
  cz->add_option("q", q)->required();
  cz->add_option("core", core, "0, inf or c")->required();
  cz->add_option("k", k)->required();
  cz->callback([&] {
    command = "cz";
    handler = [&] {
      Outcome o;
      o.inputs = {{"p", p}, {"q", q}, {"core", core}, {"k", k}};
      const LensSpace lens = make_lens(p, q);
      const OrbitClass orbit(parse_core(core), k);
      json& res = o.result;
      res["action"] = rational(action(orbit, lens));
      res["homotopy_class"] = homotopy_class(orbit, lens).value();
      if (orbit.core == Core::Contractible) {
        res["orbit_space_dim"] = orbit_space_dim(orbit, lens);
        res["nondegenerate"] = false;
        res["cz"] = nullptr;
        res["cz_lifted"] = cz_contractible_sphere(k).integer();
      } else {
        res["nondegenerate"] = is_nondegenerate(orbit, lens);
        const CzIndex mu = orbit.core == Core::Gamma0 ? cz_gamma_0(lens, k) : cz_gamma_infty(lens, k);
        res["cz"] = rational(mu.value());
        res["cz_lifted"] = rational(cz_lifted_noncontractible(lens, orbit.core, k).value());
        res["orbit_space_dim"] = orbit_space_dim(orbit, lens);
      }
      return o;
    };
  });

  auto* section = app.add_subcommand("section-check", "Mod-p section existence for ends (0+, inf+, 0-)");
  section->add_option("p", p)->required();
  section->add_option("q", q)->required();
  section->add_option("k0p", k0p)->required();
  section->add_option("kinfp", kInfp)->required();
  section->add_option("k0m", k0m)->required();
  section->add_option("--l", twist, "Twist l of the divisor l*0 - (l+1)*infinity");
  section->callback([&] {
    command = "section-check";
    handler = [&] {
      Outcome o;
      const LensSpace lens = make_lens(p, q);
      require_standard(lens);
      const std::int64_t l = twist ? *twist : canonical_section_twist(lens);
      o.inputs = {{"p", p}, {"q", q}, {"k0p", k0p}, {"kinfp", kInfp}, {"k0m", k0m}, {"l", l}};
      const ModuliProblem prob(lens, {{OrbitClass(Core::Gamma0, k0p), Sign::Positive},
                                      {OrbitClass(Core::GammaInfty, kInfp), Sign::Positive},
                                      {OrbitClass(Core::Gamma0, k0m), Sign::Negative}});
      json ram = json::array();
      for (const auto& rd : ramification_data(prob)) {
        json row = end_json(rd.end);
        row["r_bar"] = rd.r_bar;
        row["m_bar"] = rd.m_bar;
        ram.push_back(row);
      }
      std::vector<std::int64_t> working;
      for (std::int64_t t = 1; t < p; ++t)
        if (section_existence_check(prob, t).exists) working.push_back(t);
      o.result = section_json(section_existence_check(prob, l), l);
      o.result["ramification"] = ram;
      o.result["local_congruences"] = local_congruences_hold(prob);
      o.result["working_twists"] = working;
      return o;
    };
  });

  auto* sample = app.add_subcommand("sample-curve", "Sample an equivariant base curve and test equivariance");
  sample->add_option("p", p)->required();
  sample->add_option("q", q)->required();
  sample->add_option("r", r)->required();
  sample->add_option("dI", dI)->required();
  sample->add_option("SEED", pos_seed, "Seed (same as --seed)");
  sample->add_option("TOL", pos_tol, "Tolerance (same as --tol)");
  sample->add_option("--seed", opt_seed);
  sample->add_option("--tol", opt_tol);
  sample->callback([&] {
    command = "sample-curve";
    handler = [&] {
      Outcome o;
      const std::int64_t seed = pick(pos_seed, opt_seed, 0, "seed");
      if (pos_tol && opt_tol && *pos_tol != *opt_tol)
        throw Error(ErrorKind::InvalidArgument, "conflicting values for tol");
      const double tol = opt_tol ? *opt_tol : pos_tol ? *pos_tol : 1e-9;
      if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tol must be positive");
      o.inputs = {{"p", p}, {"q", q}, {"r", r}, {"dI", dI}, {"seed", seed}, {"tol", tol}};
      const LensSpace lens = make_lens(p, q);
      if (r < 1 || r >= p) throw Error(ErrorKind::InvalidArgument, "r must lie in 1..p-1");
      if (dI < 0) throw Error(ErrorKind::InvalidArgument, "dI must be >= 0");
      const PantsComponent comp{r, dI, 1, 0, 0, 4 + 4 * dI};
      const EquivariantRationalMap map = sample_component(lens, comp, static_cast<std::uint64_t>(seed));
      const std::size_t samples = 1000;
      const EquivarianceCheck chk = check_equivariance(map, samples, static_cast<std::uint64_t>(seed), tol);
      json zeros = json::array();
      for (const auto& z : map.zeros())
        zeros.push_back({{"root", {z.root.real(), z.root.imag()}}, {"multiplicity", z.multiplicity}});
      o.result = {{"lambda", {map.lambda().real(), map.lambda().imag()}},
                  {"r", map.r()},
                  {"m", map.action().m},
                  {"zeros", zeros},
                  {"degree", degree(map)},
                  {"samples", chk.samples},
                  {"max_residual", chk.max_residual},
                  {"passed", chk.passed}};
      if (!chk.passed) o.code = kExitProperty;
      return o;
    };
  });

  auto* intersect = app.add_subcommand("intersect", "Extended class, Chern number and adjunction defect of a lift");
  intersect->add_option("K+", Kplus)->required();
  intersect->add_option("K-", Kminus)->required();
  intersect->add_option("g", genus)->default_val(0);
  intersect->callback([&] {
    command = "intersect";
    handler = [&] {
      Outcome o;
      o.inputs = {{"K_plus", Kplus}, {"K_minus", Kminus}, {"genus", genus}};
      const LiftedMultiplicities K(Kplus, Kminus);
      const BundleClass cls = extended_class(K);
      o.result = {{"class", {{"m", cls.m}, {"n", cls.n}}},
                  {"self_intersection", pairing(cls, cls)},
                  {"chern", chern(cls)},
                  {"dot_S0", pairing(cls, BundleClass::zero_section())},
                  {"dot_Sinf", pairing(cls, BundleClass::infinity_section())},
                  {"monotone", action_monotone(K)},
                  {"adjunction_defect", adjunction_defect(K, genus)}};
      return o;
    };
  });

  auto* neck = app.add_subcommand("neck", "Replay the neck-stretching endgame for L(p,q) and L(p,q2)");
  neck->add_option("p", p)->required();
  neck->add_option("q", q)->required();
  neck->add_option("q2", q2)->required();
  neck->callback([&] {
    command = "neck";
    handler = [&] {
      Outcome o;
      o.inputs = {{"p", p}, {"q", q}, {"q2", q2}};
      const LensSpace a = make_lens(p, q);
      const LensSpace b = make_lens(p, q2);
      require_standard(a);
      require_standard(b);
      json profiles = json::array();
      for (const auto& pr : enumerate_profiles(p))
        profiles.push_back({{"A_plus", rational(pr.plus)}, {"A_minus", rational(pr.minus)}});
      json cases = json::object();
      for (auto ctx : {StretchContext::Cobordism, StretchContext::NeckStretch}) {
        json rows = json::array();
        int idx = 1;
        for (const auto& v : eliminate_cases(a, ctx))
          rows.push_back({{"case", idx++},
                          {"A_plus", rational(v.profile.plus)},
                          {"A_minus", rational(v.profile.minus)},
                          {"eliminated", v.eliminated},
                          {"reason", std::string(to_string(v.reason))}});
        cases[std::string(to_string(ctx))] = rows;
      }
      json assignments = json::object();
      for (auto as : {EndAssignment::Straight, EndAssignment::Swapped}) {
        const CongruenceReport rep = derive_congruence(a, b, as);
        assignments[std::string(to_string(as))] = {
            {"k0", rep.k0}, {"kInf", rep.kInf}, {"l0", rep.l0}, {"lInf", rep.lInf},
            {"cylinders_monotone", rep.cylinders_monotone}, {"consistent", rep.consistent},
            {"relation_holds", rep.relation_holds}};
      }
      o.result = {{"profiles", profiles}, {"cases", cases}, {"assignments", assignments},
                  {"theorem", verify_theorem(p, q, q2)}};
      return o;
    };
  });

  auto* verify = app.add_subcommand("verify", "Run the invariant sweeps for all primes 5 <= p <= p_max");
  verify->add_option("p_max", p_max)->required();
  verify->callback([&] {
    command = "verify";
    handler = [&] {
      Outcome o;
      o.inputs = {{"p_max", p_max}};
      if (p_max < 5)
        throw Error(ErrorKind::InvalidArgument, "p_max must be >= 5 (no prime p >= 5 below it)");
      if (p_max > kVerifyBound)
        throw Error(ErrorKind::InvalidArgument, "p_max must be <= " + std::to_string(kVerifyBound));
      bool ok = false;
      o.result = run_verify(p_max, &ok);
      if (!ok) o.code = kExitProperty;
      return o;
    };
  });

  auto* classes = app.add_subcommand("classes", "Diffeomorphism and homotopy classes of L(p,q) for fixed p");
  classes->add_option("p", p)->required();
  classes->callback([&] {
    command = "classes";
    handler = [&] {
      Outcome o;
      o.inputs = {{"p", p}};
      const ClassReport rep = enumerate_classes(p);
      json exotic = json::array();
      for (const auto& [x, y] : rep.exotic_pairs) exotic.push_back({x, y});
      o.result = {{"diffeomorphism_classes", rep.diffeomorphism_classes},
                  {"homotopy_classes", rep.homotopy_classes},
                  {"exotic_pairs", exotic}};
      return o;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInput;
  }

  Outcome o;
  try {
    o = handler();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  const json envelope = {
      {"command", command}, {"inputs", o.inputs}, {"result", o.result}, {"schema_version", kSchemaVersion}};
  if (format == "table") {
    render_table(envelope, "", out);
  } else {
    out << envelope.dump(2) << "\n";
  }
  return o.code;
}

}  // namespace lpq::cli
