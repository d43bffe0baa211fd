// Command-line entry point. Reports go to stdout (JSON by default),
// diagnostics to stderr. Exit codes: 0 success or certified, 1 a failed
// hypothesis, check or Boundary verdict, 2 bad input.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "kmt/affine.hpp"
#include "kmt/chevalley_checks.hpp"
#include "kmt/gcm.hpp"
#include "kmt/generating_set.hpp"
#include "kmt/kazhdan_bounds.hpp"
#include "kmt/root_system.hpp"
#include "kmt/symrep.hpp"

using nlohmann::ordered_json;

namespace {

enum class Format { Json, Text };

struct RunConfig {
  std::string gcm_path;
  std::string ring = "Z/5";
  int height_cap = 12;
  long long samples = 10'000;
  std::uint64_t seed = 0;
  Format format = Format::Json;
  std::string pseudo;
  std::string type = "a2";
  std::string group = "sl3";
  int q = 5;
  int d = 3;
  int n = 4;
  int window = 6;
};

/// A finished command: the payload and its exit code.
struct Outcome {
  ordered_json body;
  int exit_code = 0;
};

kmt::Gcm load_gcm(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw kmt::InputError("cannot open GCM file '" + path + "'");
  try {
    return kmt::parse_gcm(in);
  } catch (const kmt::ParseError& e) {
    throw kmt::ParseError(e.line(), e.column(), path + ": " + std::string(e.what()).substr(std::string(e.what()).find(": ") + 2));
  }
}

/// Integers that may exceed 64 bits are written as numbers when they fit and
/// as decimal strings otherwise.
ordered_json big(const kmt::BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

ordered_json one_based(const std::vector<int>& v) {
  ordered_json a = ordered_json::array();
  for (int x : v) a.push_back(x + 1);
  return a;
}

ordered_json root_json(const kmt::RootPair& p) {
  return {{"coeffs", p.root}, {"coroot_coeffs", p.coroot}};
}

ordered_json certificate_json(const kmt::PairCertificate& c) {
  ordered_json j{{"first", c.first.root}, {"second", c.second.root}};
  if (c.kind == kmt::CertificateKind::Commute) {
    j["kind"] = "commute";
    j["reason"] = kmt::to_string(c.reason);
  } else {
    j["kind"] = "rank-two-embed";
    j["i"] = c.i + 1;
    j["j"] = c.j + 1;
    j["word"] = one_based(c.word);
  }
  return j;
}

ordered_json bound_json(const kmt::BoundReport& b) {
  ordered_json pairs = ordered_json::array();
  for (const kmt::PairBound& p : b.pairs)
    pairs.push_back({{"first", p.first},
                     {"second", p.second},
                     {"type", kmt::to_string(p.type)},
                     {"depth", p.depth},
                     {"value", p.value},
                     {"vs_threshold", p.vs_threshold}});
  std::ostringstream thr;
  thr << b.threshold;
  return {{"sigma_size", b.sigma_size},
          {"threshold", thr.str()},
          {"threshold_value", b.threshold.convert_to<double>()},
          {"pairs", pairs},
          {"verdict", kmt::to_string(b.verdict)}};
}

std::vector<int> parse_index_list(const std::string& s, int d) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v < 1 || v > d)
      throw kmt::InputError("--pseudo expects comma-separated indices in 1.." + std::to_string(d) + ", got '" + s + "'");
    out.push_back(v - 1);
  }
  if (out.empty()) throw kmt::InputError("--pseudo needs at least one index");
  return out;
}

Outcome run_classify(const RunConfig& cfg) {
  const kmt::Gcm g = load_gcm(cfg.gcm_path);
  const kmt::GcmClassification c = kmt::classify(g);
  ordered_json j{{"command", "classify"},
                 {"d", g.size()},
                 {"kind", kmt::to_string(c.kind)},
                 {"indecomposable", c.indecomposable},
                 {"two_spherical", c.two_spherical},
                 {"simply_laced", c.simply_laced},
                 {"M", c.M},
                 {"nA", c.nA ? big(*c.nA) : ordered_json(nullptr)}};
  if (!c.note.empty()) j["note"] = c.note;
  return {j, 0};
}

Outcome run_roots(const RunConfig& cfg) {
  const kmt::Gcm g = load_gcm(cfg.gcm_path);
  const kmt::RootSlice slice = kmt::enumerate_real_roots(g, cfg.height_cap);
  ordered_json roots = ordered_json::array();
  for (const auto& [v, e] : slice.entries())
    roots.push_back({{"coeffs", e.root},
                     {"coroot_coeffs", e.coroot},
                     {"witness", {{"simple", e.simple + 1}, {"word", one_based(e.word)}}}});
  return {{{"command", "roots"}, {"height_cap", cfg.height_cap}, {"count", slice.size()}, {"roots", roots}}, 0};
}

ordered_json sigma_json(const kmt::SigmaSet& s, const std::vector<kmt::PairCertificate>& certs) {
  ordered_json sig = ordered_json::array(), cs = ordered_json::array();
  for (const kmt::RootPair& p : s.sigma) sig.push_back(root_json(p));
  for (const kmt::PairCertificate& c : certs) cs.push_back(certificate_json(c));
  return {{"pseudo", s.pseudo},
          {"index_set", one_based(s.index_set)},
          {"independent", one_based(s.independent)},
          {"partners", one_based(s.partners)},
          {"w0", one_based(s.w0)},
          {"size", s.sigma.size()},
          {"sigma", sig},
          {"certificates", cs}};
}

Outcome run_sigma(const RunConfig& cfg) {
  const kmt::Gcm g = load_gcm(cfg.gcm_path);
  const kmt::SigmaSet s = cfg.pseudo.empty() ? kmt::build_sigma(g)
                                             : kmt::build_sigma_pseudo(g, parse_index_list(cfg.pseudo, g.size()));
  const kmt::RootSlice slice = kmt::enumerate_real_roots(g, std::max(cfg.height_cap, kmt::certification_cap(s)));
  const auto certs = kmt::certify_pairs(s, slice);
  ordered_json j{{"command", "sigma"}};
  j.update(sigma_json(s, certs));
  return {j, 0};
}

Outcome run_bounds(const RunConfig& cfg) {
  const kmt::Gcm g = load_gcm(cfg.gcm_path);
  const kmt::RingSpec ring = kmt::parse_ring_spec(cfg.ring);
  const kmt::SigmaSet s = kmt::build_sigma(g);
  const kmt::RootSlice slice = kmt::enumerate_real_roots(g, kmt::certification_cap(s));
  const auto certs = kmt::certify_pairs(s, slice);
  const kmt::BigInt m = kmt::min_ideal_index(ring);
  const kmt::BoundReport b = kmt::bound_report(g, s.sigma.size(), certs, m, kmt::unit_flags(ring));
  ordered_json j{{"command", "bounds"}, {"ring", kmt::to_string(ring)}, {"m", big(m)}};
  j.update(bound_json(b));
  return {j, b.verdict == kmt::BoundVerdict::AllBelow ? 0 : 1};
}

std::string verdict_slug(kmt::CertificateVerdict v) {
  switch (v) {
    case kmt::CertificateVerdict::Certified: return "certified";
    case kmt::CertificateVerdict::Boundary: return "boundary";
    default: return "not-certified";
  }
}

Outcome run_certify(const RunConfig& cfg) {
  const kmt::Gcm g = load_gcm(cfg.gcm_path);
  const kmt::RingSpec ring = kmt::parse_ring_spec(cfg.ring);
  const kmt::Certificate c = kmt::certify_property_T(g, ring);
  ordered_json hyps = ordered_json::array();
  for (const kmt::Hypothesis& h : c.hypotheses) hyps.push_back({{"name", h.name}, {"pass", h.pass}, {"detail", h.detail}});
  ordered_json j{{"command", "certify"},
                 {"ring", c.ring},
                 {"m", big(c.m)},
                 {"nA", c.nA ? big(*c.nA) : ordered_json(nullptr)},
                 {"hypotheses", hyps},
                 {"sigma", c.sigma ? sigma_json(*c.sigma, c.pairs) : ordered_json(nullptr)},
                 {"bound_report", c.bounds ? bound_json(*c.bounds) : ordered_json(nullptr)},
                 {"verdict", verdict_slug(c.verdict)}};
  return {j, c.verdict == kmt::CertificateVerdict::Certified ? 0 : 1};
}

Outcome verify_json(const std::string& target, ordered_json params, const kmt::Report& r) {
  ordered_json checks = ordered_json::array();
  for (const kmt::Check& c : r.checks) {
    ordered_json cj{{"name", c.name}, {"tried", c.tried}, {"failed", c.failed}, {"passed", c.passed()}};
    if (c.failed) cj["witness"] = c.witness;
    checks.push_back(cj);
  }
  ordered_json notes = ordered_json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  return {{{"command", "verify"},
           {"target", target},
           {"params", params},
           {"checks", checks},
           {"notes", notes},
           {"passed", r.passed()}},
          r.passed() ? 0 : 1};
}

Outcome run_verify(const std::string& target, const RunConfig& cfg) {
  using namespace kmt;
  if (target == "chevalley")
    return verify_json(target, {{"type", cfg.type}, {"q", cfg.q}, {"samples", cfg.samples}, {"seed", cfg.seed}},
                       chevalley_report(parse_unipotent_type(cfg.type), cfg.q, cfg.samples, cfg.seed));
  if (target == "generation")
    return verify_json(target, {{"group", cfg.group}, {"q", cfg.q}}, generation_report(cfg.group, cfg.q));
  if (target == "affine")
    return verify_json(target, {{"d", cfg.d}, {"q", cfg.q}, {"window", cfg.window}},
                       affine_pi_check(cfg.d, cfg.q, cfg.window));
  if (target == "symrep")
    return verify_json(target, {{"n", cfg.n}, {"q", cfg.q}, {"seed", cfg.seed}}, symrep_report(cfg.n, cfg.q, cfg.seed));
  if (target == "transport")
    return verify_json(target, {{"q", cfg.q}, {"samples", cfg.samples}, {"seed", cfg.seed}},
                       check_transport(cfg.q, cfg.samples, cfg.seed));
  if (target == "centrality")
    return verify_json(target, {{"type", cfg.type}}, centrality_report(parse_unipotent_type(cfg.type)));
  if (target == "quotient-b2") return verify_json(target, {{"q", cfg.q}}, quotient_b2_check(cfg.q));
  if (target == "v4") return verify_json(target, {{"q", cfg.q}}, g2_v4_conjugation_check(cfg.q).report);
  if (target == "ledger") {
    Outcome o = verify_json(target, ordered_json::object(), ledger_check());
    const LedgerSummary s = ledger_summary();
    o.body["ledger"] = {{"terms", s.terms},
                        {"total", s.total},
                        {"C", std::to_string(s.c.numerator()) + "/" + std::to_string(s.c.denominator())},
                        {"mass", std::to_string(s.mass.numerator()) + "/" + std::to_string(s.mass.denominator())}};
    return o;
  }
  throw InputError("unknown verify target '" + target + "'");
}

void print_text(const ordered_json& j, std::ostream& out, const std::string& indent = "") {
  for (const auto& [k, v] : j.items()) {
    if (v.is_object()) {
      out << indent << k << ":\n";
      print_text(v, out, indent + "  ");
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << indent << k << ":\n";
      for (const auto& e : v) {
        out << indent << "  -\n";
        print_text(e, out, indent + "    ");
      }
    } else {
      out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kac-Moody property (T) desk-scale certification toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--format", cfg.format, "Output format")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}}))
      ->default_str("json");
  app.add_option("--seed", cfg.seed, "Seed for every random draw")->default_val(0);
  app.add_option("--samples", cfg.samples, "Random samples per check")->default_val(10'000);

  const auto gcm_opt = [&](CLI::App* sub) {
    sub->add_option("--gcm", cfg.gcm_path, "GCM text file")->required();
  };
  CLI::App* classify = app.add_subcommand("classify", "Classify a GCM");
  gcm_opt(classify);
  CLI::App* roots = app.add_subcommand("roots", "Real roots up to a height cap");
  gcm_opt(roots);
  roots->add_option("--height-cap", cfg.height_cap)->default_val(12);
  CLI::App* sigma = app.add_subcommand("sigma", "Generating root set with pair certificates");
  gcm_opt(sigma);
  sigma->add_option("--pseudo", cfg.pseudo, "Index set I (1-based, comma separated)");
  sigma->add_option("--height-cap", cfg.height_cap)->default_val(12);
  CLI::App* bounds = app.add_subcommand("bounds", "Pairwise orthogonality bounds");
  gcm_opt(bounds);
  bounds->add_option("--ring", cfg.ring, "Ring spec, e.g. Z/35 or poly(Zloc!4)")->required();
  CLI::App* certify = app.add_subcommand("certify", "Assemble the full certificate");
  gcm_opt(certify);
  certify->add_option("--ring", cfg.ring, "Ring spec, e.g. Z/35 or poly(Zloc!4)")->required();

  CLI::App* verify = app.add_subcommand("verify", "Finite group, affine and Laurent-series checks");
  verify->require_subcommand(1);
  std::string target;
  const auto add_target = [&](const std::string& name, const std::string& help) {
    CLI::App* s = verify->add_subcommand(name, help);
    s->callback([&target, name] { target = name; });
    return s;
  };
  CLI::App* v_chev = add_target("chevalley", "Rank-2 unipotent engine checks");
  v_chev->add_option("--type", cfg.type)->required()->check(CLI::IsMember({"a2", "b2", "g2"}));
  v_chev->add_option("--q", cfg.q)->required();
  CLI::App* v_gen = add_target("generation", "Sigma root subgroups generate SL3 / Sp4");
  v_gen->add_option("--group", cfg.group)->required()->check(CLI::IsMember({"sl3", "sp4"}));
  v_gen->add_option("--q", cfg.q)->required();
  CLI::App* v_aff = add_target("affine", "Affine map on root subgroups");
  v_aff->add_option("--d", cfg.d)->default_val(3);
  v_aff->add_option("--q", cfg.q)->default_val(5);
  v_aff->add_option("--window", cfg.window)->default_val(6);
  CLI::App* v_sym = add_target("symrep", "Shear matrices and the symmetric-power oracle");
  v_sym->add_option("--n", cfg.n)->default_val(4);
  v_sym->add_option("--q", cfg.q)->default_val(7);
  CLI::App* v_tr = add_target("transport", "Region transport facts on Laurent 4-tuples");
  v_tr->add_option("--q", cfg.q)->required();
  CLI::App* v_cen = add_target("centrality", "Centrality in U+(B2), U+(G2)");
  v_cen->add_option("--type", cfg.type)->required()->check(CLI::IsMember({"b2", "g2"}));
  CLI::App* v_a9 = add_target("quotient-b2", "B2 relations in a quotient of U+(G2)");
  v_a9->add_option("--q", cfg.q)->default_val(5);
  CLI::App* v_v4 = add_target("v4", "Conjugation action on N/X_{2a+3b} against the 4-dim shear");
  v_v4->add_option("--q", cfg.q)->default_val(5);
  add_target("ledger", "Mass-bound bookkeeping");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Outcome out;
    if (classify->parsed()) out = run_classify(cfg);
    else if (roots->parsed()) out = run_roots(cfg);
    else if (sigma->parsed()) out = run_sigma(cfg);
    else if (bounds->parsed()) out = run_bounds(cfg);
    else if (certify->parsed()) out = run_certify(cfg);
    else out = run_verify(target, cfg);

    if (cfg.format == Format::Json)
      std::cout << out.body.dump(2) << "\n";
    else
      print_text(out.body, std::cout);
    return out.exit_code;
  } catch (const kmt::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return 1;
  }
}
