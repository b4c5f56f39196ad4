// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "rankgain/serialize.hpp"

namespace {

using rankgain::Json;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitVerification = 3;

struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const Json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) rankgain::fail(rankgain::ErrorKind::InvalidInput, "cannot open " + out_path);
  out << text;
}

rankgain::Rational json_rational(const Json& v, const char* key) {
  if (v.is_number_integer()) return rankgain::Rational(v.get<long long>());
  if (v.is_string()) return rankgain::Rational::parse(v.get<std::string>());
  rankgain::fail(rankgain::ErrorKind::InvalidInput, std::string(key) + " must be an integer or a rational string");
}

std::vector<std::uint64_t> parse_prime_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      unsigned long long v = std::stoull(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::logic_error&) {
      rankgain::fail(rankgain::ErrorKind::InvalidInput, "bad prime list entry '" + item + "'");
    }
  }
  return out;
}

struct ScanFlags {
  std::string config_path;
  std::string out;
  std::string a1, a4;
  long height = 0;
  std::uint64_t witness_bound = 0;
  std::string torsion_primes;
  unsigned threads = 0;
};

// Config file first, then any flag given on the command line.
rankgain::ScanConfig build_scan_config(const ScanFlags& f, const CLI::App& cmd, std::string& out_path) {
  rankgain::ScanConfig cfg;
  if (!f.config_path.empty()) {
    std::ifstream in(f.config_path);
    if (!in) rankgain::fail(rankgain::ErrorKind::InvalidInput, "cannot read " + f.config_path);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const Json::exception& e) {
      rankgain::fail(rankgain::ErrorKind::InvalidInput, std::string("config: ") + e.what());
    }
    if (!j.is_object()) rankgain::fail(rankgain::ErrorKind::InvalidInput, "config must be a JSON object");
    try {
      if (j.contains("a1")) cfg.a1 = json_rational(j["a1"], "a1");
      if (j.contains("a4")) cfg.a4 = json_rational(j["a4"], "a4");
      if (j.contains("s_height_max")) cfg.s_height_max = j["s_height_max"].get<long>();
      if (j.contains("witness_bound")) cfg.witness_bound = j["witness_bound"].get<std::uint64_t>();
      if (j.contains("torsion_primes")) {
        const Json& t = j["torsion_primes"];
        if (t.is_array())
          cfg.torsion_primes = t.get<std::vector<std::uint64_t>>();
        else
          cfg.torsion_prime_count = t.get<std::size_t>();
      }
      if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
      if (j.contains("output_path")) out_path = j["output_path"].get<std::string>();
    } catch (const Json::exception& e) {
      rankgain::fail(rankgain::ErrorKind::InvalidInput, std::string("config: ") + e.what());
    }
  }
  if (cmd.count("--a1")) cfg.a1 = rankgain::Rational::parse(f.a1);
  if (cmd.count("--a4")) cfg.a4 = rankgain::Rational::parse(f.a4);
  if (cmd.count("--height")) cfg.s_height_max = f.height;
  if (cmd.count("--witness-bound")) cfg.witness_bound = f.witness_bound;
  if (cmd.count("--torsion-primes")) {
    auto list = parse_prime_list(f.torsion_primes);
    if (list.size() == 1 && f.torsion_primes.find(',') == std::string::npos) {
      cfg.torsion_primes.clear();
      cfg.torsion_prime_count = list.front();
    } else {
      cfg.torsion_primes = list;
    }
  }
  if (cmd.count("--threads")) cfg.threads = f.threads;
  if (cmd.count("--out")) out_path = f.out;
  return cfg;
}

Json covering_report(long p) {
  using namespace rankgain;
  if (p < 3 || !is_prime(static_cast<std::uint64_t>(p)))
    fail(ErrorKind::InvalidInput, "p must be an odd prime");
  const auto up = static_cast<std::uint64_t>(p);
  const auto sols = solve_eq5(up);
  Json models = Json::array();
  for (auto n : sols) models.push_back(to_json(model_from_n(up, n)));

  const long genus = rh_genus(three_point_cover(p));
  if (genus != (p - 1) / 2) throw VerificationFailure("Riemann-Hurwitz genus mismatch");

  Json doc{{"schema", kSchemaVersion},
           {"kind", "covering-report"},
           {"p", p},
           {"n_solutions", sols},
           {"models", std::move(models)},
           {"genus", genus}};
  try {
    doc["quotient_genus"] = quotient_genus(p);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NoAutomorphism) throw;
    doc["quotient_genus"] = nullptr;
  }

  // Triangle curve of level m with m^2 - m + 1 = p, when one exists.
  std::optional<int> m;
  for (long k = 2; k * k - k + 1 <= p; ++k)
    if (k * k - k + 1 == p) m = static_cast<int>(k);
  if (m) {
    TriangleReport tri = triangle_checks(*m);
    PsiReport psi = psi_identities(*m);
    doc["triangle"] = to_json(tri);
    doc["psi"] = to_json(psi);
    if (!tri.all_pass() || !psi.all_pass()) {
      emit(doc, "");
      throw VerificationFailure("triangle-curve identities failed");
    }
  } else {
    doc["triangle"] = nullptr;
    doc["psi"] = nullptr;
  }
  return doc;
}

Json degree_plan(int n, long d_max) {
  using namespace rankgain;
  const DegreeSet ds = plan_degrees(n, d_max);
  const BiPoly f = sample_corner_polynomial(n);
  const bool corner = corner_check(f, n);
  Json doc = to_json(ds);
  doc["schema"] = kSchemaVersion;
  doc["kind"] = "degree-plan";
  doc["polynomial"] = f.str();

  Json plans = Json::array();
  std::optional<Rational> b;
  for (long d : ds.achievable) {
    for (int k1 = 2; predicted_degree(n, k1, 1) <= d; ++k1) {
      const long k2 = d - static_cast<long>(k1) * (n - 1);
      if (k2 < 1 || k2 >= k1) continue;
      auto plan = make_plan(f, n, k1, static_cast<int>(k2));
      if (!plan) throw VerificationFailure("no specialization found for d = " + std::to_string(d));
      if (!b) b = plan->b;
      plans.push_back(Json{{"d", d}, {"k1", k1}, {"k2", k2}, {"b", to_json(plan->b)}});
      break;
    }
  }
  const bool law = b ? degree_law_holds(f, n, 6, *b) : true;
  doc["plans"] = std::move(plans);
  doc["b"] = b ? to_json(*b) : Json(nullptr);
  doc["checks"] = Json{{"corner", corner}, {"degree_law", law}};
  if (!corner || !law) {
    emit(doc, "");
    throw VerificationFailure("degree law check failed");
  }
  return doc;
}

Json modular_verify(int order) {
  using namespace rankgain;
  EtaIdentityReport r = verify_eta_identity(order);
  Json doc = to_json(r);
  if (!r.all_pass()) {
    emit(doc, "");
    throw VerificationFailure("modular identity failed");
  }
  return doc;
}

Json fermat_report(unsigned p, long bound, unsigned threads) {
  using namespace rankgain;
  FermatResult r = fermat_search(p, bound, threads);
  Json sols = Json::array();
  for (const auto& t : r.solutions)
    if (!t.trivial()) sols.push_back(to_json(t));
  Json doc{{"schema", kSchemaVersion},
           {"kind", "fermat-search"},
           {"p", r.p},
           {"bound", r.bound},
           {"solutions_total", r.solutions.size()},
           {"nontrivial_count", r.nontrivial_count()},
           {"nontrivial", std::move(sols)}};
  if (r.nontrivial_count() != 0) {
    emit(doc, "");
    throw VerificationFailure("nontrivial solution found");
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact certificates for rank growth in cyclic cubic extensions"};
  app.require_subcommand(1);

  ScanFlags scan;
  auto* scan_cmd = app.add_subcommand("family-scan", "scan fibers of the one-parameter family");
  scan_cmd->add_option("--config", scan.config_path, "flat JSON config file");
  scan_cmd->add_option("--a1", scan.a1, "rational a1");
  scan_cmd->add_option("--a4", scan.a4, "rational a4");
  scan_cmd->add_option("--height", scan.height, "maximum height of s");
  scan_cmd->add_option("--witness-bound", scan.witness_bound, "prime bound for disjointness witnesses");
  scan_cmd->add_option("--torsion-primes", scan.torsion_primes, "count, or comma-separated prime list");
  scan_cmd->add_option("--threads", scan.threads, "worker threads, 0 = all cores");
  scan_cmd->add_option("--out", scan.out, "output path");

  long cov_p = 0;
  std::string cov_out;
  auto* cov_cmd = app.add_subcommand("covering-report", "Galois covering data for a prime p");
  cov_cmd->add_option("--p", cov_p, "prime")->required();
  cov_cmd->add_option("--out", cov_out, "output path");

  int plan_n = 0;
  long plan_dmax = 0;
  std::string plan_out;
  auto* plan_cmd = app.add_subcommand("degree-plan", "achievable extension degrees");
  plan_cmd->add_option("--n", plan_n, "curve degree")->required();
  plan_cmd->add_option("--dmax", plan_dmax, "largest degree")->required();
  plan_cmd->add_option("--out", plan_out, "output path");

  int mod_order = 16;
  std::string mod_out;
  auto* mod_cmd = app.add_subcommand("modular-verify", "check the eta-quotient identities");
  mod_cmd->add_option("--order", mod_order, "truncation order");
  mod_cmd->add_option("--out", mod_out, "output path");

  unsigned fer_p = 3;
  long fer_bound = 100;
  unsigned fer_threads = 0;
  std::string fer_out;
  auto* fer_cmd = app.add_subcommand("fermat-search", "bounded search for A^p = B^p + C^p");
  fer_cmd->add_option("--p", fer_p, "odd exponent")->required();
  fer_cmd->add_option("--bound", fer_bound, "bound on |A|, |B|, |C|")->required();
  fer_cmd->add_option("--threads", fer_threads, "worker threads, 0 = all cores");
  fer_cmd->add_option("--out", fer_out, "output path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*scan_cmd) {
      std::string out_path;
      rankgain::ScanConfig cfg = build_scan_config(scan, *scan_cmd, out_path);
      emit(rankgain::to_json(rankgain::run_family_scan(cfg)), out_path);
    } else if (*cov_cmd) {
      emit(covering_report(cov_p), cov_out);
    } else if (*plan_cmd) {
      emit(degree_plan(plan_n, plan_dmax), plan_out);
    } else if (*mod_cmd) {
      emit(modular_verify(mod_order), mod_out);
    } else if (*fer_cmd) {
      unsigned threads = fer_threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : fer_threads;
      emit(fermat_report(fer_p, fer_bound, threads), fer_out);
    }
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return kExitVerification;
  } catch (const rankgain::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == rankgain::ErrorKind::IdentityFailure ? kExitVerification : kExitInvalid;
  }
  return kExitOk;
}
