// Copyright 2026 The nihobent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// nihobent: build, check and correlate Niho bent functions.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nihobent/boolfn.hpp"
#include "nihobent/class_h.hpp"
#include "nihobent/field.hpp"
#include "nihobent/io.hpp"
#include "nihobent/niho.hpp"
#include "nihobent/ovals.hpp"
#include "nihobent/parallel.hpp"
#include "nihobent/subfield.hpp"

namespace nb = nihobent;
using nb::Elem;
using nb::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Common {
  bool json = false;
  bool timing = false;
  std::string modulus;
};

struct Output {
  Json report;
  int exit_code = kExitOk;
};

nb::Field make_field(int degree, const std::string& modulus) {
  if (degree < 1 || degree > nb::kMaxDegree) {
    nb::fail(nb::ErrorKind::kOutOfRange,
             "field degree must be in 1.." + std::to_string(nb::kMaxDegree));
  }
  if (modulus.empty()) return nb::Field(degree);
  return nb::Field(degree, static_cast<std::uint32_t>(nb::parse_hex(modulus)));
}

nb::FieldTower make_tower(int m, const std::string& modulus) {
  if (m < 1 || 2 * m > nb::kMaxDegree) {
    nb::fail(nb::ErrorKind::kOutOfRange,
             "m must be in 1.." + std::to_string(nb::kMaxDegree / 2));
  }
  return nb::FieldTower(nb::Field(m), make_field(2 * m, modulus));
}

Elem element(const nb::Field& field, const std::string& hex, const char* what) {
  const std::uint64_t v = nb::parse_hex(hex);
  if (v >= field.size()) {
    nb::fail(nb::ErrorKind::kOutOfRange, std::string(what) + " " + nb::to_hex(v) +
                                             " is not in " + field.describe());
  }
  return static_cast<Elem>(v);
}

// ---- build ----

struct BuildArgs {
  std::string family;
  int m = 0;
  std::string a;
  std::string b;
  int r = 0;
  bool strict = false;
  std::string out;
};

Output run_build(const BuildArgs& args, const Common& common) {
  const nb::Family family = nb::parse_family(args.family);
  const nb::FieldTower tower = make_tower(args.m, common.modulus);
  const nb::Field& big = tower.big();
  const std::uint64_t q = std::uint64_t{1} << args.m;

  const Elem b = args.b.empty() ? 1 : element(big, args.b, "b");
  Elem a = 0;
  if (!args.a.empty()) {
    a = element(big, args.a, "a");
  } else if (family == nb::Family::kQuadratic) {
    a = 1;
  } else if (family == nb::Family::kLeanderKholosha) {
    for (Elem x = 1; x < big.size(); ++x) {
      if ((x ^ big.frobenius(x, args.m)) == 1) {
        a = x;
        break;
      }
    }
  } else {
    a = big.pow(b, q + 1);
  }
  int r = args.r;
  if (family == nb::Family::kLeanderKholosha && r == 0) {
    r = 2;
    while (nb::gcd_u64(r, args.m) != 1) ++r;
  }

  const nb::FamilySpec spec{family, args.m, nb::FieldElement(big, a),
                            nb::FieldElement(big, b), r};
  const nb::BuildOptions options{args.strict};
  const nb::TraceForm form = nb::build_bent(spec, options);
  const nb::TruthTable tt = nb::eval_trace_form(form);
  const bool bent = nb::is_bent(tt);
  const int degree = nb::anf_degree(tt);
  const nb::FamilyReport fr = nb::family_report(spec, options);

  Json warnings = Json::array();
  if (fr.fifth_power_condition && fr.fifth_power && !*fr.fifth_power) {
    warnings.push_back("b is not a fifth power; outside the original theorem");
  }
  if (!args.out.empty()) nb::write_truth_table(tt, args.out);

  Output out;
  out.report = Json{{"command", "build"},
                    {"inputs", nb::to_json(spec)},
                    {"field", nb::to_json(big)},
                    {"trace_form", nb::to_json(form)},
                    {"family_report", nb::to_json(fr)},
                    {"bent", bent},
                    {"degree", degree},
                    {"weight", tt.weight()},
                    {"warnings", warnings}};
  if (!args.out.empty()) out.report["truth_table_file"] = args.out;
  bool claims_hold = bent;
  if (fr.expected_degree && *fr.expected_degree != degree) claims_hold = false;
  out.report["verdict"] = claims_hold ? "pass" : "fail";
  out.exit_code = claims_hold ? kExitOk : kExitVerification;
  return out;
}

// ---- check ----

struct CheckArgs {
  std::string file;
  bool spectrum = false;
};

Output run_check(const CheckArgs& args, const Common& common) {
  const nb::TruthTable tt = nb::read_truth_table(args.file);
  const nb::Field field = make_field(tt.n, common.modulus);
  const nb::WalshSpectrum ws = nb::walsh_spectrum(tt, field);

  std::map<std::int64_t, std::uint64_t> histogram;
  for (std::int64_t v : ws.values) ++histogram[v];
  Json summary = Json::array();
  for (const auto& [value, count] : histogram) {
    summary.push_back(Json{{"value", value}, {"count", count}});
  }

  Output out;
  out.report = Json{{"command", "check"},
                    {"inputs", Json{{"file", args.file}, {"n", tt.n}}},
                    {"field", nb::to_json(field)},
                    {"bent", tt.n % 2 == 0 && nb::is_bent(ws)},
                    {"degree", nb::anf_degree(tt)},
                    {"weight", tt.weight()},
                    {"spectrum_summary", summary}};
  out.report["niho"] = tt.n % 2 == 0 && tt.n > 0
                           ? Json(nb::niho_restriction_check(tt, field, tt.n / 2))
                           : Json(nullptr);
  if (args.spectrum) out.report["spectrum"] = nb::to_json(ws);
  return out;
}

// ---- correspond ----

struct CorrespondArgs {
  std::string family;
  int m = 0;
  std::string b;
  std::string beta;
  std::string u;
};

Output run_correspond(const CorrespondArgs& args, const Common& common) {
  const nb::FieldTower tower = make_tower(args.m, common.modulus);
  const nb::Field& big = tower.big();
  std::vector<nb::Correspondence> records;
  Json inputs{{"family", args.family}, {"m", args.m}};

  if (args.family == "subiaco") {
    const nb::UnitCircleCase which =
        args.u.empty() ? nb::default_unit_circle_case(args.m)
                       : nb::UnitCircleCase::parse(args.u);
    inputs["u"] = which.to_string();
    std::vector<Elem> bs;
    if (!args.b.empty()) {
      bs.push_back(element(big, args.b, "b"));
    } else if (args.m % 4 == 0) {
      bs.push_back(1);  // the only b with a known correspondence here
    } else {
      for (Elem b = 1; b < big.size(); ++b) bs.push_back(b);
    }
    inputs["b"] = args.b.empty() ? Json("sweep") : Json(nb::to_hex(bs[0]));
    records = nb::parallel_map<nb::Correspondence>(
        bs.size(),
        [&](std::size_t i) { return nb::correspond_subiaco(tower, bs[i], which); });
  } else if (args.family == "adelaide") {
    std::vector<Elem> betas;
    if (!args.beta.empty()) {
      betas.push_back(element(big, args.beta, "beta"));
    } else {
      betas = nb::adelaide_admissible_betas(tower.embedding);
    }
    inputs["beta"] =
        args.beta.empty() ? Json("sweep") : Json(nb::to_hex(betas[0]));
    records = nb::parallel_map<nb::Correspondence>(
        betas.size(),
        [&](std::size_t i) { return nb::correspond_adelaide(tower, betas[i]); });
  } else {
    nb::fail(nb::ErrorKind::kInvalidArgument,
             "family must be subiaco or adelaide, got '" + args.family + "'");
  }

  Output out;
  Json list = Json::array();
  bool all = true;
  for (const auto& c : records) {
    list.push_back(nb::to_json(c));
    all = all && c.verified;
  }
  out.report = Json{{"command", "correspond"},
                    {"inputs", inputs},
                    {"field", nb::to_json(big)},
                    {"records", list},
                    {"verified_count",
                     std::count_if(records.begin(), records.end(),
                                   [](const auto& c) { return c.verified; })},
                    {"verdict", all ? "pass" : "fail"}};
  out.exit_code = all ? kExitOk : kExitVerification;
  return out;
}

// ---- opoly ----

struct OpolyArgs {
  std::string source;
  int m = 0;
  std::string kase;
  std::string w;
  std::string s;
  std::string beta;
  int k = 1;
  std::string file;
};

Json opoly_record(const nb::MappingTable& G, Json params) {
  const nb::OPolyReport r = nb::opolynomial_report(G);
  Json rec{{"params", std::move(params)},
           {"is_opoly", r.is_opolynomial},
           {"permutation", r.is_permutation}};
  if (G.values.size() >= 2 && G.values[0] != G.values[1]) {
    rec["normalized"] = nb::to_json(nb::opoly_normalize(G));
  } else {
    rec["normalized"] = nullptr;
  }
  return rec;
}

std::vector<Elem> s_values(const nb::EvalDomain& domain, const std::string& s) {
  std::vector<Elem> out;
  if (!s.empty()) {
    out.push_back(domain.lift(element(domain.small(), s, "s")));
  } else {
    for (Elem z = 0; z < domain.small().size(); ++z) out.push_back(domain.lift(z));
  }
  return out;
}

Output run_opoly(const OpolyArgs& args, const Common& common) {
  Json inputs{{"source", args.source}, {"m", args.m}};
  Json records = Json::array();
  bool claimed = true;

  if (args.source == "file") {
    std::ifstream in(args.file);
    if (!in) nb::fail(nb::ErrorKind::kInvalidArgument, "cannot read " + args.file);
    Json j;
    try {
      in >> j;
    } catch (const Json::exception& e) {
      nb::fail(nb::ErrorKind::kInvalidArgument,
               std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_array() || j.empty() || (j.size() & (j.size() - 1)) != 0) {
      nb::fail(nb::ErrorKind::kInvalidArgument,
               "mapping table must have 2^m entries");
    }
    int m = 0;
    while ((std::size_t{1} << m) < j.size()) ++m;
    const nb::Field field = make_field(m, common.modulus);
    inputs["m"] = m;
    inputs["file"] = args.file;
    records.push_back(opoly_record(nb::mapping_table_from_json(j, field),
                                   Json{{"member", "file"}}));
    claimed = false;
  } else if (args.source == "frobenius") {
    const nb::Field field = make_field(args.m, common.modulus);
    if (args.k < 0) nb::fail(nb::ErrorKind::kOutOfRange, "k must be >= 0");
    nb::MappingTable G{field, {}};
    for (Elem z = 0; z < field.size(); ++z) {
      G.values.push_back(field.frobenius(z, args.k % args.m));
    }
    inputs["k"] = args.k;
    records.push_back(opoly_record(G, Json{{"member", "z^{2^k}"}}));
    claimed = nb::gcd_u64(args.k, args.m) == 1;
  } else if (args.source == "subiaco") {
    const nb::Field field = make_field(args.m, common.modulus);
    const nb::EvalDomain domain = nb::EvalDomain::standalone(field);
    nb::SubiacoCase kase =
        args.m % 2 == 1 ? nb::SubiacoCase::kMOdd
        : args.m % 4 == 2 ? nb::SubiacoCase::kMTwoMod4
                          : nb::SubiacoCase::kGeneral;
    if (!args.kase.empty()) kase = nb::parse_subiaco_case(args.kase);
    std::vector<Elem> ws;
    if (!args.w.empty()) {
      ws.push_back(element(field, args.w, "w"));
    } else {
      ws = nb::subiaco_admissible_w(domain, kase);
      if (ws.empty()) {
        nb::fail(nb::ErrorKind::kParity,
                 "case " + std::string(nb::to_string(kase)) +
                     " has no admissible w at this m");
      }
    }
    inputs["case"] = std::string(nb::to_string(kase));
    inputs["w"] = args.w.empty() ? Json("sweep") : Json(args.w);
    inputs["s"] = args.s.empty() ? Json("sweep") : Json(args.s);
    for (Elem w : ws) {
      const nb::SubiacoParams p = nb::make_subiaco_params(domain, kase, w);
      const Json base{{"w", nb::to_hex(w)}, {"e", nb::to_hex(p.e)}};
      Json g_params = base;
      g_params["member"] = "g";
      records.push_back(opoly_record(nb::subiaco_fg(p).g, g_params));
      const std::vector<Elem> ss = s_values(domain, args.s);
      const auto tables = nb::parallel_map<nb::MappingTable>(
          ss.size(), [&](std::size_t i) { return nb::subiaco_fs(p, ss[i]); });
      for (std::size_t i = 0; i < ss.size(); ++i) {
        Json params = base;
        params["member"] = "f_s";
        params["s"] = nb::to_hex(ss[i]);
        records.push_back(opoly_record(tables[i], params));
      }
    }
  } else if (args.source == "adelaide") {
    const nb::FieldTower tower = make_tower(args.m, common.modulus);
    std::vector<Elem> betas;
    if (!args.beta.empty()) {
      betas.push_back(element(tower.big(), args.beta, "beta"));
    } else {
      betas = nb::adelaide_admissible_betas(tower.embedding);
    }
    inputs["beta"] = args.beta.empty() ? Json("sweep") : Json(args.beta);
    inputs["s"] = args.s.empty() ? Json("sweep") : Json(args.s);
    for (Elem beta : betas) {
      const nb::AdelaideParams p = nb::make_adelaide_params(tower.embedding, beta);
      const Json base{{"beta", nb::to_hex(beta)},
                      {"e", nb::to_hex(p.domain.project(p.e))}};
      Json g_params = base;
      g_params["member"] = "g";
      records.push_back(opoly_record(nb::adelaide_fg(p).g, g_params));
      const std::vector<Elem> ss = s_values(p.domain, args.s);
      const auto tables = nb::parallel_map<nb::MappingTable>(
          ss.size(), [&](std::size_t i) { return nb::adelaide_fs(p, ss[i]); });
      for (std::size_t i = 0; i < ss.size(); ++i) {
        Json params = base;
        params["member"] = "f_s";
        params["s"] = nb::to_hex(p.domain.project(ss[i]));
        records.push_back(opoly_record(tables[i], params));
      }
    }
  } else {
    nb::fail(nb::ErrorKind::kInvalidArgument,
             "source must be subiaco, adelaide, frobenius or file");
  }

  bool all = true;
  for (const Json& r : records) all = all && r["is_opoly"].get<bool>();
  Output out;
  out.report = Json{{"command", "opoly"},
                    {"inputs", inputs},
                    {"records", records},
                    {"claimed", claimed}};
  out.report["verdict"] = !claimed ? "n/a" : all ? "pass" : "fail";
  out.exit_code = claimed && !all ? kExitVerification : kExitOk;
  return out;
}

// ---- text rendering ----

std::string text_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void print_text(const Json& report) {
  std::ostringstream os;
  const std::string command = report["command"];
  os << command;
  for (const auto& [k, v] : report["inputs"].items()) os << " " << k << "=" << text_of(v);
  os << "\n";
  if (command == "build" || command == "check") {
    os << "bent: " << text_of(report["bent"]) << "\n";
    os << "degree: " << text_of(report["degree"]) << "\n";
    if (report.contains("niho")) os << "niho: " << text_of(report["niho"]) << "\n";
    for (const auto& w : report.value("warnings", Json::array())) {
      os << "warning: " << text_of(w) << "\n";
    }
    if (report.contains("spectrum_summary")) {
      for (const auto& e : report["spectrum_summary"]) {
        os << "walsh " << e["value"] << " x" << e["count"] << "\n";
      }
    }
  } else if (command == "correspond") {
    for (const auto& r : report["records"]) {
      os << r["inputs"].dump() << " branch=" << text_of(r["branch"])
         << " s=" << text_of(r["s"]) << " c0=" << text_of(r["c0"])
         << " c1=" << text_of(r["c1"]) << " verified=" << r["verified"] << "\n";
    }
  } else if (command == "opoly") {
    for (const auto& r : report["records"]) {
      os << r["params"].dump() << " is_opoly=" << r["is_opoly"]
         << " permutation=" << r["permutation"] << "\n";
    }
  }
  if (report.contains("verdict")) os << "verdict: " << text_of(report["verdict"]) << "\n";
  if (report.contains("timing_ms")) os << "timing_ms: " << report["timing_ms"] << "\n";
  std::cout << os.str();
}

int exit_code_for(const nb::Error& e) {
  return e.kind() == nb::ErrorKind::kInternal ? kExitInternal : kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Niho bent functions and their o-polynomials"};
  app.require_subcommand(1);
  Common common;
  app.add_flag("--json", common.json, "Emit the JSON report");
  app.add_flag("--timing", common.timing, "Include wall-clock time");
  app.add_option("--modulus", common.modulus,
                 "Reduction polynomial of the ambient field (hex)");

  BuildArgs build;
  CLI::App* build_cmd = app.add_subcommand("build", "Construct a bent function");
  build_cmd->add_option("--family", build.family,
                        "quadratic|binomial3|binomial4|binomial6|"
                        "leander-kholosha|adelaide")
      ->required();
  build_cmd->add_option("--m", build.m, "Half the number of variables")->required();
  build_cmd->add_option("--a", build.a, "Coefficient a (hex)");
  build_cmd->add_option("--b", build.b, "Coefficient b (hex)");
  build_cmd->add_option("--r", build.r, "Leander-Kholosha parameter");
  build_cmd->add_flag("--strict", build.strict,
                      "Require b to be a fifth power where relevant");
  build_cmd->add_option("--out", build.out, "Write the truth table here");

  CheckArgs check;
  CLI::App* check_cmd = app.add_subcommand("check", "Analyze a truth table file");
  check_cmd->add_option("file", check.file, "Truth table file")->required();
  check_cmd->add_flag("--spectrum", check.spectrum, "Include the full spectrum");

  CorrespondArgs corr;
  CLI::App* corr_cmd =
      app.add_subcommand("correspond", "Match extracted G to a catalog o-polynomial");
  corr_cmd->add_option("family", corr.family, "subiaco|adelaide")->required();
  corr_cmd->add_option("--m", corr.m, "Subfield degree")->required();
  corr_cmd->add_option("--b", corr.b, "Coefficient b (hex); sweep if omitted");
  corr_cmd->add_option("--beta", corr.beta, "Adelaide beta (hex); sweep if omitted");
  corr_cmd->add_option("--u", corr.u, "cube | fifth:j | general:i");

  OpolyArgs opoly;
  CLI::App* opoly_cmd = app.add_subcommand("opoly", "Test the o-polynomial property");
  opoly_cmd->add_option("--source", opoly.source, "subiaco|adelaide|frobenius|file")
      ->required();
  opoly_cmd->add_option("--m", opoly.m, "Field degree");
  opoly_cmd->add_option("--case", opoly.kase, "Subiaco case i|ii|iii");
  opoly_cmd->add_option("--w", opoly.w, "Subiaco w (hex); sweep if omitted");
  opoly_cmd->add_option("--s", opoly.s, "Member parameter s (hex); sweep if omitted");
  opoly_cmd->add_option("--beta", opoly.beta, "Adelaide beta (hex); sweep if omitted");
  opoly_cmd->add_option("--k", opoly.k, "Frobenius exponent z^{2^k}");
  opoly_cmd->add_option("--file", opoly.file, "JSON array of hex values");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Output out;
  try {
    nb::threads_from_env();
    if (*build_cmd) {
      out = run_build(build, common);
    } else if (*check_cmd) {
      out = run_check(check, common);
    } else if (*corr_cmd) {
      out = run_correspond(corr, common);
    } else {
      if (opoly.source != "file" && opoly.m <= 0) {
        nb::fail(nb::ErrorKind::kInvalidArgument, "--m is required");
      }
      out = run_opoly(opoly, common);
    }
  } catch (const nb::Error& e) {
    std::cerr << "error (" << nb::to_string(e.kind()) << "): " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInternal;
  }
  if (common.timing) {
    out.report["timing_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
  }
  if (common.json) {
    std::cout << out.report.dump(2) << "\n";
  } else {
    print_text(out.report);
  }
  return out.exit_code;
}
