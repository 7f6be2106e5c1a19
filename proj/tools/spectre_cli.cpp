#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <sstream>

#include "spectre/classify.hpp"
#include "spectre/errors.hpp"
#include "spectre/io.hpp"
#include "spectre/joins.hpp"
#include "spectre/newton_spectrum.hpp"
#include "spectre/nonisolated.hpp"
#include "spectre/schoen.hpp"
#include "spectre/weighted.hpp"

using namespace spectre;
using nlohmann::ordered_json;

namespace {

constexpr int kSchemaVersion = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string text;
  ordered_json json;
  bool ok = true;
};

ordered_json to_json(const MixedSpectrum& s) {
  ordered_json a = ordered_json::array();
  for (const auto& [k, m] : s.entries()) a.push_back({{"alpha", to_string(k.first)}, {"weight", k.second}, {"mult", m}});
  return a;
}

ordered_json to_json(const Spectrum& s) {
  ordered_json a = ordered_json::array();
  for (const auto& [x, m] : s.entries()) a.push_back({{"alpha", to_string(x)}, {"mult", m}});
  return a;
}

std::string load(const std::string& path) {
  try {
    return read_file(path);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
}

SpecFile load_spec(const std::string& path) { return parse_spec(load(path)); }

MixedSpectrum load_mixed(const std::string& path) {
  SpecFile f = load_spec(path);
  if (!f.mixed) throw UsageError(path + " holds a plain spectrum; this command needs weights");
  return f.mixed_spectrum;
}

Output spectrum_output(const MixedSpectrum& s, int n, const std::string& route) {
  Output o;
  o.text = format_spec(s, n);
  o.json = {{"route", route}, {"n", n}, {"mixed", true}, {"mu", s.total()}, {"spectrum", to_json(s)}};
  return o;
}

Output spectrum_output(const Spectrum& s, int n, const std::string& route) {
  Output o;
  o.text = format_spec(s, n);
  o.json = {{"route", route}, {"n", n}, {"mixed", false}, {"mu", s.total()}, {"spectrum", to_json(s)}};
  return o;
}

Output newton_spectrum_output(const NewtonData& nd, std::string route) {
  StructureFlags fl = structure_flags(nd);
  if (route == "auto") route = fl.simple ? "danilov" : (fl.regular_simplicial && nd.n() <= 2 ? "strings" : "brieskorn");
  if (route == "danilov") return spectrum_output(vanishing_table(nd).to_mixed(), nd.n(), route);
  if (route == "strings") return spectrum_output(newton_mixed_spectrum_nonsimple(nd), nd.n(), route);
  return spectrum_output(brieskorn_poincare(nd), nd.n(), route);
}

void add_line(std::ostringstream& os, const std::string& k, const std::string& v) { os << k << ": " << v << "\n"; }

std::string yes(bool b) { return b ? "true" : "false"; }

Output invariants_output(int n, const MixedSpectrum& s) {
  InvariantReport r = invariants(n, s);
  Output o;
  std::ostringstream os;
  add_line(os, "sigma_min", to_string(r.sigma_min));
  add_line(os, "lct", to_string(r.lct));
  add_line(os, "period_exponent", to_string(r.period_exponent));
  add_line(os, "lambda_f", std::to_string(r.lambda_f));
  add_line(os, "max_k_lc", std::to_string(r.max_k_lc));
  add_line(os, "du_bois", yes(r.du_bois));
  add_line(os, "rational", yes(r.rational));
  add_line(os, "gen_level_bound", std::to_string(r.gen_level_bound));
  std::string jumps;
  ordered_json jj = ordered_json::array();
  for (const auto& a : r.jumping_in_unit) {
    jumps += (jumps.empty() ? "" : " ") + to_string(a);
    jj.push_back(to_string(a));
  }
  add_line(os, "jumping_in_unit", jumps);
  o.text = os.str();
  o.json = {{"n", n},
            {"sigma_min", to_string(r.sigma_min)},
            {"lct", to_string(r.lct)},
            {"period_exponent", to_string(r.period_exponent)},
            {"lambda_f", r.lambda_f},
            {"max_k_lc", r.max_k_lc},
            {"du_bois", r.du_bois},
            {"rational", r.rational},
            {"gen_level_bound", r.gen_level_bound},
            {"jumping_in_unit", jj}};
  return o;
}

NewtonData load_newton(const std::string& path) { return build_newton(parse_poly(load(path))); }

Output table_check_output(const std::string& which, const std::string& data) {
  Output o;
  std::ostringstream os;
  ordered_json rows = ordered_json::array();
  long pass = 0, total = 0;
  if (which == "tcy") {
    auto checks = check_cy_rows(data.empty() ? cy_rows() : parse_cy_table(load(data)));
    for (const auto& c : checks) {
      ++total;
      pass += c.ok;
      os << "table " << c.table << " yonemura " << c.yonemura << ": " << (c.ok ? "pass" : "FAIL") << "\n";
      for (const auto& f : c.failures) os << "  " << f << "\n";
      rows.push_back({{"table", c.table}, {"yonemura", c.yonemura}, {"ok", c.ok}, {"failures", c.failures}});
    }
  } else if (which == "tx") {
    SlcReport rep = check_slc_rows(data.empty() ? slc_rows() : parse_slc_table(load(data)));
    for (const auto& c : rep.rows) {
      ++total;
      pass += c.ok;
      os << c.symbol << " (" << c.instances << " instances): " << (c.ok ? "pass" : "FAIL") << "\n";
      for (const auto& f : c.failures) os << "  " << f << "\n";
      rows.push_back({{"symbol", c.symbol}, {"instances", c.instances}, {"ok", c.ok}, {"failures", c.failures}});
    }
  } else {
    throw UsageError("tables: expected tcy or tx, got '" + which + "'");
  }
  os << pass << "/" << total << " rows pass\n";
  o.text = os.str();
  o.json = {{"table", which}, {"passed", pass}, {"total", total}, {"rows", rows}};
  o.ok = pass == total;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of hypersurface singularities"};
  app.require_subcommand(1);
  std::string format = "text", output;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("-o,--output", output, "Write the result to this file instead of stdout");

  auto* sp = app.add_subcommand("spectrum", "Mixed spectrum from weights or a Newton polyhedron");
  std::string qh, newton_file, route = "auto";
  auto* sp_qh = sp->add_option("--qh", qh, "Weights u1/v1,u2/v2,...");
  auto* sp_nw = sp->add_option("--newton", newton_file, "Polynomial file (.poly)");
  sp->add_option("--route", route, "Newton route")->check(CLI::IsMember({"danilov", "brieskorn", "strings", "auto"}));
  sp_qh->excludes(sp_nw);

  auto* jn = app.add_subcommand("join", "Spectrum of f (+) g");
  std::string spec_a, spec_b;
  jn->add_option("A", spec_a, "First .spec")->required();
  jn->add_option("B", spec_b, "Second .spec")->required();

  auto* su = app.add_subcommand("suspend", "Join with z^r");
  int susp_r = 0;
  std::string susp_file;
  su->add_option("--r", susp_r, "Exponent r >= 2")->required();
  su->add_option("FILE", susp_file, ".spec file")->required();

  auto* cl = app.add_subcommand("classify", "Invariants from a spectrum or a Newton polyhedron");
  std::string cl_file, cl_newton;
  int cl_n = -1;
  auto* cl_f = cl->add_option("FILE", cl_file, ".spec file");
  auto* cl_nw = cl->add_option("--newton", cl_newton, "Polynomial file (.poly)");
  cl->add_option("--n", cl_n, "Dimension n when the .spec file has no '# n=' line");
  cl_f->excludes(cl_nw);

  auto* ku = app.add_subcommand("kulikov", "Kulikov type from a Newton polyhedron");
  std::string ku_newton;
  ku->add_option("--newton", ku_newton, "Polynomial file (.poly)")->required();

  auto* jk = app.add_subcommand("jkinf", "Mixed spectrum of J_{kappa,infty}");
  long kappa = 0;
  bool jk_pipeline = false;
  jk->add_option("--kappa", kappa, "kappa >= 1")->required();
  jk->add_flag("--pipeline", jk_pipeline, "Also rerun the SSS pipeline and compare");

  auto* ss = app.add_subcommand("sss", "SSS difference for a one-dimensional singular locus");
  std::string iso_file, branch_file, sigma1_file;
  long sss_r = 0;
  ss->add_option("--iso", iso_file, "Mixed spectrum of f + g^r (.spec)")->required();
  ss->add_option("--branches", branch_file, "Branch data (.json)")->required();
  ss->add_option("--r", sss_r, "r > r_frak")->required();
  ss->add_option("--sigma1", sigma1_file, "sigma^1 (.spec); enables sigma^2");

  auto* sc = app.add_subcommand("schoen", "Rank of evaluation at the nodes of a hypersurface in P^{2m}");
  int sc_m = 0;
  long sc_d = 0;
  std::string nodes_file, verify_file;
  bool certify = false, emit_dwork = false;
  sc->add_option("--m", sc_m, "Ambient P^{2m}");
  sc->add_option("--degree", sc_d, "Degree d");
  sc->add_option("--nodes", nodes_file, "Nodes CSV");
  sc->add_option("--verify", verify_file, "Polynomial file F; check every node is singular on F = 0");
  sc->add_flag("--certify", certify, "Always run the exact cyclotomic elimination");
  sc->add_flag("--emit-dwork", emit_dwork, "Print the Dwork quintic node set as CSV");

  auto* tb = app.add_subcommand("tables", "Shipped datasets");
  std::string tb_check, tb_emit, tb_data;
  auto* tb_c = tb->add_option("--check", tb_check, "tcy or tx");
  auto* tb_e = tb->add_option("--emit", tb_emit, "tcy or tx");
  tb->add_option("--data", tb_data, "CSV to check instead of the built-in data");
  tb_c->excludes(tb_e);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    Output out;
    std::string command = app.get_subcommands().front()->get_name();
    if (*sp) {
      if (!qh.empty()) {
        WeightVector w = WeightVector::parse(qh);
        out = spectrum_output(qh_spectrum(w), w.n(), "qh");
      } else if (!newton_file.empty()) {
        out = newton_spectrum_output(load_newton(newton_file), route);
      } else {
        throw UsageError("spectrum: give --qh or --newton");
      }
    } else if (*jn) {
      SpecFile a = load_spec(spec_a), b = load_spec(spec_b);
      if (!a.mixed || !b.mixed) throw UsageError("join needs mixed spectra");
      std::optional<int> n;
      if (a.n && b.n) n = *a.n + *b.n + 1;
      MixedSpectrum s = join(a.mixed_spectrum, b.mixed_spectrum);
      out.text = format_spec(s, n);
      out.json = {{"spectrum", to_json(s)}, {"mu", s.total()}};
      if (n) out.json["n"] = *n;
    } else if (*su) {
      SpecFile a = load_spec(susp_file);
      if (!a.mixed) throw UsageError("suspend needs a mixed spectrum");
      std::optional<int> n;
      if (a.n) n = *a.n + 1;
      MixedSpectrum s = suspend(a.mixed_spectrum, susp_r);
      out.text = format_spec(s, n);
      out.json = {{"spectrum", to_json(s)}, {"mu", s.total()}};
      if (n) out.json["n"] = *n;
    } else if (*cl) {
      if (!cl_newton.empty()) {
        NewtonData nd = load_newton(cl_newton);
        Output sp_out = newton_spectrum_output(nd, "auto");
        if (!sp_out.json["mixed"].get<bool>()) throw DomainError("classify needs a mixed spectrum; Newton data gives only the spectrum");
        MixedSpectrum s = parse_spec(sp_out.text).mixed_spectrum;
        out = invariants_output(nd.n(), s);
        LcTests lc = newton_lc_tests(nd);
        std::ostringstream os;
        add_line(os, "newton_lc", yes(lc.lc));
        add_line(os, "newton_rational", yes(lc.rational));
        out.text += os.str();
        out.json["newton_lc"] = lc.lc;
        out.json["newton_rational"] = lc.rational;
        out.json["route"] = sp_out.json["route"];
      } else if (!cl_file.empty()) {
        SpecFile f = load_spec(cl_file);
        if (!f.mixed) throw UsageError("classify needs a mixed spectrum");
        int n = cl_n >= 0 ? cl_n : (f.n ? *f.n : -1);
        if (n < 0) throw UsageError("classify: give --n or a '# n=' line in the .spec file");
        out = invariants_output(n, f.mixed_spectrum);
      } else {
        throw UsageError("classify: give a .spec file or --newton");
      }
    } else if (*ku) {
      KulikovReport k = kulikov_type(load_newton(ku_newton));
      out.text = "type: " + std::to_string(k.type) + "\nwitness: " + k.witness + "\n";
      out.json = {{"type", k.type}, {"witness", k.witness}};
    } else if (*jk) {
      MixedSpectrum s = jk_infinity(kappa);
      out.text = format_spec(s, 2);
      out.json = {{"kappa", kappa}, {"spectrum", to_json(s)}, {"tss_order", tss_order(s)}, {"pg_bound", jk_pg_bound({kappa})}};
      if (jk_pipeline) {
        JkPipeline p = jk_sss_pipeline(kappa);
        bool agree = p.sigma2 == s && p.cancels;
        out.text += "# pipeline: " + std::string(agree ? "agrees" : "DISAGREES") + "\n";
        out.json["pipeline"] = {{"raw_difference", to_json(p.raw.difference)},
                                {"cancels", p.cancels},
                                {"h22", p.h22},
                                {"agrees", agree}};
        out.ok = agree;
      }
    } else if (*ss) {
      MixedSpectrum iso = load_mixed(iso_file);
      BranchData bd = parse_branches(load(branch_file));
      std::optional<MixedSpectrum> s1;
      if (!sigma1_file.empty()) s1 = load_mixed(sigma1_file);
      SSSResult r = sss_difference(iso, bd, sss_r, s1);
      out.text = "# difference\n" + format_spec(r.difference);
      out.json = {{"r", sss_r}, {"difference", to_json(r.difference)}};
      if (r.has_sigma1) {
        out.text += "# sigma1\n" + format_spec(r.sigma1) + "# sigma2\n" + format_spec(r.sigma2);
        out.json["sigma1"] = to_json(r.sigma1);
        out.json["sigma2"] = to_json(r.sigma2);
      }
    } else if (*sc) {
      if (emit_dwork) {
        out.text = format_nodes(dwork_quintic_nodes());
        out.json = {{"conductor", 5}, {"nodes", static_cast<long>(dwork_quintic_nodes().nodes.size())}};
        if (format == "text") {
          if (output.empty()) std::cout << out.text;
          else write_file(output, out.text);
          return 0;
        }
      } else {
        if (sc_m < 1 || sc_d < 1 || nodes_file.empty()) throw UsageError("schoen: give --m, --degree and --nodes");
        NodalFamily fam = parse_nodes(load(nodes_file), sc_m, sc_d);
        RankOptions opts;
        opts.certify = certify;
        SchoenReport r = evaluation_rank(fam, opts);
        std::ostringstream os;
        add_line(os, "nodes", std::to_string(r.nodes));
        add_line(os, "sections", std::to_string(r.sections));
        add_line(os, "r", std::to_string(r.r));
        add_line(os, "rk_N", std::to_string(r.rk_N));
        add_line(os, "dim_W", std::to_string(r.dim_W));
        add_line(os, "phantom", std::to_string(r.phantom));
        ordered_json pr = ordered_json::array();
        for (const auto& [p, k] : r.prime_ranks) {
          add_line(os, "rank_mod_" + std::to_string(p), std::to_string(k));
          pr.push_back({{"p", p}, {"rank", k}});
        }
        add_line(os, "exact_used", yes(r.exact_used));
        out.json = {{"nodes", r.nodes}, {"sections", r.sections}, {"r", r.r},           {"rk_N", r.rk_N},
                    {"dim_W", r.dim_W}, {"phantom", r.phantom},   {"prime_ranks", pr}, {"exact_used", r.exact_used}};
        if (!verify_file.empty()) {
          MonomialData F = parse_poly(load(verify_file));
          long v = verified_nodes(fam, F);
          add_line(os, "verified_nodes", std::to_string(v) + "/" + std::to_string(r.nodes));
          out.json["verified_nodes"] = v;
          out.ok = v == r.nodes && r.nodes > 0;
        }
        out.text = os.str();
      }
    } else if (*tb) {
      if (!tb_emit.empty()) {
        if (tb_emit == "tcy") out.text = format_cy_table(cy_rows());
        else if (tb_emit == "tx") out.text = format_slc_table(slc_rows());
        else throw UsageError("tables: expected tcy or tx, got '" + tb_emit + "'");
        if (output.empty()) std::cout << out.text;
        else write_file(output, out.text);
        return 0;
      }
      if (tb_check.empty()) throw UsageError("tables: give --check or --emit");
      out = table_check_output(tb_check, tb_data);
    }

    std::string rendered;
    if (format == "json") {
      ordered_json doc = {{"schema_version", kSchemaVersion}, {"command", command}, {"ok", out.ok}, {"result", out.json}};
      rendered = doc.dump(2) + "\n";
    } else {
      rendered = out.text;
    }
    if (output.empty()) std::cout << rendered;
    else write_file(output, rendered);
    return out.ok ? 0 : 1;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  }
}
