#include "spectre/io.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <sstream>

#include "spectre/errors.hpp"

namespace spectre {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n"), b = s.find_last_not_of(" \t\r\n");
  return a == std::string::npos ? "" : s.substr(a, b - a + 1);
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string w; is >> w;) out.push_back(w);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  try {
    size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer for " + what + ", got '" + s + "'");
  }
}

std::vector<std::pair<size_t, std::string>> content_lines(const std::string& text) {
  std::vector<std::pair<size_t, std::string>> out;
  std::istringstream is(text);
  std::string line;
  for (size_t no = 1; std::getline(is, line); ++no) {
    auto h = line.find('#');
    std::string body = trim(h == std::string::npos ? line : line.substr(0, h));
    if (!body.empty()) out.push_back({no, body});
  }
  return out;
}

std::string join_ivec(const IVec& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) out += (i ? " " : "") + std::to_string(e[i]);
  return out;
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

SpecFile parse_spec(const std::string& text) {
  SpecFile f;
  std::optional<size_t> cols;
  std::istringstream is(text);
  std::string line;
  for (size_t no = 1; std::getline(is, line); ++no) {
    std::string t = trim(line);
    if (t.rfind("#", 0) == 0) {
      auto p = t.find("n=");
      if (p != std::string::npos) f.n = static_cast<int>(parse_long(trim(t.substr(p + 2)), "n"));
      continue;
    }
    auto h = t.find('#');
    if (h != std::string::npos) t = trim(t.substr(0, h));
    if (t.empty()) continue;
    auto w = words(t);
    std::string at = "line " + std::to_string(no);
    if (w.size() != 2 && w.size() != 3) throw ParseError(at + ": expected 2 or 3 columns");
    if (cols && *cols != w.size()) throw ParseError(at + ": mixed and plain entries in one file");
    cols = w.size();
    Rat a = parse_rat(w[0]);
    if (w.size() == 3) {
      f.mixed_spectrum.add(a, static_cast<int>(parse_long(w[1], at + " weight")), parse_long(w[2], at + " multiplicity"));
    } else {
      f.spectrum.add(a, parse_long(w[1], at + " multiplicity"));
    }
  }
  f.mixed = !cols || *cols == 3;
  if (f.mixed) f.spectrum = project(f.mixed_spectrum);
  return f;
}

std::string format_spec(const MixedSpectrum& s, std::optional<int> n) {
  std::ostringstream os;
  if (n) os << "# n=" << *n << "\n";
  for (const auto& [k, m] : s.entries()) os << to_string(k.first) << " " << k.second << " " << m << "\n";
  return os.str();
}

std::string format_spec(const Spectrum& s, std::optional<int> n) {
  std::ostringstream os;
  if (n) os << "# n=" << *n << "\n";
  for (const auto& [a, m] : s.entries()) os << to_string(a) << " " << m << "\n";
  return os.str();
}

MonomialData parse_poly(const std::string& text) {
  // nvars comes from a "# nvars=N" comment, else from the shortest line, else from the
  // column count when no coefficient is written as a fraction or negative number
  MonomialData md;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) {
    auto t = trim(line);
    auto p = t.find("nvars=");
    if (t.rfind("#", 0) == 0 && p != std::string::npos) md.nvars = static_cast<int>(parse_long(trim(t.substr(p + 6)), "nvars"));
  }
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("polynomial file has no monomials");
  if (md.nvars == 0) {
    size_t lo = SIZE_MAX, hi = 0;
    bool fractional = false;
    for (const auto& [no, body] : lines) {
      auto w = words(body);
      lo = std::min(lo, w.size());
      hi = std::max(hi, w.size());
      fractional = fractional || w.back().find_first_of("/-") != std::string::npos;
    }
    md.nvars = static_cast<int>(lo < hi || fractional ? hi - 1 : hi);
  }
  if (md.nvars < 1) throw ParseError("no exponents");
  size_t nv = static_cast<size_t>(md.nvars);
  std::vector<std::optional<Rat>> coefs;
  for (const auto& [no, body] : lines) {
    auto w = words(body);
    std::string at = "line " + std::to_string(no);
    if (w.size() != nv && w.size() != nv + 1)
      throw ParseError(at + ": expected " + std::to_string(nv) + " exponents and an optional coefficient");
    IVec e;
    for (size_t i = 0; i < nv; ++i) e.push_back(parse_long(w[i], at + " exponent"));
    md.exponents.push_back(e);
    coefs.push_back(w.size() == nv + 1 ? std::optional<Rat>(parse_rat(w[nv])) : std::nullopt);
  }
  bool any = false;
  for (const auto& c : coefs) any = any || c.has_value();
  if (any) {
    std::vector<Rat> c;
    for (const auto& x : coefs) c.push_back(x ? *x : Rat(1));
    md.coefficients = c;
  }
  md.validate();
  return md;
}

std::string format_poly(const MonomialData& m) {
  std::ostringstream os;
  os << "# nvars=" << m.nvars << "\n";
  for (size_t i = 0; i < m.exponents.size(); ++i) {
    os << join_ivec(m.exponents[i]);
    if (m.coefficients) os << " " << to_string((*m.coefficients)[i]);
    os << "\n";
  }
  return os.str();
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty() || trim(line)[0] == '#') continue;
    std::vector<std::string> row;
    std::string cur;
    bool quoted = false;
    for (size_t i = 0; i < line.size(); ++i) {
      char c = line[i];
      if (quoted) {
        if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else if (c == '"') {
          quoted = false;
        } else {
          cur += c;
        }
      } else if (c == '"') {
        quoted = true;
      } else if (c == ',') {
        row.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (quoted) throw ParseError("unterminated quote in CSV line '" + line + "'");
    row.push_back(cur);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

NodalFamily parse_nodes(const std::string& text, int m, long degree) {
  NodalFamily fam;
  fam.m = m;
  fam.degree = degree;
  auto rows = parse_csv(text);
  if (rows.empty() || rows[0].size() != 2 || trim(rows[0][0]) != "conductor")
    throw ParseError("nodes CSV must start with a 'conductor,K' line");
  fam.conductor = parse_long(trim(rows[0][1]), "conductor");
  if (fam.conductor < 1) throw ParseError("conductor must be positive");
  CyclotomicField f(fam.conductor);
  for (size_t i = 1; i < rows.size(); ++i) {
    std::vector<QPoly> node;
    for (const auto& c : rows[i]) node.push_back(f.reduce(f.parse(c)));
    fam.nodes.push_back(std::move(node));
  }
  return fam;
}

std::string format_nodes(const NodalFamily& fam) {
  CyclotomicField f(fam.conductor);
  std::ostringstream os;
  os << "conductor," << fam.conductor << "\n";
  for (const auto& node : fam.nodes) {
    for (size_t j = 0; j < node.size(); ++j) os << (j ? "," : "") << f.to_string(node[j]);
    os << "\n";
  }
  return os.str();
}

BranchData parse_branches(const std::string& json_text) {
  using nlohmann::json;
  BranchData bd;
  try {
    json j = json::parse(json_text);
    for (const auto& b : j.at("branches")) {
      Branch br;
      for (const auto& e : b.at("lim_spectrum")) {
        if (!e.is_array() || e.size() != 3) throw ParseError("lim_spectrum entries are [alpha, weight, multiplicity]");
        br.lim_spectrum.add(parse_rat(e[0].is_string() ? e[0].get<std::string>() : e[0].dump()), e[1].get<int>(),
                            e[2].get<long>());
      }
      for (const auto& beta : b.at("betas"))
        br.betas.push_back(parse_rat(beta.is_string() ? beta.get<std::string>() : beta.dump()));
      br.mu = b.value("mu", 1L);
      bd.branches.push_back(std::move(br));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("branches JSON: ") + e.what());
  }
  bd.validate();
  return bd;
}

std::string format_cy_table(const std::vector<CYRow>& rows) {
  std::ostringstream os;
  os << "# spectre dataset v1: K3 tails\n";
  os << "table,yonemura_id,arnold,form,monomials,d,m_f,mu,g\n";
  for (const auto& r : rows) {
    std::string mons;
    for (size_t i = 0; i < r.monomials.size(); ++i) mons += (i ? ";" : "") + join_ivec(r.monomials[i]);
    os << r.table << "," << r.yonemura << "," << csv_field(r.arnold) << "," << csv_field(r.form) << "," << mons << ","
       << r.d << ",";
    if (r.table == 1) os << r.m_f << ",,\n";
    else os << "," << r.mu << "," << r.g << "\n";
  }
  return os.str();
}

std::vector<CYRow> parse_cy_table(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "table") throw ParseError("missing CSV header");
  std::vector<CYRow> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& c = rows[i];
    std::string at = "row " + std::to_string(i);
    if (c.size() != 9) throw ParseError(at + ": expected 9 columns");
    CYRow r;
    r.table = static_cast<int>(parse_long(c[0], at + " table"));
    r.yonemura = parse_long(c[1], at + " yonemura_id");
    r.arnold = c[2];
    r.form = c[3];
    std::stringstream ms(c[4]);
    for (std::string mon; std::getline(ms, mon, ';');) {
      IVec e;
      for (const auto& w : words(mon)) e.push_back(parse_long(w, at + " exponent"));
      r.monomials.push_back(e);
    }
    r.d = parse_long(c[5], at + " d");
    if (r.table == 1) r.m_f = parse_long(c[6], at + " m_f");
    else {
      r.mu = parse_long(c[7], at + " mu");
      r.g = parse_long(c[8], at + " g");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_slc_table(const std::vector<SlcRow>& rows) {
  std::ostringstream os;
  os << "# spectre dataset v1: nonisolated slc surface singularities\n";
  os << "symbol,local_form,g,r_frak,N,sigma1,sigma2,iso_provenance,params\n";
  for (const auto& r : rows)
    os << csv_field(r.symbol) << "," << csv_field(r.local_form) << "," << csv_field(r.g) << "," << csv_field(r.r_frak)
       << "," << r.N << "," << csv_field(r.sigma1) << "," << csv_field(r.sigma2) << "," << r.iso_provenance << ","
       << csv_field(r.params) << "\n";
  return os.str();
}

std::vector<SlcRow> parse_slc_table(const std::string& text) {
  auto rows = parse_csv(text);
  if (rows.empty() || rows[0].empty() || rows[0][0] != "symbol") throw ParseError("missing CSV header");
  std::vector<SlcRow> out;
  for (size_t i = 1; i < rows.size(); ++i) {
    const auto& c = rows[i];
    if (c.size() != 9) throw ParseError("row " + std::to_string(i) + ": expected 9 columns");
    out.push_back(SlcRow{c[0], c[1], c[2], c[3], parse_long(c[4], "N"), c[5], c[6], c[7], c[8]});
  }
  return out;
}

}  // namespace spectre
