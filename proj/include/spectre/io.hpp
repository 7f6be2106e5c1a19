#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectre/newton.hpp"
#include "spectre/nonisolated.hpp"
#include "spectre/schoen.hpp"
#include "spectre/spectrum.hpp"
#include "spectre/weighted.hpp"

namespace spectre {

std::string read_file(const std::string& path);  // throws ParseError if unreadable
void write_file(const std::string& path, const std::string& text);

// .spec: "num/den weight multiplicity" per line, or "num/den multiplicity" for a plain spectrum.
// An optional "# n=N" comment records the dimension.
struct SpecFile {
  bool mixed = true;
  MixedSpectrum mixed_spectrum;
  Spectrum spectrum;
  std::optional<int> n;
};
SpecFile parse_spec(const std::string& text);
std::string format_spec(const MixedSpectrum& s, std::optional<int> n = std::nullopt);
std::string format_spec(const Spectrum& s, std::optional<int> n = std::nullopt);

// .poly: "e_1 ... e_{n+1} [coeff]" per line.
MonomialData parse_poly(const std::string& text);
std::string format_poly(const MonomialData& m);

// Nodes CSV: first data line "conductor,K", then one node per line.
NodalFamily parse_nodes(const std::string& text, int m, long degree);
std::string format_nodes(const NodalFamily& fam);

// {"branches": [{"lim_spectrum": [["1", 2, 1]], "betas": ["1/2"], "mu": 1}]}
BranchData parse_branches(const std::string& json_text);

// Minimal CSV with double-quoted fields.
std::vector<std::vector<std::string>> parse_csv(const std::string& text);
std::string csv_field(const std::string& s);

std::string format_cy_table(const std::vector<CYRow>& rows);
std::vector<CYRow> parse_cy_table(const std::string& text);
std::string format_slc_table(const std::vector<SlcRow>& rows);
std::vector<SlcRow> parse_slc_table(const std::string& text);

}  // namespace spectre
