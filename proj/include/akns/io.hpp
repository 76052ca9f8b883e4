#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "akns/potential.hpp"
#include "akns/scattering.hpp"
#include "akns/spps.hpp"

namespace akns {

/// Shortest round-trip decimal form of v, at most 17 significant digits.
std::string format_double(double v);

struct PotentialSamples {
  std::vector<double> x;
  std::vector<cplx> q, r;
};

/// x,re_q,im_q,re_r,im_r. Throws IoError / ParseError.
PotentialSamples read_potential_csv(const std::filesystem::path& path);
void write_potential_csv(const std::filesystem::path& path, const PotentialSamples& samples);
void write_potential_csv(const std::filesystem::path& path, const PotentialPair& p);

/// rho,re_a,im_a,re_atil,im_atil,re_b,im_b,re_btil,im_btil
std::vector<ScatteringSample> read_scattering_csv(const std::filesystem::path& path);
void write_scattering_csv(const std::filesystem::path& path, const std::vector<ScatteringSample>& samples);

/// {"upper":[{"rho":[re,im],"c":[re,im]}],"lower":[...]}
void read_discrete_json(const std::filesystem::path& path, ScatteringData& into);
void write_discrete_json(const std::filesystem::path& path, const ScatteringData& data);

/// n,re_c1,im_c1,re_c2,im_c2
void write_coefficient_csv(const std::filesystem::path& path, const SeriesColumn& column);

/// Writes text, creating parent directories. Throws IoError.
void write_text(const std::filesystem::path& path, const std::string& text);
std::string read_text(const std::filesystem::path& path);

/// Generic numeric CSV with a header line.
void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows);

}  // namespace akns
