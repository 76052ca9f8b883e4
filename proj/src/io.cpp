#include "akns/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "akns/errors.hpp"

namespace akns {

namespace {

using json = nlohmann::json;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    out.push_back(trim(std::string_view(line).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

double parse_double(const std::string& s, const std::filesystem::path& path, std::size_t line) {
  double v = 0.0;
  const char* first = s.data();
  if (!s.empty() && s[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    std::ostringstream msg;
    msg << path.string() << ":" << line << ": cannot parse number '" << s << "'";
    throw ParseError(msg.str());
  }
  return v;
}

// Numeric rows of a CSV whose header must equal `header`.
std::vector<std::vector<double>> read_numeric_csv(const std::filesystem::path& path,
                                                  const std::vector<std::string>& header) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  std::string line;
  std::size_t number = 0;
  bool have_header = false;
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    const auto cells = split(line);
    if (!have_header) {
      if (cells != header) {
        std::ostringstream msg;
        msg << path.string() << ": unexpected header '" << trim(line) << "'";
        throw ParseError(msg.str());
      }
      have_header = true;
      continue;
    }
    if (cells.size() != header.size()) {
      std::ostringstream msg;
      msg << path.string() << ":" << number << ": expected " << header.size() << " columns, got "
          << cells.size();
      throw ParseError(msg.str());
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(parse_double(c, path, number));
    rows.push_back(std::move(row));
  }
  if (!have_header) throw ParseError(path.string() + ": empty file");
  return rows;
}

const std::vector<std::string> kPotentialHeader = {"x", "re_q", "im_q", "re_r", "im_r"};
const std::vector<std::string> kScatteringHeader = {"rho",  "re_a", "im_a",    "re_atil", "im_atil",
                                                    "re_b", "im_b", "re_btil", "im_btil"};

cplx parse_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ParseError(std::string("discrete datum field '") + what + "' must be [re, im]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw IoError("float formatting failed");
  std::string s(buf, ptr);
  // Shortest round-trip never needs more than 17 digits; guard anyway.
  std::size_t digits = 0;
  for (char c : s) {
    if (c == 'e') break;
    if (std::isdigit(static_cast<unsigned char>(c))) ++digits;
  }
  if (digits > 17) {
    auto [p2, ec2] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    if (ec2 != std::errc()) throw IoError("float formatting failed");
    s.assign(buf, p2);
  }
  return s;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_table_csv(const std::filesystem::path& path, const std::vector<std::string>& header,
                     const std::vector<std::vector<double>>& rows) {
  std::string text;
  for (std::size_t k = 0; k < header.size(); ++k) {
    if (k) text += ',';
    text += header[k];
  }
  text += '\n';
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (k) text += ',';
      text += format_double(row[k]);
    }
    text += '\n';
  }
  write_text(path, text);
}

PotentialSamples read_potential_csv(const std::filesystem::path& path) {
  const auto rows = read_numeric_csv(path, kPotentialHeader);
  PotentialSamples s;
  for (const auto& row : rows) {
    if (!s.x.empty() && !(row[0] > s.x.back())) {
      throw ParseError(path.string() + ": x column must be strictly increasing");
    }
    s.x.push_back(row[0]);
    s.q.emplace_back(row[1], row[2]);
    s.r.emplace_back(row[3], row[4]);
  }
  if (s.x.size() < 4) throw ParseError(path.string() + ": need at least 4 samples");
  return s;
}

void write_potential_csv(const std::filesystem::path& path, const PotentialSamples& s) {
  std::vector<std::vector<double>> rows;
  rows.reserve(s.x.size());
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    rows.push_back({s.x[i], s.q[i].real(), s.q[i].imag(), s.r[i].real(), s.r[i].imag()});
  }
  write_table_csv(path, kPotentialHeader, rows);
}

void write_potential_csv(const std::filesystem::path& path, const PotentialPair& p) {
  PotentialSamples s;
  s.x.assign(p.grid->nodes().begin(), p.grid->nodes().end());
  s.q.assign(p.q.values().begin(), p.q.values().end());
  s.r.assign(p.r.values().begin(), p.r.values().end());
  write_potential_csv(path, s);
}

std::vector<ScatteringSample> read_scattering_csv(const std::filesystem::path& path) {
  const auto rows = read_numeric_csv(path, kScatteringHeader);
  std::vector<ScatteringSample> out;
  for (const auto& row : rows) {
    ScatteringSample s;
    s.rho = row[0];
    const cplx i(0.0, 1.0);
    s.z = (0.5 + i * s.rho) / (0.5 - i * s.rho);
    s.ztil = std::conj(s.z);
    s.a = {row[1], row[2]};
    s.atil = {row[3], row[4]};
    s.b = {row[5], row[6]};
    s.btil = {row[7], row[8]};
    out.push_back(s);
  }
  return out;
}

void write_scattering_csv(const std::filesystem::path& path, const std::vector<ScatteringSample>& samples) {
  std::vector<std::vector<double>> rows;
  rows.reserve(samples.size());
  for (const auto& s : samples) {
    rows.push_back({s.rho, s.a.real(), s.a.imag(), s.atil.real(), s.atil.imag(), s.b.real(), s.b.imag(),
                    s.btil.real(), s.btil.imag()});
  }
  write_table_csv(path, kScatteringHeader, rows);
}

void read_discrete_json(const std::filesystem::path& path, ScatteringData& into) {
  json doc;
  try {
    doc = json::parse(read_text(path));
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(path.string() + ": expected a JSON object");
  into.upper.clear();
  into.lower.clear();
  for (const auto& [key, plane] : {std::pair{"upper", HalfPlane::upper}, std::pair{"lower", HalfPlane::lower}}) {
    if (!doc.contains(key)) continue;
    const auto& list = doc[key];
    if (!list.is_array()) throw ParseError(path.string() + ": '" + key + "' must be an array");
    for (const auto& item : list) {
      if (!item.is_object() || !item.contains("rho") || !item.contains("c")) {
        throw ParseError(path.string() + ": each datum needs 'rho' and 'c'");
      }
      DiscreteDatum d{parse_pair(item["rho"], "rho"), parse_pair(item["c"], "c"), plane};
      (plane == HalfPlane::upper ? into.upper : into.lower).push_back(d);
    }
  }
}

void write_discrete_json(const std::filesystem::path& path, const ScatteringData& data) {
  // Written by hand so numbers use the same formatting as the CSV files.
  auto list = [](const std::vector<DiscreteDatum>& items) {
    std::string s = "[";
    for (std::size_t k = 0; k < items.size(); ++k) {
      const auto& d = items[k];
      s += k ? ",\n    " : "\n    ";
      s += "{\"rho\": [" + format_double(d.rho_m.real()) + ", " + format_double(d.rho_m.imag()) + "], \"c\": [" +
           format_double(d.c_m.real()) + ", " + format_double(d.c_m.imag()) + "]}";
    }
    s += items.empty() ? "]" : "\n  ]";
    return s;
  };
  write_text(path, "{\n  \"upper\": " + list(data.upper) + ",\n  \"lower\": " + list(data.lower) + "\n}\n");
}

void write_coefficient_csv(const std::filesystem::path& path, const SeriesColumn& column) {
  std::vector<std::vector<double>> rows;
  for (std::size_t n = 0; n < column.c1.size(); ++n) {
    rows.push_back({static_cast<double>(n), column.c1[n].real(), column.c1[n].imag(), column.c2[n].real(),
                    column.c2[n].imag()});
  }
  write_table_csv(path, {"n", "re_c1", "im_c1", "re_c2", "im_c2"}, rows);
}

}  // namespace akns
