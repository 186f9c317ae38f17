#include "psharm/molfile.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "psharm/errors.hpp"

namespace psharm {

namespace {

std::string trim(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

bool valid_key(const std::string& k) {
  if (k.empty()) return false;
  for (char c : k) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' &&
        c != '.' && c != '+' && c != '-')
      return false;
  }
  return true;
}

double parse_number(const std::string& text, long line, const std::string& what) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing chars");
    return v;
  } catch (const std::exception&) {
    throw parse_error("molecule file: bad numeric value for " + what +
                          ": '" + text + "'",
                      line);
  }
}

}  // namespace

std::map<std::string, MoleculeRecord> load_molecules(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw parse_error("molecule file: cannot open '" + path.string() + "'", 0);

  std::map<std::string, MoleculeRecord> out;
  UnitSystem header_units;
  std::string raw;
  long line = 0;

  while (std::getline(in, raw)) {
    ++line;
    std::string text = raw;
    if (const size_t hash = text.find('#'); hash != std::string::npos)
      text.erase(hash);
    text = trim(text);
    if (text.empty()) continue;

    const size_t colon = text.find(':');
    if (colon == std::string::npos) {
      // Header assignment: hbar = v | mass = v | M = v
      const size_t eq = text.find('=');
      if (eq == std::string::npos)
        throw parse_error("molecule file: expected 'name = value' or "
                          "'key: De=..., re=...'",
                          line);
      const std::string name = trim(text.substr(0, eq));
      const double value = parse_number(trim(text.substr(eq + 1)), line, name);
      if (name == "hbar") {
        header_units.hbar = value;
      } else if (name == "mass" || name == "M") {
        header_units.mass = value;
      } else {
        throw parse_error("molecule file: unknown header field '" + name + "'",
                          line);
      }
      continue;
    }

    const std::string key = trim(text.substr(0, colon));
    if (!valid_key(key))
      throw parse_error("molecule file: invalid record key '" + key + "'",
                        line);
    if (out.contains(key))
      throw parse_error("molecule file: duplicate key '" + key + "'", line);

    MoleculeRecord rec;
    rec.units = header_units;
    bool have_de = false, have_re = false;

    std::stringstream fields(text.substr(colon + 1));
    std::string field;
    while (std::getline(fields, field, ',')) {
      field = trim(field);
      if (field.empty()) continue;
      const size_t eq = field.find('=');
      if (eq == std::string::npos)
        throw parse_error("molecule file: expected 'name=value' in record '" +
                              key + "'",
                          line);
      const std::string name = trim(field.substr(0, eq));
      const double value =
          parse_number(trim(field.substr(eq + 1)), line, name);
      if (name == "De") {
        rec.params.De = value;
        have_de = true;
      } else if (name == "re") {
        rec.params.re = value;
        have_re = true;
      } else if (name == "mass" || name == "M") {
        rec.units.mass = value;
      } else if (name == "hbar") {
        rec.units.hbar = value;
      } else {
        throw parse_error("molecule file: unknown field '" + name +
                              "' in record '" + key + "'",
                          line);
      }
    }
    if (!have_de || !have_re)
      throw parse_error("molecule file: record '" + key +
                            "' needs both De and re",
                        line);
    if (!(rec.params.De > 0.0))
      throw parse_error("molecule file: record '" + key + "' has De <= 0",
                        line);
    if (!(rec.params.re > 0.0))
      throw parse_error("molecule file: record '" + key + "' has re <= 0",
                        line);
    if (!(rec.units.hbar > 0.0) || !(rec.units.mass > 0.0))
      throw parse_error("molecule file: record '" + key +
                            "' has non-positive units",
                        line);
    out.emplace(key, rec);
  }
  return out;
}

}  // namespace psharm
