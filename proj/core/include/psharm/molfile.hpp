#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "psharm/core.hpp"

namespace psharm {

/// One record of a molecule file: the De/re parameterization plus the unit
/// system in effect for that record.
struct MoleculeRecord {
  MolecularParams params{};
  UnitSystem units{};
};

/// Loads a line-oriented molecule file.
///
/// Grammar (one statement per line, '#' starts a comment):
///   hbar = <value>              header default, applies to later records
///   mass = <value>              (alias: M)
///   <key>: De=<v>, re=<v>[, mass=<v>][, hbar=<v>]
///
/// Keys match [A-Za-z0-9_.+-]+. Duplicate keys, malformed lines and
/// non-positive De/re raise parse_error carrying the line number.
std::map<std::string, MoleculeRecord> load_molecules(
    const std::filesystem::path& path);

}  // namespace psharm
