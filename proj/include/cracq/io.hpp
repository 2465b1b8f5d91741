#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "cracq/cracovian.hpp"
#include "cracq/group.hpp"
#include "cracq/quasigroup.hpp"
#include "cracq/representation.hpp"

namespace cracq {

/// Shortest round-trip decimal form; pure reals print as "re", everything
/// else as "re+imj" / "re-imj".
std::string format_scalar(Scalar value);

/// Accepts "re", "re+imj", "re-imj", "imj" and bare "j"/"+j"/"-j"; throws
/// SchemaError on anything else.
Scalar parse_scalar(std::string_view text);

// Cracovian CSV: one display row per line, comma-separated scalars.
Cracovian read_cracovian_csv(std::istream& in);
void write_cracovian_csv(std::ostream& out, const Cracovian& table);

// Cracovian JSON: {"n_cols", "n_rows", "entries_column_major": [[re, im], ...]}.
Cracovian read_cracovian_json(std::istream& in);
void write_cracovian_json(std::ostream& out, const Cracovian& table);

/// Dispatches on the ".json" extension, defaulting to CSV.
Cracovian load_cracovian(const std::filesystem::path& path);
void save_cracovian(const std::filesystem::path& path, const Cracovian& table);

// Group JSON: {"names": [...], "unit": name, "cayley": [[name, ...], ...]}.
FiniteGroup read_group_json(std::istream& in);
void write_group_json(std::ostream& out, const FiniteGroup& g);
FiniteGroup load_group(const std::filesystem::path& path);
void save_group(const std::filesystem::path& path, const FiniteGroup& g);

// Involution JSON: {"map": {name: name, ...}} covering every element.
Involution read_involution_json(std::istream& in, const FiniteGroup& g);
void write_involution_json(std::ostream& out, const FiniteGroup& g, const Involution& inv);
Involution load_involution(const std::filesystem::path& path, const FiniteGroup& g);
void save_involution(const std::filesystem::path& path, const FiniteGroup& g,
                     const Involution& inv);

// Quasigroup JSON: the group schema with "tau" in place of "unit". Reading
// re-validates the Latin-square invariant.
Quasigroup read_quasigroup_json(std::istream& in);
void write_quasigroup_json(std::ostream& out, const Quasigroup& q);
Quasigroup load_quasigroup(const std::filesystem::path& path);
void save_quasigroup(const std::filesystem::path& path, const Quasigroup& q);

/// Human-readable Cayley table: header row and row labels, entries by name.
void write_cayley_csv(std::ostream& out, const std::vector<std::string>& names,
                      const std::vector<std::size_t>& table);

// Representation JSON: {"dimension": d, "elements": {name: cracovian, ...}}.
Representation read_representation_json(std::istream& in);
void write_representation_json(std::ostream& out, const Representation& rep);
Representation load_representation(const std::filesystem::path& path);
void save_representation(const std::filesystem::path& path, const Representation& rep);

}  // namespace cracq
