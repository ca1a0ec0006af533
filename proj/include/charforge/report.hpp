#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "charforge/chartable.hpp"
#include "charforge/harness.hpp"

namespace charforge {

using Json = nlohmann::ordered_json;

/// 64-bit FNV-1a over the canonical text of a row, as 16 hex digits.
std::string row_fingerprint(const CharacterTable& table, std::size_t row);

/// A table as it appears in serialized form.
struct TableDocument {
  struct ClassInfo {
    std::size_t rep_index = 0;
    std::size_t size = 0;
    std::uint32_t rep_order = 0;
  };
  std::size_t order = 0;
  std::uint32_t conductor = 1;
  std::vector<ClassInfo> classes;
  std::vector<std::vector<Cyclotomic>> irreducibles;
  std::vector<std::uint64_t> degrees;
};

TableDocument table_document(const CharacterTable& table);

/// Products of one pair of rows with the identifying data the CLI echoes.
struct ProductDocument {
  std::string group;
  std::size_t chi = 0;
  std::size_t psi = 0;
  std::uint64_t chi_degree = 0;
  std::uint64_t psi_degree = 0;
  std::string chi_fingerprint;
  std::string psi_fingerprint;
  Decomposition decomposition;
  std::vector<std::uint64_t> constituent_degrees;
  std::optional<TheoremACase> theorem_case;
  std::optional<LinearShiftResult> linear_shift;
};

struct SpectrumDocument {
  std::string group;
  std::uint64_t prime = 0;
  std::map<std::size_t, EtaWitness> spectrum;
};

struct SelfProductEntry {
  std::size_t chi = 0;
  std::string shape;  // "i", "ii" or empty on violation
  std::string violation;
};

struct SelfProductDocument {
  std::string group;
  std::uint64_t prime = 0;
  std::vector<SelfProductEntry> entries;
  bool pass() const noexcept;
};

void to_json(Json& j, const Cyclotomic& c);
void from_json(const Json& j, Cyclotomic& c);
void to_json(Json& j, const TableDocument& t);
void from_json(const Json& j, TableDocument& t);
void to_json(Json& j, const Decomposition& d);
void from_json(const Json& j, Decomposition& d);
void to_json(Json& j, const TheoremACase& c);
void from_json(const Json& j, TheoremACase& c);
void to_json(Json& j, const LinearShiftResult& r);
void from_json(const Json& j, LinearShiftResult& r);
void to_json(Json& j, const ProductDocument& p);
void from_json(const Json& j, ProductDocument& p);
void to_json(Json& j, const PairResult& r);
void from_json(const Json& j, PairResult& r);
/// Wall-clock time is left out so that reports are reproducible byte for byte.
void to_json(Json& j, const VerificationReport& r);
void from_json(const Json& j, VerificationReport& r);
void to_json(Json& j, const SpectrumDocument& s);
void from_json(const Json& j, SpectrumDocument& s);
void to_json(Json& j, const SelfProductDocument& s);
void from_json(const Json& j, SelfProductDocument& s);
void to_json(Json& j, const ExampleCheck& c);
void from_json(const Json& j, ExampleCheck& c);
void to_json(Json& j, const ExamplesReport& r);
void from_json(const Json& j, ExamplesReport& r);

std::string to_markdown(const TableDocument& t);
std::string to_markdown(const ProductDocument& p);
std::string to_markdown(const VerificationReport& r);
std::string to_markdown(const SpectrumDocument& s);
std::string to_markdown(const SelfProductDocument& s);
std::string to_markdown(const ExamplesReport& r);

}  // namespace charforge
