#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "mongedomp/domp.hpp"
#include "mongedomp/tp.hpp"

namespace mongedomp {

/// Uniform error for anything wrong with an input document: malformed
/// JSON, missing fields, wrong types, or values the constructors reject.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Transportation instance document:
///   {"p": int, "q": int, "s": [int...], "d": [int...],
///    "cost_scaled": [int...]}        (row-major, p*q entries)
/// Money travels as scaled integers (hundredths) everywhere.
TpInstance read_tp_json(std::istream& in);
void write_tp_json(std::ostream& out, const TpInstance& inst);

struct InstanceMeta {
  std::uint64_t seed = 0;
  std::string family;
};

struct DompDocument {
  DompInstance instance;
  std::optional<InstanceMeta> meta;
};

/// DOMP instance document:
///   {"n": int, "p": int, "cost_scaled": [int...], "lambda": [int...],
///    "meta": {"seed": int, "family": str}}   (meta optional on read)
DompDocument read_domp_json(std::istream& in);
void write_domp_json(std::ostream& out, const DompInstance& inst,
                     const std::optional<InstanceMeta>& meta = std::nullopt);

}  // namespace mongedomp
