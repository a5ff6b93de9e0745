#pragma once

#include "cartan/cdga.hpp"
#include "cartan/textfmt.hpp"

#include <optional>
#include <string>

namespace cartan {

/// A CDGA as stored on disk:
///
///   [cdga]
///   name = cp1
///   dimension = 2          # optional; default cutoff for cohomology
///   [generators]
///   u = 2
///   y3 = 3
///   [differential]
///   y3 = u^2               # generators not listed here are closed
struct CdgaFile {
  std::string name;
  std::optional<unsigned> dimension;
  FreeCDGA algebra;
};

/// Throws InputError (file, line, token) on malformed input and on a
/// differential that violates the degree or d^2 = 0 checks.
CdgaFile parse_cdga(const TextDocument& doc);
CdgaFile read_cdga(const std::string& path);

std::string write_cdga(const CdgaFile& file);

}  // namespace cartan
