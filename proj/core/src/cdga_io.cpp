#include "cartan/cdga_io.hpp"

#include "cartan/detail/expression.hpp"
#include "cartan/errors.hpp"

namespace cartan {

CdgaFile parse_cdga(const TextDocument& doc) {
  const std::string& src = doc.source;
  std::string name;
  std::optional<unsigned> dimension;
  if (const auto* header = doc.first("cdga")) {
    if (const auto* e = header->find("name")) name = e->value;
    if (const auto* e = header->find("dimension")) {
      dimension = static_cast<unsigned>(parse_natural(e->value, src, e->line));
    }
  }

  const auto* gen_section = doc.first("generators");
  if (gen_section == nullptr) throw InputError(src, 0, "[generators]", "missing section");
  std::vector<GeneratorSpec> gens;
  for (const auto& e : gen_section->entries) {
    const auto degree = parse_natural(e.value, src, e.line);
    if (degree == 0) throw InputError(src, e.line, e.value, "generator degree must be positive");
    gens.push_back({e.key, static_cast<unsigned>(degree)});
  }

  std::shared_ptr<const GradedAlgebra> algebra;
  try {
    algebra = std::make_shared<const GradedAlgebra>(gens);
  } catch (const std::invalid_argument& ex) {
    throw InputError(src, gen_section->line, "", ex.what());
  }

  std::vector<CdgaElement> d(gens.size());
  std::size_t d_line = 0;
  if (const auto* d_section = doc.first("differential")) {
    d_line = d_section->line;
    for (const auto& e : d_section->entries) {
      const auto idx = algebra->index_of(e.key);
      if (!idx) throw InputError(src, e.line, e.key, "differential of unknown generator");
      try {
        d[*idx] = algebra->parse(e.value);
      } catch (const ParseError& ex) {
        throw InputError(src, e.line, ex.token(), std::string("bad differential: ") + ex.what());
      }
    }
  }

  try {
    return CdgaFile{name, dimension, FreeCDGA(algebra, std::move(d))};
  } catch (const DifferentialError& ex) {
    std::size_t line = d_line;
    if (const auto* d_section = doc.first("differential")) {
      if (const auto* e = d_section->find(ex.generator())) line = e->line;
    }
    throw InputError(src, line, ex.generator(), std::string("invalid differential: ") + ex.what());
  }
}

CdgaFile read_cdga(const std::string& path) { return parse_cdga(read_text_document(path)); }

std::string write_cdga(const CdgaFile& file) {
  TextDocument doc;
  TextSection header{"cdga", 0, {}};
  if (!file.name.empty()) header.entries.push_back({"name", file.name, 0});
  if (file.dimension) header.entries.push_back({"dimension", std::to_string(*file.dimension), 0});
  doc.sections.push_back(std::move(header));

  const auto& alg = file.algebra.algebra();
  TextSection gens{"generators", 0, {}};
  TextSection diff{"differential", 0, {}};
  for (std::size_t i = 0; i < alg.size(); ++i) {
    gens.entries.push_back({alg.generators()[i].name, std::to_string(alg.generators()[i].degree), 0});
    const auto& d = file.algebra.differential_of(i);
    if (!d.empty()) diff.entries.push_back({alg.generators()[i].name, alg.format(d), 0});
  }
  doc.sections.push_back(std::move(gens));
  doc.sections.push_back(std::move(diff));
  return write_text_document(doc);
}

}  // namespace cartan
