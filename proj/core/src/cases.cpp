#include "cartan/errors.hpp"
#include "cartan/liedata.hpp"

namespace cartan {

CaseSpec make_case(const Catalog& catalog, std::string name, const std::string& g, const std::string& h,
                   std::optional<std::string> k_h, std::optional<std::string> embedding) {
  CaseSpec c;
  c.name = std::move(name);
  c.g = catalog.lookup_real_form(g);
  c.h = catalog.lookup_real_form(h);
  c.g_u = catalog.lookup_group(c.g.compact_dual);
  c.h_u = catalog.lookup_group(c.h.compact_dual);
  c.k_h = catalog.lookup_group(k_h.value_or(c.h.maximal_compact));
  if (embedding) c.embedding = catalog.lookup_embedding(*embedding);
  c.h_compact = c.h.d_value == 0;
  return c;
}

CaseSpec parse_case(const TextDocument& doc, const Catalog& catalog) {
  const std::string& src = doc.source;
  const auto* s = doc.first("case");
  if (s == nullptr) throw InputError(src, 0, "", "missing [case] section");
  for (const auto& e : s->entries) {
    if (e.key != "name" && e.key != "g" && e.key != "h" && e.key != "k_h" && e.key != "embedding" &&
        e.key != "h_compact") {
      throw InputError(src, e.line, e.key, "unknown case key");
    }
  }
  auto optional_value = [&](std::string_view key) -> std::optional<std::string> {
    if (const auto* e = s->find(key)) return e->value;
    return std::nullopt;
  };
  auto lookup = [&](std::string_view key, auto&& fn) {
    const auto& e = s->require(key, src);
    try {
      return fn(e.value);
    } catch (const UnknownKey& ex) {
      throw InputError(src, e.line, ex.key(), ex.what());
    }
  };
  const std::string name = s->require("name", src).value;
  const std::string g = lookup("g", [&](const std::string& v) { return catalog.lookup_real_form(v).name; });
  const std::string h = lookup("h", [&](const std::string& v) { return catalog.lookup_real_form(v).name; });
  if (s->find("k_h")) lookup("k_h", [&](const std::string& v) { return catalog.lookup_group(v).name; });
  if (s->find("embedding")) lookup("embedding", [&](const std::string& v) { return catalog.lookup_embedding(v).name; });

  CaseSpec c = make_case(catalog, name, g, h, optional_value("k_h"), optional_value("embedding"));
  if (const auto* e = s->find("h_compact")) {
    if (e->value != "true" && e->value != "false") throw InputError(src, e->line, e->value, "expected true or false");
    if ((e->value == "true") != c.h_compact) {
      throw InputError(src, e->line, e->value, "h_compact disagrees with d(" + c.h.name + ") = " + std::to_string(c.h.d_value));
    }
  }
  if (c.embedding && (c.embedding->ambient != c.g_u.name || c.embedding->subgroup != c.k_h.name)) {
    throw InputError(src, s->find("embedding")->line, c.embedding->name,
                     "embedding is not " + c.k_h.name + " in " + c.g_u.name);
  }
  return c;
}

CaseSpec read_case(const std::string& path, const Catalog& catalog) {
  return parse_case(read_text_document(path), catalog);
}

std::vector<CaseSpec> paper_case_list(const Catalog& catalog) {
  return {
      make_case(catalog, "SO(4,4)/SU(1,2)", "so(4,4)", "su(1,2)"),
      make_case(catalog, "SO(4,4)/G2(2)", "so(4,4)", "g2(2)"),
      make_case(catalog, "SO(3,5)/G2(2)", "so(3,5)", "g2(2)", "so(3)xso(3)", "so(3)xso(3)-in-so(8)"),
      make_case(catalog, "Spin(1,7)/G2", "spin(1,7)", "g2"),
  };
}

}  // namespace cartan
