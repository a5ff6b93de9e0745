#include "cartan/liedata.hpp"

#include "cartan/detail/expression.hpp"
#include "cartan/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace cartan {

std::string to_string(GroupFamily f) {
  switch (f) {
    case GroupFamily::A: return "A";
    case GroupFamily::B: return "B";
    case GroupFamily::C: return "C";
    case GroupFamily::D: return "D";
    case GroupFamily::E: return "E";
    case GroupFamily::F: return "F";
    case GroupFamily::G: return "G";
    case GroupFamily::Torus: return "T";
    case GroupFamily::Product: return "product";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Catalog container

const GroupDatum& Catalog::lookup_group(const std::string& name) const {
  auto it = groups_.find(name);
  if (it == groups_.end()) throw UnknownKey("group", name);
  return it->second;
}

const RealFormDatum& Catalog::lookup_real_form(const std::string& name) const {
  auto it = real_forms_.find(name);
  if (it == real_forms_.end()) throw UnknownKey("real form", name);
  return it->second;
}

const EmbeddingDatum& Catalog::lookup_embedding(const std::string& name) const {
  auto it = embeddings_.find(name);
  if (it == embeddings_.end()) throw UnknownKey("embedding", name);
  return it->second;
}

std::vector<const GroupDatum*> Catalog::groups() const {
  std::vector<const GroupDatum*> out;
  for (const auto& n : group_order_) out.push_back(&groups_.at(n));
  return out;
}

std::vector<const RealFormDatum*> Catalog::real_forms() const {
  std::vector<const RealFormDatum*> out;
  for (const auto& n : real_form_order_) out.push_back(&real_forms_.at(n));
  return out;
}

std::vector<const EmbeddingDatum*> Catalog::embeddings() const {
  std::vector<const EmbeddingDatum*> out;
  for (const auto& n : embedding_order_) out.push_back(&embeddings_.at(n));
  return out;
}

void Catalog::add(GroupDatum g) {
  const std::string key = g.name;
  if (!groups_.emplace(key, std::move(g)).second) throw std::invalid_argument("duplicate group '" + key + "'");
  group_order_.push_back(key);
}

void Catalog::add(RealFormDatum r) {
  const std::string key = r.name;
  if (!real_forms_.emplace(key, std::move(r)).second) throw std::invalid_argument("duplicate real form '" + key + "'");
  real_form_order_.push_back(key);
}

void Catalog::add(EmbeddingDatum e) {
  const std::string key = e.name;
  if (!embeddings_.emplace(key, std::move(e)).second) throw std::invalid_argument("duplicate embedding '" + key + "'");
  embedding_order_.push_back(key);
}

// ---------------------------------------------------------------------------
// Root-system tables

namespace {

// Degrees of the basic Weyl invariants (polynomial degrees), in generator order.
std::optional<std::vector<unsigned>> basic_degrees(GroupFamily f, unsigned n) {
  std::vector<unsigned> d;
  switch (f) {
    case GroupFamily::A:
      if (n < 1) return std::nullopt;
      for (unsigned k = 2; k <= n + 1; ++k) d.push_back(k);
      return d;
    case GroupFamily::B:
    case GroupFamily::C:
      if (n < 1) return std::nullopt;
      for (unsigned k = 1; k <= n; ++k) d.push_back(2 * k);
      return d;
    case GroupFamily::D:
      if (n < 2) return std::nullopt;
      for (unsigned k = 1; k + 1 <= n; ++k) d.push_back(2 * k);
      d.push_back(n);
      return d;
    case GroupFamily::E:
      if (n == 6) return std::vector<unsigned>{2, 5, 6, 8, 9, 12};
      if (n == 7) return std::vector<unsigned>{2, 6, 8, 10, 12, 14, 18};
      if (n == 8) return std::vector<unsigned>{2, 8, 12, 14, 18, 20, 24, 30};
      return std::nullopt;
    case GroupFamily::F:
      if (n == 4) return std::vector<unsigned>{2, 6, 8, 12};
      return std::nullopt;
    case GroupFamily::G:
      if (n == 2) return std::vector<unsigned>{2, 6};
      return std::nullopt;
    case GroupFamily::Torus:
      return std::vector<unsigned>(n, 1);
    case GroupFamily::Product:
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<unsigned> sorted(std::vector<unsigned> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string join(const std::vector<unsigned>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

std::optional<RootFamily> root_family(const GroupDatum& g) {
  switch (g.family) {
    case GroupFamily::A: return RootFamily::A;
    case GroupFamily::B: return RootFamily::B;
    case GroupFamily::C: return RootFamily::C;
    case GroupFamily::D: return RootFamily::D;
    case GroupFamily::G: return g.family_rank == 2 ? std::optional(RootFamily::G2) : std::nullopt;
    default: return std::nullopt;
  }
}

std::vector<std::string> validate_group(const GroupDatum& g, const Catalog& catalog) {
  std::vector<std::string> issues;
  if (g.primitive_degrees.size() != g.rank) {
    issues.push_back("has " + std::to_string(g.primitive_degrees.size()) + " primitive degrees but rank " +
                     std::to_string(g.rank));
  }
  if (g.invariant_degrees.size() != g.primitive_degrees.size()) {
    issues.push_back("invariant and primitive degree lists differ in length");
  } else {
    for (std::size_t i = 0; i < g.invariant_degrees.size(); ++i) {
      if (g.primitive_degrees[i] + 1 != g.invariant_degrees[i]) {
        issues.push_back("primitive degree " + std::to_string(g.primitive_degrees[i]) +
                         " is not invariant degree " + std::to_string(g.invariant_degrees[i]) + " minus one");
      }
    }
  }
  for (unsigned p : g.primitive_degrees) {
    if (p % 2 == 0) issues.push_back("primitive degree " + std::to_string(p) + " is even");
  }
  const unsigned primitive_sum = std::accumulate(g.primitive_degrees.begin(), g.primitive_degrees.end(), 0U);
  if (primitive_sum != g.dimension) {
    issues.push_back("primitive degrees sum to " + std::to_string(primitive_sum) + ", dimension is " +
                     std::to_string(g.dimension));
  }

  if (g.family == GroupFamily::Product) {
    unsigned dim = 0;
    unsigned rank = 0;
    std::uint64_t weyl = 1;
    std::vector<unsigned> prim;
    std::vector<unsigned> inv;
    for (const auto& f : g.factors) {
      if (!catalog.has_group(f)) {
        issues.push_back("unknown factor '" + f + "'");
        return issues;
      }
      const auto& fg = catalog.lookup_group(f);
      dim += fg.dimension;
      rank += fg.rank;
      weyl *= fg.weyl_order;
      prim.insert(prim.end(), fg.primitive_degrees.begin(), fg.primitive_degrees.end());
      inv.insert(inv.end(), fg.invariant_degrees.begin(), fg.invariant_degrees.end());
    }
    if (g.factors.empty()) issues.push_back("product without factors");
    if (dim != g.dimension) issues.push_back("dimension " + std::to_string(g.dimension) + " but factors give " + std::to_string(dim));
    if (rank != g.rank) issues.push_back("rank " + std::to_string(g.rank) + " but factors give " + std::to_string(rank));
    if (weyl != g.weyl_order) {
      issues.push_back("weyl_order " + std::to_string(g.weyl_order) + " but factors give " + std::to_string(weyl));
    }
    if (sorted(prim) != sorted(g.primitive_degrees)) issues.push_back("primitive degrees differ from the factors' (" + join(prim) + ")");
    if (sorted(inv) != sorted(g.invariant_degrees)) issues.push_back("invariant degrees differ from the factors' (" + join(inv) + ")");
    return issues;
  }

  const auto basic = basic_degrees(g.family, g.family_rank);
  if (!basic) {
    issues.push_back("unsupported type " + to_string(g.family) + std::to_string(g.family_rank));
    return issues;
  }
  if (g.rank != g.family_rank) {
    issues.push_back("rank " + std::to_string(g.rank) + " does not match type " + to_string(g.family) +
                     std::to_string(g.family_rank));
  }
  // |W| = prod d_i, #positive roots = sum (d_i - 1), dim = rank + #roots.
  std::uint64_t weyl = 1;
  unsigned positive_roots = 0;
  std::vector<unsigned> expected_invariants;
  for (unsigned d : *basic) {
    weyl *= d;
    positive_roots += d - 1;
    expected_invariants.push_back(2 * d);
  }
  if (g.family == GroupFamily::Torus) weyl = 1;
  if (weyl != g.weyl_order) {
    issues.push_back("weyl_order " + std::to_string(g.weyl_order) + " but type " + to_string(g.family) +
                     std::to_string(g.family_rank) + " has " + std::to_string(weyl));
  }
  const unsigned dim = g.family_rank + 2 * positive_roots;
  if (dim != g.dimension) {
    issues.push_back("dimension " + std::to_string(g.dimension) + " but rank + #roots = " + std::to_string(dim));
  }
  if (sorted(expected_invariants) != sorted(g.invariant_degrees)) {
    issues.push_back("invariant degrees (" + join(g.invariant_degrees) + ") differ from type's (" + join(expected_invariants) + ")");
  }
  return issues;
}

std::vector<std::string> validate_real_form(const RealFormDatum& r, const Catalog& catalog) {
  std::vector<std::string> issues;
  if (!catalog.has_group(r.compact_dual)) {
    issues.push_back("unknown compact dual '" + r.compact_dual + "'");
  } else if (catalog.lookup_group(r.compact_dual).dimension != r.dimension) {
    issues.push_back("dimension " + std::to_string(r.dimension) + " differs from compact dual's " +
                     std::to_string(catalog.lookup_group(r.compact_dual).dimension));
  }
  if (!catalog.has_group(r.maximal_compact)) {
    issues.push_back("unknown maximal compact '" + r.maximal_compact + "'");
  } else {
    const unsigned k = catalog.lookup_group(r.maximal_compact).dimension;
    if (k > r.dimension) {
      issues.push_back("maximal compact is larger than the group");
    } else if (r.d_value != r.dimension - k) {
      issues.push_back("d_value " + std::to_string(r.d_value) + " but dimension - dim K = " + std::to_string(r.dimension - k));
    }
  }
  if (r.d_value > r.dimension) issues.push_back("d_value exceeds dimension");
  return issues;
}

std::vector<std::string> validate_embedding(const EmbeddingDatum& e, const Catalog& catalog) {
  std::vector<std::string> issues;
  if (!catalog.has_group(e.ambient)) issues.push_back("unknown ambient group '" + e.ambient + "'");
  if (!catalog.has_group(e.subgroup)) issues.push_back("unknown subgroup '" + e.subgroup + "'");
  if (!issues.empty()) return issues;
  const auto& amb = catalog.lookup_group(e.ambient);
  const auto& sub = catalog.lookup_group(e.subgroup);
  if (e.restriction.source()->size() != amb.rank) {
    issues.push_back("restriction has " + std::to_string(e.restriction.source()->size()) +
                     " source coordinates, ambient rank is " + std::to_string(amb.rank));
  }
  if (e.restriction.target()->size() != sub.rank) {
    issues.push_back("restriction has " + std::to_string(e.restriction.target()->size()) +
                     " target coordinates, subgroup rank is " + std::to_string(sub.rank));
  }
  auto check_presentation = [&](const std::vector<PresentationGenerator>& gens, const std::string& label) {
    if (gens.size() != sub.rank) {
      issues.push_back(label + " has " + std::to_string(gens.size()) + " generators, subgroup rank is " + std::to_string(sub.rank));
    }
    std::vector<unsigned> degrees;
    for (const auto& g : gens) {
      degrees.push_back(g.spec.degree);
      if (g.image.degree() != std::optional<unsigned>(g.spec.degree)) {
        issues.push_back(label + " generator '" + g.spec.name + "' is not homogeneous of degree " + std::to_string(g.spec.degree));
      }
    }
    if (sorted(degrees) != sorted(sub.invariant_degrees)) {
      issues.push_back(label + " degrees (" + join(degrees) + ") differ from the subgroup's invariant degrees");
    }
  };
  check_presentation(e.presentation, "presentation");
  if (!e.literal_presentation.empty()) check_presentation(e.literal_presentation, "literal presentation");
  return issues;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::vector<unsigned> parse_degree_list(const TextEntry& e, const std::string& src) {
  std::vector<unsigned> out;
  for (const auto& item : split_list(e.value)) out.push_back(static_cast<unsigned>(parse_natural(item, src, e.line)));
  return out;
}

unsigned parse_unsigned(const TextSection& s, std::string_view key, const std::string& src) {
  const auto& e = s.require(key, src);
  return static_cast<unsigned>(parse_natural(e.value, src, e.line));
}

bool parse_bool(const TextEntry& e, const std::string& src) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw InputError(src, e.line, e.value, "expected true or false");
}

GroupDatum parse_group(const TextSection& s, const std::string& src) {
  GroupDatum g;
  g.name = s.require("name", src).value;
  const auto& type = s.require("type", src);
  if (type.value == "product") {
    g.family = GroupFamily::Product;
    g.factors = split_list(s.require("factors", src).value);
  } else {
    const std::string& t = type.value;
    const std::string prefix = t.substr(0, 1);
    if (prefix == "A") g.family = GroupFamily::A;
    else if (prefix == "B") g.family = GroupFamily::B;
    else if (prefix == "C") g.family = GroupFamily::C;
    else if (prefix == "D") g.family = GroupFamily::D;
    else if (prefix == "E") g.family = GroupFamily::E;
    else if (prefix == "F") g.family = GroupFamily::F;
    else if (prefix == "G") g.family = GroupFamily::G;
    else if (prefix == "T") g.family = GroupFamily::Torus;
    else throw InputError(src, type.line, t, "unknown group type");
    g.family_rank = static_cast<unsigned>(parse_natural(t.substr(1), src, type.line));
  }
  g.dimension = parse_unsigned(s, "dimension", src);
  g.rank = parse_unsigned(s, "rank", src);
  const auto& w = s.require("weyl_order", src);
  g.weyl_order = parse_natural(w.value, src, w.line);
  g.primitive_degrees = parse_degree_list(s.require("primitive_degrees", src), src);
  g.invariant_degrees = parse_degree_list(s.require("invariant_degrees", src), src);
  return g;
}

RealFormDatum parse_real_form(const TextSection& s, const std::string& src) {
  RealFormDatum r;
  r.name = s.require("name", src).value;
  r.compact_dual = s.require("compact_dual", src).value;
  r.dimension = parse_unsigned(s, "dimension", src);
  r.d_value = parse_unsigned(s, "d_value", src);
  r.maximal_compact = s.require("maximal_compact", src).value;
  if (const auto* e = s.find("linear")) r.linear = parse_bool(*e, src);
  return r;
}

std::vector<PresentationGenerator> parse_presentation(const TextSection& s, const std::string& prefix,
                                                      const ContextPtr& target, const std::string& src) {
  std::vector<PresentationGenerator> out;
  for (const auto& e : s.entries) {
    if (e.key.rfind(prefix, 0) != 0) continue;
    const std::string name = e.key.substr(prefix.size());
    const auto colon = e.value.find(':');
    if (name.empty() || colon == std::string::npos) {
      throw InputError(src, e.line, e.key, "expected '" + prefix + "<name> = <degree> : <polynomial>'");
    }
    const auto degree = static_cast<unsigned>(parse_natural(e.value.substr(0, colon), src, e.line));
    try {
      out.push_back({GeneratorSpec{name, degree}, parse_polynomial(trim(e.value.substr(colon + 1)), target)});
    } catch (const ParseError& ex) {
      throw InputError(src, e.line, ex.token(), std::string("bad polynomial: ") + ex.what());
    }
  }
  return out;
}

EmbeddingDatum parse_embedding(const TextSection& s, const std::string& src) {
  const std::string name = s.require("name", src).value;
  const auto& src_coords = s.require("source_coordinates", src);
  const auto& dst_coords = s.require("target_coordinates", src);
  ContextPtr source;
  ContextPtr target;
  try {
    source = VariableContext::make(split_list(src_coords.value));
    target = VariableContext::make(split_list(dst_coords.value));
  } catch (const std::invalid_argument& ex) {
    throw InputError(src, src_coords.line, "", ex.what());
  }

  std::vector<std::vector<Rational>> images(source->size());
  std::vector<bool> seen(source->size(), false);
  for (const auto& e : s.entries) {
    if (e.key.rfind("map.", 0) != 0) continue;
    const auto var = source->index_of(e.key.substr(4));
    if (!var) throw InputError(src, e.line, e.key.substr(4), "map for unknown source coordinate");
    for (const auto& item : split_list(e.value)) {
      try {
        images[*var].push_back(parse_rational(item));
      } catch (const std::invalid_argument&) {
        throw InputError(src, e.line, item, "expected a rational 'p/q'");
      }
    }
    if (images[*var].size() != target->size()) {
      throw InputError(src, e.line, e.value, "map row needs " + std::to_string(target->size()) + " entries");
    }
    seen[*var] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) throw InputError(src, s.line, "map." + source->name(i), "missing map row");
  }

  try {
    return EmbeddingDatum{name,
                          s.require("ambient", src).value,
                          s.require("subgroup", src).value,
                          LinearSubstitution(source, target, std::move(images)),
                          parse_presentation(s, "generator.", target, src),
                          parse_presentation(s, "literal.", target, src)};
  } catch (const std::invalid_argument& ex) {
    throw InputError(src, s.line, name, ex.what());
  }
}

}  // namespace

CatalogLoad load_catalog(const TextDocument& doc) {
  CatalogLoad out;
  const std::string& src = doc.source;
  for (const auto& s : doc.sections) {
    try {
      if (s.name == "group") {
        out.catalog.add(parse_group(s, src));
      } else if (s.name == "real_form") {
        out.catalog.add(parse_real_form(s, src));
      } else if (s.name == "embedding") {
        out.catalog.add(parse_embedding(s, src));
      } else {
        throw InputError(src, s.line, s.name, "unknown catalog section");
      }
    } catch (const InputError&) {
      throw;
    } catch (const std::invalid_argument& ex) {
      throw InputError(src, s.line, "", ex.what());
    }
  }
  for (const auto* g : out.catalog.groups()) {
    for (auto& msg : validate_group(*g, out.catalog)) out.issues.push_back({g->name, std::move(msg)});
  }
  for (const auto* r : out.catalog.real_forms()) {
    for (auto& msg : validate_real_form(*r, out.catalog)) out.issues.push_back({r->name, std::move(msg)});
  }
  for (const auto* e : out.catalog.embeddings()) {
    for (auto& msg : validate_embedding(*e, out.catalog)) out.issues.push_back({e->name, std::move(msg)});
  }
  return out;
}

CatalogLoad load_catalog_file(const std::filesystem::path& path) {
  return load_catalog(read_text_document(path.string()));
}

Catalog load_validated_catalog(const std::filesystem::path& path) {
  auto load = load_catalog_file(path);
  if (!load.ok()) {
    std::string msg = "catalog failed validation:";
    for (const auto& i : load.issues) msg += " [" + i.record + "] " + i.message + ";";
    throw InputError(path.string(), 0, "", msg);
  }
  return std::move(load.catalog);
}

std::filesystem::path default_catalog_path() {
  if (const char* env = std::getenv("CARTAN_CATALOG"); env != nullptr && *env != '\0') return env;
#ifdef CARTAN_SOURCE_CATALOG
  if (std::filesystem::exists(CARTAN_SOURCE_CATALOG)) return CARTAN_SOURCE_CATALOG;
#endif
#ifdef CARTAN_INSTALLED_CATALOG
  return CARTAN_INSTALLED_CATALOG;
#else
  return "catalog.txt";
#endif
}

}  // namespace cartan
