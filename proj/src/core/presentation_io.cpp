#include "presentation_io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "errors.hpp"
#include "parse.hpp"

namespace ultk {

namespace {

using nlohmann::json;

bool valid_utf8(const std::string& s) {
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = s[i];
    std::size_t extra = 0;
    if (c < 0x80) {
      extra = 0;
    } else if ((c >> 5) == 0x6) {
      extra = 1;
    } else if ((c >> 4) == 0xe) {
      extra = 2;
    } else if ((c >> 3) == 0x1e) {
      extra = 3;
    } else {
      return false;
    }
    if (i + extra >= s.size()) return false;
    for (std::size_t k = 1; k <= extra; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    }
    i += extra + 1;
  }
  return true;
}

std::string strip_comment(const std::string& line) {
  auto pos = line.find('#');
  return pos == std::string::npos ? line : line.substr(0, pos);
}

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Polynomial parse_poly_at(const std::string& text, const PolyContextPtr& ctx, std::size_t line,
                         std::size_t col_offset) {
  try {
    return parse_polynomial(text, ctx);
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).find(" (line")),
                     line, col_offset + e.column());
  }
}

CoefficientField parse_field_spec(const std::vector<std::string>& words, std::size_t line) {
  if (words.size() == 2 && (words[1] == "rationals" || words[1] == "Q")) {
    return CoefficientField::rationals();
  }
  if (words.size() == 3 && words[1] == "fp") {
    try {
      return CoefficientField::prime_field(mpz_class(words[2]));
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid prime '" + words[2] + "'", line, 1);
    } catch (const ArgError& e) {
      throw ParseError(e.what(), line, 1);
    }
  }
  throw ParseError("field spec must be 'field rationals' or 'field fp <p>'", line, 1);
}

struct RawLine {
  std::size_t number;
  std::string key;
  std::string rest;  // after the key, trimmed
};

std::vector<RawLine> raw_lines(const std::string& text) {
  std::vector<RawLine> out;
  std::istringstream in(text);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    std::size_t sp = body.find_first_of(" \t");
    std::string key = sp == std::string::npos ? body : body.substr(0, sp);
    std::string rest = sp == std::string::npos ? "" : trim(body.substr(sp));
    out.push_back(RawLine{number, key, rest});
  }
  return out;
}

LoadedPresentation parse_presentation_text(const std::string& text) {
  bool have_field = false;
  CoefficientField field = CoefficientField::rationals();
  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  struct Pending {
    std::size_t line;
    std::string text;
  };
  std::vector<Pending> rels, params, modgens;
  struct PendingUnit {
    std::size_t line;
    std::string a, b;
    unsigned m = 0, n = 0;
  };
  std::vector<PendingUnit> units;

  for (const auto& rl : raw_lines(text)) {
    auto words = split_ws(rl.key + " " + rl.rest);
    if (rl.key == "field") {
      if (have_field) throw ParseError("duplicate field line", rl.number, 1);
      field = parse_field_spec(words, rl.number);
      have_field = true;
    } else if (rl.key == "var") {
      if (words.size() != 3) {
        throw ParseError("var line must be 'var <name> <weight>'", rl.number, 1);
      }
      names.push_back(words[1]);
      try {
        unsigned long w = std::stoul(words[2]);
        if (w == 0 || w > 0xffffffffUL) throw std::out_of_range("w");
        weights.push_back(static_cast<std::uint32_t>(w));
      } catch (const std::exception&) {
        throw ParseError("invalid weight '" + words[2] + "'", rl.number, 1);
      }
    } else if (rl.key == "rel") {
      rels.push_back({rl.number, rl.rest});
    } else if (rl.key == "param") {
      params.push_back({rl.number, rl.rest});
    } else if (rl.key == "modgen") {
      modgens.push_back({rl.number, rl.rest});
    } else if (rl.key == "unit") {
      // unit <a> | <m> | <b> | <n>
      std::vector<std::string> parts;
      std::string cur;
      for (char c : rl.rest) {
        if (c == '|') {
          parts.push_back(trim(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      parts.push_back(trim(cur));
      if (parts.size() != 4) {
        throw ParseError("unit line must be 'unit <a> | <m> | <b> | <n>'", rl.number, 1);
      }
      PendingUnit u;
      u.line = rl.number;
      u.a = parts[0];
      u.b = parts[2];
      try {
        u.m = static_cast<unsigned>(std::stoul(parts[1]));
        u.n = static_cast<unsigned>(std::stoul(parts[3]));
      } catch (const std::exception&) {
        throw ParseError("unit powers must be natural numbers", rl.number, 1);
      }
      units.push_back(std::move(u));
    } else {
      throw ParseError("unknown key '" + rl.key + "'", rl.number, 1);
    }
  }
  if (!have_field) throw ParseError("missing field line", 1, 1);

  VariableTable table = [&] {
    try {
      return VariableTable(names, weights);
    } catch (const ArgError& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }();
  PolyContextPtr ctx = make_context(table, field);

  std::vector<Polynomial> relations;
  for (const auto& p : rels) {
    Polynomial rel = parse_poly_at(p.text, ctx, p.line, 4);
    std::uint64_t deg = 0;
    if (rel.is_homogeneous(&deg) && !rel.is_zero() && deg == 0) {
      throw ParseError("relation is a nonzero constant; the quotient would not have S_0 = k",
                       p.line, 5);
    }
    if (!rel.is_homogeneous(&deg)) {
      std::set<std::uint64_t> degs;
      for (const auto& t : rel.terms()) degs.insert(t.mono.weighted_degree(table));
      std::string list;
      for (auto d : degs) list += (list.empty() ? "" : ", ") + std::to_string(d);
      throw ParseError("relation is not weighted-homogeneous (term degrees " + list + ")",
                       p.line, 5);
    }
    relations.push_back(std::move(rel));
  }
  if (units.size() > params.size()) {
    throw ParseError("more unit lines than param lines", units[params.size()].line, 1);
  }

  LoadedPresentation out{RingPresentation(table, field, std::move(relations)), {}, {}, {}};
  for (const auto& p : params) out.params.push_back(parse_poly_at(p.text, ctx, p.line, 6));
  for (const auto& u : units) {
    out.units.push_back(UnitCertificate{parse_poly_at(u.a, ctx, u.line, 5), u.m,
                                        parse_poly_at(u.b, ctx, u.line, 5), u.n});
  }
  for (const auto& g : modgens) out.module_gens.push_back(parse_poly_at(g.text, ctx, g.line, 7));
  return out;
}

LoadedPresentation parse_presentation_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("JSON: ") + e.what(), 1, 1);
  }
  static const std::set<std::string> allowed{"field",  "variables",        "relations",
                                            "params", "units",            "module_generators"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!allowed.count(key)) throw ParseError("unknown key '" + key + "'", 1, 1);
  }
  CoefficientField field = CoefficientField::rationals();
  if (!doc.contains("field")) throw ParseError("missing 'field'", 1, 1);
  if (doc["field"].is_string()) {
    std::string f = doc["field"];
    if (f != "rationals" && f != "Q") throw ParseError("unknown field '" + f + "'", 1, 1);
  } else if (doc["field"].is_object() && doc["field"].contains("prime")) {
    try {
      field = CoefficientField::prime_field(mpz_class(doc["field"]["prime"].get<long>()));
    } catch (const ArgError& e) {
      throw ParseError(e.what(), 1, 1);
    }
  } else {
    throw ParseError("field must be \"rationals\" or {\"prime\": p}", 1, 1);
  }

  std::vector<std::string> names;
  std::vector<std::uint32_t> weights;
  for (const auto& v : doc.value("variables", json::array())) {
    names.push_back(v.at("name").get<std::string>());
    weights.push_back(v.at("weight").get<std::uint32_t>());
  }
  VariableTable table = [&] {
    try {
      return VariableTable(names, weights);
    } catch (const ArgError& e) {
      throw ParseError(e.what(), 1, 1);
    }
  }();
  PolyContextPtr ctx = make_context(table, field);

  std::vector<Polynomial> relations;
  for (const auto& r : doc.value("relations", json::array())) {
    Polynomial rel = parse_polynomial(r.get<std::string>(), ctx);
    std::uint64_t deg = 0;
    if (!rel.is_homogeneous(&deg)) {
      throw ParseError("relation '" + r.get<std::string>() + "' is not weighted-homogeneous", 1,
                       1);
    }
    if (!rel.is_zero() && deg == 0) {
      throw ParseError("relation '" + r.get<std::string>() + "' is a nonzero constant", 1, 1);
    }
    relations.push_back(std::move(rel));
  }
  LoadedPresentation out{RingPresentation(table, field, std::move(relations)), {}, {}, {}};
  for (const auto& p : doc.value("params", json::array())) {
    out.params.push_back(parse_polynomial(p.get<std::string>(), ctx));
  }
  for (const auto& u : doc.value("units", json::array())) {
    out.units.push_back(UnitCertificate{
        parse_polynomial(u.at("numerator").get<std::string>(), ctx),
        u.at("power").get<unsigned>(),
        parse_polynomial(u.at("inverse_numerator").get<std::string>(), ctx),
        u.at("inverse_power").get<unsigned>()});
  }
  for (const auto& g : doc.value("module_generators", json::array())) {
    out.module_gens.push_back(parse_polynomial(g.get<std::string>(), ctx));
  }
  return out;
}

}  // namespace

LoadedPresentation parse_presentation(const std::string& text) {
  if (!valid_utf8(text)) throw ParseError("file is not valid UTF-8", 1, 1);
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    return parse_presentation_json(text);
  }
  return parse_presentation_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

LoadedPresentation load_presentation(const std::string& path) {
  return parse_presentation(read_file(path));
}

std::string serialize_presentation(const LoadedPresentation& p) {
  std::string out;
  out += "field " + p.ring.field().describe() + "\n";
  const auto& table = p.ring.table();
  for (std::size_t i = 0; i < table.size(); ++i) {
    out += "var " + table.name(i) + " " + std::to_string(table.weight(i)) + "\n";
  }
  for (const auto& r : p.ring.relations()) out += "rel " + r.to_string() + "\n";
  for (const auto& q : p.params) out += "param " + q.to_string() + "\n";
  for (const auto& u : p.units) {
    out += "unit " + u.numerator.to_string() + " | " + std::to_string(u.denominator_power) +
           " | " + u.inverse_numerator.to_string() + " | " + std::to_string(u.inverse_power) +
           "\n";
  }
  for (const auto& g : p.module_gens) out += "modgen " + g.to_string() + "\n";
  return out;
}

LoadedMap parse_map(const std::string& text) {
  if (!valid_utf8(text)) throw ParseError("file is not valid UTF-8", 1, 1);
  bool have_field = false;
  CoefficientField field = CoefficientField::rationals();
  std::vector<std::string> src_names, tgt_names;
  std::vector<std::uint32_t> src_weights, tgt_weights;
  struct PendingMap {
    std::size_t line;
    std::string var, image;
  };
  struct PendingPoly {
    std::size_t line;
    std::string text;
  };
  std::vector<PendingMap> maps;
  std::vector<PendingPoly> expects;

  for (const auto& rl : raw_lines(text)) {
    auto words = split_ws(rl.key + " " + rl.rest);
    if (rl.key == "field") {
      if (have_field) throw ParseError("duplicate field line", rl.number, 1);
      field = parse_field_spec(words, rl.number);
      have_field = true;
    } else if (rl.key == "source" || rl.key == "target") {
      if (words.size() != 3) {
        throw ParseError(rl.key + " line must be '" + rl.key + " <name> <weight>'", rl.number,
                         1);
      }
      unsigned long w = 0;
      try {
        w = std::stoul(words[2]);
        if (w == 0) throw std::out_of_range("w");
      } catch (const std::exception&) {
        throw ParseError("invalid weight '" + words[2] + "'", rl.number, 1);
      }
      if (rl.key == "source") {
        src_names.push_back(words[1]);
        src_weights.push_back(static_cast<std::uint32_t>(w));
      } else {
        tgt_names.push_back(words[1]);
        tgt_weights.push_back(static_cast<std::uint32_t>(w));
      }
    } else if (rl.key == "map") {
      auto eq = rl.rest.find('=');
      if (eq == std::string::npos) {
        throw ParseError("map line must be 'map <source var> = <target polynomial>'", rl.number,
                         1);
      }
      maps.push_back({rl.number, trim(rl.rest.substr(0, eq)), trim(rl.rest.substr(eq + 1))});
    } else if (rl.key == "expect") {
      expects.push_back({rl.number, rl.rest});
    } else {
      throw ParseError("unknown key '" + rl.key + "'", rl.number, 1);
    }
  }
  if (!have_field) throw ParseError("missing field line", 1, 1);

  VariableTable source(src_names, src_weights);
  VariableTable target(tgt_names, tgt_weights);
  PolyContextPtr tctx = make_context(target, field);
  PolyContextPtr sctx = make_context(source, field);

  std::vector<Polynomial> images(source.size(), Polynomial::zero(tctx));
  std::vector<bool> seen(source.size(), false);
  for (const auto& m : maps) {
    auto idx = source.index_of(m.var);
    if (!idx) throw ParseError("map: unknown source variable '" + m.var + "'", m.line, 1);
    if (seen[*idx]) throw ParseError("duplicate map for '" + m.var + "'", m.line, 1);
    images[*idx] = parse_poly_at(m.image, tctx, m.line, 4);
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < source.size(); ++i) {
    if (!seen[i]) throw ParseError("missing map for source variable '" + source.name(i) + "'", 1, 1);
  }
  LoadedMap out{source, target, field, std::move(images), {}};
  for (const auto& e : expects) out.expected.push_back(parse_poly_at(e.text, sctx, e.line, 7));
  return out;
}

LoadedMap load_map(const std::string& path) { return parse_map(read_file(path)); }

}  // namespace ultk
