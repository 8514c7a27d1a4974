#include "ybekit/json_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace ybekit {

Json to_json(const Perm& p) { return Json(std::vector<Point>(p.images().begin(), p.images().end())); }

Perm perm_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("permutation must be a JSON array");
  std::vector<Point> images;
  for (const auto& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      throw ParseError("permutation entries must be non-negative integers");
    images.push_back(v.get<Point>());
  }
  try {
    return Perm(std::move(images));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json to_json(const Solution& s) {
  Json sigma = Json::array();
  for (const auto& p : s.sigmas()) sigma.push_back(to_json(p));
  return {{"n", s.size()}, {"sigma", sigma}};
}

Solution solution_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("sigma")) throw ParseError("solution must be an object with \"sigma\"");
  const auto& rows = j.at("sigma");
  if (!rows.is_array() || rows.empty()) throw ParseError("\"sigma\" must be a non-empty array");
  std::vector<Perm> sigma;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    try {
      sigma.push_back(perm_from_json(rows[x]));
    } catch (const ParseError& e) {
      throw ParseError("sigma[" + std::to_string(x) + "]: " + e.what());
    }
  }
  if (j.contains("n")) {
    if (!j.at("n").is_number_integer() || j.at("n").get<long long>() != static_cast<long long>(sigma.size()))
      throw ParseError("\"n\" does not match the number of sigma rows");
  }
  try {
    return Solution(std::move(sigma));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t upto = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError("malformed JSON at line " + std::to_string(line) + ", column " +
                     std::to_string(col) + ": " + e.what());
  }
}

Solution parse_solution(const std::string& text) { return solution_from_json(parse_json_text(text)); }

Json to_json(const ValidationReport& r) {
  Json j{{"involutive", r.involutive},
         {"nondegenerate", r.nondegenerate},
         {"braid", r.braid},
         {"passes", r.passes()}};
  if (r.involutive_counterexample) j["involutive_counterexample"] = *r.involutive_counterexample;
  if (r.degenerate_gamma) j["degenerate_gamma"] = *r.degenerate_gamma;
  if (r.braid_counterexample) j["braid_counterexample"] = *r.braid_counterexample;
  return j;
}

Json to_json(const CatalogRecord& r) {
  Json j = to_json(r.sigma);
  j["canonical"] = r.canonical;
  j["valid"] = r.valid();
  if (!r.valid()) {
    j["validation"] = to_json(r.validation);
    return j;
  }
  if (r.flags) {
    const auto& f = *r.flags;
    j["indecomposable"] = f.indecomposable;
    j["irretractable"] = f.irretractable;
    j["primitive"] = f.primitive;
    j["mpl"] = f.mpl ? Json(*f.mpl) : Json(nullptr);
    j["group_order"] = f.group_order;
    if (f.brace_trivial) j["brace_trivial"] = *f.brace_trivial;
  }
  if (!r.invariants.empty()) j["invariants"] = r.invariants;
  return j;
}

CatalogRecord record_from_json(const Json& j) {
  CatalogRecord r;
  r.sigma = solution_from_json(j);
  r.canonical = j.value("canonical", false);
  r.validation = validate(r.sigma);
  if (j.value("valid", false) != r.valid()) throw ParseError("record \"valid\" flag disagrees with table");
  if (!r.valid()) return r;
  try {
    SolutionFlags f;
    f.indecomposable = j.at("indecomposable").get<bool>();
    f.irretractable = j.at("irretractable").get<bool>();
    f.primitive = j.at("primitive").get<bool>();
    if (!j.at("mpl").is_null()) f.mpl = j.at("mpl").get<std::size_t>();
    f.group_order = j.at("group_order").get<std::size_t>();
    if (j.contains("brace_trivial")) f.brace_trivial = j.at("brace_trivial").get<bool>();
    r.flags = f;
    if (j.contains("invariants")) r.invariants = j.at("invariants").get<std::map<std::string, bool>>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("catalog record: ") + e.what());
  }
  return r;
}

Json to_json(const FiniteBrace& b, bool with_lambda) {
  const std::size_t k = b.order();
  Json elements = Json::array();
  for (const auto& e : b.elements()) elements.push_back(to_json(e));
  auto table = [k](const std::vector<FiniteBrace::Index>& t) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < k; ++r)
      rows.push_back(std::vector<FiniteBrace::Index>(t.begin() + r * k, t.begin() + (r + 1) * k));
    return rows;
  };
  Json j{{"order", k}, {"elements", elements}, {"mul", table(b.mul_table())}, {"add", table(b.add_table())}};
  if (with_lambda) j["lambda"] = table(b.lambda_table());
  return j;
}

Json catalog_header(std::size_t n, const EnumerateOptions& opts, std::size_t count) {
  Json budget{{"threads", opts.threads},
              {"allow_large", opts.allow_large},
              {"group_cap", opts.analyze.group_cap},
              {"brace_cap", opts.analyze.brace_cap},
              {"time_budget_secs", opts.time_budget_secs ? Json(*opts.time_budget_secs) : Json(nullptr)}};
  return {{"type", "header"}, {"n", n},         {"tool", kToolName},
          {"version", kToolVersion}, {"count", count}, {"budget", budget}};
}

void write_catalog(std::ostream& out, const Catalog& catalog) {
  out << catalog.header.dump() << '\n';
  for (const auto& r : catalog.records) {
    Json j = to_json(r);
    j["type"] = "record";
    out << j.dump() << '\n';
  }
}

Catalog read_catalog(std::istream& in) {
  Catalog c;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    Json j;
    try {
      j = parse_json_text(line);
    } catch (const ParseError& e) {
      throw ParseError("catalog line " + std::to_string(lineno) + ": " + e.what());
    }
    if (j.value("type", "") == "header") {
      c.header = j;
      continue;
    }
    c.records.push_back(record_from_json(j));
  }
  if (c.header.is_null()) throw ParseError("catalog has no header line");
  if (c.header.value("count", c.records.size()) != c.records.size())
    throw ParseError("catalog header count does not match the number of records");
  return c;
}

Json tally(const std::vector<CatalogRecord>& records) {
  std::size_t indec = 0, irr = 0, prim = 0, mpl_some = 0, trivial_brace = 0;
  std::map<std::string, std::size_t> by_mpl;
  for (const auto& r : records) {
    if (!r.flags) continue;
    indec += r.flags->indecomposable;
    irr += r.flags->irretractable;
    prim += r.flags->primitive;
    trivial_brace += r.flags->brace_trivial.value_or(false);
    if (r.flags->mpl) {
      ++mpl_some;
      ++by_mpl[std::to_string(*r.flags->mpl)];
    } else {
      ++by_mpl["none"];
    }
  }
  return {{"classes", records.size()},     {"indecomposable", indec},   {"irretractable", irr},
          {"primitive", prim},             {"multipermutation", mpl_some}, {"brace_trivial", trivial_brace},
          {"mpl", by_mpl}};
}

Json to_json(const ClassificationReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries) {
    Json prim = Json::array();
    for (const auto& rec : e.primitive) prim.push_back(to_json(rec.sigma));
    entries.push_back({{"n", e.n},
                       {"classes", e.classes},
                       {"indecomposable", e.indecomposable},
                       {"irretractable", e.irretractable},
                       {"primitive_count", e.primitive.size()},
                       {"primitive", prim},
                       {"shape_ok", e.shape_ok},
                       {"diagnostic", e.diagnostic}});
  }
  return {{"n_max", r.n_max}, {"ok", r.ok()}, {"entries", entries}};
}

std::string classification_csv(const ClassificationReport& r) {
  std::ostringstream os;
  os << "n,classes,indecomposable,irretractable,primitive,shape_ok\n";
  for (const auto& e : r.entries)
    os << e.n << ',' << e.classes << ',' << e.indecomposable << ',' << e.irretractable << ','
       << e.primitive.size() << ',' << (e.shape_ok ? "true" : "false") << '\n';
  return os.str();
}

}  // namespace ybekit
