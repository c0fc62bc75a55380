#include "dmult/render.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "dmult/error.hpp"

namespace dmult {

namespace {

using nlohmann::ordered_json;

ordered_json weight_json(const Weight& w) {
  ordered_json a = ordered_json::array();
  for (int x : w.coords()) a.push_back(x);
  return a;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// c*e^{w} with the coefficient parenthesised when it is not a single token.
std::string text_term(const std::string& coeff, const Weight& w) {
  const bool compound = coeff.find(' ') != std::string::npos || coeff.front() == '-';
  if (w.is_zero()) return compound ? "(" + coeff + ")" : coeff;
  const std::string mono = "e^{" + w.to_string() + "}";
  if (coeff == "1") return mono;
  if (compound) return "(" + coeff + ")*" + mono;
  return coeff + "*" + mono;
}

template <class S, class Str>
std::string render_series(const AffineWeylGroup& group, const Weight* lambda, const WeightSeries<S>& s, Format f,
                          Str coeff_string) {
  const std::vector<Weight> order = display_order(group, s.support());
  switch (f) {
    case Format::Json: {
      ordered_json terms = ordered_json::array();
      for (const Weight& w : order) terms.push_back({{"weight", weight_json(w)}, {"coeff", coeff_string(s.coefficient(w))}});
      ordered_json doc;
      if (lambda) doc["lambda"] = weight_json(*lambda);
      doc["terms"] = terms;
      return doc.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = "weight,coeff\n";
      for (const Weight& w : order) out += csv_field(w.to_string()) + "," + csv_field(coeff_string(s.coefficient(w))) + "\n";
      return out;
    }
    case Format::Text: {
      if (order.empty()) return "0\n";
      std::string out;
      for (const Weight& w : order) {
        if (!out.empty()) out += " + ";
        out += text_term(coeff_string(s.coefficient(w)), w);
      }
      return out + "\n";
    }
  }
  throw InvariantError("unknown format");
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format '" + s + "' (expected json, csv or text)");
}

std::vector<Weight> display_order(const AffineWeylGroup& group, std::vector<Weight> support) {
  std::vector<std::pair<int, Weight>> keyed;
  keyed.reserve(support.size());
  for (Weight& w : support) keyed.emplace_back(-group.orbit_data(w).length_w(), std::move(w));
  std::sort(keyed.begin(), keyed.end());
  std::vector<Weight> out;
  for (auto& [len, w] : keyed) out.push_back(std::move(w));
  return out;
}

std::string render_character(const AffineWeylGroup& group, const CharSeries& chi, Format f) {
  if (f == Format::Json) {
    ordered_json doc = ordered_json::array();
    for (const Weight& w : display_order(group, chi.support()))
      doc.push_back({{"weight", weight_json(w)}, {"mult", chi.coefficient(w)}});
    return doc.dump(2) + "\n";
  }
  if (f == Format::Csv) {
    std::string out = "weight,mult\n";
    for (const Weight& w : display_order(group, chi.support()))
      out += csv_field(w.to_string()) + "," + std::to_string(chi.coefficient(w)) + "\n";
    return out;
  }
  return render_series(group, nullptr, chi, f, [](long c) { return std::to_string(c); });
}

std::string render_e_qt(const AffineWeylGroup& group, const Weight& lambda, const RatSeries& e, Format f) {
  const int m = group.roots().denom_m();
  return render_series(group, &lambda, e, f, [m](const RatQT& c) { return c.to_string(m); });
}

std::string render_e_t(const AffineWeylGroup& group, const Weight& lambda, const LaurentSeries& e, Format f) {
  return render_series(group, &lambda, e, f, [](const LaurentT& c) { return c.to_string(); });
}

std::string render_predictions(const std::string& type, const std::vector<PredictionRecord>& recs, Format f) {
  switch (f) {
    case Format::Json: {
      ordered_json doc = ordered_json::array();
      for (const auto& r : recs) {
        ordered_json checks = ordered_json::object();
        for (const auto& [name, ok] : r.checks) checks[name] = ok;
        ordered_json j;
        j["type"] = type;
        j["lambda"] = weight_json(r.lambda);
        j["mu"] = weight_json(r.mu);
        j["m"] = r.m;
        j["n"] = r.n ? ordered_json(*r.n) : ordered_json(nullptr);
        j["vol_poly"] = r.vol_poly ? ordered_json(r.vol_poly->to_string(true)) : ordered_json(nullptr);
        j["checks"] = checks;
        j["checks_passed"] = r.checks_passed();
        doc.push_back(j);
      }
      return doc.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = "type,lambda,mu,m,n,vol_poly,checks_passed\n";
      for (const auto& r : recs) {
        out += type + "," + csv_field(r.lambda.to_string()) + "," + csv_field(r.mu.to_string()) + "," +
               std::to_string(r.m) + "," + (r.n ? std::to_string(*r.n) : "") + "," +
               csv_field(r.vol_poly ? r.vol_poly->to_string(true) : "") + "," +
               (r.checks_passed() ? "true" : "false") + "\n";
      }
      return out;
    }
    case Format::Text: {
      std::ostringstream os;
      for (const auto& r : recs) {
        os << type << "  lambda=" << r.lambda.to_string() << "  mu=" << r.mu.to_string() << "  m=" << r.m;
        if (r.n) os << "  n=" << *r.n;
        if (r.vol_poly) os << "  vol=" << r.vol_poly->to_string(true);
        os << "  checks=" << (r.checks_passed() ? "pass" : "FAIL");
        if (!r.checks_passed()) {
          os << " [";
          bool first = true;
          for (const auto& [name, ok] : r.checks)
            if (!ok) {
              os << (first ? "" : ",") << name;
              first = false;
            }
          os << "]";
        }
        if (r.n_is_zero()) os << "  (n = 0)";
        os << "\n";
      }
      return os.str();
    }
  }
  throw InvariantError("unknown format");
}

std::string render_verify(const VerifyReport& rep, Format f) {
  switch (f) {
    case Format::Json: {
      ordered_json checks = ordered_json::array();
      for (const auto& c : rep.checks)
        checks.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"failures", c.failures}});
      ordered_json doc;
      doc["type"] = rep.type;
      doc["radius"] = rep.radius;
      doc["weights"] = rep.weights;
      doc["pairs"] = rep.pairs;
      doc["checks"] = checks;
      doc["zero_dimension_pairs"] = rep.zero_dimension_pairs;
      doc["passed"] = rep.ok();
      return doc.dump(2) + "\n";
    }
    case Format::Csv: {
      std::string out = "type,radius,check,checked,failed\n";
      for (const auto& c : rep.checks)
        out += rep.type + "," + std::to_string(rep.radius) + "," + c.name + "," + std::to_string(c.checked) + "," +
               std::to_string(c.failed) + "\n";
      return out;
    }
    case Format::Text: {
      std::ostringstream os;
      os << "verify " << rep.type << " radius " << rep.radius << ": " << rep.weights << " weights, " << rep.pairs
         << " pairs\n";
      for (const auto& c : rep.checks) {
        os << "  " << c.name << std::string(c.name.size() < 22 ? 22 - c.name.size() : 1, ' ') << "checked "
           << c.checked << "  failed " << c.failed << "\n";
        for (const auto& x : c.failures) os << "      " << x << "\n";
      }
      os << "  pairs with n = 0: " << rep.zero_dimension_pairs.size() << "\n";
      for (const auto& z : rep.zero_dimension_pairs) os << "      " << z << "\n";
      os << "result: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
      return os.str();
    }
  }
  throw InvariantError("unknown format");
}

}  // namespace dmult
