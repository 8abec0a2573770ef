#include "mick/serialize.hpp"

#include <algorithm>
#include <stdexcept>

namespace mick {

namespace {

json exp_to_json(int doubled) {
  if (doubled % 2 == 0) return doubled / 2;
  return std::to_string(doubled) + "/2";
}

int exp_from_json(const json& j) {
  if (j.is_number_integer()) return 2 * j.get<int>();
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos || s.substr(slash + 1) != "2") throw std::invalid_argument("bad exponent " + s);
  return std::stoi(s.substr(0, slash));
}

int total_degree(const Monomial& m) {
  int d = 0;
  for (int k = 0; k < kSlots; ++k) d += m.e[k];
  return d;
}

}  // namespace

json poly_to_json(const LaurentPoly& p) {
  std::vector<Term> terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    int da = total_degree(a.m), db = total_degree(b.m);
    if (da != db) return da < db;
    return a.m < b.m;
  });
  json out = json::array();
  for (const auto& t : terms) {
    int last = 0;
    for (int k = 1; k < kSlots; ++k)
      if (t.m.e[k]) last = k;
    json te = json::array();
    for (int k = 1; k <= last; ++k) te.push_back(exp_to_json(t.m.e[k]));
    out.push_back(json::array({t.c.str(), exp_to_json(t.m.e[0]), te}));
  }
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  std::vector<Term> terms;
  for (const auto& t : j) {
    Monomial m;
    m.e[0] = static_cast<int16_t>(exp_from_json(t.at(1)));
    const json& te = t.at(2);
    if (te.size() >= static_cast<size_t>(kSlots)) throw std::invalid_argument("too many weight exponents");
    for (size_t k = 0; k < te.size(); ++k) m.e[k + 1] = static_cast<int16_t>(exp_from_json(te[k]));
    terms.push_back({m, GaussRat::parse(t.at(0).get<std::string>())});
  }
  return LaurentPoly::from_terms(terms);
}

json ratfn_to_json(const RatFn& r) { return json{{"num", poly_to_json(r.num())}, {"den", poly_to_json(r.den())}}; }

RatFn ratfn_from_json(const json& j) { return RatFn::fraction(poly_from_json(j.at("num")), poly_from_json(j.at("den"))); }

json elt_to_json(const FreeElt& x) {
  char g = x.sign() == Sign::Lowering ? 'f' : 'e';
  json terms = json::array();
  for (const auto& [w, c] : x.terms()) {
    json word = json::array();
    for (char ch : w) word.push_back(std::string(1, g) + std::to_string(static_cast<int>(ch)));
    terms.push_back(json{{"word", word}, {"coeff", ratfn_to_json(c)}});
  }
  return json{{"terms", terms}};
}

FreeElt elt_from_json(const json& j) {
  std::vector<std::pair<Word, RatFn>> terms;
  char sign = 0;
  for (const auto& t : j.at("terms")) {
    Word w;
    for (const auto& l : t.at("word")) {
      std::string name = l.get<std::string>();
      if (name.size() < 2 || (name[0] != 'f' && name[0] != 'e')) throw std::invalid_argument("bad letter " + name);
      if (sign && name[0] != sign) throw std::invalid_argument("mixed letters");
      sign = name[0];
      w.push_back(static_cast<char>(std::stoi(name.substr(1))));
    }
    terms.emplace_back(w, ratfn_from_json(t.at("coeff")));
  }
  FreeElt out(sign == 'e' ? Sign::Raising : Sign::Lowering);
  for (const auto& [w, c] : terms) out.add_term(w, c);
  return out;
}

json basis_to_json(const BasisForm& b) {
  json terms = json::array();
  for (const auto& t : b) terms.push_back(json{{"label", t.label}, {"coeff", ratfn_to_json(t.coeff)}, {"element", elt_to_json(t.elt)}});
  return json{{"basis", terms}};
}

json plus_basis_to_json(const std::vector<std::pair<int, BasisForm>>& parts) {
  json out = json::array();
  for (const auto& [k, b] : parts)
    out.push_back(json{{"raise", "e[" + std::to_string(k) + ",1]"}, {"lower", basis_to_json(b)}});
  return json{{"parts", out}};
}

std::string plus_basis_str(const std::vector<std::pair<int, BasisForm>>& parts) {
  std::string out;
  for (const auto& [k, b] : parts) {
    if (!out.empty()) out += " + ";
    std::string e = "e[" + std::to_string(k) + ",1]";
    if (b.size() == 1 && b[0].label == "1" && b[0].coeff == RatFn(1)) out += e;
    else out += "(" + basis_str(b) + ")*" + e;
  }
  return out.empty() ? "0" : out;
}

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t comma = s.find(',', start);
    std::string item = s.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    out.push_back(item);
    if (comma == std::string::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

WeightSpec parse_weight(const std::string& values, const std::string& phases, int dim) {
  WeightSpec w{std::vector<int>(dim, 0), std::vector<int>(dim, 0)};
  auto vs = split_list(values);
  if (static_cast<int>(vs.size()) != dim)
    throw std::invalid_argument("weight needs " + std::to_string(dim) + " coordinates");
  for (int k = 0; k < dim; ++k) {
    Rat r;
    try {
      r = Rat::parse(vs[k]);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight coordinate '" + vs[k] + "'");
    }
    Rat twice = r * Rat(2);
    if (!twice.is_integer()) throw std::invalid_argument("weight coordinates must be integers or halves");
    if (!twice.is_small() || twice.small_num() > 2000 || twice.small_num() < -2000)
      throw std::invalid_argument("weight coordinate out of range");
    w.c2[k] = static_cast<int>(twice.small_num());
  }
  if (phases.empty()) return w;
  auto ps = split_list(phases);
  if (static_cast<int>(ps.size()) != dim) throw std::invalid_argument("phase needs " + std::to_string(dim) + " entries");
  for (int k = 0; k < dim; ++k) {
    if (ps[k] == "1") w.phase[k] = 0;
    else if (ps[k] == "i") w.phase[k] = 1;
    else if (ps[k] == "-1") w.phase[k] = 2;
    else if (ps[k] == "-i") w.phase[k] = 3;
    else throw std::invalid_argument("phase entries are 1, -1, i, -i");
  }
  return w;
}

json report_to_json(const DecompositionReport& r) {
  json phis = json::array();
  for (const auto& p : r.phis)
    phis.push_back(json{{"i", p.i}, {"j", p.j}, {"value", p.value.str()}, {"zero", p.zero}});
  json wit = json::array(), co = json::array();
  for (auto [i, j] : r.witnesses) wit.push_back(json::array({i, j}));
  for (auto [i, j] : r.coincidences) co.push_back(json::array({i, j}));
  return json{{"phi", phis}, {"witnesses", wit}, {"coincidences", co}, {"verdict", r.verdict}};
}

json suite_to_json(const SuiteReport& r, bool timing) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(json{{"check", c.label}, {"pass", c.pass}});
  json out{{"suite", r.suite},
           {"algebra", r.algebra},
           {"pass", r.pass()},
           {"checks_run", r.checks.size()},
           {"failures", r.failures()},
           {"checks", checks}};
  if (timing) out["seconds"] = r.seconds;
  return out;
}

}  // namespace mick
