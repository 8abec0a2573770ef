#include <CLI11.hpp>
#include <iostream>
#include <optional>

#include "mick/serialize.hpp"

using namespace mick;

namespace {

struct Common {
  std::string type;
  int rank = 0;
  std::string format = "text";
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

LieType make_type(const Common& c) {
  if (c.type.size() != 1) throw UsageError("--type is one of A, B, C, D");
  if (c.rank > 6) throw UsageError("rank above 6 is not supported");
  LieType t = LieType::parse(c.type[0], c.rank);
  if (c.rank > 4) std::cerr << "warning: rank " << c.rank << " is above the tested range\n";
  return t;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--type", c.type, "family A, B, C or D")->required();
  sub->add_option("--rank", c.rank, "rank")->required()->check(CLI::Range(1, 64));
  sub->add_option("--format", c.format, "text or json")->check(CLI::IsMember({"text", "json"}));
}

void print(const Common& c, const json& j, const std::string& text) {
  if (c.format == "json") std::cout << j.dump(2) << "\n";
  else std::cout << text << "\n";
}

FreeElt expand(const BasisForm& b) {
  FreeElt out;
  for (const auto& t : b) out += t.coeff * t.elt;
  return out;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

int cmd_gens(const Common& c, const std::string& side, int j, const std::optional<std::string>& weight,
             const std::string& phase) {
  Algebra g(make_type(c));
  std::optional<WeightSpec> w;
  if (weight) w = parse_weight(*weight, phase, g.rd.dim());
  json out{{"algebra", g.rd.type().name()}, {"side", side}, {"j", j}};
  std::string text;
  if (side == "minus") {
    if (!g.sh.minus_range(j)) throw UsageError("j outside the range of negative generators");
    BasisForm b = g.sh.gen_minus_basis(j);
    out["generator"] = basis_to_json(b);
    out["element"] = elt_to_json(expand(b));
    text = basis_str(b);
    if (w) {
      FreeElt v = evaluate_basis(b, *w);
      bool nz = !g.verma.is_zero(v);
      out["weight"] = weight_str(*w);
      out["value"] = elt_to_json(v);
      out["nonzero"] = nz;
      text = v.str() + "\nnonzero: " + bool_str(nz);
    }
  } else {
    if (!g.ra.plus_range(j)) throw UsageError("j outside the range of positive generators");
    auto parts = g.ra.gen_plus_basis(j);
    out["generator"] = plus_basis_to_json(parts);
    text = plus_basis_str(parts);
    if (w) {
      json vals = json::array();
      std::string vt;
      bool nz = false;
      for (const auto& [k, b] : parts) {
        FreeElt v = evaluate_basis(b, *w);
        std::string e = "e[" + std::to_string(k) + ",1]";
        vals.push_back(json{{"raise", e}, {"lower", elt_to_json(v)}});
        if (g.verma.is_zero(v)) continue;
        nz = true;
        if (!vt.empty()) vt += " + ";
        if (v == FreeElt::unit()) vt += e;
        else if (v.size() == 1 && v.terms().begin()->first.empty()) vt += v.str() + "*" + e;
        else vt += "(" + v.str() + ")*" + e;
      }
      out["weight"] = weight_str(*w);
      out["value"] = vals;
      out["nonzero"] = nz;
      text = (vt.empty() ? "0" : vt) + "\nnonzero: " + bool_str(nz);
    }
  }
  print(c, out, text);
  return 0;
}

int cmd_chat(const Common& c, int j, const std::optional<std::string>& weight, const std::string& phase) {
  Algebra g(make_type(c));
  std::optional<WeightSpec> w;
  if (weight) w = parse_weight(*weight, phase, g.rd.dim());
  if (j != 0 && (j < 1 || j > g.rd.N())) throw UsageError("j outside 1..N");
  json rows = json::array();
  std::string text;
  bool all_equal = true;
  for (int k = 1; k <= g.rd.N(); ++k) {
    if (j != 0 && k != j) continue;
    RatFn r = g.dc.C_route(k);
    bool eq = k == 1 ? r == RatFn(1) : r == g.dc.C_factorized(k);
    all_equal = all_equal && eq;
    json row{{"j", k}, {"C", ratfn_to_json(r)}, {"text", r.str()}, {"factorized_equal", eq}};
    std::string line = "C_" + std::to_string(k) + " = " + r.str() + "  [factorized: " + (eq ? "equal" : "DIFFERENT") + "]";
    if (w) {
      RatFn v = evaluate(r, *w);
      row["value"] = v.str();
      line += "  at " + weight_str(*w) + ": " + v.str();
    }
    rows.push_back(row);
    if (!text.empty()) text += "\n";
    text += line;
  }
  print(c, json{{"algebra", g.rd.type().name()}, {"C", rows}}, text);
  return all_equal ? 0 : 1;
}

int cmd_decompose(const Common& c, const std::optional<std::string>& weight, const std::string& phase) {
  Algebra g(make_type(c));
  if (!weight) throw UsageError("decompose needs --weight");
  WeightSpec w = parse_weight(*weight, phase, g.rd.dim());
  DecompositionReport r = g.dc.direct_sum_report(w);
  json out{{"algebra", g.rd.type().name()}, {"weight", weight_str(w)}};
  out.update(report_to_json(r));
  std::string text = g.rd.type().name() + " at " + weight_str(w) + "\n";
  for (const auto& p : r.phis)
    text += "phi(" + std::to_string(p.i) + "," + std::to_string(p.j) + ") = " + p.value.str() + (p.zero ? "  ZERO" : "") + "\n";
  text += "coincident eigenvalues x_i = x_j:";
  if (r.coincidences.empty()) text += " none";
  for (auto [i, k] : r.coincidences) text += " (" + std::to_string(i) + "," + std::to_string(k) + ")";
  text += "\nwitnesses:";
  if (r.witnesses.empty()) text += " none";
  for (auto [i, k] : r.witnesses) text += " (" + std::to_string(i) + "," + std::to_string(k) + ")";
  text += "\ndirect sum: " + bool_str(r.verdict);
  print(c, out, text);
  return 0;
}

int cmd_verify(const Common& c, const std::string& suite, uint64_t seed, bool timing) {
  LieType t = make_type(c);
  auto reports = run_suite(suite, t, seed);
  bool ok = true;
  json arr = json::array();
  std::string text;
  for (const auto& r : reports) {
    ok = ok && r.pass();
    arr.push_back(suite_to_json(r, timing));
    if (!text.empty()) text += "\n";
    text += r.suite + " " + r.algebra + ": " + (r.pass() ? "PASS" : "FAIL") + " (" +
            std::to_string(r.checks.size() - r.failures()) + "/" + std::to_string(r.checks.size()) + " checks)";
    if (timing) text += " " + std::to_string(r.seconds) + " s";
    for (const auto& ch : r.checks)
      if (!ch.pass) text += "\n  failed: " + ch.label;
  }
  print(c, json{{"seed", seed}, {"pass", ok}, {"suites", arr}}, text);
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mickelsson step algebra generators and tensor product decompositions"};
  app.require_subcommand(1);

  Common c;
  std::string side, phase, suite;
  int j = 0;
  std::optional<std::string> weight;
  uint64_t seed = 0;
  bool timing = false;

  auto* gens = app.add_subcommand("gens", "regularized generators");
  add_common(gens, c);
  gens->add_option("--side", side, "minus or plus")->required()->check(CLI::IsMember({"minus", "plus"}));
  gens->add_option("--j", j, "node index")->required();
  gens->add_option("--weight", weight, "comma separated coordinates, halves allowed");
  gens->add_option("--phase", phase, "comma separated phases from 1, -1, i, -i");

  auto* chat = app.add_subcommand("chat", "projection coefficients");
  add_common(chat, c);
  chat->add_option("--j", j, "node index (default: all)");
  chat->add_option("--weight", weight, "comma separated coordinates");
  chat->add_option("--phase", phase, "comma separated phases");

  auto* dec = app.add_subcommand("decompose", "direct sum analysis at a weight");
  add_common(dec, c);
  dec->add_option("--weight", weight, "comma separated coordinates");
  dec->add_option("--phase", phase, "comma separated phases");

  auto* ver = app.add_subcommand("verify", "run a verification suite");
  add_common(ver, c);
  std::vector<std::string> names = suite_names();
  names.push_back("all");
  ver->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(names));
  ver->add_option("--seed", seed, "seed for the weight battery");
  ver->add_flag("--timing", timing, "report elapsed times");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (*gens) return cmd_gens(c, side, j, weight, phase);
    if (*chat) return cmd_chat(c, j, weight, phase);
    if (*dec) return cmd_decompose(c, weight, phase);
    return cmd_verify(c, suite, seed, timing);
  } catch (const PoleError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
