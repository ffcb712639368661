#pragma once

#include <optional>
#include <string>

#include "downup/cli/expression.hpp"
#include "downup/cli/report.hpp"
#include "downup/downup.hpp"

namespace downup::cli {

struct Options {
  std::optional<int> degree;  // overrides the per-command default cap
  int bound = 4;              // ordering-axiom exhaustion bound
};

inline constexpr int kPbwDegree = 8;
inline constexpr int kHilbertDegree = 12;
inline constexpr int kReesDegree = 10;
inline constexpr int kAssocDegree = 10;

namespace detail {

inline std::string render_free(const freealg::FreePoly& p, const freealg::WeightedOrder& order,
                               const std::vector<std::string>& names,
                               freealg::RenderStyle style = freealg::RenderStyle::Ascii) {
  return freealg::render(p, order, names, style);
}

/// Reason the solvable structure is unavailable, if it is.
inline std::optional<std::string> solvable_gate(const gdu::GDUParams& p) {
  if (p.degree_f() < 1)
    return "hypothesis deg f ≥ 1 fails";
  if (is_zero(p.lambda * p.omega))
    return "hypothesis λω ≠ 0 fails";
  return std::nullopt;
}

inline std::optional<std::string> graded_gate(const gdu::GDUAlgebra& alg) {
  if (alg.degree_f() < 1)
    return "hypothesis deg f ≥ 1 fails";
  return std::nullopt;
}

inline Json integers_json(const std::vector<Integer>& v) {
  Json out = Json::array();
  for (const auto& x : v)
    out.push_back(x.fits_slong_p() ? Json(x.get_si()) : Json(x.get_str()));
  return out;
}

inline std::string join(const std::vector<Integer>& v) {
  std::string out;
  for (const auto& x : v)
    out += (out.empty() ? "" : ", ") + x.get_str();
  return out;
}

inline std::string series_form(int w) {
  return w == 1 ? "1/(1-t)^4" : "1/((1-t)^2 (1-t^" + std::to_string(w) + ")^2)";
}

}  // namespace detail

inline Report start_report(const std::string& command, const gdu::GDUAlgebra& alg) {
  Report r;
  r.command = command;
  r.algebra = algebra_json(alg);
  r.notes = alg.notes();
  return r;
}

inline Report cmd_certify(const gdu::GDUAlgebra& alg, const Options& opt = {}) {
  Report r = start_report("certify", alg);
  const auto& cert = alg.certificate();
  const auto& g = alg.named_relations();
  Json rels = Json::array();
  std::vector<std::string> lines;
  for (const auto& [name, rel] : {std::pair{"g31", &g.g31}, std::pair{"g12", &g.g12}, std::pair{"g32", &g.g32}}) {
    rels.push_back(freealg::render_relation(*rel, alg.order(), gdu::generator_names()));
    lines.push_back(std::string(name) + " = " +
                    freealg::render_relation(*rel, alg.order(), gdu::generator_names(), freealg::RenderStyle::Pretty));
  }
  r.add("groebner", cert.holds ? Status::Pass : Status::Fail,
        std::to_string(alg.relations().size()) + " relations, " + std::to_string(cert.compositions_checked) +
            (cert.compositions_checked == 1 ? " composition reduces" : " compositions reduce") + " to 0",
        Json{{"relations", rels}, {"compositions", cert.compositions_checked}})
      .lines = lines;

  const int d = opt.degree.value_or(kPbwDegree);
  auto pbw = gdu::check_pbw(alg, d);
  Json rows = Json::array();
  std::string counts;
  for (const auto& row : pbw.rows) {
    rows.push_back(Json{{"degree", row.degree}, {"normal_words", row.normal_words}, {"exponent_triples", row.exponent_triples}});
    counts += (counts.empty() ? "" : " ") + std::to_string(row.normal_words);
  }
  r.add("pbw", pbw.holds ? Status::Pass : Status::Fail,
        "normal words vs exponent triples up to degree " + std::to_string(d), Json{{"rows", rows}})
      .lines.push_back("counts: " + counts);

  if (auto reason = detail::solvable_gate(alg.params())) {
    r.skip("solvable", *reason);
    r.skip("ordering-axioms", *reason);
    return r;
  }
  auto sol = gdu::to_solvable(alg);
  auto sc = solvable::verify_solvable(sol);
  auto& rec = r.add("solvable", sc.holds ? Status::Pass : Status::Fail,
                    "commutation table on (X2, X1, X3), weights (" + std::to_string(alg.degree_f()) + ", 1, " +
                        std::to_string(alg.degree_f()) + ")",
                    Json{{"diagnostics", sc.diagnostics}});
  for (const auto& rule : sol.rules()) {
    solvable::PbwPoly rhs = rule.lower;
    rhs.add_term(solvable::add(solvable::unit_exponent(3, rule.i), solvable::unit_exponent(3, rule.j)), rule.lambda);
    rec.lines.push_back(sol.names()[rule.j] + "·" + sol.names()[rule.i] + " = " +
                        solvable::render(rhs, sol.order(), sol.names(), freealg::RenderStyle::Pretty));
  }
  for (const auto& msg : sc.diagnostics)
    rec.lines.push_back(msg);

  auto oc = solvable::verify_ordering_axioms(sol, opt.bound);
  Json data{{"bound", opt.bound}, {"instances", oc.instances}};
  std::string summary = "bound " + std::to_string(opt.bound) + ", " + std::to_string(oc.instances) + " instances";
  if (oc.violation) {
    data["violation"] = oc.violation->describe(sol.names());
    summary += "; " + oc.violation->describe(sol.names());
  }
  r.add("ordering-axioms", oc.holds ? Status::Pass : Status::Fail, summary, data);
  for (const auto& n : oc.notes)
    r.notes.push_back(n);
  return r;
}

/// Normal form of `expression` modulo the defining relations, or modulo the
/// homogenized relations when `homogenized` (T allowed).
inline Report cmd_normal_form(const gdu::GDUAlgebra& alg, const std::string& expression, bool homogenized = false) {
  Report r = start_report("nf", alg);
  std::optional<graded::HomogenizedAlgebra> H;
  if (homogenized) {
    if (auto reason = detail::graded_gate(alg)) {
      r.skip("normal-form", *reason);
      return r;
    }
    H.emplace(alg);
  }
  const auto& rels = H ? H->relations() : alg.relations();
  const auto& names = H ? graded::homogenized_names() : gdu::generator_names();
  const auto bij = H ? graded::homogenized_bijection() : gdu::gdu_bijection();

  freealg::FreePoly input = parse_expression(expression, homogenized);
  freealg::FreePoly nf = freealg::normal_form(input, rels);
  Json terms = Json::array();
  for (const auto& [w, c] : freealg::sorted_terms(nf, rels.order())) {
    Json e = Json::array();
    for (unsigned k : bij.to_exponent(w))
      e.push_back(k);
    terms.push_back(Json{{"exponent", e}, {"coefficient", downup::to_string(c)}});
  }
  std::vector<std::string> order_names;
  for (auto g : bij.letters())
    order_names.push_back(names[g]);
  const std::string pretty = detail::render_free(nf, rels.order(), names, freealg::RenderStyle::Pretty);
  r.add("normal-form", Status::Pass, pretty,
        Json{{"input", expression},
             {"normal_form", detail::render_free(nf, rels.order(), names)},
             {"basis_order", order_names},
             {"terms", terms}});

  // Same element computed by multiplying generators in the solvable algebra.
  if (auto reason = detail::solvable_gate(alg.params())) {
    r.skip("solvable-product", *reason);
    return r;
  }
  auto sol = H ? graded::solvable_homogenized(*H) : gdu::to_solvable(alg);
  solvable::Multiplier mul(sol);
  solvable::PbwPoly product;
  for (const auto& [w, c] : input) {
    solvable::PbwPoly acc = solvable::PbwPoly::constant(sol.size(), c);
    for (auto g : w) {
      const auto& letters = bij.letters();
      auto pos = static_cast<std::size_t>(std::find(letters.begin(), letters.end(), g) - letters.begin());
      acc = mul.times_generator(acc, pos);
    }
    product += acc;
  }
  bool agree = bij.to_pbw(nf) == product;
  r.add("solvable-product", agree ? Status::Pass : Status::Fail,
        agree ? "PBW multiplication gives the same element"
              : "PBW multiplication gives " + solvable::render(product, sol.order(), sol.names()));
  return r;
}

inline Report cmd_graded_assoc(const gdu::GDUAlgebra& alg, const Options& opt = {}) {
  Report r = start_report("graded assoc", alg);
  if (auto reason = detail::graded_gate(alg)) {
    r.skip("assoc.groebner", *reason);
    r.skip("assoc.dimensions", *reason);
    return r;
  }
  const int d = opt.degree.value_or(kAssocDegree);
  auto g = graded::assoc_graded(alg, d);
  Json rels = Json::array();
  std::vector<std::string> lines;
  for (const auto& rel : g.relations) {
    rels.push_back(freealg::render_relation(rel, alg.order(), gdu::generator_names()));
    lines.push_back(freealg::render_relation(rel, alg.order(), gdu::generator_names(), freealg::RenderStyle::Pretty));
  }
  r.add("assoc.groebner", g.certificate.holds ? Status::Pass : Status::Fail,
        "LH of the defining relations is a homogeneous Groebner basis", Json{{"relations", rels}})
      .lines = lines;
  std::vector<Integer> graded, jumps;
  for (const auto& row : g.dimensions) {
    graded.push_back(row.graded);
    jumps.push_back(Integer(row.filtered));
  }
  r.add("assoc.dimensions", g.dimensions_match ? Status::Pass : Status::Fail,
        "dim G(A)_q = dim F_q A - dim F_(q-1) A for q <= " + std::to_string(d),
        Json{{"graded", detail::integers_json(graded)}, {"filtration_jumps", detail::integers_json(jumps)}})
      .lines.push_back("h: " + detail::join(graded));
  return r;
}

inline Report cmd_graded_homogenize(const gdu::GDUAlgebra& alg) {
  Report r = start_report("graded homogenize", alg);
  if (auto reason = detail::graded_gate(alg)) {
    r.skip("homogenize.groebner", *reason);
    return r;
  }
  graded::HomogenizedAlgebra H(alg);
  const auto& names = graded::homogenized_names();
  Json rels = Json::array();
  std::vector<std::string> lines;
  for (const auto& rel : H.relations()) {
    rels.push_back(freealg::render_relation(rel, H.order(), names));
    lines.push_back(freealg::render_relation(rel, H.order(), names, freealg::RenderStyle::Pretty));
  }
  r.add("homogenize.groebner", H.certificate().holds ? Status::Pass : Status::Fail,
        std::to_string(H.relations().size()) + " homogeneous relations, T < X2 < X1 < X3",
        Json{{"relations", rels}})
      .lines = lines;

  std::vector<freealg::Word> expect{{gdu::X3, gdu::X1}, {gdu::X1, gdu::X2}, {gdu::X3, gdu::X2},
                                    {gdu::X1, gdu::T},  {gdu::X2, gdu::T},  {gdu::X3, gdu::T}};
  auto got = H.relations().leading_words();
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  Json lms = Json::array();
  std::string shown;
  for (const auto& w : H.relations().leading_words()) {
    lms.push_back(freealg::render_word(w, names));
    shown += (shown.empty() ? "" : ", ") + freealg::render_word(w, names, freealg::RenderStyle::Pretty);
  }
  r.add("homogenize.leading-words", got == expect ? Status::Pass : Status::Fail, "{" + shown + "}",
        Json{{"leading_words", lms}});

  const auto& h = H.named_relations();
  const auto& g = alg.named_relations();
  bool back = graded::dehomogenize(h.g31, gdu::T) == g.g31 && graded::dehomogenize(h.g12, gdu::T) == g.g12 &&
              graded::dehomogenize(h.g32, gdu::T) == g.g32;
  for (const auto& c : h.commutator)
    back = back && graded::dehomogenize(c, gdu::T).is_zero();
  r.add("homogenize.dehomogenize", back ? Status::Pass : Status::Fail, "T -> 1 recovers the defining relations");
  r.checks.back().data = Json{{"g12", detail::render_free(h.g12, H.order(), names)},
                              {"g12_differs_from_printed_form", H.g12_differs_from_printed_form()}};
  r.notes.push_back(H.g12_discrepancy_note());
  return r;
}

inline Report cmd_graded_hilbert(const gdu::GDUAlgebra& alg, const Options& opt = {}) {
  Report r = start_report("graded hilbert", alg);
  if (auto reason = detail::graded_gate(alg)) {
    r.skip("hilbert", *reason);
    return r;
  }
  const int N = opt.degree.value_or(kHilbertDegree);
  graded::HomogenizedAlgebra H(alg);
  auto h = graded::hilbert(graded::leading_algebra(H.relations()), N);
  const int w = H.outer_weight();
  auto closed = graded::inverse_product_series({1, 1, w, w}, N);
  auto unweighted = graded::inverse_product_series({1, 1, 1, 1}, N);
  bool match = h.coefficients == closed;
  bool unweighted_match = h.coefficients == unweighted;
  auto& rec = r.add("hilbert", match ? Status::Pass : Status::Fail,
                    "H(A) up to degree " + std::to_string(N) + " matches " + detail::series_form(w),
                    Json{{"coefficients", detail::integers_json(h.coefficients)},
                         {"closed_form", detail::series_form(w)},
                         {"unweighted_form", "1/(1-t)^4"},
                         {"unweighted_form_matches", unweighted_match}});
  rec.lines.push_back("h: " + detail::join(h.coefficients));
  if (!unweighted_match)
    r.notes.push_back("with weights deg X2 = deg X3 = " + std::to_string(w) +
                      " the series is " + detail::series_form(w) + ", not 1/(1-t)^4");
  return r;
}

inline Report cmd_graded_gk(const gdu::GDUAlgebra& alg) {
  Report r = start_report("graded gk", alg);
  if (auto reason = detail::graded_gate(alg)) {
    r.skip("gk.associated-graded", *reason);
    r.skip("gk.homogenized", *reason);
    return r;
  }
  auto lh = graded::assoc_graded(alg, 0);
  graded::HomogenizedAlgebra H(alg);
  auto a = graded::ufn_growth(graded::leading_algebra(lh.relations));
  auto b = graded::ufn_growth(graded::leading_algebra(H.relations()));
  auto record = [&](const std::string& name, const graded::Growth& g, int expect, const std::string& what) {
    bool ok = !g.exponential && g.degree == expect;
    r.add(name, ok ? Status::Pass : Status::Fail, what + ": " + graded::to_string(g),
          Json{{"growth", g.exponential ? Json("exponential") : Json(g.degree)}, {"expected", expect}});
  };
  record("gk.associated-graded", a, 3, "Ufnarovski growth of LM(LH(G))");
  record("gk.homogenized", b, 4, "Ufnarovski growth of LM(~G)");
  return r;
}

inline Report cmd_graded_rees(const gdu::GDUAlgebra& alg, const Options& opt = {}) {
  Report r = start_report("graded rees", alg);
  if (auto reason = detail::graded_gate(alg)) {
    r.skip("rees", *reason);
    return r;
  }
  const int d = opt.degree.value_or(kReesDegree);
  graded::HomogenizedAlgebra H(alg);
  auto check = graded::rees_dims(alg, H, d);
  std::vector<Integer> hv, fv;
  for (const auto& row : check.rows) {
    hv.push_back(row.homogenized);
    fv.push_back(Integer(row.filtered));
  }
  auto& rec = r.add("rees", check.holds ? Status::Pass : Status::Fail,
                    "dim H(A)_q = dim F_q A for q <= " + std::to_string(d),
                    Json{{"homogenized", detail::integers_json(hv)}, {"filtered", detail::integers_json(fv)}});
  rec.lines.push_back("dim: " + detail::join(hv));
  return r;
}

/// Reports whether the homogenized relations form a quadratic presentation.
/// Passes when the answer matches the weights: quadratic exactly when every
/// generator has weight 1.
inline Report cmd_graded_quadratic(const gdu::GDUAlgebra& alg) {
  Report r = start_report("graded quadratic", alg);
  if (auto reason = detail::graded_gate(alg)) {
    r.skip("quadratic", *reason);
    return r;
  }
  graded::HomogenizedAlgebra H(alg);
  bool value = graded::quadratic_check(H.relations());
  bool unit_weights = H.outer_weight() == 1;
  std::string why = unit_weights ? "all weights 1, every relation homogeneous of degree 2"
                                 : "weights deg X2 = deg X3 = " + std::to_string(H.outer_weight());
  r.add("quadratic", value == unit_weights ? Status::Pass : Status::Fail,
        std::string(value ? "true" : "false") + " (" + why + ")", Json{{"quadratic", value}});
  return r;
}

inline Report cmd_graded(const gdu::GDUAlgebra& alg, const std::string& sub, const Options& opt = {}) {
  if (sub == "assoc")
    return cmd_graded_assoc(alg, opt);
  if (sub == "homogenize")
    return cmd_graded_homogenize(alg);
  if (sub == "hilbert")
    return cmd_graded_hilbert(alg, opt);
  if (sub == "gk")
    return cmd_graded_gk(alg);
  if (sub == "rees")
    return cmd_graded_rees(alg, opt);
  if (sub == "quadratic")
    return cmd_graded_quadratic(alg);
  throw InputError("unknown graded subcommand '" + sub + "'");
}

inline std::string presets_text() {
  std::string out;
  std::size_t width = 0;
  for (const auto& p : gdu::preset_catalog())
    width = std::max(width, p.name.size() + p.arguments.size() + 2);
  for (const auto& p : gdu::preset_catalog()) {
    std::string call = p.arguments.empty() ? p.name : p.name + "(" + p.arguments + ")";
    out += "  " + call + std::string(width - call.size() + 2, ' ') + p.summary + "\n";
  }
  std::string call = "random(n)";
  out += "  " + call + std::string(width - call.size() + 2, ' ') +
         "random rational parameters with deg f = n, drawn from --seed\n";
  return out;
}

inline std::string presets_machine() {
  Json list = Json::array();
  for (const auto& p : gdu::preset_catalog())
    list.push_back(Json{{"name", p.name}, {"arguments", p.arguments}, {"summary", p.summary}});
  list.push_back(Json{{"name", "random"}, {"arguments", "n"}, {"summary", "random rational parameters with deg f = n"}});
  return Json{{"schema", "downup-presets/1"}, {"presets", list}}.dump(2) + "\n";
}

}  // namespace downup::cli
